#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qec/code.hpp"

namespace qec {

struct CatalogEntry {
    std::string name;
    bool takes_param = false;
    std::string param_name;   // "n" or "j"
    std::size_t default_param = 0;
    std::size_t n = 0, k = 0; // for the default parameter
    int d = 0;
    std::string note;
};

const std::vector<CatalogEntry>& catalog_list();

// Build a catalog code by name. `param` is required for parameterized
// entries (dist2: n, family/family_d4/perfect: j) and ignored otherwise.
StabilizerCode catalog(const std::string& name, std::size_t param = 0);

// CSS construction: Z-type generators from the rows of P, X-type from Q.
// n is inferred from the rows when 0 (required if both matrices are empty).
StabilizerCode css(const BitMat& parity_check_P, const BitMat& parity_check_Q,
                   std::size_t n = 0);

// [n,k,d] -> [n+1,k,d] degenerate code (new generator X on the new qubit).
StabilizerCode add_qubit(const StabilizerCode& code);

// [n,k,d] -> [n-1,k+1,>=d-1] by deleting one qubit; the two generators
// acting X / Z there become the new logical pair.
StabilizerCode remove_qubit(const StabilizerCode& code);

// Pasting: r1/r2 are prefix lengths into the generator lists of s1/s2;
// the remaining generator tails (equal length) are merged pairwise.
StabilizerCode paste(const StabilizerCode& s1, std::size_t r1,
                     const StabilizerCode& s2, std::size_t r2);

// Concatenation with a k=1 inner code: every outer qubit becomes an inner
// block; outer generators substitute X -> X-bar, Z -> Z-bar, Y -> i X-bar Z-bar.
StabilizerCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner);

// GF(2)-linear fixed-point-free permutation on j-bit words used by the
// 2^j code families (distinct even/odd variants).
std::uint64_t sigma(std::size_t j, std::uint64_t i);

StabilizerCode family_2j(std::size_t j);     // [2^j, 2^j-j-2, 3]
StabilizerCode family_2j_d4(std::size_t j);  // [2^j, 2^j-2j-2, 4]
StabilizerCode perfect_code(std::size_t j);  // [(2^{2j}-1)/3, n-2j, 3]

// Compute logicals from the standard form and attach them (original frame).
void attach_standard_logicals(StabilizerCode& code);

}  // namespace qec
