#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qec/code.hpp"

namespace qec {

// Weight distribution of a set of Pauli operators; coefficients[d] counts
// the elements of weight d, for d = 0..n.
struct EnumeratorPolynomial {
    std::vector<long long> coefficients;
};

struct DistanceReport {
    std::size_t distance = 0;
    bool exact = false;  // false means the search was capped: distance is a lower bound (cap+1)
    bool degenerate = false;
    bool has_witness = false;
    Pauli witness;  // minimal-weight element of N(S) - S (k > 0) or of S - {1} (k = 0)
    bool has_degeneracy_witness = false;
    Pauli degeneracy_witness;  // minimal-weight nontrivial stabilizer element below d
};

// Exhaustive distance search over Paulis of weight <= cap, classified per
// operator by syndrome and membership in the stabilizer.
DistanceReport distance(const StabilizerCode& code, std::size_t cap = 0);

// A_d counts stabilizer elements of weight d; B_d counts elements of the
// normalizer N(S) of weight d, ignoring phases.
std::pair<EnumeratorPolynomial, EnumeratorPolynomial>
weight_enumerators(const StabilizerCode& code, std::size_t n_cap = 12);

// B from A: B_d = 2^{k-n} sum_{d'} A_{d'} sum_s (-1)^s 3^{d-s} C(d',s) C(n-d',d-s).
EnumeratorPolynomial macwilliams_transform(const EnumeratorPolynomial& A,
                                           std::size_t n, std::size_t k);

// Shadow: elements E with [M,E] = wt(M) mod 2 for every stabilizer element M.
EnumeratorPolynomial shadow_enumerator(const StabilizerCode& code,
                                       std::size_t n_cap = 12);

// Same computed through the transform of A (the two must agree).
EnumeratorPolynomial shadow_transform(const EnumeratorPolynomial& A,
                                      std::size_t n, std::size_t k);

struct BoundEvaluation {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t param = 0;  // t for the sphere-packing bound, d otherwise
    bool satisfied = false;
    bool equality = false;
    double margin = 0.0;  // slack of the inequality, in the direction of "satisfied"
};

// Sum_{j<=t} 3^j C(n,j) 2^k <= 2^n.
BoundEvaluation hamming_bound(std::size_t n, std::size_t k, std::size_t t);
// n >= 2(d-1) + k.
BoundEvaluation kl_bound(std::size_t n, std::size_t k, std::size_t d);
// Sum_{j<=d-1} 3^j C(n,j) 2^k >= 2^n.
BoundEvaluation gv_bound(std::size_t n, std::size_t k, std::size_t d);

struct AsymptoticRates {
    double hamming;
    double kl;
    double gv;
    double deg_stab;
    double erasure_1epp;
    double erasure_2epp;
};

double binary_entropy(double p);
AsymptoticRates asymptotic_rates(double p);

}  // namespace qec
