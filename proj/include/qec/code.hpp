#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

// An [[n,k]] stabilizer code: n-k commuting independent generators plus
// optional logical X/Z representatives and metadata.
struct StabilizerCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Pauli> generators;
    std::vector<Pauli> logical_x;
    std::vector<Pauli> logical_z;
    std::string name;
    int claimed_distance = 0;  // 0 = unknown; metadata only, never trusted
};

struct ValidationReport {
    bool ok = true;
    bool commute_ok = true;
    bool independent_ok = true;
    bool hermitian_ok = true;
    bool logicals_ok = true;
    std::vector<std::string> issues;
};

ValidationReport validate(const StabilizerCode& code);

// (n-k) x 2n bit matrix, row i = (x_bits of gen i | z_bits of gen i).
BitMat check_matrix(const StabilizerCode& code);
BitVec pauli_row(const Pauli& p);                       // x|z, length 2n
Pauli pauli_from_row(const BitVec& row, int phase = 0); // inverse

// Bit i = 1 iff generator i anticommutes with e.
BitVec syndrome(const StabilizerCode& code, const Pauli& e);

// Result of Gaussian elimination with qubit swaps:
//   [ I A1 A2 | B C1 C2 ]   (first r rows)
//   [ 0 0  0  | D I  E  ]   (remaining n-k-r rows)
// Column blocks have widths r, n-k-r, k. rows[] are the signed Pauli row
// operators in the permuted frame; perm[j] is the original qubit now at
// position j.
struct StandardForm {
    std::size_t n = 0, k = 0, r = 0;
    BitMat matrix;
    std::vector<Pauli> rows;
    std::vector<std::size_t> perm;
};

StandardForm standard_form(const StabilizerCode& code);

// Standard logical operators in the permuted frame:
//   X-bar_j = (0 E^T I | E^T C1^T + C2^T 0 0), Z-bar_j = (0 0 0 | A2^T 0 I).
std::pair<std::vector<Pauli>, std::vector<Pauli>> standard_logicals(const StandardForm& sf);

// Frame changes between standard-form qubit order and the original order.
Pauli permute_to_original(const Pauli& p, const std::vector<std::size_t>& perm);
Pauli permute_to_standard(const Pauli& p, const std::vector<std::size_t>& perm);

// k x (r+k) classical generator matrix (A2^T | I).
BitMat classical_code_from_quantum(const StandardForm& sf);

// 2n-qubit stabilizer state used as a syndrome-extraction ancilla:
// n-k Z-type generators with z = (z_i || x_i), plus n+k X-type generators
// spanning the nullspace of those rows.
StabilizerCode steane_ancilla_stabilizer(const StabilizerCode& code);

// All 2^(n-k) signed stabilizer elements (n-k <= 20 guarded).
std::vector<Pauli> stabilizer_elements(const StabilizerCode& code);

// Selector over generators reproducing e's bits, if e is in the group
// modulo phase.
std::optional<BitVec> stabilizer_combination(const StabilizerCode& code, const Pauli& e);
// Membership with exact sign.
bool in_stabilizer(const StabilizerCode& code, const Pauli& e);
// Membership ignoring the global phase.
bool in_stabilizer_phaseless(const StabilizerCode& code, const Pauli& e);

// Code file serialization (line-based text; Pauli strings in canonical form).
std::string code_to_text(const StabilizerCode& code);
StabilizerCode code_from_text(const std::string& text);

}  // namespace qec
