#pragma once

#include <cstddef>
#include <vector>

#include "qec/code.hpp"
#include "qec/tableau.hpp"

namespace qec {

// Pauli p placed on block `block` of `blocks` contiguous blocks of p.n qubits.
Pauli embed_block(const Pauli& p, std::size_t block, std::size_t blocks);

// Expand an r-qubit map into an (r*n)-qubit map acting slice-wise: the map is
// applied to qubits (i, n+i, ..., (r-1)n+i) for each position i.
CliffordTableau bitwise_expand(const CliffordTableau& block_op, std::size_t n);

// True iff op (over a whole number of code blocks) maps every embedded
// stabilizer generator into the product stabilizer group, signs included.
bool is_valid_transversal(const StabilizerCode& code, const CliffordTableau& op);

// Logical action of a valid transversal op, as a tableau over blocks*k
// logical qubits (block-major ordering). Signs are exact; coset
// representatives are canonicalized by reduction modulo the stabilizer.
CliffordTableau encoded_action(const StabilizerCode& code, const CliffordTableau& op);

// Rows pairwise orthogonal and self-dot 1 over GF(2).
bool orthogonal_group_member(const BitMat& m);

// The four-qubit map sending each X_i (and Z_i) to the X (Z) pattern of the
// rows 1110 / 0111 / 1011 / 1101.
CliffordTableau four_qubit_op();

struct FourQubitReport {
    bool tableau_ok = false;
    bool orthogonal_ok = false;
    bool transversal_ok = false;
    bool cnot_script_ok = false;
    bool ok() const { return tableau_ok && orthogonal_ok && transversal_ok && cnot_script_ok; }
};

// Checks that the four-qubit map is a valid tableau, lies in O(4, Z2), is a
// valid transversal op for the given code, and that the two-ancilla
// measurement script built on it realizes a CNOT.
FourQubitReport four_qubit_universal_check(const StabilizerCode& code);

// The code rewritten in standard-form qubit order: generators are the
// standard-form rows and logicals the standard logical operators.
StabilizerCode standard_frame_code(const StabilizerCode& code);

// Encoding network in the standard-form frame. Input data qubits are the
// last k wires; the remaining wires start in |0>. Emits the conditioned
// logical-X fan-out, Hadamards on the first r wires, and the conditioned
// generator rows; at most (k+r)(n-k) two-qubit gates.
Circuit encoder_circuit(const StabilizerCode& code);

// Measurement-free decoder in the standard-form frame over n+k wires:
// CNOT fan-out along each logical Z onto ancilla wire n+i, then the logical
// X applied conditioned on that ancilla. Transfers logical qubit i to wire
// n+i and leaves the block in the encoded zero state.
Circuit decode_by_measurement(const StabilizerCode& code);

// Circuit whose tableau equals t exactly (signs included), built by the
// recursive one-wire-at-a-time reduction; at most n^2 + n - 1 two-qubit
// gates.
Circuit synthesize_clifford(const CliffordTableau& t);

// Three alternating CNOTs realizing a swap of wires a and b.
Circuit swap_decomposition(std::size_t a, std::size_t b);

}  // namespace qec
