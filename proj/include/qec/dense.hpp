#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qec/code.hpp"
#include "qec/tableau.hpp"

namespace qec {

// Exact complex statevector for small qubit counts (n <= 14). Qubit 0 is the
// most significant bit of the amplitude index.
struct DenseState {
    std::size_t n = 0;
    std::vector<std::complex<double>> amp;

    static DenseState basis(std::size_t n, std::size_t index);
    void normalize();
};

// |<a|b>| (global-phase-insensitive overlap).
double fidelity(const DenseState& a, const DenseState& b);

void apply_pauli_dense(DenseState& s, const Pauli& p);

// The 2^k orthonormal basis codewords prod_i (I + M_i) Xbar^c |0...0>,
// normalized; bit i of c selects logical X_i.
std::vector<DenseState> codeword_states(const StabilizerCode& code);

struct ConditionReport {
    bool correctable = false;
    bool degenerate = false;
    double max_violation = 0.0;       // largest off-diagonal / diagonal-mismatch
    double hermiticity_residual = 0.0;
    double min_singular_value = 0.0;  // of the condition matrix
    std::vector<std::vector<std::complex<double>>> condition_matrix;
};

// Error-correction conditions <psi_i| Ea^dag Eb |psi_j> over the given error
// list (which must contain the identity): correctable iff every i != j block
// vanishes and the diagonal is basis-independent (tolerance 1e-10);
// degenerate iff the condition matrix has a singular value below 1e-8.
ConditionReport verify_kl_condition(const StabilizerCode& code, const std::vector<Pauli>& errors);

// Exact simulation of a circuit (all gate kinds, including TOFFOLI).
// Measurements are projective: a forced outcome of probability < 1e-12 is an
// input error; unforced measurements take +1 when possible, and corrections
// attached to the gate are applied on -1 outcomes.
DenseState run_circuit_dense(const Circuit& c, DenseState state);

struct ToffoliAncillaReport {
    bool ancilla_fixed = false;       // M1, M2, M3 all fix (|000>+|010>+|100>+|111>)/2
    bool companion_negated = false;   // M3 negates the sigma_x-on-qubit-3 partner state
    bool sum_is_plus_cube = false;    // the two states sum to (|0>+|1>)^3
    bool conjugation_ok = false;      // Toffoli conjugation of X1 and Z3 gives M1, M3 shapes
    bool ok() const { return ancilla_fixed && companion_negated && sum_is_plus_cube && conjugation_ok; }
};

ToffoliAncillaReport toffoli_ancilla_check();

struct AmpDampingReport {
    bool ok = false;
    double max_violation = 0.0;
    std::size_t pairs_checked = 0;
};

// Checks the error-correction conditions for amplitude damping to order
// 2t + 1: per-qubit error factors A = sigma_x (I - sigma_z) (order 1) and
// B = I - sigma_z (order 2), all products E, F with order(E) + order(F) <= 2t.
AmpDampingReport amplitude_damping_check(const StabilizerCode& code, std::size_t t);

struct NonadditiveReport {
    double trace_re = 0.0;
    double trace_im = 0.0;
    double idempotent_residual = 0.0;
    double conjugate_overlap = 0.0;  // max |P (sigma_q P sigma_q)| entry over all q, sigma
    bool ok() const {
        return std::abs(trace_re - 6.0) < 1e-12 && std::abs(trace_im) < 1e-12 &&
               idempotent_residual < 1e-12 && conjugate_overlap < 1e-12;
    }
};

// The 32x32 cyclic five-qubit projector onto a six-dimensional code space:
// trace six, idempotent, and orthogonal to all of its single-qubit Pauli
// conjugates.
NonadditiveReport nonadditive_projector_check();

}  // namespace qec
