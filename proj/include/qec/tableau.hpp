#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

enum class GateKind { H, P, PDAG, X, Y, Z, CNOT, CZ, CY, SWAP, TOFFOLI, MEASURE };

struct Gate {
    GateKind kind = GateKind::H;
    std::size_t q1 = 0, q2 = 0, q3 = 0;
    Pauli observable;   // MEASURE only
    Pauli correction;   // applied when a MEASURE yields -1
    bool has_correction = false;
    int forced_outcome = 0;  // 0 = random, +1/-1 = forced (testing hook)

    static Gate unary(GateKind k, std::size_t q) { Gate g; g.kind = k; g.q1 = q; return g; }
    static Gate binary(GateKind k, std::size_t a, std::size_t b) {
        Gate g; g.kind = k; g.q1 = a; g.q2 = b; return g;
    }
    static Gate toffoli(std::size_t a, std::size_t b, std::size_t c) {
        Gate g; g.kind = GateKind::TOFFOLI; g.q1 = a; g.q2 = b; g.q3 = c; return g;
    }
    static Gate measure(const Pauli& obs) {
        Gate g; g.kind = GateKind::MEASURE; g.observable = obs; return g;
    }
};

struct Circuit {
    std::size_t n = 0;
    std::vector<Gate> gates;
};

// One gate per line ("H 0", "CNOT 0 1", "MEASURE Z 3", "MEASURE XZIXI",
// optionally followed by CORRECT <pauli> and/or FORCE +1/-1); '#' comments.
Circuit parse_circuit(const std::string& text);
std::string format_circuit(const Circuit& c);

bool is_clifford_only(const Circuit& c);
std::size_t two_qubit_gate_count(const Circuit& c);

// Conjugate a Pauli by one unitary gate (MEASURE/TOFFOLI rejected).
void conjugate_pauli(Pauli& p, const Gate& g);

// Clifford map recorded as the signed images of every X_i and Z_i.
struct CliffordTableau {
    std::size_t n = 0;
    std::vector<Pauli> x_images;
    std::vector<Pauli> z_images;

    static CliffordTableau identity(std::size_t n);
};

bool tableau_valid(const CliffordTableau& t);
void apply_gate(CliffordTableau& t, const Gate& g);
// Image of an arbitrary Pauli under the tableau's map.
Pauli conjugate(const CliffordTableau& t, const Pauli& p);
// Tableau of "first a, then b".
CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);
CliffordTableau circuit_tableau(const Circuit& c);

// Tableau file format: 2n lines, images of X_0..X_{n-1} then Z_0..Z_{n-1}.
CliffordTableau tableau_from_text(const std::string& text);
std::string tableau_to_text(const CliffordTableau& t);

struct MeasureResult {
    int outcome = 1;
    bool deterministic = false;
};

// Fully determined n-qubit stabilizer state with destabilizer bookkeeping.
struct StabilizerState {
    std::size_t n = 0;
    std::vector<Pauli> stab;
    std::vector<Pauli> destab;

    static StabilizerState zero_state(std::size_t n);
};

void apply_gate(StabilizerState& s, const Gate& g);
void apply_pauli(StabilizerState& s, const Pauli& p);
MeasureResult measure_pauli(StabilizerState& s, const Pauli& a, std::mt19937_64& rng,
                            int forced = 0);
// Runs unitary gates and measurements (TOFFOLI rejected); corrections applied
// on -1 outcomes realize the +1-projection semantics.
std::vector<MeasureResult> run_circuit(StabilizerState& s, const Circuit& c,
                                       std::mt19937_64& rng);

// Partially determined state: m <= n generators plus tracked logical
// operators for the undetermined degrees of freedom.
struct PartialStabilizer {
    std::size_t n = 0;
    std::vector<Pauli> gens;
    std::vector<Pauli> logical_x;
    std::vector<Pauli> logical_z;
};

void apply_gate(PartialStabilizer& s, const Gate& g);
void apply_pauli(PartialStabilizer& s, const Pauli& p);
MeasureResult measure_pauli(PartialStabilizer& s, const Pauli& a, std::mt19937_64& rng,
                            int forced = 0);
std::vector<MeasureResult> run_circuit(PartialStabilizer& s, const Circuit& c,
                                       std::mt19937_64& rng);

// Canonical coset representative of p modulo the group generated by gens
// (signs tracked): pivot bits of the row-reduced generator set are cleared.
Pauli reduce_mod_group(const std::vector<Pauli>& gens, const Pauli& p);

}  // namespace qec
