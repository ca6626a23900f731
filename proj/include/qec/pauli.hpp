#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qec/bits.hpp"

namespace qec {

// Error categories used across the library / CLI.
class input_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class feasibility_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class internal_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n-qubit Pauli operator i^phase * prod_q L_q with per-qubit letter
// L = i^{xz} X^x Z^z, so (x,z) = (0,0) -> I, (1,0) -> X, (1,1) -> Y, (0,1) -> Z.
struct Pauli {
    std::size_t n = 0;
    BitVec x, z;
    int phase = 0;  // exponent of i, mod 4

    Pauli() = default;
    explicit Pauli(std::size_t n_) : n(n_), x(n_), z(n_) {}
    Pauli(std::size_t n_, BitVec x_, BitVec z_, int ph = 0)
        : n(n_), x(std::move(x_)), z(std::move(z_)), phase(((ph % 4) + 4) % 4) {}

    static Pauli identity(std::size_t n) { return Pauli(n); }

    // Letter code at qubit q: x + 2z (0=I, 1=X, 2=Z, 3=Y).
    int letter(std::size_t q) const { return int(x.get(q)) + 2 * int(z.get(q)); }
    void set_letter(std::size_t q, int code) {
        x.set(q, code & 1);
        z.set(q, (code >> 1) & 1);
    }

    bool is_identity_bits() const { return !x.any() && !z.any(); }
    // Hermitian iff the global phase is real given the i-per-Y letter bookkeeping.
    bool hermitian() const { return phase % 2 == 0; }

    bool operator==(const Pauli& o) const = default;
};

// Exact group product (phase included).
Pauli multiply(const Pauli& p, const Pauli& q);

// 0 iff p and q commute; 1 iff they anticommute (symplectic product parity).
int commutes(const Pauli& p, const Pauli& q);

std::size_t weight(const Pauli& p);

// GF(4) view: entries over {0, 1, omega, omega^2} encoded 0=0, 1=1(X),
// 2=omega(Z), 3=omega^2(Y); addition is XOR of the two bits.
struct GF4Vector {
    std::size_t n = 0;
    std::vector<int> entries;
    bool phase_dropped = false;  // set when the source Pauli carried a phase
};

GF4Vector to_gf4(const Pauli& p);
Pauli from_gf4(const GF4Vector& v);
GF4Vector gf4_add(const GF4Vector& a, const GF4Vector& b);

// Text form: optional sign prefix (+, -, i, -i) then letters I/X/Y/Z,
// qubit 0 leftmost. format is canonical (no "+" prefix).
Pauli parse_pauli(const std::string& text);
std::string format_pauli(const Pauli& p);

}  // namespace qec
