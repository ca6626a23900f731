#include "qec/pauli.hpp"

namespace qec {

Pauli multiply(const Pauli& p, const Pauli& q) {
    if (p.n != q.n) throw input_error("pauli multiply: dimension mismatch");
    Pauli r(p.n);
    r.x = p.x ^ q.x;
    r.z = p.z ^ q.z;
    // Phase accounting for per-qubit letters L = i^{xz} X^x Z^z:
    // unpack both letters to X^x Z^z form, commute Z^z1 past X^x2 (sign),
    // repack the result letter.
    std::size_t d = (p.x & p.z).popcount() + (q.x & q.z).popcount()
                    + 2 * (p.z & q.x).popcount();
    std::size_t repack = (r.x & r.z).popcount();
    r.phase = int(((p.phase + q.phase + d + 4 * p.n - repack) % 4 + 4) % 4);
    return r;
}

int commutes(const Pauli& p, const Pauli& q) {
    if (p.n != q.n) throw input_error("pauli commutes: dimension mismatch");
    return int(p.x.dot(q.z) ^ p.z.dot(q.x));
}

std::size_t weight(const Pauli& p) { return (p.x | p.z).popcount(); }

GF4Vector to_gf4(const Pauli& p) {
    GF4Vector v;
    v.n = p.n;
    v.entries.resize(p.n);
    for (std::size_t q = 0; q < p.n; ++q) {
        // 0=I, 1=X, omega(2)=Z, omega^2(3)=Y: low bit from x, high bit from z.
        v.entries[q] = int(p.x.get(q)) | (int(p.z.get(q)) << 1);
    }
    v.phase_dropped = (p.phase != 0);
    return v;
}

Pauli from_gf4(const GF4Vector& v) {
    Pauli p(v.n);
    for (std::size_t q = 0; q < v.n; ++q) {
        p.x.set(q, v.entries[q] & 1);
        p.z.set(q, (v.entries[q] >> 1) & 1);
    }
    return p;
}

GF4Vector gf4_add(const GF4Vector& a, const GF4Vector& b) {
    if (a.n != b.n) throw input_error("gf4 add: dimension mismatch");
    GF4Vector r;
    r.n = a.n;
    r.entries.resize(a.n);
    for (std::size_t q = 0; q < a.n; ++q) r.entries[q] = a.entries[q] ^ b.entries[q];
    return r;
}

Pauli parse_pauli(const std::string& text) {
    std::size_t pos = 0;
    int phase = 0;
    if (text.compare(0, 2, "-i") == 0) { phase = 3; pos = 2; }
    else if (text.compare(0, 2, "+i") == 0) { phase = 1; pos = 2; }
    else if (!text.empty() && text[0] == 'i') { phase = 1; pos = 1; }
    else if (!text.empty() && text[0] == '-') { phase = 2; pos = 1; }
    else if (!text.empty() && text[0] == '+') { pos = 1; }
    std::size_t n = text.size() - pos;
    if (n == 0) throw input_error("pauli parse: empty operator");
    Pauli p(n);
    p.phase = phase;
    for (std::size_t q = 0; q < n; ++q) {
        switch (text[pos + q]) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y': p.x.set(q, true); p.z.set(q, true); break;
            default:
                throw input_error("pauli parse: unknown character '" +
                                  std::string(1, text[pos + q]) + "' at position " +
                                  std::to_string(pos + q));
        }
    }
    return p;
}

std::string format_pauli(const Pauli& p) {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    std::string s = prefix[((p.phase % 4) + 4) % 4];
    for (std::size_t q = 0; q < p.n; ++q) {
        int code = int(p.x.get(q)) + 2 * int(p.z.get(q));
        s += letters[code];
    }
    return s;
}

}  // namespace qec
