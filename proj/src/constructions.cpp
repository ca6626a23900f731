#include "qec/constructions.hpp"

#include <algorithm>

namespace qec {

namespace {

StabilizerCode fixed_code(const std::string& name, std::size_t n, std::size_t k,
                          int d, std::initializer_list<const char*> gens,
                          std::initializer_list<const char*> lx = {},
                          std::initializer_list<const char*> lz = {}) {
    StabilizerCode c;
    c.name = name;
    c.n = n;
    c.k = k;
    c.claimed_distance = d;
    for (const char* s : gens) c.generators.push_back(parse_pauli(s));
    for (const char* s : lx) c.logical_x.push_back(parse_pauli(s));
    for (const char* s : lz) c.logical_z.push_back(parse_pauli(s));
    return c;
}

StabilizerCode five_code() {
    return fixed_code("five", 5, 1, 3, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"},
                      {"XXXXX"}, {"ZZZZZ"});
}

StabilizerCode steane_code() {
    return fixed_code("steane", 7, 1, 3,
                      {"XXXXIII", "XXIIXXI", "XIXIXIX", "ZZZZIII", "ZZIIZZI", "ZIZIZIZ"},
                      {"IIIIXXX"}, {"IIIIZZZ"});
}

StabilizerCode shor9_code() {
    return fixed_code("shor9", 9, 1, 3,
                      {"ZZIIIIIII", "ZIZIIIIII", "IIIZZIIII", "IIIZIZIII",
                       "IIIIIIZZI", "IIIIIIZIZ", "XXXXXXIII", "XXXIIIXXX"},
                      {"XXXXXXXXX"}, {"ZZZZZZZZZ"});
}

StabilizerCode eight_code() {
    return fixed_code("eight", 8, 3, 3,
                      {"XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY", "IYXZXZIY"},
                      {"XXIIIZIZ", "XIXZIIZI", "XIIZXZII"},
                      {"IZIZIZIZ", "IIZZIIZZ", "IIIIZZZZ"});
}

StabilizerCode code422() {
    StabilizerCode c = fixed_code("code422", 4, 2, 2, {"XZZX", "YXXY"}, {}, {});
    attach_standard_logicals(c);
    return c;
}

StabilizerCode code16_10_3() {
    StabilizerCode c = fixed_code(
        "code16_10_3", 16, 10, 3,
        {"XXXXXXXXXXXXXXXX", "ZZZZZZZZZZZZZZZZ",
         "IXIXIXIXZYZYZYZY", "IXIXZYZYXIXIYZYZ",
         "IXZYXIYZIXZYXIYZ", "IYXZIYXZIYXZIYXZ"},
        {}, {});
    attach_standard_logicals(c);
    return c;
}

StabilizerCode code16_6_4() {
    StabilizerCode c = fixed_code(
        "code16_6_4", 16, 6, 4,
        {"XXXXXXXXXXXXXXXX", "ZZZZZZZZZZZZZZZZ",
         "IXIXIXIXZYZYZYZY", "IXIXZYZYXIXIYZYZ",
         "IXZYXIYZIXZYXIYZ", "IYXZIYXZIYXZIYXZ",
         "IZIZIZIZXYXYXYXY", "IZIZXYXYZIZIYXYX",
         "IZXYZIYXIZXYZIYX", "IYZXIYZXIYZXIYZX"},
        {}, {});
    attach_standard_logicals(c);
    return c;
}

StabilizerCode code8_0_4() {
    return fixed_code("code8_0_4", 8, 0, 4,
                      {"XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY",
                       "IYXZXZIY", "IZIZYXYX", "IZXYIZXY", "IYZXZXIY"});
}

StabilizerCode code11_1_5() {
    return fixed_code("code11_1_5", 11, 1, 5,
                      {"ZZZZZZIIIII", "XXXXXXIIIII", "IIIZXYYYYXZ", "IIIXYZZZZYX",
                       "ZYXIIIZYXII", "XZYIIIXZYII", "IIIZYXXYZII", "IIIXZYZXYII",
                       "XYZIIIZZZXY", "YZXIIIYYYZX"},
                      {"IIIIIIXXXXX"}, {"IIIIIIZZZZZ"});
}

StabilizerCode xz7_code() {
    return fixed_code("xz7", 7, 3, 0,
                      {"ZZZZZZZ", "YYYYIII", "YYIIYYI", "YIYIYIY"},
                      {"XXIIIIZ", "XIXIIZI", "XIIZXII"},
                      {"IZIZIZI", "IIZZIIZ", "IIIIZZZ"});
}

StabilizerCode amp4_code() {
    return fixed_code("amp4", 4, 1, 2, {"XXXX", "ZZII", "IIZZ"}, {"XXII"}, {"ZIZI"});
}

StabilizerCode dist2_code(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw input_error("dist2: n must be even and >= 2");
    StabilizerCode c;
    c.name = "dist2";
    c.n = n;
    c.k = n - 2;
    c.claimed_distance = 2;
    Pauli mx(n), mz(n);
    for (std::size_t q = 0; q < n; ++q) {
        mx.x.set(q, true);
        mz.z.set(q, true);
    }
    c.generators = {mx, mz};
    attach_standard_logicals(c);
    return c;
}

// Bit r (r = 1..j, bit 1 most significant) of a j-bit word.
bool word_bit(std::uint64_t w, std::size_t j, std::size_t r) {
    return (w >> (j - r)) & 1;
}

}  // namespace

std::uint64_t sigma(std::size_t j, std::uint64_t i) {
    if (j < 3) throw input_error("sigma: j must be >= 3");
    // Images of the basis words 2^l, extended GF(2)-linearly.
    // sigma(1) = all ones; sigma(2^l) = 2^{l-1} for intermediate l; the top
    // basis word differs between the even and odd variants.
    std::uint64_t out = 0;
    for (std::size_t l = 0; l < j; ++l) {
        if (!((i >> l) & 1)) continue;
        std::uint64_t img;
        if (l == 0) img = (std::uint64_t(1) << j) - 1;
        else if (j % 2 == 0) img = std::uint64_t(1) << (l - 1);
        else if (l < j - 1) img = std::uint64_t(1) << (l - 1);
        else img = (std::uint64_t(1) << (j - 1)) + (std::uint64_t(1) << (j - 2)) - 1;
        out ^= img;
    }
    return out;
}

StabilizerCode family_2j(std::size_t j) {
    if (j < 3) throw input_error("family_2j: j must be >= 3");
    const std::size_t n = std::size_t(1) << j;
    StabilizerCode c;
    c.name = "family_2j";
    c.n = n;
    c.k = n - j - 2;
    c.claimed_distance = 3;
    Pauli mx(n), mz(n);
    for (std::size_t q = 0; q < n; ++q) {
        mx.x.set(q, true);
        mz.z.set(q, true);
    }
    c.generators = {mx, mz};
    for (std::size_t r = 1; r <= j; ++r) {
        Pauli m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.z.set(i, word_bit(i, j, r));          // anticommutes with X_i per bit r of i
            m.x.set(i, word_bit(sigma(j, i), j, r)); // anticommutes with Z_i per bit r of sigma(i)
        }
        c.generators.push_back(m);
    }
    attach_standard_logicals(c);
    return c;
}

StabilizerCode family_2j_d4(std::size_t j) {
    if (j < 3) throw input_error("family_2j_d4: j must be >= 3");
    StabilizerCode c = family_2j(j);
    c.name = "family_2j_d4";
    c.k = c.n - 2 * j - 2;
    c.claimed_distance = 4;
    // Append the qubit-wise Hadamard conjugates of M_1..M_j.
    std::vector<Pauli> extra;
    for (std::size_t r = 0; r < j; ++r) {
        Pauli m = c.generators[2 + r];
        std::swap(m.x, m.z);
        extra.push_back(m);
    }
    c.logical_x.clear();
    c.logical_z.clear();
    c.generators.insert(c.generators.end(), extra.begin(), extra.end());
    attach_standard_logicals(c);
    return c;
}

StabilizerCode perfect_code(std::size_t j) {
    if (j < 2) throw input_error("perfect_code: j must be >= 2");
    if (j == 2) {
        StabilizerCode c = five_code();
        c.name = "perfect";
        return c;
    }
    StabilizerCode inner = perfect_code(j - 1);
    StabilizerCode outer = family_2j(2 * j - 2);
    StabilizerCode c = paste(outer, 2, inner, 0);
    c.name = "perfect";
    c.claimed_distance = 3;
    attach_standard_logicals(c);
    return c;
}

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
        {"five", false, "", 0, 5, 1, 3, "the smallest one-error-correcting code"},
        {"steane", false, "", 0, 7, 1, 3, "CSS code from the [7,4,3] Hamming code"},
        {"shor9", false, "", 0, 9, 1, 3, "nine-qubit repetition-of-repetition code"},
        {"eight", false, "", 0, 8, 3, 3, "[8,3,3] code (j=3 member of the 2^j family)"},
        {"code422", false, "", 0, 4, 2, 2, "[4,2,2] code, five-qubit code with one qubit removed"},
        {"code13_7_3", false, "", 0, 13, 7, 3, "paste of the eight- and five-qubit codes"},
        {"code25_1_9", false, "", 0, 25, 1, 9, "five-qubit code concatenated with itself"},
        {"code16_10_3", false, "", 0, 16, 10, 3, "j=4 member of the [2^j,2^j-j-2,3] family"},
        {"code16_6_4", false, "", 0, 16, 6, 4, "j=4 member of the distance-4 family"},
        {"code8_0_4", false, "", 0, 8, 0, 4, "j=3 member of the distance-4 family (a state)"},
        {"code11_1_5", false, "", 0, 11, 1, 5, "smallest possible distance-5 code"},
        {"xz7", false, "", 0, 7, 3, 0, "corrects one bit flip or one phase flip"},
        {"amp4", false, "", 0, 4, 1, 2, "four-qubit amplitude-damping code"},
        {"dist2", true, "n", 4, 4, 2, 2, "[n,n-2,2] detection code, even n"},
        {"family", true, "j", 3, 8, 3, 3, "[2^j,2^j-j-2,3] family"},
        {"family_d4", true, "j", 4, 16, 6, 4, "[2^j,2^j-2j-2,4] family"},
        {"perfect", true, "j", 3, 21, 15, 3, "[(4^j-1)/3, n-2j, 3] perfect codes"},
    };
    return entries;
}

StabilizerCode catalog(const std::string& name, std::size_t param) {
    if (name == "five") return five_code();
    if (name == "steane") return steane_code();
    if (name == "shor9") return shor9_code();
    if (name == "eight") return eight_code();
    if (name == "code422") return code422();
    if (name == "code13_7_3") {
        StabilizerCode c = paste(eight_code(), 2, five_code(), 1);
        c.name = "code13_7_3";
        c.claimed_distance = 3;
        return c;
    }
    if (name == "code25_1_9") {
        StabilizerCode c = concatenate(five_code(), five_code());
        c.name = "code25_1_9";
        c.claimed_distance = 9;
        return c;
    }
    if (name == "code16_10_3") return code16_10_3();
    if (name == "code16_6_4") return code16_6_4();
    if (name == "code8_0_4") return code8_0_4();
    if (name == "code11_1_5") return code11_1_5();
    if (name == "xz7") return xz7_code();
    if (name == "amp4") return amp4_code();
    if (name == "dist2") return dist2_code(param ? param : 4);
    if (name == "family") return family_2j(param ? param : 3);
    if (name == "family_d4") return family_2j_d4(param ? param : 4);
    if (name == "perfect") return perfect_code(param ? param : 3);
    throw input_error("catalog: unknown code name '" + name + "'");
}

StabilizerCode css(const BitMat& P, const BitMat& Q, std::size_t n) {
    if (n == 0) {
        if (!P.empty()) n = P[0].size();
        else if (!Q.empty()) n = Q[0].size();
        else throw input_error("css: cannot infer qubit count from two empty matrices");
    }
    for (const auto& row : P)
        if (row.size() != n) throw input_error("css: row of P has wrong length");
    for (const auto& row : Q)
        if (row.size() != n) throw input_error("css: row of Q has wrong length");
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < Q.size(); ++j)
            if (P[i].dot(Q[j]))
                throw input_error("css: row " + std::to_string(i) + " of P is not orthogonal to row " +
                                  std::to_string(j) + " of Q");
    StabilizerCode c;
    c.name = "css";
    c.n = n;
    for (const auto& row : Q) {
        Pauli p(n);
        p.x = row;
        c.generators.push_back(p);
    }
    for (const auto& row : P) {
        Pauli p(n);
        p.z = row;
        c.generators.push_back(p);
    }
    if (gf2_rank(check_matrix(c)) != c.generators.size())
        throw input_error("css: parity check rows are dependent");
    c.k = n - c.generators.size();
    attach_standard_logicals(c);
    return c;
}

StabilizerCode add_qubit(const StabilizerCode& code) {
    StabilizerCode c;
    c.name = code.name.empty() ? "extended" : code.name + "+1";
    c.n = code.n + 1;
    c.k = code.k;
    c.claimed_distance = code.claimed_distance;
    auto extend = [&](const Pauli& p) {
        Pauli q(c.n);
        q.phase = p.phase;
        for (std::size_t i = 0; i < code.n; ++i) {
            q.x.set(i, p.x.get(i));
            q.z.set(i, p.z.get(i));
        }
        return q;
    };
    for (const auto& g : code.generators) c.generators.push_back(extend(g));
    Pauli nx(c.n);
    nx.x.set(code.n, true);
    c.generators.push_back(nx);
    for (const auto& l : code.logical_x) c.logical_x.push_back(extend(l));
    for (const auto& l : code.logical_z) c.logical_z.push_back(extend(l));
    return c;
}

StabilizerCode remove_qubit(const StabilizerCode& code) {
    if (code.generators.size() < 2)
        throw input_error("remove_qubit: need at least two generators");
    // Try the last qubit first, then the others.
    std::vector<std::size_t> order;
    for (std::size_t q = code.n; q-- > 0;) order.push_back(q);
    for (std::size_t q : order) {
        std::vector<Pauli> gens = code.generators;
        // Find a combination acting as X and one acting as Z on qubit q.
        std::size_t px = gens.size(), pz = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].x.get(q)) { px = i; break; }
        if (px == gens.size()) continue;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != px && gens[i].x.get(q)) gens[i] = multiply(gens[i], gens[px]);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != px && gens[i].z.get(q)) { pz = i; break; }
        if (pz == gens.size()) {
            // Decoupled qubit: a single generator acts on q and nowhere else.
            // Drop the qubit together with that generator; k is unchanged.
            if (weight(gens[px]) != 1 || gens[px].z.get(q)) continue;
            auto restrict_to = [&](const Pauli& p) {
                Pauli r(code.n - 1);
                r.phase = p.phase;
                std::size_t t = 0;
                for (std::size_t i = 0; i < code.n; ++i) {
                    if (i == q) continue;
                    r.x.set(t, p.x.get(i));
                    r.z.set(t, p.z.get(i));
                    ++t;
                }
                return r;
            };
            StabilizerCode c;
            c.name = code.name.empty() ? "punctured" : code.name + "-1";
            c.n = code.n - 1;
            c.k = code.k;
            c.claimed_distance = code.claimed_distance;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != px) c.generators.push_back(restrict_to(gens[i]));
            auto clear_x = [&](Pauli l) {
                if (l.x.get(q)) l = multiply(l, gens[px]);
                return restrict_to(l);
            };
            for (const auto& l : code.logical_x) c.logical_x.push_back(clear_x(l));
            for (const auto& l : code.logical_z) c.logical_z.push_back(clear_x(l));
            if (!validate(c).ok) continue;
            return c;
        }
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != px && i != pz && gens[i].z.get(q)) gens[i] = multiply(gens[i], gens[pz]);
        if (gens[px].z.get(q)) gens[px] = multiply(gens[px], gens[pz]);  // Y -> X

        auto restrict_to = [&](const Pauli& p) {
            Pauli r(code.n - 1);
            r.phase = p.phase;
            std::size_t t = 0;
            for (std::size_t i = 0; i < code.n; ++i) {
                if (i == q) continue;
                r.x.set(t, p.x.get(i));
                r.z.set(t, p.z.get(i));
                ++t;
            }
            return r;
        };
        StabilizerCode c;
        c.name = code.name.empty() ? "punctured" : code.name + "-1";
        c.n = code.n - 1;
        c.k = code.k + 1;
        if (code.claimed_distance > 1) c.claimed_distance = code.claimed_distance - 1;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != px && i != pz) c.generators.push_back(restrict_to(gens[i]));
        // Old logicals, cleared on qubit q first.
        auto clear_q = [&](Pauli l) {
            if (l.x.get(q)) l = multiply(l, gens[px]);
            if (l.z.get(q)) l = multiply(l, gens[pz]);
            return restrict_to(l);
        };
        for (const auto& l : code.logical_x) c.logical_x.push_back(clear_q(l));
        for (const auto& l : code.logical_z) c.logical_z.push_back(clear_q(l));
        // The dropped generators become the new logical pair.
        c.logical_x.push_back(restrict_to(gens[px]));
        c.logical_z.push_back(restrict_to(gens[pz]));
        if (!validate(c).ok) continue;
        return c;
    }
    throw input_error("remove_qubit: no removable qubit found");
}

StabilizerCode paste(const StabilizerCode& s1, std::size_t r1,
                     const StabilizerCode& s2, std::size_t r2) {
    std::size_t m1 = s1.generators.size(), m2 = s2.generators.size();
    if (r1 > m1 || r2 > m2) throw input_error("paste: prefix longer than generator list");
    std::size_t t1 = m1 - r1, t2 = m2 - r2;
    if (t1 != t2) throw input_error("paste: generator tails have different lengths");
    if (t1 == 0) throw input_error("paste: nothing to pair (whole stabilizers given as subgroups)");
    const std::size_t n = s1.n + s2.n;
    auto left = [&](const Pauli& p) {
        Pauli q(n);
        q.phase = p.phase;
        for (std::size_t i = 0; i < s1.n; ++i) {
            q.x.set(i, p.x.get(i));
            q.z.set(i, p.z.get(i));
        }
        return q;
    };
    auto right = [&](const Pauli& p) {
        Pauli q(n);
        q.phase = p.phase;
        for (std::size_t i = 0; i < s2.n; ++i) {
            q.x.set(s1.n + i, p.x.get(i));
            q.z.set(s1.n + i, p.z.get(i));
        }
        return q;
    };
    StabilizerCode c;
    c.name = "paste";
    c.n = n;
    for (std::size_t i = 0; i < r1; ++i) c.generators.push_back(left(s1.generators[i]));
    for (std::size_t i = 0; i < r2; ++i) c.generators.push_back(right(s2.generators[i]));
    for (std::size_t i = 0; i < t1; ++i)
        c.generators.push_back(multiply(left(s1.generators[r1 + i]), right(s2.generators[r2 + i])));
    c.k = n - c.generators.size();
    attach_standard_logicals(c);
    return c;
}

StabilizerCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner) {
    if (inner.k != 1 || inner.logical_x.size() != 1 || inner.logical_z.size() != 1)
        throw input_error("concatenate: inner code must have k = 1 with logicals attached");
    const std::size_t n = outer.n * inner.n;
    auto embed = [&](const Pauli& p, std::size_t block) {
        Pauli q(n);
        q.phase = p.phase;
        for (std::size_t i = 0; i < inner.n; ++i) {
            q.x.set(block * inner.n + i, p.x.get(i));
            q.z.set(block * inner.n + i, p.z.get(i));
        }
        return q;
    };
    // Substitute encoded operators for the single-qubit letters of p.
    auto substitute = [&](const Pauli& p) {
        Pauli out = Pauli::identity(n);
        out.phase = p.phase;
        for (std::size_t q = 0; q < outer.n; ++q) {
            switch (p.letter(q)) {
                case 0: break;
                case 1: out = multiply(out, embed(inner.logical_x[0], q)); break;
                case 2: out = multiply(out, embed(inner.logical_z[0], q)); break;
                case 3: {
                    Pauli y = multiply(embed(inner.logical_x[0], q), embed(inner.logical_z[0], q));
                    y.phase = (y.phase + 1) % 4;  // Y = i X Z at the logical level
                    out = multiply(out, y);
                    break;
                }
            }
        }
        return out;
    };
    StabilizerCode c;
    c.name = "concatenated";
    c.n = n;
    c.k = outer.k;
    for (std::size_t b = 0; b < outer.n; ++b)
        for (const auto& g : inner.generators) c.generators.push_back(embed(g, b));
    for (const auto& g : outer.generators) c.generators.push_back(substitute(g));
    for (const auto& l : outer.logical_x) c.logical_x.push_back(substitute(l));
    for (const auto& l : outer.logical_z) c.logical_z.push_back(substitute(l));
    if (outer.claimed_distance > 0 && inner.claimed_distance > 0)
        c.claimed_distance = outer.claimed_distance * inner.claimed_distance;
    return c;
}

void attach_standard_logicals(StabilizerCode& code) {
    StandardForm sf = standard_form(code);
    auto [xs, zs] = standard_logicals(sf);
    code.logical_x.clear();
    code.logical_z.clear();
    for (const auto& l : xs) code.logical_x.push_back(permute_to_original(l, sf.perm));
    for (const auto& l : zs) code.logical_z.push_back(permute_to_original(l, sf.perm));
}

}  // namespace qec
