#include "qec/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qec/bits.hpp"

namespace qec {

namespace {

struct KindInfo {
    GateKind kind;
    const char* name;
    int arity;  // qubit operands
};

const KindInfo kKinds[] = {
    {GateKind::H, "H", 1},        {GateKind::P, "P", 1},
    {GateKind::PDAG, "PDAG", 1},  {GateKind::X, "X", 1},
    {GateKind::Y, "Y", 1},        {GateKind::Z, "Z", 1},
    {GateKind::CNOT, "CNOT", 2},  {GateKind::CZ, "CZ", 2},
    {GateKind::CY, "CY", 2},      {GateKind::SWAP, "SWAP", 2},
    {GateKind::TOFFOLI, "TOFFOLI", 3},
};

const KindInfo* kind_by_name(const std::string& s) {
    for (const auto& k : kKinds)
        if (s == k.name) return &k;
    return nullptr;
}

const char* kind_name(GateKind k) {
    for (const auto& i : kKinds)
        if (i.kind == k) return i.name;
    return "MEASURE";
}

std::size_t parse_qubit(const std::string& tok, std::size_t line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("");
        return (std::size_t)v;
    } catch (...) {
        throw input_error("circuit line " + std::to_string(line) + ": bad qubit index '" +
                          tok + "'");
    }
}

bool is_pauli_token(const std::string& tok) {
    if (tok.size() < 2) return false;
    for (char c : tok)
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') return false;
    return true;
}

Pauli single_letter(char c, std::size_t q, std::size_t n, std::size_t line) {
    Pauli p(n);
    switch (c) {
        case 'X': p.set_letter(q, 1); break;
        case 'Z': p.set_letter(q, 2); break;
        case 'Y': p.set_letter(q, 3); break;
        default:
            throw input_error("circuit line " + std::to_string(line) +
                              ": expected X, Y or Z");
    }
    return p;
}

void extend_pauli(Pauli& p, std::size_t n) {
    if (p.n == n) return;
    Pauli q(n);
    q.phase = p.phase;
    for (std::size_t i = 0; i < p.n; ++i) {
        q.x.set(i, p.x.get(i));
        q.z.set(i, p.z.get(i));
    }
    p = q;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::size_t max_q = 0;
    bool saw_q = false;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto note_q = [&](std::size_t q) {
        max_q = std::max(max_q, q);
        saw_q = true;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "qubits") {
            if (tok.size() != 2)
                throw input_error("circuit line " + std::to_string(lineno) +
                                  ": qubits takes one count");
            c.n = parse_qubit(tok[1], lineno);
            continue;
        }
        if (tok[0] == "MEASURE") {
            if (tok.size() < 2)
                throw input_error("circuit line " + std::to_string(lineno) +
                                  ": MEASURE needs an observable");
            Gate g;
            g.kind = GateKind::MEASURE;
            std::size_t i = 1;
            auto read_pauli = [&](const char* what) {
                if (i < tok.size() && is_pauli_token(tok[i])) {
                    Pauli p = parse_pauli(tok[i]);
                    ++i;
                    if (p.n > 0) note_q(p.n - 1);
                    return p;
                }
                if (i + 1 < tok.size() && tok[i].size() == 1) {
                    std::size_t q = parse_qubit(tok[i + 1], lineno);
                    note_q(q);
                    Pauli p = single_letter(tok[i][0], q, q + 1, lineno);
                    i += 2;
                    return p;
                }
                throw input_error("circuit line " + std::to_string(lineno) + ": bad " +
                                  what + " operand");
            };
            g.observable = read_pauli("MEASURE");
            while (i < tok.size()) {
                if (tok[i] == "CORRECT") {
                    ++i;
                    g.correction = read_pauli("CORRECT");
                    g.has_correction = true;
                } else if (tok[i] == "FORCE") {
                    if (i + 1 >= tok.size() || (tok[i + 1] != "+1" && tok[i + 1] != "-1"))
                        throw input_error("circuit line " + std::to_string(lineno) +
                                          ": FORCE takes +1 or -1");
                    g.forced_outcome = tok[i + 1] == "+1" ? 1 : -1;
                    i += 2;
                } else {
                    throw input_error("circuit line " + std::to_string(lineno) +
                                      ": unexpected token '" + tok[i] + "'");
                }
            }
            c.gates.push_back(g);
            continue;
        }
        const KindInfo* k = kind_by_name(tok[0]);
        if (!k)
            throw input_error("circuit line " + std::to_string(lineno) + ": unknown gate '" +
                              tok[0] + "'");
        if ((int)tok.size() != 1 + k->arity)
            throw input_error("circuit line " + std::to_string(lineno) + ": " + k->name +
                              " takes " + std::to_string(k->arity) + " qubit(s)");
        Gate g;
        g.kind = k->kind;
        g.q1 = parse_qubit(tok[1], lineno);
        note_q(g.q1);
        if (k->arity >= 2) { g.q2 = parse_qubit(tok[2], lineno); note_q(g.q2); }
        if (k->arity >= 3) { g.q3 = parse_qubit(tok[3], lineno); note_q(g.q3); }
        if (k->arity >= 2 && (g.q1 == g.q2 || (k->arity >= 3 && (g.q1 == g.q3 || g.q2 == g.q3))))
            throw input_error("circuit line " + std::to_string(lineno) +
                              ": repeated qubit operand");
        c.gates.push_back(g);
    }
    if (c.n == 0 && saw_q) c.n = max_q + 1;
    if (saw_q && max_q >= c.n)
        throw input_error("circuit: qubit index " + std::to_string(max_q) +
                          " out of range for " + std::to_string(c.n) + " qubits");
    for (auto& g : c.gates)
        if (g.kind == GateKind::MEASURE) {
            extend_pauli(g.observable, c.n);
            if (g.has_correction) extend_pauli(g.correction, c.n);
        }
    return c;
}

std::string format_circuit(const Circuit& c) {
    std::ostringstream os;
    os << "qubits " << c.n << "\n";
    auto pauli_operand = [&](const Pauli& p) -> std::string {
        if (weight(p) == 1 && p.phase == 0) {
            for (std::size_t q = 0; q < p.n; ++q) {
                int l = p.letter(q);
                if (l) return std::string(1, "IXZY"[l]) + " " + std::to_string(q);
            }
        }
        return format_pauli(p);
    };
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MEASURE) {
            os << "MEASURE " << pauli_operand(g.observable);
            if (g.has_correction) os << " CORRECT " << pauli_operand(g.correction);
            if (g.forced_outcome) os << " FORCE " << (g.forced_outcome > 0 ? "+1" : "-1");
            os << "\n";
            continue;
        }
        os << kind_name(g.kind) << " " << g.q1;
        for (const auto& i : kKinds)
            if (i.kind == g.kind) {
                if (i.arity >= 2) os << " " << g.q2;
                if (i.arity >= 3) os << " " << g.q3;
            }
        os << "\n";
    }
    return os.str();
}

bool is_clifford_only(const Circuit& c) {
    for (const auto& g : c.gates)
        if (g.kind == GateKind::TOFFOLI || g.kind == GateKind::MEASURE) return false;
    return true;
}

std::size_t two_qubit_gate_count(const Circuit& c) {
    std::size_t count = 0;
    for (const auto& g : c.gates)
        switch (g.kind) {
            case GateKind::CNOT:
            case GateKind::CZ:
            case GateKind::CY:
                ++count;
                break;
            case GateKind::SWAP:
                count += 3;
                break;
            default:
                break;
        }
    return count;
}

void conjugate_pauli(Pauli& p, const Gate& g) {
    auto flip_sign_if = [&](bool cond) {
        if (cond) p.phase = (p.phase + 2) % 4;
    };
    switch (g.kind) {
        case GateKind::H: {
            bool x = p.x.get(g.q1), z = p.z.get(g.q1);
            flip_sign_if(x && z);
            p.x.set(g.q1, z);
            p.z.set(g.q1, x);
            break;
        }
        case GateKind::P: {
            bool x = p.x.get(g.q1), z = p.z.get(g.q1);
            flip_sign_if(x && z);
            p.z.set(g.q1, z ^ x);
            break;
        }
        case GateKind::PDAG: {
            bool x = p.x.get(g.q1), z = p.z.get(g.q1);
            flip_sign_if(x && !z);
            p.z.set(g.q1, z ^ x);
            break;
        }
        case GateKind::X:
            flip_sign_if(p.z.get(g.q1));
            break;
        case GateKind::Z:
            flip_sign_if(p.x.get(g.q1));
            break;
        case GateKind::Y:
            flip_sign_if(p.x.get(g.q1) != p.z.get(g.q1));
            break;
        case GateKind::CNOT: {
            bool xc = p.x.get(g.q1), zc = p.z.get(g.q1);
            bool xt = p.x.get(g.q2), zt = p.z.get(g.q2);
            flip_sign_if(xc && zt && (xt == zc));
            p.x.set(g.q2, xt ^ xc);
            p.z.set(g.q1, zc ^ zt);
            break;
        }
        case GateKind::CZ:
            conjugate_pauli(p, Gate::unary(GateKind::H, g.q2));
            conjugate_pauli(p, Gate::binary(GateKind::CNOT, g.q1, g.q2));
            conjugate_pauli(p, Gate::unary(GateKind::H, g.q2));
            break;
        case GateKind::CY:
            conjugate_pauli(p, Gate::unary(GateKind::PDAG, g.q2));
            conjugate_pauli(p, Gate::binary(GateKind::CNOT, g.q1, g.q2));
            conjugate_pauli(p, Gate::unary(GateKind::P, g.q2));
            break;
        case GateKind::SWAP: {
            bool x1 = p.x.get(g.q1), z1 = p.z.get(g.q1);
            bool x2 = p.x.get(g.q2), z2 = p.z.get(g.q2);
            p.x.set(g.q1, x2); p.z.set(g.q1, z2);
            p.x.set(g.q2, x1); p.z.set(g.q2, z1);
            break;
        }
        case GateKind::TOFFOLI:
            throw input_error("conjugate_pauli: Toffoli is not a Clifford gate");
        case GateKind::MEASURE:
            throw input_error("conjugate_pauli: measurement is not a unitary gate");
    }
}

CliffordTableau CliffordTableau::identity(std::size_t n) {
    CliffordTableau t;
    t.n = n;
    for (std::size_t q = 0; q < n; ++q) {
        Pauli x(n), z(n);
        x.set_letter(q, 1);
        z.set_letter(q, 2);
        t.x_images.push_back(x);
        t.z_images.push_back(z);
    }
    return t;
}

bool tableau_valid(const CliffordTableau& t) {
    if (t.x_images.size() != t.n || t.z_images.size() != t.n) return false;
    auto rows = [&]() {
        BitMat m;
        for (const auto& p : t.x_images) m.push_back(BitVec::concat(p.x, p.z));
        for (const auto& p : t.z_images) m.push_back(BitVec::concat(p.x, p.z));
        return m;
    };
    for (std::size_t i = 0; i < t.n; ++i) {
        if (t.x_images[i].n != t.n || t.z_images[i].n != t.n) return false;
        if (t.x_images[i].phase % 2 || t.z_images[i].phase % 2) return false;
        for (std::size_t j = 0; j < t.n; ++j) {
            if (commutes(t.x_images[i], t.x_images[j])) return false;
            if (commutes(t.z_images[i], t.z_images[j])) return false;
            if (commutes(t.x_images[i], t.z_images[j]) != (i == j)) return false;
        }
    }
    return gf2_rank(rows()) == 2 * t.n;
}

void apply_gate(CliffordTableau& t, const Gate& g) {
    for (auto& p : t.x_images) conjugate_pauli(p, g);
    for (auto& p : t.z_images) conjugate_pauli(p, g);
}

Pauli conjugate(const CliffordTableau& t, const Pauli& p) {
    Pauli r(t.n);
    r.phase = p.phase;
    for (std::size_t q = 0; q < t.n; ++q) {
        bool x = p.x.get(q), z = p.z.get(q);
        if (x && z) r.phase = (r.phase + 1) % 4;  // letter factor i in Y = iXZ
        if (x) r = multiply(r, t.x_images[q]);
        if (z) r = multiply(r, t.z_images[q]);
    }
    return r;
}

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
    CliffordTableau r;
    r.n = a.n;
    for (std::size_t q = 0; q < a.n; ++q) {
        r.x_images.push_back(conjugate(b, a.x_images[q]));
        r.z_images.push_back(conjugate(b, a.z_images[q]));
    }
    return r;
}

CliffordTableau circuit_tableau(const Circuit& c) {
    if (!is_clifford_only(c))
        throw input_error("circuit_tableau: circuit contains non-Clifford elements");
    CliffordTableau t = CliffordTableau::identity(c.n);
    for (const auto& g : c.gates) apply_gate(t, g);
    return t;
}

CliffordTableau tableau_from_text(const std::string& text) {
    std::vector<Pauli> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char ch : line)
            if (!isspace((unsigned char)ch)) trimmed += ch;
        if (trimmed.empty()) continue;
        try {
            rows.push_back(parse_pauli(trimmed));
        } catch (const input_error& e) {
            throw input_error("tableau line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (rows.empty() || rows.size() % 2)
        throw input_error("tableau: expected 2n nonempty rows");
    CliffordTableau t;
    t.n = rows.size() / 2;
    for (std::size_t i = 0; i < t.n; ++i) t.x_images.push_back(rows[i]);
    for (std::size_t i = 0; i < t.n; ++i) t.z_images.push_back(rows[t.n + i]);
    for (const auto& p : rows)
        if (p.n != t.n) throw input_error("tableau: row length does not match qubit count");
    if (!tableau_valid(t)) throw input_error("tableau: images do not form a Clifford map");
    return t;
}

std::string tableau_to_text(const CliffordTableau& t) {
    std::ostringstream os;
    for (const auto& p : t.x_images) os << format_pauli(p) << "\n";
    for (const auto& p : t.z_images) os << format_pauli(p) << "\n";
    return os.str();
}

StabilizerState StabilizerState::zero_state(std::size_t n) {
    StabilizerState s;
    s.n = n;
    for (std::size_t q = 0; q < n; ++q) {
        Pauli z(n), x(n);
        z.set_letter(q, 2);
        x.set_letter(q, 1);
        s.stab.push_back(z);
        s.destab.push_back(x);
    }
    return s;
}

void apply_gate(StabilizerState& s, const Gate& g) {
    for (auto& p : s.stab) conjugate_pauli(p, g);
    for (auto& p : s.destab) conjugate_pauli(p, g);
}

void apply_pauli(StabilizerState& s, const Pauli& p) {
    for (auto& q : s.stab)
        if (commutes(q, p)) q.phase = (q.phase + 2) % 4;
    for (auto& q : s.destab)
        if (commutes(q, p)) q.phase = (q.phase + 2) % 4;
}

namespace {

int random_sign(std::mt19937_64& rng) { return (rng() & 1) ? -1 : 1; }

Pauli signed_copy(const Pauli& a, int outcome) {
    Pauli r = a;
    r.phase = outcome > 0 ? a.phase : (a.phase + 2) % 4;
    return r;
}

}  // namespace

MeasureResult measure_pauli(StabilizerState& s, const Pauli& a, std::mt19937_64& rng,
                            int forced) {
    if (a.phase % 2) throw input_error("measure_pauli: observable is not Hermitian");
    std::size_t p = s.n;
    for (std::size_t i = 0; i < s.n; ++i)
        if (commutes(s.stab[i], a)) { p = i; break; }
    if (p == s.n) {
        // Deterministic: reconstruct +-a as a product of stabilizer rows.
        Pauli prod(s.n);
        for (std::size_t i = 0; i < s.n; ++i)
            if (commutes(s.destab[i], a)) prod = multiply(prod, s.stab[i]);
        if (!(prod.x == a.x && prod.z == a.z))
            throw internal_error("measure_pauli: deterministic reconstruction failed");
        int outcome = prod.phase == a.phase ? 1 : -1;
        if (forced && forced != outcome)
            throw input_error("measure_pauli: forced outcome has probability zero");
        return {outcome, true};
    }
    int outcome = forced ? forced : random_sign(rng);
    for (std::size_t i = 0; i < s.n; ++i) {
        if (i != p && commutes(s.stab[i], a)) s.stab[i] = multiply(s.stab[i], s.stab[p]);
        if (commutes(s.destab[i], a) && i != p) s.destab[i] = multiply(s.destab[i], s.stab[p]);
    }
    s.destab[p] = s.stab[p];
    s.stab[p] = signed_copy(a, outcome);
    return {outcome, false};
}

std::vector<MeasureResult> run_circuit(StabilizerState& s, const Circuit& c,
                                       std::mt19937_64& rng) {
    std::vector<MeasureResult> results;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::TOFFOLI)
            throw input_error("run_circuit: Toffoli requires the dense simulator");
        if (g.kind == GateKind::MEASURE) {
            auto r = measure_pauli(s, g.observable, rng, g.forced_outcome);
            if (r.outcome < 0 && g.has_correction) apply_pauli(s, g.correction);
            results.push_back(r);
        } else {
            apply_gate(s, g);
        }
    }
    return results;
}

void apply_gate(PartialStabilizer& s, const Gate& g) {
    for (auto& p : s.gens) conjugate_pauli(p, g);
    for (auto& p : s.logical_x) conjugate_pauli(p, g);
    for (auto& p : s.logical_z) conjugate_pauli(p, g);
}

void apply_pauli(PartialStabilizer& s, const Pauli& p) {
    auto flip = [&](std::vector<Pauli>& v) {
        for (auto& q : v)
            if (commutes(q, p)) q.phase = (q.phase + 2) % 4;
    };
    flip(s.gens);
    flip(s.logical_x);
    flip(s.logical_z);
}

MeasureResult measure_pauli(PartialStabilizer& s, const Pauli& a, std::mt19937_64& rng,
                            int forced) {
    if (a.phase % 2) throw input_error("measure_pauli: observable is not Hermitian");
    std::size_t p = s.gens.size();
    for (std::size_t i = 0; i < s.gens.size(); ++i)
        if (commutes(s.gens[i], a)) { p = i; break; }
    if (p < s.gens.size()) {
        int outcome = forced ? forced : random_sign(rng);
        Pauli old = s.gens[p];
        for (std::size_t i = 0; i < s.gens.size(); ++i)
            if (i != p && commutes(s.gens[i], a)) s.gens[i] = multiply(s.gens[i], old);
        for (auto& l : s.logical_x)
            if (commutes(l, a)) l = multiply(l, old);
        for (auto& l : s.logical_z)
            if (commutes(l, a)) l = multiply(l, old);
        s.gens[p] = signed_copy(a, outcome);
        return {outcome, false};
    }
    // Commutes with every generator: either already determined or a new
    // independent degree of freedom being fixed.
    Pauli reduced = reduce_mod_group(s.gens, a);
    if (!reduced.x.any() && !reduced.z.any()) {
        int outcome = reduced.phase == 0 ? 1 : -1;
        if (forced && forced != outcome)
            throw input_error("measure_pauli: forced outcome has probability zero");
        return {outcome, true};
    }
    int outcome = forced ? forced : random_sign(rng);
    s.gens.push_back(signed_copy(a, outcome));
    return {outcome, false};
}

std::vector<MeasureResult> run_circuit(PartialStabilizer& s, const Circuit& c,
                                       std::mt19937_64& rng) {
    std::vector<MeasureResult> results;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::TOFFOLI)
            throw input_error("run_circuit: Toffoli requires the dense simulator");
        if (g.kind == GateKind::MEASURE) {
            auto r = measure_pauli(s, g.observable, rng, g.forced_outcome);
            if (r.outcome < 0 && g.has_correction) apply_pauli(s, g.correction);
            results.push_back(r);
        } else {
            apply_gate(s, g);
        }
    }
    return results;
}

Pauli reduce_mod_group(const std::vector<Pauli>& gens, const Pauli& p) {
    // Row-reduce the generators (tracking signed Paulis) and clear the pivot
    // bits of p; the result is the canonical coset representative.
    std::vector<Pauli> rows = gens;
    std::size_t n = p.n;
    Pauli r = p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
        auto bit = [&](const Pauli& q) {
            return col < n ? q.x.get(col) : q.z.get(col - n);
        };
        std::size_t piv = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (bit(rows[i])) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && bit(rows[i])) rows[i] = multiply(rows[i], rows[rank]);
        if (bit(r)) r = multiply(r, rows[rank]);
        ++rank;
    }
    return r;
}

}  // namespace qec
