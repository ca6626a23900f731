#include "qec/code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qec {

namespace {
void swap_qubits(Pauli& p, std::size_t a, std::size_t b) {
    bool xa = p.x.get(a), xb = p.x.get(b);
    p.x.set(a, xb);
    p.x.set(b, xa);
    bool za = p.z.get(a), zb = p.z.get(b);
    p.z.set(a, zb);
    p.z.set(b, za);
}
}  // namespace

ValidationReport validate(const StabilizerCode& code) {
    ValidationReport rep;
    auto fail = [&rep](bool& flag, const std::string& msg) {
        flag = false;
        rep.ok = false;
        rep.issues.push_back(msg);
    };
    if (code.generators.size() != code.n - code.k)
        fail(rep.independent_ok, "generator count != n - k");
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        const Pauli& g = code.generators[i];
        if (g.n != code.n) fail(rep.independent_ok, "generator " + std::to_string(i) + " has wrong length");
        if (!g.hermitian())
            fail(rep.hermitian_ok, "generator " + std::to_string(i) + " is not Hermitian");
    }
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        for (std::size_t j = i + 1; j < code.generators.size(); ++j)
            if (commutes(code.generators[i], code.generators[j]))
                fail(rep.commute_ok, "generators " + std::to_string(i) + " and " +
                                         std::to_string(j) + " anticommute");
    if (gf2_rank(check_matrix(code)) != code.generators.size())
        fail(rep.independent_ok, "generators are dependent over GF(2)");

    if (!code.logical_x.empty() || !code.logical_z.empty()) {
        if (code.logical_x.size() != code.k || code.logical_z.size() != code.k)
            fail(rep.logicals_ok, "logical operator count != k");
        auto check_norm = [&](const Pauli& l, const std::string& which) {
            for (std::size_t g = 0; g < code.generators.size(); ++g)
                if (commutes(l, code.generators[g]))
                    fail(rep.logicals_ok, which + " anticommutes with generator " + std::to_string(g));
        };
        for (std::size_t i = 0; i < code.logical_x.size(); ++i)
            check_norm(code.logical_x[i], "logical_x[" + std::to_string(i) + "]");
        for (std::size_t i = 0; i < code.logical_z.size(); ++i)
            check_norm(code.logical_z[i], "logical_z[" + std::to_string(i) + "]");
        for (std::size_t i = 0; i < code.logical_x.size(); ++i)
            for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
                int want = (i == j) ? 1 : 0;
                if (j < code.logical_z.size() && i < code.logical_x.size() &&
                    commutes(code.logical_x[i], code.logical_z[j]) != want)
                    fail(rep.logicals_ok, "logical_x[" + std::to_string(i) + "] vs logical_z[" +
                                              std::to_string(j) + "] has wrong commutation");
            }
        for (std::size_t i = 0; i < code.logical_x.size(); ++i)
            for (std::size_t j = i + 1; j < code.logical_x.size(); ++j)
                if (commutes(code.logical_x[i], code.logical_x[j]))
                    fail(rep.logicals_ok, "logical_x pair anticommutes");
        for (std::size_t i = 0; i < code.logical_z.size(); ++i)
            for (std::size_t j = i + 1; j < code.logical_z.size(); ++j)
                if (commutes(code.logical_z[i], code.logical_z[j]))
                    fail(rep.logicals_ok, "logical_z pair anticommutes");
    }
    return rep;
}

BitVec pauli_row(const Pauli& p) { return BitVec::concat(p.x, p.z); }

Pauli pauli_from_row(const BitVec& row, int phase) {
    std::size_t n = row.size() / 2;
    return Pauli(n, row.slice(0, n), row.slice(n, n), phase);
}

BitMat check_matrix(const StabilizerCode& code) {
    BitMat m;
    m.reserve(code.generators.size());
    for (const auto& g : code.generators) m.push_back(pauli_row(g));
    return m;
}

BitVec syndrome(const StabilizerCode& code, const Pauli& e) {
    if (e.n != code.n) throw input_error("syndrome: dimension mismatch");
    BitVec s(code.generators.size());
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        s.set(i, commutes(code.generators[i], e));
    return s;
}

StandardForm standard_form(const StabilizerCode& code) {
    StandardForm sf;
    sf.n = code.n;
    sf.k = code.k;
    sf.rows = code.generators;
    sf.perm.resize(code.n);
    for (std::size_t i = 0; i < code.n; ++i) sf.perm[i] = i;
    std::size_t m = sf.rows.size();
    const std::size_t n = code.n;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : sf.rows) swap_qubits(row, a, b);
        std::swap(sf.perm[a], sf.perm[b]);
    };

    // Phase 1: reduced echelon form of the X side, pivots at the lowest-index
    // qubits available, then moved into the leading identity block.
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && !sf.rows[piv].x.get(col)) ++piv;
        if (piv == m) continue;
        std::swap(sf.rows[r], sf.rows[piv]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && sf.rows[i].x.get(col)) sf.rows[i] = multiply(sf.rows[i], sf.rows[r]);
        pivots.push_back(col);
        ++r;
    }
    for (std::size_t j = 0; j < r; ++j) swap_cols(j, pivots[j]);
    sf.r = r;

    // Phase 2: reduced echelon form of the Z side of the lower rows on
    // columns >= r, pivots moved to the (n-k-r) identity block.
    std::size_t r2 = 0;
    std::vector<std::size_t> pivots2;
    for (std::size_t col = r; col < n && r + r2 < m; ++col) {
        std::size_t piv = r + r2;
        while (piv < m && !sf.rows[piv].z.get(col)) ++piv;
        if (piv == m) continue;
        std::swap(sf.rows[r + r2], sf.rows[piv]);
        for (std::size_t i = r; i < m; ++i)
            if (i != r + r2 && sf.rows[i].z.get(col))
                sf.rows[i] = multiply(sf.rows[i], sf.rows[r + r2]);
        pivots2.push_back(col);
        ++r2;
    }
    if (r + r2 != m)
        throw internal_error("standard_form: generators are dependent");
    for (std::size_t j = 0; j < r2; ++j) swap_cols(r + j, pivots2[j]);

    sf.matrix.clear();
    for (const auto& row : sf.rows) sf.matrix.push_back(pauli_row(row));
    return sf;
}

std::pair<std::vector<Pauli>, std::vector<Pauli>> standard_logicals(const StandardForm& sf) {
    const std::size_t n = sf.n, k = sf.k, r = sf.r;
    const std::size_t mid = n - k - r;
    std::vector<Pauli> xs, zs;
    for (std::size_t j = 0; j < k; ++j) {
        Pauli xb(n);
        // x part: (0, E^T row j, e_j)
        for (std::size_t l = 0; l < mid; ++l)
            xb.x.set(r + l, sf.rows[r + l].z.get(n - k + j));  // E[l][j]
        xb.x.set(n - k + j, true);
        // z part: (E^T C1^T + C2^T row j, 0, 0)
        for (std::size_t i = 0; i < r; ++i) {
            bool v = sf.rows[i].z.get(n - k + j);  // C2[i][j]
            for (std::size_t l = 0; l < mid; ++l)
                v ^= sf.rows[r + l].z.get(n - k + j) && sf.rows[i].z.get(r + l);  // E[l][j]*C1[i][l]
            xb.z.set(i, v);
        }
        xs.push_back(xb);

        Pauli zb(n);
        for (std::size_t i = 0; i < r; ++i) zb.z.set(i, sf.rows[i].x.get(n - k + j));  // A2[i][j]
        zb.z.set(n - k + j, true);
        zs.push_back(zb);
    }
    return {xs, zs};
}

Pauli permute_to_original(const Pauli& p, const std::vector<std::size_t>& perm) {
    Pauli r(p.n);
    r.phase = p.phase;
    for (std::size_t j = 0; j < p.n; ++j) {
        r.x.set(perm[j], p.x.get(j));
        r.z.set(perm[j], p.z.get(j));
    }
    return r;
}

Pauli permute_to_standard(const Pauli& p, const std::vector<std::size_t>& perm) {
    Pauli r(p.n);
    r.phase = p.phase;
    for (std::size_t j = 0; j < p.n; ++j) {
        r.x.set(j, p.x.get(perm[j]));
        r.z.set(j, p.z.get(perm[j]));
    }
    return r;
}

BitMat classical_code_from_quantum(const StandardForm& sf) {
    BitMat g;
    for (std::size_t j = 0; j < sf.k; ++j) {
        BitVec row(sf.r + sf.k);
        for (std::size_t i = 0; i < sf.r; ++i)
            row.set(i, sf.rows[i].x.get(sf.n - sf.k + j));  // A2^T
        row.set(sf.r + j, true);
        g.push_back(row);
    }
    return g;
}

StabilizerCode steane_ancilla_stabilizer(const StabilizerCode& code) {
    const std::size_t n = code.n;
    StabilizerCode anc;
    anc.n = 2 * n;
    anc.k = 0;
    anc.name = code.name.empty() ? "ancilla" : code.name + "-ancilla";
    BitMat zrows;
    for (const auto& g : code.generators) {
        Pauli p(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            p.z.set(q, g.z.get(q));
            p.z.set(n + q, g.x.get(q));
        }
        anc.generators.push_back(p);
        zrows.push_back(p.z);
    }
    for (const auto& v : gf2_nullspace(zrows, 2 * n)) {
        Pauli p(2 * n);
        p.x = v;
        anc.generators.push_back(p);
    }
    return anc;
}

std::vector<Pauli> stabilizer_elements(const StabilizerCode& code) {
    std::size_t m = code.generators.size();
    if (m > 20) throw feasibility_error("stabilizer_elements: 2^" + std::to_string(m) + " too large");
    std::vector<Pauli> out;
    out.reserve(std::size_t(1) << m);
    out.push_back(Pauli::identity(code.n));
    // Gray-code walk: each step multiplies by one generator.
    Pauli cur = out.back();
    for (std::size_t i = 1; i < (std::size_t(1) << m); ++i) {
        std::size_t bit = std::countr_zero(i);
        cur = multiply(cur, code.generators[bit]);
        out.push_back(cur);
    }
    return out;
}

std::optional<BitVec> stabilizer_combination(const StabilizerCode& code, const Pauli& e) {
    return gf2_solve(check_matrix(code), pauli_row(e));
}

bool in_stabilizer_phaseless(const StabilizerCode& code, const Pauli& e) {
    return stabilizer_combination(code, e).has_value();
}

bool in_stabilizer(const StabilizerCode& code, const Pauli& e) {
    auto sel = stabilizer_combination(code, e);
    if (!sel) return false;
    Pauli prod = Pauli::identity(code.n);
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        if (sel->get(i)) prod = multiply(prod, code.generators[i]);
    return prod == e;
}

std::string code_to_text(const StabilizerCode& code) {
    std::ostringstream os;
    os << "name: " << (code.name.empty() ? "unnamed" : code.name) << "\n";
    os << "n: " << code.n << "\n";
    os << "k: " << code.k << "\n";
    if (code.claimed_distance > 0) os << "claimed_distance: " << code.claimed_distance << "\n";
    os << "generators:\n";
    for (const auto& g : code.generators) os << format_pauli(g) << "\n";
    if (!code.logical_x.empty()) {
        os << "logical_x:\n";
        for (const auto& l : code.logical_x) os << format_pauli(l) << "\n";
    }
    if (!code.logical_z.empty()) {
        os << "logical_z:\n";
        for (const auto& l : code.logical_z) os << format_pauli(l) << "\n";
    }
    return os.str();
}

StabilizerCode code_from_text(const std::string& text) {
    StabilizerCode code;
    std::istringstream is(text);
    std::string line;
    int section = 0;  // 0 header, 1 generators, 2 logical_x, 3 logical_z
    std::size_t lineno = 0;
    bool have_n = false;
    while (std::getline(is, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto starts = [&](const char* p) { return line.rfind(p, 0) == 0; };
        if (starts("name:")) { code.name = line.substr(5); while (!code.name.empty() && code.name.front() == ' ') code.name.erase(0, 1); continue; }
        if (starts("n:")) { code.n = std::stoul(line.substr(2)); have_n = true; continue; }
        if (starts("k:")) { code.k = std::stoul(line.substr(2)); continue; }
        if (starts("claimed_distance:")) { code.claimed_distance = std::stoi(line.substr(17)); continue; }
        if (line == "generators:") { section = 1; continue; }
        if (line == "logical_x:") { section = 2; continue; }
        if (line == "logical_z:") { section = 3; continue; }
        if (section == 0)
            throw input_error("code file line " + std::to_string(lineno) + ": unexpected '" + line + "'");
        Pauli p;
        try {
            p = parse_pauli(line);
        } catch (const input_error& e) {
            throw input_error("code file line " + std::to_string(lineno) + ": " + e.what());
        }
        if (have_n && p.n != code.n)
            throw input_error("code file line " + std::to_string(lineno) + ": operator length != n");
        if (section == 1) code.generators.push_back(p);
        else if (section == 2) code.logical_x.push_back(p);
        else code.logical_z.push_back(p);
    }
    if (!have_n) throw input_error("code file: missing n");
    return code;
}

}  // namespace qec
