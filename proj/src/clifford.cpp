#include "qec/clifford.hpp"

#include <algorithm>

namespace qec {

namespace {

GateKind controlled_kind(int letter) {
    switch (letter) {
        case 1: return GateKind::CNOT;
        case 2: return GateKind::CZ;
        case 3: return GateKind::CY;
    }
    throw internal_error("controlled_kind: identity letter");
}

// Gate emitting the scalar i^e on the |1> branch of wire q.
void emit_branch_phase(std::vector<Gate>& gates, std::size_t q, int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: break;
        case 1: gates.push_back(Gate::unary(GateKind::P, q)); break;
        case 2: gates.push_back(Gate::unary(GateKind::Z, q)); break;
        case 3: gates.push_back(Gate::unary(GateKind::PDAG, q)); break;
    }
}

// Apply a signed Pauli row conditioned on wire q: controlled letters on the
// other wires plus the branch scalar collected at q (the row's own X at q is
// realized by the |1> basis state itself). Z letters on wires < skip_z_below
// are dropped except where j < keep_z_before: the encoder's generator rows
// are emitted in increasing order, so a Z phase between two control wires
// must be applied exactly once — by the later row — to compensate both the
// pairwise commutation sign and the reversed application order of the row
// restrictions.
void emit_conditioned_row(std::vector<Gate>& gates, const Pauli& row, std::size_t q,
                          std::size_t skip_z_below, std::size_t keep_z_before) {
    for (std::size_t j = 0; j < row.n; ++j) {
        if (j == q) continue;
        int l = row.letter(j);
        if (!l) continue;
        if (l == 2 && j < skip_z_below && j >= keep_z_before) continue;
        gates.push_back(Gate::binary(controlled_kind(l), q, j));
    }
    emit_branch_phase(gates, q, row.phase + (row.x.get(q) && row.z.get(q) ? 1 : 0));
}

std::vector<Gate> inverted_gates(const std::vector<Gate>& gates) {
    std::vector<Gate> inv(gates.rbegin(), gates.rend());
    for (auto& g : inv) {
        if (g.kind == GateKind::P) g.kind = GateKind::PDAG;
        else if (g.kind == GateKind::PDAG) g.kind = GateKind::P;
    }
    return inv;
}

CliffordTableau gates_tableau(const std::vector<Gate>& gates, std::size_t n) {
    CliffordTableau t = CliffordTableau::identity(n);
    for (const auto& g : gates) apply_gate(t, g);
    return t;
}

}  // namespace

Pauli embed_block(const Pauli& p, std::size_t block, std::size_t blocks) {
    if (block >= blocks) throw input_error("embed_block: block index out of range");
    Pauli r(p.n * blocks);
    r.phase = p.phase;
    for (std::size_t q = 0; q < p.n; ++q) {
        r.x.set(block * p.n + q, p.x.get(q));
        r.z.set(block * p.n + q, p.z.get(q));
    }
    return r;
}

CliffordTableau bitwise_expand(const CliffordTableau& block_op, std::size_t n) {
    std::size_t r = block_op.n;
    CliffordTableau out;
    out.n = r * n;
    auto expand = [&](const Pauli& slot_pauli, std::size_t i) {
        Pauli p(r * n);
        p.phase = slot_pauli.phase;
        for (std::size_t b = 0; b < r; ++b) {
            p.x.set(b * n + i, slot_pauli.x.get(b));
            p.z.set(b * n + i, slot_pauli.z.get(b));
        }
        return p;
    };
    out.x_images.resize(r * n, Pauli(r * n));
    out.z_images.resize(r * n, Pauli(r * n));
    for (std::size_t b = 0; b < r; ++b)
        for (std::size_t i = 0; i < n; ++i) {
            out.x_images[b * n + i] = expand(block_op.x_images[b], i);
            out.z_images[b * n + i] = expand(block_op.z_images[b], i);
        }
    return out;
}

namespace {

StabilizerCode product_code(const StabilizerCode& code, std::size_t blocks) {
    StabilizerCode big;
    big.n = code.n * blocks;
    big.k = code.k * blocks;
    for (std::size_t b = 0; b < blocks; ++b)
        for (const auto& g : code.generators) big.generators.push_back(embed_block(g, b, blocks));
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < code.k; ++i) {
            big.logical_x.push_back(embed_block(code.logical_x[i], b, blocks));
            big.logical_z.push_back(embed_block(code.logical_z[i], b, blocks));
        }
    return big;
}

std::size_t block_count(const StabilizerCode& code, const CliffordTableau& op) {
    if (code.n == 0 || op.n % code.n != 0)
        throw input_error("transversal op: dimension is not a whole number of blocks");
    return op.n / code.n;
}

}  // namespace

bool is_valid_transversal(const StabilizerCode& code, const CliffordTableau& op) {
    std::size_t blocks = block_count(code, op);
    StabilizerCode big = product_code(code, blocks);
    for (const auto& g : big.generators)
        if (!in_stabilizer(big, conjugate(op, g))) return false;
    return true;
}

CliffordTableau encoded_action(const StabilizerCode& code, const CliffordTableau& op) {
    if (!is_valid_transversal(code, op))
        throw input_error("encoded_action: op does not preserve the stabilizer");
    std::size_t blocks = block_count(code, op);
    StabilizerCode big = product_code(code, blocks);
    std::size_t gens = big.generators.size();
    std::size_t lk = big.logical_x.size();

    BitMat rows;
    for (const auto& g : big.generators) rows.push_back(pauli_row(g));
    for (const auto& l : big.logical_x) rows.push_back(pauli_row(l));
    for (const auto& l : big.logical_z) rows.push_back(pauli_row(l));

    // Product of the selected logicals in per-wire X-then-Z order (with the
    // i-per-Y letter factor), then the selected stabilizer generators.
    auto reference = [&](const BitVec& sel) {
        Pauli r(big.n);
        for (std::size_t w = 0; w < lk; ++w) {
            bool x = sel.get(gens + w), z = sel.get(gens + lk + w);
            if (x && z) r.phase = (r.phase + 1) % 4;
            if (x) r = multiply(r, big.logical_x[w]);
            if (z) r = multiply(r, big.logical_z[w]);
        }
        for (std::size_t i = 0; i < gens; ++i)
            if (sel.get(i)) r = multiply(r, big.generators[i]);
        return r;
    };

    auto logical_image = [&](const Pauli& src) {
        Pauli img = conjugate(op, src);
        auto sel = gf2_solve(rows, pauli_row(img));
        if (!sel) throw internal_error("encoded_action: image escapes the logical algebra");
        Pauli ref = reference(*sel);
        int diff = ((img.phase - ref.phase) % 4 + 4) % 4;
        if (diff % 2) throw internal_error("encoded_action: odd phase residue");
        Pauli out(lk);
        out.phase = diff;
        for (std::size_t w = 0; w < lk; ++w) {
            out.x.set(w, sel->get(gens + w));
            out.z.set(w, sel->get(gens + lk + w));
        }
        return out;
    };

    CliffordTableau t;
    t.n = lk;
    for (std::size_t w = 0; w < lk; ++w) {
        t.x_images.push_back(logical_image(big.logical_x[w]));
        t.z_images.push_back(logical_image(big.logical_z[w]));
    }
    return t;
}

bool orthogonal_group_member(const BitMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw input_error("orthogonal_group_member: matrix not square");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i].dot(m[j]) != (i == j)) return false;
    return true;
}

CliffordTableau four_qubit_op() {
    const char* rows[4] = {"1110", "0111", "1011", "1101"};
    CliffordTableau t;
    t.n = 4;
    for (std::size_t i = 0; i < 4; ++i) {
        Pauli x(4), z(4);
        for (std::size_t j = 0; j < 4; ++j)
            if (rows[i][j] == '1') {
                x.set_letter(j, 1);
                z.set_letter(j, 2);
            }
        t.x_images.push_back(x);
        t.z_images.push_back(z);
    }
    return t;
}

FourQubitReport four_qubit_universal_check(const StabilizerCode& code) {
    FourQubitReport rep;
    CliffordTableau op = four_qubit_op();
    rep.tableau_ok = tableau_valid(op);

    BitMat m;
    for (std::size_t i = 0; i < 4; ++i) m.push_back(op.x_images[i].x);
    rep.orthogonal_ok = orthogonal_group_member(m);

    rep.transversal_ok = rep.tableau_ok && is_valid_transversal(code, bitwise_expand(op, code.n));

    // Two data wires plus two |0> ancillas, the map applied, then X measured
    // on both ancillas: the residual logical action must be a CNOT.
    PartialStabilizer s;
    s.n = 4;
    for (std::size_t q = 2; q < 4; ++q) {
        Pauli z(4);
        z.set_letter(q, 2);
        s.gens.push_back(z);
    }
    for (std::size_t q = 0; q < 2; ++q) {
        Pauli x(4), z(4);
        x.set_letter(q, 1);
        z.set_letter(q, 2);
        s.logical_x.push_back(x);
        s.logical_z.push_back(z);
    }
    auto conj_all = [&](std::vector<Pauli>& v) {
        for (auto& p : v) p = conjugate(op, p);
    };
    conj_all(s.gens);
    conj_all(s.logical_x);
    conj_all(s.logical_z);
    std::mt19937_64 rng(0);
    for (std::size_t q = 2; q < 4; ++q) {
        Pauli x(4);
        x.set_letter(q, 1);
        measure_pauli(s, x, rng, +1);
    }
    auto residual = [&](const Pauli& l, const char* expect) {
        Pauli r = reduce_mod_group(s.gens, l);
        return format_pauli(r) == expect;
    };
    rep.cnot_script_ok = residual(s.logical_x[0], "XXII") && residual(s.logical_x[1], "IXII") &&
                         residual(s.logical_z[0], "ZIII") && residual(s.logical_z[1], "ZZII");
    return rep;
}

StabilizerCode standard_frame_code(const StabilizerCode& code) {
    StandardForm sf = standard_form(code);
    StabilizerCode out;
    out.n = code.n;
    out.k = code.k;
    out.generators = sf.rows;
    auto logicals = standard_logicals(sf);
    out.logical_x = logicals.first;
    out.logical_z = logicals.second;
    out.name = code.name.empty() ? "" : code.name + "-std";
    out.claimed_distance = code.claimed_distance;
    return out;
}

Circuit encoder_circuit(const StabilizerCode& code) {
    StandardForm sf = standard_form(code);
    auto logicals = standard_logicals(sf);
    std::size_t n = sf.n, k = sf.k, r = sf.r;

    Circuit c;
    c.n = n;
    // Conditioned logical-X fan-out from each input wire; Z letters on the
    // first r wires act on |0> and are skipped.
    for (std::size_t i = 0; i < k; ++i)
        emit_conditioned_row(c.gates, logicals.first[i], n - k + i, r, 0);
    for (std::size_t i = 0; i < r; ++i) c.gates.push_back(Gate::unary(GateKind::H, i));
    for (std::size_t i = 0; i < r; ++i)
        emit_conditioned_row(c.gates, sf.rows[i], i, r, i);
    return c;
}

Circuit decode_by_measurement(const StabilizerCode& code) {
    StabilizerCode std_code = standard_frame_code(code);
    std::size_t n = std_code.n, k = std_code.k;
    Circuit c;
    c.n = n + k;
    for (std::size_t i = 0; i < k; ++i) {
        const Pauli& zbar = std_code.logical_z[i];
        for (std::size_t j = 0; j < n; ++j)
            if (zbar.z.get(j)) c.gates.push_back(Gate::binary(GateKind::CNOT, j, n + i));
        const Pauli& xbar = std_code.logical_x[i];
        for (std::size_t j = 0; j < n; ++j) {
            int l = xbar.letter(j);
            if (l) c.gates.push_back(Gate::binary(controlled_kind(l), n + i, j));
        }
        emit_branch_phase(c.gates, n + i, xbar.phase);
    }
    return c;
}

namespace {

// Phaseless letter action of H and P used for the single-qubit searches.
int letter_after(int l, GateKind k) {
    if (k == GateKind::H) return l == 1 ? 2 : l == 2 ? 1 : l;
    if (k == GateKind::P) return l == 1 ? 3 : l == 3 ? 1 : l;
    throw internal_error("letter_after: unsupported gate");
}

const std::vector<std::vector<GateKind>>& one_qubit_seqs() {
    static const std::vector<std::vector<GateKind>> seqs = {
        {},
        {GateKind::H},
        {GateKind::P},
        {GateKind::H, GateKind::P},
        {GateKind::P, GateKind::H},
        {GateKind::H, GateKind::P, GateKind::H},
    };
    return seqs;
}

// Shortest H/P sequence on wire q whose conjugation maps letter `from1` to
// `to1` and (when from2 != -1) `from2` to `to2`.
std::vector<Gate> letter_seq(std::size_t q, int from1, int to1, int from2 = -1, int to2 = -1) {
    for (const auto& seq : one_qubit_seqs()) {
        int a = from1, b = from2;
        for (GateKind k : seq) {
            a = letter_after(a, k);
            if (b >= 0) b = letter_after(b, k);
        }
        if (a == to1 && (from2 < 0 || b == to2)) {
            std::vector<Gate> gates;
            for (GateKind k : seq) gates.push_back(Gate::unary(k, q));
            return gates;
        }
    }
    throw internal_error("letter_seq: no single-qubit map realizes the request");
}

bool phaseless_equal(const Pauli& a, const Pauli& b) { return a.x == b.x && a.z == b.z; }

}  // namespace

Circuit synthesize_clifford(const CliffordTableau& t) {
    if (!tableau_valid(t)) throw input_error("synthesize_clifford: invalid tableau");
    std::size_t n = t.n;
    Circuit c;
    c.n = n;

    CliffordTableau work = t;
    std::vector<Gate> front;
    std::vector<std::vector<Gate>> tails(n);

    for (std::size_t a = 0; a < n; ++a) {
        Pauli basis_x(n), basis_z(n);
        basis_x.set_letter(a, 1);
        basis_z.set_letter(a, 2);
        if (phaseless_equal(work.z_images[a], basis_z) &&
            phaseless_equal(work.x_images[a], basis_x))
            continue;  // wire already in place; signs fixed at the end

        auto prepend = [&](GateKind k) {
            front.push_back(Gate::unary(k, a));
            std::vector<Gate> inv = inverted_gates({Gate::unary(k, a)});
            work = compose(gates_tableau(inv, n), work);
        };

        int ma = work.z_images[a].letter(a);
        int na = work.x_images[a].letter(a);
        if (ma != 0 && na == ma) {
            // Replace the X_a image by the (phaseless) product of both
            // images, clearing its letter at a.
            prepend(GateKind::P);
            na = work.x_images[a].letter(a);
        }

        std::vector<Gate> g;
        if (ma != 0) {
            if (na == 0)
                g = letter_seq(a, ma, 1);
            else
                g = letter_seq(a, ma, 1, na, 2);
        } else {
            // Import an X into the Z_a image from a support wire c.
            std::size_t cwire = n;
            for (std::size_t j = 0; j < n && cwire == n; ++j)
                if (j != a && work.z_images[a].letter(j) != 0) cwire = j;
            if (cwire == n) throw internal_error("synthesize_clifford: empty image");
            if (work.x_images[a].letter(cwire) == work.z_images[a].letter(cwire)) {
                prepend(GateKind::P);
                na = work.x_images[a].letter(a);
            }
            int mc = work.z_images[a].letter(cwire);
            int nc = work.x_images[a].letter(cwire);
            if (na != 0) {
                auto fix = letter_seq(a, na, 2);
                g.insert(g.end(), fix.begin(), fix.end());
            }
            if (nc == 0)
                for (auto& gate : letter_seq(cwire, mc, 1)) g.push_back(gate);
            else
                for (auto& gate : letter_seq(cwire, mc, 1, nc, 2)) g.push_back(gate);
            g.push_back(Gate::binary(GateKind::CNOT, cwire, a));
        }

        CliffordTableau shaped = compose(work, gates_tableau(g, n));
        const Pauli& m = shaped.z_images[a];
        const Pauli& nn = shaped.x_images[a];
        if (m.letter(a) != 1 || (nn.letter(a) != 0 && nn.letter(a) != 2))
            throw internal_error("synthesize_clifford: normalization failed");

        std::vector<Gate>& tail = tails[a];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == a) continue;
            if (int l = nn.letter(j)) tail.push_back(Gate::binary(controlled_kind(l), a, j));
        }
        tail.push_back(Gate::unary(GateKind::H, a));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == a) continue;
            if (int l = m.letter(j)) tail.push_back(Gate::binary(controlled_kind(l), a, j));
        }
        for (auto& gate : inverted_gates(g)) tail.push_back(gate);

        work = compose(work, gates_tableau(inverted_gates(tail), n));
        if (!phaseless_equal(work.z_images[a], basis_z) ||
            !phaseless_equal(work.x_images[a], basis_x))
            throw internal_error("synthesize_clifford: wire not reduced to identity");
    }

    for (const auto& gate : front) c.gates.push_back(gate);
    for (std::size_t a = n; a-- > 0;)
        for (const auto& gate : tails[a]) c.gates.push_back(gate);

    // Residual signs are realized by one appended Pauli: flip image i exactly
    // when the built circuit's sign disagrees with the target's.
    CliffordTableau built = circuit_tableau(c);
    Pauli w(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!phaseless_equal(built.x_images[i], t.x_images[i]) ||
            !phaseless_equal(built.z_images[i], t.z_images[i]))
            throw internal_error("synthesize_clifford: structural mismatch");
        if (built.x_images[i].phase != t.x_images[i].phase) {
            w.x ^= t.z_images[i].x;
            w.z ^= t.z_images[i].z;
        }
        if (built.z_images[i].phase != t.z_images[i].phase) {
            w.x ^= t.x_images[i].x;
            w.z ^= t.x_images[i].z;
        }
    }
    for (std::size_t q = 0; q < n; ++q)
        switch (w.letter(q)) {
            case 1: c.gates.push_back(Gate::unary(GateKind::X, q)); break;
            case 2: c.gates.push_back(Gate::unary(GateKind::Z, q)); break;
            case 3: c.gates.push_back(Gate::unary(GateKind::Y, q)); break;
        }
    return c;
}

Circuit swap_decomposition(std::size_t a, std::size_t b) {
    Circuit c;
    c.n = std::max(a, b) + 1;
    c.gates.push_back(Gate::binary(GateKind::CNOT, a, b));
    c.gates.push_back(Gate::binary(GateKind::CNOT, b, a));
    c.gates.push_back(Gate::binary(GateKind::CNOT, a, b));
    return c;
}

}  // namespace qec
