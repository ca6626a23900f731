#include "qec/dense.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>

namespace qec {

namespace {

using cplx = std::complex<double>;

constexpr std::size_t kMaxQubits = 14;

void check_size(std::size_t n, std::size_t cap = kMaxQubits) {
    if (n > cap)
        throw input_error("dense simulation capped at " + std::to_string(cap) + " qubits");
}

// Bit of qubit q in amplitude index idx (qubit 0 is most significant).
inline bool qbit(std::size_t idx, std::size_t q, std::size_t n) {
    return (idx >> (n - 1 - q)) & 1u;
}

inline std::size_t qmask(std::size_t q, std::size_t n) { return std::size_t(1) << (n - 1 - q); }

void apply_one_qubit(DenseState& s, std::size_t q, const cplx m[2][2]) {
    std::size_t mask = qmask(q, s.n);
    for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
        if (idx & mask) continue;
        cplx a0 = s.amp[idx], a1 = s.amp[idx | mask];
        s.amp[idx] = m[0][0] * a0 + m[0][1] * a1;
        s.amp[idx | mask] = m[1][0] * a0 + m[1][1] * a1;
    }
}

const cplx kI(0, 1);

}  // namespace

DenseState DenseState::basis(std::size_t n, std::size_t index) {
    check_size(n);
    DenseState s;
    s.n = n;
    s.amp.assign(std::size_t(1) << n, 0.0);
    s.amp.at(index) = 1.0;
    return s;
}

void DenseState::normalize() {
    double norm2 = 0.0;
    for (const auto& a : amp) norm2 += std::norm(a);
    if (norm2 < 1e-24) throw internal_error("normalize: zero state");
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amp) a *= inv;
}

double fidelity(const DenseState& a, const DenseState& b) {
    if (a.n != b.n) throw input_error("fidelity: size mismatch");
    cplx ip = 0.0;
    for (std::size_t i = 0; i < a.amp.size(); ++i) ip += std::conj(a.amp[i]) * b.amp[i];
    return std::abs(ip);
}

void apply_pauli_dense(DenseState& s, const Pauli& p) {
    if (p.n != s.n) throw input_error("apply_pauli_dense: size mismatch");
    // operator = i^(phase + #Y) * (X-part) * (Z-part) applied per qubit.
    std::size_t xmask = 0, zmask = 0;
    int ys = 0;
    for (std::size_t q = 0; q < s.n; ++q) {
        if (p.x.get(q)) xmask |= qmask(q, s.n);
        if (p.z.get(q)) zmask |= qmask(q, s.n);
        if (p.x.get(q) && p.z.get(q)) ++ys;
    }
    cplx global = 1.0;
    for (int i = 0; i < ((p.phase + ys) % 4 + 4) % 4; ++i) global *= kI;
    std::vector<cplx> out(s.amp.size(), 0.0);
    for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
        cplx v = s.amp[idx];
        if (v == cplx(0.0)) continue;
        double sign = std::popcount(idx & zmask) % 2 ? -1.0 : 1.0;
        out[idx ^ xmask] += global * sign * v;
    }
    s.amp = std::move(out);
}

std::vector<DenseState> codeword_states(const StabilizerCode& code) {
    check_size(code.n);
    std::vector<DenseState> words;
    for (std::size_t c = 0; c < (std::size_t(1) << code.k); ++c) {
        DenseState s = DenseState::basis(code.n, 0);
        for (std::size_t i = 0; i < code.k; ++i)
            if ((c >> i) & 1u) apply_pauli_dense(s, code.logical_x[i]);
        for (const auto& m : code.generators) {
            DenseState ms = s;
            apply_pauli_dense(ms, m);
            for (std::size_t idx = 0; idx < s.amp.size(); ++idx) s.amp[idx] += ms.amp[idx];
        }
        s.normalize();
        words.push_back(std::move(s));
    }
    return words;
}

ConditionReport verify_kl_condition(const StabilizerCode& code, const std::vector<Pauli>& errors) {
    check_size(code.n, 12);
    bool has_id = false;
    for (const auto& e : errors)
        if (!e.x.any() && !e.z.any() && e.phase == 0) has_id = true;
    if (!has_id) throw input_error("verify_kl_condition: error list must contain the identity");

    std::vector<DenseState> words = codeword_states(code);
    std::size_t m = errors.size(), dim = words.size();

    // Cache E_b |psi_j> for every error and codeword.
    std::vector<std::vector<DenseState>> image(m, std::vector<DenseState>(dim));
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t j = 0; j < dim; ++j) {
            image[b][j] = words[j];
            apply_pauli_dense(image[b][j], errors[b]);
        }

    ConditionReport rep;
    rep.condition_matrix.assign(m, std::vector<cplx>(m, 0.0));
    rep.correctable = true;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            // <psi_i| Ea^dag Eb |psi_j> = <Ea psi_i | Eb psi_j>.
            cplx diag = 0.0;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    cplx ip = 0.0;
                    for (std::size_t idx = 0; idx < image[a][i].amp.size(); ++idx)
                        ip += std::conj(image[a][i].amp[idx]) * image[b][j].amp[idx];
                    if (i != j) {
                        rep.max_violation = std::max(rep.max_violation, std::abs(ip));
                        if (std::abs(ip) > 1e-10) rep.correctable = false;
                    } else if (i == 0) {
                        diag = ip;
                    } else {
                        rep.max_violation = std::max(rep.max_violation, std::abs(ip - diag));
                        if (std::abs(ip - diag) > 1e-10) rep.correctable = false;
                    }
                }
            rep.condition_matrix[a][b] = diag;
        }

    Eigen::MatrixXcd c(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) c(a, b) = rep.condition_matrix[a][b];
    rep.hermiticity_residual = (c - c.adjoint()).cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
    rep.min_singular_value = svd.singularValues().minCoeff();
    rep.degenerate = rep.min_singular_value < 1e-8;
    return rep;
}

DenseState run_circuit_dense(const Circuit& c, DenseState state) {
    check_size(c.n);
    if (state.n != c.n) throw input_error("run_circuit_dense: state size mismatch");
    const double s = 1.0 / std::sqrt(2.0);
    const cplx h[2][2] = {{s, s}, {s, -s}};
    const cplx p[2][2] = {{1, 0}, {0, kI}};
    const cplx pdag[2][2] = {{1, 0}, {0, -kI}};

    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: apply_one_qubit(state, g.q1, h); break;
            case GateKind::P: apply_one_qubit(state, g.q1, p); break;
            case GateKind::PDAG: apply_one_qubit(state, g.q1, pdag); break;
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z: {
                Pauli pp(c.n);
                pp.set_letter(g.q1, g.kind == GateKind::X ? 1 : g.kind == GateKind::Z ? 2 : 3);
                apply_pauli_dense(state, pp);
                break;
            }
            case GateKind::CNOT:
                for (std::size_t idx = 0; idx < state.amp.size(); ++idx)
                    if (qbit(idx, g.q1, c.n) && !qbit(idx, g.q2, c.n))
                        std::swap(state.amp[idx], state.amp[idx | qmask(g.q2, c.n)]);
                break;
            case GateKind::CZ:
                for (std::size_t idx = 0; idx < state.amp.size(); ++idx)
                    if (qbit(idx, g.q1, c.n) && qbit(idx, g.q2, c.n)) state.amp[idx] = -state.amp[idx];
                break;
            case GateKind::CY:
                for (std::size_t idx = 0; idx < state.amp.size(); ++idx)
                    if (qbit(idx, g.q1, c.n) && !qbit(idx, g.q2, c.n)) {
                        std::size_t other = idx | qmask(g.q2, c.n);
                        cplx a0 = state.amp[idx], a1 = state.amp[other];
                        state.amp[idx] = -kI * a1;
                        state.amp[other] = kI * a0;
                    }
                break;
            case GateKind::SWAP:
                for (std::size_t idx = 0; idx < state.amp.size(); ++idx)
                    if (qbit(idx, g.q1, c.n) && !qbit(idx, g.q2, c.n))
                        std::swap(state.amp[idx],
                                  state.amp[(idx ^ qmask(g.q1, c.n)) | qmask(g.q2, c.n)]);
                break;
            case GateKind::TOFFOLI:
                for (std::size_t idx = 0; idx < state.amp.size(); ++idx)
                    if (qbit(idx, g.q1, c.n) && qbit(idx, g.q2, c.n) && !qbit(idx, g.q3, c.n))
                        std::swap(state.amp[idx], state.amp[idx | qmask(g.q3, c.n)]);
                break;
            case GateKind::MEASURE: {
                Pauli obs = g.observable;
                if (obs.n < c.n) {
                    Pauli ext(c.n);
                    ext.phase = obs.phase;
                    for (std::size_t q = 0; q < obs.n; ++q) ext.set_letter(q, obs.letter(q));
                    obs = ext;
                }
                DenseState ps = state;
                apply_pauli_dense(ps, obs);
                DenseState plus = state, minus = state;
                double pplus = 0.0, pminus = 0.0;
                for (std::size_t idx = 0; idx < state.amp.size(); ++idx) {
                    plus.amp[idx] = 0.5 * (state.amp[idx] + ps.amp[idx]);
                    minus.amp[idx] = 0.5 * (state.amp[idx] - ps.amp[idx]);
                    pplus += std::norm(plus.amp[idx]);
                    pminus += std::norm(minus.amp[idx]);
                }
                int outcome;
                if (g.forced_outcome) {
                    outcome = g.forced_outcome;
                    if ((outcome > 0 ? pplus : pminus) < 1e-12)
                        throw input_error("run_circuit_dense: forced outcome has probability zero");
                } else {
                    outcome = pplus >= 1e-12 ? +1 : -1;
                }
                state = outcome > 0 ? plus : minus;
                state.normalize();
                if (outcome < 0 && g.has_correction) {
                    Pauli corr = g.correction;
                    if (corr.n < c.n) {
                        Pauli ext(c.n);
                        ext.phase = corr.phase;
                        for (std::size_t q = 0; q < corr.n; ++q) ext.set_letter(q, corr.letter(q));
                        corr = ext;
                    }
                    apply_pauli_dense(state, corr);
                }
                break;
            }
        }
    }
    return state;
}

namespace {

Eigen::MatrixXcd sigma_matrix(int letter) {
    Eigen::MatrixXcd m(2, 2);
    switch (letter) {
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 1, 0, 0, -1; break;
        case 3: m << 0, -kI, kI, 0; break;
        default: m << 1, 0, 0, 1; break;
    }
    return m;
}

Eigen::MatrixXcd pauli_string_matrix(const std::string& letters) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (char ch : letters) {
        int l = ch == 'X' ? 1 : ch == 'Z' ? 2 : ch == 'Y' ? 3 : 0;
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        next.setZero();
        Eigen::MatrixXcd s = sigma_matrix(l);
        for (Eigen::Index a = 0; a < m.rows(); ++a)
            for (Eigen::Index b = 0; b < m.cols(); ++b)
                if (m(a, b) != cplx(0.0)) next.block(a * 2, b * 2, 2, 2) = m(a, b) * s;
        m = next;
    }
    return m;
}

}  // namespace

ToffoliAncillaReport toffoli_ancilla_check() {
    ToffoliAncillaReport rep;
    Eigen::MatrixXcd id8 = Eigen::MatrixXcd::Identity(8, 8);
    Eigen::MatrixXcd z1 = pauli_string_matrix("ZII"), z2 = pauli_string_matrix("IZI"),
                     z3 = pauli_string_matrix("IIZ"), x1 = pauli_string_matrix("XII"),
                     x2 = pauli_string_matrix("IXI"), x3 = pauli_string_matrix("IIX");
    Eigen::MatrixXcd m1 = 0.5 * (id8 + z2 + (id8 - z2) * x3) * x1;
    Eigen::MatrixXcd m2 = 0.5 * (id8 + z1 + (id8 - z1) * x3) * x2;
    Eigen::MatrixXcd m3 = 0.5 * (id8 + z1 + (id8 - z1) * z2) * z3;

    Eigen::VectorXcd a(8), b(8);
    a.setZero();
    b.setZero();
    a(0b000) = a(0b010) = a(0b100) = a(0b111) = 0.5;
    b(0b001) = b(0b011) = b(0b101) = b(0b110) = 0.5;

    rep.ancilla_fixed = (m1 * a - a).norm() < 1e-12 && (m2 * a - a).norm() < 1e-12 &&
                        (m3 * a - a).norm() < 1e-12;
    rep.companion_negated = (m3 * b + b).norm() < 1e-12;

    Eigen::VectorXcd cube(8);
    for (int i = 0; i < 8; ++i) cube(i) = 1.0 / (2.0 * std::sqrt(2.0));
    Eigen::VectorXcd sum = (a + b) / (a + b).norm();
    rep.sum_is_plus_cube = (sum - cube).norm() < 1e-12;

    // Toffoli on (1,2;3) conjugates X1 to M1 and Z3 to M3.
    Eigen::MatrixXcd t = id8;
    t(0b110, 0b110) = t(0b111, 0b111) = 0.0;
    t(0b110, 0b111) = t(0b111, 0b110) = 1.0;
    rep.conjugation_ok = (t * x1 * t.adjoint() - m1).cwiseAbs().maxCoeff() < 1e-12 &&
                         (t * x2 * t.adjoint() - m2).cwiseAbs().maxCoeff() < 1e-12 &&
                         (t * z3 * t.adjoint() - m3).cwiseAbs().maxCoeff() < 1e-12 &&
                         (t * x3 * t.adjoint() - x3).cwiseAbs().maxCoeff() < 1e-12 &&
                         (t * z1 * t.adjoint() - z1).cwiseAbs().maxCoeff() < 1e-12;
    return rep;
}

namespace {

// One damping-error factor per affected qubit: A = sigma_x (I - sigma_z) has
// order 1, B = I - sigma_z order 2.
struct DampingOp {
    std::vector<std::pair<std::size_t, bool>> factors;  // (qubit, is_B)
    std::size_t order = 0;
    std::size_t damp_events = 0;  // number of A factors
};

void apply_damping(DenseState& s, const DampingOp& op, bool dagger) {
    for (const auto& [q, is_b] : op.factors) {
        std::size_t mask = std::size_t(1) << (s.n - 1 - q);
        for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
            if (idx & mask) continue;
            cplx a0 = s.amp[idx], a1 = s.amp[idx | mask];
            if (is_b) {
                // B = I - Z: kills |0>, doubles |1>; Hermitian.
                s.amp[idx] = 0.0;
                s.amp[idx | mask] = 2.0 * a1;
            } else if (!dagger) {
                // A: |1> -> 2|0>, |0> -> 0.
                s.amp[idx] = 2.0 * a1;
                s.amp[idx | mask] = 0.0;
            } else {
                // A^dag: |0> -> 2|1>, |1> -> 0.
                s.amp[idx | mask] = 2.0 * a0;
                s.amp[idx] = 0.0;
            }
        }
    }
}

}  // namespace

AmpDampingReport amplitude_damping_check(const StabilizerCode& code, std::size_t t) {
    check_size(code.n, 12);
    if (t == 0 || t > 4) throw input_error("amplitude_damping_check: unsupported order");
    std::size_t budget = 2 * t;

    // All assignments of A/B factors to distinct qubits with total order
    // (1 per A, 2 per B) at most `budget`.
    std::vector<DampingOp> frontier = {DampingOp{}};
    for (std::size_t q = 0; q < code.n; ++q) {
        std::vector<DampingOp> next;
        for (const auto& op : frontier) {
            next.push_back(op);
            for (bool is_b : {false, true}) {
                std::size_t cost = is_b ? 2 : 1;
                if (op.order + cost > budget) continue;
                // A side of the condition holds at most t damping events; B
                // factors come from the no-damping Kraus term and are only
                // limited by their epsilon order.
                if (!is_b && op.damp_events + 1 > t) continue;
                DampingOp ext = op;
                ext.factors.push_back({q, is_b});
                ext.order += cost;
                if (!is_b) ++ext.damp_events;
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    std::vector<DampingOp> ops = std::move(frontier);

    std::vector<DenseState> words = codeword_states(code);
    std::size_t dim = words.size();

    AmpDampingReport rep;
    rep.ok = true;
    for (std::size_t a = 0; a < ops.size(); ++a)
        for (std::size_t b = 0; b < ops.size(); ++b) {
            if (ops[a].order + ops[b].order > budget) continue;
            ++rep.pairs_checked;
            cplx diag = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                DenseState left = words[i];
                apply_damping(left, ops[a], false);
                for (std::size_t j = 0; j < dim; ++j) {
                    DenseState right = words[j];
                    apply_damping(right, ops[b], false);
                    cplx ip = 0.0;
                    for (std::size_t idx = 0; idx < left.amp.size(); ++idx)
                        ip += std::conj(left.amp[idx]) * right.amp[idx];
                    if (i != j)
                        rep.max_violation = std::max(rep.max_violation, std::abs(ip));
                    else if (i == 0)
                        diag = ip;
                    else
                        rep.max_violation = std::max(rep.max_violation, std::abs(ip - diag));
                }
            }
        }
    rep.ok = rep.max_violation < 1e-10;
    return rep;
}

NonadditiveReport nonadditive_projector_check() {
    auto cyc = [](const std::string& letters) {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(32, 32);
        std::string s = letters;
        for (int shift = 0; shift < 5; ++shift) {
            sum += pauli_string_matrix(s);
            std::rotate(s.begin(), s.begin() + 4, s.end());
        }
        return sum;
    };
    Eigen::MatrixXcd p = (3.0 * Eigen::MatrixXcd::Identity(32, 32) + cyc("IZYYZ") +
                          cyc("IXZZX") - cyc("IYXXY") + 2.0 * cyc("ZXYYX") -
                          2.0 * pauli_string_matrix("ZZZZZ")) /
                         16.0;
    NonadditiveReport rep;
    rep.trace_re = p.trace().real();
    rep.trace_im = p.trace().imag();
    rep.idempotent_residual = (p * p - p).cwiseAbs().maxCoeff();
    static const char letters[3] = {'X', 'Z', 'Y'};
    for (std::size_t q = 0; q < 5; ++q)
        for (char l : letters) {
            std::string s(5, 'I');
            s[q] = l;
            Eigen::MatrixXcd sg = pauli_string_matrix(s);
            double overlap = (p * (sg * p * sg)).cwiseAbs().maxCoeff();
            rep.conjugate_overlap = std::max(rep.conjugate_overlap, overlap);
        }
    return rep;
}

}  // namespace qec
