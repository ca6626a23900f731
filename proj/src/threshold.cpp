#include "qec/threshold.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "qec/pauli.hpp"

namespace qec {

RatePolynomial RatePolynomial::constant(long long c) {
    RatePolynomial p;
    if (c) p.terms_[{0, 0, 0}] = c;
    return p;
}

RatePolynomial RatePolynomial::gate() {
    RatePolynomial p;
    p.terms_[{1, 0, 0}] = 1;
    return p;
}

RatePolynomial RatePolynomial::storage() {
    RatePolynomial p;
    p.terms_[{0, 1, 0}] = 1;
    return p;
}

RatePolynomial RatePolynomial::toffoli() {
    RatePolynomial p;
    p.terms_[{0, 0, 1}] = 1;
    return p;
}

RatePolynomial RatePolynomial::operator+(const RatePolynomial& o) const {
    RatePolynomial out = *this;
    for (const auto& [m, c] : o.terms_) {
        long long& slot = out.terms_[m];
        slot += c;
        if (slot == 0) out.terms_.erase(m);
    }
    return out;
}

RatePolynomial RatePolynomial::operator*(const RatePolynomial& o) const {
    RatePolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            long long& slot = out.terms_[m];
            slot += ca * cb;
            if (slot == 0) out.terms_.erase(m);
        }
    return out;
}

RatePolynomial RatePolynomial::operator*(long long c) const {
    return *this * RatePolynomial::constant(c);
}

long long RatePolynomial::coefficient(int pg_deg, int ps_deg, int ptof_deg) const {
    auto it = terms_.find({pg_deg, ps_deg, ptof_deg});
    return it == terms_.end() ? 0 : it->second;
}

double RatePolynomial::eval(double pg, double ps, double ptof) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_)
        total += double(c) * std::pow(pg, m[0]) * std::pow(ps, m[1]) *
                 std::pow(ptof, m[2]);
    return total;
}

RatePolynomial p_ec_polynomial(std::size_t level, bool just_in_time) {
    long long wait = just_in_time ? 9 : 15 + 43 * (long long)level;
    return RatePolynomial::gate() * 12 + RatePolynomial::storage() * wait;
}

RatePolynomial correction_template(const RatePolynomial& p,
                                   const RatePolynomial& p_ec) {
    return (p * p + p * p_ec * 4 + p_ec * p_ec * 8) * 21;
}

RatePolynomial gate_recursion(std::size_t level, bool just_in_time) {
    if (level == 0) throw input_error("recursion needs level >= 1");
    return correction_template(RatePolynomial::gate(),
                               p_ec_polynomial(level - 1, just_in_time));
}

RatePolynomial storage_recursion(std::size_t level, bool just_in_time) {
    if (level == 0) throw input_error("recursion needs level >= 1");
    return correction_template(RatePolynomial::storage(),
                               p_ec_polynomial(level - 1, just_in_time));
}

RatePolynomial toffoli_recursion() {
    RatePolynomial acc =
        RatePolynomial::gate() * 27 + RatePolynomial::toffoli() * 6;
    return correction_template(acc, RatePolynomial::gate() * 12);
}

double p_ec(const LevelState& state, bool just_in_time) {
    double wait = just_in_time ? 9.0 : 15.0 + 43.0 * double(state.level);
    return 12.0 * state.pg + wait * state.ps;
}

namespace {

double correction_value(double p, double ec) {
    return 21.0 * (p * p + 4.0 * p * ec + 8.0 * ec * ec);
}

}  // namespace

double recurse_gate(const LevelState& state, bool just_in_time) {
    return correction_value(state.pg, p_ec(state, just_in_time));
}

double recurse_storage(const LevelState& state, bool just_in_time) {
    return correction_value(state.ps, p_ec(state, just_in_time));
}

double optimal_steps(double p_ec_value, double p) {
    if (p <= 0.0) throw input_error("optimal step count needs p > 0");
    return std::sqrt(8.0) * p_ec_value / p;
}

double recurse_optimized(double p_ec_value, double p) {
    double n = optimal_steps(p_ec_value, p);
    return (21.0 / n) * (16.0 + 8.0 * std::sqrt(2.0)) * p_ec_value * p_ec_value;
}

ToffoliLedger toffoli_ledger(const LevelState& state, const ErrorModelParams& params) {
    double wait = 6.0 * params.t_cat + 9.0 * params.t_meas + 12.0 * state.t_tof + 41.0;
    ToffoliLedger ledger;
    ledger.a1 = wait * state.ps + 9.0 * params.p_cat + 26.0 * state.pg + 6.0 * state.ptof;
    ledger.a2 = wait * state.ps + 9.0 * params.p_cat + 27.0 * state.pg + 6.0 * state.ptof;
    ledger.a3 = ledger.a2;
    ledger.accumulated = ledger.a2;
    ledger.next_p_tof = correction_value(ledger.accumulated,
                                         p_ec(state, params.just_in_time));
    ledger.next_t_tof = params.t_cat + 2.0 * params.t_meas + 3.0 * state.t_tof + 12.0;
    return ledger;
}

ThresholdMode threshold_mode_from_name(const std::string& name) {
    if (name == "gates_only") return ThresholdMode::gates_only;
    if (name == "storage_only") return ThresholdMode::storage_only;
    if (name == "just_in_time_gates") return ThresholdMode::just_in_time_gates;
    if (name == "just_in_time_equal") return ThresholdMode::just_in_time_equal;
    if (name == "optimized_n") return ThresholdMode::optimized_n;
    if (name == "toffoli") return ThresholdMode::toffoli;
    throw input_error("unknown threshold mode: " + name);
}

std::string threshold_mode_name(ThresholdMode mode) {
    switch (mode) {
        case ThresholdMode::gates_only: return "gates_only";
        case ThresholdMode::storage_only: return "storage_only";
        case ThresholdMode::just_in_time_gates: return "just_in_time_gates";
        case ThresholdMode::just_in_time_equal: return "just_in_time_equal";
        case ThresholdMode::optimized_n: return "optimized_n";
        case ThresholdMode::toffoli: return "toffoli";
    }
    throw internal_error("bad threshold mode");
}

namespace {

struct ModeState {
    double pg = 0.0;
    double ps = 0.0;
    double ptof = 0.0;
    double t_tof = 1.0;
};

ModeState initial_state(ThresholdMode mode, double p0) {
    ModeState s;
    switch (mode) {
        case ThresholdMode::gates_only:
        case ThresholdMode::optimized_n:
        case ThresholdMode::just_in_time_gates:
            s.pg = p0;
            break;
        case ThresholdMode::storage_only:
        case ThresholdMode::just_in_time_equal:
            s.pg = s.ps = p0;
            break;
        case ThresholdMode::toffoli:
            s.ptof = p0;
            break;
    }
    return s;
}

ModeState step(ThresholdMode mode, const ModeState& s, std::size_t next_level) {
    ModeState out = s;
    LevelState lv;
    lv.level = next_level - 1;
    lv.pg = s.pg;
    lv.ps = s.ps;
    lv.ptof = s.ptof;
    lv.t_tof = s.t_tof;
    switch (mode) {
        case ThresholdMode::gates_only:
            out.pg = recurse_gate(lv);
            break;
        case ThresholdMode::storage_only:
            out.pg = out.ps = recurse_storage(lv);
            break;
        case ThresholdMode::just_in_time_gates:
        case ThresholdMode::just_in_time_equal:
            out.pg = recurse_gate(lv, true);
            out.ps = recurse_storage(lv, true);
            break;
        case ThresholdMode::optimized_n:
            out.pg = s.pg > 0.0 ? recurse_optimized(12.0 * s.pg, s.pg) : 0.0;
            break;
        case ThresholdMode::toffoli: {
            ErrorModelParams params;  // storage-free, perfect cat states
            ToffoliLedger ledger = toffoli_ledger(lv, params);
            out.ptof = ledger.next_p_tof;
            out.t_tof = ledger.next_t_tof;
            out.pg = correction_value(s.pg, 12.0 * s.pg);
            break;
        }
    }
    return out;
}

double mode_rate(const ModeState& s) {
    return std::max(std::max(s.pg, s.ps), s.ptof);
}

bool diverges(ThresholdMode mode, double p0) {
    ModeState s = initial_state(mode, p0);
    for (std::size_t j = 1; j <= 20; ++j) {
        s = step(mode, s, j);
        if (mode_rate(s) > 0.5) return true;
    }
    return mode_rate(s) >= 1e-30;
}

}  // namespace

double solve_threshold(ThresholdMode mode) {
    double lo = 0.0, hi = 0.1;
    if (!diverges(mode, hi))
        throw feasibility_error("threshold does not bracket on (0, 0.1)");
    for (int iter = 0; iter < 60; ++iter) {
        double mid = 0.5 * (lo + hi);
        (diverges(mode, mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string level_table_csv(ThresholdMode mode, double p0, std::size_t levels) {
    std::ostringstream out;
    out << "j,pg,ps,ptof,t_prep,t_tof\n" << std::setprecision(10);
    ModeState s = initial_state(mode, p0);
    bool jit = mode == ThresholdMode::just_in_time_gates ||
               mode == ThresholdMode::just_in_time_equal;
    for (std::size_t j = 0; j <= levels; ++j) {
        double t_prep = jit ? 0.0 : 43.0 * double(j);
        out << j << ',' << s.pg << ',' << s.ps << ',' << s.ptof << ','
            << t_prep << ',' << s.t_tof << '\n';
        if (j < levels) s = step(mode, s, j + 1);
    }
    return out.str();
}

}  // namespace qec
