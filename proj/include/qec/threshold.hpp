#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qec {

// Integer polynomial in the three level-(j-1) error rates (pg, ps, ptof).
// All recursion coefficients are expanded from the correction-cycle
// template at runtime rather than hard-coded.
class RatePolynomial {
public:
    using Monomial = std::array<int, 3>;  // exponents of (pg, ps, ptof)

    static RatePolynomial constant(long long c);
    static RatePolynomial gate();     // pg
    static RatePolynomial storage();  // ps
    static RatePolynomial toffoli();  // ptof

    RatePolynomial operator+(const RatePolynomial& o) const;
    RatePolynomial operator*(const RatePolynomial& o) const;
    RatePolynomial operator*(long long c) const;

    long long coefficient(int pg_deg, int ps_deg, int ptof_deg) const;
    double eval(double pg, double ps, double ptof) const;

    const std::map<Monomial, long long>& terms() const { return terms_; }

private:
    std::map<Monomial, long long> terms_;
};

// Error-correction cycle failure rate feeding level `level + 1`:
// 12 pg + [15 + 43*level] ps, or 12 pg + 9 ps when ancillas are prepared
// just in time.
RatePolynomial p_ec_polynomial(std::size_t level, bool just_in_time = false);

// 21 [p^2 + 4 p p_EC + 8 p_EC^2].
RatePolynomial correction_template(const RatePolynomial& p,
                                   const RatePolynomial& p_ec);

RatePolynomial gate_recursion(std::size_t level, bool just_in_time = false);
RatePolynomial storage_recursion(std::size_t level, bool just_in_time = false);
// Storage-free, perfect-cat-state limit of the Toffoli accumulation.
RatePolynomial toffoli_recursion();

struct ErrorModelParams {
    double p_g = 0.0;
    double p_stor = 0.0;
    double p_tof = 0.0;
    double p_cat = 0.0;
    double t_cat = 1.0;
    double t_meas = 1.0;
    bool just_in_time = false;
};

struct LevelState {
    std::size_t level = 0;  // j
    double pg = 0.0;
    double ps = 0.0;
    double ptof = 0.0;
    double t_prep = 0.0;  // 43 j by default
    double t_tof = 1.0;
};

// Numeric p_EC for the correction cycle built on top of `state`.
double p_ec(const LevelState& state, bool just_in_time = false);

double recurse_gate(const LevelState& state, bool just_in_time = false);
double recurse_storage(const LevelState& state, bool just_in_time = false);

// Error-correction placement tuned to the error rate: number of steps
// between corrections and the resulting next-level gate rate.
double optimal_steps(double p_ec_value, double p);
double recurse_optimized(double p_ec_value, double p);

// Full per-qubit error accumulation through the three-ancilla gate
// construction, including cat-state and storage contributions.
struct ToffoliLedger {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double accumulated = 0.0;  // worst per-qubit total entering correction
    double next_p_tof = 0.0;
    double next_t_tof = 0.0;
};

ToffoliLedger toffoli_ledger(const LevelState& state, const ErrorModelParams& params);

enum class ThresholdMode {
    gates_only,
    storage_only,
    just_in_time_gates,
    just_in_time_equal,
    optimized_n,
    toffoli,
};

ThresholdMode threshold_mode_from_name(const std::string& name);
std::string threshold_mode_name(ThresholdMode mode);

// Largest starting rate whose 20-level recursion still converges,
// located by 60 bisection steps on (0, 0.1).
double solve_threshold(ThresholdMode mode);

// Level-by-level table (j, pg, ps, ptof, t_prep, t_tof) as CSV.
std::string level_table_csv(ThresholdMode mode, double p0, std::size_t levels);

}  // namespace qec
