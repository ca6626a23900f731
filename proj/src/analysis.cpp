#include "qec/analysis.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace qec {

namespace {

// Row-reduced generator check matrix for fast phaseless membership tests.
struct MembershipTester {
    BitMat rows;
    std::vector<std::size_t> pivots;

    explicit MembershipTester(const StabilizerCode& code) {
        rows = check_matrix(code);
        gf2_eliminate(rows, true, &pivots);
        while (!rows.empty() && !rows.back().any()) rows.pop_back();
    }

    bool contains(const Pauli& p) const {
        BitVec row = BitVec::concat(p.x, p.z);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (row.get(pivots[i])) row ^= rows[i];
        return !row.any();
    }
};

double search_cost(std::size_t n, std::size_t cap) {
    double total = 0.0, binom = 1.0, pow3 = 1.0;
    for (std::size_t w = 1; w <= cap && w <= n; ++w) {
        binom = binom * double(n - w + 1) / double(w);
        pow3 *= 3.0;
        total += binom * pow3;
    }
    return total;
}

// Visit every Pauli of weight exactly w (phase 0); stop early when f returns true.
template <typename F>
bool for_each_weight(std::size_t n, std::size_t w, F&& f) {
    std::vector<std::size_t> support(w);
    std::vector<int> letters(w);
    Pauli p(n);
    auto assign = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == w) return f(p);
        for (int letter = 1; letter <= 3; ++letter) {
            p.set_letter(support[pos], letter);
            if (self(self, pos + 1)) return true;
        }
        p.set_letter(support[pos], 0);
        return false;
    };
    auto choose = [&](auto&& self, std::size_t start, std::size_t pos) -> bool {
        if (pos == w) {
            if (assign(assign, 0)) return true;
            return false;
        }
        for (std::size_t q = start; q + (w - pos) <= n; ++q) {
            support[pos] = q;
            if (self(self, q + 1, pos + 1)) return true;
            p.set_letter(q, 0);
        }
        return false;
    };
    return choose(choose, 0, 0);
}

bool zero_syndrome(const StabilizerCode& code, const Pauli& p) {
    for (const auto& g : code.generators)
        if (commutes(g, p)) return false;
    return true;
}

using int128 = __int128;
using uint128 = unsigned __int128;

std::vector<std::vector<long long>> binomial_table(std::size_t n) {
    std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
}

// Shared kernel of the two transforms; shadow flips the sign to (-1)^{d'-s}.
EnumeratorPolynomial transform_kernel(const EnumeratorPolynomial& A, std::size_t n,
                                      std::size_t k, bool shadow) {
    if (A.coefficients.size() != n + 1)
        throw input_error("transform: expected " + std::to_string(n + 1) + " coefficients");
    auto C = binomial_table(n);
    std::vector<int128> pow3(n + 1);
    pow3[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;

    EnumeratorPolynomial B;
    B.coefficients.assign(n + 1, 0);
    for (std::size_t d = 0; d <= n; ++d) {
        int128 acc = 0;
        for (std::size_t dp = 0; dp <= n; ++dp) {
            if (A.coefficients[dp] == 0) continue;
            int128 inner = 0;
            for (std::size_t s = 0; s <= dp && s <= d; ++s) {
                if (d - s > n - dp) continue;
                int128 term = pow3[d - s] * C[dp][s] * C[n - dp][d - s];
                bool negative = shadow ? ((dp - s) & 1) : (s & 1);
                inner += negative ? -term : term;
            }
            acc += inner * A.coefficients[dp];
        }
        int128 denom = int128(1) << (n - k);
        if (acc % denom != 0 || acc < 0)
            throw input_error("transform: output coefficient " + std::to_string(d) +
                              " is not a nonnegative integer; input is not a valid enumerator");
        B.coefficients[d] = (long long)(acc / denom);
    }
    return B;
}

uint128 pow2_128(std::size_t e) { return uint128(1) << e; }

}  // namespace

DistanceReport distance(const StabilizerCode& code, std::size_t cap) {
    if (cap == 0) cap = code.n;
    double cost = search_cost(code.n, cap);
    if (cost > 5e8)
        throw feasibility_error("distance: search needs about " + std::to_string(cost) +
                                " operator checks; lower the cap");
    MembershipTester member(code);
    DistanceReport rep;
    for (std::size_t w = 1; w <= cap; ++w) {
        bool found = for_each_weight(code.n, w, [&](const Pauli& p) {
            if (!zero_syndrome(code, p)) return false;
            bool in_s = member.contains(p);
            if (code.k == 0 || in_s) {
                // Nontrivial stabilizer element; for k = 0 this is the distance.
                if (code.k == 0) {
                    rep.witness = p;
                    rep.has_witness = true;
                    return true;
                }
                if (!rep.has_degeneracy_witness) {
                    rep.degeneracy_witness = p;
                    rep.has_degeneracy_witness = true;
                }
                return false;
            }
            rep.witness = p;
            rep.has_witness = true;
            return true;
        });
        if (found) {
            rep.distance = w;
            rep.exact = true;
            rep.degenerate = rep.has_degeneracy_witness &&
                             weight(rep.degeneracy_witness) < rep.distance;
            return rep;
        }
    }
    rep.distance = cap + 1;
    rep.exact = false;
    rep.degenerate = rep.has_degeneracy_witness;
    return rep;
}

std::pair<EnumeratorPolynomial, EnumeratorPolynomial>
weight_enumerators(const StabilizerCode& code, std::size_t n_cap) {
    if (code.n > n_cap)
        throw feasibility_error("weight_enumerators: n = " + std::to_string(code.n) +
                                " exceeds the enumeration cap " + std::to_string(n_cap));
    EnumeratorPolynomial A, B;
    A.coefficients.assign(code.n + 1, 0);
    B.coefficients.assign(code.n + 1, 0);
    for (const auto& e : stabilizer_elements(code)) A.coefficients[weight(e)]++;

    std::vector<std::uint64_t> gx, gz;
    for (const auto& g : code.generators) {
        gx.push_back(code.n ? g.x.word(0) : 0);
        gz.push_back(code.n ? g.z.word(0) : 0);
    }
    std::uint64_t lim = 1ull << code.n;
    for (std::uint64_t ex = 0; ex < lim; ++ex) {
        for (std::uint64_t ez = 0; ez < lim; ++ez) {
            bool normalizer = true;
            for (std::size_t g = 0; g < gx.size(); ++g)
                if (std::popcount((gx[g] & ez) ^ (gz[g] & ex)) & 1) {
                    normalizer = false;
                    break;
                }
            if (normalizer) B.coefficients[std::popcount(ex | ez)]++;
        }
    }
    return {A, B};
}

EnumeratorPolynomial macwilliams_transform(const EnumeratorPolynomial& A,
                                           std::size_t n, std::size_t k) {
    return transform_kernel(A, n, k, false);
}

EnumeratorPolynomial shadow_transform(const EnumeratorPolynomial& A,
                                      std::size_t n, std::size_t k) {
    return transform_kernel(A, n, k, true);
}

EnumeratorPolynomial shadow_enumerator(const StabilizerCode& code, std::size_t n_cap) {
    if (code.n > n_cap)
        throw feasibility_error("shadow_enumerator: n = " + std::to_string(code.n) +
                                " exceeds the enumeration cap " + std::to_string(n_cap));
    EnumeratorPolynomial S;
    S.coefficients.assign(code.n + 1, 0);
    std::vector<std::uint64_t> gx, gz;
    std::vector<unsigned> gparity;
    for (const auto& g : code.generators) {
        gx.push_back(code.n ? g.x.word(0) : 0);
        gz.push_back(code.n ? g.z.word(0) : 0);
        gparity.push_back(weight(g) & 1);
    }
    std::uint64_t lim = 1ull << code.n;
    for (std::uint64_t ex = 0; ex < lim; ++ex) {
        for (std::uint64_t ez = 0; ez < lim; ++ez) {
            bool in_shadow = true;
            for (std::size_t g = 0; g < gx.size(); ++g)
                if ((std::popcount((gx[g] & ez) ^ (gz[g] & ex)) & 1) != int(gparity[g])) {
                    in_shadow = false;
                    break;
                }
            if (in_shadow) S.coefficients[std::popcount(ex | ez)]++;
        }
    }
    return S;
}

BoundEvaluation hamming_bound(std::size_t n, std::size_t k, std::size_t t) {
    if (n > 100) throw feasibility_error("hamming_bound: n too large for exact arithmetic");
    BoundEvaluation ev{n, k, t, false, false, 0.0};
    uint128 lhs = 0, binom = 1, pow3 = 1;
    for (std::size_t j = 0; j <= t && j <= n; ++j) {
        if (j > 0) {
            binom = binom * (n - j + 1) / j;
            pow3 *= 3;
        }
        lhs += pow3 * binom;
    }
    lhs *= pow2_128(k);
    uint128 rhs = pow2_128(n);
    ev.satisfied = lhs <= rhs;
    ev.equality = lhs == rhs;
    ev.margin = ev.satisfied ? double(rhs - lhs) : -double(lhs - rhs);
    return ev;
}

BoundEvaluation kl_bound(std::size_t n, std::size_t k, std::size_t d) {
    BoundEvaluation ev{n, k, d, false, false, 0.0};
    long long lhs = (long long)n;
    long long rhs = 2 * ((long long)d - 1) + (long long)k;
    ev.satisfied = lhs >= rhs;
    ev.equality = lhs == rhs;
    ev.margin = double(lhs - rhs);
    return ev;
}

BoundEvaluation gv_bound(std::size_t n, std::size_t k, std::size_t d) {
    if (n > 100) throw feasibility_error("gv_bound: n too large for exact arithmetic");
    BoundEvaluation ev{n, k, d, false, false, 0.0};
    uint128 lhs = 0, binom = 1, pow3 = 1;
    for (std::size_t j = 0; j + 1 <= d && j <= n; ++j) {
        if (j > 0) {
            binom = binom * (n - j + 1) / j;
            pow3 *= 3;
        }
        lhs += pow3 * binom;
    }
    lhs *= pow2_128(k);
    uint128 rhs = pow2_128(n);
    ev.satisfied = lhs >= rhs;
    ev.equality = lhs == rhs;
    ev.margin = ev.satisfied ? double(lhs - rhs) : -double(rhs - lhs);
    return ev;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw input_error("binary_entropy: argument outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

AsymptoticRates asymptotic_rates(double p) {
    if (p < 0.0 || p > 1.0) throw input_error("asymptotic_rates: p outside [0,1]");
    const double log2_3 = std::log2(3.0);
    AsymptoticRates r;
    r.hamming = 1.0 - p * log2_3 - binary_entropy(p);
    r.kl = 1.0 - 4.0 * p;
    r.gv = 2.0 * p <= 1.0
               ? 1.0 - 2.0 * p * log2_3 - binary_entropy(2.0 * p)
               : std::numeric_limits<double>::quiet_NaN();
    double x = 2.0 * p - 4.0 * p * p / 3.0;
    r.deg_stab = 1.0 - (x / 2.0) * log2_3 - binary_entropy(x) / 2.0;
    r.erasure_1epp = 1.0 - 2.0 * p;
    r.erasure_2epp = 1.0 - p;
    return r;
}

}  // namespace qec
