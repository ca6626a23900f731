#include "qec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "qec/analysis.hpp"

namespace qec {

namespace {

std::uint64_t split_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_double(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

// x|z row with the halves swapped, so dot() against it gives the
// symplectic product.
BitVec symplectic_partner(const BitVec& row, std::size_t n) {
    return BitVec::concat(row.slice(n, n), row.slice(0, n));
}

template <typename TrialFn>
MonteCarloResult run_trials(std::size_t trials, std::uint64_t seed,
                            std::size_t jobs, TrialFn&& trial_fails) {
    jobs = std::max<std::size_t>(1, std::min(jobs, trials ? trials : 1));
    std::vector<std::size_t> counts(jobs, 0);
    auto worker = [&](std::size_t w) {
        std::size_t c = 0;
        for (std::size_t t = w; t < trials; t += jobs) {
            std::mt19937_64 rng(split_stream(seed, t));
            if (trial_fails(rng)) ++c;
        }
        counts[w] = c;
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    MonteCarloResult res;
    res.trials = trials;
    for (auto c : counts) res.failures += c;
    res.seed = seed;
    if (trials) {
        res.failure_rate = double(res.failures) / double(trials);
        res.std_error =
            std::sqrt(res.failure_rate * (1.0 - res.failure_rate) / double(trials));
    }
    return res;
}

}  // namespace

bool erasure_correctable(const StabilizerCode& code, const ErasurePattern& pattern) {
    std::vector<bool> seen(code.n, false);
    for (auto q : pattern.erased) {
        if (q >= code.n) throw input_error("erasure index out of range");
        if (seen[q]) throw input_error("duplicate erasure index");
        seen[q] = true;
    }
    std::size_t e = pattern.erased.size();
    if (e == 0) return true;

    BitMat vbasis;
    for (auto q : pattern.erased) {
        BitVec xq(2 * code.n), zq(2 * code.n);
        xq.set(q, true);
        zq.set(code.n + q, true);
        vbasis.push_back(xq);
        vbasis.push_back(zq);
    }
    BitMat gens = check_matrix(code);

    // dim(V cap S) = dim V + dim S - dim(V + S).
    BitMat joint = gens;
    joint.insert(joint.end(), vbasis.begin(), vbasis.end());
    std::size_t dim_cap_s = 2 * e + gens.size() - gf2_rank(std::move(joint));

    // dim(V cap C(S)) = dim V - rank of the symplectic products against S.
    BitMat partners;
    for (const auto& g : gens) partners.push_back(symplectic_partner(g, code.n));
    BitMat products;
    for (const auto& v : vbasis) {
        BitVec row(partners.size());
        for (std::size_t i = 0; i < partners.size(); ++i)
            row.set(i, v.dot(partners[i]));
        products.push_back(std::move(row));
    }
    std::size_t dim_cap_c = 2 * e - gf2_rank(std::move(products));

    return dim_cap_c == dim_cap_s;
}

StabilizerCode random_stabilizer(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    if (k > n) throw input_error("k exceeds n");
    StabilizerCode code;
    code.n = n;
    code.k = k;
    code.name = "random";
    BitMat rows;
    BitMat partners;
    while (rows.size() < n - k) {
        BitMat basis = gf2_nullspace(partners, 2 * n);
        BitVec candidate(2 * n);
        do {
            candidate = BitVec(2 * n);
            for (const auto& b : basis)
                if (rng() & 1) candidate ^= b;
        } while (!candidate.any() || gf2_solve(rows, candidate).has_value());
        partners.push_back(symplectic_partner(candidate, n));
        rows.push_back(candidate);
        code.generators.push_back(
            pauli_from_row(candidate, (rng() & 1) ? 2 : 0));
    }
    return code;
}

MonteCarloResult erasure_monte_carlo(std::size_t n, std::size_t k, double p,
                                     std::size_t trials, std::uint64_t seed,
                                     std::size_t jobs) {
    if (p < 0.0 || p > 1.0) throw input_error("erasure probability outside [0, 1]");
    return run_trials(trials, seed, jobs, [&](std::mt19937_64& rng) {
        StabilizerCode code = random_stabilizer(n, k, rng);
        ErasurePattern pat;
        for (std::size_t q = 0; q < n; ++q)
            if (unit_double(rng) < p) pat.erased.push_back(q);
        return !erasure_correctable(code, pat);
    });
}

const Pauli& SyndromeTable::correction(const BitVec& syn) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < syn.size(); ++i)
        if (syn.get(i)) idx |= std::size_t(1) << i;
    return corrections.at(idx);
}

SyndromeTable build_syndrome_table(const StabilizerCode& code) {
    std::size_t r = code.n - code.k;
    if (r > 20) throw input_error("syndrome table too large");
    SyndromeTable table;
    table.n = code.n;
    std::size_t total = std::size_t(1) << r;
    table.corrections.assign(total, Pauli(code.n));
    std::vector<int> best_weight(total, -1);
    best_weight[0] = 0;
    std::size_t filled = 1;

    BitMat partners;
    for (const auto& g : code.generators)
        partners.push_back(symplectic_partner(pauli_row(g), code.n));

    auto offer = [&](const Pauli& cand, int w) {
        BitVec row = pauli_row(cand);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < partners.size(); ++i)
            if (row.dot(partners[i])) idx |= std::size_t(1) << i;
        if (best_weight[idx] < 0) {
            best_weight[idx] = w;
            table.corrections[idx] = cand;
            ++filled;
        } else if (best_weight[idx] == w &&
                   row < pauli_row(table.corrections[idx])) {
            table.corrections[idx] = cand;
        }
    };

    std::vector<std::size_t> support;
    Pauli cand(code.n);
    auto letters = [&](auto&& self, std::size_t pos) -> void {
        if (pos == support.size()) {
            offer(cand, int(support.size()));
            return;
        }
        for (int letter : {1, 2, 3}) {
            cand.set_letter(support[pos], letter);
            self(self, pos + 1);
        }
        cand.set_letter(support[pos], 0);
    };
    auto supports = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
        if (remaining == 0) {
            letters(letters, 0);
            return;
        }
        for (std::size_t q = from; q + remaining <= code.n; ++q) {
            support.push_back(q);
            self(self, q + 1, remaining - 1);
            support.pop_back();
        }
    };
    for (std::size_t w = 1; w <= code.n && filled < total; ++w)
        supports(supports, 0, w);
    if (filled < total) throw internal_error("syndrome table incomplete");
    return table;
}

namespace {

bool decode_fails(const StabilizerCode& code, const SyndromeTable& table,
                  const Pauli& err) {
    Pauli corr = table.correction(syndrome(code, err));
    return !in_stabilizer_phaseless(code, multiply(err, corr));
}

}  // namespace

MonteCarloResult depolarizing_monte_carlo(const StabilizerCode& code, double p,
                                          std::size_t trials, std::uint64_t seed,
                                          std::size_t jobs) {
    if (p < 0.0 || p > 1.0) throw input_error("error probability outside [0, 1]");
    SyndromeTable table = build_syndrome_table(code);
    // Letter codes drawn with probability p/3 each of X, Z, Y.
    return run_trials(trials, seed, jobs, [&](std::mt19937_64& rng) {
        Pauli err(code.n);
        for (std::size_t q = 0; q < code.n; ++q)
            if (unit_double(rng) < p) err.set_letter(q, 1 + int(rng() % 3));
        return decode_fails(code, table, err);
    });
}

double depolarizing_exact_failure(const StabilizerCode& code, double p) {
    if (code.n > 8) throw input_error("exact weighting limited to n <= 8");
    if (p < 0.0 || p > 1.0) throw input_error("error probability outside [0, 1]");
    SyndromeTable table = build_syndrome_table(code);
    double total = 0.0;
    std::size_t count = std::size_t(1) << (2 * code.n);
    for (std::size_t bits = 0; bits < count; ++bits) {
        Pauli err(code.n);
        double prob = 1.0;
        for (std::size_t q = 0; q < code.n; ++q) {
            int letter = int((bits >> (2 * q)) & 3);
            err.set_letter(q, letter);
            prob *= letter == 0 ? 1.0 - p : p / 3.0;
        }
        if (prob > 0.0 && decode_fails(code, table, err)) total += prob;
    }
    return total;
}

std::string capacity_curves(const std::vector<double>& p_grid) {
    std::ostringstream out;
    out << "p,hamming,kl,gv,deg_stab,erasure_1epp,erasure_2epp\n";
    out << std::setprecision(10);
    for (double p : p_grid) {
        if (p < 0.0 || p > 0.5) throw input_error("grid point outside [0, 0.5]");
        AsymptoticRates r = asymptotic_rates(p);
        out << p << ',' << r.hamming << ',' << r.kl << ',' << r.gv << ','
            << r.deg_stab << ',' << r.erasure_1epp << ',' << r.erasure_2epp << '\n';
    }
    return out.str();
}

}  // namespace qec
