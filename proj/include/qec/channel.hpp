#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qec/code.hpp"

namespace qec {

// Set of erased qubit positions (distinct, each < n).
struct ErasurePattern {
    std::vector<std::size_t> erased;
};

struct MonteCarloResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double failure_rate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

// True iff every zero-syndrome Pauli supported on the erased set lies in
// the stabilizer group, decided by GF(2) rank computations (no error
// enumeration).
bool erasure_correctable(const StabilizerCode& code, const ErasurePattern& pattern);

// Uniformly random [[n,k]] stabilizer group: n-k independent pairwise
// commuting generators with random signs. Logical operators are left empty.
StabilizerCode random_stabilizer(std::size_t n, std::size_t k, std::mt19937_64& rng);

// Each trial draws a fresh random [[n,k]] code, erases every qubit
// independently with probability p, and records whether the erasure
// pattern is correctable. Deterministic for a fixed seed; trial streams
// are split from the master seed, so the worker count never changes the
// counts.
MonteCarloResult erasure_monte_carlo(std::size_t n, std::size_t k, double p,
                                     std::size_t trials, std::uint64_t seed,
                                     std::size_t jobs = 1);

// Minimum-weight decoder lookup: one representative per syndrome, ties
// broken by the lexicographically smallest (x|z) bit pattern. Requires
// n-k <= 20.
struct SyndromeTable {
    std::size_t n = 0;
    std::vector<Pauli> corrections;  // indexed by syndrome bits

    const Pauli& correction(const BitVec& syn) const;
};

SyndromeTable build_syndrome_table(const StabilizerCode& code);

// Each trial applies an independent p/3-each X/Y/Z error per qubit,
// decodes with the syndrome table, and counts a failure unless the
// residual error*correction lies in the stabilizer group.
MonteCarloResult depolarizing_monte_carlo(const StabilizerCode& code, double p,
                                          std::size_t trials, std::uint64_t seed,
                                          std::size_t jobs = 1);

// Exact failure probability of the syndrome-table decoder under the
// depolarizing channel, by weighting all 4^n errors (n <= 8 guarded).
double depolarizing_exact_failure(const StabilizerCode& code, double p);

// CSV (p plus the six asymptotic rate bounds) over a grid of p in [0, 0.5].
std::string capacity_curves(const std::vector<double>& p_grid);

}  // namespace qec
