#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qec {

// Packed GF(2) row vector.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    BitVec operator&(const BitVec& o) const {
        BitVec r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    BitVec operator|(const BitVec& o) const {
        BitVec r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    std::uint64_t word(std::size_t i) const { return i < w_.size() ? w_[i] : 0; }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    std::size_t popcount() const;
    // Parity of the AND with o (binary dot product).
    bool dot(const BitVec& o) const;

    bool operator==(const BitVec& o) const = default;
    // Lexicographic order with bit 0 most significant (stable sort key).
    bool operator<(const BitVec& o) const;

    BitVec slice(std::size_t begin, std::size_t len) const;
    static BitVec concat(const BitVec& a, const BitVec& b);

    // "0"/"1" characters, index 0 first.
    std::string str() const;
    static BitVec from_string(const std::string& s);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

using BitMat = std::vector<BitVec>;

// In-place Gaussian elimination over GF(2); returns rank.
// If reduced, produces reduced row echelon form. pivot_cols (optional)
// receives the pivot column of each of the first `rank` rows.
std::size_t gf2_eliminate(BitMat& m, bool reduced = true,
                          std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t gf2_rank(BitMat m);

// Express target as a GF(2) combination of the given rows.
// Returns the selector (bit i set iff rows[i] participates), or nullopt.
std::optional<BitVec> gf2_solve(const BitMat& rows, const BitVec& target);

// Basis of { v : row . v = 0 for every row }, vectors of length ncols.
BitMat gf2_nullspace(const BitMat& rows, std::size_t ncols);

}  // namespace qec
