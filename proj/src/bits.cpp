#include "qec/bits.hpp"

#include <bit>
#include <stdexcept>

namespace qec {

namespace {
std::uint64_t reverse_bits(std::uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFull) | ((v & 0x0000FFFF0000FFFFull) << 16);
    return (v >> 32) | (v << 32);
}
}  // namespace

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool BitVec::dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

bool BitVec::operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] != o.w_[i]) return reverse_bits(w_[i]) < reverse_bits(o.w_[i]);
    }
    return false;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
    BitVec r(len);
    for (std::size_t i = 0; i < len; ++i) r.set(i, get(begin + i));
    return r;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
    BitVec r(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.set(i, a.get(i));
    for (std::size_t i = 0; i < b.size(); ++i) r.set(a.size() + i, b.get(i));
    return r;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::from_string(const std::string& s) {
    BitVec r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') r.set(i, true);
        else if (s[i] != '0') throw std::invalid_argument("bit string must be 0/1");
    }
    return r;
}

std::size_t gf2_eliminate(BitMat& m, bool reduced, std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (m.empty()) return 0;
    std::size_t ncols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && !m[piv].get(col)) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = reduced ? 0 : rank + 1; r < m.size(); ++r) {
            if (r != rank && m[r].get(col)) m[r] ^= m[rank];
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

std::size_t gf2_rank(BitMat m) { return gf2_eliminate(m, false); }

std::optional<BitVec> gf2_solve(const BitMat& rows, const BitVec& target) {
    if (rows.empty()) {
        if (target.any()) return std::nullopt;
        return BitVec(0);
    }
    std::size_t ncols = rows[0].size();
    // Augment each row with a selector-tracking identity block.
    BitMat work;
    work.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BitVec tag(rows.size());
        tag.set(i, true);
        work.push_back(BitVec::concat(rows[i], tag));
    }
    BitVec t = BitVec::concat(target, BitVec(rows.size()));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < work.size(); ++col) {
        std::size_t piv = rank;
        while (piv < work.size() && !work[piv].get(col)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[rank], work[piv]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != rank && work[r].get(col)) work[r] ^= work[rank];
        }
        if (t.get(col)) t ^= work[rank];
        ++rank;
    }
    if (t.slice(0, ncols).any()) return std::nullopt;
    return t.slice(ncols, rows.size());
}

BitMat gf2_nullspace(const BitMat& rows, std::size_t ncols) {
    BitMat m = rows;
    std::vector<std::size_t> pivots;
    std::size_t rank = gf2_eliminate(m, true, &pivots);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    BitMat basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(ncols);
        v.set(free_col, true);
        for (std::size_t r = 0; r < rank; ++r) {
            if (m[r].get(free_col)) v.set(pivots[r], true);
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace qec
