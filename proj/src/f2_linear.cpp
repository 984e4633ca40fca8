#include "f2_linear.hpp"

#include <bit>

namespace superfs::detail {

bool BitVec::any() const noexcept {
    for (auto w : words_)
        if (w) return true;
    return false;
}

int BitVec::lowest() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
}

BitVec F2Echelon::reduce(BitVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.get(pivots_[r])) v ^= rows_[r];
    return v;
}

bool F2Echelon::insert(BitVec v) {
    v = reduce(std::move(v));
    const int p = v.lowest();
    if (p < 0) return false;
    for (auto& row : rows_)
        if (row.get(p)) row ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

std::vector<BitVec> F2Echelon::nullspace() const {
    std::vector<int> pivot_row(cols_, -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) pivot_row[pivots_[r]] = static_cast<int>(r);
    std::vector<BitVec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (pivot_row[f] >= 0) continue;
        BitVec x(cols_);
        x.set(f, true);
        // Fully reduced rows: pivot + (free columns) = 0.
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].get(f)) x.set(pivots_[r], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace superfs::detail
