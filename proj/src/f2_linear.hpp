#pragma once

#include <cstdint>
#include <vector>

namespace superfs::detail {

/// Row vector over F2 packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const noexcept { return bits_; }
    bool get(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void flip(int i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void set(int i, bool v) noexcept {
        if (get(i) != v) flip(i);
    }
    BitVec& operator^=(const BitVec& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    bool any() const noexcept;
    /// Lowest set bit, or -1.
    int lowest() const noexcept;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incrementally maintained reduced row echelon form over F2.
class F2Echelon {
public:
    explicit F2Echelon(int cols) : cols_(cols) {}

    /// Reduces v against the stored rows; returns the remainder.
    BitVec reduce(BitVec v) const;
    /// Adds v to the span; returns false when v was already in it.
    bool insert(BitVec v);

    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    int cols() const noexcept { return cols_; }
    /// Basis of { x : row . x = 0 for every stored row }.
    std::vector<BitVec> nullspace() const;

private:
    int cols_;
    std::vector<BitVec> rows_;
    std::vector<int> pivots_;
};

} // namespace superfs::detail
