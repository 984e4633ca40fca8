#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace superfs {

/// Finite group stored as a Cayley table. Element 0 is always the identity.
class Group {
public:
    /// The trivial group.
    Group() : order_(1), table_{0}, inverses_{0} {}

    /// Validates and takes ownership of a Cayley table. The identity is
    /// relabeled to index 0 (swapping it with whatever held index 0).
    static Group from_table(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

    /// Breadth-first closure of permutation generators given as image arrays on
    /// {0..degree-1}. Throws GroupError if the closure exceeds max_order.
    static Group from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                   std::size_t max_order = 4096);

    int order() const noexcept { return order_; }
    int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const noexcept { return inverses_[a]; }
    static constexpr int identity() noexcept { return 0; }

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::string name(int g) const;
    std::vector<std::vector<int>> table() const;

    /// Relabels elements through a bijection fixing 0: element g becomes perm[g].
    Group relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Group&, const Group&) = default;

private:
    int order_ = 0;
    std::vector<int> table_;
    std::vector<int> inverses_;
    std::vector<std::string> names_;
};

/// Direct product G x H with (g, h) stored at index g * |H| + h.
Group direct_product(const Group& g, const Group& h);

} // namespace superfs
