#include "superfs/catalog.hpp"

#include "superfs/error.hpp"

namespace superfs::catalog {

Group cyclic(int n) {
    if (n < 1) throw GroupError("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return Group::from_table(std::move(t));
}

Group elementary_abelian(int k) {
    const int n = 1 << k;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = a ^ b;
    return Group::from_table(std::move(t));
}

Group symmetric3() { return Group::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

Group dihedral4() { return Group::from_permutations(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}); }

Group alternating4() { return Group::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

Group symmetric4() { return Group::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }

Group quaternion8() {
    // unit products: u * v = sign * w, units ordered 1, i, j, k.
    static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    std::vector<std::string> names(8);
    const char* labels[4] = {"1", "i", "j", "k"};
    for (int a = 0; a < 8; ++a) {
        names[a] = std::string(a / 4 ? "-" : "") + labels[a % 4];
        for (int b = 0; b < 8; ++b) {
            const int u = a % 4, v = b % 4;
            const int s = (a / 4) ^ (b / 4) ^ sign[u][v];
            t[a][b] = 4 * s + unit[u][v];
        }
    }
    return Group::from_table(std::move(t), std::move(names));
}

std::vector<Entry> standard() {
    return {
        {"Z2", cyclic(2)},
        {"Z3", cyclic(3)},
        {"Z4", cyclic(4)},
        {"Z2^2", elementary_abelian(2)},
        {"Z6", cyclic(6)},
        {"S3", symmetric3()},
        {"D4", dihedral4()},
        {"Q8", quaternion8()},
        {"Z2^3", elementary_abelian(3)},
        {"A4", alternating4()},
    };
}

} // namespace superfs::catalog
