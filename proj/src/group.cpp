#include "superfs/group.hpp"

#include "superfs/error.hpp"

#include <map>
#include <queue>
#include <utility>

namespace superfs {

Group Group::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw GroupError("empty Cayley table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw GroupError("Cayley table row " + std::to_string(i) + " has wrong length");
        std::vector<char> seen(n, 0);
        for (int j = 0; j < n; ++j) {
            const int v = table[i][j];
            if (v < 0 || v >= n) throw GroupError("entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (seen[v]) throw GroupError("row " + std::to_string(i) + " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
            if (seen[table[i][j]]) throw GroupError("column " + std::to_string(j) + " is not a permutation");
            seen[table[i][j]] = 1;
        }
    }
    if (!names.empty() && static_cast<int>(names.size()) != n)
        throw GroupError("names array has " + std::to_string(names.size()) + " entries, expected " + std::to_string(n));

    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
        if (ok) e = i;
    }
    if (e < 0) throw GroupError("no identity element");

    // Swap labels e <-> 0.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[0], perm[e]);

    Group g;
    g.order_ = n;
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.table_[static_cast<std::size_t>(perm[i]) * n + perm[j]] = perm[table[i][j]];
    if (!names.empty()) {
        g.names_.resize(n);
        for (int i = 0; i < n; ++i) g.names_[perm[i]] = names[i];
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw GroupError("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");

    g.inverses_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0) g.inverses_[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverses_[a] < 0 || g.mul(g.inverses_[a], a) != 0)
            throw GroupError("element " + std::to_string(a) + " has no two-sided inverse");
    return g;
}

Group Group::from_permutations(int degree, const std::vector<std::vector<int>>& generators, std::size_t max_order) {
    if (degree < 0) throw GroupError("negative permutation degree");
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& p = generators[k];
        if (static_cast<int>(p.size()) != degree)
            throw GroupError("generator " + std::to_string(k) + " has length " + std::to_string(p.size()));
        std::vector<char> seen(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v]) throw GroupError("generator " + std::to_string(k) + " is not a permutation");
            seen[v] = 1;
        }
    }
    using Perm = std::vector<int>;
    auto compose = [](const Perm& a, const Perm& b) {
        // (a*b)(x) = a(b(x)): apply b first.
        Perm r(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
        return r;
    };

    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::map<Perm, int> index{{id, 0}};
    std::vector<Perm> elems{id};
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        const int cur = todo.front();
        todo.pop();
        for (const auto& gen : generators) {
            Perm next = compose(elems[cur], gen);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                if (elems.size() >= max_order)
                    throw GroupError("permutation closure exceeds size cap " + std::to_string(max_order));
                elems.push_back(std::move(next));
                todo.push(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    // Right multiplication by generators from the identity reaches every
    // product of generators; finite order makes inverses products too.
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
    return from_table(std::move(table));
}

std::string Group::name(int g) const {
    if (!names_.empty()) return names_[g];
    return std::to_string(g);
}

std::vector<std::vector<int>> Group::table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) t[i][j] = mul(i, j);
    return t;
}

Group Group::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != order_ || perm[0] != 0) throw GroupError("relabeling must fix the identity");
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) t[perm[i]][perm[j]] = perm[mul(i, j)];
    std::vector<std::string> nm;
    if (!names_.empty()) {
        nm.resize(order_);
        for (int i = 0; i < order_; ++i) nm[perm[i]] = names_[i];
    }
    return from_table(std::move(t), std::move(nm));
}

Group direct_product(const Group& g, const Group& h) {
    const int n = g.order(), m = h.order();
    std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
    for (int a = 0; a < n * m; ++a)
        for (int b = 0; b < n * m; ++b) t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
    std::vector<std::string> names;
    if (!g.names().empty() || !h.names().empty()) {
        for (int a = 0; a < n * m; ++a) names.push_back("(" + g.name(a / m) + "," + h.name(a % m) + ")");
    }
    return Group::from_table(std::move(t), std::move(names));
}

} // namespace superfs
