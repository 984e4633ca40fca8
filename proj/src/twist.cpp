#include "superfs/twist.hpp"

#include "superfs/error.hpp"
#include "f2_linear.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace superfs {

namespace {

std::string triple(int g, int h, int k) {
    return "(" + std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(k) + ")";
}

void check_phi(const Group& g, const std::vector<int>& phi) {
    const int n = g.order();
    if (static_cast<int>(phi.size()) != n)
        throw TwistError("phi has " + std::to_string(phi.size()) + " entries, group order is " + std::to_string(n));
    for (int a = 0; a < n; ++a)
        if (phi[a] != 0 && phi[a] != 1) throw TwistError("phi(" + std::to_string(a) + ") is not 0 or 1");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi[g.mul(a, b)] != (phi[a] ^ phi[b]))
                throw TwistError("phi is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

} // namespace

Twist Twist::trivial(int order) {
    Twist t;
    t.order = order;
    t.phi.assign(order, 0);
    t.alpha.assign(static_cast<std::size_t>(order) * order, Phase{});
    return t;
}

CoefficientRing Twist::ring() const {
    for (const auto& v : alpha)
        if (!v.is_z2()) return CoefficientRing::QZ;
    return CoefficientRing::Z2;
}

bool Twist::phi_trivial() const {
    return std::all_of(phi.begin(), phi.end(), [](int v) { return v == 0; });
}

TwistValidation validate_twist(const Group& g, Twist twist) {
    const int n = g.order();
    if (twist.order != n) throw TwistError("twist order " + std::to_string(twist.order) + " does not match group order " + std::to_string(n));
    if (twist.alpha.size() != static_cast<std::size_t>(n) * n) throw TwistError("alpha is not |G| x |G|");
    check_phi(g, twist.phi);

    const Phase shift = twist.a(0, 0);
    if (!shift.is_zero())
        for (auto& v : twist.alpha) v -= shift;

    // Integer arithmetic mod the common denominator.
    std::int64_t den = 1;
    for (const auto& v : twist.alpha) den = std::lcm(den, v.den());
    std::vector<std::int64_t> a(twist.alpha.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = twist.alpha[i].num() * (den / twist.alpha[i].den());
    auto at = [&](int x, int y) { return a[static_cast<std::size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const std::int64_t lhs0 = at(x, y);
            const int xy = g.mul(x, y);
            for (int z = 0; z < n; ++z) {
                const std::int64_t lhs = lhs0 + at(xy, z);
                const std::int64_t rhs = at(y, z) + at(x, g.mul(y, z));
                if ((lhs - rhs) % den != 0) throw TwistError("cocycle identity fails at " + triple(x, y, z));
            }
        }
    return {std::move(twist), shift};
}

Twist add_coboundary(const Group& g, const Twist& twist, const std::vector<Phase>& beta) {
    const int n = g.order();
    if (static_cast<int>(beta.size()) != n) throw TwistError("coboundary cochain has wrong length");
    Twist out = twist;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) out.a(x, y) += beta[x] + beta[y] - beta[g.mul(x, y)];
    return out;
}

EvenSubgroup even_subgroup(const Group& g, const Twist& twist) {
    check_phi(g, twist.phi);
    EvenSubgroup out;
    const int n = g.order();
    out.position.assign(n, -1);
    for (int x = 0; x < n; ++x)
        if (twist.phi[x] == 0) {
            out.position[x] = static_cast<int>(out.elements.size());
            out.elements.push_back(x);
        }
    const int m = static_cast<int>(out.elements.size());
    out.index = n / m;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = out.position[g.mul(out.elements[i], out.elements[j])];
    std::vector<std::string> names;
    if (!g.names().empty())
        for (int x : out.elements) names.push_back(g.name(x));
    out.subgroup = Group::from_table(std::move(table), std::move(names));
    out.restricted = Twist::trivial(m);
    if (twist.alpha.size() == static_cast<std::size_t>(n) * n)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out.restricted.a(i, j) = twist.a(out.elements[i], out.elements[j]);
    return out;
}

TwistedGroup combine_twists(const TwistedGroup& a, const TwistedGroup& b) {
    if (a.twist.ring() != CoefficientRing::Z2 || b.twist.ring() != CoefficientRing::Z2)
        throw TwistError("combine_twists requires Z2-valued cocycles");
    const int n = a.group.order(), m = b.group.order();
    TwistedGroup out{direct_product(a.group, b.group), Twist::trivial(n * m)};
    for (int x = 0; x < n * m; ++x) out.twist.phi[x] = a.twist.phi[x / m] ^ b.twist.phi[x % m];
    for (int x = 0; x < n * m; ++x)
        for (int y = 0; y < n * m; ++y) {
            Phase v = a.twist.a(x / m, y / m) + b.twist.a(x % m, y % m);
            if (a.twist.phi[x / m] && b.twist.phi[y % m]) v += Phase::half();
            out.twist.a(x, y) = v;
        }
    out.twist = validate_twist(out.group, std::move(out.twist)).twist;
    return out;
}

TwistedGroup clifford_twist(int n) {
    if (n < 0) throw TwistError("Clifford rank must be non-negative");
    if (n == 0) return {Group::from_table({{0}}), Twist::trivial(1)};
    TwistedGroup seed{Group::from_table({{0, 1}, {1, 0}}), Twist::trivial(2)};
    seed.twist.phi = {0, 1};
    TwistedGroup acc = seed;
    for (int k = 1; k < n; ++k) acc = combine_twists(acc, seed);
    return acc;
}

std::vector<std::vector<int>> homomorphisms_to_z2(const Group& g) {
    const int n = g.order();
    detail::F2Echelon eq(n);
    {
        detail::BitVec e(n);
        e.flip(0);
        eq.insert(std::move(e));
    }
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            detail::BitVec row(n);
            row.flip(a);
            row.flip(b);
            row.flip(g.mul(a, b));
            eq.insert(std::move(row));
        }
    const auto basis = eq.nullspace();
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        detail::BitVec v(n);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if ((mask >> k) & 1u) v ^= basis[k];
        std::vector<int> phi(n);
        for (int x = 0; x < n; ++x) phi[x] = v.get(x);
        out.push_back(std::move(phi));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Phase>> h2_representatives(const Group& g, int max_rank) {
    const int n = g.order();
    if (n == 1) return {std::vector<Phase>(1)};
    const int m = n - 1;
    auto col = [m](int x, int y) { return (x - 1) * m + (y - 1); };
    const int cols = m * m;

    detail::F2Echelon cocycle(cols);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            const int xy = g.mul(x, y);
            for (int z = 1; z < n; ++z) {
                const int yz = g.mul(y, z);
                detail::BitVec row(cols);
                row.flip(col(x, y));
                row.flip(col(y, z));
                if (xy != 0) row.flip(col(xy, z));
                if (yz != 0) row.flip(col(x, yz));
                if (row.any()) cocycle.insert(std::move(row));
            }
        }

    detail::F2Echelon span(cols);
    for (int t = 1; t < n; ++t) {
        detail::BitVec db(cols);
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                const int xy = g.mul(x, y);
                if ((x == t) ^ (y == t) ^ (xy == t)) db.flip(col(x, y));
            }
        span.insert(std::move(db));
    }
    std::vector<detail::BitVec> generators;
    for (auto& z : cocycle.nullspace())
        if (span.insert(z)) generators.push_back(std::move(z));
    if (static_cast<int>(generators.size()) > max_rank)
        throw TwistError("H^2(G,Z2) has rank " + std::to_string(generators.size()) + ", above the sweep cap " +
                         std::to_string(max_rank));

    std::vector<std::vector<Phase>> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << generators.size()); ++mask) {
        detail::BitVec v(cols);
        for (std::size_t k = 0; k < generators.size(); ++k)
            if ((mask >> k) & 1u) v ^= generators[k];
        std::vector<Phase> alpha(static_cast<std::size_t>(n) * n);
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y)
                if (v.get(col(x, y))) alpha[static_cast<std::size_t>(x) * n + y] = Phase::half();
        reps.push_back(std::move(alpha));
    }
    return reps;
}

} // namespace superfs
