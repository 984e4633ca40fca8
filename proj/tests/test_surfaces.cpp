#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "superfs/catalog.hpp"
#include "superfs/error.hpp"
#include "superfs/surfaces.hpp"

#include <map>
#include <random>

using namespace superfs;

namespace {

std::vector<int> bits(unsigned mask, int n) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    return x;
}

/// Brute-force Arf invariant: the majority value of Q.
int arf_by_majority(const QuadraticRefinement& q) {
    int ones = 0;
    const int n = q.b1();
    for (unsigned m = 0; m < (1u << n); ++m) ones += quadratic_eval(q, bits(m, n));
    return 2 * ones > (1 << n) ? 1 : 0;
}

} // namespace

TEST_CASE("surface parsing and Euler characteristic") {
    const auto t = Surface::parse("orientable:1");
    CHECK(t.is_orientable());
    CHECK(t.genus() == 1);
    CHECK(t.euler() == 0);
    CHECK(t.b1() == 2);
    const auto k = Surface::parse("nonorientable:3");
    CHECK(k.crosscaps() == 3);
    CHECK(k.euler() == -1);
    CHECK(k.o_class() == 1);
    CHECK(Surface::orientable(0).euler() == 2);
    CHECK(Surface::nonorientable(2).o_class() == 0);
    CHECK(k.str() == "nonorientable:3");
    CHECK_THROWS_AS(Surface::parse("torus"), SurfaceError);
    CHECK_THROWS_AS(Surface::parse("orientable:x"), SurfaceError);
    CHECK_THROWS_AS(Surface::parse("nonorientable:0"), SurfaceError);
    CHECK_THROWS_AS(Surface::parse("klein:2"), SurfaceError);
}

TEST_CASE("presentations") {
    SUBCASE("sphere") {
        const auto p = presentation(Surface::orientable(0));
        CHECK(p.generators.empty());
        CHECK(p.relator.empty());
    }
    SUBCASE("torus") {
        const auto p = presentation(Surface::orientable(1));
        CHECK(p.generators.size() == 2);
        CHECK(p.relator == std::vector<Letter>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    }
    SUBCASE("Klein bottle") {
        const auto p = presentation(Surface::nonorientable(2));
        CHECK(p.relator == std::vector<Letter>{{0, 1}, {0, 1}, {1, 1}, {1, 1}});
    }
    SUBCASE("cup matrices") {
        CHECK(cup_matrix(Surface::orientable(1)) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
        CHECK(cup_matrix(Surface::nonorientable(2)) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    }
}

TEST_CASE("quadratic evaluation") {
    const auto torus = Surface::orientable(1);
    const auto klein = Surface::nonorientable(2);
    const auto q = make_refinement(torus, RefinementRing::Z2, {1, 1});
    CHECK(quadratic_eval(q, {0, 0}) == 0);
    CHECK(quadratic_eval(q, {1, 1}) == 1);
    const auto p = make_refinement(klein, RefinementRing::Z4, {1, 3});
    CHECK(quadratic_eval(p, {0, 0}) == 0);
    CHECK(quadratic_eval(p, {1, 1}) == 0);
    CHECK_THROWS_AS(quadratic_eval(p, {1}), SurfaceError);
    CHECK_THROWS_AS(make_refinement(klein, RefinementRing::Z4, {2, 1}), SurfaceError);
    CHECK_THROWS_AS(make_refinement(klein, RefinementRing::Z4, {1}), SurfaceError);
    CHECK_THROWS_AS(make_refinement(torus, RefinementRing::Z2, {2, 0}), SurfaceError);
    CHECK(p.str() == "pin:1,3");
    CHECK(q.str() == "spin:1,1");
}

TEST_CASE("refinement law holds exhaustively for b1 <= 6") {
    std::vector<Surface> surfaces{Surface::orientable(1), Surface::orientable(2), Surface::orientable(3)};
    for (int k = 1; k <= 6; ++k) surfaces.push_back(Surface::nonorientable(k));
    for (const auto& s : surfaces) {
        CAPTURE(s.str());
        const auto kind = s.is_orientable() ? StructureKind::Spin : StructureKind::PinMinus;
        const auto cup = cup_matrix(s);
        const int n = s.b1();
        for (const auto& q : enumerate_structures(s, kind)) {
            const int mod = q.ring == RefinementRing::Z2 ? 2 : 4;
            const int scale = q.ring == RefinementRing::Z2 ? 1 : 2;
            for (unsigned a = 0; a < (1u << n); ++a)
                for (unsigned b = 0; b < (1u << n); ++b) {
                    const auto x = bits(a, n), y = bits(b, n), xy = bits(a ^ b, n);
                    int pairing = 0;
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) pairing += x[i] * cup[i][j] * y[j];
                    const int lhs = ((quadratic_eval(q, xy) - quadratic_eval(q, x) - quadratic_eval(q, y)) % mod + mod) % mod;
                    CHECK(lhs == (scale * pairing) % mod);
                }
            if (q.ring == RefinementRing::Z4)
                for (int i = 0; i < n; ++i) {
                    std::vector<int> e(n, 0);
                    e[i] = 1;
                    CHECK(quadratic_eval(q, e) % 2 == cup[i][i]);
                }
        }
    }
}

TEST_CASE("Arf invariant") {
    const auto torus = Surface::orientable(1);
    CHECK(arf(make_refinement(torus, RefinementRing::Z2, {0, 0})) == 0);
    CHECK(arf(make_refinement(torus, RefinementRing::Z2, {1, 1})) == 1);
    CHECK(gauss_sum(make_refinement(torus, RefinementRing::Z2, {1, 1})) == std::complex<double>(-2, 0));
    CHECK(arf(make_refinement(Surface::orientable(2), RefinementRing::Z2, {1, 1, 1, 1})) == 0);

    std::map<int, int> dist;
    for (const auto& q : enumerate_structures(torus, StructureKind::Spin)) ++dist[arf(q)];
    CHECK(dist == std::map<int, int>{{0, 3}, {1, 1}});

    for (int g = 0; g <= 3; ++g)
        for (const auto& q : enumerate_structures(Surface::orientable(g), StructureKind::Spin)) {
            CHECK(arf(q) == arf_by_majority(q));
            CHECK(std::abs(std::abs(gauss_sum(q)) - std::pow(2.0, g)) < 1e-9);
        }
    CHECK_THROWS_AS(arf(make_refinement(Surface::nonorientable(1), RefinementRing::Z4, {1})), SurfaceError);
    QuadraticRefinement bad{RefinementRing::Z2, {0, 0}, {{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(arf(bad), SurfaceError);
}

TEST_CASE("ABK invariant") {
    const auto rp2 = Surface::nonorientable(1);
    CHECK(abk(make_refinement(rp2, RefinementRing::Z4, {1})).value == 1);
    CHECK(abk(make_refinement(rp2, RefinementRing::Z4, {3})).value == 7);
    const auto k = abk(make_refinement(Surface::nonorientable(2), RefinementRing::Z4, {1, 3}));
    CHECK(k.value == 0);
    CHECK(std::abs(k.raw - std::complex<double>(1, 0)) < 1e-12);

    // ABK is additive under connected sum: crosscaps contribute +1 or -1 each.
    for (int n = 1; n <= 6; ++n)
        for (const auto& q : enumerate_structures(Surface::nonorientable(n), StructureKind::PinMinus)) {
            int expect = 0;
            for (int v : q.basis_values) expect += v == 1 ? 1 : -1;
            CHECK(abk(q).value == ((expect % 8) + 8) % 8);
            CHECK(std::abs(std::abs(gauss_sum(q)) - std::pow(2.0, n / 2.0)) < 1e-9);
        }
    // Pin- structures on the torus are Z4 lifts of the even cup form.
    for (const auto& q : enumerate_structures(Surface::orientable(1), StructureKind::PinMinus)) {
        const int a = q.basis_values[0] / 2, b = q.basis_values[1] / 2;
        CHECK(abk(q).value == 4 * (a * b));
    }
    CHECK_THROWS_AS(abk(make_refinement(Surface::orientable(1), RefinementRing::Z2, {0, 0})), SurfaceError);
}

TEST_CASE("structure enumeration") {
    CHECK(enumerate_structures(Surface::orientable(0), StructureKind::Spin).size() == 1);
    CHECK(enumerate_structures(Surface::orientable(1), StructureKind::Spin).size() == 4);
    CHECK(enumerate_structures(Surface::orientable(2), StructureKind::Spin).size() == 16);
    for (int k = 1; k <= 5; ++k) CHECK(enumerate_structures(Surface::nonorientable(k), StructureKind::PinMinus).size() == (1u << k));
    std::multiset<int> rp2;
    for (const auto& q : enumerate_structures(Surface::nonorientable(1), StructureKind::PinMinus)) rp2.insert(abk(q).value);
    CHECK(rp2 == std::multiset<int>{1, 7});
    CHECK_THROWS_AS(enumerate_structures(Surface::nonorientable(2), StructureKind::Spin), SurfaceError);
}

TEST_CASE("integrating pulled-back cocycles") {
    SUBCASE("zero cocycle") {
        const auto g = catalog::symmetric3();
        const auto pres = presentation(Surface::orientable(1));
        for (const auto& a : oracle::homs(g, pres)) CHECK(integrate_cocycle(g, Twist::trivial(6), pres, a) == Phase());
    }
    SUBCASE("RP2 with the nontrivial Z2 class") {
        const auto g = catalog::cyclic(2);
        Twist t = Twist::trivial(2);
        t.a(1, 1) = Phase(1, 2);
        CHECK(integrate_cocycle(g, t, presentation(Surface::nonorientable(1)), {1}) == Phase(1, 2));
        CHECK(integrate_cocycle(g, t, presentation(Surface::nonorientable(1)), {0}) == Phase());
    }
    SUBCASE("torus with abelian G: omega(a,b) / omega(b,a)") {
        const auto g = catalog::elementary_abelian(2);
        const auto t = clifford_twist(2).twist;
        const auto pres = presentation(Surface::orientable(1));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(integrate_cocycle(g, t, pres, {a, b}) == t.a(a, b) - t.a(b, a));
    }
    SUBCASE("matches the regular-representation lift") {
        std::mt19937_64 rng(23);
        for (const auto& [name, g] : catalog::standard()) {
            CAPTURE(name);
            const auto reps = h2_representatives(g);
            const Twist t{g.order(), std::vector<int>(g.order(), 0), reps[rng() % reps.size()]};
            for (const auto& s : {Surface::orientable(1), Surface::nonorientable(1), Surface::nonorientable(2)}) {
                const auto pres = presentation(s);
                for (const auto& a : oracle::homs(g, pres)) {
                    const auto lam = oracle::relator_lift(g, t, pres, a);
                    CHECK(std::abs(integrate_cocycle(g, t, pres, a).unit() - lam) < 1e-9);
                }
            }
        }
    }
    SUBCASE("coboundary invariance on closed words") {
        std::mt19937_64 rng(29);
        const auto g = catalog::dihedral4();
        const auto reps = h2_representatives(g);
        for (const auto& alpha : reps) {
            const Twist t{8, std::vector<int>(8, 0), alpha};
            const Twist s = add_coboundary(g, t, oracle::random_z2_function(8, rng));
            for (const auto& surf : {Surface::orientable(1), Surface::nonorientable(2)}) {
                const auto pres = presentation(surf);
                for (const auto& a : oracle::homs(g, pres))
                    CHECK(integrate_cocycle(g, t, pres, a) == integrate_cocycle(g, s, pres, a));
            }
        }
    }
    SUBCASE("errors") {
        const auto g = catalog::cyclic(3);
        const auto pres = presentation(Surface::nonorientable(1));
        CHECK_THROWS_AS(integrate_cocycle(g, Twist::trivial(3), pres, {1}), SurfaceError);
        CHECK_THROWS_AS(integrate_cocycle(g, Twist::trivial(3), pres, {0, 0}), SurfaceError);
    }
}
