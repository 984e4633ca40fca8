#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "superfs/catalog.hpp"
#include "superfs/error.hpp"
#include "superfs/superalg.hpp"
#include "superfs/twist.hpp"

#include <map>
#include <random>

using namespace superfs;

TEST_CASE("phase arithmetic stays in [0,1) and reduces") {
    CHECK(Phase(3, 2) == Phase(1, 2));
    CHECK(Phase(-1, 4) == Phase(3, 4));
    CHECK(Phase(2, 4).den() == 2);
    CHECK(Phase(1, 2) + Phase(1, 2) == Phase());
    CHECK(Phase(1, 3) - Phase(2, 3) == Phase(2, 3));
    CHECK(-Phase(1, 4) == Phase(3, 4));
    CHECK(Phase::parse("3/6") == Phase(1, 2));
    CHECK(Phase::parse("0") == Phase());
    CHECK(Phase(1, 2).str() == "1/2");
    CHECK(Phase().str() == "0");
    CHECK(Phase(1, 2).is_z2());
    CHECK_FALSE(Phase(1, 3).is_z2());
    CHECK(Phase(1, 4).unit() == std::complex<double>(0, 1));
    CHECK_THROWS_AS(Phase::parse("1/0"), InputError);
    CHECK_THROWS_AS(Phase::parse("half"), InputError);
}

TEST_CASE("Cayley tables") {
    SUBCASE("Z2") {
        const auto g = Group::from_table({{0, 1}, {1, 0}});
        CHECK(g.order() == 2);
        CHECK(g.inv(1) == 1);
    }
    SUBCASE("row that is not a permutation") {
        CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 1}}), GroupError);
    }
    SUBCASE("non-associative loop") {
        const std::vector<std::vector<int>> loop{
            {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
        REQUIRE(oracle::latin(loop));
        REQUIRE_FALSE(oracle::associative(loop));
        CHECK_THROWS_AS(Group::from_table(loop), GroupError);
    }
    SUBCASE("no identity") {
        // x*y = -x-y mod 3: a Latin square with no two-sided identity.
        CHECK_THROWS_AS(Group::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), GroupError);
    }
    SUBCASE("identity moved to index 0") {
        // Z2 written with the identity as element 1.
        const auto g = Group::from_table({{1, 0}, {0, 1}}, {"a", "e"});
        CHECK(g.mul(0, 1) == 1);
        CHECK(g.mul(1, 1) == 0);
        CHECK(g.name(0) == "e");
    }
    SUBCASE("ragged table") {
        CHECK_THROWS_AS(Group::from_table({{0, 1}, {1}}), GroupError);
    }
}

TEST_CASE("permutation closure") {
    // (1 2) and (1 2 3) on three points, 0-indexed.
    const std::vector<std::vector<int>> gens{{1, 0, 2}, {1, 2, 0}};
    const auto g = Group::from_permutations(3, gens);
    CHECK(g.order() == 6);
    CHECK(static_cast<std::size_t>(g.order()) == oracle::closure_size(3, gens));
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian &= g.mul(a, b) == g.mul(b, a);
    CHECK_FALSE(abelian);

    const std::vector<std::vector<int>> a4{{1, 2, 0, 3}, {1, 0, 3, 2}};
    CHECK(static_cast<std::size_t>(Group::from_permutations(4, a4).order()) == oracle::closure_size(4, a4));

    CHECK_THROWS_AS(Group::from_permutations(3, gens, 5), GroupError);
    CHECK_THROWS_AS(Group::from_permutations(3, {{0, 0, 1}}), GroupError);
    CHECK_THROWS_AS(Group::from_permutations(3, {{0, 1}}), GroupError);
}

TEST_CASE("catalog groups satisfy the group axioms") {
    for (const auto& [name, g] : catalog::standard()) {
        CAPTURE(name);
        CHECK(oracle::latin(g.table()));
        CHECK(oracle::associative(g.table()));
        for (int x = 0; x < g.order(); ++x) {
            CHECK(g.inv(g.inv(x)) == x);
            CHECK(g.mul(x, g.inv(x)) == 0);
            CHECK(g.mul(0, x) == x);
        }
    }
    CHECK(catalog::standard().size() == 10);
}

TEST_CASE("even subgroup") {
    SUBCASE("Z2 graded by the identity map") {
        const auto g = catalog::cyclic(2);
        Twist t = Twist::trivial(2);
        t.phi = {0, 1};
        const auto e = even_subgroup(g, t);
        CHECK(e.elements == std::vector<int>{0});
        CHECK(e.index == 2);
    }
    SUBCASE("Z4 mod 2") {
        const auto g = catalog::cyclic(4);
        Twist t = Twist::trivial(4);
        t.phi = {0, 1, 0, 1};
        const auto e = even_subgroup(g, t);
        CHECK(e.elements == std::vector<int>{0, 2});
        CHECK(e.position[1] == -1);
    }
    SUBCASE("S3 by sign") {
        const auto g = catalog::symmetric3();
        const auto homs = homomorphisms_to_z2(g);
        REQUIRE(homs.size() == 2);
        Twist t = Twist::trivial(6);
        t.phi = homs[1];
        const auto e = even_subgroup(g, t);
        int kernel = 0;
        for (int x = 0; x < 6; ++x) kernel += homs[1][x] == 0;
        CHECK(e.subgroup.order() == 3);
        CHECK(kernel == 3);
        CHECK(oracle::associative(e.subgroup.table()));
    }
    SUBCASE("trivial grading") {
        const auto e = even_subgroup(catalog::quaternion8(), Twist::trivial(8));
        CHECK(e.index == 1);
        CHECK(e.subgroup.order() == 8);
    }
    SUBCASE("non-homomorphism rejected") {
        Twist t = Twist::trivial(3);
        t.phi = {0, 1, 0};
        CHECK_THROWS_AS(even_subgroup(catalog::cyclic(3), t), TwistError);
    }
}

TEST_CASE("twist validation") {
    const auto g = catalog::elementary_abelian(2);
    SUBCASE("zero cocycle with any homomorphism") {
        for (const auto& phi : homomorphisms_to_z2(g)) {
            Twist t = Twist::trivial(4);
            t.phi = phi;
            CHECK(validate_twist(g, t).shift == Phase());
        }
    }
    SUBCASE("constant cocycle is normalized by a coboundary") {
        Twist t = Twist::trivial(4);
        for (auto& a : t.alpha) a = Phase(1, 2);
        const auto v = validate_twist(g, t);
        CHECK(v.shift == Phase(1, 2));
        for (const auto& a : v.twist.alpha) CHECK(a == Phase());
    }
    SUBCASE("Clifford twist") {
        const auto cl = clifford_twist(2);
        CHECK(oracle::cocycle_defect(cl.group, cl.twist) < 1e-12);
        CHECK(cl.twist.ring() == CoefficientRing::Z2);
        CHECK(validate_twist(cl.group, cl.twist).twist == cl.twist);
    }
    SUBCASE("cocycle failure names the elements") {
        Twist t = Twist::trivial(4);
        t.a(1, 1) = Phase(1, 2);
        t.a(1, 2) = Phase(1, 2);
        REQUIRE(oracle::cocycle_defect(g, t) > 0.5);
        try {
            validate_twist(g, t);
            FAIL("expected TwistError");
        } catch (const TwistError& e) {
            CHECK(std::string(e.what()).find("(") != std::string::npos);
        }
    }
    SUBCASE("phi not additive") {
        Twist t = Twist::trivial(4);
        t.phi = {0, 1, 1, 1};
        CHECK_THROWS_AS(validate_twist(g, t), TwistError);
    }
    SUBCASE("size mismatch") {
        CHECK_THROWS_AS(validate_twist(g, Twist::trivial(3)), TwistError);
    }
    SUBCASE("Q/Z cocycle on Z3") {
        // alpha(a,b) = a*b/3 is a coboundary-type cocycle over Q/Z.
        const auto z3 = catalog::cyclic(3);
        Twist t = Twist::trivial(3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) t.a(a, b) = Phase(a * b, 3);
        CHECK(validate_twist(z3, t).twist.ring() == CoefficientRing::QZ);
    }
}

TEST_CASE("coboundary shifts keep the cocycle identity") {
    std::mt19937_64 rng(7);
    for (const auto& [name, g] : catalog::standard()) {
        CAPTURE(name);
        for (const auto& alpha : h2_representatives(g)) {
            Twist t{g.order(), std::vector<int>(g.order(), 0), alpha};
            for (int trial = 0; trial < 3; ++trial) {
                const Twist s = add_coboundary(g, t, oracle::random_z2_function(g.order(), rng));
                CHECK(oracle::cocycle_defect(g, s) < 1e-12);
                CHECK_NOTHROW(validate_twist(g, s));
            }
        }
    }
}

TEST_CASE("combining twists") {
    const auto cl1 = clifford_twist(1);
    SUBCASE("trivial times trivial") {
        const TwistedGroup a{catalog::cyclic(3), Twist::trivial(3)};
        const TwistedGroup b{catalog::cyclic(2), Twist::trivial(2)};
        const auto c = combine_twists(a, b);
        CHECK(c.group.order() == 6);
        CHECK(c.twist == Twist::trivial(6));
    }
    SUBCASE("Cl(1) x Cl(1) cocycle values") {
        const auto c = combine_twists(cl1, cl1);
        // (g,h) sits at index 2g+h.
        CHECK(c.twist.a(2, 1) == Phase(1, 2));
        CHECK(c.twist.a(1, 2) == Phase());
        CHECK(c.twist.phi == std::vector<int>{0, 1, 1, 0});
    }
    SUBCASE("Cl(1) x Cl(1) generators anticommute and square to one") {
        const auto c = combine_twists(cl1, cl1);
        const TwistedGroupAlgebra alg(c.group, c.twist);
        const auto x = alg.basis(2), y = alg.basis(1);
        const auto xy = alg.multiply(x, y).coefficients, yx = alg.multiply(y, x).coefficients;
        for (int k = 0; k < 4; ++k) CHECK(std::abs(xy[k] + yx[k]) < 1e-12);
        // Independent check with regular matrices.
        const auto X = oracle::regular(c.group, c.twist, 2), Y = oracle::regular(c.group, c.twist, 1);
        CHECK((X * Y + Y * X).norm() < 1e-12);
        CHECK((X * X - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
        CHECK((Y * Y - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
    }
    SUBCASE("output is a cocycle for catalog pairs") {
        const auto cat = catalog::standard();
        std::mt19937_64 rng(3);
        int checked = 0;
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = 0; j < cat.size(); ++j) {
                const auto& g = cat[i].group;
                const auto& h = cat[j].group;
                if (g.order() * h.order() > 64) continue;
                const auto pg = homomorphisms_to_z2(g), ph = homomorphisms_to_z2(h);
                const auto ag = h2_representatives(g), ah = h2_representatives(h);
                const TwistedGroup a{g, Twist{g.order(), pg[rng() % pg.size()], ag[rng() % ag.size()]}};
                const TwistedGroup b{h, Twist{h.order(), ph[rng() % ph.size()], ah[rng() % ah.size()]}};
                const auto c = combine_twists(a, b);
                CHECK(oracle::cocycle_defect(c.group, c.twist) < 1e-12);
                CHECK(oracle::associative(c.group.table()));
                ++checked;
            }
        CHECK(checked > 20);
    }
    SUBCASE("Q/Z input rejected") {
        const auto z3 = catalog::cyclic(3);
        Twist t = Twist::trivial(3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) t.a(a, b) = Phase(a * b, 3);
        CHECK_THROWS_AS(combine_twists({z3, t}, cl1), TwistError);
    }
}

TEST_CASE("Clifford twists") {
    SUBCASE("n = 0") {
        const auto c = clifford_twist(0);
        CHECK(c.group.order() == 1);
        CHECK(c.twist == Twist::trivial(1));
    }
    SUBCASE("n = 1") {
        const auto c = clifford_twist(1);
        CHECK(c.group.order() == 2);
        CHECK(c.twist.phi == std::vector<int>{0, 1});
        CHECK(c.twist.a(1, 1) == Phase());
    }
    SUBCASE("n = 2 generators anticommute") {
        const auto c = clifford_twist(2);
        const auto X = oracle::regular(c.group, c.twist, 2), Y = oracle::regular(c.group, c.twist, 1);
        CHECK((X * Y + Y * X).norm() < 1e-12);
        CHECK((X * X).isIdentity(1e-12));
        CHECK((Y * Y).isIdentity(1e-12));
    }
    SUBCASE("additivity under combination") {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                CAPTURE(m);
                CAPTURE(n);
                const auto lhs = clifford_twist(m + n);
                const auto rhs = combine_twists(clifford_twist(m), clifford_twist(n));
                CHECK(lhs.group == rhs.group);
                CHECK(lhs.twist == rhs.twist);
            }
    }
    SUBCASE("all generators anticommute for n = 4") {
        const auto c = clifford_twist(4);
        std::vector<Eigen::MatrixXcd> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(oracle::regular(c.group, c.twist, 1 << i));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const Eigen::MatrixXcd ac = gens[i] * gens[j] + gens[j] * gens[i];
                const Eigen::MatrixXcd expect = (i == j ? 2.0 : 0.0) * Eigen::MatrixXcd::Identity(16, 16);
                CHECK((ac - expect).norm() < 1e-12);
            }
    }
    SUBCASE("negative n") {
        CHECK_THROWS_AS(clifford_twist(-1), InputError);
    }
}

TEST_CASE("homomorphisms to Z2 match exhaustive search") {
    for (const auto& [name, g] : catalog::standard()) {
        CAPTURE(name);
        const auto homs = homomorphisms_to_z2(g);
        CHECK(homs.size() == oracle::z2_hom_count(g));
        CHECK(homs.front() == std::vector<int>(g.order(), 0));
    }
}

TEST_CASE("H^2(G, Z2) representatives") {
    // Orders from H^2(G,Z2) = Hom(H_2 G, Z2) + Ext(H_1 G, Z2).
    const std::map<std::string, std::size_t> expected{{"Z2", 2}, {"Z3", 1}, {"Z4", 2},  {"Z2^2", 8}, {"Z6", 2},
                                                      {"S3", 2}, {"D4", 8}, {"Q8", 4}, {"Z2^3", 64}, {"A4", 2}};
    for (const auto& [name, g] : catalog::standard()) {
        CAPTURE(name);
        const auto reps = h2_representatives(g);
        CHECK(reps.size() == expected.at(name));
        for (const auto& a : reps) {
            const Twist t{g.order(), std::vector<int>(g.order(), 0), a};
            CHECK(oracle::cocycle_defect(g, t) < 1e-12);
            CHECK(t.ring() == CoefficientRing::Z2);
            CHECK(a[0] == Phase());
        }
        CHECK(std::all_of(reps.front().begin(), reps.front().end(), [](const Phase& p) { return p.is_zero(); }));
        if (g.order() <= 8 && reps.size() <= 8)
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::cohomologous(g, reps[i], reps[j]));
    }
    CHECK_THROWS_AS(h2_representatives(catalog::elementary_abelian(3), 5), TwistError);
}

TEST_CASE("relabeling") {
    std::mt19937_64 rng(11);
    const auto g = catalog::dihedral4();
    const auto p = oracle::random_relabeling(8, rng);
    const auto r = g.relabeled(p);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(r.mul(p[a], p[b]) == p[g.mul(a, b)]);
    CHECK_THROWS_AS(g.relabeled({1, 0, 2, 3, 4, 5, 6, 7}), GroupError);
}

TEST_CASE("direct product") {
    const auto g = direct_product(catalog::cyclic(2), catalog::cyclic(3));
    CHECK(g.order() == 6);
    CHECK(g.mul(1 * 3 + 1, 1 * 3 + 2) == 0 * 3 + 0);
    CHECK(oracle::associative(g.table()));
}
