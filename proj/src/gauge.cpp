#include "superfs/gauge.hpp"

#include "superfs/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace superfs {

namespace {

constexpr Complex kI{0.0, 1.0};

bool needs_structure(Family f) { return f == Family::Spin || f == Family::PinMinus; }

void check_compatible(const TheoryData& t, const Surface& s, const QuadraticRefinement* q) {
    const bool orientable_family = t.family == Family::Oriented || t.family == Family::Spin;
    if (orientable_family != s.is_orientable())
        throw SurfaceError(to_string(t.family) + " theory is not defined on " + s.str());
    if (needs_structure(t.family) != (q != nullptr))
        throw SurfaceError(needs_structure(t.family) ? to_string(t.family) + " theory needs a structure"
                                                     : to_string(t.family) + " theory takes no structure");
    if (q) {
        const auto ring = t.family == Family::Spin ? RefinementRing::Z2 : RefinementRing::Z4;
        if (q->ring != ring || q->b1() != s.b1()) throw SurfaceError("structure does not match the family and surface");
    }
}

Complex power(Complex base, int e) {
    Complex r = 1.0;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

/// (|G| / dim)^(-e).
double euler_weight(double order, double dim, int euler) { return std::pow(order / dim, -static_cast<double>(euler)); }

} // namespace

std::string to_string(Family f) {
    switch (f) {
    case Family::Oriented: return "oriented";
    case Family::Unoriented: return "unoriented";
    case Family::Spin: return "spin";
    case Family::PinMinus: return "pin-";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "oriented") return Family::Oriented;
    if (text == "unoriented") return Family::Unoriented;
    if (text == "spin") return Family::Spin;
    if (text == "pin-" || text == "pin") return Family::PinMinus;
    throw InputError("unknown family '" + std::string(text) + "'");
}

TheoryData make_theory(Group group, Twist twist, Family family) {
    if (family == Family::Oriented || family == Family::Unoriented) twist.phi.assign(group.order(), 0);
    twist = validate_twist(group, std::move(twist)).twist;
    if ((family == Family::Unoriented || family == Family::PinMinus) && twist.ring() != CoefficientRing::Z2)
        throw TwistError(to_string(family) + " theories need a Z2-valued cocycle");
    return {std::move(group), std::move(twist), family};
}

unsigned long long relator_checks_required(const Presentation& pres, const Group& group) {
    unsigned long long r = 1;
    const unsigned long long n = static_cast<unsigned long long>(group.order());
    for (std::size_t k = 0; k < pres.generators.size(); ++k) {
        if (r > ~0ULL / n) return ~0ULL;
        r *= n;
    }
    return r;
}

unsigned long long for_each_hom(const Presentation& pres, const Group& group,
                                const std::function<void(const std::vector<int>&)>& visit, int first_begin, int first_end) {
    const int gens = static_cast<int>(pres.generators.size());
    const int n = group.order();
    if (gens == 0) {
        if (first_begin > 0) return 0;
        visit({});
        return 1;
    }
    if (first_end < 0 || first_end > n) first_end = n;

    // block_end[k]: relator prefix length whose letters use only generators <= k.
    std::vector<int> block_end(gens, 0);
    for (int k = 0; k < gens; ++k) {
        int p = 0;
        while (p < static_cast<int>(pres.relator.size()) && pres.relator[p].generator <= k) ++p;
        block_end[k] = p;
    }
    std::vector<int> assignment(gens, 0);
    std::vector<int> prefix(gens + 1, 0);
    unsigned long long checks = 0;

    auto eval_block = [&](int k) {
        int e = prefix[k];
        const int begin = k == 0 ? 0 : block_end[k - 1];
        for (int p = begin; p < block_end[k]; ++p) {
            const auto& l = pres.relator[p];
            const int g = assignment[l.generator];
            e = group.mul(e, l.power > 0 ? g : group.inv(g));
        }
        prefix[k + 1] = e;
    };

    // Iterative odometer over generators 0..gens-1.
    int k = 0;
    assignment[0] = first_begin;
    if (first_begin >= first_end) return 0;
    while (k >= 0) {
        eval_block(k);
        if (k == gens - 1) {
            ++checks;
            if (prefix[gens] == 0) visit(assignment);
            // advance
            while (k >= 0) {
                ++assignment[k];
                const int limit = k == 0 ? first_end : n;
                if (assignment[k] < limit) break;
                assignment[k] = 0;
                --k;
            }
            if (k < 0) break;
        } else {
            ++k;
            assignment[k] = 0;
        }
    }
    return checks;
}

std::vector<std::vector<int>> enumerate_homs(const Presentation& pres, const Group& group, const EnumerationOptions& opts) {
    const auto need = relator_checks_required(pres, group);
    if (need > opts.budget)
        throw BudgetError("enumeration needs " + std::to_string(need) + " relator checks, budget is " + std::to_string(opts.budget), need);
    std::vector<std::vector<int>> out;
    for_each_hom(pres, group, [&](const std::vector<int>& a) { out.push_back(a); });
    return out;
}

LhsResult partition_lhs(const TheoryData& theory, const Surface& surface, const QuadraticRefinement* structure,
                        const EnumerationOptions& opts) {
    check_compatible(theory, surface, structure);
    const Presentation pres = presentation(surface);
    const auto need = relator_checks_required(pres, theory.group);
    if (need > opts.budget)
        throw BudgetError("enumeration needs " + std::to_string(need) + " relator checks, budget is " + std::to_string(opts.budget), need);

    const int n = theory.group.order();
    const int gens = static_cast<int>(pres.generators.size());
    const int slots = gens == 0 ? 1 : n;

    struct Partial {
        Complex sum;
        unsigned long long count = 0;
    };
    auto run = [&](int first) {
        Partial p;
        std::vector<int> x(gens);
        for_each_hom(
            pres, theory.group,
            [&](const std::vector<int>& a) {
                Complex w = integrate_cocycle(theory.group, theory.twist, pres, a).unit();
                if (structure) {
                    for (int i = 0; i < gens; ++i) x[i] = theory.twist.phi[a[i]];
                    const int q = quadratic_eval(*structure, x);
                    w *= theory.family == Family::Spin ? (q ? -1.0 : 1.0) : power(kI, q);
                }
                p.sum += w;
                ++p.count;
            },
            first, first + 1);
        return p;
    };

    std::vector<Partial> partial(slots);
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(slots));
    if (threads <= 1) {
        for (int f = 0; f < slots; ++f) partial[f] = run(f);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned t = 0; t < threads; ++t)
            jobs.push_back(std::async(std::launch::async, [&, t] {
                for (int f = static_cast<int>(t); f < slots; f += static_cast<int>(threads)) partial[f] = run(f);
            }));
        for (auto& j : jobs) j.get();
    }
    // Fixed-order reduction keeps the result independent of the thread count.
    LhsResult r;
    for (const auto& p : partial) {
        r.value += p.sum;
        r.hom_count += p.count;
    }
    r.value /= static_cast<double>(n);
    return r;
}

RhsResult partition_rhs(const TheoryData& theory, const Surface& surface, const QuadraticRefinement* structure,
                        const TwistedGroupAlgebra& algebra, const Classification& cls, double tol) {
    check_compatible(theory, surface, structure);
    const double order = theory.group.order();
    const int e = surface.euler();
    RhsResult r;
    switch (theory.family) {
    case Family::Oriented:
        for (const auto& rho : cls.irreps) r.terms.push_back(euler_weight(order, rho.dim, e));
        break;
    case Family::Unoriented:
        for (const auto& rho : cls.irreps) {
            const int s = ordinary_fs(algebra.group(), algebra.twist(), rho.character, tol);
            if (s == 0) continue;
            r.terms.push_back(power(static_cast<double>(s), surface.o_class()) * euler_weight(order, rho.dim, e));
        }
        break;
    case Family::Spin: {
        const int a = arf(*structure);
        r.invariant = a;
        for (const auto& rho : cls.supermodules)
            r.terms.push_back(((a * rho.q) % 2 ? -1.0 : 1.0) * euler_weight(order, rho.qdim(), e));
        break;
    }
    case Family::PinMinus: {
        const int k = abk(*structure).value;
        r.invariant = k;
        for (const auto& rho : cls.supermodules) {
            if (rho.reality != Reality::Real) continue;
            const auto s = super_fs(algebra, rho, tol);
            if (!s.eighth_root) throw NumericalError("real supermodule with vanishing indicator");
            r.terms.push_back(power(s.snapped(), k) * euler_weight(order, rho.qdim(), e));
        }
        break;
    }
    }
    for (auto t : r.terms) r.value += t;
    return r;
}

std::vector<PartitionReport> crosscheck(const TheoryData& theory, const Surface& surface,
                                        const std::vector<QuadraticRefinement>& structures, const CrosscheckOptions& opts) {
    std::vector<QuadraticRefinement> list = structures;
    if (needs_structure(theory.family) && list.empty())
        list = enumerate_structures(surface, theory.family == Family::Spin ? StructureKind::Spin : StructureKind::PinMinus);

    const TwistedGroupAlgebra algebra(theory.group, theory.twist);
    const Classification cls = needs_structure(theory.family)
                                   ? classify(algebra, opts.decompose)
                                   : Classification{decompose_regular(algebra, opts.decompose), {}};

    auto one = [&](const QuadraticRefinement* q) {
        PartitionReport rep;
        rep.family = to_string(theory.family);
        rep.surface = surface.str();
        if (q) rep.structure = q->str();
        const auto lhs = partition_lhs(theory, surface, q, opts.enumeration);
        const auto rhs = partition_rhs(theory, surface, q, algebra, cls, opts.decompose.tol.snap);
        rep.lhs = lhs.value;
        rep.hom_count = lhs.hom_count;
        rep.rhs = rhs.value;
        rep.rhs_terms = rhs.terms;
        rep.invariant = rhs.invariant;
        rep.abs_diff = std::abs(rep.lhs - rep.rhs);
        rep.pass = rep.abs_diff < opts.tolerance * std::max(1.0, std::abs(rep.rhs));
        return rep;
    };

    std::vector<PartitionReport> out;
    if (!needs_structure(theory.family)) {
        out.push_back(one(nullptr));
    } else {
        for (const auto& q : list) out.push_back(one(&q));
    }
    return out;
}

} // namespace superfs
