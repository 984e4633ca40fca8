#include "superfs/superalg.hpp"

#include "superfs/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

namespace superfs {

namespace {

using Rng = std::mt19937_64;
constexpr Complex kI{0.0, 1.0};
// Relative eigenvalue gaps below this are merged; merged clusters that turn out
// reducible are split again by recursion.
constexpr double kMergeWindow = 1e3;
constexpr int kMaxDepth = 12;

CMatrix random_hermitian(int d, Rng& rng) {
    std::normal_distribution<double> nd;
    CMatrix m(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) m(i, j) = Complex(nd(rng), nd(rng));
    return (m + m.adjoint()) * 0.5;
}

/// Left action X -> rho(g) X of a unitary representation.
struct Action {
    int dim;
    std::function<CMatrix(int, const CMatrix&)> apply;
};

Action regular_action(const TwistedGroupAlgebra& a) {
    const int n = a.order();
    return {n, [&a, n](int g, const CMatrix& x) {
                CMatrix y(n, x.cols());
                for (int h = 0; h < n; ++h) y.row(a.group().mul(g, h)) = a.omega(g, h) * x.row(h);
                return y;
            }};
}

Action dense_action(std::vector<CMatrix> mats) {
    const int d = static_cast<int>(mats.front().rows());
    return {d, [m = std::move(mats)](int g, const CMatrix& x) -> CMatrix { return m[g] * x; }};
}

/// (1/|G|) sum_g sign(g) rho(g) X rho(g)^dagger.
CMatrix twirl(const Action& act, int order, const CMatrix& x, const std::function<double(int)>& sign) {
    CMatrix acc = CMatrix::Zero(act.dim, act.dim);
    for (int g = 0; g < order; ++g) {
        const CMatrix gx = act.apply(g, x);
        acc += sign(g) * act.apply(g, gx.adjoint()).adjoint();
    }
    return acc / static_cast<double>(order);
}

std::vector<Complex> subspace_character(const Action& act, int order, const CMatrix& basis) {
    std::vector<Complex> chi(order);
    for (int g = 0; g < order; ++g) chi[g] = basis.conjugate().cwiseProduct(act.apply(g, basis)).sum();
    return chi;
}

double character_norm(std::span<const Complex> chi) {
    double s = 0;
    for (auto c : chi) s += std::norm(c);
    return s / static_cast<double>(chi.size());
}

Complex character_inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s = 0;
    for (std::size_t g = 0; g < a.size(); ++g) s += std::conj(a[g]) * b[g];
    return s / static_cast<double>(a.size());
}

std::vector<CMatrix> eigen_clusters(const CMatrix& h, double tol) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
    const auto& ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    std::vector<CMatrix> out;
    int start = 0;
    const int d = static_cast<int>(ev.size());
    for (int i = 1; i <= d; ++i) {
        if (i == d || (ev(i) - ev(i - 1)) > tol * kMergeWindow * scale) {
            out.push_back(es.eigenvectors().middleCols(start, i - start));
            start = i;
        }
    }
    return out;
}

void split_irreducible(const Action& act, int order, Rng& rng, const Tolerances& tol, int depth,
                       std::vector<CMatrix>& out) {
    if (act.dim == 1) {
        out.push_back(CMatrix::Identity(1, 1));
        return;
    }
    if (depth > kMaxDepth)
        throw NumericalError("eigenvalue clustering ambiguous at tolerance; re-run with a different seed");
    const CMatrix h = twirl(act, order, random_hermitian(act.dim, rng), [](int) { return 1.0; });
    const auto clusters = eigen_clusters(h, tol.cluster);
    for (const auto& c : clusters) {
        const auto chi = subspace_character(act, order, c);
        const double norm = character_norm(chi);
        if (std::abs(norm - 1.0) < tol.snap) {
            out.push_back(c);
        } else if (norm > 1.5) {
            std::vector<CMatrix> mats(order);
            for (int g = 0; g < order; ++g) mats[g] = c.adjoint() * act.apply(g, c);
            std::vector<CMatrix> sub;
            split_irreducible(dense_action(std::move(mats)), order, rng, tol, depth + 1, sub);
            for (const auto& s : sub) out.push_back(c * s);
        } else {
            std::ostringstream os;
            os << "invariant subspace has character norm " << norm << "; re-run with a different seed";
            throw NumericalError(os.str());
        }
    }
}

auto character_key(const UngradedIrrep& r) {
    std::vector<long long> key;
    key.reserve(2 * r.character.size());
    for (auto c : r.character) {
        key.push_back(std::llround(c.real() * 1e6));
        key.push_back(std::llround(c.imag() * 1e6));
    }
    return std::make_tuple(r.dim, std::move(key));
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void require_z2(const TwistedGroupAlgebra& a, const char* what) {
    if (!a.z2_valued()) throw TwistError(std::string(what) + " requires a Z2-valued cocycle");
}

} // namespace

AlgebraElement AlgebraElement::star() const {
    AlgebraElement out{coefficients};
    for (auto& c : out.coefficients) c = std::conj(c);
    return out;
}

TwistedGroupAlgebra::TwistedGroupAlgebra(Group group, Twist twist)
    : group_(std::move(group)), twist_(validate_twist(group_, std::move(twist)).twist) {
    const int n = group_.order();
    omega_.resize(static_cast<std::size_t>(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) omega_[static_cast<std::size_t>(g) * n + h] = twist_.a(g, h).unit();
}

AlgebraElement TwistedGroupAlgebra::basis(int g) const {
    AlgebraElement e{std::vector<Complex>(order(), 0.0)};
    e.coefficients[g] = 1.0;
    return e;
}

AlgebraElement TwistedGroupAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    const int n = order();
    AlgebraElement out{std::vector<Complex>(n, 0.0)};
    for (int g = 0; g < n; ++g) {
        if (a.coefficients[g] == 0.0) continue;
        for (int h = 0; h < n; ++h) out.coefficients[group_.mul(g, h)] += a.coefficients[g] * b.coefficients[h] * omega(g, h);
    }
    return out;
}

std::vector<UngradedIrrep> decompose_regular(const TwistedGroupAlgebra& algebra, const DecomposeOptions& opts) {
    const int n = algebra.order();
    if (n > opts.max_order)
        throw InputError("group order " + std::to_string(n) + " exceeds decomposition cap " + std::to_string(opts.max_order));
    Rng rng(opts.seed);
    const Action reg = regular_action(algebra);

    std::vector<CMatrix> bases;
    split_irreducible(reg, n, rng, opts.tol, 0, bases);

    std::vector<UngradedIrrep> irreps;
    for (const auto& b : bases) {
        auto chi = subspace_character(reg, n, b);
        bool matched = false;
        for (auto& r : irreps) {
            const Complex ip = character_inner(r.character, chi);
            if (std::abs(ip - 1.0) < opts.tol.snap) {
                ++r.multiplicity;
                matched = true;
                break;
            }
            if (std::abs(ip) > opts.tol.snap) throw NumericalError("irreducible characters neither equal nor orthogonal");
        }
        if (matched) continue;
        UngradedIrrep r;
        r.dim = static_cast<int>(b.cols());
        r.character = std::move(chi);
        r.multiplicity = 1;
        r.matrices.resize(n);
        for (int g = 0; g < n; ++g) {
            const CMatrix gb = reg.apply(g, b);
            r.matrices[g] = b.adjoint() * gb;
            if (max_abs(gb - b * r.matrices[g]) > opts.tol.residual)
                throw NumericalError("computed subspace is not invariant; re-run with a different seed");
        }
        irreps.push_back(std::move(r));
    }

    int total = 0;
    for (const auto& r : irreps) {
        if (r.multiplicity != r.dim) throw NumericalError("irrep multiplicity differs from its dimension");
        total += r.dim * r.dim;
    }
    if (total != n) throw NumericalError("sum of squared irrep dimensions differs from |G|");
    std::sort(irreps.begin(), irreps.end(),
              [](const UngradedIrrep& a, const UngradedIrrep& b) { return character_key(a) < character_key(b); });
    return irreps;
}

double Supermodule::qdim() const { return dim() / (q ? std::numbers::sqrt2 : 1.0); }

std::vector<Supermodule> assemble_supermodules(const TwistedGroupAlgebra& algebra,
                                               const std::vector<UngradedIrrep>& irreps, std::uint64_t seed,
                                               const Tolerances& tol) {
    const int n = algebra.order();
    const auto& grp = algebra.group();
    const bool graded = !algebra.twist().phi_trivial();

    std::vector<int> partner(irreps.size(), -1);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        std::vector<Complex> twisted(n);
        for (int g = 0; g < n; ++g) twisted[g] = algebra.odd(g) ? -irreps[i].character[g] : irreps[i].character[g];
        for (std::size_t j = 0; j < irreps.size(); ++j)
            if (irreps[j].dim == irreps[i].dim && std::abs(character_inner(irreps[j].character, twisted) - 1.0) < tol.snap) {
                partner[i] = static_cast<int>(j);
                break;
            }
        if (partner[i] < 0) throw NumericalError("parity pairing inconsistent: irrep " + std::to_string(i) + " has no partner");
    }
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (partner[partner[i]] != static_cast<int>(i)) throw NumericalError("parity pairing is not an involution");

    std::vector<Supermodule> out;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        const auto& r = irreps[i];
        const int d = r.dim;
        Supermodule s;
        if (partner[i] == static_cast<int>(i)) {
            s.q = 0;
            s.components = {static_cast<int>(i)};
            if (!graded) {
                s.dim_even = d;
                s.matrices = r.matrices;
                s.grading_in_irrep_basis = CMatrix::Identity(d, d);
            } else {
                // Intertwiner rho(g) u = (-1)^phi(g) u rho(g) by signed averaging.
                Rng rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
                const Action act = dense_action(r.matrices);
                CMatrix u;
                double c = 0;
                for (int attempt = 0; attempt < 16 && c <= tol.residual; ++attempt) {
                    u = twirl(act, n, random_hermitian(d, rng), [&](int g) { return algebra.odd(g) ? -1.0 : 1.0; });
                    const CMatrix u2 = u * u;
                    c = u2.trace().real() / d;
                    if (c > tol.residual && max_abs(u2 - c * CMatrix::Identity(d, d)) > 1e-6 * c)
                        throw NumericalError("twisted intertwiner does not square to a scalar");
                }
                if (c <= tol.residual) throw NumericalError("could not find an invertible twisted intertwiner");
                u /= std::sqrt(c);
                Eigen::SelfAdjointEigenSolver<CMatrix> es(u);
                const auto& ev = es.eigenvalues();
                std::vector<int> plus, minus;
                for (int k = 0; k < d; ++k) (ev(k) > 0 ? plus : minus).push_back(k);
                CMatrix basis(d, d);
                int col = 0;
                for (int k : plus) basis.col(col++) = es.eigenvectors().col(k);
                for (int k : minus) basis.col(col++) = es.eigenvectors().col(k);
                s.dim_even = static_cast<int>(plus.size());
                s.dim_odd = static_cast<int>(minus.size());
                s.matrices.resize(n);
                for (int g = 0; g < n; ++g) s.matrices[g] = basis.adjoint() * r.matrices[g] * basis;
                s.grading_in_irrep_basis = u;
            }
            s.character = r.character;
        } else if (partner[i] > static_cast<int>(i)) {
            s.q = 1;
            s.components = {static_cast<int>(i), partner[i]};
            s.dim_even = s.dim_odd = d;
            s.matrices.resize(n);
            s.character.resize(n);
            for (int g = 0; g < n; ++g) {
                CMatrix m = CMatrix::Zero(2 * d, 2 * d);
                if (algebra.odd(g)) {
                    m.topRightCorner(d, d) = r.matrices[g];
                    m.bottomLeftCorner(d, d) = r.matrices[g];
                } else {
                    m.topLeftCorner(d, d) = r.matrices[g];
                    m.bottomRightCorner(d, d) = r.matrices[g];
                }
                s.matrices[g] = std::move(m);
                s.character[g] = algebra.odd(g) ? Complex{} : 2.0 * r.character[g];
            }
        } else {
            continue;
        }
        double imag = 0;
        for (auto c : s.character) imag = std::max(imag, std::abs(c.imag()));
        s.reality = imag < tol.snap ? Reality::Real : Reality::Complex;
        out.push_back(std::move(s));
    }
    (void)grp;
    return out;
}

Classification classify(const TwistedGroupAlgebra& algebra, const DecomposeOptions& opts) {
    Classification c;
    c.irreps = decompose_regular(algebra, opts);
    c.supermodules = assemble_supermodules(algebra, c.irreps, opts.seed, opts.tol);
    return c;
}

SpecialElement special_element(const TwistedGroupAlgebra& algebra, const Classification& cls, int index,
                               const Tolerances& tol) {
    const auto& s = cls.supermodules.at(index);
    if (s.reality != Reality::Real) throw Error("special element is defined only for real supermodules");
    const int n = algebra.order();

    std::vector<int> offset(cls.irreps.size());
    int rows = 0;
    for (std::size_t i = 0; i < cls.irreps.size(); ++i) {
        offset[i] = rows;
        rows += cls.irreps[i].dim * cls.irreps[i].dim;
    }
    if (rows != n) throw NumericalError("irrep list is incomplete");

    CMatrix m(n, n);
    Eigen::VectorXcd target = Eigen::VectorXcd::Zero(n);
    for (std::size_t i = 0; i < cls.irreps.size(); ++i) {
        const int d = cls.irreps[i].dim;
        for (int g = 0; g < n; ++g)
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) m(offset[i] + r * d + c, g) = cls.irreps[i].matrices[g](r, c);
    }
    auto set_target = [&](int irrep, const CMatrix& t) {
        const int d = cls.irreps[irrep].dim;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) target(offset[irrep] + r * d + c) = t(r, c);
    };
    if (s.q == 0) {
        set_target(s.components[0], s.grading_in_irrep_basis);
    } else {
        const int d = cls.irreps[s.components[0]].dim;
        set_target(s.components[0], CMatrix::Identity(d, d));
        set_target(s.components[1], -CMatrix::Identity(d, d));
    }
    Eigen::VectorXcd coef = m.partialPivLu().solve(target);
    if ((m * coef - target).norm() > tol.residual * std::max(1.0, target.norm()))
        throw NumericalError("special element solve residual above tolerance");

    // u* = lambda u with lambda = +-1 on a *-stable summand.
    const Eigen::VectorXcd conj = coef.conjugate();
    const Complex lambda = coef.dot(conj) / coef.squaredNorm();
    if ((conj - lambda * coef).norm() > tol.snap * coef.norm() || std::abs(std::abs(lambda.real()) - 1.0) > tol.snap)
        throw NumericalError("summand is not stable under the conjugation");
    const int sign = lambda.real() > 0 ? 1 : -1;
    if (sign < 0) coef *= kI;

    SpecialElement out;
    out.u.coefficients.assign(coef.data(), coef.data() + n);
    out.sign = sign;

    const int parity = s.q;
    for (int g = 0; g < n; ++g)
        if ((algebra.odd(g) ? 1 : 0) != parity && std::abs(out.u.coefficients[g]) > tol.snap)
            throw NumericalError("special element has the wrong parity");

    // Independent confirmation of u^2 = sign * 1 on the summand.
    const AlgebraElement sq = algebra.multiply(out.u, out.u);
    const auto& ir = cls.irreps[s.components[0]];
    CMatrix img = CMatrix::Zero(ir.dim, ir.dim);
    for (int g = 0; g < n; ++g) img += sq.coefficients[g] * ir.matrices[g];
    if (max_abs(img - static_cast<double>(sign) * CMatrix::Identity(ir.dim, ir.dim)) > tol.snap)
        throw NumericalError("special element does not square to +-1");
    return out;
}

int snap_sign(Complex value, double tol) {
    const double r = std::round(value.real());
    if (std::abs(value - Complex(r, 0.0)) > tol || std::abs(r) > 1.0) {
        std::ostringstream os;
        os << "value " << value << " is not within " << tol << " of {-1, 0, +1}";
        throw SnapError(os.str());
    }
    return static_cast<int>(r);
}

int ordinary_fs(const Group& group, const Twist& twist, std::span<const Complex> character, double tol) {
    const int n = group.order();
    Complex s = 0;
    for (int g = 0; g < n; ++g) s += twist.a(g, g).unit() * character[group.mul(g, g)];
    return snap_sign(s / static_cast<double>(n), tol);
}

int gow_indicator(const Group& group, const Twist& twist, const EvenSubgroup& even,
                  std::span<const Complex> rho0_character, double tol) {
    if (even.index != 2) throw TwistError("Gow indicator needs an index-2 even subgroup");
    Complex s = 0;
    for (int g = 0; g < group.order(); ++g)
        if (twist.phi[g]) s += twist.a(g, g).unit() * rho0_character[even.position[group.mul(g, g)]];
    return snap_sign(s / static_cast<double>(even.elements.size()), tol);
}

Complex SuperIndicator::snapped() const {
    if (!eighth_root) return 0.0;
    return std::polar(1.0, 2.0 * std::numbers::pi * *eighth_root / 8.0);
}

std::string SuperIndicator::symbolic() const {
    if (!eighth_root) return "0";
    return "e^{2·pi·i·" + std::to_string(*eighth_root) + "/8}";
}

Complex super_fs_raw(const TwistedGroupAlgebra& algebra, const Supermodule& rho) {
    const int n = algebra.order();
    const auto& grp = algebra.group();
    Complex s = 0;
    for (int g = 0; g < n; ++g) {
        const Complex w = algebra.omega(g, g) * rho.character[grp.mul(g, g)];
        s += algebra.odd(g) ? kI * w : w;
    }
    return s / (static_cast<double>(n) * (rho.q ? std::numbers::sqrt2 : 1.0));
}

SuperIndicator snap_eighth_root(Complex raw, double tol) {
    SuperIndicator out{raw, std::nullopt};
    if (std::abs(raw) < tol) return out;
    const double turns = std::arg(raw) / (2.0 * std::numbers::pi) * 8.0;
    const int k = static_cast<int>(((std::lround(turns) % 8) + 8) % 8);
    out.eighth_root = k;
    if (std::abs(raw - out.snapped()) > tol) {
        std::ostringstream os;
        os << "value " << raw << " is neither zero nor an eighth root of unity";
        throw SnapError(os.str());
    }
    return out;
}

SuperIndicator super_fs(const TwistedGroupAlgebra& algebra, const Supermodule& rho, double tol) {
    require_z2(algebra, "super Frobenius-Schur indicator");
    return snap_eighth_root(super_fs_raw(algebra, rho), tol);
}

std::vector<Complex> even_part_character(const Supermodule& rho, const EvenSubgroup& even) {
    std::vector<Complex> chi(even.elements.size());
    for (std::size_t k = 0; k < even.elements.size(); ++k)
        chi[k] = rho.matrices[even.elements[k]].topLeftCorner(rho.dim_even, rho.dim_even).trace();
    return chi;
}

std::optional<int> bw_class(int q, Reality reality, std::optional<int> u_sign, std::optional<int> fs_type) {
    if (reality == Reality::Complex) {
        if (u_sign) throw Error("u sign supplied for a complex supermodule");
        return std::nullopt;
    }
    if (!u_sign || !fs_type || (*u_sign != 1 && *u_sign != -1) || (*fs_type != 1 && *fs_type != -1))
        throw Error("real supermodule needs u sign and a nonzero ordinary indicator");
    const bool plus = *u_sign == 1;
    const bool real = *fs_type == 1;
    if (q == 0) return real ? (plus ? 0 : 2) : (plus ? 4 : 6);
    return real ? (plus ? 1 : 7) : (plus ? 5 : 3);
}

bool ClassificationReport::pass() const {
    if (!failures.empty() || !dimension_check) return false;
    return std::all_of(supermodules.begin(), supermodules.end(), [](const auto& s) { return s.pass(); });
}

ClassificationReport verify_main_theorem(const TwistedGroupAlgebra& algebra, const DecomposeOptions& opts) {
    return verify_main_theorem(algebra, classify(algebra, opts), opts);
}

ClassificationReport verify_main_theorem(const TwistedGroupAlgebra& algebra, const Classification& cls,
                                         const DecomposeOptions& opts) {
    require_z2(algebra, "theorem verification");
    const auto& tol = opts.tol;
    const auto& grp = algebra.group();
    const auto& tw = algebra.twist();
    const int n = algebra.order();
    const EvenSubgroup even = even_subgroup(grp, tw);
    const bool graded = even.index == 2;

    ClassificationReport rep;
    rep.order = n;
    rep.phi = tw.phi;
    rep.ring = tw.ring();

    for (std::size_t idx = 0; idx < cls.supermodules.size(); ++idx) {
        const auto& s = cls.supermodules[idx];
        SupermoduleReport r;
        r.dim_even = s.dim_even;
        r.dim_odd = s.dim_odd;
        r.q = s.q;
        r.reality = s.reality;
        auto fail = [&](const std::string& m) { r.failures.push_back(m); };

        // P rho(g) P = (-1)^phi(g) rho(g): the off-parity blocks vanish.
        r.checks.grading = true;
        const int de = s.dim_even, dd = s.dim_odd;
        for (int g = 0; g < n && r.checks.grading; ++g) {
            const auto& m = s.matrices[g];
            const double off = algebra.odd(g) ? std::max(max_abs(m.topLeftCorner(de, de)), max_abs(m.bottomRightCorner(dd, dd)))
                                              : std::max(max_abs(m.topRightCorner(de, dd)), max_abs(m.bottomLeftCorner(dd, de)));
            if (off > 1e-8) r.checks.grading = false;
        }
        if (!r.checks.grading) fail("grading operator does not implement the parity");

        const auto chi0 = even_part_character(s, even);
        const double norm_full = character_norm(s.character);
        const double norm_even = character_norm(chi0);
        double odd_trace = 0;
        for (int g = 0; g < n; ++g)
            if (algebra.odd(g)) odd_trace = std::max(odd_trace, std::abs(s.character[g]));
        if (s.q == 0)
            r.checks.q_type = std::abs(norm_full - 1.0) < tol.snap;
        else
            r.checks.q_type = std::abs(norm_full - 2.0) < tol.snap && std::abs(norm_even - 1.0) < tol.snap && odd_trace < 1e-8;
        if (!r.checks.q_type) fail("q-type irreducibility condition violated");

        try {
            r.s_ordinary = ordinary_fs(even.subgroup, even.restricted, chi0, tol.snap);
        } catch (const SnapError& e) {
            fail(std::string("S(rho0): ") + e.what());
        }
        int eta = 0;
        if (graded) {
            try {
                eta = gow_indicator(grp, tw, even, chi0, tol.snap);
                r.eta_gow = eta;
            } catch (const SnapError& e) {
                fail(std::string("Gow indicator: ") + e.what());
            }
        }

        r.s_super_raw = super_fs_raw(algebra, s);
        try {
            r.s_super = snap_eighth_root(r.s_super_raw, tol.snap);
        } catch (const SnapError& e) {
            fail(e.what());
        }

        if (s.reality == Reality::Real) {
            try {
                r.u_sign = special_element(algebra, cls, static_cast<int>(idx), tol).sign;
                r.fs_type = s.q == 0 ? ordinary_fs(grp, tw, s.character, tol.snap) : r.s_ordinary;
                r.bw = bw_class(s.q, s.reality, r.u_sign, r.fs_type);
            } catch (const Error& e) {
                fail(std::string("Brauer-Wall inputs: ") + e.what());
            }
        }

        if (r.s_super) {
            if (s.reality == Reality::Complex)
                r.checks.theorem = !r.s_super->eighth_root.has_value();
            else
                r.checks.theorem = r.bw && r.s_super->eighth_root == r.bw;
        }
        if (!r.checks.theorem) fail("indicator does not match reality / Brauer-Wall class");

        const double root2q = s.q ? std::numbers::sqrt2 : 1.0;
        if (r.s_ordinary) {
            const Complex gow = (static_cast<double>(*r.s_ordinary) + kI * static_cast<double>(eta)) / root2q;
            r.checks.gow_identity = std::abs(gow - r.s_super_raw) < tol.snap;
        }
        if (!r.checks.gow_identity) fail("Gow identity fails");

        // Same quantity through tr rho(e_g)^2, split by parity.
        Complex even_sum = 0, odd_sum = 0;
        for (int g = 0; g < n; ++g) {
            const Complex t = (s.matrices[g] * s.matrices[g]).trace();
            (algebra.odd(g) ? odd_sum : even_sum) += t;
        }
        const Complex rewritten = (even_sum + kI * odd_sum) / (static_cast<double>(n) * root2q);
        r.checks.rewrite_identity = std::abs(rewritten - r.s_super_raw) < tol.snap;
        if (!r.checks.rewrite_identity) fail("rewrite identity fails");

        rep.dimension_sum += static_cast<double>(s.dim()) * s.dim() / (s.q ? 2.0 : 1.0);
        rep.supermodules.push_back(std::move(r));
    }
    rep.dimension_check = std::abs(rep.dimension_sum - n) < tol.snap;
    if (!rep.dimension_check) rep.failures.push_back("sum of dim^2 / 2^q differs from |G|");
    return rep;
}

} // namespace superfs
