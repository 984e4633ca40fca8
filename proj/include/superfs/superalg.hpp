#pragma once

#include "superfs/group.hpp"
#include "superfs/twist.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace superfs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct Tolerances {
    double cluster = 1e-8;
    double snap = 1e-6;
    double residual = 1e-8;
};

/// Element sum_g c_g e_g of a twisted group algebra.
struct AlgebraElement {
    std::vector<Complex> coefficients;

    /// The conjugate-linear involution: complex-conjugates every coefficient.
    AlgebraElement star() const;
};

/// C[G] with e_g e_h = omega(g,h) e_gh, omega = exp(2 pi i alpha), graded by phi.
class TwistedGroupAlgebra {
public:
    /// Validates (and normalizes) the twist.
    TwistedGroupAlgebra(Group group, Twist twist);
    explicit TwistedGroupAlgebra(TwistedGroup tg) : TwistedGroupAlgebra(std::move(tg.group), std::move(tg.twist)) {}

    const Group& group() const noexcept { return group_; }
    const Twist& twist() const noexcept { return twist_; }
    int order() const noexcept { return group_.order(); }
    Complex omega(int g, int h) const noexcept { return omega_[static_cast<std::size_t>(g) * order() + h]; }
    bool odd(int g) const noexcept { return twist_.phi[g] != 0; }
    bool z2_valued() const noexcept { return twist_.ring() == CoefficientRing::Z2; }

    AlgebraElement basis(int g) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

private:
    Group group_;
    Twist twist_;
    std::vector<Complex> omega_;
};

/// Irreducible (projective) representation of the ungraded algebra, unitary.
struct UngradedIrrep {
    int dim = 0;
    std::vector<CMatrix> matrices;
    std::vector<Complex> character;
    /// Number of copies found in the regular representation (equals dim).
    int multiplicity = 0;
};

struct DecomposeOptions {
    std::uint64_t seed = 1;
    int max_order = 96;
    Tolerances tol;
};

/// Splits the left regular representation into irreducibles by eigen-splitting
/// random elements of its commutant. Output is sorted by (dim, character).
std::vector<UngradedIrrep> decompose_regular(const TwistedGroupAlgebra& algebra, const DecomposeOptions& opts = {});

enum class Reality { Real, Complex };

/// Irreducible supermodule. The basis is graded: the first dim_even coordinates
/// span V0, and P = diag(+1, -1) is the grading.
struct Supermodule {
    int q = 0;
    int dim_even = 0;
    int dim_odd = 0;
    std::vector<CMatrix> matrices;
    std::vector<Complex> character;
    /// Ungraded irreps in this summand: {i} for q = 0, {i, sigma(i)} for q = 1.
    std::vector<int> components;
    /// q = 0 only: the grading operator written in the basis of irreps[components[0]].
    CMatrix grading_in_irrep_basis;
    Reality reality = Reality::Complex;

    int dim() const noexcept { return dim_even + dim_odd; }
    double qdim() const;
};

/// Pairs irreps under chi -> (-1)^phi chi and builds one supermodule per orbit.
std::vector<Supermodule> assemble_supermodules(const TwistedGroupAlgebra& algebra,
                                               const std::vector<UngradedIrrep>& irreps,
                                               std::uint64_t seed = 1, const Tolerances& tol = {});

struct Classification {
    std::vector<UngradedIrrep> irreps;
    std::vector<Supermodule> supermodules;
};

Classification classify(const TwistedGroupAlgebra& algebra, const DecomposeOptions& opts = {});

struct SpecialElement {
    AlgebraElement u;
    int sign = 1;
};

/// Graded-central even (q = 0) or central odd (q = 1) element supported on the
/// summand of supermodule `index`, normalized to u* = u, u^2 = sign * 1.
/// Throws Error for complex supermodules.
SpecialElement special_element(const TwistedGroupAlgebra& algebra, const Classification& cls, int index,
                               const Tolerances& tol = {});

/// Nearest of {-1, 0, +1}; throws SnapError if farther than tol.
int snap_sign(Complex value, double tol);

/// (1/|G|) sum_g omega(g,g) chi(g^2), snapped to {-1, 0, +1}.
int ordinary_fs(const Group& group, const Twist& twist, std::span<const Complex> character, double tol = 1e-6);

/// (1/|G0|) sum over odd g of omega(g,g) chi0(g^2), with chi0 indexed by the
/// even subgroup. Requires phi nontrivial.
int gow_indicator(const Group& group, const Twist& twist, const EvenSubgroup& even,
                  std::span<const Complex> rho0_character, double tol = 1e-6);

/// Zero or exp(2 pi i k / 8), plus the raw value it was snapped from.
struct SuperIndicator {
    Complex raw;
    /// nullopt means zero.
    std::optional<int> eighth_root;

    Complex snapped() const;
    /// "0" or "e^{2·pi·i·k/8}".
    std::string symbolic() const;

    friend bool operator==(const SuperIndicator&, const SuperIndicator&) = default;
};

Complex super_fs_raw(const TwistedGroupAlgebra& algebra, const Supermodule& rho);
SuperIndicator snap_eighth_root(Complex raw, double tol = 1e-6);
SuperIndicator super_fs(const TwistedGroupAlgebra& algebra, const Supermodule& rho, double tol = 1e-6);

/// Character of rho restricted to V0 on the even subgroup.
std::vector<Complex> even_part_character(const Supermodule& rho, const EvenSubgroup& even);

/// Brauer-Wall lookup. fs_type is the ordinary indicator (+1 real, -1
/// quaternionic) of rho (q = 0) or rho|V0 (q = 1). Returns nullopt for complex.
std::optional<int> bw_class(int q, Reality reality, std::optional<int> u_sign, std::optional<int> fs_type);

struct SupermoduleChecks {
    bool theorem = false;
    bool gow_identity = false;
    bool rewrite_identity = false;
    bool grading = false;
    bool q_type = false;

    friend bool operator==(const SupermoduleChecks&, const SupermoduleChecks&) = default;
};

struct SupermoduleReport {
    int dim_even = 0;
    int dim_odd = 0;
    int q = 0;
    Reality reality = Reality::Complex;
    std::optional<int> u_sign;
    /// Third two-fold division input; null for complex supermodules.
    std::optional<int> fs_type;
    /// S(rho0) over G0 (rho0 = rho when phi is trivial).
    std::optional<int> s_ordinary;
    std::optional<int> eta_gow;
    Complex s_super_raw;
    std::optional<SuperIndicator> s_super;
    std::optional<int> bw;
    SupermoduleChecks checks;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }

    friend bool operator==(const SupermoduleReport&, const SupermoduleReport&) = default;
};

struct ClassificationReport {
    int order = 0;
    std::vector<int> phi;
    CoefficientRing ring = CoefficientRing::Z2;
    std::vector<SupermoduleReport> supermodules;
    /// sum over supermodules of dim^2 / 2^q.
    double dimension_sum = 0;
    bool dimension_check = false;
    std::vector<std::string> failures;

    bool pass() const;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Classifies the algebra and cross-checks every invariant of each supermodule.
/// Check failures are recorded in the report, never thrown.
ClassificationReport verify_main_theorem(const TwistedGroupAlgebra& algebra, const DecomposeOptions& opts = {});

/// Same, reusing an existing classification.
ClassificationReport verify_main_theorem(const TwistedGroupAlgebra& algebra, const Classification& cls,
                                         const DecomposeOptions& opts = {});

} // namespace superfs
