#pragma once

#include "superfs/group.hpp"
#include "superfs/rational.hpp"
#include "superfs/twist.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace superfs {

/// Closed connected surface: orientable of genus g, or a connected sum of k >= 1
/// projective planes.
class Surface {
public:
    static Surface orientable(int genus);
    static Surface nonorientable(int crosscaps);
    /// "orientable:<g>" or "nonorientable:<k>".
    static Surface parse(std::string_view text);

    bool is_orientable() const noexcept { return orientable_; }
    int genus() const noexcept { return orientable_ ? n_ : 0; }
    int crosscaps() const noexcept { return orientable_ ? 0 : n_; }
    int euler() const noexcept { return orientable_ ? 2 - 2 * n_ : 2 - n_; }
    /// e mod 2: the unoriented bordism class.
    int o_class() const noexcept { return ((euler() % 2) + 2) % 2; }
    /// Dimension of H^1(Sigma, Z2).
    int b1() const noexcept { return orientable_ ? 2 * n_ : n_; }
    std::string str() const;

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    Surface(bool o, int n) : orientable_(o), n_(n) {}
    bool orientable_;
    int n_;
};

struct Letter {
    int generator;
    /// +1 or -1.
    int power;
    friend bool operator==(const Letter&, const Letter&) = default;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Letter> relator;
};

/// a1 b1 a1^-1 b1^-1 ... for orientable; c1 c1 c2 c2 ... otherwise.
Presentation presentation(const Surface& surface);

/// Symmetric F2 matrix of the cup pairing in the basis dual to the standard
/// generators: hyperbolic pairs when orientable, identity otherwise.
std::vector<std::vector<int>> cup_matrix(const Surface& surface);

enum class RefinementRing { Z2, Z4 };

/// Quadratic refinement of the cup pairing, given by its values on the basis.
struct QuadraticRefinement {
    RefinementRing ring = RefinementRing::Z2;
    std::vector<int> basis_values;
    std::vector<std::vector<int>> cup;

    int b1() const noexcept { return static_cast<int>(cup.size()); }
    /// "spin:q1,q2,..." or "pin:q1,...".
    std::string str() const;
};

/// Builds and checks a refinement: dimension and, for Z4, parity against the cup diagonal.
QuadraticRefinement make_refinement(const Surface& surface, RefinementRing ring, std::vector<int> values);

/// Value at x in Z2 (ring Z2) or Z4 (ring Z4).
int quadratic_eval(const QuadraticRefinement& form, const std::vector<int>& x);

/// Gauss sum sum_x (-1)^Q(x) or sum_x i^Q(x), unnormalized.
std::complex<double> gauss_sum(const QuadraticRefinement& form);

int arf(const QuadraticRefinement& form);

struct AbkResult {
    int value = 0;
    /// Normalized Gauss sum before snapping.
    std::complex<double> raw;
};

AbkResult abk(const QuadraticRefinement& form);

enum class StructureKind { Spin, PinMinus };

/// Every spin (Z2, orientable only) or pin- (Z4) refinement on the surface.
std::vector<QuadraticRefinement> enumerate_structures(const Surface& surface, StructureKind kind);

/// Evaluates the relator with each letter lifted to e_g (or e_g^-1) in the
/// twisted group algebra; returns the phase lambda of lambda * e_1 as an element
/// of Q/Z. assignment[i] is the image of generator i.
Phase integrate_cocycle(const Group& group, const Twist& twist, const Presentation& pres, const std::vector<int>& assignment);

} // namespace superfs
