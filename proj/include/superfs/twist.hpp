#pragma once

#include "superfs/group.hpp"
#include "superfs/rational.hpp"

#include <vector>

namespace superfs {

enum class CoefficientRing { Z2, QZ };

/// Action data (phi, alpha) on a group of the given order.
///
/// phi is a homomorphism G -> Z2 stored as 0/1 per element. alpha is a
/// two-cocycle with values in Q/Z, row-major |G| x |G|; Z2-valued cocycles use
/// the values {0, 1/2}, so that e_g e_h = exp(2 pi i alpha(g,h)) e_gh covers
/// both the (-1)^alpha superalgebra convention and U(1) phases.
struct Twist {
    int order = 0;
    std::vector<int> phi;
    std::vector<Phase> alpha;

    static Twist trivial(int order);

    const Phase& a(int g, int h) const { return alpha[static_cast<std::size_t>(g) * order + h]; }
    Phase& a(int g, int h) { return alpha[static_cast<std::size_t>(g) * order + h]; }

    CoefficientRing ring() const;
    bool phi_trivial() const;

    friend bool operator==(const Twist&, const Twist&) = default;
};

/// A group together with an action on it; the unit most operations pass around.
struct TwistedGroup {
    Group group;
    Twist twist;
};

struct TwistValidation {
    Twist twist;
    /// Constant coboundary subtracted from alpha to reach alpha(e,.) = alpha(.,e) = 0.
    Phase shift;
};

/// Checks phi additivity and the two-cocycle identity, then normalizes.
/// Throws TwistError naming the offending elements.
TwistValidation validate_twist(const Group& g, Twist twist);

/// Returns alpha + d(beta) with d(beta)(g,h) = beta(g) + beta(h) - beta(gh).
Twist add_coboundary(const Group& g, const Twist& twist, const std::vector<Phase>& beta);

/// ker(phi) with the restricted cocycle.
struct EvenSubgroup {
    Group subgroup;
    /// Parent index of each subgroup element; elements[0] == 0.
    std::vector<int> elements;
    /// Subgroup index of each parent element, or -1 for odd elements.
    std::vector<int> position;
    /// 1 when phi is trivial, otherwise 2.
    int index = 1;
    /// alpha restricted to the subgroup; phi is zero there.
    Twist restricted;
};

EvenSubgroup even_subgroup(const Group& g, const Twist& twist);

/// Super tensor product rule on G x H: phi + phi' and
/// alpha + alpha' + phi(g1) phi'(h2), with (g, h) at index g * |H| + h.
/// Both cocycles must be Z2-valued.
TwistedGroup combine_twists(const TwistedGroup& a, const TwistedGroup& b);

/// (Z2)^n with the twist whose superalgebra is the complex Clifford algebra on
/// n odd generators squaring to +1. Bit i of an element index (counted from
/// the most significant of the n bits) is the i-th generator.
TwistedGroup clifford_twist(int n);

/// Every homomorphism G -> Z2 (including zero), in a deterministic order.
std::vector<std::vector<int>> homomorphisms_to_z2(const Group& g);

/// One normalized Z2-valued cocycle per class in H^2(G, Z2); the first is zero.
/// Throws TwistError if the group has more than 2^max_rank classes.
std::vector<std::vector<Phase>> h2_representatives(const Group& g, int max_rank = 12);

} // namespace superfs
