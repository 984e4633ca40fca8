#pragma once

#include "superfs/superalg.hpp"
#include "superfs/surfaces.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace superfs {

enum class Family { Oriented, Unoriented, Spin, PinMinus };

std::string to_string(Family f);
/// "oriented", "unoriented", "spin", "pin-".
Family parse_family(std::string_view text);

/// Gauge group with its action. Oriented and unoriented theories carry phi = 0;
/// unoriented and pin- theories need a Z2-valued alpha.
struct TheoryData {
    Group group;
    Twist twist;
    Family family;
};

/// Validates the twist and applies the family's restrictions.
TheoryData make_theory(Group group, Twist twist, Family family);

struct EnumerationOptions {
    /// Maximum number of relator evaluations, |G|^(#generators).
    unsigned long long budget = 100'000'000ULL;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Saturating |G|^(#generators).
unsigned long long relator_checks_required(const Presentation& pres, const Group& group);

/// Calls visit(assignment) for every homomorphism pi_1 -> G whose first
/// generator maps into [first_begin, first_end). Order is lexicographic.
/// Returns the number of relator evaluations performed.
unsigned long long for_each_hom(const Presentation& pres, const Group& group,
                                const std::function<void(const std::vector<int>&)>& visit, int first_begin = 0,
                                int first_end = -1);

/// All homomorphisms, after checking the budget. Throws BudgetError.
std::vector<std::vector<int>> enumerate_homs(const Presentation& pres, const Group& group,
                                             const EnumerationOptions& opts = {});

struct LhsResult {
    Complex value;
    unsigned long long hom_count = 0;
};

/// (1/|G|) sum over homomorphisms of exp(2 pi i int f*alpha) times the
/// structure weight (-1)^Q(f*phi) or i^Q(f*phi).
LhsResult partition_lhs(const TheoryData& theory, const Surface& surface, const QuadraticRefinement* structure,
                        const EnumerationOptions& opts = {});

struct RhsResult {
    Complex value;
    std::vector<Complex> terms;
    /// Arf (spin) or ABK (pin-) of the structure.
    std::optional<int> invariant;
};

/// Representation-theoretic side; `cls` must classify the theory's algebra
/// (with phi forced to zero for oriented / unoriented families).
RhsResult partition_rhs(const TheoryData& theory, const Surface& surface, const QuadraticRefinement* structure,
                        const TwistedGroupAlgebra& algebra, const Classification& cls, double tol = 1e-6);

struct PartitionReport {
    std::string family;
    std::string surface;
    std::optional<std::string> structure;
    Complex lhs;
    Complex rhs;
    double abs_diff = 0;
    unsigned long long hom_count = 0;
    std::vector<Complex> rhs_terms;
    std::optional<int> invariant;
    bool pass = false;

    friend bool operator==(const PartitionReport&, const PartitionReport&) = default;
};

struct CrosscheckOptions {
    EnumerationOptions enumeration;
    DecomposeOptions decompose;
    double tolerance = 1e-6;
};

/// One report per structure. For spin / pin- an empty `structures` means every
/// structure on the surface. PASS iff |lhs - rhs| < tolerance * max(1, |rhs|).
std::vector<PartitionReport> crosscheck(const TheoryData& theory, const Surface& surface,
                                        const std::vector<QuadraticRefinement>& structures = {},
                                        const CrosscheckOptions& opts = {});

} // namespace superfs
