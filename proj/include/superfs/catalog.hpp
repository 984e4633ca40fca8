#pragma once

#include "superfs/group.hpp"

#include <string>
#include <vector>

namespace superfs::catalog {

Group cyclic(int n);
/// (Z2)^k, element index = bit pattern.
Group elementary_abelian(int k);
Group symmetric3();
/// Symmetries of the square, order 8.
Group dihedral4();
/// Quaternion group; index = 4 * sign + unit with units 1, i, j, k.
Group quaternion8();
Group alternating4();
Group symmetric4();

struct Entry {
    std::string name;
    Group group;
};

/// Z2, Z3, Z4, Z2^2, Z6, S3, D4, Q8, Z2^3, A4.
std::vector<Entry> standard();

} // namespace superfs::catalog
