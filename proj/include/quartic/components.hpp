#pragma once

#include <string>
#include <vector>

#include "quartic/polynomial.hpp"

namespace quartic {

/// One primary component of the bitangent ideal in the affine chart where the
/// line is ax+by+z=0. Generators live over component_table().
struct Component {
    std::string tag;                     ///< e.g. "X4.J1"
    std::vector<Polynomial> generators;  ///< as listed for the family
    /// Extra ideal members used only to solve (the degree-8 eliminant of X4.J1).
    std::vector<Polynomial> eliminants;
};

/// Table {a,b | r,s,u}.
TablePtr component_table();

/// X4: J1 (ten generators plus the eliminant in b), J2, J3.
const std::vector<Component>& x4_components();
/// X16: J1, J2, J5, J6, J7. J3, J4 are parameter conditions and are not listed.
const std::vector<Component>& x16_components();
/// X24: J2 ... J13. J1 = <r-2> is a parameter condition.
const std::vector<Component>& x24_components();

/// The degree-8 polynomial in b cut out by X4.J1.
const Polynomial& x4_j1_eliminant();

/// The quartic in B = b^2 as printed after the eliminant, coefficient of B^k at k.
std::vector<Polynomial> x4_j1_quartic_in_B();

}  // namespace quartic
