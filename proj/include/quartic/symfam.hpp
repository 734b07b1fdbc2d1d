#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/polynomial.hpp"

namespace quartic {

/// The four families of smooth quartics with a Z/2 x Z/2 automorphism group,
/// plus arbitrary ternary quartics.
enum class Family { X4, X16, X24, X96, Generic };

std::string_view to_string(Family family);
/// Accepts "X4", "X16", "X24", "X96", "generic" (case-insensitive). Throws StructuralError.
Family parse_family(std::string_view name);

/// Parameter names of a family, in order: X4 (r,s,u), X16 (r,s), X24 (r), X96 ().
std::vector<std::string> family_parameters(Family family);

struct ParamBinding {
    std::string name;
    std::optional<Rational> value;  ///< nullopt: kept symbolic
};

/// A ternary quartic over x,y,z. Symbolic parameters live as parameter
/// variables of poly's table; bound parameters are already substituted.
struct QuarticForm {
    Polynomial poly;
    Family family = Family::Generic;
    std::vector<ParamBinding> params;

    bool is_symbolic() const;
    /// The rational parameter values, or DomainError if any is symbolic.
    std::vector<Rational> values() const;
};

/// Table {x,y,z | params...}.
TablePtr ternary_table(const std::vector<std::string>& parameters = {});

/// Family equation with symbolic parameters.
QuarticForm make_family(Family family);
/// Family equation at rational parameter values. StructuralError on wrong arity.
QuarticForm make_family(Family family, std::span<const Rational> params);

/// Why the family member at these parameters is singular, or nullopt if it is
/// smooth. The X4 family is Q(x^2,y^2,z^2) for a ternary quadratic Q, so it is
/// singular exactly when some parameter is +-2 or 4 + rsu - r^2 - s^2 - u^2 = 0.
/// X16 and X24 are read as X4(r,s,s) and X4(r,r,r).
std::optional<std::string> singular_reason(Family family, std::span<const Rational> params);

/// Generic quartic from 15 coefficients, monomials in graded-lex order
/// x^4, x^3y, x^3z, x^2y^2, x^2yz, x^2z^2, xy^3, xy^2z, xyz^2, xz^3, y^4, y^3z, y^2z^2, yz^3, z^4.
QuarticForm make_generic(std::span<const Rational> coefficients);
/// Generic quartic from an arbitrary homogeneous degree-4 polynomial in x,y,z.
QuarticForm make_generic(const Polynomial& poly);

/// The 15 exponent triples in the order used by make_generic.
std::vector<std::array<int, 3>> quartic_monomials();

/// Applies the linear change of coordinates (x,y,z) -> m * (x,y,z).
Polynomial linear_substitution(const Polynomial& f, const std::array<std::array<Rational, 3>, 3>& m);

/// Weakly decreasing list of 1..3 positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    std::string to_string() const;  ///< "[3,1,1]"

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Parses "[3,1,1]". Throws ParseError.
Partition parse_partition(std::string_view text);

/// Monomial symmetric polynomial in the first three parameters of `table`:
/// the sum of the distinct monomials in the S3-orbit of r^a s^b u^c.
Polynomial s_basis(const Partition& partition, const TablePtr& table);

struct SymmetricDecomposition {
    Rational constant;
    std::map<Partition, Rational, std::greater<>> terms;

    friend bool operator==(const SymmetricDecomposition&, const SymmetricDecomposition&) = default;
};

/// True when p is fixed by every permutation of the first three parameters.
bool is_symmetric_in_parameters(const Polynomial& p);

/// Peels leading monomials off a symmetric polynomial in three parameters.
/// Throws DomainError if p is not symmetric or depends on geometric variables.
SymmetricDecomposition decompose_symmetric(const Polynomial& p);

Polynomial reconstruct(const SymmetricDecomposition& d, const TablePtr& table);

/// Applies a permutation to the first three parameters: parameter i is
/// replaced by parameter perm[i].
Polynomial permute_parameters(const Polynomial& p, const std::array<int, 3>& perm);

}  // namespace quartic
