#pragma once

#include <array>
#include <string>

#include "quartic/polynomial.hpp"
#include "quartic/symfam.hpp"

namespace quartic {

/// P = a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4 with polynomial
/// coefficients (constants in the parameters of `table`).
struct BinaryQuartic {
    std::array<Polynomial, 5> a;

    /// Splits a binary quartic over a two-geometric-variable table.
    static BinaryQuartic from_polynomial(const Polynomial& p);
    /// Reassembles the form over `table` (first two geometric variables).
    Polynomial to_polynomial(const TablePtr& table) const;
};

/// Sigma(P) = (P,P)^4 / 2.
Polynomial sigma_binary(const Polynomial& P);
/// Psi(P) = (P,Q)^4 / 6 with Q = (P,P)^2.
Polynomial psi_binary(const Polynomial& P);
/// Delta(P) = Sigma^3 - 27 Psi^2, the discriminant of P.
Polynomial delta_binary(const Polynomial& P);

struct Contravariants {
    Polynomial sigma;  ///< class 4
    Polynomial psi;    ///< class 6
};

/// Restricts f to the line z = -u x - v y, takes Sigma and Psi of the
/// resulting binary quartic, homogenizes in w to degrees 4 and 6 and renames
/// (u,v,w) to (x,y,z).
Contravariants contravariants(const Polynomial& f);

struct Covariants {
    Polynomial rho;   ///< D_f(psi), quadratic
    Polynomial tau;   ///< D_rho(f), quadratic
    Polynomial hdet;  ///< det of the Hessian, sextic
};

/// Normalization choices. The defaults reproduce the published invariant tables.
struct InvariantConvention {
    Rational hessian_scale{1};
    /// I6 = D_psi(H) - weight * I3^2.
    Rational i3_square_weight{1, 2592};
};

Covariants covariants(const Polynomial& f, const Contravariants& c, const InvariantConvention& conv = {});

struct InvariantSet {
    static constexpr std::array<int, 6> kDegrees{3, 6, 9, 12, 15, 18};

    std::array<Polynomial, 6> values;  ///< I3, I6, I9, I12, I15, I18

    /// Lookup by degree (3, 6, ..., 18). Throws DomainError otherwise.
    const Polynomial& operator[](int degree) const;
    Polynomial& operator[](int degree);
    static std::size_t index_of(int degree);
};

InvariantSet dixmier_invariants(const Polynomial& f, const InvariantConvention& conv = {});
InvariantSet dixmier_invariants(const QuarticForm& f, const InvariantConvention& conv = {});

}  // namespace quartic
