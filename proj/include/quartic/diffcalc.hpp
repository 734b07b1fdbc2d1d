#pragma once

#include "quartic/matrix.hpp"
#include "quartic/polynomial.hpp"

namespace quartic {

/// Default Hessian scale: entries are bare second partials. 1/2 gives the
/// literal "half Hessian"; the invariant tables pin the default to 1.
inline const Rational kHessianScale{1};

/// D_f(g): every term a*x^i of f acts on g as a * d^|i| g / dx^i. Only
/// geometric variables are differentiated; parameters in f ride along as
/// scalars.
Polynomial diff_pair(const Polynomial& f, const Polynomial& g);

/// scale * (d^2 f / dx_i dx_j) over the three geometric variables.
PolyMatrix3 hessian(const Polynomial& f, const Rational& scale = kHessianScale);

enum class JKind { J11, J22, J30, J03 };

/// The J brackets of two ternary quadratic forms.
Polynomial j_bracket(JKind kind, const Polynomial& f, const Polynomial& g,
                     const Rational& scale = kHessianScale);

/// (F,G)^k for binary forms over a table with exactly two geometric
/// variables: ((r-k)!(s-k)!/(r!s!)) * sum_m C(k,m) (-1)^m
/// d_x^{k-m} d_y^m F * d_x^m d_y^{k-m} G.
Polynomial transvectant(const Polynomial& F, const Polynomial& G, unsigned k);

}  // namespace quartic
