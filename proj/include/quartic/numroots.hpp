#pragma once

#include <complex>
#include <span>
#include <vector>

namespace quartic {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, ascending powers.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Complex> ascending);

    /// Trims leading coefficients that are exactly zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    Complex operator()(Complex z) const;
    Complex derivative_at(Complex z) const;
    double max_abs_coefficient() const;

    /// Drops leading coefficients below rel_tol * max|coeff|.
    UniPoly trimmed(double rel_tol) const;

private:
    std::vector<Complex> coeffs_;
};

struct Root {
    Complex value;
    bool multiple = false;  ///< another returned root lies within the clustering radius
};

struct RootOptions {
    double convergence = 1e-13;
    int max_iterations = 2000;
    /// Backward-error bound accepted when the iteration stalls (clustered roots).
    double residual_bound = 1e-10;
};

/// All roots with multiplicity. Degree <= 2 in closed form, otherwise
/// Durand-Kerner from a fixed start followed by one Newton step; output
/// sorted lexicographically on (re, im) rounded to 1e-9. Throws NumericError
/// on non-convergence, DegreeError for degree < 1.
std::vector<Root> roots(const UniPoly& p, const RootOptions& opts = {});

/// Roots of an even polynomial: solves in B = z^2, then takes both square
/// roots of each B. Throws StructuralError if an odd coefficient is
/// significantly nonzero.
std::vector<Root> biquadratic_roots(const UniPoly& p, const RootOptions& opts = {});

/// max |p(root)| / (1 + max|coeff|).
double root_residual(const UniPoly& p, Complex root);

void sort_roots(std::vector<Root>& rs);

}  // namespace quartic
