#include "quartic/numroots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

UniPoly::UniPoly(std::vector<Complex> ascending) : coeffs_(std::move(ascending))
{
    while (!coeffs_.empty() && coeffs_.back() == Complex(0)) coeffs_.pop_back();
}

Complex UniPoly::operator()(Complex z) const
{
    Complex acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex UniPoly::derivative_at(Complex z) const
{
    Complex acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) acc = acc * z + coeffs_[i] * static_cast<double>(i);
    return acc;
}

double UniPoly::max_abs_coefficient() const
{
    double m = 0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

UniPoly UniPoly::trimmed(double rel_tol) const
{
    const double cut = rel_tol * max_abs_coefficient();
    std::vector<Complex> c = coeffs_;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return UniPoly(std::move(c));
}

double root_residual(const UniPoly& p, Complex root)
{
    return std::abs(p(root)) / (1.0 + p.max_abs_coefficient());
}

void sort_roots(std::vector<Root>& rs)
{
    auto key = [](const Root& r) {
        return std::pair{std::round(r.value.real() * 1e9), std::round(r.value.imag() * 1e9)};
    };
    std::stable_sort(rs.begin(), rs.end(), [&](const Root& a, const Root& b) { return key(a) < key(b); });
}

namespace {

std::vector<Complex> quadratic(Complex a, Complex b, Complex c)
{
    // a z^2 + b z + c with the cancellation-free pairing of the two roots.
    Complex d = std::sqrt(b * b - 4.0 * a * c);
    Complex q = std::real(std::conj(b) * d) >= 0 ? -0.5 * (b + d) : -0.5 * (b - d);
    if (q == Complex(0)) return {Complex(0), Complex(0)};
    return {q / a, c / q};
}

void flag_multiple(std::vector<Root>& rs)
{
    for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            double mag = 1.0 + std::max(std::abs(rs[i].value), std::abs(rs[j].value));
            if (std::abs(rs[i].value - rs[j].value) < 1e-6 * mag) {
                rs[i].multiple = rs[j].multiple = true;
            }
        }
    }
}

}  // namespace

std::vector<Root> roots(const UniPoly& p, const RootOptions& opts)
{
    const int n = p.degree();
    if (n < 1) throw DegreeError("root finding needs degree >= 1");
    const auto& c = p.coefficients();
    std::vector<Root> out;
    if (n == 1) {
        out.push_back({-c[0] / c[1], false});
        return out;
    }
    if (n == 2) {
        for (auto z : quadratic(c[2], c[1], c[0])) out.push_back({z, false});
        flag_multiple(out);
        sort_roots(out);
        return out;
    }

    // Monic copy; fixed start on a circle of Cauchy-bound radius, angle offset
    // breaks symmetry with real-coefficient inputs.
    std::vector<Complex> monic(c.begin(), c.end());
    for (auto& v : monic) v /= c[n];
    double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
    radius = 1.0 + radius;
    const UniPoly mp(monic);
    std::vector<Complex> z(n);
    const double two_pi = 6.283185307179586;
    for (int i = 0; i < n; ++i) z[i] = std::polar(radius * 0.5 + 0.25, two_pi * i / n + 0.4);

    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
        double biggest = 0;
        for (int i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) denom *= (z[i] - z[j]);
            }
            if (denom == Complex(0)) denom = Complex(1e-300);
            Complex step = mp(z[i]) / denom;
            z[i] -= step;
            biggest = std::max(biggest, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        converged = biggest < opts.convergence;
    }
    for (auto& zi : z) {
        Complex d = p.derivative_at(zi);
        if (std::abs(d) > 0) {
            Complex polished = zi - p(zi) / d;
            if (std::abs(p(polished)) <= std::abs(p(zi))) zi = polished;
        }
    }
    if (!converged) {
        double worst = 0;
        for (const auto& zi : z) worst = std::max(worst, root_residual(p, zi));
        if (worst >= opts.residual_bound) {
            std::ostringstream os;
            os << "Durand-Kerner did not converge for degree " << n << " (worst residual " << worst << ")";
            throw NumericError(os.str());
        }
    }
    for (const auto& zi : z) out.push_back({zi, false});
    flag_multiple(out);
    sort_roots(out);
    return out;
}

std::vector<Root> biquadratic_roots(const UniPoly& p, const RootOptions& opts)
{
    const auto& c = p.coefficients();
    const double scale = p.max_abs_coefficient();
    std::vector<Complex> even;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1) {
            if (std::abs(c[i]) > 1e-14 * std::max(1.0, scale)) {
                throw StructuralError("biquadratic_roots: polynomial has odd-degree terms");
            }
        } else {
            even.push_back(c[i]);
        }
    }
    UniPoly in_b(even);
    std::vector<Root> out;
    if (in_b.degree() < 1) throw DegreeError("biquadratic_roots: degree must be >= 2");
    for (const auto& B : roots(in_b, opts)) {
        Complex s = std::sqrt(B.value);
        for (Complex z : {s, -s}) {
            Complex d = p.derivative_at(z);
            if (std::abs(d) > 0) {
                Complex polished = z - p(z) / d;
                if (std::abs(p(polished)) <= std::abs(p(z))) z = polished;
            }
            out.push_back({z, B.multiple || B.value == Complex(0)});
        }
    }
    sort_roots(out);
    return out;
}

}  // namespace quartic
