#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "quartic/matrix.hpp"
#include "quartic/numroots.hpp"
#include "quartic/symfam.hpp"

namespace quartic {

using CMatrix4 = Eigen::Matrix<Complex, 4, 4>;

/// One way through the either-or steps of the construction.
struct BranchChoice {
    int epsilon = 1;       ///< be = cd + epsilon; (be - cd)^2 = 1 allows both signs
    int root = 0;          ///< which root t = cd of the quadratic
    bool swap_cd = false;  ///< c^2, d^2 take the two roots of w^2 + (u-s)/2 w + t^2 in swapped order
    bool swap_be = false;  ///< same for b^2, e^2 and w^2 + (u+s)/2 w + (t+epsilon)^2

    std::string to_string() const;
    friend bool operator==(const BranchChoice&, const BranchChoice&) = default;
};

struct EResiduals {
    std::array<double, 6> e{};    ///< the rewritten system, (b^2-e^2)(q+p)+... through ...=1
    std::array<double, 6> raw{};  ///< the raw coefficient comparison before using pq = 1
    double max_e() const;
};

/// det(xA + yB + zC) = f with A = Id, B = diag(p,-p,q,-q), C symmetric with
/// zero diagonal and upper triangle (a, b, d / c, e / f).
struct DetRep {
    CMatrix4 A = CMatrix4::Identity();
    CMatrix4 B = CMatrix4::Zero();
    CMatrix4 C = CMatrix4::Zero();
    Complex p, q, t;
    std::array<Complex, 6> unknowns{};  ///< a, b, c, d, e, f
    BranchChoice branch;
    EResiduals residuals;
    double det_residual = 0;  ///< max |det - f| / (1 + |f|) over the sample points
    int points = 0;
    std::uint64_t seed = 0;
};

struct DetrepOptions {
    static constexpr std::uint64_t kDefaultSeed = 0x5eed2024;
    double tol = 1e-8;
    std::uint64_t seed = kDefaultSeed;
    int points = 50;
};

/// Checks f(x,0,0) = x^4 and returns beta with f(x,y,0) = prod (x + beta_i y),
/// sorted. DomainError if the x^4 coefficient is not 1.
std::array<Complex, 4> check_normal_form(const QuarticForm& f);

/// Principal branches p = sqrt(-sqrt(r^2-4) - r)/sqrt 2, q = sqrt(sqrt(r^2-4) - r)/sqrt 2.
/// DegeneracyError for r = +-2.
std::pair<Complex, Complex> compute_pq(const Rational& r);

/// Diagonal of C from the normal form. Exact zeros when df/dz vanishes on z = 0
/// (the whole X4 family); otherwise beta_i * f_z / f_y at (-beta_i, 1, 0).
std::array<Complex, 4> diagonal_entries(const QuarticForm& f, const std::array<Complex, 4>& beta);

/// All 16 branches, uncertified, in enumeration order (epsilon = +1 first).
std::vector<DetRep> detrep_branches(const Rational& r, const Rational& s, const Rational& u);

EResiduals residuals_e_system(const DetRep& rep, const Rational& r, const Rational& s, const Rational& u);

/// Uniform points in the complex unit polydisc from mt19937_64(seed).
std::vector<std::array<Complex, 3>> sample_points(std::uint64_t seed, int count);

/// max |det(xA+yB+zC) - f| / (1 + |f|) over the sample points.
double determinant_residual(const DetRep& rep, const Polynomial& f, std::uint64_t seed, int count);

/// Picks the branch with epsilon = +1 if one certifies, then the smallest
/// residual. DegeneracyError for r = +-2, NumericError if nothing certifies.
DetRep solve_detrep(const Rational& r, const Rational& s, const Rational& u, const DetrepOptions& opts = {});

/// det(xA + yB + zC) by cofactor expansion; entries must share a table whose
/// geometric variables are x, y, z.
Polynomial determinant_expand(const PolyMatrix4& A, const PolyMatrix4& B, const PolyMatrix4& C);

}  // namespace quartic
