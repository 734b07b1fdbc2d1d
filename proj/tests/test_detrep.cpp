#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "quartic/detrep.hpp"
#include "quartic/poly_parse.hpp"

using namespace quartic;

namespace {

std::vector<std::array<Rational, 3>> sample_triples()
{
    std::vector<std::array<Rational, 3>> out{{0, 0, 0}, {1, 2, 3}, {5, 1, 7}};
    std::mt19937_64 g(71);
    while (out.size() < 13) {
        Rational r = oracle::random_rational(g, 10, 4);
        if (abs(r) == 2) continue;
        out.push_back({r, oracle::random_rational(g, 10, 4), oracle::random_rational(g, 10, 4)});
    }
    return out;
}

bool contains(const std::array<Complex, 4>& v, Complex z)
{
    for (const auto& w : v) {
        if (std::abs(w - z) < 1e-12) return true;
    }
    return false;
}

}  // namespace

TEST(NormalForm, X4Roots)
{
    std::array<Rational, 3> p{5, 1, 7};
    auto beta = check_normal_form(make_family(Family::X4, p));
    auto [pp, qq] = compute_pq(5);
    for (Complex b : {pp, -pp, qq, -qq}) EXPECT_TRUE(contains(beta, b));
}

TEST(NormalForm, FermatRoots)
{
    auto beta = check_normal_form(make_family(Family::X96));
    for (const auto& b : beta) EXPECT_LT(std::abs(std::pow(b, 4) + 1.0), 1e-13);
}

TEST(NormalForm, RejectsNonMonic)
{
    auto t = ternary_table();
    EXPECT_THROW(check_normal_form(make_generic(parse_polynomial("2*x^4+y^4+z^4", t))), DomainError);
}

TEST(ComputePq, Examples)
{
    auto [p, q] = compute_pq(5);
    const double s21 = std::sqrt(21.0);
    EXPECT_LT(std::abs(p * p - Complex((-s21 - 5) / 2)), 1e-12);
    EXPECT_LT(std::abs(q * q - Complex((s21 - 5) / 2)), 1e-12);
    auto [p0, q0] = compute_pq(0);
    EXPECT_LT(std::abs(p0 * p0 * q0 * q0 - 1.0), 1e-12);
    EXPECT_THROW(compute_pq(2), DegeneracyError);
    EXPECT_THROW(compute_pq(-2), DegeneracyError);
}

TEST(ComputePq, Identities)
{
    std::mt19937_64 g(72);
    for (int i = 0; i < 100; ++i) {
        Rational r = oracle::random_rational(g, 12, 7);
        if (abs(r) == 2) continue;
        auto [p, q] = compute_pq(r);
        EXPECT_LT(std::abs(p * p * q * q - 1.0), 1e-12);
        EXPECT_LT(std::abs(p * p + q * q + to_double(r)), 1e-12 * (1 + std::abs(to_double(r))));
    }
}

TEST(DiagonalEntries, ExactZeroForX4)
{
    std::array<Rational, 3> p{1, 2, 3};
    QuarticForm f = make_family(Family::X4, p);
    auto d = diagonal_entries(f, check_normal_form(f));
    for (const auto& c : d) EXPECT_EQ(c, Complex(0));
    const auto& t = f.poly.table();
    EXPECT_TRUE(substitute(partial(f.poly, t->id("z")), t->id("z"), Polynomial(t, 0)).is_zero());
}

TEST(DiagonalEntries, LiteralFormulaOtherwise)
{
    auto t = ternary_table();
    QuarticForm f = make_generic(parse_polynomial("x^4+y^4+z^4+x^3*z", t));
    auto beta = check_normal_form(f);
    auto d = diagonal_entries(f, beta);
    // f_z = 4z^3 + x^3, f_y = 4y^3 at (-beta, 1, 0): beta * (-beta^3) / 4
    for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(d[i] + std::pow(beta[i], 4) / 4.0), 1e-12);
}

TEST(Solve, Fermat)
{
    DetRep rep = solve_detrep(0, 0, 0);
    const Complex a(-0.5, 0.5), b(-0.5, -0.5);
    EXPECT_TRUE(std::abs(rep.t - a) < 1e-12 || std::abs(rep.t - b) < 1e-12);
    EXPECT_EQ(rep.branch.epsilon, 1);
    EXPECT_LT(rep.det_residual, 1e-8);
}

TEST(Solve, CertifiesSamplePoints)
{
    for (const auto& [r, s, u] : sample_triples()) {
        DetRep rep = solve_detrep(r, s, u);
        EXPECT_LT(rep.residuals.max_e(), 1e-10) << r << " " << s << " " << u;
        EXPECT_LT(rep.det_residual, 1e-8);
        EXPECT_EQ(rep.points, 50);
        EXPECT_LT(std::abs(rep.p * rep.q - 1.0), 1e-12);
        EXPECT_LT(std::abs(rep.p * rep.p + rep.q * rep.q + to_double(r)), 1e-12 * (1 + std::abs(to_double(r))));
        // be - cd = epsilon by construction, a = f = 0
        const auto& x = rep.unknowns;
        EXPECT_LT(std::abs(x[1] * x[4] - x[2] * x[3] - double(rep.branch.epsilon)), 1e-10);
        EXPECT_EQ(x[0], Complex(0));
        EXPECT_EQ(x[5], Complex(0));
        // shape of the matrices
        EXPECT_TRUE(rep.A.isIdentity());
        EXPECT_TRUE(rep.C.isApprox(rep.C.transpose()));
        for (int i = 0; i < 4; ++i) EXPECT_EQ(rep.C(i, i), Complex(0));
        EXPECT_EQ(rep.B.diagonal().sum(), Complex(0));
        EXPECT_TRUE(rep.B.isDiagonal());
    }
}

TEST(Solve, Degenerate)
{
    EXPECT_THROW(solve_detrep(2, 0, 0), DegeneracyError);
    EXPECT_THROW(solve_detrep(-2, 1, 1), DegeneracyError);
}

TEST(Solve, Deterministic)
{
    DetRep a = solve_detrep(1, 2, 3), b = solve_detrep(1, 2, 3);
    EXPECT_EQ(a.branch, b.branch);
    EXPECT_TRUE(a.C == b.C);
    EXPECT_EQ(a.det_residual, b.det_residual);
    DetrepOptions other;
    other.seed = 99;
    DetRep c = solve_detrep(1, 2, 3, other);
    EXPECT_TRUE(a.C == c.C);
    EXPECT_EQ(c.seed, 99u);
}

TEST(Branches, Enumeration)
{
    auto all = detrep_branches(5, 1, 7);
    ASSERT_EQ(all.size(), 16u);
    EXPECT_EQ(all.front().branch.epsilon, 1);
    EXPECT_EQ(all.back().branch.epsilon, -1);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i].branch == all[j].branch);
    }
}

TEST(Branches, UnsquaredImpliesSquared)
{
    for (const auto& [r, s, u] : sample_triples()) {
        for (const auto& rep : detrep_branches(r, s, u)) {
            if (rep.residuals.e[0] >= 1e-10) continue;
            const auto& [a, b, c, d, e, f] = rep.unknowns;
            const Complex p = rep.p, q = rep.q;
            Complex lhs = (b * b + e * e + 2.0 * b * e) * (b * b + e * e - 2.0 * b * e) * (q + p) * (q + p);
            Complex rhs = (c * c + d * d + 2.0 * c * d) * (c * c + d * d - 2.0 * c * d) * (q - p) * (q - p);
            EXPECT_LT(std::abs(lhs - rhs), 1e-8 * (1 + std::abs(lhs)));
        }
    }
}

TEST(Residuals, PerturbationOfE3)
{
    DetRep rep = solve_detrep(5, 1, 7);
    const Complex b = rep.unknowns[1];
    rep.unknowns[1] += 1e-3;
    auto res = residuals_e_system(rep, 5, 1, 7);
    const double expected = std::abs(2.0 * b * 1e-3 + 1e-6);
    EXPECT_NEAR(res.e[2], expected, 1e-9);
    EXPECT_EQ(res.e[3], 0.0);
    EXPECT_EQ(res.e[4], 0.0);
}

TEST(Residuals, RawSystemTracksRewritten)
{
    DetRep rep = solve_detrep(1, 2, 3);
    for (double v : rep.residuals.raw) EXPECT_LT(v, 1e-10);
}

TEST(DeterminantExpand, Examples)
{
    auto t = make_table({"x", "y", "z"}, {"p", "q"});
    PolyMatrix4 id = PolyMatrix4::Identity(), zero = PolyMatrix4::Zero();
    for (Eigen::Index i = 0; i < 16; ++i) {
        id.data()[i] = Polynomial(t, id.data()[i].constant_term());
        zero.data()[i] = Polynomial(t);
    }
    EXPECT_EQ(determinant_expand(id, zero, zero), parse_polynomial("x^4", t));
    PolyMatrix4 B = zero;
    Polynomial p = Polynomial::variable(t, "p"), q = Polynomial::variable(t, "q");
    B(0, 0) = p;
    B(1, 1) = -p;
    B(2, 2) = q;
    B(3, 3) = -q;
    EXPECT_EQ(determinant_expand(id, B, zero), parse_polynomial("(x^2-p^2*y^2)*(x^2-q^2*y^2)", t));
}

TEST(DeterminantExpand, ReproducesCoefficientSystem)
{
    auto t = make_table({"x", "y", "z"}, {"p", "q", "a", "b", "c", "d", "e", "f", "r", "s", "u"});
    auto v = [&](const char* n) { return Polynomial::variable(t, n); };
    PolyMatrix4 A, B, C;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            A(i, j) = Polynomial(t, i == j ? 1 : 0);
            B(i, j) = Polynomial(t);
            C(i, j) = Polynomial(t);
        }
    }
    B(0, 0) = v("p");
    B(1, 1) = -v("p");
    B(2, 2) = v("q");
    B(3, 3) = -v("q");
    const std::array<std::array<const char*, 4>, 4> names{{{"", "a", "b", "d"}, {"a", "", "c", "e"},
                                                          {"b", "c", "", "f"}, {"d", "e", "f", ""}}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) C(i, j) = v(names[i][j]);
        }
    }
    Polynomial f = parse_polynomial("x^4+y^4+z^4+r*x^2*y^2+s*y^2*z^2+u*z^2*x^2", t);
    Polynomial diff = determinant_expand(A, B, C) - f;

    const std::vector<std::pair<std::array<int, 3>, const char*>> system{
        {{1, 1, 2}, "-e^2*q-d^2*q+c^2*q+b^2*q-e^2*p+d^2*p-c^2*p+b^2*p"},
        {{0, 2, 2}, "-s+a^2*q^2-e^2*p*q+d^2*p*q+c^2*p*q-b^2*p*q+f^2*p^2"},
        {{2, 0, 2}, "-u-f^2-e^2-d^2-c^2-b^2-a^2"},
        {{0, 1, 3}, "2*a*d*e*q-2*a*b*c*q+2*c*e*f*p-2*b*d*f*p"},
        {{1, 0, 3}, "2*c*e*f+2*b*d*f+2*a*d*e+2*a*b*c"},
        {{0, 0, 4}, "a^2*f^2-2*a*b*e*f-2*a*c*d*f+b^2*e^2-2*b*c*d*e+c^2*d^2-1"},
        {{2, 2, 0}, "-r-q^2-p^2"},
        {{0, 4, 0}, "p^2*q^2-1"},
    };
    Polynomial rebuilt(t);
    for (const auto& [e, expr] : system) {
        Monomial m;
        for (int i = 0; i < 3; ++i) m.exp[i] = static_cast<std::uint8_t>(e[i]);
        Polynomial want = parse_polynomial(expr, t);
        EXPECT_EQ(geometric_coefficient(diff, m), want) << expr;
        rebuilt += want * Polynomial::term(t, m, 1);
    }
    EXPECT_EQ(diff, rebuilt);  // nothing else survives
}

TEST(SamplePoints, SeededAndInDisc)
{
    auto a = sample_points(DetrepOptions::kDefaultSeed, 50), b = sample_points(DetrepOptions::kDefaultSeed, 50);
    ASSERT_EQ(a.size(), 50u);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, sample_points(1, 50));
    for (const auto& pt : a) {
        for (const auto& c : pt) EXPECT_LE(std::abs(c), 1.0);
    }
}
