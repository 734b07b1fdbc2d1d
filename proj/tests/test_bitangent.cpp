#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "quartic/bitangent.hpp"
#include "quartic/components.hpp"
#include "quartic/poly_parse.hpp"

using namespace quartic;

namespace {

std::vector<Rational> params(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool has_line(const std::vector<BitangentCert>& certs, const std::array<Complex, 3>& v, double tol = 1e-8)
{
    ProjLine l = ProjLine::normalized(v);
    for (const auto& c : certs) {
        if (same_line(c.line, l, tol)) return true;
    }
    return false;
}

std::vector<Rational> random_smooth_x4(std::mt19937_64& g)
{
    for (;;) {
        std::vector<Rational> p;
        for (int i = 0; i < 3; ++i) p.push_back(oracle::random_rational(g, 10, 4));
        if (!singular_reason(Family::X4, p)) return p;
    }
}

// Max normalized value of the chart's tangency generators at a certificate.
double tangency_residual(const QuarticForm& f, const BitangentCert& c)
{
    TangencySystem sys = build_tangency_system(f, c.chart);
    auto n = c.line.chart_coordinates(c.chart);
    std::vector<Complex> pt{n[0], n[1], c.lambda[0], c.lambda[1], c.lambda[2]};
    pt.resize(sys.table->size());
    double worst = 0;
    for (const auto& gen : sys.generators) {
        worst = std::max(worst, std::abs(eval_complex(gen, pt)) / (1 + eval_abs_sum(gen, pt)));
    }
    return worst;
}

}  // namespace

TEST(ProjLine, NormalizationAndCharts)
{
    ProjLine l = ProjLine::normalized({Complex(1), Complex(-4), Complex(2)});
    EXPECT_EQ(l.pivot(), 1);
    EXPECT_EQ(l.c[1], Complex(1));
    EXPECT_EQ(l.chart(), Chart::ZX);
    EXPECT_EQ(ProjLine::normalized({Complex(1), Complex(1), Complex(1)}).pivot(), 0);
    EXPECT_THROW(ProjLine::normalized({}), DomainError);

    ProjLine m = ProjLine::from_chart(Chart::YZ, Complex(2), Complex(3));  // x + 2y + 3z
    EXPECT_TRUE(same_line(m, ProjLine::normalized({Complex(1), Complex(2), Complex(3)}), 1e-14));
    auto cc = m.chart_coordinates(Chart::XY);  // a x + b y + z with a = 1/3, b = 2/3
    EXPECT_NEAR(std::abs(cc[0] - 1.0 / 3), 0, 1e-15);
    EXPECT_NEAR(std::abs(cc[1] - 2.0 / 3), 0, 1e-15);
}

TEST(Dedupe, Examples)
{
    auto one = dedupe_lines({ProjLine::normalized({1.0, 1.0, 1.0}), ProjLine::normalized({2.0, 2.0, 2.0})}, 1e-8);
    EXPECT_EQ(one.size(), 1u);

    const Complex b(0.7, -1.3);
    auto two = dedupe_lines({ProjLine::from_chart(Chart::XY, 0.0, b), ProjLine::normalized({0.0, 1.0, 1.0 / b}),
                             ProjLine::normalized({1.0, 0.0, 0.0})},
                            1e-8);
    EXPECT_EQ(two.size(), 2u);
    EXPECT_EQ(zero_count(two[0]), 1);
    EXPECT_EQ(zero_count(two[1]), 2);
}

TEST(PerfectSquare, Examples)
{
    auto fit = perfect_square_fit({1.0, 2.0, 3.0, 2.0, 1.0}, 1e-9);
    ASSERT_TRUE(fit);
    EXPECT_LT(fit->residual, 1e-15);
    // lambda is determined up to an overall sign
    Complex s = fit->lambda[0];
    for (const auto& l : fit->lambda) EXPECT_LT(std::abs(l - s), 1e-14);
    EXPECT_NEAR(std::abs(s), 1.0, 1e-15);

    EXPECT_FALSE(perfect_square_fit({1.0, 0.0, 0.0, 0.0, 1.0}, 1e-9));
    EXPECT_FALSE(perfect_square_fit({0.0, 0.0, 0.0, 0.0, 0.0}, 1e-9));
}

TEST(PerfectSquare, FermatAxisLine)
{
    // x + w y = 0 with w^4 = -1: on it, x^4 + y^4 + z^4 = z^4, a square.
    Complex w = std::polar(1.0, M_PI / 4);
    QuarticForm f = make_family(Family::X96);
    ProjLine l = ProjLine::normalized({1.0, w, 0.0});
    auto g = restrict_to_line(f.poly, l, l.chart());
    auto fit = perfect_square_fit(g, 1e-9);
    ASSERT_TRUE(fit);
    EXPECT_LT(fit->residual, 1e-14);
}

TEST(TangencySystem, Examples)
{
    TangencySystem x4 = build_tangency_system(make_family(Family::X4), Chart::XY);
    EXPECT_EQ(x4.generators[0], parse_polynomial("1 + u*a^2 + a^4 - l0^2", x4.table));
    TangencySystem x96 = build_tangency_system(make_family(Family::X96), Chart::XY);
    EXPECT_EQ(x96.generators[4], parse_polynomial("1 + b^4 - l2^2", x96.table));
    EXPECT_EQ(x96.table->geometric_names(), (std::vector<std::string>{"a", "b", "l0", "l1", "l2"}));
    EXPECT_EQ(build_tangency_system(make_family(Family::X4), Chart::YZ).table->name(0), "b");
}

TEST(TangencySystem, VanishesAtCertifiedLines)
{
    auto p = params({1, 3, 5});
    QuarticForm f = make_family(Family::X4, p);
    for (const auto& c : enumerate_bitangents(Family::X4, p)) EXPECT_LT(tangency_residual(f, c), 1e-9);
}

TEST(Components, J1EliminantIsEvenAndMatchesQuarticInB)
{
    const Polynomial& elim = x4_j1_eliminant();
    const auto& t = elim.table();
    const VarId b = t->id("b");
    EXPECT_EQ(elim.degree_in(b), 8);
    EXPECT_EQ(elim.degree_in(t->id("a")), 0);
    auto quartic = x4_j1_quartic_in_B();
    ASSERT_EQ(quartic.size(), 5u);
    Polynomial rebuilt(t);
    for (const auto& [m, c] : elim.terms()) EXPECT_EQ(m.exp[b] % 2, 0);
    for (int k = 0; k <= 4; ++k) rebuilt += quartic[k] * pow(Polynomial::variable(t, b), 2 * k);
    // The printed quartic and the eliminant agree up to a rational factor.
    Monomial top;
    top.exp[b] = 8;
    Polynomial lead_e = geometric_coefficient(elim, top), lead_q = geometric_coefficient(rebuilt, top);
    ASSERT_FALSE(lead_q.is_zero());
    Rational ratio = lead_e.terms().begin()->second / lead_q.terms().begin()->second;
    EXPECT_EQ(elim, ratio * rebuilt);
    EXPECT_EQ(quartic[4], parse_polynomial("-u^2+r*s*u-s^2-r^2+4", t));
}

TEST(Components, Counts)
{
    EXPECT_EQ(x4_components().size(), 3u);
    EXPECT_EQ(x4_components()[0].generators.size(), 10u);
    EXPECT_EQ(x16_components().size(), 5u);
    EXPECT_EQ(x24_components().size(), 12u);
    EXPECT_EQ(x24_components().front().tag, "X24.J2");
}

TEST(Enumerate, X4RandomSmoothPoints)
{
    std::mt19937_64 g(61);
    BitangentOptions opts;
    for (int i = 0; i < 5; ++i) {
        auto p = random_smooth_x4(g);
        auto certs = enumerate_bitangents(Family::X4, p, opts);
        ASSERT_EQ(certs.size(), 28u);
        int axis = 0, j1 = 0;
        for (const auto& c : certs) {
            EXPECT_LT(c.residual, opts.tol);
            EXPECT_LT(c.generator_residual, opts.tol);
            ASSERT_TRUE(c.component_residual);
            EXPECT_LT(*c.component_residual, opts.tol);
            if (zero_count(c.line) == 1) ++axis;
            if (zero_count(c.line) == 0 && c.source.rfind("X4.J1", 0) == 0) ++j1;
        }
        EXPECT_EQ(axis, 12);
        EXPECT_EQ(j1, 16);
        for (std::size_t a = 0; a < certs.size(); ++a) {
            for (std::size_t b = a + 1; b < certs.size(); ++b) EXPECT_FALSE(same_line(certs[a].line, certs[b].line, 1e-8));
        }
    }
}

TEST(Enumerate, X4Equivariance)
{
    std::mt19937_64 g(62);
    for (int i = 0; i < 3; ++i) {
        auto p = random_smooth_x4(g);
        auto base = enumerate_bitangents(Family::X4, p);
        // f(y,z,x) is X4(u,r,s); a line (al,be,ga) of f maps to (ga,al,be).
        auto rot = enumerate_bitangents(Family::X4, std::vector<Rational>{p[2], p[0], p[1]});
        // f(y,x,z) is X4(r,u,s); a line maps to (be,al,ga).
        auto swp = enumerate_bitangents(Family::X4, std::vector<Rational>{p[0], p[2], p[1]});
        for (const auto& c : base) {
            EXPECT_TRUE(has_line(rot, {c.line.c[2], c.line.c[0], c.line.c[1]}));
            EXPECT_TRUE(has_line(swp, {c.line.c[1], c.line.c[0], c.line.c[2]}));
        }
    }
}

TEST(Enumerate, X96)
{
    auto certs = enumerate_bitangents(Family::X96, {});
    ASSERT_EQ(certs.size(), 28u);
    int full = 0, axis = 0;
    for (const auto& c : certs) {
        if (zero_count(c.line) == 0) {
            ++full;
            for (const auto& x : c.line.c) EXPECT_NEAR(std::abs(x), 1.0, 1e-12);
        } else {
            ++axis;
            EXPECT_EQ(zero_count(c.line), 1);
        }
    }
    EXPECT_EQ(full, 16);
    EXPECT_EQ(axis, 12);
}

TEST(Enumerate, X24RationalLines)
{
    auto certs = enumerate_bitangents(Family::X24, params({1}));
    ASSERT_EQ(certs.size(), 28u);
    for (double sx : {1.0, -1.0}) {
        for (double sy : {1.0, -1.0}) EXPECT_TRUE(has_line(certs, {sx, sy, 1.0}, 1e-12));
    }
    // x - y + z = 0 comes out exactly
    ProjLine want = ProjLine::normalized({1.0, -1.0, 1.0});
    bool exact = false;
    for (const auto& c : certs) exact = exact || c.line.c == want.c;
    EXPECT_TRUE(exact);
}

TEST(Enumerate, X24GenericR)
{
    for (long r : {-7, 3, 11}) {
        auto certs = enumerate_bitangents(Family::X24, params({r}));
        EXPECT_EQ(certs.size(), 28u);
        EXPECT_TRUE(has_line(certs, {1.0, -1.0, 1.0}));
    }
}

TEST(Enumerate, X16ClosedRadicals)
{
    for (auto [r, s] : std::vector<std::pair<double, double>>{{1, 3}, {-3, 5}, {7, -4}}) {
        auto certs = enumerate_bitangents(Family::X16, std::vector<Rational>{Rational(long(r)), Rational(long(s))});
        ASSERT_EQ(certs.size(), 28u);
        Complex inner = std::sqrt(Complex((2 - r) * s * s + r * r - 4));
        int found = 0;
        for (double sign : {1.0, -1.0}) {
            Complex b2 = (2.0 * sign * inner + (2 - r) * s) / (s * s - 4);
            Complex b = std::sqrt(b2);
            for (Complex bb : {b, -b}) {
                // the coordinate-type lines of J1 and J2
                found += has_line(certs, {0.0, bb, 1.0});
                found += has_line(certs, {bb, 0.0, 1.0});
            }
        }
        EXPECT_EQ(found, 8) << "r=" << r << " s=" << s;
    }
}

TEST(Enumerate, DegenerateParameters)
{
    EXPECT_THROW(enumerate_bitangents(Family::X24, params({2})), DegeneracyError);
    EXPECT_THROW(enumerate_bitangents(Family::X24, params({-1})), DegeneracyError);
    EXPECT_THROW(enumerate_bitangents(Family::X16, params({2, 2})), DegeneracyError);
    // X4(1,2,3) has s = 2 and is singular at (0:1:+-i).
    EXPECT_THROW(enumerate_bitangents(Family::X4, params({1, 2, 3})), DegeneracyError);
    EXPECT_EQ(enumerate_bitangents(Family::X4, params({1, 3, 5})).size(), 28u);
    EXPECT_THROW(enumerate_bitangents(Family::X4, params({1, 2})), StructuralError);
    EXPECT_THROW(enumerate_bitangents(Family::Generic, {}), StructuralError);
}

TEST(Enumerate, Deterministic)
{
    auto p = params({4, -3, 7});
    auto a = enumerate_bitangents(Family::X4, p), b = enumerate_bitangents(Family::X4, p);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].line.c, b[i].line.c);
        EXPECT_EQ(a[i].source, b[i].source);
    }
}
