#include "quartic/detrep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/LU>

namespace quartic {

std::string BranchChoice::to_string() const
{
    std::ostringstream os;
    os << "eps=" << (epsilon > 0 ? "+1" : "-1") << " root=" << root << " swap_cd=" << swap_cd
       << " swap_be=" << swap_be;
    return os.str();
}

double EResiduals::max_e() const
{
    return *std::max_element(e.begin(), e.end());
}

std::array<Complex, 4> check_normal_form(const QuarticForm& f)
{
    const auto& t = f.poly.table();
    if (!t || t->geometric_names() != std::vector<std::string>{"x", "y", "z"}) {
        throw StructuralError("expected a quartic in x,y,z");
    }
    if (f.poly.parameter_degree() > 0) throw DomainError("check_normal_form needs numeric coefficients");
    auto coeff = [&](int i, int j, int k) {
        Monomial m;
        m.exp[0] = static_cast<std::uint8_t>(i);
        m.exp[1] = static_cast<std::uint8_t>(j);
        m.exp[2] = static_cast<std::uint8_t>(k);
        return f.poly.coefficient(m);
    };
    if (coeff(4, 0, 0) != 1) throw DomainError("not in normal form: the coefficient of x^4 must be 1");
    // f(x,1,0) = prod (x + beta_i)
    std::vector<Complex> asc(5);
    for (int j = 0; j <= 4; ++j) asc[j] = to_double(coeff(j, 4 - j, 0));
    std::array<Complex, 4> beta;
    auto rs = roots(UniPoly(asc));
    for (int i = 0; i < 4; ++i) beta[i] = -rs[i].value;
    std::sort(beta.begin(), beta.end(), [](Complex a, Complex b) {
        return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
    });
    return beta;
}

std::pair<Complex, Complex> compute_pq(const Rational& r)
{
    if (abs(r) == 2) throw DegeneracyError("r = " + r.get_str() + ": p and q collide (double-conic locus)");
    const double rd = to_double(r);
    const Complex disc = std::sqrt(Complex(rd * rd - 4));
    const double s2 = std::sqrt(2.0);
    return {std::sqrt(-disc - rd) / s2, std::sqrt(disc - rd) / s2};
}

std::array<Complex, 4> diagonal_entries(const QuarticForm& f, const std::array<Complex, 4>& beta)
{
    const auto& t = f.poly.table();
    const VarId z = t->id("z");
    Polynomial fz = partial(f.poly, z);
    std::array<Complex, 4> out{};
    if (substitute(fz, z, Polynomial(t, 0)).is_zero()) return out;
    Polynomial fy = partial(f.poly, t->id("y"));
    for (int i = 0; i < 4; ++i) {
        std::array<Complex, 3> pt{-beta[i], 1.0, 0.0};
        Complex den = eval_complex(fy, pt);
        if (std::abs(den) < 1e-14) throw DomainError("df/dy vanishes at (-beta, 1, 0)");
        out[i] = beta[i] * eval_complex(fz, pt) / den;
    }
    return out;
}

namespace {

// Both roots of w^2 + b1 w + b0, stable form.
std::array<Complex, 2> quadratic(Complex b1, Complex b0)
{
    auto rs = roots(UniPoly({b0, b1, 1.0}));
    return {rs[0].value, rs[1].value};
}

// x, y with x^2 = w0, y^2 = w1 and x*y = prod.
std::pair<Complex, Complex> split(Complex w0, Complex w1, Complex prod)
{
    Complex x = std::sqrt(w0);
    if (std::abs(x) > 1e-300) return {x, prod / x};
    return {0.0, std::sqrt(w1)};
}

void assemble(DetRep& rep)
{
    const auto& [a, b, c, d, e, f] = rep.unknowns;
    rep.B.diagonal() << rep.p, -rep.p, rep.q, -rep.q;
    rep.C.setZero();
    rep.C(0, 1) = a;
    rep.C(0, 2) = b;
    rep.C(0, 3) = d;
    rep.C(1, 2) = c;
    rep.C(1, 3) = e;
    rep.C(2, 3) = f;
    rep.C += rep.C.transpose().eval();
}

// 53 random bits in [0,1); portable unlike std::uniform_real_distribution.
double unit(std::mt19937_64& g)
{
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<DetRep> detrep_branches(const Rational& r, const Rational& s, const Rational& u)
{
    auto [p, q] = compute_pq(r);
    if (std::abs(p * q - 1.0) > std::abs(p * q + 1.0)) q = -q;  // choose pq = 1

    const Rational k = (r + 2) / (r - 2);
    const Rational C2 = (u - s) * (u - s) / 4;  // (c^2 + d^2)^2
    const Rational B2 = (u + s) * (u + s) / 4;  // (b^2 + e^2)^2
    const Complex cd_sum = to_double(-(u - s) / 2);
    const Complex be_sum = to_double(-(u + s) / 2);

    std::vector<DetRep> out;
    for (int eps : {1, -1}) {
        // k (C2 - 4t^2) + 4 (t + eps)^2 - B2 = 0
        const Rational lead = 4 - 4 * k;
        const Rational lin = 8 * eps;
        const Rational cst = 4 + k * C2 - B2;
        auto ts = roots(UniPoly({to_double(cst), to_double(lin), to_double(lead)}));
        for (int root = 0; root < 2; ++root) {
            const Complex t = ts[root].value;
            auto cd2 = quadratic(-cd_sum, t * t);
            auto be2 = quadratic(-be_sum, (t + double(eps)) * (t + double(eps)));
            for (bool swap_cd : {false, true}) {
                for (bool swap_be : {false, true}) {
                    DetRep rep;
                    rep.p = p;
                    rep.q = q;
                    rep.t = t;
                    rep.branch = {eps, root, swap_cd, swap_be};
                    auto [c, d] = split(cd2[swap_cd], cd2[!swap_cd], t);
                    auto [b, e] = split(be2[swap_be], be2[!swap_be], t + double(eps));
                    rep.unknowns = {0.0, b, c, d, e, 0.0};
                    assemble(rep);
                    rep.residuals = residuals_e_system(rep, r, s, u);
                    out.push_back(rep);
                }
            }
        }
    }
    return out;
}

EResiduals residuals_e_system(const DetRep& rep, const Rational& r, const Rational& s, const Rational& u)
{
    (void)r;
    const auto& [a, b, c, d, e, f] = rep.unknowns;
    const Complex p = rep.p, q = rep.q;
    const double sd = to_double(s), ud = to_double(u);
    EResiduals out;
    const Complex e6 = a * a * f * f - 2.0 * a * b * e * f - 2.0 * a * c * d * f + b * b * e * e -
                       2.0 * b * c * d * e + c * c * d * d - 1.0;
    out.e = {
        std::abs((b * b - e * e) * (q + p) + (c * c - d * d) * (q - p)),
        std::abs(a * a * q * q - b * b + c * c + d * d - e * e + f * f * p * p - sd),
        std::abs(f * f + e * e + d * d + c * c + b * b + a * a + ud),
        std::abs(a * d * e * q - a * b * c * q + c * e * f * p - b * d * f * p),
        std::abs(c * e * f + b * d * f + a * d * e + a * b * c),
        std::abs(e6),
    };
    out.raw = {
        std::abs(-e * e * q - d * d * q + c * c * q + b * b * q - e * e * p + d * d * p - c * c * p + b * b * p),
        std::abs(-sd + a * a * q * q - e * e * p * q + d * d * p * q + c * c * p * q - b * b * p * q + f * f * p * p),
        std::abs(-ud - f * f - e * e - d * d - c * c - b * b - a * a),
        std::abs(2.0 * (a * d * e * q - a * b * c * q + c * e * f * p - b * d * f * p)),
        std::abs(2.0 * (c * e * f + b * d * f + a * d * e + a * b * c)),
        std::abs(e6),
    };
    return out;
}

std::vector<std::array<Complex, 3>> sample_points(std::uint64_t seed, int count)
{
    std::mt19937_64 g(seed);
    auto disc = [&] {
        for (;;) {
            double x = 2 * unit(g) - 1, y = 2 * unit(g) - 1;
            if (x * x + y * y <= 1) return Complex(x, y);
        }
    };
    std::vector<std::array<Complex, 3>> pts(count);
    for (auto& pt : pts) {
        for (auto& c : pt) c = disc();
    }
    return pts;
}

double determinant_residual(const DetRep& rep, const Polynomial& f, std::uint64_t seed, int count)
{
    double worst = 0;
    for (const auto& pt : sample_points(seed, count)) {
        CMatrix4 M = pt[0] * rep.A + pt[1] * rep.B + pt[2] * rep.C;
        Complex fv = eval_complex(f, pt);
        worst = std::max(worst, std::abs(M.determinant() - fv) / (1 + std::abs(fv)));
    }
    return worst;
}

DetRep solve_detrep(const Rational& r, const Rational& s, const Rational& u, const DetrepOptions& opts)
{
    std::array<Rational, 3> rsu{r, s, u};
    QuarticForm form = make_family(Family::X4, rsu);
    auto beta = check_normal_form(form);
    auto diag = diagonal_entries(form, beta);
    if (std::any_of(diag.begin(), diag.end(), [](Complex c) { return c != Complex(0); })) {
        throw DomainError("X4 must have a zero diagonal in C");
    }

    const DetRep* best = nullptr;
    auto branches = detrep_branches(r, s, u);
    for (auto& rep : branches) {
        if (rep.residuals.e[0] >= opts.tol || rep.residuals.e[5] >= opts.tol) continue;
        rep.det_residual = determinant_residual(rep, form.poly, opts.seed, opts.points);
        rep.points = opts.points;
        rep.seed = opts.seed;
        if (rep.residuals.max_e() >= opts.tol || rep.det_residual >= opts.tol) continue;
        auto key = [](const DetRep& d) { return std::pair(d.branch.epsilon != 1, d.residuals.max_e()); };
        if (!best || key(rep) < key(*best)) best = &rep;
    }
    if (!best) {
        std::ostringstream os;
        os << "no branch certifies at tolerance " << opts.tol << ":";
        for (const auto& rep : branches) {
            os << "\n  " << rep.branch.to_string() << " max e-residual " << rep.residuals.max_e();
        }
        throw NumericError(os.str());
    }
    return *best;
}

Polynomial determinant_expand(const PolyMatrix4& A, const PolyMatrix4& B, const PolyMatrix4& C)
{
    TablePtr t;
    for (const auto* M : {&A, &B, &C}) {
        for (Eigen::Index i = 0; i < 16; ++i) {
            if (!t && M->data()[i].table()) t = M->data()[i].table();
        }
    }
    if (!t || t->geometric_count() != 3) throw StructuralError("determinant_expand needs entries over x,y,z");
    const Polynomial x = Polynomial::variable(t, 0), y = Polynomial::variable(t, 1), z = Polynomial::variable(t, 2);
    PolyMatrix4 M;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) M(i, j) = x * A(i, j) + y * B(i, j) + z * C(i, j);
    }
    return cofactor_determinant(M);
}

}  // namespace quartic
