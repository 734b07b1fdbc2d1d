#include "quartic/bitangent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "quartic/components.hpp"

namespace quartic {

std::string_view to_string(Chart chart)
{
    switch (chart) {
        case Chart::XY: return "XY";
        case Chart::YZ: return "YZ";
        case Chart::ZX: return "ZX";
    }
    return "?";
}

namespace {

// (X, Y, E) as indices into (x, y, z).
struct ChartAxes {
    int X, Y, E;
};

ChartAxes axes(Chart chart)
{
    switch (chart) {
        case Chart::XY: return {0, 1, 2};
        case Chart::YZ: return {1, 2, 0};
        case Chart::ZX: return {2, 0, 1};
    }
    return {0, 1, 2};
}

std::array<std::string, 2> unknown_names(Chart chart)
{
    switch (chart) {
        case Chart::XY: return {"a", "b"};
        case Chart::YZ: return {"b", "c"};
        case Chart::ZX: return {"c", "a"};
    }
    return {"a", "b"};
}

}  // namespace

ProjLine ProjLine::normalized(const std::array<Complex, 3>& v)
{
    int p = 0;
    double best = std::abs(v[0]);
    for (int i = 1; i < 3; ++i) {
        if (std::abs(v[i]) > best * (1 + 1e-9) + 1e-300) {
            best = std::abs(v[i]);
            p = i;
        }
    }
    if (best == 0) throw DomainError("the zero vector is not a line");
    ProjLine l;
    for (int i = 0; i < 3; ++i) l.c[i] = i == p ? Complex(1) : v[i] / v[p];
    return l;
}

int ProjLine::pivot() const
{
    for (int i = 0; i < 3; ++i) {
        if (c[i] == Complex(1)) return i;
    }
    return normalized(c).pivot();
}

Chart ProjLine::chart() const
{
    switch (pivot()) {
        case 0: return Chart::YZ;
        case 1: return Chart::ZX;
        default: return Chart::XY;
    }
}

ProjLine ProjLine::from_chart(Chart chart, Complex n1, Complex n2)
{
    auto ax = axes(chart);
    std::array<Complex, 3> v{};
    v[ax.X] = n1;
    v[ax.Y] = n2;
    v[ax.E] = 1;
    return normalized(v);
}

std::array<Complex, 2> ProjLine::chart_coordinates(Chart chart) const
{
    auto ax = axes(chart);
    if (c[ax.E] == Complex(0)) throw DomainError("line is at infinity in this chart");
    return {c[ax.X] / c[ax.E], c[ax.Y] / c[ax.E]};
}

bool same_line(const ProjLine& v, const ProjLine& w, double tol)
{
    const auto& a = v.c;
    const auto& b = w.c;
    double cross = std::sqrt(std::norm(a[1] * b[2] - a[2] * b[1]) + std::norm(a[2] * b[0] - a[0] * b[2]) +
                             std::norm(a[0] * b[1] - a[1] * b[0]));
    auto len = [](const std::array<Complex, 3>& x) {
        return std::sqrt(std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]));
    };
    return cross <= tol * len(a) * len(b);
}

int zero_count(const ProjLine& line)
{
    int n = 0;
    for (const auto& z : line.c) n += std::abs(z) < 1e-12;
    return n;
}

std::vector<ProjLine> dedupe_lines(const std::vector<ProjLine>& lines, double tol)
{
    std::vector<ProjLine> out;
    for (const auto& l : lines) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const ProjLine& o) { return same_line(o, l, tol); });
        if (!seen) out.push_back(l);
    }
    return out;
}

// ---------------------------------------------------------------- square fit

namespace {

std::array<Complex, 5> square_of(const std::array<Complex, 3>& l)
{
    return {l[0] * l[0], 2.0 * l[0] * l[1], l[1] * l[1] + 2.0 * l[0] * l[2], 2.0 * l[1] * l[2], l[2] * l[2]};
}

double max_abs(const std::array<Complex, 5>& g)
{
    double m = 0;
    for (const auto& c : g) m = std::max(m, std::abs(c));
    return m;
}

double square_residual(const std::array<Complex, 5>& g, const std::array<Complex, 3>& lambda)
{
    double scale = max_abs(g);
    if (scale == 0) return 0;
    auto sq = square_of(lambda);
    double r = 0;
    for (int k = 0; k < 5; ++k) r = std::max(r, std::abs(g[k] - sq[k]));
    return r / scale;
}

}  // namespace

std::optional<SquareFit> perfect_square_fit(const std::array<Complex, 5>& g, double tol)
{
    if (max_abs(g) == 0) return std::nullopt;
    std::vector<std::array<Complex, 3>> cands;
    // Anchored on c40 or c04: one square root, the rest from the linear relations.
    // This keeps tiny coefficients tiny instead of amplifying them through sqrt.
    if (g[0] != 0.0) {
        Complex l0 = std::sqrt(g[0]), l1 = g[1] / (2.0 * l0);
        cands.push_back({l0, l1, (g[2] - l1 * l1) / (2.0 * l0)});
    }
    if (g[4] != 0.0) {
        Complex l2 = std::sqrt(g[4]), l1 = g[3] / (2.0 * l2);
        cands.push_back({(g[2] - l1 * l1) / (2.0 * l2), l1, l2});
    }
    // Anchored on c22: mu = l1^2 solves mu^2 - c22 mu + c31 c13 / 2 = 0.
    for (const auto& mu : roots(UniPoly({g[1] * g[3] / 2.0, -g[2], 1.0}))) {
        if (mu.value == 0.0) continue;
        Complex l1 = std::sqrt(mu.value);
        cands.push_back({g[1] / (2.0 * l1), l1, g[3] / (2.0 * l1)});
    }
    // Both outer coefficients from square roots, l1 by least squares or from c22.
    const Complex l0 = std::sqrt(g[0]);
    const Complex root4 = std::sqrt(g[4]);
    for (Complex l2 : {root4, -root4}) {
        double den = 4 * (std::norm(l0) + std::norm(l2));
        if (den > 0) cands.push_back({l0, (g[1] * std::conj(2.0 * l0) + g[3] * std::conj(2.0 * l2)) / den, l2});
        Complex m = std::sqrt(g[2] - 2.0 * l0 * l2);
        cands.push_back({l0, m, l2});
        cands.push_back({l0, -m, l2});
    }
    std::optional<SquareFit> best;
    for (const auto& lambda : cands) {
        SquareFit fit{lambda, square_residual(g, lambda)};
        if (!best || fit.residual < best->residual) best = fit;
    }
    if (!best || best->residual >= tol) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------- tangency system

TangencySystem build_tangency_system(const Polynomial& f, Chart chart)
{
    if (!f.table() || f.table()->geometric_names() != std::vector<std::string>{"x", "y", "z"}) {
        throw StructuralError("build_tangency_system expects a quartic in x,y,z");
    }
    if (!f.is_geometric_homogeneous(4) || f.is_zero()) throw DegreeError("expected a ternary quartic");
    const auto names = unknown_names(chart);
    auto params = f.table()->parameter_names();
    for (const auto& p : params) {
        if (p == names[0] || p == names[1] || p == "l0" || p == "l1" || p == "l2") {
            throw StructuralError("parameter name '" + p + "' clashes with a tangency unknown");
        }
    }
    auto lift_params = params;
    for (const char* n : {"#n1", "#n2", "l0", "l1", "l2"}) lift_params.push_back(n);
    auto lift = make_table({"x", "y", "z"}, lift_params);
    Polynomial g = rebind(f, lift);

    auto ax = axes(chart);
    auto var = [&](std::string_view n) { return Polynomial::variable(lift, n); };
    std::vector<std::optional<Polynomial>> images(lift->size());
    images[ax.E] = -(var("#n1") * Polynomial::variable(lift, ax.X) + var("#n2") * Polynomial::variable(lift, ax.Y));
    g = compose(g, images);

    Polynomial l0 = var("l0"), l1 = var("l1"), l2 = var("l2");
    const Rational two(2);
    std::array<Polynomial, 5> square{l0 * l0, two * l0 * l1, l1 * l1 + two * l0 * l2, two * l1 * l2, l2 * l2};

    TangencySystem sys;
    sys.chart = chart;
    sys.table = make_table({names[0], names[1], "l0", "l1", "l2"}, params);
    const std::map<std::string, std::string> rename{{"#n1", names[0]}, {"#n2", names[1]}};
    for (int k = 0; k < 5; ++k) {
        Monomial m;
        m.exp[ax.X] = static_cast<std::uint8_t>(4 - k);
        m.exp[ax.Y] = static_cast<std::uint8_t>(k);
        sys.generators[k] = rebind(geometric_coefficient(g, m) - square[k], sys.table, rename);
    }
    return sys;
}

TangencySystem build_tangency_system(const QuarticForm& f, Chart chart)
{
    return build_tangency_system(f.poly, chart);
}

std::array<Complex, 5> restrict_to_line(const Polynomial& f, const ProjLine& line, Chart chart)
{
    if (f.table() && f.table()->parameter_count() > 0 && f.parameter_degree() > 0) {
        throw DomainError("restrict_to_line needs numeric coefficients");
    }
    auto n = line.chart_coordinates(chart);
    auto ax = axes(chart);
    // binary linear forms for x, y, z: (coefficient of X, coefficient of Y)
    std::array<std::array<Complex, 2>, 3> form{};
    form[ax.X] = {1.0, 0.0};
    form[ax.Y] = {0.0, 1.0};
    form[ax.E] = {-n[0], -n[1]};

    std::array<Complex, 5> out{};
    for (const auto& [m, c] : f.terms()) {
        std::vector<Complex> prod{to_double(c)};
        for (int v = 0; v < 3; ++v) {
            for (int e = 0; e < m.exp[v]; ++e) {
                std::vector<Complex> next(prod.size() + 1);
                for (std::size_t i = 0; i < prod.size(); ++i) {
                    next[i] += prod[i] * form[v][0];
                    next[i + 1] += prod[i] * form[v][1];
                }
                prod = std::move(next);
            }
        }
        if (prod.size() != 5) throw DegreeError("restrict_to_line expects a quartic");
        for (int k = 0; k < 5; ++k) out[k] += prod[k];
    }
    return out;
}

// ---------------------------------------------------------------- degeneracy

void check_bitangent_degeneracy(Family family, std::span<const Rational> params)
{
    const auto names = family_parameters(family);
    if (family == Family::Generic) throw StructuralError("bitangents are enumerated for X4, X16, X24 and X96 only");
    if (params.size() != names.size()) {
        std::ostringstream os;
        os << to_string(family) << " takes " << names.size() << " parameter(s), got " << params.size();
        throw StructuralError(os.str());
    }
    if (auto why = singular_reason(family, params)) {
        throw DegeneracyError(std::string(to_string(family)) + " is degenerate at these parameters: " + *why);
    }
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Prepared {
    TangencySystem sys;
    std::array<std::array<Polynomial, 5>, 5> jac;  // jac[i][k] = d g_i / d x_k
};

Prepared prepare(const Polynomial& f, Chart chart)
{
    Prepared p{build_tangency_system(f, chart), {}};
    for (int i = 0; i < 5; ++i) {
        for (int k = 0; k < 5; ++k) p.jac[i][k] = formal_derivative(p.sys.generators[i], k);
    }
    return p;
}

double generator_residual(const std::array<Polynomial, 5>& gens, std::span<const Complex> x)
{
    double r = 0;
    for (const auto& g : gens) r = std::max(r, std::abs(eval_complex(g, x)) / (1 + eval_abs_sum(g, x)));
    return r;
}

using Vec5 = Eigen::Matrix<Complex, 5, 1>;

// Newton on the square tangency system. Returns nullopt if the start is not
// in the basin of a nearby solution.
std::optional<Vec5> newton(const Prepared& p, Vec5 x)
{
    const Vec5 start = x;
    for (int it = 0; it < 30; ++it) {
        Vec5 fx;
        Eigen::Matrix<Complex, 5, 5> J;
        for (int i = 0; i < 5; ++i) {
            fx(i) = eval_complex(p.sys.generators[i], std::span<const Complex>(x.data(), 5));
            for (int k = 0; k < 5; ++k) J(i, k) = eval_complex(p.jac[i][k], std::span<const Complex>(x.data(), 5));
        }
        Vec5 step = J.partialPivLu().solve(fx);
        if (!step.allFinite()) break;
        x -= step;
        if (step.norm() <= 1e-15 * (1 + x.norm())) break;
    }
    if (!x.allFinite() || (x - start).norm() > 1e-4 * (1 + start.norm())) return std::nullopt;
    return x;
}

struct Candidate {
    ProjLine line;
    std::string source;
    const Component* component = nullptr;
    Chart source_chart = Chart::XY;
    std::map<std::string, Rational> component_params;
};

struct Context {
    Polynomial f;
    std::array<Prepared, 3> charts;
    BitangentOptions opts;
};

std::optional<BitangentCert> certify(const Context& ctx, const Candidate& cand)
{
    ProjLine line = cand.line;
    std::array<Complex, 3> lambda{};
    Chart pc = line.chart();
    for (int pass = 0; pass < 2; ++pass) {
        pc = line.chart();
        auto n = line.chart_coordinates(pc);
        auto fit = perfect_square_fit(restrict_to_line(ctx.f, line, pc), 1e-3);
        if (!fit) return std::nullopt;
        Vec5 x;
        x << n[0], n[1], fit->lambda[0], fit->lambda[1], fit->lambda[2];
        auto refined = newton(ctx.charts[static_cast<int>(pc)], x);
        if (!refined) return std::nullopt;
        line = ProjLine::from_chart(pc, (*refined)(0), (*refined)(1));
        lambda = {(*refined)(2), (*refined)(3), (*refined)(4)};
        if (line.chart() == pc) break;
    }
    if (line.chart() != pc) return std::nullopt;

    BitangentCert cert;
    cert.line = line;
    cert.lambda = lambda;
    cert.chart = pc;
    cert.source = cand.source;
    cert.residual = square_residual(restrict_to_line(ctx.f, line, pc), lambda);
    auto n = line.chart_coordinates(pc);
    std::array<Complex, 5> x{n[0], n[1], lambda[0], lambda[1], lambda[2]};
    cert.generator_residual = generator_residual(ctx.charts[static_cast<int>(pc)].sys.generators, x);

    if (cand.component) {
        auto sc = cand.source_chart;
        auto ax = axes(sc);
        if (std::abs(line.c[ax.E]) > 1e-12) {
            auto ab = line.chart_coordinates(sc);
            std::array<Complex, 5> pt{ab[0], ab[1], 0.0, 0.0, 0.0};
            double r = 0;
            for (const auto& g : cand.component->generators) {
                Polynomial s = specialize(g, cand.component_params);
                r = std::max(r, std::abs(eval_complex(s, pt)) / (1 + eval_abs_sum(s, pt)));
            }
            cert.component_residual = r;
        }
    }
    const double tol = ctx.opts.tol;
    bool ok = cert.residual < tol && cert.generator_residual < tol &&
              (!cert.component_residual || *cert.component_residual < tol);
    if (!ok) return std::nullopt;
    return cert;
}

// p as a univariate polynomial in var, if it involves nothing else.
std::optional<UniPoly> univariate(const Polynomial& p, VarId var)
{
    if (p.is_zero() || !p.table()) return std::nullopt;
    std::vector<Complex> c(p.degree_in(var) + 1);
    for (const auto& [m, coeff] : p.terms()) {
        for (VarId v = 0; v < p.table()->size(); ++v) {
            if (v != var && m.exp[v] != 0) return std::nullopt;
        }
        c[m.exp[var]] = to_double(coeff);
    }
    if (c.size() < 2) return std::nullopt;
    return UniPoly(std::move(c));
}

bool is_even(const UniPoly& p)
{
    const auto& c = p.coefficients();
    for (std::size_t k = 1; k < c.size(); k += 2) {
        if (c[k] != Complex(0)) return false;
    }
    return true;
}

std::vector<Complex> solve_uni(const UniPoly& p)
{
    std::vector<Root> rs = (p.degree() >= 4 && is_even(p)) ? biquadratic_roots(p) : roots(p);
    std::vector<Complex> out;
    for (const auto& r : rs) out.push_back(r.value);
    return out;
}

// p with variable `var` set to v, as a univariate polynomial in `other`.
// Coefficients below 1e-10 of the term scale are treated as zero.
UniPoly partial_eval(const Polynomial& p, VarId var, Complex v, VarId other)
{
    std::vector<Complex> c(p.degree_in(other) + 1);
    double scale = 0;
    for (const auto& [m, coeff] : p.terms()) {
        Complex t = to_double(coeff) * std::pow(v, static_cast<int>(m.exp[var]));
        c[m.exp[other]] += t;
        scale += std::abs(t);
    }
    for (auto& z : c) {
        if (std::abs(z) <= 1e-10 * scale) z = 0;
    }
    return UniPoly(std::move(c));
}

// Solutions (a, b) of a component with its parameters specialized.
std::vector<std::array<Complex, 2>> solve_component(const Component& comp, const std::map<std::string, Rational>& params)
{
    std::vector<Polynomial> polys;
    for (const auto& g : comp.generators) polys.push_back(specialize(g, params));
    for (const auto& g : comp.eliminants) polys.push_back(specialize(g, params));

    const VarId A = 0, B = 1;
    for (auto [first, second] : {std::pair{B, A}, std::pair{A, B}}) {
        std::optional<UniPoly> pick;
        for (const auto& p : polys) {
            auto u = univariate(p, first);
            if (u && (!pick || u->degree() < pick->degree())) pick = u;
        }
        if (!pick) continue;
        std::vector<std::array<Complex, 2>> out;
        for (Complex v : solve_uni(*pick)) {
            std::optional<UniPoly> best;
            for (const auto& p : polys) {
                UniPoly q = partial_eval(p, first, v, second);
                if (q.degree() >= 1 && (!best || q.degree() < best->degree())) best = q;
            }
            if (!best) continue;
            for (Complex w : solve_uni(*best)) {
                std::array<Complex, 2> ab{};
                ab[first] = v;
                ab[second] = w;
                out.push_back(ab);
            }
        }
        return out;
    }
    throw NumericError("component " + comp.tag + " has no univariate generator");
}

// Parameter values for the family's components in a chart, by rotating the
// coordinates: chart YZ of X4(r,s,u) is chart XY of X4(s,u,r), chart ZX is X4(u,r,s).
struct ChartPlan {
    const std::vector<Component>* components;
    std::map<std::string, Rational> params;
};

ChartPlan plan(Family family, std::span<const Rational> p, Chart chart)
{
    auto x4 = [&](const Rational& r, const Rational& s, const Rational& u) {
        return ChartPlan{&x4_components(), {{"r", r}, {"s", s}, {"u", u}}};
    };
    std::array<Rational, 3> rsu;
    switch (family) {
        case Family::X4: rsu = {p[0], p[1], p[2]}; break;
        case Family::X16:
            if (chart == Chart::XY) return {&x16_components(), {{"r", p[0]}, {"s", p[1]}}};
            rsu = {p[0], p[1], p[1]};
            break;
        case Family::X24: return {&x24_components(), {{"r", p[0]}}};
        default: throw StructuralError("no component data for this family");
    }
    switch (chart) {
        case Chart::XY: return x4(rsu[0], rsu[1], rsu[2]);
        case Chart::YZ: return x4(rsu[1], rsu[2], rsu[0]);
        case Chart::ZX: return x4(rsu[2], rsu[0], rsu[1]);
    }
    return x4(rsu[0], rsu[1], rsu[2]);
}

std::vector<Candidate> x96_candidates()
{
    std::vector<Complex> values{0.0};
    for (int k = 0; k < 8; ++k) values.push_back(std::polar(1.0, k * M_PI / 4));
    std::vector<Candidate> out;
    for (const auto& a : values) {
        for (const auto& b : values) {
            for (const auto& c : values) {
                std::array<Complex, 3> v{a, b, c};
                int zeros = (a == 0.0) + (b == 0.0) + (c == 0.0);
                if (zeros > 1) continue;
                Candidate cand;
                cand.line = ProjLine::normalized(v);
                cand.source = zeros == 0 ? "X96.full" : "X96.axis";
                out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

struct SortKey {
    int mask;
    std::array<long long, 6> coeffs;
    auto operator<=>(const SortKey&) const = default;
};

SortKey sort_key(const ProjLine& l)
{
    SortKey k{0, {}};
    for (int i = 0; i < 3; ++i) {
        if (std::abs(l.c[i]) < 1e-12) k.mask |= 1 << i;
        k.coeffs[2 * i] = std::llround(l.c[i].real() * 1e9);
        k.coeffs[2 * i + 1] = std::llround(l.c[i].imag() * 1e9);
    }
    return k;
}

}  // namespace

std::vector<BitangentCert> enumerate_bitangents(Family family, std::span<const Rational> params,
                                                const BitangentOptions& opts)
{
    check_bitangent_degeneracy(family, params);
    Context ctx{make_family(family, params).poly, {}, opts};
    for (Chart c : kCharts) ctx.charts[static_cast<int>(c)] = prepare(ctx.f, c);

    std::vector<Candidate> cands;
    if (family == Family::X96) {
        cands = x96_candidates();
    } else {
        for (Chart chart : kCharts) {
            ChartPlan pl = plan(family, params, chart);
            for (const auto& comp : *pl.components) {
                for (const auto& ab : solve_component(comp, pl.params)) {
                    if (!std::isfinite(std::abs(ab[0])) || !std::isfinite(std::abs(ab[1]))) continue;
                    Candidate cand;
                    cand.line = ProjLine::from_chart(chart, ab[0], ab[1]);
                    cand.source = comp.tag + "@" + std::string(to_string(chart));
                    cand.component = &comp;
                    cand.source_chart = chart;
                    cand.component_params = pl.params;
                    cands.push_back(std::move(cand));
                }
            }
        }
    }

    std::vector<BitangentCert> certs;
    std::map<std::string, int> accepted;
    int rejected = 0;
    for (const auto& cand : cands) {
        auto cert = certify(ctx, cand);
        if (!cert) {
            ++rejected;
            continue;
        }
        bool seen = std::any_of(certs.begin(), certs.end(),
                                [&](const BitangentCert& o) { return same_line(o.line, cert->line, opts.dedupe_tol); });
        if (seen) continue;
        ++accepted[cert->source];
        certs.push_back(std::move(*cert));
    }
    if (certs.size() != 28) {
        std::ostringstream os;
        os << "expected 28 bitangents, certified " << certs.size() << " distinct lines from " << cands.size()
           << " candidates (" << rejected << " rejected);";
        for (const auto& [src, n] : accepted) os << ' ' << src << '=' << n;
        throw EnumerationError(os.str());
    }
    std::sort(certs.begin(), certs.end(),
              [](const BitangentCert& x, const BitangentCert& y) { return sort_key(x.line) < sort_key(y.line); });
    return certs;
}

}  // namespace quartic
