#include "quartic/diffcalc.hpp"

#include "quartic/errors.hpp"

namespace quartic {

namespace {

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

int binary_degree(const Polynomial& p)
{
    if (p.is_zero()) return -1;
    const int d = p.geometric_degree();
    if (!p.is_geometric_homogeneous(d)) throw DegreeError("transvectant of a non-homogeneous binary form");
    return d;
}

}  // namespace

Polynomial diff_pair(const Polynomial& f, const Polynomial& g)
{
    const TablePtr& table = f.table() ? f.table() : g.table();
    if (f.table() && g.table() && !(*f.table() == *g.table())) {
        throw StructuralError("diff_pair: mismatched variable tables");
    }
    Polynomial r(table);
    if (f.is_zero() || g.is_zero()) return r;
    const std::size_t geo = table ? table->geometric_count() : 0;
    const std::size_t n = table ? table->size() : 0;
    Rational c;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            Monomial out = mg;
            mpz_class falling = 1;
            bool vanishes = false;
            for (VarId i = 0; i < geo; ++i) {
                if (mf.exp[i] > mg.exp[i]) {
                    vanishes = true;
                    break;
                }
                for (unsigned e = 0; e < mf.exp[i]; ++e) falling *= (mg.exp[i] - e);
                out.exp[i] = static_cast<std::uint8_t>(mg.exp[i] - mf.exp[i]);
            }
            if (vanishes) continue;
            for (VarId i = geo; i < n; ++i) out.exp[i] = static_cast<std::uint8_t>(mf.exp[i] + mg.exp[i]);
            c = cf * cg;
            c *= falling;
            r.add_term(out, c);
        }
    }
    return r;
}

PolyMatrix3 hessian(const Polynomial& f, const Rational& scale)
{
    if (f.table() && f.table()->geometric_count() != 3) {
        throw StructuralError("hessian: expected exactly three geometric variables");
    }
    PolyMatrix3 h;
    for (VarId i = 0; i < 3; ++i) {
        Polynomial di = f.table() ? partial(f, i) : Polynomial(0);
        for (VarId j = i; j < 3; ++j) {
            Polynomial e = f.table() ? partial(di, j) : Polynomial(0);
            e *= scale;
            h(i, j) = e;
            h(j, i) = e;
        }
    }
    return h;
}

Polynomial j_bracket(JKind kind, const Polynomial& f, const Polynomial& g, const Rational& scale)
{
    auto check = [](const Polynomial& q) {
        if (!q.is_zero() && (q.geometric_degree() != 2 || !q.is_geometric_homogeneous(2))) {
            throw DegreeError("J bracket expects quadratic ternary forms");
        }
    };
    check(f);
    check(g);
    switch (kind) {
        case JKind::J11:
            return dot(hessian(f, scale), hessian(g, scale));
        case JKind::J22:
            return dot(adjugate(hessian(f, scale)), adjugate(hessian(g, scale)));
        case JKind::J30:
            return cofactor_determinant(hessian(f, scale));
        case JKind::J03:
            return cofactor_determinant(hessian(g, scale));
    }
    throw DomainError("unknown J bracket");
}

Polynomial transvectant(const Polynomial& F, const Polynomial& G, unsigned k)
{
    const TablePtr& table = F.table() ? F.table() : G.table();
    if (!table || table->geometric_count() != 2) {
        throw StructuralError("transvectant: expected a table with two geometric variables");
    }
    const int r = binary_degree(F);
    const int s = binary_degree(G);
    if (r < 0 || s < 0) return Polynomial(table);
    if (static_cast<int>(k) > std::min(r, s)) throw DomainError("transvectant order exceeds form degree");

    Polynomial sum(table);
    for (unsigned m = 0; m <= k; ++m) {
        Polynomial dF = partial(partial(F, 0, k - m), 1, m);
        Polynomial dG = partial(partial(G, 0, m), 1, k - m);
        Polynomial t = dF * dG;
        Rational coeff = binomial(k, m);
        if (m % 2 == 1) coeff = -coeff;
        sum += t * coeff;
    }
    Rational scale = factorial(r - k) * factorial(s - k) / (factorial(r) * factorial(s));
    return sum * scale;
}

}  // namespace quartic
