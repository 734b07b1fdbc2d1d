#include "quartic/dixmier.hpp"

#include "quartic/diffcalc.hpp"
#include "quartic/errors.hpp"

namespace quartic {

BinaryQuartic BinaryQuartic::from_polynomial(const Polynomial& p)
{
    if (!p.table() || p.table()->geometric_count() != 2) {
        throw StructuralError("binary quartic needs a table with two geometric variables");
    }
    if (!p.is_geometric_homogeneous(4)) throw DegreeError("not a binary quartic");
    BinaryQuartic q;
    for (int i = 0; i < 5; ++i) {
        Monomial m;
        m.exp[0] = static_cast<std::uint8_t>(4 - i);
        m.exp[1] = static_cast<std::uint8_t>(i);
        q.a[i] = geometric_coefficient(p, m);
    }
    return q;
}

Polynomial BinaryQuartic::to_polynomial(const TablePtr& table) const
{
    Polynomial p(table);
    for (int i = 0; i < 5; ++i) {
        Monomial m;
        m.exp[0] = static_cast<std::uint8_t>(4 - i);
        m.exp[1] = static_cast<std::uint8_t>(i);
        p += rebind(a[i], table) * Polynomial::term(table, m, 1);
    }
    return p;
}

Polynomial sigma_binary(const Polynomial& P)
{
    return transvectant(P, P, 4) * Rational(1, 2);
}

Polynomial psi_binary(const Polynomial& P)
{
    Polynomial Q = transvectant(P, P, 2);
    return transvectant(P, Q, 4) * Rational(1, 6);
}

Polynomial delta_binary(const Polynomial& P)
{
    Polynomial s = sigma_binary(P);
    Polynomial p = psi_binary(P);
    return s * s * s - p * p * Rational(27);
}

Contravariants contravariants(const Polynomial& f)
{
    const TablePtr& t = f.table();
    if (!t || t->geometric_count() != 3) throw StructuralError("contravariants: expected a ternary form");
    if (!f.is_geometric_homogeneous(4)) throw DegreeError("contravariants: expected a quartic");
    auto params = t->parameter_names();
    for (const char* reserved : {"U", "V", "W"}) {
        if (t->find(reserved)) throw StructuralError("contravariants: parameter name clashes with dual variable");
    }

    // Ring for the restriction: geometric x,y; the dual coordinates U,V ride as parameters.
    auto restr_params = params;
    restr_params.push_back("U");
    restr_params.push_back("V");
    auto restr = make_table({"x", "y"}, restr_params);
    auto lifted_params = params;
    lifted_params.push_back("U");
    lifted_params.push_back("V");
    auto lifted = make_table({"x", "y", "z"}, lifted_params);

    Polynomial fl = rebind(f, lifted);
    Polynomial line = -(Polynomial::variable(lifted, "U") * Polynomial::variable(lifted, "x") +
                        Polynomial::variable(lifted, "V") * Polynomial::variable(lifted, "y"));
    Polynomial g = rebind(substitute(fl, lifted->id("z"), line), restr);

    Polynomial Sg = sigma_binary(g);
    Polynomial Pg = psi_binary(g);

    auto dual = make_table({"U", "V", "W"}, params);
    const VarId w = dual->id("W");
    const std::map<std::string, std::string> to_xyz{{"U", "x"}, {"V", "y"}, {"W", "z"}};
    Contravariants c;
    c.sigma = rebind(homogenize(rebind(Sg, dual), w, 4), t, to_xyz);
    c.psi = rebind(homogenize(rebind(Pg, dual), w, 6), t, to_xyz);
    return c;
}

Covariants covariants(const Polynomial& f, const Contravariants& c, const InvariantConvention& conv)
{
    Covariants out;
    out.rho = diff_pair(f, c.psi);
    out.tau = diff_pair(out.rho, f);
    out.hdet = cofactor_determinant(hessian(f, conv.hessian_scale));
    return out;
}

std::size_t InvariantSet::index_of(int degree)
{
    for (std::size_t i = 0; i < kDegrees.size(); ++i) {
        if (kDegrees[i] == degree) return i;
    }
    throw DomainError("no Dixmier invariant of degree " + std::to_string(degree));
}

const Polynomial& InvariantSet::operator[](int degree) const
{
    return values[index_of(degree)];
}

Polynomial& InvariantSet::operator[](int degree)
{
    return values[index_of(degree)];
}

InvariantSet dixmier_invariants(const Polynomial& f, const InvariantConvention& conv)
{
    Contravariants c = contravariants(f);
    Covariants cov = covariants(f, c, conv);
    const Rational& h = conv.hessian_scale;

    InvariantSet inv;
    inv[3] = diff_pair(c.sigma, f);
    inv[6] = diff_pair(c.psi, cov.hdet) - inv[3] * inv[3] * conv.i3_square_weight;
    inv[9] = j_bracket(JKind::J11, cov.tau, cov.rho, h);
    inv[12] = j_bracket(JKind::J03, cov.tau, cov.rho, h);
    inv[15] = j_bracket(JKind::J30, cov.tau, cov.rho, h);
    inv[18] = j_bracket(JKind::J22, cov.tau, cov.rho, h);
    return inv;
}

InvariantSet dixmier_invariants(const QuarticForm& f, const InvariantConvention& conv)
{
    return dixmier_invariants(f.poly, conv);
}

}  // namespace quartic
