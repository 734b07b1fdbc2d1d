#include "quartic/symfam.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

std::string_view to_string(Family family)
{
    switch (family) {
        case Family::X4: return "X4";
        case Family::X16: return "X16";
        case Family::X24: return "X24";
        case Family::X96: return "X96";
        case Family::Generic: return "generic";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "x4") return Family::X4;
    if (lower == "x16") return Family::X16;
    if (lower == "x24") return Family::X24;
    if (lower == "x96") return Family::X96;
    if (lower == "generic") return Family::Generic;
    throw StructuralError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_parameters(Family family)
{
    switch (family) {
        case Family::X4: return {"r", "s", "u"};
        case Family::X16: return {"r", "s"};
        case Family::X24: return {"r"};
        default: return {};
    }
}

bool QuarticForm::is_symbolic() const
{
    return std::any_of(params.begin(), params.end(), [](const auto& b) { return !b.value; });
}

std::vector<Rational> QuarticForm::values() const
{
    std::vector<Rational> out;
    for (const auto& b : params) {
        if (!b.value) throw DomainError("parameter '" + b.name + "' is symbolic");
        out.push_back(*b.value);
    }
    return out;
}

TablePtr ternary_table(const std::vector<std::string>& parameters)
{
    static std::mutex mutex;
    static std::map<std::vector<std::string>, TablePtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[parameters];
    if (!slot) slot = make_table({"x", "y", "z"}, parameters);
    return slot;
}

namespace {

Polynomial family_equation(Family family, const TablePtr& t)
{
    auto v = [&](const char* n) { return Polynomial::variable(t, n); };
    Polynomial x = v("x"), y = v("y"), z = v("z");
    Polynomial x2 = x * x, y2 = y * y, z2 = z * z;
    Polynomial base = x2 * x2 + y2 * y2 + z2 * z2;
    switch (family) {
        case Family::X4: return base + v("r") * x2 * y2 + v("s") * y2 * z2 + v("u") * z2 * x2;
        case Family::X16: return base + v("r") * x2 * y2 + v("s") * (y2 * z2 + z2 * x2);
        case Family::X24: return base + v("r") * (x2 * y2 + y2 * z2 + z2 * x2);
        case Family::X96: return base;
        case Family::Generic: break;
    }
    throw StructuralError("generic quartics have no family equation");
}

}  // namespace

QuarticForm make_family(Family family)
{
    auto names = family_parameters(family);
    QuarticForm q;
    q.family = family;
    q.poly = family_equation(family, ternary_table(names));
    for (auto& n : names) q.params.push_back({n, std::nullopt});
    return q;
}

QuarticForm make_family(Family family, std::span<const Rational> params)
{
    auto names = family_parameters(family);
    if (family == Family::Generic) throw StructuralError("use make_generic for generic quartics");
    if (params.size() != names.size()) {
        std::ostringstream os;
        os << to_string(family) << " takes " << names.size() << " parameter(s), got " << params.size();
        throw StructuralError(os.str());
    }
    QuarticForm q;
    q.family = family;
    std::map<std::string, Rational> values;
    for (std::size_t i = 0; i < names.size(); ++i) {
        values[names[i]] = params[i];
        q.params.push_back({names[i], params[i]});
    }
    Polynomial symbolic = family_equation(family, ternary_table(names));
    q.poly = rebind(specialize(symbolic, values), ternary_table());
    return q;
}

std::optional<std::string> singular_reason(Family family, std::span<const Rational> params)
{
    std::array<Rational, 3> rsu;
    switch (family) {
        case Family::X4: rsu = {params[0], params[1], params[2]}; break;
        case Family::X16: rsu = {params[0], params[1], params[1]}; break;
        case Family::X24: rsu = {params[0], params[0], params[0]}; break;
        case Family::X96: return std::nullopt;
        case Family::Generic: throw StructuralError("singular_reason covers the symmetric families only");
    }
    const auto names = family_parameters(family);
    auto is2 = [](const Rational& q) { return abs(q) == 2; };
    if (is2(rsu[0]) && is2(rsu[1]) && is2(rsu[2])) {
        if (rsu[0] * rsu[1] * rsu[2] > 0) return "double conic (|r|=|s|=|u|=2)";
        return "union of four lines (|r|=|s|=|u|=2)";
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (is2(params[i])) return "singular on a coordinate line (" + names[i] + " = " + params[i].get_str() + ")";
    }
    Rational delta = 4 + rsu[0] * rsu[1] * rsu[2] - rsu[0] * rsu[0] - rsu[1] * rsu[1] - rsu[2] * rsu[2];
    if (delta == 0) return "singular (4 + rsu - r^2 - s^2 - u^2 = 0)";
    return std::nullopt;
}

std::vector<std::array<int, 3>> quartic_monomials()
{
    std::vector<std::array<int, 3>> out;
    for (int i = 4; i >= 0; --i) {
        for (int j = 4 - i; j >= 0; --j) out.push_back({i, j, 4 - i - j});
    }
    return out;
}

QuarticForm make_generic(std::span<const Rational> coefficients)
{
    if (coefficients.size() != 15) throw StructuralError("a generic quartic takes 15 coefficients");
    auto t = ternary_table();
    Polynomial f(t);
    auto mons = quartic_monomials();
    for (std::size_t k = 0; k < 15; ++k) {
        Monomial m;
        for (int v = 0; v < 3; ++v) m.exp[v] = static_cast<std::uint8_t>(mons[k][v]);
        f.add_term(m, coefficients[k]);
    }
    return make_generic(f);
}

QuarticForm make_generic(const Polynomial& poly)
{
    if (!poly.table() || poly.table()->geometric_count() != 3) {
        throw StructuralError("generic quartic must be a polynomial in x,y,z");
    }
    if (poly.is_zero() || !poly.is_geometric_homogeneous(4)) {
        throw DegreeError("generic quartic must be homogeneous of degree 4");
    }
    QuarticForm q;
    q.family = Family::Generic;
    q.poly = poly;
    for (const auto& n : poly.table()->parameter_names()) q.params.push_back({n, std::nullopt});
    return q;
}

Polynomial linear_substitution(const Polynomial& f, const std::array<std::array<Rational, 3>, 3>& m)
{
    const auto& t = f.table();
    std::vector<std::optional<Polynomial>> images(t->size());
    for (VarId i = 0; i < 3; ++i) {
        Polynomial img(t);
        for (VarId j = 0; j < 3; ++j) img += Polynomial::variable(t, j) * m[i][j];
        images[i] = img;
    }
    return compose(f, images);
}

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty() || parts_.size() > 3) throw DomainError("partition must have 1 to 3 parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::string Partition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition parse_partition(std::string_view text)
{
    if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
        throw ParseError("not a partition: '" + std::string(text) + "'");
    }
    std::vector<int> parts;
    std::string body(text.substr(1, text.size() - 2));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
            throw ParseError("not a partition: '" + std::string(text) + "'");
        }
        parts.push_back(std::stoi(item));
    }
    try {
        return Partition(parts);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

namespace {

std::array<VarId, 3> first_three_parameters(const TablePtr& table)
{
    if (!table || table->parameter_count() < 3) throw DomainError("expected at least three parameters");
    const VarId g = table->geometric_count();
    return {g, g + 1, g + 2};
}

}  // namespace

Polynomial s_basis(const Partition& partition, const TablePtr& table)
{
    auto vars = first_three_parameters(table);
    std::array<int, 3> e{0, 0, 0};
    for (std::size_t i = 0; i < partition.parts().size(); ++i) e[i] = partition.parts()[i];
    std::sort(e.begin(), e.end());
    std::set<std::array<int, 3>> orbit;
    do {
        orbit.insert(e);
    } while (std::next_permutation(e.begin(), e.end()));
    Polynomial p(table);
    for (const auto& o : orbit) {
        Monomial m;
        for (int i = 0; i < 3; ++i) m.exp[vars[i]] = static_cast<std::uint8_t>(o[i]);
        p.add_term(m, 1);
    }
    return p;
}

Polynomial permute_parameters(const Polynomial& p, const std::array<int, 3>& perm)
{
    auto vars = first_three_parameters(p.table());
    Polynomial r(p.table());
    for (const auto& [m, c] : p.terms()) {
        Monomial out = m;
        for (int i = 0; i < 3; ++i) out.exp[vars[perm[i]]] = m.exp[vars[i]];
        r.add_term(out, c);
    }
    return r;
}

bool is_symmetric_in_parameters(const Polynomial& p)
{
    if (p.is_zero()) return true;
    for (const auto& perm : {std::array<int, 3>{1, 0, 2}, std::array<int, 3>{1, 2, 0}}) {
        if (!(permute_parameters(p, perm) == p)) return false;
    }
    return true;
}

SymmetricDecomposition decompose_symmetric(const Polynomial& p)
{
    SymmetricDecomposition d;
    if (p.is_zero()) return d;
    if (!p.table()) {
        d.constant = p.constant_term();
        return d;
    }
    auto vars = first_three_parameters(p.table());
    if (p.geometric_degree() > 0) throw DomainError("decompose_symmetric: polynomial depends on geometric variables");
    if (!is_symmetric_in_parameters(p)) throw DomainError("decompose_symmetric: polynomial is not symmetric");
    Polynomial rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, coeff] = *rest.terms().begin();
        std::vector<int> parts;
        for (VarId v : vars) {
            if (lead.exp[v] > 0) parts.push_back(lead.exp[v]);
        }
        if (parts.empty()) {
            d.constant = coeff;
            break;
        }
        std::sort(parts.rbegin(), parts.rend());
        Partition part(parts);
        Rational c = coeff;
        d.terms[part] = c;
        rest -= s_basis(part, p.table()) * c;
    }
    return d;
}

Polynomial reconstruct(const SymmetricDecomposition& d, const TablePtr& table)
{
    Polynomial p(table, d.constant);
    for (const auto& [part, c] : d.terms) p += s_basis(part, table) * c;
    return p;
}

}  // namespace quartic
