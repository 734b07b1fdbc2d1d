#include "quartic/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "quartic/errors.hpp"

namespace quartic {

Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class zn(n, 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<std::string> geometric, std::vector<std::string> parameters)
    : geometric_count_(geometric.size())
{
    if (geometric.empty()) throw StructuralError("variable table needs at least one geometric variable");
    names_ = std::move(geometric);
    names_.insert(names_.end(), parameters.begin(), parameters.end());
    if (names_.size() > kMaxVars) throw StructuralError("too many variables");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw StructuralError("empty variable name");
        if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
    }
}

std::optional<VarId> VarTable::find(std::string_view name) const
{
    for (VarId i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

VarId VarTable::id(std::string_view name) const
{
    if (auto i = find(name)) return *i;
    throw StructuralError("unknown variable '" + std::string(name) + "'");
}

std::vector<std::string> VarTable::geometric_names() const
{
    return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(geometric_count_)};
}

std::vector<std::string> VarTable::parameter_names() const
{
    return {names_.begin() + static_cast<std::ptrdiff_t>(geometric_count_), names_.end()};
}

TablePtr make_table(std::vector<std::string> geometric, std::vector<std::string> parameters)
{
    return std::make_shared<const VarTable>(std::move(geometric), std::move(parameters));
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const
{
    return degree(0, VarTable::kMaxVars);
}

int Monomial::degree(VarId begin, VarId end) const
{
    int d = 0;
    for (VarId i = begin; i < end && i < VarTable::kMaxVars; ++i) d += exp[i];
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const auto g = geometric_count_;
    const auto n = VarTable::kMaxVars;
    int da = a.degree(0, g), db = b.degree(0, g);
    if (da != db) return da > db;
    for (VarId i = 0; i < g && i < n; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    da = a.degree(g, n);
    db = b.degree(g, n);
    if (da != db) return da > db;
    for (VarId i = g; i < n; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    return false;
}

// ---------------------------------------------------------------- Polynomial

namespace {

Polynomial::Terms empty_terms(const TablePtr& table)
{
    return Polynomial::Terms(MonomialOrder(table ? table->geometric_count() : VarTable::kMaxVars));
}

bool same_table(const TablePtr& a, const TablePtr& b)
{
    return a == b || (a && b && *a == *b);
}

void check_var(const Polynomial& p, VarId var)
{
    if (!p.table()) throw StructuralError("variable access on a table-less constant");
    if (var >= p.table()->size()) throw StructuralError("variable id out of range");
}

}  // namespace

Polynomial::Polynomial(const Rational& c) : terms_(empty_terms(nullptr))
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(TablePtr table, const Rational& c)
    : table_(std::move(table)), terms_(empty_terms(table_))
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const TablePtr& table, VarId id)
{
    if (id >= table->size()) throw StructuralError("variable id out of range");
    Monomial m;
    m.exp[id] = 1;
    return term(table, m, 1);
}

Polynomial Polynomial::variable(const TablePtr& table, std::string_view name)
{
    return variable(table, table->id(name));
}

Polynomial Polynomial::term(const TablePtr& table, const Monomial& m, const Rational& c)
{
    Polynomial p(table);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial{});
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::geometric_degree() const
{
    if (terms_.empty()) return -1;
    if (!table_) return 0;
    return terms_.begin()->first.degree(0, table_->geometric_count());
}

int Polynomial::parameter_degree() const
{
    if (terms_.empty()) return -1;
    if (!table_) return 0;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(table_->geometric_count(), table_->size()));
    return d;
}

int Polynomial::degree_in(VarId id) const
{
    int d = terms_.empty() ? -1 : 0;
    if (id >= VarTable::kMaxVars) return d;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[id]));
    return d;
}

bool Polynomial::is_geometric_homogeneous(int d) const
{
    const std::size_t g = table_ ? table_->geometric_count() : 0;
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree(0, g) == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::adopt_table(const Polynomial& other, const char* op)
{
    if (!other.table_ || same_table(table_, other.table_)) return;
    if (!table_) {
        Terms rebuilt = empty_terms(other.table_);
        for (auto& [m, c] : terms_) rebuilt.emplace(m, c);
        table_ = other.table_;
        terms_ = std::move(rebuilt);
        return;
    }
    throw StructuralError(std::string("mismatched variable tables in ") + op);
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    adopt_table(other, "add");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    adopt_table(other, "sub");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    TablePtr table = a.table_ ? a.table_ : b.table_;
    if (a.table_ && b.table_ && !same_table(a.table_, b.table_)) {
        throw StructuralError("mismatched variable tables in mul");
    }
    Polynomial r(table);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < VarTable::kMaxVars; ++i) {
                unsigned e = unsigned(ma.exp[i]) + mb.exp[i];
                if (e > 255) throw DegreeError("exponent overflow");
                m.exp[i] = static_cast<std::uint8_t>(e);
            }
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            r.add_term(m, prod);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.table_ && b.table_ && !same_table(a.table_, b.table_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = m.degree() > 0;
        bool wrote = false;
        if (!has_vars || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (VarId i = 0; table_ && i < table_->size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (wrote) os << '*';
            os << table_->name(i);
            if (m.exp[i] > 1) os << '^' << int(m.exp[i]);
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- operations

Polynomial pow(const Polynomial& p, unsigned n)
{
    Polynomial result(p.table(), 1);
    Polynomial base = p;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

Polynomial formal_derivative(const Polynomial& p, VarId var)
{
    Polynomial r(p.table());
    if (p.is_zero()) return r;
    check_var(p, var);
    for (const auto& [m, c] : p.terms()) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.add_term(d, c * m.exp[var]);
    }
    return r;
}

Polynomial partial(const Polynomial& p, VarId var, unsigned order)
{
    if (p.table()) {
        check_var(p, var);
        if (p.table()->role(var) != VarRole::Geometric) {
            throw RoleError("cannot differentiate in parameter '" + p.table()->name(var) + "'");
        }
    }
    Polynomial r = p;
    for (unsigned k = 0; k < order && !r.is_zero(); ++k) r = formal_derivative(r, var);
    return r;
}

Polynomial compose(const Polynomial& p, std::span<const std::optional<Polynomial>> images)
{
    Polynomial r(p.table());
    if (p.is_zero()) return r;
    const std::size_t n = p.table() ? p.table()->size() : 0;
    // powers[i][e] = images[i]^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(n);
    for (const auto& [m, c] : p.terms()) {
        Monomial kept = m;
        Polynomial factor(p.table(), c);
        for (VarId i = 0; i < n && i < images.size(); ++i) {
            if (!images[i] || m.exp[i] == 0) continue;
            if (images[i]->table() && !same_table(images[i]->table(), p.table())) {
                throw StructuralError("substitution uses a different variable table");
            }
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial(p.table(), 1));
            while (pw.size() <= m.exp[i]) pw.push_back(pw.back() * *images[i]);
            factor *= pw[m.exp[i]];
            kept.exp[i] = 0;
        }
        r += factor * Polynomial::term(p.table(), kept, 1);
    }
    return r;
}

Polynomial substitute(const Polynomial& p, VarId var, const Polynomial& replacement)
{
    if (p.is_zero()) return p;
    check_var(p, var);
    std::vector<std::optional<Polynomial>> images(p.table()->size());
    images[var] = replacement;
    return compose(p, images);
}

Polynomial homogenize(const Polynomial& p, VarId var, int target_degree)
{
    Polynomial r(p.table());
    if (p.is_zero()) return r;
    check_var(p, var);
    if (p.degree_in(var) > 0) throw DegreeError("homogenizing variable already occurs");
    const auto g = p.table()->geometric_count();
    for (const auto& [m, c] : p.terms()) {
        int d = m.degree(0, g);
        if (d > target_degree) throw DegreeError("term exceeds homogenization degree");
        Monomial h = m;
        h.exp[var] = static_cast<std::uint8_t>(target_degree - d);
        r.add_term(h, c);
    }
    return r;
}

Polynomial rebind(const Polynomial& p, const TablePtr& target,
                  const std::map<std::string, std::string>& rename)
{
    Polynomial r(target);
    if (p.is_zero()) return r;
    if (!p.table()) return Polynomial(target, p.constant_term());
    std::vector<VarId> map(p.table()->size());
    std::vector<bool> mapped(p.table()->size(), false);
    for (VarId i = 0; i < p.table()->size(); ++i) {
        std::string name = p.table()->name(i);
        if (auto it = rename.find(name); it != rename.end()) name = it->second;
        if (auto j = target->find(name)) {
            map[i] = *j;
            mapped[i] = true;
        }
    }
    for (const auto& [m, c] : p.terms()) {
        Monomial out;
        for (VarId i = 0; i < p.table()->size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!mapped[i]) {
                throw StructuralError("variable '" + p.table()->name(i) + "' has no counterpart in target table");
            }
            if (out.exp[map[i]] != 0) throw StructuralError("rebind maps two variables onto one");
            out.exp[map[i]] = m.exp[i];
        }
        r.add_term(out, c);
    }
    return r;
}

Polynomial rebind(const Polynomial& p, const TablePtr& target)
{
    return rebind(p, target, {});
}

Polynomial geometric_coefficient(const Polynomial& p, const Monomial& geometric_part)
{
    Polynomial r(p.table());
    if (p.is_zero()) return r;
    const auto g = p.table() ? p.table()->geometric_count() : 0;
    for (const auto& [m, c] : p.terms()) {
        bool match = true;
        for (VarId i = 0; i < g; ++i) {
            if (m.exp[i] != geometric_part.exp[i]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        Monomial rest = m;
        for (VarId i = 0; i < g; ++i) rest.exp[i] = 0;
        r.add_term(rest, c);
    }
    return r;
}

Polynomial specialize(const Polynomial& p, const std::map<std::string, Rational>& values)
{
    if (p.is_zero() || !p.table()) return p;
    std::vector<std::optional<Polynomial>> images(p.table()->size());
    for (const auto& [name, v] : values) images[p.table()->id(name)] = Polynomial(p.table(), v);
    return compose(p, images);
}

std::complex<double> eval_complex(const Polynomial& p, std::span<const std::complex<double>> point)
{
    std::complex<double> sum = 0;
    const std::size_t n = p.table() ? p.table()->size() : 0;
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> t = to_double(c);
        for (VarId i = 0; i < n; ++i) {
            for (unsigned e = 0; e < m.exp[i]; ++e) t *= point[i];
        }
        sum += t;
    }
    return sum;
}

std::complex<double> eval_complex(const Polynomial& p,
                                  const std::map<VarId, std::complex<double>>& point)
{
    const std::size_t n = p.table() ? p.table()->size() : 0;
    std::vector<std::complex<double>> dense(n);
    std::vector<bool> used(n, false);
    for (const auto& [m, c] : p.terms()) {
        for (VarId i = 0; i < n; ++i) used[i] = used[i] || m.exp[i] > 0;
    }
    for (VarId i = 0; i < n; ++i) {
        auto it = point.find(i);
        if (it != point.end()) {
            dense[i] = it->second;
        } else if (used[i]) {
            throw StructuralError("unassigned variable '" + p.table()->name(i) + "'");
        }
    }
    return eval_complex(p, dense);
}

double eval_abs_sum(const Polynomial& p, std::span<const std::complex<double>> point)
{
    double sum = 0;
    const std::size_t n = p.table() ? p.table()->size() : 0;
    for (const auto& [m, c] : p.terms()) {
        double t = std::abs(to_double(c));
        for (VarId i = 0; i < n; ++i) {
            for (unsigned e = 0; e < m.exp[i]; ++e) t *= std::abs(point[i]);
        }
        sum += t;
    }
    return sum;
}

}  // namespace quartic
