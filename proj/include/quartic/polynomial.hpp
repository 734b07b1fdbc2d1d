#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/rational.hpp"

namespace quartic {

using VarId = std::size_t;

enum class VarRole { Geometric, Parameter };

/// Names and roles of the variables of a polynomial ring. Geometric variables
/// come first and are the only ones differential operators act on; parameters
/// behave as scalars under differentiation.
class VarTable {
public:
    static constexpr std::size_t kMaxVars = 16;

    VarTable(std::vector<std::string> geometric, std::vector<std::string> parameters);

    std::size_t size() const { return names_.size(); }
    std::size_t geometric_count() const { return geometric_count_; }
    std::size_t parameter_count() const { return names_.size() - geometric_count_; }

    const std::string& name(VarId id) const { return names_.at(id); }
    VarRole role(VarId id) const
    {
        return id < geometric_count_ ? VarRole::Geometric : VarRole::Parameter;
    }
    std::optional<VarId> find(std::string_view name) const;
    /// Like find, but throws StructuralError for unknown names.
    VarId id(std::string_view name) const;

    std::vector<std::string> geometric_names() const;
    std::vector<std::string> parameter_names() const;

    friend bool operator==(const VarTable& a, const VarTable& b)
    {
        return a.geometric_count_ == b.geometric_count_ && a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::size_t geometric_count_;
};

using TablePtr = std::shared_ptr<const VarTable>;

TablePtr make_table(std::vector<std::string> geometric, std::vector<std::string> parameters = {});

/// Exponent vector over a VarTable; unused slots stay zero.
struct Monomial {
    std::array<std::uint8_t, VarTable::kMaxVars> exp{};

    int degree() const;
    int degree(VarId begin, VarId end) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex with the geometric block compared first: geometric degree, then
/// geometric lex, then parameter degree, then parameter lex. Larger monomials
/// sort first so the leading term is terms().begin().
class MonomialOrder {
public:
    explicit MonomialOrder(std::size_t geometric_count = VarTable::kMaxVars)
        : geometric_count_(geometric_count)
    {
    }
    bool operator()(const Monomial& a, const Monomial& b) const;

private:
    std::size_t geometric_count_;
};

/// Sparse polynomial with exact rational coefficients. A polynomial built
/// without a table is a pure constant and combines with anything.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c);
    explicit Polynomial(TablePtr table, const Rational& c = 0);

    static Polynomial variable(const TablePtr& table, VarId id);
    static Polynomial variable(const TablePtr& table, std::string_view name);
    static Polynomial term(const TablePtr& table, const Monomial& m, const Rational& c);

    const TablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    int degree() const;
    int geometric_degree() const;
    int parameter_degree() const;
    int degree_in(VarId id) const;
    /// True when every term has geometric degree d (the zero polynomial counts).
    bool is_geometric_homogeneous(int d) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

    /// Adds c * m; drops the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

private:
    void adopt_table(const Polynomial& other, const char* op);

    TablePtr table_;
    Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned n);

/// Iterated partial derivative in a geometric variable; RoleError for parameters.
Polynomial partial(const Polynomial& p, VarId var, unsigned order = 1);

/// Derivative in any variable regardless of role (used for numeric Jacobians).
Polynomial formal_derivative(const Polynomial& p, VarId var);

/// Replaces var by replacement and re-expands.
Polynomial substitute(const Polynomial& p, VarId var, const Polynomial& replacement);

/// Simultaneous substitution; images[i] replaces variable i (nullopt keeps it).
Polynomial compose(const Polynomial& p, std::span<const std::optional<Polynomial>> images);

/// Multiplies each term by var^(target - geometric degree of the term).
Polynomial homogenize(const Polynomial& p, VarId var, int target_degree);

/// Moves p onto another table by variable name. Throws StructuralError if p
/// uses a variable the target lacks.
Polynomial rebind(const Polynomial& p, const TablePtr& target);

/// Moves p onto another table with an explicit name mapping (old -> new);
/// names not in the mapping are kept.
Polynomial rebind(const Polynomial& p, const TablePtr& target,
                  const std::map<std::string, std::string>& rename);

/// Coefficient of a geometric monomial, as a polynomial in the parameters.
Polynomial geometric_coefficient(const Polynomial& p, const Monomial& geometric_part);

/// Substitutes rational values for named parameters.
Polynomial specialize(const Polynomial& p, const std::map<std::string, Rational>& values);

std::complex<double> eval_complex(const Polynomial& p,
                                  const std::map<VarId, std::complex<double>>& point);

/// Dense variant: point[i] is the value of variable i.
std::complex<double> eval_complex(const Polynomial& p, std::span<const std::complex<double>> point);

/// Sum over terms of |coefficient * monomial value|; the natural scale for
/// relative residuals.
double eval_abs_sum(const Polynomial& p, std::span<const std::complex<double>> point);

}  // namespace quartic
