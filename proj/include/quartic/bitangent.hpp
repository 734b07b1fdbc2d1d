#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/numroots.hpp"
#include "quartic/polynomial.hpp"
#include "quartic/symfam.hpp"

namespace quartic {

/// Affine chart of the dual plane. XY: ax+by+z=0, YZ: x+by+cz=0, ZX: ax+y+cz=0.
/// In every chart the line eliminates one coordinate E = -(n1*X + n2*Y) where
/// (X,Y,E) is (x,y,z), (y,z,x), (z,x,y) and (n1,n2) is (a,b), (b,c), (c,a).
enum class Chart { XY, YZ, ZX };

std::string_view to_string(Chart chart);
inline constexpr std::array<Chart, 3> kCharts{Chart::XY, Chart::YZ, Chart::ZX};

/// Line alpha*x + beta*y + gamma*z = 0. Normalized: the largest-modulus
/// coefficient (first one on ties) is exactly 1.
struct ProjLine {
    std::array<Complex, 3> c{};

    static ProjLine normalized(const std::array<Complex, 3>& v);
    /// Index of the coefficient set to 1 by normalization.
    int pivot() const;
    /// The chart whose normalized slot is the pivot.
    Chart chart() const;
    /// Line from chart coordinates (n1, n2).
    static ProjLine from_chart(Chart chart, Complex n1, Complex n2);
    /// Chart coordinates; requires the chart's slot to be nonzero.
    std::array<Complex, 2> chart_coordinates(Chart chart) const;
};

/// |v x w| <= tol |v| |w|.
bool same_line(const ProjLine& v, const ProjLine& w, double tol);

struct SquareFit {
    std::array<Complex, 3> lambda;  ///< g = (l0 X^2 + l1 XY + l2 Y^2)^2
    double residual = 0;            ///< max relation mismatch / max |c|
};

/// Fits a binary quartic c40 X^4 + c31 X^3Y + c22 X^2Y^2 + c13 XY^3 + c04 Y^4
/// (passed in that order) as a perfect square. Candidates are anchored on c40,
/// c04 and c22 in turn and the smallest residual wins. nullopt if the residual
/// is >= tol or g is zero.
std::optional<SquareFit> perfect_square_fit(const std::array<Complex, 5>& g, double tol);

/// The five coefficient-comparison generators of a chart, over the table
/// {n1, n2, l0, l1, l2 | parameters of f} with n1, n2 named by the chart.
struct TangencySystem {
    Chart chart = Chart::XY;
    TablePtr table;
    std::array<Polynomial, 5> generators;
};

TangencySystem build_tangency_system(const Polynomial& f, Chart chart);
TangencySystem build_tangency_system(const QuarticForm& f, Chart chart);

/// Coefficients (X^4 ... Y^4) of f restricted to the line in the given chart.
/// f must have numeric coefficients only.
std::array<Complex, 5> restrict_to_line(const Polynomial& f, const ProjLine& line, Chart chart);

struct BitangentCert {
    ProjLine line;
    std::array<Complex, 3> lambda{};  ///< fit in the line's own chart
    double residual = 0;              ///< perfect-square residual
    double generator_residual = 0;    ///< max normalized tangency generator value
    std::optional<double> component_residual;  ///< max normalized component generator value
    std::string source;               ///< e.g. "X4.J1@YZ"
    Chart chart = Chart::XY;          ///< chart of lambda (the pivot chart)
};

struct BitangentOptions {
    double tol = 1e-9;
    double dedupe_tol = 1e-8;
};

/// Thrown when the certified candidates do not form exactly 28 lines.
class EnumerationError : public NumericError {
public:
    using NumericError::NumericError;
};

/// DegeneracyError if the parameters sit on an excluded locus.
void check_bitangent_degeneracy(Family family, std::span<const Rational> params);

/// The 28 certified bitangents, sorted by zero pattern then coefficients.
std::vector<BitangentCert> enumerate_bitangents(Family family, std::span<const Rational> params,
                                                const BitangentOptions& opts = {});

/// Keeps the first line of every projective class, in input order.
std::vector<ProjLine> dedupe_lines(const std::vector<ProjLine>& lines, double tol);

/// Number of zero coefficients of a line (within 1e-12).
int zero_count(const ProjLine& line);

}  // namespace quartic
