#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>

#include "quartic/dixmier.hpp"
#include "quartic/symfam.hpp"

namespace quartic {

/// One published invariant table, one file per family under data/golden/.
///
/// File format (line oriented, '#' starts a comment):
///   prefactor I<k> <rational>      overall factor of I<k> (default 1)
///   I<k> [a,b,c] <rational>        coefficient of the symmetric basis S[a,b,c]
///   I<k> const <rational>          constant term
///   I<k> poly <expression>         polynomial in the family parameters
/// Entries for the same I<k> are summed, then multiplied by the prefactor.
struct GoldenTable {
    Family family = Family::Generic;
    TablePtr table;                         ///< ternary_table(family parameters)
    std::array<Rational, 6> prefactors;     ///< per invariant, default 1
    std::array<Polynomial, 6> bodies;       ///< before the prefactor
    std::array<Polynomial, 6> values;       ///< prefactor * body
    std::array<bool, 6> present{};
};

GoldenTable parse_golden(std::string_view text, Family family);
GoldenTable load_golden(const std::filesystem::path& file, Family family);
/// data_dir/golden/<family>.txt
GoldenTable load_golden_for(Family family, const std::filesystem::path& data_dir);

enum class GoldenStatus { Match, Undetermined, Mismatch, Missing };

std::string_view to_string(GoldenStatus status);

struct GoldenEntry {
    int degree = 0;
    GoldenStatus status = GoldenStatus::Missing;
    std::optional<Rational> gamma;  ///< computed = gamma * table, when Match
    std::string detail;
};

struct GoldenReport {
    Family family = Family::Generic;
    std::array<GoldenEntry, 6> entries;

    bool all_consistent() const;  ///< no Mismatch / Missing
};

/// Finds, per invariant, the single rational gamma with computed = gamma * table.
/// Zero against zero is Undetermined; anything else that fails is Mismatch
/// with the first differing coefficient in `detail`.
GoldenReport golden_compare(const InvariantSet& computed, const GoldenTable& golden);

}  // namespace quartic
