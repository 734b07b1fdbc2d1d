#include "quartic/golden.hpp"

#include <fstream>
#include <sstream>

#include "quartic/errors.hpp"
#include "quartic/poly_parse.hpp"

namespace quartic {

namespace {

int parse_invariant_tag(const std::string& tag)
{
    if (tag.size() < 2 || tag[0] != 'I') throw ParseError("expected I<k>, got '" + tag + "'");
    int k = 0;
    try {
        k = std::stoi(tag.substr(1));
    } catch (const std::exception&) {
        throw ParseError("expected I<k>, got '" + tag + "'");
    }
    InvariantSet::index_of(k);
    return k;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

GoldenTable parse_golden(std::string_view text, Family family)
{
    GoldenTable g;
    g.family = family;
    g.table = ternary_table(family_parameters(family));
    for (std::size_t i = 0; i < 6; ++i) {
        g.prefactors[i] = 1;
        g.bodies[i] = Polynomial(g.table);
    }
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string first, second;
        ls >> first >> second;
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);
        try {
            if (first == "prefactor") {
                auto idx = InvariantSet::index_of(parse_invariant_tag(second));
                g.prefactors[idx] = parse_rational(rest);
                continue;
            }
            auto idx = InvariantSet::index_of(parse_invariant_tag(first));
            g.present[idx] = true;
            if (second == "const") {
                g.bodies[idx] += Polynomial(g.table, parse_rational(rest));
            } else if (second == "poly") {
                g.bodies[idx] += parse_polynomial(rest, g.table);
            } else if (!second.empty() && second[0] == '[') {
                g.bodies[idx] += s_basis(parse_partition(second), g.table) * parse_rational(rest);
            } else {
                throw ParseError("unknown entry kind '" + second + "'");
            }
        } catch (const Error& e) {
            throw ParseError("golden table line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < 6; ++i) g.values[i] = g.bodies[i] * g.prefactors[i];
    return g;
}

GoldenTable load_golden(const std::filesystem::path& file, Family family)
{
    std::ifstream in(file);
    if (!in) throw StructuralError("cannot open golden table " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_golden(ss.str(), family);
}

GoldenTable load_golden_for(Family family, const std::filesystem::path& data_dir)
{
    return load_golden(data_dir / "golden" / (std::string(to_string(family)) + ".txt"), family);
}

std::string_view to_string(GoldenStatus status)
{
    switch (status) {
        case GoldenStatus::Match: return "match";
        case GoldenStatus::Undetermined: return "undetermined";
        case GoldenStatus::Mismatch: return "mismatch";
        case GoldenStatus::Missing: return "missing";
    }
    return "?";
}

bool GoldenReport::all_consistent() const
{
    for (const auto& e : entries) {
        if (e.status == GoldenStatus::Mismatch || e.status == GoldenStatus::Missing) return false;
    }
    return true;
}

GoldenReport golden_compare(const InvariantSet& computed, const GoldenTable& golden)
{
    GoldenReport report;
    report.family = golden.family;
    for (std::size_t i = 0; i < 6; ++i) {
        GoldenEntry& e = report.entries[i];
        e.degree = InvariantSet::kDegrees[i];
        if (!golden.present[i]) {
            e.status = GoldenStatus::Missing;
            e.detail = "no table entry";
            continue;
        }
        Polynomial mine = rebind(computed.values[i], golden.table);
        const Polynomial& theirs = golden.values[i];
        if (mine.is_zero() && theirs.is_zero()) {
            e.status = GoldenStatus::Undetermined;
            continue;
        }
        if (mine.is_zero() || theirs.is_zero()) {
            e.status = GoldenStatus::Mismatch;
            e.detail = mine.is_zero() ? "computed value is 0" : "table value is 0";
            continue;
        }
        const auto& [lead, lead_coeff] = *theirs.terms().begin();
        Rational gamma = mine.coefficient(lead) / lead_coeff;
        Polynomial diff = mine - theirs * gamma;
        if (gamma != 0 && diff.is_zero()) {
            e.status = GoldenStatus::Match;
            e.gamma = gamma;
            continue;
        }
        e.status = GoldenStatus::Mismatch;
        const auto& [m, c] = *diff.terms().begin();
        Polynomial mono = Polynomial::term(golden.table, m, 1);
        std::ostringstream os;
        os << "coefficient of " << mono.to_string() << ": computed " << mine.coefficient(m).get_str()
           << ", gamma*table " << Rational(theirs.coefficient(m) * gamma).get_str();
        e.detail = os.str();
    }
    return report;
}

}  // namespace quartic
