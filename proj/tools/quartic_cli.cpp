// quartic: JSON front end for invariants, bitangents and determinantal representations.
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quartic/bitangent.hpp"
#include "quartic/detrep.hpp"
#include "quartic/dixmier.hpp"
#include "quartic/errors.hpp"
#include "quartic/golden.hpp"
#include "quartic/poly_parse.hpp"
#include "quartic/symfam.hpp"

#ifndef QUARTIC_DATA_DIR
#define QUARTIC_DATA_DIR "data"
#endif

using json = nlohmann::ordered_json;
using namespace quartic;

namespace {

constexpr const char* kSchema = "quartic-cli/1";

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kDegenerate = 3, kNumeric = 4 };

class UsageError : public Error {
public:
    using Error::Error;
};

double clean(double x)
{
    return x == 0 ? 0.0 : x;  // no -0 in the output
}

json cjson(Complex z)
{
    return json::array({clean(z.real()), clean(z.imag())});
}

template <typename Range>
json carray(const Range& r)
{
    json a = json::array();
    for (const auto& z : r) a.push_back(cjson(z));
    return a;
}

json matrix_json(const CMatrix4& m)
{
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(cjson(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::vector<Rational> parse_params(const std::vector<std::string>& raw)
{
    std::vector<Rational> out;
    for (const auto& s : raw) {
        try {
            out.push_back(parse_rational(s));
        } catch (const Error&) {
            throw UsageError("not a rational number: '" + s + "'");
        }
    }
    return out;
}

json params_json(const std::vector<Rational>& p)
{
    json a = json::array();
    for (const auto& q : p) a.push_back(to_string(q));
    return a;
}

json envelope(const std::string& command)
{
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

// ---------------------------------------------------------------- invariants

struct InvariantArgs {
    std::string family;
    std::vector<std::string> params;
    std::string poly;
    bool symbolic = false;
    bool decompose = false;
    bool golden = false;
    std::string data_dir = QUARTIC_DATA_DIR;
};

json run_invariants(const InvariantArgs& a)
{
    Family fam = parse_family(a.family);
    const auto names = family_parameters(fam);
    json out = envelope("invariants");
    out["family"] = std::string(to_string(fam));

    QuarticForm form;
    if (fam == Family::Generic) {
        if (a.poly.empty()) throw UsageError("generic quartics need --poly");
        if (!a.params.empty() || a.symbolic) throw UsageError("--params/--symbolic do not apply to generic quartics");
        form = make_generic(parse_polynomial(a.poly, ternary_table()));
        out["poly"] = form.poly.to_string();
    } else {
        if (!a.poly.empty()) throw UsageError("--poly is only for --family generic");
        if (a.symbolic && !a.params.empty()) throw UsageError("--symbolic and --params are exclusive");
        if (a.symbolic || names.empty()) {
            form = make_family(fam);
            out["params"] = names.empty() ? json::array() : json("symbolic");
        } else {
            if (a.params.size() != names.size()) {
                throw UsageError(std::string(to_string(fam)) + " takes " + std::to_string(names.size()) +
                                 " parameter(s), got " + std::to_string(a.params.size()));
            }
            auto p = parse_params(a.params);
            form = make_family(fam, p);
            out["params"] = params_json(p);
        }
    }

    InvariantSet inv = dixmier_invariants(form);
    json values;
    for (int d : InvariantSet::kDegrees) values["I" + std::to_string(d)] = inv[d].to_string();
    out["invariants"] = values;

    if (a.decompose) {
        if (fam != Family::X4 || !form.is_symbolic()) throw UsageError("--decompose needs --family X4 --symbolic");
        json dec;
        for (int d : InvariantSet::kDegrees) {
            auto sd = decompose_symmetric(inv[d]);
            json t;
            t["const"] = to_string(sd.constant);
            for (const auto& [part, c] : sd.terms) t[part.to_string()] = to_string(c);
            dec["I" + std::to_string(d)] = t;
        }
        out["decomposition"] = dec;
    }

    if (a.golden) {
        if (fam == Family::Generic) throw UsageError("--golden needs a family with a published table");
        GoldenTable g = load_golden_for(fam, a.data_dir);
        if (!form.is_symbolic() && !names.empty()) {
            std::map<std::string, Rational> vals;
            auto v = form.values();
            for (std::size_t i = 0; i < names.size(); ++i) vals[names[i]] = v[i];
            for (auto& val : g.values) val = rebind(specialize(val, vals), ternary_table());
            g.table = ternary_table();
        }
        GoldenReport rep = golden_compare(inv, g);
        json gj;
        for (const auto& e : rep.entries) {
            json ej;
            ej["status"] = std::string(to_string(e.status));
            ej["gamma"] = e.gamma ? json(to_string(*e.gamma)) : json(nullptr);
            if (!e.detail.empty()) ej["detail"] = e.detail;
            gj["I" + std::to_string(e.degree)] = ej;
        }
        out["golden"] = gj;
        out["golden_consistent"] = rep.all_consistent();
    }
    return out;
}

// ---------------------------------------------------------------- bitangents

struct BitangentArgs {
    std::string family;
    std::vector<std::string> params;
    double tol = 1e-9;
    double dedupe_tol = 1e-8;
};

json run_bitangents(const BitangentArgs& a)
{
    Family fam = parse_family(a.family);
    if (fam == Family::Generic) throw UsageError("bitangents are enumerated for X4, X16, X24 and X96 only");
    auto p = parse_params(a.params);
    if (p.size() != family_parameters(fam).size()) {
        throw UsageError(std::string(to_string(fam)) + " takes " + std::to_string(family_parameters(fam).size()) +
                         " parameter(s), got " + std::to_string(p.size()));
    }
    BitangentOptions opts{a.tol, a.dedupe_tol};
    auto certs = enumerate_bitangents(fam, p, opts);

    json out = envelope("bitangents");
    out["family"] = std::string(to_string(fam));
    out["params"] = params_json(p);
    out["tolerance"] = a.tol;
    out["dedupe_tolerance"] = a.dedupe_tol;
    out["count"] = certs.size();
    json lines = json::array();
    for (const auto& c : certs) {
        json l;
        l["line"] = carray(c.line.c);
        l["chart"] = std::string(to_string(c.chart));
        l["lambda"] = carray(c.lambda);
        l["residual"] = clean(c.residual);
        l["generator_residual"] = clean(c.generator_residual);
        l["component_residual"] = c.component_residual ? json(clean(*c.component_residual)) : json(nullptr);
        l["source"] = c.source;
        lines.push_back(l);
    }
    out["lines"] = lines;
    return out;
}

// ---------------------------------------------------------------- detrep

struct DetrepArgs {
    std::vector<std::string> params;
    double tol = 1e-8;
    std::uint64_t seed = DetrepOptions::kDefaultSeed;
    int points = 50;
};

json run_detrep(const DetrepArgs& a)
{
    auto p = parse_params(a.params);
    if (p.size() != 3) throw UsageError("detrep takes --params r s u");
    if (a.points < 1) throw UsageError("--points must be positive");
    DetrepOptions opts{a.tol, a.seed, a.points};
    DetRep rep = solve_detrep(p[0], p[1], p[2], opts);

    json out = envelope("detrep");
    out["family"] = "X4";
    out["params"] = params_json(p);
    out["tolerance"] = a.tol;
    out["seed"] = a.seed;
    out["points"] = a.points;
    out["p"] = cjson(rep.p);
    out["q"] = cjson(rep.q);
    out["t"] = cjson(rep.t);
    json br;
    br["epsilon"] = rep.branch.epsilon;
    br["root"] = rep.branch.root;
    br["swap_cd"] = rep.branch.swap_cd;
    br["swap_be"] = rep.branch.swap_be;
    out["branch"] = br;
    json unk;
    const char* names[] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 6; ++i) unk[names[i]] = cjson(rep.unknowns[i]);
    out["unknowns"] = unk;
    out["A"] = matrix_json(rep.A);
    out["B"] = matrix_json(rep.B);
    out["C"] = matrix_json(rep.C);
    json res;
    res["e"] = json::array();
    res["raw"] = json::array();
    for (double v : rep.residuals.e) res["e"].push_back(clean(v));
    for (double v : rep.residuals.raw) res["raw"].push_back(clean(v));
    res["determinant"] = clean(rep.det_residual);
    out["residuals"] = res;
    return out;
}

int fail(const std::string& command, const char* kind, const std::string& message, int code)
{
    json out = envelope(command);
    out["error"] = {{"kind", kind}, {"message", message}};
    std::cout << out.dump(2) << '\n';
    std::cerr << "quartic " << command << ": " << message << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants, bitangents and determinantal representations of symmetric plane quartics"};
    app.require_subcommand(1);

    InvariantArgs inv;
    auto* c_inv = app.add_subcommand("invariants", "Dixmier invariants I3..I18 as exact rationals");
    c_inv->add_option("--family", inv.family, "X4, X16, X24, X96 or generic")->required();
    c_inv->add_option("--params", inv.params, "rational parameters, e.g. 1 -2/3 5")->delimiter(',');
    c_inv->add_option("--poly", inv.poly, "generic quartic in x,y,z");
    c_inv->add_flag("--symbolic", inv.symbolic, "keep the family parameters symbolic");
    c_inv->add_flag("--decompose", inv.decompose, "symmetric basis table (X4, symbolic)");
    c_inv->add_flag("--golden", inv.golden, "compare with the published tables");
    c_inv->add_option("--data-dir", inv.data_dir, "directory holding golden/")->capture_default_str();

    BitangentArgs bit;
    auto* c_bit = app.add_subcommand("bitangents", "the 28 certified bitangents");
    c_bit->add_option("--family", bit.family, "X4, X16, X24 or X96")->required();
    c_bit->add_option("--params", bit.params, "rational parameters")->delimiter(',');
    c_bit->add_option("--tol", bit.tol, "certification tolerance")->capture_default_str();
    c_bit->add_option("--dedupe-tol", bit.dedupe_tol, "projective dedupe tolerance")->capture_default_str();

    DetrepArgs det;
    auto* c_det = app.add_subcommand("detrep", "symmetric determinantal representation of X4(r,s,u)");
    c_det->add_option("--params", det.params, "r s u")->required()->delimiter(',');
    c_det->add_option("--tol", det.tol, "certification tolerance")->capture_default_str();
    c_det->add_option("--seed", det.seed, "seed of the certification points")->capture_default_str();
    c_det->add_option("--points", det.points, "number of certification points")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        json out;
        if (*c_inv) out = run_invariants(inv);
        if (*c_bit) out = run_bitangents(bit);
        if (*c_det) out = run_detrep(det);
        std::cout << out.dump(2) << '\n';
        return kOk;
    } catch (const UsageError& e) {
        return fail(command, "usage", e.what(), kUsage);
    } catch (const DegeneracyError& e) {
        return fail(command, "degeneracy", e.what(), kDegenerate);
    } catch (const NumericError& e) {
        return fail(command, "numeric", e.what(), kNumeric);
    } catch (const StructuralError& e) {
        return fail(command, "usage", e.what(), kUsage);
    } catch (const DomainError& e) {
        return fail(command, "usage", e.what(), kUsage);
    } catch (const Error& e) {
        return fail(command, "error", e.what(), kInternal);
    } catch (const std::exception& e) {
        return fail(command, "internal", e.what(), kInternal);
    }
}
