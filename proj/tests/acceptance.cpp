// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "quartic/bitangent.hpp"
#include "quartic/detrep.hpp"
#include "quartic/diffcalc.hpp"
#include "quartic/dixmier.hpp"
#include "quartic/golden.hpp"

using namespace quartic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& why)
    {
        if (!cond && ok) note << why;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Check&)>& body)
{
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.note << "exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << seconds_since(t0) << " s)";
    if (!c.note.str().empty()) std::cout << ": " << c.note.str();
    std::cout << std::endl;
    failures += !c.ok;
}

Polynomial identify(const Polynomial& p, const std::string& from, const std::string& to, const TablePtr& target)
{
    if (!p.table()) return Polynomial(target, p.constant_term());
    return rebind(substitute(p, p.table()->id(from), Polynomial::variable(p.table(), to)), target);
}

std::string run_cli(const std::string& args)
{
    std::string out;
    FILE* pipe = popen((std::string(QUARTIC_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

}  // namespace

int main()
{
    criterion(1, "Fermat anchors", [](Check& c) {
        auto t0 = Clock::now();
        InvariantSet inv = dixmier_invariants(make_family(Family::X96));
        c.require(inv[3] == Polynomial(72), "I3 != 72");
        c.require(inv[6] == Polynomial(13822), "I6 != 13822");
        for (int k : {9, 12, 15, 18}) c.require(inv[k].is_zero(), "I" + std::to_string(k) + " != 0");
        c.require(seconds_since(t0) < 1, "slower than 1 s");
    });

    std::map<Family, InvariantSet> sym;
    double x4_seconds = 0;
    {
        auto t0 = Clock::now();
        sym[Family::X4] = dixmier_invariants(make_family(Family::X4));
        x4_seconds = seconds_since(t0);
        for (Family f : {Family::X16, Family::X24, Family::X96}) sym[f] = dixmier_invariants(make_family(f));
    }

    criterion(2, "symbolic tables and calibration constants", [&](Check& c) {
        std::map<Family, GoldenReport> rep;
        for (Family f : {Family::X24, Family::X16, Family::X4}) {
            rep[f] = golden_compare(sym[f], load_golden_for(f, QUARTIC_DATA_DIR));
        }
        std::ostringstream gammas;
        for (std::size_t k = 0; k < 6; ++k) {
            const auto& e24 = rep[Family::X24].entries[k];
            const auto& e16 = rep[Family::X16].entries[k];
            const auto& e4 = rep[Family::X4].entries[k];
            const std::string name = "I" + std::to_string(e24.degree);
            c.require(e24.status == GoldenStatus::Match, name + " does not fit the X24 table");
            c.require(e16.status == GoldenStatus::Match, name + " does not fit the X16 table");
            c.require(e4.status == GoldenStatus::Match, name + " does not fit the X4 table");
            if (!e24.gamma || !e16.gamma || !e4.gamma) continue;
            c.require(*e24.gamma == *e16.gamma, name + ": X16 and X24 need different constants");
            gammas << " " << name << "=" << e24.gamma->get_str();
            if (*e4.gamma != *e24.gamma) gammas << " (X4 table off by " << Rational(*e4.gamma / *e24.gamma).get_str() << ")";
        }
        c.require(rep[Family::X24].entries[0].gamma && *rep[Family::X24].entries[0].gamma == 1, "gamma3 != 1");
        c.require(x4_seconds < 60, "symbolic X4 slower than 60 s");
        if (c.ok) c.note << "gamma:" << gammas.str() << "; X4 in " << x4_seconds << " s";
    });

    criterion(3, "specialization coherence", [&](Check& c) {
        const auto t16 = make_family(Family::X16).poly.table();
        const auto t24 = make_family(Family::X24).poly.table();
        for (int k : InvariantSet::kDegrees) {
            const std::string name = "I" + std::to_string(k);
            c.require(identify(sym[Family::X4][k], "u", "s", t16) == sym[Family::X16][k], name + ": X4(r,s,s) != X16(r,s)");
            c.require(identify(sym[Family::X16][k], "s", "r", t24) == sym[Family::X24][k], name + ": X16(r,r) != X24(r)");
            Polynomial at0 = specialize(sym[Family::X24][k], {{"r", 0}});
            c.require(at0.is_constant() && at0.constant_term() == sym[Family::X96][k].constant_term(),
                      name + ": X24(0) != X96");
        }
    });

    criterion(4, "invariance suite", [&](Check& c) {
        std::mt19937_64 g(0xacce55);
        for (int i = 0; i < 5; ++i) {
            Polynomial f = oracle::random_quartic(g).poly;
            InvariantSet base = dixmier_invariants(f);
            for (int j = 0; j < 5; ++j) {
                oracle::Mat3 m = oracle::random_unimodular(g);
                c.require(oracle::det3(m) == 1, "matrix not unimodular");
                InvariantSet moved = dixmier_invariants(linear_substitution(f, m));
                for (int k : InvariantSet::kDegrees) c.require(moved[k] == base[k], "SL3 invariance fails");
            }
            InvariantSet twice = dixmier_invariants(Rational(2) * f);
            for (int k : InvariantSet::kDegrees) {
                Rational scale = 1;
                for (int e = 0; e < k; ++e) scale *= 2;
                c.require(twice[k] == scale * base[k], "homogeneity fails");
            }
        }
        for (const auto& v : sym[Family::X4].values) {
            for (const auto& perm : std::vector<std::array<int, 3>>{{1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}) {
                c.require(permute_parameters(v, perm) == v, "X4 invariants not symmetric");
            }
        }
    });

    criterion(5, "bitangent counts and certification", [](Check& c) {
        std::mt19937_64 g(0xb17a);
        const BitangentOptions opts;
        double slowest = 0;
        int instances = 0;
        while (instances < 10) {
            std::vector<Rational> p;
            for (int i = 0; i < 3; ++i) p.push_back(oracle::random_rational(g, 10, 4));
            if (singular_reason(Family::X4, p)) continue;
            ++instances;
            auto t0 = Clock::now();
            auto certs = enumerate_bitangents(Family::X4, p, opts);
            slowest = std::max(slowest, seconds_since(t0));
            int axis = 0, j1 = 0;
            for (const auto& x : certs) {
                c.require(x.residual < opts.tol && x.generator_residual < opts.tol, "residual above 1e-9");
                axis += zero_count(x.line) == 1;
                j1 += zero_count(x.line) == 0 && x.source.rfind("X4.J1", 0) == 0;
            }
            std::ostringstream where;
            where << "X4(" << p[0] << "," << p[1] << "," << p[2] << ")";
            c.require(certs.size() == 28, where.str() + ": count != 28");
            c.require(axis == 12 && j1 == 16, where.str() + ": split is not 12 + 16");
            for (std::size_t a = 0; a < certs.size(); ++a) {
                for (std::size_t b = a + 1; b < certs.size(); ++b) {
                    c.require(!same_line(certs[a].line, certs[b].line, opts.dedupe_tol), "duplicate lines");
                }
            }
        }

        auto t0 = Clock::now();
        auto fermat = enumerate_bitangents(Family::X96, {}, opts);
        slowest = std::max(slowest, seconds_since(t0));
        int full = 0, axis = 0;
        for (const auto& x : fermat) {
            full += zero_count(x.line) == 0;
            axis += zero_count(x.line) == 1;
        }
        c.require(fermat.size() == 28 && full == 16 && axis == 12, "X96 is not 16 + 12");

        t0 = Clock::now();
        auto x24 = enumerate_bitangents(Family::X24, std::vector<Rational>{1}, opts);
        slowest = std::max(slowest, seconds_since(t0));
        c.require(x24.size() == 28, "X24(1): count != 28");
        for (double sx : {1.0, -1.0}) {
            for (double sy : {1.0, -1.0}) {
                ProjLine want = ProjLine::normalized({sx, sy, 1.0});
                bool exact = false;
                for (const auto& x : x24) exact = exact || x.line.c == want.c;
                c.require(exact, "X24(1): a line +-x+-y+z = 0 is missing or inexact");
            }
        }
        c.require(slowest < 5, "an instance took longer than 5 s");
        if (c.ok) c.note << "slowest instance " << slowest << " s";
    });

    criterion(6, "transvectant oracle equivalence", [](Check& c) {
        std::mt19937_64 g(0x7a45);
        auto t = make_table({"x", "y"});
        for (int i = 0; i < 50; ++i) {
            int r = static_cast<int>(g() % 5), s = static_cast<int>(g() % 5);
            Polynomial F = oracle::random_binary_form(g, t, r), G = oracle::random_binary_form(g, t, s);
            for (int k = 0; k <= std::min(r, s); ++k) {
                c.require(transvectant(F, G, k) == oracle::brute_transvectant(F, G, k), "mismatch with the oracle");
            }
        }
    });

    criterion(7, "binary discriminant", [](Check& c) {
        std::mt19937_64 g(0xd15c);
        auto t = make_table({"x", "y"});
        for (int i = 0; i < 20; ++i) {
            oracle::UniQ lin{-oracle::random_rational(g, 5, 3), 1};
            oracle::UniQ quad{oracle::random_rational(g, 5, 3), oracle::random_rational(g, 5, 3), 1};
            oracle::UniQ p = oracle::uni_mul(oracle::uni_mul(lin, lin), quad);
            c.require(delta_binary(oracle::binary_from_uni(p, t)).is_zero(), "double root with nonzero Delta");
        }
        int squarefree = 0;
        while (squarefree < 20) {
            oracle::UniQ p(5);
            for (auto& x : p) x = oracle::random_rational(g, 6, 3);
            if (p[4] == 0) continue;
            if (oracle::uni_gcd(p, oracle::uni_derivative(p)).size() > 1) continue;
            ++squarefree;
            c.require(!delta_binary(oracle::binary_from_uni(p, t)).is_zero(), "squarefree with zero Delta");
        }
    });

    criterion(8, "determinantal representation certification", [](Check& c) {
        std::vector<std::array<Rational, 3>> points{{0, 0, 0}, {1, 2, 3}, {5, 1, 7}};
        std::mt19937_64 g(0xde7);
        while (points.size() < 13) {
            Rational r = oracle::random_rational(g, 10, 4);
            if (abs(r) == 2) continue;
            points.push_back({r, oracle::random_rational(g, 10, 4), oracle::random_rational(g, 10, 4)});
        }
        double slowest = 0, worst_e = 0, worst_det = 0;
        for (const auto& [r, s, u] : points) {
            auto t0 = Clock::now();
            DetRep rep = solve_detrep(r, s, u);
            slowest = std::max(slowest, seconds_since(t0));
            worst_e = std::max(worst_e, rep.residuals.max_e());
            worst_det = std::max(worst_det, rep.det_residual);
            c.require(rep.points == 50, "not 50 points");
            c.require(std::abs(rep.p * rep.p * rep.q * rep.q - 1.0) < 1e-12, "p^2 q^2 != 1");
            c.require(std::abs(rep.p * rep.p + rep.q * rep.q + to_double(r)) < 1e-12, "p^2 + q^2 != -r");
        }
        c.require(worst_e < 1e-10, "e-residual above 1e-10");
        c.require(worst_det < 1e-8, "determinant residual above 1e-8");
        c.require(slowest < 1, "an instance took longer than 1 s");
        if (c.ok) c.note << "max e " << worst_e << ", max det " << worst_det;
    });

    criterion(9, "CLI determinism", [](Check& c) {
        for (const char* args : {"invariants --family X4 --symbolic --decompose --golden",
                                 "invariants --family X16 --params 3 -1/2", "bitangents --family X96",
                                 "bitangents --family X4 --params 1 3 5", "detrep --params 1 2 3",
                                 "bitangents --family X24 --params 2"}) {
            std::string a = run_cli(args), b = run_cli(args);
            c.require(!a.empty(), std::string("no output: ") + args);
            c.require(a == b, std::string("output differs: ") + args);
        }
    });

    return failures;
}
