// One line per acceptance criterion. --expect-fail k,l,... marks criteria whose failure is recorded as known.
#include "asai/error.hpp"
#include "asai/suites.hpp"

#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace asai;

namespace {

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<SuiteReport()> run;
    std::vector<std::string> checks;  // empty: every check of the report
};

SuiteConfig pinned() {
    SuiteConfig c;
    c.tol_ghate = 1e-9;
    c.tol_bessel = 1e-8;
    c.tol_unramified = 1e-12;
    c.tol_plocal = 1e-10;
    c.tol_arch = 1e-9;
    c.tol_constant_term = 1e-6;
    c.precision = 40;
    c.random_cases = 20;
    return c;
}

std::set<int> parse_list(const char* s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) expected = parse_list(argv[++i]);

    const SuiteConfig cfg = pinned();
    std::vector<Criterion> criteria = {
        {1, "C-constant duality, n <= 8 (exact)", 60,
         [&] {
             SuiteConfig c = cfg;
             c.n = 8;
             return suite_cconst(c);
         },
         {"definitional C(alpha, i) == closed form, n <= 8"}},
        {2, "Ghate identity, n <= 6, rel <= 1e-9; n = 0 duplication", 30, [&] { return suite_ghate(cfg); }, {}},
        {3, "K-Bessel Mellin, rel <= 1e-8; exact point (0,1,2)", 60, [&] { return suite_bessel(cfg); }, {}},
        {4, "Schwartz unit average and section distribution (exhaustive)", 120, [&] { return suite_schwartz(cfg); },
         {"unit average identity (exhaustive)", "section distribution identity (exhaustive)"}},
        {5, "unramified Whittaker summation M = 60 vs L-factor, rel <= 1e-12", 30,
         [&] {
             SuiteConfig c = cfg;
             c.s = 3.0;
             return suite_unramified(c);
         },
         {}},
        {6, "p-local proof chain vs closed form, rel <= 1e-10", 60, [&] { return suite_plocal(cfg); }, {}},
        {7, "modified Euler factor at p: definitional == explicit (exact)", 30, [&] { return suite_euler(cfg); }, {}},
        {8, "archimedean dual route, rel <= 1e-9, D in {3,4,7}", 30, [&] { return suite_arch(cfg); }, {}},
        {9, "measure suite R = 4, N = 40 (exact)", 60, [&] { return suite_measure(cfg); }, {}},
        {10, "constant-term limit at s = 0 vs s = 1e-6, rel <= 1e-6", 10, [&] { return suite_constant_term(cfg); },
         {"second term limit at s = 0 finite, matches s = 1e-6"}},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        SuiteReport r;
        std::string error;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool ok = error.empty();
        std::string detail = error;
        std::vector<const CheckResult*> used;
        if (ok) {
            if (c.checks.empty()) {
                for (const auto& ch : r.checks) used.push_back(&ch);
            } else {
                for (const auto& name : c.checks) {
                    const CheckResult* ch = r.find(name);
                    if (!ch) {
                        ok = false;
                        detail = "missing check '" + name + "'";
                    } else {
                        used.push_back(ch);
                    }
                }
            }
        }
        for (const auto* ch : used) {
            if (!ch->passed) {
                ok = false;
                if (!detail.empty()) detail += "; ";
                detail += ch->name + ": " + ch->detail;
            }
        }
        bool in_budget = r.seconds <= c.budget_seconds;
        if (!in_budget) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "over the runtime budget";
        }
        if (ok && detail.empty() && !used.empty()) detail = used.front()->detail;
        bool xf = expected.count(c.id) > 0;
        const char* tag = ok ? (xf ? "XPASS" : "PASS") : (xf ? "XFAIL" : "FAIL");
        if (!ok && !xf) ++unexpected;
        std::printf("%-5s criterion %2d: %s  (%.2fs / %.0fs)  %s\n", tag, c.id, c.title, r.seconds, c.budget_seconds,
                    detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d unexpected failure(s)\n", unexpected == 0 ? "OK" : "FAILED", unexpected);
    return unexpected == 0 ? 0 : 1;
}
