#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asai {

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0;      // worst residual, mismatch count, ...
    double tolerance = 0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> table_header;
    std::vector<std::vector<std::string>> table;
    double seconds = 0;
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

struct SuiteConfig {
    std::optional<long> n;         // overrides the suite's n range (upper bound)
    std::optional<double> s;       // overrides the suite's s grid
    std::uint64_t seed = 20240611;
    long precision = 40;
    std::optional<long> prime;     // restricts prime grids
    double tol_ghate = 1e-9;
    double tol_bessel = 1e-8;
    double tol_unramified = 1e-12;
    double tol_plocal = 1e-10;
    double tol_arch = 1e-9;
    double tol_constant_term = 1e-6;
    long random_cases = 20;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg = {});

SuiteReport suite_pairing(const SuiteConfig& cfg);
SuiteReport suite_cconst(const SuiteConfig& cfg);
SuiteReport suite_ghate(const SuiteConfig& cfg);
SuiteReport suite_arch(const SuiteConfig& cfg);
SuiteReport suite_bessel(const SuiteConfig& cfg);
SuiteReport suite_schwartz(const SuiteConfig& cfg);
SuiteReport suite_fourier(const SuiteConfig& cfg);
SuiteReport suite_constant_term(const SuiteConfig& cfg);
SuiteReport suite_unramified(const SuiteConfig& cfg);
SuiteReport suite_euler(const SuiteConfig& cfg);
SuiteReport suite_plocal(const SuiteConfig& cfg);
SuiteReport suite_measure(const SuiteConfig& cfg);

}  // namespace asai
