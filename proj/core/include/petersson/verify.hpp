#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace petersson {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or summary statistics
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    unsigned k = 12;          // weight for the routes/degenerate suites
    uint64_t m_max = 12;      // index range for the routes suite
    unsigned bits = 256;      // mpfr precision for the diffop suite
    std::size_t jobs = 1;
    bool quick = false;       // trimmed ranges (used by unit tests, not the gate)
};

std::vector<std::string> suite_names();  // degenerate routes hecke saviour hauptsatz repno dirichlet diffop
bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// Individual suites (also used by the acceptance runner).
SuiteResult suite_degenerate(const VerifyOptions& opt);
SuiteResult suite_routes(const VerifyOptions& opt);
SuiteResult suite_hecke(const VerifyOptions& opt);
SuiteResult suite_saviour(const VerifyOptions& opt);
SuiteResult suite_hauptsatz(const VerifyOptions& opt);
SuiteResult suite_repno(const VerifyOptions& opt);
SuiteResult suite_dirichlet(const VerifyOptions& opt);
SuiteResult suite_diffop(const VerifyOptions& opt);
// Arithmetic-function identities at scan scale (acceptance criterion 9).
SuiteResult suite_arith(const VerifyOptions& opt);

}  // namespace petersson
