// Command-line front end: batch computation of Jacobi Eisenstein expansions,
// the verification suites, representation-number reports and the prime-
// discriminant form sequence.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 precision
// shortfall, 4 search cap exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "petersson/binqf.hpp"
#include "petersson/cache.hpp"
#include "petersson/errors.hpp"
#include "petersson/hecke.hpp"
#include "petersson/jacobi.hpp"
#include "petersson/lattice.hpp"
#include "petersson/parallel.hpp"
#include "petersson/repno.hpp"
#include "petersson/verify.hpp"

namespace {

using namespace petersson;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content << "\n";
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content << "\n";
}

std::string configured_cache(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PETERSSON_CACHE")) return env;
    return {};
}

nlohmann::json suite_to_json(const SuiteResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

std::string csv_escape_free(const RepnoRow& row) {
    std::ostringstream line;
    line << row.T.n << "," << row.T.r << "," << row.T.m << "," << row.det2 << "," << row.rep << ","
         << row.main.str() << "," << row.diff.str() << "," << row.mst_ratio;
    return line.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jacobi/Siegel Eisenstein coefficients and representation numbers"};
    app.require_subcommand(1);

    std::string cache_path, out_path;
    unsigned jobs = 1;
    app.add_option("--cache", cache_path, "coefficient cache file (JSON)");
    app.add_option("--jobs", jobs, "worker count for scans")->check(CLI::PositiveNumber);

    // jacobi-eis
    auto* eis = app.add_subcommand("jacobi-eis", "Fourier expansion of E_{k,m}");
    unsigned eis_k = 4;
    uint64_t eis_m = 1;
    std::size_t eis_prec = 5;
    eis->add_option("--k", eis_k, "weight (even, >= 4)")->required();
    eis->add_option("--m", eis_m, "index")->capture_default_str();
    eis->add_option("--prec", eis_prec, "exclusive bound on n")->capture_default_str();
    eis->add_option("--out", out_path, "output path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    VerifyOptions vopt;
    ver->add_option("suite", suite, "degenerate|routes|hecke|saviour|hauptsatz|repno|dirichlet|diffop|all")
        ->required();
    ver->add_option("--k", vopt.k, "weight for weight-parameterized suites")->capture_default_str();
    ver->add_option("--m-max", vopt.m_max, "index bound for the routes suite")->capture_default_str();
    ver->add_option("--bits", vopt.bits, "mpfr precision for diffop")->capture_default_str();
    ver->add_flag("--quick", vopt.quick, "trimmed ranges (development only)");
    ver->add_option("--out", out_path, "output path (default stdout)");

    // repnum
    auto* rep = app.add_subcommand("repnum", "representation-number report (CSV)");
    std::string lattice_spec = "e8";
    int64_t rn = 0, rr = 0, rm = 0, det_max = 0;
    rep->add_option("--lattice", lattice_spec, "e8|e8e8|d16plus or a JSON file")->capture_default_str();
    rep->add_option("--n", rn, "T = (n, r/2; r/2, m)");
    rep->add_option("--r", rr, "");
    rep->add_option("--m", rm, "");
    rep->add_option("--det-max", det_max, "scan all reduced T with det(2T) <= this");
    rep->add_option("--out", out_path, "output path (default stdout)");

    // saha
    auto* saha = app.add_subcommand("saha", "reduced forms with increasing prime discriminants");
    std::vector<uint64_t> saha_ms;
    uint64_t saha_cap = 1000000;
    saha->add_option("m", saha_ms, "strictly increasing minima");
    saha->add_option("--cap", saha_cap, "search cap per entry")->capture_default_str();
    saha->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cache = configured_cache(cache_path);
    if (!cache.empty()) cache::configure(cache);
    struct CacheSaver {
        ~CacheSaver() { cache::save(); }
    } cache_saver;

    try {
        if (*eis) {
            if (eis_k % 2 != 0 || eis_k < 4 || eis_m < 1 || eis_prec < 1) {
                std::cerr << "jacobi-eis: need even k >= 4, m >= 1, prec >= 1\n";
                return 2;
            }
            write_output(out_path, jacexp_to_json(jac_eis_m(eis_k, eis_m, eis_prec)));
            return 0;
        }
        if (*ver) {
            if (!is_suite_name(suite)) {
                std::cerr << "verify: unknown suite '" << suite << "'\n";
                return 2;
            }
            vopt.jobs = jobs;
            std::vector<SuiteResult> results;
            if (suite == "all") {
                for (const auto& name : suite_names()) results.push_back(run_suite(name, vopt));
                results.push_back(run_suite("arith", vopt));
            } else {
                results.push_back(run_suite(suite, vopt));
            }
            nlohmann::json j = nlohmann::json::array();
            bool pass = true;
            for (const auto& r : results) {
                nlohmann::json jr = suite_to_json(r);
                if (r.suite == "hecke") {
                    std::vector<uint64_t> ms;
                    for (uint64_t m = 1; m <= (vopt.quick ? 4 : 12); ++m) ms.push_back(m);
                    jr["eigen_scan"] =
                        nlohmann::json::parse(eigen_scan_to_json(eigen_bound_scan(12, ms)));
                }
                j.push_back(jr);
                pass = pass && r.pass();
            }
            write_output(out_path, j.dump(1));
            return pass ? 0 : 1;
        }
        if (*rep) {
            Lattice L = lattice_by_name_or_file(lattice_spec);
            std::vector<BinQF> scan;
            if (det_max > 0) {
                scan = reduced_forms_up_to(det_max);
            } else {
                BinQF T{rn, rr, rm};
                if (!T.positive_definite()) {
                    std::cerr << "repnum: T not positive definite\n";
                    return 2;
                }
                scan.push_back(T);
            }
            std::vector<RepnoRow> rows(scan.size());
            parallel_for(jobs, scan.size(), [&](std::size_t i) {
                rows[i] = repno_report(L, {scan[i]}).at(0);
            });
            std::ostringstream csv;
            csv << "n,r,m,detT,A,main,diff,mst_ratio";
            for (const auto& row : rows) csv << "\n" << csv_escape_free(row);
            write_output(out_path, csv.str());
            return 0;
        }
        if (*saha) {
            SahaResult r = saha_sequence(saha_ms, saha_cap);
            nlohmann::json j = nlohmann::json::array();
            for (const auto& T : r.forms)
                j.push_back({{"n", T.n}, {"r", T.r}, {"m", T.m}, {"det2", T.det2()}});
            write_output(out_path, j.dump(1));
            return r.capped ? 4 : 0;
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
