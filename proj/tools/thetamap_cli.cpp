// Command-line front end: invariant verification, the rank-4 degree
// pipeline, S-set listings, Verlinde evaluation, and canonical table dumps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 precision-certification failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetamap/f2geometry.hpp"
#include "thetamap/hilbert.hpp"
#include "thetamap/tables.hpp"
#include "thetamap/verify.hpp"
#include "thetamap/verlinde.hpp"

using nlohmann::json;
using namespace thetamap;

namespace {

std::string enc(const std::string& s) { return s.empty() ? "0" : s; }

json report_to_json(const verify::VerificationReport& report) {
    json suites = json::array();
    for (const auto& s : report.suites) {
        json failures = json::array();
        for (const auto& f : s.failures)
            failures.push_back(
                {{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
        suites.push_back({{"suite", s.name},
                          {"checks_run", s.checks_run},
                          {"failures", failures}});
    }
    return {{"suites", suites},
            {"overall", report.overall_pass() ? "pass" : "fail"}};
}

void print_report(const verify::VerificationReport& report) {
    for (const auto& s : report.suites) {
        std::cout << (s.failures.empty() ? "PASS" : "FAIL") << "  "
                  << s.name << "  (" << s.checks_run << " checks";
        if (!s.failures.empty())
            std::cout << ", " << s.failures.size() << " failures";
        std::cout << ")\n";
        for (const auto& f : s.failures)
            std::cout << "      " << f.inputs << ": expected " << f.expected
                      << ", got " << f.actual << "\n";
    }
    std::cout << "overall: " << (report.overall_pass() ? "pass" : "fail")
              << "\n";
}

int cmd_verify(bool as_json, const std::string& data_dir, unsigned workers) {
    auto report = verify::run_all(data_dir, workers);
    if (as_json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        print_report(report);
    return report.overall_pass() ? 0 : 1;
}

int cmd_degree(int rank, bool as_json, unsigned workers) {
    if (rank != 4) {
        std::cerr << "no paper-backed data for rank " << rank
                  << "; only rank 4 is supported\n";
        return 2;
    }
    auto pipe = tables::run_degree_pipeline(workers);
    if (as_json) {
        json p = json::array(), a = json::array();
        for (std::size_t i = 0; i < pipe.verlinde_values.size(); ++i)
            p.push_back({{"n", i + 1}, {"P", pipe.verlinde_values[i].get_str()}});
        for (std::size_t k = 0; k < pipe.coeffs.alpha.size(); ++k)
            a.push_back({{"k", k}, {"alpha", pipe.coeffs.alpha[k].get_str()}});
        json out = {{"rank", rank},
                    {"P", p},
                    {"alpha", a},
                    {"c_top", pipe.c_top.get_str()},
                    {"base_locus_count", pipe.base_locus_count.get_str()},
                    {"degree", pipe.degree.get_str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n    : ";
        for (std::size_t i = 0; i < pipe.verlinde_values.size(); ++i)
            std::cout << (i ? " " : "") << (i + 1);
        std::cout << "\nP(n) : ";
        for (std::size_t i = 0; i < pipe.verlinde_values.size(); ++i)
            std::cout << (i ? " " : "") << pipe.verlinde_values[i].get_str();
        std::cout << "\nalpha_k (k=7..15): ";
        for (std::size_t k = 7; k < pipe.coeffs.alpha.size(); ++k)
            std::cout << (k > 7 ? " " : "") << pipe.coeffs.alpha[k].get_str();
        std::cout << "\nc_15 = " << pipe.c_top.get_str()
                  << "\nbase locus count = " << pipe.base_locus_count.get_str()
                  << "\ndeg theta = " << pipe.degree.get_str() << "\n";
    }
    return 0;
}

int cmd_ssets(const std::string& kappa_spec, bool as_json) {
    std::vector<f2::ThetaCharacteristic> chars;
    if (kappa_spec.empty()) {
        chars = f2::all_theta_chars();
    } else {
        try {
            chars.push_back(f2::ThetaCharacteristic::parse(kappa_spec));
        } catch (const std::exception& e) {
            std::cerr << "bad --kappa: " << e.what() << "\n";
            return 2;
        }
    }
    json out = json::array();
    for (auto kappa : chars) {
        auto s = f2::s_set(kappa);
        if (as_json) {
            json elems = json::array();
            for (auto a : s.elements) elems.push_back(enc(a.to_string()));
            out.push_back({{"kappa", enc(kappa.to_string())},
                           {"parity", kappa.is_odd() ? "odd" : "even"},
                           {"s_set", elems}});
        } else {
            std::cout << "S(" << enc(kappa.to_string()) << ") ["
                      << (kappa.is_odd() ? "odd" : "even") << "] = {";
            for (std::size_t i = 0; i < s.elements.size(); ++i)
                std::cout << (i ? ", " : "") << enc(s.elements[i].to_string());
            std::cout << "}\n";
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verlinde(int rank, int level, int genus, long precision, bool as_json,
                 unsigned workers) {
    try {
        auto res = verlinde::verlinde_number(
            {rank, level, genus}, workers,
            precision > 0 ? static_cast<mpfr_prec_t>(precision) : 64);
        if (as_json) {
            json out = {{"rank", rank},
                        {"level", level},
                        {"genus", genus},
                        {"value", res.value.get_str()},
                        {"error_bound", res.certified_error_bound}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << res.value.get_str()
                      << "  (certified error bound " << res.certified_error_bound
                      << ")\n";
        }
        return 0;
    } catch (const verlinde::CertificationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int cmd_tables(const std::string& which, const std::string& csv_path,
               unsigned workers) {
    std::string csv;
    if (which == "P") {
        csv = tables::verlinde_csv(tables::run_degree_pipeline(workers).verlinde_values);
    } else if (which == "alpha") {
        csv = tables::alpha_csv(tables::run_degree_pipeline(workers).coeffs);
    } else if (which == "ssets") {
        csv = tables::ssets_csv();
    } else {
        std::cerr << "--which must be P, alpha, or ssets\n";
        return 2;
    }
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << csv_path << "\n";
            return 2;
        }
        out << csv;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of genus-2 theta-characteristics and "
                 "the rank-4 theta-map degree"};
    app.require_subcommand(1);
    unsigned workers = 1;
    app.add_option("--workers", workers, "worker threads for Verlinde sums");

    bool v_json = false;
    std::string data_dir;
    auto* verify_cmd = app.add_subcommand("verify", "run every invariant suite");
    verify_cmd->add_flag("--json", v_json, "JSON report");
    verify_cmd->add_option("--data-dir", data_dir,
                           "directory with golden CSV tables to compare");

    int d_rank = 4;
    bool d_json = false;
    auto* degree_cmd =
        app.add_subcommand("degree", "full rank-4 theta-map degree pipeline");
    degree_cmd->add_option("--rank", d_rank, "bundle rank (only 4 supported)");
    degree_cmd->add_flag("--json", d_json, "JSON output");

    std::string kappa_spec;
    bool s_json = false;
    auto* ssets_cmd = app.add_subcommand("ssets", "list S-sets");
    ssets_cmd->add_option("--kappa", kappa_spec,
                          "theta-characteristic, e.g. \"1,2,3\" (default: all)");
    ssets_cmd->add_flag("--json", s_json, "JSON output");

    int vl_rank = 0, vl_level = -1, vl_genus = 0;
    long vl_prec = 0;
    bool vl_json = false;
    auto* verlinde_cmd = app.add_subcommand("verlinde", "one Verlinde number");
    verlinde_cmd->add_option("--rank", vl_rank)->required();
    verlinde_cmd->add_option("--level", vl_level)->required();
    verlinde_cmd->add_option("--genus", vl_genus)->required();
    verlinde_cmd->add_option("--precision", vl_prec, "starting precision bits");
    verlinde_cmd->add_flag("--json", vl_json, "JSON output");

    std::string which, csv_path;
    auto* tables_cmd = app.add_subcommand("tables", "emit canonical CSV tables");
    tables_cmd->add_option("--which", which, "P | alpha | ssets")->required();
    tables_cmd->add_option("--csv", csv_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(v_json, data_dir, workers);
        if (degree_cmd->parsed()) return cmd_degree(d_rank, d_json, workers);
        if (ssets_cmd->parsed()) return cmd_ssets(kappa_spec, s_json);
        if (verlinde_cmd->parsed())
            return cmd_verlinde(vl_rank, vl_level, vl_genus, vl_prec, vl_json,
                                workers);
        if (tables_cmd->parsed()) return cmd_tables(which, csv_path, workers);
    } catch (const verlinde::CertificationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
