#pragma once

// Exhaustive invariant suites over the 16-element universes, plus the
// Verlinde and Hilbert identities and golden-table comparison. Each suite
// reports how many checks ran and a record per failure; the CLI `verify`
// subcommand and the acceptance tests both run through here.

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thetamap/f2geometry.hpp"
#include "thetamap/hilbert.hpp"
#include "thetamap/tables.hpp"
#include "thetamap/verlinde.hpp"

namespace thetamap::verify {

struct FailureRecord {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string name;
    long checks_run = 0;
    std::vector<FailureRecord> failures;
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    bool overall_pass() const {
        for (const auto& s : suites)
            if (!s.failures.empty()) return false;
        return true;
    }
};

namespace detail {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& inputs, const std::string& expected,
               const std::string& actual) {
        ++result_.checks_run;
        if (!ok) result_.failures.push_back({inputs, expected, actual});
    }
    void check(bool ok, const std::string& inputs) {
        check(ok, inputs, "true", "false");
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

inline std::string enc(const std::string& s) { return s.empty() ? "0" : s; }

} // namespace detail

inline SuiteResult suite_enumeration() {
    detail::Suite s("enumeration");
    const auto& pts = f2::all_two_torsion();
    const auto& chars = f2::all_theta_chars();
    s.check(pts.size() == 16, "|J[2]|", "16", std::to_string(pts.size()));
    s.check(chars.size() == 16, "#theta-characteristics", "16",
            std::to_string(chars.size()));
    int odd = 0;
    for (auto k : chars) odd += k.is_odd() ? 1 : 0;
    s.check(odd == 6, "odd count", "6", std::to_string(odd));
    s.check(static_cast<int>(chars.size()) - odd == 10, "even count", "10",
            std::to_string(chars.size() - odd));
    return s.take();
}

inline SuiteResult suite_group_law() {
    detail::Suite s("group-law");
    const auto& pts = f2::all_two_torsion();
    for (auto a : pts) {
        s.check((a + a).is_identity(), "a+a with a=" + detail::enc(a.to_string()));
        for (auto b : pts) {
            s.check(a + b == b + a,
                    "commute " + detail::enc(a.to_string()) + "," +
                        detail::enc(b.to_string()));
            for (auto c : pts)
                s.check((a + b) + c == a + (b + c),
                        "assoc " + detail::enc(a.to_string()) + "," +
                            detail::enc(b.to_string()) + "," +
                            detail::enc(c.to_string()));
        }
    }
    // rank 4: the four adjacent-pair classes generate everything
    std::vector<f2::TwoTorsionPoint> gens = {
        f2::make_two_torsion({1, 2}), f2::make_two_torsion({2, 3}),
        f2::make_two_torsion({3, 4}), f2::make_two_torsion({4, 5})};
    std::set<f2::TwoTorsionPoint> span;
    for (unsigned m = 0; m < 16; ++m) {
        f2::TwoTorsionPoint acc;
        for (unsigned i = 0; i < 4; ++i)
            if (m & (1u << i)) acc = acc + gens[i];
        span.insert(acc);
    }
    s.check(span.size() == 16, "span of 4 generators", "16",
            std::to_string(span.size()));
    return s.take();
}

inline SuiteResult suite_weil_pairing() {
    detail::Suite s("weil-pairing");
    const auto& pts = f2::all_two_torsion();
    for (auto a : pts) {
        s.check(f2::weil_pairing(a, a) == 0,
                "alternating a=" + detail::enc(a.to_string()));
        for (auto b : pts)
            for (auto c : pts)
                s.check((f2::weil_pairing(a + b, c) ^ f2::weil_pairing(a, c) ^
                         f2::weil_pairing(b, c)) == 0,
                        "bilinear " + detail::enc(a.to_string()) + "," +
                            detail::enc(b.to_string()) + "," +
                            detail::enc(c.to_string()));
        if (!a.is_identity()) {
            bool hit = false;
            for (auto b : pts) hit = hit || f2::weil_pairing(a, b) == 1;
            s.check(hit, "nondegenerate a=" + detail::enc(a.to_string()));
        }
    }
    return s.take();
}

inline SuiteResult suite_torsor() {
    detail::Suite s("torsor");
    for (auto kappa : f2::all_theta_chars()) {
        std::set<f2::ThetaCharacteristic> image;
        for (auto a : f2::all_two_torsion()) image.insert(kappa.twist(a));
        s.check(image.size() == 16,
                "twist orbit of " + detail::enc(kappa.to_string()), "16",
                std::to_string(image.size()));
    }
    return s.take();
}

inline SuiteResult suite_quadratic_forms() {
    detail::Suite s("quadratic-forms");
    const auto& pts = f2::all_two_torsion();
    for (auto kappa : f2::all_theta_chars()) {
        auto q = f2::quadratic_form(kappa);
        int zeros = 0;
        for (auto& [a, v] : q.values) zeros += v == 0;
        int want = kappa.is_odd() ? 6 : 10;
        s.check(zeros == want, "zero count q_" + detail::enc(kappa.to_string()),
                std::to_string(want), std::to_string(zeros));
        s.check(q.values.at(f2::TwoTorsionPoint{}) == 0,
                "q(0) for " + detail::enc(kappa.to_string()), "0",
                std::to_string(q.values.at(f2::TwoTorsionPoint{})));
        for (auto a : pts)
            for (auto b : pts)
                s.check((q.values.at(a + b) ^ q.values.at(a) ^ q.values.at(b) ^
                         f2::weil_pairing(a, b)) == 0,
                        "polarization " + detail::enc(kappa.to_string()) + ";" +
                            detail::enc(a.to_string()) + "," +
                            detail::enc(b.to_string()));
        // translate the form: q_{kappa*sigma}(a) = q_kappa(a) + <sigma,a>
        for (auto sigma : pts) {
            auto qt = f2::quadratic_form(kappa.twist(sigma));
            bool ok = true;
            for (auto a : pts)
                ok = ok && qt.values.at(a) ==
                               ((q.values.at(a) ^ f2::weil_pairing(sigma, a)));
            s.check(ok, "translated table " + detail::enc(kappa.to_string()) +
                            ";" + detail::enc(sigma.to_string()));
        }
    }
    return s.take();
}

inline SuiteResult suite_s_sets() {
    detail::Suite s("s-sets");
    for (auto kappa : f2::all_theta_chars()) {
        auto ss = f2::s_set(kappa);
        s.check(ss.elements.size() == 6,
                "|S(" + detail::enc(kappa.to_string()) + ")|", "6",
                std::to_string(ss.elements.size()));
        f2::TwoTorsionPoint sum;
        for (auto a : ss.elements) sum = sum + a;
        s.check(sum.is_identity(),
                "sum S(" + detail::enc(kappa.to_string()) + ")", "0",
                detail::enc(sum.to_string()));
        bool has_id = std::find(ss.elements.begin(), ss.elements.end(),
                                f2::TwoTorsionPoint{}) != ss.elements.end();
        s.check(has_id == kappa.is_odd(),
                "0 in S(" + detail::enc(kappa.to_string()) + ") iff odd");
        auto comp = f2::sym2_complement(kappa);
        s.check(comp.size() == 10,
                "|complement(" + detail::enc(kappa.to_string()) + ")|", "10",
                std::to_string(comp.size()));
    }
    return s.take();
}

inline SuiteResult suite_end0() {
    detail::Suite s("end0");
    for (auto kappa : f2::all_theta_chars()) {
        auto sums = f2::end0_pair_sums(kappa);
        std::vector<f2::TwoTorsionPoint> nonzero;
        for (auto a : f2::all_two_torsion())
            if (!a.is_identity()) nonzero.push_back(a);
        s.check(sums == nonzero,
                "pair sums of S(" + detail::enc(kappa.to_string()) + ")",
                "J[2] \\ {0}, each once",
                sums.size() == 15 ? "mismatch" : std::to_string(sums.size()) + " sums");
    }
    return s.take();
}

inline SuiteResult suite_pairwise() {
    detail::Suite s("pairwise");
    const auto& chars = f2::all_theta_chars();
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = i + 1; j < chars.size(); ++j) {
            auto [gamma, delta] = f2::pfaffian_intersection(chars[i], chars[j]);
            auto back = chars[i].twist(gamma).twist(delta);
            s.check(back == chars[j],
                    "kappa*gamma*delta for " + detail::enc(chars[i].to_string()) +
                        "," + detail::enc(chars[j].to_string()),
                    detail::enc(chars[j].to_string()),
                    detail::enc(back.to_string()));
        }
    return s.take();
}

inline SuiteResult suite_translation() {
    detail::Suite s("translation-covariance");
    for (auto kappa : f2::all_theta_chars())
        for (auto sigma : f2::all_two_torsion()) {
            auto lhs = f2::s_set(kappa.twist(sigma)).elements;
            auto rhs = f2::s_set(kappa).elements;
            for (auto& a : rhs) a = a + sigma;
            std::sort(rhs.begin(), rhs.end());
            s.check(lhs == rhs,
                    "S(kappa*sigma) for " + detail::enc(kappa.to_string()) + ";" +
                        detail::enc(sigma.to_string()));
        }
    return s.take();
}

inline SuiteResult suite_klein() {
    detail::Suite s("klein-subgroups");
    for (auto kappa : f2::all_theta_chars()) {
        if (kappa.is_odd()) continue;
        auto [h1, h2] = f2::klein_subgroups(kappa);
        for (const auto& h : {h1, h2}) {
            s.check(h.size() == 4, "order of subgroup at " +
                                       detail::enc(kappa.to_string()),
                    "4", std::to_string(h.size()));
            bool closed = true;
            for (auto a : h)
                for (auto b : h)
                    closed = closed &&
                             std::find(h.begin(), h.end(), a + b) != h.end();
            s.check(closed, "closure at " + detail::enc(kappa.to_string()));
        }
        std::vector<f2::TwoTorsionPoint> uni;
        for (auto a : h1)
            if (!a.is_identity()) uni.push_back(a);
        for (auto a : h2)
            if (!a.is_identity()) uni.push_back(a);
        std::sort(uni.begin(), uni.end());
        s.check(uni == f2::s_set(kappa).elements,
                "union minus identity = S(" + detail::enc(kappa.to_string()) + ")");
        std::vector<f2::TwoTorsionPoint> meet;
        std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(),
                              std::back_inserter(meet));
        s.check(meet.size() == 1 && meet[0].is_identity(),
                "intersection at " + detail::enc(kappa.to_string()), "{0}",
                std::to_string(meet.size()) + " elements");
    }
    return s.take();
}

inline SuiteResult suite_phi_directions() {
    detail::Suite s("phi-directions");
    for (auto kappa : f2::all_theta_chars()) {
        auto dirs = f2::phi_direction_map(kappa);
        std::set<f2::TwoTorsionPoint> image;
        bool consistent = true;
        for (auto& [k2, beta] : dirs) {
            image.insert(beta);
            consistent = consistent && kappa.twist(beta) == k2 &&
                         !beta.is_identity();
        }
        s.check(dirs.size() == 15 && image.size() == 15 && consistent,
                "direction map at " + detail::enc(kappa.to_string()),
                "15 distinct nonzero directions",
                std::to_string(image.size()) + " distinct");
    }
    return s.take();
}

inline SuiteResult suite_verlinde_identities(unsigned workers = 1) {
    detail::Suite s("verlinde-identities");
    for (int r = 2; r <= 5; ++r)
        for (int n = 0; n <= 12; ++n) {
            auto res = verlinde::verlinde_number({r, n, 1}, workers);
            mpz_class want;
            mpz_bin_uiui(want.get_mpz_t(),
                         static_cast<unsigned long>(n + r - 1),
                         static_cast<unsigned long>(r - 1));
            s.check(res.value == want,
                    "genus-1 r=" + std::to_string(r) + " n=" + std::to_string(n),
                    want.get_str(), res.value.get_str());
        }
    for (int r = 2; r <= 5; ++r)
        for (int g = 1; g <= 3; ++g) {
            auto res = verlinde::verlinde_number({r, 0, g}, workers);
            s.check(res.value == 1,
                    "level-0 r=" + std::to_string(r) + " g=" + std::to_string(g),
                    "1", res.value.get_str());
        }
    {
        auto res = verlinde::verlinde_number({2, 1, 2}, workers);
        s.check(res.value == 4, "r=2 n=1 g=2", "4", res.value.get_str());
    }
    // strict monotonicity in n at r=4, g=2
    mpz_class prev = 0;
    for (int n = 1; n <= 8; ++n) {
        auto res = verlinde::verlinde_number({4, n, 2}, workers);
        s.check(res.value > prev,
                "monotone r=4 g=2 n=" + std::to_string(n),
                "> " + prev.get_str(), res.value.get_str());
        prev = res.value;
    }
    return s.take();
}

inline SuiteResult suite_hilbert(unsigned workers = 1) {
    detail::Suite s("hilbert");
    auto pipe = tables::run_degree_pipeline(workers);
    auto input = hilbert::assemble_input(pipe.verlinde_values);
    // round trip over the full interpolation window
    for (int n = -7; n <= 8; ++n) {
        auto v = hilbert::evaluate(pipe.coeffs, n);
        mpq_class want(input.values[static_cast<std::size_t>(n + 7)]);
        s.check(v == want, "round-trip n=" + std::to_string(n),
                want.get_str(), v.get_str());
    }
    // basis triangularity: Q_k(-7 .. -8+k) = 0, Q_k(-7+k) = 1
    for (int k = 0; k <= 15; ++k) {
        bool ok = true;
        for (int n = -7; n < -7 + k; ++n)
            ok = ok && hilbert::binomial(mpq_class(n + 7), k) == 0;
        ok = ok && hilbert::binomial(mpq_class(k), k) == 1;
        s.check(ok, "basis triangularity k=" + std::to_string(k));
    }
    // leading coefficient: fit degree from 17 large points
    {
        std::vector<mpq_class> ys;
        for (int n = 100; n < 117; ++n)
            ys.push_back(hilbert::evaluate(pipe.coeffs, n));
        // repeated differencing: after 15 rounds all entries equal c_top
        for (int round = 0; round < 15; ++round)
            for (std::size_t i = 0; i + 1 < ys.size() - static_cast<std::size_t>(round); ++i)
                ys[i] = ys[i + 1] - ys[i];
        bool ok = ys[0] == mpq_class(pipe.c_top) && ys[1] == mpq_class(pipe.c_top);
        s.check(ok, "leading coefficient via 15th differences",
                pipe.c_top.get_str(), ys[0].get_str());
    }
    s.check(pipe.degree == 30, "deg theta", "30", pipe.degree.get_str());
    return s.take();
}

/// Compare generated canonical CSV against a golden file, byte-exact.
inline SuiteResult suite_golden(const std::string& data_dir, unsigned workers = 1) {
    detail::Suite s("golden-tables");
    auto pipe = tables::run_degree_pipeline(workers);
    auto compare = [&](const std::string& file, const std::string& generated) {
        std::ifstream in(data_dir + "/" + file, std::ios::binary);
        if (!in) {
            s.check(false, file, "readable golden file", "missing");
            return;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        s.check(buf.str() == generated, file, "byte-exact match", "differs");
    };
    compare("verlinde_P.csv", tables::verlinde_csv(pipe.verlinde_values));
    compare("alpha.csv", tables::alpha_csv(pipe.coeffs));
    compare("ssets.csv", tables::ssets_csv());
    return s.take();
}

/// The whole battery. `data_dir` empty skips golden comparison.
inline VerificationReport run_all(const std::string& data_dir = "",
                                  unsigned workers = 1) {
    VerificationReport report;
    report.suites.push_back(suite_enumeration());
    report.suites.push_back(suite_group_law());
    report.suites.push_back(suite_weil_pairing());
    report.suites.push_back(suite_torsor());
    report.suites.push_back(suite_quadratic_forms());
    report.suites.push_back(suite_s_sets());
    report.suites.push_back(suite_end0());
    report.suites.push_back(suite_pairwise());
    report.suites.push_back(suite_translation());
    report.suites.push_back(suite_klein());
    report.suites.push_back(suite_phi_directions());
    report.suites.push_back(suite_verlinde_identities(workers));
    report.suites.push_back(suite_hilbert(workers));
    if (!data_dir.empty())
        report.suites.push_back(suite_golden(data_dir, workers));
    return report;
}

} // namespace thetamap::verify
