#pragma once

// Canonical tables and the full degree pipeline: Verlinde values P(1..8),
// binomial-basis coefficients alpha_k, and deg theta = c_15 - #B_4.
// CSV formatting is fixed here so golden-file comparison is byte-exact.

#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thetamap/f2geometry.hpp"
#include "thetamap/hilbert.hpp"
#include "thetamap/verlinde.hpp"

namespace thetamap::tables {

struct DegreePipeline {
    std::vector<mpz_class> verlinde_values; // P(1) .. P(8)
    hilbert::HilbertCoefficients coeffs;    // alpha_0 .. alpha_15
    mpz_class c_top;
    mpz_class base_locus_count; // theta-characteristic count from f2geometry
    mpz_class degree;
};

inline constexpr int kRank = 4;
inline constexpr int kGenus = 2;
inline constexpr int kOffset = 7;
inline constexpr int kDimension = 15;

/// Run the whole computation for rank 4, genus 2.
inline DegreePipeline run_degree_pipeline(unsigned workers = 1) {
    DegreePipeline out;
    for (int n = 1; n <= kDimension - kOffset; ++n)
        out.verlinde_values.push_back(
            verlinde::verlinde_number({kRank, n, kGenus}, workers).value);
    auto input = hilbert::assemble_input(out.verlinde_values, kOffset, kDimension);
    out.coeffs = hilbert::coefficients(input);
    out.c_top = out.coeffs.c_top;
    out.base_locus_count =
        static_cast<unsigned long>(f2::all_theta_chars().size());
    out.degree = hilbert::degree_theta(out.c_top, out.base_locus_count);
    return out;
}

/// Canonical CSV: header `n,P_n`, rows n = 1..8, LF line endings.
inline std::string verlinde_csv(const std::vector<mpz_class>& values) {
    std::ostringstream out;
    out << "n,P_n\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i + 1) << ',' << values[i].get_str() << '\n';
    return out.str();
}

/// Canonical CSV: header `k,alpha_k`, rows k = 7..15.
inline std::string alpha_csv(const hilbert::HilbertCoefficients& coeffs) {
    std::ostringstream out;
    out << "k,alpha_k\n";
    for (std::size_t k = kOffset; k < coeffs.alpha.size(); ++k)
        out << k << ',' << coeffs.alpha[k].get_str() << '\n';
    return out.str();
}

/// Canonical CSV of all sixteen S-sets: header `kappa,parity,s_set`,
/// S-set elements joined with ';' in canonical order. The identity class
/// prints as "0".
inline std::string ssets_csv() {
    auto enc = [](const std::string& s) { return s.empty() ? std::string("0") : s; };
    std::ostringstream out;
    out << "kappa,parity,s_set\n";
    for (auto kappa : f2::all_theta_chars()) {
        out << enc(kappa.to_string()) << ','
            << (kappa.is_odd() ? "odd" : "even") << ',';
        auto s = f2::s_set(kappa);
        for (std::size_t i = 0; i < s.elements.size(); ++i) {
            if (i) out << ';';
            out << enc(s.elements[i].to_string());
        }
        out << '\n';
    }
    return out.str();
}

} // namespace thetamap::tables
