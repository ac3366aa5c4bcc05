#pragma once

// Exact interpolation of the Hilbert polynomial in the shifted binomial
// basis Q_k(X) = C(X + offset, k). With values P(-offset..dimension-offset)
// the basis coefficients are Newton forward differences taken at -offset,
// all in exact big-integer/rational arithmetic. The top coefficient c_top
// feeds the theta-map degree formula deg = c_top - base_locus_count.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace thetamap::hilbert {

struct HilbertInput {
    int offset;    // vanishing range is -offset .. -1
    int dimension; // degree of the polynomial
    std::vector<mpz_class> values; // P(-offset) .. P(dimension - offset)
};

struct HilbertCoefficients {
    int offset;
    std::vector<mpz_class> alpha; // alpha_0 .. alpha_dimension
    mpz_class c_top;              // = alpha.back()
};

/// [0 x offset, 1, P(1) .. P(dimension - offset)]. The positive-level
/// values come from the Verlinde module; the leading zeros and P(0) = 1
/// are the vanishing data.
inline HilbertInput assemble_input(const std::vector<mpz_class>& positive_values,
                                   int offset = 7, int dimension = 15) {
    if (offset < 1 || dimension < offset)
        throw std::invalid_argument("need 1 <= offset <= dimension");
    if (static_cast<int>(positive_values.size()) != dimension - offset)
        throw std::invalid_argument(
            "expected " + std::to_string(dimension - offset) +
            " positive-level values, got " + std::to_string(positive_values.size()));
    HilbertInput in{offset, dimension, {}};
    in.values.assign(static_cast<std::size_t>(offset), mpz_class(0));
    in.values.emplace_back(1);
    in.values.insert(in.values.end(), positive_values.begin(), positive_values.end());
    return in;
}

/// Newton forward differences: alpha_k = Delta^k P(-offset).
inline HilbertCoefficients coefficients(const HilbertInput& input) {
    if (static_cast<int>(input.values.size()) != input.dimension + 1)
        throw std::invalid_argument("value count must be dimension + 1");
    std::vector<mpz_class> diff = input.values;
    HilbertCoefficients out{input.offset, {}, 0};
    out.alpha.reserve(diff.size());
    for (std::size_t k = 0; k < input.values.size(); ++k) {
        out.alpha.push_back(diff[0]);
        for (std::size_t i = 0; i + 1 < diff.size() - k; ++i)
            diff[i] = diff[i + 1] - diff[i];
    }
    out.c_top = out.alpha.back();
    return out;
}

/// Generalized binomial C(x, k) over the rationals.
inline mpq_class binomial(const mpq_class& x, int k) {
    mpq_class num = 1;
    for (int i = 0; i < k; ++i) num *= x - i;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class out = num / mpq_class(fact);
    out.canonicalize();
    return out;
}

/// P(x) = sum_k alpha_k C(x + offset, k), exact over the rationals.
inline mpq_class evaluate(const HilbertCoefficients& coeffs, const mpq_class& x) {
    mpq_class shifted = x + coeffs.offset;
    mpq_class acc = 0;
    for (std::size_t k = 0; k < coeffs.alpha.size(); ++k)
        acc += mpq_class(coeffs.alpha[k]) * binomial(shifted, static_cast<int>(k));
    acc.canonicalize();
    return acc;
}

/// deg theta = c_top - base_locus_count.
inline mpz_class degree_theta(const mpz_class& c_top, const mpz_class& base_locus_count) {
    if (c_top < base_locus_count)
        throw std::invalid_argument(
            "top coefficient below base-locus count: inconsistent inputs");
    return c_top - base_locus_count;
}

} // namespace thetamap::hilbert
