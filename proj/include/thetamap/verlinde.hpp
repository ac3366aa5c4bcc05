#pragma once

// Verlinde numbers P(n) = dim H^0(M_r, L^n) for SU(r) at genus g, via the
// S-matrix sine-product form
//
//   P = (r (n+r)^{r-1})^{g-1} * sum_{weights} prod_{i<j} (2 sin(pi (l_i - l_j)/(n+r)))^{2-2g}
//
// summed over strictly decreasing tuples l_1 > ... > l_{r-1} > l_r = 0 with
// l_1 <= n+r-1. The trigonometric sum is evaluated in MPFR interval
// arithmetic (directed rounding); the working precision is doubled until the
// enclosure pins the result to an integer with certified error < 1e-6.
// Prefactor and result are exact big integers.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace thetamap::verlinde {

struct VerlindeQuery {
    int rank;  // r >= 2
    int level; // n >= 0
    int genus; // g >= 1
};

struct VerlindeResult {
    mpz_class value;
    double certified_error_bound; // distance of the enclosure to value
};

/// Raised when the enclosure cannot certify an integer at < 1e-6 even at
/// the maximum working precision.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using LevelWeight = std::vector<int>; // shifted parts, last entry 0

/// All level weights for SU(rank) at the given level, lexicographic.
/// Count is C(level+rank-1, rank-1).
inline std::vector<LevelWeight> level_weights(int rank, int level) {
    if (rank < 2) throw std::invalid_argument("rank must be >= 2");
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    std::vector<LevelWeight> out;
    LevelWeight cur(rank, 0);
    // position p runs over l_1 .. l_{r-1}; l_r stays 0
    auto rec = [&](auto&& self, int p) -> void {
        if (p == rank - 1) {
            out.push_back(cur);
            return;
        }
        int upper = (p == 0) ? level + rank - 1 : cur[p - 1] - 1;
        int lower = rank - 1 - p; // must leave room for the strict tail
        for (int v = lower; v <= upper; ++v) {
            cur[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return out;
}

namespace detail {

// Closed positive interval [lo, hi] at a fixed mpfr precision. Only the
// operations the sine-product sum needs.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
            mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    void set_ui(unsigned long v) {
        mpfr_set_ui(lo_, v, MPFR_RNDD);
        mpfr_set_ui(hi_, v, MPFR_RNDU);
    }

    void add(const Interval& o) {
        mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    }

    // both operands positive
    void mul_positive(const Interval& o) {
        mpfr_mul(lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_mul(hi_, hi_, o.hi_, MPFR_RNDU);
    }

    // reciprocal of a positive interval
    void invert_positive() {
        mpfr_swap(lo_, hi_);
        mpfr_ui_div(lo_, 1, lo_, MPFR_RNDD);
        mpfr_ui_div(hi_, 1, hi_, MPFR_RNDU);
    }

private:
    mpfr_t lo_, hi_;
};

// Enclosure of 2 sin(pi d / m) for 1 <= d <= m-1, at precision prec.
inline Interval two_sine(long d, long m, mpfr_prec_t prec) {
    Interval arg(prec);
    mpfr_const_pi(arg.lo(), MPFR_RNDD);
    mpfr_const_pi(arg.hi(), MPFR_RNDU);
    mpfr_mul_si(arg.lo(), arg.lo(), d, MPFR_RNDD);
    mpfr_mul_si(arg.hi(), arg.hi(), d, MPFR_RNDU);
    mpfr_div_si(arg.lo(), arg.lo(), m, MPFR_RNDD);
    mpfr_div_si(arg.hi(), arg.hi(), m, MPFR_RNDU);

    // sin on (0, pi): evaluate at both endpoints, widen to cover the
    // maximum in case the tiny argument interval straddles pi/2.
    Interval out(prec);
    mpfr_t s_lo_a, s_lo_b, s_hi_a, s_hi_b;
    mpfr_inits2(prec, s_lo_a, s_lo_b, s_hi_a, s_hi_b, (mpfr_ptr) nullptr);
    mpfr_sin(s_lo_a, arg.lo(), MPFR_RNDD);
    mpfr_sin(s_lo_b, arg.hi(), MPFR_RNDD);
    mpfr_sin(s_hi_a, arg.lo(), MPFR_RNDU);
    mpfr_sin(s_hi_b, arg.hi(), MPFR_RNDU);
    mpfr_min(out.lo(), s_lo_a, s_lo_b, MPFR_RNDD);
    mpfr_max(out.hi(), s_hi_a, s_hi_b, MPFR_RNDU);
    if (2 * d != m) {
        // pi/2 in the enclosure only at d/m = 1/2; otherwise endpoints bound sin
    } else {
        mpfr_set_ui(out.hi(), 1, MPFR_RNDU);
    }
    mpfr_clears(s_lo_a, s_lo_b, s_hi_a, s_hi_b, (mpfr_ptr) nullptr);
    mpfr_mul_ui(out.lo(), out.lo(), 2, MPFR_RNDD);
    mpfr_mul_ui(out.hi(), out.hi(), 2, MPFR_RNDU);
    return out;
}

// One weight's product prod_{i<j} s_{l_i - l_j}^{2-2g}, from the cached
// per-difference factors s_d^{|2-2g|} (already inverted when 2-2g < 0).
inline Interval weight_term(const LevelWeight& w,
                            const std::vector<Interval>& factor_by_diff,
                            mpfr_prec_t prec) {
    Interval term(prec);
    term.set_ui(1);
    const int r = static_cast<int>(w.size());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            term.mul_positive(factor_by_diff[static_cast<std::size_t>(w[i] - w[j])]);
    return term;
}

inline mpz_class prefactor(const VerlindeQuery& q) {
    mpz_class base = q.rank;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q.level + q.rank),
                  static_cast<unsigned long>(q.rank - 1));
    base *= p;
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(q.genus - 1));
    return out;
}

} // namespace detail

/// Evaluate the Verlinde number. `workers` partitions the weight sum across
/// threads; the certified enclosure makes the integer independent of the
/// partitioning. Throws CertificationError if no precision up to
/// `max_precision_bits` certifies the result.
inline VerlindeResult verlinde_number(const VerlindeQuery& q,
                                      unsigned workers = 1,
                                      mpfr_prec_t start_precision_bits = 64,
                                      mpfr_prec_t max_precision_bits = 1 << 14) {
    if (q.rank < 2) throw std::invalid_argument("rank must be >= 2");
    if (q.level < 0) throw std::invalid_argument("level must be >= 0");
    if (q.genus < 1) throw std::invalid_argument("genus must be >= 1");
    if (workers == 0) workers = 1;

    const auto weights = level_weights(q.rank, q.level);
    const mpz_class pre = detail::prefactor(q);
    const int m = q.level + q.rank;
    const int exponent = 2 - 2 * q.genus; // 0 for g=1, negative otherwise

    // Genus 1: every factor is 1, the sum counts weights, no rounding at all.
    if (exponent == 0) {
        mpz_class v = pre * mpz_class(static_cast<unsigned long>(weights.size()));
        return {v, 0.0};
    }

    for (mpfr_prec_t prec = start_precision_bits; prec <= max_precision_bits;
         prec *= 2) {
        // Cache s_d^{exponent} per distinct difference d in 1..m-1.
        std::vector<detail::Interval> factor_by_diff(
            static_cast<std::size_t>(m), detail::Interval(prec));
        for (int d = 1; d < m; ++d) {
            detail::Interval f = detail::two_sine(d, m, prec);
            detail::Interval acc(prec);
            acc.set_ui(1);
            for (int e = 0; e < -exponent; ++e) acc.mul_positive(f);
            acc.invert_positive();
            factor_by_diff[static_cast<std::size_t>(d)] = acc;
        }

        std::vector<detail::Interval> partial(workers, detail::Interval(prec));
        auto run = [&](unsigned wi) {
            for (std::size_t k = wi; k < weights.size(); k += workers)
                partial[wi].add(detail::weight_term(weights[k], factor_by_diff, prec));
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned wi = 0; wi < workers; ++wi)
                pool.emplace_back(run, wi);
            for (auto& t : pool) t.join();
        }
        detail::Interval sum(prec);
        for (auto& p : partial) sum.add(p);

        // Scale by the exact prefactor and test the enclosure.
        mpfr_t lo, hi, mid, err;
        mpfr_inits2(prec, lo, hi, mid, err, (mpfr_ptr) nullptr);
        mpfr_mul_z(lo, sum.lo(), pre.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi, sum.hi(), pre.get_mpz_t(), MPFR_RNDU);
        mpz_class nearest;
        mpfr_add(mid, lo, hi, MPFR_RNDN);
        mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
        mpfr_round(mid, mid);
        mpfr_get_z(nearest.get_mpz_t(), mid, MPFR_RNDN);

        mpfr_sub_z(lo, lo, nearest.get_mpz_t(), MPFR_RNDD);
        mpfr_sub_z(hi, hi, nearest.get_mpz_t(), MPFR_RNDU);
        mpfr_abs(lo, lo, MPFR_RNDU);
        mpfr_abs(hi, hi, MPFR_RNDU);
        mpfr_max(err, lo, hi, MPFR_RNDU);
        double bound = mpfr_get_d(err, MPFR_RNDU);
        mpfr_clears(lo, hi, mid, err, (mpfr_ptr) nullptr);

        if (bound < 1e-6 && nearest >= 0)
            return {nearest, bound};
    }
    throw CertificationError(
        "Verlinde sum not certifiable to < 1e-6 at rank " +
        std::to_string(q.rank) + ", level " + std::to_string(q.level) +
        ", genus " + std::to_string(q.genus));
}

} // namespace thetamap::verlinde
