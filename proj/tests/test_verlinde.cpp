#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "thetamap/verlinde.hpp"

using namespace thetamap::verlinde;

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace

TEST_CASE("level weight enumeration") {
    auto w21 = level_weights(2, 1);
    REQUIRE(w21.size() == 2);
    CHECK(w21[0] == LevelWeight{1, 0});
    CHECK(w21[1] == LevelWeight{2, 0});

    CHECK(level_weights(4, 1).size() == 4);

    auto w40 = level_weights(4, 0);
    REQUIRE(w40.size() == 1);
    CHECK(w40[0] == LevelWeight{3, 2, 1, 0});

    for (int r = 2; r <= 5; ++r)
        for (int n = 0; n <= 12; ++n) {
            auto ws = level_weights(r, n);
            CHECK(mpz_class(static_cast<unsigned long>(ws.size())) ==
                  binom(static_cast<unsigned long>(n + r - 1),
                        static_cast<unsigned long>(r - 1)));
            CHECK(std::is_sorted(ws.begin(), ws.end()));
            for (auto& w : ws) {
                CHECK(w.back() == 0);
                CHECK(w.front() <= n + r - 1);
                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                    CHECK(w[i] > w[i + 1]);
            }
        }
}

TEST_CASE("paper table r=4 g=2") {
    const long expected[] = {16, 140, 896, 4680, 21024, 83628, 300080, 984539};
    for (int n = 1; n <= 8; ++n) {
        auto res = verlinde_number({4, n, 2});
        CHECK(res.value == expected[n - 1]);
        CHECK(res.certified_error_bound < 1e-6);
    }
}

TEST_CASE("hand-checked small case r=2 n=1 g=2") {
    // prefactor 6, two weights each contributing 1/3
    CHECK(verlinde_number({2, 1, 2}).value == 4);
}

TEST_CASE("genus-1 and level-0 identities") {
    for (int r = 2; r <= 5; ++r) {
        for (int n = 0; n <= 12; ++n)
            CHECK(verlinde_number({r, n, 1}).value ==
                  binom(static_cast<unsigned long>(n + r - 1),
                        static_cast<unsigned long>(r - 1)));
        for (int g = 1; g <= 3; ++g)
            CHECK(verlinde_number({r, 0, g}).value == 1);
    }
}

TEST_CASE("determinism across workers") {
    for (int r = 2; r <= 5; ++r)
        for (int n = 0; n <= 12; ++n)
            for (int g = 1; g <= 3; ++g) {
                auto one = verlinde_number({r, n, g}, 1);
                auto two = verlinde_number({r, n, g}, 2);
                auto eight = verlinde_number({r, n, g}, 8);
                CHECK(one.value == two.value);
                CHECK(one.value == eight.value);
                CHECK(one.certified_error_bound < 1e-6);
            }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(verlinde_number({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verlinde_number({4, -1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verlinde_number({4, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(level_weights(1, 3), std::invalid_argument);
}

TEST_CASE("certification failure is explicit") {
    // a 2-bit precision cap cannot certify anything nontrivial
    CHECK_THROWS_AS(verlinde_number({4, 3, 2}, 1, 2, 2), CertificationError);
}
