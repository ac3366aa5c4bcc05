#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "thetamap/f2geometry.hpp"
#include "thetamap/verify.hpp"

using namespace thetamap;
using f2::make_theta_char;
using f2::make_two_torsion;
using f2::ThetaCharacteristic;
using f2::TwoTorsionPoint;

namespace {

// Independent oracle: class arithmetic on raw 6-bit masks, no library
// canonicalization. A class is the unordered pair {m, m ^ 0x3F}; two
// masks agree as classes iff their xor is 0 or 0x3F.
bool same_class(unsigned a, unsigned b) {
    unsigned x = (a ^ b) & 0x3F;
    return x == 0 || x == 0x3F;
}

int class_min_size(unsigned m) {
    int n = std::popcount(m & 0x3Fu);
    return std::min(n, 6 - n);
}

} // namespace

TEST_CASE("two-torsion construction and canonicalization") {
    CHECK(make_two_torsion({}).is_identity());
    CHECK(make_two_torsion({1, 2}).to_string() == "1,2");
    CHECK(make_two_torsion({3, 4, 5, 6}).to_string() == "1,2");
    CHECK(make_two_torsion({3, 4, 5, 6}) == make_two_torsion({1, 2}));
    CHECK_THROWS_AS(make_two_torsion({1}), std::invalid_argument);
    CHECK_THROWS_AS(make_two_torsion({1, 7}), std::out_of_range);
}

TEST_CASE("group law") {
    auto a12 = make_two_torsion({1, 2});
    auto a23 = make_two_torsion({2, 3});
    CHECK((a12 + a12).is_identity());
    CHECK(a12 + a23 == make_two_torsion({1, 3}));
    // symmetric difference {1,6} canonicalizes by complement
    CHECK(make_two_torsion({1, 2}) + make_two_torsion({2, 6}) ==
          make_two_torsion({2, 3, 4, 5}));
}

TEST_CASE("weil pairing") {
    for (auto a : f2::all_two_torsion()) CHECK(f2::weil_pairing(a, a) == 0);
    CHECK(f2::weil_pairing(make_two_torsion({1, 2}), make_two_torsion({2, 3})) == 1);
    CHECK(f2::weil_pairing(make_two_torsion({1, 2}), make_two_torsion({3, 4})) == 0);
}

TEST_CASE("theta-characteristic construction and parity") {
    CHECK(make_theta_char({1}).is_odd());
    CHECK_FALSE(make_theta_char({1, 2, 3}).is_odd());
    CHECK(make_theta_char({2, 3, 4, 5, 6}) == make_theta_char({1}));
    CHECK(make_theta_char({2, 3, 4, 5, 6}).is_odd());
    CHECK_THROWS_AS(make_theta_char({1, 2}), std::invalid_argument);

    // parity against the raw-mask oracle for every odd mask
    for (unsigned m = 0; m < 64; ++m) {
        if (std::popcount(m) % 2 == 0) continue;
        std::set<int> idx;
        for (int i = 1; i <= 6; ++i)
            if (m & (1u << (i - 1))) idx.insert(i);
        CHECK(make_theta_char(idx).is_odd() == (class_min_size(m) == 1));
    }
}

TEST_CASE("twist") {
    auto k1 = make_theta_char({1});
    CHECK(k1.twist(TwoTorsionPoint{}) == k1);
    CHECK(k1.twist(make_two_torsion({1, 2})) == make_theta_char({2}));
    CHECK(make_theta_char({1, 2, 3}).twist(make_two_torsion({1, 4})) ==
          make_theta_char({2, 3, 4}));
    CHECK_FALSE(make_theta_char({2, 3, 4}).is_odd());
}

TEST_CASE("s_set frozen examples") {
    auto s1 = f2::s_set(make_theta_char({1})).elements;
    std::vector<TwoTorsionPoint> want1 = {
        make_two_torsion({}),     make_two_torsion({1, 2}),
        make_two_torsion({1, 3}), make_two_torsion({1, 4}),
        make_two_torsion({1, 5}), make_two_torsion({2, 3, 4, 5})};
    std::sort(want1.begin(), want1.end());
    CHECK(s1 == want1);

    auto s123 = f2::s_set(make_theta_char({1, 2, 3})).elements;
    std::vector<TwoTorsionPoint> want123 = {
        make_two_torsion({1, 2}),       make_two_torsion({1, 3}),
        make_two_torsion({2, 3}),       make_two_torsion({4, 5}),
        make_two_torsion({1, 2, 3, 5}), make_two_torsion({1, 2, 3, 4})};
    std::sort(want123.begin(), want123.end());
    CHECK(s123 == want123);

    // oracle cross-check: alpha in S(kappa) iff the class kappa*alpha has
    // min size 1, computed on raw masks
    for (auto kappa : f2::all_theta_chars()) {
        auto s = f2::s_set(kappa).elements;
        unsigned km = kappa.mask();
        for (auto alpha : f2::all_two_torsion()) {
            bool in_s = std::find(s.begin(), s.end(), alpha) != s.end();
            CHECK(in_s == (class_min_size(km ^ alpha.mask()) == 1));
        }
    }
}

TEST_CASE("sym2 complement") {
    for (auto kappa : f2::all_theta_chars()) {
        auto s = f2::s_set(kappa).elements;
        auto c = f2::sym2_complement(kappa);
        CHECK(c.size() == 10);
        for (auto a : c)
            CHECK(std::find(s.begin(), s.end(), a) == s.end());
        bool id_in_c = std::find(c.begin(), c.end(), TwoTorsionPoint{}) != c.end();
        CHECK(id_in_c == !kappa.is_odd());
    }
}

TEST_CASE("end0 pair sums") {
    auto sums = f2::end0_pair_sums(make_theta_char({1}));
    CHECK(sums.size() == 15);
    CHECK(std::count(sums.begin(), sums.end(), make_two_torsion({2, 3})) == 1);
    std::vector<TwoTorsionPoint> nonzero;
    for (auto a : f2::all_two_torsion())
        if (!a.is_identity()) nonzero.push_back(a);
    CHECK(sums == nonzero);
}

TEST_CASE("quadratic form values") {
    auto q1 = f2::quadratic_form(make_theta_char({1}));
    CHECK(q1.values.at(TwoTorsionPoint{}) == 0);
    CHECK(q1.values.at(make_two_torsion({1, 2})) == 0);
    auto q123 = f2::quadratic_form(make_theta_char({1, 2, 3}));
    CHECK(q123.values.at(make_two_torsion({1, 2})) == 1);
}

TEST_CASE("pfaffian intersection") {
    auto [g1, d1] = f2::pfaffian_intersection(make_theta_char({1}), make_theta_char({2}));
    std::set<TwoTorsionPoint> got1{g1, d1};
    CHECK(got1 == std::set<TwoTorsionPoint>{make_two_torsion({}),
                                            make_two_torsion({1, 2})});

    auto [g2, d2] = f2::pfaffian_intersection(make_theta_char({1}),
                                              make_theta_char({1, 2, 3}));
    std::set<TwoTorsionPoint> got2{g2, d2};
    CHECK(got2 == std::set<TwoTorsionPoint>{make_two_torsion({1, 2}),
                                            make_two_torsion({1, 3})});
    CHECK(make_theta_char({1}).twist(g2).twist(d2) == make_theta_char({1, 2, 3}));

    // symmetry
    auto [g3, d3] = f2::pfaffian_intersection(make_theta_char({1, 2, 3}),
                                              make_theta_char({1}));
    CHECK(std::set<TwoTorsionPoint>{g3, d3} == got2);

    CHECK_THROWS_AS(
        f2::pfaffian_intersection(make_theta_char({1}), make_theta_char({1})),
        std::invalid_argument);
}

TEST_CASE("phi direction map") {
    auto k1 = make_theta_char({1});
    auto dirs = f2::phi_direction_map(k1);
    CHECK(dirs.count(k1) == 0);
    CHECK(dirs.at(make_theta_char({2})) == make_two_torsion({1, 2}));
    std::set<TwoTorsionPoint> image;
    for (auto& [k2, beta] : dirs) image.insert(beta);
    CHECK(image.size() == 15);
}

TEST_CASE("klein subgroups") {
    auto [h1, h2] = f2::klein_subgroups(make_theta_char({1, 2, 3}));
    std::set<TwoTorsionPoint> want1{
        TwoTorsionPoint{}, make_two_torsion({1, 2}), make_two_torsion({1, 3}),
        make_two_torsion({2, 3})};
    std::set<TwoTorsionPoint> want2{
        TwoTorsionPoint{}, make_two_torsion({4, 5}),
        make_two_torsion({1, 2, 3, 5}), make_two_torsion({1, 2, 3, 4})};
    CHECK(std::set<TwoTorsionPoint>(h1.begin(), h1.end()) == want1);
    CHECK(std::set<TwoTorsionPoint>(h2.begin(), h2.end()) == want2);
    CHECK(make_two_torsion({1, 2}) + make_two_torsion({1, 3}) ==
          make_two_torsion({2, 3}));
    CHECK_THROWS_AS(f2::klein_subgroups(make_theta_char({1})),
                    std::invalid_argument);
}

TEST_CASE("enumeration order and encoding") {
    const auto& pts = f2::all_two_torsion();
    CHECK(pts.size() == 16);
    CHECK(pts.front().is_identity());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    const auto& chars = f2::all_theta_chars();
    CHECK(chars.size() == 16);
    CHECK(std::is_sorted(chars.begin(), chars.end()));
    // every canonical class is distinct as a raw class
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            CHECK_FALSE(same_class(pts[i].mask(), pts[j].mask()));

    CHECK(TwoTorsionPoint::parse("1,2") == make_two_torsion({1, 2}));
    CHECK(TwoTorsionPoint::parse("").is_identity());
    CHECK(ThetaCharacteristic::parse("1,2,3") == make_theta_char({1, 2, 3}));
    CHECK_THROWS_AS(ThetaCharacteristic::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(TwoTorsionPoint::parse("1,x"), std::invalid_argument);
}

TEST_CASE("exhaustive invariant suites pass") {
    for (auto mk : {verify::suite_enumeration, verify::suite_group_law,
                    verify::suite_weil_pairing, verify::suite_torsor,
                    verify::suite_quadratic_forms, verify::suite_s_sets,
                    verify::suite_end0, verify::suite_pairwise,
                    verify::suite_translation, verify::suite_klein,
                    verify::suite_phi_directions}) {
        auto res = mk();
        INFO(res.name);
        CHECK(res.failures.empty());
    }
    CHECK(verify::suite_pairwise().checks_run == 120);
    CHECK(verify::suite_s_sets().checks_run == 16 * 4);
    CHECK(verify::suite_end0().checks_run == 16);
    CHECK(verify::suite_translation().checks_run == 256);
}
