#pragma once

// Combinatorial model of the 2-torsion group J[2] and the sixteen
// theta-characteristics of a genus-2 curve, built on subsets of the six
// Weierstrass points modulo complement.
//
// Representation: a subset of {1..6} is a 6-bit mask (bit i-1 <-> index i).
// Each class {A, A^c} is stored by the representative that avoids index 6,
// so canonical masks never have bit 5 set. Even-cardinality classes are
// 2-torsion points, odd-cardinality classes are theta-characteristics.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetamap::f2 {

inline constexpr std::uint8_t kFullMask = 0x3F; // {1,...,6}

namespace detail {

inline std::uint8_t canonicalize(std::uint8_t mask) {
    mask &= kFullMask;
    return (mask & 0x20) ? static_cast<std::uint8_t>(mask ^ kFullMask) : mask;
}

inline std::vector<int> mask_indices(std::uint8_t mask) {
    std::vector<int> out;
    for (int i = 1; i <= 6; ++i)
        if (mask & (1u << (i - 1))) out.push_back(i);
    return out;
}

// Lexicographic order on the sorted index sequence of the canonical
// representative; the empty class sorts first.
inline bool mask_lex_less(std::uint8_t a, std::uint8_t b) {
    return mask_indices(a) < mask_indices(b);
}

inline std::string mask_to_string(std::uint8_t mask) {
    std::string out;
    for (int i : mask_indices(mask)) {
        if (!out.empty()) out += ',';
        out += static_cast<char>('0' + i);
    }
    return out;
}

inline std::uint8_t parse_mask(const std::string& text) {
    if (text.empty()) return 0;
    std::uint8_t mask = 0;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '6')
            throw std::invalid_argument("bad Weierstrass index '" + tok +
                                        "' in \"" + text + "\"");
        std::uint8_t bit = 1u << (tok[0] - '1');
        if (mask & bit)
            throw std::invalid_argument("repeated index in \"" + text + "\"");
        mask |= bit;
    }
    return mask;
}

} // namespace detail

/// Label of one of the six Weierstrass points.
class WeierstrassIndex {
public:
    explicit WeierstrassIndex(int value) : value_(value) {
        if (value < 1 || value > 6)
            throw std::out_of_range("Weierstrass index must lie in 1..6");
    }
    int value() const { return value_; }
    auto operator<=>(const WeierstrassIndex&) const = default;

private:
    int value_;
};

/// Element of J[2]: an even subset of the Weierstrass points mod complement.
class TwoTorsionPoint {
public:
    TwoTorsionPoint() = default; // identity

    static TwoTorsionPoint from_indices(const std::set<int>& indices) {
        std::uint8_t mask = 0;
        for (int i : indices) {
            if (i < 1 || i > 6)
                throw std::out_of_range("Weierstrass index must lie in 1..6");
            mask |= 1u << (i - 1);
        }
        if (std::popcount(mask) % 2 != 0)
            throw std::invalid_argument(
                "2-torsion point needs an even subset of Weierstrass points");
        return TwoTorsionPoint(detail::canonicalize(mask));
    }

    static TwoTorsionPoint parse(const std::string& text) {
        std::uint8_t mask = detail::parse_mask(text);
        if (std::popcount(mask) % 2 != 0)
            throw std::invalid_argument(
                "2-torsion point needs an even subset: \"" + text + "\"");
        return TwoTorsionPoint(detail::canonicalize(mask));
    }

    bool is_identity() const { return mask_ == 0; }
    std::uint8_t mask() const { return mask_; }
    std::vector<int> indices() const { return detail::mask_indices(mask_); }
    std::string to_string() const { return detail::mask_to_string(mask_); }

    friend TwoTorsionPoint operator+(TwoTorsionPoint a, TwoTorsionPoint b) {
        return TwoTorsionPoint(detail::canonicalize(a.mask_ ^ b.mask_));
    }

    bool operator==(const TwoTorsionPoint&) const = default;
    bool operator<(const TwoTorsionPoint& o) const {
        return detail::mask_lex_less(mask_, o.mask_);
    }

private:
    explicit TwoTorsionPoint(std::uint8_t mask) : mask_(mask) {}
    friend class ThetaCharacteristic;
    std::uint8_t mask_ = 0;
};

enum class Parity { even, odd };

/// One of the sixteen theta-characteristics: an odd subset mod complement.
/// Parity is structural: the class {A, A^c} is odd iff min(|A|,|A^c|) = 1.
class ThetaCharacteristic {
public:
    static ThetaCharacteristic from_indices(const std::set<int>& indices) {
        std::uint8_t mask = 0;
        for (int i : indices) {
            if (i < 1 || i > 6)
                throw std::out_of_range("Weierstrass index must lie in 1..6");
            mask |= 1u << (i - 1);
        }
        if (std::popcount(mask) % 2 == 0)
            throw std::invalid_argument(
                "theta-characteristic needs an odd subset of Weierstrass points");
        return ThetaCharacteristic(detail::canonicalize(mask));
    }

    static ThetaCharacteristic parse(const std::string& text) {
        std::uint8_t mask = detail::parse_mask(text);
        if (std::popcount(mask) % 2 == 0)
            throw std::invalid_argument(
                "theta-characteristic needs an odd subset: \"" + text + "\"");
        return ThetaCharacteristic(detail::canonicalize(mask));
    }

    Parity parity() const {
        int n = std::popcount(mask_);
        return std::min(n, 6 - n) == 1 ? Parity::odd : Parity::even;
    }
    bool is_odd() const { return parity() == Parity::odd; }

    std::uint8_t mask() const { return mask_; }
    std::vector<int> indices() const { return detail::mask_indices(mask_); }
    std::string to_string() const { return detail::mask_to_string(mask_); }

    /// kappa * alpha, the torsor action of J[2] on theta-characteristics.
    ThetaCharacteristic twist(TwoTorsionPoint a) const {
        return ThetaCharacteristic(detail::canonicalize(mask_ ^ a.mask()));
    }

    /// kappa^{-1} * kappa' as a 2-torsion point (kappa^2 = K cancels).
    TwoTorsionPoint difference(ThetaCharacteristic other) const {
        return TwoTorsionPoint(detail::canonicalize(mask_ ^ other.mask_));
    }

    bool operator==(const ThetaCharacteristic&) const = default;
    bool operator<(const ThetaCharacteristic& o) const {
        return detail::mask_lex_less(mask_, o.mask_);
    }

private:
    explicit ThetaCharacteristic(std::uint8_t mask) : mask_(mask) {}
    std::uint8_t mask_ = 0;
};

inline TwoTorsionPoint make_two_torsion(const std::set<int>& indices) {
    return TwoTorsionPoint::from_indices(indices);
}

inline ThetaCharacteristic make_theta_char(const std::set<int>& indices) {
    return ThetaCharacteristic::from_indices(indices);
}

/// Weil pairing on J[2]: intersection parity of representatives.
/// Well-defined because all representatives of a class have even symmetric
/// difference with each other and every class has even cardinality.
inline int weil_pairing(TwoTorsionPoint a, TwoTorsionPoint b) {
    return std::popcount(static_cast<unsigned>(a.mask() & b.mask())) % 2;
}

/// All 16 two-torsion points, sorted by canonical representative.
inline const std::vector<TwoTorsionPoint>& all_two_torsion() {
    static const std::vector<TwoTorsionPoint> pts = [] {
        std::set<TwoTorsionPoint> acc;
        for (unsigned m = 0; m < 64; ++m)
            if (std::popcount(m) % 2 == 0) {
                std::set<int> idx;
                for (int i = 1; i <= 6; ++i)
                    if (m & (1u << (i - 1))) idx.insert(i);
                acc.insert(TwoTorsionPoint::from_indices(idx));
            }
        return std::vector<TwoTorsionPoint>(acc.begin(), acc.end());
    }();
    return pts;
}

/// All 16 theta-characteristics, sorted by canonical representative.
inline const std::vector<ThetaCharacteristic>& all_theta_chars() {
    static const std::vector<ThetaCharacteristic> chars = [] {
        std::set<ThetaCharacteristic> acc;
        for (unsigned m = 0; m < 64; ++m)
            if (std::popcount(m) % 2 == 1) {
                std::set<int> idx;
                for (int i = 1; i <= 6; ++i)
                    if (m & (1u << (i - 1))) idx.insert(i);
                acc.insert(ThetaCharacteristic::from_indices(idx));
            }
        return std::vector<ThetaCharacteristic>(acc.begin(), acc.end());
    }();
    return chars;
}

struct SSet {
    ThetaCharacteristic kappa;
    std::vector<TwoTorsionPoint> elements; // sorted, size 6
};

/// S(kappa) = { alpha in J[2] : kappa*alpha is odd }.
inline SSet s_set(ThetaCharacteristic kappa) {
    SSet out{kappa, {}};
    for (auto a : all_two_torsion())
        if (kappa.twist(a).is_odd()) out.elements.push_back(a);
    return out;
}

/// The 10-element complement J[2] \ S(kappa).
inline std::vector<TwoTorsionPoint> sym2_complement(ThetaCharacteristic kappa) {
    std::vector<TwoTorsionPoint> out;
    for (auto a : all_two_torsion())
        if (!kappa.twist(a).is_odd()) out.push_back(a);
    return out;
}

/// Sums a+b over unordered distinct pairs {a,b} of S(kappa); 15 sums,
/// hitting every nonzero 2-torsion point exactly once.
inline std::vector<TwoTorsionPoint> end0_pair_sums(ThetaCharacteristic kappa) {
    auto s = s_set(kappa).elements;
    std::vector<TwoTorsionPoint> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            out.push_back(s[i] + s[j]);
    std::sort(out.begin(), out.end());
    return out;
}

struct QuadraticFormTable {
    ThetaCharacteristic kappa;
    std::map<TwoTorsionPoint, int> values;
};

/// q_kappa(alpha) = parity(kappa) + parity(kappa*alpha) mod 2, with
/// parity bit 1 for odd. Quadratic refinement of the Weil pairing whose
/// Arf invariant matches the parity of kappa.
inline QuadraticFormTable quadratic_form(ThetaCharacteristic kappa) {
    QuadraticFormTable table{kappa, {}};
    int base = kappa.is_odd() ? 1 : 0;
    for (auto a : all_two_torsion())
        table.values[a] = (base + (kappa.twist(a).is_odd() ? 1 : 0)) % 2;
    return table;
}

/// S(kappa) ∩ S(kappa'), always exactly two points {gamma, delta},
/// and kappa' = kappa*gamma*delta.
inline std::pair<TwoTorsionPoint, TwoTorsionPoint>
pfaffian_intersection(ThetaCharacteristic kappa, ThetaCharacteristic kappa2) {
    if (kappa == kappa2)
        throw std::invalid_argument(
            "pfaffian_intersection needs two distinct theta-characteristics");
    auto a = s_set(kappa).elements;
    auto b = s_set(kappa2).elements;
    std::vector<TwoTorsionPoint> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.size() != 2)
        throw std::logic_error("S-set intersection is not a pair");
    return {common[0], common[1]};
}

/// For each kappa' != kappa, the direction beta with kappa*beta = kappa'.
/// The 15 values are distinct and exhaust J[2] \ {0}.
inline std::map<ThetaCharacteristic, TwoTorsionPoint>
phi_direction_map(ThetaCharacteristic kappa) {
    std::map<ThetaCharacteristic, TwoTorsionPoint> out;
    for (auto k2 : all_theta_chars())
        if (!(k2 == kappa)) out.emplace(k2, kappa.difference(k2));
    return out;
}

/// For even kappa = {T, T^c} with |T| = 3: the two Klein four-subgroups
/// {0} ∪ {pairs within T} and {0} ∪ {pairs within T^c}.
inline std::pair<std::vector<TwoTorsionPoint>, std::vector<TwoTorsionPoint>>
klein_subgroups(ThetaCharacteristic kappa) {
    if (kappa.is_odd())
        throw std::invalid_argument("klein_subgroups needs an even theta-characteristic");
    auto triple = kappa.indices();
    std::vector<int> cotriple;
    for (int i = 1; i <= 6; ++i)
        if (std::find(triple.begin(), triple.end(), i) == triple.end())
            cotriple.push_back(i);

    auto pairs_subgroup = [](const std::vector<int>& t) {
        std::vector<TwoTorsionPoint> h{TwoTorsionPoint{}};
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                h.push_back(TwoTorsionPoint::from_indices({t[i], t[j]}));
        std::sort(h.begin(), h.end());
        return h;
    };
    return {pairs_subgroup(triple), pairs_subgroup(cotriple)};
}

} // namespace thetamap::f2
