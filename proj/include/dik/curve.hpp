#pragma once

#include <optional>

#include "dik/field.hpp"

namespace dik {

struct IsoWitness {
    FieldElem alpha;  // nonzero
    FieldElem r;      // map (x, y) -> (alpha^2 x + r, alpha^3 y)
};

/// y^2 = x^3 + a2 x^2 + a4 x + a6 over a field of characteristic >= 3.
struct CubicCurve {
    FieldElem a2, a4, a6;

    const FieldSpec& field() const { return *a2.field; }
};

/// y^2 = x^3 + a x + b, characteristic >= 5.
struct ShortW {
    FieldElem a, b;
};

inline FieldElem discriminant(const CubicCurve& c) {
    const FieldSpec& F = c.field();
    FieldElem b2 = F.from_int(4) * c.a2;
    FieldElem b4 = F.from_int(2) * c.a4;
    FieldElem b6 = F.from_int(4) * c.a6;
    FieldElem b8 = F.from_int(4) * c.a2 * c.a6 - c.a4 * c.a4;
    return -(b2 * b2 * b8) - F.from_int(8) * b4 * b4 * b4 - F.from_int(27) * b6 * b6 +
           F.from_int(9) * b2 * b4 * b6;
}

inline bool is_nonsingular(const CubicCurve& c) { return !discriminant(c).is_zero(); }

inline FieldElem j_invariant(const CubicCurve& c) {
    FieldElem d = discriminant(c);
    if (d.is_zero()) throw std::domain_error("j_invariant: singular curve");
    const FieldSpec& F = c.field();
    FieldElem b2 = F.from_int(4) * c.a2;
    FieldElem b4 = F.from_int(2) * c.a4;
    FieldElem num = b2 * b2 - F.from_int(24) * b4;
    return num * num * num / d;
}

/// Complete the cube: x -> x - a2/3.  Characteristic >= 5 only.
inline ShortW to_short(const CubicCurve& c) {
    const FieldSpec& F = c.field();
    if (F.p == 3) throw std::domain_error("to_short: characteristic 3");
    FieldElem third = F.from_ratio(1, 3);
    FieldElem a = c.a4 - c.a2 * c.a2 * third;
    FieldElem b = c.a6 - c.a2 * c.a4 * third +
                  F.from_ratio(2, 27) * c.a2 * c.a2 * c.a2;
    return {a, b};
}

inline bool isomorphic_fqbar(const CubicCurve& c1, const CubicCurve& c2) {
    return j_invariant(c1) == j_invariant(c2);
}

namespace detail {

// Does the witness (alpha, r) carry c1 onto c2?
inline bool witness_ok(const CubicCurve& c1, const CubicCurve& c2, const FieldElem& alpha,
                       const FieldElem& r) {
    const FieldSpec& F = c1.field();
    FieldElem a2q = alpha * alpha;
    FieldElem a4q = a2q * a2q;
    FieldElem a6q = a4q * a2q;
    FieldElem three = F.from_int(3);
    if (c2.a2 * a2q != c1.a2 + three * r) return false;
    if (c2.a4 * a4q != three * r * r + F.from_int(2) * c1.a2 * r + c1.a4) return false;
    return c2.a6 * a6q == r * r * r + c1.a2 * r * r + c1.a4 * r + c1.a6;
}

// Composition of witnesses c -> c' -> c''.
inline IsoWitness compose(const IsoWitness& w1, const IsoWitness& w2) {
    return {w1.alpha * w2.alpha, w1.r + w2.r * w1.alpha * w1.alpha};
}

// First alpha in enumeration order with alpha^n = t, or nullopt.
inline std::optional<FieldElem> nth_root_scan(const FieldSpec& F, const FieldElem& t, uint64_t n) {
    for (uint64_t i = 1; i < F.q; ++i) {
        FieldElem a = F.from_index(i);
        if (a.pow(n) == t) return a;
    }
    return std::nullopt;
}

}  // namespace detail

/// F_q-isomorphism decision with witness.  Structured test: short-form
/// criterion for p >= 5, a2-normalization for p = 3 (needs a2 != 0 on both
/// sides, which holds for every doubling-family curve).
inline std::optional<IsoWitness> isomorphic_fq(const CubicCurve& c1, const CubicCurve& c2) {
    const FieldSpec& F = c1.field();
    F.check(c2.a2);
    if (!is_nonsingular(c1) || !is_nonsingular(c2))
        throw std::domain_error("isomorphic_fq: singular curve");

    if (F.p == 3) {
        if (c1.a2.is_zero() || c2.a2.is_zero())
            throw std::domain_error("isomorphic_fq: char-3 curve with a2 = 0 unsupported");
        FieldElem lam = c1.a2 / c2.a2;  // forced alpha^2
        if (F.chi2(lam) != 1) return std::nullopt;
        FieldElem r = -(c2.a4 * lam * lam - c1.a4) / c1.a2;
        if (c2.a6 * lam * lam * lam != r * r * r + c1.a2 * r * r + c1.a4 * r + c1.a6)
            return std::nullopt;
        FieldElem alpha = F.sqrt_all(lam)[0];
        IsoWitness w{alpha, r};
        if (!detail::witness_ok(c1, c2, w.alpha, w.r))
            throw std::logic_error("isomorphic_fq: invalid char-3 witness");
        return w;
    }

    if (j_invariant(c1) != j_invariant(c2)) return std::nullopt;
    ShortW s1 = to_short(c1), s2 = to_short(c2);
    FieldElem third = F.from_ratio(1, 3);

    // witness for the short-form step: alpha with s2 = image of s1, i.e.
    // s2.a * alpha^4 = s1.a and s2.b * alpha^6 = s1.b
    std::optional<FieldElem> alpha;
    if (s1.a.is_zero()) {
        // j = 0; need a sixth root of b1/b2
        FieldElem t = s1.b / s2.b;
        uint64_t e = (F.q - 1) / std::gcd<uint64_t>(6, F.q - 1);
        if (t.pow(e) != F.one()) return std::nullopt;
        alpha = detail::nth_root_scan(F, t, 6);
    } else if (s1.b.is_zero()) {
        // j = 1728; need a fourth root of a1/a2
        FieldElem t = s1.a / s2.a;
        uint64_t e = (F.q - 1) / std::gcd<uint64_t>(4, F.q - 1);
        if (t.pow(e) != F.one()) return std::nullopt;
        alpha = detail::nth_root_scan(F, t, 4);
    } else {
        // lambda = 1/alpha^2 if an isomorphism exists
        FieldElem lam = (s2.b / s1.b) * (s1.a / s2.a);
        if (lam * lam * s1.a != s2.a) return std::nullopt;
        if (F.chi2(lam) != 1) return std::nullopt;
        alpha = F.sqrt_all(lam)[0].inv();
    }
    if (!alpha) return std::nullopt;

    IsoWitness w = detail::compose(
        detail::compose(IsoWitness{F.one(), -c1.a2 * third},   // c1 -> s1
                        IsoWitness{*alpha, F.zero()}),         // s1 -> s2
        IsoWitness{F.one(), c2.a2 * third});                   // s2 -> c2
    if (!detail::witness_ok(c1, c2, w.alpha, w.r))
        throw std::logic_error("isomorphic_fq: invalid witness");
    return w;
}

/// Reference oracle: try every (alpha, r) in F_q* x F_q against the
/// substitution identities.  O(q^2) per pair.
inline std::optional<IsoWitness> brute_force_iso(const CubicCurve& c1, const CubicCurve& c2,
                                                 uint64_t bound = 512) {
    const FieldSpec& F = c1.field();
    if (F.q > bound) throw std::invalid_argument("brute_force_iso: q above oracle bound");
    FieldElem three = F.from_int(3);
    FieldElem two = F.from_int(2);
    for (uint64_t ia = 1; ia < F.q; ++ia) {
        FieldElem alpha = F.from_index(ia);
        FieldElem a2q = alpha * alpha;
        FieldElem a4q = a2q * a2q;
        FieldElem a6q = a4q * a2q;
        FieldElem lhs2 = c2.a2 * a2q;
        FieldElem lhs4 = c2.a4 * a4q;
        FieldElem lhs6 = c2.a6 * a6q;
        for (uint64_t ir = 0; ir < F.q; ++ir) {
            FieldElem r = F.from_index(ir);
            if (lhs2 != c1.a2 + three * r) continue;
            if (lhs4 != three * r * r + two * c1.a2 * r + c1.a4) continue;
            if (lhs6 != r * r * r + c1.a2 * r * r + c1.a4 * r + c1.a6) continue;
            return IsoWitness{alpha, r};
        }
    }
    return std::nullopt;
}

/// Number of distinct (alpha, r) carrying c1 onto c2.
inline uint64_t count_isomorphisms(const CubicCurve& c1, const CubicCurve& c2,
                                   uint64_t bound = 512) {
    const FieldSpec& F = c1.field();
    if (F.q > bound) throw std::invalid_argument("count_isomorphisms: q above bound");
    uint64_t n = 0;
    for (uint64_t ia = 1; ia < F.q; ++ia) {
        FieldElem alpha = F.from_index(ia);
        for (uint64_t ir = 0; ir < F.q; ++ir) {
            FieldElem r = F.from_index(ir);
            if (detail::witness_ok(c1, c2, alpha, r)) ++n;
        }
    }
    return n;
}

/// Projective point count: 1 + sum over x of (1 + chi2(f(x))).
inline uint64_t point_count(const CubicCurve& c) {
    const FieldSpec& F = c.field();
    uint64_t n = 1;
    for (uint64_t i = 0; i < F.q; ++i) {
        FieldElem x = F.from_index(i);
        FieldElem fx = ((x + c.a2) * x + c.a4) * x + c.a6;
        n += 1 + F.chi2(fx);
    }
    return n;
}

/// Twist by a non-square d: (a2, a4, a6) -> (d a2, d^2 a4, d^3 a6).
inline CubicCurve quadratic_twist(const CubicCurve& c, const FieldElem& d) {
    const FieldSpec& F = c.field();
    if (F.chi2(d) != -1) throw std::invalid_argument("quadratic_twist: d must be a non-square");
    return {d * c.a2, d * d * c.a4, d * d * d * c.a6};
}

}  // namespace dik
