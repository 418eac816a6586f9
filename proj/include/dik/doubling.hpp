#pragma once

#include <vector>

#include "dik/curve.hpp"

namespace dik {

// Family y^2 = x^3 + ux^2 + 16ux over F_q, p >= 3, u not in {0, 64}.
namespace doubling {

inline void require_char3(const FieldSpec& F) {
    if (F.p < 3) throw std::domain_error("doubling family needs characteristic >= 3");
}

inline bool admissible(const FieldElem& u) {
    const FieldSpec& F = *u.field;
    return !u.is_zero() && u != F.from_int(64);
}

inline void require_admissible(const FieldElem& u) {
    require_char3(*u.field);
    if (!admissible(u)) throw std::invalid_argument("doubling: u in {0, 64}");
}

inline CubicCurve d_curve(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    return {u, F.from_int(16) * u, F.zero()};
}

/// j = (u-48)^3 / (u-64), valid in every characteristic >= 3.
inline FieldElem d_j(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    FieldElem t = u - F.from_int(48);
    return t * t * t / (u - F.from_int(64));
}

/// g_u(V) = (u-64)V^2 + (u^2-208u+9216)V + (-64u^2+9216u-331776).
struct Quadratic {
    FieldElem lead, lin, cst;
};

inline Quadratic g_u_poly(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    return {u - F.from_int(64),
            u * u - F.from_int(208) * u + F.from_int(9216),
            -F.from_int(64) * u * u + F.from_int(9216) * u - F.from_int(331776)};
}

/// Discriminant of g_u, in the closed form u(u-64)(u-48)^2.
inline FieldElem d_delta(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    FieldElem t = u - F.from_int(48);
    return u * (u - F.from_int(64)) * t * t;
}

/// J_u: {u} plus the admissible F_q-roots of g_u.
inline std::vector<FieldElem> d_jbar_class(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    Quadratic g = g_u_poly(u);
    std::vector<FieldElem> cls = {u};
    FieldElem disc = g.lin * g.lin - F.from_int(4) * g.lead * g.cst;
    FieldElem half = F.from_ratio(1, 2);
    for (const FieldElem& w : F.sqrt_all(disc)) {
        FieldElem v = (-g.lin + w) * half / g.lead;
        if (!admissible(v) || v == u) continue;
        bool dup = false;
        for (const FieldElem& x : cls) dup |= (x == v);
        if (!dup) cls.push_back(v);
    }
    return cls;
}

/// Number of F_qbar-classes of size three (closed form).
inline uint64_t c3_formula(const FieldSpec& F) {
    require_char3(F);
    uint64_t q = F.q;
    switch (q % 3) {
        case 0: return (q - 3) / 6;
        case 1: return (q - 7) / 6;
        default: return (q - 5) / 6;
    }
}

inline uint64_t c1_formula(const FieldSpec& F) { return F.q - 2 - 3 * c3_formula(F); }

/// Theorem value for the number of distinct j-invariants.
inline uint64_t d_count_jbar_formula(const FieldSpec& F) {
    require_char3(F);
    uint64_t q = F.q;
    switch (q % 3) {
        case 0: return (2 * q - 3) / 3;
        case 1: return (2 * q + 1) / 3;
        default: return (2 * q - 1) / 3;
    }
}

struct AlphaSolution {
    FieldElem a_squared, b, u, v;
    bool fq_isomorphic;  // chi2(a^2) = +1
};

/// u = -b^2/(b+16), a^2 = b(b+32)/(32(b+24)), v = (u+3b)/a^2.
inline std::optional<AlphaSolution> lemma_alpha_pair(const FieldElem& b) {
    const FieldSpec& F = *b.field;
    require_char3(F);
    if (b.is_zero() || b == F.from_int(-16) || b == F.from_int(-24) || b == F.from_int(-32))
        throw std::invalid_argument("lemma_alpha_pair: excluded b");
    FieldElem u = -b * b / (b + F.from_int(16));
    FieldElem a2 = b * (b + F.from_int(32)) / (F.from_int(32) * (b + F.from_int(24)));
    if (a2.is_zero()) return std::nullopt;
    FieldElem v = (u + F.from_int(3) * b) / a2;
    if (!admissible(u) || !admissible(v)) return std::nullopt;
    return AlphaSolution{a2, b, u, v, F.chi2(a2) == 1};
}

/// Affine count of gamma: a'^2 = b'(b'+1)(b'+3/4) for p > 3,
/// a^2 = -b + 1 for p = 3.
inline uint64_t gamma_affine_count(const FieldSpec& F) {
    require_char3(F);
    uint64_t n = 0;
    for (uint64_t i = 0; i < F.q; ++i) {
        FieldElem b = F.from_index(i);
        FieldElem rhs = F.p == 3
                            ? F.one() - b
                            : b * (b + F.one()) * (b + F.from_ratio(3, 4));
        n += 1 + F.chi2(rhs);
    }
    return n;
}

/// Rational points of the exceptional set, from the character expression.
inline uint64_t exceptional_count(const FieldSpec& F) {
    require_char3(F);
    int m1 = F.chi2(F.from_int(-1));
    if (F.p == 3) return 3 + (m1 == 1 ? 2 : 0);
    int m3 = F.chi2(F.from_int(-3));
    return 3 + (m1 == 1 ? 4 : 0) + (m3 == 1 ? 4 : 0);
}

inline uint64_t n_q_direct(const FieldSpec& F) {
    return gamma_affine_count(F) - exceptional_count(F);
}

/// The per-residue closed form for n_q.
inline uint64_t n_q_closed(const FieldSpec& F) {
    require_char3(F);
    uint64_t q = F.q;
    if (F.p == 3) return F.k % 2 == 0 ? q - 5 : q - 3;
    uint64_t g = gamma_affine_count(F);
    switch (q % 12) {
        case 1: return g - 11;
        case 5:
        case 7: return g - 7;
        default: return g - 3;  // 11 mod 12
    }
}

inline uint64_t nbar(const FieldSpec& F) { return 12 * c3_formula(F); }

/// Projective count of L: Y^2 = X(X+1)(X+3/4); only defined for p >= 5.
inline uint64_t N_L(const FieldSpec& F) {
    if (F.p == 3) throw std::domain_error("N_L: needs p >= 5");
    FieldElem tq = F.from_ratio(3, 4);
    CubicCurve L{F.one() + tq, tq, F.zero()};
    return point_count(L);
}

/// Theorem value for the number of F_q-isomorphism classes.
inline uint64_t d_count_fq_formula(const FieldSpec& F) {
    require_char3(F);
    int64_t q = static_cast<int64_t>(F.q);
    int64_t num;
    if (F.p == 3) {
        num = F.k % 2 == 0 ? 19 * q - 27 : 19 * q - 33;
        if (num % 24) throw std::logic_error("d_count_fq_formula: inexact division");
        return static_cast<uint64_t>(num / 24);
    }
    int64_t n = static_cast<int64_t>(N_L(F));
    switch (q % 12) {
        case 1: num = 2 * (11 * q + 1) - 3 * n; break;
        case 5: num = 2 * (11 * q - 7) - 3 * n; break;
        case 7: num = 2 * (11 * q - 5) - 3 * n; break;
        default: num = 2 * (11 * q - 13) - 3 * n; break;
    }
    if (num % 24) throw std::logic_error("d_count_fq_formula: inexact division");
    return static_cast<uint64_t>(num / 24);
}

}  // namespace doubling
}  // namespace dik
