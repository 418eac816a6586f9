#pragma once

#include <cmath>
#include <tuple>
#include <vector>

#include "dik/curve.hpp"

namespace dik {

// Family y^2 = x^3 + 3u(x+1)^2 over F_q, p >= 5, u not in {0, 9/4}.
namespace tripling {

enum class Label { A1, A2, A3, B1, B2 };

inline const char* label_name(Label l) {
    switch (l) {
        case Label::A1: return "A1";
        case Label::A2: return "A2";
        case Label::A3: return "A3";
        case Label::B1: return "B1";
        case Label::B2: return "B2";
    }
    return "?";
}

inline void require_char5(const FieldSpec& F) {
    if (F.p < 5) throw std::domain_error("tripling family needs characteristic >= 5");
}

inline bool admissible(const FieldElem& u) {
    const FieldSpec& F = *u.field;
    return !u.is_zero() && u != F.from_ratio(9, 4);
}

inline void require_admissible(const FieldElem& u) {
    require_char5(*u.field);
    if (!admissible(u)) throw std::invalid_argument("tripling: u in {0, 9/4}");
}

inline CubicCurve t_curve(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    FieldElem three_u = F.from_int(3) * u;
    return {three_u, F.from_int(2) * three_u, three_u};
}

/// Short Weierstrass coefficients a_u = -2^4 3^5 u(u-2), b_u = 2^6 3^6 u(2u^2-6u+3).
inline ShortW t_short(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    FieldElem a = -F.from_int(16 * 243) * u * (u - F.from_int(2));
    FieldElem b = F.from_int(64 * 729) * u *
                  (F.from_int(2) * u * u - F.from_int(6) * u + F.from_int(3));
    return {a, b};
}

/// j = 6912 u(u-2)^3 / (4u-9).
inline FieldElem t_j(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    FieldElem um2 = u - F.from_int(2);
    return F.from_int(6912) * u * um2 * um2 * um2 / (F.from_int(4) * u - F.from_int(9));
}

/// psi(u) = 2(4u-9)/u.
inline FieldElem psi(const FieldElem& u) {
    if (u.is_zero()) throw std::invalid_argument("psi: u = 0");
    const FieldSpec& F = *u.field;
    return F.from_int(2) * (F.from_int(4) * u - F.from_int(9)) / u;
}

/// Discriminant of g_u: -12 (u(u-2)(4u-9)(2u^2-6u+3))^2.
inline FieldElem t_delta(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    FieldElem t = u * (u - F.from_int(2)) * (F.from_int(4) * u - F.from_int(9)) *
                  (F.from_int(2) * u * u - F.from_int(6) * u + F.from_int(3));
    return -F.from_int(12) * t * t;
}

inline bool in_b2(const FieldElem& u) {
    const FieldSpec& F = *u.field;
    return (F.from_int(2) * u * u - F.from_int(6) * u + F.from_int(3)).is_zero();
}

/// Z_u: the other parameters in the F_qbar-class,
/// v = -(1/3)(u - 6 - wu + 2(u-3)/w) over cube roots w of psi(u).
inline std::vector<FieldElem> z_set(const FieldElem& u) {
    require_admissible(u);
    if (t_delta(u).is_zero()) throw std::domain_error("z_set: delta_u = 0, use the special cases");
    const FieldSpec& F = *u.field;
    FieldElem pu = psi(u);
    if (pu.is_zero()) throw std::logic_error("z_set: psi(u) = 0 impossible for admissible u");
    std::vector<FieldElem> out;
    for (const FieldElem& w : F.cbrt_all(pu)) {
        FieldElem v = -F.from_ratio(1, 3) *
                      (u - F.from_int(6) - w * u + F.from_int(2) * (u - F.from_int(3)) / w);
        if (!admissible(v) || v == u) continue;
        bool dup = false;
        for (const FieldElem& x : out) dup |= (x == v);
        if (!dup) out.push_back(v);
    }
    return out;
}

/// J_u = Z_u + {u}, with the two delta_u = 0 specials.
inline std::vector<FieldElem> t_jbar_class(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    if (u == F.from_int(2)) return {u};
    if (in_b2(u)) return {u, -u + F.from_int(3)};
    std::vector<FieldElem> cls = z_set(u);
    cls.insert(cls.begin(), u);
    return cls;
}

inline Label t_label(const FieldElem& u) {
    require_admissible(u);
    const FieldSpec& F = *u.field;
    if (u == F.from_int(2)) return Label::B1;
    if (in_b2(u)) return Label::B2;
    if (F.q % 3 == 2) return Label::A2;
    return F.is_cube(psi(u)) ? Label::A3 : Label::A1;
}

struct PartitionCounts {
    uint64_t a1 = 0, a2 = 0, a3 = 0, b1 = 0, b2 = 0;
    bool operator==(const PartitionCounts&) const = default;
};

inline PartitionCounts t_partition_counts(const FieldSpec& F) {
    require_char5(F);
    PartitionCounts n;
    for (uint64_t i = 0; i < F.q; ++i) {
        FieldElem u = F.from_index(i);
        if (!admissible(u)) continue;
        switch (t_label(u)) {
            case Label::A1: ++n.a1; break;
            case Label::A2: ++n.a2; break;
            case Label::A3: ++n.a3; break;
            case Label::B1: ++n.b1; break;
            case Label::B2: ++n.b2; break;
        }
    }
    return n;
}

/// Table-1 row for r = q mod 12.
inline PartitionCounts t_partition_formula(const FieldSpec& F) {
    require_char5(F);
    uint64_t q = F.q;
    switch (q % 12) {
        case 1: return {2 * (q - 1) / 3, 0, (q - 1) / 3 - 4, 1, 2};
        case 5: return {0, q - 3, 0, 1, 0};
        case 7: return {2 * (q - 1) / 3, 0, (q - 1) / 3 - 2, 1, 0};
        case 11: return {0, q - 5, 0, 1, 2};
    }
    throw std::logic_error("t_partition_formula: impossible residue");
}

struct IsoPair {
    FieldElem u, v;
    bool degenerate;  // u == v (singleton class)
};

/// The (u, v) pair realized by a parameter w, when the character condition
/// chi2(3w(w+1)(w-2)) = 1 holds and both parameters are admissible.
inline std::optional<IsoPair> iso_pair_from_w(const FieldElem& w) {
    const FieldSpec& F = *w.field;
    require_char5(F);
    if (w.is_zero() || w == -F.one() || w == F.from_int(2))
        throw std::invalid_argument("iso_pair_from_w: w in {0, -1, 2}");
    if (w * w * w == F.from_int(8)) throw std::invalid_argument("iso_pair_from_w: w^3 = 8");
    if (F.chi2(F.from_int(3) * w * (w + F.one()) * (w - F.from_int(2))) != 1)
        return std::nullopt;
    FieldElem u = -F.from_int(18) / (w * w * w - F.from_int(8));
    FieldElem wp1 = w + F.one();
    FieldElem v = F.from_int(2) * wp1 * wp1 * wp1 /
                  (w * (w * w + F.from_int(2) * w + F.from_int(4)));
    if (!admissible(u) || !admissible(v)) return std::nullopt;
    return IsoPair{u, v, u == v};
}

struct ClassSet {
    std::vector<FieldElem> jbar_members;
    std::vector<std::vector<FieldElem>> fq_blocks;
};

/// Split the F_qbar-class of u into F_q-isomorphism blocks.
inline ClassSet t_fq_class(const FieldElem& u) {
    ClassSet cs;
    cs.jbar_members = t_jbar_class(u);
    for (const FieldElem& v : cs.jbar_members) {
        CubicCurve cv = t_curve(v);
        bool placed = false;
        for (auto& block : cs.fq_blocks) {
            if (isomorphic_fq(t_curve(block.front()), cv)) {
                block.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) cs.fq_blocks.push_back({v});
    }
    return cs;
}

/// Affine count of the genus-three curve C: Y^2 = 3X(X+1)(X-2),
/// Z^2, W^2 the zeta- and zeta^2-twisted copies.  Needs q = 1 (mod 3).
inline uint64_t N1(const FieldSpec& F) {
    require_char5(F);
    if (F.q % 3 != 1) throw std::domain_error("N1: q != 1 (mod 3)");
    FieldElem zeta = F.primitive_cube_root();
    uint64_t n = 0;
    for (uint64_t i = 0; i < F.q; ++i) {
        FieldElem x = F.from_index(i);
        uint64_t prod = 1;
        FieldElem zx = x;
        for (int j = 0; j < 3; ++j) {
            FieldElem f = F.from_int(3) * zx * (zx + F.one()) * (zx - F.from_int(2));
            prod *= 1 + F.chi2(f);
            zx = zeta * zx;
        }
        n += prod;
    }
    return n;
}

/// Projective count of the Legendre curve Y^2 = X(X-1)(X-1/3).
inline uint64_t N2(const FieldSpec& F) {
    require_char5(F);
    FieldElem third = F.from_ratio(1, 3);
    CubicCurve L{-(F.one() + third), third, F.zero()};  // x(x-1)(x-1/3) expanded
    return point_count(L);
}

/// Theorem value for the number of distinct j-invariants.
inline uint64_t t_count_jbar_formula(const FieldSpec& F) {
    require_char5(F);
    return F.q % 3 == 1 ? (3 * F.q + 1) / 4 : (F.q - 1) / 2;
}

/// Theorem value for the number of F_q-isomorphism classes, using N1 or N2.
inline uint64_t t_count_fq_formula(const FieldSpec& F) {
    require_char5(F);
    int64_t q = static_cast<int64_t>(F.q);
    int64_t num;
    if (q % 3 == 2) {
        num = 4 * (q - 1) - static_cast<int64_t>(N2(F));
        if (num % 4) throw std::logic_error("t_count_fq_formula: inexact division");
        return static_cast<uint64_t>(num / 4);
    }
    int64_t n1 = static_cast<int64_t>(N1(F));
    if (q % 24 == 1)
        num = 16 * (5 * q - 2) - (n1 - 25);
    else if (q % 24 == 13)
        num = 16 * (5 * q + 1) - (n1 - 25);
    else  // q = 7 (mod 12)
        num = 16 * 5 * (q - 1) - (n1 - 25);
    if (num % 96) throw std::logic_error("t_count_fq_formula: inexact division");
    return static_cast<uint64_t>(num / 96);
}

/// Table-2 row (formula side), using N1/N2 computed by enumeration.
inline PartitionCounts t_tilde_formula(const FieldSpec& F) {
    require_char5(F);
    uint64_t q = F.q;
    if (q % 3 == 2) return {0, (N2(F) - 4) / 2, 0, 1, 0};
    uint64_t n1 = N1(F);
    if (q % 24 == 1) return {2 * (q - 1) / 3, 0, (n1 - 25) / 24 - 2, 1, 2};
    return {2 * (q - 1) / 3, 0, (n1 - 25) / 24, 1, 0};  // 13 mod 24 and 7 mod 12
}

/// Oracle Table-2 row: count u per partition set whose class does not split.
inline PartitionCounts t_tilde_counts(const FieldSpec& F) {
    require_char5(F);
    PartitionCounts n;
    for (uint64_t i = 0; i < F.q; ++i) {
        FieldElem u = F.from_index(i);
        if (!admissible(u)) continue;
        if (t_fq_class(u).fq_blocks.size() != 1) continue;
        switch (t_label(u)) {
            case Label::A1: ++n.a1; break;
            case Label::A2: ++n.a2; break;
            case Label::A3: ++n.a3; break;
            case Label::B1: ++n.b1; break;
            case Label::B2: ++n.b2; break;
        }
    }
    return n;
}

}  // namespace tripling
}  // namespace dik
