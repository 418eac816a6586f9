#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dik {

// Residue polynomials modulo a fixed monic irreducible; degree capped so a
// field element fits in a small inline array (3^12 < 10^6, the default bound).
inline constexpr int kMaxDegree = 12;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// One element of F_q, coefficients constant-term-first, each in [0, p).
struct FieldElem {
    std::array<uint32_t, kMaxDegree> c{};
    const FieldSpec* field = nullptr;

    bool operator==(const FieldElem& o) const { return field == o.field && c == o.c; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    bool is_zero() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem pow(uint64_t e) const;
    FieldElem square() const { return *this * *this; }
};

/// A concrete finite field F_q, q = p^k with p an odd prime.  Immutable;
/// square/cube lookup tables are built once at construction.
class FieldSpec {
  public:
    uint64_t p;
    int k;
    uint64_t q;                      // p^k
    std::vector<uint64_t> modulus;   // k+1 coefficients, constant term first, monic

    static FieldPtr make(uint64_t p, int k, uint64_t bound = 1'000'000);

    // --- element construction -------------------------------------------

    FieldElem zero() const { return element({}); }
    FieldElem one() const { return from_int(1); }

    FieldElem from_int(int64_t n) const {
        FieldElem e;
        e.field = this;
        int64_t r = n % static_cast<int64_t>(p);
        if (r < 0) r += static_cast<int64_t>(p);
        e.c[0] = static_cast<uint32_t>(r);
        return e;
    }

    FieldElem from_ratio(int64_t num, int64_t den) const {
        FieldElem d = from_int(den);
        if (d.is_zero()) throw std::invalid_argument("from_ratio: denominator divisible by p");
        return from_int(num) * d.inv();
    }

    FieldElem element(std::vector<uint64_t> coeffs) const {
        if (static_cast<int>(coeffs.size()) > k)
            throw std::invalid_argument("element: too many coefficients");
        FieldElem e;
        e.field = this;
        for (size_t i = 0; i < coeffs.size(); ++i)
            e.c[i] = static_cast<uint32_t>(coeffs[i] % p);
        return e;
    }

    // --- canonical enumeration ------------------------------------------

    /// Rank of an element: sum c_i p^i.  The enumeration order is ascending
    /// rank, so 0 comes first and 1 second.
    uint64_t index_of(const FieldElem& e) const {
        uint64_t idx = 0, pw = 1;
        for (int i = 0; i < k; ++i, pw *= p) idx += e.c[i] * pw;
        return idx;
    }

    FieldElem from_index(uint64_t idx) const {
        if (idx >= q) throw std::invalid_argument("from_index: out of range");
        FieldElem e;
        e.field = this;
        for (int i = 0; i < k; ++i) {
            e.c[i] = static_cast<uint32_t>(idx % p);
            idx /= p;
        }
        return e;
    }

    std::vector<FieldElem> enumerate() const {
        std::vector<FieldElem> all;
        all.reserve(q);
        for (uint64_t i = 0; i < q; ++i) all.push_back(from_index(i));
        return all;
    }

    // --- characters and roots -------------------------------------------

    /// chi2: 0 on 0, +1 on nonzero squares, -1 otherwise.
    int chi2(const FieldElem& x) const {
        check(x);
        return chi2_table_[index_of(x)];
    }

    bool is_cube(const FieldElem& x) const {
        check(x);
        if (x.is_zero()) throw std::invalid_argument("is_cube: zero input");
        if (q % 3 != 1) return true;  // chi3 principal when q != 1 mod 3
        return cbrt_table_[index_of(x)] != kNoRoot;
    }

    std::vector<FieldElem> sqrt_all(const FieldElem& x) const {
        check(x);
        uint32_t r = sqrt_table_[index_of(x)];
        if (r == kNoRoot) return {};
        FieldElem root = from_index(r);
        if (root.is_zero()) return {root};
        FieldElem other = -root;
        if (other == root) return {root};
        return sorted(root, other);
    }

    std::vector<FieldElem> cbrt_all(const FieldElem& x) const {
        check(x);
        uint32_t r = cbrt_table_[index_of(x)];
        if (r == kNoRoot) return {};
        FieldElem root = from_index(r);
        if (root.is_zero() || q % 3 != 1) return {root};
        FieldElem z = from_index(zeta_index_);
        FieldElem r2 = root * z, r3 = r2 * z;
        std::vector<FieldElem> out = {root, r2, r3};
        sort_by_index(out);
        return out;
    }

    /// Nontrivial cube root of unity; requires q = 1 (mod 3).
    FieldElem primitive_cube_root() const {
        if (q % 3 != 1)
            throw std::domain_error("primitive_cube_root: q != 1 (mod 3)");
        return from_index(zeta_index_);
    }

    void check(const FieldElem& e) const {
        if (e.field != this) throw std::invalid_argument("element from a different field");
    }

  private:
    static constexpr uint32_t kNoRoot = UINT32_MAX;
    std::vector<int8_t> chi2_table_;
    std::vector<uint32_t> sqrt_table_;   // smallest-rank root of y^2 = x, or kNoRoot
    std::vector<uint32_t> cbrt_table_;   // smallest-rank root of y^3 = x, or kNoRoot
    uint64_t zeta_index_ = 0;            // valid iff q = 1 (mod 3)

    friend struct FieldElem;

    // Reduction rows: X^(k+i) mod modulus, i in [0, k-1].
    std::array<std::array<uint64_t, kMaxDegree>, kMaxDegree> red_{};

    std::vector<FieldElem> sorted(const FieldElem& a, const FieldElem& b) const {
        if (index_of(a) <= index_of(b)) return {a, b};
        return {b, a};
    }
    void sort_by_index(std::vector<FieldElem>& v) const {
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (index_of(v[j]) < index_of(v[i])) std::swap(v[i], v[j]);
    }

    void build_tables();
    FieldSpec() = default;
};

// ---------------------------------------------------------------------------
// element arithmetic

inline bool FieldElem::is_zero() const {
    for (int i = 0; i < kMaxDegree; ++i)
        if (c[i]) return false;
    return true;
}

inline FieldElem FieldElem::operator+(const FieldElem& o) const {
    field->check(o);
    FieldElem r;
    r.field = field;
    const uint64_t p = field->p;
    for (int i = 0; i < field->k; ++i) {
        uint64_t s = uint64_t(c[i]) + o.c[i];
        r.c[i] = static_cast<uint32_t>(s >= p ? s - p : s);
    }
    return r;
}

inline FieldElem FieldElem::operator-(const FieldElem& o) const {
    field->check(o);
    FieldElem r;
    r.field = field;
    const uint64_t p = field->p;
    for (int i = 0; i < field->k; ++i) {
        uint64_t s = uint64_t(c[i]) + p - o.c[i];
        r.c[i] = static_cast<uint32_t>(s >= p ? s - p : s);
    }
    return r;
}

inline FieldElem FieldElem::operator-() const {
    FieldElem r;
    r.field = field;
    const uint64_t p = field->p;
    for (int i = 0; i < field->k; ++i)
        r.c[i] = static_cast<uint32_t>(c[i] ? p - c[i] : 0);
    return r;
}

inline FieldElem FieldElem::operator*(const FieldElem& o) const {
    field->check(o);
    const uint64_t p = field->p;
    const int k = field->k;
    FieldElem r;
    r.field = field;
    if (k == 1) {
        r.c[0] = static_cast<uint32_t>((uint64_t(c[0]) * o.c[0]) % p);
        return r;
    }
    uint64_t acc[2 * kMaxDegree - 1] = {};
    for (int i = 0; i < k; ++i) {
        if (!c[i]) continue;
        for (int j = 0; j < k; ++j)
            acc[i + j] += uint64_t(c[i]) * o.c[j];
    }
    // fold X^(k+i) terms using the precomputed reduction rows
    for (int i = 2 * k - 2; i >= k; --i) {
        uint64_t hi = acc[i] % p;
        if (!hi) continue;
        const auto& row = field->red_[i - k];
        for (int j = 0; j < k; ++j) acc[j] += hi * row[j];
    }
    for (int j = 0; j < k; ++j) r.c[j] = static_cast<uint32_t>(acc[j] % p);
    return r;
}

inline FieldElem FieldElem::pow(uint64_t e) const {
    FieldElem base = *this;
    FieldElem r = field->one();
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::invalid_argument("inversion of zero");
    return pow(field->q - 2);
}

inline FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

// ---------------------------------------------------------------------------
// field construction

namespace detail {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p, used only to pick the modulus.
using Poly = std::vector<uint64_t>;  // constant term first, no trailing zeros

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // f is monic of degree deg
    size_t deg = f.size() - 1;
    for (size_t i = prod.size(); i-- > deg;) {
        uint64_t hi = prod[i];
        if (!hi) continue;
        prod[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            prod[i - deg + j] = (prod[i - deg + j] + hi * (p - f[j] % p)) % p;
    }
    prod.resize(deg);
    return poly_trim(prod);
}

inline Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
    a = poly_trim(std::move(a));
    size_t deg = f.size() - 1;
    while (a.size() > deg) {
        uint64_t hi = a.back();
        a.pop_back();
        if (!hi) continue;
        for (size_t j = 0; j < deg; ++j)
            a[a.size() - deg + j] = (a[a.size() - deg + j] + hi * (p - f[j] % p)) % p;
        a = poly_trim(std::move(a));
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    auto inv_mod = [p](uint64_t x) {
        // p prime
        uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // make b monic, then reduce a mod b
        uint64_t lc = inv_mod(b.back());
        Poly bm = b;
        for (auto& x : bm) x = x * lc % p;
        Poly r = poly_mod(a, bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return a;
}

inline bool is_irreducible(const Poly& f, uint64_t p) {
    size_t k = f.size() - 1;
    // X^(p^k) = X mod f, and gcd(X^(p^(k/l)) - X, f) = 1 for prime l | k
    Poly x = {0, 1};
    Poly h = x;
    std::vector<size_t> proper;  // k/l for each prime divisor l of k
    size_t kk = k;
    for (size_t l = 2; l * l <= kk; ++l)
        if (kk % l == 0) {
            proper.push_back(k / l);
            while (kk % l == 0) kk /= l;
        }
    if (kk > 1) proper.push_back(k / kk);
    for (size_t i = 1; i <= k; ++i) {
        h = poly_powmod(h, p, f, p);
        bool is_proper = false;
        for (size_t m : proper) is_proper |= (i == m);
        if (is_proper) {
            Poly d = h;
            // d - X
            if (d.size() < 2) d.resize(2, 0);
            d[1] = (d[1] + p - 1) % p;
            d = poly_trim(std::move(d));
            Poly g = poly_gcd(f, d, p);
            if (g.size() != 1) return false;
        }
    }
    return h == x;
}

}  // namespace detail

inline FieldPtr FieldSpec::make(uint64_t p, int k, uint64_t bound) {
    if (p < 3 || p % 2 == 0 || !detail::is_prime_u64(p))
        throw std::invalid_argument("make_field: p must be an odd prime");
    if (k < 1 || k > kMaxDegree) throw std::invalid_argument("make_field: bad extension degree");
    uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > bound / p) throw std::invalid_argument("make_field: q exceeds bound");
        q *= p;
    }
    if (q > bound) throw std::invalid_argument("make_field: q exceeds bound");

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p = p;
    spec->k = k;
    spec->q = q;

    if (k == 1) {
        spec->modulus = {0, 1};  // elements are plain residues mod p
    } else {
        // lexicographically smallest monic irreducible, constant term compared first
        uint64_t n_low = 1;
        for (int i = 0; i < k; ++i) n_low *= p;
        detail::Poly f(k + 1, 0);
        f[k] = 1;
        bool found = false;
        for (uint64_t idx = 0; idx < n_low && !found; ++idx) {
            uint64_t t = idx;
            for (int i = 0; i < k; ++i) {
                f[i] = t % p;
                t /= p;
            }
            if (detail::is_irreducible(f, p)) found = true;
        }
        if (!found) throw std::logic_error("make_field: no irreducible polynomial found");
        spec->modulus = f;
    }

    // reduction rows X^(k+i) mod modulus
    if (k > 1) {
        std::array<uint64_t, kMaxDegree> row{};
        for (int j = 0; j < k; ++j) row[j] = (p - spec->modulus[j] % p) % p;  // X^k
        spec->red_[0] = row;
        for (int i = 1; i < k; ++i) {
            std::array<uint64_t, kMaxDegree> next{};
            uint64_t hi = row[k - 1];
            for (int j = k - 1; j > 0; --j) next[j] = row[j - 1];
            next[0] = 0;
            if (hi)
                for (int j = 0; j < k; ++j)
                    next[j] = (next[j] + hi * spec->red_[0][j]) % p;
            spec->red_[i] = next;
            row = next;
        }
    }

    spec->build_tables();
    return spec;
}

inline void FieldSpec::build_tables() {
    chi2_table_.assign(q, -1);
    sqrt_table_.assign(q, kNoRoot);
    cbrt_table_.assign(q, kNoRoot);
    for (uint64_t i = 0; i < q; ++i) {
        FieldElem x = from_index(i);
        uint64_t s = index_of(x * x);
        uint64_t cu = index_of(x * x * x);
        if (sqrt_table_[s] == kNoRoot) sqrt_table_[s] = static_cast<uint32_t>(i);
        if (cbrt_table_[cu] == kNoRoot) cbrt_table_[cu] = static_cast<uint32_t>(i);
        if (i) chi2_table_[s] = 1;
    }
    chi2_table_[0] = 0;
    if (q % 3 == 1) {
        for (uint64_t i = 2; i < q; ++i) {
            FieldElem z = from_index(i);
            if (z * z * z == one()) {
                zeta_index_ = i;
                break;
            }
        }
    }
}

}  // namespace dik
