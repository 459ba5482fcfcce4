#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace tgl {

// ---------------------------------------------------------------------------
// Dense univariate polynomial arithmetic over any field type F exposing
//   Element, zero(), one(), add, sub, neg, mul, inv, is_zero, order().
// Coefficients are stored lowest degree first with no trailing zeros, so the
// zero polynomial is the empty vector.
// ---------------------------------------------------------------------------
namespace poly {

template <class F>
using Coeffs = std::vector<typename F::Element>;

template <class F>
void trim(const F& field, Coeffs<F>& a) {
    while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

template <class F>
int degree(const Coeffs<F>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class F>
Coeffs<F> add(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
    Coeffs<F> out(std::max(a.size(), b.size()), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = field.add(out[i], b[i]);
    trim(field, out);
    return out;
}

template <class F>
Coeffs<F> sub(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
    Coeffs<F> out(std::max(a.size(), b.size()), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = field.sub(out[i], b[i]);
    trim(field, out);
    return out;
}

template <class F>
Coeffs<F> mul(const F& field, const Coeffs<F>& a, const Coeffs<F>& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs<F> out(a.size() + b.size() - 1, field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (field.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
    trim(field, out);
    return out;
}

template <class F>
Coeffs<F> scale(const F& field, const Coeffs<F>& a, typename F::Element c) {
    Coeffs<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.mul(a[i], c);
    trim(field, out);
    return out;
}

/// In-place remainder a mod b, b nonzero.
template <class F>
void rem_inplace(const F& field, Coeffs<F>& a, const Coeffs<F>& b) {
    if (b.empty()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    const auto lead_inv = field.inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const auto c = field.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = field.sub(a[shift + i], field.mul(c, b[i]));
        trim(field, a);
    }
}

template <class F>
Coeffs<F> rem(const F& field, Coeffs<F> a, const Coeffs<F>& b) {
    rem_inplace(field, a, b);
    return a;
}

/// Quotient and remainder.
template <class F>
std::pair<Coeffs<F>, Coeffs<F>> divmod(const F& field, Coeffs<F> a, const Coeffs<F>& b) {
    if (b.empty()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (a.size() < b.size()) return {Coeffs<F>{}, std::move(a)};
    Coeffs<F> quo(a.size() - b.size() + 1, field.zero());
    const auto lead_inv = field.inv(b.back());
    while (a.size() >= b.size()) {
        const auto c = field.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = field.sub(a[shift + i], field.mul(c, b[i]));
        trim(field, a);
    }
    trim(field, quo);
    return {std::move(quo), std::move(a)};
}

template <class F>
Coeffs<F> make_monic(const F& field, const Coeffs<F>& a) {
    if (a.empty()) return a;
    return scale(field, a, field.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Coeffs<F> gcd(const F& field, Coeffs<F> a, Coeffs<F> b) {
    while (!b.empty()) {
        rem_inplace(field, a, b);
        std::swap(a, b);
    }
    return make_monic(field, a);
}

template <class F>
Coeffs<F> derivative(const F& field, const Coeffs<F>& a) {
    if (a.size() <= 1) return {};
    Coeffs<F> out(a.size() - 1, field.zero());
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = field.mul(field.from_int(static_cast<long>(i)), a[i]);
    trim(field, out);
    return out;
}

/// base^e mod m by square-and-multiply.
template <class F>
Coeffs<F> powmod(const F& field, Coeffs<F> base, std::uint64_t e, const Coeffs<F>& m) {
    Coeffs<F> result{field.one()};
    rem_inplace(field, result, m);
    rem_inplace(field, base, m);
    while (e) {
        if (e & 1u) result = rem(field, mul(field, result, base), m);
        e >>= 1u;
        if (e) base = rem(field, mul(field, base, base), m);
    }
    return result;
}

template <class F>
typename F::Element eval(const F& field, const Coeffs<F>& a, typename F::Element x) {
    auto acc = field.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = field.add(field.mul(acc, x), a[i]);
    return acc;
}

/// Degree profile of a monic squarefree polynomial over a field of the given order:
/// d[i] = number of irreducible factors of degree i (index 0 unused).
template <class F>
std::vector<int> distinct_degree_counts(const F& field, const Coeffs<F>& f) {
    const int n = degree<F>(f);
    std::vector<int> d(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    if (n <= 0) return d;
    const Coeffs<F> x{field.zero(), field.one()};
    Coeffs<F> rest = f;
    Coeffs<F> h = rem(field, x, rest);
    for (int i = 1; 2 * i <= degree<F>(rest); ++i) {
        h = powmod(field, h, field.order(), rest);
        const Coeffs<F> g = gcd(field, sub(field, h, x), rest);
        const int dg = degree<F>(g);
        if (dg > 0) {
            d[i] = dg / i;
            rest = divmod(field, rest, g).first;
            rem_inplace(field, h, rest);
        }
    }
    if (degree<F>(rest) > 0) d[degree<F>(rest)] += 1;
    return d;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// Deterministic trial-division primality test (inputs here are small).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Splits q = p^e, or returns {0, 0} when q is not a prime power.
inline std::pair<std::uint64_t, int> split_prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    const auto ps = prime_factors(q);
    if (ps.size() != 1) return {0, 0};
    int e = 0;
    for (std::uint64_t m = q; m > 1; m /= ps[0]) ++e;
    return {ps[0], e};
}

class PrimeField {
   public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }

    std::uint64_t order() const noexcept { return p_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    bool is_zero(Element a) const noexcept { return a == 0; }
    Element add(Element a, Element b) const noexcept { return static_cast<Element>((a + b) % p_); }
    Element sub(Element a, Element b) const noexcept { return static_cast<Element>((a + p_ - b) % p_); }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept {
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Element pow(Element a, std::uint64_t e) const noexcept {
        Element r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1u;
        }
        return r;
    }
    Element inv(Element a) const {
        if (a == 0) fail(ErrorKind::OutOfRange, "inverse of zero");
        return pow(a, p_ - 2);
    }
    Element from_int(long v) const noexcept {
        const long m = static_cast<long>(p_);
        return static_cast<Element>(((v % m) + m) % m);
    }

   private:
    std::uint32_t p_;
};

/// True iff the monic polynomial m over F_p is irreducible: its distinct-degree
/// profile is a single factor of full degree.
inline bool is_irreducible_mod_p(const PrimeField& fp, const std::vector<std::uint32_t>& m) {
    const int e = poly::degree<PrimeField>(m);
    if (e < 1) return false;
    if (e == 1) return true;
    const auto dd = poly::gcd(fp, m, poly::derivative(fp, m));
    if (poly::degree<PrimeField>(dd) > 0) return false;
    const auto d = poly::distinct_degree_counts(fp, m);
    return d[e] == 1;
}

// ---------------------------------------------------------------------------
// F_q = F_p[x]/(modulus)
// ---------------------------------------------------------------------------

/// Element of F_q. The value packs the e residues mod p as base-p digits,
/// coefficient of x^k in digit k, so it is canonical by construction.
struct FqElement {
    std::uint32_t value = 0;
    auto operator<=>(const FqElement&) const = default;
};

class FqContext {
   public:
    using Element = FqElement;

    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

    std::uint32_t p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    std::uint64_t order() const noexcept { return q_; }
    std::uint64_t q() const noexcept { return q_; }
    Integer q_exact() const { return ipow(Integer(static_cast<unsigned long>(p_)), static_cast<unsigned long>(e_)); }
    /// Monic modulus over F_p, lowest degree first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return {0}; }
    Element one() const noexcept { return {1}; }
    bool is_zero(Element a) const noexcept { return a.value == 0; }

    Element add(Element a, Element b) const noexcept {
        if (e_ == 1) return {(a.value + b.value) % p_};
        if (p_ == 2) return {a.value ^ b.value};
        std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
        for (int k = 0; k < e_; ++k) {
            out += ((x % p_ + y % p_) % p_) * scale;
            x /= p_;
            y /= p_;
            scale *= p_;
        }
        return {out};
    }
    Element neg(Element a) const noexcept {
        if (e_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
        if (p_ == 2) return a;
        std::uint32_t out = 0, scale = 1, x = a.value;
        for (int k = 0; k < e_; ++k) {
            const std::uint32_t d = x % p_;
            out += (d == 0 ? 0 : p_ - d) * scale;
            x /= p_;
            scale *= p_;
        }
        return {out};
    }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (a.value == 0 || b.value == 0) return {0};
        const auto& t = *tables_;
        return {t.exp[(t.log[a.value] + t.log[b.value]) % (q_ - 1)]};
    }
    Element inv(Element a) const {
        if (a.value == 0) fail(ErrorKind::OutOfRange, "inverse of zero in F_q");
        const auto& t = *tables_;
        return {t.exp[(q_ - 1 - t.log[a.value]) % (q_ - 1)]};
    }
    Element pow(Element a, std::uint64_t k) const noexcept {
        if (k == 0) return one();
        if (a.value == 0) return zero();
        const auto& t = *tables_;
        const std::uint64_t ex = (static_cast<std::uint64_t>(t.log[a.value]) * (k % (q_ - 1))) % (q_ - 1);
        return {t.exp[ex]};
    }
    /// Image of an integer under Z -> F_p -> F_q.
    Element from_int(long v) const noexcept {
        const long m = static_cast<long>(p_);
        return {static_cast<std::uint32_t>(((v % m) + m) % m)};
    }
    Element from_coeffs(const std::vector<std::uint32_t>& residues) const {
        if (residues.size() > static_cast<std::size_t>(e_)) fail(ErrorKind::OutOfRange, "too many residues for F_q element");
        std::uint32_t v = 0, scale = 1;
        for (std::uint32_t r : residues) {
            if (r >= p_) fail(ErrorKind::OutOfRange, "residue out of range");
            v += r * scale;
            scale *= p_;
        }
        return {v};
    }
    std::vector<std::uint32_t> coeffs(Element a) const {
        std::vector<std::uint32_t> out(e_, 0);
        for (int k = 0; k < e_; ++k) {
            out[k] = a.value % p_;
            a.value /= p_;
        }
        return out;
    }
    /// The class of x in F_p[x]/(modulus); equals p when e = 1.
    Element generator() const noexcept { return e_ == 1 ? Element{0} : Element{p_}; }
    /// A fixed primitive element (generator of F_q^*).
    Element primitive() const noexcept { return {tables_->exp[q_ > 2 ? 1 : 0]}; }

    bool same_field(const FqContext& o) const noexcept { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }

    friend FqContext make_field(std::uint64_t p, int e);

   private:
    struct Tables {
        std::vector<std::uint32_t> exp;  // exp[k] = g^k, k < q-1
        std::vector<std::uint32_t> log;  // log[exp[k]] = k
    };

    FqContext() = default;

    std::uint32_t p_ = 0;
    int e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

namespace detail {

// Multiplication of packed elements via polynomial arithmetic mod the modulus;
// used only while building the log tables.
inline std::uint32_t slow_mul(const PrimeField& fp, const std::vector<std::uint32_t>& modulus, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = fp.characteristic();
    std::vector<std::uint32_t> pa, pb;
    for (; a; a /= p) pa.push_back(a % p);
    for (; b; b /= p) pb.push_back(b % p);
    poly::trim(fp, pa);
    poly::trim(fp, pb);
    auto prod = poly::rem(fp, poly::mul(fp, pa, pb), modulus);
    std::uint32_t v = 0, scale = 1;
    for (std::uint32_t c : prod) {
        v += c * scale;
        scale *= p;
    }
    return v;
}

}  // namespace detail

/// F_{p^e} with the lexicographically smallest monic irreducible modulus, comparing
/// coefficients from the top down.
inline FqContext make_field(std::uint64_t p, int e) {
    if (e < 1) fail(ErrorKind::BadDegree, "extension degree must be >= 1, got " + std::to_string(e));
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (int k = 0; k < e; ++k) {
        q *= p;
        if (q > FqContext::kMaxOrder) fail(ErrorKind::FieldTooLarge, "field order exceeds 2^24");
    }
    const PrimeField fp(static_cast<std::uint32_t>(p));

    FqContext ctx;
    ctx.p_ = static_cast<std::uint32_t>(p);
    ctx.e_ = e;
    ctx.q_ = q;

    // Scan monic degree-e polynomials in increasing order of their lower coefficients
    // read as a base-p number with the x^{e-1} coefficient most significant.
    bool found = false;
    for (std::uint64_t c = 0; c < q && !found; ++c) {
        std::vector<std::uint32_t> m(e + 1, 0);
        std::uint64_t v = c;
        for (int k = 0; k < e; ++k) {
            m[k] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        m[e] = 1;
        if (is_irreducible_mod_p(fp, m)) {
            ctx.modulus_ = std::move(m);
            found = true;
        }
    }
    if (!found) fail(ErrorKind::BadDegree, "no irreducible polynomial found");

    // Find a primitive element and build exp/log tables.
    auto tables = std::make_shared<FqContext::Tables>();
    const std::uint64_t group = q - 1;
    const auto factors = prime_factors(group);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
        std::uint32_t r = 1;
        while (k) {
            if (k & 1u) r = detail::slow_mul(fp, ctx.modulus_, r, a);
            a = detail::slow_mul(fp, ctx.modulus_, a, a);
            k >>= 1u;
        }
        return r;
    };
    std::uint32_t g = 1;
    if (q > 2) {
        for (std::uint32_t cand = 2; cand < q; ++cand) {
            bool primitive = true;
            for (auto r : factors)
                if (slow_pow(cand, group / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                g = cand;
                break;
            }
        }
    }
    tables->exp.resize(group);
    tables->log.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
        tables->exp[k] = cur;
        tables->log[cur] = static_cast<std::uint32_t>(k);
        cur = detail::slow_mul(fp, ctx.modulus_, cur, g);
    }
    ctx.tables_ = std::move(tables);
    return ctx;
}

/// Builds F_q from a prime power q.
inline FqContext make_field_of_order(std::uint64_t q) {
    const auto [p, e] = split_prime_power(q);
    if (p == 0) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return make_field(p, e);
}

/// x^q in the field ctx_big, which must have characteristic dividing q.
inline FqElement ext_frobenius(const FqContext& ctx_big, FqElement x, std::uint64_t q) { return ctx_big.pow(x, q); }

// ---------------------------------------------------------------------------
// Polynomials over F_q
// ---------------------------------------------------------------------------

class FqPoly {
   public:
    FqPoly() = default;
    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit FqPoly(std::vector<FqElement> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
    }
    /// From small integer coefficients, mapped through Z -> F_p.
    static FqPoly from_ints(const FqContext& ctx, const std::vector<long>& cs) {
        std::vector<FqElement> v;
        for (long c : cs) v.push_back(ctx.from_int(c));
        return FqPoly(std::move(v));
    }

    const std::vector<FqElement>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().value == 1; }
    FqElement operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElement{}; }

    auto operator<=>(const FqPoly&) const = default;

   private:
    std::vector<FqElement> coeffs_;
};

inline FqPoly mul(const FqContext& ctx, const FqPoly& a, const FqPoly& b) { return FqPoly(poly::mul(ctx, a.coeffs(), b.coeffs())); }
inline FqPoly gcd(const FqContext& ctx, const FqPoly& a, const FqPoly& b) { return FqPoly(poly::gcd(ctx, a.coeffs(), b.coeffs())); }
inline FqPoly derivative(const FqContext& ctx, const FqPoly& a) { return FqPoly(poly::derivative(ctx, a.coeffs())); }

/// d[i] = number of irreducible factors of degree i, i >= 1.
struct DegreeProfile {
    std::vector<int> d;  // d[0] unused
    int n = 0;

    int count(int i) const noexcept { return (i >= 1 && static_cast<std::size_t>(i) < d.size()) ? d[i] : 0; }
    bool valid() const noexcept {
        int s = 0;
        for (std::size_t i = 1; i < d.size(); ++i) {
            if (d[i] < 0) return false;
            s += static_cast<int>(i) * d[i];
        }
        return s == n;
    }
    auto operator<=>(const DegreeProfile&) const = default;
};

/// gcd(f, f') constant. When f' = 0 and deg f > 0, f is a p-th power and not squarefree.
inline bool is_squarefree(const FqContext& ctx, const FqPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "is_squarefree of the zero polynomial");
    if (f.degree() == 0) return true;
    const auto df = poly::derivative(ctx, f.coeffs());
    if (df.empty()) return false;
    return poly::degree<FqContext>(poly::gcd(ctx, f.coeffs(), df)) == 0;
}

inline DegreeProfile degree_profile(const FqContext& ctx, const FqPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "degree_profile of the zero polynomial");
    if (!f.is_monic()) fail(ErrorKind::NotMonic, "degree_profile requires a monic polynomial");
    if (!is_squarefree(ctx, f)) fail(ErrorKind::NotSquarefree, "degree_profile requires a squarefree polynomial");
    DegreeProfile out;
    out.n = f.degree();
    out.d = poly::distinct_degree_counts(ctx, f.coeffs());
    return out;
}

/// Frobenius acts on the roots with one i-cycle per degree-i factor.
inline CycleType sigma_cycle_type(const DegreeProfile& profile) {
    std::vector<int> counts(profile.d.size() > 1 ? profile.d.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < profile.d.size(); ++i) counts[i - 1] = profile.d[i];
    return CycleType(std::move(counts));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// q^n as an exact integer.
inline Integer monic_count(const FqContext& ctx, int n) { return ipow(ctx.q_exact(), static_cast<unsigned long>(n)); }

/// Decodes counter value idx into the monic degree-n polynomial whose lower
/// coefficients are the little-endian base-q digits of idx.
inline FqPoly monic_from_index(const FqContext& ctx, int n, std::uint64_t idx) {
    std::vector<FqElement> c(n + 1);
    for (int k = 0; k < n; ++k) {
        c[k] = FqElement{static_cast<std::uint32_t>(idx % ctx.q())};
        idx /= ctx.q();
    }
    c[n] = ctx.one();
    return FqPoly(std::move(c));
}

/// Visits monic degree-n polynomials with counter values in [begin, end), in order.
template <class Fn>
void for_each_monic(const FqContext& ctx, int n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    if (begin >= end) return;
    std::vector<FqElement> c(n + 1);
    std::uint64_t idx = begin;
    for (int k = 0; k < n; ++k) {
        c[k] = FqElement{static_cast<std::uint32_t>(idx % ctx.q())};
        idx /= ctx.q();
    }
    c[n] = ctx.one();
    FqPoly f(c);
    for (std::uint64_t i = begin; i < end; ++i) {
        fn(static_cast<const FqPoly&>(f));
        // little-endian base-q increment
        for (int k = 0; k < n; ++k) {
            if (++c[k].value < ctx.q()) break;
            c[k].value = 0;
        }
        f = FqPoly(c);
    }
}

/// Total number of monic degree-n polynomials as a machine integer; fails if it
/// exceeds the budget.
inline std::uint64_t checked_monic_count(const FqContext& ctx, int n, std::uint64_t budget) {
    if (n < 1) fail(ErrorKind::BadDegree, "degree must be >= 1");
    const Integer total = monic_count(ctx, n);
    if (total > Integer(static_cast<unsigned long>(budget)))
        fail(ErrorKind::BudgetExceeded, "q^n = " + total.get_str() + " exceeds enumeration budget " + std::to_string(budget));
    return total.get_ui();
}

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Visits every monic polynomial of degree n in little-endian base-q counter order.
template <class Fn>
void enumerate_monic(const FqContext& ctx, int n, Fn&& fn, std::uint64_t budget = kDefaultBudget) {
    const std::uint64_t total = checked_monic_count(ctx, n, budget);
    for_each_monic(ctx, n, 0, total, std::forward<Fn>(fn));
}

/// Visits the monic squarefree polynomials of degree n, same order as enumerate_monic.
template <class Fn>
void enumerate_squarefree(const FqContext& ctx, int n, Fn&& fn, std::uint64_t budget = kDefaultBudget) {
    enumerate_monic(
        ctx, n,
        [&](const FqPoly& f) {
            if (is_squarefree(ctx, f)) fn(f);
        },
        budget);
}

/// Splits [0, total) into `jobs` contiguous chunks and folds each on its own thread.
/// `fold(begin, end)` returns a partial accumulator; `merge` must be associative and
/// commutative so the result does not depend on the chunking.
template <class Acc, class Fold, class Merge>
Acc chunked_reduce(std::uint64_t total, unsigned jobs, Fold fold, Merge merge) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2 * jobs) return fold(std::uint64_t{0}, total);
    std::vector<Acc> partial(jobs);
    std::vector<std::thread> threads;
    const std::uint64_t step = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t b = std::min<std::uint64_t>(total, j * step);
        const std::uint64_t e = std::min<std::uint64_t>(total, b + step);
        threads.emplace_back([&, j, b, e] { partial[j] = fold(b, e); });
    }
    for (auto& t : threads) t.join();
    Acc out = std::move(partial[0]);
    for (unsigned j = 1; j < jobs; ++j) merge(out, partial[j]);
    return out;
}

}  // namespace tgl
