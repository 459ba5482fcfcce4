#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "braidcoh.hpp"
#include "error.hpp"
#include "ffpoly.hpp"
#include "lseries.hpp"
#include "partition.hpp"
#include "qlaurent.hpp"
#include "rational.hpp"
#include "symcomb.hpp"

namespace tgl {

struct EnumOptions {
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultBudget;
};

/// Number of monic squarefree f of degree n over F_q with each Frobenius cycle type.
using CycleHistogram = std::map<CycleType, Integer>;

namespace detail {

inline CycleHistogram compute_histogram(const FqContext& ctx, int n, const EnumOptions& opt) {
    const std::uint64_t total = checked_monic_count(ctx, n, opt.budget);
    using Local = std::map<CycleType, std::uint64_t>;
    auto fold = [&](std::uint64_t b, std::uint64_t e) {
        Local h;
        for_each_monic(ctx, n, b, e, [&](const FqPoly& f) {
            if (!is_squarefree(ctx, f)) return;
            DegreeProfile prof;
            prof.n = n;
            prof.d = poly::distinct_degree_counts(ctx, f.coeffs());
            ++h[sigma_cycle_type(prof)];
        });
        return h;
    };
    auto merge = [](Local& a, const Local& b) {
        for (const auto& [t, c] : b) a[t] += c;
    };
    const Local local = chunked_reduce<Local>(total, opt.jobs, fold, merge);
    CycleHistogram out;
    for (const auto& [t, c] : local) out[t] = Integer(static_cast<unsigned long>(c));
    return out;
}

}  // namespace detail

/// Frobenius cycle-type histogram of Conf_n(F_q), memoized per field and degree.
inline const CycleHistogram& cycle_type_histogram(const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    checked_monic_count(ctx, n, opt.budget);
    using Key = std::tuple<std::uint32_t, int, std::vector<std::uint32_t>, int>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<CycleHistogram>> cache;
    const Key key{ctx.p(), ctx.e(), ctx.modulus(), n};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<CycleHistogram>(detail::compute_histogram(ctx, n, opt));
    std::lock_guard lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = std::move(built);
    return *slot;
}

/// Sum of chi(sigma_f) over monic squarefree f of degree n.
inline Rational lhs_conf_sum(const ClassFunction& chi, const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    if (chi.n() != n) fail(ErrorKind::SizeMismatch, "class function is not on S_" + std::to_string(n));
    Rational acc = 0;
    for (const auto& [t, c] : cycle_type_histogram(ctx, n, opt)) acc += chi(t) * Rational(c);
    return acc;
}
inline Rational lhs_conf_sum(const CharacterPolynomial& p, const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    return lhs_conf_sum(p.to_class_function(n), ctx, n, opt);
}

/// sum_i (-1)^i q^{n-i} <chi, H^i(P_n)> as a polynomial in q.
inline QLaurent rhs_conf_polynomial(const ClassFunction& chi, int n) {
    QLaurent out;
    for (int i = 0; i < n; ++i) out.add(n - i, (i % 2 ? Rational(-1) : Rational(1)) * ls_multiplicity(chi, i, n));
    return out;
}
inline Rational rhs_conf_sum(const ClassFunction& chi, const Rational& q, int n) { return rhs_conf_polynomial(chi, n).eval(q); }
inline Rational rhs_conf_sum(const CharacterPolynomial& p, const Rational& q, int n) {
    return rhs_conf_sum(p.to_class_function(n), q, n);
}

struct CountReport {
    Integer q;
    int n = 0;
    std::string chi_id;
    Rational lhs;
    Rational rhs;
    bool match = false;

    nlohmann::json to_json() const {
        return {{"q", q.get_str()}, {"n", n}, {"chi_id", chi_id}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"match", match}};
    }
};

/// Both sides of the twisted point count for Conf_n(F_q).
inline CountReport verify_gl(const ClassFunction& chi, const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    CountReport r;
    r.q = ctx.q_exact();
    r.n = n;
    r.chi_id = chi.canonical_id();
    r.lhs = lhs_conf_sum(chi, ctx, n, opt);
    r.rhs = rhs_conf_sum(chi, Rational(r.q), n);
    r.match = r.lhs == r.rhs;
    return r;
}

/// |Conf_n(F_q)| = q^n - q^{n-1} for n >= 2.
inline Integer conf_count(const Integer& q, int n) {
    if (n < 2) fail(ErrorKind::OutOfRange, "the squarefree count formula needs n >= 2");
    return ipow(q, static_cast<unsigned long>(n)) - ipow(q, static_cast<unsigned long>(n - 1));
}

/// Mean of chi over Conf_n(F_q).
inline Rational expected_statistic(const ClassFunction& chi, const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    return lhs_conf_sum(chi, ctx, n, opt) / Rational(conf_count(ctx.q_exact(), n));
}

/// Solves sum_i (-1)^i a_i q^{n-i} = lhs(q) for a_0..a_n from brute-force counts.
/// The first n+1 fields determine the solution; any further ones must agree with it.
inline std::vector<Rational> fit_multiplicities(const ClassFunction& chi, int n, const std::vector<std::uint64_t>& qs,
                                                const EnumOptions& opt = {}) {
    const std::size_t k = static_cast<std::size_t>(n) + 1;
    if (qs.size() < k) fail(ErrorKind::SingularSystem, "need at least n+1 field sizes");
    for (std::size_t a = 0; a < qs.size(); ++a)
        for (std::size_t b = a + 1; b < qs.size(); ++b)
            if (qs[a] == qs[b]) fail(ErrorKind::SingularSystem, "field sizes must be distinct");

    std::vector<Rational> values;
    for (auto q : qs) values.push_back(lhs_conf_sum(chi, make_field_of_order(q), n, opt));

    auto row = [&](std::size_t r) {
        std::vector<Rational> out(k + 1);
        const Rational q(static_cast<unsigned long>(qs[r]));
        for (std::size_t i = 0; i < k; ++i) out[i] = (i % 2 ? Rational(-1) : Rational(1)) * rpow(q, n - static_cast<long>(i));
        out[k] = values[r];
        return out;
    };
    std::vector<std::vector<Rational>> m;
    for (std::size_t r = 0; r < k; ++r) m.push_back(row(r));
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && m[piv][c] == 0) ++piv;
        if (piv == k) fail(ErrorKind::SingularSystem, "point-count system is singular");
        std::swap(m[c], m[piv]);
        const Rational inv = Rational(1) / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = c; j <= k; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = m[i][k];
    for (std::size_t r = k; r < qs.size(); ++r) {
        const auto extra = row(r);
        Rational acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += extra[i] * a[i];
        if (acc != extra[k])
            fail(ErrorKind::InconsistentSystem, "count at q=" + std::to_string(qs[r]) + " disagrees with the fitted multiplicities");
    }
    return a;
}

// ---------------------------------------------------------------------------
// Prime number theorem for F_q[T]
// ---------------------------------------------------------------------------

/// Number-theoretic Moebius function.
inline int moebius(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::OutOfRange, "moebius(0)");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

/// sum_{l | n} mu(n/l) q^l / n.
inline Integer irreducible_count_formula(const Integer& q, int n) {
    if (n < 1) fail(ErrorKind::BadDegree, "degree must be >= 1");
    Integer acc = 0;
    for (int l = 1; l <= n; ++l)
        if (n % l == 0) acc += moebius(static_cast<std::uint64_t>(n / l)) * ipow(q, static_cast<unsigned long>(l));
    return acc / n;
}

/// Monic irreducibles of degree n, counted as squarefree f whose Frobenius is an n-cycle.
inline Integer irreducible_count_bruteforce(const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    const auto& h = cycle_type_histogram(ctx, n, opt);
    auto it = h.find(CycleType::long_cycle(n));
    return it == h.end() ? Integer(0) : it->second;
}

/// Phi(n, k): squarefree f of degree n with no irreducible factor of degree < n/k.
inline Integer phi_nk(const FqContext& ctx, int n, int k, const EnumOptions& opt = {}) {
    if (k < 1) fail(ErrorKind::OutOfRange, "k must be >= 1");
    const auto chi = chi_k(n, k);
    Integer acc = 0;
    for (const auto& [t, c] : cycle_type_histogram(ctx, n, opt))
        if (chi(t) != 0) acc += c;
    return acc;
}

/// pi(n, k): proportion of S_n whose cycles all have length >= n/k.
inline Rational pi_nk(int n, int k) {
    if (k < 1) fail(ErrorKind::OutOfRange, "k must be >= 1");
    return inner_product(chi_k(n, k), trivial_character(n));
}

/// 2 p(n) q^{n - ceil(n/2k)} q/(q-1): bound on |Phi(n,k) - pi(n,k) q^n| assembled
/// from the vanishing window 0 < i < n/2k and the partition-count bound.
inline Rational phi_pi_bound(const Integer& q, int n, int k) {
    const int i0 = std::max(1, (n + 2 * k - 1) / (2 * k));
    const Rational qr(q);
    return Rational(2) * Rational(partition_count(n)) * rpow(qr, n - i0) * qr / (qr - 1);
}

/// D_q(n): squarefree f of degree n whose irreducible factors have distinct degrees.
inline Integer distinct_degree_count(const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    const auto chi = chi_distinct(n);
    Integer acc = 0;
    for (const auto& [t, c] : cycle_type_histogram(ctx, n, opt))
        if (chi(t) != 0) acc += c;
    return acc;
}

/// <chi_distinct, H^i(P_n)> for i = 0..n-1.
inline std::vector<Rational> distinct_degree_multiplicities(int n) {
    const auto chi = chi_distinct(n);
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) out.push_back(ls_multiplicity(chi, i, n));
    return out;
}

/// Squarefree f of degree n with f(0) != 0 and gcd(f(T), f(-T)) = 1: the F_q-points
/// of the complement of the type-B braid arrangement, up to the T -> T^2 substitution.
inline Integer bn_type_count(const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    if (ctx.p() == 2) fail(ErrorKind::CharTwo, "the type-B count needs odd characteristic");
    const std::uint64_t total = checked_monic_count(ctx, n, opt.budget);
    auto fold = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t count = 0;
        for_each_monic(ctx, n, b, e, [&](const FqPoly& f) {
            if (ctx.is_zero(f[0]) || !is_squarefree(ctx, f)) return;
            std::vector<FqElement> g = f.coeffs();
            for (std::size_t i = 1; i < g.size(); i += 2) g[i] = ctx.neg(g[i]);
            if (poly::degree<FqContext>(poly::gcd(ctx, f.coeffs(), g)) == 0) ++count;
        });
        return count;
    };
    auto merge = [](std::uint64_t& a, std::uint64_t b) { a += b; };
    return Integer(static_cast<unsigned long>(chunked_reduce<std::uint64_t>(total, opt.jobs, fold, merge)));
}

// ---------------------------------------------------------------------------
// Convergence to the stable value
// ---------------------------------------------------------------------------

/// Character polynomial weighted by a series tag.
inline CharacterPolynomial series_statistic(SeriesTag tag) {
    using CP = CharacterPolynomial;
    switch (tag) {
        case SeriesTag::X1: return CP::X(1);
        case SeriesTag::X2: return CP::X(2);
        case SeriesTag::BinomX1_2: return CP::binom_X(1, 2);
        case SeriesTag::PQuad: return CP::binom_X(1, 2) - CP::X(2);
    }
    fail(ErrorKind::Unsupported, "unknown series tag");
}

/// sum_i (-1)^i q^{-i} <P, H^i(PConf(C))> = (1 - 1/q) * residue_ratio, at a given q.
inline Rational stable_limit(SeriesTag tag, const Rational& q) {
    return (Rational(1) - Rational(1) / q) * residue_ratio(tag).eval(q);
}

/// |E_n[P] (1 - 1/q) - stable limit| for the statistic of the tag.
inline Rational convergence_gap(SeriesTag tag, const FqContext& ctx, int n, const EnumOptions& opt = {}) {
    const Rational q(ctx.q_exact());
    const auto chi = series_statistic(tag).to_class_function(n);
    return abs(expected_statistic(chi, ctx, n, opt) * (Rational(1) - Rational(1) / q) - stable_limit(tag, q));
}

/// True when gap <= c q^{(deg P - n)/2}, compared exactly after squaring.
inline bool within_power_saving(const Rational& gap, const Rational& c, const Rational& q, int deg_p, int n) {
    return gap * gap <= c * c * rpow(q, deg_p - n);
}

}  // namespace tgl
