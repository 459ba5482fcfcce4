#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "ffpoly.hpp"
#include "partition.hpp"
#include "qlaurent.hpp"
#include "rational.hpp"
#include "symcomb.hpp"

namespace tgl {

/// rows[lambda][i] = <V_lambda, R_i>, the number of standard tableaux of shape
/// lambda with major index i, for 0 <= i <= binom(n, 2).
struct GradedTable {
    int n = 0;
    std::map<Partition, std::vector<Integer>> rows;

    int top_degree() const noexcept { return n * (n - 1) / 2; }

    /// dim R_i = sum_lambda dim V_lambda <V_lambda, R_i>.
    std::vector<Integer> graded_dimensions() const {
        std::vector<Integer> out(static_cast<std::size_t>(top_degree()) + 1, 0);
        for (const auto& [lambda, row] : rows) {
            const Integer dim = hook_length_dimension(lambda);
            for (std::size_t i = 0; i < row.size(); ++i) out[i] += dim * row[i];
        }
        return out;
    }

    /// {"n": n, "rows": [{"lambda": [parts], "multiplicities": ["a", ...]}, ...]}.
    nlohmann::json to_json() const {
        auto arr = nlohmann::json::array();
        for (const auto& [lambda, row] : rows) {
            auto mult = nlohmann::json::array();
            for (const auto& v : row) mult.push_back(v.get_str());
            arr.push_back({{"lambda", lambda.parts()}, {"multiplicities", mult}});
        }
        return {{"n", n}, {"rows", arr}};
    }
};

inline GradedTable build_graded_table(int n) {
    if (n < 0) fail(ErrorKind::OutOfRange, "n must be >= 0");
    GradedTable t;
    t.n = n;
    for (const auto& lambda : enumerate_partitions(n)) {
        std::vector<Integer> row(static_cast<std::size_t>(t.top_degree()) + 1, 0);
        for (const auto& tab : syt_enumerate(lambda)) ++row[static_cast<std::size_t>(tab.major_index)];
        t.rows.emplace(lambda, std::move(row));
    }
    return t;
}

/// Cached coinvariant multiplicity table of S_n.
inline const GradedTable& graded_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GradedTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GradedTable>(build_graded_table(n));
    return *slot;
}

/// <V_lambda, R_i>.
inline Integer r_multiplicity(const Partition& lambda, int i, int n) {
    if (lambda.size() != n) fail(ErrorKind::SizeMismatch, "partition " + lambda.str() + " is not of " + std::to_string(n));
    const auto& t = graded_table(n);
    if (i < 0 || i > t.top_degree()) fail(ErrorKind::OutOfRange, "degree outside 0..binom(n,2)");
    return t.rows.at(lambda)[static_cast<std::size_t>(i)];
}

/// <chi, R_i> for i = 0..binom(n,2), by decomposing chi into irreducibles.
inline std::vector<Rational> r_inner_products(const ClassFunction& chi) {
    const int n = chi.n();
    const auto& t = graded_table(n);
    std::vector<Rational> out(static_cast<std::size_t>(t.top_degree()) + 1, Rational(0));
    for (const auto& [lambda, row] : t.rows) {
        const Rational c = inner_product(chi, irreducible_character(lambda));
        if (c == 0) continue;
        for (std::size_t i = 0; i < row.size(); ++i) out[i] += c * Rational(row[i]);
    }
    return out;
}

/// sum over maximal tori T of GL_n(F_q) of chi(sigma_T), as a polynomial in q.
inline QLaurent tori_polynomial(const ClassFunction& chi) {
    const int n = chi.n();
    const auto r = r_inner_products(chi);
    QLaurent out;
    for (std::size_t i = 0; i < r.size(); ++i) out.add(static_cast<long>(n) * n - n - static_cast<long>(i), r[i]);
    return out;
}
inline Rational tori_statistic(const ClassFunction& chi, const Rational& q) { return tori_polynomial(chi).eval(q); }

/// q^{-(n^2-n)} times the tori sum of binom(X_1,2) - X_2, a polynomial in q^{-1}.
inline QLaurent tori_quadratic_excess(int n) {
    if (n < 2) fail(ErrorKind::OutOfRange, "quadratic excess needs n >= 2");
    const auto p = CharacterPolynomial::binom_X(1, 2) - CharacterPolynomial::X(2);
    return tori_polynomial(p.to_class_function(n)).shifted(-(static_cast<long>(n) * n - n));
}

/// Irreducible maximal tori: (q^{binom(n,2)} / n) prod_{j<n} (q^j - 1).
inline QLaurent pnt_tori_formula(int n) {
    if (n < 1) fail(ErrorKind::OutOfRange, "n must be >= 1");
    QLaurent out = QLaurent::monomial(n * (n - 1) / 2, make_rational(1, n));
    for (int j = 1; j < n; ++j) out *= QLaurent::monomial(j) - QLaurent(1);
    return out;
}
inline Integer pnt_tori(const Integer& q, int n) {
    const Rational v = pnt_tori_formula(n).eval(Rational(q));
    if (!is_integer(v)) fail(ErrorKind::NonRationalResult, "torus count is not an integer");
    return v.get_num();
}

/// Same count through chi_1 = (1/n) sum_k (-1)^k chi_{V_k}: V_k is the hook
/// (n-k, 1^k), whose tableaux correspond to k-subsets S of {1..n-1}, each
/// occurring as a descent set with major index sum(S).
inline QLaurent pnt_tori_hook_route(int n) {
    if (n < 1) fail(ErrorKind::OutOfRange, "n must be >= 1");
    const long top = static_cast<long>(n) * n - n;
    QLaurent out;
    for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
        int k = 0;
        long maj = 0;
        for (int b = 0; b < n - 1; ++b)
            if (s >> b & 1u) {
                ++k;
                maj += b + 1;
            }
        out.add(top - maj, make_rational(k % 2 ? -1 : 1, n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force torus enumeration for n in {2, 3}
// ---------------------------------------------------------------------------

namespace detail {

inline FqElement det(const FqContext& f, const std::vector<std::vector<FqElement>>& m) {
    if (m.size() == 2) return f.sub(f.mul(m[0][0], m[1][1]), f.mul(m[0][1], m[1][0]));
    auto minor = [&](int a, int b, int c, int d) { return f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][c], m[2][d])); };
    FqElement out = f.mul(m[0][0], minor(1, 2, 2, 1));
    out = f.sub(out, f.mul(m[0][1], minor(0, 2, 2, 0)));
    return f.add(out, f.mul(m[0][2], minor(0, 1, 1, 0)));
}

using Line = std::vector<FqElement>;

inline Line normalize(const FqContext& f, Line v) {
    std::size_t k = 0;
    while (k < v.size() && f.is_zero(v[k])) ++k;
    if (k == v.size()) fail(ErrorKind::OutOfRange, "zero vector is not a line");
    const FqElement inv = f.inv(v[k]);
    for (auto& x : v) x = f.mul(x, inv);
    return v;
}

}  // namespace detail

/// Maximal tori of GL_n(F_q), n in {2, 3}, counted per Frobenius cycle type.
/// A torus is a Frobenius-stable set of n independent lines in F_Q^n,
/// Q = q^{lcm(1..n)}; it is assembled from Frobenius orbits of lines whose
/// sizes partition n.
inline std::map<CycleType, Integer> tori_bruteforce(std::uint64_t q, int n, std::uint64_t budget = kDefaultBudget) {
    if (n != 2 && n != 3) fail(ErrorKind::Unsupported, "brute-force torus enumeration supports n = 2, 3 only");
    const auto [p, a] = split_prime_power(q);
    const int m = n == 2 ? 2 : 6;
    const FqContext big = make_field(p, a * m);
    const std::uint64_t big_q = big.q();
    std::uint64_t lines_total = 0;
    {
        std::uint64_t pw = 1;
        for (int k = 0; k < n; ++k, pw *= big_q) lines_total += pw;
        if (lines_total > budget)
            fail(ErrorKind::BudgetExceeded, std::to_string(lines_total) + " lines exceed enumeration budget " + std::to_string(budget));
    }
    auto frob = [&](const detail::Line& v) {
        detail::Line w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) w[k] = ext_frobenius(big, v[k], q);
        return detail::normalize(big, w);
    };

    // Orbits of size <= n, each stored once via its smallest member.
    std::vector<std::vector<detail::Line>> orbits;
    detail::Line v(static_cast<std::size_t>(n));
    for (int lead = 0; lead < n; ++lead) {
        // lines (0,..,0,1,*,..,*) with the 1 in position `lead`
        const int free = n - 1 - lead;
        std::uint64_t count = 1;
        for (int k = 0; k < free; ++k) count *= big_q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t r = idx;
            for (int k = 0; k < n; ++k) v[k] = big.zero();
            v[lead] = big.one();
            for (int k = lead + 1; k < n; ++k) {
                v[k] = FqElement{static_cast<std::uint32_t>(r % big_q)};
                r /= big_q;
            }
            std::vector<detail::Line> orbit{v};
            detail::Line w = frob(v);
            bool minimal = true;
            while (w != v && static_cast<int>(orbit.size()) <= n) {
                if (w < v) minimal = false;
                orbit.push_back(w);
                w = frob(w);
            }
            if (w != v || !minimal) continue;
            orbits.push_back(std::move(orbit));
        }
    }

    std::map<CycleType, Integer> out;
    auto independent = [&](const std::vector<const std::vector<detail::Line>*>& chosen) {
        std::vector<std::vector<FqElement>> rows;
        for (const auto* o : chosen)
            for (const auto& l : *o) rows.push_back(l);
        return !big.is_zero(detail::det(big, rows));
    };
    auto record = [&](const std::vector<const std::vector<detail::Line>*>& chosen) {
        if (!independent(chosen)) return;
        std::vector<int> parts;
        for (const auto* o : chosen) parts.push_back(static_cast<int>(o->size()));
        out[CycleType::from_parts(parts)] += 1;
    };
    // Unordered selections of distinct orbits whose sizes sum to n.
    std::vector<const std::vector<detail::Line>*> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            record(chosen);
            return;
        }
        for (std::size_t k = start; k < orbits.size(); ++k) {
            const int sz = static_cast<int>(orbits[k].size());
            if (sz > remaining) continue;
            chosen.push_back(&orbits[k]);
            rec(k + 1, remaining - sz);
            chosen.pop_back();
        }
    };
    rec(0, n);
    return out;
}

}  // namespace tgl
