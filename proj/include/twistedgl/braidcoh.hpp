#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "symcomb.hpp"

namespace tgl {

/// One wreath factor Z/j ≀ S_m of a centralizer: a permutation of the m
/// j-cycles and a twist in Z/j for each of them.
struct WreathBlock {
    int j = 1;
    std::vector<int> perm;   // perm[k] = image of cycle k, 0-based
    std::vector<int> twist;  // values in [0, j)
};

/// Element of Z(c_mu) = prod_j Z/j ≀ S_{mu_j}, one block per j with mu_j > 0,
/// in increasing order of j.
struct CentralizerElement {
    std::vector<WreathBlock> blocks;

    static CentralizerElement identity(const CycleType& mu) {
        CentralizerElement g;
        for (int j = 1; j <= mu.max_length(); ++j) {
            const int m = mu.count(j);
            if (m == 0) continue;
            WreathBlock b{j, std::vector<int>(m), std::vector<int>(m, 0)};
            std::iota(b.perm.begin(), b.perm.end(), 0);
            g.blocks.push_back(std::move(b));
        }
        return g;
    }
};

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int parity = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
            seen[k] = 1;
            ++len;
        }
        parity += len - 1;
    }
    return parity % 2 ? -1 : 1;
}

inline void check_element(const CycleType& mu, const CentralizerElement& g) {
    std::size_t b = 0;
    for (int j = 1; j <= mu.max_length(); ++j) {
        const int m = mu.count(j);
        if (m == 0) continue;
        if (b >= g.blocks.size() || g.blocks[b].j != j || g.blocks[b].perm.size() != static_cast<std::size_t>(m) ||
            g.blocks[b].twist.size() != static_cast<std::size_t>(m))
            fail(ErrorKind::SizeMismatch, "centralizer element does not match cycle type " + mu.str());
        ++b;
    }
    if (b != g.blocks.size()) fail(ErrorKind::SizeMismatch, "centralizer element has extra blocks");
}

}  // namespace detail

/// Order M of the roots of unity needed for xi_mu: lcm over j with mu_j > 0
/// of j (j odd) or 2j (j even).
inline int xi_root_order(const CycleType& mu) {
    int m = 1;
    for (int j = 1; j <= mu.max_length(); ++j)
        if (mu.count(j) > 0) m = std::lcm(m, j % 2 ? j : 2 * j);
    return m;
}

/// eta_j = (-1)^{j+1} zeta_j written as zeta_M^k; M must be a multiple of xi_root_order.
inline int eta_exponent(int j, int m) { return (m / j + (j % 2 ? 0 : m / 2)) % m; }

/// The one-dimensional character xi_mu of Z(c_mu) evaluated at g.
inline Cyclotomic xi_value(const CycleType& mu, const CentralizerElement& g) {
    detail::check_element(mu, g);
    const int m = xi_root_order(mu);
    long exponent = 0;
    int sign = 1;
    for (const auto& b : g.blocks) {
        long t = 0;
        for (int a : b.twist) t += a;
        exponent += t * eta_exponent(b.j, m);
        if (b.j % 2 == 0) sign *= detail::permutation_sign(b.perm);
    }
    return Cyclotomic::monomial(m, exponent, Rational(sign));
}

/// Cycle type of g regarded as a permutation of the n points moved by c_mu.
inline CycleType wreath_image_cycle_type(const CycleType& mu, const CentralizerElement& g) {
    detail::check_element(mu, g);
    std::vector<int> parts;
    for (const auto& b : g.blocks) {
        std::vector<char> seen(b.perm.size(), 0);
        for (std::size_t s = 0; s < b.perm.size(); ++s) {
            if (seen[s]) continue;
            int len = 0, t = 0;
            for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(b.perm[k])) {
                seen[k] = 1;
                ++len;
                t = (t + b.twist[k]) % b.j;
            }
            const int c = std::gcd(b.j, t);
            for (int r = 0; r < c; ++r) parts.push_back(len * b.j / c);
        }
    }
    return CycleType::from_parts(parts);
}

/// Visits every element of Z(c_mu) exactly once (z_mu elements in total).
inline void for_each_centralizer_element(const CycleType& mu, const std::function<void(const CentralizerElement&)>& fn) {
    CentralizerElement g = CentralizerElement::identity(mu);
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == g.blocks.size()) {
            fn(g);
            return;
        }
        auto& blk = g.blocks[b];
        std::iota(blk.perm.begin(), blk.perm.end(), 0);
        do {
            std::fill(blk.twist.begin(), blk.twist.end(), 0);
            while (true) {
                rec(b + 1);
                std::size_t k = 0;
                while (k < blk.twist.size() && ++blk.twist[k] == blk.j) blk.twist[k++] = 0;
                if (k == blk.twist.size()) break;
            }
        } while (std::next_permutation(blk.perm.begin(), blk.perm.end()));
    };
    rec(0);
}

/// <chi, Ind_{Z(c_mu)}^{S_n} xi_mu> by summing over every centralizer element.
inline Rational ls_contribution_direct(const ClassFunction& chi, const CycleType& mu) {
    if (chi.n() != mu.n()) fail(ErrorKind::SizeMismatch, "class function and cycle type sizes differ");
    Cyclotomic acc(xi_root_order(mu));
    for_each_centralizer_element(mu, [&](const CentralizerElement& g) {
        const Rational& v = chi(wreath_image_cycle_type(mu, g));
        if (v != 0) acc += xi_value(mu, g).conj() * v;
    });
    return acc.to_rational() / Rational(z_mu(mu));
}

/// Same as ls_multiplicity, evaluated by direct centralizer enumeration.
inline Rational ls_multiplicity_direct(const ClassFunction& chi, int i, int n) {
    if (chi.n() != n) fail(ErrorKind::SizeMismatch, "class function is not on S_" + std::to_string(n));
    Rational total = 0;
    for (const auto& mu : ClassIndex::of(n).types())
        if (mu.num_cycles() == n - i) total += ls_contribution_direct(chi, mu);
    return total;
}

/// Induced-character tables for H^*(P_n): per_mu[a][b] is the coefficient of
/// chi(nu_b) in <chi, Ind xi_{mu_a}>, and weights[i] sums per_mu over the
/// classes with n - i cycles. Indices follow ClassIndex::of(n).
struct LSTables {
    int n = 0;
    std::vector<std::vector<Rational>> per_mu;
    std::vector<std::vector<Rational>> weights;
};

namespace detail {

using CycleSum = std::map<CycleType, Cyclotomic>;

inline CycleSum multiply(const CycleSum& a, const CycleSum& b) {
    CycleSum out;
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b) {
            auto prod = ca * cb;
            auto [it, inserted] = out.emplace(ta + tb, prod);
            if (!inserted) it->second += prod;
        }
    return out;
}

inline void accumulate(CycleSum& into, const CycleSum& part, const Rational& scale) {
    for (const auto& [t, c] : part) {
        auto v = c * scale;
        auto [it, inserted] = into.emplace(t, v);
        if (!inserted) it->second += v;
    }
}

/// Sum over Z(c_mu) of conj(xi_mu(g)) [image type of g], grouped by image type.
/// Twists along a tau-cycle of length l only matter through their total t,
/// which takes each value in Z/j exactly j^{l-1} times.
inline CycleSum centralizer_image_sum(const CycleType& mu) {
    const int m_root = xi_root_order(mu);
    CycleSum acc{{CycleType{}, Cyclotomic::rational(m_root, 1)}};
    for (int j = 1; j <= mu.max_length(); ++j) {
        const int m = mu.count(j);
        if (m == 0) continue;
        const int e = eta_exponent(j, m_root);
        std::vector<CycleSum> f(m + 1);
        for (int l = 1; l <= m; ++l) {
            const Rational weight(ipow(Integer(j), static_cast<unsigned long>(l - 1)));
            for (int t = 0; t < j; ++t) {
                const int c = std::gcd(j, t);
                std::vector<int> counts(l * j / c, 0);
                counts.back() = c;
                auto term = Cyclotomic::monomial(m_root, -static_cast<long>(t) * e, weight);
                auto [it, inserted] = f[l].emplace(CycleType(std::move(counts)), term);
                if (!inserted) it->second += term;
            }
        }
        CycleSum g;
        for (const auto& rho : ClassIndex::of(m).types()) {
            CycleSum prod{{CycleType{}, Cyclotomic::rational(m_root, 1)}};
            for (int l : rho.parts()) prod = multiply(prod, f[l]);
            Rational scale(class_size(rho));
            if (j % 2 == 0) scale *= rho.sign();
            accumulate(g, prod, scale);
        }
        acc = multiply(acc, g);
    }
    return acc;
}

inline LSTables build_ls_tables(int n) {
    const auto& idx = ClassIndex::of(n);
    LSTables t;
    t.n = n;
    t.per_mu.assign(idx.size(), std::vector<Rational>(idx.size(), Rational(0)));
    t.weights.assign(static_cast<std::size_t>(n), std::vector<Rational>(idx.size(), Rational(0)));
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const auto& mu = idx.type(a);
        const Rational inv_z = Rational(1) / Rational(z_mu(mu));
        for (const auto& [nu, c] : centralizer_image_sum(mu)) {
            const auto b = idx.index(nu);
            t.per_mu[a][b] = c.to_rational() * inv_z;
        }
        auto& w = t.weights[static_cast<std::size_t>(n - mu.num_cycles())];
        for (std::size_t b = 0; b < idx.size(); ++b) w[b] += t.per_mu[a][b];
    }
    return t;
}

}  // namespace detail

/// Cached induced-character tables for S_n, n >= 1.
inline const LSTables& ls_tables(int n) {
    if (n < 1) fail(ErrorKind::OutOfRange, "braid cohomology needs n >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<LSTables>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<LSTables>(detail::build_ls_tables(n));
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::move(built);
    return *slot;
}

/// <chi, Ind_{Z(c_mu)}^{S_n} xi_mu> from the cached tables.
inline Rational ls_contribution(const ClassFunction& chi, const CycleType& mu) {
    if (chi.n() != mu.n()) fail(ErrorKind::SizeMismatch, "class function and cycle type sizes differ");
    const auto& t = ls_tables(chi.n());
    const auto& row = t.per_mu[ClassIndex::of(chi.n()).index(mu)];
    Rational acc = 0;
    for (std::size_t b = 0; b < row.size(); ++b)
        if (row[b] != 0) acc += chi.at_index(b) * row[b];
    return acc;
}

/// <chi, H^i(P_n; Q)>.
inline Rational ls_multiplicity(const ClassFunction& chi, int i, int n) {
    if (i < 0) fail(ErrorKind::OutOfRange, "cohomological degree must be >= 0");
    if (chi.n() != n) fail(ErrorKind::SizeMismatch, "class function is not on S_" + std::to_string(n));
    if (i >= n) return 0;
    const auto& w = ls_tables(n).weights[static_cast<std::size_t>(i)];
    Rational acc = 0;
    for (std::size_t b = 0; b < w.size(); ++b)
        if (w[b] != 0) acc += chi.at_index(b) * w[b];
    return acc;
}

inline Rational ls_multiplicity(const CharacterPolynomial& p, int i, int n) {
    return ls_multiplicity(p.to_class_function(n), i, n);
}

/// Character of H^i(P_n; Q) as a class function.
inline ClassFunction hi_character(int i, int n) {
    if (i < 0) fail(ErrorKind::OutOfRange, "cohomological degree must be >= 0");
    ClassFunction psi(n);
    if (i >= n) return psi;
    const auto& idx = ClassIndex::of(n);
    const auto& w = ls_tables(n).weights[static_cast<std::size_t>(i)];
    for (std::size_t b = 0; b < idx.size(); ++b) psi.set_index(b, w[b] * Rational(z_mu(idx.type(b))));
    return psi;
}

/// dim H^i(P_n; Q): number of permutations of S_n with n - i cycles.
inline Integer dim_hi(int i, int n) {
    if (i < 0 || n < 0) fail(ErrorKind::OutOfRange, "dim_hi needs i, n >= 0");
    Integer total = 0;
    for (const auto& mu : ClassIndex::of(n).types())
        if (mu.num_cycles() == n - i) total += class_size(mu);
    return total;
}

/// Smallest n from which <P, H^i(P_n)> no longer depends on n.
inline int stable_range_start(const CharacterPolynomial& p, int i) { return std::max(1, 2 * i + p.degree()); }

/// <P, H^i(PConf(C))>, read off at n = 2i + deg P.
inline Rational stable_multiplicity(const CharacterPolynomial& p, int i) {
    if (i < 0) fail(ErrorKind::OutOfRange, "cohomological degree must be >= 0");
    return ls_multiplicity(p, i, stable_range_start(p, i));
}

/// Persistent (chi_id, i, n) -> multiplicity store, serialized as a JSON
/// object mapping "(id, i, n)" to "a/b".
class MultiplicityTable {
   public:
    static std::string key(const std::string& chi_id, int i, int n) {
        return "(" + chi_id + ", " + std::to_string(i) + ", " + std::to_string(n) + ")";
    }

    std::optional<Rational> find(const std::string& chi_id, int i, int n) const {
        if (auto it = entries_.find(key(chi_id, i, n)); it != entries_.end()) return it->second;
        return std::nullopt;
    }
    void put(const std::string& chi_id, int i, int n, const Rational& v) { entries_[key(chi_id, i, n)] = v; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, Rational>& entries() const noexcept { return entries_; }

    /// Looks up or computes <chi, H^i(P_n)>, recording fresh values.
    Rational multiplicity(const ClassFunction& chi, int i) {
        const auto id = chi.canonical_id();
        if (auto v = find(id, i, chi.n())) return *v;
        auto v = ls_multiplicity(chi, i, chi.n());
        put(id, i, chi.n(), v);
        return v;
    }

    nlohmann::json to_json() const {
        auto j = nlohmann::json::object();
        for (const auto& [k, v] : entries_) j[k] = to_string(v);
        return j;
    }
    static MultiplicityTable from_json(const nlohmann::json& j) {
        if (!j.is_object()) fail(ErrorKind::Parse, "multiplicity cache must be a JSON object");
        MultiplicityTable t;
        for (const auto& [k, v] : j.items()) {
            if (!v.is_string()) fail(ErrorKind::Parse, "cache entry " + k + " is not a rational string");
            t.entries_[k] = parse_rational(v.get<std::string>());
        }
        return t;
    }

    /// Missing file yields an empty table.
    static MultiplicityTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return {};
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::Parse, "cannot parse cache " + path + ": " + e.what());
        }
        return from_json(j);
    }
    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) fail(ErrorKind::Io, "cannot write cache " + path);
        out << to_json().dump(2) << "\n";
    }

   private:
    std::map<std::string, Rational> entries_;
};

}  // namespace tgl
