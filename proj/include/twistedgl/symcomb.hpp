#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace tgl {

// ---------------------------------------------------------------------------
// Class functions
// ---------------------------------------------------------------------------

/// Rational-valued class function on S_n, stored densely in ClassIndex order.
class ClassFunction {
   public:
    ClassFunction() = default;
    explicit ClassFunction(int n) : n_(n), values_(ClassIndex::of(n).size(), Rational(0)) {}

    template <class Rule>
    static ClassFunction from_rule(int n, Rule&& rule) {
        ClassFunction f(n);
        const auto& idx = ClassIndex::of(n);
        for (std::size_t i = 0; i < idx.size(); ++i) f.values_[i] = Rational(rule(idx.type(i)));
        return f;
    }

    int n() const noexcept { return n_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& operator()(const CycleType& mu) const { return values_[ClassIndex::of(n_).index(mu)]; }
    const Rational& at_index(std::size_t i) const { return values_.at(i); }
    void set(const CycleType& mu, const Rational& v) { values_[ClassIndex::of(n_).index(mu)] = v; }
    void set_index(std::size_t i, const Rational& v) { values_.at(i) = v; }

    ClassFunction& operator+=(const ClassFunction& o) {
        check_same(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    ClassFunction& operator-=(const ClassFunction& o) {
        check_same(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    ClassFunction& operator*=(const Rational& c) {
        for (auto& v : values_) v *= c;
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
    friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }
    /// Pointwise product.
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        ClassFunction out(a.n_);
        for (std::size_t i = 0; i < a.values_.size(); ++i) out.values_[i] = a.values_[i] * b.values_[i];
        return out;
    }
    bool operator==(const ClassFunction& o) const { return n_ == o.n_ && values_ == o.values_; }

    /// Stable identifier of the value table: FNV-1a over "n|v0|v1|...".
    std::string canonical_id() const {
        std::string s = std::to_string(n_);
        for (const auto& v : values_) s += "|" + v.get_str();
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        static constexpr char hex[] = "0123456789abcdef";
        std::string out(16, '0');
        for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 15u];
        return out;
    }

   private:
    void check_same(const ClassFunction& o) const {
        if (n_ != o.n_) fail(ErrorKind::SizeMismatch, "class functions on S_" + std::to_string(n_) + " and S_" + std::to_string(o.n_));
    }

    int n_ = 0;
    std::vector<Rational> values_;
};

/// <f, g>_n = sum over classes mu of f(mu) g(mu) / z_mu.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n()) fail(ErrorKind::SizeMismatch, "inner product of class functions on different S_n");
    const auto& idx = ClassIndex::of(f.n());
    Rational acc = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (f.at_index(i) == 0 || g.at_index(i) == 0) continue;
        acc += f.at_index(i) * g.at_index(i) / Rational(z_mu(idx.type(i)));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Character polynomials
// ---------------------------------------------------------------------------

/// Element of Q[X_1, X_2, ...] with deg X_k = k. A monomial is an exponent
/// vector e with e[k-1] the power of X_k, trailing zeros trimmed.
class CharacterPolynomial {
   public:
    using Monomial = std::vector<int>;

    CharacterPolynomial() = default;
    CharacterPolynomial(const Rational& c) { add_term({}, c); }  // NOLINT: constants convert
    CharacterPolynomial(long c) : CharacterPolynomial(Rational(c)) {}  // NOLINT

    /// X_k.
    static CharacterPolynomial X(int k) {
        if (k < 1) fail(ErrorKind::OutOfRange, "X_k needs k >= 1");
        Monomial m(k, 0);
        m[k - 1] = 1;
        CharacterPolynomial p;
        p.add_term(m, 1);
        return p;
    }

    /// binom(X_k, m) = X_k (X_k - 1) ... (X_k - m + 1) / m!.
    static CharacterPolynomial binom_X(int k, int m) {
        CharacterPolynomial out(1);
        const CharacterPolynomial x = X(k);
        for (int j = 0; j < m; ++j) out = out * (x - CharacterPolynomial(j));
        return out * Rational(Rational(1) / Rational(factorial(static_cast<unsigned long>(m))));
    }

    /// binom(X, mu) = prod_i binom(X_i, mu_i).
    static CharacterPolynomial binom_mu(const CycleType& mu) {
        CharacterPolynomial out(1);
        for (int i = 1; i <= mu.max_length(); ++i)
            if (mu.count(i)) out = out * binom_X(i, mu.count(i));
        return out;
    }

    /// Inverse of to_binomial_basis: keys are cycle-count vectors mu.
    static CharacterPolynomial from_binomial_basis(const std::map<Monomial, Rational>& coeffs) {
        CharacterPolynomial out;
        for (const auto& [mu, c] : coeffs) out += binom_mu(CycleType(mu)) * c;
        return out;
    }

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Weighted degree; the zero polynomial has degree 0.
    int degree() const noexcept {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, weight(m));
        return d;
    }

    Rational eval(const CycleType& mu) const {
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (std::size_t k = 0; k < m.size(); ++k)
                if (m[k]) term *= Rational(ipow(Integer(mu.count(static_cast<int>(k + 1))), static_cast<unsigned long>(m[k])));
            acc += term;
        }
        return acc;
    }

    ClassFunction to_class_function(int n) const {
        return ClassFunction::from_rule(n, [&](const CycleType& mu) { return eval(mu); });
    }

    /// Coefficients in the basis binom(X, mu); keys are cycle-count vectors.
    std::map<Monomial, Rational> to_binomial_basis() const {
        std::map<Monomial, Rational> out;
        for (const auto& [m, c] : terms_) {
            // X^e = sum_j S(e, j) j! binom(X, j), independently per variable.
            std::map<Monomial, Rational> partial{{Monomial{}, c}};
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                std::map<Monomial, Rational> next;
                for (const auto& [mono, coef] : partial) {
                    for (int j = 0; j <= m[k]; ++j) {
                        const Integer s = stirling2(m[k], j);
                        if (s == 0) continue;
                        Monomial t = mono;
                        if (t.size() < k + 1) t.resize(k + 1, 0);
                        t[k] = j;
                        trim(t);
                        next[t] += coef * Rational(s * factorial(static_cast<unsigned long>(j)));
                    }
                }
                partial = std::move(next);
            }
            for (auto& [mono, coef] : partial) out[mono] += coef;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    CharacterPolynomial& operator+=(const CharacterPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CharacterPolynomial& operator-=(const CharacterPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
    friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
    friend CharacterPolynomial operator*(const CharacterPolynomial& a, const CharacterPolynomial& b) {
        CharacterPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(std::max(ma.size(), mb.size()), 0);
                for (std::size_t k = 0; k < m.size(); ++k) m[k] = (k < ma.size() ? ma[k] : 0) + (k < mb.size() ? mb[k] : 0);
                out.add_term(m, ca * cb);
            }
        return out;
    }
    friend CharacterPolynomial operator*(const CharacterPolynomial& a, const Rational& c) { return a * CharacterPolynomial(c); }
    bool operator==(const CharacterPolynomial& o) const { return terms_ == o.terms_; }

    /// Human-readable form such as "1/2*X1^2 - 1/2*X1 - X2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        // highest weight first, then lexicographic
        std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
        std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return weight(a.first) > weight(b.first); });
        bool first = true;
        for (const auto& [m, c] : ordered) {
            Rational mag = abs(c);
            if (first) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            first = false;
            const std::string mono = monomial_str(m);
            if (mono.empty()) s += mag.get_str();
            else if (mag == 1) s += mono;
            else s += mag.get_str() + "*" + mono;
        }
        return s;
    }

    static std::string monomial_str(const Monomial& m) {
        std::string s;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (!s.empty()) s += "*";
            s += "X" + std::to_string(k + 1);
            if (m[k] > 1) s += "^" + std::to_string(m[k]);
        }
        return s;
    }

    /// Parses "1", "X1", "X1^2*X3" (case-insensitive X).
    static Monomial parse_monomial(const std::string& text) {
        Monomial m;
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty() || s == "1") return m;
        std::stringstream ss(s);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor.size() < 2 || (factor[0] != 'X' && factor[0] != 'x'))
                fail(ErrorKind::Parse, "bad monomial factor '" + factor + "'");
            const auto caret = factor.find('^');
            int k = 0, e = 1;
            try {
                k = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
            } catch (const std::exception&) {
                fail(ErrorKind::Parse, "bad monomial factor '" + factor + "'");
            }
            if (k < 1 || e < 0) fail(ErrorKind::Parse, "bad monomial factor '" + factor + "'");
            if (m.size() < static_cast<std::size_t>(k)) m.resize(k, 0);
            m[k - 1] += e;
        }
        trim(m);
        return m;
    }

   private:
    static int weight(const Monomial& m) {
        int w = 0;
        for (std::size_t k = 0; k < m.size(); ++k) w += static_cast<int>(k + 1) * m[k];
        return w;
    }
    static void trim(Monomial& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    static Integer stirling2(int n, int k) {
        // S(n, k) by the triangle recurrence; n is tiny here.
        std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
        s[0][0] = 1;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + Integer(j) * s[i - 1][j];
        return (k >= 0 && k <= n) ? s[n][k] : Integer(0);
    }
    void add_term(Monomial m, const Rational& c) {
        trim(m);
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

/// <P, Q>_n for character polynomials.
inline Rational inner_product(const CharacterPolynomial& p, const CharacterPolynomial& q, int n) {
    return inner_product(p.to_class_function(n), q.to_class_function(n));
}

inline Rational eval_charpoly(const CharacterPolynomial& p, const CycleType& mu) { return p.eval(mu); }

// ---------------------------------------------------------------------------
// Irreducible characters (Murnaghan-Nakayama)
// ---------------------------------------------------------------------------

namespace detail {

class MurnaghanNakayama {
   public:
    /// chi_lambda at the class whose cycle lengths (largest first) are `parts`.
    long operator()(const std::vector<int>& lambda, const std::vector<int>& parts) {
        return eval(lambda, parts, 0);
    }

   private:
    long eval(const std::vector<int>& lambda, const std::vector<int>& parts, std::size_t pos) {
        if (pos == parts.size()) return lambda.empty() ? 1 : 0;
        std::vector<int> key_rest(parts.begin() + static_cast<std::ptrdiff_t>(pos), parts.end());
        auto key = std::make_pair(lambda, key_rest);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int r = parts[pos];
        const int len = static_cast<int>(lambda.size());
        std::vector<int> beta(len);
        for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
        std::set<int> occupied(beta.begin(), beta.end());

        long total = 0;
        for (int i = 0; i < len; ++i) {
            const int target = beta[i] - r;
            if (target < 0 || occupied.count(target)) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            std::vector<int> nb = beta;
            nb[i] = target;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<int> mu;
            for (int k = 0; k < len; ++k) {
                const int part = nb[k] - (len - 1 - k);
                if (part > 0) mu.push_back(part);
            }
            const long sub = eval(mu, parts, pos + 1);
            total += (between % 2 ? -sub : sub);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo_;
};

}  // namespace detail

/// Character table of S_n: rows follow partitions (lambda), columns cycle types,
/// both in ClassIndex order.
inline const std::vector<std::vector<long>>& character_table(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<long>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const auto& idx = ClassIndex::of(n);
    detail::MurnaghanNakayama mn;
    std::vector<std::vector<long>> table(idx.size(), std::vector<long>(idx.size(), 0));
    for (std::size_t l = 0; l < idx.size(); ++l)
        for (std::size_t c = 0; c < idx.size(); ++c) table[l][c] = mn(idx.partitions()[l].parts(), idx.type(c).parts());
    return cache.emplace(n, std::move(table)).first->second;
}

/// chi_lambda(c_mu) by the Murnaghan-Nakayama rule, largest cycle removed first.
inline long mn_character(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.n())
        fail(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) + " but |mu| = " + std::to_string(mu.n()));
    const int n = lambda.size();
    const auto& idx = ClassIndex::of(n);
    std::size_t row = 0;
    for (; row < idx.size(); ++row)
        if (idx.partitions()[row] == lambda) break;
    return character_table(n)[row][idx.index(mu)];
}

inline ClassFunction irreducible_character(const Partition& lambda) {
    const int n = lambda.size();
    return ClassFunction::from_rule(n, [&](const CycleType& mu) { return Rational(mn_character(lambda, mu)); });
}

/// The unique character polynomial of degree <= d with value chi_lambda on S_d and
/// zero on S_n for n < d: sum over mu |- d of chi_lambda(mu) binom(X, mu).
inline CharacterPolynomial p_lambda(const Partition& lambda) {
    const int d = lambda.size();
    std::map<CharacterPolynomial::Monomial, Rational> coeffs;
    for (const auto& mu : ClassIndex::of(d).types()) {
        const long chi = mn_character(lambda, mu);
        if (chi) coeffs[mu.counts()] = Rational(chi);
    }
    return CharacterPolynomial::from_binomial_basis(coeffs);
}

// ---------------------------------------------------------------------------
// Standard Young tableaux
// ---------------------------------------------------------------------------

struct StandardTableau {
    std::vector<std::vector<int>> rows;
    std::vector<int> descents;  // s such that s+1 lies in a strictly lower row
    int major_index = 0;
};

/// All standard tableaux of shape lambda. Entries 1..n are placed in order, each
/// into the topmost available row first, which fixes the output order.
inline std::vector<StandardTableau> syt_enumerate(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(lambda.length());
    std::vector<int> row_of(n + 1, 0);
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            StandardTableau t;
            t.rows = rows;
            for (int s = 1; s < n; ++s)
                if (row_of[s + 1] > row_of[s]) {
                    t.descents.push_back(s);
                    t.major_index += s;
                }
            out.push_back(std::move(t));
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto len = static_cast<int>(rows[r].size());
            if (len >= lambda[r]) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
            rows[r].push_back(k);
            row_of[k] = static_cast<int>(r);
            place(k + 1);
            rows[r].pop_back();
        }
    };
    place(1);
    return out;
}

/// dim V_lambda = n! / prod of hook lengths.
inline Integer hook_length_dimension(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) hooks *= Integer(lambda[r] - c - 1 + conj[c] - static_cast<int>(r));
    return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

// ---------------------------------------------------------------------------
// Built-in class functions
// ---------------------------------------------------------------------------

inline ClassFunction trivial_character(int n) {
    return ClassFunction::from_rule(n, [](const CycleType&) { return 1; });
}

inline ClassFunction sign_character(int n) {
    return ClassFunction::from_rule(n, [](const CycleType& mu) { return mu.sign(); });
}

/// 1 when every cycle has length >= n/k, else 0.
inline ClassFunction chi_k(int n, int k) {
    if (k < 1) fail(ErrorKind::OutOfRange, "chi_k needs k >= 1");
    return ClassFunction::from_rule(n, [&](const CycleType& mu) {
        for (int len = 1; len <= mu.max_length(); ++len)
            if (mu.count(len) && len * k < n) return 0;
        return 1;
    });
}

/// 1 on permutations whose cycle lengths are pairwise distinct.
inline ClassFunction chi_distinct(int n) {
    return ClassFunction::from_rule(n, [](const CycleType& mu) {
        for (int c : mu.counts())
            if (c > 1) return 0;
        return 1;
    });
}

/// Character of the k-th exterior power of the permutation representation Q^n:
/// coefficient of t^k in prod_l (1 - (-t)^l)^{mu_l}.
inline ClassFunction wedge_permutation_character(int k, int n) {
    if (k < 0 || k > n) fail(ErrorKind::OutOfRange, "exterior power index out of range");
    return ClassFunction::from_rule(n, [&](const CycleType& mu) {
        std::vector<Integer> poly(1, 1);  // in t
        for (int len = 1; len <= mu.max_length(); ++len) {
            for (int rep = 0; rep < mu.count(len); ++rep) {
                std::vector<Integer> next(poly.size() + len, 0);
                const Integer factor = (len % 2 ? Integer(1) : Integer(-1));  // -( -1)^len
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    next[i] += poly[i];
                    next[i + len] += factor * poly[i];
                }
                poly = std::move(next);
            }
        }
        return Rational(static_cast<std::size_t>(k) < poly.size() ? poly[k] : Integer(0));
    });
}

/// Character of V_k = wedge^k(Q^n / Q), via chi_{V_k} = chi_{wedge^k Q^n} - chi_{V_{k-1}}.
inline ClassFunction exterior_power_character(int k, int n) {
    if (k < 0 || k > n - 1) fail(ErrorKind::OutOfRange, "V_k needs 0 <= k <= n-1");
    ClassFunction v = trivial_character(n);
    for (int j = 1; j <= k; ++j) v = wedge_permutation_character(j, n) - v;
    return v;
}

}  // namespace tgl
