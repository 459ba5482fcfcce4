#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tgl {

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
inline const std::vector<Integer>& cyclotomic_polynomial(int m) {
    static std::mutex mu;
    static std::map<int, std::vector<Integer>> cache;
    if (m < 1) fail(ErrorKind::OutOfRange, "cyclotomic polynomial index must be >= 1");
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built bottom-up over the divisors of m.
    std::vector<int> divisors;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        if (cache.count(d)) continue;
        std::vector<Integer> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (int e = 1; e < d; ++e) {
            if (d % e) continue;
            const auto& den = cache.at(e);  // e < d, built earlier in this loop
            // exact division by a monic polynomial
            std::vector<Integer> quo(num.size() - den.size() + 1, 0);
            for (std::size_t k = quo.size(); k-- > 0;) {
                const Integer c = num[k + den.size() - 1];
                quo[k] = c;
                for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
            }
            num = std::move(quo);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

/// Exact element of Q(zeta_m), kept as a sparse map exponent (mod m) -> rational.
/// Equality and rationality are decided after reduction modulo Phi_m.
class Cyclotomic {
   public:
    explicit Cyclotomic(int m = 1) : m_(m) {
        if (m < 1) fail(ErrorKind::OutOfRange, "root-of-unity order must be >= 1");
    }

    /// c * zeta_m^k.
    static Cyclotomic monomial(int m, long k, const Rational& c = Rational(1)) {
        Cyclotomic z(m);
        z.add(k, c);
        return z;
    }
    static Cyclotomic rational(int m, const Rational& c) { return monomial(m, 0, c); }

    int order() const noexcept { return m_; }
    const std::map<int, Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const { return reduced().empty(); }

    void add(long k, const Rational& c) {
        if (c == 0) return;
        const int e = static_cast<int>(((k % m_) + m_) % m_);
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        for (const auto& [e, c] : o.coeffs_) add(e, c);
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        for (const auto& [e, c] : o.coeffs_) add(e, -c);
        return *this;
    }
    Cyclotomic& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [e, c] : coeffs_) c *= s;
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        Cyclotomic out(a.m_);
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) out.add(static_cast<long>(ea) + eb, ca * cb);
        return out;
    }

    /// Complex conjugate: zeta^k -> zeta^{-k}.
    Cyclotomic conj() const {
        Cyclotomic out(m_);
        for (const auto& [e, c] : coeffs_) out.add(-static_cast<long>(e), c);
        return out;
    }

    /// Remainder modulo Phi_m, as dense coefficients of degree < phi(m), trailing zeros trimmed.
    std::vector<Rational> reduced() const {
        const auto& phi = cyclotomic_polynomial(m_);
        std::vector<Rational> r(static_cast<std::size_t>(m_), Rational(0));
        for (const auto& [e, c] : coeffs_) r[e] += c;
        const std::size_t dphi = phi.size() - 1;
        for (std::size_t k = r.size(); k-- > dphi;) {
            if (r[k] == 0) continue;
            const Rational c = r[k];
            for (std::size_t i = 0; i <= dphi; ++i) r[k - dphi + i] -= c * Rational(phi[i]);
        }
        r.resize(std::min(r.size(), dphi));
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    /// The rational value, if the element lies in Q.
    std::optional<Rational> as_rational() const {
        const auto r = reduced();
        if (r.empty()) return Rational(0);
        if (r.size() == 1) return r[0];
        return std::nullopt;
    }

    Rational to_rational() const {
        if (auto r = as_rational()) return *r;
        fail(ErrorKind::NonRationalResult, "cyclotomic value " + str() + " is not rational");
    }

    bool operator==(const Cyclotomic& o) const { return m_ == o.m_ && reduced() == o.reduced(); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.get_str() + ")*z" + std::to_string(m_) + "^" + std::to_string(e);
        }
        return s;
    }

   private:
    void check(const Cyclotomic& o) const {
        if (m_ != o.m_) fail(ErrorKind::SizeMismatch, "cyclotomic orders differ");
    }

    int m_;
    std::map<int, Rational> coeffs_;
};

}  // namespace tgl
