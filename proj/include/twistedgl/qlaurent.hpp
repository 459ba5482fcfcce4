#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "rational.hpp"

namespace tgl {

/// Laurent polynomial in a formal variable q with exact rational coefficients.
class QLaurent {
   public:
    QLaurent() = default;
    QLaurent(const Rational& c) { add(0, c); }  // NOLINT: constants convert
    QLaurent(long c) : QLaurent(Rational(c)) {}  // NOLINT

    /// c * q^k.
    static QLaurent monomial(long k, const Rational& c = Rational(1)) {
        QLaurent out;
        out.add(k, c);
        return out;
    }
    static QLaurent q() { return monomial(1); }

    const std::map<long, Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }

    Rational coeff(long k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    long max_exponent() const {
        if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "exponent of the zero Laurent polynomial");
        return coeffs_.rbegin()->first;
    }
    long min_exponent() const {
        if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "exponent of the zero Laurent polynomial");
        return coeffs_.begin()->first;
    }

    void add(long k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    QLaurent& operator+=(const QLaurent& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    QLaurent& operator-=(const QLaurent& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, -c);
        return *this;
    }
    QLaurent& operator*=(const Rational& s) {
        if (s == 0) coeffs_.clear();
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator-(QLaurent a) { return a *= Rational(-1); }
    friend QLaurent operator*(QLaurent a, const Rational& s) { return a *= s; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent out;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) out.add(ka + kb, ca * cb);
        return out;
    }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    /// Multiplies by q^k.
    QLaurent shifted(long k) const {
        QLaurent out;
        for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
        return out;
    }

    /// Exact division by a monomial c q^k.
    QLaurent divided_by_monomial(const QLaurent& m) const {
        if (!m.is_monomial()) fail(ErrorKind::Unsupported, "division by a non-monomial Laurent polynomial");
        const auto& [k, c] = *m.coeffs_.begin();
        QLaurent out = shifted(-k);
        return out *= Rational(Rational(1) / c);
    }

    Rational eval(const Rational& qv) const {
        Rational acc = 0;
        for (const auto& [k, c] : coeffs_) acc += c * rpow(qv, k);
        return acc;
    }

    bool operator==(const QLaurent& o) const { return coeffs_ == o.coeffs_; }

    /// Highest power first, e.g. "q^4 - 4q^3 + 5q^2 - 2q".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [k, c] = *it;
            const bool neg = c < 0;
            const Rational a = neg ? Rational(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            const bool unit = a == 1;
            if (!unit || k == 0) s += a.get_str();
            if (k != 0) s += "q" + (k == 1 ? std::string() : "^" + std::to_string(k));
        }
        return s;
    }

    /// {"exponent": "a/b", ...}.
    nlohmann::json to_json() const {
        auto j = nlohmann::json::object();
        for (const auto& [k, c] : coeffs_) j[std::to_string(k)] = to_string(c);
        return j;
    }

   private:
    std::map<long, Rational> coeffs_;
};

/// Quotient of two Laurent polynomials in q, compared by cross-multiplication.
struct QRational {
    QLaurent num;
    QLaurent den = QLaurent(1);

    Rational eval(const Rational& qv) const {
        const Rational d = den.eval(qv);
        if (d == 0) fail(ErrorKind::OutOfRange, "rational function has a pole at q = " + qv.get_str());
        return num.eval(qv) / d;
    }
    bool equals(const QRational& o) const { return num * o.den == o.num * den; }
    QRational operator*(const QRational& o) const { return {num * o.num, den * o.den}; }
    QRational operator-(const QRational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

}  // namespace tgl
