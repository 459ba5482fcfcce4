#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "qlaurent.hpp"
#include "rational.hpp"

namespace tgl {

/// Polynomial in t = q^{-s} with Laurent-polynomial coefficients, lowest power first.
using TPoly = std::vector<QLaurent>;

namespace detail {
inline void trim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline TPoly tmul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}
inline TPoly tsub(const TPoly& a, const TPoly& b) {
    TPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}
}  // namespace detail

/// Rational function numerator(t) / denominator(t), expanded as a power series in t.
class RationalSeriesT {
   public:
    RationalSeriesT(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
        detail::trim(num_);
        detail::trim(den_);
        if (den_.empty() || !den_[0].is_monomial())
            fail(ErrorKind::Unsupported, "series denominator needs a monomial constant term");
    }

    const TPoly& numerator() const noexcept { return num_; }
    const TPoly& denominator() const noexcept { return den_; }

    /// Coefficients of t^0 .. t^n.
    std::vector<QLaurent> expand(int n) const {
        if (n < 0) fail(ErrorKind::OutOfRange, "expansion order must be >= 0");
        std::vector<QLaurent> c(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            QLaurent acc = static_cast<std::size_t>(k) < num_.size() ? num_[k] : QLaurent();
            for (int j = 1; j <= k && static_cast<std::size_t>(j) < den_.size(); ++j) acc -= den_[j] * c[k - j];
            c[k] = acc.divided_by_monomial(den_[0]);
        }
        return c;
    }
    QLaurent coefficient(int n) const { return expand(n).back(); }

    friend RationalSeriesT operator*(const RationalSeriesT& a, const RationalSeriesT& b) {
        return {detail::tmul(a.num_, b.num_), detail::tmul(a.den_, b.den_)};
    }
    friend RationalSeriesT operator-(const RationalSeriesT& a, const RationalSeriesT& b) {
        return {detail::tsub(detail::tmul(a.num_, b.den_), detail::tmul(b.num_, a.den_)), detail::tmul(a.den_, b.den_)};
    }

    /// Value at t = q^{-1}, a rational function of q.
    QRational at_inverse_q() const {
        auto sub = [](const TPoly& p) {
            QLaurent out;
            for (std::size_t k = 0; k < p.size(); ++k) out += p[k].shifted(-static_cast<long>(k));
            return out;
        };
        return {sub(num_), sub(den_)};
    }

    /// [{"exponent": "a/b"}, ...] for t^0 .. t^n.
    nlohmann::json dump(int n) const {
        auto arr = nlohmann::json::array();
        for (const auto& c : expand(n)) arr.push_back(c.to_json());
        return arr;
    }

   private:
    TPoly num_;
    TPoly den_;
};

/// zeta(s) = 1 / (1 - q t).
inline RationalSeriesT zeta() { return {{QLaurent(1)}, {QLaurent(1), -QLaurent::q()}}; }

/// L(s) = zeta(s) / zeta(2s) = (1 - q t^2) / (1 - q t): generating function of squarefree counts.
inline RationalSeriesT conf_L() {
    return {{QLaurent(1), QLaurent(), -QLaurent::q()}, {QLaurent(1), -QLaurent::q()}};
}

enum class SeriesTag { X1, X2, BinomX1_2, PQuad };

inline std::string to_string(SeriesTag t) {
    switch (t) {
        case SeriesTag::X1: return "X1";
        case SeriesTag::X2: return "X2";
        case SeriesTag::BinomX1_2: return "binomX1_2";
        case SeriesTag::PQuad: return "P_quad";
    }
    return "?";
}

inline SeriesTag parse_series_tag(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "x1") return SeriesTag::X1;
    if (s == "x2") return SeriesTag::X2;
    if (s == "binomx1_2") return SeriesTag::BinomX1_2;
    if (s == "p_quad" || s == "pquad" || s == "quad") return SeriesTag::PQuad;
    fail(ErrorKind::Parse, "unknown series tag '" + s + "'");
}

/// The factor W with L(tag, s) = W(t) L(s).
inline RationalSeriesT weight_factor(SeriesTag tag) {
    const QLaurent half_q2_q = (QLaurent::monomial(2) - QLaurent::q()) * make_rational(1, 2);
    switch (tag) {
        case SeriesTag::X1:  // q t / (1 + t)
            return {{QLaurent(), QLaurent::q()}, {QLaurent(1), QLaurent(1)}};
        case SeriesTag::X2:  // (q^2 - q)/2 t^2 / (1 + t^2)
            return {{QLaurent(), QLaurent(), half_q2_q}, {QLaurent(1), QLaurent(), QLaurent(1)}};
        case SeriesTag::BinomX1_2:  // (q^2 - q)/2 t^2 / (1 + t)^2
            return {{QLaurent(), QLaurent(), half_q2_q}, {QLaurent(1), QLaurent(2), QLaurent(1)}};
        case SeriesTag::PQuad: return weight_factor(SeriesTag::BinomX1_2) - weight_factor(SeriesTag::X2);
    }
    fail(ErrorKind::Unsupported, "unknown series tag");
}

/// Generating function sum_n t^n sum_{f squarefree of degree n} P(f).
inline RationalSeriesT weighted_L(SeriesTag tag) { return weight_factor(tag) * conf_L(); }

/// lim_{s -> 1} L(tag, s) / L(s) as a rational function of q.
inline QRational residue_ratio(SeriesTag tag) { return weight_factor(tag).at_inverse_q(); }

/// [t^n] L(tag) / q^n, a polynomial in q^{-1}.
inline QLaurent normalized_coefficient(SeriesTag tag, int n) { return weighted_L(tag).coefficient(n).shifted(-n); }

/// Stable values a_0..a_I, where a_i = (-1)^i [q^{-i}] of [t^n] L(tag) / q^n
/// read at n = 2I + 4 and confirmed unchanged at n + 1.
inline std::vector<Integer> stable_series(SeriesTag tag, int max_i) {
    if (max_i < 0) fail(ErrorKind::OutOfRange, "stable coefficient count must be >= 0");
    const int n = 2 * max_i + 4;
    const auto ex = weighted_L(tag).expand(n + 1);
    const QLaurent a = ex[n].shifted(-n);
    const QLaurent b = ex[n + 1].shifted(-(n + 1));
    std::vector<Integer> out;
    for (int i = 0; i <= max_i; ++i) {
        const Rational c = a.coeff(-i);
        if (c != b.coeff(-i))
            fail(ErrorKind::NotStabilized, "coefficient of q^-" + std::to_string(i) + " differs between n=" +
                                               std::to_string(n) + " and n=" + std::to_string(n + 1));
        if (!is_integer(c)) fail(ErrorKind::NonRationalResult, "stable coefficient is not an integer");
        out.push_back(i % 2 ? Integer(-c.get_num()) : Integer(c.get_num()));
    }
    return out;
}

/// a_1..a_I.
inline std::vector<Integer> stable_coefficients(SeriesTag tag, int max_i) {
    if (max_i < 1) fail(ErrorKind::OutOfRange, "stable coefficient count must be >= 1");
    auto all = stable_series(tag, max_i);
    return {all.begin() + 1, all.end()};
}

}  // namespace tgl
