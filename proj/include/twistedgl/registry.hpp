#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "lseries.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "symcomb.hpp"

namespace tgl {

/// A named statistic on permutations, available on every S_n.
struct Statistic {
    std::string name;
    std::optional<CharacterPolynomial> poly;  // set when the statistic is a character polynomial
    std::optional<SeriesTag> series;          // set when an L-series is known for it
    std::function<ClassFunction(int)> on;     // class function on S_n

    ClassFunction at(int n) const { return on(n); }
};

namespace detail {

inline Statistic from_poly(std::string name, CharacterPolynomial p, std::optional<SeriesTag> tag = std::nullopt) {
    Statistic s;
    s.name = std::move(name);
    s.poly = p;
    s.series = tag;
    s.on = [p](int n) { return p.to_class_function(n); };
    return s;
}

inline Statistic from_rule(std::string name, std::function<ClassFunction(int)> rule) {
    Statistic s;
    s.name = std::move(name);
    s.on = std::move(rule);
    return s;
}

inline int parse_positive(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::Parse, "bad " + what + " '" + text + "'");
}

}  // namespace detail

/// Statistic names, case-insensitive:
///   one | trivial, x1, x2, binomx1_2, quad, sign, chi1, chik:K, distinct,
///   plambda:L1,L2,... (the character polynomial P_lambda),
/// or a JSON object {"monomial": "a/b", ...} with monomials like "X1^2*X2".
inline Statistic parse_statistic(const std::string& text) {
    using CP = CharacterPolynomial;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(s);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::Parse, std::string("bad statistic literal: ") + e.what());
        }
        if (!j.is_object()) fail(ErrorKind::Parse, "statistic literal must be a JSON object");
        CP p;
        for (const auto& [mono, coeff] : j.items()) {
            const std::string c = coeff.is_string() ? coeff.get<std::string>() : coeff.dump();
            CP term(parse_rational(c));
            const auto m = CP::parse_monomial(mono);
            for (std::size_t k = 0; k < m.size(); ++k)
                for (int e = 0; e < m[k]; ++e) term = term * CP::X(static_cast<int>(k) + 1);
            p += term;
        }
        return detail::from_poly(p.str(), p);
    }
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (lower == "one" || lower == "trivial" || lower == "1") return detail::from_poly("one", CP(1));
    if (lower == "x1") return detail::from_poly("x1", CP::X(1), SeriesTag::X1);
    if (lower == "x2") return detail::from_poly("x2", CP::X(2), SeriesTag::X2);
    if (lower == "binomx1_2") return detail::from_poly("binomx1_2", CP::binom_X(1, 2), SeriesTag::BinomX1_2);
    if (lower == "quad" || lower == "p_quad" || lower == "pquad")
        return detail::from_poly("quad", CP::binom_X(1, 2) - CP::X(2), SeriesTag::PQuad);
    if (lower == "sign") return detail::from_rule("sign", [](int n) { return sign_character(n); });
    if (lower == "chi1") return detail::from_rule("chi1", [](int n) { return chi_k(n, 1); });
    if (lower == "distinct") return detail::from_rule("distinct", [](int n) { return chi_distinct(n); });
    if (lower.rfind("chik:", 0) == 0) {
        const int k = detail::parse_positive(lower.substr(5), "k");
        return detail::from_rule("chik:" + std::to_string(k), [k](int n) { return chi_k(n, k); });
    }
    if (lower.rfind("plambda:", 0) == 0) {
        std::vector<int> parts;
        std::stringstream ss(lower.substr(8));
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(detail::parse_positive(tok, "part"));
        if (parts.empty()) fail(ErrorKind::Parse, "plambda needs at least one part");
        std::sort(parts.rbegin(), parts.rend());
        const Partition lambda(parts);
        std::string name = "plambda:";
        for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? "," : "") + std::to_string(parts[i]);
        return detail::from_poly(name, p_lambda(lambda));
    }
    fail(ErrorKind::Parse, "unknown statistic '" + text + "'");
}

}  // namespace tgl
