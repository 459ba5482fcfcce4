#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <twistedgl/twistedgl.hpp>

namespace tgl::cli {

using nlohmann::json;

enum class Format { Human, Json, Csv };

/// Output of one command: a JSON document plus the same data as a flat table.
struct Report {
    std::string title;
    json doc = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool ok = true;
};

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string render(const Report& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: os << r.doc.dump(2) << "\n"; break;
        case Format::Csv:
            for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << csv_escape(r.columns[c]);
            os << "\n";
            for (const auto& row : r.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_escape(row[c]);
                os << "\n";
            }
            break;
        case Format::Human: {
            std::vector<std::size_t> width(r.columns.size(), 0);
            for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
            for (const auto& row : r.rows)
                for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
            auto line = [&](const std::vector<std::string>& cells) {
                std::string s;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    s += cells[c];
                    if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
                }
                os << s << "\n";
            };
            os << r.title << "\n\n";
            line(r.columns);
            std::vector<std::string> rule;
            for (auto w : width) rule.emplace_back(w, '-');
            line(rule);
            for (const auto& row : r.rows) line(row);
            os << "\n" << (r.ok ? "status: ok" : "status: MISMATCH") << "\n";
            break;
        }
    }
    return os.str();
}

/// Shared state of one invocation: enumeration limits and the multiplicity cache.
struct Session {
    EnumOptions opt;
    MultiplicityTable cache;

    Rational multiplicity(const ClassFunction& chi, int i) { return i >= chi.n() ? Rational(0) : cache.multiplicity(chi, i); }

    std::vector<Rational> multiplicities(const ClassFunction& chi) {
        std::vector<Rational> out;
        for (int i = 0; i < chi.n(); ++i) out.push_back(multiplicity(chi, i));
        return out;
    }

    QLaurent rhs_polynomial(const ClassFunction& chi) {
        QLaurent out;
        const auto m = multiplicities(chi);
        for (int i = 0; i < chi.n(); ++i) out.add(chi.n() - i, (i % 2 ? Rational(-1) : Rational(1)) * m[static_cast<std::size_t>(i)]);
        return out;
    }
};

inline json rationals_json(const std::vector<Rational>& v) {
    auto a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline std::string join(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + "]";
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

inline Report cmd_verify_gl(Session& s, const Statistic& stat, std::uint64_t q, int n) {
    const auto ctx = make_field_of_order(q);
    const auto chi = stat.at(n);
    const Rational lhs = lhs_conf_sum(chi, ctx, n, s.opt);
    const QLaurent poly = s.rhs_polynomial(chi);
    const Rational rhs = poly.eval(Rational(ctx.q_exact()));
    Report r;
    r.title = "twisted point count for " + stat.name + " on Conf_" + std::to_string(n) + "(F_" + std::to_string(q) + ")";
    r.ok = lhs == rhs;
    r.doc = {{"command", "verify-gl"}, {"stat", stat.name},       {"q", std::to_string(q)},
             {"n", n},                 {"chi_id", chi.canonical_id()}, {"lhs", to_string(lhs)},
             {"rhs", to_string(rhs)},  {"match", r.ok},           {"multiplicities", rationals_json(s.multiplicities(chi))},
             {"rhs_polynomial", poly.str()}};
    r.columns = {"stat", "q", "n", "lhs", "rhs", "rhs_polynomial", "match"};
    r.rows.push_back({stat.name, std::to_string(q), std::to_string(n), to_string(lhs), to_string(rhs), poly.str(), yes_no(r.ok)});
    return r;
}

inline Report cmd_fit(Session& s, const Statistic& stat, int n, const std::vector<std::uint64_t>& qs) {
    const auto chi = stat.at(n);
    const auto fitted = fit_multiplicities(chi, n, qs, s.opt);
    const auto coh = s.multiplicities(chi);
    Report r;
    r.title = "multiplicities of " + stat.name + " in H^i(P_" + std::to_string(n) + ") fitted from point counts";
    r.columns = {"i", "fitted", "cohomology", "match"};
    for (int i = 0; i <= n; ++i) {
        const Rational c = i < n ? coh[static_cast<std::size_t>(i)] : Rational(0);
        const bool m = c == fitted[static_cast<std::size_t>(i)];
        r.ok = r.ok && m;
        r.rows.push_back({std::to_string(i), to_string(fitted[static_cast<std::size_t>(i)]), to_string(c), yes_no(m)});
    }
    auto qj = json::array();
    for (auto q : qs) qj.push_back(std::to_string(q));
    auto cj = rationals_json(coh);
    cj.push_back("0");
    r.doc = {{"command", "fit"}, {"stat", stat.name}, {"n", n}, {"qs", qj}, {"multiplicities", rationals_json(fitted)}, {"cohomology", cj}, {"match", r.ok}};
    return r;
}

/// Largest n at which stable values are cross-checked against the braid tables.
inline constexpr int kStableCheckMaxN = 10;

inline Report cmd_stable(Session& s, const Statistic& stat, int max_i) {
    if (!stat.poly) fail(ErrorKind::Unsupported, "stable multiplicities need a character polynomial statistic");
    if (max_i < 1) fail(ErrorKind::OutOfRange, "the number of coefficients must be >= 1");
    const auto& p = *stat.poly;
    std::vector<std::optional<Rational>> series(static_cast<std::size_t>(max_i) + 1), coh(static_cast<std::size_t>(max_i) + 1);
    if (stat.series) {
        const auto a = stable_series(*stat.series, max_i);
        for (int i = 0; i <= max_i; ++i) series[static_cast<std::size_t>(i)] = Rational(a[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i <= max_i; ++i) {
        const int n = stable_range_start(p, i);
        if (stat.series && n > kStableCheckMaxN) continue;
        coh[static_cast<std::size_t>(i)] = s.multiplicity(p.to_class_function(n), i);
    }
    Report r;
    r.title = "stable multiplicities <" + stat.name + ", H^i(PConf(C))>";
    r.columns = {"i", "series", "cohomology", "match"};
    auto values = json::array(), sj = json::array(), cj = json::array();
    for (int i = 1; i <= max_i; ++i) {
        const auto& a = series[static_cast<std::size_t>(i)];
        const auto& b = coh[static_cast<std::size_t>(i)];
        const bool m = !(a && b) || *a == *b;
        r.ok = r.ok && m;
        values.push_back(to_string(a ? *a : *b));
        sj.push_back(a ? json(to_string(*a)) : json(nullptr));
        cj.push_back(b ? json(to_string(*b)) : json(nullptr));
        r.rows.push_back({std::to_string(i), a ? to_string(*a) : "-", b ? to_string(*b) : "-", yes_no(m)});
    }
    r.doc = {{"command", "stable"}, {"stat", stat.name}, {"coefficients", values}, {"series", sj}, {"cohomology", cj}, {"match", r.ok}};
    return r;
}

/// Brute-force torus counts, when n and q are small enough.
inline std::optional<std::map<CycleType, Integer>> try_tori_bruteforce(std::uint64_t q, int n, const EnumOptions& opt) {
    if (n != 2 && n != 3) return std::nullopt;
    try {
        return tori_bruteforce(q, n, opt.budget);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::FieldTooLarge) return std::nullopt;
        throw;
    }
}

inline Rational weighted_total(const std::map<CycleType, Integer>& counts, const ClassFunction& chi) {
    Rational acc = 0;
    for (const auto& [t, c] : counts) acc += chi(t) * Rational(c);
    return acc;
}

inline Report cmd_tori(Session& s, const Statistic& stat, std::uint64_t q, int n) {
    const auto ctx = make_field_of_order(q);
    const auto chi = stat.at(n);
    const QLaurent poly = tori_polynomial(chi);
    const Rational value = poly.eval(Rational(ctx.q_exact()));
    const auto brute = try_tori_bruteforce(q, n, s.opt);
    Report r;
    r.title = "sum of " + stat.name + " over maximal tori of GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")";
    std::optional<Rational> bv;
    if (brute) bv = weighted_total(*brute, chi);
    r.ok = !bv || *bv == value;
    r.doc = {{"command", "tori"}, {"stat", stat.name},       {"q", std::to_string(q)}, {"n", n},
             {"polynomial", poly.str()}, {"value", to_string(value)}, {"bruteforce", bv ? json(to_string(*bv)) : json(nullptr)},
             {"match", r.ok}};
    r.columns = {"stat", "q", "n", "polynomial", "value", "bruteforce", "match"};
    r.rows.push_back({stat.name, std::to_string(q), std::to_string(n), poly.str(), to_string(value), bv ? to_string(*bv) : "-", yes_no(r.ok)});
    return r;
}

inline Report cmd_factor_stats(Session& s, std::uint64_t q, int n) {
    const auto ctx = make_field_of_order(q);
    const auto& hist = cycle_type_histogram(ctx, n, s.opt);
    Report r;
    r.title = "factorization statistics of squarefree degree-" + std::to_string(n) + " polynomials over F_" + std::to_string(q);
    r.columns = {"quantity", "bruteforce", "expected", "match"};
    auto add = [&](const std::string& name, const Rational& brute, const std::optional<Rational>& expected) {
        const bool m = !expected || *expected == brute;
        r.ok = r.ok && m;
        r.rows.push_back({name, to_string(brute), expected ? to_string(*expected) : "-", yes_no(m)});
        r.doc["summary"][name] = {{"bruteforce", to_string(brute)}, {"expected", expected ? json(to_string(*expected)) : json(nullptr)}};
    };
    Integer total = 0;
    auto types = json::array();
    for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
        total += it->second;
        types.push_back({{"cycle_type", it->first.parts()}, {"count", it->second.get_str()}});
        r.rows.push_back({"type " + it->first.str(), it->second.get_str(), "-", "-"});
    }
    const Integer qz = ctx.q_exact();
    add("squarefree", Rational(total), n >= 2 ? std::optional<Rational>(Rational(conf_count(qz, n))) : std::optional<Rational>(Rational(qz)));
    add("irreducible", Rational(irreducible_count_bruteforce(ctx, n, s.opt)), Rational(irreducible_count_formula(qz, n)));
    add("sign_sum", lhs_conf_sum(sign_character(n), ctx, n, s.opt), n >= 2 ? std::optional<Rational>(Rational(0)) : std::nullopt);
    add("distinct_degrees", Rational(distinct_degree_count(ctx, n, s.opt)), rhs_conf_sum(chi_distinct(n), Rational(qz), n));
    if (ctx.p() != 2) add("type_b", Rational(bn_type_count(ctx, n, s.opt)), std::nullopt);
    r.doc["command"] = "factor-stats";
    r.doc["q"] = std::to_string(q);
    r.doc["n"] = n;
    r.doc["cycle_types"] = types;
    r.doc["match"] = r.ok;
    return r;
}

// ---------------------------------------------------------------------------
// Table A
// ---------------------------------------------------------------------------

/// sum_{i=1}^{terms} c_i q^{-i} rendered as "1/q - 3/q^2 + ...".
inline std::string inverse_q_series(const std::vector<Rational>& c) {
    std::string s;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const bool neg = c[i] < 0;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        s += abs(c[i]).get_str() + "/q" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s + " + ...";
}

inline Report cmd_table_a(Session& s, std::uint64_t q, int n) {
    if (n < 2) fail(ErrorKind::OutOfRange, "table A needs n >= 2");
    const auto ctx = make_field_of_order(q);
    const Rational qr(ctx.q_exact());
    const Rational conf(conf_count(ctx.q_exact(), n));
    const Rational tori_total = rpow(qr, static_cast<long>(n) * n - n);
    const auto brute_tori = try_tori_bruteforce(q, n, s.opt);
    using CP = CharacterPolynomial;
    const auto one = trivial_character(n);
    const auto x1 = CP::X(1).to_class_function(n);
    const auto quad = (CP::binom_X(1, 2) - CP::X(2)).to_class_function(n);
    const auto excess = (CP::X(2) - CP::binom_X(1, 2)).to_class_function(n);
    const auto sign = sign_character(n);
    const auto chi1 = chi_k(n, 1);

    Report r;
    r.title = "Table A at q=" + std::to_string(q) + ", n=" + std::to_string(n);
    r.columns = {"row", "side", "quantity", "value", "stable", "methods", "agree"};
    auto rows = json::array();
    auto add = [&](int row, const std::string& side, const std::string& quantity, const std::vector<std::pair<std::string, Rational>>& methods,
                   const std::string& note = "") {
        bool agree = true;
        std::string names;
        auto mj = json::object();
        for (const auto& [name, v] : methods) {
            agree = agree && v == methods.front().second;
            names += (names.empty() ? "" : "+") + name;
            mj[name] = to_string(v);
        }
        r.ok = r.ok && agree;
        r.rows.push_back({std::to_string(row), side, quantity, to_string(methods.front().second), note.empty() ? "-" : note, names, yes_no(agree)});
        json entry = {{"row", row}, {"side", side}, {"quantity", quantity}, {"value", to_string(methods.front().second)}, {"methods", mj}, {"agree", agree}};
        if (!note.empty()) entry["stable_series"] = note;
        rows.push_back(entry);
    };
    auto brute_gl = [&](const ClassFunction& chi) { return lhs_conf_sum(chi, ctx, n, s.opt); };
    auto coh_gl = [&](const ClassFunction& chi) { return s.rhs_polynomial(chi).eval(qr); };
    auto tori_coh = [&](const ClassFunction& chi) { return tori_polynomial(chi).eval(qr); };
    auto with_brute_tori = [&](std::vector<std::pair<std::string, Rational>> m, const ClassFunction& chi, const Rational& scale) {
        if (brute_tori) m.emplace_back("brute", weighted_total(*brute_tori, chi) / scale);
        return m;
    };

    // (1) point counts
    add(1, "polys", "squarefree polynomials", {{"brute", brute_gl(one)}, {"cohomology", coh_gl(one)}, {"formula", conf}});
    add(1, "tori", "maximal tori", with_brute_tori({{"coinvariants", tori_coh(one)}, {"formula", tori_total}}, one, 1));

    // (2) linear factors / eigenvectors
    Rational alt = 0, geo = 0;
    for (int i = 0; i <= n - 2; ++i) alt += rpow(-Rational(1) / qr, i);
    for (int i = 0; i <= n - 1; ++i) geo += rpow(Rational(1) / qr, i);
    const Rational x1_series = weighted_L(SeriesTag::X1).coefficient(n).eval(qr);
    add(2, "polys", "expected linear factors",
        {{"brute", brute_gl(x1) / conf}, {"cohomology", coh_gl(x1) / conf}, {"series", x1_series / conf}, {"formula", alt}});
    add(2, "tori", "expected eigenvectors", with_brute_tori({{"coinvariants", tori_coh(x1) / tori_total}, {"formula", geo}}, x1, tori_total));

    // (3) quadratic excess, finite n plus the stable expansion
    constexpr int kTerms = 8;
    const auto a = stable_series(SeriesTag::PQuad, kTerms);
    std::vector<Rational> lim(kTerms + 1, Rational(0));
    Rational partial = 0;
    for (int i = 1; i <= kTerms; ++i) {
        partial += (i % 2 ? Rational(-1) : Rational(1)) * Rational(a[static_cast<std::size_t>(i)]);
        lim[static_cast<std::size_t>(i)] = -partial;
    }
    const Rational quad_series = weighted_L(SeriesTag::PQuad).coefficient(n).eval(qr);
    add(3, "polys", "expected irreducible minus reducible quadratic factors",
        {{"brute", brute_gl(excess) / conf}, {"cohomology", coh_gl(excess) / conf}, {"series", -quad_series / conf}}, inverse_q_series(lim));
    std::vector<Rational> tori_lim(kTerms + 1, Rational(0));
    for (int i = 1; i <= kTerms; ++i) tori_lim[static_cast<std::size_t>(i)] = Rational((i + 1) / 2);
    add(3, "tori", "expected reducible minus irreducible 2-dim subtori",
        with_brute_tori({{"coinvariants", tori_coh(quad) / tori_total}}, quad, tori_total), inverse_q_series(tori_lim));

    // (4) sign character: discriminant equidistribution / parity bias
    add(4, "polys", "sum of sign(Frobenius) over squarefree polynomials", {{"brute", brute_gl(sign)}, {"cohomology", coh_gl(sign)}, {"formula", Rational(0)}});
    add(4, "tori", "sum of sign(Frobenius) over maximal tori",
        with_brute_tori({{"coinvariants", tori_coh(sign)}, {"formula", rpow(qr, static_cast<long>(n) * (n - 1) / 2)}}, sign, 1));

    // (5) prime number theorems
    add(5, "polys", "irreducible polynomials",
        {{"brute", brute_gl(chi1)}, {"cohomology", coh_gl(chi1)}, {"formula", Rational(irreducible_count_formula(ctx.q_exact(), n))}});
    add(5, "tori", "irreducible maximal tori",
        with_brute_tori({{"coinvariants", tori_coh(chi1)}, {"hooks", pnt_tori_hook_route(n).eval(qr)}, {"formula", Rational(pnt_tori(ctx.q_exact(), n))}},
                        chi1, 1));

    r.doc = {{"command", "table-a"}, {"q", std::to_string(q)}, {"n", n}, {"rows", rows}, {"match", r.ok}};
    return r;
}

// ---------------------------------------------------------------------------
// Table dumps
// ---------------------------------------------------------------------------

inline Report cmd_dump(Session& s, const std::string& what, int n, const std::string& tag) {
    Report r;
    if (what == "ls") {
        const auto& idx = ClassIndex::of(n);
        r.title = "characters of H^i(P_" + std::to_string(n) + ") by cycle type";
        r.columns = {"i", "dim"};
        for (const auto& t : idx.types()) r.columns.push_back(t.str());
        auto arr = json::array();
        for (int i = 0; i < n; ++i) {
            const auto psi = hi_character(i, n);
            std::vector<std::string> row{std::to_string(i), dim_hi(i, n).get_str()};
            auto vals = json::object();
            for (std::size_t b = 0; b < idx.size(); ++b) {
                row.push_back(to_string(psi.at_index(b)));
                vals[idx.type(b).str()] = to_string(psi.at_index(b));
            }
            r.rows.push_back(row);
            arr.push_back({{"i", i}, {"dim", dim_hi(i, n).get_str()}, {"character", vals}});
        }
        r.doc = {{"command", "dump"}, {"table", "ls"}, {"n", n}, {"degrees", arr}};
    } else if (what == "graded") {
        const auto& t = graded_table(n);
        r.title = "coinvariant multiplicities <V_lambda, R_i> for n=" + std::to_string(n);
        r.columns = {"lambda"};
        for (int i = 0; i <= t.top_degree(); ++i) r.columns.push_back("R_" + std::to_string(i));
        for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
            std::vector<std::string> row{it->first.str()};
            for (const auto& v : it->second) row.push_back(v.get_str());
            r.rows.push_back(row);
        }
        r.doc = t.to_json();
        r.doc["command"] = "dump";
        r.doc["table"] = "graded";
    } else if (what == "series") {
        const auto tg = parse_series_tag(tag);
        const auto series = weighted_L(tg);
        const auto ex = series.expand(n);
        r.title = "[t^k] L(" + to_string(tg) + ") for k <= " + std::to_string(n);
        r.columns = {"k", "coefficient"};
        for (std::size_t k = 0; k < ex.size(); ++k) r.rows.push_back({std::to_string(k), ex[k].str()});
        r.doc = {{"command", "dump"}, {"table", "series"}, {"tag", to_string(tg)}, {"coefficients", series.dump(n)}};
    } else {
        fail(ErrorKind::Parse, "unknown table '" + what + "' (expected ls, graded or series)");
    }
    (void)s;
    return r;
}

}  // namespace tgl::cli
