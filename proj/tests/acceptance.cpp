// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <twistedgl/twistedgl.hpp>

using namespace tgl;
using CP = CharacterPolynomial;

namespace {

struct Checker {
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (!failures++) first = what;
    }
};

template <class A, class B>
std::string show(const std::string& label, const A& got, const B& want) {
    std::ostringstream os;
    os << label << ": got " << got << ", want " << want;
    return os.str();
}

Rational at(std::uint64_t q) { return Rational(static_cast<unsigned long>(q)); }

const CP& quad() {
    static const CP p = CP::binom_X(1, 2) - CP::X(2);
    return p;
}

void squarefree_counts(Checker& c) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        const auto ctx = make_field_of_order(q);
        for (int n = 2; n <= 6; ++n) {
            Integer count = 0;
            enumerate_squarefree(ctx, n, [&](const FqPoly&) { ++count; });
            const Integer want = conf_count(ctx.q_exact(), n);
            c.expect(count == want, show("q=" + std::to_string(q) + " n=" + std::to_string(n), count, want));
        }
    }
    for (auto [q, want] : std::vector<std::pair<std::uint64_t, long>>{{3, 18}, {11, 1210}}) {
        Integer count = 0;
        enumerate_squarefree(make_field_of_order(q), 3, [&](const FqPoly&) { ++count; });
        c.expect(count == want, show("q=" + std::to_string(q) + " n=3", count, want));
    }
}

void twisted_identity(Checker& c) {
    for (std::uint64_t q : {2u, 3u, 5u}) {
        const auto ctx = make_field_of_order(q);
        for (int n = 2; n <= 6; ++n) {
            const std::vector<std::pair<std::string, ClassFunction>> chis = {
                {"1", trivial_character(n)},
                {"X1", CP::X(1).to_class_function(n)},
                {"quad", quad().to_class_function(n)},
                {"sign", sign_character(n)},
                {"chi1", chi_k(n, 1)},
                {"distinct", chi_distinct(n)},
            };
            for (const auto& [name, chi] : chis) {
                const Rational lhs = lhs_conf_sum(chi, ctx, n);
                const Rational rhs = rhs_conf_sum(chi, at(q), n);
                c.expect(lhs == rhs, show(name + " q=" + std::to_string(q) + " n=" + std::to_string(n), lhs, rhs));
            }
        }
    }
    for (auto [q, want] : std::vector<std::pair<std::uint64_t, long>>{{3, 120}, {11, 134200}}) {
        const auto r = verify_gl(CP::X(1).to_class_function(5), make_field_of_order(q), 5);
        c.expect(r.match && r.lhs == want, show("X1 q=" + std::to_string(q) + " n=5", r.lhs, want));
    }
}

void braid_table(Checker& c) {
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= 9; ++i) {
            const int want = n <= i ? 0 : (n == i + 1 ? 1 : 2);
            const Rational got = ls_multiplicity(CP::X(1), i, n);
            c.expect(got == want, show("X1 n=" + std::to_string(n) + " i=" + std::to_string(i), got, want));
        }
    for (int n = 2; n <= 8; ++n)
        for (int i = 0; i < n; ++i) {
            const Rational got = ls_multiplicity(sign_character(n), i, n);
            c.expect(got == 0, show("sign n=" + std::to_string(n) + " i=" + std::to_string(i), got, 0));
        }
}

void stable_quadratic_excess(Checker& c) {
    const auto a = stable_coefficients(SeriesTag::PQuad, 12);
    const std::vector<long> want = {1, 4, 7, 8, 9, 12, 15, 16, 17, 20, 23, 24};
    c.expect(a.size() == want.size(), "wrong number of coefficients");
    const int offset[] = {0, -1, 0, 1};
    for (std::size_t k = 0; k < a.size() && k < want.size(); ++k) {
        const int i = static_cast<int>(k) + 1;
        c.expect(a[k] == want[k], show("a_" + std::to_string(i), a[k], want[k]));
        c.expect(a[k] == 2 * i + offset[i % 4], show("mod-4 pattern at " + std::to_string(i), a[k], 2 * i + offset[i % 4]));
    }
    for (int i = 1; i <= 4; ++i) {
        const Rational s = stable_multiplicity(quad(), i);
        c.expect(s == Rational(a[static_cast<std::size_t>(i - 1)]), show("cohomology i=" + std::to_string(i), s, a[static_cast<std::size_t>(i - 1)]));
    }
}

void unstable_fit(Checker& c) {
    const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
    const auto x1 = fit_multiplicities(CP::X(1).to_class_function(5), 5, primes);
    const auto pq = fit_multiplicities(quad().to_class_function(5), 5, primes);
    const std::vector<Rational> want_x1 = {1, 2, 2, 2, 1, 0};
    const std::vector<Rational> want_pq = {0, 1, 4, 5, 2, 0};
    c.expect(x1 == want_x1, "X1 fit differs");
    c.expect(pq == want_pq, "quad fit differs");
}

void expected_linear_factors(Checker& c) {
    for (std::uint64_t q : {3u, 11u}) {
        const auto ctx = make_field_of_order(q);
        for (int n = 3; n <= 6; ++n) {
            Rational want = 0;
            for (int k = 0; k <= n - 2; ++k) want += rpow(Rational(-1) / at(q), k);
            const Rational got = expected_statistic(CP::X(1).to_class_function(n), ctx, n);
            c.expect(got == want, show("q=" + std::to_string(q) + " n=" + std::to_string(n), got, want));
        }
    }
    const Rational a = expected_statistic(CP::X(1).to_class_function(5), make_field_of_order(3), 5);
    const Rational b = expected_statistic(CP::X(1).to_class_function(5), make_field_of_order(11), 5);
    c.expect(a == make_rational(20, 27), show("q=3 n=5", a, "20/27"));
    c.expect(b == make_rational(1220, 1331), show("q=11 n=5", b, "1220/1331"));
}

void polynomial_pnt(Checker& c) {
    for (std::uint64_t q : {2u, 3u}) {
        const auto ctx = make_field_of_order(q);
        for (int n = 1; n <= 8; ++n) {
            const Integer f = irreducible_count_formula(ctx.q_exact(), n);
            const Integer b = irreducible_count_bruteforce(ctx, n);
            c.expect(f == b, show("q=" + std::to_string(q) + " n=" + std::to_string(n), f, b));
            for (int k = 1; k <= 2 && n >= 4; ++k) {
                const Rational gap = abs(Rational(Rational(phi_nk(ctx, n, k)) - pi_nk(n, k) * rpow(at(q), n)));
                const Rational bound = phi_pi_bound(ctx.q_exact(), n, k);
                c.expect(gap <= bound, show("bound q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k), gap, bound));
            }
        }
    }
}

void tori_symbolic(Checker& c) {
    for (int n = 1; n <= 8; ++n) {
        const long top = static_cast<long>(n) * n - n;
        c.expect(tori_polynomial(trivial_character(n)) == QLaurent::monomial(top), "Steinberg n=" + std::to_string(n));
        QLaurent geo;
        for (int i = 0; i < n; ++i) geo.add(top - i, 1);
        c.expect(tori_polynomial(CP::X(1).to_class_function(n)) == geo, "eigenvectors n=" + std::to_string(n));
        c.expect(tori_polynomial(sign_character(n)) == QLaurent::monomial(static_cast<long>(n) * (n - 1) / 2), "sign n=" + std::to_string(n));
        const auto formula = pnt_tori_formula(n);
        c.expect(tori_polynomial(chi_k(n, 1)) == formula, "pnt chi_1 route n=" + std::to_string(n));
        c.expect(pnt_tori_hook_route(n) == formula, "pnt hook route n=" + std::to_string(n));
    }
    const auto e = tori_quadratic_excess(8);
    const std::vector<long> want = {1, 1, 2, 2, 3, 3, 4};
    for (std::size_t i = 0; i < want.size(); ++i)
        c.expect(e.coeff(-static_cast<long>(i) - 1) == want[i], show("excess q^-" + std::to_string(i + 1), e.coeff(-static_cast<long>(i) - 1), want[i]));
}

void tori_bruteforce_oracle(Checker& c) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
        const auto counts = tori_bruteforce(q, 2);
        const Integer qq(static_cast<unsigned long>(q));
        Integer total = 0;
        for (const auto& [t, n] : counts) total += n;
        c.expect(total == qq * qq, show("total q=" + std::to_string(q), total, Integer(qq * qq)));
        const Integer split = counts.count(CycleType::from_parts({1, 1})) ? counts.at(CycleType::from_parts({1, 1})) : Integer(0);
        const Integer nonsplit = counts.count(CycleType::from_parts({2})) ? counts.at(CycleType::from_parts({2})) : Integer(0);
        c.expect(split == qq * (qq + 1) / 2, show("split q=" + std::to_string(q), split, Integer(qq * (qq + 1) / 2)));
        c.expect(nonsplit == pnt_tori(qq, 2), show("nonsplit q=" + std::to_string(q), nonsplit, pnt_tori(qq, 2)));
    }
    const auto counts = tori_bruteforce(2, 3);
    Integer total = 0;
    for (const auto& [t, n] : counts) total += n;
    c.expect(total == 64, show("total q=2 n=3", total, 64));
    const Integer anisotropic = counts.count(CycleType::from_parts({3})) ? counts.at(CycleType::from_parts({3})) : Integer(0);
    c.expect(anisotropic == pnt_tori(2, 3), show("type (3) q=2", anisotropic, pnt_tori(2, 3)));
}

void structural_invariants(Checker& c) {
    for (int n = 1; n <= 8; ++n) {
        const std::string at_n = " n=" + std::to_string(n);
        const auto& table = graded_table(n);
        for (const auto& [lambda, row] : table.rows) {
            Integer sum = 0;
            for (const auto& v : row) sum += v;
            c.expect(sum == hook_length_dimension(lambda), "Chevalley row " + lambda.str() + at_n);
        }

        const auto parts = enumerate_partitions(n);
        std::vector<ClassFunction> irr;
        for (const auto& l : parts) irr.push_back(irreducible_character(l));
        for (std::size_t a = 0; a < irr.size(); ++a)
            for (std::size_t b = 0; b < irr.size(); ++b)
                c.expect(inner_product(irr[a], irr[b]) == (a == b ? 1 : 0), "orthonormality" + at_n);

        Integer sizes = 0;
        for (const auto& mu : ClassIndex::of(n).types()) {
            sizes += class_size(mu);
            c.expect(class_size(mu) * z_mu(mu) == factorial(static_cast<unsigned long>(n)), "class size " + mu.str());
        }
        c.expect(sizes == factorial(static_cast<unsigned long>(n)), "class sizes sum" + at_n);

        for (int m = 1; m <= n; ++m)
            for (const auto& mu : ClassIndex::of(m).types()) {
                const Rational got = inner_product(CP::binom_mu(mu).to_class_function(n), trivial_character(n));
                c.expect(got == Rational(1) / Rational(z_mu(mu)), "factorial moment " + mu.str() + at_n);
            }

        ClassFunction hooks(n);
        for (int k = 0; k < n; ++k) {
            std::vector<int> hook{n - k};
            hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
            const auto v = irreducible_character(Partition(hook));
            hooks = k % 2 ? hooks - v : hooks + v;
        }
        c.expect(hooks == Rational(n) * chi_k(n, 1), "chi_1 hook identity" + at_n);

        std::vector<ClassFunction> zero_one = {trivial_character(n), chi_distinct(n)};
        for (int k = 1; k <= 3; ++k) zero_one.push_back(chi_k(n, k));
        for (const auto& chi : zero_one)
            for (int i = 0; i < n; ++i)
                c.expect(abs(ls_multiplicity(chi, i, n)) <= Rational(partition_count(2 * i)), "p(2i) bound" + at_n);

        for (int k = 1; k <= 3; ++k)
            for (int i = 1; 2 * k * i < n; ++i)
                c.expect(ls_multiplicity(chi_k(n, k), i, n) == 0, "chi_k vanishing k=" + std::to_string(k) + at_n);
    }
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "squarefree counts", 10, squarefree_counts},
        {2, "twisted GL identity", 120, twisted_identity},
        {3, "braid multiplicity table", 60, braid_table},
        {4, "stable quadratic excess", 300, stable_quadratic_excess},
        {5, "unstable dims via fitting", 60, unstable_fit},
        {6, "expected linear factors", 60, expected_linear_factors},
        {7, "PNT for polynomials", 60, polynomial_pnt},
        {8, "tori symbolic statistics", 30, tori_symbolic},
        {9, "tori brute-force oracle", 120, tori_bruteforce_oracle},
        {10, "structural invariants", 300, structural_invariants},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs <= cr.limit_seconds, "runtime over " + std::to_string(static_cast<int>(cr.limit_seconds)) + " s");
        const bool ok = c.failures == 0;
        failed += !ok;
        std::printf("criterion %2d %-28s %s  %7.2f s%s%s\n", cr.id, cr.name.c_str(), ok ? "PASS" : "FAIL", secs,
                    ok ? "" : "  ", ok ? "" : c.first.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
