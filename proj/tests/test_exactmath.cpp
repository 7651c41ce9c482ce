#include "oracles.hpp"

#include "wshift/errors.hpp"
#include "wshift/roots.hpp"
#include "wshift/symmatrix.hpp"
#include "wshift/threshold.hpp"

#include <doctest.h>

using namespace wshift;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

UniPoly poly(std::vector<Rational> c) { return UniPoly(std::move(c)); }

SymMatrix sym(std::vector<std::vector<Rational>> rows) { return SymMatrix::from_rows(rows); }

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == q(-4));
    CHECK(parse_rational("+2/3") == q(2, 3));
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-5)) == "-5");
    CHECK(to_decimal(q(2, 3)) == "0.666667");
    CHECK(to_decimal(q(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(q(9, 16)) == "0.562500");
    CHECK(pow(q(2, 3), 3) == q(8, 27));
    CHECK(sign(q(-1, 7)) == -1);
}

TEST_CASE("polynomial arithmetic")
{
    UniPoly a = poly({q(-1), q(0), q(1)});  // t^2 - 1
    UniPoly b = poly({q(1), q(1)});         // t + 1
    auto [quo, rem] = divmod(a, b);
    CHECK(quo == poly({q(-1), q(1)}));
    CHECK(rem.is_zero());
    CHECK(gcd(a, poly({q(2), q(2)})) == b);
    CHECK((a - a).degree() == -1);
    CHECK(a.derivative() == poly({q(0), q(2)}));
    CHECK(a(q(3)) == 8);
    CHECK(a.sign_at(q(1, 2)) == -1);
    CHECK(monic(poly({q(2), q(4)})) == poly({q(1, 2), q(1)}));
}

TEST_CASE("polynomial evaluation matches Horner on random inputs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c, d;
        for (int i = 0; i < 5; ++i) c.push_back(oracle::random_rational(rng, -3, 3, 5));
        for (int i = 0; i < 4; ++i) d.push_back(oracle::random_rational(rng, -3, 3, 5));
        Rational x = oracle::random_rational(rng, -2, 2, 7);
        UniPoly p(c), r(d);
        CHECK(p(x) == oracle::horner(c, x));
        CHECK((p * r)(x) == oracle::horner(c, x) * oracle::horner(d, x));
        CHECK((p + r)(x) == oracle::horner(c, x) + oracle::horner(d, x));
        if (!r.is_zero()) {
            auto [quo, rem] = divmod(p, r);
            CHECK(quo * r + rem == p);
            CHECK(rem.degree() < r.degree());
        }
    }
}

TEST_CASE("square-free decomposition")
{
    // 3 (t-1)^2 (t-2)^3 (t+1)
    UniPoly t1 = poly({q(-1), q(1)}), t2 = poly({q(-2), q(1)}), t3 = poly({q(1), q(1)});
    UniPoly p = q(3) * t1 * t1 * t2 * t2 * t2 * t3;
    auto f = square_free_decomposition(p);
    REQUIRE(f.size() >= 3);
    CHECK(f[0] == t3);
    CHECK(f[1] == t1);
    CHECK(f[2] == t2);
    CHECK(odd_multiplicity_part(p) == t2 * t3);
    CHECK(square_free_part(p) == t1 * t2 * t3);
    auto ints = primitive_integer_coeffs(poly({q(1, 2), q(-1, 3)}));
    CHECK(ints == std::vector<Integer>{Integer(-3), Integer(2)});
}

TEST_CASE("root isolation")
{
    auto r = isolate_positive_roots(poly({q(-1), q(1)}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].lo <= 1);
    CHECK(r[0].hi >= 1);
    CHECK(isolate_positive_roots(poly({q(1), q(0), q(1)})).empty());

    auto two = isolate_positive_roots(poly({q(2), q(-3), q(1)}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].hi <= two[1].lo);
    CHECK((two[0].lo <= 1 && 1 <= two[0].hi));
    CHECK((two[1].lo <= 2 && 2 <= two[1].hi));

    // t (t^2 - 2): the root at 0 is included only by the nonnegative variant
    UniPoly cubic = poly({q(0), q(-2), q(0), q(1)});
    CHECK(isolate_positive_roots(cubic).size() == 1);
    auto nn = isolate_nonneg_roots(cubic);
    REQUIRE(nn.size() == 2);
    CHECK(nn[0].is_exact());
    CHECK(nn[0].lo == 0);
    CHECK(nn[1].lo * nn[1].lo < 2);
    CHECK(nn[1].hi * nn[1].hi > 2);

    CHECK_THROWS_AS(isolate_nonneg_roots(UniPoly()), ZeroPolynomialError);
}

TEST_CASE("Sturm counts agree with sign changes on a fine grid")
{
    // roots 1/3, 1/2, 5/4 and a double root at 2
    UniPoly p = poly({q(-1, 3), q(1)}) * poly({q(-1, 2), q(1)}) * poly({q(-5, 4), q(1)}) * poly({q(4), q(-4), q(1)});
    auto chain = sturm_sequence(p);
    CHECK(sturm_count(chain, q(0), q(3)) == 4);
    CHECK(sturm_count(chain, q(0), q(1, 2)) == 2);
    CHECK(sturm_count(chain, q(1, 2), q(1)) == 0);
    CHECK(sturm_count(chain, q(1), q(2)) == 2);
    CHECK(root_bound(p) > 2);
}

TEST_CASE("nonnegativity on the ray")
{
    CHECK(nonneg_on_ray(poly({q(1), q(1)})));
    CHECK_FALSE(nonneg_on_ray(poly({q(2), q(-3), q(1)})));
    CHECK(nonneg_on_ray(poly({q(1), q(-2), q(1)})));
    CHECK(nonneg_on_ray(UniPoly()));
    CHECK_FALSE(nonneg_on_ray(poly({q(-1)})));
    CHECK(nonneg_on_ray(poly({q(0), q(-1), q(1)}) * poly({q(0), q(-1), q(1)})));  // t^2 (t-1)^2
}

TEST_CASE("nonneg_on_ray agrees with dense sampling on random polynomials")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        // products of linear factors with small rational roots, so any sign
        // change lands on the sampling grid
        UniPoly p = UniPoly::constant(1);
        int factors = 1 + static_cast<int>(rng() % 4);
        for (int f = 0; f < factors; ++f) {
            Rational root = q(static_cast<long>(rng() % 17) - 4, 4);
            p *= poly({-root, q(1)});
        }
        if (rng() % 2) p *= poly({q(1), q(0), q(1)});
        bool sampled = true;
        for (long i = 0; i <= 4 * 12 * 4; ++i)
            if (p(q(i, 48)) < 0) sampled = false;
        if (p.leading() < 0) sampled = false;
        CHECK_MESSAGE(nonneg_on_ray(p) == sampled, p.to_string());
    }
}

TEST_CASE("real roots: rational detection, ordering, refinement")
{
    UniPoly p = poly({q(-9), q(0), q(16)});  // 16 t^2 - 9
    auto roots = isolate_positive_roots(p);
    REQUIRE(roots.size() == 1);
    RealRoot r(p, roots[0]);
    REQUIRE(r.exact());
    CHECK(*r.exact() == q(3, 4));
    CHECK(r.to_string() == "3/4");

    UniPoly s2 = poly({q(-2), q(0), q(1)});
    RealRoot sqrt2(s2, isolate_positive_roots(s2)[0]);
    CHECK_FALSE(sqrt2.exact());
    CHECK(sqrt2.to_decimal() == "1.414214");
    CHECK(RealRoot(q(7, 5)) < sqrt2);
    CHECK(sqrt2 < RealRoot(q(3, 2)));
    RealRoot fine = sqrt2.refined(q(1, 1000000));
    CHECK(fine.upper() - fine.lower() < q(1, 1000000));
    CHECK(fine == sqrt2);

    // the same number given by a different polynomial
    UniPoly s2b = s2 * poly({q(-5), q(1)});
    RealRoot other(s2b, isolate_positive_roots(s2b)[0]);
    CHECK(other == sqrt2);
}

TEST_CASE("thresholds")
{
    CHECK(first_sign_exit(poly({q(2), q(-3)})) == Threshold::finite(q(2, 3)));
    CHECK(first_sign_exit(poly({q(1), q(1)})).kind() == Threshold::Kind::Infinite);
    CHECK(first_sign_exit(poly({q(-1), q(1)})).kind() == Threshold::Kind::None);
    // touches zero at 1 without changing sign, then exits at 2
    UniPoly touch = poly({q(1), q(-2), q(1)}) * poly({q(2), q(-1)});
    CHECK(first_sign_exit(touch) == Threshold::finite(q(2)));
    CHECK(first_sign_exit(UniPoly()).kind() == Threshold::Kind::Infinite);

    Threshold a = Threshold::finite(q(1, 2)), inf = Threshold::infinite(), none = Threshold::none();
    CHECK(min(a, inf) == a);
    CHECK(min(a, none) == none);
    CHECK(min(Threshold::finite(q(1, 3)), a) == Threshold::finite(q(1, 3)));
    CHECK(inf.exact_string() == "inf");
    CHECK(none.exact_string() == "none");
    CHECK(a.exact_string() == "1/2");
    CHECK(a.approx_string() == "0.500000");
}

TEST_CASE("characteristic polynomial")
{
    CHECK(char_poly(sym({{q(5)}})) == poly({q(-5), q(1)}));
    CHECK(char_poly(sym({{q(1), q(0)}, {q(0), q(1)}})) == poly({q(1), q(-2), q(1)}));
    CHECK(char_poly(sym({{q(2), q(1)}, {q(1), q(2)}})) == poly({q(3), q(-4), q(1)}));
    CHECK(char_poly(sym({{q(2), q(1)}, {q(1), q(2)}})).var() == "lambda");
    CHECK_THROWS(SymMatrix::from_rows({{q(1), q(2)}, {q(3), q(1)}}));
}

TEST_CASE("char_poly matches det(lambda I - M) by Bareiss")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) rows[i][j] = rows[j][i] = oracle::random_rational(rng, -4, 4, 6);
        UniPoly cp = char_poly(sym(rows));
        CHECK(cp.degree() == static_cast<int>(n));
        for (long lam = -3; lam <= 3; ++lam) {
            auto shifted = rows;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) shifted[i][j] = -shifted[i][j];
                shifted[i][i] += lam;
            }
            CHECK(cp(q(lam)) == oracle::bareiss_det(shifted));
        }
        CHECK(determinant(rows) == oracle::bareiss_det(rows));
    }
}

TEST_CASE("PSD test")
{
    CHECK(is_psd(sym({{q(2), q(1)}, {q(1), q(2)}})));
    CHECK_FALSE(is_psd(sym({{q(1), q(2)}, {q(2), q(1)}})));
    CHECK(is_psd(SymMatrix::generate(3, [](std::size_t, std::size_t) { return Rational(1); })));
    CHECK(is_psd(sym({{q(0), q(0)}, {q(0), q(0)}})));
    CHECK_FALSE(is_psd(sym({{q(0), q(1)}, {q(1), q(0)}})));
}

TEST_CASE("is_psd agrees with the principal-minor oracle")
{
    std::mt19937 rng(5);
    int psd_count = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        if (trial % 2 == 0) {
            // Gram matrices of low rank are PSD and often singular
            std::size_t rank = 1 + rng() % n;
            std::vector<std::vector<Rational>> v(n, std::vector<Rational>(rank));
            for (auto& row : v)
                for (auto& x : row) x = oracle::random_rational(rng, -2, 2, 3);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t r = 0; r < rank; ++r) rows[i][j] += v[i][r] * v[j][r];
            if (rng() % 3 == 0) rows[0][0] -= q(1, 100);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) rows[i][j] = rows[j][i] = oracle::random_rational(rng, -2, 3, 4);
        }
        bool expected = oracle::psd_by_minors(rows);
        psd_count += expected;
        CHECK(is_psd(sym(rows)) == expected);
    }
    CHECK(psd_count > 20);
}

TEST_CASE("PSD corner threshold")
{
    std::vector<Rational> g{q(1), q(2, 3)};
    Threshold t = psd_corner_threshold(sym({{q(2, 3), q(1, 2)}, {q(1, 2), q(2, 5)}}), g);
    CHECK(t == Threshold::finite(q(9, 16)));

    std::vector<Rational> zero{q(0)};
    CHECK(psd_corner_threshold(sym({{q(1)}}), zero).kind() == Threshold::Kind::Infinite);
    std::vector<Rational> one{q(1)};
    CHECK(psd_corner_threshold(sym({{q(2, 3)}}), one) == Threshold::finite(q(2, 3)));
    // g outside range(h)
    CHECK(psd_corner_threshold(sym({{q(0)}}), one).kind() == Threshold::Kind::None);
    std::vector<Rational> g2{q(1), q(1)};
    CHECK(psd_corner_threshold(sym({{q(1), q(1)}, {q(1), q(1)}}), g2) == Threshold::finite(q(1)));
    std::vector<Rational> g3{q(1), q(-1)};
    CHECK(psd_corner_threshold(sym({{q(1), q(1)}, {q(1), q(1)}}), g3).kind() == Threshold::Kind::None);
    CHECK_THROWS_AS(psd_corner_threshold(sym({{q(1), q(2)}, {q(2), q(1)}}), g2), NotPsdError);
}

TEST_CASE("corner threshold is the exact boundary of positivity")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 3;
        std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n));
        for (auto& row : v)
            for (auto& x : row) x = oracle::random_rational(rng, -2, 2, 3);
        std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t r = 0; r < n; ++r) h[i][j] += v[i][r] * v[j][r];
        std::vector<Rational> g(n);
        for (auto& x : g) x = oracle::random_rational(rng, -2, 2, 3);
        Threshold t = psd_corner_threshold(sym(h), g);
        if (!t.exact()) continue;
        auto bordered = [&](const Rational& c) {
            oracle::Matrix m(n + 1, std::vector<Rational>(n + 1));
            m[0][0] = 1 / c;
            for (std::size_t i = 0; i < n; ++i) {
                m[0][i + 1] = m[i + 1][0] = g[i];
                for (std::size_t j = 0; j < n; ++j) m[i + 1][j + 1] = h[i][j];
            }
            return m;
        };
        Rational c = *t.exact();
        CHECK(oracle::psd_by_minors(bordered(c)));
        CHECK_FALSE(oracle::psd_by_minors(bordered(c * q(1001, 1000))));
        CHECK(oracle::psd_by_minors(bordered(c * q(999, 1000))));
    }
}
