#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padiclinv/measures.hpp"

#include <random>

using namespace padiclinv;

namespace {

// <a>^k for integer k, computed as (a / omega(a))^k without logs
Padic angle_pow(i64 p, i64 a, i64 k, int prec)
{
    Padic x = Padic::from_int(p, a, prec);
    Padic u = x * teichmuller(x).zeta.inverse();
    return k >= 0 ? u.pow(k) : u.inverse().pow(-k);
}

Padic naive_sum(const Measure& mu, const std::function<Padic(i64)>& f)
{
    Padic s = Padic::zero(mu.p, mu.prec);
    for (i64 a = 1; a < mu.modulus(); ++a)
        if (a % mu.p != 0) s = s + mu[a] * f(a);
    return s;
}

Character random_character(i64 p, int prec, std::mt19937_64& rng)
{
    return teichmuller_character(p, static_cast<int>(rng() % static_cast<std::uint64_t>(p - 1)), prec);
}

}  // namespace

TEST_CASE("dirac, norm, convolve, iota")
{
    const i64 p = 5;
    const int prec = 10;
    Measure d = dirac(p, 3, 57, prec);
    CHECK(norm_project(d).equals(dirac(p, 2, 57 % 25, prec)));
    CHECK_THROWS(dirac(p, 2, 10, prec));

    Measure uni = zero_measure(p, 3, prec);
    for (i64 a = 1; a < 125; ++a)
        if (a % p) uni.table[static_cast<std::size_t>(a)] = Padic::from_int(p, 1, prec);
    Measure nu = norm_project(uni);
    for (i64 a = 1; a < 25; ++a)
        if (a % p) CHECK(nu[a].equals(Padic::from_int(p, p, prec)));

    std::mt19937_64 rng(42);
    Measure r = random_measure(p, 3, prec, false, rng);
    CHECK(norm_project(norm_project(r)).equals(norm_project(norm_project(r))));
    CHECK(norm_project(norm_project(r)).n == 1);

    CHECK(convolve(dirac(p, 2, 7, prec), dirac(p, 2, 9, prec)).equals(dirac(p, 2, 63 % 25, prec)));
    CHECK(convolve(r, dirac(p, 3, 1, prec)).equals(r));
    CHECK(iota(dirac(p, 2, 7, prec)).equals(dirac(p, 2, invmod(7, 25), prec)));

    Measure a = random_measure(p, 2, prec, false, rng), b = random_measure(p, 2, prec, false, rng),
            c = random_measure(p, 2, prec, false, rng);
    CHECK(convolve(convolve(a, b), c).equals(convolve(a, convolve(b, c))));
}

TEST_CASE("characters")
{
    const i64 p = 7;
    const int prec = 10;
    std::mt19937_64 rng(7);
    Character w = teichmuller_character(p, 1, prec);
    CHECK(eval_character(dirac(p, 2, 10, prec), w).equals(w(3)));
    Measure toy = dirac(p, 2, 10, prec) - dirac(p, 2, 1, prec);
    CHECK(eval_character(toy, trivial_character(p, prec)).is_zero());
    CHECK_THROWS_WITH(eval_character(dirac(p, 1, 2, prec), character_from_table(p, 2, [&] {
                          std::vector<Padic> v(49, Padic::zero(p, prec));
                          for (i64 a = 1; a < 49; ++a)
                              if (a % p) v[static_cast<std::size_t>(a)] = w(a);
                          return v;
                      }())),
                      "conductor too deep");
    // non-multiplicative table rejected
    std::vector<Padic> bad(7, Padic::from_int(p, 1, prec));
    bad[3] = Padic::from_int(p, -1, prec);
    CHECK_THROWS(character_from_table(p, 1, bad));

    for (int t = 0; t < 50; ++t) {
        Measure mu = random_measure(p, 2, prec, false, rng), nu = random_measure(p, 2, prec, false, rng);
        Character chi = random_character(p, prec, rng);
        CHECK(eval_character(iota(mu), chi).equals(naive_sum(mu, [&](i64 a) { return chi(a).inverse(); })));
        CHECK(eval_character(iota(mu), chi).equals(eval_character(mu, inverse(chi))));
        CHECK(eval_character(convolve(mu, nu), chi).equals(eval_character(mu, chi) * eval_character(nu, chi)));
        // tower coherence for conductor p
        Measure big = random_measure(p, 3, prec, false, rng);
        CHECK(eval_character(norm_project(big), chi).equals(eval_character(big, chi)));
    }
}

TEST_CASE("smoothing factor at a character")
{
    const i64 p = 5;
    const int prec = 10;
    Character chi = teichmuller_character(p, 3, prec);
    const i64 c = 7;
    Padic psi = teichmuller_character(p, 1, prec)(c);
    Measure sm = smoothing_measure(p, 2, c, psi, prec);
    CHECK(eval_character(sm, chi).equals(Padic::from_int(p, c * c, prec) - psi.inverse() * chi(c).inverse()));
}

TEST_CASE("eval_power two paths")
{
    for (i64 p : {3, 5, 7}) {
        const int prec = 12;
        std::mt19937_64 rng(static_cast<std::uint64_t>(p));
        CHECK(eval_power(dirac(p, 2, 1, prec), Padic::from_rational(p, 2, 3 + p, prec)).equals(Padic::from_int(p, 1, prec)));
        for (int t = 0; t < 10; ++t) {
            Measure mu = random_measure(p, 2, prec, false, rng);
            const i64 k = static_cast<i64>(rng() % 7) - 3;
            Padic s = Padic::from_int(p, k, prec);
            Padic oracle = naive_sum(mu, [&](i64 a) { return angle_pow(p, a, k, prec); });
            CHECK(eval_power(mu, s).equals(oracle));
            CHECK(eval_power_direct(mu, s).equals(oracle));
            CHECK(eval_power(mu, Padic::zero(p, prec)).equals(eval_character(mu, trivial_character(p, prec))));
            // non-integer s
            Padic s2 = Padic::from_rational(p, static_cast<i64>(rng() % 50), 1 + p * static_cast<i64>(rng() % 9), prec);
            CHECK(eval_power(mu, s2).equals(eval_power_direct(mu, s2)));
        }
        const i64 a = 2;
        Padic s = Padic::from_rational(p, 1, 2, prec);
        CHECK(eval_power(dirac(p, 2, a, prec), s).equals(exp_p(s * log_p(Padic::from_int(p, a, prec)))));
    }
}

TEST_CASE("eval_power multiplicative mod p^n")
{
    const i64 p = 5;
    const int n = 3, prec = 10;
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Measure mu = random_measure(p, n, prec, false, rng), nu = random_measure(p, n, prec, false, rng);
        Padic s = Padic::from_int(p, static_cast<i64>(rng() % 100), prec);
        CHECK(eval_power(convolve(mu, nu), s).equals_mod(eval_power(mu, s) * eval_power(nu, s), n));
    }
}

TEST_CASE("exceptional zero property")
{
    for (i64 p : {3, 5}) {
        const int prec = 16, r = 6;
        std::mt19937_64 rng(42 + static_cast<std::uint64_t>(p));
        for (int t = 0; t < 100; ++t) {
            Measure mu = random_measure(p, 2, prec, true, rng);
            CHECK(eval_power(mu, Padic::zero(p, prec)).is_zero());
            auto coeffs = eval_power_series(mu, 2);
            CHECK(coeffs[0].is_zero());
            CHECK(coeffs[1].equals(derivative_at_zero(mu)));
            // finite difference: (E(p^r) - E(0)) / p^r = c_1 mod p^r
            Padic pr = Padic::from_int(p, ipow(p, r), prec);
            Padic fd = (eval_power_direct(mu, pr) - eval_power_direct(mu, Padic::zero(p, prec))) / pr;
            CHECK(fd.equals_mod(coeffs[1], r));
        }
    }
}

TEST_CASE("derivatives")
{
    const i64 p = 5;
    const int prec = 14;
    const i64 a = 7;
    Measure toy = dirac(p, 2, a, prec) - dirac(p, 2, 1, prec);
    Padic la = log_p(Padic::from_int(p, a, prec));
    CHECK(derivative_at_zero(toy).equals(la));
    CHECK(eval_power_series(toy, 1)[1].equals(la));

    Twist tw{11, Padic::from_int(p, 3, prec)};
    CHECK(twisted_derivative_shortcut(toy, tw).equals(-(tw.eps.inverse() * la)));
    CHECK(twisted_derivative(toy, tw).equals(twisted_derivative_shortcut(toy, tw)));
    CHECK_THROWS_WITH(twisted_derivative_shortcut(dirac(p, 2, a, prec), tw), "no exceptional zero");

    // numeric derivative of L+ at s = 1 through s = 1 + p^r
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        Measure mu = random_measure(p, 2, prec, t % 2 == 0, rng);
        const int r = 5;
        Padic h = Padic::from_int(p, ipow(p, r), prec);
        Padic one = Padic::from_int(p, 1, prec);
        Padic fd = (twisted_lplus(mu, tw, one + h) - twisted_lplus(mu, tw, one)) / h;
        CHECK(fd.equals_mod(twisted_derivative(mu, tw), r));
    }
}

TEST_CASE("smoothing factor at <x>^s")
{
    const i64 p = 7;
    const int n = 3, prec = 12;
    const i64 c = 3;
    Padic psi = teichmuller_character(p, 2, prec)(c);
    Measure sm = smoothing_measure(p, n, c, psi, prec);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Padic s = Padic::from_rational(p, static_cast<i64>(rng() % 40), 1 + p * static_cast<i64>(rng() % 5), prec);
        Padic cs = exp_p(s * log_p(Padic::from_int(p, c, prec)));
        Padic rhs = Padic::from_int(p, c * c, prec) - psi.inverse() * cs.inverse();
        CHECK(eval_power(sm, s).equals_mod(rhs, n));
    }
}

TEST_CASE("euler factors")
{
    for (i64 p : {3, 5, 7}) {
        EulerFactor em = euler_factor("minus", p), ep = euler_factor("plus", p);
        CHECK(em.value(0) == 0);
        CHECK(ep.value(1) == 0);
        CHECK(em.zero_order() == 1);
        CHECK(ep.zero_order() == 1);
        CHECK(em.leading_E() == 1);
        CHECK(ep.leading_E() == -p);
        Rational L1 = 1 / (1 - Rational(1, p * p));
        CHECK(ep.leading_coefficient() == -p * L1);
        // closed form at s = 2: -p^2 (1 - p) / (1 - p^-3)
        CHECK(ep.value(2) == Rational(-p * p) * (1 - p) / (1 - Rational(1, p * p * p)));
    }
    CHECK_THROWS_WITH(euler_factor("minus", 5).value(-1), "pole");
    CHECK_THROWS(euler_factor("other", 5));
}
