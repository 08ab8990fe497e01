#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padiclinv/dual.hpp"
#include "padiclinv/padic.hpp"

#include <random>

using namespace padiclinv;

namespace {

// Independent oracle: the truncated series sum_{k>=1} (-1)^{k+1} z^k / k for z
// divisible by p, accumulated as an exact fraction reduced mod p^N.  Terms whose
// valuation reaches N are dropped by a generous fixed cutoff.
i64 log1p_oracle(i64 p, i64 z, int N)
{
    const i64 m = ipow(p, N + 8);
    i64 acc = 0;  // value * p^8 scaled, we keep track of p-powers in k
    // Work with numerator/denominator where denominator is a power of p times a unit.
    // sum is computed as sum_k (-1)^{k+1} z^k * p^{8-ord(k)} * (k/p^{ord(k)})^{-1} mod p^{N+8}
    i64 zk = 1;
    for (int k = 1; k <= 8 * N + 40; ++k) {
        zk = mulmod(zk, z, m);
        int o = ord_int(p, k);
        if (o > 8) break;
        i64 kk = k;
        for (int i = 0; i < o; ++i) kk /= p;
        i64 term = mulmod(mulmod(zk, ipow(p, 8 - o), m), invmod(kk, m), m);
        acc = (k % 2 == 1) ? (acc + term) % m : mod_floor(acc - term, m);
    }
    // divide by p^8
    if (acc % ipow(p, 8) != 0) throw std::runtime_error("oracle: non-integral");
    return (acc / ipow(p, 8)) % ipow(p, N);
}

i64 exp_oracle(i64 p, i64 x, int N)
{
    // sum x^k/k! with k! split into p-power and unit
    const int guard = 12;
    const i64 m = ipow(p, N + guard);
    i64 acc = 0, xk = 1, unit_fact = 1;
    int ofact = 0;
    for (int k = 0; k <= 6 * N + 30; ++k) {
        if (k > 0) {
            xk = mulmod(xk, x, m);
            i64 kk = k;
            while (kk % p == 0) {
                kk /= p;
                ++ofact;
            }
            unit_fact = mulmod(unit_fact, kk, m);
        }
        if (ofact > guard) break;
        i64 term = mulmod(mulmod(xk, ipow(p, guard - ofact), m), invmod(unit_fact, m), m);
        acc = (acc + term) % m;
    }
    return (acc / ipow(p, guard)) % ipow(p, N);
}

}  // namespace

TEST_CASE("ord_p examples")
{
    CHECK(ord_p(Padic::from_int(5, 5, 8)) == 1);
    CHECK(ord_p(Padic::from_int(5, 1, 8)) == 0);
    CHECK(ord_p(Padic::from_int(5, 50, 8)) == 2);
    CHECK_THROWS_AS(ord_p(Padic::zero(5, 8)), PadicError);
}

TEST_CASE("arithmetic precision bookkeeping")
{
    Padic a = Padic::from_parts(5, 0, 7, 6);
    Padic b = Padic::from_parts(5, 2, 3, 6);
    CHECK((a * b).rel_prec() == 6);
    CHECK((a + b).abs_prec() == 6);
    CHECK((b + b).abs_prec() == 8);
    Padic c = Padic::from_parts(5, 0, 1, 4);
    Padic d = Padic::from_parts(5, 0, 5 * 5 * 5 * 5 - 1, 4);
    Padic s = c + d;
    CHECK(s.is_zero());
    CHECK(s.abs_prec() == 4);
    CHECK((a / a).equals(Padic::from_int(5, 1, 6)));
    Padic q = Padic::from_rational(5, 1, 5, 8);
    CHECK(q.valuation() == -1);
    CHECK((q * Padic::from_int(5, 5, 8)).equals(Padic::from_int(5, 1, 8)));
}

TEST_CASE("log examples")
{
    CHECK(log_p(Padic::from_int(5, 5, 8)).is_zero());
    CHECK(log_p(Padic::from_int(5, 1, 8)).is_zero());
    // log_5(2) = log(16)/4, oracle on 16 = 1 + 15
    Padic l2 = log_p(Padic::from_int(5, 2, 8));
    i64 o = log1p_oracle(5, 15, 8);
    Padic oracle = Padic::from_int(5, o, 8).with_abs_prec(8) / Padic::from_int(5, 4, 8);
    CHECK(l2.equals(oracle));
    CHECK(l2.abs_prec() >= 8);
}

TEST_CASE("exp examples")
{
    CHECK(exp_p(Padic::zero(5, 8)).equals(Padic::from_int(5, 1, 8)));
    CHECK(exp_p(log_p(Padic::from_int(5, 6, 8))).equals(Padic::from_int(5, 6, 8)));
    Padic e5 = exp_p(Padic::from_int(5, 5, 8).with_abs_prec(8));
    CHECK(e5.abs_prec() == 8);
    CHECK(e5.residue(8) == exp_oracle(5, 5, 8));
    CHECK_THROWS_AS(exp_p(Padic::from_int(5, 2, 8)), PadicError);
}

TEST_CASE("teichmuller examples")
{
    auto t1 = teichmuller(Padic::from_int(5, 1, 8));
    CHECK(t1.zeta.equals(Padic::from_int(5, 1, 8)));
    CHECK(t1.one_unit.equals(Padic::from_int(5, 1, 8)));
    auto t6 = teichmuller(Padic::from_int(5, 6, 8));
    CHECK(t6.zeta.equals(Padic::from_int(5, 1, 8)));
    CHECK(t6.one_unit.equals(Padic::from_int(5, 6, 8)));
    // oracle: iterate x -> x^5 mod 5^8 until fixed
    i64 m = ipow(5, 8), z = 2;
    for (int i = 0; i < 20; ++i) z = powmod(z, 5, m);
    auto t2 = teichmuller(Padic::from_int(5, 2, 8));
    CHECK(t2.zeta.residue(8) == z);
    CHECK(t2.zeta.pow(4).equals(Padic::from_int(5, 1, 8)));
    CHECK((t2.zeta * t2.one_unit).equals(Padic::from_int(5, 2, 8)));
    CHECK_THROWS_AS(teichmuller(Padic::from_int(5, 10, 8)), PadicError);
}

TEST_CASE("hom_eval examples")
{
    const int N = 8;
    auto lg = Homomorphism::log(5, N);
    auto od = Homomorphism::ord(5, N);
    CHECK(lg(Padic::from_int(5, 5, N)).is_zero());
    CHECK(od(Padic::from_int(5, 25, N)).equals(Padic::from_int(5, 2, N)));
    Padic L = Padic::from_rational(5, 7, 3, N);
    Homomorphism h = lg - od.scaled(L);
    Padic u = Padic::from_int(5, 13, N);
    CHECK(h(Padic::from_int(5, 5, N) * u).equals(log_p(u) - L));
    CHECK(h(Padic::from_int(5, 5 * 13, N)).equals(h(Padic::from_int(5, 5, N)) + h(u)));
}

TEST_CASE("property: log additive, exp/log inverse, teichmuller order")
{
    std::mt19937_64 rng(20261014);
    for (i64 p : {3, 5, 7}) {
        const int N = 10;
        const i64 m = ipow(p, N);
        for (int it = 0; it < 200; ++it) {
            i64 a, b;
            do a = rng() % m; while (a % p == 0);
            do b = rng() % m; while (b % p == 0);
            Padic u = Padic::from_int(p, a, N), v = Padic::from_int(p, b, N);
            CHECK(log_p(u * v).equals(log_p(u) + log_p(v)));
            i64 c = 1 + p * (rng() % (m / p));
            Padic w = Padic::from_int(p, c, N);
            CHECK(exp_p(log_p(w)).equals(w));
            i64 d = p * (rng() % (m / p));
            if (d != 0) {
                Padic x = Padic::from_int(p, d, N).with_abs_prec(N);
                CHECK(log_p(exp_p(x)).equals(x));
            }
            auto t = teichmuller(u);
            CHECK(t.zeta.pow(p - 1).equals(Padic::from_int(p, 1, N)));
            CHECK(log_p(t.zeta).is_zero());
        }
    }
}

TEST_CASE("homomorphism reconstruction from values at 1+p and p")
{
    std::mt19937_64 rng(7);
    for (i64 p : {3, 5, 7}) {
        const int N = 9;
        for (int it = 0; it < 50; ++it) {
            Padic a = Padic::from_int(p, 1 + rng() % 1000, N);
            Padic b = Padic::from_int(p, rng() % 1000 + 1, N);
            Homomorphism h{a, b};
            Padic one_p = Padic::from_int(p, 1 + p, N);
            Padic ra = h(one_p) / log_p(one_p);
            Padic rb = h(Padic::from_int(p, p, N));
            CHECK(ra.equals(a));
            CHECK(rb.equals(b));
            Homomorphism h2{b, a};
            Padic x = Padic::from_int(p, p * p * 11, N);
            CHECK((h + h2)(x).equals(h(x) + h2(x)));
        }
    }
}

TEST_CASE("dual numbers")
{
    const int N = 8;
    Padic a = Padic::from_int(5, 17, N), b = Padic::from_rational(5, 3, 7, N);
    Padic one = Padic::from_int(5, 1, N);
    Dual<Padic> x{one, a}, y{one, b};
    auto xy = x * y;
    CHECK(xy.base.equals(one));
    CHECK(xy.eps.equals(a + b));
    auto xi = x.inverse();
    CHECK(xi.base.equals(one));
    CHECK(xi.eps.equals(-a));
    Dual<Padic> z{Padic::from_int(5, 2, N), a};
    auto zz = z * z.inverse();
    CHECK(zz.base.equals(one));
    CHECK(zz.eps.is_zero());
    CHECK_THROWS(Dual<Padic>{Padic::zero(5, N), one}.inverse());
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == std::pair<i64, i64>{1, 2});
    CHECK(parse_rational("0.4") == std::pair<i64, i64>{2, 5});
    CHECK(parse_rational("-7") == std::pair<i64, i64>{-7, 1});
    CHECK(Padic::from_string(5, "0.4", 8).valuation() == -1);
}
