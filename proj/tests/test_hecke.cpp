#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padiclinv/hecke.hpp"

#include <algorithm>
#include <random>

using namespace padiclinv;

namespace {

using LP = LaurentPoly;

LP random_poly(int nv, std::mt19937_64& rng)
{
    LP r(nv);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        LP::Exps e(static_cast<std::size_t>(nv));
        for (auto& x : e) x = static_cast<int>(rng() % 7) - 3;
        r = r + LP::monomial(nv, e, static_cast<int>(rng() % 11) - 5);
    }
    return r;
}

// product of (1 - c X) over the parameters, expanded factor by factor
LP product_form(const std::vector<LP>& params, int nv)
{
    LP r = LP::constant(nv, 1);
    const LP X = LP::var(nv, LP::kX);
    for (const auto& c : params) r = r * (LP::constant(nv, 1) - c * X);
    return r;
}

}  // namespace

TEST_CASE("Laurent ring axioms")
{
    std::mt19937_64 rng(42);
    const int nv = LP::kFirst + 3;
    for (int t = 0; t < 100; ++t) {
        LP a = random_poly(nv, rng), b = random_poly(nv, rng), c = random_poly(nv, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        // substitution by a monomial is a ring map
        LP img = LP::monomial(nv, {0, 1, 1, 0, -1, 2}, -1);
        CHECK((a * b).substitute(LP::kFirst, img) == a.substitute(LP::kFirst, img) * b.substitute(LP::kFirst, img));
        CHECK((a + b).substitute(LP::kFirst + 1, img) == a.substitute(LP::kFirst + 1, img) + b.substitute(LP::kFirst + 1, img));
    }
    // q^2 = ell regardless of the order of reduction
    LP q = LP::var(nv, LP::kQ), ell = LP::var(nv, LP::kEll);
    CHECK(q * q == ell);
    CHECK(q.pow(5) == ell.pow(2) * q);
    CHECK(q.pow(-1) * q == LP::constant(nv, 1));
    CHECK(q.pow(-3) == ell.pow(-2) * q);
    CHECK_THROWS((LP::constant(nv, 1) + q).pow(-1));
    CHECK_THROWS(LP::var(nv, LP::kFirst, 3000) * LP::var(nv, LP::kFirst, 3000));
}

TEST_CASE("GL_n Hecke polynomials")
{
    {
        const int nv = LP::kFirst + 1;
        LP X = LP::var(nv, LP::kX), b1 = LP::var(nv, LP::kFirst);
        CHECK(hecke_H(nv, 0, 1) == LP::constant(nv, 1) - b1 * X);
    }
    {
        const int nv = LP::kFirst + 2;
        LP X = LP::var(nv, LP::kX), b1 = LP::var(nv, LP::kFirst), b2 = LP::var(nv, LP::kFirst + 1);
        CHECK(hecke_H(nv, 0, 2) == LP::constant(nv, 1) - (b1 + b2) * X + b1 * b2 * X * X);
    }
    for (int n = 1; n <= 5; ++n) {
        const int nv = LP::kFirst + n;
        std::vector<LP> b, binv;
        for (int i = 0; i < n; ++i) {
            b.push_back(LP::var(nv, LP::kFirst + i));
            binv.push_back(LP::var(nv, LP::kFirst + i, -1));
        }
        CHECK(hecke_H(nv, 0, n) == product_form(b, nv));
        CHECK(hecke_H_dual(nv, 0, n) == product_form(binv, nv));
        CHECK(hecke_H(nv, 0, n).coefficient_X(0) == LP::constant(nv, 1));
    }
}

TEST_CASE("GSp Hecke polynomial")
{
    {
        const int nv = LP::kFirst + 1;
        LP X = LP::var(nv, LP::kX), u = LP::var(nv, LP::kFirst), one = LP::constant(nv, 1);
        CHECK(hecke_Htilde(nv, 0, 1) == (one - X) * (one - u * X) * (one - u.pow(-1) * X));
    }
    for (int n = 1; n <= 4; ++n) {
        const int nv = LP::kFirst + n;
        LP H = hecke_Htilde(nv, 0, n);
        CHECK(H.coefficient_X(0) == LP::constant(nv, 1));
        CHECK(H.max_degree_X() == 2 * n + 1);
        // T~_i = T~_{2n+1-i}; with the sign (-1)^i the coefficients are antipalindromic
        for (int i = 0; i <= 2 * n + 1; ++i) CHECK(H.coefficient_X(i) == -H.coefficient_X(2 * n + 1 - i));
        std::vector<LP> params;
        for (int j = 0; j < n; ++j) params.push_back(LP::var(nv, LP::kFirst + j));
        params.push_back(LP::constant(nv, 1));
        for (int j = 0; j < n; ++j) params.push_back(LP::var(nv, LP::kFirst + j, -1));
        for (int i = 0; i <= 2 * n + 1; ++i)
            CHECK(elementary_symmetric(params, i) == elementary_symmetric(params, 2 * n + 1 - i));
        CHECK(H == product_form(params, nv));
    }
}

TEST_CASE("Satake factorization")
{
    for (int n = 1; n <= 5; ++n) {
        auto r = satake_identity_check(n);
        CAPTURE(n);
        CHECK(r.pass);
        CHECK(r.coefficients == 2 * n + 2);
    }
    // a wrong dictionary is caught: u_i -> beta_i without the ell shift
    const int n = 2, nv = LP::kFirst + n;
    LP lhs = hecke_Htilde(nv, 0, n);
    LP ell = LP::var(nv, LP::kEll), X = LP::var(nv, LP::kX);
    LP rhs = (LP::constant(nv, 1) - X) * dilate_X(hecke_H(nv, 0, n), ell) * dilate_X(hecke_H_dual(nv, 0, n), ell.pow(-1));
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("parabolic Satake factorization")
{
    CHECK(parabolic_satake_check(2, {2}).pass);
    CHECK(parabolic_satake_check(3, {1, 1}).pass);
    auto deg = parabolic_satake_check(0, {});
    CHECK(deg.pass);
    CHECK(deg.lhs == deg.rhs);
    // every composition of every j <= n <= 3
    for (int n = 0; n <= 3; ++n) {
        std::vector<std::vector<int>> comps{{}};
        for (std::size_t k = 0; k < comps.size(); ++k) {
            int s = 0;
            for (int x : comps[k]) s += x;
            for (int x = 1; s + x <= n; ++x) {
                auto c = comps[k];
                c.push_back(x);
                comps.push_back(c);
            }
        }
        for (const auto& c : comps) {
            auto r = parabolic_satake_check(n, c);
            CHECK(r.pass);
        }
    }
    // the Siegel case has the shape of the full identity
    auto siegel = parabolic_satake_check(2, {2});
    auto full = satake_identity_check(2);
    CHECK(siegel.lhs == full.lhs);
    CHECK(siegel.rhs == full.rhs);
}

TEST_CASE("universal characters")
{
    for (int n = 1; n <= 4; ++n) {
        Weight l{{}, 0};
        for (int i = n; i >= 1; --i) l.lam.push_back(3 * i);
        auto psi = psi_characters(l);
        CHECK(psi.size() == static_cast<std::size_t>(2 * n + 1));
        CHECK(psi[static_cast<std::size_t>(n)].is_trivial());
        // product of psi_1..psi_n at Art(p), omega stripped, is U~_n^{-1}
        UniversalCharacter prod = psi[0];
        for (int i = 1; i < n; ++i) prod = prod * psi[static_cast<std::size_t>(i)];
        CHECK(prod.U == std::map<int, int>{{n, -1}});
        // psi_i psi_{2n+2-i} is trivial up to the omega powers
        for (int i = 1; i <= n; ++i) {
            auto c = psi[static_cast<std::size_t>(i - 1)] * psi[static_cast<std::size_t>(2 * n + 1 - i)];
            CHECK(c.U.empty());
            CHECK(c.u_power == 0);
            CHECK(c.diamond.empty());
        }

        std::vector<i64> lx(l.lam);
        auto zetas = zeta_list(lx);
        for (const auto& e : enumerate_MW(n)) {
            auto r = reindex(e.w, zetas);
            // bijection: every zeta once
            std::vector<int> seen(static_cast<std::size_t>(2 * n), 0);
            for (const auto& c : r)
                for (std::size_t k = 0; k < zetas.size(); ++k)
                    if (c == zetas[k] && c.label == zetas[k].label) ++seen[k];
            CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
            // omega powers of the nontrivial psi and of the reindexed zetas agree as multisets
            std::vector<int> a, b;
            for (const auto& c : psi)
                if (!c.is_trivial()) a.push_back(c.omega_p);
            for (const auto& c : r) b.push_back(c.omega_p);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
        auto id = reindex(weyl_identity(n), zetas);
        for (std::size_t k = 0; k < zetas.size(); ++k) CHECK(id[k].label == zetas[k].label);
        if (n >= 2) CHECK_THROWS(reindex(longest(n), zetas));
    }
    auto chi = chi_characters({5, 2});
    CHECK(chi[0].u_power == -2);
    CHECK(chi[1].omega_p == -1);
    CHECK(chi[1].U == std::map<int, int>{{1, -1}, {2, 1}});
}
