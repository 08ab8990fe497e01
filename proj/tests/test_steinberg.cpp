#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padiclinv/steinberg.hpp"

#include <map>
#include <set>

using namespace padiclinv;
using namespace intmats;

namespace {

Padic z0(i64 p) { return Padic::zero(p, Padic::kInfinitePrec); }
Padic ex(i64 p, i64 v) { return Padic::from_int(p, v, Padic::kInfinitePrec); }

std::vector<Flag> sample(const std::vector<Flag>& fl, std::size_t k)
{
    std::vector<Flag> out;
    for (std::size_t i = 0; i < fl.size(); i += std::max<std::size_t>(1, fl.size() / k)) out.push_back(fl[i]);
    return out;
}

IntMat perm(const std::array<int, 3>& s)
{
    IntMat w{};
    for (int i = 0; i < 3; ++i) w[3 * i + s[i]] = 1;
    return w;
}

}  // namespace

TEST_CASE("flag enumeration")
{
    for (auto [p, m] : {std::pair<i64, int>{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
        auto fl = enumerate_flags(p, m);
        CHECK(static_cast<i64>(fl.size()) == flag_count(p, m));
        std::set<Flag> canon;
        for (const auto& f : fl) {
            i128 s = 0;
            for (int i = 0; i < 3; ++i) s += i128(f.point[i]) * f.plane[i];
            CHECK(s == 0);
            canon.insert(canonical_mod(f, p, m));
        }
        CHECK(canon.size() == fl.size());
    }
    CHECK(flag_count(3, 2) == 1404);
    CHECK(flag_count(5, 2) == 23250);
}

TEST_CASE("action is a right action")
{
    const i64 p = 3;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<i64> d(-9, 9);
    auto fl = sample(enumerate_flags(p, 2), 200);
    for (const auto& f : fl) {
        IntMat g, h;
        do { for (auto& e : g) e = d(rng); } while (det(g) == 0);
        do { for (auto& e : h) e = d(rng); } while (det(h) == 0);
        Flag a = act(act(f, g), h), b = act(f, mul(g, h));
        // equal projectively: proportional vectors
        CHECK(cross(a.point, b.point) == std::array<i64, 3>{0, 0, 0});
        CHECK(cross(a.plane, b.plane) == std::array<i64, 3>{0, 0, 0});
        CHECK(act(f, identity()) == Flag{primitive(f.point), primitive(f.plane)});
    }
}

TEST_CASE("Iwahori cell partition")
{
    // oracle: flags of w.b for upper triangular b over F_p
    for (i64 p : {3, 5}) {
        std::map<std::pair<int, int>, std::set<Flag>> cells;
        std::array<int, 3> s{0, 1, 2};
        std::set<std::pair<int, int>> labels;
        do {
            IntMat w = perm(s);
            std::set<std::pair<int, int>> seen;
            for (i64 a = 1; a < p; ++a)
                for (i64 b = 0; b < p; ++b)
                    for (i64 c = 0; c < p; ++c)
                        for (i64 e = 1; e < p; ++e)
                            for (i64 f = 0; f < p; ++f) {
                                IntMat bb{a, b, c, 0, e, f, 0, 0, 1};
                                Flag x = canonical_mod(flag_of(mul(w, bb)), p, 1);
                                seen.insert(iw_cell(x, p));
                                cells[iw_cell(x, p)].insert(x);
                            }
            CHECK(seen.size() == 1);
            labels.insert(*seen.begin());
        } while (std::next_permutation(s.begin(), s.end()));
        CHECK(labels.size() == 6);
        std::size_t total = 0;
        for (auto& [k, v] : cells) total += v.size();
        CHECK(static_cast<i64>(total) == flag_count(p, 1));
        // every flag mod p^2 falls into exactly one of the six labels
        for (const auto& x : enumerate_flags(p, 2)) CHECK(labels.count(iw_cell(x, p)) == 1);
    }
}

TEST_CASE("named function examples")
{
    const i64 p = 3;
    CHECK(stfn::phi_iw(p)(standard_flag()).equals(ex(p, 1)));
    CoeffFn f = coeff::table(p, 1, {0, 5, 7});
    auto psi = stfn::psi_cell(p, PSet::ball(0, 1), PSet::units(), f);
    CHECK(psi(flag_of(n(3, 2, 0))).equals(ex(p, 7)));
    CHECK(psi(flag_of(n(3, 4, 0))).equals(ex(p, 5)));
    CHECK(psi(flag_of(n(1, 2, 0))).is_zero());
    CHECK(psi(flag_of(n(3, 3, 0))).is_zero());
    // xi_n vanishes off the identity Iwahori cell
    std::array<int, 3> s{0, 1, 2};
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<i64> d(0, 26);
    while (std::next_permutation(s.begin(), s.end())) {
        for (int k = 0; k < 30; ++k) {
            Flag x = flag_of(mul(perm(s), n(d(rng), d(rng), d(rng))));
            CHECK(stfn::xi_n(p, 1)(x).is_zero());
            CHECK(stfn::xi_n(p, 2)(x).is_zero());
        }
    }
}

TEST_CASE("lift independence of the named functions")
{
    const i64 p = 3;
    const int m = 2;
    Homomorphism lg = Homomorphism::log(p, m + 4), od = Homomorphism::ord(p, m + 4);
    std::vector<SteinbergFunction> fs{stfn::phi_iw(p), stfn::xi_n(p, 1), stfn::xi_n(p, 2), stfn::phi_n(p, 1),
                                      stfn::phi_n(p, 2),
                                      stfn::psi_cell(p, PSet::ball(0, 2), PSet::units(), coeff::log(p, m)),
                                      stfn::xi_cell(p, PSet::ball(0, 1), PSet::ball(1, 2), coeff::one(p)),
                                      translate(stfn::phi_iw(p), u0()), stfn::c1(od, t(p), m + 4, "c_ord"),
                                      stfn::c1(lg, t(p), m + 4, "c_log")};
    for (const auto& f : fs) {
        auto c = lift_independence(f, p, m, m, 50, 17, 60);
        CHECK_MESSAGE(c.pass, f.name);
        CHECK(c.checked > 0);
    }
}

TEST_CASE("translation examples")
{
    const i64 p = 3;
    auto fl = enumerate_flags(p, 2);
    CHECK(compare_pointwise(translate(stfn::phi_iw(p), identity()), stfn::phi_iw(p), fl, 2).pass);
    for (int k = 1; k <= 2; ++k) {
        auto lhs = translate(stfn::phi_iw(p), power(t(p), k));
        auto rhs = stfn::phi_cell(p, PSet::ball(0, k), PSet::ball(0, k), coeff::one(p));
        CHECK(compare_pointwise(lhs, rhs, fl, 2).pass);
    }
    auto A = PSet::ball(0, 1), B = PSet::units();
    auto f = coeff::log(p, 2);
    CHECK(compare_pointwise(translate(stfn::phi_cell(p, A, B, f), u0()),
                            stfn::xi_cell(p, A, B, f) - stfn::psi_cell(p, A, B, f), fl, 2)
              .pass);
    // translating by a Q_p-matrix goes through its integral rescaling
    Mat3 g = Mat3::from_strings(p, {"1/3", "0", "0", "0", "1/3", "0", "0", "0", "1/3"}, 8);
    CHECK(compare_pointwise(translate(stfn::phi_iw(p), g, 6), stfn::phi_iw(p), fl, 2).pass);
}

TEST_CASE("pr: unit, equivariance and the closed form for c_ord")
{
    const i64 p = 3;
    const int m = 2;
    auto fl = enumerate_flags(p, m);
    auto one = stfn::constant(ex(p, 1));
    one.parabolic = Parabolic::P1;
    CHECK(compare_pointwise(pr_multiply(one, stfn::phi_n(p, 2)), stfn::phi_n(p, 2), fl, m).pass);
    auto f1 = stfn::xi_cell(p, PSet::ball(0, 1), PSet::units(), coeff::table(p, 1, {0, 2, 5}));
    auto f2 = stfn::phi_n(p, 1);
    for (const IntMat& g : {u0(), u(), t(p), n(1, 2, 4)})
        CHECK(compare_pointwise(translate(pr_multiply(f1, f2), g), pr_multiply(translate(f1, g), translate(f2, g)), fl, m)
                  .pass);
    CHECK_THROWS(pr_multiply(f2, f1));
    // derived closed form: pr(c_ord[t] (x) phi_n) = phi_n - 2 ch(X in pZp, Z in Zp, Y - XZ in p^n Zp)
    for (int k = 1; k <= 2; ++k) {
        auto prf = pr_multiply(stfn::c1(Homomorphism::ord(p, m + 4), t(p), m + 4, "c"), stfn::phi_n(p, k));
        SteinbergFunction closed{"closed", Parabolic::B, [p, k](const Flag& x) {
                                     Padic r = stfn::phi_n(p, k)(x);
                                     auto c = big_cell(x, p, 20);
                                     if (c && PSet::ball(0, 1).contains(c->X) && PSet::zp().contains(c->Z) &&
                                         PSet::ball(0, k).contains(c->Y - c->X * c->Z))
                                         r -= ex(p, 2);
                                     return r;
                                 }};
        CHECK(compare_pointwise(prf, closed, fl, m).pass);
    }
}

TEST_CASE("St equality test")
{
    const i64 p = 3;
    auto f = stfn::phi_iw(p);
    auto h1 = stfn::xi_cell(p, PSet::ball(0, 1), PSet::zp(), coeff::one(p));
    auto h2 = stfn::phi_n(p, 1);
    auto r = st_equal(f, f + h1 + h2, p, 2, 2);
    CHECK(r.pass);
    CHECK_FALSE(r.depends_on_point_only);
    CHECK(st_equal(f, f + h1, p, 2, 2).depends_on_point_only);
    // phi_Iw itself is nonzero in St
    auto z = st_equal(f, stfn::zero(p), p, 2, 2);
    CHECK_FALSE(z.pass);
    CHECK(z.inconsistent_cycles > 0);
}

TEST_CASE("Hecke operator")
{
    const i64 p = 3;
    auto fl = enumerate_flags(p, 2);
    CHECK(compare_pointwise(hecke_up1(stfn::phi_iw(p), p), stfn::phi_iw(p), fl, 2).pass);
    CHECK(compare_pointwise(hecke_up1(stfn::zero(p), p), stfn::zero(p), fl, 2).pass);
    CHECK(up1_squared_cosets(p).size() == 81);
    CHECK(in_iwahori(identity(), p));
    CHECK_FALSE(in_iwahori(u0(), p));
}

TEST_CASE("identities at p = 3")
{
    for (int n = 1; n <= 2; ++n)
        for (const char* id : {"t-phi-iw", "u0-phi", "i", "ii", "iii", "iv", "v", "up1", "up1-squared"}) {
            auto r = verify_identity(id, {3, n, 2, 0, 42});
            CHECK_MESSAGE(r.pass, id, " n=", n, " ", r.first_counterexample);
            CHECK(r.checked > 0);
        }
    CHECK(verify_identity("pr-ord", {3, 1, 2, 0, 42}).pass);
    CHECK_THROWS(verify_identity("nope", {3, 1, 2, 0, 42}));
}

TEST_CASE("Schwartz traces")
{
    for (i64 p : {3, 5})
        for (int n = 1; n <= 2; ++n) {
            auto r = verify_schwartz_traces(p, n);
            CHECK_MESSAGE(r.pass, r.detail);
        }
    auto phi = schwartz_phi(3, 2, 0, 3);
    auto zero = schwartz_trace(phi, {});
    for (auto v : zero.values) CHECK(v == 0);
    // p^{-2} scaling pushes values outside what the window determines
    Mat2Q big{{1, 0, 0, 1}, {9, 1, 1, 9}};
    CHECK_THROWS_WITH(schwartz_trace(phi, {big}), "window overflow");
    // the table itself
    CHECK(phi.at(0, 1) == 1);
    CHECK(phi.at(9, 10) == 1);
    CHECK(phi.at(3, 1) == 0);
    CHECK(phi.at(0, 4) == 0);
}
