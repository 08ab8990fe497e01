#include "padiclinv/suites.hpp"

#include "padiclinv/hecke.hpp"
#include "padiclinv/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace padiclinv {

void validate(const SuiteConfig& cfg)
{
    if (cfg.p == 2 || !is_prime(cfg.p)) throw std::invalid_argument("p = " + std::to_string(cfg.p) + " is not an odd prime");
    if (cfg.m < 1) throw std::invalid_argument("level m must be at least 1");
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    if (cfg.prec < cfg.m + 4)
        throw std::invalid_argument("precision " + std::to_string(cfg.prec) + " below m + 4 = " + std::to_string(cfg.m + 4));
    if (cfg.prec > max_precision(cfg.p))
        throw std::invalid_argument("precision " + std::to_string(cfg.prec) + " exceeds the limit " +
                                    std::to_string(max_precision(cfg.p)) + " for p = " + std::to_string(cfg.p));
    if (cfg.samples < 0) throw std::invalid_argument("negative sample count");
}

namespace {

using Body = std::function<void(Entry&)>;

Task make_task(const std::string& suite, const std::string& id, const std::string& anchor, Json params, Body body)
{
    Task t;
    t.suite = suite;
    t.id = id;
    t.run = [=] {
        Entry e;
        e.suite = suite;
        e.id = id;
        e.anchor = anchor;
        e.parameters = params;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.pass = true;
            body(e);
        } catch (const std::exception& ex) {
            e.pass = false;
            e.counterexample = Json{{"error", ex.what()}};
        }
        e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return e;
    };
    return t;
}

// first failure wins
void fail(Entry& e, Json ce)
{
    if (e.pass) e.counterexample = std::move(ce);
    e.pass = false;
}

i64 draw(std::mt19937_64& rng, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }

Padic random_unit(i64 p, int prec, std::mt19937_64& rng)
{
    const i64 q = ipow(p, prec);
    i64 a = 0;
    while (a % p == 0) a = draw(rng, 1, q - 1);
    return Padic::from_int(p, a, prec);
}

// ---------------------------------------------------------------- padic

std::vector<Task> padic_suite(const SuiteConfig& cfg)
{
    const i64 p = cfg.p;
    const int N = cfg.prec;
    const i64 count = std::clamp<i64>(cfg.samples, 100, 2000);
    const std::uint64_t seed = cfg.seed;
    Json params{{"p", p}, {"prec", N}, {"samples", count}, {"seed", seed}};
    std::vector<Task> ts;
    ts.push_back(make_task("padic", "padic.log-exp", "log_p and exp_p are inverse between 1 + pZ_p and pZ_p", params,
                           [=](Entry& e) {
                               std::mt19937_64 rng(seed);
                               for (i64 i = 0; i < count; ++i) {
                                   Padic x = Padic::from_int(p, p * draw(rng, 0, ipow(p, N - 1) - 1), N);
                                   if (!log_p(exp_p(x)).equals(x)) fail(e, Json{{"x", to_json(x)}, {"check", "log exp"}});
                                   Padic u = x + Padic::from_int(p, 1, N);
                                   if (!exp_p(log_p(u)).equals(u)) fail(e, Json{{"x", to_json(u)}, {"check", "exp log"}});
                               }
                               e.stats["checked"] = 2 * count;
                           }));
    ts.push_back(make_task("padic", "padic.log-homomorphism",
                           "log_p is a homomorphism on Q_p^x with log_p(p) = 0; Teichmuller splitting x = zeta * <x>",
                           params, [=](Entry& e) {
                               std::mt19937_64 rng(seed + 1);
                               const Padic pp = Padic::from_int(p, p, N);
                               if (!log_p(pp).is_zero()) fail(e, Json{{"check", "log p"}});
                               for (i64 i = 0; i < count; ++i) {
                                   Padic x = random_unit(p, N, rng) * pp.pow(draw(rng, -2, 2));
                                   Padic y = random_unit(p, N, rng);
                                   if (!log_p(x * y).equals(log_p(x) + log_p(y)))
                                       fail(e, Json{{"x", to_json(x)}, {"y", to_json(y)}, {"check", "log(xy)"}});
                                   auto ts_ = teichmuller(y);
                                   bool ok = ts_.zeta.pow(p - 1).equals(y.one_like().with_abs_prec(N)) &&
                                             ts_.zeta.equals_mod(y, 1) && (ts_.zeta * ts_.one_unit).equals(y) &&
                                             ts_.one_unit.equals_mod(y.one_like(), 1);
                                   if (!ok) fail(e, Json{{"x", to_json(y)}, {"check", "teichmuller"}});
                               }
                               e.stats["checked"] = count;
                           }));
    ts.push_back(make_task("padic", "padic.homomorphisms", "a log_p + b ord_p is a homomorphism with value b at p", params,
                           [=](Entry& e) {
                               std::mt19937_64 rng(seed + 2);
                               const Padic pp = Padic::from_int(p, p, N);
                               for (i64 i = 0; i < count; ++i) {
                                   Homomorphism l{Padic::from_int(p, draw(rng, -50, 50), N),
                                                  Padic::from_int(p, draw(rng, -50, 50), N)};
                                   Padic x = random_unit(p, N, rng) * pp.pow(draw(rng, -3, 3));
                                   Padic y = random_unit(p, N, rng) * pp.pow(draw(rng, -3, 3));
                                   if (!l(x * y).equals(l(x) + l(y)) || !l(pp).equals(l.b))
                                       fail(e, Json{{"lambda", to_json(l)}, {"x", to_json(x)}, {"y", to_json(y)}});
                                   if (ord_p(x * y) != ord_p(x) + ord_p(y)) fail(e, Json{{"x", to_json(x)}, {"check", "ord"}});
                               }
                               e.stats["checked"] = count;
                           }));
    return ts;
}

// ---------------------------------------------------------------- gl3

std::vector<Task> gl3_suite(const SuiteConfig& cfg)
{
    const i64 p = cfg.p;
    const int m = cfg.m, N = cfg.prec;
    Json params{{"p", p}, {"m", m}, {"prec", N}};
    std::vector<Task> ts;
    ts.push_back(make_task("gl3", "gl3.bruhat-partition",
                           "GL3(Q_p) = union of P1bar w Iw over the six first-row cases; exactly one case applies and "
                           "g = pbar w k",
                           params, [=](Entry& e) {
                               auto rep = verify_bruhat_partition(p, m, N);
                               e.stats["checked"] = rep.checked;
                               e.stats["failures"] = rep.failures;
                               if (!rep.pass) fail(e, Json{{"detail", rep.first_counterexample}});
                           }));
    for (std::string lam : {"log", "ord"}) {
        Json pl = params;
        pl["lambda"] = lam;
        ts.push_back(make_task("gl3", "gl3.cocycle-table." + lam,
                               "c_{1,lambda}[t] on P1bar\\GL3: supported on the cell of n(x, y), values lambda(p) - "
                               "2 lambda by three valuation cases",
                               pl, [=](Entry& e) {
                                   Homomorphism l = lam == "log" ? Homomorphism::log(p, N) : Homomorphism::ord(p, N);
                                   auto rep = verify_cocycle_table(l, p, m, N);
                                   e.stats["checked"] = rep.checked;
                                   e.stats["on_cell"] = rep.on_cell;
                                   e.stats["counterexamples"] = rep.counterexamples.size();
                                   if (!rep.pass) {
                                       Json ce{{"detail", "table mismatch"}};
                                       if (!rep.counterexamples.empty()) {
                                           const auto& c = rep.counterexamples.front();
                                           ce = Json{{"point", c.point}, {"expected", c.expected}, {"got", c.got}};
                                       }
                                       fail(e, ce);
                                   }
                               }));
    }
    return ts;
}

// ---------------------------------------------------------------- steinberg

const std::map<std::string, std::string>& identity_anchors()
{
    static const std::map<std::string, std::string> a{
        {"t-phi-iw", "t^n . phi_Iw = phi_{p^n Zp, p^n Zp, 1}"},
        {"u0-phi", "u0 . phi_{A,B,f} = xi_{A,B,f} - psi_{A,B,f}"},
        {"i", "sum over z in pZp/p^n of n(z) u0 xi_n = u0 xi_1 = u0 t phi_Iw = t u0 phi_Iw"},
        {"ii", "f(-b) delta_b u t^n phi_Iw = -psi_{p^n Zp, b + p^n Zp, f^iota} in the Steinberg quotient"},
        {"iii", "U(p^n)^diamond fixes u0 . phi_n"},
        {"iv", "P1bar(1, A, B) as a disjoint union of two translated boxes"},
        {"v", "sum over J_n of v u0 phi_{n+1} = u0 phi_n"},
        {"up1", "U_{p,1} phi_Iw = phi_Iw"},
        {"up1-squared", "U_{p,1}^2 against the p^4 right cosets of Iw t^2 Iw"},
        {"pr-ord", "pr(c_{1,ord}[t] (x) phi_n) + 2 xi_n = 0 in the Steinberg quotient"},
        {"pr-log", "pr(c_{1,log}[t] (x) phi_n) + 2 phi_{p^n Zp, Zp^x, log} = 0 in the Steinberg quotient"},
    };
    return a;
}

std::vector<Task> steinberg_suite(const SuiteConfig& cfg)
{
    const i64 p = cfg.p;
    const int m = cfg.m;
    std::vector<Task> ts;
    // phi_n and xi_n are only determined by the flag mod p^m when n <= m
    for (int n = 1; n <= std::min(cfg.n, m); ++n)
        for (const auto& id : identity_ids()) {
            IdentityConfig ic{p, n, m, cfg.samples, cfg.seed};
            Json params{{"p", p}, {"n", n}, {"m", m}, {"samples", cfg.samples}, {"seed", cfg.seed}};
            ts.push_back(make_task("steinberg", "steinberg." + id + ".n" + std::to_string(n), identity_anchors().at(id),
                                   params, [=](Entry& e) {
                                       auto r = verify_identity(id, ic);
                                       e.stats["notion"] = r.notion;
                                       e.stats["checked"] = r.checked;
                                       e.stats["failures"] = r.failures;
                                       e.stats["detail"] = r.detail;
                                       if (!r.pass) fail(e, Json{{"detail", r.first_counterexample}, {"failures", r.failures}});
                                   }));
        }
    for (int n = 1; n <= std::min(cfg.n, 2); ++n) {
        Json params{{"p", p}, {"n", n}};
        ts.push_back(make_task("steinberg", "steinberg.schwartz-traces.n" + std::to_string(n),
                               "both traces of Phi^{n+1} over the cosets of U(p^n) / U(p^{n+1}) give Phi^n", params,
                               [=](Entry& e) {
                                   auto r = verify_schwartz_traces(p, n);
                                   e.stats["detail"] = r.detail;
                                   if (!r.pass) fail(e, Json{{"detail", r.detail}});
                               }));
    }
    return ts;
}

// ---------------------------------------------------------------- measures

int measure_prec(i64 p) { return std::min(16, max_precision(p) - 2); }

std::vector<Task> measures_suite(const SuiteConfig& cfg)
{
    const i64 p = cfg.p;
    const int prec = measure_prec(p), r = 6, level = 2;
    const int count = 200;
    const std::uint64_t seed = cfg.seed;
    std::vector<Task> ts;
    Json params{{"p", p}, {"n", level}, {"prec", prec}, {"measures", count}, {"seed", seed}, {"digits", r}};
    ts.push_back(make_task(
        "measures", "measures.exceptional-zero",
        "mass-zero measures: L(mu, 0) = 0 and the s-coefficient of L(mu, s) is the integral of log_p <x>", params,
        [=](Entry& e) {
            std::mt19937_64 rng(seed);
            const Padic zero = Padic::zero(p, prec);
            const Padic h = Padic::from_int(p, ipow(p, r), prec);
            for (int t = 0; t < count; ++t) {
                Measure mu = random_measure(p, level, prec, true, rng);
                Padic at0 = eval_power(mu, zero);
                auto coeffs = eval_power_series(mu, 1);
                Padic lint = integrate(mu, [](const Padic& a) { return log_p(a); });
                // the direct exp path as a finite difference
                Padic fd = (eval_power_direct(mu, h) - eval_power_direct(mu, zero)) / h;
                bool ok = at0.is_zero() && at0.abs_prec() >= r && coeffs[1].equals_mod(lint, r) && fd.equals_mod(lint, r);
                if (!ok)
                    fail(e, Json{{"measure", t}, {"L(0)", to_json(at0)}, {"s-coefficient", to_json(coeffs[1])},
                                 {"integral log", to_json(lint)}, {"finite difference", to_json(fd)}});
            }
        }));
    ts.push_back(make_task("measures", "measures.convolution",
                           "evaluation at a character is multiplicative under convolution", params, [=](Entry& e) {
                               std::mt19937_64 rng(seed + 1);
                               std::vector<Character> chis;
                               for (int j = 0; j < p - 1; ++j) chis.push_back(teichmuller_character(p, j, prec));
                               for (int t = 0; t < count; ++t) {
                                   Measure a = random_measure(p, level, prec, t % 2 == 0, rng);
                                   Measure b = random_measure(p, level, prec, false, rng);
                                   Measure ab = convolve(a, b);
                                   const auto& chi = chis[static_cast<std::size_t>(t) % chis.size()];
                                   Padic lhs = eval_character(ab, chi), rhs = eval_character(a, chi) * eval_character(b, chi);
                                   if (!lhs.equals(rhs))
                                       fail(e, Json{{"pair", t}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
                               }
                           }));
    ts.push_back(make_task(
        "measures", "measures.twisted-derivative",
        "derivative at s = 1 of eps^{-1} <N>^{1-s} L(mu, 1-s) equals -eps^{-1} times the integral of log_p <x>", params,
        [=](Entry& e) {
            std::mt19937_64 rng(seed + 2);
            const int rr = 5;
            const Padic h = Padic::from_int(p, ipow(p, rr), prec);
            const Padic one = Padic::from_int(p, 1, prec);
            for (int t = 0; t < count; ++t) {
                Measure mu = random_measure(p, level, prec, true, rng);
                i64 N = 0;
                while (N % p == 0) N = draw(rng, 1, 1000);
                Twist tw{N, random_unit(p, prec, rng)};
                Padic lint = integrate(mu, [](const Padic& a) { return log_p(a); });
                Padic chain = twisted_derivative(mu, tw);
                Padic shortcut = -(tw.eps.inverse() * lint);
                Padic fd = (twisted_lplus(mu, tw, one + h) - twisted_lplus(mu, tw, one)) / h;
                if (!chain.equals(shortcut) || !twisted_derivative_shortcut(mu, tw).equals(shortcut) ||
                    !fd.equals_mod(shortcut, rr))
                    fail(e, Json{{"measure", t}, {"N", N}, {"chain rule", to_json(chain)}, {"shortcut", to_json(shortcut)},
                                 {"finite difference", to_json(fd)}});
            }
        }));
    return ts;
}

// ---------------------------------------------------------------- euler

std::vector<Task> euler_suite(const SuiteConfig& cfg)
{
    const i64 p = cfg.p;
    std::vector<Task> ts;
    for (std::string kind : {"minus", "plus"}) {
        const bool plus = kind == "plus";
        Json params{{"p", p}, {"kind", kind}};
        std::string anchor = plus ? "e+(s) vanishes simply at s = 1 with E(1) = -p"
                                  : "e-(s) vanishes simply at s = 0 with E(0) = 1";
        ts.push_back(make_task("euler", "euler." + kind, anchor, params, [=](Entry& e) {
            EulerFactor f = euler_factor(kind, p);
            const int c = plus ? 1 : 0;
            const Rational expected_E = plus ? Rational(-p) : Rational(1);
            e.stats["value"] = rational_string(f.value(c));
            e.stats["zero_order"] = f.zero_order();
            e.stats["leading_E"] = rational_string(f.leading_E());
            e.stats["leading_coefficient"] = rational_string(f.leading_coefficient());
            if (f.c != c || f.value(c) != 0 || f.zero_order() != 1 || f.leading_E() != expected_E)
                fail(e, Json{{"value", rational_string(f.value(c))}, {"zero_order", f.zero_order()},
                             {"leading_E", rational_string(f.leading_E())}, {"expected_E", rational_string(expected_E)}});
        }));
    }
    return ts;
}

// ---------------------------------------------------------------- weyl

std::vector<i64> poincare(int n)
{
    std::vector<i64> poly{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<i64> next(poly.size() + static_cast<std::size_t>(i), 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + static_cast<std::size_t>(i)] += poly[k];
        }
        poly = next;
    }
    return poly;
}

std::vector<Task> weyl_suite(const SuiteConfig& cfg)
{
    std::vector<Task> ts;
    ts.push_back(make_task("weyl", "weyl.mw", "|^MW| = 2^n with length generating function prod (1 + x^i)",
                           Json{{"n_max", 6}}, [=](Entry& e) {
                               for (int n = 1; n <= 6; ++n) {
                                   auto mw = enumerate_MW(n);
                                   std::vector<i64> got(static_cast<std::size_t>(n * (n + 1) / 2 + 1), 0);
                                   for (const auto& x : mw) {
                                       if (!in_MW(x.w) || length(x.w) != x.length)
                                           fail(e, Json{{"n", n}, {"w", x.w.one_line()}});
                                       ++got[static_cast<std::size_t>(x.length)];
                                   }
                                   i64 members = 0;
                                   for (const auto& w : all_elements(n)) members += in_MW(w);
                                   if (mw.size() != (std::size_t{1} << n) || got != poincare(n) ||
                                       members != static_cast<i64>(mw.size()))
                                       fail(e, Json{{"n", n}, {"count", mw.size()}, {"lengths", got}});
                               }
                           }));
    const int nmax = std::max(2, cfg.n);
    for (int n = 2; n <= nmax; ++n)
        for (int m = 1; m <= cfg.m; ++m) {
            Json params{{"n", n}, {"m", m}, {"p", cfg.p}, {"residue_card", cfg.p}};
            const i64 p = cfg.p;
            ts.push_back(make_task(
                "weyl", "weyl.choose-weights.n" + std::to_string(n) + ".m" + std::to_string(m),
                "the weights x_j^{-1} * lambda(a_j) are dominant and sufficiently regular, and do not clash", params,
                [=](Entry& e) {
                    auto S = choose_weights(n, m, p, p);
                    e.stats["C"] = S.C;
                    e.stats["M"] = S.M;
                    e.stats["lambda"] = S.lambda;
                    Json as = Json::array();
                    for (const auto& c : S.choices) {
                        as.push_back(c.a);
                        Weight lt = star_action(inverse(c.x), shift(S.lambda, c.a));
                        if (!(lt == c.lambda_tilde) || !is_dominant(lt) || !is_sufficiently_regular(lt) ||
                            c.a % (p - 1) != 0)
                            fail(e, Json{{"j", c.j}, {"a", c.a}, {"weight", lt.to_string()}});
                        auto cl = weight_clash_check(lt, n);
                        if (!cl.pass) {
                            const auto& k = cl.clashes.front();
                            fail(e, Json{{"j", c.j}, {"clash", {k.B, k.C}}, {"case", k.analysis_case}, {"broken", k.broken}});
                        }
                    }
                    e.stats["a"] = as;
                    if (!S.ok()) fail(e, Json{{"detail", "selection not ok"}});
                }));
        }
    ts.push_back(make_task(
        "weyl", "weyl.avoidance",
        "an auxiliary prime q with the orders of ell and p mod q above M and prime to p", Json{{"instances", 100}, {"seed", cfg.seed}},
        [=](Entry& e) {
            std::mt19937_64 rng(cfg.seed);
            const std::vector<i64> primes{3, 5, 7, 11, 13};
            int done = 0;
            while (done < 100) {
                i64 p = primes[rng() % primes.size()];
                i64 ell = 2 + static_cast<i64>(rng() % 28);
                if (ell % p == 0 || !is_prime(ell)) continue;
                std::vector<i64> T{1 + static_cast<i64>(rng() % 6), 1};
                ++done;
                auto cert = character_avoidance({p}, p, ell, T);
                auto order = [&](i64 x) {
                    i64 y = x % cert.q, k = 1;
                    while (y != 1) {
                        y = static_cast<i64>(static_cast<__int128>(y) * x % cert.q);
                        ++k;
                    }
                    return k;
                };
                bool ok = is_prime(cert.q) && cert.q % p != 1 && std::gcd(cert.q, ell * p) == 1 &&
                          order(ell) == cert.ord_ell && order(p) == cert.ord_p && cert.ord_ell > cert.M &&
                          cert.ord_p > cert.M && std::gcd(cert.ord_ell, p) == 1 && std::gcd(cert.ord_p, p) == 1;
                if (!ok) fail(e, Json{{"p", p}, {"ell", ell}, {"orders", T}, {"q", cert.q}});
            }
        }));
    return ts;
}

// ---------------------------------------------------------------- satake

void compositions(int j, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (j == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k <= j; ++k) {
        cur.push_back(k);
        compositions(j - k, cur, out);
        cur.pop_back();
    }
}

std::vector<Task> satake_suite(const SuiteConfig& cfg)
{
    std::vector<Task> ts;
    for (int n = 1; n <= cfg.n; ++n)
        ts.push_back(make_task("satake", "satake.identity.n" + std::to_string(n),
                               "Htilde(X) = (1 - X) H(ell X) H^vee(ell^{-1} X) coefficientwise after u_i -> ell beta_i",
                               Json{{"n", n}}, [=](Entry& e) {
                                   auto r = satake_identity_check(n);
                                   e.stats["coefficients"] = r.coefficients;
                                   if (!r.pass) fail(e, Json{{"mismatched_degrees", r.mismatched_degrees}});
                               }));
    const int nmax = std::min(cfg.n, 3);
    for (int n = 1; n <= nmax; ++n)
        ts.push_back(make_task("satake", "satake.parabolic.n" + std::to_string(n),
                               "Htilde factors through the Levi GL_{j_1} x ... x GL_{j_r} x GSp_{2(n-j)} for every composition of j <= n",
                               Json{{"n", n}}, [=](Entry& e) {
                                   int checked = 0;
                                   for (int j = 1; j <= n; ++j) {
                                       std::vector<std::vector<int>> parts;
                                       std::vector<int> cur;
                                       compositions(j, cur, parts);
                                       for (const auto& part : parts) {
                                           auto r = parabolic_satake_check(n, part);
                                           ++checked;
                                           if (!r.pass)
                                               fail(e, Json{{"partition", part}, {"mismatched_degrees", r.mismatched_degrees}});
                                       }
                                   }
                                   e.stats["partitions"] = checked;
                               }));
    return ts;
}

// ---------------------------------------------------------------- linv

std::vector<Task> linv_suite(const SuiteConfig& cfg)
{
    const i64 p0 = cfg.p;
    const std::uint64_t seed = cfg.seed;
    const int prec = 12;
    std::vector<Task> ts;
    auto num = [](i64 p, i64 a, i64 b) { return Padic::from_rational(p, a, b, prec); };
    ts.push_back(make_task(
        "linv", "linv.bcgs-grid",
        "automorphic -d(alpha_i^2 alpha_{3-i}^{-1}) and Galois -d(delta_i delta_{i+1}^{-1})(p) forms agree; the line "
        "d delta_i - d delta_{i+1} recovers L; duality exchanges i = 1 and 2",
        Json{{"primes", {3, 5, 7}}, {"points", 10002}, {"seed", seed}}, [=](Entry& e) {
            std::mt19937_64 rng(seed);
            int checked = 0;
            for (i64 q : {3, 5, 7})
                for (int t = 0; t < 3334; ++t) {
                    auto rnd = [&] { return num(q, draw(rng, -20, 20), draw(rng, 1, 6)); };
                    TangentData d{{rnd(), rnd()}, {rnd(), rnd()}};
                    for (int i = 1; i <= 2; ++i) {
                        if (coroot_pairing(i, d.v).is_zero()) continue;
                        auto r = bcgs(i, d);
                        ++checked;
                        if (!r.automorphic.equals(r.galois) || !r.from_line.equals(r.galois) ||
                            !coroot_pairing(i, r.normalised.v).equals(num(q, 1, 1)))
                            fail(e, Json{{"p", q}, {"i", i}, {"automorphic", to_json(r.automorphic)},
                                         {"galois", to_json(r.galois)}, {"from_line", to_json(r.from_line)}});
                    }
                    if (!coroot_pairing(2, d.v).is_zero()) {
                        auto r2 = bcgs(2, d);
                        auto r1 = bcgs(1, duality_swap(d));
                        if (!r2.galois.equals(r1.galois)) fail(e, Json{{"p", q}, {"check", "duality"}});
                    }
                }
            e.stats["checked"] = checked;
        }));
    ts.push_back(make_task("linv", "linv.sym2", "symmetric square family a_p = 1 + c_1 k: line log_p + 2 c_1 ord_p, L = -2 c_1",
                           Json{{"primes", {3, 5, 7}}, {"seed", seed}}, [=](Entry& e) {
                               std::mt19937_64 rng(seed + 1);
                               for (i64 q : {3, 5, 7})
                                   for (int t = 0; t < 50; ++t) {
                                       Padic c1 = num(q, draw(rng, -30, 30), draw(rng, 1, 8));
                                       auto r = sym2({num(q, 1, 1), c1, num(q, draw(rng, -9, 9), 1)});
                                       Padic expect = -(c1 + c1);
                                       if (!r.L.equals(expect) || !r.line.b.equals(c1 + c1) ||
                                           !bcgs(2, r.data).galois.equals(expect))
                                           fail(e, Json{{"p", q}, {"c1", to_json(c1)}, {"L", to_json(r.L)}});
                                   }
                           }));
    ts.push_back(make_task(
        "linv", "linv.restriction",
        "(d delta_1 - d delta_2) = (v_1 - v_2) log_p and (d delta_2 - d delta_3) = (v_1 + 2 v_2) log_p on Z_p^x; "
        "delta_1 delta_2 delta_3 = 1",
        Json{{"primes", {3, 5, 7}}, {"units", 100}, {"seed", seed}, {"p", p0}}, [=](Entry& e) {
            std::mt19937_64 rng(seed + 2);
            for (i64 q : {3, 5, 7})
                for (int s = 0; s < 100; ++s) {
                    auto rnd = [&] { return num(q, draw(rng, -10, 10), 1); };
                    TangentData d{{rnd(), rnd()}, {rnd(), rnd()}};
                    auto T = triangulation_params(d);
                    Padic u = random_unit(q, prec, rng);
                    Padic lu = log_p(u);
                    bool ok = (T.ddelta[0] - T.ddelta[1])(u).equals((d.v[0] - d.v[1]) * lu) &&
                              (T.ddelta[1] - T.ddelta[2])(u).equals((d.v[0] + d.v[1] + d.v[1]) * lu);
                    Padic x = u * num(q, q, 1).pow(draw(rng, -2, 2));
                    DualP prod = T.delta[0](x) * T.delta[1](x) * T.delta[2](x);
                    ok = ok && prod.base.equals(num(q, 1, 1)) && prod.eps.is_zero();
                    if (!ok) fail(e, Json{{"p", q}, {"unit", to_json(u)}});
                }
        }));
    return ts;
}

}  // namespace

std::vector<std::string> suite_names()
{
    return {"padic", "gl3", "steinberg", "measures", "euler", "weyl", "satake", "linv"};
}

std::vector<Task> suite_tasks(const std::string& suite, const SuiteConfig& cfg)
{
    if (suite == "padic") return padic_suite(cfg);
    if (suite == "gl3") return gl3_suite(cfg);
    if (suite == "steinberg") return steinberg_suite(cfg);
    if (suite == "measures") return measures_suite(cfg);
    if (suite == "euler") return euler_suite(cfg);
    if (suite == "weyl") return weyl_suite(cfg);
    if (suite == "satake") return satake_suite(cfg);
    if (suite == "linv") return linv_suite(cfg);
    throw std::invalid_argument("unknown suite " + suite);
}

std::vector<Entry> run_tasks(const std::vector<Task>& tasks, int jobs)
{
    std::vector<Entry> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i].run();
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

Json report_json(const SuiteConfig& cfg, const std::vector<std::string>& suites, const std::vector<Entry>& entries,
                 bool timings)
{
    Json r;
    r["schema"] = 1;
    r["tool"] = "padic-linv";
    r["config"] = Json{{"p", cfg.p}, {"prec", cfg.prec}, {"m", cfg.m}, {"n", cfg.n}, {"samples", cfg.samples},
                       {"seed", cfg.seed}, {"suites", suites}};
    std::size_t passed = 0;
    Json es = Json::array();
    for (const auto& e : entries) {
        passed += e.pass;
        Json j{{"id", e.id}, {"suite", e.suite}, {"anchor", e.anchor}, {"parameters", e.parameters}, {"pass", e.pass}};
        j["counterexample"] = e.counterexample;
        j["stats"] = e.stats;
        if (timings) j["time_s"] = e.seconds;
        es.push_back(j);
    }
    r["summary"] = Json{{"total", entries.size()}, {"passed", passed}, {"failed", entries.size() - passed}};
    r["entries"] = es;
    return r;
}

}  // namespace padiclinv
