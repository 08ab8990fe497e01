#include "padiclinv/hecke.hpp"
#include "padiclinv/suites.hpp"
#include "padiclinv/weyl.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

using namespace padiclinv;

namespace {

// bad arguments, reported as a usage error
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void check_prime(i64 p)
{
    if (p == 2 || !is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not an odd prime");
}

int check_prec(i64 p, int prec)
{
    if (prec < 1 || prec > max_precision(p))
        throw UsageError("precision must lie in 1.." + std::to_string(max_precision(p)) + " for p = " + std::to_string(p));
    return prec;
}

Json parse_json_arg(const std::string& s, const std::string& what)
{
    try {
        return Json::parse(s);
    } catch (const std::exception& e) {
        throw UsageError("cannot parse " + what + " as JSON: " + e.what());
    }
}

std::vector<Padic> padic_list(i64 p, const std::string& s, int prec)
{
    std::vector<Padic> out;
    for (const auto& t : split_list(s)) out.push_back(Padic::from_string(p, t, prec));
    return out;
}

// one-line notation w(1), ..., w(2n)
Json weyl_json(const WeylElement& w) { return std::vector<int>(w.perm.begin() + 1, w.perm.end()); }

CLI::Option* pflag(CLI::App* app, i64& p)
{
    return app->add_option("-p,--prime", p, "odd prime")->envname("PADICLINV_P")->capture_default_str();
}

CLI::Option* precflag(CLI::App* app, int& prec)
{
    return app->add_option("--prec", prec, "p-adic precision N")->envname("PADICLINV_PREC")->capture_default_str();
}

// ---------------------------------------------------------------- padic

void add_padic(CLI::App& app)
{
    auto* sub = app.add_subcommand("padic", "log_p, exp_p and ord_p of a rational");
    auto op = std::make_shared<std::string>();
    auto p = std::make_shared<i64>(5);
    auto value = std::make_shared<std::string>();
    auto prec = std::make_shared<int>(8);
    sub->add_option("op", *op, "log, exp or ord")->required()->check(CLI::IsMember({"log", "exp", "ord"}));
    sub->add_option("p", *p, "odd prime")->required();
    sub->add_option("value", *value, "rational a/b or decimal")->required();
    precflag(sub, *prec);
    sub->callback([=] {
        check_prime(*p);
        check_prec(*p, *prec);
        Padic x = Padic::from_string(*p, *value, *prec);
        Json out{{"op", *op}, {"p", *p}, {"input", *value}};
        if (*op == "ord") {
            out["result"] = ord_p(x);
        } else {
            Padic r = *op == "log" ? log_p(x) : exp_p(x);
            out["result"] = to_json(r);
            out["text"] = r.to_string();
        }
        emit(out);
    });
}

// ---------------------------------------------------------------- gl3

Mat3 named_matrix(i64 p, const std::string& s, int prec)
{
    if (s == "t") return mats::t(p, prec);
    if (s == "t2") return mats::t2(p, prec);
    if (s == "u0") return mats::u0(p, prec);
    if (s == "u") return mats::u(p, prec);
    if (s == "w0") return mats::w0(p, prec);
    return mat3_from_json(p, parse_json_arg(s, "--x"), prec);
}

Homomorphism named_hom(const std::string& s, i64 p, int prec)
{
    if (s == "log") return Homomorphism::log(p, prec);
    if (s == "ord") return Homomorphism::ord(p, prec);
    throw UsageError("lambda must be log or ord");
}

void add_gl3(CLI::App& app)
{
    auto* gl3 = app.add_subcommand("gl3", "Bruhat-Iwahori decomposition and P1bar cocycles");
    gl3->require_subcommand(1);

    auto* dec = gl3->add_subcommand("decompose", "g = pbar w k with pbar in P1bar, k in Iw");
    auto mat = std::make_shared<std::string>();
    auto p = std::make_shared<i64>(5);
    auto prec = std::make_shared<int>(8);
    dec->add_option("matrix", *mat, "row-major JSON array of rational strings")->required();
    pflag(dec, *p);
    precflag(dec, *prec);
    dec->callback([=] {
        check_prime(*p);
        check_prec(*p, *prec);
        Mat3 g = mat3_from_json(*p, parse_json_arg(*mat, "matrix"), *prec);
        auto d = decompose(g);
        emit(Json{{"case", case_label(d.bruhat_case)},
                  {"pivot", d.pivot},
                  {"pbar", to_json(d.pbar)},
                  {"w", to_json(d.w)},
                  {"k", to_json(d.k)},
                  {"n", to_json(d.n)},
                  {"v1", to_json(section_v1(g))}});
    });

    auto* coc = gl3->add_subcommand("cocycle", "c_{i,lambda}[x](g)");
    auto lam = std::make_shared<std::string>("ord");
    auto x = std::make_shared<std::string>("t");
    auto at = std::make_shared<std::string>();
    auto index = std::make_shared<int>(1);
    auto p2 = std::make_shared<i64>(5);
    auto prec2 = std::make_shared<int>(8);
    coc->add_option("--lambda", *lam, "log or ord")->capture_default_str();
    coc->add_option("--x", *x, "t, t2, u0, u, w0 or a matrix JSON")->capture_default_str();
    coc->add_option("--at", *at, "point [a,b,c] (integers) or a matrix JSON")->required();
    coc->add_option("--index", *index, "1 or 2")->check(CLI::Range(1, 2))->capture_default_str();
    pflag(coc, *p2);
    precflag(coc, *prec2);
    coc->callback([=] {
        check_prime(*p2);
        check_prec(*p2, *prec2);
        Json a = parse_json_arg(*at, "--at");
        Mat3 g;
        if (a.size() == 3 && !a[0].is_array()) {
            std::array<i64, 3> row;
            for (std::size_t i = 0; i < 3; ++i) row[i] = a[i].is_string() ? std::stoll(a[i].get<std::string>()) : a[i].get<i64>();
            g = complete_row(*p2, primitive(row), *prec2);
        } else {
            g = mat3_from_json(*p2, a, *prec2);
        }
        CocycleSpec spec{*index, named_hom(*lam, *p2, *prec2), named_matrix(*p2, *x, *prec2)};
        Padic v = cocycle_value(spec, g);
        emit(Json{{"index", *index}, {"lambda", *lam}, {"x", *x}, {"value", to_json(v)}, {"text", v.to_string()}});
    });

    auto* ver = gl3->add_subcommand("verify-cocycle", "c_{1,lambda}[t] against its closed-form table on P^2(Z/p^m)");
    auto lam3 = std::make_shared<std::string>("ord");
    auto p3 = std::make_shared<i64>(5);
    auto m3 = std::make_shared<int>(2);
    auto prec3 = std::make_shared<int>(-1);
    ver->add_option("--lambda", *lam3, "log or ord")->capture_default_str();
    pflag(ver, *p3);
    ver->add_option("-m,--level", *m3, "level m")->envname("PADICLINV_M")->capture_default_str();
    ver->add_option("--prec", *prec3, "precision (default m + 4)");
    ver->callback([=] {
        check_prime(*p3);
        if (*m3 < 1) throw UsageError("m must be positive");
        int N = *prec3 < 0 ? *m3 + 4 : *prec3;
        check_prec(*p3, N);
        auto rep = verify_cocycle_table(named_hom(*lam3, *p3, N), *p3, *m3, N);
        Json ces = Json::array();
        for (const auto& c : rep.counterexamples)
            ces.push_back(Json{{"point", c.point}, {"expected", c.expected}, {"got", c.got}});
        emit(Json{{"lambda", *lam3},
                  {"p", *p3},
                  {"m", *m3},
                  {"prec", N},
                  {"pass", rep.pass},
                  {"checked", rep.checked},
                  {"on_cell", rep.on_cell},
                  {"on_cell_values", rep.on_cell_values},
                  {"counterexamples", ces}});
        if (!rep.pass) throw std::runtime_error("cocycle table mismatch");
    });
}

// ---------------------------------------------------------------- steinberg

void add_steinberg(CLI::App& app)
{
    auto* st = app.add_subcommand("steinberg", "finite models of the Steinberg representation");
    st->require_subcommand(1);

    auto* ver = st->add_subcommand("verify", "check one identity");
    auto id = std::make_shared<std::string>();
    auto cfg = std::make_shared<IdentityConfig>();
    cfg->p = 5;
    cfg->n = 1;
    ver->add_option("identity", *id, "identity id")->required()->check(CLI::IsMember(identity_ids()));
    pflag(ver, cfg->p);
    ver->add_option("-n", cfg->n, "level n")->envname("PADICLINV_N")->capture_default_str();
    ver->add_option("-m,--level", cfg->m, "enumeration level m")->envname("PADICLINV_M")->capture_default_str();
    ver->add_option("--samples", cfg->samples, "random deep lifts")->envname("PADICLINV_SAMPLES")->capture_default_str();
    ver->add_option("--seed", cfg->seed, "seed")->envname("PADICLINV_SEED")->capture_default_str();
    ver->callback([=] {
        check_prime(cfg->p);
        if (cfg->n < 1 || cfg->m < 1) throw UsageError("n and m must be positive");
        auto r = verify_identity(*id, *cfg);
        emit(Json{{"id", r.id},
                  {"notion", r.notion},
                  {"p", cfg->p},
                  {"n", cfg->n},
                  {"m", cfg->m},
                  {"pass", r.pass},
                  {"checked", r.checked},
                  {"failures", r.failures},
                  {"detail", r.detail},
                  {"counterexample", r.first_counterexample.empty() ? Json() : Json(r.first_counterexample)}});
        if (!r.pass) throw std::runtime_error("identity " + r.id + " fails");
    });

    auto* ev = st->add_subcommand("eval", "evaluate a named function at a flag");
    auto fn = std::make_shared<std::string>("phiIw");
    auto flag = std::make_shared<std::string>();
    auto p = std::make_shared<i64>(5);
    auto n = std::make_shared<int>(1);
    ev->add_option("--fn", *fn, "phiIw, xi, phi or zero")
        ->check(CLI::IsMember({"phiIw", "xi", "phi", "zero"}))
        ->capture_default_str();
    ev->add_option("--flag", *flag, "{point: [...], plane: [...], prec}")->required();
    pflag(ev, *p);
    ev->add_option("-n", *n, "level n of xi_n and phi_n")->capture_default_str();
    ev->callback([=] {
        check_prime(*p);
        Json fj = parse_json_arg(*flag, "--flag");
        Flag f = flag_from_json(fj);
        SteinbergFunction s = *fn == "phiIw" ? stfn::phi_iw(*p)
                              : *fn == "xi"  ? stfn::xi_n(*p, *n)
                              : *fn == "phi" ? stfn::phi_n(*p, *n)
                                             : stfn::zero(*p);
        Padic v = s(f);
        if (fj.contains("prec")) v = v.with_abs_prec(fj["prec"].get<int>());
        emit(Json{{"fn", s.name}, {"flag", to_json(f)}, {"value", to_json(v)}, {"text", v.to_string()}});
    });
}

// ---------------------------------------------------------------- measure

void add_measure(CLI::App& app)
{
    auto* ms = app.add_subcommand("measure", "measures on Z_p^x and their evaluations");
    ms->require_subcommand(1);
    auto mu = std::make_shared<std::string>();
    auto prec = std::make_shared<int>(12);

    auto* ev = ms->add_subcommand("eval", "integral of a finite-order character");
    auto chr = std::make_shared<std::string>("{}");
    ev->add_option("--mu", *mu, "{p, n, table: {residue: value}}")->required();
    ev->add_option("--char", *chr, "{p, teichmuller: j} or {p, level, table}");
    precflag(ev, *prec);
    ev->callback([=] {
        Measure m = measure_from_json(parse_json_arg(*mu, "--mu"), *prec);
        check_prime(m.p);
        Json cj = parse_json_arg(*chr, "--char");
        if (!cj.contains("p")) cj["p"] = m.p;
        Padic v = eval_character(m, character_from_json(cj, m.prec));
        emit(Json{{"value", to_json(v)}, {"text", v.to_string()}});
    });

    auto* pw = ms->add_subcommand("power", "integral of <x>^s");
    auto s = std::make_shared<std::string>("0");
    pw->add_option("--mu", *mu, "measure JSON")->required();
    pw->add_option("--s", *s, "rational s in Z_p")->capture_default_str();
    precflag(pw, *prec);
    pw->callback([=] {
        Measure m = measure_from_json(parse_json_arg(*mu, "--mu"), *prec);
        check_prime(m.p);
        Padic sv = Padic::from_string(m.p, *s, m.prec);
        Padic series = eval_power(m, sv), direct = eval_power_direct(m, sv);
        emit(Json{{"s", *s}, {"value", to_json(series)}, {"direct", to_json(direct)}, {"text", series.to_string()}});
    });

    auto* dv = ms->add_subcommand("deriv", "derivative at s = 0, or of the twisted L+ at s = 1");
    auto twist = std::make_shared<std::string>();
    dv->add_option("--mu", *mu, "measure JSON")->required();
    dv->add_option("--twist", *twist, "N,eps");
    precflag(dv, *prec);
    dv->callback([=] {
        Measure m = measure_from_json(parse_json_arg(*mu, "--mu"), *prec);
        check_prime(m.p);
        Json out{{"mass", to_json(moment(m, 0))}, {"derivative_at_0", to_json(derivative_at_zero(m))}};
        if (!twist->empty()) {
            auto parts = split_list(*twist);
            if (parts.size() != 2) throw UsageError("--twist takes N,eps");
            Twist tw{std::stoll(parts[0]), Padic::from_string(m.p, parts[1], m.prec)};
            if (tw.N % m.p == 0 || !tw.eps.is_unit()) throw UsageError("N and eps must be units");
            out["twisted_derivative_at_1"] = to_json(twisted_derivative(m, tw));
            try {
                out["shortcut"] = to_json(twisted_derivative_shortcut(m, tw));
            } catch (const std::exception& e) {
                out["shortcut"] = Json{{"error", e.what()}};
            }
        }
        emit(out);
    });
}

// ---------------------------------------------------------------- weyl

void add_weyl(CLI::App& app)
{
    auto* wy = app.add_subcommand("weyl", "Weyl group of GSp_2n and weight choices");
    wy->require_subcommand(1);

    auto* mw = wy->add_subcommand("mw", "the minimal coset representatives ^MW");
    auto n = std::make_shared<int>(3);
    mw->add_option("-n", *n, "rank")->check(CLI::Range(1, 12))->capture_default_str();
    mw->callback([=] {
        Json es = Json::array();
        for (const auto& e : enumerate_MW(*n)) es.push_back(Json{{"B", e.B}, {"w", weyl_json(e.w)}, {"length", e.length}});
        emit(Json{{"n", *n}, {"count", es.size()}, {"elements", es}});
    });

    auto* ch = wy->add_subcommand("choose", "weights lambda(a_j) for the classical points");
    auto m = std::make_shared<int>(1);
    auto p = std::make_shared<i64>(5);
    auto rc = std::make_shared<i64>(-1);
    ch->add_option("-n", *n, "rank")->capture_default_str();
    ch->add_option("-m", *m, "level")->capture_default_str();
    pflag(ch, *p);
    ch->add_option("--residue-card", *rc, "residue field cardinality (default p)");
    ch->callback([=] {
        check_prime(*p);
        auto S = choose_weights(*n, *m, *p, *rc < 0 ? *p : *rc);
        Json cs = Json::array();
        for (const auto& c : S.choices)
            cs.push_back(Json{{"j", c.j},
                              {"B", c.B},
                              {"x", weyl_json(c.x)},
                              {"w", weyl_json(c.w)},
                              {"a", c.a},
                              {"interval", {c.interval_lo, c.interval_hi}},
                              {"fallback", c.fallback},
                              {"weight", c.lambda_tilde.to_string()},
                              {"dominant", c.dominant},
                              {"regular", c.regular},
                              {"clash_free", weight_clash_check(c.lambda_tilde, *n).pass}});
        emit(Json{{"n", S.n}, {"m", S.m}, {"p", S.p}, {"residue_card", S.residue_card}, {"C", S.C}, {"M", S.M},
                  {"lambda", S.lambda}, {"ok", S.ok()}, {"choices", cs}});
    });

    auto* av = wy->add_subcommand("avoid", "auxiliary prime q for character avoidance");
    auto s0 = std::make_shared<std::string>();
    auto ell = std::make_shared<i64>(2);
    auto orders = std::make_shared<std::string>();
    auto pa = std::make_shared<i64>(-1);
    av->add_option("--s0", *s0, "primes of S0, comma separated")->required();
    av->add_option("--ell", *ell, "auxiliary prime ell")->capture_default_str();
    av->add_option("--orders", *orders, "orders of the characters")->required();
    av->add_option("-p,--prime", *pa, "p (default the least prime of S0)");
    av->callback([=] {
        auto S = parse_int_list(*s0);
        if (S.empty()) throw UsageError("--s0 is empty");
        i64 pp = *pa < 0 ? *std::min_element(S.begin(), S.end()) : *pa;
        check_prime(pp);
        auto c = character_avoidance(S, pp, *ell, parse_int_list(*orders));
        emit(Json{{"p", pp}, {"ell", *ell}, {"q", c.q}, {"M", c.M}, {"ord_ell", c.ord_ell}, {"ord_p", c.ord_p}});
    });
}

// ---------------------------------------------------------------- satake

Json poly_json(const LaurentPoly& f, const std::vector<std::string>& names)
{
    Json lines = Json::array();
    std::string s = f.to_string(names);
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

void print_report(const SatakeReport& r, int n, bool text)
{
    auto names = satake_var_names(n);
    if (text) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " (" << r.coefficients << " coefficients)\n";
        std::cout << "lhs:\n" << r.lhs.to_string(names) << "\nrhs:\n" << r.rhs.to_string(names) << "\n";
        return;
    }
    emit(Json{{"n", n},
              {"pass", r.pass},
              {"coefficients", r.coefficients},
              {"mismatched_degrees", r.mismatched_degrees},
              {"lhs", poly_json(r.lhs, names)},
              {"rhs", poly_json(r.rhs, names)}});
}

void add_satake(CLI::App& app)
{
    auto* sk = app.add_subcommand("satake", "Hecke polynomials and the Satake factorization");
    sk->require_subcommand(1);
    auto n = std::make_shared<int>(3);
    auto text = std::make_shared<bool>(false);

    auto* ver = sk->add_subcommand("verify", "Htilde against the GL_n factorization");
    ver->add_option("-n", *n, "rank")->check(CLI::Range(1, 8))->capture_default_str();
    ver->add_flag("--text", *text, "print the polynomials as sparse lines");
    ver->callback([=] {
        auto r = satake_identity_check(*n);
        print_report(r, *n, *text);
        if (!r.pass) throw std::runtime_error("Satake identity fails");
    });

    auto* par = sk->add_subcommand("parabolic", "factorization through a Levi subgroup");
    auto part = std::make_shared<std::string>("1");
    par->add_option("-n", *n, "rank")->check(CLI::Range(1, 8))->capture_default_str();
    par->add_option("--partition", *part, "block sizes j_1,...,j_r")->capture_default_str();
    par->add_flag("--text", *text, "print the polynomials as sparse lines");
    par->callback([=] {
        std::vector<int> blocks;
        for (i64 x : parse_int_list(*part)) blocks.push_back(static_cast<int>(x));
        auto r = parabolic_satake_check(*n, blocks);
        print_report(r, *n, *text);
        if (!r.pass) throw std::runtime_error("parabolic identity fails");
    });

    auto* ch = sk->add_subcommand("chars", "universal characters for a weight");
    auto lam = std::make_shared<std::string>("2,1,0");
    ch->add_option("-n", *n, "rank")->capture_default_str();
    ch->add_option("--lambda", *lam, "lambda_1,...,lambda_n[,lambda_0]")->capture_default_str();
    ch->callback([=] {
        auto v = parse_int_list(*lam);
        if (v.size() != static_cast<std::size_t>(*n) && v.size() != static_cast<std::size_t>(*n + 1))
            throw UsageError("--lambda needs n or n + 1 entries");
        Weight w{std::vector<i64>(v.begin(), v.begin() + *n), v.size() > static_cast<std::size_t>(*n) ? v.back() : 0};
        auto strs = [](const std::vector<UniversalCharacter>& cs) {
            Json a = Json::array();
            for (const auto& c : cs) a.push_back(c.to_string());
            return a;
        };
        emit(Json{{"weight", w.to_string()},
                  {"psi", strs(psi_characters(w))},
                  {"chi", strs(chi_characters(w.lam))},
                  {"zeta", strs(zeta_list(w.lam))}});
    });
}

// ---------------------------------------------------------------- linv

void add_linv(CLI::App& app)
{
    auto* lv = app.add_subcommand("linv", "L-invariants over the dual numbers");
    lv->require_subcommand(1);
    auto p = std::make_shared<i64>(5);
    auto prec = std::make_shared<int>(8);

    auto* bc = lv->add_subcommand("bcgs", "automorphic and Galois L-invariant formulas");
    auto i = std::make_shared<int>(1);
    auto v = std::make_shared<std::string>("1,0");
    auto da = std::make_shared<std::string>("0,0");
    bc->add_option("-i", *i, "1 or 2")->check(CLI::Range(1, 2))->capture_default_str();
    bc->add_option("--v", *v, "tangent vector v1,v2")->capture_default_str();
    bc->add_option("--dalpha", *da, "d alpha_1, d alpha_2")->capture_default_str();
    pflag(bc, *p);
    precflag(bc, *prec);
    bc->callback([=] {
        check_prime(*p);
        check_prec(*p, *prec);
        auto vv = padic_list(*p, *v, *prec), dd = padic_list(*p, *da, *prec);
        if (vv.size() != 2 || dd.size() != 2) throw UsageError("--v and --dalpha take two entries");
        auto r = bcgs(*i, {{vv[0], vv[1]}, {dd[0], dd[1]}});
        Json out{{"i", *i},
                 {"automorphic", to_json(r.automorphic)},
                 {"galois", to_json(r.galois)},
                 {"agree", r.automorphic.equals(r.galois)},
                 {"line", to_json(r.line)},
                 {"from_line", to_json(r.from_line)},
                 {"normalised_v", {to_json(r.normalised.v[0]), to_json(r.normalised.v[1])}},
                 {"text", r.automorphic.to_string()}};
        if (*i == 2) out["alpha2_squared"] = to_json(r.intro_i2);
        emit(out);
    });

    auto* s2 = lv->add_subcommand("sym2", "symmetric square family");
    auto series = std::make_shared<std::string>("1,0");
    s2->add_option("--ap-series", *series, "a_p(k) coefficients c0, c1, ...")->capture_default_str();
    pflag(s2, *p);
    precflag(s2, *prec);
    s2->callback([=] {
        check_prime(*p);
        check_prec(*p, *prec);
        auto r = sym2(padic_list(*p, *series, *prec));
        emit(Json{{"dalpha", {to_json(r.data.dalpha[0]), to_json(r.data.dalpha[1])}},
                  {"line", to_json(r.line)},
                  {"L", to_json(r.L)},
                  {"text", r.L.to_string()}});
    });
}

// ---------------------------------------------------------------- verify-all

void add_verify_all(CLI::App& app, int& exit_code)
{
    auto* va = app.add_subcommand("verify-all", "run every identity suite and write a JSON report");
    auto cfg = std::make_shared<SuiteConfig>();
    auto only = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    auto timings = std::make_shared<bool>(false);
    va->add_option("--only", *only, "suite names")->delimiter(',')->check(CLI::IsMember(suite_names()));
    pflag(va, cfg->p);
    precflag(va, cfg->prec);
    va->add_option("-m,--level", cfg->m, "level m")->envname("PADICLINV_M")->capture_default_str();
    va->add_option("-n", cfg->n, "rank / level bound n")->envname("PADICLINV_N")->capture_default_str();
    va->add_option("--samples", cfg->samples, "random samples")->envname("PADICLINV_SAMPLES")->capture_default_str();
    va->add_option("--seed", cfg->seed, "seed")->envname("PADICLINV_SEED")->capture_default_str();
    va->add_option("-j,--jobs", *jobs, "worker threads")->envname("PADICLINV_JOBS");
    va->add_option("-o,--output", *out, "report path (default stdout)")->envname("PADICLINV_OUTPUT");
    va->add_flag("--timings", *timings, "include wall times (makes the report run-dependent)");
    va->callback([=, &exit_code] {
        try {
            validate(*cfg);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::vector<std::string> suites = only->empty() ? suite_names() : *only;
        std::vector<Task> tasks;
        for (const auto& s : suite_names()) {
            if (std::find(suites.begin(), suites.end(), s) == suites.end()) continue;
            for (auto& t : suite_tasks(s, *cfg)) tasks.push_back(std::move(t));
        }
        std::vector<std::string> ordered;
        for (const auto& s : suite_names())
            if (std::find(suites.begin(), suites.end(), s) != suites.end()) ordered.push_back(s);
        auto t0 = std::chrono::steady_clock::now();
        auto entries = run_tasks(tasks, *jobs);
        double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool all = true;
        for (const auto& e : entries) {
            all = all && e.pass;
            std::cerr << (e.pass ? "PASS " : "FAIL ") << e.id;
            if (*timings) std::cerr << " (" << e.seconds << " s)";
            std::cerr << "\n";
        }
        std::cerr << entries.size() << " entries, " << (all ? "all pass" : "failures") << ", " << total << " s\n";
        std::string text = report_json(*cfg, ordered, entries, *timings).dump(2) + "\n";
        if (out->empty()) {
            std::cout << text;
        } else {
            std::ofstream f(*out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + *out);
            f << text;
        }
        exit_code = all ? 0 : 1;
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact p-adic computations for GL3 Steinberg cocycles, measures, Hecke-Satake identities and "
                 "L-invariants"};
    app.require_subcommand(1);
    int exit_code = 0;
    add_padic(app);
    add_gl3(app);
    add_steinberg(app);
    add_measure(app);
    add_weyl(app);
    add_satake(app);
    add_linv(app);
    add_verify_all(app, exit_code);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
