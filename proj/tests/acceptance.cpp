// One line per acceptance criterion; exit status 0 iff every criterion passes.
#include "padiclinv/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <sys/wait.h>

using namespace padiclinv;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Line {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (!pass) note << "; ";
            note << what;
            pass = false;
        }
    }
};

int failures = 0;

void report(int k, const std::string& title, Line& l, double secs)
{
    std::cout << "criterion " << k << ": " << (l.pass ? "PASS" : "FAIL") << "  " << title << " [" << secs << " s]";
    if (!l.pass) std::cout << "  " << l.note.str();
    std::cout << std::endl;
    failures += !l.pass;
}

// all entries of a suite, optionally only ids starting with prefix
std::vector<Entry> run(const std::string& suite, const SuiteConfig& cfg, const std::string& prefix = "")
{
    std::vector<Task> ts;
    for (auto& t : suite_tasks(suite, cfg))
        if (t.id.rfind(prefix, 0) == 0) ts.push_back(std::move(t));
    return run_tasks(ts, jobs());
}

void absorb(Line& l, const std::vector<Entry>& es, const std::string& tag)
{
    for (const auto& e : es)
        l.require(e.pass, tag + e.id + " " + (e.counterexample.is_null() ? "" : e.counterexample.dump()));
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

int main()
{
    {
        auto t0 = Clock::now();
        Line l;
        for (i64 p : {3, 5, 7})
            for (std::string lam : {"log", "ord"}) {
                auto t1 = Clock::now();
                Homomorphism h = lam == "log" ? Homomorphism::log(p, 6) : Homomorphism::ord(p, 6);
                auto rep = verify_cocycle_table(h, p, 2);
                double dt = since(t1);
                std::string tag = "p=" + std::to_string(p) + " " + lam;
                l.require(rep.pass && rep.counterexamples.empty(),
                          tag + ": " + std::to_string(rep.counterexamples.size()) + " counterexamples");
                l.require(rep.checked == ipow(p, 2) * (p * p + p + 1), tag + ": wrong point count");
                l.require(dt < 60, tag + ": " + std::to_string(dt) + " s");
            }
        report(1, "cocycle table c_{1,lambda}[t] at m = 2, p in {3,5,7}, lambda in {log, ord}", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        for (i64 p : {3, 5}) {
            auto rep = verify_bruhat_partition(p, 2);
            l.require(rep.pass, "p=" + std::to_string(p) + ": " + rep.first_counterexample);
            l.require(rep.checked == 3 * ipow(p, 2) * (p * p + p + 1), "p=" + std::to_string(p) + ": wrong point count");
        }
        report(2, "Bruhat partition and recomposition over P^2(Z/9) and P^2(Z/25)", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        for (auto [p, samples] : {std::pair<i64, i64>{3, 0}, {5, 100000}}) {
            SuiteConfig cfg;
            cfg.p = p;
            cfg.m = 2;
            cfg.n = 2;
            cfg.samples = samples;
            std::vector<Task> ts;
            for (auto& t : suite_tasks("steinberg", cfg))
                if (t.id.find("schwartz") == std::string::npos && t.id.find("up1.") == std::string::npos)
                    ts.push_back(std::move(t));
            // level 1 as well at p = 3, where the enumeration is exhaustive
            if (p == 3) {
                cfg.m = 1;
                cfg.n = 1;
                for (auto& t : suite_tasks("steinberg", cfg))
                    if (t.id.find("schwartz") == std::string::npos && t.id.find("up1.") == std::string::npos)
                        ts.push_back(std::move(t));
            }
            auto es = run_tasks(ts, jobs());
            for (const auto& e : es)
                l.require(e.pass, "p=" + std::to_string(p) + " m=" + e.parameters["m"].dump() + " " + e.id + " (" +
                                      e.stats.value("detail", std::string()) + ")");
        }
        report(3, "Steinberg identities t-phi-iw, u0-phi, (i)-(v), U_{p,1}^2 and the two pr claims; p = 3 exhaustive, "
                  "p = 5 with 1e5 samples",
               l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        for (i64 p : {3, 5}) {
            auto r = verify_identity("up1", {p, 1, 2, p == 5 ? 100000 : 0, 42});
            l.require(r.pass, "p=" + std::to_string(p) + ": " + r.first_counterexample);
        }
        report(4, "U_{p,1} phi_Iw = phi_Iw exactly, p in {3,5}", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        for (i64 p : {3, 5})
            for (int n = 1; n <= 2; ++n) {
                auto r = verify_schwartz_traces(p, n);
                l.require(r.pass, "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + r.detail);
            }
        report(5, "Schwartz trace identities as table equalities, p in {3,5}, n <= 2", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        for (i64 p : {3, 5}) {
            SuiteConfig cfg;
            cfg.p = p;
            absorb(l, run("measures", cfg), "p=" + std::to_string(p) + " ");
        }
        report(6, "200 seeded mass-zero measures: L(mu,0) = 0, s-coefficient = int log_p mod p^6, convolution, twisted "
                  "L+ derivative",
               l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        for (i64 p : {3, 5, 7}) {
            SuiteConfig cfg;
            cfg.p = p;
            absorb(l, run("euler", cfg), "p=" + std::to_string(p) + " ");
        }
        report(7, "Euler factors: simple zeros of e-(s) at 0 and e+(s) at 1, E(0) = 1, E(1) = -p", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        SuiteConfig base;
        absorb(l, run("weyl", base, "weyl.mw"), "");
        for (i64 p : {3, 5, 7}) {
            SuiteConfig cfg;
            cfg.p = p;
            cfg.n = 4;
            cfg.m = 2;
            auto es = run("weyl", cfg, "weyl.choose-weights");
            l.require(es.size() == 6, "p=" + std::to_string(p) + ": expected 6 (n, m) cases");
            absorb(l, es, "p=" + std::to_string(p) + " ");
        }
        report(8, "|^MW| = 2^n with Poincare polynomial prod (1 + x^i), n <= 6; weight choices dominant, regular and "
                  "clash-free for n <= 4, p in {3,5,7}, m <= 2",
               l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        SuiteConfig cfg;
        cfg.n = 5;
        auto t1 = Clock::now();
        absorb(l, run("satake", cfg, "satake.identity"), "");
        double dt = since(t1);
        l.require(dt < 10, "identity n = 1..5 took " + std::to_string(dt) + " s");
        cfg.n = 3;
        absorb(l, run("satake", cfg, "satake.parabolic"), "");
        report(9, "Satake factorization for n = 1..5 (< 10 s) and all parabolic compositions j <= n <= 3", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        SuiteConfig cfg;
        absorb(l, run("linv", cfg), "");
        report(10, "BCGS automorphic and Galois formulas on a 1e4-point grid, Sym^2 gives L = -2 c_1, restriction "
                   "formulas on random units",
               l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        SuiteConfig cfg;
        absorb(l, run("weyl", cfg, "weyl.avoidance"), "");
        report(11, "character avoidance certificates on 100 random (p, ell, M <= 6) instances", l, since(t0));
    }
    {
        auto t0 = Clock::now();
        Line l;
        const std::string bin = PADIC_LINV_BIN;
        const std::string a = "acceptance_report_a.json", b = "acceptance_report_b.json";
        std::vector<int> codes;
        double slowest = 0;
        for (const auto& out : {a, b}) {
            auto t1 = Clock::now();
            std::string cmd = "\"" + bin + "\" verify-all -o " + out + " 2> " + out + ".log";
            int status = std::system(cmd.c_str());
            slowest = std::max(slowest, since(t1));
            codes.push_back(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
        }
        std::string ra = slurp(a), rb = slurp(b);
        l.require(codes[0] == 0 && codes[1] == 0,
                  "exit codes " + std::to_string(codes[0]) + ", " + std::to_string(codes[1]));
        l.require(!ra.empty() && ra == rb, "reports differ");
        l.require(slowest < 900, "verify-all took " + std::to_string(slowest) + " s");
        if (!ra.empty()) {
            auto j = Json::parse(ra);
            std::string failed;
            for (const auto& e : j["entries"])
                if (!e["pass"].get<bool>()) failed += " " + e["id"].get<std::string>();
            if (!failed.empty()) l.note << "; failing entries:" << failed;
        }
        report(12, "verify-all under the default config: exit 0, < 15 min, byte-identical report for a fixed seed", l,
               since(t0));
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
