#include "padiclinv/measures.hpp"

#include <functional>

namespace padiclinv {

namespace {

bool is_unit_residue(i64 a, i64 p) { return mod_floor(a, p) != 0; }

// smallest K with k - floor((k-1)/(p-1)) >= A for every k > K
int series_length(i64 p, int A)
{
    int K = 0;
    while ((K + 1) - K / (p - 1) < A) ++K;
    return K;
}

int ord_factorial(i64 p, int k)
{
    int v = 0;
    for (i64 q = p; q <= k; q *= p) v += static_cast<int>(k / q);
    return v;
}

}  // namespace

bool Measure::equals(const Measure& o) const
{
    if (p != o.p || n != o.n) return false;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (!table[i].equals(o.table[i])) return false;
    return true;
}

Measure zero_measure(i64 p, int n, int prec)
{
    if (n < 1) throw PadicError("level must be positive");
    Measure m{p, n, prec, {}};
    m.table.assign(static_cast<std::size_t>(ipow(p, n)), Padic::zero(p, prec));
    return m;
}

Measure dirac(i64 p, int n, i64 a, int prec)
{
    if (!is_unit_residue(a, p)) throw PadicError("Dirac point must be a unit");
    Measure m = zero_measure(p, n, prec);
    m.table[static_cast<std::size_t>(mod_floor(a, m.modulus()))] = Padic::from_int(p, 1, prec);
    return m;
}

Measure norm_project(const Measure& mu)
{
    if (mu.n < 2) throw PadicError("cannot project below level 1");
    Measure r = zero_measure(mu.p, mu.n - 1, mu.prec);
    const i64 q = r.modulus();
    for (i64 b = 0; b < mu.modulus(); ++b) {
        auto& slot = r.table[static_cast<std::size_t>(b % q)];
        slot = slot + mu.table[static_cast<std::size_t>(b)];
    }
    return r;
}

Measure convolve(const Measure& mu, const Measure& nu)
{
    if (mu.p != nu.p || mu.n != nu.n) throw PadicError("level mismatch");
    Measure r = zero_measure(mu.p, mu.n, std::min(mu.prec, nu.prec));
    const i64 q = mu.modulus();
    for (i64 a = 1; a < q; ++a) {
        if (!is_unit_residue(a, mu.p) || mu[a].is_zero()) continue;
        for (i64 b = 1; b < q; ++b) {
            if (!is_unit_residue(b, mu.p)) continue;
            auto& slot = r.table[static_cast<std::size_t>(mulmod(a, b, q))];
            slot = slot + mu[a] * nu[b];
        }
    }
    return r;
}

Measure iota(const Measure& mu)
{
    Measure r = zero_measure(mu.p, mu.n, mu.prec);
    const i64 q = mu.modulus();
    for (i64 a = 1; a < q; ++a)
        if (is_unit_residue(a, mu.p)) r.table[static_cast<std::size_t>(invmod(a, q))] = mu[a];
    return r;
}

Measure operator+(const Measure& a, const Measure& b)
{
    if (a.p != b.p || a.n != b.n) throw PadicError("level mismatch");
    Measure r = a;
    for (std::size_t i = 0; i < r.table.size(); ++i) r.table[i] = a.table[i] + b.table[i];
    return r;
}

Measure operator-(const Measure& a, const Measure& b) { return a + scale(Padic::from_int(a.p, -1, a.prec), b); }

Measure scale(const Padic& c, const Measure& mu)
{
    Measure r = mu;
    for (auto& x : r.table) x = c * x;
    return r;
}

Measure random_measure(i64 p, int n, int prec, bool mass_zero, std::mt19937_64& rng)
{
    Measure m = zero_measure(p, n, prec);
    std::uniform_int_distribution<i64> d(0, ipow(p, prec) - 1);
    Padic total = Padic::zero(p, prec);
    for (i64 a = 1; a < m.modulus(); ++a) {
        if (!is_unit_residue(a, p)) continue;
        m.table[static_cast<std::size_t>(a)] = Padic::from_int(p, d(rng), prec);
        total = total + m.table[static_cast<std::size_t>(a)];
    }
    if (mass_zero) m.table[1] = m.table[1] - total;
    return m;
}

Character trivial_character(i64 p, int prec)
{
    Character c{p, 1, {}};
    for (i64 a = 0; a < p; ++a) c.values.push_back(a == 0 ? Padic::zero(p, prec) : Padic::from_int(p, 1, prec));
    return c;
}

Character teichmuller_character(i64 p, int j, int prec)
{
    Character c{p, 1, {}};
    for (i64 a = 0; a < p; ++a) {
        if (a == 0) {
            c.values.push_back(Padic::zero(p, prec));
            continue;
        }
        c.values.push_back(teichmuller(Padic::from_int(p, a, prec)).zeta.pow(mod_floor(j, p - 1)));
    }
    return c;
}

Character character_from_table(i64 p, int level, const std::vector<Padic>& values)
{
    const i64 q = ipow(p, level);
    if (static_cast<i64>(values.size()) != q) throw PadicError("character table must have p^level entries");
    for (i64 a = 1; a < q; ++a) {
        if (!is_unit_residue(a, p)) continue;
        const Padic& x = values[static_cast<std::size_t>(a)];
        // only roots of unity of order dividing p - 1 live in Q_p
        if (!(x.pow(p - 1) - x.one_like()).is_zero()) throw PadicError("character value is not a (p-1)-th root of unity");
        for (i64 b = 1; b < q; ++b) {
            if (!is_unit_residue(b, p)) continue;
            if (!(x * values[static_cast<std::size_t>(b)] - values[static_cast<std::size_t>(mulmod(a, b, q))]).is_zero())
                throw PadicError("table is not multiplicative");
        }
    }
    return {p, level, values};
}

Character inverse(const Character& chi)
{
    Character r = chi;
    const i64 q = ipow(chi.p, chi.level);
    for (i64 a = 1; a < q; ++a)
        if (is_unit_residue(a, chi.p)) r.values[static_cast<std::size_t>(a)] = chi(a).inverse();
    return r;
}

Character product(const Character& a, const Character& b)
{
    const Character& hi = a.level >= b.level ? a : b;
    Character r = hi;
    const i64 q = ipow(hi.p, hi.level);
    for (i64 x = 1; x < q; ++x)
        if (is_unit_residue(x, hi.p)) r.values[static_cast<std::size_t>(x)] = a(x) * b(x);
    return r;
}

Padic eval_character(const Measure& mu, const Character& chi)
{
    if (chi.p != mu.p) throw PadicError("prime mismatch");
    if (chi.level > mu.n) throw PadicError("conductor too deep");
    Padic s = Padic::zero(mu.p, mu.prec);
    for (i64 a = 1; a < mu.modulus(); ++a)
        if (is_unit_residue(a, mu.p)) s = s + mu[a] * chi(a);
    return s;
}

Padic integrate(const Measure& mu, const std::function<Padic(const Padic&)>& f)
{
    Padic s = Padic::zero(mu.p, mu.prec);
    for (i64 a = 1; a < mu.modulus(); ++a)
        if (is_unit_residue(a, mu.p)) s = s + mu[a] * f(Padic::from_int(mu.p, a, mu.prec + 4));
    return s;
}

Padic moment(const Measure& mu, int k)
{
    const int W = mu.prec + 4;
    return integrate(mu, [&](const Padic& a) { return log_p(a.with_abs_prec(W)).pow(k); });
}

Padic eval_power_direct(const Measure& mu, const Padic& s)
{
    return integrate(mu, [&](const Padic& a) { return exp_p(s * log_p(a)); });
}

std::vector<Padic> eval_power_series(const Measure& mu, int K)
{
    std::vector<Padic> c;
    Padic fact = Padic::from_int(mu.p, 1, Padic::kInfinitePrec);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) fact = fact * Padic::from_int(mu.p, k, Padic::kInfinitePrec);
        c.push_back(moment(mu, k) / fact);
    }
    return c;
}

Padic eval_power(const Measure& mu, const Padic& s)
{
    const int K = series_length(mu.p, mu.prec);
    Measure w = mu;
    // guard digits absorb the k! denominators
    w.prec = mu.prec + ord_factorial(mu.p, K);
    auto c = eval_power_series(w, K);
    Padic r = c[0];
    Padic sk = s.one_like();
    for (int k = 1; k <= K; ++k) {
        sk = sk * s;
        r = r + c[static_cast<std::size_t>(k)] * sk;
    }
    return r.with_abs_prec(mu.prec);
}

Padic derivative_at_zero(const Measure& mu) { return moment(mu, 1); }

Padic twisted_derivative(const Measure& mu, const Twist& tw)
{
    Padic lN = log_p(Padic::from_int(mu.p, tw.N, mu.prec + 4));
    return -(tw.eps.inverse() * (lN * moment(mu, 0) + moment(mu, 1)));
}

Padic twisted_derivative_shortcut(const Measure& mu, const Twist& tw)
{
    Padic m0 = moment(mu, 0);
    if (!m0.is_zero()) throw PadicError("no exceptional zero");
    return -(tw.eps.inverse() * moment(mu, 1));
}

Padic twisted_lplus(const Measure& mu, const Twist& tw, const Padic& s)
{
    Padic one = s.one_like();
    Padic lN = log_p(Padic::from_int(mu.p, tw.N, mu.prec + 4));
    return tw.eps.inverse() * exp_p((one - s) * lN) * eval_power_direct(mu, one - s);
}

Measure smoothing_measure(i64 p, int n, i64 c, const Padic& psi_c, int prec)
{
    const i64 q = ipow(p, n);
    Measure a = scale(Padic::from_int(p, c * c, prec), dirac(p, n, 1, prec));
    return a - scale(psi_c.inverse(), dirac(p, n, invmod(c, q), prec));
}

// ---- Euler factors ----

namespace {

using Poly = std::vector<Rational>;   // coefficients, lowest degree first

Rational rpow(i64 p, int e)
{
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= p;
    return e < 0 ? Rational(1) / r : r;
}

Rational eval_poly(const Poly& f, const Rational& x)
{
    Rational r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

// multiplicity of x0 as a root of f
int root_order(Poly f, const Rational& x0)
{
    int k = 0;
    while (!f.empty() && eval_poly(f, x0) == 0) {
        // synthetic division by (X - x0)
        Poly q(f.size() - 1);
        Rational carry = 0;
        for (std::size_t i = f.size(); i-- > 1;) {
            carry = f[i] + carry * x0;
            q[i - 1] = carry;
        }
        f = q;
        ++k;
    }
    return k;
}

}  // namespace

Rational EulerFactor::E(int s) const { return A * rpow(p, B * s); }

Rational EulerFactor::L(int s) const
{
    Rational d = 1 - rpow(p, -1 - s);
    if (d == 0) throw PadicError("pole");
    return 1 / d;
}

Rational EulerFactor::value(int s) const { return E(s) * (1 - rpow(p, s - c)) * L(s); }

int EulerFactor::zero_order() const
{
    // in X = p^s: e = A X^{B+1} (1 - X p^{-c}) / (X - 1/p), B >= 0
    Poly num(static_cast<std::size_t>(B + 3), Rational(0));
    num[static_cast<std::size_t>(B + 1)] = A;
    num[static_cast<std::size_t>(B + 2)] = -A * rpow(p, -c);
    Poly den{-rpow(p, -1), 1};
    Rational x0 = rpow(p, c);
    return root_order(num, x0) - root_order(den, x0);
}

EulerFactor euler_factor(const std::string& kind, i64 p)
{
    if (kind == "minus") return {"minus", p, 0, 1, 0};
    if (kind == "plus") return {"plus", p, 1, -1, 1};
    throw PadicError("kind must be minus or plus");
}

}  // namespace padiclinv
