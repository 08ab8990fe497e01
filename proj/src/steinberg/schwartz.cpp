#include "padiclinv/steinberg.hpp"

#include <sstream>

namespace padiclinv {

namespace {

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Column k of a matrix whose denominators are powers of p: entries N / p^e with
// a common exponent e.
struct Column {
    i128 num[2];
    int e = 0;
};

std::array<Column, 2> columns(const Mat2Q& g, i64 p)
{
    std::array<Column, 2> c;
    for (int k = 0; k < 2; ++k) {
        int e = 0;
        for (int l = 0; l < 2; ++l) {
            i64 d = g.den[2 * l + k];
            int o = 0;
            while (d % p == 0) { d /= p; ++o; }
            if (d != 1) throw PadicError("denominators must be powers of p");
            e = std::max(e, o);
        }
        c[k].e = e;
        for (int l = 0; l < 2; ++l) c[k].num[l] = i128(g.num[2 * l + k]) * (ipow(p, e) / g.den[2 * l + k]);
    }
    return c;
}

// Phi at (v . g) for the grid point v = (i, j) p^{-M}; 0 outside the window.
i64 value_at(const SchwartzFunction& phi, i128 i, i128 j, const std::array<Column, 2>& g)
{
    const i128 mod = ipow(phi.p, phi.M + phi.K);
    i64 idx[2];
    for (int k = 0; k < 2; ++k) {
        // (v g)_k p^M = (i num0 + j num1) / p^e
        i128 w = i * g[k].num[0] + j * g[k].num[1];
        const i128 pe = ipow(phi.p, g[k].e);
        if (w % pe != 0) return 0;
        w /= pe;
        w %= mod;
        if (w < 0) w += mod;
        idx[k] = static_cast<i64>(w);
    }
    return phi.at(idx[0], idx[1]);
}

}  // namespace

SchwartzFunction schwartz_phi(i64 p, int n, int M, int K)
{
    if (K < n) throw PadicError("window overflow");
    SchwartzFunction f{p, M, K, {}};
    const i64 side = f.side();
    f.values.assign(static_cast<std::size_t>(side * side), 0);
    const i64 pn = ipow(p, M + n), pm = ipow(p, M);
    for (i64 i = 0; i < side; i += pn)
        for (i64 j = 0; j < side; ++j)
            if (mod_floor(j - pm, pn) == 0) f.values[static_cast<std::size_t>(i * side + j)] = 1;
    return f;
}

Mat2Q v_bc(i64 p, int n, i64 b, i64 c)
{
    i64 pn = ipow(p, n);
    return {{1, 0, pn * b, 1 + pn * c}, {1, 1, 1, 1}};
}

Mat2Q mul2(const Mat2Q& a, const Mat2Q& b)
{
    // entries as fractions; denominators stay p-powers or 1 in our use
    auto frac_mul = [](i64 n1, i64 d1, i64 n2, i64 d2) { return std::pair<i128, i128>{i128(n1) * n2, i128(d1) * d2}; };
    Mat2Q r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto [n1, d1] = frac_mul(a.num[2 * i], a.den[2 * i], b.num[j], b.den[j]);
            auto [n2, d2] = frac_mul(a.num[2 * i + 1], a.den[2 * i + 1], b.num[2 + j], b.den[2 + j]);
            i128 num = n1 * d2 + n2 * d1, den = d1 * d2;
            i128 g = gcd128(num, den);
            r.num[2 * i + j] = static_cast<i64>(num / g);
            r.den[2 * i + j] = static_cast<i64>(den / g);
        }
    return r;
}

SchwartzFunction schwartz_trace(const SchwartzFunction& phi, const std::vector<Mat2Q>& reps)
{
    SchwartzFunction out = phi;
    const i64 p = phi.p, side = phi.side();
    std::fill(out.values.begin(), out.values.end(), 0);
    std::vector<std::array<Column, 2>> cols;
    for (const auto& r : reps) cols.push_back(columns(r, p));
    const i128 shift = ipow(p, phi.M + phi.K);   // p^K in grid units
    for (i64 i = 0; i < side; ++i)
        for (i64 j = 0; j < side; ++j) {
            i64 s = 0;
            for (const auto& c : cols) {
                i64 a = value_at(phi, i, j, c);
                if (a != value_at(phi, i + shift, j, c) || a != value_at(phi, i, j + shift, c))
                    throw PadicError("window overflow");
                s += a;
            }
            out.values[static_cast<std::size_t>(i * side + j)] = s;
        }
    return out;
}

TraceReport verify_schwartz_traces(i64 p, int n)
{
    TraceReport rep;
    const int M = 0, K = n + 2;
    SchwartzFunction target = schwartz_phi(p, n, M, K);
    SchwartzFunction next = schwartz_phi(p, n + 1, M, K);
    std::vector<Mat2Q> r1, r2;
    const Mat2Q tinv{{1, 0, 0, 1}, {p, 1, 1, 1}};   // diag(p^{-1}, 1)
    for (i64 b = 0; b < p; ++b)
        for (i64 c = 0; c < p; ++c) r1.push_back(v_bc(p, n, -b, -c));
    for (i64 b = 0; b < p * p; ++b)
        for (i64 c = 0; c < p; ++c) r2.push_back(mul2(v_bc(p, n, -b, -c), tinv));
    bool ok1 = schwartz_trace(next, r1) == target;
    bool ok2 = schwartz_trace(next, r2) == target;
    rep.pass = ok1 && ok2;
    std::ostringstream os;
    os << "tr(Phi^" << n + 1 << ") = Phi^" << n << ": " << (ok1 ? "ok" : "MISMATCH")
       << "; tr(t^-1 Phi^" << n + 1 << ") = Phi^" << n << ": " << (ok2 ? "ok" : "MISMATCH");
    rep.detail = os.str();
    return rep;
}

}  // namespace padiclinv
