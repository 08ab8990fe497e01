#include "padiclinv/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace padiclinv {

namespace {

// weight coordinate k of the 2n-vector attached to the GL_n part: lam_k, or -lam_{2n+1-k}
i64 ext(const std::vector<i64>& lam, int n, int k)
{
    return k <= n ? lam[static_cast<std::size_t>(k - 1)] : -lam[static_cast<std::size_t>(2 * n - k)];
}

void check_symplectic(const WeylElement& w)
{
    const int N = 2 * w.n;
    std::vector<bool> seen(static_cast<std::size_t>(N + 1), false);
    for (int i = 1; i <= N; ++i) {
        int v = w(i);
        if (v < 1 || v > N || seen[static_cast<std::size_t>(v)]) throw WeylError("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
        if (w(i) + w(N + 1 - i) != N + 1) throw WeylError("not in the Weyl group of GSp");
    }
}

}  // namespace

std::string WeylElement::one_line() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= 2 * n; ++i) os << (i > 1 ? " " : "") << perm[static_cast<std::size_t>(i)];
    os << "]";
    return os.str();
}

WeylElement weyl_identity(int n)
{
    WeylElement w{n, std::vector<int>(static_cast<std::size_t>(2 * n + 1))};
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

WeylElement weyl_from_perm(int n, const std::vector<int>& one_line)
{
    if (static_cast<int>(one_line.size()) != 2 * n) throw WeylError("expected 2n values");
    WeylElement w{n, {0}};
    w.perm.insert(w.perm.end(), one_line.begin(), one_line.end());
    check_symplectic(w);
    return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b)
{
    WeylElement r = weyl_identity(a.n);
    for (int i = 1; i <= 2 * a.n; ++i) r.perm[static_cast<std::size_t>(i)] = a(b(i));
    return r;
}

WeylElement inverse(const WeylElement& w)
{
    WeylElement r = weyl_identity(w.n);
    for (int i = 1; i <= 2 * w.n; ++i) r.perm[static_cast<std::size_t>(w(i))] = i;
    return r;
}

WeylElement longest(int n)
{
    WeylElement w = weyl_identity(n);
    for (int i = 1; i <= 2 * n; ++i) w.perm[static_cast<std::size_t>(i)] = 2 * n + 1 - i;
    return w;
}

WeylElement longest_M(int n)
{
    WeylElement w = weyl_identity(n);
    for (int i = 1; i <= n; ++i) {
        w.perm[static_cast<std::size_t>(i)] = n + 1 - i;
        w.perm[static_cast<std::size_t>(2 * n + 1 - i)] = n + i;
    }
    return w;
}

std::vector<WeylElement> all_elements(int n)
{
    // signed permutations: choose images of 1..n
    std::vector<WeylElement> out;
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            WeylElement w = weyl_identity(n);
            for (int i = 1; i <= n; ++i) {
                int v = base[static_cast<std::size_t>(i - 1)];
                if (mask >> (i - 1) & 1) v = 2 * n + 1 - v;
                w.perm[static_cast<std::size_t>(i)] = v;
                w.perm[static_cast<std::size_t>(2 * n + 1 - i)] = 2 * n + 1 - v;
            }
            out.push_back(w);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

int inversions(const WeylElement& w)
{
    int c = 0;
    for (int i = 1; i <= 2 * w.n; ++i)
        for (int j = i + 1; j <= 2 * w.n; ++j)
            if (w(i) > w(j)) ++c;
    return c;
}

int length(const WeylElement& w)
{
    // roots as vectors in Z^n; w acts by (w.v)_j = ext(v)_{w^{-1}(j)}
    const int n = w.n;
    std::vector<std::vector<i64>> pos;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<i64> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
            a[static_cast<std::size_t>(i)] = 1;
            a[static_cast<std::size_t>(j)] = -1;
            b[static_cast<std::size_t>(i)] = 1;
            b[static_cast<std::size_t>(j)] = 1;
            pos.push_back(a);
            pos.push_back(b);
        }
        std::vector<i64> c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(i)] = 2;
        pos.push_back(c);
    }
    auto is_positive = [&](const std::vector<i64>& v) {
        // positive roots have their first nonzero coordinate positive
        for (i64 x : v)
            if (x != 0) return x > 0;
        return false;
    };
    int count = 0;
    for (const auto& a : pos) {
        std::vector<i64> r(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) r[static_cast<std::size_t>(j - 1)] = ext(a, n, w(j));
        // r = w^{-1} a; count a in w Phi^-
        if (!is_positive(r)) ++count;
    }
    return count;
}

int length_closed_form(const WeylElement& w)
{
    int neg = 0;
    for (int i = 1; i <= w.n; ++i)
        if (w(i) > w.n) ++neg;
    return (inversions(w) + neg) / 2;
}

bool in_MW(const WeylElement& w)
{
    WeylElement v = inverse(w);
    for (int i = 1; i < w.n; ++i)
        if (v(i) >= v(i + 1)) return false;
    return true;
}

WeylElement w_of_subset(int n, const Subset& B)
{
    WeylElement w = weyl_identity(n);
    Subset Bc = complement(n, B);
    for (std::size_t i = 0; i < B.size(); ++i) w.perm[static_cast<std::size_t>(B[i])] = n + static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < Bc.size(); ++i) w.perm[static_cast<std::size_t>(Bc[i])] = static_cast<int>(i) + 1;
    for (int c = n + 1; c <= 2 * n; ++c) w.perm[static_cast<std::size_t>(c)] = 2 * n + 1 - w(2 * n + 1 - c);
    check_symplectic(w);
    return w;
}

Subset complement(int n, const Subset& B)
{
    Subset r;
    for (int i = 1; i <= n; ++i)
        if (std::find(B.begin(), B.end(), i) == B.end()) r.push_back(i);
    return r;
}

int subset_length(int n, const Subset& B)
{
    int s = 0;
    for (int b : B) s += n + 1 - b;
    return s;
}

std::vector<MWEntry> enumerate_MW(int n)
{
    if (n < 1) throw WeylError("n must be positive");
    std::vector<MWEntry> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Subset B;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1) B.push_back(i);
        WeylElement w = w_of_subset(n, B);
        out.push_back({B, w, length(w)});
    }
    return out;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
    os << ";" << l0 << ")";
    return os.str();
}

Weight rho(int n)
{
    Weight r;
    for (int i = n; i >= 1; --i) r.lam.push_back(i);
    return r;
}

Weight operator+(const Weight& a, const Weight& b)
{
    Weight r = a;
    for (std::size_t i = 0; i < r.lam.size(); ++i) r.lam[i] += b.lam[i];
    r.l0 += b.l0;
    return r;
}

Weight operator-(const Weight& a, const Weight& b)
{
    Weight r = a;
    for (std::size_t i = 0; i < r.lam.size(); ++i) r.lam[i] -= b.lam[i];
    r.l0 -= b.l0;
    return r;
}

Weight dot_action(const WeylElement& w, const Weight& l)
{
    // (w.l)(d) = l(w^{-1}.d) on diag(t_1..t_n, s/t_n..s/t_1)
    const int n = w.n;
    if (static_cast<int>(l.lam.size()) != n) throw WeylError("rank mismatch");
    WeylElement v = inverse(w);
    Weight r{std::vector<i64>(static_cast<std::size_t>(n)), l.l0};
    for (int j = 1; j <= n; ++j) r.lam[static_cast<std::size_t>(j - 1)] = ext(l.lam, n, v(j));
    for (int i = 1; i <= n; ++i)
        if (w(i) > n) r.l0 += l.lam[static_cast<std::size_t>(i - 1)];
    return r;
}

Weight star_action(const WeylElement& w, const Weight& l)
{
    Weight r = rho(w.n);
    return dot_action(w, l + r) - r;
}

Weight shift(const std::vector<i64>& lam, i64 a)
{
    Weight r{lam, 0};
    for (auto& x : r.lam) x += a;
    return r;
}

bool is_dominant(const Weight& l) { return is_M_dominant(l) && (l.lam.empty() || l.lam.back() >= 0); }

bool is_M_dominant(const Weight& l)
{
    for (std::size_t i = 0; i + 1 < l.lam.size(); ++i)
        if (l.lam[i] < l.lam[i + 1]) return false;
    return true;
}

bool is_sufficiently_regular(const Weight& l, int threshold)
{
    const i64 t = threshold < 0 ? static_cast<i64>(l.lam.size()) : threshold;
    for (std::size_t i = 0; i + 1 < l.lam.size(); ++i)
        if (l.lam[i] - l.lam[i + 1] < t) return false;
    return !l.lam.empty() && l.lam.back() >= t;
}

// ---- choice of weights ----

std::pair<int, int> parametrize(int n, int j)
{
    for (int y = 0; y <= n; ++y)
        for (int z = y + 1; z <= n + 1; ++z)
            if ((y + 1) * (n + 1) - (y + 1) * y / 2 - z == j) return {y, z};
    throw WeylError("j out of range");
}

Subset subset_of_parameters(int n, int y, int z)
{
    Subset B;
    for (int i = 1; i <= y; ++i) B.push_back(i);
    if (z <= n) B.push_back(z);
    return B;
}

bool WeightSelection::ok() const
{
    if (!lambda_trivial_mod) return false;
    for (const auto& c : choices)
        if (!c.dominant || !c.regular) return false;
    return true;
}

namespace {

i64 floor_div(i64 a, i64 b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

}  // namespace

WeightSelection choose_weights(int n, int m, i64 p, i64 residue_card)
{
    if (n < 2) throw WeylError("n must be at least 2");
    if (p < 3 || p % 2 == 0) throw WeylError("p must be an odd prime");
    if (m < 1 || residue_card < 2) throw WeylError("bad residue data");
    WeightSelection S;
    S.n = n;
    S.m = m;
    S.p = p;
    S.residue_card = residue_card;
    const int d = n * (n + 1) / 2;

    // C bounds the entries of w^{-1}.rho - rho strictly
    const Weight r = rho(n);
    i64 maxe = 0;
    for (const auto& e : enumerate_MW(n)) {
        Weight v = dot_action(inverse(e.w), r) - r;
        for (i64 x : v.lam) maxe = std::max(maxe, std::abs(x));
    }
    S.C = std::max<i64>(maxe + 1, n + 1);

    i64 units = residue_card - 1;
    for (int i = 1; i < m; ++i) units *= residue_card;
    const i64 step = 8 * n * (p - 1) * units;
    S.M = (8 * (S.C + n) / step + 1) * step;
    const i64 M = S.M;
    for (int i = 1; i <= n; ++i) S.lambda.push_back(((i64{1} << n) - (i64{1} << i)) * M);
    S.lambda_trivial_mod = std::all_of(S.lambda.begin(), S.lambda.end(), [&](i64 x) { return x % units == 0; });

    const i64 two_n = i64{1} << n;
    for (int j = 0; j <= d; ++j) {
        WeightChoice c;
        c.j = j;
        if (j == 0) {
            c.y = 0;
            c.z = n + 1;
        } else {
            auto [y, z] = parametrize(n, j);
            c.y = y;
            c.z = z;
        }
        c.B = subset_of_parameters(n, c.y, c.z);
        c.x = w_of_subset(n, c.B);
        c.w = w_of_subset(n, complement(n, c.B));
        WeylElement xinv = inverse(c.x);
        auto test = [&](i64 a) {
            Weight lt = star_action(xinv, shift(S.lambda, a));
            return std::pair{is_dominant(lt), is_sufficiently_regular(lt)};
        };

        // same subset in the form with z > y+1 or z = n+1
        int y = c.y, z = c.z;
        if (z == y + 1 && y >= 1) {
            y = y + 1;
            z = n + 1;
        }
        bool found = false;
        if (j == 0) {
            // smallest a >= 0 in (p-1)Z that works
            c.interval_lo = 0;
            c.interval_hi = 2 * two_n * M;
            for (i64 a = 0; a <= c.interval_hi && !found; a += p - 1) {
                auto [dom, reg] = test(a);
                if (dom && reg) {
                    c.a = a;
                    found = true;
                }
            }
        } else {
            if (y == 0) {
                c.interval_lo = -(two_n - (i64{1} << (z - 1))) * (M / 2);
                c.interval_hi = -(two_n - (i64{1} << z)) * (M / 2);
            } else if (z != n + 1) {
                c.interval_lo = -(2 * two_n - (i64{1} << (n - y)) - (i64{1} << (z - y - 1))) * (M / 2);
                c.interval_hi = -(2 * two_n - (i64{1} << (n - y)) - (i64{1} << (z - y))) * (M / 2);
            } else {
                c.interval_lo = -(2 * two_n - (i64{1} << (n + 1 - y))) * (M / 2);
                c.interval_hi = -(2 * two_n - (i64{1} << (n + 1 - y)) - 2) * (M / 2);
            }
            // first a = M/8 mod M/2 in the interval
            const i64 h = M / 2, r8 = M / 8;
            i64 a = floor_div(c.interval_lo - r8, h) * h + r8;
            if (a < c.interval_lo) a += h;
            for (; a <= c.interval_hi && !found; a += h) {
                auto [dom, reg] = test(a);
                if (dom && reg) {
                    c.a = a;
                    found = true;
                }
            }
        }
        if (!found) {
            c.fallback = true;
            for (i64 a = -2 * two_n * M; a <= 2 * two_n * M && !found; a += p - 1) {
                auto [dom, reg] = test(a);
                if (dom && reg) {
                    c.a = a;
                    found = true;
                }
            }
        }
        c.lambda_tilde = star_action(xinv, shift(S.lambda, c.a));
        c.dominant = is_dominant(c.lambda_tilde);
        c.regular = is_sufficiently_regular(c.lambda_tilde);
        S.choices.push_back(c);
    }
    return S;
}

// ---- the weight clash check ----

ClashReport weight_clash_check(const Weight& lt, int n)
{
    ClashReport rep;
    const auto mw = enumerate_MW(n);
    const Weight r = rho(n);
    for (const auto& wb : mw) {
        Weight lw = star_action(wb.w, lt);
        for (const auto& xc : mw) {
            if (wb.B == xc.B) continue;
            ++rep.pairs;
            Weight lx = star_action(xc.w, lt);
            bool clash = true;
            for (int i = 0; i < n; ++i)
                if (lx.lam[static_cast<std::size_t>(i)] != lw.lam[static_cast<std::size_t>(i)] + (n - 1)) clash = false;
            if (!clash) continue;
            rep.pass = false;
            Clash c{wb.B, xc.B, "", ""};
            const Subset Bc = complement(n, wb.B), Cc = complement(n, xc.B);
            Weight lr = lt + r;
            if (Cc.size() > Bc.size()) {
                c.analysis_case = "fewer-complement";
                const std::size_t i = Bc.size() + 1;
                i64 lhs = lt.lam[static_cast<std::size_t>(Cc[i - 1] - 1)]
                          + lt.lam[static_cast<std::size_t>(wb.B[static_cast<std::size_t>(n) - i] - 1)];
                c.broken = lhs < 2 * n ? "sum of two entries >= 2n" : "none";
            } else if (Bc.size() > Cc.size()) {
                c.analysis_case = "more-complement";
                c.broken = std::all_of(lr.lam.begin(), lr.lam.end(), [](i64 x) { return x > 0; }) ? "none"
                                                                                                  : "positivity of lambda + rho";
            } else {
                c.analysis_case = "equal-complement";
                c.broken = is_sufficiently_regular(lt) ? "none" : "gaps >= n";
            }
            rep.clashes.push_back(c);
        }
    }
    return rep;
}

// ---- character avoidance ----

i64 multiplicative_order(i64 a, i64 q)
{
    a %= q;
    if (a < 0) a += q;
    if (std::gcd(a, q) != 1) throw WeylError("not a unit");
    auto powmod = [q](i64 b, i64 e) {
        __int128 r = 1, x = b;
        while (e > 0) {
            if (e & 1) r = r * x % q;
            x = x * x % q;
            e >>= 1;
        }
        return static_cast<i64>(r);
    };
    // q is prime here: strip prime factors off q - 1
    i64 ord = q - 1, m = q - 1;
    for (i64 f = 2; f * f <= m; ++f) {
        if (m % f) continue;
        while (m % f == 0) m /= f;
        while (ord % f == 0 && powmod(a, ord / f) == 1) ord /= f;
    }
    if (m > 1 && powmod(a, ord / m) == 1) ord /= m;
    return ord;
}

namespace {

bool prime(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

AvoidanceCertificate character_avoidance(const std::vector<i64>& S0, i64 p, i64 ell, const std::vector<i64>& orders,
                                         i64 cap)
{
    if (orders.empty()) throw WeylError("T must be nonempty");
    if (std::find(S0.begin(), S0.end(), p) == S0.end()) throw WeylError("S0 must contain p");
    if (std::find(S0.begin(), S0.end(), ell) != S0.end()) throw WeylError("ell must lie outside S0");
    const i64 M = *std::max_element(orders.begin(), orders.end());
    // q must exceed max(ell, p)^M
    i64 bound = 1;
    const i64 big = std::max(ell, p);
    for (i64 i = 0; i < M; ++i) {
        if (bound > cap / big) throw WeylError("search bound exceeded");
        bound *= big;
    }
    for (i64 q = bound + 1; q <= cap; ++q) {
        if (q % 2 == 0 || !prime(q)) continue;
        if (std::find(S0.begin(), S0.end(), q) != S0.end()) continue;
        if (q % ell == 0 || q % p == 0 || q % p == 1) continue;
        AvoidanceCertificate c{q, M, multiplicative_order(ell, q), multiplicative_order(p, q)};
        if (c.ord_ell <= M || c.ord_p <= M || c.ord_ell % p == 0 || c.ord_p % p == 0)
            throw WeylError("certificate check failed");
        return c;
    }
    throw WeylError("search bound exceeded");
}

}  // namespace padiclinv
