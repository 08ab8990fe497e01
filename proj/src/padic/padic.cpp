#include "padiclinv/padic.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>
#include <tuple>
#include <sstream>
#include <vector>

namespace padiclinv {

bool is_prime(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int max_precision(i64 p)
{
    int N = 0;
    i128 x = 1;
    while (x * p < (i128(1) << 62)) {
        x *= p;
        ++N;
    }
    return N;
}

i64 ipow(i64 p, int e)
{
    if (e < 0) throw PadicError("negative exponent in ipow");
    i128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= p;
        if (r > (i128(1) << 62)) throw PadicError("p^N overflows the 62-bit residue range");
    }
    return static_cast<i64>(r);
}

i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m)
{
    i128 r = static_cast<i128>(a) * b % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

i64 powmod(i64 a, i64 e, i64 m)
{
    i64 r = 1 % m, b = mod_floor(a, m);
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 m)
{
    i64 g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
    while (a1 != 0) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw PadicError("element not invertible");
    return mod_floor(x, m);
}

int ord_int(i64 p, i64 n)
{
    if (n == 0) throw PadicError("valuation undefined at this precision");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::pair<i64, i64> parse_rational(const std::string& s0)
{
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw PadicError("empty rational");
    auto parse_int = [&](const std::string& t) -> i64 {
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw PadicError("bad rational: " + s0);
        return v;
    };
    i64 num, den;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        num = parse_int(s.substr(0, slash));
        den = parse_int(s.substr(slash + 1));
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        den = ipow(10, static_cast<int>(fp.size()));
        num = parse_int(ip) * den + (fp.empty() ? 0 : parse_int(fp));
        if (neg) num = -num;
    } else {
        num = parse_int(s);
        den = 1;
    }
    if (den == 0) throw PadicError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Padic Padic::zero(i64 p, int abs_prec) { return Padic(p, abs_prec, 0, 0); }

Padic Padic::from_parts(i64 p, int v, i64 unit, int N)
{
    if (N <= 0) return zero(p, v);
    if (N > max_precision(p)) throw PadicError("precision exceeds residue range");
    i64 m = ipow(p, N);
    unit = mod_floor(unit, m);
    if (unit % p == 0) throw PadicError("unit part divisible by p");
    return Padic(p, v, unit, N);
}

Padic Padic::from_int(i64 p, i64 n, int prec)
{
    if (p < 3 || !is_prime(p)) throw PadicError("p must be an odd prime");
    prec = std::min(prec, max_precision(p));
    if (n == 0) return zero(p, kInfinitePrec);
    int v = ord_int(p, n);
    for (int i = 0; i < v; ++i) n /= p;
    return from_parts(p, v, n, prec);
}

Padic Padic::from_rational(i64 p, i64 num, i64 den, int prec)
{
    if (den == 0) throw PadicError("zero denominator");
    Padic a = from_int(p, num, prec);
    if (num == 0) return a;
    return a / from_int(p, den, prec);
}

Padic Padic::from_string(i64 p, const std::string& s, int prec)
{
    auto [n, d] = parse_rational(s);
    return from_rational(p, n, d, prec);
}

int Padic::valuation() const
{
    if (is_zero()) throw PadicError("valuation undefined at this precision");
    return v_;
}

Padic Padic::normalize(i64 p, int v, i64 s, int K)
{
    if (K <= 0) return zero(p, v + std::max(K, 0));
    if (s == 0) return zero(p, v + K);
    int k = 0;
    while (s % p == 0) {
        s /= p;
        ++k;
    }
    return from_parts(p, v + k, s, K - k);
}

Padic Padic::operator-() const
{
    if (is_zero()) return *this;
    return Padic(p_, v_, ipow(p_, N_) - u_, N_);
}

Padic Padic::operator+(const Padic& o) const
{
    if (p_ != o.p_) throw PadicError("prime mismatch");
    int A = std::min(abs_prec(), o.abs_prec());
    if (is_zero() && o.is_zero()) return zero(p_, A);
    if (is_zero()) return o.with_abs_prec(A);
    if (o.is_zero()) return with_abs_prec(A);
    int vmin = std::min(v_, o.v_);
    int K = A - vmin;
    if (K <= 0) return zero(p_, A);
    i64 m = ipow(p_, K);
    auto part = [&](const Padic& x) -> i64 {
        int shift = x.v_ - vmin;
        if (shift >= K) return 0;
        return mulmod(x.u_, ipow(p_, shift), m);
    };
    i64 s = (part(*this) + part(o)) % m;
    return normalize(p_, vmin, s, K);
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const
{
    if (p_ != o.p_) throw PadicError("prime mismatch");
    if (is_zero() && o.is_zero()) return zero(p_, std::min(kInfinitePrec, v_ + o.v_));
    if (is_zero()) return zero(p_, std::min(kInfinitePrec, v_ + o.v_));
    if (o.is_zero()) return zero(p_, std::min(kInfinitePrec, v_ + o.v_));
    int N = std::min(N_, o.N_);
    i64 m = ipow(p_, N);
    return Padic(p_, v_ + o.v_, mulmod(u_ % m, o.u_ % m, m), N);
}

Padic Padic::inverse() const
{
    if (is_zero()) throw PadicError("division by zero at this precision");
    return Padic(p_, -v_, invmod(u_, ipow(p_, N_)), N_);
}

Padic Padic::operator/(const Padic& o) const { return *this * o.inverse(); }

Padic Padic::pow(i64 k) const
{
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return one_like();
    Padic r = from_int(p_, 1, std::max(N_, 1));
    if (is_zero()) {
        return zero(p_, static_cast<int>(std::min<i64>(kInfinitePrec, i64(v_) * k)));
    }
    Padic b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Padic Padic::with_abs_prec(int A) const
{
    if (A >= abs_prec()) return *this;
    if (is_zero() || A <= v_) return zero(p_, std::min(A, v_ + N_));
    int N = A - v_;
    return Padic(p_, v_, u_ % ipow(p_, N), N);
}

Padic Padic::with_rel_prec(int N) const
{
    if (is_zero() || N >= N_) return *this;
    return with_abs_prec(v_ + N);
}

bool Padic::equals_mod(const Padic& o, int k) const
{
    Padic d = *this - o;
    if (d.abs_prec() < k && d.is_zero()) throw PadicError("precision exhausted");
    if (d.is_zero()) return true;
    return d.v_ >= k;
}

i64 Padic::residue(int k) const
{
    if (abs_prec() < k) throw PadicError("precision exhausted");
    i64 m = ipow(p_, k);
    if (is_zero()) return 0;
    if (v_ < 0) throw PadicError("residue of a non-integral element");
    if (v_ >= k) return 0;
    return mulmod(u_, ipow(p_, v_), m);
}

std::string Padic::to_string() const
{
    std::ostringstream os;
    if (is_zero()) {
        os << "0 mod " << p_ << "^" << v_;
        return os.str();
    }
    os << p_ << "^" << v_ << " * (";
    i64 u = u_;
    for (int i = 0; i < N_; ++i) {
        if (i) os << " + ";
        os << (u % p_);
        if (i == 1) os << "*" << p_;
        else if (i > 1) os << "*" << p_ << "^" << i;
        u /= p_;
    }
    os << ") mod " << p_ << "^" << N_;
    return os.str();
}

int ord_p(const Padic& x) { return x.valuation(); }

Padic log_p(const Padic& x)
{
    if (x.is_zero()) throw PadicError("log_p of zero");
    const i64 p = x.prime();
    const int N = x.rel_prec();
    if (N < 1) throw PadicError("precision exhausted");
    Padic u = Padic::from_parts(p, 0, x.unit(), N);
    Padic z = u.pow(p - 1) - Padic::from_int(p, 1, N);
    if (z.is_zero()) return Padic::zero(p, N);
    const int vz = z.valuation();
    Padic sum = Padic::zero(p, Padic::kInfinitePrec);
    Padic zk = Padic::from_int(p, 1, N);
    for (i64 k = 1;; ++k) {
        int lg = 0;
        for (i64 t = k; t >= p; t /= p) ++lg;
        if (k * vz - lg >= N) break;
        zk = zk * z;
        Padic term = zk / Padic::from_int(p, k, N);
        sum = (k % 2 == 1) ? sum + term : sum - term;
    }
    sum = sum.with_abs_prec(N);
    return sum / Padic::from_int(p, p - 1, N);
}

Padic exp_p(const Padic& x)
{
    const i64 p = x.prime();
    const int A = std::min(x.abs_prec(), max_precision(p));
    Padic one = Padic::from_int(p, 1, A);
    if (x.is_zero()) return one.with_abs_prec(A);
    if (x.valuation() < 1) throw PadicError("exp divergent");
    const int vx = x.valuation();
    Padic sum = one, term = one;
    for (i64 k = 1;; ++k) {
        // val(x^k/k!) > k*vx - (k-1)/(p-1)
        if ((k * vx) * (p - 1) - (k - 1) >= i64(A) * (p - 1)) break;
        term = term * x / Padic::from_int(p, k, A);
        sum = sum + term;
    }
    return sum.with_abs_prec(A);
}

TeichmullerSplit teichmuller(const Padic& x)
{
    if (!x.is_unit()) throw PadicError("teichmuller: argument is not a unit");
    const i64 p = x.prime();
    Padic z = x;
    for (int i = 0; i <= x.rel_prec(); ++i) {
        Padic nz = z.pow(p);
        if (nz.equals(z)) break;
        z = nz;
    }
    return {z, x / z};
}

Homomorphism Homomorphism::log(i64 p, int prec)
{
    return {Padic::from_int(p, 1, prec), Padic::zero(p, Padic::kInfinitePrec)};
}

Homomorphism Homomorphism::ord(i64 p, int prec)
{
    return {Padic::zero(p, Padic::kInfinitePrec), Padic::from_int(p, 1, prec)};
}

Homomorphism Homomorphism::zero(i64 p, int)
{
    return {Padic::zero(p, Padic::kInfinitePrec), Padic::zero(p, Padic::kInfinitePrec)};
}

Padic Homomorphism::operator()(const Padic& x) const
{
    const i64 p = x.prime();
    return a * log_p(x) + b * Padic::from_int(p, ord_p(x), max_precision(p));
}

Padic hom_eval(const Homomorphism& lambda, const Padic& x) { return lambda(x); }

}  // namespace padiclinv
