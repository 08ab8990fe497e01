#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace padiclinv {

using i64 = std::int64_t;
using i128 = __int128;

class PadicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(i64 n);
// Largest N with p^N < 2^62.
int max_precision(i64 p);
i64 ipow(i64 p, int e);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, i64 e, i64 m);
i64 invmod(i64 a, i64 m);
int ord_int(i64 p, i64 n);   // n != 0
i64 mod_floor(i64 a, i64 m);

// Parses "a", "-a", "a/b" or a finite decimal "x.yz" into a reduced fraction.
std::pair<i64, i64> parse_rational(const std::string& s);

// Element p^v * (u + O(p^N)) of Q_p.  Zero is stored as N == 0 with v the
// absolute precision, i.e. "known to be divisible by p^v".
class Padic {
public:
    static constexpr int kInfinitePrec = 1 << 28;

    Padic() = default;

    static Padic zero(i64 p, int abs_prec);
    static Padic from_int(i64 p, i64 n, int prec);
    static Padic from_rational(i64 p, i64 num, i64 den, int prec);
    static Padic from_string(i64 p, const std::string& s, int prec);
    // p^v * unit mod p^N, unit prime to p.
    static Padic from_parts(i64 p, int v, i64 unit, int N);

    i64 prime() const { return p_; }
    bool is_zero() const { return N_ == 0; }
    int valuation() const;
    int rel_prec() const { return N_; }
    int abs_prec() const { return v_ + N_; }
    i64 unit() const { return u_; }
    bool is_unit() const { return !is_zero() && v_ == 0; }
    bool is_integral() const { return is_zero() ? v_ >= 0 : v_ >= 0; }

    // Lower bound on the valuation (exact value if nonzero).
    int val_lower() const { return v_; }

    Padic operator-() const;
    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const;
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic& operator+=(const Padic& o) { return *this = *this + o; }
    Padic& operator-=(const Padic& o) { return *this = *this - o; }
    Padic& operator*=(const Padic& o) { return *this = *this * o; }
    Padic& operator/=(const Padic& o) { return *this = *this / o; }

    Padic one_like() const { return from_int(p_, 1, kInfinitePrec); }
    Padic zero_like() const { return zero(p_, kInfinitePrec); }

    Padic inverse() const;
    Padic pow(i64 k) const;

    Padic with_abs_prec(int A) const;   // truncate (never raises precision)
    Padic with_rel_prec(int N) const;

    // Equality to the common precision of both operands.
    bool equals(const Padic& o) const { return (*this - o).is_zero(); }
    // Equality modulo p^k (both sides must be known to absolute precision k).
    bool equals_mod(const Padic& o, int k) const;

    // Integral element reduced to [0, p^k); requires abs_prec >= k.
    i64 residue(int k) const;

    std::string to_string() const;

private:
    Padic(i64 p, int v, i64 u, int N) : p_(p), v_(v), u_(u), N_(N) {}
    static Padic normalize(i64 p, int v, i64 s, int K);

    i64 p_ = 0;
    int v_ = 0;
    i64 u_ = 0;
    int N_ = 0;
};

inline Padic operator*(i64 k, const Padic& x)
{
    return Padic::from_int(x.prime(), k, Padic::kInfinitePrec / 2) * x;
}

int ord_p(const Padic& x);
Padic log_p(const Padic& x);
Padic exp_p(const Padic& x);

struct TeichmullerSplit {
    Padic zeta;
    Padic one_unit;
};
TeichmullerSplit teichmuller(const Padic& x);

// lambda = a*log_p + b*ord_p on Q_p^x
struct Homomorphism {
    Padic a;
    Padic b;

    static Homomorphism log(i64 p, int prec);
    static Homomorphism ord(i64 p, int prec);
    static Homomorphism zero(i64 p, int prec);

    Padic operator()(const Padic& x) const;
    Homomorphism operator+(const Homomorphism& o) const { return {a + o.a, b + o.b}; }
    Homomorphism operator-(const Homomorphism& o) const { return {a - o.a, b - o.b}; }
    Homomorphism scaled(const Padic& c) const { return {c * a, c * b}; }
};

Padic hom_eval(const Homomorphism& lambda, const Padic& x);

}  // namespace padiclinv
