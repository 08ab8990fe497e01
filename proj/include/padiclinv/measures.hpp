#pragma once

#include "padiclinv/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace padiclinv {

// Element of Z_p[(Z/p^n)^x]; table indexed by residues in [0, p^n), zero on non-units.
struct Measure {
    i64 p = 3;
    int n = 1;
    int prec = 10;
    std::vector<Padic> table;

    i64 modulus() const { return ipow(p, n); }
    const Padic& operator[](i64 a) const { return table[static_cast<std::size_t>(mod_floor(a, modulus()))]; }
    bool equals(const Measure& o) const;
};

Measure zero_measure(i64 p, int n, int prec);
Measure dirac(i64 p, int n, i64 a, int prec);
Measure norm_project(const Measure& mu);
Measure convolve(const Measure& mu, const Measure& nu);
Measure iota(const Measure& mu);
Measure operator+(const Measure& a, const Measure& b);
Measure operator-(const Measure& a, const Measure& b);
Measure scale(const Padic& c, const Measure& mu);
// random table with coefficients in Z_p mod p^prec; total mass zero if requested
Measure random_measure(i64 p, int n, int prec, bool mass_zero, std::mt19937_64& rng);

// Finite-order character of (Z/p^k)^x with values in Q_p.
struct Character {
    i64 p = 3;
    int level = 1;
    std::vector<Padic> values;    // indexed by residues mod p^level
    Padic operator()(i64 a) const { return values[static_cast<std::size_t>(mod_floor(a, ipow(p, level)))]; }
};

Character trivial_character(i64 p, int prec);
// omega^j through the Teichmuller lift, conductor p
Character teichmuller_character(i64 p, int j, int prec);
// Table of values; checks multiplicativity and that every value is a (p-1)-th root of unity.
Character character_from_table(i64 p, int level, const std::vector<Padic>& values);
Character inverse(const Character& chi);
Character product(const Character& a, const Character& b);

Padic eval_character(const Measure& mu, const Character& chi);
// sum f(a) mu(a) at the representatives a in [1, p^n)
Padic integrate(const Measure& mu, const std::function<Padic(const Padic&)>& f);

// m_k = sum_a mu(a) (log_p <a>)^k
Padic moment(const Measure& mu, int k);
// sum_a mu(a) <a>^s through exp(s log <a>)
Padic eval_power_direct(const Measure& mu, const Padic& s);
// sum_k s^k / k! m_k, truncated once the terms vanish mod p^prec
Padic eval_power(const Measure& mu, const Padic& s);
// coefficients of the series in s up to s^K
std::vector<Padic> eval_power_series(const Measure& mu, int K);

struct Twist {
    i64 N = 1;        // unit
    Padic eps;        // epsilon factor, a unit
};

// derivative of L(mu, s) = eval_power(mu, s) at s = 0, i.e. m_1
Padic derivative_at_zero(const Measure& mu);
// derivative at s = 1 of L+(s) = eps^{-1} <N>^{1-s} int <x>^{1-s} dmu: the full chain rule
Padic twisted_derivative(const Measure& mu, const Twist& tw);
// the shortcut -eps^{-1} m_1; throws "no exceptional zero" unless m_0 = 0
Padic twisted_derivative_shortcut(const Measure& mu, const Twist& tw);
// evaluation of L+ itself, direct path
Padic twisted_lplus(const Measure& mu, const Twist& tw, const Padic& s);

// c^2 [1] - psi(c)^{-1} [c^{-1}]
Measure smoothing_measure(i64 p, int n, i64 c, const Padic& psi_c, int prec);

// e(s) = E(s) (1 - p^{s-c}) L(s), L(s) = (1 - p^{-1-s})^{-1}, E(s) = A p^{B s}.
using Rational = boost::multiprecision::cpp_rational;

struct EulerFactor {
    std::string kind;   // "minus" or "plus"
    i64 p = 3;
    int c = 0;          // exceptional point
    Rational A = 1;
    int B = 0;

    Rational value(int s) const;                 // exact for integer s
    Rational E(int s) const;
    Rational L(int s) const;
    int zero_order() const;                      // order of vanishing at s = c
    Rational leading_E() const { return E(c); }  // E^{(c)}(c)
    // lim e(s)/(1 - p^{s-c}) at s = c
    Rational leading_coefficient() const { return E(c) * L(c); }
};

EulerFactor euler_factor(const std::string& kind, i64 p);

}  // namespace padiclinv
