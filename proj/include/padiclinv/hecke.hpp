#pragma once

#include "padiclinv/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace padiclinv {

using BigInt = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial. Variables are laid out as [X, ell, q, v_1, ..., v_k];
// q is a square root of ell and q^2 is rewritten to ell after every operation,
// so the q-exponent is always 0 or 1.
class LaurentPoly {
public:
    using Exps = std::vector<int>;
    static constexpr int kX = 0, kEll = 1, kQ = 2, kFirst = 3;
    static constexpr int kMaxExp = 4096;

    explicit LaurentPoly(int nvars = kFirst) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, const BigInt& c);
    static LaurentPoly monomial(int nvars, Exps e, const BigInt& c = 1);
    static LaurentPoly var(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    const std::map<Exps, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    LaurentPoly pow(int k) const;         // negative k only for monomials
    LaurentPoly inverse_monomial() const;
    // the ring map sending variable index to image
    LaurentPoly substitute(int index, const LaurentPoly& image) const;
    // part of X-degree d, with the X exponent removed
    LaurentPoly coefficient_X(int d) const;
    int max_degree_X() const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(Exps e, const BigInt& c);
    int nvars_;
    std::map<Exps, BigInt> terms_;
};

std::vector<std::string> satake_var_names(int k, const std::string& prefix = "b");
LaurentPoly elementary_symmetric(const std::vector<LaurentPoly>& xs, int i);
// X -> c X
LaurentPoly dilate_X(const LaurentPoly& f, const LaurentPoly& c);

// GL_n polynomials in the variables beta_j = v_{first+j}, from the Hecke operators
// T_i -> e_i(alpha) under the normalised Satake map, beta_j = q^{n-1} alpha_j.
LaurentPoly hecke_H(int nvars, int first, int n);
LaurentPoly hecke_H_dual(int nvars, int first, int n);
// GSp_2n polynomial in the variables u_j = v_{first+j}: e_i of (u, 1, u^{-1})
LaurentPoly hecke_Htilde(int nvars, int first, int n);
// 1 - e_1 X + ... as a function of a multiset of parameters
LaurentPoly char_poly(const std::vector<LaurentPoly>& params, int nvars);

struct SatakeReport {
    bool pass = true;
    int coefficients = 0;
    std::vector<int> mismatched_degrees;
    LaurentPoly lhs, rhs;
};

SatakeReport satake_identity_check(int n);
SatakeReport parabolic_satake_check(int n, const std::vector<int>& partition);

// Galois characters valued in a Hecke algebra, recorded by exponent data.
struct UniversalCharacter {
    std::string label;
    bool tilde = false;             // operators are the U~ of GSp or the U of GL_n
    int omega_p = 0;                // omega power at Art(p)
    std::map<int, int> U;           // U_t exponents at Art(p), t >= 1
    int omega_u = 0;                // omega power at Art(u)
    i64 u_power = 0;                // power of u at Art(u)
    std::map<int, int> diamond;     // <u>_t exponents at Art(u)

    bool is_trivial() const;
    bool operator==(const UniversalCharacter& o) const;
    std::string to_string() const;
};

UniversalCharacter operator*(const UniversalCharacter& a, const UniversalCharacter& b);
UniversalCharacter inverse(const UniversalCharacter& c);
UniversalCharacter twist_omega(const UniversalCharacter& c, int k);

std::vector<UniversalCharacter> psi_characters(const Weight& l);               // i = 1..2n+1
std::vector<UniversalCharacter> chi_characters(const std::vector<i64>& lam);   // i = 1..n
// chi_1 w^{-1}, ..., chi_n w^{-1}, chi_n^{-1} w, ..., chi_1^{-1} w
std::vector<UniversalCharacter> zeta_list(const std::vector<i64>& lam);
// zeta_{w(1)}, ..., zeta_{w(2n)}; w must lie in ^MW
std::vector<UniversalCharacter> reindex(const WeylElement& w, const std::vector<UniversalCharacter>& zetas);

}  // namespace padiclinv
