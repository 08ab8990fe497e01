#pragma once

#include "padiclinv/dual.hpp"
#include "padiclinv/padic.hpp"

#include <array>
#include <string>
#include <vector>

namespace padiclinv {

using DualP = Dual<Padic>;

// (1 + t eps)^y with base 1 + t eps, computed as exp(y log(1 + t eps))
DualP dual_unit_pow(const DualP& base, const Padic& y);

// kappa_{i,eps}(x) = (1 + v_i eps)^{log_p x} for a unit x; i = 3 is (kappa_1 kappa_2)^{-1}
DualP kappa_eps(int i, const std::array<Padic, 2>& v, const Padic& x);

struct TangentData {
    std::array<Padic, 2> v;        // tangent vector
    std::array<Padic, 2> dalpha;   // derivatives of alpha_1, alpha_2 at the origin
};

// character of Q_p^x with values in L[eps], trivial mod eps
struct DeltaChar {
    DualP at_p;     // value at p
    Padic unit;     // restriction to Z_p^x is 1 + unit * log_p * eps
    DualP operator()(const Padic& x) const;   // x a nonzero p-adic number
    Homomorphism derivative() const;          // d delta with delta = 1 + d delta * eps
};

struct Triangulation {
    std::array<DeltaChar, 3> delta;
    std::array<Homomorphism, 3> ddelta;
};

// delta_1(p) = alpha_1, delta_1 delta_2 (p) = alpha_2, delta_1 delta_2 delta_3 (p) = 1
Triangulation triangulation_params(const TangentData& t);

// L = -b/a for the line spanned by a log_p + b ord_p
Padic l_invariant_from_line(const Homomorphism& line);

struct BCGSResult {
    Padic automorphic;                // -d(alpha_1^2 alpha_2^{-1}) or -d(alpha_2^2 alpha_1^{-1}), v normalised
    Padic galois;                     // -d(delta_i delta_{i+1}^{-1})(p), v normalised
    Padic intro_i2;                   // -d(alpha_2^2), only for i = 2
    Homomorphism line;                // d delta_i - d delta_{i+1}, v normalised
    Padic from_line;
    TangentData normalised;
};

// v o s_i^vee: v1 - v2 (i = 1), v1 + 2 v2 (i = 2)
Padic coroot_pairing(int i, const std::array<Padic, 2>& v);
BCGSResult bcgs(int i, const TangentData& t);

// i = 2 data for pi is i = 1 data for the dual family
TangentData duality_swap(const TangentData& t);

struct Sym2Result {
    TangentData data;
    Homomorphism line;
    Padic L;
};

// a_p(k) = c_0 + c_1 k + ..., c_0 = 1; alpha_1 = alpha_2 = a_p^2, v = (1, 0)
Sym2Result sym2(const std::vector<Padic>& ap_series);

}  // namespace padiclinv
