#pragma once

#include "padiclinv/gl3.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace padiclinv {

// Exact integer 3x3 matrix, row-major.
using IntMat = std::array<i64, 9>;

namespace intmats {
IntMat identity();
IntMat diag(i64 a, i64 b, i64 c);
IntMat n(i64 x, i64 y, i64 z);   // [[1,x,y],[0,1,z],[0,0,1]]
IntMat t(i64 p);
IntMat t2(i64 p);
IntMat u0();
IntMat u();
IntMat mul(const IntMat& a, const IntMat& b);
IntMat power(const IntMat& a, int k);
IntMat adj(const IntMat& a);
i64 det(const IntMat& a);
// p^k * g with integral entries, reduced mod p^prec.
IntMat from_mat3(const Mat3& g, int prec);
Mat3 to_mat3(const IntMat& g, i64 p, int prec);
}  // namespace intmats

// Point of P^2 (row vector) and plane through it (normal column vector), both
// exact primitive integer lifts with point . plane = 0.
struct Flag {
    std::array<i64, 3> point;
    std::array<i64, 3> plane;
    bool operator<(const Flag& o) const
    {
        return point != o.point ? point < o.point : plane < o.plane;
    }
    bool operator==(const Flag& o) const = default;
};

std::string flag_to_string(const Flag& f);

std::array<i64, 3> primitive(std::array<i64, 3> v);
std::array<i64, 3> cross(const std::array<i64, 3>& a, const std::array<i64, 3>& b);
Flag flag_of(const IntMat& g);    // row 1 and the span of rows 1, 2
Flag standard_flag();
// x . g; the plane goes through adj(g).
Flag act(const Flag& f, const IntMat& g);
Flag canonical_mod(const Flag& f, i64 p, int m);
std::vector<Flag> enumerate_flags(i64 p, int m);
i64 flag_count(i64 p, int m);
// Random exact flag, lifted from a random integral matrix with entries below p^depth.
Flag random_flag(i64 p, int depth, std::mt19937_64& rng);

// Coordinates (X, Y, Z) with the flag equal to that of n(X, Y, Z); empty off the big cell.
struct BigCell {
    Padic X, Y, Z;
};
std::optional<BigCell> big_cell(const Flag& f, i64 p, int prec);

// Index (i, j) of the Bruhat cell of the flag mod p inside B\bar . w . Iw:
// i = first nonzero coordinate of the point, j = last nonzero coordinate of
// the normal, both mod p.
std::pair<int, int> iw_cell(const Flag& f, i64 p);

// Subsets of Q_p used by the cell functions.
struct PSet {
    enum Kind { Ball, Units } kind = Ball;
    i64 center = 0;
    int radius = 0;   // center + p^radius Z_p
    bool contains(const Padic& x) const;
    std::string name(i64 p) const;
    static PSet zp() { return {Ball, 0, 0}; }
    static PSet ball(i64 center, int radius) { return {Ball, center, radius}; }
    static PSet units() { return {Units, 0, 0}; }
};

struct CoeffFn {
    std::string name;
    std::function<Padic(const Padic&)> f;
    Padic operator()(const Padic& x) const { return f(x); }
};

namespace coeff {
CoeffFn one(i64 p);
CoeffFn log(i64 p, int s);   // log_p truncated to absolute precision s
// function of x mod p^n on units, given by a table indexed by residues
CoeffFn table(i64 p, int n, std::vector<i64> values);
CoeffFn iota(const CoeffFn& f);   // x -> f(-x)
}  // namespace coeff

enum class Parabolic { B, P1, P2 };

struct SteinbergFunction {
    std::string name;
    Parabolic parabolic = Parabolic::B;
    std::function<Padic(const Flag&)> eval;
    Padic operator()(const Flag& x) const { return eval(x); }
};

namespace stfn {
SteinbergFunction zero(i64 p);
SteinbergFunction constant(const Padic& c);
// f(X) on the big cell with Y in A, X in B, Z in Z_p
SteinbergFunction phi_cell(i64 p, const PSet& A, const PSet& B, const CoeffFn& f);
// f(Y) on the big cell with X in A, Y in B, Z in pZ_p
SteinbergFunction psi_cell(i64 p, const PSet& A, const PSet& B, const CoeffFn& f);
// f(Y) for the point [1 : X : Y] with X in A, Y in B
SteinbergFunction xi_cell(i64 p, const PSet& A, const PSet& B, const CoeffFn& f);
SteinbergFunction phi_iw(i64 p);
SteinbergFunction xi_n(i64 p, int n);
// plane function: R != 0, P/R in p^n Z_p, Q/R in Z_p
SteinbergFunction phi_n(i64 p, int n);
// g -> c_{1,lambda}[x](g) on the point of g
SteinbergFunction c1(const Homomorphism& lambda, const IntMat& x, int prec, const std::string& name);
}  // namespace stfn

SteinbergFunction translate(const SteinbergFunction& f, const IntMat& g);
SteinbergFunction translate(const SteinbergFunction& f, const Mat3& g, int prec);
SteinbergFunction operator+(const SteinbergFunction& a, const SteinbergFunction& b);
SteinbergFunction operator-(const SteinbergFunction& a, const SteinbergFunction& b);
SteinbergFunction scale(const Padic& c, const SteinbergFunction& f);
SteinbergFunction sum(const std::vector<SteinbergFunction>& fs, const std::string& name);
// (f1 (x) f2)(flag) = f1(point) f2(plane)
SteinbergFunction pr_multiply(const SteinbergFunction& f1, const SteinbergFunction& f2);
SteinbergFunction hecke_up1(const SteinbergFunction& f, i64 p);
// Right Iw-cosets of Iw t^2 Iw found by brute-force enumeration of n(x,y,z) t^2.
std::vector<IntMat> up1_squared_cosets(i64 p);
bool in_iwahori(const IntMat& g, i64 p);   // g integral, det unit, upper triangular mod p

struct Comparison {
    bool pass = true;
    i64 checked = 0;
    i64 failures = 0;
    std::string first_counterexample;
};

Comparison compare_pointwise(const SteinbergFunction& f, const SteinbergFunction& g,
                             const std::vector<Flag>& flags, int s);

// Decides whether f - g lies in I_{P1} + I_{P2} at level m with coefficients
// mod p^s: D = h1(point) + h2(plane) on every flag mod p^m.
struct StEquality {
    bool pass = true;
    i64 flags = 0;
    i64 inconsistent_cycles = 0;
    bool depends_on_point_only = false;
    std::string first_counterexample;
};
StEquality st_equal(const SteinbergFunction& f, const SteinbergFunction& g, i64 p, int m, int s);

// Lift independence: eval(f, flag) == eval(f, flag . k) for k = 1 mod p^m.
Comparison lift_independence(const SteinbergFunction& f, i64 p, int m, int s, int lifts,
                             std::uint64_t seed, i64 max_flags = -1);
// ch of the flags whose cell mod p is (i, j)
SteinbergFunction iw_cell_indicator(i64 p, int i, int j);

struct IdentityReport {
    std::string id;
    std::string notion;   // "pointwise" or "St"
    bool pass = true;
    i64 checked = 0;
    i64 failures = 0;
    std::string detail;
    std::string first_counterexample;
};

struct IdentityConfig {
    i64 p = 3;
    int n = 1;
    int m = 2;            // enumeration level / coefficient precision
    i64 samples = 0;      // extra random deep lifts for pointwise identities
    std::uint64_t seed = 42;
};

std::vector<std::string> identity_ids();
IdentityReport verify_identity(const std::string& id, const IdentityConfig& cfg);

// Schwartz functions on Q_p^2 as tables on (p^{-M} Z / p^K Z)^2.
struct SchwartzFunction {
    i64 p = 3;
    int M = 0;
    int K = 1;
    std::vector<i64> values;   // index i * p^{M+K} + j for v = (i, j) p^{-M}
    i64 side() const { return ipow(p, M + K); }
    i64 at(i64 i, i64 j) const { return values[static_cast<std::size_t>(i * side() + j)]; }
    bool operator==(const SchwartzFunction& o) const = default;
};

// ch(p^n Z_p x (1 + p^n Z_p)) on the window (M, K).
SchwartzFunction schwartz_phi(i64 p, int n, int M, int K);
// 2x2 rational matrix (num/den entries).
struct Mat2Q {
    std::array<i64, 4> num;
    std::array<i64, 4> den{1, 1, 1, 1};
};
Mat2Q v_bc(i64 p, int n, i64 b, i64 c);   // [[1,0],[p^n b, 1 + p^n c]]
Mat2Q mul2(const Mat2Q& a, const Mat2Q& b);
// sum_r r . Phi with (g Phi)(v) = Phi(v g), tabulated on Phi's window.
// Throws "window overflow" if a value is not determined by the window.
SchwartzFunction schwartz_trace(const SchwartzFunction& phi, const std::vector<Mat2Q>& reps);

struct TraceReport {
    bool pass = true;
    std::string detail;
};
TraceReport verify_schwartz_traces(i64 p, int n);

}  // namespace padiclinv
