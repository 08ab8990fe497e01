#pragma once

#include "padiclinv/padic.hpp"

#include <array>
#include <string>
#include <vector>

namespace padiclinv {

class Mat3 {
public:
    Mat3() = default;
    explicit Mat3(const std::array<Padic, 9>& e) : e_(e) {}

    static Mat3 identity(i64 p, int prec);
    static Mat3 from_ints(i64 p, const std::array<i64, 9>& v, int prec);
    static Mat3 from_strings(i64 p, const std::vector<std::string>& v, int prec);
    static Mat3 diag(const Padic& a, const Padic& b, const Padic& c);

    Padic& operator()(int i, int j) { return e_[3 * i + j]; }
    const Padic& operator()(int i, int j) const { return e_[3 * i + j]; }
    i64 prime() const { return e_[0].prime(); }

    Mat3 operator*(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Padic det() const;
    Mat3 adjugate() const;
    Mat3 inverse() const;
    Mat3 transpose() const;

    // Largest k such that every entry is known modulo p^k.
    int abs_prec() const;
    bool equals(const Mat3& o) const;
    std::string to_string() const;

private:
    std::array<Padic, 9> e_;
};

namespace mats {
Mat3 t(i64 p, int prec);    // diag(p,1,1)
Mat3 t2(i64 p, int prec);   // diag(p,p,1)
Mat3 u0(i64 p, int prec);
Mat3 u(i64 p, int prec);
Mat3 w0(i64 p, int prec);
Mat3 n1(const Padic& x, const Padic& y);   // [[1,x,y],[0,1,0],[0,0,1]]
// Minimal-length representatives for P1bar\G, indexed by the pivot column.
Mat3 weyl_rep(int pivot, i64 p, int prec);
}  // namespace mats

enum class BruhatCase { A1, A2, A3, B1, B2, C };
std::string case_label(BruhatCase c);

struct BruhatDecomposition {
    Mat3 pbar;
    Mat3 w;
    Mat3 k;
    Mat3 n;
    int pivot = 0;
    BruhatCase bruhat_case = BruhatCase::A1;
};

// Index of the first coordinate of minimal valuation; throws "ambiguous cell"
// when zero-to-precision entries leave the choice undecided.
int pivot_index(const std::array<Padic, 3>& row);

BruhatDecomposition decompose(const Mat3& g);
Padic v1(const Mat3& q);                // q11^{-1} det(lower-right 2x2)
Padic section_v1(const Mat3& g);        // v1(s(g))

// P2bar = block lower (2,1); v2(q) = det(upper-left 2x2)^{-1} q33.
struct P2Decomposition {
    Mat3 q;
    Mat3 w;
    Mat3 unip;
    int pivot = 0;
};
std::array<Padic, 3> plane_normal(const Mat3& g);   // row1 x row2
P2Decomposition decompose_p2(const Mat3& g);
Padic v2(const Mat3& q);
Padic section_v2(const Mat3& g);

Mat3 theta(const Mat3& g);   // transpose-inverse
// First row of w0 * g^theta: the point attached to the plane of g.
std::array<Padic, 3> theta_point(const Mat3& g);

struct CocycleSpec {
    int index = 1;
    Homomorphism lambda;
    Mat3 x;
};

Padic cocycle_value(const CocycleSpec& spec, const Mat3& g);
// c_2 through the theta transport: c_1[x^theta](w0 g^theta)
Padic cocycle2_via_theta(const Homomorphism& lambda, const Mat3& x, const Mat3& g);

// Difference between lambda v1 of the chosen section and of the section using
// the last minimal-valuation coordinate; a function of the point only.
Padic section_difference(const Homomorphism& lambda, const Mat3& g);

// Primitive row completed to an element of GL3(Z_p) by standard basis rows.
Mat3 complete_row(i64 p, const std::array<i64, 3>& row, int prec);

// Canonical representatives of P^2(Z/p^m): first unit coordinate equal to 1.
std::vector<std::array<i64, 3>> projective_points(i64 p, int m);

struct CocycleCounterexample {
    std::array<i64, 3> point;
    std::string expected;
    std::string got;
};

struct CocycleTableReport {
    bool pass = true;
    i64 checked = 0;
    i64 on_cell = 0;
    std::vector<CocycleCounterexample> counterexamples;
    std::vector<std::string> on_cell_values;   // distinct values seen on the cell
};

CocycleTableReport verify_cocycle_table(const Homomorphism& lambda, i64 p, int m, int prec = -1);

// Every point of P^2(Z/p^m), completed to g and scaled by p^s for s in {0, -1, 2}:
// exactly one case condition holds, decompose picks it, and pbar w k = g.
struct BruhatReport {
    bool pass = true;
    i64 checked = 0;
    i64 failures = 0;
    std::string first_counterexample;
};
BruhatReport verify_bruhat_partition(i64 p, int m, int prec = -1);

}  // namespace padiclinv
