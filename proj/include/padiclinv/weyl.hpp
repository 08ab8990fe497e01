#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace padiclinv {

using i64 = std::int64_t;

struct WeylError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the Weyl group of GSp_2n, a permutation of {1..2n} (stored 1-based,
// perm[0] unused) with w(i) + w(2n+1-i) = 2n+1.
struct WeylElement {
    int n = 1;
    std::vector<int> perm;

    int operator()(int i) const { return perm[static_cast<std::size_t>(i)]; }
    bool operator==(const WeylElement& o) const { return n == o.n && perm == o.perm; }
    std::string one_line() const;
};

WeylElement weyl_identity(int n);
WeylElement weyl_from_perm(int n, const std::vector<int>& one_line);   // one-line notation, 1-based values
WeylElement compose(const WeylElement& a, const WeylElement& b);       // (ab)(i) = a(b(i))
WeylElement inverse(const WeylElement& w);
WeylElement longest(int n);     // i -> 2n+1-i
WeylElement longest_M(int n);   // longest element of GL_n x GL_1
std::vector<WeylElement> all_elements(int n);

int inversions(const WeylElement& w);
// |Phi+ cap w Phi-| in the C_n root system
int length(const WeylElement& w);
int length_closed_form(const WeylElement& w);   // (inv + #{i <= n : w(i) > n}) / 2
bool in_MW(const WeylElement& w);               // w^{-1}(1) < ... < w^{-1}(n)

// subset of {1..n}, sorted
using Subset = std::vector<int>;
WeylElement w_of_subset(int n, const Subset& B);
Subset complement(int n, const Subset& B);
int subset_length(int n, const Subset& B);   // sum (n+1-b)

struct MWEntry {
    Subset B;
    WeylElement w;
    int length = 0;
};
std::vector<MWEntry> enumerate_MW(int n);

struct Weight {
    std::vector<i64> lam;   // lambda_1 .. lambda_n
    i64 l0 = 0;
    bool operator==(const Weight& o) const { return lam == o.lam && l0 == o.l0; }
    std::string to_string() const;
};

Weight rho(int n);   // (n, ..., 1; 0)
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight dot_action(const WeylElement& w, const Weight& l);    // w . lambda
Weight star_action(const WeylElement& w, const Weight& l);   // w(lambda + rho) - rho
Weight shift(const std::vector<i64>& lam, i64 a);            // lambda(a) = (lam_i + a; 0)

bool is_dominant(const Weight& l);     // l1 >= ... >= ln >= 0
bool is_M_dominant(const Weight& l);   // l1 >= ... >= ln
// gaps l_i - l_{i+1} >= threshold and l_n >= threshold; the default threshold is n
bool is_sufficiently_regular(const Weight& l, int threshold = -1);

struct WeightChoice {
    int j = 0;
    Subset B;            // B_j, and x_j = w_{B_j}
    int y = 0, z = 0;    // parametrization of B_j
    WeylElement x, w;    // w_j = w_{B_j^c}
    i64 a = 0;
    i64 interval_lo = 0, interval_hi = 0;   // the range the candidate is taken from
    bool fallback = false;                  // a found outside the congruence class / interval
    Weight lambda_tilde;
    bool dominant = false, regular = false;
};

struct WeightSelection {
    int n = 2, m = 1;
    i64 p = 3, residue_card = 3;
    i64 C = 0, M = 0;
    std::vector<i64> lambda;
    std::vector<WeightChoice> choices;   // j = 0..d
    bool lambda_trivial_mod = false;     // every lambda_i divisible by #(O/p^m)^x
    bool ok() const;
};

// j = (y+1)(n+1) - (y+1)y/2 - z with 0 <= y < z <= n+1, the smallest y
std::pair<int, int> parametrize(int n, int j);
Subset subset_of_parameters(int n, int y, int z);
WeightSelection choose_weights(int n, int m, i64 p, i64 residue_card);

struct Clash {
    Subset B, C;    // lambda_{w_C} = lambda_{w_B} + (n-1, ..., n-1)
    std::string analysis_case;   // "fewer-complement", "more-complement", "equal-complement"
    std::string broken;          // which inequality of that case failed
};

struct ClashReport {
    bool pass = true;
    int pairs = 0;
    std::vector<Clash> clashes;
};

ClashReport weight_clash_check(const Weight& lt, int n);

struct AvoidanceCertificate {
    i64 q = 0;
    i64 M = 0;
    i64 ord_ell = 0, ord_p = 0;
};

// q prime
i64 multiplicative_order(i64 a, i64 q);
// least odd prime q outside S0 with q coprime to ell p, q != 1 mod p, ell^M < q, p^M < q
AvoidanceCertificate character_avoidance(const std::vector<i64>& S0, i64 p, i64 ell, const std::vector<i64>& orders,
                                         i64 cap = 1000000000000);

}  // namespace padiclinv
