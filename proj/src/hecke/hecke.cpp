#include "padiclinv/hecke.hpp"

#include <sstream>

namespace padiclinv {

namespace {

void check_layout(int nvars)
{
    if (nvars < LaurentPoly::kFirst) throw std::invalid_argument("Laurent ring needs X, ell, q");
}

}  // namespace

void LaurentPoly::add_term(Exps e, const BigInt& c)
{
    if (c == 0) return;
    // q^2 -> ell
    int qe = e[kQ];
    int carry = qe >= 0 ? qe / 2 : -((-qe + 1) / 2);
    e[kQ] = qe - 2 * carry;
    e[kEll] += carry;
    for (int x : e)
        if (x > kMaxExp || x < -kMaxExp) throw std::overflow_error("exponent bound exceeded");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::constant(int nvars, const BigInt& c)
{
    return monomial(nvars, Exps(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPoly LaurentPoly::monomial(int nvars, Exps e, const BigInt& c)
{
    check_layout(nvars);
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length");
    LaurentPoly r(nvars);
    r.add_term(std::move(e), c);
    return r;
}

LaurentPoly LaurentPoly::var(int nvars, int index, int power)
{
    Exps e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = power;
    return monomial(nvars, e);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    if (nvars_ != o.nvars_) throw std::invalid_argument("ring mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    if (nvars_ != o.nvars_) throw std::invalid_argument("ring mismatch");
    LaurentPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(std::move(e), c1 * c2);
        }
    return r;
}

LaurentPoly LaurentPoly::inverse_monomial() const
{
    if (!is_monomial()) throw std::domain_error("only monomials are invertible");
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1) throw std::domain_error("coefficient not a unit");
    // q^{-1} = q ell^{-1} is handled by the rewrite
    Exps inv(e);
    for (auto& x : inv) x = -x;
    return monomial(nvars_, inv, c);
}

LaurentPoly LaurentPoly::pow(int k) const
{
    if (k < 0) return inverse_monomial().pow(-k);
    LaurentPoly r = constant(nvars_, 1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(int index, const LaurentPoly& image) const
{
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exps rest(e);
        const int k = rest[static_cast<std::size_t>(index)];
        rest[static_cast<std::size_t>(index)] = 0;
        r = r + monomial(nvars_, rest, c) * image.pow(k);
    }
    return r;
}

LaurentPoly LaurentPoly::coefficient_X(int d) const
{
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[kX] == d) {
            Exps f(e);
            f[kX] = 0;
            r.add_term(std::move(f), c);
        }
    return r;
}

int LaurentPoly::max_degree_X() const
{
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[kX]);
    return d;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
        os << c;
        bool first = true;
        for (int i = kFirst; i < nvars_; ++i)
            if (e[static_cast<std::size_t>(i)] != 0) {
                os << (first ? " * " : " ") << names[static_cast<std::size_t>(i)] << "^" << e[static_cast<std::size_t>(i)];
                first = false;
            }
        for (int i : {kEll, kQ, kX})
            if (e[static_cast<std::size_t>(i)] != 0) {
                os << (first ? " * " : " ") << names[static_cast<std::size_t>(i)] << "^" << e[static_cast<std::size_t>(i)];
                first = false;
            }
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> satake_var_names(int k, const std::string& prefix)
{
    std::vector<std::string> v{"X", "l", "q"};
    for (int i = 1; i <= k; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

LaurentPoly elementary_symmetric(const std::vector<LaurentPoly>& xs, int i)
{
    if (xs.empty()) throw std::invalid_argument("empty parameter list needs a ring");
    const int nv = xs.front().nvars();
    // e[k] after processing a prefix
    std::vector<LaurentPoly> e(static_cast<std::size_t>(i + 1), LaurentPoly(nv));
    e[0] = LaurentPoly::constant(nv, 1);
    for (const auto& x : xs)
        for (int k = i; k >= 1; --k) e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k - 1)] * x;
    return e[static_cast<std::size_t>(i)];
}

LaurentPoly dilate_X(const LaurentPoly& f, const LaurentPoly& c)
{
    LaurentPoly r(f.nvars());
    const auto X = LaurentPoly::var(f.nvars(), LaurentPoly::kX);
    for (int d = 0; d <= f.max_degree_X(); ++d) r = r + f.coefficient_X(d) * c.pow(d) * X.pow(d);
    return r;
}

LaurentPoly char_poly(const std::vector<LaurentPoly>& params, int nvars)
{
    LaurentPoly r = LaurentPoly::constant(nvars, 1);
    const auto X = LaurentPoly::var(nvars, LaurentPoly::kX);
    for (int i = 1; i <= static_cast<int>(params.size()); ++i)
        r = r + LaurentPoly::constant(nvars, i % 2 ? -1 : 1) * elementary_symmetric(params, i) * X.pow(i);
    return r;
}

namespace {

std::vector<LaurentPoly> alphas(int nvars, int first, int n)
{
    // alpha_j = q^{-(n-1)} beta_j
    std::vector<LaurentPoly> a;
    const auto qs = LaurentPoly::var(nvars, LaurentPoly::kQ, -(n - 1));
    for (int j = 0; j < n; ++j) a.push_back(qs * LaurentPoly::var(nvars, LaurentPoly::kFirst + first + j));
    return a;
}

}  // namespace

LaurentPoly hecke_H(int nvars, int first, int n)
{
    if (n == 0) return LaurentPoly::constant(nvars, 1);
    auto a = alphas(nvars, first, n);
    const auto X = LaurentPoly::var(nvars, LaurentPoly::kX);
    LaurentPoly r = LaurentPoly::constant(nvars, 1);
    for (int i = 1; i <= n; ++i) {
        LaurentPoly T = elementary_symmetric(a, i);
        r = r + LaurentPoly::constant(nvars, i % 2 ? -1 : 1) * LaurentPoly::var(nvars, LaurentPoly::kQ, i * (n - 1)) * T * X.pow(i);
    }
    return r;
}

LaurentPoly hecke_H_dual(int nvars, int first, int n)
{
    if (n == 0) return LaurentPoly::constant(nvars, 1);
    auto a = alphas(nvars, first, n);
    const auto X = LaurentPoly::var(nvars, LaurentPoly::kX);
    LaurentPoly Tn_inv = elementary_symmetric(a, n).inverse_monomial();
    LaurentPoly r = LaurentPoly::constant(nvars, 1);
    for (int i = 1; i <= n; ++i) {
        LaurentPoly T = Tn_inv * elementary_symmetric(a, n - i);
        r = r + LaurentPoly::constant(nvars, i % 2 ? -1 : 1) * LaurentPoly::var(nvars, LaurentPoly::kQ, -i * (n - 1)) * T * X.pow(i);
    }
    return r;
}

LaurentPoly hecke_Htilde(int nvars, int first, int n)
{
    std::vector<LaurentPoly> params;
    for (int j = 0; j < n; ++j) params.push_back(LaurentPoly::var(nvars, LaurentPoly::kFirst + first + j));
    params.push_back(LaurentPoly::constant(nvars, 1));
    for (int j = n - 1; j >= 0; --j) params.push_back(LaurentPoly::var(nvars, LaurentPoly::kFirst + first + j, -1));
    return char_poly(params, nvars);
}

namespace {

SatakeReport compare(const LaurentPoly& lhs, const LaurentPoly& rhs, int degree)
{
    SatakeReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    const int top = std::max({degree, lhs.max_degree_X(), rhs.max_degree_X()});
    for (int d = 0; d <= top; ++d) {
        ++rep.coefficients;
        if (!(lhs.coefficient_X(d) == rhs.coefficient_X(d))) {
            rep.pass = false;
            rep.mismatched_degrees.push_back(d);
        }
    }
    return rep;
}

}  // namespace

SatakeReport satake_identity_check(int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int nv = LaurentPoly::kFirst + n;
    const auto ell = LaurentPoly::var(nv, LaurentPoly::kEll);
    // unnormalised Satake on parameters: u_i -> ell beta_i
    LaurentPoly lhs = hecke_Htilde(nv, 0, n);
    for (int i = 0; i < n; ++i)
        lhs = lhs.substitute(LaurentPoly::kFirst + i, ell * LaurentPoly::var(nv, LaurentPoly::kFirst + i));
    const auto X = LaurentPoly::var(nv, LaurentPoly::kX);
    LaurentPoly rhs = (LaurentPoly::constant(nv, 1) - X) * dilate_X(hecke_H(nv, 0, n), ell)
                      * dilate_X(hecke_H_dual(nv, 0, n), ell.inverse_monomial());
    return compare(lhs, rhs, 2 * n + 1);
}

SatakeReport parabolic_satake_check(int n, const std::vector<int>& partition)
{
    int j = 0;
    for (int x : partition) {
        if (x < 1) throw std::invalid_argument("partition parts must be positive");
        j += x;
    }
    if (j > n || n < 0) throw std::invalid_argument("partition exceeds n");
    const int nv = LaurentPoly::kFirst + n;
    const auto ell = LaurentPoly::var(nv, LaurentPoly::kEll);

    // the first j parameters split into GL blocks, the last n - j stay in GSp_{2(n-j)}
    LaurentPoly lhs = hecke_Htilde(nv, 0, n);
    LaurentPoly rhs = hecke_Htilde(nv, j, n - j);
    int used = 0;
    for (int ji : partition) {
        const int shift = n + 1 - (used + ji);
        for (int k = 0; k < ji; ++k) {
            const int idx = LaurentPoly::kFirst + used + k;
            lhs = lhs.substitute(idx, ell.pow(shift) * LaurentPoly::var(nv, idx));
        }
        rhs = rhs * dilate_X(hecke_H(nv, used, ji), ell.pow(shift)) * dilate_X(hecke_H_dual(nv, used, ji), ell.pow(-shift));
        used += ji;
    }
    return compare(lhs, rhs, 2 * n + 1);
}

// ---- universal characters ----

namespace {

void bump(std::map<int, int>& m, int k, int e)
{
    if (k == 0 || e == 0) return;   // U_0 and <u>_0 are 1
    m[k] += e;
    if (m[k] == 0) m.erase(k);
}

}  // namespace

bool UniversalCharacter::is_trivial() const
{
    return omega_p == 0 && U.empty() && omega_u == 0 && u_power == 0 && diamond.empty();
}

bool UniversalCharacter::operator==(const UniversalCharacter& o) const
{
    return tilde == o.tilde && omega_p == o.omega_p && U == o.U && omega_u == o.omega_u && u_power == o.u_power
           && diamond == o.diamond;
}

std::string UniversalCharacter::to_string() const
{
    std::ostringstream os;
    const char* Un = tilde ? "U~" : "U";
    os << label << ": Art(p) -> w^" << omega_p;
    for (auto [t, e] : U) os << " " << Un << "_" << t << "^" << e;
    os << "; Art(u) -> w^" << omega_u << " u^" << u_power;
    for (auto [t, e] : diamond) os << " <u>_" << t << "^" << e;
    return os.str();
}

UniversalCharacter operator*(const UniversalCharacter& a, const UniversalCharacter& b)
{
    if (a.tilde != b.tilde) throw std::invalid_argument("characters of different Hecke algebras");
    UniversalCharacter r = a;
    r.label = a.label + "*" + b.label;
    r.omega_p += b.omega_p;
    r.omega_u += b.omega_u;
    r.u_power += b.u_power;
    for (auto [t, e] : b.U) bump(r.U, t, e);
    for (auto [t, e] : b.diamond) bump(r.diamond, t, e);
    return r;
}

UniversalCharacter inverse(const UniversalCharacter& c)
{
    UniversalCharacter r = c;
    r.label = c.label + "^-1";
    r.omega_p = -c.omega_p;
    r.omega_u = -c.omega_u;
    r.u_power = -c.u_power;
    for (auto& [t, e] : r.U) e = -e;
    for (auto& [t, e] : r.diamond) e = -e;
    return r;
}

UniversalCharacter twist_omega(const UniversalCharacter& c, int k)
{
    UniversalCharacter r = c;
    r.omega_p += k;
    r.omega_u += k;
    return r;
}

std::vector<UniversalCharacter> psi_characters(const Weight& l)
{
    const int n = static_cast<int>(l.lam.size());
    auto lam = [&](int i) { return l.lam[static_cast<std::size_t>(i - 1)]; };
    // (w0^M lambda)_k = lambda_{n+1-k}
    auto wl = [&](int k) { return lam(n + 1 - k); };
    std::vector<UniversalCharacter> out;
    for (int i = 1; i <= 2 * n + 1; ++i) {
        UniversalCharacter c;
        c.label = "psi_" + std::to_string(i);
        c.tilde = true;
        if (i <= n) {
            c.omega_p = c.omega_u = n + 1 - i;
            c.u_power = wl(n + 1 - i);
            bump(c.diamond, n + 1 - i, -1);
            bump(c.U, n - i, 1);
            bump(c.U, n + 1 - i, -1);
        } else if (i >= n + 2) {
            c.omega_p = c.omega_u = n + 1 - i;
            c.u_power = -wl(i - (n + 1));
            bump(c.diamond, i - (n + 1), 1);
            bump(c.U, i - (n + 1), 1);
            bump(c.U, i - (n + 2), -1);
        }
        out.push_back(c);
    }
    return out;
}

std::vector<UniversalCharacter> chi_characters(const std::vector<i64>& lam)
{
    const int n = static_cast<int>(lam.size());
    std::vector<UniversalCharacter> out;
    for (int i = 1; i <= n; ++i) {
        UniversalCharacter c;
        c.label = "chi_" + std::to_string(i);
        c.omega_p = c.omega_u = 1 - i;
        c.u_power = -lam[static_cast<std::size_t>(n - i)];   // -(w0 lambda)_i
        bump(c.diamond, i, 1);
        bump(c.U, i, 1);
        bump(c.U, i - 1, -1);
        out.push_back(c);
    }
    return out;
}

std::vector<UniversalCharacter> zeta_list(const std::vector<i64>& lam)
{
    auto chi = chi_characters(lam);
    std::vector<UniversalCharacter> z;
    for (const auto& c : chi) z.push_back(twist_omega(c, -1));
    for (auto it = chi.rbegin(); it != chi.rend(); ++it) z.push_back(twist_omega(inverse(*it), 1));
    for (std::size_t i = 0; i < z.size(); ++i) z[i].label = "zeta_" + std::to_string(i + 1);
    return z;
}

std::vector<UniversalCharacter> reindex(const WeylElement& w, const std::vector<UniversalCharacter>& zetas)
{
    if (!in_MW(w)) throw WeylError("w is not in ^MW");
    if (static_cast<int>(zetas.size()) != 2 * w.n) throw WeylError("expected 2n characters");
    std::vector<UniversalCharacter> r;
    for (int i = 1; i <= 2 * w.n; ++i) r.push_back(zetas[static_cast<std::size_t>(w(i) - 1)]);
    return r;
}

}  // namespace padiclinv
