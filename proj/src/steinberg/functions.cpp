#include "padiclinv/steinberg.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace padiclinv {

namespace {

// precision used for cell coordinates of exact lifts
int coord_prec(i64 p) { return std::min(max_precision(p), 24); }

bool zero_mod(const Padic& d, int s)
{
    if (d.is_zero()) {
        if (d.abs_prec() < s) throw PadicError("precision exhausted");
        return true;
    }
    return d.valuation() >= s;
}

}  // namespace

bool PSet::contains(const Padic& x) const
{
    if (kind == Units) return !x.is_zero() && x.valuation() == 0;
    Padic d = x - Padic::from_int(x.prime(), center, Padic::kInfinitePrec);
    if (d.is_zero()) {
        if (d.abs_prec() < radius) throw PadicError("ambiguous cell");
        return true;
    }
    return d.valuation() >= radius;
}

std::string PSet::name(i64 p) const
{
    if (kind == Units) return "Zp^x";
    std::ostringstream os;
    if (center != 0) os << center << "+";
    if (radius == 0) os << "Zp";
    else if (radius == 1) os << p << "Zp";
    else os << p << "^" << radius << "Zp";
    return os.str();
}

namespace coeff {

CoeffFn one(i64 p)
{
    Padic o = Padic::from_int(p, 1, Padic::kInfinitePrec);
    return {"1", [o](const Padic&) { return o; }};
}

CoeffFn log(i64 p, int s)
{
    (void)p;
    return {"log", [s](const Padic& x) { return log_p(x.with_abs_prec(s + 1)).with_abs_prec(s); }};
}

CoeffFn table(i64 p, int n, std::vector<i64> values)
{
    const i64 q = ipow(p, n);
    if (static_cast<i64>(values.size()) != q) throw PadicError("table size must be p^n");
    return {"table", [p, n, values](const Padic& x) {
                i64 r = x.residue(n);
                return Padic::from_int(p, values[static_cast<std::size_t>(r)], Padic::kInfinitePrec);
            }};
}

CoeffFn iota(const CoeffFn& f)
{
    auto g = f.f;
    return {f.name + "^iota", [g](const Padic& x) { return g(-x); }};
}

}  // namespace coeff

namespace stfn {

SteinbergFunction zero(i64 p)
{
    Padic z = Padic::zero(p, Padic::kInfinitePrec);
    return {"0", Parabolic::B, [z](const Flag&) { return z; }};
}

SteinbergFunction constant(const Padic& c)
{
    return {"const", Parabolic::B, [c](const Flag&) { return c; }};
}

SteinbergFunction phi_cell(i64 p, const PSet& A, const PSet& B, const CoeffFn& f)
{
    Padic z = Padic::zero(p, Padic::kInfinitePrec);
    const int prec = coord_prec(p);
    return {"phi_{" + A.name(p) + "," + B.name(p) + "," + f.name + "}", Parabolic::B,
            [=](const Flag& x) {
                auto c = big_cell(x, p, prec);
                if (!c) return z;
                if (A.contains(c->Y) && B.contains(c->X) && PSet::zp().contains(c->Z)) return f(c->X);
                return z;
            }};
}

SteinbergFunction psi_cell(i64 p, const PSet& A, const PSet& B, const CoeffFn& f)
{
    Padic z = Padic::zero(p, Padic::kInfinitePrec);
    const int prec = coord_prec(p);
    return {"psi_{" + A.name(p) + "," + B.name(p) + "," + f.name + "}", Parabolic::B,
            [=](const Flag& x) {
                auto c = big_cell(x, p, prec);
                if (!c) return z;
                if (A.contains(c->X) && B.contains(c->Y) && PSet::ball(0, 1).contains(c->Z)) return f(c->Y);
                return z;
            }};
}

SteinbergFunction xi_cell(i64 p, const PSet& A, const PSet& B, const CoeffFn& f)
{
    Padic z = Padic::zero(p, Padic::kInfinitePrec);
    const int prec = coord_prec(p);
    return {"xi_{" + A.name(p) + "," + B.name(p) + "," + f.name + "}", Parabolic::P1,
            [=](const Flag& x) {
                if (x.point[0] == 0) return z;
                Padic X = Padic::from_rational(p, x.point[1], x.point[0], prec);
                Padic Y = Padic::from_rational(p, x.point[2], x.point[0], prec);
                if (A.contains(X) && B.contains(Y)) return f(Y);
                return z;
            }};
}

SteinbergFunction phi_iw(i64 p)
{
    auto f = phi_cell(p, PSet::zp(), PSet::zp(), coeff::one(p));
    f.name = "phi_Iw";
    return f;
}

SteinbergFunction xi_n(i64 p, int n)
{
    auto f = phi_cell(p, PSet::ball(0, n), PSet::ball(0, 1), coeff::one(p));
    f.name = "xi_" + std::to_string(n);
    return f;
}

SteinbergFunction phi_n(i64 p, int n)
{
    const Padic z = Padic::zero(p, Padic::kInfinitePrec);
    const Padic o = Padic::from_int(p, 1, Padic::kInfinitePrec);
    const int prec = coord_prec(p);
    return {"phi_" + std::to_string(n), Parabolic::P2, [=](const Flag& x) {
                const auto& nu = x.plane;
                if (nu[2] == 0) return z;
                Padic P = Padic::from_rational(p, nu[0], nu[2], prec);
                Padic Q = Padic::from_rational(p, nu[1], nu[2], prec);
                return PSet::ball(0, n).contains(P) && PSet::zp().contains(Q) ? o : z;
            }};
}

SteinbergFunction c1(const Homomorphism& lambda, const IntMat& xm, int prec, const std::string& name)
{
    const i64 p = lambda.a.prime();
    const Mat3 x = intmats::to_mat3(xm, p, prec);
    return {name, Parabolic::P1, [=](const Flag& f) {
                Mat3 g = complete_row(p, f.point, prec);
                return cocycle_value({1, lambda, x}, g);
            }};
}

}  // namespace stfn

SteinbergFunction iw_cell_indicator(i64 p, int i, int j)
{
    const Padic z = Padic::zero(p, Padic::kInfinitePrec);
    const Padic o = Padic::from_int(p, 1, Padic::kInfinitePrec);
    return {"cell(" + std::to_string(i) + "," + std::to_string(j) + ")", Parabolic::B,
            [=](const Flag& f) { return iw_cell(f, p) == std::make_pair(i, j) ? o : z; }};
}

SteinbergFunction translate(const SteinbergFunction& f, const IntMat& g)
{
    auto e = f.eval;
    return {"g." + f.name, f.parabolic, [e, g](const Flag& x) { return e(act(x, g)); }};
}

SteinbergFunction translate(const SteinbergFunction& f, const Mat3& g, int prec)
{
    return translate(f, intmats::from_mat3(g, prec));
}

SteinbergFunction operator+(const SteinbergFunction& a, const SteinbergFunction& b)
{
    auto ea = a.eval, eb = b.eval;
    Parabolic par = a.parabolic == b.parabolic ? a.parabolic : Parabolic::B;
    return {a.name + "+" + b.name, par, [ea, eb](const Flag& x) { return ea(x) + eb(x); }};
}

SteinbergFunction operator-(const SteinbergFunction& a, const SteinbergFunction& b)
{
    auto ea = a.eval, eb = b.eval;
    Parabolic par = a.parabolic == b.parabolic ? a.parabolic : Parabolic::B;
    return {a.name + "-" + b.name, par, [ea, eb](const Flag& x) { return ea(x) - eb(x); }};
}

SteinbergFunction scale(const Padic& c, const SteinbergFunction& f)
{
    auto e = f.eval;
    return {"c*" + f.name, f.parabolic, [c, e](const Flag& x) { return c * e(x); }};
}

SteinbergFunction sum(const std::vector<SteinbergFunction>& fs, const std::string& name)
{
    if (fs.empty()) throw PadicError("empty sum");
    std::vector<std::function<Padic(const Flag&)>> es;
    for (const auto& f : fs) es.push_back(f.eval);
    return {name, fs[0].parabolic, [es](const Flag& x) {
                Padic s = es[0](x);
                for (std::size_t i = 1; i < es.size(); ++i) s += es[i](x);
                return s;
            }};
}

SteinbergFunction pr_multiply(const SteinbergFunction& f1, const SteinbergFunction& f2)
{
    if (f1.parabolic != Parabolic::P1 || f2.parabolic != Parabolic::P2)
        throw PadicError("pr expects a P1-function and a P2-function");
    auto a = f1.eval, b = f2.eval;
    return {"pr(" + f1.name + "," + f2.name + ")", Parabolic::B,
            [a, b](const Flag& x) { return a(x) * b(x); }};
}

SteinbergFunction hecke_up1(const SteinbergFunction& f, i64 p)
{
    std::vector<SteinbergFunction> parts;
    for (i64 j = 0; j < p; ++j)
        for (i64 k = 0; k < p; ++k) parts.push_back(translate(f, intmats::mul(intmats::n(j, k, 0), intmats::t(p))));
    return sum(parts, "U_p1(" + f.name + ")");
}

bool in_iwahori(const IntMat& g, i64 p)
{
    if (mod_floor(intmats::det(g), p) == 0) return false;
    return mod_floor(g[3], p) == 0 && mod_floor(g[6], p) == 0 && mod_floor(g[7], p) == 0;
}

std::vector<IntMat> up1_squared_cosets(i64 p)
{
    const i64 q = p * p;
    const IntMat tt = intmats::power(intmats::t(p), 2);
    std::vector<IntMat> reps;
    for (i64 x = 0; x < q; ++x)
        for (i64 y = 0; y < q; ++y)
            for (i64 z = 0; z < q; ++z) {
                IntMat g = intmats::mul(intmats::n(x, y, z), tt);
                bool found = false;
                for (const auto& h : reps) {
                    // h^{-1} g = adj(h) g / det h, det h = p^2
                    IntMat r = intmats::mul(intmats::adj(h), g);
                    bool integral = true;
                    for (auto& e : r) {
                        if (e % q != 0) { integral = false; break; }
                        e /= q;
                    }
                    if (integral && in_iwahori(r, p)) { found = true; break; }
                }
                if (!found) reps.push_back(g);
            }
    return reps;
}

Comparison compare_pointwise(const SteinbergFunction& f, const SteinbergFunction& g,
                             const std::vector<Flag>& flags, int s)
{
    Comparison c;
    for (const auto& x : flags) {
        ++c.checked;
        Padic a = f(x), b = g(x);
        if (!zero_mod(a - b, s)) {
            ++c.failures;
            if (c.pass) c.first_counterexample = flag_to_string(x) + ": " + a.to_string() + " vs " + b.to_string();
            c.pass = false;
        }
    }
    return c;
}

StEquality st_equal(const SteinbergFunction& f, const SteinbergFunction& g, i64 p, int m, int s)
{
    StEquality r;
    const i64 q = ipow(p, s);
    auto flags = enumerate_flags(p, m);
    r.flags = static_cast<i64>(flags.size());
    // nodes: points then planes, by canonical class mod p^m
    std::map<std::array<i64, 3>, int> pts, pls;
    std::vector<int> parent;
    std::vector<i64> pot;   // value(node) = value(root) + pot
    auto node = [&](std::map<std::array<i64, 3>, int>& mp, const std::array<i64, 3>& key) {
        auto it = mp.find(key);
        if (it != mp.end()) return it->second;
        int id = static_cast<int>(parent.size());
        parent.push_back(id);
        pot.push_back(0);
        mp.emplace(key, id);
        return id;
    };
    std::function<std::pair<int, i64>(int)> find = [&](int x) -> std::pair<int, i64> {
        if (parent[x] == x) return {x, 0};
        auto [root, pp] = find(parent[x]);
        pot[x] = (pot[x] + pp) % q;
        parent[x] = root;
        return {root, pot[x]};
    };
    std::map<std::array<i64, 3>, i64> point_value;
    bool point_only = true;
    for (const auto& x : flags) {
        Padic d = f(x) - g(x);
        if (!d.is_zero() && d.valuation() < 0) throw PadicError("non-integral values in St comparison");
        i64 dv = d.residue(s);
        auto c = canonical_mod(x, p, m);
        auto [itv, fresh] = point_value.emplace(c.point, dv);
        if (!fresh && itv->second != dv) point_only = false;
        // value(point) - value(plane) = D
        int a = node(pts, c.point), b = node(pls, c.plane);
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            pot[ra] = mod_floor(dv - pa + pb, q);
        } else if (mod_floor(pa - pb - dv, q) != 0) {
            ++r.inconsistent_cycles;
            if (r.pass) r.first_counterexample = flag_to_string(x);
            r.pass = false;
        }
    }
    r.depends_on_point_only = point_only;
    return r;
}

Comparison lift_independence(const SteinbergFunction& f, i64 p, int m, int s, int lifts,
                             std::uint64_t seed, i64 max_flags)
{
    std::mt19937_64 rng(seed);
    auto flags = enumerate_flags(p, m);
    if (max_flags >= 0 && static_cast<i64>(flags.size()) > max_flags) {
        std::shuffle(flags.begin(), flags.end(), rng);
        flags.resize(static_cast<std::size_t>(max_flags));
    }
    const i64 q = ipow(p, m);
    std::uniform_int_distribution<i64> d(0, p * p - 1);
    Comparison c;
    for (const auto& x : flags) {
        Padic base = f(x);
        for (int l = 0; l < lifts; ++l) {
            IntMat k = intmats::identity();
            for (auto& e : k) e += q * d(rng);
            if (mod_floor(intmats::det(k), p) == 0) continue;
            Flag y = act(x, k);
            ++c.checked;
            if (!zero_mod(f(y) - base, s)) {
                ++c.failures;
                if (c.pass) c.first_counterexample = flag_to_string(x) + " vs lift " + flag_to_string(y);
                c.pass = false;
            }
        }
    }
    return c;
}

}  // namespace padiclinv
