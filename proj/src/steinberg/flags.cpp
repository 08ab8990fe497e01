#include "padiclinv/steinberg.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace padiclinv {

namespace {

i64 checked(i128 x)
{
    if (x > (i128(1) << 62) || x < -(i128(1) << 62)) throw PadicError("integer overflow in flag arithmetic");
    return static_cast<i64>(x);
}

}  // namespace

namespace intmats {

IntMat identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
IntMat diag(i64 a, i64 b, i64 c) { return {a, 0, 0, 0, b, 0, 0, 0, c}; }
IntMat n(i64 x, i64 y, i64 z) { return {1, x, y, 0, 1, z, 0, 0, 1}; }
IntMat t(i64 p) { return diag(p, 1, 1); }
IntMat t2(i64 p) { return diag(p, p, 1); }
IntMat u0() { return {1, 0, 0, 0, 0, -1, 0, 1, 0}; }
IntMat u() { return mul(n(0, 1, 0), u0()); }

IntMat mul(const IntMat& a, const IntMat& b)
{
    IntMat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i128 s = 0;
            for (int k = 0; k < 3; ++k) s += i128(a[3 * i + k]) * b[3 * k + j];
            r[3 * i + j] = checked(s);
        }
    return r;
}

IntMat power(const IntMat& a, int k)
{
    IntMat r = identity();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

IntMat adj(const IntMat& a)
{
    auto e = [&](int i, int j) { return i128(a[3 * i + j]); };
    IntMat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i)
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            r[3 * i + j] = checked(e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0));
        }
    return r;
}

i64 det(const IntMat& a)
{
    IntMat ad = adj(a);
    i128 s = 0;
    for (int k = 0; k < 3; ++k) s += i128(a[k]) * ad[3 * k];
    return checked(s);
}

IntMat from_mat3(const Mat3& g, int prec)
{
    const i64 p = g.prime();
    int shift = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!g(i, j).is_zero()) shift = std::max(shift, -g(i, j).valuation());
    Padic sc = Padic::from_parts(p, shift, 1, max_precision(p));
    IntMat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[3 * i + j] = (g(i, j) * sc).residue(prec);
    return r;
}

Mat3 to_mat3(const IntMat& g, i64 p, int prec) { return Mat3::from_ints(p, g, prec); }

}  // namespace intmats

std::string flag_to_string(const Flag& f)
{
    std::ostringstream os;
    os << "[" << f.point[0] << ":" << f.point[1] << ":" << f.point[2] << "] plane ("
       << f.plane[0] << "," << f.plane[1] << "," << f.plane[2] << ")";
    return os.str();
}

std::array<i64, 3> primitive(std::array<i64, 3> v)
{
    i64 g = std::gcd(std::gcd(v[0], v[1]), v[2]);
    if (g == 0) throw PadicError("zero vector");
    for (auto& x : v) x /= g;
    return v;
}

std::array<i64, 3> cross(const std::array<i64, 3>& a, const std::array<i64, 3>& b)
{
    return {checked(i128(a[1]) * b[2] - i128(a[2]) * b[1]),
            checked(i128(a[2]) * b[0] - i128(a[0]) * b[2]),
            checked(i128(a[0]) * b[1] - i128(a[1]) * b[0])};
}

Flag flag_of(const IntMat& g)
{
    std::array<i64, 3> r1{g[0], g[1], g[2]}, r2{g[3], g[4], g[5]};
    return {primitive(r1), primitive(cross(r1, r2))};
}

Flag standard_flag() { return {{1, 0, 0}, {0, 0, 1}}; }

Flag act(const Flag& f, const IntMat& g)
{
    std::array<i64, 3> x{}, nu{};
    IntMat a = intmats::adj(g);
    for (int j = 0; j < 3; ++j) {
        i128 s = 0, t = 0;
        for (int i = 0; i < 3; ++i) {
            s += i128(f.point[i]) * g[3 * i + j];
            t += i128(a[3 * j + i]) * f.plane[i];
        }
        x[j] = checked(s);
        nu[j] = checked(t);
    }
    return {primitive(x), primitive(nu)};
}

namespace {

std::array<i64, 3> canon_vec(const std::array<i64, 3>& v, i64 p, i64 q)
{
    for (int i = 0; i < 3; ++i)
        if (mod_floor(v[i], p) != 0) {
            i64 inv = invmod(v[i], q);
            return {mulmod(v[0], inv, q), mulmod(v[1], inv, q), mulmod(v[2], inv, q)};
        }
    throw PadicError("vector is not primitive");
}

}  // namespace

Flag canonical_mod(const Flag& f, i64 p, int m)
{
    const i64 q = ipow(p, m);
    return {canon_vec(f.point, p, q), canon_vec(f.plane, p, q)};
}

std::vector<Flag> enumerate_flags(i64 p, int m)
{
    const i64 q = ipow(p, m);
    std::vector<Flag> out;
    for (const auto& pt : projective_points(p, m)) {
        int i0 = pt[0] == 1 ? 0 : pt[1] == 1 ? 1 : 2;
        int j = (i0 + 1) % 3, k = (i0 + 2) % 3;
        std::set<std::array<i64, 3>> seen;
        for (i64 a = 0; a < q; ++a)
            for (i64 b = 0; b < q; ++b) {
                std::array<i64, 3> nu{};
                nu[j] = a;
                nu[k] = b;
                nu[i0] = -(pt[j] * a + pt[k] * b);   // exact incidence
                bool prim = false;
                for (auto x : nu) prim = prim || mod_floor(x, p) != 0;
                if (!prim) continue;
                auto c = canon_vec(nu, p, q);
                if (!seen.insert(c).second) continue;
                // lift of the canonical class with exact incidence
                std::array<i64, 3> lift = c;
                i128 s = i128(pt[j]) * c[j] + i128(pt[k]) * c[k];
                lift[i0] = checked(-s);
                out.push_back({pt, lift});
            }
    }
    return out;
}

i64 flag_count(i64 p, int m) { return ipow(p, 3 * (m - 1)) * (p * p + p + 1) * (p + 1); }

Flag random_flag(i64 p, int depth, std::mt19937_64& rng)
{
    const i64 q = ipow(p, depth);
    std::uniform_int_distribution<i64> d(0, q - 1);
    while (true) {
        IntMat g;
        for (auto& x : g) x = d(rng);
        if (mod_floor(intmats::det(g), p) != 0) return flag_of(g);
    }
}

std::optional<BigCell> big_cell(const Flag& f, i64 p, int prec)
{
    if (f.point[0] == 0 || f.plane[2] == 0) return std::nullopt;
    return BigCell{Padic::from_rational(p, f.point[1], f.point[0], prec),
                   Padic::from_rational(p, f.point[2], f.point[0], prec),
                   Padic::from_rational(p, -f.plane[1], f.plane[2], prec)};
}

std::pair<int, int> iw_cell(const Flag& f, i64 p)
{
    int i = -1, j = -1;
    for (int k = 0; k < 3 && i < 0; ++k)
        if (mod_floor(f.point[k], p) != 0) i = k;
    for (int k = 2; k >= 0 && j < 0; --k)
        if (mod_floor(f.plane[k], p) != 0) j = k;
    return {i, j};
}

}  // namespace padiclinv
