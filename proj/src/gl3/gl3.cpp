#include "padiclinv/gl3.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace padiclinv {

Mat3 Mat3::identity(i64 p, int prec)
{
    return from_ints(p, {1, 0, 0, 0, 1, 0, 0, 0, 1}, prec);
}

Mat3 Mat3::from_ints(i64 p, const std::array<i64, 9>& v, int prec)
{
    std::array<Padic, 9> e;
    for (int i = 0; i < 9; ++i) e[i] = Padic::from_int(p, v[i], prec);
    return Mat3(e);
}

Mat3 Mat3::from_strings(i64 p, const std::vector<std::string>& v, int prec)
{
    if (v.size() != 9) throw PadicError("matrix needs 9 entries");
    std::array<Padic, 9> e;
    for (int i = 0; i < 9; ++i) e[i] = Padic::from_string(p, v[i], prec);
    return Mat3(e);
}

Mat3 Mat3::diag(const Padic& a, const Padic& b, const Padic& c)
{
    Padic z = a.zero_like();
    return Mat3({a, z, z, z, b, z, z, z, c});
}

Mat3 Mat3::operator*(const Mat3& o) const
{
    std::array<Padic, 9> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[3 * i + j] = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
    return Mat3(r);
}

Mat3 Mat3::operator-(const Mat3& o) const
{
    std::array<Padic, 9> r;
    for (int i = 0; i < 9; ++i) r[i] = e_[i] - o.e_[i];
    return Mat3(r);
}

Padic Mat3::det() const
{
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 Mat3::adjugate() const
{
    const Mat3& m = *this;
    auto cof = [&](int r, int c) {
        int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
        return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    };
    std::array<Padic, 9> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[3 * i + j] = cof(j, i);
    return Mat3(r);
}

Mat3 Mat3::inverse() const
{
    Padic d = det();
    if (d.is_zero()) throw PadicError("matrix not invertible at this precision");
    Mat3 a = adjugate();
    Padic di = d.inverse();
    for (auto& x : a.e_) x = x * di;
    return a;
}

Mat3 Mat3::transpose() const
{
    std::array<Padic, 9> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[3 * i + j] = (*this)(j, i);
    return Mat3(r);
}

int Mat3::abs_prec() const
{
    int a = Padic::kInfinitePrec;
    for (const auto& x : e_) a = std::min(a, x.abs_prec());
    return a;
}

bool Mat3::equals(const Mat3& o) const
{
    for (int i = 0; i < 9; ++i)
        if (!e_[i].equals(o.e_[i])) return false;
    return true;
}

std::string Mat3::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace mats {

Mat3 t(i64 p, int prec) { return Mat3::from_ints(p, {p, 0, 0, 0, 1, 0, 0, 0, 1}, prec); }
Mat3 t2(i64 p, int prec) { return Mat3::from_ints(p, {p, 0, 0, 0, p, 0, 0, 0, 1}, prec); }
Mat3 u0(i64 p, int prec) { return Mat3::from_ints(p, {1, 0, 0, 0, 0, -1, 0, 1, 0}, prec); }
// n13(1) * u0
Mat3 u(i64 p, int prec) { return Mat3::from_ints(p, {1, 1, 0, 0, 0, -1, 0, 1, 0}, prec); }
Mat3 w0(i64 p, int prec) { return Mat3::from_ints(p, {0, 0, 1, 0, 1, 0, 1, 0, 0}, prec); }

Mat3 n1(const Padic& x, const Padic& y)
{
    Padic o = x.one_like(), z = x.zero_like();
    return Mat3({o, x, y, z, o, z, z, z, o});
}

Mat3 weyl_rep(int pivot, i64 p, int prec)
{
    switch (pivot) {
    case 0: return Mat3::identity(p, prec);
    case 1: return Mat3::from_ints(p, {0, 1, 0, 1, 0, 0, 0, 0, 1}, prec);
    case 2: return Mat3::from_ints(p, {0, 0, 1, 1, 0, 0, 0, 1, 0}, prec);
    }
    throw PadicError("bad pivot");
}

}  // namespace mats

std::string case_label(BruhatCase c)
{
    switch (c) {
    case BruhatCase::A1: return "a-1";
    case BruhatCase::A2: return "a-2";
    case BruhatCase::A3: return "a-3";
    case BruhatCase::B1: return "b-1";
    case BruhatCase::B2: return "b-2";
    case BruhatCase::C: return "c";
    }
    return "?";
}

int pivot_index(const std::array<Padic, 3>& row)
{
    int m = Padic::kInfinitePrec, j = -1;
    for (int i = 0; i < 3; ++i)
        if (!row[i].is_zero() && row[i].valuation() < m) {
            m = row[i].valuation();
            j = i;
        }
    if (j < 0) throw PadicError("ambiguous cell");
    // entries read as zero must be certainly of larger valuation (before the
    // pivot) or at least as large (after it)
    for (int i = 0; i < 3; ++i) {
        if (!row[i].is_zero()) continue;
        int a = row[i].abs_prec();
        if (i < j ? a <= m : a < m) throw PadicError("ambiguous cell");
    }
    return j;
}

namespace {

std::array<Padic, 3> row_of(const Mat3& g, int r) { return {g(r, 0), g(r, 1), g(r, 2)}; }

// index of the last coordinate of minimal valuation
int last_pivot(const std::array<Padic, 3>& row)
{
    int m = Padic::kInfinitePrec, j = -1;
    for (int i = 0; i < 3; ++i)
        if (!row[i].is_zero() && row[i].valuation() <= m) {
            m = row[i].valuation();
            j = i;
        }
    if (j < 0) throw PadicError("ambiguous cell");
    return j;
}

Mat3 pbar_for_pivot(const Mat3& g, int j, Mat3* n_out, Mat3* w_out)
{
    const i64 p = g.prime();
    const int ex = max_precision(p);
    auto r = row_of(g, 0);
    Padic piv = r[j];
    Padic x, y;
    if (j == 0) { x = r[1] / piv; y = r[2] / piv; }
    else if (j == 1) { x = r[0] / piv; y = r[2] / piv; }
    else { x = r[0] / piv; y = r[1] / piv; }
    Mat3 n = mats::n1(x, y);
    Mat3 w = mats::weyl_rep(j, p, ex);
    if (n_out) *n_out = n;
    if (w_out) *w_out = w;
    return g * w.inverse() * n.inverse();
}

}  // namespace

BruhatDecomposition decompose(const Mat3& g)
{
    auto r = row_of(g, 0);
    int j = pivot_index(r);
    BruhatDecomposition d;
    d.pivot = j;
    d.pbar = pbar_for_pivot(g, j, &d.n, &d.w);
    d.k = d.w.inverse() * d.n * d.w;
    if (!r[0].is_zero()) {
        d.bruhat_case = j == 0 ? BruhatCase::A1 : j == 1 ? BruhatCase::A2 : BruhatCase::A3;
    } else if (j == 1) {
        d.bruhat_case = BruhatCase::B1;
    } else {
        d.bruhat_case = r[1].is_zero() ? BruhatCase::C : BruhatCase::B2;
    }
    return d;
}

Padic v1(const Mat3& q)
{
    return (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) / q(0, 0);
}

Padic section_v1(const Mat3& g) { return v1(decompose(g).pbar); }

std::array<Padic, 3> plane_normal(const Mat3& g)
{
    return {g(0, 1) * g(1, 2) - g(0, 2) * g(1, 1),
            g(0, 2) * g(1, 0) - g(0, 0) * g(1, 2),
            g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)};
}

P2Decomposition decompose_p2(const Mat3& g)
{
    const i64 p = g.prime();
    const int ex = max_precision(p);
    auto nu = plane_normal(g);
    int j = pivot_index(nu);
    // w has e_j as its last row, the other basis rows in increasing order
    std::array<int, 2> rest{};
    for (int i = 0, c = 0; i < 3; ++i)
        if (i != j) rest[c++] = i;
    std::array<i64, 9> wi{};
    wi[3 * 0 + rest[0]] = 1;
    wi[3 * 1 + rest[1]] = 1;
    wi[3 * 2 + j] = 1;
    Mat3 w = Mat3::from_ints(p, wi, ex);
    Padic x = -(nu[rest[0]] / nu[j]);
    Padic y = -(nu[rest[1]] / nu[j]);
    Padic o = x.one_like(), z = x.zero_like();
    Mat3 U({o, z, x, z, o, y, z, z, o});
    P2Decomposition d;
    d.w = w;
    d.unip = U;
    d.pivot = j;
    d.q = g * (U * w).inverse();
    return d;
}

Padic v2(const Mat3& q)
{
    return q(2, 2) / (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0));
}

Padic section_v2(const Mat3& g) { return v2(decompose_p2(g).q); }

Mat3 theta(const Mat3& g) { return g.inverse().transpose(); }

std::array<Padic, 3> theta_point(const Mat3& g)
{
    Mat3 h = mats::w0(g.prime(), max_precision(g.prime())) * theta(g);
    return row_of(h, 0);
}

Padic cocycle_value(const CocycleSpec& spec, const Mat3& g)
{
    if (spec.index == 1) return spec.lambda(section_v1(g * spec.x)) - spec.lambda(section_v1(g));
    if (spec.index == 2) return spec.lambda(section_v2(g * spec.x)) - spec.lambda(section_v2(g));
    throw PadicError("cocycle index must be 1 or 2");
}

Padic cocycle2_via_theta(const Homomorphism& lambda, const Mat3& x, const Mat3& g)
{
    Mat3 h = mats::w0(g.prime(), max_precision(g.prime())) * theta(g);
    return cocycle_value({1, lambda, theta(x)}, h);
}

Padic section_difference(const Homomorphism& lambda, const Mat3& g)
{
    int j = last_pivot(row_of(g, 0));
    Mat3 alt = pbar_for_pivot(g, j, nullptr, nullptr);
    return lambda(v1(alt)) - lambda(section_v1(g));
}

Mat3 complete_row(i64 p, const std::array<i64, 3>& row, int prec)
{
    int i0 = -1;
    for (int i = 0; i < 3; ++i)
        if (mod_floor(row[i], p) != 0) { i0 = i; break; }
    if (i0 < 0) throw PadicError("row is not primitive");
    std::array<i64, 9> v{};
    for (int j = 0; j < 3; ++j) v[j] = row[j];
    int r = 1;
    for (int j = 0; j < 3; ++j)
        if (j != i0) v[3 * (r++) + j] = 1;
    return Mat3::from_ints(p, v, prec);
}

std::vector<std::array<i64, 3>> projective_points(i64 p, int m)
{
    const i64 q = ipow(p, m);
    std::vector<std::array<i64, 3>> out;
    for (i64 b = 0; b < q; ++b)
        for (i64 c = 0; c < q; ++c) out.push_back({1, b, c});
    for (i64 a = 0; a < q; a += p)
        for (i64 c = 0; c < q; ++c) out.push_back({a, 1, c});
    for (i64 a = 0; a < q; a += p)
        for (i64 b = 0; b < q; b += p) out.push_back({a, b, 1});
    return out;
}

CocycleTableReport verify_cocycle_table(const Homomorphism& lambda, i64 p, int m, int prec)
{
    if (m < 1) throw PadicError("level must be positive");
    if (prec < 0) prec = m + 4;
    CocycleTableReport rep;
    const Mat3 t = mats::t(p, prec);
    const Padic lp = lambda(Padic::from_int(p, p, prec));
    std::set<std::string> seen;
    for (const auto& pt : projective_points(p, m)) {
        Mat3 g = complete_row(p, pt, prec);
        Padic F = cocycle_value({1, lambda, t}, g) - lp;
        Padic expected = Padic::zero(p, Padic::kInfinitePrec);
        bool cell = pt[0] == 1;
        if (cell) {
            Padic x = Padic::from_int(p, pt[1], prec);
            Padic y = Padic::from_int(p, pt[2], prec);
            if (pt[1] % p != 0) expected = -2 * lambda(x);
            else if (pt[2] % p != 0) expected = -2 * lambda(y);
            else expected = -2 * lp;
            ++rep.on_cell;
        }
        ++rep.checked;
        bool ok = F.equals(expected) && std::min(F.abs_prec(), expected.abs_prec()) >= m;
        if (cell) seen.insert(F.to_string());
        if (!ok) {
            rep.pass = false;
            if (rep.counterexamples.size() < 20)
                rep.counterexamples.push_back({pt, expected.to_string(), F.to_string()});
        }
    }
    rep.on_cell_values.assign(seen.begin(), seen.end());
    return rep;
}

namespace {

int vint(i64 p, i64 n) { return n == 0 ? 1 << 20 : ord_int(p, n); }

// the case conditions on an exact first row
std::vector<BruhatCase> firing_cases(i64 p, i64 a, i64 b, i64 c)
{
    int va = vint(p, a), vb = vint(p, b), vc = vint(p, c);
    std::vector<BruhatCase> r;
    if (a != 0 && vb >= va && vc >= va) r.push_back(BruhatCase::A1);
    if (a != 0 && vb < va && vb <= vc) r.push_back(BruhatCase::A2);
    if (a != 0 && vc < va && vc < vb) r.push_back(BruhatCase::A3);
    if (a == 0 && b != 0 && vb <= vc) r.push_back(BruhatCase::B1);
    if (a == 0 && b != 0 && vc < vb) r.push_back(BruhatCase::B2);
    if (a == 0 && b == 0) r.push_back(BruhatCase::C);
    return r;
}

bool lower_p1bar(const Mat3& q) { return q(0, 1).is_zero() && q(0, 2).is_zero(); }

bool iwahori(const Mat3& k)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Padic& x = k(i, j);
            if (!x.is_zero() && x.valuation() < (i > j ? 1 : 0)) return false;
        }
    for (int i = 0; i < 3; ++i)
        if (!k(i, i).is_unit()) return false;
    return true;
}

}  // namespace

BruhatReport verify_bruhat_partition(i64 p, int m, int prec)
{
    const int N = prec < 0 ? m + 4 : prec;
    BruhatReport rep;
    auto fail = [&](const std::array<i64, 3>& pt, int s, const std::string& what) {
        ++rep.failures;
        rep.pass = false;
        if (rep.first_counterexample.empty())
            rep.first_counterexample = "[" + std::to_string(pt[0]) + ":" + std::to_string(pt[1]) + ":" +
                                       std::to_string(pt[2]) + "] scale p^" + std::to_string(s) + ": " + what;
    };
    for (const auto& pt : projective_points(p, m)) {
        for (int s : {0, -1, 2}) {
            ++rep.checked;
            Mat3 g = complete_row(p, pt, N);
            Padic sc = Padic::from_parts(p, s, 2, N);
            for (int j = 0; j < 3; ++j) g(0, j) = g(0, j) * sc;
            auto fc = firing_cases(p, pt[0], pt[1], pt[2]);
            if (fc.size() != 1) {
                fail(pt, s, std::to_string(fc.size()) + " cases fire");
                continue;
            }
            BruhatDecomposition d;
            try {
                d = decompose(g);
            } catch (const std::exception& e) {
                fail(pt, s, e.what());
                continue;
            }
            if (d.bruhat_case != fc[0]) {
                fail(pt, s, "decompose chose " + case_label(d.bruhat_case) + ", expected " + case_label(fc[0]));
                continue;
            }
            Mat3 diff = d.pbar * d.w * d.k - g;
            bool ok = lower_p1bar(d.pbar) && iwahori(d.k);
            for (int i = 0; i < 9 && ok; ++i) {
                const Padic& x = diff(i / 3, i % 3);
                ok = x.is_zero() && x.abs_prec() >= N - 1;
            }
            if (!ok) fail(pt, s, "recomposition off");
        }
    }
    return rep;
}

}  // namespace padiclinv
