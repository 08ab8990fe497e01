#include "padiclinv/linvariant.hpp"

namespace padiclinv {

DualP dual_unit_pow(const DualP& base, const Padic& y)
{
    if (!(base.base - base.base.one_like()).is_zero()) throw PadicError("base must be 1 mod eps");
    // log(1 + t eps) = t eps and exp(s eps) = 1 + s eps
    return {base.base.one_like(), y * base.eps};
}

DualP kappa_eps(int i, const std::array<Padic, 2>& v, const Padic& x)
{
    if (!x.is_unit()) throw PadicError("kappa is defined on units");
    const Padic lx = log_p(x);
    if (i == 1 || i == 2) {
        const Padic& vi = v[static_cast<std::size_t>(i - 1)];
        return dual_unit_pow(DualP{vi.one_like(), vi}, lx);
    }
    if (i == 3) return (kappa_eps(1, v, x) * kappa_eps(2, v, x)).inverse();
    throw PadicError("index must be 1, 2 or 3");
}

DualP DeltaChar::operator()(const Padic& x) const
{
    const int k = x.valuation();
    Padic u = x * Padic::from_int(x.prime(), x.prime(), Padic::kInfinitePrec).pow(-k);
    DualP ku{u.one_like(), unit * log_p(u)};
    return at_p.pow(k) * ku;
}

Homomorphism DeltaChar::derivative() const { return {unit, at_p.eps}; }

Triangulation triangulation_params(const TangentData& t)
{
    const Padic one = t.v[0].one_like();
    DualP a1{one, t.dalpha[0]}, a2{one, t.dalpha[1]};
    Triangulation T;
    T.delta[0] = {a1, t.v[0]};
    T.delta[1] = {a2 / a1, t.v[1]};
    DualP d12 = T.delta[0].at_p * T.delta[1].at_p;
    T.delta[2] = {d12.inverse(), -(t.v[0] + t.v[1])};
    for (int i = 0; i < 3; ++i) T.ddelta[static_cast<std::size_t>(i)] = T.delta[static_cast<std::size_t>(i)].derivative();
    return T;
}

Padic l_invariant_from_line(const Homomorphism& line)
{
    if (line.a.is_zero()) throw PadicError("line contains ord_p; L-invariant undefined");
    return -(line.b / line.a);
}

Padic coroot_pairing(int i, const std::array<Padic, 2>& v)
{
    if (i == 1) return v[0] - v[1];
    if (i == 2) return v[0] + v[1] + v[1];
    throw PadicError("i must be 1 or 2");
}

BCGSResult bcgs(int i, const TangentData& t)
{
    const Padic s = coroot_pairing(i, t.v);
    if (s.is_zero())
        throw PadicError(i == 1 ? "parabolic direction: v1 = v2 violates Assumption (A1)"
                                : "parabolic direction: v1 + 2 v2 = 0 violates Assumption (A2)");
    // rescale so that v o s_i^vee = 1; the derivatives scale with v
    const Padic si = s.inverse();
    TangentData n{{si * t.v[0], si * t.v[1]}, {si * t.dalpha[0], si * t.dalpha[1]}};

    const Padic one = s.one_like();
    DualP a1{one, n.dalpha[0]}, a2{one, n.dalpha[1]};
    Triangulation T = triangulation_params(n);
    const std::size_t k = static_cast<std::size_t>(i - 1);

    BCGSResult r;
    r.normalised = n;
    r.automorphic = i == 1 ? -(a1 * a1 / a2).eps : -(a2 * a2 / a1).eps;
    r.intro_i2 = -(a2 * a2).eps;
    r.galois = -(T.delta[k].at_p / T.delta[k + 1].at_p).eps;
    r.line = T.ddelta[k] - T.ddelta[k + 1];
    r.from_line = l_invariant_from_line(r.line);
    return r;
}

TangentData duality_swap(const TangentData& t)
{
    // delta^vee_i = delta_{4-i}^{-1}
    return {{t.v[0] + t.v[1], -t.v[1]}, {t.dalpha[1], t.dalpha[0]}};
}

Sym2Result sym2(const std::vector<Padic>& ap_series)
{
    if (ap_series.size() < 2) throw PadicError("need a_p(0) and a_p'(0)");
    const Padic& c0 = ap_series[0];
    if (!(c0 - c0.one_like()).is_zero()) throw PadicError("a_p(0) must be 1");
    DualP ap{c0, ap_series[1]};
    DualP a = ap * ap;
    Sym2Result r;
    r.data = {{c0.one_like(), c0.zero_like()}, {a.eps, a.eps}};
    BCGSResult b = bcgs(1, r.data);
    r.line = b.line;
    r.L = b.from_line;
    return r;
}

}  // namespace padiclinv
