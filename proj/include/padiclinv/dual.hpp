#pragma once

#include <stdexcept>

namespace padiclinv {

// base + eps * e with e^2 = 0.  No slot exists for a second-order term.
template <class T>
struct Dual {
    T base;
    T eps;

    Dual operator+(const Dual& o) const { return {base + o.base, eps + o.eps}; }
    Dual operator-(const Dual& o) const { return {base - o.base, eps - o.eps}; }
    Dual operator-() const { return {-base, -eps}; }
    Dual operator*(const Dual& o) const { return {base * o.base, base * o.eps + eps * o.base}; }

    Dual inverse() const
    {
        T ib = base.inverse();
        return {ib, -(eps * ib * ib)};
    }
    Dual operator/(const Dual& o) const { return *this * o.inverse(); }

    Dual pow(long k) const
    {
        if (k < 0) return inverse().pow(-k);
        Dual r = one_like();
        Dual b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    Dual one_like() const
    {
        return {base.one_like(), base.zero_like()};
    }
};

}  // namespace padiclinv
