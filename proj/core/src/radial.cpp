#include "landau/radial.hpp"

#include <stdexcept>

namespace landau {

SmoothFn smooth_const(double v) {
    return [v](double) { return Smooth{v, 0.0, 0.0}; };
}

namespace {

Smooth eval(const SmoothFn& fn, double r) { return fn ? fn(r) : Smooth{}; }

}  // namespace

double RadialOperator::apply_at(const RadialFunction& f, double r) const {
    double out = eval(c0, r).f * f.value(r);
    if (order >= 1) {
        if (!f.d1) throw std::invalid_argument("RadialOperator: function lacks d1");
        out += eval(c1, r).f * f.d1(r);
    }
    if (order >= 2) {
        if (!f.d2) throw std::invalid_argument("RadialOperator: function lacks d2");
        out += eval(c2, r).f * f.d2(r);
    }
    return out;
}

RadialFunction RadialOperator::apply(const RadialFunction& f) const {
    RadialFunction out;
    out.m = f.m + delta_m;
    out.value = [op = *this, f](double r) { return op.apply_at(f, r); };
    return out;
}

RadialOperator op_identity(SmoothFn weight, int delta_m) {
    RadialOperator op;
    op.delta_m = delta_m;
    op.order = 0;
    op.c0 = std::move(weight);
    return op;
}

RadialOperator op_scale(const RadialOperator& a, double factor) {
    auto scale = [factor](const SmoothFn& fn) -> SmoothFn {
        if (!fn) return {};
        return [fn, factor](double r) {
            Smooth s = fn(r);
            return Smooth{s.f * factor, s.df * factor, s.ddf * factor};
        };
    };
    RadialOperator out = a;
    out.c2 = scale(a.c2);
    out.c1 = scale(a.c1);
    out.c0 = scale(a.c0);
    return out;
}

RadialOperator op_add(const RadialOperator& a, const RadialOperator& b) {
    if (a.delta_m != b.delta_m)
        throw std::invalid_argument("op_add: mismatched sector shifts");
    auto add = [](const SmoothFn& x, const SmoothFn& y) -> SmoothFn {
        if (!x) return y;
        if (!y) return x;
        return [x, y](double r) {
            const Smooth u = x(r), v = y(r);
            return Smooth{u.f + v.f, u.df + v.df, u.ddf + v.ddf};
        };
    };
    RadialOperator out;
    out.delta_m = a.delta_m;
    out.order = std::max(a.order, b.order);
    out.c2 = add(a.c2, b.c2);
    out.c1 = add(a.c1, b.c1);
    out.c0 = add(a.c0, b.c0);
    out.composable = a.composable && b.composable;
    return out;
}

RadialOperator op_compose(const RadialOperator& outer, const RadialOperator& inner) {
    if (outer.order > 1 || inner.order > 1)
        throw std::invalid_argument("op_compose: only first-order operands supported");
    if (!outer.composable || !inner.composable)
        throw std::invalid_argument("op_compose: operand lacks coefficient derivatives");

    // outer = b1 d + b0, inner = a1 d + a0 (orders <= 1 each suffice here):
    //   outer(inner f) = (b1 a1) f'' + (b1 a1' + b1 a0 + b0 a1) f' + (b1 a0' + b0 a0) f
    const SmoothFn b1 = outer.c1, b0 = outer.c0;
    const SmoothFn a1 = inner.c1, a0 = inner.c0;
    auto at = [](const SmoothFn& fn, double r) { return fn ? fn(r) : Smooth{}; };

    RadialOperator out;
    out.delta_m = outer.delta_m + inner.delta_m;
    out.order = outer.order + inner.order;
    out.composable = false;  // third derivatives of operand coefficients unavailable
    out.c2 = [b1, a1, at](double r) {
        return Smooth{at(b1, r).f * at(a1, r).f, 0.0, 0.0};
    };
    out.c1 = [b1, b0, a1, a0, at](double r) {
        const Smooth vb1 = at(b1, r), vb0 = at(b0, r), va1 = at(a1, r), va0 = at(a0, r);
        return Smooth{vb1.f * va1.df + vb1.f * va0.f + vb0.f * va1.f, 0.0, 0.0};
    };
    out.c0 = [b1, b0, a0, at](double r) {
        const Smooth vb1 = at(b1, r), vb0 = at(b0, r), va0 = at(a0, r);
        return Smooth{vb1.f * va0.df + vb0.f * va0.f, 0.0, 0.0};
    };
    return out;
}

}  // namespace landau
