#ifndef LANDAU_RADIAL_HPP
#define LANDAU_RADIAL_HPP

#include <functional>

namespace landau {

/// Coefficient value with its first two r-derivatives, as needed when
/// operators are composed symbolically.
struct Smooth {
    double f{}, df{}, ddf{};
};

using SmoothFn = std::function<Smooth(double)>;

SmoothFn smooth_const(double v);

/// Radial profile of one angular sector.  d1/d2 are analytic derivatives and
/// may be empty for results of operator application.
struct RadialFunction {
    double m{};
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;

    bool has_derivatives() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }
};

/// Second-order radial differential operator acting on one angular sector:
///   op(f) = c2 f'' + c1 f' + c0 f,
/// mapping an m-sector function to an (m + delta_m)-sector function.
struct RadialOperator {
    int delta_m{};
    int order{};  // 0, 1 or 2
    SmoothFn c2, c1, c0;
    bool composable{true};  // coefficient derivatives are exact

    double apply_at(const RadialFunction& f, double r) const;

    /// Applies the operator; the result carries values only (no analytic
    /// derivatives) and lands in sector f.m + delta_m.
    RadialFunction apply(const RadialFunction& f) const;
};

RadialOperator op_identity(SmoothFn weight, int delta_m = 0);
RadialOperator op_scale(const RadialOperator& a, double factor);
RadialOperator op_add(const RadialOperator& a, const RadialOperator& b);

/// Symbolic composition outer(inner(f)).  Requires order(outer) +
/// order(inner) <= 2 and exact coefficient derivatives on both operands.
/// The result's coefficients carry values only and cannot be re-composed.
RadialOperator op_compose(const RadialOperator& outer, const RadialOperator& inner);

}  // namespace landau

#endif
