#include "landau/special_functions.hpp"

#include <boost/math/special_functions/jacobi.hpp>

#include <cmath>
#include <stdexcept>

namespace landau::sf {

double pochhammer(double a, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

double reciprocal_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    // Gamma alternates sign on the intervals (-n-1, -n).
    double sign = 1.0;
    if (x < 0.0) {
        const long long n = static_cast<long long>(std::floor(-x));
        if (n % 2 == 0) sign = -1.0;
    }
    return sign * std::exp(-std::lgamma(x));
}

double hyp2f1_terminating(int l, double b, double c, double x) {
    if (l < 0) throw std::domain_error("hyp2f1_terminating: l must be >= 0");
    double sum = 1.0, term = 1.0;
    for (int n = 0; n < l; ++n) {
        const double cn = c + n;
        if (cn == 0.0)
            throw std::domain_error("hyp2f1_terminating: pole of (c)_n; use the regularized form");
        term *= (-l + n) * (b + n) * x / ((n + 1.0) * cn);
        sum += term;
    }
    return sum;
}

double hyp2f1_terminating_regularized(int l, double b, double c, double x) {
    const auto a = hyp_coefficients(l, b, c, /*confluent=*/false);
    return poly_eval(a, x).f;
}

double hyp1f1_terminating(int l, double c, double x) {
    if (l < 0) throw std::domain_error("hyp1f1_terminating: l must be >= 0");
    double sum = 1.0, term = 1.0;
    for (int n = 0; n < l; ++n) {
        const double cn = c + n;
        if (cn == 0.0)
            throw std::domain_error("hyp1f1_terminating: pole of (c)_n; use the regularized form");
        term *= (-l + n) * x / ((n + 1.0) * cn);
        sum += term;
    }
    return sum;
}

double hyp1f1_terminating_regularized(int l, double c, double x) {
    const auto a = hyp_coefficients(l, 0.0, c, /*confluent=*/true);
    return poly_eval(a, x).f;
}

std::vector<double> hyp_coefficients(int l, double b, double c, bool confluent) {
    if (l < 0) throw std::domain_error("hyp_coefficients: l must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(l) + 1, 0.0);
    for (int n = 0; n <= l; ++n) {
        const double rg = reciprocal_gamma(c + n);
        if (rg == 0.0) continue;  // analytic continuation through poles of Gamma(c+n)
        double num = pochhammer(-l, n);
        if (!confluent) num *= pochhammer(b, n);
        out[static_cast<std::size_t>(n)] = num * rg / std::tgamma(n + 1.0);
    }
    return out;
}

PolyEval poly_eval(const std::vector<double>& coeff, double x) {
    PolyEval out;
    // Horner for the value and both derivatives.
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        out.ddx = out.ddx * x + 2.0 * out.dx;
        out.dx = out.dx * x + out.f;
        out.f = out.f * x + *it;
    }
    return out;
}

double laguerre(int l, double alpha, double x) {
    if (l < 0) throw std::domain_error("laguerre: l must be >= 0");
    if (l == 0) return 1.0;
    double lm1 = 1.0;
    double lk = 1.0 + alpha - x;
    for (int k = 1; k < l; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lm1) / (k + 1.0);
        lm1 = lk;
        lk = next;
    }
    return lk;
}

double jacobi(int l, double a, double b, double x) {
    if (l < 0) throw std::domain_error("jacobi: l must be >= 0");
    return boost::math::jacobi(static_cast<unsigned>(l), a, b, x);
}

}  // namespace landau::sf
