#include "landau/params.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace landau {

namespace {

std::int64_t checked_pow10(int k) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > 922337203685477580LL) throw std::invalid_argument("rational: exponent overflow");
        v *= 10;
    }
    return v;
}

Rational parse_decimal(std::string_view text) {
    // [sign] digits [. digits] [e exp]
    std::string mantissa;
    int scale = 0;  // negative powers of ten
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) mantissa += text[i++];
    bool any_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa += c;
            any_digit = true;
            if (seen_dot) ++scale;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    int exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        if (i >= text.size()) throw std::invalid_argument("rational: bad exponent");
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("rational: bad exponent");
            exp10 = exp10 * 10 + (text[i] - '0');
            if (exp10 > 18) throw std::invalid_argument("rational: exponent too large");
        }
        if (neg) exp10 = -exp10;
    }
    if (!any_digit || i != text.size())
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");

    errno = 0;
    char* end = nullptr;
    const long long n = std::strtoll(mantissa.c_str(), &end, 10);
    if (errno == ERANGE || *end != '\0')
        throw std::invalid_argument("rational: mantissa overflow in '" + std::string(text) + "'");

    const int net = exp10 - scale;
    if (net >= 0) {
        const std::int64_t p = checked_pow10(net);
        if (n != 0 && std::abs(n) > 9223372036854775807LL / p)
            throw std::invalid_argument("rational: overflow in '" + std::string(text) + "'");
        return Rational{n * p, 1};
    }
    return Rational{n, checked_pow10(-net)};
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const Rational p = parse_decimal(text.substr(0, slash));
        const Rational q = parse_decimal(text.substr(slash + 1));
        return p / q;
    }
    return parse_decimal(text);
}

double ModelParams::flux() const {
    if (kappa == 0.0) throw std::domain_error("flux ratio undefined at kappa = 0");
    return 2.0 * beta / kappa;
}

ModelParams ModelParams::make(const Rational& kappa, const Rational& beta) {
    ModelParams p;
    p.kappa = kappa.to_double();
    p.beta = beta.to_double();
    p.kappa_exact = kappa;
    p.beta_exact = beta;
    if (!kappa.is_zero()) {
        const Rational ratio = Rational{2} * beta / kappa;
        if (ratio.is_integer()) {
            p.flux_ratio = ratio;
        } else if (kappa.to_double() > 0.0) {
            throw std::invalid_argument(
                "params: 2*beta/kappa = " + ratio.str() +
                " violates the quantization constraint (2*beta/kappa must be an integer for "
                "kappa > 0)");
        }
    }
    return p;
}

ModelParams ModelParams::make(double kappa, double beta) {
    ModelParams p;
    p.kappa = kappa;
    p.beta = beta;
    if (kappa != 0.0) {
        const double ratio = 2.0 * beta / kappa;
        const double nearest = std::round(ratio);
        if (std::abs(ratio - nearest) < 1e-9) {
            p.flux_ratio = Rational{static_cast<std::int64_t>(nearest)};
        } else if (kappa > 0.0) {
            throw std::invalid_argument(
                "params: 2*beta/kappa = " + std::to_string(ratio) +
                " violates the quantization constraint (2*beta/kappa must be an integer for "
                "kappa > 0)");
        }
    }
    return p;
}

ModelParams ModelParams::parse(const std::string& kappa, const std::string& beta) {
    return make(parse_rational(kappa), parse_rational(beta));
}

}  // namespace landau
