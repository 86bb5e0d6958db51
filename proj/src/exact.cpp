#include "fewears/exact.hpp"

#include <cctype>

#include "fewears/errors.hpp"

namespace fewears {

Rational pow2(int e) {
    ExactCount p = 1;
    p <<= (e < 0 ? -e : e);
    if (e >= 0) return Rational(p);
    return Rational(ExactCount(1), p);
}

ExactCount binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    ExactCount r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

ExactCount require_integral(const Rational& r, std::string_view what) {
    if (boost::multiprecision::denominator(r) != 1) {
        throw InvariantError(std::string(what) + " evaluated to non-integer " + to_string(r));
    }
    return boost::multiprecision::numerator(r);
}

std::string to_string(const ExactCount& x) { return x.str(); }

std::string to_string(const Rational& r) {
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

ExactCount parse_count(std::string_view text) {
    if (text.empty()) throw InputError("empty count");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InputError("not a decimal count: '" + std::string(text) + "'");
        }
    }
    return ExactCount(std::string(text));
}

}  // namespace fewears
