#include "spbw/rational.hpp"

#include <cctype>
#include <ostream>

#include "spbw/error.hpp"

namespace spbw {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string text(s);
    if (!text.empty() && text[0] == '+') {
        text.erase(0, 1);
    }
    return Integer(text, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) {
            throw PreconditionError("malformed rational literal '" + std::string(text) + "'");
        }
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw PreconditionError("malformed rational literal '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw PreconditionError("inverse of zero");
    }
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw PreconditionError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace spbw
