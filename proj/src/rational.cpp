#include "pk/rational.hpp"

#include "pk/errors.hpp"

#include <cctype>

namespace pk {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InputError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    return q_.get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw InputError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}

Rational max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
}

} // namespace pk
