#include "pk/ext_real.hpp"

#include "pk/errors.hpp"

namespace pk {

ExtReal ExtReal::parse(std::string_view text) {
    if (text == "inf" || text == "+inf") {
        return plus_inf();
    }
    if (text == "-inf") {
        return minus_inf();
    }
    return ExtReal(Rational::parse(text));
}

const Rational& ExtReal::value() const {
    if (!is_finite()) {
        throw InputError("value() of an infinite extended real");
    }
    return value_;
}

int ExtReal::sign() const {
    switch (kind_) {
    case Kind::MinusInf: return -1;
    case Kind::PlusInf: return 1;
    case Kind::Finite: break;
    }
    return value_.sign();
}

std::string ExtReal::str() const {
    switch (kind_) {
    case Kind::MinusInf: return "-inf";
    case Kind::PlusInf: return "inf";
    case Kind::Finite: break;
    }
    return value_.str();
}

bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (!a.is_finite()) {
        return std::strong_ordering::equal;
    }
    return a.value_ <=> b.value_;
}

MaybeExt ext_add(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) {
        return ExtReal(a.value() + b.value());
    }
    if ((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf())) {
        return std::nullopt;
    }
    return a.is_infinite() ? a : b;
}

MaybeExt ext_neg(const ExtReal& a) {
    return ext_mul(ExtReal(-1), a);
}

MaybeExt ext_sub(const ExtReal& a, const ExtReal& b) {
    const MaybeExt nb = ext_neg(b);
    return nb ? ext_add(a, *nb) : std::nullopt;
}

MaybeExt ext_mul(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) {
        return ExtReal(a.value() * b.value());
    }
    const int s = a.sign() * b.sign();
    if (s == 0) {
        return std::nullopt;
    }
    return s > 0 ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

MaybeExt ext_div(const ExtReal& a, const ExtReal& b) {
    if (b.is_finite() && b.value().is_zero()) {
        return std::nullopt;
    }
    if (a.is_finite() && b.is_finite()) {
        return ExtReal(a.value() / b.value());
    }
    if (a.is_finite()) {
        return ExtReal(0);
    }
    if (b.is_infinite()) {
        return std::nullopt;
    }
    return a.sign() * b.sign() > 0 ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

MaybeExt ext_add(const MaybeExt& a, const MaybeExt& b) {
    return a && b ? ext_add(*a, *b) : std::nullopt;
}

MaybeExt ext_mul(const MaybeExt& a, const MaybeExt& b) {
    return a && b ? ext_mul(*a, *b) : std::nullopt;
}

MaybeExt ext_div(const MaybeExt& a, const MaybeExt& b) {
    return a && b ? ext_div(*a, *b) : std::nullopt;
}

ExtReal ext_sup(std::span<const ExtReal> values) {
    ExtReal best = ExtReal::minus_inf();
    for (const auto& v : values) {
        best = ext_max(best, v);
    }
    return best;
}

ExtReal ext_inf(std::span<const ExtReal> values) {
    ExtReal best = ExtReal::plus_inf();
    for (const auto& v : values) {
        best = ext_min(best, v);
    }
    return best;
}

ExtReal ext_min(const ExtReal& a, const ExtReal& b) {
    return b < a ? b : a;
}

ExtReal ext_max(const ExtReal& a, const ExtReal& b) {
    return a < b ? b : a;
}

} // namespace pk
