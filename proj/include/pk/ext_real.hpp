#pragma once

/**
 * @file ext_real.hpp
 * @brief The extended real line over exact rationals.
 *
 * The order is total with -inf <= x <= +inf. Arithmetic is partial: every
 * operation returns std::nullopt exactly for the combinations that have no
 * value ((+inf)+(-inf), 0*(+-inf), x/0, (+-inf)/(+-inf)). Undefined is a
 * value, never an exception.
 */

#include "pk/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pk {

class ExtReal {
public:
    enum class Kind { MinusInf, Finite, PlusInf };

    ExtReal() = default;
    ExtReal(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    ExtReal(long v) : ExtReal(Rational(v)) {} // NOLINT(google-explicit-constructor)
    ExtReal(int v) : ExtReal(Rational(v)) {} // NOLINT(google-explicit-constructor)

    static ExtReal plus_inf() { return ExtReal(Kind::PlusInf); }
    static ExtReal minus_inf() { return ExtReal(Kind::MinusInf); }

    /// Accepts rational text, "inf", "+inf", "-inf".
    static ExtReal parse(std::string_view text);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_finite() const { return kind_ == Kind::Finite; }
    [[nodiscard]] bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
    [[nodiscard]] bool is_minus_inf() const { return kind_ == Kind::MinusInf; }
    [[nodiscard]] bool is_infinite() const { return kind_ != Kind::Finite; }
    /// Only meaningful for finite values.
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] int sign() const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const ExtReal& a, const ExtReal& b);
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

    friend std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.str(); }

private:
    explicit ExtReal(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_;
};

using MaybeExt = std::optional<ExtReal>;

MaybeExt ext_add(const ExtReal& a, const ExtReal& b);
MaybeExt ext_neg(const ExtReal& a);
MaybeExt ext_sub(const ExtReal& a, const ExtReal& b);
MaybeExt ext_mul(const ExtReal& a, const ExtReal& b);
MaybeExt ext_div(const ExtReal& a, const ExtReal& b);

/// Lifts partial arithmetic over possibly-undefined operands.
MaybeExt ext_add(const MaybeExt& a, const MaybeExt& b);
MaybeExt ext_mul(const MaybeExt& a, const MaybeExt& b);
MaybeExt ext_div(const MaybeExt& a, const MaybeExt& b);

/// Supremum and infimum in the extended order; sup of nothing is -inf,
/// inf of nothing is +inf.
ExtReal ext_sup(std::span<const ExtReal> values);
ExtReal ext_inf(std::span<const ExtReal> values);

ExtReal ext_min(const ExtReal& a, const ExtReal& b);
ExtReal ext_max(const ExtReal& a, const ExtReal& b);

} // namespace pk
