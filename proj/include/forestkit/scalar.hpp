#ifndef FORESTKIT_SCALAR_HPP
#define FORESTKIT_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace forestkit {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

enum class ScalarMode { ExactRational, Float64 };

std::string_view to_string(ScalarMode mode) noexcept;

/// Parses "p", "p/q", or a plain decimal "12.375" (optional sign) exactly.
/// Throws Error{ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Nearest double for numerators and denominators below 2^53; used only to
/// seed float-mode computations.
double to_double(const Rational& value);

/// Per-scalar operations the templated algorithms need. Specialized for the
/// two supported scalar modes only.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr ScalarMode mode = ScalarMode::ExactRational;
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& q) { return q; }
    static Rational abs(const Rational& q) { return ::abs(q); }
    static double magnitude(const Rational& q) { return std::fabs(to_double(q)); }
    static std::string format(const Rational& q) { return format_rational(q); }
};

template <>
struct ScalarTraits<double> {
    static constexpr ScalarMode mode = ScalarMode::Float64;
    static constexpr bool exact = false;
    static double from_rational(const Rational& q) { return to_double(q); }
    static double abs(double x) { return std::fabs(x); }
    static double magnitude(double x) { return std::fabs(x); }
    static std::string format(double x) { return format_double(x); }
};

template <class T>
T scalar_from(const Rational& q) {
    return ScalarTraits<T>::from_rational(q);
}

template <class T>
std::string format_scalar(const T& value) {
    return ScalarTraits<T>::format(value);
}

} // namespace forestkit

#endif
