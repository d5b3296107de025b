#include "forestkit/scalar.hpp"

#include "forestkit/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace forestkit {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_number(std::string_view text) {
    throw Error(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
}

} // namespace

std::string_view to_string(ScalarMode mode) noexcept {
    return mode == ScalarMode::ExactRational ? "exact" : "float";
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            bad_number(text);
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        result = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            bad_number(text);
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class n(digits, 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
        result = Rational(n, d);
    } else {
        if (!all_digits(body))
            bad_number(text);
        result = Rational(mpz_class(std::string(body), 10));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value) {
    return value.get_str(10);
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

double to_double(const Rational& value) {
    return value.get_num().get_d() / value.get_den().get_d();
}

} // namespace forestkit
