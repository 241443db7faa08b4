#pragma once

// Scalar modes: exact rationals (GMP mpq_class) and binary64 with a global
// absolute tolerance. Every predicate in the library goes through num::sign,
// so the same templates serve both modes.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minkarr {

class geometry_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public geometry_error {
public:
    using geometry_error::geometry_error;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<mpq_class> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "exact";

    static int sign(const mpq_class& x) { return sgn(x); }
    static double to_double(const mpq_class& x) { return x.get_d(); }
    static mpq_class from_int(long v) { return mpq_class(v); }

    static mpq_class from_double(double v)
    {
        mpq_class q(v);
        q.canonicalize();
        return q;
    }

    static std::string to_string(const mpq_class& x) { return x.get_str(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "float";

    // Absolute tolerance, fixed once per run before any computation.
    static double& epsilon()
    {
        static double eps = 1e-9;
        return eps;
    }

    static int sign(double x)
    {
        if (x > epsilon()) return 1;
        if (x < -epsilon()) return -1;
        return 0;
    }
    static double to_double(double x) { return x; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_double(double v) { return v; }

    static std::string to_string(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <class S>
concept Scalar = requires { scalar_traits<S>::exact; };

namespace num {

template <Scalar S> int sign(const S& x) { return scalar_traits<S>::sign(x); }
template <Scalar S> bool is_zero(const S& x) { return sign(x) == 0; }
template <Scalar S> bool eq(const S& a, const S& b) { return sign(S(a - b)) == 0; }
template <Scalar S> bool lt(const S& a, const S& b) { return sign(S(a - b)) < 0; }
template <Scalar S> bool le(const S& a, const S& b) { return sign(S(a - b)) <= 0; }
template <Scalar S> bool gt(const S& a, const S& b) { return sign(S(a - b)) > 0; }
template <Scalar S> bool ge(const S& a, const S& b) { return sign(S(a - b)) >= 0; }
template <Scalar S> S abs(const S& x) { return sign(x) < 0 ? S(-x) : x; }

template <Scalar S> S from_int(long v) { return scalar_traits<S>::from_int(v); }
template <Scalar S> double to_double(const S& x) { return scalar_traits<S>::to_double(x); }
template <Scalar S> std::string to_string(const S& x) { return scalar_traits<S>::to_string(x); }

// Relative agreement used by identity checks in float mode; exact otherwise.
template <Scalar S>
bool rel_eq(const S& a, const S& b, double rel = 1e-9)
{
    if constexpr (scalar_traits<S>::exact) {
        return a == b;
    } else {
        const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= rel * scale;
    }
}

inline mpq_class parse_rational(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t");
        const auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty number");

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class p, q;
        if (p.set_str(s.substr(0, slash), 10) != 0 || q.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational '" + s + "'");
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        mpq_class r(p, q);
        r.canonicalize();
        return r;
    }

    // Decimal with optional exponent, read exactly.
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
        const char c = s[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) ++scale;
        } else {
            throw std::invalid_argument("bad number '" + s + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad number '" + s + "'");
    long exponent = 0;
    if (pos < s.size()) {
        try {
            std::size_t used = 0;
            exponent = std::stol(s.substr(pos + 1), &used);
            if (used != s.size() - pos - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in '" + s + "'");
        }
    }
    mpz_class mant(digits, 10);
    if (negative) mant = -mant;
    const long shift = exponent - scale;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class r = shift >= 0 ? mpq_class(mant * pow10) : mpq_class(mant, pow10);
    r.canonicalize();
    return r;
}

template <Scalar S>
S parse(std::string_view text)
{
    if constexpr (scalar_traits<S>::exact) {
        return parse_rational(text);
    } else {
        const mpq_class exact = parse_rational(text);  // validates the syntax
        if (text.find('/') != std::string_view::npos) return exact.get_d();
        return std::strtod(std::string(text).c_str(), nullptr);
    }
}

}  // namespace num
}  // namespace minkarr
