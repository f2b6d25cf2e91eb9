#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

// Exact scalar arithmetic.
//
// Two number types, both with value semantics and no rounding anywhere:
//
//   Dyadic   num / 2^exp   -- cell corners, diameters, Hausdorff distances
//   Rational num / den     -- curve parameters (uniform splits produce
//                             arbitrary denominators, not just powers of two)
//
// All intermediate products go through __int128 and are range-checked back
// into int64, so an overflow throws instead of corrupting a result.

namespace peano {

using std::int64_t;

namespace detail {

using int128 = __int128;

inline int64_t narrow(int128 v, const char* ctx) {
    if (v > int128(std::numeric_limits<int64_t>::max()) ||
        v < int128(std::numeric_limits<int64_t>::min()))
        throw std::overflow_error(std::string("overflow in ") + ctx);
    return static_cast<int64_t>(v);
}

}  // namespace detail

struct Dyadic {
    int64_t num = 0;
    int exp = 0;  // denominator 2^exp, exp >= 0; num odd or zero after normalize

    Dyadic() = default;
    Dyadic(int64_t n) : num(n), exp(0) {}
    Dyadic(int64_t n, int e) : num(n), exp(e) {
        if (e < 0 || e > 62) throw std::invalid_argument("Dyadic exponent out of range");
        normalize();
    }

    void normalize() {
        if (num == 0) { exp = 0; return; }
        while (exp > 0 && (num & 1) == 0) { num >>= 1; --exp; }
    }

    bool is_zero() const { return num == 0; }

    double to_double() const { return double(num) / double(int64_t(1) << exp); }
};

inline Dyadic operator+(Dyadic a, Dyadic b) {
    int e = std::max(a.exp, b.exp);
    if (e > 62) throw std::overflow_error("Dyadic add exponent");
    detail::int128 s = (detail::int128(a.num) << (e - a.exp)) +
                       (detail::int128(b.num) << (e - b.exp));
    return Dyadic(detail::narrow(s, "Dyadic add"), e);
}

inline Dyadic operator-(Dyadic a) { return Dyadic(-a.num, a.exp); }
inline Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }

inline Dyadic operator*(Dyadic a, Dyadic b) {
    if (a.exp + b.exp > 62) throw std::overflow_error("Dyadic mul exponent");
    detail::int128 p = detail::int128(a.num) * b.num;
    return Dyadic(detail::narrow(p, "Dyadic mul"), a.exp + b.exp);
}

inline Dyadic operator*(int64_t k, Dyadic a) { return Dyadic(k) * a; }

inline int cmp(Dyadic a, Dyadic b) {
    int e = std::max(a.exp, b.exp);
    detail::int128 x = detail::int128(a.num) << (e - a.exp);
    detail::int128 y = detail::int128(b.num) << (e - b.exp);
    return x < y ? -1 : (x > y ? 1 : 0);
}

inline bool operator==(Dyadic a, Dyadic b) { return cmp(a, b) == 0; }
inline bool operator!=(Dyadic a, Dyadic b) { return cmp(a, b) != 0; }
inline bool operator<(Dyadic a, Dyadic b) { return cmp(a, b) < 0; }
inline bool operator<=(Dyadic a, Dyadic b) { return cmp(a, b) <= 0; }
inline bool operator>(Dyadic a, Dyadic b) { return cmp(a, b) > 0; }
inline bool operator>=(Dyadic a, Dyadic b) { return cmp(a, b) >= 0; }

inline Dyadic dy_abs(Dyadic a) { return a.num < 0 ? -a : a; }
inline Dyadic dy_min(Dyadic a, Dyadic b) { return a < b ? a : b; }
inline Dyadic dy_max(Dyadic a, Dyadic b) { return a < b ? b : a; }

// power 2^-k
inline Dyadic dy_pow2(int k) {
    if (k >= 0) {
        if (k > 62) throw std::overflow_error("dy_pow2");
        return Dyadic(int64_t(1) << k, 0);
    }
    return Dyadic(1, -k);
}

inline std::string to_string(Dyadic a) {
    if (a.exp == 0) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(int64_t(1) << a.exp);
}

// Exact finite decimal expansion (every dyadic has one).
inline std::string to_decimal_string(Dyadic a) {
    if (a.exp == 0) return std::to_string(a.num);
    if (a.exp > 26) {
        // 5^27 overflows the scaled mantissa range; fall back to the fraction form
        return to_string(a);
    }
    bool neg = a.num < 0;
    detail::int128 m = neg ? -detail::int128(a.num) : detail::int128(a.num);
    for (int i = 0; i < a.exp; ++i) m *= 5;  // num/2^e = num*5^e / 10^e
    std::string digits;
    if (m == 0) digits = "0";
    while (m > 0) { digits += char('0' + int(m % 10)); m /= 10; }
    while ((int)digits.size() <= a.exp) digits += '0';
    std::string out;
    if (neg) out += '-';
    for (int i = (int)digits.size() - 1; i >= a.exp; --i) out += digits[i];
    out += '.';
    for (int i = a.exp - 1; i >= 0; --i) out += digits[i];
    return out;
}

// Parses "p", "p/q" with q a power of two, or "p/2^k".
inline Dyadic parse_dyadic(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a dyadic rational: " + s); };
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Dyadic(std::stoll(s), 0);
        int64_t p = std::stoll(s.substr(0, slash));
        std::string d = s.substr(slash + 1);
        int e = 0;
        if (d.rfind("2^", 0) == 0) {
            e = std::stoi(d.substr(2));
        } else {
            int64_t q = std::stoll(d);
            if (q <= 0) throw bad();
            while ((q & 1) == 0) { q >>= 1; ++e; }
            if (q != 1) throw bad();
        }
        return Dyadic(p, e);
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
}

struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }
    Rational(Dyadic d) : num(d.num), den(int64_t(1) << d.exp) {}

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    double to_double() const { return double(num) / double(den); }
};

inline Rational make_rational(detail::int128 n, detail::int128 d, const char* ctx) {
    if (d < 0) { n = -n; d = -d; }
    detail::int128 a = n < 0 ? -n : n, b = d;
    while (b) { detail::int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Rational(detail::narrow(n, ctx), detail::narrow(d, ctx));
}

inline Rational operator+(Rational a, Rational b) {
    return make_rational(detail::int128(a.num) * b.den + detail::int128(b.num) * a.den,
                         detail::int128(a.den) * b.den, "Rational add");
}
inline Rational operator-(Rational a) { return Rational(-a.num, a.den); }
inline Rational operator-(Rational a, Rational b) { return a + (-b); }
inline Rational operator*(Rational a, Rational b) {
    return make_rational(detail::int128(a.num) * b.num,
                         detail::int128(a.den) * b.den, "Rational mul");
}
inline Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("Rational division by zero");
    return make_rational(detail::int128(a.num) * b.den,
                         detail::int128(a.den) * b.num, "Rational div");
}

inline int cmp(Rational a, Rational b) {
    detail::int128 x = detail::int128(a.num) * b.den;
    detail::int128 y = detail::int128(b.num) * a.den;
    return x < y ? -1 : (x > y ? 1 : 0);
}

inline bool operator==(Rational a, Rational b) { return cmp(a, b) == 0; }
inline bool operator!=(Rational a, Rational b) { return cmp(a, b) != 0; }
inline bool operator<(Rational a, Rational b) { return cmp(a, b) < 0; }
inline bool operator<=(Rational a, Rational b) { return cmp(a, b) <= 0; }
inline bool operator>(Rational a, Rational b) { return cmp(a, b) > 0; }
inline bool operator>=(Rational a, Rational b) { return cmp(a, b) >= 0; }

inline std::string to_string(Rational a) {
    if (a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

inline Rational parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

// Exact value when the denominator is a power of two.
inline bool rational_to_dyadic(Rational r, Dyadic& out) {
    int64_t q = r.den;
    int e = 0;
    while ((q & 1) == 0) { q >>= 1; ++e; }
    if (q != 1 || e > 62) return false;
    out = Dyadic(r.num, e);
    return true;
}

}  // namespace peano
