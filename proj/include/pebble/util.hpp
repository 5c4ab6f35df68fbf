#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebble {

// Error taxonomy. The CLI maps these to distinct exit codes so scripted
// callers can tell a bad invocation (2) from a solver failure (3) from an
// exhausted search budget (4).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

// A solver reported an incumbent that fails exact re-verification, or a
// parsed artifact is internally inconsistent. Never downgraded to a warning:
// accepting an unverified incumbent would silently corrupt a bound.
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_error : std::runtime_error {
    std::uint64_t cells_needed;
    std::uint64_t cells_allowed;
    budget_error(const std::string& what, std::uint64_t needed, std::uint64_t allowed)
        : std::runtime_error(what), cells_needed(needed), cells_allowed(allowed) {}
};

// Floor/ceil division for possibly-negative numerators (b > 0).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

// Exact rational on int64, normalized with positive denominator. Used for
// optimality gaps and solver dual bounds; model coefficients are kept
// integral by clearing denominators at construction time, so magnitudes
// here stay tiny and int64 with __int128 cross-products is plenty.
class rational {
  public:
    rational() = default;
    rational(std::int64_t num) : num_(num), den_(1) {}
    rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const { return floor_div(num_, den_); }

    rational operator-() const { return rational(-num_, den_); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(checked(static_cast<__int128>(a.num_) * b.den_ +
                                static_cast<__int128>(b.num_) * a.den_),
                        checked(static_cast<__int128>(a.den_) * b.den_));
    }
    friend rational operator-(const rational& a, const rational& b) { return a + (-b); }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(checked(static_cast<__int128>(a.num_) * b.num_),
                        checked(static_cast<__int128>(a.den_) * b.den_));
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
        return rational(checked(static_cast<__int128>(a.num_) * b.den_),
                        checked(static_cast<__int128>(a.den_) * b.num_));
    }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Parses plain and scientific decimal notation ("64", "-0.05", "6.4e+01")
    // exactly; rejects anything else. Solver logs are ingested through this so
    // dual bounds stay exact until the final floor.
    static rational parse_decimal(const std::string& text);

  private:
    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational: intermediate overflows int64");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline rational rational::parse_decimal(const std::string& text) {
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto fail = [&]() -> void {
        throw config_error("not a decimal number: '" + text + "'");
    };
    if (n == 0) fail();

    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }

    __int128 mantissa = 0;
    int frac_digits = 0;
    bool any_digit = false;
    auto push_digit = [&](char c) {
        mantissa = mantissa * 10 + (c - '0');
        if (mantissa > static_cast<__int128>(INT64_MAX))
            throw std::overflow_error("decimal too large: '" + text + "'");
        any_digit = true;
    };
    while (pos < n && text[pos] >= '0' && text[pos] <= '9') push_digit(text[pos++]);
    if (pos < n && text[pos] == '.') {
        ++pos;
        while (pos < n && text[pos] >= '0' && text[pos] <= '9') {
            push_digit(text[pos++]);
            ++frac_digits;
        }
    }
    if (!any_digit) fail();

    int exponent = 0;
    if (pos < n && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
            exp_neg = (text[pos] == '-');
            ++pos;
        }
        if (pos == n) fail();
        while (pos < n && text[pos] >= '0' && text[pos] <= '9') {
            exponent = exponent * 10 + (text[pos] - '0');
            if (exponent > 40) throw std::overflow_error("exponent too large: '" + text + "'");
            ++pos;
        }
        if (exp_neg) exponent = -exponent;
    }
    if (pos != n) fail();

    int shift = exponent - frac_digits;
    __int128 num = mantissa, den = 1;
    for (; shift > 0; --shift) {
        num *= 10;
        if (num > static_cast<__int128>(INT64_MAX))
            throw std::overflow_error("decimal too large: '" + text + "'");
    }
    for (; shift < 0; ++shift) {
        den *= 10;
        if (den > static_cast<__int128>(INT64_MAX))
            throw std::overflow_error("decimal too precise: '" + text + "'");
    }
    if (negative) num = -num;
    return rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace pebble
