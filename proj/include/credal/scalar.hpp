#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace credal {

/// Exact rational number. Always in lowest terms with a positive
/// denominator; zero is 0/1.
class Scalar {
public:
    using Rep = boost::multiprecision::mpq_rational;

    Scalar() = default;
    Scalar(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t num, std::int64_t den);
    explicit Scalar(Rep v) : v_(std::move(v)) {}

    /// Accepts "12", "-0.28", "+3.5", "47/20", "-3/10". Never goes through
    /// binary floating point. Throws ParseError on anything else.
    static Scalar parse(std::string_view text);

    const Rep& rep() const noexcept { return v_; }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    /// Throws ModelError on division by zero.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(Rep(-v_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }

    /// "p/q", or "p" for integers.
    std::string to_string() const;

    /// Shortest exact decimal expansion ("0.28", "2.35", "-4"), or nullopt
    /// when the denominator has a prime factor other than 2 and 5.
    std::optional<std::string> to_decimal() const;

    /// Lossy; for display and timing only, never for decisions.
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    Rep v_;
};

}  // namespace credal
