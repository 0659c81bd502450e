#include "credal/scalar.hpp"

#include "credal/errors.hpp"

#include <cctype>
#include <ostream>

namespace credal {

namespace mp = boost::multiprecision;

Scalar::Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw ModelError("zero denominator");
    }
    v_ = Rep(mp::mpz_int(num), mp::mpz_int(den));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) {
        throw ModelError("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mp::mpz_int to_integer(std::string_view digits) {
    return mp::mpz_int(std::string(digits));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    const std::string shown(text);
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rep value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("number", "not a rational: \"" + shown + "\"");
        }
        mp::mpz_int d = to_integer(den);
        if (d.is_zero()) {
            throw ParseError("number", "zero denominator: \"" + shown + "\"");
        }
        value = Rep(to_integer(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw ParseError("number", "not a decimal: \"" + shown + "\"");
        }
        mp::mpz_int scale = mp::pow(mp::mpz_int(10), static_cast<unsigned>(frac.size()));
        mp::mpz_int w = whole.empty() ? mp::mpz_int(0) : to_integer(whole);
        mp::mpz_int f = frac.empty() ? mp::mpz_int(0) : to_integer(frac);
        value = Rep(w * scale + f, scale);
    } else {
        if (!all_digits(s)) {
            throw ParseError("number", "not a number: \"" + shown + "\"");
        }
        value = Rep(to_integer(s));
    }
    if (negative) value = -value;
    return Scalar(std::move(value));
}

std::string Scalar::to_string() const {
    const auto& num = mp::numerator(v_);
    const auto& den = mp::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<std::string> Scalar::to_decimal() const {
    mp::mpz_int num = mp::numerator(v_);
    mp::mpz_int den = mp::denominator(v_);
    // Count the 2s and 5s; anything left over means a repeating expansion.
    mp::mpz_int rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return std::nullopt;

    unsigned digits = std::max(twos, fives);
    mp::mpz_int scaled = num * mp::pow(mp::mpz_int(10), digits) / den;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return negative ? "-" + s : s;
}

double Scalar::to_double() const { return v_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace credal
