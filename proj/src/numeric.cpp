#include "insdel/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace insdel {

BigInt binomial(std::int64_t n, std::int64_t k) { return binomial(BigInt(n), k); }

BigInt binomial(const BigInt& n, std::int64_t k) {
    if (k < 0 || n < 0 || BigInt(k) > n) return 0;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt num = (whole.empty() ? BigInt(0) : BigInt(std::string(whole))) * scale +
                     (frac.empty() ? BigInt(0) : BigInt(std::string(frac)));
        Rational r(num, scale);
        return negative ? Rational(-r) : r;
    }

    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
    const BigInt& den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt floor(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

}  // namespace insdel
