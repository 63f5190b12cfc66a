#include "cubicity/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cubicity {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(const Rational& x, const Rational& y) {
    const std::int64_t l = std::lcm(x.den_, y.den_);
    return Rational(x.num_ * (l / x.den_) + y.num_ * (l / y.den_), l);
}

Rational operator-(const Rational& x, const Rational& y) {
    return x + Rational(-y.num_, y.den_);
}

std::string to_string(const Rational& r) {
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace cubicity
