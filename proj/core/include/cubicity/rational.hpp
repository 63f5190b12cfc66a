#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cubicity {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) noexcept {
        __extension__ using i128 = __int128;
        return static_cast<i128>(x.num_) * y.den_ <=> static_cast<i128>(y.num_) * x.den_;
    }

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// "num/den", always with the slash.
std::string to_string(const Rational& r);
/// Accepts "num/den" or a bare integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace cubicity
