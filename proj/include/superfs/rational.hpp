#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace superfs {

/// Exact element of Q/Z, stored as num/den with 0 <= num < den and gcd(num, den) = 1.
class Phase {
public:
    constexpr Phase() = default;
    Phase(std::int64_t num, std::int64_t den);

    static Phase half() { return Phase(1, 2); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    /// True when the value lies in {0, 1/2}.
    bool is_z2() const noexcept { return den_ <= 2; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// exp(2 pi i * value); exact for denominators 1, 2 and 4.
    std::complex<double> unit() const;

    Phase operator+(const Phase& o) const;
    Phase operator-(const Phase& o) const;
    Phase operator-() const;
    Phase& operator+=(const Phase& o) { return *this = *this + o; }
    Phase& operator-=(const Phase& o) { return *this = *this - o; }

    friend bool operator==(const Phase&, const Phase&) = default;
    friend auto operator<=>(const Phase& a, const Phase& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    /// "p/q", or "0" for zero; the inverse of parse().
    std::string str() const;
    /// Accepts "p/q" or an integer "p"; reduced mod 1.
    static Phase parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

} // namespace superfs
