#include "superfs/rational.hpp"

#include "superfs/error.hpp"

#include <charconv>
#include <numbers>
#include <numeric>

namespace superfs {

Phase::Phase(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("phase with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Phase Phase::operator+(const Phase& o) const {
    const std::int64_t l = std::lcm(den_, o.den_);
    return Phase(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Phase Phase::operator-(const Phase& o) const { return *this + (-o); }

Phase Phase::operator-() const { return Phase(-num_, den_); }

std::complex<double> Phase::unit() const {
    switch (den_) {
    case 1: return {1.0, 0.0};
    case 2: return {-1.0, 0.0};
    case 4: return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    default: return std::polar(1.0, 2.0 * std::numbers::pi * to_double());
    }
}

std::string Phase::str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InputError("malformed rational '" + std::string(whole) + "'");
    return v;
}

} // namespace

Phase Phase::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Phase(parse_int(text, text), 1);
    return Phase(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.str(); }

} // namespace superfs
