#include "iqpsim/angle.h"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iqpsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PiFraction reduce_mod_two(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("angle denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) {
        g = 1;
    }
    num /= g;
    den /= g;
    int64_t period = 2 * den;
    num %= period;
    if (num < 0) {
        num += period;
    }
    return {num, den};
}

double normalize_radians(double r) {
    double v = std::fmod(r, kTwoPi);
    if (v < 0) {
        v += kTwoPi;
    }
    if (v >= kTwoPi) {
        v = 0;
    }
    return v;
}

double fraction_radians(const PiFraction &f) {
    return std::numbers::pi * static_cast<double>(f.num) / static_cast<double>(f.den);
}

int64_t parse_int(const std::string &s, const std::string &whole) {
    if (s.empty()) {
        throw std::invalid_argument("bad angle '" + whole + "'");
    }
    size_t used = 0;
    int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("bad angle '" + whole + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("bad angle '" + whole + "'");
    }
    return v;
}

}  // namespace

Angle Angle::radians(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("angle must be finite");
    }
    Angle a;
    a.radians_ = normalize_radians(value);
    if (a.radians_ == 0.0) {
        a.exact_ = PiFraction{0, 1};
    }
    return a;
}

Angle Angle::pi_fraction(int64_t num, int64_t den) {
    Angle a;
    a.exact_ = reduce_mod_two(num, den);
    a.radians_ = fraction_radians(*a.exact_);
    return a;
}

Angle Angle::parse(const std::string &raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            text.push_back(c);
        }
    }
    auto p = text.find("pi");
    if (p == std::string::npos) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad angle '" + raw + "'");
        }
        if (used != text.size()) {
            throw std::invalid_argument("bad angle '" + raw + "'");
        }
        return radians(v);
    }
    std::string head = text.substr(0, p);
    std::string tail = text.substr(p + 2);
    int64_t num = 1;
    if (head.empty() || head == "+") {
        num = 1;
    } else if (head == "-") {
        num = -1;
    } else {
        if (head.back() != '*') {
            throw std::invalid_argument("bad angle '" + raw + "'");
        }
        num = parse_int(head.substr(0, head.size() - 1), raw);
    }
    int64_t den = 1;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw std::invalid_argument("bad angle '" + raw + "'");
        }
        den = parse_int(tail.substr(1), raw);
        if (den == 0) {
            throw std::invalid_argument("bad angle '" + raw + "': zero denominator");
        }
    }
    return pi_fraction(num, den);
}

double Angle::cos() const {
    if (exact_) {
        const auto &f = *exact_;
        if (f.den == 1) {
            return f.num == 0 ? 1.0 : -1.0;
        }
        if (f.den == 2) {
            return 0.0;
        }
        if (f.den == 3) {
            return (f.num == 1 || f.num == 5) ? 0.5 : -0.5;
        }
    }
    return std::cos(radians_);
}

double Angle::sin() const {
    if (exact_) {
        const auto &f = *exact_;
        if (f.den == 1) {
            return 0.0;
        }
        if (f.den == 2) {
            return f.num == 1 ? 1.0 : -1.0;
        }
        if (f.den == 6) {
            return (f.num == 1 || f.num == 5) ? 0.5 : -0.5;
        }
    }
    return std::sin(radians_);
}

Angle Angle::operator+(const Angle &other) const {
    if (exact_ && other.exact_) {
        // cross products stay below 2^63 while den <= 2^31
        __int128 num = static_cast<__int128>(exact_->num) * other.exact_->den +
                       static_cast<__int128>(other.exact_->num) * exact_->den;
        __int128 den = static_cast<__int128>(exact_->den) * other.exact_->den;
        __int128 period = 2 * den;
        num %= period;
        if (num < 0) {
            num += period;
        }
        if (den <= INT64_MAX && num <= INT64_MAX) {
            return pi_fraction(static_cast<int64_t>(num), static_cast<int64_t>(den));
        }
    }
    return radians(radians_ + other.radians_);
}

Angle Angle::operator-() const {
    if (exact_) {
        return pi_fraction(-exact_->num, exact_->den);
    }
    return radians(-radians_);
}

Angle Angle::plus_quarter_turns(int64_t quarter_turns) const {
    return *this + pi_fraction(quarter_turns, 2);
}

bool Angle::operator==(const Angle &other) const {
    if (exact_ && other.exact_) {
        return *exact_ == *other.exact_;
    }
    return !exact_ && !other.exact_ && radians_ == other.radians_;
}

std::string Angle::str() const {
    if (exact_) {
        std::ostringstream out;
        out << exact_->num << "*pi/" << exact_->den;
        return out.str();
    }
    std::ostringstream out;
    out.precision(17);
    out << radians_;
    return out.str();
}

bool angle_less(const Angle &a, const Angle &b) {
    if (a.value() != b.value()) {
        return a.value() < b.value();
    }
    return a.exact().has_value() && !b.exact().has_value();
}

}  // namespace iqpsim
