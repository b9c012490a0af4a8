#ifndef IQPSIM_ANGLE_H
#define IQPSIM_ANGLE_H

#include <cstdint>
#include <optional>
#include <string>

namespace iqpsim {

/// A rational multiple of pi, num/den with den > 0 and gcd(num, den) == 1.
struct PiFraction {
    int64_t num = 0;
    int64_t den = 1;

    bool operator==(const PiFraction &other) const = default;
};

/// Rotation angle in radians, normalized into [0, 2*pi).
///
/// Angles given as rational multiples of pi keep that exact form, and the
/// special values (0, pi/2, pi, 3pi/2) give exact cos and sin.
/// Sums of two exact angles stay exact; anything else falls back to the
/// floating point value.
class Angle {
   public:
    Angle() = default;

    static Angle radians(double value);
    static Angle pi_fraction(int64_t num, int64_t den);

    /// Parses "k*pi/m", "k*pi", "pi/m", "-pi/m", "pi", or a plain float.
    static Angle parse(const std::string &text);

    double value() const {
        return radians_;
    }
    const std::optional<PiFraction> &exact() const {
        return exact_;
    }

    double cos() const;
    double sin() const;

    Angle operator+(const Angle &other) const;
    Angle operator-() const;

    /// Adds `quarter_turns * pi/2`; always exact when the angle itself is exact.
    Angle plus_quarter_turns(int64_t quarter_turns) const;

    bool operator==(const Angle &other) const;

    /// "k*pi/m" when exact, otherwise the radian value with 17 significant digits.
    std::string str() const;

   private:
    double radians_ = 0.0;
    std::optional<PiFraction> exact_;
};

/// Total order used to canonicalize gate lists: by radian value, then exactness.
bool angle_less(const Angle &a, const Angle &b);

}  // namespace iqpsim

#endif
