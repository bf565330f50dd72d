#pragma once

// Values of the form a + b*sqrt(d) with exact rational a, b, d >= 0.
// Comparisons against rationals are resolved exactly by sign analysis and
// squaring; decimal output uses 256-bit directed rounding.

#include <string>

#include "kneser/combinat.hpp"

namespace kneser {

enum class Round { down, up };

struct RootVal {
    Rat a;      // rational part
    Rat b = 0;  // radical coefficient
    Rat d = 0;  // radicand, must be >= 0

    RootVal() = default;
    RootVal(Rat a_) : a(std::move(a_)) {}
    RootVal(Rat a_, Rat b_, Rat d_);

    bool is_rational() const { return b == 0 || d == 0; }
    Rat rational_value() const;  // valid only when is_rational()

    // sign of (a + b*sqrt(d)) - x, exact
    int cmp(const Rat& x) const;
    bool operator>=(const Rat& x) const { return cmp(x) >= 0; }
    bool operator<=(const Rat& x) const { return cmp(x) <= 0; }
    bool operator<(const Rat& x) const { return cmp(x) < 0; }
    bool operator>(const Rat& x) const { return cmp(x) > 0; }

    // directed-rounded double enclosure
    double approx(Round dir) const;

    // fixed 12 significant digits, directed rounding
    std::string decimal(Round dir) const;
};

// |q| <= c * sqrt(t), exact (c, t >= 0)
bool abs_leq_root(const Rat& q, const Rat& c, const Rat& t);

std::string rat_str(const Rat& q);
std::string decimal_str(const Rat& q, Round dir);

}  // namespace kneser
