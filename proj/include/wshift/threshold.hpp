#pragma once

#include "wshift/roots.hpp"

#include <optional>
#include <string>

namespace wshift {

/// Supremum of the admissible values of a positive parameter.
///   Finite   - a real number, exact when rational
///   Infinite - every positive value is admissible
///   None     - no positive value is admissible (reported as 0)
class Threshold {
public:
    enum class Kind { Finite, Infinite, None };

    static Threshold finite(RealRoot value) { return Threshold(Kind::Finite, std::move(value)); }
    static Threshold infinite() { return Threshold(Kind::Infinite, std::nullopt); }
    static Threshold none() { return Threshold(Kind::None, std::nullopt); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Only valid for Finite thresholds.
    const RealRoot& value() const;
    /// The exact rational value, if Finite and rational.
    std::optional<Rational> exact() const;

    /// "p/q", "inf", "none", or a root description for irrational values.
    std::string exact_string() const;
    std::string approx_string(int places = 6) const;

    friend bool operator==(const Threshold& a, const Threshold& b);

private:
    Threshold(Kind kind, std::optional<RealRoot> value) : kind_(kind), value_(std::move(value)) {}

    Kind kind_;
    std::optional<RealRoot> value_;
};

/// Pointwise minimum under None < Finite < Infinite.
Threshold min(const Threshold& a, const Threshold& b);

/// sup{x > 0 : p >= 0 on (0, x]}. The first positive sign exit of p.
Threshold first_sign_exit(const UniPoly& p);

} // namespace wshift
