#pragma once

#include "wshift/measure.hpp"
#include "wshift/threshold.hpp"
#include "wshift/weights.hpp"

#include <optional>
#include <vector>

namespace wshift {

/// mu = nu + rho delta_0 with nu({0}) = 0. nu is not renormalized.
struct OriginSplit {
    Measure nu;
    Rational rho;
};

OriginSplit split_origin(const Measure& mu);

/// Integral of t^(-j), j >= 1. nullopt when the integral diverges (an atom at
/// 0, or a density term with exponent - j <= -1).
std::optional<Rational> neg_moment(const Measure& mu, std::size_t j);

/// The subnormal shift whose Berger measure is mu (MeasureTail).
/// Throws NotProbabilityError, or DegenerateSupportError if mu = delta_0.
WeightSequenceSq shift_from_measure(const Measure& mu);

/// Pushforward under t -> t^power. Moments become gamma_{power n}.
Measure pushforward_power(const Measure& mu, std::size_t power);

/// Berger measure of packet(shift, power, index) for 1 <= index < power:
/// (t^{index/power} / gamma_index) d nu(t^{1/power}). gamma_index is the
/// index-th moment of mu. Throws IndexOutOfRangeError, NotProbabilityError.
Measure piece_measure(const Measure& mu, std::size_t power, std::size_t index, const Rational& gamma_index);

/// Largest squared back-step weight keeping the extension subnormal:
/// 1 / ||1/t||_{L1(mu)}; None when 1/t is not integrable.
Threshold backstep_subnormal_threshold(const Measure& mu);

/// Berger measure of backstep(shift_from_measure(mu), s):
/// theta (t^-1 / ||1/t||) d mu + (1 - theta) delta_0 with theta = s ||1/t||.
/// Throws AboveThresholdError if s exceeds the threshold,
/// UnsupportedDensityError if a density exponent would drop to <= -1.
Measure backstep_measure(const Measure& mu, const Rational& s);

/// Outcome of a multi-step back-step test. `step` is the 1-based index of the
/// first violated condition.
struct MultiStepVerdict {
    enum class Status { Subnormal, DivergentNegMoment, OffBoundary, AboveBound };

    Status status;
    std::size_t step = 0;

    bool subnormal() const { return status == Status::Subnormal; }
    std::string to_string() const;
};

/// Subnormality of the shift with squared weights s_n, ..., s_1, s_0(mu)...
/// where steps[0] = s_1 is adjacent to the original sequence and
/// steps.back() = s_n becomes the first weight. Requires a nonempty list of
/// positive entries.
MultiStepVerdict multi_backstep_check(const Measure& mu, const std::vector<Rational>& steps);

/// Applies the steps innermost first: backstep(...backstep(w, s_1)..., s_n).
WeightSequenceSq multi_backstep(const WeightSequenceSq& w, const std::vector<Rational>& steps);

/// Largest s with the power-th power of the back-step extension subnormal.
/// power = 1 uses mu itself (None with an atom at 0); power >= 2 uses nu from
/// split_origin, since the first power piece only sees nu.
Threshold power_backstep_subnormal_threshold(const Measure& mu, std::size_t power);

} // namespace wshift
