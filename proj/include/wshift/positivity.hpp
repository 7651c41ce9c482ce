#pragma once

#include "wshift/symmatrix.hpp"
#include "wshift/threshold.hpp"
#include "wshift/weights.hpp"

#include <string>
#include <vector>

namespace wshift {

inline constexpr std::size_t kDefaultWindow = 25;

/// The (k+1)x(k+1) Hankel moment matrix with entries gamma_{n+r+c}.
struct HankelWindow {
    std::size_t n;
    std::size_t k;
    SymMatrix matrix;
};

HankelWindow hankel(const WeightSequenceSq& w, std::size_t n, std::size_t k);

/// Finite-window evidence for k-hyponormality. PassedWindow means every
/// Hankel matrix with base index 0..window is PSD; it is not a proof for all n.
struct KHypVerdict {
    enum class Status { PassedWindow, FailedAt };

    Status status;
    std::size_t k;
    std::size_t window;
    std::size_t failed_at = 0;  // first failing base index when FailedAt

    bool passed() const { return status == Status::PassedWindow; }
    std::string to_string() const;
};

KHypVerdict is_k_hyponormal_window(const WeightSequenceSq& w, std::size_t k, std::size_t window = kDefaultWindow);

/// One verdict per direct summand packet(w, power, i) of the power.
struct PowerVerdict {
    std::size_t power;
    std::vector<KHypVerdict> pieces;

    bool passed() const;
};

PowerVerdict is_power_k_hyponormal_window(const WeightSequenceSq& w, std::size_t power, std::size_t k,
                                          std::size_t window = kDefaultWindow);

/// Bordered matrix whose positivity decides k-hyponormality of the power-th
/// power of backstep(w, s) for subnormal w: corner 1/s, border
/// gamma_{power-1}, gamma_{2 power-1}, ..., gamma_{k power-1}, and inner
/// block entries gamma_{(r+c+2) power-1}.
SymMatrix backstep_border_matrix(const WeightSequenceSq& w, std::size_t power, std::size_t k, const Rational& s);

/// Largest squared back-step weight with backstep(w, s) k-hyponormal.
/// Precondition: w subnormal. Propagates NotPsdError from the inner block.
Threshold backstep_k_threshold(const WeightSequenceSq& w, std::size_t k);

/// Same for the power-th power of the extension.
Threshold power_backstep_k_threshold(const WeightSequenceSq& w, std::size_t power, std::size_t k);

/// Checks A_{n,k}(ab) = A_{n,k}(a) * A_{n,k}(b) entrywise, and that PSD
/// factors give a PSD product, for 0 <= n <= window.
bool schur_preservation_check(const WeightSequenceSq& a, const WeightSequenceSq& b, std::size_t k,
                              std::size_t window = kDefaultWindow);

} // namespace wshift
