#pragma once

#include "wshift/measure.hpp"
#include "wshift/unipoly.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace wshift {

struct TailRule;

/// Weight sequence of a unilateral weighted shift, stored as squared weights
/// s_n = alpha_n^2 so that every derived quantity stays rational.
///
/// A sequence is an explicit prefix followed by a tail rule that supplies
/// s_n for n >= prefix length. Handles are cheap to copy and share one
/// append-only memo of weights and moments gamma_n (gamma_0 = 1,
/// gamma_{n+1} = gamma_n s_n); the memo is guarded so a sequence may be read
/// from several threads.
class WeightSequenceSq {
public:
    /// Throws NonPositiveError if a prefix entry is <= 0.
    WeightSequenceSq(std::vector<Rational> prefix, TailRule tail);

    static WeightSequenceSq constant(const Rational& c);
    static WeightSequenceSq explicit_then_constant(std::vector<Rational> prefix, const Rational& c);
    /// s_n = num(n + offset) / den(n + offset) for n >= prefix.size().
    /// Positivity is certified for every index (exhaustively up to the root
    /// bound of num*den, asymptotically beyond it); boundedness requires
    /// deg num <= deg den. Throws InvalidFamilyError otherwise.
    static WeightSequenceSq rational_tail(std::vector<Rational> prefix, UniPoly num, UniPoly den, long offset = 0);
    /// s_n = (n+2)/(n+3): the shift with Berger measure 2t dt.
    static WeightSequenceSq bergman();

    Rational weight_sq(std::size_t n) const;
    Rational moment(std::size_t n) const;
    std::vector<Rational> weights_sq(std::size_t count) const;
    std::vector<Rational> moments(std::size_t count) const;

    const std::vector<Rational>& prefix() const;
    const TailRule& tail() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

struct ConstantTail {
    Rational value;
};

struct RationalFunctionTail {
    UniPoly numerator;
    UniPoly denominator;
    long offset = 0;
};

/// s_n = gamma_{n+1} / gamma_n with gamma the moments of `measure`.
struct MeasureTail {
    Measure measure;
};

/// s_n = source.s_{n + shift}.
struct ShiftedTail {
    WeightSequenceSq source;
    long shift = 0;
};

/// s_n = left.s_n * right.s_n.
struct SchurTail {
    WeightSequenceSq left;
    WeightSequenceSq right;
};

/// s_n = prod_{m < length} source.s_{length n + index + m}.
struct PacketTail {
    WeightSequenceSq source;
    std::size_t length = 1;
    std::size_t index = 0;
};

struct TailRule {
    std::variant<ConstantTail, RationalFunctionTail, MeasureTail, ShiftedTail, SchurTail, PacketTail> rule;
};

/// Back-step extension with new first squared weight s: s, s_0, s_1, ...
/// Throws NonPositiveError if s <= 0.
WeightSequenceSq backstep(const WeightSequenceSq& w, const Rational& s);

/// Pointwise product of squared weights; moments multiply too.
WeightSequenceSq schur(const WeightSequenceSq& a, const WeightSequenceSq& b);

/// The packet sequence: products of `length` consecutive weights starting at
/// `index`. Its moments are gamma_{length n + index} / gamma_index.
/// Throws IndexOutOfRangeError unless 0 <= index < length.
WeightSequenceSq packet(const WeightSequenceSq& w, std::size_t length, std::size_t index);

/// The direct summands of the power: packet(w, power, i) for i < power.
std::vector<WeightSequenceSq> power_decompose(const WeightSequenceSq& w, std::size_t power);

} // namespace wshift
