#include "wshift/weights.hpp"

#include "wshift/errors.hpp"
#include "wshift/roots.hpp"

#include <mutex>

namespace wshift {

struct WeightSequenceSq::Impl {
    std::vector<Rational> prefix;
    TailRule tail;

    mutable std::mutex mutex;
    mutable std::vector<Rational> weights;
    mutable std::vector<Rational> moments{Rational(1)};

    Rational evaluate_tail(std::size_t n) const;
    void extend_to(std::size_t count) const;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational index_value(std::size_t n, long offset)
{
    return Rational(static_cast<long>(n) + offset);
}

} // namespace

Rational WeightSequenceSq::Impl::evaluate_tail(std::size_t n) const
{
    Rational s = std::visit(
        overloaded{
            [](const ConstantTail& t) { return t.value; },
            [n](const RationalFunctionTail& t) {
                Rational x = index_value(n, t.offset);
                Rational den = t.denominator(x);
                if (den == 0) throw TailUndefinedError("rational tail denominator vanishes at n = " + std::to_string(n));
                return Rational(t.numerator(x) / den);
            },
            [n](const MeasureTail& t) {
                Rational g = wshift::moment(t.measure, n);
                if (g == 0) throw TailUndefinedError("measure moment vanishes at n = " + std::to_string(n));
                return Rational(wshift::moment(t.measure, n + 1) / g);
            },
            [n](const ShiftedTail& t) {
                long idx = static_cast<long>(n) + t.shift;
                if (idx < 0) throw TailUndefinedError("shifted tail reaches a negative index");
                return t.source.weight_sq(static_cast<std::size_t>(idx));
            },
            [n](const SchurTail& t) { return Rational(t.left.weight_sq(n) * t.right.weight_sq(n)); },
            [n](const PacketTail& t) {
                Rational prod = 1;
                for (std::size_t m = 0; m < t.length; ++m) prod *= t.source.weight_sq(t.length * n + t.index + m);
                return prod;
            },
        },
        tail.rule);
    if (s <= 0) throw NonPositiveError("squared weight s_" + std::to_string(n) + " = " + wshift::to_string(s) + " is not positive");
    return s;
}

void WeightSequenceSq::Impl::extend_to(std::size_t count) const
{
    while (weights.size() < count) {
        const std::size_t n = weights.size();
        Rational s = n < prefix.size() ? prefix[n] : evaluate_tail(n);
        moments.push_back(moments.back() * s);
        weights.push_back(std::move(s));
    }
}

WeightSequenceSq::WeightSequenceSq(std::vector<Rational> prefix, TailRule tail) : impl_(std::make_shared<Impl>())
{
    for (auto& s : prefix) {
        s.canonicalize();
        if (s <= 0) throw NonPositiveError("prefix squared weight " + wshift::to_string(s) + " is not positive");
    }
    impl_->prefix = std::move(prefix);
    impl_->tail = std::move(tail);
}

WeightSequenceSq WeightSequenceSq::constant(const Rational& c)
{
    if (c <= 0) throw NonPositiveError("constant squared weight must be positive");
    return WeightSequenceSq({}, TailRule{ConstantTail{c}});
}

WeightSequenceSq WeightSequenceSq::explicit_then_constant(std::vector<Rational> prefix, const Rational& c)
{
    if (c <= 0) throw NonPositiveError("constant squared weight must be positive");
    return WeightSequenceSq(std::move(prefix), TailRule{ConstantTail{c}});
}

WeightSequenceSq WeightSequenceSq::rational_tail(std::vector<Rational> prefix, UniPoly num, UniPoly den, long offset)
{
    if (den.is_zero()) throw InvalidFamilyError("rational tail has zero denominator");
    if (num.is_zero()) throw InvalidFamilyError("rational tail has zero numerator");
    if (num.degree() > den.degree()) throw InvalidFamilyError("rational tail is unbounded (deg numerator > deg denominator)");
    if (sgn(num.leading()) != sgn(den.leading()))
        throw InvalidFamilyError("rational tail is eventually negative");
    // Beyond every real root of num*den the sign is the asymptotic sign, so
    // an exhaustive scan up to the root bound certifies all indices.
    const long start = static_cast<long>(prefix.size()) + offset;
    Rational bound = root_bound(num * den);
    Integer last;
    mpz_cdiv_q(last.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    constexpr long kScanCap = 1 << 20;
    long stop = last.fits_slong_p() ? std::min<long>(last.get_si(), start + kScanCap) : start + kScanCap;
    for (long x = start; x <= stop; ++x) {
        Rational d = den(Rational(x));
        if (d == 0) throw InvalidFamilyError("rational tail denominator vanishes at argument " + std::to_string(x));
        if (num(Rational(x)) / d <= 0)
            throw InvalidFamilyError("rational tail is not positive at argument " + std::to_string(x));
    }
    TailRule rule{RationalFunctionTail{std::move(num), std::move(den), offset}};
    return WeightSequenceSq(std::move(prefix), std::move(rule));
}

WeightSequenceSq WeightSequenceSq::bergman()
{
    return rational_tail({}, UniPoly({2, 1}, "n"), UniPoly({3, 1}, "n"));
}

Rational WeightSequenceSq::weight_sq(std::size_t n) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->extend_to(n + 1);
    return impl_->weights[n];
}

Rational WeightSequenceSq::moment(std::size_t n) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->extend_to(n);
    return impl_->moments[n];
}

std::vector<Rational> WeightSequenceSq::weights_sq(std::size_t count) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->extend_to(count);
    return {impl_->weights.begin(), impl_->weights.begin() + static_cast<long>(count)};
}

std::vector<Rational> WeightSequenceSq::moments(std::size_t count) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->extend_to(count);
    return {impl_->moments.begin(), impl_->moments.begin() + static_cast<long>(count)};
}

const std::vector<Rational>& WeightSequenceSq::prefix() const
{
    return impl_->prefix;
}

const TailRule& WeightSequenceSq::tail() const
{
    return impl_->tail;
}

WeightSequenceSq backstep(const WeightSequenceSq& w, const Rational& s)
{
    if (s <= 0) throw NonPositiveError("back-step squared weight must be positive");
    return WeightSequenceSq({s}, TailRule{ShiftedTail{w, -1}});
}

WeightSequenceSq schur(const WeightSequenceSq& a, const WeightSequenceSq& b)
{
    return WeightSequenceSq({}, TailRule{SchurTail{a, b}});
}

WeightSequenceSq packet(const WeightSequenceSq& w, std::size_t length, std::size_t index)
{
    if (length == 0) throw IndexOutOfRangeError("packet length must be at least 1");
    if (index >= length)
        throw IndexOutOfRangeError("packet index " + std::to_string(index) + " outside [0, " + std::to_string(length - 1) + "]");
    if (length == 1) return w;
    return WeightSequenceSq({}, TailRule{PacketTail{w, length, index}});
}

std::vector<WeightSequenceSq> power_decompose(const WeightSequenceSq& w, std::size_t power)
{
    if (power == 0) throw IndexOutOfRangeError("power must be at least 1");
    std::vector<WeightSequenceSq> pieces;
    pieces.reserve(power);
    for (std::size_t i = 0; i < power; ++i) pieces.push_back(packet(w, power, i));
    return pieces;
}

} // namespace wshift
