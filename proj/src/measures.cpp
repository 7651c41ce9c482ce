#include "wshift/measures.hpp"

#include "wshift/errors.hpp"

namespace wshift {

OriginSplit split_origin(const Measure& mu)
{
    std::vector<Atom> kept;
    Rational rho = 0;
    for (const auto& a : mu.atoms()) {
        if (a.location == 0) rho = a.mass;
        else kept.push_back(a);
    }
    return {Measure(std::move(kept), mu.density()), rho};
}

std::optional<Rational> neg_moment(const Measure& mu, std::size_t j)
{
    if (j == 0) return moment(mu, 0);
    const Rational jj(static_cast<long>(j));
    Rational total = 0;
    for (const auto& a : mu.atoms()) {
        if (a.location == 0) return std::nullopt;
        total += a.mass / pow(a.location, j);
    }
    for (const auto& d : mu.density()) {
        if (d.exponent - jj <= -1) return std::nullopt;
        total += d.coeff / (d.exponent - jj + 1);
    }
    return total;
}

namespace {

void require_probability(const Measure& mu, const char* what)
{
    if (!mu.is_probability())
        throw NotProbabilityError(std::string(what) + ": total mass " + to_string(mu.total_mass()) + " is not 1");
}

} // namespace

WeightSequenceSq shift_from_measure(const Measure& mu)
{
    require_probability(mu, "shift_from_measure");
    if (moment(mu, 1) == 0) throw DegenerateSupportError("measure is supported at the origin only");
    return WeightSequenceSq({}, TailRule{MeasureTail{mu}});
}

Measure pushforward_power(const Measure& mu, std::size_t power)
{
    if (power == 0) throw IndexOutOfRangeError("power must be at least 1");
    const Rational l(static_cast<long>(power));
    std::vector<Atom> atoms;
    for (const auto& a : mu.atoms()) atoms.push_back({pow(a.location, power), a.mass});
    std::vector<DensityTerm> density;
    for (const auto& d : mu.density()) density.push_back({d.coeff / l, Rational((d.exponent + 1) / l - 1)});
    return Measure(std::move(atoms), std::move(density));
}

Measure piece_measure(const Measure& mu, std::size_t power, std::size_t index, const Rational& gamma_index)
{
    if (power < 2 || index < 1 || index >= power)
        throw IndexOutOfRangeError("piece index must lie in [1, power - 1]");
    if (gamma_index <= 0) throw NonPositiveError("gamma_index must be positive");
    const Rational l(static_cast<long>(power));
    const Rational i(static_cast<long>(index));
    std::vector<Atom> atoms;
    for (const auto& a : mu.atoms()) {
        if (a.location == 0) continue;
        atoms.push_back({pow(a.location, power), a.mass * pow(a.location, index) / gamma_index});
    }
    std::vector<DensityTerm> density;
    for (const auto& d : mu.density())
        density.push_back({d.coeff / (gamma_index * l), Rational((d.exponent + i + 1) / l - 1)});
    Measure out(std::move(atoms), std::move(density));
    require_probability(out, "piece_measure (is gamma_index the index-th moment?)");
    return out;
}

Threshold backstep_subnormal_threshold(const Measure& mu)
{
    require_probability(mu, "backstep_subnormal_threshold");
    auto inv = neg_moment(mu, 1);
    if (!inv) return Threshold::none();
    return Threshold::finite(RealRoot(Rational(1 / *inv)));
}

Measure backstep_measure(const Measure& mu, const Rational& s)
{
    require_probability(mu, "backstep_measure");
    if (s <= 0) throw NonPositiveError("back-step squared weight must be positive");
    auto inv = neg_moment(mu, 1);
    if (!inv) throw AboveThresholdError("no subnormal back-step extension exists (1/t not integrable)");
    const Rational theta = s * *inv;
    if (theta > 1)
        throw AboveThresholdError("squared weight " + to_string(s) + " exceeds the subnormal threshold " +
                                  to_string(Rational(1 / *inv)));
    std::vector<Atom> atoms;
    for (const auto& a : mu.atoms()) atoms.push_back({a.location, theta * a.mass / (a.location * *inv)});
    std::vector<DensityTerm> density;
    for (const auto& d : mu.density()) {
        if (d.exponent - 1 <= -1) throw UnsupportedDensityError("density exponent would drop to <= -1");
        density.push_back({theta * d.coeff / *inv, Rational(d.exponent - 1)});
    }
    if (theta < 1) atoms.push_back({0, 1 - theta});
    return Measure(std::move(atoms), std::move(density));
}

std::string MultiStepVerdict::to_string() const
{
    const std::string at = " at step " + std::to_string(step);
    switch (status) {
    case Status::Subnormal: return "Subnormal";
    case Status::DivergentNegMoment: return "NotSubnormal: 1/t^j not integrable" + at;
    case Status::OffBoundary: return "NotSubnormal: inner product not on the boundary" + at;
    case Status::AboveBound: return "NotSubnormal: product exceeds the bound" + at;
    }
    return "";
}

MultiStepVerdict multi_backstep_check(const Measure& mu, const std::vector<Rational>& steps)
{
    require_probability(mu, "multi_backstep_check");
    if (steps.empty()) throw std::invalid_argument("multi_backstep_check needs at least one step");
    for (const auto& s : steps)
        if (s <= 0) throw NonPositiveError("back-step squared weights must be positive");
    using S = MultiStepVerdict::Status;
    const std::size_t n = steps.size();
    std::vector<Rational> inv(n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
        auto v = neg_moment(mu, j);
        if (!v) return {S::DivergentNegMoment, j};
        inv[j] = *v;
    }
    Rational product = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        product *= steps[j - 1];
        const Rational bound = 1 / inv[j];
        if (j < n && product != bound) return {S::OffBoundary, j};
        if (j == n && product > bound) return {S::AboveBound, j};
    }
    return {S::Subnormal, 0};
}

WeightSequenceSq multi_backstep(const WeightSequenceSq& w, const std::vector<Rational>& steps)
{
    WeightSequenceSq out = w;
    for (const auto& s : steps) out = backstep(out, s);
    return out;
}

Threshold power_backstep_subnormal_threshold(const Measure& mu, std::size_t power)
{
    require_probability(mu, "power_backstep_subnormal_threshold");
    if (power == 0) throw IndexOutOfRangeError("power must be at least 1");
    if (power == 1) return backstep_subnormal_threshold(mu);
    OriginSplit split = split_origin(mu);
    if (split.nu.is_zero()) throw DegenerateSupportError("measure is supported at the origin only");
    auto inv = neg_moment(split.nu, 1);
    if (!inv) return Threshold::none();
    return Threshold::finite(RealRoot(Rational(1 / *inv)));
}

} // namespace wshift
