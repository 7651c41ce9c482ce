#include "wshift/measure.hpp"

#include "wshift/errors.hpp"

#include <algorithm>

namespace wshift {

Measure::Measure(std::vector<Atom> atoms, std::vector<DensityTerm> density)
    : atoms_(std::move(atoms)), density_(std::move(density))
{
    for (auto& a : atoms_) {
        a.location.canonicalize();
        a.mass.canonicalize();
        if (a.location < 0 || a.location > 1)
            throw InvalidFamilyError("atom location " + wshift::to_string(a.location) + " outside [0, 1]");
        if (a.mass <= 0) throw InvalidFamilyError("atom mass must be positive");
    }
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.location < y.location; });
    for (std::size_t i = 1; i < atoms_.size(); ++i)
        if (atoms_[i].location == atoms_[i - 1].location)
            throw InvalidFamilyError("duplicate atom at " + wshift::to_string(atoms_[i].location));
    for (auto& d : density_) {
        d.coeff.canonicalize();
        d.exponent.canonicalize();
        if (d.coeff <= 0) throw InvalidFamilyError("density coefficient must be positive");
        if (d.exponent <= -1) throw InvalidFamilyError("density exponent must exceed -1");
    }
}

Measure Measure::probability(std::vector<Atom> atoms, std::vector<DensityTerm> density)
{
    Measure mu(std::move(atoms), std::move(density));
    if (!mu.is_probability())
        throw NotProbabilityError("total mass is " + wshift::to_string(mu.total_mass()) + ", expected 1");
    return mu;
}

Measure Measure::power_density(const Rational& exponent)
{
    return Measure({}, {{exponent + 1, exponent}});
}

Rational Measure::total_mass() const
{
    return moment(*this, 0);
}

bool Measure::has_atom_at_origin() const
{
    return std::any_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.location == 0; });
}

std::string Measure::to_string() const
{
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += " + ";
    };
    for (const auto& a : atoms_) {
        sep();
        out += wshift::to_string(a.mass) + " delta_" + wshift::to_string(a.location);
    }
    for (const auto& d : density_) {
        sep();
        out += wshift::to_string(d.coeff) + " t^" + wshift::to_string(d.exponent) + " dt";
    }
    return out.empty() ? "0" : out;
}

Rational moment(const Measure& mu, std::size_t n)
{
    Rational total = 0;
    for (const auto& a : mu.atoms()) total += a.mass * pow(a.location, n);
    for (const auto& d : mu.density()) total += d.coeff / (Rational(static_cast<long>(n)) + d.exponent + 1);
    return total;
}

} // namespace wshift
