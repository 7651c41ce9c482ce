#pragma once

#include "wshift/rational.hpp"

#include <string>
#include <vector>

namespace wshift {

/// Point mass `mass` at `location`.
struct Atom {
    Rational location;
    Rational mass;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// coeff * t^exponent dt on [0, 1].
struct DensityTerm {
    Rational coeff;
    Rational exponent;

    friend bool operator==(const DensityTerm&, const DensityTerm&) = default;
};

/// Finite positive measure on [0, 1]: atoms plus generalized monomial
/// densities. Construction enforces
///   - atom locations in [0, 1], pairwise distinct, masses > 0
///   - density coefficients > 0, exponents > -1
/// Total mass is not constrained; see is_probability().
class Measure {
public:
    Measure() = default;
    Measure(std::vector<Atom> atoms, std::vector<DensityTerm> density);

    /// Same as the constructor, plus total mass exactly 1.
    static Measure probability(std::vector<Atom> atoms, std::vector<DensityTerm> density);

    static Measure dirac(const Rational& location) { return Measure({{location, 1}}, {}); }
    /// (exponent + 1) t^exponent dt, normalized.
    static Measure power_density(const Rational& exponent);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const std::vector<DensityTerm>& density() const noexcept { return density_; }

    Rational total_mass() const;
    bool is_probability() const { return total_mass() == 1; }
    bool is_zero() const noexcept { return atoms_.empty() && density_.empty(); }
    bool has_atom_at_origin() const;

    std::string to_string() const;

    friend bool operator==(const Measure&, const Measure&) = default;

private:
    std::vector<Atom> atoms_;
    std::vector<DensityTerm> density_;
};

/// Integral of t^n; exact for every n >= 0.
Rational moment(const Measure& mu, std::size_t n);

} // namespace wshift
