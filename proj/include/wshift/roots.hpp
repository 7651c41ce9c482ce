#pragma once

#include "wshift/unipoly.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace wshift {

/// Isolating interval for a single real root. When lo == hi the root is
/// exactly lo; otherwise the root lies in the open interval (lo, hi) and
/// neither endpoint is a root.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool is_exact() const { return lo == hi; }
};

/// Canonical Sturm chain p, p', -rem(p, p'), ... (p made square-free first).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct roots in (a, b] of the square-free head of `chain`.
std::size_t sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);

/// Every real root of p has absolute value strictly below the result.
Rational root_bound(const UniPoly& p);

/// Disjoint isolating intervals for all roots t >= 0 of p, ascending.
/// Throws ZeroPolynomialError for p == 0.
std::vector<RootInterval> isolate_nonneg_roots(const UniPoly& p);

/// Isolating intervals for roots in the open ray (0, inf), ascending.
std::vector<RootInterval> isolate_positive_roots(const UniPoly& p);

/// True iff p(t) >= 0 for every t >= 0.
bool nonneg_on_ray(const UniPoly& p);

/// A real algebraic number: either an exact rational, or the unique root of
/// a square-free polynomial inside an open isolating interval. Rational roots
/// are always detected at construction, so a non-exact RealRoot is irrational.
class RealRoot {
public:
    RealRoot(const Rational& value);  // NOLINT: implicit by design of the numeric tower
    RealRoot(const UniPoly& poly, const RootInterval& where);

    const std::optional<Rational>& exact() const noexcept { return exact_; }
    const Rational& lower() const noexcept { return lo_; }
    const Rational& upper() const noexcept { return hi_; }
    const UniPoly& poly() const noexcept { return poly_; }

    /// Copy with the isolating interval shrunk below `width`.
    RealRoot refined(const Rational& width) const;

    std::string to_decimal(int places = 6) const;
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const RealRoot& a, const RealRoot& b);
    friend bool operator==(const RealRoot& a, const RealRoot& b) { return (a <=> b) == 0; }

private:
    void bisect_once();
    void try_rationalize();

    UniPoly poly_;
    Rational lo_, hi_;
    std::optional<Rational> exact_;
};

} // namespace wshift
