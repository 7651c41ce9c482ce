#pragma once

#include "wshift/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wshift {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies var^i; the
/// leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs, std::string var = "t");

    static UniPoly constant(const Rational& c, std::string var = "t");
    static UniPoly monomial(const Rational& c, std::size_t degree, std::string var = "t");
    static UniPoly identity(std::string var = "t") { return monomial(1, 1, std::move(var)); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const;
    Rational leading() const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const std::string& var() const noexcept { return var_; }

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const;
    UniPoly derivative() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& rhs);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& b) { return a *= b; }
    friend UniPoly operator*(const Rational& a, UniPoly b) { return b *= a; }
    friend UniPoly operator-(UniPoly a);

    /// Coefficient equality; the variable label is ignored.
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    void adopt_var(const UniPoly& other);

    std::vector<Rational> coeffs_;
    std::string var_ = "t";
};

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

UniPoly monic(const UniPoly& p);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's algorithm. Returns f_1, f_2, ... (monic, pairwise coprime, square-free)
/// with p = lc(p) * prod f_i^i. Trailing entries may be constant 1.
std::vector<UniPoly> square_free_decomposition(const UniPoly& p);

/// Product of the odd-multiplicity square-free factors: the part of p whose
/// roots are sign changes.
UniPoly odd_multiplicity_part(const UniPoly& p);

/// p / gcd(p, p'), monic.
UniPoly square_free_part(const UniPoly& p);

/// Scales p to a primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p);

} // namespace wshift
