#pragma once

#include "wshift/threshold.hpp"
#include "wshift/unipoly.hpp"

#include <functional>
#include <span>
#include <vector>

namespace wshift {

/// Immutable symmetric rational matrix.
class SymMatrix {
public:
    /// Throws std::invalid_argument unless `rows` is square and symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// Evaluates entry(i, j) for i <= j only.
    static SymMatrix generate(std::size_t order, const std::function<Rational(std::size_t, std::size_t)>& entry);

    std::size_t order() const noexcept { return order_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    std::vector<std::vector<Rational>> rows() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    explicit SymMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    std::size_t order_ = 0;
    std::vector<Rational> entries_;
};

/// det(lambda I - m), monic of degree order(m), in the variable "lambda".
UniPoly char_poly(const SymMatrix& m);

/// Exact PSD test. A real-rooted monic polynomial has all roots >= 0 iff its
/// coefficients alternate in sign, so no eigenvalue is ever approximated.
bool is_psd(const SymMatrix& m);

/// Largest c > 0 such that [[1/c, g^T], [g, h]] is PSD, i.e. 1 / (g^T h^+ g).
/// Infinite when g = 0, None when g is outside the range of h.
/// Throws NotPsdError if h is not PSD.
Threshold psd_corner_threshold(const SymMatrix& h, std::span<const Rational> g);

/// Determinant of a general square matrix by pivoted Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> a);

} // namespace wshift
