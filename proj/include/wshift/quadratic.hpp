#pragma once

#include "wshift/threshold.hpp"
#include "wshift/unipoly.hpp"
#include "wshift/weights.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wshift {

/// u_k = s_k - s_{k-1}, v_k = s_k s_{k+1} - s_{k-1} s_{k-2},
/// w_k = s_k (s_{k+1} - s_{k-1})^2, with s_{-1} = s_{-2} = 0.
template <class S>
struct UVW {
    S u;
    S v;
    S w;
};

/// Squared weights over a scalar ring S: Rational for concrete sequences,
/// UniPoly for families parametrized by the squared back-step weight.
template <class S>
class QuadSeqData {
public:
    explicit QuadSeqData(std::vector<S> squared_weights) : s_(std::move(squared_weights)) {}

    /// Largest k with at() defined.
    std::size_t max_index() const { return s_.size() < 2 ? 0 : s_.size() - 2; }

    UVW<S> at(std::size_t k) const
    {
        if (k + 1 >= s_.size()) throw std::out_of_range("QuadSeqData: not enough squared weights for index " + std::to_string(k));
        const S s0 = s_[k];
        const S s1 = s_[k + 1];
        const S sm1 = k >= 1 ? s_[k - 1] : S();
        const S sm2 = k >= 2 ? s_[k - 2] : S();
        S gap = s1 - sm1;
        S w = s0 * gap;
        w = w * gap;
        return {s0 - sm1, s0 * s1 - sm1 * sm2, std::move(w)};
    }

private:
    std::vector<S> s_;
};

/// Maclaurin coefficients c(n, i) of d_n(t), 0 <= i <= n+1, rows 0..depth.
template <class S>
class CnTable {
public:
    explicit CnTable(std::vector<std::vector<S>> rows) : rows_(std::move(rows)) {}

    std::size_t depth() const { return rows_.size() - 1; }
    /// Zero outside 0 <= i <= n+1.
    S at(std::size_t n, long i) const
    {
        if (i < 0 || static_cast<std::size_t>(i) >= rows_.at(n).size()) return S();
        return rows_[n][static_cast<std::size_t>(i)];
    }
    const std::vector<S>& row(std::size_t n) const { return rows_.at(n); }

private:
    std::vector<std::vector<S>> rows_;
};

/// c(0,.) = (u_0, v_0); c(1,.) = (u_1 u_0, u_1 v_0 + u_0 v_1 - w_0, v_1 v_0);
/// c(n+2, i) = u_{n+2} c(n+1, i) + v_{n+2} c(n+1, i-1) - w_{n+1} c(n, i-1).
template <class S>
CnTable<S> build_c_table(const QuadSeqData<S>& data, std::size_t depth)
{
    if (depth < 1) throw std::invalid_argument("c table depth must be at least 1");
    std::vector<UVW<S>> uvw;
    for (std::size_t k = 0; k <= depth; ++k) uvw.push_back(data.at(k));
    std::vector<std::vector<S>> rows;
    rows.push_back({uvw[0].u, uvw[0].v});
    rows.push_back({uvw[1].u * uvw[0].u, uvw[1].u * uvw[0].v + uvw[0].u * uvw[1].v - uvw[0].w, uvw[1].v * uvw[0].v});
    for (std::size_t n = 0; n + 2 <= depth; ++n) {
        const auto& next = uvw[n + 2];
        const auto& prev_w = uvw[n + 1].w;
        const auto& r1 = rows[n + 1];
        const auto& r0 = rows[n];
        std::vector<S> row(n + 4);
        for (std::size_t i = 0; i < row.size(); ++i) {
            S acc{};
            if (i < r1.size()) acc = next.u * r1[i];
            if (i >= 1) {
                acc = acc + next.v * r1[i - 1];
                if (i - 1 < r0.size()) acc = acc - prev_w * r0[i - 1];
            }
            row[i] = std::move(acc);
        }
        rows.push_back(std::move(row));
    }
    return CnTable<S>(std::move(rows));
}

QuadSeqData<Rational> quad_data(const WeightSequenceSq& w, std::size_t max_index);

UVW<Rational> uvw(const WeightSequenceSq& w, std::size_t k);

/// d_n(t) = det D_n via d_0 = q_0, d_1 = q_0 q_1 - |r_0|^2,
/// d_{n+2} = q_{n+2} d_{n+1} - |r_{n+1}|^2 d_n, with q_k = u_k + t v_k and
/// |r_k|^2 = t w_k. Only t = |s|^2 enters.
UniPoly d_poly(const WeightSequenceSq& w, std::size_t n);

/// All d_0 .. d_depth in one pass.
std::vector<UniPoly> d_polys(const WeightSequenceSq& w, std::size_t depth);

/// det of the (n+1)x(n+1) tridiagonal D_n at a fixed t, by general Gaussian
/// elimination. The off-diagonal pair r_k, conj(r_k) is replaced by the
/// similar pair (t w_k, 1), which leaves the determinant unchanged.
Rational det_window(const WeightSequenceSq& w, std::size_t n, const Rational& t);

CnTable<Rational> c_table(const WeightSequenceSq& w, std::size_t depth);

inline constexpr std::size_t kDefaultHypothesisWindow = 100;

/// Positive quadratic hyponormality, decided on a finite window:
///   FailedPQH(n, i)   some c(n, i) < 0 with n <= window (conclusive)
///   CertifiedPQH      u_{n+1} v_n >= w_n for 3 <= n <= window and
///                     c(3,2), c(4,3) >= 0 (the hypothesis is only checked
///                     on the window)
///   IndeterminateWindow otherwise
struct PqhVerdict {
    enum class Status { CertifiedPQH, FailedPQH, IndeterminateWindow };

    Status status;
    std::size_t hypothesis_window;
    std::size_t n = 0;
    std::size_t i = 0;

    std::string to_string() const;
};

PqhVerdict pqh_check(const WeightSequenceSq& w, std::size_t hypothesis_window = kDefaultHypothesisWindow);

/// Necessary-condition check for quadratic hyponormality: d_n(t) >= 0 on
/// t >= 0 for every n <= window.
struct QhVerdict {
    enum class Status { Violated, VerifiedUpToWindow };

    Status status;
    std::size_t window;
    std::size_t n = 0;  // witness when Violated

    std::string to_string() const;
};

QhVerdict qh_window(const WeightSequenceSq& w, std::size_t window);

/// The family s_0 = 2x/(l+1), s_n = (nl+1)/((n+1)l+1) for n >= 1: the first
/// power piece of the back-step extension of the Bergman-tail shift.
WeightSequenceSq beta_family(std::size_t power, const Rational& x);

/// First `count` squared weights of beta_family as polynomials in x.
std::vector<UniPoly> beta_family_symbolic(std::size_t power, std::size_t count);

/// First `count` squared weights of packet(backstep(w, x), power, 0) as
/// polynomials in x.
std::vector<UniPoly> backstep_packet_symbolic(const WeightSequenceSq& w, std::size_t power, std::size_t count);

/// Exact positive-quadratic-hyponormality threshold for a family whose
/// squared weights are polynomials in x and whose u_n, v_n, w_n do not depend
/// on x for the hypothesis range n >= 3.
struct PqhThreshold {
    Threshold threshold;        // min of the three bounds below
    Threshold hyponormal_bound; // from u_1(x) >= 0
    Threshold c32_bound;        // from c(3,2)(x) >= 0
    Threshold c43_bound;        // from c(4,3)(x) >= 0
    UniPoly u1, c32, c43;
    std::size_t hypothesis_window;
    bool hypothesis_holds;
};

PqhThreshold pqh_threshold(const std::vector<UniPoly>& symbolic_weights, std::size_t hypothesis_window = kDefaultHypothesisWindow);

/// pqh_threshold for beta_family(power, x).
PqhThreshold pqh_threshold_family(std::size_t power, std::size_t hypothesis_window = kDefaultHypothesisWindow);

} // namespace wshift
