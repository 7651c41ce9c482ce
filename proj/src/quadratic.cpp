#include "wshift/quadratic.hpp"

#include "wshift/roots.hpp"
#include "wshift/symmatrix.hpp"

namespace wshift {

QuadSeqData<Rational> quad_data(const WeightSequenceSq& w, std::size_t max_index)
{
    return QuadSeqData<Rational>(w.weights_sq(max_index + 2));
}

UVW<Rational> uvw(const WeightSequenceSq& w, std::size_t k)
{
    return quad_data(w, k).at(k);
}

std::vector<UniPoly> d_polys(const WeightSequenceSq& w, std::size_t depth)
{
    auto data = quad_data(w, depth);
    auto q = [&](std::size_t k) {
        auto c = data.at(k);
        return UniPoly({c.u, c.v}, "t");
    };
    auto r2 = [&](std::size_t k) { return UniPoly::monomial(data.at(k).w, 1, "t"); };
    std::vector<UniPoly> d;
    d.push_back(q(0));
    if (depth >= 1) d.push_back(q(0) * q(1) - r2(0));
    for (std::size_t n = 0; n + 2 <= depth; ++n) d.push_back(q(n + 2) * d[n + 1] - r2(n + 1) * d[n]);
    return d;
}

UniPoly d_poly(const WeightSequenceSq& w, std::size_t n)
{
    return d_polys(w, n).back();
}

Rational det_window(const WeightSequenceSq& w, std::size_t n, const Rational& t)
{
    auto data = quad_data(w, n);
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t k = 0; k <= n; ++k) {
        auto c = data.at(k);
        m[k][k] = c.u + t * c.v;
        if (k < n) {
            m[k][k + 1] = t * c.w;
            m[k + 1][k] = 1;
        }
    }
    return determinant(std::move(m));
}

CnTable<Rational> c_table(const WeightSequenceSq& w, std::size_t depth)
{
    return build_c_table(quad_data(w, depth), depth);
}

std::string PqhVerdict::to_string() const
{
    switch (status) {
    case Status::CertifiedPQH: return "CertifiedPQH(hypothesis window " + std::to_string(hypothesis_window) + ")";
    case Status::FailedPQH: return "FailedPQH(" + std::to_string(n) + ", " + std::to_string(i) + ")";
    case Status::IndeterminateWindow: return "IndeterminateWindow(" + std::to_string(hypothesis_window) + ")";
    }
    return "";
}

PqhVerdict pqh_check(const WeightSequenceSq& w, std::size_t hypothesis_window)
{
    using S = PqhVerdict::Status;
    if (hypothesis_window < 4) throw std::invalid_argument("pqh_check needs a window of at least 4");
    auto data = quad_data(w, hypothesis_window + 1);
    auto table = build_c_table(data, hypothesis_window);
    for (std::size_t n = 0; n <= hypothesis_window; ++n) {
        const auto& row = table.row(n);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] < 0) return {S::FailedPQH, hypothesis_window, n, i};
    }
    for (std::size_t n = 3; n <= hypothesis_window; ++n) {
        auto a = data.at(n);
        auto b = data.at(n + 1);
        if (b.u * a.v < a.w) return {S::IndeterminateWindow, hypothesis_window};
    }
    if (table.at(3, 2) >= 0 && table.at(4, 3) >= 0) return {S::CertifiedPQH, hypothesis_window};
    return {S::IndeterminateWindow, hypothesis_window};
}

std::string QhVerdict::to_string() const
{
    if (status == Status::Violated) return "Violated(" + std::to_string(n) + ")";
    return "VerifiedUpToWindow(" + std::to_string(window) + ")";
}

QhVerdict qh_window(const WeightSequenceSq& w, std::size_t window)
{
    auto d = d_polys(w, window);
    for (std::size_t n = 0; n <= window; ++n)
        if (!nonneg_on_ray(d[n])) return {QhVerdict::Status::Violated, window, n};
    return {QhVerdict::Status::VerifiedUpToWindow, window};
}

WeightSequenceSq beta_family(std::size_t power, const Rational& x)
{
    if (power == 0) throw std::invalid_argument("power must be at least 1");
    const long l = static_cast<long>(power);
    Rational s0 = 2 * x / (l + 1);
    return WeightSequenceSq::rational_tail({s0}, UniPoly({1, l}, "n"), UniPoly({l + 1, l}, "n"));
}

std::vector<UniPoly> beta_family_symbolic(std::size_t power, std::size_t count)
{
    if (power == 0) throw std::invalid_argument("power must be at least 1");
    const long l = static_cast<long>(power);
    std::vector<UniPoly> out;
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            out.push_back(UniPoly::monomial(make_rational(2, l + 1), 1, "x"));
        } else {
            const long nn = static_cast<long>(n);
            out.push_back(UniPoly::constant(make_rational(nn * l + 1, (nn + 1) * l + 1), "x"));
        }
    }
    return out;
}

std::vector<UniPoly> backstep_packet_symbolic(const WeightSequenceSq& w, std::size_t power, std::size_t count)
{
    if (power == 0) throw std::invalid_argument("power must be at least 1");
    // moments of backstep(w, x): 1, x gamma_0, x gamma_1, ...; the first
    // packet has s'_0 = x gamma_{l-1} and s'_j = gamma_{lj+l-1} / gamma_{lj-1}.
    std::vector<UniPoly> out;
    auto g = w.moments(power * count + 1);
    for (std::size_t j = 0; j < count; ++j) {
        if (j == 0) out.push_back(UniPoly::monomial(g[power - 1], 1, "x"));
        else out.push_back(UniPoly::constant(g[power * j + power - 1] / g[power * j - 1], "x"));
    }
    return out;
}

PqhThreshold pqh_threshold(const std::vector<UniPoly>& symbolic_weights, std::size_t hypothesis_window)
{
    if (symbolic_weights.size() < hypothesis_window + 3)
        throw std::invalid_argument("pqh_threshold needs hypothesis_window + 3 symbolic weights");
    QuadSeqData<UniPoly> data(symbolic_weights);
    auto table = build_c_table(data, 4);

    bool hypothesis = true;
    for (std::size_t n = 3; n <= hypothesis_window && hypothesis; ++n) {
        auto a = data.at(n);
        auto b = data.at(n + 1);
        UniPoly gap = b.u * a.v - a.w;
        // the hypothesis range must not depend on x
        hypothesis = gap.degree() <= 0 && gap.coeff(0) >= 0;
    }

    PqhThreshold out{Threshold::none(), Threshold::none(), Threshold::none(), Threshold::none(),
                     data.at(1).u,      table.at(3, 2),    table.at(4, 3),    hypothesis_window,
                     hypothesis};
    out.hyponormal_bound = first_sign_exit(out.u1);
    out.c32_bound = first_sign_exit(out.c32);
    out.c43_bound = first_sign_exit(out.c43);
    out.threshold = min(min(out.hyponormal_bound, out.c32_bound), out.c43_bound);
    return out;
}

PqhThreshold pqh_threshold_family(std::size_t power, std::size_t hypothesis_window)
{
    return pqh_threshold(beta_family_symbolic(power, hypothesis_window + 3), hypothesis_window);
}

} // namespace wshift
