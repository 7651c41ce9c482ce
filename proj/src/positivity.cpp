#include "wshift/positivity.hpp"

#include <stdexcept>

namespace wshift {

namespace {

void require_order(std::size_t k)
{
    if (k == 0) throw std::invalid_argument("hyponormality order k must be at least 1");
}

void require_power(std::size_t power)
{
    if (power == 0) throw std::invalid_argument("power must be at least 1");
}

} // namespace

HankelWindow hankel(const WeightSequenceSq& w, std::size_t n, std::size_t k)
{
    require_order(k);
    auto g = w.moments(n + 2 * k + 1);
    auto m = SymMatrix::generate(k + 1, [&](std::size_t r, std::size_t c) { return g[n + r + c]; });
    return {n, k, std::move(m)};
}

std::string KHypVerdict::to_string() const
{
    if (passed()) return "PassedWindow(" + std::to_string(window) + ")";
    return "FailedAt(" + std::to_string(failed_at) + ")";
}

KHypVerdict is_k_hyponormal_window(const WeightSequenceSq& w, std::size_t k, std::size_t window)
{
    require_order(k);
    for (std::size_t n = 0; n <= window; ++n)
        if (!is_psd(hankel(w, n, k).matrix)) return {KHypVerdict::Status::FailedAt, k, window, n};
    return {KHypVerdict::Status::PassedWindow, k, window, 0};
}

bool PowerVerdict::passed() const
{
    for (const auto& v : pieces)
        if (!v.passed()) return false;
    return true;
}

PowerVerdict is_power_k_hyponormal_window(const WeightSequenceSq& w, std::size_t power, std::size_t k,
                                          std::size_t window)
{
    require_power(power);
    PowerVerdict out{power, {}};
    for (const auto& piece : power_decompose(w, power)) out.pieces.push_back(is_k_hyponormal_window(piece, k, window));
    return out;
}

namespace {

struct Border {
    SymMatrix inner;
    std::vector<Rational> edge;
};

Border border_blocks(const WeightSequenceSq& w, std::size_t power, std::size_t k)
{
    require_order(k);
    require_power(power);
    auto g = w.moments(2 * k * power);
    auto at = [&](std::size_t multiple) { return g[multiple * power - 1]; };
    auto inner = SymMatrix::generate(k, [&](std::size_t r, std::size_t c) { return at(r + c + 2); });
    std::vector<Rational> edge(k);
    for (std::size_t r = 0; r < k; ++r) edge[r] = at(r + 1);
    return {std::move(inner), std::move(edge)};
}

} // namespace

SymMatrix backstep_border_matrix(const WeightSequenceSq& w, std::size_t power, std::size_t k, const Rational& s)
{
    if (s <= 0) throw std::invalid_argument("back-step squared weight must be positive");
    Border b = border_blocks(w, power, k);
    return SymMatrix::generate(k + 1, [&](std::size_t r, std::size_t c) -> Rational {
        if (r == 0 && c == 0) return 1 / s;
        if (r == 0) return b.edge[c - 1];
        return b.inner(r - 1, c - 1);
    });
}

Threshold backstep_k_threshold(const WeightSequenceSq& w, std::size_t k)
{
    return power_backstep_k_threshold(w, 1, k);
}

Threshold power_backstep_k_threshold(const WeightSequenceSq& w, std::size_t power, std::size_t k)
{
    Border b = border_blocks(w, power, k);
    return psd_corner_threshold(b.inner, b.edge);
}

bool schur_preservation_check(const WeightSequenceSq& a, const WeightSequenceSq& b, std::size_t k, std::size_t window)
{
    require_order(k);
    const WeightSequenceSq ab = schur(a, b);
    for (std::size_t n = 0; n <= window; ++n) {
        const SymMatrix ma = hankel(a, n, k).matrix;
        const SymMatrix mb = hankel(b, n, k).matrix;
        const SymMatrix mab = hankel(ab, n, k).matrix;
        for (std::size_t r = 0; r <= k; ++r)
            for (std::size_t c = 0; c <= k; ++c)
                if (mab(r, c) != ma(r, c) * mb(r, c)) return false;
        if (is_psd(ma) && is_psd(mb) && !is_psd(mab)) return false;
    }
    return true;
}

} // namespace wshift
