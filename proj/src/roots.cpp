#include "wshift/roots.hpp"

#include "wshift/errors.hpp"

#include <algorithm>
#include <functional>

namespace wshift {

std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    std::vector<UniPoly> chain;
    UniPoly head = square_free_part(p);
    if (head.is_zero()) return chain;
    chain.push_back(head);
    UniPoly next = head.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        UniPoly rem = divmod(chain[chain.size() - 2], chain.back()).second;
        next = -rem;
    }
    return chain;
}

namespace {

std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& x)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

std::size_t sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b)
{
    if (chain.empty() || !(a < b)) return 0;
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational root_bound(const UniPoly& p)
{
    if (p.degree() <= 0) return 1;
    Rational lead = abs(p.leading());
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p.coeff(static_cast<std::size_t>(i))) / lead);
    return 1 + m;
}

namespace {

// Point strictly inside (a, b) that is not a root of p.
Rational non_root_split(const UniPoly& p, const Rational& a, const Rational& b)
{
    for (long k = 2;; ++k) {
        Rational m = a + (b - a) / k;
        if (p.sign_at(m) != 0) return m;
    }
}

void isolate(const UniPoly& p, const std::vector<UniPoly>& chain, Rational a, Rational b,
             std::size_t count, std::vector<RootInterval>& out)
{
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b});
        return;
    }
    Rational m = non_root_split(p, a, b);
    std::size_t left = sturm_count(chain, a, m);
    isolate(p, chain, a, m, left, out);
    isolate(p, chain, m, b, count - left, out);
}

std::vector<RootInterval> isolate_open_ray(const UniPoly& p)
{
    auto chain = sturm_sequence(p);
    const UniPoly& sf = chain.front();
    Rational bound = root_bound(sf);
    std::vector<RootInterval> out;
    isolate(sf, chain, 0, bound, sturm_count(chain, 0, bound), out);
    // the first interval may still touch 0 when 0 is itself a root
    if (!out.empty() && out.front().lo == 0 && sf.sign_at(0) == 0) {
        RootInterval& first = out.front();
        while (first.lo == 0) {
            Rational m = non_root_split(sf, first.lo, first.hi);
            if (sturm_count(chain, 0, m) == 0) first.lo = m;
            else first.hi = m;
        }
    }
    // exact rational roots collapse to degenerate intervals
    for (auto& iv : out) {
        RealRoot r(sf, iv);
        if (r.exact()) iv = {*r.exact(), *r.exact()};
    }
    return out;
}

} // namespace

std::vector<RootInterval> isolate_positive_roots(const UniPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomialError("cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};
    return isolate_open_ray(p);
}

std::vector<RootInterval> isolate_nonneg_roots(const UniPoly& p)
{
    auto positive = isolate_positive_roots(p);
    if (p.sign_at(0) == 0) positive.insert(positive.begin(), RootInterval{0, 0});
    return positive;
}

bool nonneg_on_ray(const UniPoly& p)
{
    if (p.is_zero()) return true;
    if (p.leading() < 0) return false;
    // p = lc * g * h^2 with g the odd-multiplicity part: p keeps its sign on
    // (0, inf) exactly when g has no root there.
    UniPoly g = odd_multiplicity_part(p);
    if (g.degree() <= 0) return true;
    auto chain = sturm_sequence(g);
    return sturm_count(chain, 0, root_bound(g)) == 0;
}

RealRoot::RealRoot(const Rational& value) : poly_(UniPoly({-value, 1})), lo_(value), hi_(value), exact_(value) {}

RealRoot::RealRoot(const UniPoly& poly, const RootInterval& where)
    : poly_(square_free_part(poly)), lo_(where.lo), hi_(where.hi)
{
    if (lo_ == hi_) {
        exact_ = lo_;
        return;
    }
    try_rationalize();
}

void RealRoot::bisect_once()
{
    Rational m = (lo_ + hi_) / 2;
    int sm = poly_.sign_at(m);
    if (sm == 0) {
        lo_ = hi_ = m;
        exact_ = m;
        return;
    }
    if (sm == poly_.sign_at(lo_)) lo_ = m;
    else hi_ = m;
}

void RealRoot::try_rationalize()
{
    if (poly_.degree() == 1) {
        Rational r = -poly_.coeff(0) / poly_.coeff(1);
        lo_ = hi_ = r;
        exact_ = r;
        return;
    }
    // A rational root p/q of a primitive integer polynomial has q | a_n, so
    // a_n * root is an integer. Shrink until at most one candidate remains.
    auto ints = primitive_integer_coeffs(poly_);
    Rational lead(ints.back());
    while (!exact_ && (hi_ - lo_) * lead >= 1) bisect_once();
    if (exact_) return;
    Integer lo_scaled;
    Rational scaled_lo = lo_ * lead;
    mpz_cdiv_q(lo_scaled.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
    Rational candidate = make_rational(lo_scaled, ints.back());
    if (candidate > lo_ && candidate < hi_ && poly_.sign_at(candidate) == 0) {
        lo_ = hi_ = candidate;
        exact_ = candidate;
    }
}

RealRoot RealRoot::refined(const Rational& width) const
{
    RealRoot out = *this;
    while (!out.exact_ && out.hi_ - out.lo_ >= width) out.bisect_once();
    return out;
}

std::string RealRoot::to_decimal(int places) const
{
    if (exact_) return wshift::to_decimal(*exact_, places);
    Rational width = 1;
    for (int i = 0; i < places + 2; ++i) width /= 10;
    RealRoot r = refined(width);
    return wshift::to_decimal((r.lo_ + r.hi_) / 2, places);
}

std::string RealRoot::to_string() const
{
    if (exact_) return wshift::to_string(*exact_);
    return "root of " + poly_.to_string() + " in (" + wshift::to_string(lo_) + ", " + wshift::to_string(hi_) + ")";
}

std::strong_ordering operator<=>(const RealRoot& a, const RealRoot& b)
{
    if (a.exact_ && b.exact_) {
        int c = cmp(*a.exact_, *b.exact_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    RealRoot x = a, y = b;
    if (!x.exact_ && !y.exact_) {
        // equal iff a common factor has a root inside both isolating intervals
        Rational lo = std::max(x.lo_, y.lo_);
        Rational hi = std::min(x.hi_, y.hi_);
        if (lo < hi) {
            UniPoly g = gcd(x.poly_, y.poly_);
            if (g.degree() > 0) {
                auto chain = sturm_sequence(g);
                std::size_t inside = sturm_count(chain, lo, hi) - (g.sign_at(hi) == 0 ? 1 : 0);
                if (inside > 0) return std::strong_ordering::equal;
            }
        }
    }
    // distinct numbers: refine until the intervals separate
    for (;;) {
        if (x.hi_ < y.lo_ || (x.hi_ == y.lo_ && !(x.exact_ && y.exact_))) return std::strong_ordering::less;
        if (y.hi_ < x.lo_ || (y.hi_ == x.lo_ && !(x.exact_ && y.exact_))) return std::strong_ordering::greater;
        if (!x.exact_) x.bisect_once();
        if (!y.exact_) y.bisect_once();
    }
}

} // namespace wshift
