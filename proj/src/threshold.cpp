#include "wshift/threshold.hpp"

#include <stdexcept>

namespace wshift {

const RealRoot& Threshold::value() const
{
    if (!value_) throw std::logic_error("threshold has no finite value");
    return *value_;
}

std::optional<Rational> Threshold::exact() const
{
    if (!value_) return std::nullopt;
    return value_->exact();
}

std::string Threshold::exact_string() const
{
    switch (kind_) {
    case Kind::Infinite: return "inf";
    case Kind::None: return "none";
    case Kind::Finite: break;
    }
    return value_->to_string();
}

std::string Threshold::approx_string(int places) const
{
    switch (kind_) {
    case Kind::Infinite: return "inf";
    case Kind::None: return to_decimal(Rational(0), places);
    case Kind::Finite: break;
    }
    return value_->to_decimal(places);
}

bool operator==(const Threshold& a, const Threshold& b)
{
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Threshold::Kind::Finite) return true;
    return *a.value_ == *b.value_;
}

Threshold min(const Threshold& a, const Threshold& b)
{
    using K = Threshold::Kind;
    if (a.kind() == K::None || b.kind() == K::None) return Threshold::none();
    if (a.kind() == K::Infinite) return b;
    if (b.kind() == K::Infinite) return a;
    return b.value() < a.value() ? b : a;
}

Threshold first_sign_exit(const UniPoly& p)
{
    if (p.is_zero()) return Threshold::infinite();
    // sign just right of 0 is the sign of the lowest nonzero coefficient
    std::size_t low = 0;
    while (p.coeff(low) == 0) ++low;
    if (p.coeff(low) < 0) return Threshold::none();
    UniPoly g = odd_multiplicity_part(p);
    if (g.degree() <= 0) return Threshold::infinite();
    auto roots = isolate_positive_roots(g);
    if (roots.empty()) return Threshold::infinite();
    return Threshold::finite(RealRoot(g, roots.front()));
}

} // namespace wshift
