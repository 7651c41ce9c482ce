#include "wshift/unipoly.hpp"

#include <stdexcept>

namespace wshift {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var))
{
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var)
{
    return UniPoly({c}, std::move(var));
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree, std::string var)
{
    std::vector<Rational> cs(degree + 1);
    cs[degree] = c;
    return UniPoly(std::move(cs), std::move(var));
}

Rational UniPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UniPoly::sign_at(const Rational& x) const
{
    return sgn((*this)(x));
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1) return UniPoly({}, var_);
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d), var_);
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void UniPoly::adopt_var(const UniPoly& other)
{
    if (coeffs_.empty() && !other.coeffs_.empty()) var_ = other.var_;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs)
{
    adopt_var(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs)
{
    adopt_var(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs)
{
    adopt_var(rhs);
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

UniPoly operator-(UniPoly a)
{
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::string UniPoly::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = (mag == 1 && k > 0);
        if (!unit) out += wshift::to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += var_;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UniPoly({}, a.var()), a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
    const Rational lb = b.leading();
    for (int k = da - db; k >= 0; --k) {
        Rational f = rem[static_cast<std::size_t>(k + db)] / lb;
        quot[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly monic(const UniPoly& p)
{
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& p)
{
    if (p.degree() <= 0) return {};
    std::vector<UniPoly> factors;
    UniPoly a = monic(p);
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = divmod(a, c).first;
    UniPoly y = divmod(b, c).first;
    UniPoly z = y - w.derivative();
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        factors.push_back(g);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = y - w.derivative();
    }
    return factors;
}

UniPoly odd_multiplicity_part(const UniPoly& p)
{
    UniPoly out = UniPoly::constant(1, p.var());
    auto factors = square_free_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); i += 2) out *= factors[i];
    return out;
}

UniPoly square_free_part(const UniPoly& p)
{
    if (p.degree() <= 0) return monic(p);
    return monic(divmod(p, gcd(p, p.derivative())).first);
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& p)
{
    Integer lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (g == 0) return out;
    if (!out.empty() && out.back() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

} // namespace wshift
