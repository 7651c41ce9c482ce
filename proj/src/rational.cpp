#include "wshift/rational.hpp"

#include "wshift/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace wshift {

Rational make_rational(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("", "not an exact fraction \"" + std::string(text) + "\" (expected p or p/q)");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
    if (negative) n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

std::string to_decimal(const Rational& q, int places)
{
    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Integer num = abs(q.get_num()) * scale;
    const Integer& den = q.get_den();
    // round half away from zero: floor((2 num + den) / (2 den))
    Integer scaled = (2 * num + den) / (2 * den);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string out = (sgn(q) < 0 && scaled != 0) ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += '.';
        out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

Rational pow(const Rational& base, unsigned long exponent)
{
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rational(n, d);  // already canonical: gcd(n^e, d^e) = 1
}

int sign(const Rational& q)
{
    return sgn(q);
}

} // namespace wshift
