#include "hgmod/rational.hpp"

#include "hgmod/errors.hpp"

#include <cctype>

namespace hgmod {

namespace {

bool valid_integer_text(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
    std::string n(num[0] == '+' ? num.substr(1) : num);
    Integer numerator(n);
    Integer denominator{std::string(den)};
    if (denominator == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int p_valuation(const Integer& x, long p)
{
    if (x == 0) throw Error(ErrorKind::ZeroElement, "valuation of zero");
    Integer y = abs(x);
    int v = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
        y /= p;
        ++v;
    }
    return v;
}

int p_valuation(const Rational& x, long p)
{
    return p_valuation(x.get_num(), p) - p_valuation(x.get_den(), p);
}

bool is_p_integral(const Rational& x, long p)
{
    return !mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p));
}

bool is_p_integral(const Vector& v, long p)
{
    for (const auto& c : v)
        if (!is_p_integral(c, p)) return false;
    return true;
}

Integer pow_int(long base, unsigned exponent)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exponent);
    return r;
}

Integer residue_mod_prime_power(const Rational& c, long p, unsigned k)
{
    Integer m = pow_int(p, k);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), m.get_mpz_t()) == 0 && m != 1)
        throw Error(ErrorKind::NotInvertible, "denominator not prime to p");
    Integer r = c.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

long residue_mod_p(const Rational& c, long p)
{
    return residue_mod_prime_power(c, p, 1).get_si();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b)
{
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

Vector operator*(const Rational& s, const Vector& v)
{
    Vector r(v);
    for (auto& c : r) c *= s;
    return r;
}

Rational dot(const Vector& a, const Vector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.at(i);
    return s;
}

std::vector<std::string> to_strings(const Vector& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

} // namespace hgmod
