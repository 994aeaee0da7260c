#include "qhh/field.hpp"

#include <ostream>
#include <stdexcept>

namespace qhh {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

ModP::ModP(long long v)
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    v_ = static_cast<std::uint32_t>(r);
}

void ModP::set_modulus(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    p_ = p;
}

ModP ModP::inverse() const
{
    if (v_ == 0)
        throw std::domain_error("division by zero in prime field");
    // Fermat: v^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e > 0)
    {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    ModP r;
    r.v_ = static_cast<std::uint32_t>(result);
    return r;
}

ModP ModP::operator-() const
{
    ModP r;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

ModP& ModP::operator+=(const ModP& o)
{
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
}

ModP& ModP::operator-=(const ModP& o)
{
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
    return *this;
}

ModP& ModP::operator*=(const ModP& o)
{
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
}

ModP& ModP::operator/=(const ModP& o)
{
    return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const ModP& x)
{
    return os << x.value();
}

std::string to_string(const Rational& x)
{
    return x.str();
}

std::string to_string(const ModP& x)
{
    return std::to_string(x.value());
}

template <>
Rational from_rational<Rational>(const Rational& q)
{
    return q;
}

template <>
ModP from_rational<ModP>(const Rational& q)
{
    using boost::multiprecision::mpz_int;
    const mpz_int p = ModP::modulus();
    mpz_int num = boost::multiprecision::numerator(q) % p;
    mpz_int den = boost::multiprecision::denominator(q) % p;
    if (num < 0)
        num += p;
    if (den == 0)
        throw std::domain_error("denominator of " + q.str() + " vanishes modulo " + p.str());
    return ModP(num.convert_to<long long>()) / ModP(den.convert_to<long long>());
}

}  // namespace qhh
