#pragma once

// Scalar fields used throughout the library: exact rationals (the default)
// and residues modulo a prime selected once per run.

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace qhh {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;

bool is_prime(std::uint64_t n);

/**
 * Element of the prime field Z/pZ.
 *
 * The modulus is process-wide: call ModP::set_modulus once before any
 * computation (the CLI does this when `--field p` is given). Values are kept
 * in [0, p).
 */
class ModP
{
public:
    ModP() = default;
    ModP(long long v);  // NOLINT(google-explicit-constructor): Eigen needs Scalar(0), Scalar(1)

    static void set_modulus(std::uint32_t p);
    static std::uint32_t modulus() { return p_; }

    std::uint32_t value() const { return v_; }
    ModP inverse() const;

    ModP operator-() const;
    ModP& operator+=(const ModP& o);
    ModP& operator-=(const ModP& o);
    ModP& operator*=(const ModP& o);
    ModP& operator/=(const ModP& o);

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }

private:
    std::uint32_t v_ = 0;
    static inline std::uint32_t p_ = 2147483647u;
};

std::ostream& operator<<(std::ostream& os, const ModP& x);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.value() == 0; }

std::string to_string(const Rational& x);
std::string to_string(const ModP& x);

/// Image of a rational in the field S. Throws std::domain_error when the
/// denominator vanishes in S.
template <typename S>
S from_rational(const Rational& q);

template <>
Rational from_rational<Rational>(const Rational& q);
template <>
ModP from_rational<ModP>(const Rational& q);

}  // namespace qhh

namespace Eigen {

template <>
struct NumTraits<qhh::ModP>
{
    using Real = qhh::ModP;
    using NonInteger = qhh::ModP;
    using Literal = qhh::ModP;
    using Nested = qhh::ModP;

    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
