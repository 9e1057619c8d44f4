#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo::polyring {

// Dense integer polynomial; index i holds the coefficient of x^i. Normal form
// keeps the top coefficient nonzero; the zero polynomial stores nothing and
// has no degree (degree() refuses it instead of handing out a -1 that could
// leak into index arithmetic).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);

    static IntPolynomial constant(mpz_class value);
    static IntPolynomial monomial(int degree, mpz_class coefficient = 1);
    // x^n - 1
    static IntPolynomial power_minus_one(int n);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const;
    bool is_monic() const;
    const mpz_class& coefficient(int i) const;
    const std::vector<mpz_class>& coefficients() const { return coefficients_; }
    mpz_class evaluate(const mpz_class& point) const;
    // Largest absolute coefficient; 0 for the zero polynomial.
    mpz_class height() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<mpz_class> coefficients_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial subtract(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial negate(const IntPolynomial& a);

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return add(a, b); }
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return subtract(a, b); }
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return multiply(a, b); }

// Exact quotient over the integers; throws NotDivisible (detail carries the
// residual degree) when a != b*q for every integer q, DivisionByZero for b = 0.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
bool divisible(const IntPolynomial& a, const IntPolynomial& b);

struct IntDivMod {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

// Euclidean division by a monic divisor; exact over the integers.
IntDivMod divmod_monic(const IntPolynomial& a, const IntPolynomial& b);

// f(x^t)
IntPolynomial substitute_power(const IntPolynomial& f, std::int64_t t);

// n-th cyclotomic polynomial. Square-free n is handled by dividing x^n - 1 by
// the product of the lower-index cyclotomics (memoized recursion); other n go
// through cyclotomic(radical(n)) composed with x^(n/n0).
IntPolynomial cyclotomic(std::int64_t n);

struct CyclotomicProfile {
    std::int64_t n = 1;
    IntPolynomial phi_n;
    std::int64_t totient = 1;
    std::int64_t radical = 1;
    mpz_class height;
    bool flat = false;
    // Number of distinct odd prime divisors of n.
    int order = 0;
};

CyclotomicProfile profile(std::int64_t n);

// Elementary symmetric functions e_1..e_count of the primitive n-th roots of
// unity via the power-sum recursion driven by Ramanujan sums; every division
// is checked exact (NonIntegralCoefficient would mean a bug, not bad input).
std::vector<mpz_class> newton_girard_coefficients(std::int64_t n, int count);

// Dense rational polynomial with canonicalized mpq coefficients; same normal
// form as IntPolynomial.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<mpq_class> coefficients);

    static RatPolynomial constant(mpq_class value);
    static RatPolynomial monomial(int degree, mpq_class coefficient = 1);
    static RatPolynomial from_integer(const IntPolynomial& f);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const;
    bool is_monic() const;
    const mpq_class& coefficient(int i) const;
    const std::vector<mpq_class>& coefficients() const { return coefficients_; }
    mpq_class evaluate(const mpq_class& point) const;
    bool is_integral() const;
    IntPolynomial to_integer() const;

    friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

private:
    std::vector<mpq_class> coefficients_;
};

RatPolynomial add(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial subtract(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial multiply(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial scale(const RatPolynomial& a, const mpq_class& c);

inline RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) { return add(a, b); }
inline RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return subtract(a, b); }
inline RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) { return multiply(a, b); }

struct RatDivMod {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

RatDivMod divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic(const RatPolynomial& a);
RatPolynomial derivative(const RatPolynomial& a);

// Monic gcd by the Euclidean algorithm, remainder normalized monic at every
// step so the result is canonical.
RatPolynomial gcd_monic(const RatPolynomial& a, const RatPolynomial& b);

// Monic f / gcd(f, f'); rejects the zero polynomial.
RatPolynomial squarefree_part(const RatPolynomial& f);

// Conventional descending notation, e.g. "x^2 - x + 1".
std::string to_pretty_string(const IntPolynomial& f);
std::string to_pretty_string(const RatPolynomial& f);

}  // namespace cyclo::polyring
