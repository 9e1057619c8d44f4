#pragma once

#include <cstdint>
#include <vector>

namespace cyclo::numtheory {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes strictly increasing and every exponent >= 1.
// factorize(1) is the empty map.
struct FactorizationMap {
    std::vector<PrimePower> entries;

    std::int64_t value() const;
    friend bool operator==(const FactorizationMap&, const FactorizationMap&) = default;
};

FactorizationMap factorize(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_prime_power(std::int64_t n);

int mobius(std::int64_t n);
std::int64_t totient(std::int64_t n);
std::int64_t radical(std::int64_t n);

// Divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Units of Z_n in [1, n], sorted; {1} for n = 1.
struct UnitSet {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> members;
};

UnitSet unit_set(std::int64_t n);

std::int64_t power_mod(std::int64_t base, std::int64_t exponent, std::int64_t modulus);

// Smallest generator of Z_p^*; p must be an odd prime.
std::int64_t primitive_root(std::int64_t p);

// c_n(m) = mu(n/d) * phi(n) / phi(n/d) with d = gcd(m, n) and gcd(0, n) = n,
// so c_n(0) = phi(n) and c_n(1) = mu(n).
std::int64_t ramanujan_sum(std::int64_t n, std::int64_t m);

}  // namespace cyclo::numtheory
