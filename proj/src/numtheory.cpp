#include "cyclo/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyclo/error.hpp"

namespace cyclo::numtheory {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) {
        throw DomainError("InvalidArgument",
                          std::string(what) + " must be a positive integer, got " + std::to_string(n));
    }
}

}  // namespace

std::int64_t FactorizationMap::value() const {
    std::int64_t v = 1;
    for (const auto& pp : entries) {
        for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
    }
    return v;
}

FactorizationMap factorize(std::int64_t n) {
    require_positive(n, "n");
    FactorizationMap out;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.entries.push_back({p, e});
    }
    if (rest > 1) out.entries.push_back({rest, 1});
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

bool is_prime_power(std::int64_t n) {
    if (n < 2) return false;
    return factorize(n).entries.size() == 1;
}

int mobius(std::int64_t n) {
    require_positive(n, "n");
    const auto f = factorize(n);
    for (const auto& pp : f.entries) {
        if (pp.exponent > 1) return 0;
    }
    return f.entries.size() % 2 == 0 ? 1 : -1;
}

std::int64_t totient(std::int64_t n) {
    require_positive(n, "n");
    std::int64_t phi = n;
    for (const auto& pp : factorize(n).entries) {
        phi -= phi / pp.prime;
    }
    return phi;
}

std::int64_t radical(std::int64_t n) {
    require_positive(n, "n");
    std::int64_t r = 1;
    for (const auto& pp : factorize(n).entries) r *= pp.prime;
    return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "n");
    std::vector<std::int64_t> out{1};
    for (const auto& pp : factorize(n).entries) {
        const std::size_t base = out.size();
        std::int64_t q = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

UnitSet unit_set(std::int64_t n) {
    require_positive(n, "n");
    UnitSet u;
    u.modulus = n;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) u.members.push_back(k);
    }
    return u;
}

std::int64_t power_mod(std::int64_t base, std::int64_t exponent, std::int64_t modulus) {
    require_positive(modulus, "modulus");
    if (exponent < 0) throw DomainError("InvalidArgument", "negative exponent");
    std::int64_t result = 1 % modulus;
    std::int64_t b = ((base % modulus) + modulus) % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return result;
}

std::int64_t primitive_root(std::int64_t p) {
    if (p == 2 || !is_prime(p)) {
        throw DomainError("InvalidArgument",
                          "primitive_root requires an odd prime, got " + std::to_string(p));
    }
    const auto prime_divisors = factorize(p - 1).entries;
    for (std::int64_t a = 2; a < p; ++a) {
        bool generates = true;
        for (const auto& pp : prime_divisors) {
            if (power_mod(a, (p - 1) / pp.prime, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return a;
    }
    throw DomainError("InternalCheckFailed", "no generator found mod " + std::to_string(p));
}

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t m) {
    require_positive(n, "n");
    if (m < 0) throw DomainError("InvalidArgument", "m must be non-negative");
    const std::int64_t d = m == 0 ? n : std::gcd(m, n);
    const int mu = mobius(n / d);
    if (mu == 0) return 0;
    return mu * (totient(n) / totient(n / d));
}

}  // namespace cyclo::numtheory
