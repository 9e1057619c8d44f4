#include "cyclo/polyring.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo::polyring {

namespace {

template <typename Coeff>
void strip_trailing_zeros(std::vector<Coeff>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

[[noreturn]] void throw_zero_degree() {
    throw std::logic_error("degree of the zero polynomial is undefined");
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
    strip_trailing_zeros(coefficients_);
}

IntPolynomial IntPolynomial::constant(mpz_class value) {
    return IntPolynomial(std::vector<mpz_class>{std::move(value)});
}

IntPolynomial IntPolynomial::monomial(int degree, mpz_class coefficient) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::power_minus_one(int n) {
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, 0);
    c.front() = -1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

int IntPolynomial::degree() const {
    if (is_zero()) throw_zero_degree();
    return static_cast<int>(coefficients_.size()) - 1;
}

bool IntPolynomial::is_monic() const {
    return !is_zero() && coefficients_.back() == 1;
}

const mpz_class& IntPolynomial::coefficient(int i) const {
    static const mpz_class zero = 0;
    if (i < 0 || static_cast<std::size_t>(i) >= coefficients_.size()) return zero;
    return coefficients_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::evaluate(const mpz_class& point) const {
    mpz_class acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

mpz_class IntPolynomial::height() const {
    mpz_class h = 0;
    for (const auto& c : coefficients_) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] = a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] += b.coefficients()[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial subtract(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] = a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] -= b.coefficients()[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(a.coefficients().size() + b.coefficients().size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
            c[i + j] += a.coefficients()[i] * b.coefficients()[j];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial negate(const IntPolynomial& a) {
    std::vector<mpz_class> c = a.coefficients();
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

namespace {

struct TryDivide {
    bool exact = false;
    IntPolynomial quotient;
    int residual_degree = 0;
};

// Synthetic division over Z. If a = b*q for an integer q, every leading
// coefficient step divides exactly and the residual vanishes; any failed step
// certifies there is no integer quotient.
TryDivide try_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("DivisionByZero", "division by the zero polynomial");
    if (a.is_zero()) return {true, IntPolynomial(), 0};

    std::vector<mpz_class> rem = a.coefficients();
    const int db = b.degree();
    const mpz_class& lead = b.coefficient(db);

    auto rem_degree = [&rem]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };

    int dr = rem_degree();
    if (dr < db) return {false, IntPolynomial(), dr};

    std::vector<mpz_class> quot(static_cast<std::size_t>(dr - db) + 1, 0);
    while (dr >= db) {
        mpz_class& top = rem[static_cast<std::size_t>(dr)];
        if (top % lead != 0) return {false, IntPolynomial(), dr};
        mpz_class factor = top / lead;
        const int shift = dr - db;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(i + shift)] -= factor * b.coefficient(i);
        }
        quot[static_cast<std::size_t>(shift)] = std::move(factor);
        dr = rem_degree();
    }
    if (dr >= 0) return {false, IntPolynomial(), dr};
    return {true, IntPolynomial(std::move(quot)), 0};
}

}  // namespace

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    auto r = try_divide(a, b);
    if (!r.exact) {
        throw DomainError("NotDivisible",
                          "nonzero residual of degree " + std::to_string(r.residual_degree));
    }
    return r.quotient;
}

bool divisible(const IntPolynomial& a, const IntPolynomial& b) {
    return try_divide(a, b).exact;
}

IntDivMod divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
    if (!b.is_monic()) throw std::logic_error("divmod_monic requires a monic divisor");
    const int db = b.degree();
    std::vector<mpz_class> rem = a.coefficients();
    if (static_cast<int>(rem.size()) - 1 < db) return {IntPolynomial(), a};

    std::vector<mpz_class> quot(rem.size() - static_cast<std::size_t>(db), 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        mpz_class factor = rem[static_cast<std::size_t>(d)];
        if (factor == 0) continue;
        const int shift = d - db;
        for (int i = 0; i < db; ++i) {
            rem[static_cast<std::size_t>(i + shift)] -= factor * b.coefficient(i);
        }
        rem[static_cast<std::size_t>(d)] = 0;
        quot[static_cast<std::size_t>(shift)] = std::move(factor);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial substitute_power(const IntPolynomial& f, std::int64_t t) {
    if (t < 1) throw DomainError("InvalidArgument", "substitution power must be >= 1");
    if (f.is_zero() || t == 1) return f;
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(t) + 1, 0);
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        c[i * static_cast<std::size_t>(t)] = f.coefficients()[i];
    }
    return IntPolynomial(std::move(c));
}

namespace {

// Memo for cyclotomic(); entries are immutable once inserted. Duplicate
// concurrent computation yields identical polynomials, so losing an insertion
// race is harmless.
std::map<std::int64_t, IntPolynomial>& cyclotomic_cache() {
    static std::map<std::int64_t, IntPolynomial> cache;
    return cache;
}

std::mutex& cyclotomic_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

IntPolynomial cyclotomic(std::int64_t n) {
    if (n < 1) throw DomainError("InvalidArgument", "cyclotomic index must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cyclotomic_mutex());
        auto it = cyclotomic_cache().find(n);
        if (it != cyclotomic_cache().end()) return it->second;
    }

    IntPolynomial result;
    if (n == 1) {
        result = IntPolynomial(std::vector<mpz_class>{-1, 1});
    } else {
        const std::int64_t n0 = numtheory::radical(n);
        if (n0 < n) {
            result = substitute_power(cyclotomic(n0), n / n0);
        } else {
            IntPolynomial lower = IntPolynomial::constant(1);
            for (std::int64_t d : numtheory::divisors(n)) {
                if (d < n) lower = multiply(lower, cyclotomic(d));
            }
            result = divide_exact(IntPolynomial::power_minus_one(static_cast<int>(n)), lower);
        }
    }

    std::lock_guard<std::mutex> lock(cyclotomic_mutex());
    return cyclotomic_cache().emplace(n, std::move(result)).first->second;
}

CyclotomicProfile profile(std::int64_t n) {
    CyclotomicProfile p;
    p.n = n;
    p.phi_n = cyclotomic(n);
    p.totient = numtheory::totient(n);
    p.radical = numtheory::radical(n);
    p.height = p.phi_n.height();
    p.flat = p.height == 1;
    p.order = 0;
    for (const auto& pp : numtheory::factorize(n).entries) {
        if (pp.prime % 2 == 1) ++p.order;
    }
    return p;
}

std::vector<mpz_class> newton_girard_coefficients(std::int64_t n, int count) {
    if (count < 1) throw DomainError("InvalidArgument", "count must be >= 1");
    if (count > numtheory::totient(n)) {
        throw DomainError("InvalidArgument", "count exceeds totient(n)");
    }
    std::vector<mpz_class> e(static_cast<std::size_t>(count) + 1);
    e[0] = 1;
    for (int m = 1; m <= count; ++m) {
        // m*e_m = sum_{j=1..m} (-1)^(j-1) e_{m-j} c_n(j)
        mpz_class acc = 0;
        for (int j = 1; j <= m; ++j) {
            mpz_class term = e[static_cast<std::size_t>(m - j)] * numtheory::ramanujan_sum(n, j);
            if (j % 2 == 0) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if (acc % m != 0) {
            throw DomainError("NonIntegralCoefficient",
                              "e_" + std::to_string(m) + " recursion did not divide by " +
                                  std::to_string(m));
        }
        e[static_cast<std::size_t>(m)] = acc / m;
    }
    e.erase(e.begin());
    return e;
}

RatPolynomial::RatPolynomial(std::vector<mpq_class> coefficients)
    : coefficients_(std::move(coefficients)) {
    for (auto& c : coefficients_) c.canonicalize();
    strip_trailing_zeros(coefficients_);
}

RatPolynomial RatPolynomial::constant(mpq_class value) {
    return RatPolynomial(std::vector<mpq_class>{std::move(value)});
}

RatPolynomial RatPolynomial::monomial(int degree, mpq_class coefficient) {
    std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1, mpq_class(0));
    c.back() = std::move(coefficient);
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::from_integer(const IntPolynomial& f) {
    std::vector<mpq_class> c;
    c.reserve(f.coefficients().size());
    for (const auto& x : f.coefficients()) c.emplace_back(x);
    return RatPolynomial(std::move(c));
}

int RatPolynomial::degree() const {
    if (is_zero()) throw_zero_degree();
    return static_cast<int>(coefficients_.size()) - 1;
}

bool RatPolynomial::is_monic() const {
    return !is_zero() && coefficients_.back() == 1;
}

const mpq_class& RatPolynomial::coefficient(int i) const {
    static const mpq_class zero = 0;
    if (i < 0 || static_cast<std::size_t>(i) >= coefficients_.size()) return zero;
    return coefficients_[static_cast<std::size_t>(i)];
}

mpq_class RatPolynomial::evaluate(const mpq_class& point) const {
    mpq_class acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

bool RatPolynomial::is_integral() const {
    for (const auto& c : coefficients_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

IntPolynomial RatPolynomial::to_integer() const {
    std::vector<mpz_class> c;
    c.reserve(coefficients_.size());
    for (const auto& x : coefficients_) {
        if (x.get_den() != 1) throw std::logic_error("to_integer on a non-integral polynomial");
        c.push_back(x.get_num());
    }
    return IntPolynomial(std::move(c));
}

RatPolynomial add(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<mpq_class> c(std::max(a.coefficients().size(), b.coefficients().size()),
                             mpq_class(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] = a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] += b.coefficients()[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial subtract(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<mpq_class> c(std::max(a.coefficients().size(), b.coefficients().size()),
                             mpq_class(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] = a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] -= b.coefficients()[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial multiply(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RatPolynomial();
    std::vector<mpq_class> c(a.coefficients().size() + b.coefficients().size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
            c[i + j] += a.coefficients()[i] * b.coefficients()[j];
        }
    }
    return RatPolynomial(std::move(c));
}

RatPolynomial scale(const RatPolynomial& a, const mpq_class& c) {
    std::vector<mpq_class> out = a.coefficients();
    for (auto& x : out) x *= c;
    return RatPolynomial(std::move(out));
}

RatDivMod divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw DomainError("DivisionByZero", "division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree()) return {RatPolynomial(), a};

    std::vector<mpq_class> rem = a.coefficients();
    const int db = b.degree();
    const mpq_class& lead = b.coefficient(db);
    std::vector<mpq_class> quot(rem.size() - static_cast<std::size_t>(db), mpq_class(0));
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        mpq_class factor = rem[static_cast<std::size_t>(d)] / lead;
        if (factor == 0) continue;
        const int shift = d - db;
        for (int i = 0; i < db; ++i) {
            rem[static_cast<std::size_t>(i + shift)] -= factor * b.coefficient(i);
        }
        rem[static_cast<std::size_t>(d)] = 0;
        quot[static_cast<std::size_t>(shift)] = std::move(factor);
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial monic(const RatPolynomial& a) {
    if (a.is_zero()) return a;
    const mpq_class& lead = a.coefficient(a.degree());
    if (lead == 1) return a;
    return scale(a, mpq_class(1) / lead);
}

RatPolynomial derivative(const RatPolynomial& a) {
    if (a.is_zero() || a.degree() == 0) return RatPolynomial();
    std::vector<mpq_class> c(static_cast<std::size_t>(a.degree()), mpq_class(0));
    for (int i = 1; i <= a.degree(); ++i) {
        c[static_cast<std::size_t>(i - 1)] = a.coefficient(i) * i;
    }
    return RatPolynomial(std::move(c));
}

RatPolynomial gcd_monic(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial f = monic(a);
    RatPolynomial g = monic(b);
    while (!g.is_zero()) {
        RatPolynomial r = monic(divmod(f, g).remainder);
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) throw DomainError("ZeroPolynomial", "gcd of two zero polynomials");
    return f;
}

RatPolynomial squarefree_part(const RatPolynomial& f) {
    if (f.is_zero()) throw DomainError("ZeroPolynomial", "squarefree part of the zero polynomial");
    if (f.degree() == 0) return RatPolynomial::constant(1);
    const RatPolynomial g = gcd_monic(f, derivative(f));
    const auto qr = divmod(monic(f), g);
    // g divides f by construction
    if (!qr.remainder.is_zero()) {
        throw std::logic_error("gcd failed to divide its argument");
    }
    return monic(qr.quotient);
}

namespace {

template <typename Poly, typename CoeffToString>
std::string pretty(const Poly& f, CoeffToString coeff_str) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const auto& c = f.coefficient(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        std::string mag = coeff_str(negative ? decltype(c)(-c) : c);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = mag == "1";
        if (i == 0) {
            out << mag;
        } else {
            if (!unit) out << mag << " ";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace

std::string to_pretty_string(const IntPolynomial& f) {
    return pretty(f, [](const mpz_class& c) { return c.get_str(); });
}

std::string to_pretty_string(const RatPolynomial& f) {
    return pretty(f, [](const mpq_class& c) {
        return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
    });
}

}  // namespace cyclo::polyring
