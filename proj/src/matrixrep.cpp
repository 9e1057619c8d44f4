#include "cyclo/matrixrep.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo::matrixrep {

using polyring::IntPolynomial;
using polyring::RatPolynomial;

CirculantMatrix make_circulant(std::int64_t order, IntPolynomial representer) {
    if (order < 1) throw DomainError("InvalidArgument", "circulant order must be >= 1");
    if (!representer.is_zero() && representer.degree() >= order) {
        throw DomainError("InvalidArgument", "representer degree must be below the order");
    }
    return {order, std::move(representer)};
}

CompanionMatrix make_companion(IntPolynomial monic) {
    if (monic.is_zero() || !monic.is_monic() || monic.degree() < 1) {
        throw DomainError("InvalidArgument", "companion matrix requires a monic polynomial of degree >= 1");
    }
    return {std::move(monic)};
}

CayleyDigraph make_cayley(std::int64_t modulus, std::vector<std::int64_t> connection) {
    if (modulus < 2) throw DomainError("InvalidArgument", "Cayley digraph modulus must be >= 2");
    std::sort(connection.begin(), connection.end());
    connection.erase(std::unique(connection.begin(), connection.end()), connection.end());
    if (connection.empty()) {
        throw DomainError("InvalidArgument", "connection set must be non-empty");
    }
    if (connection.front() < 1 || connection.back() >= modulus) {
        throw DomainError("InvalidArgument", "connection set must lie in [1, n-1]");
    }
    return {modulus, std::move(connection)};
}

DenseRatMatrix::DenseRatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), mpq_class(0)) {}

DenseRatMatrix DenseRatMatrix::identity(int n) {
    DenseRatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseRatMatrix DenseRatMatrix::all_ones(int n) {
    DenseRatMatrix m(n, n);
    for (auto& e : m.entries()) e = 1;
    return m;
}

DenseRatMatrix multiply(const DenseRatMatrix& a, const DenseRatMatrix& b) {
    if (a.cols() != b.rows()) throw std::logic_error("matrix dimension mismatch");
    DenseRatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const mpq_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

DenseRatMatrix add(const DenseRatMatrix& a, const DenseRatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::logic_error("matrix dimension mismatch");
    }
    DenseRatMatrix c = a;
    for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] += b.entries()[i];
    return c;
}

DenseRatMatrix scale(const DenseRatMatrix& a, const mpq_class& c) {
    DenseRatMatrix out = a;
    for (auto& e : out.entries()) e *= c;
    return out;
}

DenseRatMatrix dense(const CirculantMatrix& c) {
    const int n = static_cast<int>(c.order);
    DenseRatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = c.representer.coefficient(((j - i) % n + n) % n);
        }
    }
    return m;
}

DenseRatMatrix dense(const CompanionMatrix& c) {
    const int n = c.monic.degree();
    DenseRatMatrix m(n, n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    // last row holds -a_0, ..., -a_{n-1} for f = x^n + a_{n-1} x^{n-1} + ... + a_0
    for (int j = 0; j < n; ++j) m.at(n - 1, j) = -c.monic.coefficient(j);
    return m;
}

DenseRatMatrix dense(const CayleyDigraph& c) {
    IntPolynomial g;
    for (std::int64_t s : c.connection) {
        g = add(g, IntPolynomial::monomial(static_cast<int>(s)));
    }
    return dense(CirculantMatrix{c.modulus, std::move(g)});
}

DenseRatMatrix evaluate(const RatPolynomial& p, const DenseRatMatrix& m) {
    if (!m.is_square()) throw std::logic_error("polynomial of a non-square matrix");
    DenseRatMatrix acc(m.rows(), m.cols());
    if (p.is_zero()) return acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = multiply(acc, m);
        if (p.coefficient(i) != 0) {
            for (int d = 0; d < m.rows(); ++d) acc.at(d, d) += p.coefficient(i);
        }
    }
    return acc;
}

namespace {

// Incremental exact elimination over Q kept in integers: rows are scaled to
// integer vectors, cross-multiplied against stored pivot rows, and divided by
// their content. The augmented part tracks the integer combination of the
// pushed vectors, so the first dependent vector yields exact dependence
// coefficients.
class DependenceFinder {
public:
    explicit DependenceFinder(std::size_t dimension) : dim_(dimension) {}

    // Returns the dependence c_0..c_k (c_k != 0, sum_i c_i v_i = 0) once the
    // pushed vector is dependent on its predecessors; empty otherwise.
    std::optional<std::vector<mpz_class>> push(const std::vector<mpq_class>& v) {
        if (v.size() != dim_) throw std::logic_error("dimension mismatch in DependenceFinder");
        const std::size_t index = pushed_++;

        mpz_class denom = 1;
        for (const auto& q : v) denom = lcm(denom, q.get_den());

        Row row;
        row.vec.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            row.vec[i] = v[i].get_num() * (denom / v[i].get_den());
        }
        row.aug.assign(index + 1, 0);
        row.aug[index] = denom;

        // forward reduction: stored rows are clean at each other's pivots,
        // so one pass per stored row suffices
        for (const Row& r : rows_) {
            eliminate(row, r);
        }

        std::size_t pivot = 0;
        while (pivot < dim_ && row.vec[pivot] == 0) ++pivot;
        if (pivot == dim_) {
            return std::move(row.aug);
        }

        row.pivot = pivot;
        normalize(row);
        // back elimination keeps the clean-pivot invariant
        for (Row& r : rows_) {
            eliminate(r, row);
            normalize(r);
        }
        rows_.push_back(std::move(row));
        return std::nullopt;
    }

private:
    struct Row {
        std::vector<mpz_class> vec;
        std::vector<mpz_class> aug;
        std::size_t pivot = 0;
    };

    static void eliminate(Row& target, const Row& source) {
        // copies: the loop below overwrites target.vec[source.pivot]
        const mpz_class factor = target.vec[source.pivot];
        if (factor == 0) return;
        const mpz_class p = source.vec[source.pivot];
        for (std::size_t i = 0; i < target.vec.size(); ++i) {
            target.vec[i] = p * target.vec[i] - factor * source.vec[i];
        }
        if (target.aug.size() < source.aug.size()) target.aug.resize(source.aug.size(), 0);
        for (std::size_t i = 0; i < target.aug.size(); ++i) {
            mpz_class s = i < source.aug.size() ? source.aug[i] : mpz_class(0);
            target.aug[i] = p * target.aug[i] - factor * s;
        }
    }

    static void normalize(Row& row) {
        mpz_class g = 0;
        for (const auto& x : row.vec) g = gcd(g, x);
        for (const auto& x : row.aug) g = gcd(g, x);
        if (g == 0 || g == 1) return;
        for (auto& x : row.vec) x /= g;
        for (auto& x : row.aug) x /= g;
    }

    std::size_t dim_;
    std::size_t pushed_ = 0;
    std::vector<Row> rows_;
};

RatPolynomial dependence_to_monic(const std::vector<mpz_class>& dep) {
    std::vector<mpq_class> coeffs;
    coeffs.reserve(dep.size());
    const mpz_class& lead = dep.back();
    for (const auto& c : dep) coeffs.emplace_back(mpq_class(c) / mpq_class(lead));
    return RatPolynomial(std::move(coeffs));
}

}  // namespace

RatPolynomial minimal_polynomial(const DenseRatMatrix& m) {
    if (!m.is_square()) throw DomainError("InvalidArgument", "minimal polynomial of a non-square matrix");
    const int n = m.rows();
    if (n == 0) throw DomainError("InvalidArgument", "empty matrix");

    DependenceFinder finder(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    DenseRatMatrix power = DenseRatMatrix::identity(n);
    for (;;) {
        if (auto dep = finder.push(power.entries())) {
            return dependence_to_monic(*dep);
        }
        power = multiply(power, m);
    }
}

RatPolynomial characteristic_polynomial(const DenseRatMatrix& m) {
    if (!m.is_square()) throw DomainError("InvalidArgument", "characteristic polynomial of a non-square matrix");
    const int n = m.rows();
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(n) + 1, mpq_class(0));
    coeffs[static_cast<std::size_t>(n)] = 1;

    DenseRatMatrix b = DenseRatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        const DenseRatMatrix prod = multiply(m, b);
        mpq_class trace = 0;
        for (int i = 0; i < n; ++i) trace += prod.at(i, i);
        mpq_class c = -trace / k;
        coeffs[static_cast<std::size_t>(n - k)] = c;
        b = prod;
        for (int i = 0; i < n; ++i) b.at(i, i) += c;
    }
    return RatPolynomial(std::move(coeffs));
}

namespace {

// Residue arithmetic in Q[x]/<Phi_n>.
RatPolynomial reduce_mod(const RatPolynomial& f, const RatPolynomial& modulus) {
    return divmod(f, modulus).remainder;
}

std::vector<mpq_class> residue_vector(const RatPolynomial& r, int dim) {
    std::vector<mpq_class> v(static_cast<std::size_t>(dim), mpq_class(0));
    for (std::size_t i = 0; i < r.coefficients().size(); ++i) v[i] = r.coefficients()[i];
    return v;
}

}  // namespace

RatPolynomial element_minimal_polynomial(std::int64_t n, const RatPolynomial& g) {
    const RatPolynomial phi = RatPolynomial::from_integer(polyring::cyclotomic(n));
    const int dim = phi.degree();
    const RatPolynomial residue = reduce_mod(g, phi);

    DependenceFinder finder(static_cast<std::size_t>(dim));
    RatPolynomial power = RatPolynomial::constant(1);
    for (;;) {
        if (auto dep = finder.push(residue_vector(power, dim))) {
            return dependence_to_monic(*dep);
        }
        power = reduce_mod(multiply(power, residue), phi);
    }
}

RatPolynomial circulant_minimal_polynomial(const CirculantMatrix& c, bool cross_check) {
    const RatPolynomial g = RatPolynomial::from_integer(c.representer);
    RatPolynomial product = RatPolynomial::constant(1);
    for (std::int64_t d : numtheory::divisors(c.order)) {
        product = multiply(product, element_minimal_polynomial(d, g));
    }
    RatPolynomial result = polyring::squarefree_part(product);
    if (cross_check) {
        const RatPolynomial direct = minimal_polynomial(dense(c));
        if (!(direct == result)) {
            throw DomainError("InternalCheckFailed",
                              "divisor-product minimal polynomial disagrees with the Krylov result");
        }
    }
    return result;
}

std::vector<CayleyDigraph> cayley_partition(std::int64_t p, std::int64_t k) {
    if (p < 3 || !numtheory::is_prime(p)) {
        throw DomainError("InvalidArgument", "p must be an odd prime, got " + std::to_string(p));
    }
    if (k < 1 || (p - 1) % k != 0) {
        throw DomainError("InvalidArgument",
                          "k must divide p - 1, got k = " + std::to_string(k));
    }
    const std::int64_t alpha = numtheory::primitive_root(p);
    const std::int64_t r = (p - 1) / k;
    const std::int64_t step = numtheory::power_mod(alpha, k, p);

    std::vector<std::int64_t> subgroup;
    subgroup.reserve(static_cast<std::size_t>(r));
    std::int64_t h = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        subgroup.push_back(h);
        h = h * step % p;
    }

    std::vector<CayleyDigraph> out;
    out.reserve(static_cast<std::size_t>(k));
    std::int64_t coset_rep = 1;
    for (std::int64_t j = 0; j < k; ++j) {
        std::vector<std::int64_t> members;
        members.reserve(subgroup.size());
        for (std::int64_t s : subgroup) members.push_back(coset_rep * s % p);
        std::sort(members.begin(), members.end());
        out.push_back(CayleyDigraph{p, std::move(members)});
        coset_rep = coset_rep * alpha % p;
    }
    return out;
}

CirculantMatrix subfield_representation(std::int64_t p, std::int64_t r) {
    if (p < 3 || !numtheory::is_prime(p)) {
        throw DomainError("InvalidArgument", "p must be an odd prime, got " + std::to_string(p));
    }
    if (r < 1 || (p - 1) % r != 0) {
        throw DomainError("InvalidArgument",
                          "r must divide p - 1, got r = " + std::to_string(r));
    }
    const std::int64_t k = (p - 1) / r;
    const CayleyDigraph first = cayley_partition(p, k).front();

    IntPolynomial g;
    for (std::int64_t h : first.connection) {
        g = polyring::add(g, IntPolynomial::monomial(static_cast<int>(h)));
    }
    CirculantMatrix a{p, g};

    const RatPolynomial pm = minimal_polynomial(dense(a));
    const RatPolynomial q = element_minimal_polynomial(p, RatPolynomial::from_integer(g));
    const RatPolynomial linear(std::vector<mpq_class>{mpq_class(-r), mpq_class(1)});
    if (q.degree() != static_cast<int>(k) || !(multiply(linear, q) == pm)) {
        throw DomainError("InternalCheckFailed",
                          "subfield representation failed its minimal polynomial check");
    }
    return a;
}

namespace {

bool strongly_connected(const DenseRatMatrix& m) {
    const int n = m.rows();
    auto sweep = [&](bool forward) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                const mpq_class& e = forward ? m.at(v, w) : m.at(w, v);
                if (e != 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return sweep(true) && sweep(false);
}

}  // namespace

RatPolynomial hoffman_polynomial(const DenseRatMatrix& m) {
    if (!m.is_square() || m.rows() == 0) {
        throw DomainError("InvalidArgument", "adjacency matrix must be square and non-empty");
    }
    for (const auto& e : m.entries()) {
        if (e != 0 && e != 1) {
            throw DomainError("NotZeroOne", "adjacency matrix entries must be 0 or 1");
        }
    }
    const int n = m.rows();
    mpq_class degree = 0;
    for (int j = 0; j < n; ++j) degree += m.at(0, j);
    for (int i = 0; i < n; ++i) {
        mpq_class row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row += m.at(i, j);
            col += m.at(j, i);
        }
        if (row != degree || col != degree) {
            throw DomainError("NotRegular", "row/column sums are not all equal");
        }
    }
    if (!strongly_connected(m)) {
        throw DomainError("NotStronglyConnected", "digraph is not strongly connected");
    }

    const RatPolynomial pm = minimal_polynomial(m);
    const RatPolynomial linear(std::vector<mpq_class>{-degree, mpq_class(1)});
    const auto qr = divmod(pm, linear);
    if (!qr.remainder.is_zero()) {
        throw DomainError("FactorMissing", "x - d does not divide the minimal polynomial");
    }
    const RatPolynomial q = qr.quotient;
    const mpq_class qd = q.evaluate(degree);
    if (qd == 0) {
        throw DomainError("FactorMissing", "q vanishes at the regular degree");
    }
    const RatPolynomial h = polyring::scale(q, mpq_class(n) / qd);
    if (!(evaluate(h, m) == DenseRatMatrix::all_ones(n))) {
        throw DomainError("InternalCheckFailed", "J = h(A) failed entrywise");
    }
    return h;
}

IdealGenerator ideal_canonical(const RatPolynomial& g, const RatPolynomial& p_a) {
    if (p_a.is_zero()) throw DomainError("ZeroModulus", "minimal polynomial must be nonzero");
    if (g.is_zero()) return {p_a, monic(p_a)};
    return {p_a, gcd_monic(g, p_a)};
}

CirculantMatrix symmetric_representation(std::int64_t n) {
    if (n < 3) throw DomainError("InvalidArgument", "order must be >= 3, got " + std::to_string(n));
    IntPolynomial g = polyring::add(IntPolynomial::monomial(1),
                                    IntPolynomial::monomial(static_cast<int>(n - 1)));
    return CirculantMatrix{n, std::move(g)};
}

bool path_cycle_spectrum_check(std::int64_t n) {
    if (n % 2 != 0) throw DomainError("OddOrder", "n must be even, got " + std::to_string(n));
    if (n < 4) throw DomainError("InvalidArgument", "n must be >= 4, got " + std::to_string(n));

    // path characteristic polynomials by the three-term recurrence
    const std::int64_t m = n / 2 - 1;
    RatPolynomial prev = RatPolynomial::constant(1);
    RatPolynomial cur = RatPolynomial::monomial(1);
    for (std::int64_t i = 2; i <= m; ++i) {
        RatPolynomial next = subtract(multiply(RatPolynomial::monomial(1), cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    const RatPolynomial path_char = cur;

    const CirculantMatrix cycle{
        n, polyring::add(IntPolynomial::monomial(1),
                         IntPolynomial::monomial(static_cast<int>(n - 1)))};
    const RatPolynomial cycle_char = characteristic_polynomial(dense(cycle));
    const RatPolynomial corners(std::vector<mpq_class>{mpq_class(-4), mpq_class(0), mpq_class(1)});
    const auto qr = divmod(cycle_char, corners);
    if (!qr.remainder.is_zero()) {
        throw DomainError("InternalCheckFailed", "(x-2)(x+2) does not divide the cycle spectrum");
    }
    return polyring::squarefree_part(path_char) == polyring::squarefree_part(qr.quotient);
}

std::int64_t smallest_circulant_order(std::int64_t n) {
    if (n < 1) throw DomainError("InvalidArgument", "n must be >= 1");
    int a = 0;
    std::int64_t m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++a;
    }
    return a == 1 ? n / 2 : n;
}

std::string to_dot(const CayleyDigraph& g) {
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (std::int64_t i = 0; i < g.modulus; ++i) {
        for (std::int64_t s : g.connection) {
            out << "  " << i << " -> " << (i + s) % g.modulus << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace cyclo::matrixrep
