#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/polyring.hpp"

namespace cyclo::matrixrep {

// g(W_n) for the fundamental circulant W_n (companion matrix of x^n - 1);
// the first row of the dense form is the coefficient vector of g.
struct CirculantMatrix {
    std::int64_t order = 1;
    polyring::IntPolynomial representer;
};

CirculantMatrix make_circulant(std::int64_t order, polyring::IntPolynomial representer);

// Companion matrix of a monic integer polynomial of degree >= 1.
struct CompanionMatrix {
    polyring::IntPolynomial monic;
};

CompanionMatrix make_companion(polyring::IntPolynomial monic);

// Cay(Z_n, S): edge (i, j) iff (j - i) mod n lies in the connection set.
struct CayleyDigraph {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> connection;  // sorted, non-empty, subset of [1, n-1]
};

CayleyDigraph make_cayley(std::int64_t modulus, std::vector<std::int64_t> connection);

class DenseRatMatrix {
public:
    DenseRatMatrix() = default;
    DenseRatMatrix(int rows, int cols);

    static DenseRatMatrix identity(int n);
    static DenseRatMatrix all_ones(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpq_class& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpq_class& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const std::vector<mpq_class>& entries() const { return entries_; }
    std::vector<mpq_class>& entries() { return entries_; }

    friend bool operator==(const DenseRatMatrix&, const DenseRatMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> entries_;
};

DenseRatMatrix multiply(const DenseRatMatrix& a, const DenseRatMatrix& b);
DenseRatMatrix add(const DenseRatMatrix& a, const DenseRatMatrix& b);
DenseRatMatrix scale(const DenseRatMatrix& a, const mpq_class& c);

DenseRatMatrix dense(const CirculantMatrix& c);
DenseRatMatrix dense(const CompanionMatrix& c);
DenseRatMatrix dense(const CayleyDigraph& c);

// Evaluate p(M) by Horner's rule.
DenseRatMatrix evaluate(const polyring::RatPolynomial& p, const DenseRatMatrix& m);

// Monic least-degree p with p(M) = 0, found as the first linear dependence
// among vec(I), vec(M), vec(M^2), ... via exact fraction-free elimination.
polyring::RatPolynomial minimal_polynomial(const DenseRatMatrix& m);

// det(xI - M) by the Faddeev-LeVerrier recursion, exact over Q.
polyring::RatPolynomial characteristic_polynomial(const DenseRatMatrix& m);

// Minimal polynomial over Q of g(zeta_n), computed from the Krylov sequence
// of the residue of g in Q[x]/<Phi_n>. Irreducible by construction.
polyring::RatPolynomial element_minimal_polynomial(std::int64_t n, const polyring::RatPolynomial& g);

// Product over d | n of the element minimal polynomials of g(zeta_d), made
// square-free. With cross_check set, the Krylov minimal polynomial of the
// dense form is computed as well and a mismatch (impossible for a correct
// build) is reported as InternalCheckFailed.
polyring::RatPolynomial circulant_minimal_polynomial(const CirculantMatrix& c,
                                                     bool cross_check = true);

// Partition of {1,...,p-1} into the cosets H_j = alpha^j <alpha^k>, emitted
// for j = 0..k-1 with members sorted ascending.
std::vector<CayleyDigraph> cayley_partition(std::int64_t p, std::int64_t k);

// Adjacency circulant of Cay(Z_p, H) with H the order-r subgroup of Z_p^*.
// Its minimal polynomial is (x - r) q(x) with q irreducible of degree
// (p-1)/r; both facts are verified before returning.
CirculantMatrix subfield_representation(std::int64_t p, std::int64_t r);

// For the adjacency matrix of a strongly connected d-regular digraph, return
// the polynomial h with J = h(M), namely (n/q(d)) q(x) where the minimal
// polynomial factors as (x - d) q(x). The identity is verified entrywise.
polyring::RatPolynomial hoffman_polynomial(const DenseRatMatrix& m);

struct IdealGenerator {
    polyring::RatPolynomial modulus_poly;
    polyring::RatPolynomial generator;
};

// Canonical generator of <g(A)> in F[A]: the monic gcd of g with the minimal
// polynomial. Two polynomials generate the same ideal iff their canonical
// generators coincide.
IdealGenerator ideal_canonical(const polyring::RatPolynomial& g,
                               const polyring::RatPolynomial& p_a);

// W_n + W_n^(n-1), the symmetric 0,1-circulant whose spectrum contains
// delta_n = 2 cos(2 pi / n).
CirculantMatrix symmetric_representation(std::int64_t n);

// Compares the spectrum of the path on n/2 - 1 vertices with the spectrum of
// the cycle C_n stripped of the eigenvalues 2 and -2 (square-free parts of
// the characteristic polynomials; the claim is about eigenvalue sets).
bool path_cycle_spectrum_check(std::int64_t n);

// Writing n = 2^a m with m odd: n/2 when a = 1, otherwise n.
std::int64_t smallest_circulant_order(std::int64_t n);

// DOT export with vertices 0..n-1 and an edge (i, j) iff (j-i) mod n is in
// the connection set.
std::string to_dot(const CayleyDigraph& g);

}  // namespace cyclo::matrixrep
