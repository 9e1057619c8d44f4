#include <doctest.h>

#include <random>

#include "cyclo/error.hpp"
#include "cyclo/matrixrep.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polyring.hpp"

namespace nt = cyclo::numtheory;
namespace pr = cyclo::polyring;
namespace mr = cyclo::matrixrep;

using mr::CayleyDigraph;
using mr::CirculantMatrix;
using mr::DenseRatMatrix;
using pr::IntPolynomial;
using pr::RatPolynomial;

namespace {

IntPolynomial ipoly(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

RatPolynomial rpoly(std::vector<long> coeffs) {
    std::vector<mpq_class> c(coeffs.begin(), coeffs.end());
    return RatPolynomial(std::move(c));
}

DenseRatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    DenseRatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

}  // namespace

TEST_CASE("dense forms") {
    // W_3
    const auto w3 = mr::dense(CirculantMatrix{3, IntPolynomial::monomial(1)});
    CHECK(w3 == from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));

    const auto c = mr::dense(CirculantMatrix{3, ipoly({1, 1})});
    CHECK(c == from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));

    const auto cay = mr::dense(mr::make_cayley(7, {1, 2, 4}));
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const int diff = ((j - i) % 7 + 7) % 7;
            CHECK(cay.at(i, j) == ((diff == 1 || diff == 2 || diff == 4) ? 1 : 0));
        }
    }

    // companion of x^3 - 1 is W_3
    CHECK(mr::dense(mr::make_companion(IntPolynomial::power_minus_one(3))) == w3);
}

TEST_CASE("minimal polynomial by Krylov") {
    CHECK(mr::minimal_polynomial(DenseRatMatrix::identity(3)) == rpoly({-1, 1}));
    CHECK(mr::minimal_polynomial(mr::dense(CirculantMatrix{6, IntPolynomial::monomial(1)})) ==
          rpoly({-1, 0, 0, 0, 0, 0, 1}));
    // (x - 3)(x^2 + x + 2) expanded
    CHECK(mr::minimal_polynomial(mr::dense(mr::make_cayley(7, {1, 2, 4}))) ==
          pr::multiply(rpoly({-3, 1}), rpoly({2, 1, 1})));
}

TEST_CASE("companion ground truth") {
    // fixed pseudorandom corpus of monic integer polynomials
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> deg_dist(1, 12);
    std::uniform_int_distribution<long> coeff_dist(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        const int deg = deg_dist(rng);
        std::vector<mpz_class> coeffs(static_cast<std::size_t>(deg) + 1);
        for (int i = 0; i < deg; ++i) coeffs[static_cast<std::size_t>(i)] = coeff_dist(rng);
        coeffs.back() = 1;
        const IntPolynomial f{std::move(coeffs)};
        const auto companion = mr::dense(mr::make_companion(f));
        CHECK(mr::minimal_polynomial(companion) == RatPolynomial::from_integer(f));
        CHECK(mr::characteristic_polynomial(companion) == RatPolynomial::from_integer(f));
    }
}

TEST_CASE("characteristic polynomial") {
    // triangle graph: eigenvalues 2, -1, -1
    const auto k3 = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(mr::characteristic_polynomial(k3) ==
          pr::multiply(rpoly({-2, 1}), pr::multiply(rpoly({1, 1}), rpoly({1, 1}))));
    CHECK(mr::characteristic_polynomial(DenseRatMatrix::identity(2)) == rpoly({1, -2, 1}));
}

TEST_CASE("element minimal polynomial") {
    for (std::int64_t n = 1; n <= 24; ++n) {
        CHECK(mr::element_minimal_polynomial(n, RatPolynomial::monomial(1)) ==
              RatPolynomial::from_integer(pr::cyclotomic(n)));
    }
    // delta_5 = 2 cos(2 pi / 5)
    CHECK(mr::element_minimal_polynomial(5, rpoly({0, 1, 0, 0, 1})) == rpoly({-1, 1, 1}));
    // Gauss sum zeta_7 + zeta_7^2 + zeta_7^4
    CHECK(mr::element_minimal_polynomial(7, rpoly({0, 1, 1, 0, 1})) == rpoly({2, 1, 1}));
    // delta_12 = sqrt(3)
    CHECK(mr::element_minimal_polynomial(12, rpoly({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})) ==
          rpoly({-3, 0, 1}));
}

TEST_CASE("circulant minimal polynomial dual path") {
    CHECK(mr::circulant_minimal_polynomial(CirculantMatrix{5, IntPolynomial::monomial(1)}) ==
          rpoly({-1, 0, 0, 0, 0, 1}));
    CHECK(mr::circulant_minimal_polynomial(CirculantMatrix{5, ipoly({0, 1, 0, 0, 1})}) ==
          pr::multiply(rpoly({-2, 1}), rpoly({-1, 1, 1})));
    CHECK(mr::circulant_minimal_polynomial(CirculantMatrix{4, ipoly({3})}) == rpoly({-3, 1}));

    // pseudorandom 0,1 representers; the constructor cross-checks both routes
    std::mt19937_64 rng(1234);
    for (std::int64_t n = 2; n <= 20; ++n) {
        for (int iter = 0; iter < 3; ++iter) {
            std::vector<mpz_class> coeffs(static_cast<std::size_t>(n), 0);
            for (auto& c : coeffs) c = static_cast<long>(rng() & 1);
            const CirculantMatrix c{n, IntPolynomial(std::move(coeffs))};
            const auto viaProduct = mr::circulant_minimal_polynomial(c, true);
            CHECK(viaProduct == mr::minimal_polynomial(mr::dense(c)));

            // non-scalar circulants split off x - g(1)
            if (!c.representer.is_zero() && c.representer.degree() >= 1) {
                const mpq_class g1(c.representer.evaluate(1));
                const RatPolynomial linear(std::vector<mpq_class>{-g1, mpq_class(1)});
                CHECK(pr::divmod(viaProduct, linear).remainder.is_zero());
                CHECK(viaProduct.degree() >= 2);
            }
        }
    }
}

TEST_CASE("ideal canonicalization") {
    const auto x6m1 = rpoly({-1, 0, 0, 0, 0, 0, 1});
    CHECK(mr::ideal_canonical(RatPolynomial::from_integer(pr::cyclotomic(3)), x6m1).generator ==
          rpoly({1, 1, 1}));
    CHECK(mr::ideal_canonical(RatPolynomial::monomial(7),
                              RatPolynomial::from_integer(pr::cyclotomic(6)))
              .generator == rpoly({1}));
    CHECK_THROWS_AS(mr::ideal_canonical(rpoly({1}), RatPolynomial()), cyclo::DomainError);

    // eqn-level check: each Phi_d generates itself inside x^n - 1
    for (std::int64_t n = 1; n <= 24; ++n) {
        const auto modulus = RatPolynomial::from_integer(
            IntPolynomial::power_minus_one(static_cast<int>(n)));
        for (std::int64_t d : nt::divisors(n)) {
            const auto phi_d = RatPolynomial::from_integer(pr::cyclotomic(d));
            CHECK(mr::ideal_canonical(phi_d, modulus).generator == phi_d);
        }
    }
}

TEST_CASE("cayley partition") {
    const auto parts7 = mr::cayley_partition(7, 2);
    REQUIRE(parts7.size() == 2);
    CHECK(parts7[0].connection == std::vector<std::int64_t>{1, 2, 4});
    CHECK(parts7[1].connection == std::vector<std::int64_t>{3, 5, 6});

    const auto parts5 = mr::cayley_partition(5, 4);
    REQUIRE(parts5.size() == 4);
    CHECK(parts5[0].connection == std::vector<std::int64_t>{1});
    CHECK(parts5[1].connection == std::vector<std::int64_t>{2});
    CHECK(parts5[2].connection == std::vector<std::int64_t>{4});
    CHECK(parts5[3].connection == std::vector<std::int64_t>{3});

    const auto complete = mr::cayley_partition(11, 1);
    REQUIRE(complete.size() == 1);
    CHECK(complete[0].connection.size() == 10);

    CHECK_THROWS_AS(mr::cayley_partition(9, 2), cyclo::DomainError);
    CHECK_THROWS_AS(mr::cayley_partition(7, 4), cyclo::DomainError);

    // partition property and isomorphic spectra
    for (std::int64_t p : {5, 7, 11, 13}) {
        for (std::int64_t k : nt::divisors(p - 1)) {
            const auto parts = mr::cayley_partition(p, k);
            std::vector<char> seen(static_cast<std::size_t>(p), 0);
            for (const auto& g : parts) {
                CHECK(g.connection.size() == static_cast<std::size_t>((p - 1) / k));
                for (std::int64_t s : g.connection) {
                    CHECK_FALSE(seen[static_cast<std::size_t>(s)]);
                    seen[static_cast<std::size_t>(s)] = 1;
                }
            }
            for (std::int64_t s = 1; s < p; ++s) CHECK(seen[static_cast<std::size_t>(s)]);

            const auto pm0 = mr::minimal_polynomial(mr::dense(parts[0]));
            for (const auto& g : parts) {
                CHECK(mr::minimal_polynomial(mr::dense(g)) == pm0);
            }
        }
    }
}

TEST_CASE("subfield representation") {
    const auto a73 = mr::subfield_representation(7, 3);
    CHECK(a73.representer == ipoly({0, 1, 1, 0, 1}));
    CHECK(mr::minimal_polynomial(mr::dense(a73)) ==
          pr::multiply(rpoly({-3, 1}), rpoly({2, 1, 1})));

    const auto a52 = mr::subfield_representation(5, 2);
    CHECK(a52.representer == ipoly({0, 1, 0, 0, 1}));
    CHECK(mr::minimal_polynomial(mr::dense(a52)) ==
          pr::multiply(rpoly({-2, 1}), rpoly({-1, 1, 1})));

    // complete digraph: q = x + 1
    const auto a66 = mr::subfield_representation(7, 6);
    CHECK(mr::minimal_polynomial(mr::dense(a66)) ==
          pr::multiply(rpoly({-6, 1}), rpoly({1, 1})));

    // degree law across p <= 31
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        for (std::int64_t r : nt::divisors(p - 1)) {
            const auto a = mr::subfield_representation(p, r);
            const auto pm = mr::minimal_polynomial(mr::dense(a));
            const auto q = mr::element_minimal_polynomial(
                p, RatPolynomial::from_integer(a.representer));
            CHECK(q.degree() == (p - 1) / r);
            CHECK(pr::multiply(RatPolynomial(std::vector<mpq_class>{mpq_class(-r), mpq_class(1)}),
                               q) == pm);
        }
    }
    CHECK_THROWS_AS(mr::subfield_representation(7, 4), cyclo::DomainError);
}

TEST_CASE("hoffman polynomial") {
    const auto k3 = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(mr::hoffman_polynomial(k3) == rpoly({1, 1}));

    const auto m = mr::dense(mr::subfield_representation(7, 3));
    const auto h = mr::hoffman_polynomial(m);
    CHECK(h == RatPolynomial(std::vector<mpq_class>{mpq_class(1), mpq_class(1, 2), mpq_class(1, 2)}));
    CHECK(mr::evaluate(h, m) == DenseRatMatrix::all_ones(7));

    // <J> = <q(A)>: canonical generators coincide
    const auto pm = mr::minimal_polynomial(m);
    CHECK(mr::ideal_canonical(h, pm).generator == rpoly({2, 1, 1}));

    // two disjoint triangles
    const auto disjoint = from_rows({{0, 1, 1, 0, 0, 0},
                                     {1, 0, 1, 0, 0, 0},
                                     {1, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 1},
                                     {0, 0, 0, 1, 0, 1},
                                     {0, 0, 0, 1, 1, 0}});
    CHECK_THROWS_WITH_AS(mr::hoffman_polynomial(disjoint),
                         "NotStronglyConnected: digraph is not strongly connected",
                         cyclo::DomainError);

    const auto irregular = from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK_THROWS_AS(mr::hoffman_polynomial(irregular), cyclo::DomainError);

    const auto not01 = from_rows({{0, 2}, {2, 0}});
    CHECK_THROWS_AS(mr::hoffman_polynomial(not01), cyclo::DomainError);
}

TEST_CASE("symmetric representation") {
    const auto s5 = mr::symmetric_representation(5);
    CHECK(s5.representer == ipoly({0, 1, 0, 0, 1}));
    const auto d5 = mr::element_minimal_polynomial(5, RatPolynomial::from_integer(s5.representer));
    CHECK(d5 == rpoly({-1, 1, 1}));

    const auto d6 = mr::element_minimal_polynomial(
        6, RatPolynomial::from_integer(mr::symmetric_representation(6).representer));
    CHECK(d6 == rpoly({-1, 1}));

    const auto d12 = mr::element_minimal_polynomial(
        12, RatPolynomial::from_integer(mr::symmetric_representation(12).representer));
    CHECK(d12 == rpoly({-3, 0, 1}));

    for (std::int64_t n : {5, 6, 7, 8, 12, 13, 17}) {
        const auto sym = mr::symmetric_representation(n);
        const auto dense_form = mr::dense(sym);
        for (int i = 0; i < dense_form.rows(); ++i) {
            for (int j = 0; j < i; ++j) CHECK(dense_form.at(i, j) == dense_form.at(j, i));
        }
        const auto delta = mr::element_minimal_polynomial(
            n, RatPolynomial::from_integer(sym.representer));
        CHECK(delta.degree() == nt::totient(n) / 2);
        CHECK(pr::divmod(mr::minimal_polynomial(dense_form), delta).remainder.is_zero());
    }
    CHECK_THROWS_AS(mr::symmetric_representation(2), cyclo::DomainError);
}

TEST_CASE("path cycle spectrum") {
    CHECK(mr::path_cycle_spectrum_check(4));
    CHECK(mr::path_cycle_spectrum_check(6));
    CHECK(mr::path_cycle_spectrum_check(8));
    for (std::int64_t n = 4; n <= 24; n += 2) CHECK(mr::path_cycle_spectrum_check(n));
    CHECK_THROWS_WITH_AS(mr::path_cycle_spectrum_check(7), "OddOrder: n must be even, got 7",
                         cyclo::DomainError);
}

TEST_CASE("smallest circulant order") {
    CHECK(mr::smallest_circulant_order(6) == 3);
    CHECK(mr::smallest_circulant_order(12) == 12);
    CHECK(mr::smallest_circulant_order(5) == 5);
    CHECK(mr::smallest_circulant_order(2) == 1);
    CHECK(mr::smallest_circulant_order(8) == 8);
}

TEST_CASE("dot export") {
    const auto dot = mr::to_dot(mr::make_cayley(3, {1}));
    CHECK(dot == "digraph cayley {\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
}
