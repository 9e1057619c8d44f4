#include <doctest.h>

#include <random>

#include "cyclo/ansearch.hpp"
#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polyring.hpp"

namespace nt = cyclo::numtheory;
namespace pr = cyclo::polyring;
namespace an = cyclo::ansearch;

using an::SparseSignature;
using pr::IntPolynomial;

namespace {

IntPolynomial ipoly(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("signature to polynomial") {
    CHECK(an::to_polynomial({5, {4}}) == ipoly({-1, 0, 0, 0, -1, 1}));
    CHECK(an::to_polynomial({2, {}}) == ipoly({-1, 0, 1}));
    CHECK(an::to_polynomial({9, {2, 6, 8}}) ==
          ipoly({-1, 0, -1, 0, 0, 0, -1, 0, -1, 1}));
    CHECK_THROWS_AS(an::make_signature(1, {}), cyclo::DomainError);
    CHECK_THROWS_AS(an::make_signature(4, {4}), cyclo::DomainError);
}

TEST_CASE("membership") {
    CHECK(an::is_member({5, {4}}, 6));
    CHECK_FALSE(an::is_member({5, {4}}, 5));  // degree must stay below n
    CHECK(an::is_member({9, {2, 6, 8}}, 10));
    CHECK_FALSE(an::is_member({4, {1}}, 6));
}

TEST_CASE("bijection with one-sum subsets") {
    CHECK(an::signature_to_subset({5, {4}}, 6) == std::vector<std::int64_t>{1, 5});
    CHECK(an::signature_to_subset({9, {2, 6, 8}}, 10) ==
          std::vector<std::int64_t>{1, 3, 7, 9});
    CHECK_THROWS_AS(an::signature_to_subset({4, {1}}, 6), cyclo::DomainError);

    const SparseSignature s{9, {2, 6, 8}};
    CHECK(an::subset_to_signature(an::signature_to_subset(s, 10), 10) == s);
}

TEST_CASE("sg statistic") {
    CHECK(an::sg_statistic({5, {4}}, 6) == 0);
    CHECK(an::sg_statistic({9, {2, 6, 8}}, 10) == 0);
    CHECK(an::sg_statistic({4, {1}}, 6) != 0);
    // necessary but not sufficient: S_f = 0 with Phi_6 not dividing
    CHECK(an::sg_statistic({5, {1, 3}}, 6) == 0);
    CHECK_FALSE(an::is_member({5, {1, 3}}, 6));
}

TEST_CASE("lower bound") {
    CHECK(an::lower_bound(6) == 3);
    CHECK(an::lower_bound(30) == 15);
    CHECK(an::lower_bound(105) == 53);
    CHECK(an::lower_bound(2) == 1);
}

TEST_CASE("even-divisor witnesses") {
    CHECK(an::witness_even_count_divisor(6, 6) == SparseSignature{5, {4}});
    CHECK(an::witness_even_count_divisor(10, 10) == SparseSignature{9, {2, 6, 8}});
    CHECK(an::witness_even_count_divisor(12, 6) == SparseSignature{10, {8}});
    CHECK_THROWS_AS(an::witness_even_count_divisor(30, 30), cyclo::DomainError);  // odd count
    CHECK_THROWS_AS(an::witness_even_count_divisor(12, 4), cyclo::DomainError);   // not square-free

    for (std::int64_t n : {6, 10, 12, 14, 15, 20, 21, 22, 30, 42, 66, 70}) {
        for (std::int64_t d : nt::divisors(n)) {
            if (d < 6 || nt::radical(d) != d) continue;
            if (nt::factorize(d).entries.size() % 2 != 0) continue;
            const auto s = an::witness_even_count_divisor(n, d);
            CHECK(s.degree == n - n / d);
            CHECK(an::is_member(s, n));
        }
    }
}

TEST_CASE("thm-main witness") {
    const auto w30 = an::witness_thm_main(30);
    CHECK(w30.v == 8);
    CHECK(w30.signature == SparseSignature{22, {1, 13, 19, 20}});
    CHECK(an::to_polynomial(w30.signature) ==
          ipoly({-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, -1, 0, 1}));

    const auto w42 = an::witness_thm_main(42);  // 2 p1 < p2 < 3 p1
    CHECK(w42.v == 9);
    CHECK(w42.signature.degree == 33);
    CHECK(an::is_member(w42.signature, 42));

    const auto w66 = an::witness_thm_main(66);  // 3 p1 < p2
    CHECK(w66.v == 11);
    CHECK(w66.signature.degree == 55);
    CHECK(an::is_member(w66.signature, 66));

    CHECK_THROWS_AS(an::witness_thm_main(15), cyclo::DomainError);
    CHECK_THROWS_AS(an::witness_thm_main(60), cyclo::DomainError);

    // the boundary cases 2 p1 = p2 and 3 p1 = p2 cannot occur for odd primes
    for (std::int64_t n : {30, 42, 66, 70, 78, 102, 105 * 2}) {
        const auto factors = nt::factorize(n).entries;
        if (factors.size() < 3 || factors[0].prime != 2 || nt::radical(n) != n) continue;
        const std::int64_t p1 = factors[1].prime;
        const std::int64_t p2 = factors[2].prime;
        CHECK(p2 != 2 * p1);
        CHECK(p2 != 3 * p1);
        const auto w = an::witness_thm_main(n);
        CHECK(an::is_member(w.signature, n));
        CHECK(w.signature.degree == n - w.v);
    }
}

TEST_CASE("flat witness") {
    const auto w30 = an::witness_flat(30);
    CHECK(w30 == SparseSignature{22, {1, 8, 18, 19, 20}});
    CHECK(an::to_polynomial(w30) ==
          ipoly({-1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 1}));

    CHECK(an::witness_flat(6).degree == 5);  // order 1, n/2 + phi(n)
    CHECK(an::witness_flat(6) == SparseSignature{5, {4}});

    CHECK_THROWS_WITH_AS(an::witness_flat(105), "OddModulus: construction requires even n",
                         cyclo::DomainError);
    CHECK_THROWS_AS(an::witness_flat(12), cyclo::DomainError);   // not square-free
    CHECK_THROWS_AS(an::witness_flat(210), cyclo::DomainError);  // height 2, not flat

    // degree law for applicable n <= 70
    for (std::int64_t n = 6; n <= 70; n += 2) {
        if (nt::radical(n) != n) continue;
        const auto prof = pr::profile(n);
        if (!prof.flat) continue;
        const auto w = an::witness_flat(n);
        const std::int64_t expected =
            n / 2 + prof.totient - (prof.order % 2 == 0 ? 1 : 0);
        CHECK(w.degree == expected);
        CHECK(an::is_member(w, n));
    }
}

TEST_CASE("squarefree lift") {
    CHECK(an::lift_squarefree({5, {4}}, 6, 12) == SparseSignature{10, {8}});
    CHECK(an::lift_squarefree({5, {4}}, 6, 18) == SparseSignature{15, {12}});
    CHECK(an::lift_squarefree({5, {4}}, 6, 6) == SparseSignature{5, {4}});
    CHECK(an::is_member(an::lift_squarefree({5, {4}}, 6, 24), 24));
    CHECK_THROWS_AS(an::lift_squarefree({5, {4}}, 6, 15), cyclo::DomainError);
    CHECK_THROWS_AS(an::lift_squarefree({4, {1}}, 6, 12), cyclo::DomainError);
}

TEST_CASE("exact two prime") {
    CHECK(an::exact_two_prime(6) == 5);
    CHECK(an::exact_two_prime(15) == 14);
    CHECK(an::exact_two_prime(12) == 10);
    CHECK(an::exact_two_prime(18) == 15);
    CHECK_THROWS_AS(an::exact_two_prime(30), cyclo::DomainError);
    CHECK_THROWS_AS(an::exact_two_prime(8), cyclo::DomainError);
}

TEST_CASE("search: emptiness shortcuts") {
    for (std::int64_t n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32}) {
        const auto outcome = an::search_min(n);
        CHECK(outcome.status == an::SearchOutcome::Status::empty);
        CHECK(outcome.nodes == 0);
    }
}

TEST_CASE("search: small exact values") {
    const auto s6 = an::search_min(6);
    REQUIRE(s6.status == an::SearchOutcome::Status::found);
    CHECK(s6.degree == 5);
    CHECK(s6.witness == SparseSignature{5, {4}});

    const auto s10 = an::search_min(10);
    REQUIRE(s10.status == an::SearchOutcome::Status::found);
    CHECK(s10.degree == 9);

    const auto s12 = an::search_min(12);
    REQUIRE(s12.status == an::SearchOutcome::Status::found);
    CHECK(s12.degree == 10);
    CHECK(s12.witness == SparseSignature{10, {8}});

    // squarefree transport: degree doubles and the witness is the lift
    CHECK(s12.degree == 2 * s6.degree);
    CHECK(s12.witness == an::lift_squarefree(s6.witness, 6, 12));

    const auto s15 = an::search_min(15);
    REQUIRE(s15.status == an::SearchOutcome::Status::found);
    CHECK(s15.degree == 14);
}

TEST_CASE("search matches naive subset enumeration") {
    // independent oracle: plain bitmask enumeration with full division at
    // every candidate, shortlex order reproduced by (popcount, mask-lex)
    for (std::int64_t n : {6, 9, 10, 12}) {
        std::optional<std::pair<std::int64_t, SparseSignature>> naive;
        for (std::int64_t m = 2; m < n && !naive; ++m) {
            std::vector<SparseSignature> hits;
            for (std::uint64_t mask = 0; mask < (1ULL << (m - 1)); ++mask) {
                std::vector<std::int64_t> inner;
                for (std::int64_t k = 1; k < m; ++k) {
                    if (mask & (1ULL << (k - 1))) inner.push_back(k);
                }
                const SparseSignature s{m, std::move(inner)};
                if (pr::divisible(an::to_polynomial(s), pr::cyclotomic(n))) hits.push_back(s);
            }
            for (const auto& h : hits) {
                if (!naive || h.inner.size() < naive->second.inner.size() ||
                    (h.inner.size() == naive->second.inner.size() &&
                     h.inner < naive->second.inner)) {
                    naive = {{m, h}};
                }
            }
        }

        const auto outcome = an::search_min(n);
        if (!naive) {
            CHECK(outcome.status == an::SearchOutcome::Status::empty);
        } else {
            REQUIRE(outcome.status == an::SearchOutcome::Status::found);
            CHECK(outcome.degree == naive->first);
            CHECK(outcome.witness == naive->second);
        }
    }
}

TEST_CASE("search: strategies agree") {
    for (std::int64_t n : {6, 10, 12, 14, 15, 18, 20, 21, 22}) {
        const auto a = an::search_min(n, an::SearchStrategy::exhaustive);
        const auto b = an::search_min(n, an::SearchStrategy::meet_in_middle);
        REQUIRE(a.status == an::SearchOutcome::Status::found);
        REQUIRE(b.status == an::SearchOutcome::Status::found);
        CHECK(a.degree == b.degree);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("search: strict lower bound") {
    for (std::int64_t n = 2; n <= 36; ++n) {
        if (nt::is_prime_power(n)) continue;
        const auto outcome = an::search_min(n);
        REQUIRE(outcome.status == an::SearchOutcome::Status::found);
        CHECK(outcome.degree > an::lower_bound(n));
        CHECK(outcome.degree < n);
        CHECK(an::is_member(outcome.witness, n));
        CHECK(outcome.nodes > 0);
    }
}

TEST_CASE("bounds reports are internally consistent") {
    for (std::int64_t n = 2; n <= 36; ++n) {
        const auto report = an::bounds_report(n);
        CHECK(report.lower == an::lower_bound(n));
        CHECK(report.empty_set == nt::is_prime_power(n));
        for (const auto& u : report.uppers) {
            CHECK(u.witness.degree == u.value);
            CHECK(an::is_member(u.witness, n));
        }
        if (report.exact) {
            CHECK(report.exact->value > report.lower);
            for (const auto& u : report.uppers) CHECK(report.exact->value <= u.value);
            CHECK(an::is_member(report.exact->witness, n));
        }
    }
}

TEST_CASE("search: budget exhaustion is honest") {
    const auto outcome = an::search_min(30, an::SearchStrategy::exhaustive, 10);
    REQUIRE(outcome.status == an::SearchOutcome::Status::budget_exhausted);
    CHECK(outcome.lowest_unexplored == 16);
    CHECK_FALSE(outcome.best_upper.has_value());

    // default budgets refuse large n instead of stalling
    const auto large = an::search_min(70, an::SearchStrategy::exhaustive);
    CHECK(large.status == an::SearchOutcome::Status::budget_exhausted);
    CHECK(large.lowest_unexplored == an::lower_bound(70) + 1);
}

TEST_CASE("bounds report") {
    const auto r6 = an::bounds_report(6);
    CHECK(r6.lower == 3);
    REQUIRE(r6.exact.has_value());
    CHECK(r6.exact->value == 5);
    CHECK_FALSE(r6.empty_set);
    bool has_cor_pq = false;
    for (const auto& u : r6.uppers) {
        if (u.source == "cor_pq") {
            has_cor_pq = true;
            CHECK(u.value == 5);
        }
    }
    CHECK(has_cor_pq);

    const auto r8 = an::bounds_report(8);
    CHECK(r8.lower == 4);
    CHECK(r8.uppers.empty());
    CHECK_FALSE(r8.exact.has_value());
    CHECK(r8.empty_set);

    const auto r30 = an::bounds_report(30);
    CHECK(r30.lower == 15);
    std::int64_t cor_pq = 0, thm_main = 0, lem_flat = 0;
    for (const auto& u : r30.uppers) {
        if (u.source == "cor_pq") cor_pq = u.value;
        if (u.source == "thm_main") thm_main = u.value;
        if (u.source == "lem_flat") lem_flat = u.value;
    }
    CHECK(cor_pq == 25);
    CHECK(thm_main == 22);
    CHECK(lem_flat == 22);
    REQUIRE(r30.exact.has_value());
    CHECK(r30.exact->value > 15);
    CHECK(r30.exact->value <= 22);
}

TEST_CASE("bijection and pruning corpus") {
    std::mt19937_64 rng(99);
    for (std::int64_t n : {6, 10, 12, 15}) {
        std::uniform_int_distribution<std::int64_t> degree_dist(2, n - 1);
        for (int iter = 0; iter < 500; ++iter) {
            const std::int64_t m = degree_dist(rng);
            std::vector<std::int64_t> inner;
            for (std::int64_t k = 1; k < m; ++k) {
                if (rng() & 1) inner.push_back(k);
            }
            const SparseSignature s{m, inner};
            if (an::is_member(s, n)) {
                CHECK(an::sg_statistic(s, n) == 0);
                CHECK(an::subset_to_signature(an::signature_to_subset(s, n), n) == s);
            } else if (an::sg_statistic(s, n) != 0) {
                // contrapositive of the necessary condition
                CHECK_FALSE(an::is_member(s, n));
            }
        }
    }
}
