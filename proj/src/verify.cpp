#include "cyclo/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cyclo/ansearch.hpp"
#include "cyclo/error.hpp"
#include "cyclo/matrixrep.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polyring.hpp"

namespace cyclo::verify {

namespace nt = cyclo::numtheory;
namespace pr = cyclo::polyring;
namespace mr = cyclo::matrixrep;
namespace an = cyclo::ansearch;

using pr::IntPolynomial;
using pr::RatPolynomial;

namespace {

std::int64_t cap(std::int64_t full, std::int64_t max_n) {
    return max_n > 0 ? std::min(full, max_n) : full;
}

Check make_check(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

SuiteResult suite_cyclotomic(std::int64_t max_n) {
    SuiteResult result{"cyclotomic", {}};
    const std::int64_t limit = cap(200, max_n);

    std::int64_t product_failures = 0;
    for (std::int64_t n = 1; n <= limit; ++n) {
        IntPolynomial prod = IntPolynomial::constant(1);
        for (std::int64_t d : nt::divisors(n)) prod = pr::multiply(prod, pr::cyclotomic(d));
        if (!(prod == IntPolynomial::power_minus_one(static_cast<int>(n)))) ++product_failures;
    }
    result.checks.push_back(make_check(
        "product_identity", product_failures == 0,
        "prod_{d|n} Phi_d = x^n - 1 for n <= " + std::to_string(limit) + ", failures: " +
            std::to_string(product_failures)));

    std::int64_t flat_failures = 0;
    const std::int64_t census = std::min<std::int64_t>(limit, 104);
    for (std::int64_t n = 1; n <= census; ++n) {
        if (!pr::profile(n).flat) ++flat_failures;
    }
    result.checks.push_back(make_check(
        "flat_census", flat_failures == 0,
        "Phi_n flat for n <= " + std::to_string(census) + ", failures: " +
            std::to_string(flat_failures)));

    if (limit >= 105) {
        const mpz_class h = pr::profile(105).height;
        result.checks.push_back(
            make_check("height_105", h == 2, "height(Phi_105) = " + h.get_str()));
    } else {
        result.checks.push_back(make_check("height_105", true,
                                           "range capped below 105; check not exercised"));
    }
    return result;
}

SuiteResult suite_ramanujan(std::int64_t max_n) {
    SuiteResult result{"ramanujan", {}};
    const std::int64_t limit = cap(100, max_n);

    std::int64_t checked = 0;
    std::int64_t failures = 0;
    for (std::int64_t n = 1; n <= limit; ++n) {
        const IntPolynomial phi = pr::cyclotomic(n);
        const auto units = nt::unit_set(n).members;
        for (std::int64_t m = 0; m < n; ++m) {
            std::vector<mpz_class> coeffs(static_cast<std::size_t>(n), 0);
            for (std::int64_t k : units) coeffs[static_cast<std::size_t>(k * m % n)] += 1;
            const IntPolynomial residue =
                pr::divmod_monic(IntPolynomial(std::move(coeffs)), phi).remainder;
            // the residue must be the constant c_n(m): that constant is the
            // unique c with Phi_n | (P - c)
            const bool constant = residue.is_zero() || residue.degree() == 0;
            const mpz_class value = residue.is_zero() ? mpz_class(0) : residue.coefficient(0);
            if (!constant || value != nt::ramanujan_sum(n, m)) ++failures;
            ++checked;
        }
    }
    result.checks.push_back(make_check(
        "residue_oracle", failures == 0,
        std::to_string(checked) + " (n, m) pairs with n <= " + std::to_string(limit) +
            ", failures: " + std::to_string(failures)));
    return result;
}

SuiteResult suite_newton(std::int64_t max_n) {
    SuiteResult result{"newton", {}};
    const std::int64_t limit = cap(120, max_n);

    std::int64_t failures = 0;
    for (std::int64_t n = 1; n <= limit; ++n) {
        const IntPolynomial phi = pr::cyclotomic(n);
        const int deg = phi.degree();
        const auto e = pr::newton_girard_coefficients(n, deg);
        for (int t = 1; t <= deg; ++t) {
            const mpz_class expected =
                t % 2 == 0 ? e[static_cast<std::size_t>(t - 1)] : -e[static_cast<std::size_t>(t - 1)];
            if (phi.coefficient(deg - t) != expected) ++failures;
        }
    }
    result.checks.push_back(make_check(
        "coefficient_match", failures == 0,
        "Phi_n coefficients reproduce (-1)^t e_t for n <= " + std::to_string(limit) +
            ", failures: " + std::to_string(failures)));
    return result;
}

SuiteResult suite_two_prime(std::int64_t max_n) {
    SuiteResult result{"two-prime", {}};

    std::ostringstream detail;
    bool pass = true;
    for (std::int64_t n : {6, 10, 14, 15, 21, 22, 26, 33, 34, 35}) {
        if (max_n > 0 && n > max_n) continue;
        const auto outcome = an::search_min(n, an::SearchStrategy::exhaustive);
        const bool ok = outcome.status == an::SearchOutcome::Status::found &&
                        outcome.degree == n - 1;
        if (!ok) pass = false;
        detail << n << ":" << (ok ? "ok" : "FAIL") << " ";
    }
    result.checks.push_back(make_check("squarefree_products", pass,
                                       "search_min = n - 1 for " + detail.str()));

    std::ostringstream detail2;
    bool pass2 = true;
    for (std::int64_t n : {12, 18, 20, 24}) {
        if (max_n > 0 && n > max_n) continue;
        const auto outcome = an::search_min(n, an::SearchStrategy::exhaustive);
        const bool ok = outcome.status == an::SearchOutcome::Status::found &&
                        outcome.degree == an::exact_two_prime(n);
        if (!ok) pass2 = false;
        detail2 << n << ":" << (ok ? "ok" : "FAIL") << " ";
    }
    result.checks.push_back(make_check("lifted_products", pass2,
                                       "search_min = (n/p1p2)(p1p2 - 1) for " + detail2.str()));
    return result;
}

SuiteResult suite_emptiness(std::int64_t max_n) {
    SuiteResult result{"emptiness", {}};

    std::int64_t failures = 0;
    std::int64_t checked = 0;
    for (std::int64_t n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32}) {
        if (max_n > 0 && n > max_n) continue;
        const auto outcome = an::search_min(n, an::SearchStrategy::exhaustive);
        // nodes stays zero: prime powers are decided without search
        if (outcome.status != an::SearchOutcome::Status::empty || outcome.nodes != 0) ++failures;
        ++checked;
    }
    result.checks.push_back(make_check(
        "prime_powers", failures == 0,
        std::to_string(checked) + " prime powers decided empty without search, failures: " +
            std::to_string(failures)));
    return result;
}

SuiteResult suite_bounds30(std::int64_t max_n) {
    SuiteResult result{"bounds30", {}};
    if (max_n > 0 && max_n < 30) {
        result.checks.push_back(make_check("bounds_sandwich", true,
                                           "range capped below 30; check not exercised"));
        return result;
    }

    const an::BoundReport report = an::bounds_report(30);
    result.checks.push_back(
        make_check("lower", report.lower == 15, "lower = " + std::to_string(report.lower)));

    const an::SparseSignature thm_main_expected{22, {1, 13, 19, 20}};
    const an::SparseSignature flat_expected{22, {1, 8, 18, 19, 20}};
    bool thm_ok = false;
    bool flat_ok = false;
    for (const auto& u : report.uppers) {
        if (u.source == "thm_main") {
            thm_ok = u.value == 22 && u.witness == thm_main_expected &&
                     an::is_member(u.witness, 30);
        }
        if (u.source == "lem_flat") {
            flat_ok = u.value == 22 && u.witness == flat_expected &&
                      an::is_member(u.witness, 30);
        }
    }
    result.checks.push_back(make_check(
        "thm_main_upper", thm_ok, "upper 22 with witness x^22 - x^20 - x^19 - x^13 - x - 1"));
    result.checks.push_back(make_check(
        "flat_upper", flat_ok, "upper 22 with witness x^22 - x^20 - x^19 - x^18 - x^8 - x - 1"));

    const bool exact_ok = report.exact && report.exact->value > 15 && report.exact->value <= 22;
    result.checks.push_back(make_check(
        "search_in_sandwich", exact_ok,
        report.exact ? "exhaustive value " + std::to_string(report.exact->value) + " in (15, 22]"
                     : "search did not finish"));
    return result;
}

SuiteResult suite_cayley(std::int64_t max_n) {
    SuiteResult result{"cayley", {}};
    const std::int64_t limit = cap(31, max_n);

    std::int64_t pairs = 0;
    std::int64_t failures = 0;
    for (std::int64_t p = 3; p <= limit; ++p) {
        if (!nt::is_prime(p)) continue;
        for (std::int64_t r : nt::divisors(p - 1)) {
            ++pairs;
            const auto a = mr::subfield_representation(p, r);
            const auto m = mr::dense(a);
            const RatPolynomial pm = mr::minimal_polynomial(m);
            const RatPolynomial q =
                mr::element_minimal_polynomial(p, RatPolynomial::from_integer(a.representer));
            const RatPolynomial linear(
                std::vector<mpq_class>{mpq_class(-r), mpq_class(1)});
            bool ok = q.degree() == (p - 1) / r && pr::multiply(linear, q) == pm;
            if (ok) {
                const RatPolynomial h = mr::hoffman_polynomial(m);
                ok = mr::evaluate(h, m) == mr::DenseRatMatrix::all_ones(static_cast<int>(p)) &&
                     mr::ideal_canonical(h, pm).generator == q;
            }
            if (!ok) ++failures;
        }
    }
    result.checks.push_back(make_check(
        "subfield_law", failures == 0,
        std::to_string(pairs) + " (p, r) pairs with p <= " + std::to_string(limit) +
            ", failures: " + std::to_string(failures)));
    return result;
}

SuiteResult suite_symmetric(std::int64_t max_n) {
    SuiteResult result{"symmetric", {}};

    std::int64_t delta_failures = 0;
    std::int64_t delta_checked = 0;
    for (std::int64_t n : {5, 6, 7, 8, 12, 13, 17}) {
        if (max_n > 0 && n > max_n) continue;
        ++delta_checked;
        const auto sym = mr::symmetric_representation(n);
        const RatPolynomial delta_poly = mr::element_minimal_polynomial(
            n, RatPolynomial::from_integer(sym.representer));
        const RatPolynomial pm = mr::minimal_polynomial(mr::dense(sym));
        const bool ok = delta_poly.degree() == nt::totient(n) / 2 &&
                        pr::divmod(pm, delta_poly).remainder.is_zero();
        if (!ok) ++delta_failures;
    }
    result.checks.push_back(make_check(
        "delta_factor", delta_failures == 0,
        std::to_string(delta_checked) + " orders checked, failures: " +
            std::to_string(delta_failures)));

    std::int64_t path_failures = 0;
    std::int64_t path_checked = 0;
    const std::int64_t path_limit = cap(40, max_n);
    for (std::int64_t n = 4; n <= path_limit; n += 2) {
        ++path_checked;
        if (!mr::path_cycle_spectrum_check(n)) ++path_failures;
    }
    result.checks.push_back(make_check(
        "path_cycle", path_failures == 0,
        std::to_string(path_checked) + " even orders checked, failures: " +
            std::to_string(path_failures)));
    return result;
}

SuiteResult suite_bijection(std::int64_t max_n) {
    SuiteResult result{"bijection", {}};

    std::mt19937_64 rng(0x5eedc0de);
    std::int64_t implication_failures = 0;
    std::int64_t roundtrip_failures = 0;
    std::int64_t members_seen = 0;
    std::int64_t total = 0;

    std::vector<std::int64_t> moduli;
    for (std::int64_t n : {6, 10, 12, 15, 30}) {
        if (max_n <= 0 || n <= max_n) moduli.push_back(n);
    }

    auto exercise = [&](const an::SparseSignature& s, std::int64_t n) {
        ++total;
        const bool member = an::is_member(s, n);
        if (member) {
            ++members_seen;
            if (an::sg_statistic(s, n) != 0) ++implication_failures;
            const auto subset = an::signature_to_subset(s, n);
            if (!(an::subset_to_signature(subset, n) == s)) ++roundtrip_failures;
        }
    };

    for (std::int64_t n : moduli) {
        // constructed members exercise the member side of the bijection
        std::vector<an::SparseSignature> members;
        for (std::int64_t d : nt::divisors(n)) {
            if (d < 6) continue;
            const auto factors = nt::factorize(d).entries;
            bool squarefree = true;
            for (const auto& pp : factors) {
                if (pp.exponent > 1) squarefree = false;
            }
            if (squarefree && factors.size() % 2 == 0) {
                members.push_back(an::witness_even_count_divisor(n, d));
            }
        }
        if (n % 2 == 0 && nt::radical(n) == n && n >= 6 && pr::profile(n).flat) {
            members.push_back(an::witness_flat(n));
        }
        for (const auto& s : members) exercise(s, n);

        const std::int64_t samples = 2000;
        std::uniform_int_distribution<std::int64_t> degree_dist(2, n - 1);
        for (std::int64_t i = 0; i < samples; ++i) {
            const std::int64_t m = degree_dist(rng);
            std::vector<std::int64_t> inner;
            for (std::int64_t k = 1; k < m; ++k) {
                if (rng() & 1) inner.push_back(k);
            }
            exercise(an::SparseSignature{m, std::move(inner)}, n);
        }
    }

    result.checks.push_back(make_check(
        "member_implications", implication_failures == 0 && roundtrip_failures == 0,
        std::to_string(total) + " signatures over " + std::to_string(moduli.size()) +
            " moduli, members: " + std::to_string(members_seen) +
            ", S_f failures: " + std::to_string(implication_failures) +
            ", round-trip failures: " + std::to_string(roundtrip_failures)));

    // S_f = 0 does not imply membership: x^5 - x^3 - x - 1 has S_f = 0 for
    // n = 6 but is not divisible by Phi_6
    const an::SparseSignature non_member{5, {1, 3}};
    const bool non_sufficiency =
        an::sg_statistic(non_member, 6) == 0 && !an::is_member(non_member, 6);
    result.checks.push_back(make_check("sf_not_sufficient", non_sufficiency,
                                       "stored non-member with S_f = 0 confirmed"));
    return result;
}

}  // namespace

bool SuiteResult::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::vector<std::string> suite_names() {
    return {"cyclotomic", "ramanujan", "newton",     "two-prime", "emptiness",
            "bounds30",   "cayley",    "symmetric", "bijection"};
}

SuiteResult run_suite(const std::string& name, std::int64_t max_n) {
    if (name == "cyclotomic") return suite_cyclotomic(max_n);
    if (name == "ramanujan") return suite_ramanujan(max_n);
    if (name == "newton") return suite_newton(max_n);
    if (name == "two-prime") return suite_two_prime(max_n);
    if (name == "emptiness") return suite_emptiness(max_n);
    if (name == "bounds30") return suite_bounds30(max_n);
    if (name == "cayley") return suite_cayley(max_n);
    if (name == "symmetric") return suite_symmetric(max_n);
    if (name == "bijection") return suite_bijection(max_n);
    throw DomainError("UnknownSuite", "no suite named '" + name + "'");
}

std::vector<SuiteResult> run_all(std::int64_t max_n) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, max_n));
    return out;
}

}  // namespace cyclo::verify
