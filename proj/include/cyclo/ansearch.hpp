#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/polyring.hpp"

namespace cyclo::ansearch {

// Exponent-set encoding of x^m - sum_{k in K} x^k - 1 with K a subset of
// {1, ..., m-1}; leading coefficient +1, constant term -1, inner coefficients
// in {0, -1}.
struct SparseSignature {
    std::int64_t degree = 2;
    std::vector<std::int64_t> inner;  // sorted ascending

    friend bool operator==(const SparseSignature&, const SparseSignature&) = default;
};

SparseSignature make_signature(std::int64_t degree, std::vector<std::int64_t> inner);

polyring::IntPolynomial to_polynomial(const SparseSignature& s);

// deg(s) < n and Phi_n divides the denoted polynomial.
bool is_member(const SparseSignature& s, std::int64_t n);

// Exponent set {n-m} union {n-m+k : k in K} of the root-of-unity subset with
// element sum 1; inverse of subset_to_signature.
std::vector<std::int64_t> signature_to_subset(const SparseSignature& s, std::int64_t n);
SparseSignature subset_to_signature(const std::vector<std::int64_t>& subset, std::int64_t n);

// S_f = c_n(m) - sum_{k in K} c_n(k) - c_n(0); zero for every member.
std::int64_t sg_statistic(const SparseSignature& s, std::int64_t n);

// max(phi(n), ceil(n/2)); every member degree is strictly larger.
std::int64_t lower_bound(std::int64_t n);

// Witness of degree n - n/d from the units of Z_d scaled by n/d, for a
// square-free divisor d >= 6 of n with an even number of prime factors.
SparseSignature witness_even_count_divisor(std::int64_t n, std::int64_t d);

struct ThmMainWitness {
    std::int64_t v = 0;
    SparseSignature signature;
};

// For n = 2 p_1 ... p_k (odd primes p_1 < ... < p_k, k >= 2): witness of
// degree n - v with v = max(v_1, v_2), where v_1 = n/(2 p_1) comes from the
// even-divisor construction and v_2 is the least exponent of the shifted
// two-block subset.
ThmMainWitness witness_thm_main(std::int64_t n);

// Flat construction: split Phi_n = f_1 - f_2, fold to f_1 + x^(n/2) f_2, and
// cancel an interior monomial. Requires n even, square-free, >= 6, flat.
SparseSignature witness_flat(std::int64_t n);

// x -> x^(n/n0) on the exponents; radical(n) must equal n0 and s must be a
// member of A_{n0}.
SparseSignature lift_squarefree(const SparseSignature& s, std::int64_t n0, std::int64_t n);

// (n / (p1 p2)) (p1 p2 - 1) for n with exactly two distinct prime factors.
std::int64_t exact_two_prime(std::int64_t n);

enum class SearchStrategy { exhaustive, meet_in_middle };

std::string strategy_name(SearchStrategy s);

struct SearchOutcome {
    enum class Status { found, empty, budget_exhausted };

    Status status = Status::empty;
    // valid when found
    std::int64_t degree = 0;
    SparseSignature witness;
    // valid when budget_exhausted
    std::int64_t lowest_unexplored = 0;
    std::optional<std::pair<std::int64_t, SparseSignature>> best_upper;
    // explored node count (diagnostics)
    std::uint64_t nodes = 0;
};

// Minimum-degree member of A_n, or empty. Prime powers return empty without
// any search. Degrees are scanned ascending from lower_bound(n) + 1; among
// witnesses of minimal degree the one with the fewest inner exponents and
// then the lexicographically smallest exponent list is returned. Without an
// explicit budget, exhaustive runs accept n <= 36 and meet_in_middle n <= 60;
// anything larger reports budget_exhausted without claiming an exact value.
SearchOutcome search_min(std::int64_t n,
                         SearchStrategy strategy = SearchStrategy::exhaustive,
                         std::optional<std::uint64_t> budget = std::nullopt);

struct UpperBound {
    std::int64_t value = 0;
    std::string source;  // "cor_pq", "thm_main", "lem_flat"
    SparseSignature witness;
};

struct ExactValue {
    std::int64_t value = 0;
    SparseSignature witness;
    std::string strategy;
};

struct SkippedConstruction {
    std::string source;
    std::string reason;
};

struct BoundReport {
    std::int64_t n = 0;
    std::int64_t lower = 0;
    std::vector<UpperBound> uppers;
    std::optional<ExactValue> exact;
    bool empty_set = false;
    std::vector<SkippedConstruction> skipped;
};

// Lower bound, every applicable constructive upper (witnesses verified), and
// the exact search value when the default budget reaches n.
BoundReport bounds_report(std::int64_t n);

}  // namespace cyclo::ansearch
