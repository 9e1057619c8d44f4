#include "cyclo/ansearch.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo::ansearch {

using polyring::IntPolynomial;

namespace {

constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
constexpr std::int64_t kExhaustiveDefaultMaxN = 36;
constexpr std::int64_t kMeetInMiddleDefaultMaxN = 60;

bool shortlex_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

SparseSignature make_signature(std::int64_t degree, std::vector<std::int64_t> inner) {
    if (degree < 2) {
        throw DomainError("InvalidArgument", "signature degree must be >= 2");
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    if (!inner.empty() && (inner.front() < 1 || inner.back() >= degree)) {
        throw DomainError("InvalidArgument", "inner exponents must lie in [1, m-1]");
    }
    return {degree, std::move(inner)};
}

IntPolynomial to_polynomial(const SparseSignature& s) {
    std::vector<mpz_class> c(static_cast<std::size_t>(s.degree) + 1, 0);
    c.front() = -1;
    c.back() = 1;
    for (std::int64_t k : s.inner) c[static_cast<std::size_t>(k)] = -1;
    return IntPolynomial(std::move(c));
}

bool is_member(const SparseSignature& s, std::int64_t n) {
    if (s.degree >= n) return false;
    return polyring::divisible(to_polynomial(s), polyring::cyclotomic(n));
}

std::vector<std::int64_t> signature_to_subset(const SparseSignature& s, std::int64_t n) {
    if (!is_member(s, n)) {
        throw DomainError("NotMember", "signature is not a member of A_" + std::to_string(n));
    }
    std::vector<std::int64_t> subset{n - s.degree};
    for (std::int64_t k : s.inner) subset.push_back(n - s.degree + k);
    return subset;
}

SparseSignature subset_to_signature(const std::vector<std::int64_t>& subset, std::int64_t n) {
    if (subset.empty()) {
        throw DomainError("InvalidArgument", "exponent subset must be non-empty");
    }
    std::vector<std::int64_t> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || sorted.back() > n - 1 ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("InvalidArgument", "exponents must be distinct and lie in [1, n-1]");
    }
    const std::int64_t k0 = sorted.front();
    std::vector<std::int64_t> inner;
    inner.reserve(sorted.size() - 1);
    for (std::size_t i = 1; i < sorted.size(); ++i) inner.push_back(sorted[i] - k0);
    return make_signature(n - k0, std::move(inner));
}

std::int64_t sg_statistic(const SparseSignature& s, std::int64_t n) {
    std::int64_t acc = numtheory::ramanujan_sum(n, s.degree) - numtheory::ramanujan_sum(n, 0);
    for (std::int64_t k : s.inner) acc -= numtheory::ramanujan_sum(n, k);
    return acc;
}

std::int64_t lower_bound(std::int64_t n) {
    if (n < 2) throw DomainError("InvalidArgument", "lower_bound requires n >= 2");
    return std::max(numtheory::totient(n), (n + 1) / 2);
}

SparseSignature witness_even_count_divisor(std::int64_t n, std::int64_t d) {
    if (n < 2 || d < 6 || n % d != 0) {
        throw DomainError("BadDivisor", "d must be a divisor of n with d >= 6");
    }
    const auto factors = numtheory::factorize(d).entries;
    for (const auto& pp : factors) {
        if (pp.exponent > 1) {
            throw DomainError("BadDivisor", "d must be square-free");
        }
    }
    if (factors.size() % 2 != 0) {
        throw DomainError("BadDivisor", "d must have an even number of prime factors");
    }

    std::vector<std::int64_t> exponents;
    for (std::int64_t k : numtheory::unit_set(d).members) exponents.push_back(k * (n / d));
    SparseSignature s = subset_to_signature(exponents, n);
    if (s.degree != n - n / d || !is_member(s, n)) {
        throw DomainError("InternalCheckFailed", "even-divisor witness failed verification");
    }
    return s;
}

ThmMainWitness witness_thm_main(std::int64_t n) {
    const auto factors = numtheory::factorize(n).entries;
    bool shape_ok = factors.size() >= 3 && factors.front().prime == 2;
    for (const auto& pp : factors) {
        if (pp.exponent > 1) shape_ok = false;
    }
    if (!shape_ok) {
        throw DomainError("BadShape",
                          "n must be 2 p_1 ... p_k with k >= 2 distinct odd primes");
    }
    const std::int64_t p1 = factors[1].prime;
    const std::int64_t p2 = factors[2].prime;

    // shifted two-block subset: the min exponent is v_2
    std::vector<std::int64_t> t_prime;
    for (std::int64_t r : numtheory::unit_set(2 * p1).members) {
        t_prime.push_back((n * r / (2 * p1) + n / (2 * p2)) % n);
    }
    for (std::int64_t l : numtheory::unit_set(p2).members) {
        if (l == (p2 - 1) / 2) continue;
        t_prime.push_back(n * l / p2 + n / (2 * p2));
    }
    const std::int64_t v2 = *std::min_element(t_prime.begin(), t_prime.end());
    const std::int64_t v1 = n / (2 * p1);
    const std::int64_t v = std::max(v1, v2);

    // printed case split; the boundaries p2 = 2 p1 and p2 = 3 p1 cannot occur
    std::int64_t v_case;
    if (2 * p1 > p2) {
        v_case = (n / 2) * (p1 + p2) / (p1 * p2);
    } else if (p2 < 3 * p1) {
        v_case = 3 * n / (2 * p2);
    } else {
        v_case = n / (2 * p1);
    }
    if (v_case != v) {
        throw DomainError("InternalCheckFailed", "case formula disagrees with max(v1, v2)");
    }

    SparseSignature s = v == v2 ? subset_to_signature(t_prime, n)
                                : witness_even_count_divisor(n, 2 * p1);
    if (s.degree != n - v || !is_member(s, n)) {
        throw DomainError("InternalCheckFailed", "thm-main witness failed verification");
    }
    return {v, std::move(s)};
}

SparseSignature witness_flat(std::int64_t n) {
    if (n % 2 != 0) throw DomainError("OddModulus", "construction requires even n");
    if (n < 6) throw DomainError("InvalidArgument", "construction requires n >= 6");
    if (numtheory::radical(n) != n) throw DomainError("NotSquarefree", "n must be square-free");
    const auto prof = polyring::profile(n);
    if (!prof.flat) {
        throw DomainError("NotFlat", "Phi_" + std::to_string(n) + " has height " +
                                         prof.height.get_str());
    }

    // folded polynomial f_1 + x^(n/2) f_2 from the unique split Phi_n = f_1 - f_2
    const std::int64_t half = n / 2;
    const int phi_deg = prof.phi_n.degree();
    std::vector<mpz_class> folded(static_cast<std::size_t>(phi_deg + half) + 1, 0);
    for (int i = 0; i <= phi_deg; ++i) {
        const mpz_class& coeff = prof.phi_n.coefficient(i);
        if (coeff == 1) {
            folded[static_cast<std::size_t>(i)] += 1;
        } else if (coeff == -1) {
            folded[static_cast<std::size_t>(i + half)] += 1;
        }
    }
    const IntPolynomial transported{std::move(folded)};
    const std::int64_t d = transported.degree();

    std::int64_t b = -1;
    for (std::int64_t e = d - half + 1; e < half; ++e) {
        if (transported.coefficient(static_cast<int>(e)) != 0) {
            b = e;
            break;
        }
    }
    if (b < 0) {
        throw DomainError("NoInteriorMonomial",
                          "no monomial with exponent strictly between D - n/2 and n/2");
    }

    std::vector<std::int64_t> inner;
    for (std::int64_t e = 1; e <= d; ++e) {
        if (e != b && transported.coefficient(static_cast<int>(e)) != 0) inner.push_back(e);
    }
    SparseSignature s = make_signature(b + half, std::move(inner));

    const std::int64_t expected =
        half + prof.totient - (prof.order % 2 == 0 ? 1 : 0);
    if (s.degree != expected || !is_member(s, n)) {
        throw DomainError("InternalCheckFailed", "flat witness failed verification");
    }
    return s;
}

SparseSignature lift_squarefree(const SparseSignature& s, std::int64_t n0, std::int64_t n) {
    if (n < 1 || numtheory::radical(n) != n0) {
        throw DomainError("BadRadical", "radical(n) must equal n0");
    }
    if (!is_member(s, n0)) {
        throw DomainError("NotMember", "signature is not a member of A_" + std::to_string(n0));
    }
    const std::int64_t t = n / n0;
    std::vector<std::int64_t> inner;
    inner.reserve(s.inner.size());
    for (std::int64_t k : s.inner) inner.push_back(k * t);
    return make_signature(s.degree * t, std::move(inner));
}

std::int64_t exact_two_prime(std::int64_t n) {
    const auto factors = numtheory::factorize(n).entries;
    if (factors.size() != 2) {
        throw DomainError("WrongFactorCount", "n must have exactly two distinct prime factors");
    }
    const std::int64_t pq = factors[0].prime * factors[1].prime;
    return (n / pq) * (pq - 1);
}

std::string strategy_name(SearchStrategy s) {
    return s == SearchStrategy::exhaustive ? "exhaustive" : "meet_in_middle";
}

namespace {

// Residues x^t mod Phi_n for t in [0, n) as small integer vectors, plus the
// trace functional Tr(zeta^t) = c_n(t) used for pruning.
struct ResidueTable {
    std::int64_t n = 0;
    int phi = 0;
    std::vector<std::vector<std::int64_t>> powers;
    std::vector<std::int64_t> trace;
};

ResidueTable build_residue_table(std::int64_t n) {
    ResidueTable table;
    table.n = n;
    const IntPolynomial phi_poly = polyring::cyclotomic(n);
    table.phi = phi_poly.degree();

    std::vector<mpz_class> cur(static_cast<std::size_t>(table.phi), 0);
    cur[0] = 1;
    for (std::int64_t t = 0; t < n; ++t) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(table.phi));
        for (int j = 0; j < table.phi; ++j) {
            const mpz_class& v = cur[static_cast<std::size_t>(j)];
            if (!v.fits_slong_p()) throw std::logic_error("residue overflow");
            row[static_cast<std::size_t>(j)] = v.get_si();
        }
        table.powers.push_back(std::move(row));
        table.trace.push_back(numtheory::ramanujan_sum(n, t));

        // multiply by x, reduce by the monic Phi_n
        mpz_class top = cur.back();
        for (int j = table.phi - 1; j > 0; --j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
        cur[0] = 0;
        if (top != 0) {
            for (int j = 0; j < table.phi; ++j) {
                cur[static_cast<std::size_t>(j)] -= top * phi_poly.coefficient(j);
            }
        }
    }
    return table;
}

// Shared state for one degree: find every subset S of {c+1..n-1} whose
// residue sum equals 1 - x^c mod Phi_n. Witnesses are K = {t - c : t in S}.
struct DegreeContext {
    const ResidueTable& table;
    std::int64_t c = 0;
    std::vector<std::int64_t> target;      // residue of 1 - x^c
    std::int64_t target_trace = 0;
    std::vector<std::vector<std::int64_t>> solutions;
    std::uint64_t* nodes = nullptr;
    std::uint64_t budget = 0;
    bool aborted = false;

    DegreeContext(const ResidueTable& t, std::int64_t c_in, std::uint64_t* node_counter,
                  std::uint64_t node_budget)
        : table(t), c(c_in), nodes(node_counter), budget(node_budget) {
        target.assign(table.powers[0].begin(), table.powers[0].end());
        for (int j = 0; j < table.phi; ++j) {
            target[static_cast<std::size_t>(j)] -= table.powers[static_cast<std::size_t>(c)]
                                                                [static_cast<std::size_t>(j)];
        }
        target_trace = table.trace[0] - table.trace[static_cast<std::size_t>(c)];
    }

    bool charge_node() {
        if (*nodes >= budget) {
            aborted = true;
            return false;
        }
        ++*nodes;
        return true;
    }
};

// Exhaustive branch-and-bound. Exponents below phi(n) reduce to unit vectors,
// so only t >= phi(n) need branching; the unit tail is forced coordinatewise.
// Pruning uses per-coordinate suffix reachability intervals plus the
// Ramanujan-trace interval (the S_f = 0 necessary condition applied to
// partial sums).
class ExhaustiveDegreeSearch {
public:
    explicit ExhaustiveDegreeSearch(DegreeContext& ctx) : ctx_(ctx) {
        const int phi = ctx_.table.phi;
        for (std::int64_t t = ctx_.c + 1; t < ctx_.table.n; ++t) {
            if (t < phi) {
                unit_coord_.push_back(t);
            } else {
                high_.push_back(t);
            }
        }
        std::sort(high_.rbegin(), high_.rend());

        unit_flex_.assign(static_cast<std::size_t>(phi), 0);
        for (std::int64_t j : unit_coord_) unit_flex_[static_cast<std::size_t>(j)] = 1;
        unit_trace_lo_ = unit_trace_hi_ = 0;
        for (std::int64_t j : unit_coord_) {
            const std::int64_t tr = ctx_.table.trace[static_cast<std::size_t>(j)];
            unit_trace_lo_ += std::min<std::int64_t>(0, tr);
            unit_trace_hi_ += std::max<std::int64_t>(0, tr);
        }

        const std::size_t h = high_.size();
        suffix_lo_.assign(h + 1, std::vector<std::int64_t>(static_cast<std::size_t>(phi), 0));
        suffix_hi_ = suffix_lo_;
        suffix_trace_lo_.assign(h + 1, 0);
        suffix_trace_hi_.assign(h + 1, 0);
        for (std::size_t i = h; i-- > 0;) {
            const auto& row = ctx_.table.powers[static_cast<std::size_t>(high_[i])];
            for (int j = 0; j < phi; ++j) {
                suffix_lo_[i][static_cast<std::size_t>(j)] =
                    suffix_lo_[i + 1][static_cast<std::size_t>(j)] +
                    std::min<std::int64_t>(0, row[static_cast<std::size_t>(j)]);
                suffix_hi_[i][static_cast<std::size_t>(j)] =
                    suffix_hi_[i + 1][static_cast<std::size_t>(j)] +
                    std::max<std::int64_t>(0, row[static_cast<std::size_t>(j)]);
            }
            const std::int64_t tr = ctx_.table.trace[static_cast<std::size_t>(high_[i])];
            suffix_trace_lo_[i] = suffix_trace_lo_[i + 1] + std::min<std::int64_t>(0, tr);
            suffix_trace_hi_[i] = suffix_trace_hi_[i + 1] + std::max<std::int64_t>(0, tr);
        }
    }

    void run() {
        need_ = ctx_.target;
        need_trace_ = ctx_.target_trace;
        dfs(0);
    }

private:
    void dfs(std::size_t idx) {
        if (ctx_.aborted || !ctx_.charge_node()) return;

        const int phi = ctx_.table.phi;
        for (int j = 0; j < phi; ++j) {
            const std::int64_t v = need_[static_cast<std::size_t>(j)];
            if (v < suffix_lo_[idx][static_cast<std::size_t>(j)] ||
                v > suffix_hi_[idx][static_cast<std::size_t>(j)] +
                        unit_flex_[static_cast<std::size_t>(j)]) {
                return;
            }
        }
        if (need_trace_ < suffix_trace_lo_[idx] + unit_trace_lo_ ||
            need_trace_ > suffix_trace_hi_[idx] + unit_trace_hi_) {
            return;
        }

        if (idx == high_.size()) {
            close_leaf();
            return;
        }

        dfs(idx + 1);
        if (ctx_.aborted) return;

        const std::int64_t t = high_[idx];
        const auto& row = ctx_.table.powers[static_cast<std::size_t>(t)];
        for (int j = 0; j < phi; ++j) need_[static_cast<std::size_t>(j)] -= row[static_cast<std::size_t>(j)];
        need_trace_ -= ctx_.table.trace[static_cast<std::size_t>(t)];
        chosen_.push_back(t);
        dfs(idx + 1);
        chosen_.pop_back();
        for (int j = 0; j < phi; ++j) need_[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
        need_trace_ += ctx_.table.trace[static_cast<std::size_t>(t)];
    }

    // All high exponents are decided; the residual must be completed by the
    // unit-vector exponents, which forces each one individually.
    void close_leaf() {
        const int phi = ctx_.table.phi;
        for (int j = 0; j < phi; ++j) {
            const std::int64_t v = need_[static_cast<std::size_t>(j)];
            if (unit_flex_[static_cast<std::size_t>(j)] ? (v != 0 && v != 1) : (v != 0)) return;
        }
        std::vector<std::int64_t> inner;
        for (std::int64_t j : unit_coord_) {
            if (need_[static_cast<std::size_t>(j)] == 1) inner.push_back(j - ctx_.c);
        }
        for (std::int64_t t : chosen_) inner.push_back(t - ctx_.c);
        std::sort(inner.begin(), inner.end());
        ctx_.solutions.push_back(std::move(inner));
    }

    DegreeContext& ctx_;
    std::vector<std::int64_t> high_;
    std::vector<std::int64_t> unit_coord_;
    std::vector<std::int64_t> unit_flex_;
    std::int64_t unit_trace_lo_ = 0;
    std::int64_t unit_trace_hi_ = 0;
    std::vector<std::vector<std::int64_t>> suffix_lo_;
    std::vector<std::vector<std::int64_t>> suffix_hi_;
    std::vector<std::int64_t> suffix_trace_lo_;
    std::vector<std::int64_t> suffix_trace_hi_;

    std::vector<std::int64_t> need_;
    std::int64_t need_trace_ = 0;
    std::vector<std::int64_t> chosen_;
};

std::uint64_t hash_vector(const std::vector<std::int64_t>& v) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int64_t x : v) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ULL;
    }
    return h;
}

// Half-enumeration with a hash join. The hash is advisory: candidate matches
// are re-verified componentwise and returned witnesses go through the full
// divisibility test in search_min.
class MeetInMiddleDegreeSearch {
public:
    explicit MeetInMiddleDegreeSearch(DegreeContext& ctx) : ctx_(ctx) {
        for (std::int64_t t = ctx_.c + 1; t < ctx_.table.n; ++t) items_.push_back(t);
        const std::size_t half = items_.size() / 2;
        left_.assign(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(half));
        right_.assign(items_.begin() + static_cast<std::ptrdiff_t>(half), items_.end());
    }

    void run() {
        if (right_.size() > 62) {
            // 2^62 half-sums cannot be enumerated; report the budget as spent
            ctx_.aborted = true;
            return;
        }
        sum_.assign(static_cast<std::size_t>(ctx_.table.phi), 0);
        enumerate_right(0, 0);
        if (ctx_.aborted) return;
        sum_.assign(static_cast<std::size_t>(ctx_.table.phi), 0);
        chosen_left_.clear();
        probe_left(0);
    }

private:
    void enumerate_right(std::size_t idx, std::uint64_t mask) {
        if (ctx_.aborted) return;
        if (idx == right_.size()) {
            if (!ctx_.charge_node()) return;
            index_[hash_vector(sum_)].push_back(mask);
            return;
        }
        enumerate_right(idx + 1, mask);
        const auto& row = ctx_.table.powers[static_cast<std::size_t>(right_[idx])];
        for (std::size_t j = 0; j < sum_.size(); ++j) sum_[j] += row[j];
        enumerate_right(idx + 1, mask | (1ULL << idx));
        for (std::size_t j = 0; j < sum_.size(); ++j) sum_[j] -= row[j];
    }

    void probe_left(std::size_t idx) {
        if (ctx_.aborted) return;
        if (idx == left_.size()) {
            if (!ctx_.charge_node()) return;
            join();
            return;
        }
        probe_left(idx + 1);
        const auto& row = ctx_.table.powers[static_cast<std::size_t>(left_[idx])];
        for (std::size_t j = 0; j < sum_.size(); ++j) sum_[j] += row[j];
        chosen_left_.push_back(left_[idx]);
        probe_left(idx + 1);
        chosen_left_.pop_back();
        for (std::size_t j = 0; j < sum_.size(); ++j) sum_[j] -= row[j];
    }

    void join() {
        std::vector<std::int64_t> need = ctx_.target;
        for (std::size_t j = 0; j < need.size(); ++j) need[j] -= sum_[j];
        const auto it = index_.find(hash_vector(need));
        if (it == index_.end()) return;
        for (std::uint64_t mask : it->second) {
            std::vector<std::int64_t> rsum(need.size(), 0);
            for (std::size_t b = 0; b < right_.size(); ++b) {
                if (!(mask & (1ULL << b))) continue;
                const auto& row = ctx_.table.powers[static_cast<std::size_t>(right_[b])];
                for (std::size_t j = 0; j < rsum.size(); ++j) rsum[j] += row[j];
            }
            if (rsum != need) continue;
            std::vector<std::int64_t> inner;
            for (std::int64_t t : chosen_left_) inner.push_back(t - ctx_.c);
            for (std::size_t b = 0; b < right_.size(); ++b) {
                if (mask & (1ULL << b)) inner.push_back(right_[b] - ctx_.c);
            }
            std::sort(inner.begin(), inner.end());
            ctx_.solutions.push_back(std::move(inner));
        }
    }

    DegreeContext& ctx_;
    std::vector<std::int64_t> items_;
    std::vector<std::int64_t> left_;
    std::vector<std::int64_t> right_;
    std::vector<std::int64_t> sum_;
    std::vector<std::int64_t> chosen_left_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> index_;
};

}  // namespace

SearchOutcome search_min(std::int64_t n, SearchStrategy strategy,
                         std::optional<std::uint64_t> budget) {
    if (n < 2) throw DomainError("InvalidArgument", "search requires n >= 2");

    SearchOutcome out;
    if (numtheory::is_prime_power(n)) {
        out.status = SearchOutcome::Status::empty;
        return out;
    }

    const std::int64_t lower = lower_bound(n);
    if (!budget) {
        const std::int64_t cap = strategy == SearchStrategy::exhaustive
                                     ? kExhaustiveDefaultMaxN
                                     : kMeetInMiddleDefaultMaxN;
        if (n > cap) {
            out.status = SearchOutcome::Status::budget_exhausted;
            out.lowest_unexplored = lower + 1;
            return out;
        }
    }
    const std::uint64_t node_budget = budget.value_or(kDefaultNodeBudget);

    const ResidueTable table = build_residue_table(n);
    for (std::int64_t m = lower + 1; m <= n - 1; ++m) {
        DegreeContext ctx(table, n - m, &out.nodes, node_budget);
        if (strategy == SearchStrategy::exhaustive) {
            ExhaustiveDegreeSearch(ctx).run();
        } else {
            MeetInMiddleDegreeSearch(ctx).run();
        }

        std::optional<std::vector<std::int64_t>> best;
        for (auto& sol : ctx.solutions) {
            if (!best || shortlex_less(sol, *best)) best = std::move(sol);
        }

        if (ctx.aborted) {
            out.status = SearchOutcome::Status::budget_exhausted;
            out.lowest_unexplored = m;
            if (best) {
                SparseSignature s = make_signature(m, std::move(*best));
                if (is_member(s, n)) out.best_upper = {{m, std::move(s)}};
            }
            return out;
        }
        if (best) {
            SparseSignature s = make_signature(m, std::move(*best));
            if (!is_member(s, n)) {
                throw DomainError("InternalCheckFailed", "search witness failed re-verification");
            }
            out.status = SearchOutcome::Status::found;
            out.degree = m;
            out.witness = std::move(s);
            return out;
        }
    }
    out.status = SearchOutcome::Status::empty;
    return out;
}

BoundReport bounds_report(std::int64_t n) {
    if (n < 2) throw DomainError("InvalidArgument", "bounds_report requires n >= 2");

    BoundReport report;
    report.n = n;
    report.lower = lower_bound(n);

    // cor_pq: best admissible even-prime-count square-free divisor (the
    // smallest one maximizes n/d)
    std::optional<std::int64_t> best_d;
    for (std::int64_t d : numtheory::divisors(n)) {
        if (d < 6) continue;
        const auto factors = numtheory::factorize(d).entries;
        bool squarefree = true;
        for (const auto& pp : factors) {
            if (pp.exponent > 1) squarefree = false;
        }
        if (!squarefree || factors.size() % 2 != 0) continue;
        best_d = d;
        break;
    }
    if (best_d) {
        SparseSignature w = witness_even_count_divisor(n, *best_d);
        report.uppers.push_back({n - n / *best_d, "cor_pq", std::move(w)});
    } else {
        report.skipped.push_back(
            {"cor_pq", "no square-free divisor >= 6 with an even number of prime factors"});
    }

    try {
        ThmMainWitness w = witness_thm_main(n);
        report.uppers.push_back({n - w.v, "thm_main", std::move(w.signature)});
    } catch (const DomainError& e) {
        report.skipped.push_back({"thm_main", e.what()});
    }

    try {
        SparseSignature w = witness_flat(n);
        report.uppers.push_back({w.degree, "lem_flat", std::move(w)});
    } catch (const DomainError& e) {
        report.skipped.push_back({"lem_flat", e.what()});
    }

    const SearchStrategy strategy = n <= kExhaustiveDefaultMaxN
                                        ? SearchStrategy::exhaustive
                                        : SearchStrategy::meet_in_middle;
    if (n <= kMeetInMiddleDefaultMaxN) {
        SearchOutcome outcome = search_min(n, strategy);
        switch (outcome.status) {
            case SearchOutcome::Status::found:
                report.exact = ExactValue{outcome.degree, std::move(outcome.witness),
                                          strategy_name(strategy)};
                break;
            case SearchOutcome::Status::empty:
                report.empty_set = true;
                break;
            case SearchOutcome::Status::budget_exhausted:
                report.skipped.push_back(
                    {"search", "BudgetExhausted: degrees from " +
                                   std::to_string(outcome.lowest_unexplored) + " unexplored"});
                break;
        }
    } else {
        report.skipped.push_back(
            {"search", "BudgetExhausted: n exceeds the default search range"});
    }

    for (const auto& upper : report.uppers) {
        if (upper.witness.degree != upper.value || !is_member(upper.witness, n)) {
            throw DomainError("InternalCheckFailed", "upper bound witness failed verification");
        }
    }
    if (report.exact) {
        if (report.exact->value <= report.lower) {
            throw DomainError("InternalCheckFailed", "exact value violates the lower bound");
        }
        for (const auto& upper : report.uppers) {
            if (report.exact->value > upper.value) {
                throw DomainError("InternalCheckFailed", "exact value exceeds an upper bound");
            }
        }
    }
    return report;
}

}  // namespace cyclo::ansearch
