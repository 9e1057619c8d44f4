#include "cyclo/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cyclo/ansearch.hpp"
#include "cyclo/error.hpp"
#include "cyclo/json_io.hpp"
#include "cyclo/matrixrep.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polyring.hpp"
#include "cyclo/verify.hpp"

namespace cyclo::cli {

namespace nt = cyclo::numtheory;
namespace pr = cyclo::polyring;
namespace mr = cyclo::matrixrep;
namespace an = cyclo::ansearch;

using json_io::ordered_json;
using pr::RatPolynomial;

namespace {

struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json result = ordered_json::object();
    std::vector<verify::Check> checks;

    ordered_json to_json() const {
        ordered_json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["result"] = result;
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["detail"] = c.detail;
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        return j;
    }
};

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

void emit_text(std::ostream& out, const Report& report) {
    out << report.command << "\n";
    for (const auto& [key, value] : report.inputs.items()) {
        out << "  " << key << " = " << value.dump() << "\n";
    }
    for (const auto& [key, value] : report.result.items()) {
        out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
    }
    for (const auto& c : report.checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    }
}

ordered_json signature_json(const an::SparseSignature& s) {
    ordered_json j = json_io::to_json(s);
    j["polynomial"] = pr::to_pretty_string(an::to_polynomial(s));
    return j;
}

int finish(std::ostream& out, const Report& report, bool as_json, int code = 0) {
    if (as_json) {
        emit_json(out, report.to_json());
    } else {
        emit_text(out, report);
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclo - exact tools for cyclotomic matrix representations"};
    app.require_subcommand(1);
    // let --json after a subcommand reach the parent app
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t r = 0;
    std::string strategy = "exhaustive";
    std::optional<std::uint64_t> budget;
    std::uint64_t budget_value = 0;
    bool as_dot = false;
    std::string matrix_path;
    std::string suite = "all";
    std::int64_t max_n = 0;

    auto* cmd_profile = app.add_subcommand("profile", "cyclotomic profile of n");
    cmd_profile->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);

    auto* cmd_cyclotomic = app.add_subcommand("cyclotomic", "coefficients of Phi_n");
    cmd_cyclotomic->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);

    auto* cmd_search = app.add_subcommand("search-an", "minimum-degree member of A_n");
    cmd_search->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);
    cmd_search->add_option("--strategy", strategy, "exhaustive | meet_in_middle")
        ->check(CLI::IsMember({"exhaustive", "meet_in_middle"}));
    auto* budget_opt = cmd_search->add_option("--budget", budget_value, "node limit");

    auto* cmd_bounds = app.add_subcommand("bounds", "lower/upper/exact bound report for A_n");
    cmd_bounds->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);

    auto* cmd_cayley = app.add_subcommand("cayley", "subfield representation of degree info (p, r)");
    cmd_cayley->add_option("p", p, "odd prime")->required()->check(CLI::PositiveNumber);
    cmd_cayley->add_option("r", r, "divisor of p - 1")->required()->check(CLI::PositiveNumber);
    cmd_cayley->add_flag("--dot", as_dot, "emit the digraph in DOT format");

    auto* cmd_hoffman = app.add_subcommand("hoffman", "Hoffman polynomial of an adjacency matrix");
    cmd_hoffman->add_option("--matrix", matrix_path, "path to a matrix JSON file")->required();

    auto* cmd_sym = app.add_subcommand("sym", "symmetric circulant representation of order n");
    cmd_sym->add_option("n", n, "order")->required()->check(CLI::PositiveNumber);

    auto* cmd_smallest = app.add_subcommand("smallest-order",
                                            "smallest circulant representation order for Q(zeta_n)");
    cmd_smallest->add_option("n", n, "modulus")->required()->check(CLI::PositiveNumber);

    auto* cmd_verify = app.add_subcommand("verify", "replay the acceptance checks");
    cmd_verify->add_option("suite", suite, "suite name or 'all'");
    cmd_verify->add_option("--max-n", max_n, "cap every range at this modulus");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (budget_opt->count() > 0) budget = budget_value;

    const auto started = std::chrono::steady_clock::now();
    Report report;
    int code = 0;
    try {
        if (cmd_profile->parsed()) {
            report.command = "profile";
            report.inputs["n"] = n;
            const auto prof = pr::profile(n);
            report.result["n"] = prof.n;
            report.result["phi"] = json_io::to_json(prof.phi_n);
            report.result["pretty"] = pr::to_pretty_string(prof.phi_n);
            report.result["totient"] = prof.totient;
            report.result["radical"] = prof.radical;
            report.result["height"] = prof.height.get_str();
            report.result["flat"] = prof.flat;
            report.result["order"] = prof.order;
            code = finish(out, report, as_json);
        } else if (cmd_cyclotomic->parsed()) {
            report.command = "cyclotomic";
            report.inputs["n"] = n;
            const auto phi = pr::cyclotomic(n);
            report.result["coefficients"] = json_io::to_json(phi);
            report.result["pretty"] = pr::to_pretty_string(phi);
            code = finish(out, report, as_json);
        } else if (cmd_search->parsed()) {
            report.command = "search-an";
            report.inputs["n"] = n;
            report.inputs["strategy"] = strategy;
            if (budget) report.inputs["budget"] = *budget;
            const auto strat = strategy == "exhaustive" ? an::SearchStrategy::exhaustive
                                                        : an::SearchStrategy::meet_in_middle;
            const auto outcome = an::search_min(n, strat, budget);
            switch (outcome.status) {
                case an::SearchOutcome::Status::found:
                    report.result["exact"] = signature_json(outcome.witness);
                    report.result["empty"] = false;
                    report.checks.push_back({"witness_member",
                                             an::is_member(outcome.witness, n),
                                             "witness re-verified by division"});
                    code = finish(out, report, as_json);
                    break;
                case an::SearchOutcome::Status::empty:
                    report.result["exact"] = nullptr;
                    report.result["empty"] = true;
                    code = finish(out, report, as_json);
                    break;
                case an::SearchOutcome::Status::budget_exhausted: {
                    report.result["error"] = "BudgetExhausted";
                    report.result["lowest_unexplored"] = outcome.lowest_unexplored;
                    if (outcome.best_upper) {
                        report.result["best_upper"] = signature_json(outcome.best_upper->second);
                    } else {
                        report.result["best_upper"] = nullptr;
                    }
                    code = finish(out, report, as_json, 1);
                    break;
                }
            }
        } else if (cmd_bounds->parsed()) {
            report.command = "bounds";
            report.inputs["n"] = n;
            const auto bounds = an::bounds_report(n);
            report.result = json_io::to_json(bounds);
            for (const auto& u : bounds.uppers) {
                report.checks.push_back({u.source + "_witness", an::is_member(u.witness, n),
                                         "degree " + std::to_string(u.value) + " verified"});
            }
            code = finish(out, report, as_json);
        } else if (cmd_cayley->parsed()) {
            report.command = "cayley";
            report.inputs["p"] = p;
            report.inputs["r"] = r;
            const auto a = mr::subfield_representation(p, r);
            const auto digraph = mr::make_cayley(p, [&] {
                std::vector<std::int64_t> conn;
                for (int i = 1; i < p; ++i) {
                    if (a.representer.coefficient(i) != 0) conn.push_back(i);
                }
                return conn;
            }());
            if (as_dot) {
                out << mr::to_dot(digraph);
                return 0;
            }
            const auto m = mr::dense(a);
            const RatPolynomial pm = mr::minimal_polynomial(m);
            const RatPolynomial q = mr::element_minimal_polynomial(
                p, RatPolynomial::from_integer(a.representer));
            const RatPolynomial h = mr::hoffman_polynomial(m);
            report.result["connection"] = digraph.connection;
            report.result["minpoly"] = json_io::to_json(pm);
            report.result["minpoly_pretty"] = pr::to_pretty_string(pm);
            report.result["q"] = json_io::to_json(q);
            report.result["q_pretty"] = pr::to_pretty_string(q);
            report.result["hoffman"] = json_io::to_json(h);
            report.result["hoffman_pretty"] = pr::to_pretty_string(h);
            report.checks.push_back(
                {"hoffman_identity",
                 mr::evaluate(h, m) == mr::DenseRatMatrix::all_ones(static_cast<int>(p)),
                 "J = h(A) entrywise"});
            report.checks.push_back({"ideal_canonical",
                                     mr::ideal_canonical(h, pm).generator == q,
                                     "<J> and <q(A)> share their canonical generator"});
            code = finish(out, report, as_json);
        } else if (cmd_hoffman->parsed()) {
            report.command = "hoffman";
            report.inputs["matrix"] = matrix_path;
            std::ifstream in(matrix_path);
            if (!in) throw DomainError("BadInput", "cannot open " + matrix_path);
            ordered_json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw DomainError("BadInput", std::string("matrix JSON parse failure: ") + e.what());
            }
            const auto m = json_io::matrix_from_json(j);
            const RatPolynomial h = mr::hoffman_polynomial(m);
            report.result["hoffman"] = json_io::to_json(h);
            report.result["hoffman_pretty"] = pr::to_pretty_string(h);
            report.checks.push_back({"hoffman_identity", true, "J = h(A) verified entrywise"});
            code = finish(out, report, as_json);
        } else if (cmd_sym->parsed()) {
            report.command = "sym";
            report.inputs["n"] = n;
            const auto sym = mr::symmetric_representation(n);
            const RatPolynomial delta = mr::element_minimal_polynomial(
                n, RatPolynomial::from_integer(sym.representer));
            const RatPolynomial pm = mr::minimal_polynomial(mr::dense(sym));
            report.result["representer"] = json_io::to_json(sym.representer);
            report.result["representer_pretty"] = pr::to_pretty_string(sym.representer);
            report.result["delta_minpoly"] = json_io::to_json(delta);
            report.result["delta_minpoly_pretty"] = pr::to_pretty_string(delta);
            report.result["minpoly_pretty"] = pr::to_pretty_string(pm);
            report.checks.push_back({"delta_degree",
                                     delta.degree() == nt::totient(n) / 2,
                                     "deg = phi(n)/2"});
            report.checks.push_back({"delta_divides",
                                     pr::divmod(pm, delta).remainder.is_zero(),
                                     "delta factor divides the minimal polynomial"});
            code = finish(out, report, as_json);
        } else if (cmd_smallest->parsed()) {
            report.command = "smallest-order";
            report.inputs["n"] = n;
            report.result["order"] = mr::smallest_circulant_order(n);
            code = finish(out, report, as_json);
        } else if (cmd_verify->parsed()) {
            report.command = "verify";
            report.inputs["suite"] = suite;
            if (max_n > 0) report.inputs["max_n"] = max_n;
            std::vector<verify::SuiteResult> results;
            if (suite == "all") {
                results = verify::run_all(max_n);
            } else {
                results.push_back(verify::run_suite(suite, max_n));
            }
            bool all_pass = true;
            ordered_json summary = ordered_json::array();
            for (const auto& sr : results) {
                ordered_json e;
                e["suite"] = sr.suite;
                e["pass"] = sr.pass();
                summary.push_back(std::move(e));
                if (!sr.pass()) all_pass = false;
                for (const auto& c : sr.checks) {
                    report.checks.push_back({sr.suite + "/" + c.name, c.pass, c.detail});
                }
            }
            report.result["suites"] = std::move(summary);
            report.result["pass"] = all_pass;
            code = finish(out, report, as_json, all_pass ? 0 : 1);
        }
    } catch (const DomainError& e) {
        ordered_json j;
        j["command"] = report.command;
        j["inputs"] = report.inputs;
        ordered_json error;
        error["name"] = e.name();
        error["detail"] = e.what();
        j["error"] = std::move(error);
        if (as_json) {
            emit_json(out, j);
        } else {
            out << report.command << "\n  error " << e.what() << "\n";
        }
        code = 1;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    err << "# elapsed_ms " << elapsed << "\n";
    return code;
}

}  // namespace cyclo::cli
