// icecount: exact counting for six-vertex lattice models with
// partition-determined boundaries.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "icecount/enumerate.hpp"
#include "icecount/exactalg.hpp"
#include "icecount/formulas.hpp"
#include "icecount/grid_state.hpp"

using json = nlohmann::json;
using namespace icecount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct RunReport {
    std::string command;
    json inputs = json::object();
    json results = json::array();
    json checks = json::array();
    bool all_pass = true;
    int warnings = 0;

    void add_result(const std::string& name, const std::string& kind, const json& value) {
        results.push_back({{"name", name}, {"kind", kind}, {"value", value}});
    }

    void add_check(const std::string& name, const std::string& expected,
                   const std::string& actual) {
        const bool pass = expected == actual;
        checks.push_back(
            {{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
        all_pass = all_pass && pass;
    }

    void add_skip(const std::string& name, const std::string& reason) {
        checks.push_back({{"name", name}, {"skipped", true}, {"reason", reason}});
        ++warnings;
    }

    int emit(bool as_json, bool no_meta, long elapsed_ms) const {
        if (as_json) {
            json out{{"command", command},
                     {"inputs", inputs},
                     {"results", results},
                     {"checks", checks}};
            if (!no_meta) out["elapsed_ms"] = elapsed_ms;
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& r : results)
                std::cout << r["name"].get<std::string>() << " = "
                          << (r["value"].is_string() ? r["value"].get<std::string>()
                                                     : r["value"].dump())
                          << "\n";
            for (const auto& c : checks) {
                if (c.contains("skipped")) {
                    std::cout << "SKIP " << c["name"].get<std::string>() << " ("
                              << c["reason"].get<std::string>() << ")\n";
                    continue;
                }
                std::cout << (c["pass"].get<bool>() ? "ok   " : "FAIL ")
                          << c["name"].get<std::string>();
                if (!c["pass"].get<bool>())
                    std::cout << ": expected " << c["expected"].get<std::string>() << ", got "
                              << c["actual"].get<std::string>();
                std::cout << "\n";
            }
            if (!checks.empty())
                std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
            if (!no_meta) std::cout << "elapsed: " << elapsed_ms << " ms\n";
        }
        return all_pass ? kExitOk : kExitCheckFailed;
    }
};

int default_threads() {
    if (const char* env = std::getenv("ICECOUNT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string qstr(const mpq_class& q) { return q.get_str(); }

// --- verify suites -------------------------------------------------------

void for_each_partition(int n, long lambda1_max,
                        const std::function<void(const Partition&)>& fn);

void suite_engines(RunReport& rep, int n_max, long lambda1_max) {
    for (int n = 1; n <= n_max; ++n) {
        for_each_partition(n, lambda1_max, [&](const Partition& lambda) {
            const auto spec = boundary_from_partition(lambda);
            const Count bt = count_backtrack(spec);
            const Count dp = count_rowdp(spec);
            const Count st = static_cast<long>(enumerate_states(spec).size());
            rep.add_check("engines " + lambda.to_string(), bt.get_str(),
                          dp == bt && st == bt ? bt.get_str()
                                               : dp.get_str() + "/" + st.get_str());
        });
    }
}

void suite_pathcounts(RunReport& rep, int r_max, int c_max) {
    for (int r = 1; r <= r_max; ++r) {
        for (int c = 1; c <= c_max; ++c) {
            const Count expected = path_count(r, c);
            const Count s = count_backtrack(boundary_S(r, c));
            const Count t = count_rowdp(boundary_T(r, c));
            rep.add_check("S(" + std::to_string(r) + "," + std::to_string(c) + ")",
                          expected.get_str(), s.get_str());
            rep.add_check("T(" + std::to_string(r) + "," + std::to_string(c) + ")",
                          expected.get_str(), t.get_str());
            if (r > 1 && c > 1) {
                const Count rec = count_backtrack(boundary_S(r - 1, c)) +
                                  count_backtrack(boundary_T(r, c - 1));
                rep.add_check("S recurrence (" + std::to_string(r) + "," + std::to_string(c) + ")",
                              s.get_str(), rec.get_str());
            }
        }
    }
}

void suite_lshape(RunReport& rep, int n_max, long m_max) {
    for (int n = 1; n <= n_max; ++n)
        for (long m = 0; m <= m_max; ++m)
            for (int j = 1; j <= n; ++j)
                rep.add_check("L(m=" + std::to_string(m) + ",j=" + std::to_string(j) +
                                  ",n=" + std::to_string(n) + ")",
                              l_count(m, j).get_str(),
                              count_backtrack(boundary_L(n, m, j)).get_str());
}

void for_each_partition(int n, long lambda1_max,
                        const std::function<void(const Partition&)>& fn) {
    std::vector<long> cur;
    std::function<void(long)> gen = [&](long max_part) {
        if (static_cast<int>(cur.size()) == n) {
            fn(Partition(cur));
            return;
        }
        for (long p = max_part; p >= 0; --p) {
            cur.push_back(p);
            gen(p);
            cur.pop_back();
        }
    };
    gen(lambda1_max);
}

void suite_decomposition(RunReport& rep, int n_max, long lambda1_max) {
    for (int n = 2; n <= n_max; ++n)
        for_each_partition(n, lambda1_max, [&](const Partition& lambda) {
            rep.add_check("decompose " + lambda.to_string(),
                          count_partition(lambda, Engine::Backtrack).get_str(),
                          decompose_count(lambda).get_str());
        });
}

void suite_hooks(RunReport& rep, int n_max, long m_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (long m = 0; m <= m_max; ++m) {
            std::vector<long> parts(static_cast<size_t>(n), 0);
            parts[0] = m;
            const Count enumerated = count_partition(Partition(parts), Engine::RowDp);
            rep.add_check("hook refined sum (n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                          enumerated.get_str(), hook_sum_refined(n, m).get_str());
            rep.add_check("hook m sum (n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                          enumerated.get_str(), hook_sum_m(n, m).get_str());
        }
    }
    for (long m = 0; m <= 10; ++m)
        rep.add_check("A_(m,0)(2) = m+2 at m=" + std::to_string(m),
                      Count(m + 2).get_str(), hook_sum_refined(2, m).get_str());
}

void suite_staircase(RunReport& rep, int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        for (long l1 = n - 1; l1 <= n + 3; ++l1) {
            std::vector<long> parts{l1};
            for (long p = n - 2; p >= 0; --p) parts.push_back(p);
            rep.add_check("staircase (n=" + std::to_string(n) + ",l1=" + std::to_string(l1) + ")",
                          count_partition(Partition(parts), Engine::RowDp).get_str(),
                          staircase_sum(n, l1).get_str());
        }
    }
    for (int n = 1; n <= 6; ++n)
        rep.add_check("staircase base A_V(2n+1) at n=" + std::to_string(n),
                      vsasm_total(n).get_str(), staircase_sum(n, n - 1).get_str());
}

void suite_refined_asm(RunReport& rep, int n_max) {
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j)
            rep.add_check("A(n,j) enumeration (n=" + std::to_string(n) + ",j=" + std::to_string(j) + ")",
                          refined_asm(n, j).get_str(),
                          count_backtrack(boundary_refined_asm(n, j)).get_str());
    for (int n = 1; n <= 8; ++n) {
        Count sum = 0;
        for (int j = 1; j <= n; ++j) sum += refined_asm(n, j);
        rep.add_check("sum_j A(n,j) = A(n) at n=" + std::to_string(n), asm_total(n).get_str(),
                      sum.get_str());
    }
}

void suite_refined_vsasm(RunReport& rep, int n_max) {
    for (int n = 2; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i)
            rep.add_check("A_V(2n+1,i) enumeration (n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")",
                          refined_vsasm(n, i).get_str(),
                          count_backtrack(boundary_refined_vsasm(n, i)).get_str());
    for (int n = 1; n <= 8; ++n) {
        Count sum = 0;
        for (int i = 1; i <= n; ++i) sum += refined_vsasm(n, i);
        rep.add_check("sum_i A_V(2n+1,i) at n=" + std::to_string(n), vsasm_total(n).get_str(),
                      sum.get_str());
    }
}

void suite_lemma13(RunReport& rep, long m_max, int n_max) {
    for (long m = 0; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n) {
            rep.add_check("identity lhs=rhs (m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")",
                          qstr(lemma13_lhs(m, n)), qstr(lemma13_rhs(m, n)));
            rep.add_check("hook via identity (m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")",
                          "true", check_eq_alambda_inter(m, n) ? "true" : "false");
        }
}

void suite_shift(RunReport& rep, int n_max, long lambda1_max) {
    for (int n = 1; n <= n_max; ++n)
        for_each_partition(n, lambda1_max, [&](const Partition& lambda) {
            const Count base = count_partition(lambda, Engine::RowDp);
            for (long d = 1; d <= 3; ++d)
                rep.add_check("shift " + lambda.to_string() + "+" + std::to_string(d),
                              base.get_str(),
                              count_partition(lambda.translated(d), Engine::RowDp).get_str());
        });
}

// Table 1 frozen from the hook-shape closed forms, ascending coefficients.
struct Table1Row {
    std::vector<long> num, den;
};
const std::vector<Table1Row> kTable1{
    {{1}, {1}},
    {{1, 1}, {2}},
    {{2, 3, 6, 1}, {4, 8}},
    {{12, 10, 35, 14, 1}, {24, 48}},
    {{144, 156, 448, 465, 199, 27, 1}, {288, 768, 384}},
    {{1440, 1128, 4138, 4569, 2540, 542, 42, 1}, {2880, 7680, 3840}},
};

void suite_table1(RunReport& rep) {
    for (size_t m = 0; m < kTable1.size(); ++m) {
        std::vector<mpq_class> num(kTable1[m].num.begin(), kTable1[m].num.end());
        std::vector<mpq_class> den(kTable1[m].den.begin(), kTable1[m].den.end());
        const RatFunc printed{Poly(num), Poly(den)};
        const RatFunc computed = rm_ratfunc(static_cast<int>(m));
        rep.add_check("table row m=" + std::to_string(m), printed.to_string(),
                      computed.equivalent(printed) ? printed.to_string()
                                                   : computed.to_string());
    }
    for (int m = 0; m <= 8; ++m) {
        const RatFunc rm = rm_ratfunc(m);  // throws on a degree mismatch
        rep.add_check("degrees m=" + std::to_string(m),
                      std::to_string(2 * m - (m + 1) / 2) + "/" +
                          std::to_string(m - (m + 1) / 2),
                      std::to_string(rm.num().degree()) + "/" +
                          std::to_string(rm.den().degree()));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting for partition-bounded six-vertex models"};
    app.require_subcommand(1);

    bool as_json = false, no_meta = false;
    int threads = default_threads();
    app.add_flag("--json", as_json, "emit a JSON report");
    app.add_flag("--no-meta", no_meta, "omit timing metadata");
    app.add_option("--threads", threads, "worker threads for the backtracking engine");

    // count
    auto* count_cmd = app.add_subcommand("count", "count states for a partition boundary");
    std::string partition_text, method = "rowdp";
    unsigned long budget_nodes = 0;
    count_cmd->fallthrough();
    count_cmd->add_option("-p,--partition", partition_text, "partition, e.g. 2,2,0")->required();
    count_cmd->add_option("-m,--method", method, "backtrack|rowdp|decompose|formula-auto");
    count_cmd->add_option("--budget-nodes", budget_nodes, "abort after this many search nodes");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    int r_max = 7, c_max = 7, n_max = 0, d_max = 3;
    long m_max = -1, lambda1_max = -1;
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", suite,
                           "engines|pathcounts|lshape|decomposition|hooks|staircase|"
                           "refined-asm|refined-vsasm|lemma13|shift|table1")
        ->required();
    verify_cmd->add_option("--r-max", r_max);
    verify_cmd->add_option("--c-max", c_max);
    verify_cmd->add_option("--n-max", n_max);
    verify_cmd->add_option("--m-max", m_max);
    verify_cmd->add_option("--lambda1-max", lambda1_max);
    verify_cmd->add_option("--d-max", d_max);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "A_lambda as a polynomial in lambda1");
    std::string tail_text;
    int poly_n = 0;
    poly_cmd->fallthrough();
    poly_cmd->add_option("--tail", tail_text, "fixed parts lambda2..lambdan, e.g. 1,0")->required();
    poly_cmd->add_option("--n", poly_n, "number of parts")->required();

    // render
    auto* render_cmd = app.add_subcommand("render", "print one state as an arrow grid");
    std::string render_partition;
    long render_index = 0;
    render_cmd->fallthrough();
    render_cmd->add_option("-p,--partition", render_partition)->required();
    render_cmd->add_option("-i,--index", render_index, "state index in enumeration order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    RunReport rep;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (*count_cmd) {
            rep.command = "count";
            const Partition lambda = Partition::parse(partition_text);
            rep.inputs = {{"partition", partition_text}, {"method", method}};
            EnumBudget budget;
            if (budget_nodes > 0) budget.max_nodes = budget_nodes;
            Count result;
            if (method == "backtrack") {
                result = count_backtrack(boundary_from_partition(lambda), budget, threads);
            } else if (method == "rowdp") {
                result = count_rowdp(boundary_from_partition(lambda));
            } else if (method == "decompose") {
                result = decompose_count(lambda);
            } else if (method == "formula-auto") {
                if (lambda.is_hook()) {
                    result = hook_sum_refined(lambda.length(), lambda.first() - (lambda.length() > 1 ? lambda.second() : 0));
                } else if (lambda.is_staircase()) {
                    result = staircase_sum(lambda.length(),
                                           lambda.first() - lambda.parts().back());
                } else {
                    std::cerr << "partition " << lambda.to_string()
                              << " is neither hook (m+d,d,...,d) nor staircase "
                                 "(l1+d,n-2+d,...,d); use an enumeration method\n";
                    return kExitUsage;
                }
            } else {
                std::cerr << "unknown method: " << method << "\n";
                return kExitUsage;
            }
            rep.add_result("A_lambda", "count", result.get_str());
        } else if (*verify_cmd) {
            rep.command = "verify";
            rep.inputs = {{"suite", suite}};
            if (suite == "engines")
                suite_engines(rep, n_max > 0 ? n_max : 4, lambda1_max >= 0 ? lambda1_max : 4);
            else if (suite == "pathcounts")
                suite_pathcounts(rep, r_max, c_max);
            else if (suite == "lshape")
                suite_lshape(rep, n_max > 0 ? n_max : 6, m_max >= 0 ? m_max : 5);
            else if (suite == "decomposition")
                suite_decomposition(rep, n_max > 0 ? n_max : 4, lambda1_max >= 0 ? lambda1_max : 4);
            else if (suite == "hooks")
                suite_hooks(rep, n_max > 0 ? n_max : 4, m_max >= 0 ? m_max : 5);
            else if (suite == "staircase")
                suite_staircase(rep, n_max > 0 ? n_max : 3);
            else if (suite == "refined-asm")
                suite_refined_asm(rep, n_max > 0 ? n_max : 4);
            else if (suite == "refined-vsasm")
                suite_refined_vsasm(rep, n_max > 0 ? n_max : 3);
            else if (suite == "lemma13")
                suite_lemma13(rep, m_max >= 0 ? m_max : 10, n_max > 0 ? n_max : 10);
            else if (suite == "shift")
                suite_shift(rep, n_max > 0 ? n_max : 4, lambda1_max >= 0 ? lambda1_max : 3);
            else if (suite == "table1")
                suite_table1(rep);
            else {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitUsage;
            }
        } else if (*poly_cmd) {
            rep.command = "poly";
            rep.inputs = {{"tail", tail_text}, {"n", poly_n}};
            const Partition tail_parts = Partition::parse(tail_text);
            std::vector<long> tail(tail_parts.parts().begin(), tail_parts.parts().end());
            const Poly p = a_lambda_poly(tail, poly_n);
            rep.add_result("A_lambda_poly", "poly", p.to_string("λ1"));
            rep.add_result("degree", "int", p.degree());
            // Out-of-sample comparison against enumeration.
            const long lambda2 = tail.front();
            for (long x = lambda2 + poly_n; x <= lambda2 + poly_n + 1; ++x) {
                std::vector<long> parts{x};
                parts.insert(parts.end(), tail.begin(), tail.end());
                rep.add_check("prediction at lambda1=" + std::to_string(x),
                              count_partition(Partition(parts), Engine::RowDp).get_str(),
                              qstr(p(mpq_class(x))));
            }
        } else if (*render_cmd) {
            rep.command = "render";
            const Partition lambda = Partition::parse(render_partition);
            rep.inputs = {{"partition", render_partition}, {"index", render_index}};
            const auto states = enumerate_states(boundary_from_partition(lambda));
            if (render_index < 0 || render_index >= static_cast<long>(states.size())) {
                std::cerr << "index " << render_index << " out of range: only "
                          << states.size() << " states (indices 0-" << states.size() - 1
                          << ")\n";
                return kExitUsage;
            }
            const GridState& state = states[static_cast<size_t>(render_index)];
            rep.add_result("state", "grid", state_to_json(state));
            if (!as_json) std::cout << render_ascii(state);
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded after " << e.nodes_visited << " nodes\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return rep.emit(as_json, no_meta, elapsed);
}
