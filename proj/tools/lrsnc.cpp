// lrsnc: support-constrained LRS codes and distributed network coding.
//
//   lrsnc check PATTERN [--n N] [--k K]
//   lrsnc construct PATTERN --ell L [--parts a,b] [--q Q|auto] [--m M|auto] [--subcode] [--seed S] [--out FILE]
//   lrsnc design INSTANCE.json [--ell L] [--table L] [--no-synth] [--seed S] [--out FILE]
//   lrsnc simulate [DESIGN.json] [--trials T] [--seed S] [--out FILE]
//                  [--q Q --ell L --t T --rho R --rows a,b --cols a,b --M M]
//   lrsnc tables [--out FILE]
//
// Exit codes: 0 success / condition holds, 1 condition or feasibility failure,
// 2 usage or parse error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrsnc/io.hpp"
#include "lrsnc/lrsnc.hpp"

namespace {

using namespace lrsnc;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(out_path);
    if (!o) throw parse_error("cannot write " + out_path, 0);
    o << text;
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> v;
    for (const auto& tok : detail::split(s, ',')) v.push_back(static_cast<std::size_t>(detail::parse_uint(tok, 0)));
    return v;
}

std::string one_based(const std::vector<std::size_t>& v) {
    return detail::join(v, ",", [](std::size_t x) { return std::to_string(x + 1); });
}

SupportConstraint load_pattern(const std::string& path, std::size_t n, std::size_t k) {
    auto rows = parse_zero_pattern(read_file(path));
    if (k && rows.size() != k)
        throw parse_error("pattern has " + std::to_string(rows.size()) + " rows but --k is " + std::to_string(k), 0);
    std::size_t max_col = 0;
    for (const auto& r : rows)
        for (auto j : r) max_col = std::max(max_col, j + 1);
    if (n == 0) n = max_col;
    if (max_col > n) throw parse_error("column " + std::to_string(max_col) + " exceeds n = " + std::to_string(n), 0);
    return SupportConstraint(n, std::move(rows));
}

// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string pattern;
    std::size_t n = 0, k = 0;
};

int cmd_check(const CheckArgs& a) {
    const SupportConstraint sc = load_pattern(a.pattern, a.n, a.k);
    const auto rep = check_condition(sc);
    std::cout << "n = " << sc.n << ", k = " << sc.k() << '\n';
    std::cout << "condition: " << (rep.holds ? "holds" : "violated") << '\n';
    if (!rep.holds) {
        std::size_t inter = 0;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < sc.n; ++j) {
            bool all = true;
            for (auto i : rep.witness) all = all && sc.contains(i, j);
            if (all) ++inter;
        }
        std::cout << "witness: {" << one_based(rep.witness) << "} (|intersection| + |Omega| = "
                  << inter + rep.witness.size() << " > " << sc.k() << ")\n";
    }
    std::cout << "k_tilde = " << rep.k_tilde << '\n';
    std::cout << "equality_system = " << (rep.equality_system ? "true" : "false") << '\n';
    return rep.holds ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string pattern, parts, q = "auto", m = "auto", out;
    std::size_t n = 0, ell = 1;
    bool subcode = false;
    std::uint64_t seed = 0;
};

int cmd_construct(const ConstructArgs& a) {
    const SupportConstraint sc = load_pattern(a.pattern, a.n, 0);
    const std::size_t k = sc.k();
    const auto rep = check_condition(sc);
    if (!rep.holds && !a.subcode) {
        std::cerr << "condition violated by rows {" << one_based(rep.witness) << "}; k_tilde = " << rep.k_tilde
                  << " (use --subcode for an [n, k_tilde] subcode)\n";
        return 1;
    }
    const OrderedPartition part = a.parts.empty() ? split_blocks(sc.n, a.ell) : OrderedPartition(parse_list(a.parts));
    if (part.length() != sc.n) throw parse_error("--parts must sum to n = " + std::to_string(sc.n), 0);
    const FieldParams fp = suggest_field_params(rep.k_tilde, part.blocks(), part);
    unsigned p = fp.p, e = fp.e, m = fp.m;
    if (a.q != "auto") {
        const auto q = detail::parse_uint(a.q, 0);
        if (!prime_power(q, p, e)) throw parse_error("--q must be a prime power", 0);
    }
    if (a.m != "auto") m = static_cast<unsigned>(detail::parse_uint(a.m, 0));
    const FieldTower F = FieldTower::make(p, e, m);
    const ConstrainedCode cc = subcode_generator(F, part, k, sc, {a.seed, 64});

    const auto mism = verify_support(cc.G, cc.sc);
    std::ostringstream report;
    report << "field q = " << F.q() << ", m = " << F.m() << ", partition " << part.to_string() << '\n';
    report << "code [" << part.length() << ", " << cc.code.k << "], rows emitted " << cc.rows() << ", attempts "
           << cc.attempts << '\n';
    report << "support: " << (mism.empty() ? "exact" : std::to_string(mism.size()) + " mismatches") << '\n';
    try {
        const std::size_t d = min_distance_bruteforce(F, cc.G, part);
        report << "sum-rank distance (brute force) = " << d << ", optimum n - k_tilde + 1 = "
               << part.length() - cc.code.k + 1 << '\n';
    } catch (const guard_exceeded&) {
        report << "sum-rank distance not enumerated (size guard)\n";
    }
    emit(a.out, serialize(cc));
    (a.out.empty() ? std::cerr : std::cout) << report.str();
    return mism.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct DesignArgs {
    std::string instance, out;
    std::size_t ell = 0, table = 0;
    bool no_synth = false;
    std::uint64_t seed = 0;
};

json table_row(const DesignResult& d) {
    return {{"ell", d.inst.ell}, {"q", d.field.q},         {"m", d.field.m},   {"m_sharp", d.field.m_sharp},
            {"n", d.n},          {"k_tilde", d.k_tilde},   {"d", d.d},         {"blocks", d.blocks.parts()},
            {"n_J", d.n_J}};
}

int cmd_design(const DesignArgs& a) {
    NetworkInstance inst = parse_instance(read_file(a.instance));
    if (a.ell) inst.ell = a.ell;
    if (a.table) {
        json rows = json::array();
        for (std::size_t l = 1; l <= a.table; ++l) {
            inst.ell = l;
            rows.push_back(table_row(build_distributed_code(inst, {a.seed, false, 64})));
        }
        emit(a.out, json{{"instance", to_json(inst)}, {"rows", rows}}.dump(2) + "\n");
        return 0;
    }
    const DesignResult d = build_distributed_code(inst, {a.seed, !a.no_synth, 64});
    emit(a.out, to_json(d).dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::string design, out, rows, cols;
    std::size_t trials = 1000, ell = 0, t = 0, rho = 0, M = 0;
    std::uint64_t q = 0;
    std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateArgs& a) {
    json rep;
    rep["seed"] = a.seed;
    rep["trials"] = a.trials;
    if (a.design.empty()) {
        // Channel audit only, over F_q.
        unsigned p = 0, e = 0;
        if (!prime_power(a.q, p, e)) throw parse_error("--q must be a prime power", 0);
        if (a.rows.empty() || a.cols.empty() || a.M == 0) throw parse_error("audit mode needs --rows, --cols and --M", 0);
        const OrderedPartition rows(parse_list(a.rows)), cols(parse_list(a.cols));
        if (a.ell && rows.blocks() != a.ell) throw parse_error("--rows must have --ell parts", 0);
        const FieldTower F = FieldTower::make(p, e, 1);
        const auto mc = monte_carlo_audit(F, rows, cols, a.M, a.t, a.rho, a.trials, a.seed);
        rep["mode"] = "audit";
        rep["params"] = {{"q", a.q}, {"ell", rows.blocks()}, {"t", a.t}, {"rho", a.rho}, {"N", rows.parts()},
                         {"n", cols.parts()}, {"M", a.M}};
        rep["bounds_ok"] = mc.bounds_ok;
        rep["rank_E_equals_t"] = mc.rank_t;
        rep["full_sum_rank_weight"] = mc.full_weight;
        rep["probability"] = mc.probability();
        emit(a.out, rep.dump(2) + "\n");
        return mc.bounds_ok == mc.trials ? 0 : 1;
    }

    const DesignResult d = design_from_json(json::parse(read_file(a.design)));
    const auto& inst = d.inst;
    rep["mode"] = "design";
    rep["instance"] = to_json(inst);
    rep["n"] = d.n;
    rep["d"] = d.d;
    const std::size_t N = d.n;
    const OrderedPartition rows = split_blocks(N, inst.ell);
    const FieldTower Fq = FieldTower::make(d.field.p, d.field.e, 1);
    const std::size_t M = d.n + d.field.m;
    const auto mc = monte_carlo_audit(Fq, rows, d.blocks, M, inst.t, inst.rho, a.trials, a.seed);
    rep["audit"] = {{"bounds_ok", mc.bounds_ok},
                    {"rank_E_equals_t", mc.rank_t},
                    {"full_sum_rank_weight", mc.full_weight},
                    {"probability", mc.probability()}};
    bool ok = mc.bounds_ok == mc.trials;

    if (!d.code) {
        rep["transmission"] = "skipped: design carries no synthesized code";
        emit(a.out, rep.dump(2) + "\n");
        return ok ? 0 : 1;
    }
    const ConstrainedCode& cc = *d.code;
    const FieldTower& F = cc.code.field;
    const TopOps ops = top_ops(F);

    // Lifted transmission; exact recovery is expected when t = ρ = 0.
    if (inst.t == 0 && inst.rho == 0) {
        std::size_t recovered = 0;
        for (std::size_t i = 0; i < a.trials; ++i) {
            std::mt19937_64 rng(trial_seed(a.seed ^ 0x5eedULL, i));
            std::vector<Elem> msg(cc.rows());
            for (auto& x : msg) x = random_element(F, rng);
            const auto cw = multiply(ops, std::span<const Elem>(msg), cc.G);
            const Matrix<Elem> X = lift(F, source_blocks(F, cw, d.n_J));
            const auto ch = sample_channel(F, d.n, N, X.cols(), 0, 0, trial_seed(a.seed, i));
            const auto got = recover_codeword(F, transmit(F, X, ch), d.n);
            if (!got) continue;
            const auto m2 = solve_left(ops, cc.G, std::span<const Elem>(*got));
            if (m2 && *m2 == msg) ++recovered;
        }
        rep["lossless_recovery"] = {{"recovered", recovered}, {"trials", a.trials}};
        ok = ok && recovered == a.trials;
    }

    // Sum-rank error/erasure correction on the codeword, when enumerable.
    try {
        const std::size_t dist = min_distance_bruteforce(F, cc.G, cc.code.partition);
        const std::size_t weight = dist > 1 + inst.rho ? (dist - 1 - inst.rho) / 2 : 0;
        const std::size_t micro = std::min<std::size_t>(a.trials, 50);
        std::size_t corrected = 0;
        for (std::size_t i = 0; i < micro; ++i) {
            std::mt19937_64 rng(trial_seed(a.seed ^ 0xdecULL, i));
            std::vector<Elem> msg(cc.rows());
            for (auto& x : msg) x = random_element(F, rng);
            auto y = multiply(ops, std::span<const Elem>(msg), cc.G);
            const auto err = random_sum_rank_error(F, cc.code.partition, weight, rng);
            for (std::size_t j = 0; j < y.size(); ++j) y[j] = F.add(y[j], err[j]);
            std::vector<std::size_t> idx(d.n);
            for (std::size_t j = 0; j < d.n; ++j) idx[j] = j;
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(std::min(inst.rho, d.n));
            const auto res = bruteforce_decode(F, cc.G, cc.code.partition, y, idx, weight);
            if (res.status == DecodeStatus::decoded && res.message == msg) ++corrected;
        }
        rep["micro_decoding"] = {{"distance", dist}, {"error_weight", weight}, {"erasures", inst.rho},
                                 {"corrected", corrected}, {"trials", micro}};
        ok = ok && corrected == micro;
    } catch (const guard_exceeded&) {
        rep["micro_decoding"] = "skipped: code too large for exhaustive decoding";
    }
    emit(a.out, rep.dump(2) + "\n");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_tables(const std::string& out) {
    const std::vector<std::pair<std::string, std::vector<std::vector<std::size_t>>>> access = {
        {"{123,124,134,234}", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}},
        {"{1,2,3,4}", {{0}, {1}, {2}, {3}}},
        {"{12,13,24,34}", {{0, 1}, {0, 2}, {1, 3}, {2, 3}}},
    };
    std::ostringstream o;
    o << "S,ell,q,m,m_sharp,n,k_tilde,d,blocks,n_J\n";
    for (std::size_t v = 0; v < access.size(); ++v) {
        const std::size_t max_ell = v == 0 ? 7 : 3;
        for (std::size_t ell = 1; ell <= max_ell; ++ell) {
            const NetworkInstance inst{4, {1, 3, 2, 3}, access[v].second, 2, 2, ell};
            const DesignResult d = build_distributed_code(inst, {0, false, 64});
            auto list = [](const std::vector<std::size_t>& x) {
                return "(" + detail::join(x, " ", [](std::size_t y) { return std::to_string(y); }) + ")";
            };
            o << access[v].first << ',' << ell << ',' << d.field.q << ',' << d.field.m << ',' << d.field.m_sharp << ','
              << d.n << ',' << d.k_tilde << ',' << d.d << ',' << list(d.blocks.parts()) << ',' << list(d.n_J) << '\n';
        }
    }
    emit(out, o.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Support-constrained linearized Reed-Solomon codes for distributed network coding"};
    app.require_subcommand(1);

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Test a zero pattern against the support condition");
    check->add_option("pattern", ca.pattern, "Zero-pattern file")->required();
    check->add_option("--n", ca.n, "Code length (default: largest column index)");
    check->add_option("--k", ca.k, "Expected number of rows");

    ConstructArgs co;
    auto* construct = app.add_subcommand("construct", "Synthesize a support-constrained LRS generator");
    construct->add_option("pattern", co.pattern, "Zero-pattern file")->required();
    construct->add_option("--n", co.n, "Code length (default: largest column index)");
    construct->add_option("--ell", co.ell, "Number of blocks");
    construct->add_option("--parts", co.parts, "Block lengths, comma separated");
    construct->add_option("--q", co.q, "Base field size or 'auto'");
    construct->add_option("--m", co.m, "Extension degree or 'auto'");
    construct->add_flag("--subcode", co.subcode, "Emit an [n, k_tilde] subcode when the condition fails");
    construct->add_option("--seed", co.seed, "Random seed");
    construct->add_option("--out", co.out, "Output file for the code serialization");

    DesignArgs da;
    auto* design = app.add_subcommand("design", "Design lengths and code for a network instance");
    design->add_option("instance", da.instance, "Network instance JSON")->required();
    design->add_option("--ell", da.ell, "Override the number of blocks");
    design->add_option("--table", da.table, "Sweep ell = 1..L (parameters only)");
    design->add_flag("--no-synth", da.no_synth, "Skip code synthesis");
    design->add_option("--seed", da.seed, "Random seed");
    design->add_option("--out", da.out, "Output file");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo channel audit and transmission");
    simulate->add_option("design", sa.design, "Design report JSON (omit for audit-only mode)");
    simulate->add_option("--trials", sa.trials, "Number of trials");
    simulate->add_option("--seed", sa.seed, "Root seed");
    simulate->add_option("--out", sa.out, "Output file");
    simulate->add_option("--q", sa.q, "Audit mode: base field size");
    simulate->add_option("--ell", sa.ell, "Audit mode: number of row blocks");
    simulate->add_option("--t", sa.t, "Audit mode: malicious-node bound");
    simulate->add_option("--rho", sa.rho, "Audit mode: frozen-node bound");
    simulate->add_option("--rows", sa.rows, "Audit mode: partition of N, comma separated");
    simulate->add_option("--cols", sa.cols, "Audit mode: partition of n, comma separated");
    simulate->add_option("--M", sa.M, "Audit mode: packet length");

    std::string tables_out;
    auto* tables = app.add_subcommand("tables", "Reproduce the parameter tables of the toy network");
    tables->add_option("--out", tables_out, "Output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(ca);
        if (*construct) return cmd_construct(co);
        if (*design) return cmd_design(da);
        if (*simulate) return cmd_simulate(sa);
        if (*tables) return cmd_tables(tables_out);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const condition_violated& e) {
        std::cerr << "condition violated: " << e.what() << " (rows {" << one_based(e.witness()) << "})\n";
        return 1;
    } catch (const infeasible& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 1;
    } catch (const synthesis_failed& e) {
        std::cerr << "synthesis failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
