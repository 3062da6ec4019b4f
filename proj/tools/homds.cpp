// homds: batch checker and solver for higher order MDS code properties.
// JSON results on stdout, human logs on stderr; exit codes: 0 holds,
// 1 fails, 2 refused (cap/budget), 3 malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "homds/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(homds::kExitBadInput);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

homds::json parse_or_die(const std::string& bytes, const std::string& what) {
    try {
        return homds::json::parse(bytes);
    } catch (const homds::json::exception& e) {
        std::cerr << "malformed JSON in " << what << ": " << e.what() << "\n";
        std::exit(homds::kExitBadInput);
    }
}

void apply_budget_flag(homds::RunOptions& opt, std::uint64_t budget) {
    opt.budget.max_families = budget;
    opt.budget.max_patterns = budget;
    opt.budget.max_configs = budget;
    opt.budget.max_solver_samples = budget;
    opt.budget.max_exhaustive_tuples = budget;
}

void finish(const homds::RunRecord& rec) {
    std::cout << rec.doc.dump(2) << "\n";
    std::exit(rec.exit_code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field toolkit for higher order MDS code properties"};
    app.require_subcommand(1);
    app.fallthrough();

    homds::RunOptions opt;
    std::uint64_t budget_flag = 0;
    std::int64_t seed_flag = -1;
    std::string field_flag;

    app.add_option("--seed", seed_flag, "RNG seed (auto-generated and reported when omitted)");
    app.add_option("--field", field_flag, "field as p or p,m; overrides specs and equiv fields");
    app.add_option("--ell", opt.ell, "order parameter (list size L for ld_mds)");
    app.add_option("--budget", budget_flag, "cap for enumeration and sampling loops");
    app.add_option("--jobs", opt.jobs, "worker count for trial-parallel commands");
    app.add_flag("--strict", opt.strict, "strict comparisons in average-radius cross-checks");

    auto* check = app.add_subcommand("check", "decide a property of one code");
    std::string check_input, check_property;
    check->add_option("property", check_property,
                      "mds | mds_ell | gzp_ell | ld_mds | mdsb_ell | mr_parity")
        ->required();
    check->add_option("input", check_input, "JSON input file")->required();
    check->add_option("--mode", opt.mode, "mdsb_ell scan mode: maximal_only | all_proper");

    auto* solve = app.add_subcommand("solve", "find points attaining a zero pattern");
    std::string solve_pattern, solve_spec;
    solve->add_option("--pattern", solve_pattern, "zero pattern JSON file")->required();
    solve->add_option("--spec", solve_spec, "code spec JSON file")->required();

    auto* equiv = app.add_subcommand("equiv", "random cross-validation of every checker route");
    std::string fields_flag;
    equiv->add_option("--trials", opt.trials, "number of random codes");
    equiv->add_option("--nmax", opt.nmax, "maximum code length");
    equiv->add_option("--kmax", opt.kmax, "maximum code dimension");
    equiv->add_option("--fields", fields_flag, "comma-separated field orders");
    equiv->add_flag("--inject-bug", opt.inject_bug, "negate one checker (harness self-test)");

    auto* conj = app.add_subcommand("conjecture", "random-puncturing exploration");
    std::string conj_input;
    std::uint32_t conj_n = 0;
    conj->add_option("--code", conj_input, "mother code JSON file")->required();
    conj->add_option("--n", conj_n, "punctured length")->required();
    conj->add_option("--trials", opt.trials, "number of puncturings");

    CLI11_PARSE(app, argc, argv);

    if (seed_flag >= 0) {
        opt.seed = static_cast<std::uint64_t>(seed_flag);
        opt.seed_given = true;
    } else {
        std::random_device rd;
        opt.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::cerr << "seed auto-generated: " << opt.seed << "\n";
    }
    if (budget_flag > 0) apply_budget_flag(opt, budget_flag);

    homds::json field_override;
    if (!field_flag.empty()) {
        std::uint64_t p = 0, m = 1;
        const auto comma = field_flag.find(',');
        p = std::stoull(field_flag.substr(0, comma));
        if (comma != std::string::npos) m = std::stoull(field_flag.substr(comma + 1));
        field_override = homds::json{{"p", p}, {"m", m}};
        std::uint64_t q = 1;
        for (std::uint64_t i = 0; i < m; ++i) q *= p;
        opt.fields = {q};
    }

    if (check->parsed()) {
        const std::string bytes = slurp(check_input);
        finish(homds::run_check(parse_or_die(bytes, check_input), bytes, check_property, opt));
    }
    if (solve->parsed()) {
        const std::string pat_bytes = slurp(solve_pattern);
        const std::string spec_bytes = slurp(solve_spec);
        homds::json spec_doc = parse_or_die(spec_bytes, solve_spec);
        if (!field_override.is_null()) spec_doc["field"] = field_override;
        finish(homds::run_solve(parse_or_die(pat_bytes, solve_pattern), spec_doc,
                                pat_bytes + spec_bytes, opt));
    }
    if (equiv->parsed()) {
        if (!fields_flag.empty()) {
            opt.fields.clear();
            std::stringstream ss(fields_flag);
            std::string tok;
            while (std::getline(ss, tok, ',')) opt.fields.push_back(std::stoull(tok));
        }
        finish(homds::run_equiv(opt));
    }
    if (conj->parsed()) {
        const std::string bytes = slurp(conj_input);
        finish(homds::run_conjecture(parse_or_die(bytes, conj_input), bytes, conj_n, opt));
    }
    return homds::kExitBadInput;
}
