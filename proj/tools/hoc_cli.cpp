// hoc: quadric points, elementary orthogonal reductions, local orientation
// arithmetic, all emitted as independently checkable JSON certificates.
//
// Subcommand style:
//   hoc check-point|reduce|gamma|chain|translate [common flags] --inputs FILE
//   hoc orient validate|lift|star|sum|diff|move|combine [flags] --inputs FILE
//   hoc suite NAME [--seed N]
//   hoc verify CERTFILE
//   hoc run --json JOBFILE          (run a prebuilt job; command comes from it)
// Reports go to stdout or --out FILE; exit 0 = ok, 1 = invalid, 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hoc/job.hpp"

namespace {

struct CommonOpts {
    std::string field = "q";
    std::string vars;
    std::string order = "degrevlex";
    std::string homotopy_var;
    std::string inputs_file;
    std::string inputs_inline;
    std::string out_file;
    std::int64_t seed = -1;
    std::uint64_t budget_pairs = 0;
    std::uint64_t budget_degree = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--field", o.field, "coefficient field: q or fp:<odd prime>");
    cmd->add_option("--vars", o.vars, "comma-separated variable names");
    cmd->add_option("--order", o.order, "monomial order (degrevlex)");
    cmd->add_option("--homotopy-var", o.homotopy_var, "distinguished homotopy variable");
    cmd->add_option("--inputs", o.inputs_file, "inputs JSON file ('-' for stdin)");
    cmd->add_option("--inputs-json", o.inputs_inline, "inputs JSON inline");
    cmd->add_option("--seed", o.seed, "seed for randomized searches");
    cmd->add_option("--budget-pairs", o.budget_pairs, "max S-pairs (default 100000)");
    cmd->add_option("--budget-degree", o.budget_degree, "max degree (default 60)");
    cmd->add_option("--out", o.out_file, "write the report here instead of stdout");
}

hoc::json read_json_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return hoc::json::parse(ss.str());
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    hoc::json j;
    in >> j;
    return j;
}

hoc::json build_job(const std::string& command, const CommonOpts& o) {
    hoc::json ctx;
    if (o.field == "q") {
        ctx["field"] = "q";
    } else if (o.field.rfind("fp:", 0) == 0) {
        ctx["field"] = "fp";
        ctx["p"] = std::stoull(o.field.substr(3));
    } else {
        throw CLI::ValidationError("--field must be q or fp:<p>");
    }
    ctx["order"] = o.order;
    std::vector<std::string> vars;
    std::stringstream ss(o.vars);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) vars.push_back(item);
    ctx["vars"] = vars;
    if (!o.homotopy_var.empty()) ctx["homotopy_var"] = o.homotopy_var;

    hoc::json job{{"schema_version", hoc::kSchemaVersion}, {"command", command}, {"ctx", ctx}};
    if (!o.inputs_inline.empty())
        job["inputs"] = hoc::json::parse(o.inputs_inline);
    else if (!o.inputs_file.empty())
        job["inputs"] = read_json_file(o.inputs_file);
    else
        job["inputs"] = hoc::json::object();
    if (o.seed >= 0) job["seed"] = static_cast<std::uint64_t>(o.seed);
    if (o.budget_pairs || o.budget_degree) {
        hoc::json b = hoc::json::object();
        if (o.budget_pairs) b["pairs"] = o.budget_pairs;
        if (o.budget_degree) b["degree"] = o.budget_degree;
        job["budgets"] = b;
    }
    return job;
}

int emit_report(const hoc::json& report, const std::string& out_file) {
    std::string text = report.dump(2) + "\n";
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        out << text;
    }
    return hoc::status_exit_code(report.at("status").get<std::string>());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy-obstruction calculus for split quadrics"};
    app.require_subcommand(1);

    std::vector<std::pair<std::string, CommonOpts>> plain = {
        {"check-point", {}}, {"reduce", {}}, {"gamma", {}}, {"chain", {}}, {"translate", {}}};
    std::vector<CLI::App*> plain_cmds;
    for (auto& [name, opts] : plain) {
        auto* cmd = app.add_subcommand(name, "run the " + name + " operation");
        add_common(cmd, opts);
        plain_cmds.push_back(cmd);
    }

    auto* orient = app.add_subcommand("orient", "local orientation operations");
    orient->require_subcommand(1);
    std::vector<std::pair<std::string, CommonOpts>> orient_sub = {
        {"validate", {}}, {"lift", {}}, {"star", {}}, {"sum", {}},
        {"diff", {}},     {"move", {}}, {"combine", {}}};
    std::vector<CLI::App*> orient_cmds;
    for (auto& [name, opts] : orient_sub) {
        auto* cmd = orient->add_subcommand(name, "orient-" + name);
        add_common(cmd, opts);
        orient_cmds.push_back(cmd);
    }

    std::string suite_name;
    CommonOpts suite_opts;
    auto* suite = app.add_subcommand("suite", "run a named acceptance suite");
    suite->add_option("name", suite_name, "suite name or 'all'")->required();
    suite->add_option("--seed", suite_opts.seed, "seed");
    suite->add_option("--out", suite_opts.out_file, "report file");

    std::string verify_file;
    CommonOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
    verify->add_option("file", verify_file, "certificate or report JSON")->required();
    verify->add_option("--out", verify_opts.out_file, "report file");

    std::string job_file;
    CommonOpts run_opts;
    auto* run = app.add_subcommand("run", "run a prebuilt job file");
    run->add_option("--json", job_file, "job JSON file")->required();
    run->add_option("--out", run_opts.out_file, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (std::size_t k = 0; k < plain_cmds.size(); ++k)
            if (plain_cmds[k]->parsed())
                return emit_report(hoc::run_job(build_job(plain[k].first, plain[k].second)),
                                   plain[k].second.out_file);
        for (std::size_t k = 0; k < orient_cmds.size(); ++k)
            if (orient_cmds[k]->parsed())
                return emit_report(
                    hoc::run_job(build_job("orient-" + orient_sub[k].first, orient_sub[k].second)),
                    orient_sub[k].second.out_file);

        if (suite->parsed()) {
            if (suite_name == "all") {
                int exit_code = 0;
                std::uint64_t seed =
                    suite_opts.seed >= 0 ? static_cast<std::uint64_t>(suite_opts.seed) : 0;
                for (const auto& [name, fn] : hoc::suite_registry()) {
                    hoc::SuiteResult res = fn(seed);
                    std::cout << (res.pass() ? "PASS " : "FAIL ") << name << "\n";
                    if (!res.pass()) exit_code = 1;
                }
                return exit_code;
            }
            hoc::json job{{"schema_version", hoc::kSchemaVersion},
                          {"command", "suite"},
                          {"inputs", hoc::json{{"name", suite_name}}}};
            if (suite_opts.seed >= 0) job["seed"] = static_cast<std::uint64_t>(suite_opts.seed);
            return emit_report(hoc::run_job(job), suite_opts.out_file);
        }

        if (verify->parsed()) {
            hoc::json env = read_json_file(verify_file);
            if (env.contains("certificate") && env.contains("status"))
                env = env.at("certificate"); // accept whole reports
            hoc::json job{{"schema_version", hoc::kSchemaVersion},
                          {"command", "verify"},
                          {"inputs", hoc::json{{"certificate", env}}}};
            return emit_report(hoc::run_job(job), verify_opts.out_file);
        }

        if (run->parsed()) return emit_report(hoc::run_job(read_json_file(job_file)), run_opts.out_file);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
