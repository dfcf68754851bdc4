#pragma once

#include <random>
#include <string>

#include "hoc/suites.hpp"

namespace hoc {

// Jobs and reports. A report's status is "ok" when the embedded certificate
// passed construction (and therefore the independent checker), "invalid" for
// mathematical failures, "error" for resource or usage problems; the replay
// block reproduces the run byte-for-byte, seed included.

inline int status_exit_code(const std::string& status) {
    if (status == "ok") return 0;
    if (status == "invalid") return 1;
    return 2;
}

namespace job_impl {

template <class K>
GBConfig config_from(const json& job) {
    GBConfig cfg;
    if (job.contains("budgets")) {
        const auto& b = job.at("budgets");
        if (b.contains("pairs")) cfg.max_pairs = b.at("pairs").get<std::size_t>();
        if (b.contains("degree")) cfg.max_degree = b.at("degree").get<std::uint64_t>();
    }
    return cfg;
}

template <class K>
Ideal<K> ideal_from(const json& gens, const CtxPtr<K>& ctx, const GBConfig& cfg) {
    return Ideal<K>(polys_from_json<K>(gens, ctx), cfg);
}

template <class K>
LocalOrientation<K> orientation_input(const json& j, const CtxPtr<K>& ctx, const GBConfig& cfg) {
    return validate_orientation(ideal_from(j.at("ideal"), ctx, cfg),
                                polys_from_json<K>(j.at("row"), ctx));
}

template <class K>
json dispatch(const std::string& command, const json& job, const CtxPtr<K>& ctx,
              std::uint64_t seed) {
    GBConfig cfg = config_from<K>(job);
    const json& in = job.at("inputs");

    if (command == "check-point") {
        auto p = point_from_json<K>(in.at("point"), ctx, /*revalidate=*/true);
        return envelope("point", ctx, point_to_json(p));
    }
    if (command == "reduce") {
        auto p = point_from_json<K>(in.at("point"), ctx, /*revalidate=*/false);
        if (in.contains("at")) {
            std::vector<K> pt;
            for (const auto& e : in.at("at"))
                pt.push_back(parse_poly<K>(e.template get<std::string>(), ctx).constant_value());
            return envelope("reduction", ctx, reduction_to_json(reduce_to_base(p, LocalCtx<K>(ctx, pt))));
        }
        return envelope("reduction", ctx, reduction_to_json(reduce_to_base(p)));
    }
    if (command == "gamma") {
        auto p = point_from_json<K>(in.at("point"), ctx, /*revalidate=*/true);
        auto g = gamma(p);
        return envelope("gamma", ctx, json{{"input", point_to_json(p)}, {"output", point_to_json(g)}});
    }
    if (command == "chain" || command == "chain-verify") {
        auto chain = chain_from_json<K>(in, ctx);
        auto from = point_from_json<K>(in.at("from"), ctx, false);
        auto to = point_from_json<K>(in.at("to"), ctx, false);
        auto res = verify_chain(chain, from, to);
        if (!res.ok())
            fail(errc::chain_broken,
                 "at index " + std::to_string(res.issue->index) + ": " + res.issue->what);
        json data = chain_to_json(chain);
        data["from"] = point_to_json(from);
        data["to"] = point_to_json(to);
        return envelope("chain", ctx, data);
    }
    if (command == "translate") {
        auto u = point_from_json<K>(in.at("u"), ctx, true);
        std::vector<TranslationFamily<K>> fams;
        for (const auto& w : in.at("words"))
            fams.push_back(TranslationFamily<K>{poly_word_from_json<K>(w, ctx)});
        auto cert = compose_translations(fams, u);
        return envelope("translation", ctx, translation_to_json(cert));
    }
    if (command == "orient-validate") {
        auto o = orientation_input<K>(in, ctx, cfg);
        return envelope("orientation", ctx, orientation_to_json(o));
    }
    if (command == "orient-lift") {
        auto w = lift_orientation(orientation_input<K>(in, ctx, cfg));
        return envelope("lift", ctx, lift_to_json(w));
    }
    if (command == "orient-star" || command == "orient-sum") {
        auto a = orientation_input<K>(in.at("left"), ctx, cfg);
        auto b = orientation_input<K>(in.at("right"), ctx, cfg);
        auto s = command == "orient-star" ? star_product(a, b) : pseudo_sum(a, b);
        return envelope("sum", ctx, sum_to_json(s));
    }
    if (command == "orient-move") {
        auto o = orientation_input<K>(in.at("orientation"), ctx, cfg);
        auto obstacle = ideal_from(in.at("obstacle"), ctx, cfg);
        std::size_t budget = in.value("budget", std::size_t{64});
        auto m = move_orientation(o, obstacle, seed, budget);
        return envelope("move", ctx, move_to_json(m));
    }
    if (command == "orient-diff") {
        auto a = orientation_input<K>(in.at("left"), ctx, cfg);
        auto b = orientation_input<K>(in.at("right"), ctx, cfg);
        std::size_t budget = in.value("budget", std::size_t{64});
        auto d = pseudo_difference(a, b, seed, budget);
        return envelope("diff", ctx, diff_to_json(d));
    }
    if (command == "orient-combine") {
        auto H = make_homotopy(point_from_json<K>(in.at("homotopy"), ctx, true));
        auto wj = orientation_input<K>(in.at("wj"), ctx, cfg);
        auto lambdas = polys_from_json<K>(in.at("lambdas"), ctx);
        auto res = combine_homotopy(H, wj, lambdas);
        return envelope("combine", ctx, combine_to_json(res));
    }
    fail(errc::bad_input, "unknown command " + command);
}

} // namespace job_impl

inline json run_job(const json& job) {
    json report{{"schema_version", kSchemaVersion},
                {"command", ""},
                {"status", "error"},
                {"certificate", nullptr},
                {"diagnostics", ""},
                {"replay", job}};
    std::string command;
    try {
        if (job.contains("schema_version") &&
            job.at("schema_version").get<std::string>() != kSchemaVersion)
            fail(errc::bad_input, "unsupported schema_version");
        command = job.at("command").get<std::string>();
        report["command"] = command;

        std::uint64_t seed;
        if (job.contains("seed") && !job.at("seed").is_null()) {
            seed = job.at("seed").get<std::uint64_t>();
        } else {
            seed = std::random_device{}();
        }
        report["replay"]["seed"] = seed;

        if (command == "suite") {
            std::string name = job.at("inputs").at("name").get<std::string>();
            SuiteResult res = run_suite(name, seed);
            json checks = json::array();
            std::size_t passed = 0;
            for (const auto& c : res.checks) {
                checks.push_back(json{{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
                if (c.pass) ++passed;
            }
            report["certificate"] =
                json{{"suite", res.name},
                     {"checks", std::move(checks)},
                     {"passed", passed},
                     {"total", res.checks.size()}};
            report["status"] = res.pass() ? "ok" : "invalid";
            report["diagnostics"] = res.name + ": " + std::to_string(passed) + "/" +
                                    std::to_string(res.checks.size()) + " checks passed";
            return report;
        }

        if (command == "verify") {
            // the certificate envelope carries its own context
            const json& env = job.at("inputs").at("certificate");
            auto out = verify_certificate_json(env);
            report["certificate"] = env;
            report["status"] = out.ok ? "ok" : "invalid";
            report["diagnostics"] = out.detail;
            return report;
        }

        json cert = with_ctx_json(job.at("ctx"), [&](auto ctx) {
            return job_impl::dispatch(command, job, ctx, seed);
        });
        report["certificate"] = std::move(cert);
        report["status"] = "ok";
        report["diagnostics"] = "ok";
    } catch (const Error& e) {
        report["status"] = e.klass() == err_class::invalid ? "invalid" : "error";
        report["diagnostics"] = e.what();
    } catch (const json::exception& e) {
        report["status"] = "error";
        report["diagnostics"] = std::string("malformed job: ") + e.what();
    }
    return report;
}

} // namespace hoc
