#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/job.hpp"

using namespace hoc;

namespace {

json qctx(std::initializer_list<const char*> vars, const char* hvar = nullptr) {
    json c{{"field", "q"}, {"order", "degrevlex"}};
    std::vector<std::string> v;
    for (auto* s : vars) v.push_back(s);
    c["vars"] = v;
    if (hvar) c["homotopy_var"] = hvar;
    return c;
}

json point(const char* variant, std::vector<std::string> coords) {
    std::size_t n = (coords.size() - 1) / 2;
    json p{{"variant", variant}, {"n", n}, {"s", coords[0]}};
    p["f"] = std::vector<std::string>(coords.begin() + 1, coords.begin() + 1 + n);
    p["g"] = std::vector<std::string>(coords.begin() + 1 + n, coords.end());
    return p;
}

} // namespace

TEST_CASE("check-point jobs") {
    json job{{"schema_version", "1"},
             {"command", "check-point"},
             {"ctx", qctx({"x", "y"})},
             {"inputs", json{{"point", point("Q", {"0", "0", "0", "0", "0"})}}}};
    auto rep = run_job(job);
    CHECK(rep["status"] == "ok");
    CHECK(status_exit_code(rep["status"]) == 0);

    job["inputs"]["point"] = point("Q", {"0", "1", "0", "1", "0"});
    auto bad = run_job(job);
    CHECK(bad["status"] == "invalid");
    CHECK(status_exit_code(bad["status"]) == 1);
    CHECK(bad["diagnostics"].get<std::string>().find("NotOnQuadric") != std::string::npos);
}

TEST_CASE("reduce job returns the two-generator word") {
    json job{{"schema_version", "1"},
             {"command", "reduce"},
             {"ctx", qctx({})},
             {"inputs", json{{"point", point("Qprime", {"0", "1", "0", "1", "0"})}}}};
    auto rep = run_job(job);
    REQUIRE(rep["status"] == "ok");
    const auto& word = rep["certificate"]["data"]["word"];
    REQUIRE(word.size() == 2);
    CHECK(word[0]["family"] == 1);
    CHECK(word[1]["family"] == 2);
    CHECK(word[1]["lambda"] == "1/2");
}

TEST_CASE("chain-verify job on the base point chain") {
    json h1 = point("Q", {"0", "T", "0", "0", "0"});
    json h2 = point("Q", {"T", "1", "0", "T - T^2", "0"});
    json h3 = point("Q", {"1", "1 - T", "0", "0", "0"});
    json job{{"schema_version", "1"},
             {"command", "chain-verify"},
             {"ctx", qctx({"T"}, "T")},
             {"inputs", json{{"homotopies", json::array({h1, h2, h3})},
                             {"from", point("Q", {"0", "0", "0", "0", "0"})},
                             {"to", point("Q", {"1", "0", "0", "0", "0"})}}}};
    auto rep = run_job(job);
    CHECK(rep["status"] == "ok");

    // swapped entries break at a junction
    job["inputs"]["homotopies"] = json::array({h2, h1, h3});
    auto broken = run_job(job);
    CHECK(broken["status"] == "invalid");
    CHECK(broken["diagnostics"].get<std::string>().find("ChainBroken") != std::string::npos);
}

TEST_CASE("verify accepts valid certificates and rejects perturbed ones") {
    json job{{"schema_version", "1"},
             {"command", "reduce"},
             {"ctx", qctx({})},
             {"inputs", json{{"point", point("Qprime", {"0", "1", "0", "1", "0"})}}}};
    auto rep = run_job(job);
    REQUIRE(rep["status"] == "ok");
    json cert = rep["certificate"];

    json vjob{{"schema_version", "1"},
              {"command", "verify"},
              {"inputs", json{{"certificate", cert}}}};
    CHECK(run_job(vjob)["status"] == "ok");

    json mutated = cert;
    mutated["data"]["word"][0]["lambda"] = "2";
    vjob["inputs"]["certificate"] = mutated;
    auto bad = run_job(vjob);
    CHECK(bad["status"] == "invalid");
    CHECK(bad["diagnostics"].get<std::string>().find("word") != std::string::npos);

    // the empty word certifies the base point
    json ujob{{"schema_version", "1"},
              {"command", "reduce"},
              {"ctx", qctx({})},
              {"inputs", json{{"point", point("Qprime", {"1", "0", "0", "0", "0"})}}}};
    auto urep = run_job(ujob);
    REQUIRE(urep["status"] == "ok");
    CHECK(urep["certificate"]["data"]["word"].empty());
    vjob["inputs"]["certificate"] = urep["certificate"];
    CHECK(run_job(vjob)["status"] == "ok");
}

TEST_CASE("reports are replayable byte-for-byte") {
    json job{{"schema_version", "1"},
             {"command", "orient-move"},
             {"ctx", qctx({"x", "y"})},
             {"seed", 99},
             {"inputs", json{{"orientation", json{{"ideal", {"x", "y"}}, {"row", {"x", "y"}}}},
                             {"obstacle", {"x - 1", "y - 1"}}}}};
    auto rep1 = run_job(job);
    REQUIRE(rep1["status"] == "ok");
    auto rep2 = run_job(rep1["replay"]);
    CHECK(rep1["certificate"].dump() == rep2["certificate"].dump());

    // when no seed is given, the resolved one is recorded in the replay
    job.erase("seed");
    auto rep3 = run_job(job);
    REQUIRE(rep3["status"] == "ok");
    CHECK(rep3["replay"].contains("seed"));
    auto rep4 = run_job(rep3["replay"]);
    CHECK(rep3["certificate"].dump() == rep4["certificate"].dump());
}

TEST_CASE("suite dispatch and exit codes") {
    json job{{"schema_version", "1"},
             {"command", "suite"},
             {"seed", 11},
             {"inputs", json{{"name", "base-chain"}}}};
    auto rep = run_job(job);
    CHECK(rep["status"] == "ok");
    CHECK(rep["certificate"]["passed"] == rep["certificate"]["total"]);

    job["inputs"]["name"] = "unknown-suite";
    auto bad = run_job(job);
    CHECK(bad["status"] == "error");
    CHECK(status_exit_code(bad["status"]) == 2);
}

TEST_CASE("resource budgets surface as status error") {
    json job{{"schema_version", "1"},
             {"command", "orient-lift"},
             {"ctx", qctx({"x", "y"})},
             {"budgets", json{{"pairs", 1}}},
             {"inputs",
              json{{"ideal", {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x", "x^2 + y^3"}},
                   {"row", {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}}}}};
    auto rep = run_job(job);
    CHECK(rep["status"] == "error");
    CHECK(rep["diagnostics"].get<std::string>().find("ResourceBudgetExceeded") !=
          std::string::npos);
}

TEST_CASE("orient-star job produces a verifiable sum certificate") {
    json job{{"schema_version", "1"},
             {"command", "orient-star"},
             {"ctx", qctx({"x", "y"})},
             {"inputs",
              json{{"left", json{{"ideal", {"x", "y"}}, {"row", {"x", "y"}}}},
                   {"right", json{{"ideal", {"x - 1", "y"}}, {"row", {"x - 1", "y"}}}}}}};
    auto rep = run_job(job);
    REQUIRE(rep["status"] == "ok");
    json vjob{{"schema_version", "1"},
              {"command", "verify"},
              {"inputs", json{{"certificate", rep["certificate"]}}}};
    CHECK(run_job(vjob)["status"] == "ok");
}

TEST_CASE("translate job composes families") {
    json word = json::array({json{{"family", 3}, {"i", 1}, {"j", 2}, {"lambda", "T"}}});
    json job{{"schema_version", "1"},
             {"command", "translate"},
             {"ctx", qctx({"T"}, "T")},
             {"inputs", json{{"u", point("Qprime", {"0", "1", "0", "1", "0"})},
                             {"words", json::array({word})}}}};
    auto rep = run_job(job);
    REQUIRE(rep["status"] == "ok");
    json vjob{{"schema_version", "1"},
              {"command", "verify"},
              {"inputs", json{{"certificate", rep["certificate"]}}}};
    CHECK(run_job(vjob)["status"] == "ok");

    // a word with nonzero parameter at T=0 is a mathematical failure
    json bad_word = json::array({json{{"family", 1}, {"i", 0}, {"j", 1}, {"lambda", "1"}}});
    job["inputs"]["words"] = json::array({bad_word});
    auto bad = run_job(job);
    CHECK(bad["status"] == "invalid");
}
