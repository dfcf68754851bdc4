// Acceptance suite: runs every named criterion at its stated sample counts
// and tolerances (all checks are exact; zero tolerance throughout) and
// prints one pass/fail line per criterion. Exit code 0 iff everything
// passed. An optional argv[1] overrides the seed.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "hoc/suites.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20250810u;
    const auto& registry = hoc::suite_registry();
    int failures = 0;
    std::size_t index = 0;
    for (const auto& [name, fn] : registry) {
        ++index;
        hoc::SuiteResult res;
        std::string crash;
        try {
            res = fn(seed);
        } catch (const std::exception& e) {
            crash = e.what();
        }
        bool pass = crash.empty() && res.pass();
        std::printf("criterion %2zu (%s): %s\n", index, name.c_str(), pass ? "PASS" : "FAIL");
        if (!crash.empty()) std::printf("    crashed: %s\n", crash.c_str());
        for (const auto& c : res.checks)
            if (!c.pass)
                std::printf("    failed: %s%s%s\n", c.label.c_str(),
                            c.detail.empty() ? "" : " - ", c.detail.c_str());
        if (!pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", registry.size(), failures);
    return failures == 0 ? 0 : 1;
}
