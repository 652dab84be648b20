#include <cwlab/suites.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace {

struct Criterion {
    int number;
    const char * suite;
    double limit_seconds;
};

// exact-sanity enforces its 1 s limit per item inside the suite.
constexpr Criterion criteria[] = {
    {1, "exact-sanity", 17.0},
    {2, "degree2", 60.0},
    {3, "p4-free", 60.0},
    {4, "complement-bound", 300.0},
    {5, "prime", 300.0},
    {6, "split-char", 60.0},
    {7, "ramsey", 60.0},
    {8, "sc-catalog", 60.0},
    {9, "sc-ramsey", 60.0},
    {10, "sc-structure", 60.0},
    {11, "matching-comatching", 600.0},
    {12, "comp-anti", 600.0},
    {13, "victor", 1800.0},
    {14, "thm8", 1800.0},
    {15, "thm567-freeness", 300.0},
    {16, "classifier", 300.0},
    {17, "useful", 300.0},
};

} // namespace

int main()
{
    int failed = 0;
    for (const auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string summary;
        try {
            auto r = cwlab::run_suite(c.suite);
            pass = r.pass;
            summary = r.summary;
            if (! pass)
                for (const auto & item : r.items)
                    if (! item.pass) {
                        summary += " (first failure: " + item.key + " " + item.witness + ")";
                        break;
                    }
        }
        catch (const std::exception & e) {
            summary = std::string("error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.limit_seconds;
        pass = pass && in_time;
        failed += pass ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_seconds);
        std::cout << "CRITERION " << c.number << " " << c.suite << " " << (pass ? "PASS" : "FAIL") << " " << timing
                  << (in_time ? "" : " over time") << " " << summary << std::endl;
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << " " << (17 - failed) << "/17 criteria" << std::endl;
    return failed == 0 ? 0 : 1;
}
