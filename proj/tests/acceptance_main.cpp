#include <chrono>
#include <cstdio>
#include <string>

#include "acceptance_suite.hpp"

int main() {
    using namespace flipsurf::acceptance;
    using clock = std::chrono::steady_clock;

    int failed = 0, index = 0;
    for (auto* make : all_criteria()) {
        ++index;
        auto start = clock::now();
        Criterion c = make();
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        bool in_budget = seconds < c.time_budget_seconds;
        bool ok = c.pass && in_budget;
        failed += !ok;
        std::string suffix = c.detail.empty() ? "" : "  [" + c.detail + "]";
        std::printf("[AC%02d] %s  %s  (%.2fs / %.0fs)%s\n", index, ok ? "PASS" : "FAIL",
                    c.name.c_str(), seconds, c.time_budget_seconds, suffix.c_str());
    }
    std::printf("acceptance: %d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
