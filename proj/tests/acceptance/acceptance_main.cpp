// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Expected to run under ctest with a generous
// timeout; the slow criteria print their own timing.

#include <chrono>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <functional>
#include <string>
#include <vector>

namespace {

struct Criterion {
    std::string name;
    std::function<void()> body;
};

std::vector<Criterion>& registry() {
    static std::vector<Criterion> r;
    return r;
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

}  // namespace

#define ACCEPT(name)                                                        \
    static void accept_body_##name();                                       \
    static const bool reg_##name = [] {                                     \
        registry().push_back({#name, accept_body_##name});                  \
        return true;                                                        \
    }();                                                                    \
    static void accept_body_##name()

#include "acceptance_criteria.ipp"

int main() {
    int failed = 0;
    for (const auto& c : registry()) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failed;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s (%.1fs)%s%s\n", verdict.c_str(), c.name.c_str(), secs,
                    detail.empty() ? "" : ": ", detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
