#include <cstdio>

#include "sympair/acceptance.hpp"

int main() {
    bool all = true;
    for (const auto& r : sympair::acceptance::run_all()) {
        std::printf("[%s] %2d %-28s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
