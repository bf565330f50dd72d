// Runs every acceptance criterion and prints one pass/fail line each.

#include <chrono>
#include <cstdio>
#include <exception>

#include "kneser/verify.hpp"

int main() {
    bool ok = true;
    for (int id : kneser::suite_criteria("all")) {
        const auto t0 = std::chrono::steady_clock::now();
        kneser::CheckResult r;
        try {
            r = kneser::run_criterion(id);
        } catch (const std::exception& e) {
            r.id = id;
            r.name = "criterion raised";
            r.pass = false;
            r.detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d [%s] %-48s (%.1fs) %s\n", id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), secs, r.detail.c_str());
        std::fflush(stdout);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
