// Acceptance suite: runs every headline claim end to end through the shared
// library surface and prints one pass/fail line per criterion.  The exact
// comparison of the table rows goes through the core's canonical term
// representation.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core/trace_poly.hpp"
#include "symtrace/symtrace.h"

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void announce(int number, const std::string& label, const Outcome& o, double budget_s,
              double elapsed_s) {
    bool within = elapsed_s <= budget_s;
    bool ok = o.pass && within;
    if (!ok) ++g_failures;
    std::printf("%s  criterion %02d  %-34s  %6.2fs (budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, label.c_str(), elapsed_s, budget_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

template <typename Fn>
void criterion(int number, const std::string& label, double budget_s, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    announce(number, label, o, budget_s, elapsed);
}

/// Runs a verify config; pass iff the library reports success.
Outcome run_verify(const std::string& config) {
    char* out = nullptr;
    char* err = nullptr;
    int rc = symtrace_verify_run(config.c_str(), "json", &out, &err);
    Outcome o;
    o.pass = rc == SYMTRACE_OK;
    if (err) {
        o.detail = err;
        symtrace_free(err);
    }
    if (out) symtrace_free(out);
    return o;
}

Outcome check_tables(const std::string& data_path) {
    // expected rows, keyed by (k, partition)
    std::ifstream in(data_path);
    if (!in) return {false, "cannot open " + data_path};
    std::map<std::pair<int, std::string>, std::string> expected;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto b1 = line.find('|');
        auto b2 = line.find('|', b1 + 1);
        expected[{std::stoi(line.substr(0, b1)), line.substr(b1 + 1, b2 - b1 - 1)}] =
            line.substr(b2 + 1);
    }

    for (int k = 2; k <= 4; ++k) {
        char* out = nullptr;
        char* err = nullptr;
        if (symtrace_tables(k, "text", &out, &err) != SYMTRACE_OK) {
            std::string msg = err ? err : "tables failed";
            symtrace_free(err);
            return {false, msg};
        }
        std::istringstream rows(out);
        symtrace_free(out);
        std::string row;
        std::getline(rows, row);  // header
        int seen = 0;
        while (std::getline(rows, row)) {
            if (row.empty()) continue;
            auto split = row.find("]  ");
            std::string partition = row.substr(1, split - 1);
            partition.erase(std::remove(partition.begin(), partition.end(), ' '),
                            partition.end());
            std::string text = row.substr(split + 3);
            auto it = expected.find({k, partition});
            if (it == expected.end()) return {false, "unexpected row [" + partition + "]"};
            symtrace::TracePolynomial got = symtrace::parse_pretty(text, k - 1);
            symtrace::TracePolynomial want = symtrace::parse_pretty(it->second, k - 1);
            if (!(got == want))
                return {false, "row [" + partition + "] of k=" + std::to_string(k) +
                                   " differs from the reference"};
            ++seen;
        }
        int want_rows = k == 2 ? 1 : (k == 3 ? 2 : 4);
        if (seen != want_rows) return {false, "row count mismatch at k=" + std::to_string(k)};
    }
    return {true, "k=2,3,4 rows match as canonical term sets"};
}

}  // namespace

int main(int argc, char** argv) {
    std::string data_dir = argc > 1 ? argv[1] : "tests/data";

    criterion(1, "exact idempotent algebra, k<=5", 30, [] {
        return run_verify("{\"suite\":\"idempotents\",\"k\":5}");
    });

    criterion(2, "Young projectors, k<=4, d=2,3", 30, [] {
        return run_verify("{\"suite\":\"projectors\",\"k\":4}");
    });

    criterion(3, "table reproduction, k=2,3,4", 5, [&] {
        return check_tables(data_dir + "/ch_table_rows.txt");
    });

    criterion(4, "dictionary soundness, 100 elements", 60, [] {
        return run_verify("{\"suite\":\"dictionary\",\"k\":4,\"d\":2,\"trials\":100}");
    });

    criterion(5, "vanishing identities", 10, [] {
        return run_verify("{\"suite\":\"vanishing\",\"trials\":200}");
    });

    criterion(6, "positivity, all maps k<=4, d=2,3", 120, [] {
        return run_verify("{\"suite\":\"positivity\",\"k\":4,\"trials\":500}");
    });

    criterion(7, "equivariance, k<=4", 60, [] {
        return run_verify("{\"suite\":\"equivariance\",\"k\":4,\"d\":2,\"trials\":100}");
    });

    criterion(8, "shadow inequality, n=3", 60, [] {
        return run_verify("{\"suite\":\"shadow\",\"n\":3,\"trials\":200}");
    });

    criterion(9, "tensor stability with closed form", 60, [] {
        return run_verify("{\"suite\":\"tensor_stable\",\"d\":2,\"trials\":200}");
    });

    criterion(10, "complete copositivity, m=2", 60, [] {
        return run_verify("{\"suite\":\"copositive\",\"d\":2,\"n\":2,\"trials\":200}");
    });

    criterion(11, "optimal witness at d=3", 60, [] {
        return run_verify("{\"suite\":\"witness\",\"d\":3,\"trials\":500}");
    });

    criterion(12, "fine-grained idempotents and maps", 30, [] {
        return run_verify("{\"suite\":\"finegrained\",\"d\":3,\"trials\":200}");
    });

    criterion(13, "polynomial and tensor identities", 60, [] {
        return run_verify("{\"suite\":\"identities\",\"trials\":200}");
    });

    criterion(14, "exact ideal membership, k<=6", 60, [] {
        return run_verify("{\"suite\":\"membership\"}");
    });

    criterion(15, "Motzkin inequality and decomposition", 120, [] {
        return run_verify("{\"suite\":\"motzkin\",\"d\":3,\"trials\":500}");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 15 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
