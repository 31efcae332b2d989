// Command-line front end; talks to the core exclusively through the shared
// C API.  Exit codes: 0 pass, 1 verification failure, 2 usage error,
// 3 construction not found.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symtrace/symtrace.h"

namespace {

int emit(int status, char* out, char* err) {
    if (out) {
        std::fputs(out, stdout);
        symtrace_free(out);
    }
    if (err) {
        std::fprintf(stderr, "error: %s\n", err);
        symtrace_free(err);
    }
    if (status == SYMTRACE_INTERNAL_ERROR) return 1;
    return status;
}

std::string json_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symtrace: trace polynomial identities and positive maps from the symmetric group"};
    app.require_subcommand(1);

    int k = 0, d = 2, n = 0, t = 0, trials = 200;
    std::uint64_t seed = 42;
    double tol_zero = 1e-10, tol_psd = 1e-9;
    std::string format = "text", lambda_csv, suite_name, kind;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* tables = app.add_subcommand("tables", "print the polarized Cayley-Hamilton maps");
    tables->add_option("--k", k, "degree (2..5)")->required();
    add_common(tables);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name,
                       "dictionary|idempotents|projectors|vanishing|positivity|equivariance|"
                       "shadow|tensor_stable|copositive|witness|finegrained|identities|"
                       "tensor_identity|motzkin|membership|all")
        ->required();
    verify->add_option("--k", k, "degree bound");
    verify->add_option("--d", d, "local dimension");
    verify->add_option("--n", n, "party count / ancilla dimension, per suite");
    verify->add_option("--lambda", lambda_csv, "partition, comma separated (e.g. 2,1)");
    verify->add_option("--t", t, "output tensor slots");
    verify->add_option("--trials", trials, "randomized trials");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--tol-zero", tol_zero, "tolerance for identities");
    verify->add_option("--tol-psd", tol_psd, "tolerance for eigenvalue floors");
    add_common(verify);

    CLI::App* construct = app.add_subcommand("construct", "build a certified identity");
    construct->add_option("kind", kind, "polynomial|weak|central|permutation|tensor_identity")
        ->required();
    construct->add_option("--d", d, "matrix dimension");
    construct->add_option("--k", k, "group-algebra degree (0 = kind default)");
    construct->add_option("--t", t, "output tensor slots");
    add_common(construct);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    char* out = nullptr;
    char* err = nullptr;

    if (tables->parsed()) {
        int status = symtrace_tables(k, format.c_str(), &out, &err);
        return emit(status, out, err);
    }

    if (verify->parsed()) {
        std::string cfg = "{\"suite\":\"" + json_escape(suite_name) + "\"";
        if (verify->count("--k")) cfg += ",\"k\":" + std::to_string(k);
        if (verify->count("--d")) cfg += ",\"d\":" + std::to_string(d);
        if (verify->count("--n")) cfg += ",\"n\":" + std::to_string(n);
        if (verify->count("--t")) cfg += ",\"t\":" + std::to_string(t);
        if (!lambda_csv.empty()) {
            cfg += ",\"lambda\":[";
            std::string item;
            bool first = true;
            for (char c : lambda_csv + ",") {
                if (c == ',') {
                    if (!item.empty()) {
                        cfg += (first ? "" : ",") + item;
                        first = false;
                        item.clear();
                    }
                } else {
                    item += c;
                }
            }
            cfg += "]";
        }
        cfg += ",\"trials\":" + std::to_string(trials);
        cfg += ",\"seed\":" + std::to_string(seed);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", tol_zero);
        cfg += ",\"tol_zero\":" + std::string(buf);
        std::snprintf(buf, sizeof buf, "%.17g", tol_psd);
        cfg += ",\"tol_psd\":" + std::string(buf);
        cfg += "}";

        int status = symtrace_verify_run(cfg.c_str(), format.c_str(), &out, &err);
        return emit(status, out, err);
    }

    if (construct->parsed()) {
        int status = symtrace_construct(kind.c_str(), d, k, t, format.c_str(), &out, &err);
        return emit(status, out, err);
    }

    return 2;
}
