#include "symtrace/symtrace.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "core/tables.hpp"
#include "core/verify.hpp"
#include "json.hpp"

using namespace symtrace;
using nlohmann::json;

struct symtrace_poly_t {
    TracePolynomial poly;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = (char*)std::malloc(s.size() + 1);
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void set_error(char** errptr, const std::string& msg) {
    if (errptr) *errptr = dup_string(msg);
}

int classify_exception(char** errptr) {
    try {
        throw;
    } catch (const NoCandidateError& e) {
        set_error(errptr, e.what());
        return SYMTRACE_NO_CANDIDATE;
    } catch (const std::invalid_argument& e) {
        set_error(errptr, e.what());
        return SYMTRACE_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        set_error(errptr, e.what());
        return SYMTRACE_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        set_error(errptr, e.what());
        return SYMTRACE_INVALID_ARGUMENT;
    } catch (const json::exception& e) {
        set_error(errptr, e.what());
        return SYMTRACE_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(errptr, e.what());
        return SYMTRACE_INTERNAL_ERROR;
    } catch (...) {
        set_error(errptr, "unknown error");
        return SYMTRACE_INTERNAL_ERROR;
    }
}

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

/// Translates a config object into suite runs.  Structural defaults follow
/// the documented per-suite conventions; d defaults to 3 for the suites whose
/// headline claims live at d = 3.
std::vector<Report> dispatch(const json& cfg) {
    const std::string suite = cfg.at("suite").get<std::string>();

    TrialConfig tc;
    bool d_given = cfg.contains("d");
    if (d_given) tc.d = cfg["d"].get<int>();
    if (cfg.contains("trials")) tc.trials = cfg["trials"].get<int>();
    if (cfg.contains("seed")) tc.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("tol_zero")) tc.tol_zero = cfg["tol_zero"].get<double>();
    if (cfg.contains("tol_psd")) tc.tol_psd = cfg["tol_psd"].get<double>();
    if (tc.trials < 1 || tc.tol_zero <= 0 || tc.tol_psd <= 0 || tc.d < 1)
        throw std::invalid_argument("config values out of range");

    std::optional<Partition> lambda;
    if (cfg.contains("lambda")) lambda = partition_from_json(cfg["lambda"]);
    int k = cfg.contains("k") ? cfg["k"].get<int>() : 0;
    int n = cfg.contains("n") ? cfg["n"].get<int>() : 0;

    auto d3_default = [&] {
        if (!d_given) tc.d = 3;
    };

    if (suite == "all") return suite_all(tc);
    if (suite == "dictionary") return {suite_dictionary(k ? k : 4, tc)};
    if (suite == "idempotents") return {suite_idempotents(k ? k : 5, tc)};
    if (suite == "projectors")
        return {suite_projectors(k ? k : 4, d_given ? std::vector<int>{tc.d} : std::vector<int>{2, 3}, tc)};
    if (suite == "vanishing")
        return {lambda ? suite_vanishing(*lambda, tc) : suite_vanishing_default(tc)};
    if (suite == "positivity") {
        if (lambda)
            return {suite_positivity(polarized_ch_map(*lambda), "f_" + lambda->str(), tc)};
        return {suite_positivity_all(k ? k : 4,
                                     d_given ? std::vector<int>{tc.d} : std::vector<int>{2, 3}, tc)};
    }
    if (suite == "equivariance") return {suite_equivariance(k ? k : 4, tc)};
    if (suite == "shadow") return {suite_shadow(n ? n : 3, tc)};
    if (suite == "tensor_stable") {
        Partition lam = lambda ? *lambda : Partition({2, 1});
        std::vector<Partition> lams(n ? n : 2, lam);
        return {suite_tensor_stable(lams, tc)};
    }
    if (suite == "copositive") {
        int m = n ? n : 2;
        if (lambda) return {suite_copositive(*lambda, m, tc)};
        Report r = suite_copositive(Partition({1, 1}), m, tc);
        Report r2 = suite_copositive(Partition({2, 1}), m, tc);
        r.trials += r2.trials;
        r.worst_residual = std::max(r.worst_residual, r2.worst_residual);
        r.min_eigenvalue = std::min(r.min_eigenvalue, r2.min_eigenvalue);
        r.pass = r.pass && r2.pass;
        r.params_json = "{\"lambdas\":\"(1,1),(2,1)\",\"m\":" + std::to_string(m) + "}";
        return {r};
    }
    if (suite == "witness") {
        d3_default();
        return {suite_witness(tc)};
    }
    if (suite == "finegrained") {
        d3_default();
        return {suite_finegrained(tc)};
    }
    if (suite == "identities") return {suite_identities(tc)};
    if (suite == "tensor_identity") return {suite_tensor_identity(tc)};
    if (suite == "membership") return {suite_membership(tc)};
    if (suite == "motzkin") {
        d3_default();
        return {suite_motzkin(tc)};
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

extern "C" {

const char* symtrace_version(void) { return "1.0.0"; }

void symtrace_free(char* ptr) { std::free(ptr); }

int symtrace_tables(int k, const char* format, char** out, char** errptr) {
    try {
        std::string fmt = format ? format : "text";
        std::string s;
        if (fmt == "text") s = ch_table_text(k);
        else if (fmt == "json") s = ch_table_json(k);
        else throw std::invalid_argument("format must be text or json");
        if (out) *out = dup_string(s);
        return SYMTRACE_OK;
    } catch (...) {
        return classify_exception(errptr);
    }
}

int symtrace_verify_run(const char* config_json, const char* format, char** out, char** errptr) {
    try {
        if (!config_json) throw std::invalid_argument("null config");
        json cfg = json::parse(config_json);
        std::vector<Report> reports = dispatch(cfg);

        bool all_pass = true;
        for (const auto& r : reports) all_pass = all_pass && r.pass;

        std::string fmt = format ? format : "text";
        std::string s;
        if (fmt == "json") {
            if (reports.size() == 1) {
                s = reports[0].to_json();
            } else {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
                s = arr.dump();
            }
        } else if (fmt == "text") {
            for (const auto& r : reports) s += r.to_text() + "\n";
            s += all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n";
        } else {
            throw std::invalid_argument("format must be text or json");
        }
        if (out) *out = dup_string(s);
        return all_pass ? SYMTRACE_OK : SYMTRACE_VERIFY_FAILED;
    } catch (...) {
        return classify_exception(errptr);
    }
}

int symtrace_construct(const char* kind, int d, int k, int t, const char* format, char** out,
                       char** errptr) {
    try {
        if (!kind) throw std::invalid_argument("null kind");
        Construction c = construct_identity(identity_kind_from_string(kind), d, k, t);

        TrialConfig tc;
        tc.d = d;
        Report rep = verify_tensor_output(c.tensor, c.target, c.target_perm, tc);

        std::string fmt = format ? format : "text";
        std::string s;
        if (fmt == "json") {
            json j;
            j["kind"] = to_string(c.kind);
            j["d"] = c.d;
            j["k"] = c.element.degree();
            j["t"] = c.t;
            j["element"] = json::parse(to_json(c.element));
            j["tensor"] = json::parse(c.tensor.to_json());
            j["membership_certified"] = c.membership_certified;
            j["note"] = c.note;
            j["verification"] = json::parse(rep.to_json());
            s = j.dump();
        } else if (fmt == "text") {
            s += "kind: " + to_string(c.kind) + "  d=" + std::to_string(c.d) +
                 "  k=" + std::to_string(c.element.degree()) + "  t=" + std::to_string(c.t) + "\n";
            s += "element: " + to_json(c.element) + "\n";
            s += "tensor form: " + c.tensor.pretty() + "\n";
            s += "membership certified: " + std::string(c.membership_certified ? "yes" : "no") + "\n";
            s += "note: " + c.note + "\n\n";
            s += rep.to_text();
        } else {
            throw std::invalid_argument("format must be text or json");
        }
        if (out) *out = dup_string(s);
        return rep.pass ? SYMTRACE_OK : SYMTRACE_VERIFY_FAILED;
    } catch (...) {
        return classify_exception(errptr);
    }
}

symtrace_poly_t* symtrace_poly_flambda(const int* parts, int nparts, char** errptr) {
    try {
        if (!parts || nparts < 1) throw std::invalid_argument("empty partition");
        Partition lam(std::vector<int>(parts, parts + nparts));
        if (lam.k() > 6) throw std::invalid_argument("partitions up to k = 6 are supported");
        return new symtrace_poly_t{polarized_ch_map(lam)};
    } catch (...) {
        classify_exception(errptr);
        return nullptr;
    }
}

symtrace_poly_t* symtrace_poly_witness(int k, char** errptr) {
    try {
        return new symtrace_poly_t{witness_map(k)};
    } catch (...) {
        classify_exception(errptr);
        return nullptr;
    }
}

symtrace_poly_t* symtrace_poly_from_json(const char* json_text, char** errptr) {
    try {
        if (!json_text) throw std::invalid_argument("null json");
        return new symtrace_poly_t{TracePolynomial::from_json(json_text)};
    } catch (...) {
        classify_exception(errptr);
        return nullptr;
    }
}

int symtrace_poly_nvars(const symtrace_poly_t* poly) { return poly ? poly->poly.nvars() : -1; }

int symtrace_poly_print(const symtrace_poly_t* poly, char** out, char** errptr) {
    try {
        if (!poly) throw std::invalid_argument("null poly");
        if (out) *out = dup_string(pretty_print(poly->poly));
        return SYMTRACE_OK;
    } catch (...) {
        return classify_exception(errptr);
    }
}

int symtrace_poly_to_json(const symtrace_poly_t* poly, char** out, char** errptr) {
    try {
        if (!poly) throw std::invalid_argument("null poly");
        if (out) *out = dup_string(poly->poly.to_json());
        return SYMTRACE_OK;
    } catch (...) {
        return classify_exception(errptr);
    }
}

int symtrace_poly_eval(const symtrace_poly_t* poly, int d, const double* vars, int nvars,
                       double* out, char** errptr) {
    try {
        if (!poly || !vars || !out) throw std::invalid_argument("null argument");
        if (d < 1) throw std::invalid_argument("dimension must be positive");
        if (nvars != poly->poly.nvars()) throw std::invalid_argument("variable count mismatch");
        std::vector<CMatrix> ms;
        for (int v = 0; v < nvars; ++v) {
            CMatrix m(d, d);
            const double* base = vars + std::size_t(v) * d * d * 2;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m.at(i, j) = cplx(base[2 * (i * d + j)], base[2 * (i * d + j) + 1]);
            ms.push_back(std::move(m));
        }
        CMatrix y = poly->poly.evaluate(ms);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                out[2 * (i * d + j)] = y.at(i, j).real();
                out[2 * (i * d + j) + 1] = y.at(i, j).imag();
            }
        return SYMTRACE_OK;
    } catch (...) {
        return classify_exception(errptr);
    }
}

void symtrace_poly_free(symtrace_poly_t* poly) { delete poly; }

}  // extern "C"
