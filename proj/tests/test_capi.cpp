#include "doctest.h"

#include <cstring>
#include <string>

#include "symtrace/symtrace.h"

namespace {

struct Buf {
    char* p = nullptr;
    ~Buf() { symtrace_free(p); }
    std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("version string") {
    CHECK(std::strlen(symtrace_version()) > 0);
}

TEST_CASE("tables through the C surface") {
    Buf out, err;
    CHECK(symtrace_tables(2, "text", &out.p, &err.p) == SYMTRACE_OK);
    CHECK(out.str().find("tr(A){} -A") != std::string::npos);

    Buf jout, jerr;
    CHECK(symtrace_tables(3, "json", &jout.p, &jerr.p) == SYMTRACE_OK);
    CHECK(jout.str().find("\"partition\":[2,1]") != std::string::npos);

    SUBCASE("bad degree and format are usage errors") {
        Buf o1, e1;
        CHECK(symtrace_tables(9, "text", &o1.p, &e1.p) == SYMTRACE_INVALID_ARGUMENT);
        CHECK(e1.str().size() > 0);
        Buf o2, e2;
        CHECK(symtrace_tables(3, "yaml", &o2.p, &e2.p) == SYMTRACE_INVALID_ARGUMENT);
    }
}

TEST_CASE("verify runs through the C surface") {
    Buf out, err;
    int rc = symtrace_verify_run(
        "{\"suite\":\"vanishing\",\"lambda\":[1,1,1],\"d\":2,\"trials\":25,\"seed\":7}",
        "json", &out.p, &err.p);
    CHECK(rc == SYMTRACE_OK);
    CHECK(out.str().find("\"pass\":true") != std::string::npos);
    CHECK(out.str().find("\"suite\":\"vanishing\"") != std::string::npos);

    SUBCASE("deterministic output given a fixed seed") {
        Buf out2, err2;
        symtrace_verify_run(
            "{\"suite\":\"vanishing\",\"lambda\":[1,1,1],\"d\":2,\"trials\":25,\"seed\":7}",
            "json", &out2.p, &err2.p);
        // strip elapsed_ms, the only nondeterministic field
        auto strip = [](std::string s) {
            auto pos = s.find("\"elapsed_ms\"");
            auto end = s.find_first_of(",}", pos);
            s.erase(pos, end - pos);
            return s;
        };
        CHECK(strip(out.str()) == strip(out2.str()));
    }

    SUBCASE("failures map to the verify status") {
        // vanishing refuses when lambda fits in d: usage error
        Buf o, e;
        CHECK(symtrace_verify_run("{\"suite\":\"vanishing\",\"lambda\":[1,1,1],\"d\":3}",
                                  "json", &o.p, &e.p) == SYMTRACE_INVALID_ARGUMENT);
        Buf o2, e2;
        CHECK(symtrace_verify_run("{\"suite\":\"witness\",\"d\":2}", "json", &o2.p, &e2.p) ==
              SYMTRACE_INVALID_ARGUMENT);
    }

    SUBCASE("report objects carry exactly the documented keys") {
        Buf o, e;
        REQUIRE(symtrace_verify_run("{\"suite\":\"membership\"}", "json", &o.p, &e.p) ==
                SYMTRACE_OK);
        const char* keys[] = {"\"suite\"",          "\"params\"",   "\"trials\"",
                              "\"seed\"",           "\"worst_residual\"",
                              "\"min_eigenvalue\"", "\"negative_control_failed\"",
                              "\"pass\"",           "\"elapsed_ms\""};
        for (const char* k : keys) CHECK(o.str().find(k) != std::string::npos);
    }

    SUBCASE("unknown suite is a usage error") {
        Buf o, e;
        CHECK(symtrace_verify_run("{\"suite\":\"bogus\"}", "text", &o.p, &e.p) ==
              SYMTRACE_INVALID_ARGUMENT);
    }

    SUBCASE("malformed json is a usage error") {
        Buf o, e;
        CHECK(symtrace_verify_run("{nope", "text", &o.p, &e.p) == SYMTRACE_INVALID_ARGUMENT);
    }
}

TEST_CASE("construct through the C surface") {
    Buf out, err;
    int rc = symtrace_construct("tensor_identity", 2, 6, 2, "json", &out.p, &err.p);
    CHECK(rc == SYMTRACE_OK);
    CHECK(out.str().find("\"membership_certified\":true") != std::string::npos);

    SUBCASE("no-candidate maps to its own status") {
        Buf o, e;
        CHECK(symtrace_construct("central", 3, 0, 1, "text", &o.p, &e.p) ==
              SYMTRACE_NO_CANDIDATE);
    }

    SUBCASE("unknown kind is a usage error") {
        Buf o, e;
        CHECK(symtrace_construct("frobnicate", 2, 0, 1, "text", &o.p, &e.p) ==
              SYMTRACE_INVALID_ARGUMENT);
    }
}

TEST_CASE("polynomial handles") {
    Buf err;
    int parts[2] = {1, 1};
    symtrace_poly_t* p = symtrace_poly_flambda(parts, 2, &err.p);
    REQUIRE(p != nullptr);
    CHECK(symtrace_poly_nvars(p) == 1);

    Buf text;
    CHECK(symtrace_poly_print(p, &text.p, nullptr) == SYMTRACE_OK);
    CHECK(text.str() == "tr(A){} -A");

    Buf json;
    CHECK(symtrace_poly_to_json(p, &json.p, nullptr) == SYMTRACE_OK);
    symtrace_poly_t* back = symtrace_poly_from_json(json.p, nullptr);
    REQUIRE(back != nullptr);
    Buf text2;
    symtrace_poly_print(back, &text2.p, nullptr);
    CHECK(text2.str() == text.str());

    SUBCASE("evaluation at the 2x2 identity gives (d-1)/2 I") {
        double vars[8] = {1, 0, 0, 0, 0, 0, 1, 0};  // I_2 packed re,im
        double out[8];
        CHECK(symtrace_poly_eval(p, 2, vars, 1, out, nullptr) == SYMTRACE_OK);
        CHECK(out[0] == doctest::Approx(0.5));
        CHECK(out[6] == doctest::Approx(0.5));
        CHECK(out[2] == doctest::Approx(0.0));
    }

    symtrace_poly_free(p);
    symtrace_poly_free(back);

    SUBCASE("witness handle") {
        symtrace_poly_t* w = symtrace_poly_witness(3, nullptr);
        REQUIRE(w != nullptr);
        CHECK(symtrace_poly_nvars(w) == 2);
        symtrace_poly_free(w);
    }

    SUBCASE("error paths") {
        Buf e;
        int bad[1] = {0};
        CHECK(symtrace_poly_flambda(bad, 1, &e.p) == nullptr);
        CHECK(e.str().size() > 0);
        CHECK(symtrace_poly_flambda(nullptr, 0, nullptr) == nullptr);
        CHECK(symtrace_poly_from_json("{broken", nullptr) == nullptr);
        symtrace_poly_free(nullptr);
    }
}
