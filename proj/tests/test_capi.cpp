#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "hexcsl/hexcsl.h"

using nlohmann::json;

namespace {

struct Ctx {
    hexcsl_ctx* p = hexcsl_ctx_new();
    ~Ctx() { hexcsl_ctx_free(p); }
};

struct Str {
    char* s = nullptr;
    ~Str() { hexcsl_string_free(s); }
    std::string get() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("context lifecycle and version") {
    Ctx ctx;
    REQUIRE(ctx.p != nullptr);
    CHECK(std::string(hexcsl_version()) == "0.1.0");
    CHECK(std::string(hexcsl_last_error(ctx.p)).empty());
}

TEST_CASE("factor endpoint") {
    Ctx ctx;
    Str out;
    REQUIRE(hexcsl_factor(ctx.p, "7", "0", &out.s) == HEXCSL_OK);
    json j = json::parse(out.get());
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["prime"]["m"] == 3);
    CHECK(j["factors"][0]["prime"]["n"] == 1);
    CHECK(j["factors"][0]["class"] == "split");
    CHECK(j["factors"][1]["prime"]["n"] == 2);

    SUBCASE("arbitrary-precision input") {
        Str big;
        REQUIRE(hexcsl_factor(ctx.p, "123456789012345678901", "0", &big.s) == HEXCSL_OK);
        json bj = json::parse(big.get());
        CHECK(bj.contains("factors"));
    }
    SUBCASE("error paths") {
        Str err;
        CHECK(hexcsl_factor(ctx.p, "0", "0", &err.s) == HEXCSL_ERR_DOMAIN);
        CHECK(!std::string(hexcsl_last_error(ctx.p)).empty());
        CHECK(hexcsl_factor(ctx.p, "abc", "0", &err.s) == HEXCSL_ERR_INVALID_ARGUMENT);
        CHECK(hexcsl_factor(ctx.p, nullptr, "0", &err.s) == HEXCSL_ERR_INVALID_ARGUMENT);
    }
}

TEST_CASE("enumerate endpoint") {
    Ctx ctx;
    Str csv1, csv2, js;
    REQUIRE(hexcsl_enumerate(ctx.p, 13, "csv", &csv1.s) == HEXCSL_OK);
    REQUIRE(hexcsl_enumerate(ctx.p, 13, "csv", &csv2.s) == HEXCSL_OK);
    CHECK(csv1.get() == csv2.get());  // byte-identical reruns
    CHECK(csv1.get().rfind("index,z_m,z_n,angle_deg\n", 0) == 0);
    CHECK(csv1.get().find("7,3,1,-21.786789") != std::string::npos);
    CHECK(csv1.get().find("# index=7 csls=2 rotations=12") != std::string::npos);

    REQUIRE(hexcsl_enumerate(ctx.p, 13, "json", &js.s) == HEXCSL_OK);
    json j = json::parse(js.get());
    CHECK(j["csls"].size() == 5);
    CHECK(j["summary"].size() == 3);
    CHECK(j["csls"][1]["index"] == 7);

    Str err;
    CHECK(hexcsl_enumerate(ctx.p, 13, "xml", &err.s) == HEXCSL_ERR_INVALID_ARGUMENT);
    CHECK(hexcsl_enumerate(ctx.p, 0, "csv", &err.s) == HEXCSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("count and dirichlet endpoints") {
    Ctx ctx;
    Str one, many;
    REQUIRE(hexcsl_count(ctx.p, 91, &one.s) == HEXCSL_OK);
    json j1 = json::parse(one.get());
    CHECK(j1["f"] == 4);
    CHECK(j1["f_hat"] == 24);

    REQUIRE(hexcsl_dirichlet(ctx.p, 43, &many.s) == HEXCSL_OK);
    json j2 = json::parse(many.get());
    REQUIRE(j2["coefficients"].size() == 43);
    CHECK(j2["coefficients"][0] == 1);
    CHECK(j2["coefficients"][6] == 2);
    CHECK(j2["coefficients"][12] == 2);
}

TEST_CASE("shift endpoint") {
    Ctx ctx;
    SUBCASE("the honeycomb shift") {
        Str out;
        REQUIRE(hexcsl_shift_describe(ctx.p, R"({"kind":"rational","a":"2/3","b":"1/3"})",
                                      &out.s) == HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["kind"] == "rotation-subgroup-with-reflection");
        CHECK(j["units"] == json::array({0, 2, 4}));
        CHECK(j["reflection"]["eps"] == 1);
        CHECK(j["reflection"]["z"]["m"] == 1);
        CHECK(j["certified_group"] == true);
    }
    SUBCASE("zero shift is the full group") {
        Str out;
        REQUIRE(hexcsl_shift_describe(ctx.p, R"({"kind":"rational","a":"0","b":"0"})",
                                      &out.s) == HEXCSL_OK);
        CHECK(json::parse(out.get())["kind"] == "full-oc");
    }
    SUBCASE("irrational classes") {
        Str out;
        REQUIRE(hexcsl_shift_describe(ctx.p, R"({"kind":"both-independent"})", &out.s) == HEXCSL_OK);
        CHECK(json::parse(out.get())["kind"] == "trivial");
        Str out2;
        REQUIRE(hexcsl_shift_describe(
                    ctx.p, R"({"kind":"affinely-related","p1":1,"q1":1,"p2":1,"q2":1})",
                    &out2.s) == HEXCSL_OK);
        json j = json::parse(out2.get());
        CHECK(j["kind"] == "single-reflection");
        CHECK(j["reflection"]["eps"] == 2);
    }
    SUBCASE("parse errors") {
        Str err;
        CHECK(hexcsl_shift_describe(ctx.p, "{not json", &err.s) == HEXCSL_ERR_PARSE);
        CHECK(hexcsl_shift_describe(ctx.p, R"({"kind":"nope"})", &err.s) ==
              HEXCSL_ERR_INVALID_ARGUMENT);
        CHECK(hexcsl_shift_describe(ctx.p, R"({"kind":"rational","a":"1/0","b":"0"})", &err.s) ==
              HEXCSL_ERR_INVALID_ARGUMENT);
    }
}

TEST_CASE("csl endpoint") {
    Ctx ctx;
    const char* iso = R"({"z":{"m":3,"n":1},"eps":0,"reflect":false})";
    SUBCASE("unshifted") {
        Str out;
        REQUIRE(hexcsl_csl(ctx.p, iso, nullptr, &out.s) == HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["index"] == 7);
        CHECK(j["value"]["num"]["m"] == 8);
        CHECK(j["value"]["den"] == 7);
    }
    SUBCASE("shifted member") {
        Str out;
        REQUIRE(hexcsl_csl(ctx.p, iso, R"({"kind":"rational","a":"2/3","b":"1/3"})", &out.s) ==
                HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["member"] == true);
        CHECK(j["coset_shift"]["den"] == 3);
    }
    SUBCASE("shifted non-member") {
        Str out;
        REQUIRE(hexcsl_csl(ctx.p, R"({"z":{"m":3,"n":1},"eps":3,"reflect":false})",
                           R"({"kind":"rational","a":"2/3","b":"1/3"})", &out.s) == HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["member"] == false);
        CHECK(j["coset_shift"].is_null());
    }
    SUBCASE("invalid numerator") {
        Str err;
        CHECK(hexcsl_csl(ctx.p, R"({"z":{"m":1,"n":-1},"eps":0})", nullptr, &err.s) ==
              HEXCSL_ERR_INVALID_ARGUMENT);
    }
}

TEST_CASE("packing endpoint") {
    Ctx ctx;
    SUBCASE("accepted rotation keeps the index") {
        Str out;
        REQUIRE(hexcsl_packing(ctx.p, R"({"z":{"m":3,"n":1},"eps":0})", 0, &out.s) == HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["index_num"] == 7);
        CHECK(j["index_den"] == 1);
        CHECK(j["index_closed_form"] == 7);
        CHECK(j["components"].size() == 2);
        CHECK(j["sigma"].size() == 2);
    }
    SUBCASE("rejected rotation doubles the index") {
        Str out;
        REQUIRE(hexcsl_packing(ctx.p, R"({"z":{"m":3,"n":1},"eps":3})", 0, &out.s) == HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["index_num"] == 14);
        CHECK(j["components"].size() == 1);
    }
    SUBCASE("shifted packing always keeps the index") {
        Str out;
        REQUIRE(hexcsl_packing(ctx.p, R"({"z":{"m":3,"n":1},"eps":3})", 1, &out.s) == HEXCSL_OK);
        json j = json::parse(out.get());
        CHECK(j["index_num"] == 7);
        CHECK(j["sigma"] == json::array({json::array({0, 1}), json::array({1, 0})}));
    }
}

TEST_CASE("render endpoint") {
    Ctx ctx;
    SUBCASE("deterministic honeycomb figure") {
        Str a, b;
        const char* req = R"({"scene":"honeycomb","radius":"4"})";
        REQUIRE(hexcsl_render(ctx.p, req, &a.s) == HEXCSL_OK);
        REQUIRE(hexcsl_render(ctx.p, req, &b.s) == HEXCSL_OK);
        CHECK(a.get() == b.get());
        CHECK(a.get().rfind("<?xml", 0) == 0);
        CHECK(a.get().find("<svg xmlns") != std::string::npos);
        CHECK(a.get().find("<circle") != std::string::npos);
        CHECK(a.get().find("<line") != std::string::npos);
    }
    SUBCASE("scenes") {
        for (const char* scene : {"lattice", "shifted-lattice", "csl-overlay", "csml-overlay"}) {
            json req{{"scene", scene}, {"radius", "4"}};
            if (std::string(scene).find("overlay") != std::string::npos)
                req["rotation"] = json{{"z", {{"m", 3}, {"n", 1}}}, {"eps", 0}};
            if (std::string(scene) == "lattice") req["fundamental_domain"] = true;
            Str out;
            REQUIRE(hexcsl_render(ctx.p, req.dump().c_str(), &out.s) == HEXCSL_OK);
            CHECK(out.get().find("</svg>") != std::string::npos);
        }
    }
    SUBCASE("overlay without rotation fails") {
        Str err;
        CHECK(hexcsl_render(ctx.p, R"({"scene":"csl-overlay","radius":"4"})", &err.s) ==
              HEXCSL_ERR_INVALID_ARGUMENT);
    }
}

TEST_CASE("verify endpoint") {
    Ctx ctx;
    Str out;
    int passed = 0;
    REQUIRE(hexcsl_verify(ctx.p, 13, 8, &out.s, &passed) == HEXCSL_OK);
    CHECK(passed == 1);
    json j = json::parse(out.get());
    CHECK(j["passed"] == true);
    CHECK(j["reports"].size() >= 9);
    for (const auto& r : j["reports"]) CHECK(r["pass"] == true);
}

TEST_CASE("null context is rejected") {
    char* out = nullptr;
    CHECK(hexcsl_count(nullptr, 7, &out) == HEXCSL_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(std::string(hexcsl_last_error(nullptr)) == "null context");
}
