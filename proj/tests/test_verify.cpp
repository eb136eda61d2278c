#include <doctest.h>

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "apery8/verify.hpp"

using namespace apery8;
using nlohmann::json;

namespace {

RunConfig small_config(std::vector<std::string> suites) {
    RunConfig cfg;
    cfg.order = 16;
    cfg.prec = 20;
    cfg.n_max = 12;
    cfg.suites = std::move(suites);
    return cfg;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("configuration validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.order = 7;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.prec = 19;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.n_max = 9;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.suites = {"exact", "bogus"};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("suite selection and ordering") {
    Report rep = run_verification(small_config({"pcf", "exact"}));
    CHECK(rep.pass);
    REQUIRE(rep.suites.size() == 2);
    CHECK(rep.suites[0].name == "exact");
    CHECK(rep.suites[1].name == "pcf");
    for (const SuiteResult& s : rep.suites) {
        CHECK(s.pass);
        CHECK(!s.checks.empty());
    }
}

TEST_CASE("shallow depth skips the growth window") {
    Report rep = run_verification(small_config({"limit"}));
    REQUIRE(rep.suites.size() == 1);
    CHECK(rep.suites[0].checks.size() == 1);
    CHECK(rep.suites[0].checks[0].name == "apery_limit_value");
    CHECK(rep.pass);

    RunConfig deep = small_config({"limit"});
    deep.n_max = 60;
    Report rep2 = run_verification(deep);
    CHECK(rep2.suites[0].checks.size() == 3);
    CHECK(rep2.pass);
}

TEST_CASE("every check carries an anchor and a name") {
    Report rep = run_verification(small_config({"exact", "numeric", "limit", "pcf"}));
    CHECK(rep.pass);
    for (const SuiteResult& s : rep.suites)
        for (const CheckResult& c : s.checks) {
            CHECK(!c.name.empty());
            CHECK(!c.anchor.empty());
        }
}

TEST_CASE("text report shape") {
    Report rep = run_verification(small_config({"exact"}));
    std::string text = rep.to_text();
    CHECK(text.find("[exact] PASS") != std::string::npos);
    CHECK(text.find("overall: PASS") != std::string::npos);
    CHECK(text.find("wronskian") != std::string::npos);
}

TEST_CASE("json report is stable without timing and parses with timing") {
    RunConfig cfg = small_config({"exact", "pcf"});
    std::string a = run_verification(cfg).to_json(false);
    std::string b = run_verification(cfg).to_json(false);
    CHECK(a == b);

    json j = json::parse(a);
    CHECK(j["tool"] == "apery8");
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["config"]["order"] == 16);
    CHECK(j["config"]["suites"].size() == 2);
    CHECK(!j.contains("elapsed_ms"));
    CHECK(j["suites"][0]["checks"].size() > 0);
    for (const auto& c : j["suites"][0]["checks"]) {
        CHECK(c.contains("anchor"));
        CHECK(c["anchor"].is_string());
        CHECK(!c["anchor"].get<std::string>().empty());
        CHECK(!c.contains("elapsed_ms"));
    }

    json jt = json::parse(run_verification(cfg).to_json(true));
    CHECK(jt.contains("elapsed_ms"));
    CHECK(jt["suites"][0].contains("elapsed_ms"));
}

TEST_CASE("exact checks carry null residuals in json") {
    Report rep = run_verification(small_config({"exact"}));
    json j = json::parse(rep.to_json(false));
    const auto& first = j["suites"][0]["checks"][0];
    CHECK(first["kind"] == "exact");
    CHECK(first["residual"].is_null());
    CHECK(first["tolerance"].is_null());
}

TEST_CASE("show qexp") {
    ShowRequest req;
    req.what = "qexp";
    req.args = {"t", "7"};
    std::string out = run_show(req);
    CHECK(out.find("q - 8*q^2 + 28*q^3 - 64*q^4 + 142*q^5 - 352*q^6 + O(q^7)") !=
          std::string::npos);

    req.json = true;
    json j = json::parse(run_show(req));
    CHECK(j["what"] == "qexp");
    CHECK(j["valuation"] == 1);
    REQUIRE(j["coefficients"].size() == 6);
    CHECK(j["coefficients"][1]["num"] == "-8");
    CHECK(j["coefficients"][1]["den"] == "1");
    CHECK(j["coefficients"][5]["num"] == "-352");
}

TEST_CASE("show sequence json round trip") {
    ShowRequest req;
    req.what = "sequence";
    req.args = {"6"};
    req.json = true;
    json j = json::parse(run_show(req));
    CHECK(j["s"][5] == "145504");
    CHECK(j["s"][6] == "2618176");
    CHECK(j["B"][2]["num"] == "21");
    CHECK(j["B"][2]["den"] == "2");
}

TEST_CASE("show ratio") {
    ShowRequest req;
    req.what = "ratio";
    req.args = {"4"};
    req.prec = 25;
    req.json = true;
    json j = json::parse(run_show(req));
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][0]["ratio"]["num"] == "1");
    CHECK(j["rows"][0]["ratio"]["den"] == "4");
    CHECK(j["rows"][1]["ratio"]["num"] == "21");
    CHECK(j["rows"][1]["ratio"]["den"] == "80");
    std::string dec = j["rows"][3]["decimal"].get<std::string>();
    CHECK(dec.substr(0, 8) == "0.262949");
}

TEST_CASE("show constants") {
    ShowRequest req;
    req.what = "constants";
    req.args = {"40"};
    req.json = true;
    json j = json::parse(run_show(req));
    REQUIRE(j["constants"].size() == 6);
    CHECK(j["constants"][0]["name"] == "zeta3");
    std::string z = j["constants"][0]["value"].get<std::string>();
    CHECK(z.substr(0, 12) == "1.2020569031");
    std::string lim = j["constants"][1]["value"].get<std::string>();
    CHECK(lim.substr(0, 12) == "0.2629499475");
    std::string pv = j["constants"][2]["value"].get<std::string>();
    CHECK(pv.substr(0, 12) == "0.9507512829");
}

TEST_CASE("show rejects malformed requests") {
    ShowRequest req;
    req.what = "qexp";
    CHECK_THROWS_AS(run_show(req), std::invalid_argument);
    req.args = {"nope"};
    CHECK_THROWS_AS(run_show(req), std::invalid_argument);
    req.args = {"t", "abc"};
    CHECK_THROWS_AS(run_show(req), std::invalid_argument);
    req.args = {"t", "4097"};
    CHECK_THROWS_AS(run_show(req), std::invalid_argument);
    req.what = "wat";
    req.args = {};
    CHECK_THROWS_AS(run_show(req), std::invalid_argument);
    req.what = "constants";
    req.prec = 5;
    CHECK_THROWS_AS(run_show(req), std::invalid_argument);
}

} // TEST_SUITE
