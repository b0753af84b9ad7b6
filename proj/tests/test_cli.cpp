#include <catch2/catch_amalgamated.hpp>

#include "qks/cli.hpp"

using namespace qks;

namespace {

std::pair<int, std::string> run_cfg(RunConfig cfg) {
    std::ostringstream out;
    int code = run(cfg, out);
    return {code, out.str()};
}

} // namespace

TEST_CASE("verify command emits sorted pass reports") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.model = "mv:r=1";
    cfg.N = 12;
    cfg.j_max = 2;
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);

    auto arr = nlohmann::json::parse(text);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    std::vector<std::string> checks;
    for (auto& rep : arr) {
        REQUIRE(rep.at("status") == "pass");
        REQUIRE(rep.at("model") == "mv:r=1");
        REQUIRE(rep.at("residual").empty());
        checks.push_back(rep.at("check"));
    }
    REQUIRE(std::is_sorted(checks.begin(), checks.end()));
    REQUIRE(checks.front() == "annihilation");

    auto second = run_cfg(cfg);
    REQUIRE(second.second == text); // byte-for-byte deterministic
}

TEST_CASE("usage errors") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.model = "bogus";
    REQUIRE(run_cfg(cfg).first == 2);

    cfg.model = "hurwitz";
    cfg.N = 0;
    REQUIRE(run_cfg(cfg).first == 2);

    cfg.N = 10;
    cfg.format = "xml";
    REQUIRE(run_cfg(cfg).first == 2);

    cfg.format = "json";
    cfg.command = "frobnicate";
    REQUIRE(run_cfg(cfg).first == 2);
}

TEST_CASE("tau tables") {
    RunConfig cfg;
    cfg.command = "tau";
    cfg.model = "hurwitz";
    cfg.d_max = 2;
    cfg.format = "tsv";
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);
    REQUIRE(text.find("()\t1\n") != std::string::npos);
    REQUIRE(text.find("(1)\t1\n") != std::string::npos);
    REQUIRE(text.find("(2)\t") != std::string::npos);
    REQUIRE(std::count(text.begin(), text.end(), '\n') == 4);

    cfg.format = "json";
    auto arr = nlohmann::json::parse(run_cfg(cfg).second);
    REQUIRE(arr.size() == 4);
    REQUIRE(arr[0].at("mu") == "()");
    REQUIRE(arr[0].at("coeff") == "1");

    cfg.model = "coni:a=1";
    cfg.format = "tsv";
    auto [code2, text2] = run_cfg(cfg);
    REQUIRE(code2 == 0);
    REQUIRE(text2.find("()\t1\n") != std::string::npos);
}

TEST_CASE("wave series output") {
    RunConfig cfg;
    cfg.command = "wave";
    cfg.model = "mv:r=1";
    cfg.N = 4;
    cfg.format = "tsv";
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);

    auto Vb = AdmissibleBasis::from_model(ModelId::mv(1), 4, 5);
    REQUIRE(text == sato_wave(tau_from_basis(Vb, 4), 4).to_tsv());

    cfg.format = "json";
    auto arr = nlohmann::json::parse(run_cfg(cfg).second);
    REQUIRE(arr.size() == 5);
    REQUIRE(arr[0][0] == 0);
    REQUIRE(arr[0][1] == "1");
}

TEST_CASE("oracle and identity commands") {
    RunConfig cfg;
    cfg.command = "oracle";
    cfg.d_max = 2;
    cfg.b_max = 2;
    cfg.format = "tsv";
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);
    REQUIRE(text.rfind("ALL MATCH\n") == text.size() - 10);
    REQUIRE(text.find("(1,1)\t2\t1\t1/4\t1/4\tyes") != std::string::npos);

    cfg.command = "bf-check";
    cfg.d_max = 2;
    auto [code2, text2] = run_cfg(cfg);
    REQUIRE(code2 == 0);
    REQUIRE(std::count(text2.begin(), text2.end(), '\n') == 12);

    cfg.command = "identities";
    cfg.format = "json";
    auto arr = nlohmann::json::parse(run_cfg(cfg).second);
    REQUIRE(arr.size() == 2);
    for (auto& rep : arr) REQUIRE(rep.at("status") == "pass");
}
