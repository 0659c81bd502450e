#include "credal/commands.hpp"
#include "credal/problem_file.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace credal::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(CREDAL_FIXTURES) + "/" + name; }

struct Scratch {
    std::string path;
    explicit Scratch(const std::string& text) : path("credal_scratch_" + std::to_string(std::rand()) + ".json") {
        std::ofstream(path) << text;
    }
    ~Scratch() { std::remove(path.c_str()); }
};

int run_binary(const std::string& args) {
    const std::string cmd = std::string(CREDAL_BINARY) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("render shows exact and decimal forms") {
    using credal::Scalar;
    CHECK(render(Scalar(57, 25)) == "57/25 (2.28)");
    CHECK(render(Scalar(5)) == "5");
    CHECK(render(Scalar(1, 3)) == "1/3");
}

TEST_CASE("check: coin is coherent") {
    auto r = cmd_check(fixture("coin.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "states: 2\n"
          "assessments: 2\n"
          "sure loss: no\n"
          "coherence gaps:\n"
          "  [0] lower 7/25 (0.28), gap 0\n"
          "  [1] lower -7/10 (-0.7), gap 0\n"
          "coherent: yes\n");
}

TEST_CASE("check: sure loss exits 3") {
    auto r = cmd_check(fixture("sureloss.json"));
    CHECK(r.exit_code == exit_code::sure_loss);
    CHECK(r.out.find("sure loss: yes") != std::string::npos);
    CHECK(r.out.find("combined price: 11/20 (0.55)") != std::string::npos);
    auto j = credal::io::read_json(cmd_check(fixture("sureloss.json"), Format::Json).out);
    CHECK(j["avoids_sure_loss"] == false);
}

TEST_CASE("check: incoherent model warns but succeeds") {
    auto r = cmd_check(fixture("incoherent.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.find("[1] lower 1/10 (0.1), gap 3/10 (0.3)") != std::string::npos);
    auto j = credal::io::read_json(cmd_check(fixture("incoherent.json"), Format::Json).out);
    CHECK(j["coherent"] == false);
    CHECK(j["gaps"][1]["gap"] == "3/10");
}

TEST_CASE("check: vacuous model") {
    Scratch f(R"({"space": ["a", "b", "c"], "assessments": []})");
    auto r = cmd_check(f.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("coherent: yes (vacuous)") != std::string::npos);
}

TEST_CASE("extend") {
    auto r = cmd_extend(fixture("coin.json"), R"({"H": 3, "T": 2})");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "lower: 57/25 (2.28) at mu = {H: 7/25, T: 18/25}\n"
          "upper: 27/10 (2.7) at mu = {H: 7/10, T: 3/10}\n");
    auto ind = cmd_extend(fixture("coin.json"), R"({"H": 1, "T": 0})", Side::Lower);
    CHECK(ind.out == "lower: 7/25 (0.28) at mu = {H: 7/25, T: 18/25}\n");
    auto up = credal::io::read_json(cmd_extend(fixture("coin.json"), R"({"H": 1, "T": 0})", Side::Upper, Format::Json).out);
    CHECK(up["upper"]["value"] == "7/10");
    CHECK_FALSE(up.contains("lower"));
    auto constant = credal::io::read_json(cmd_extend(fixture("coin.json"), R"({"H": 5, "T": "5"})", Side::Both, Format::Json).out);
    CHECK(constant["lower"]["value"] == "5");
    CHECK(constant["upper"]["value"] == "5");

    CHECK(cmd_extend(fixture("coin.json"), R"({"H": 1})").exit_code == exit_code::parse_error);
    CHECK(cmd_extend(fixture("coin.json"), "{not json").exit_code == exit_code::parse_error);
    CHECK(cmd_extend(fixture("sureloss.json"), R"({"H": 1, "T": 0})").exit_code == exit_code::sure_loss);
}

TEST_CASE("optimal: all criteria on coin") {
    OptimalOptions o;
    auto r = cmd_optimal(fixture("coin.json"), o);
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "admissible  {1, 2, 3, 4, 5, 6}\n"
          "maximin     {5}\n"
          "maximax     {2}\n"
          "maximal     {1, 2, 3, 5}\n"
          "interval    {1, 2, 3, 5, 6}\n"
          "eadmissible {1, 2, 3}\n");
    CHECK(cmd_optimal(fixture("coin.json"), o).out == r.out);
}

TEST_CASE("optimal: single criteria and witnesses") {
    OptimalOptions o;
    o.criterion = "meu";
    o.mu_json = R"({"H": "0.5", "T": "0.5"})";
    CHECK(cmd_optimal(fixture("coin.json"), o).out == "meu         {3}\n");

    o = {};
    o.criterion = "eadmissibility";
    o.prefilter = true;
    auto pre = cmd_optimal(fixture("coin.json"), o);
    CHECK(pre.out.find("eadmissible {1, 2, 3}\n") == 0);
    CHECK(pre.out.find("pruned by interval dominance: {4}") != std::string::npos);

    o = {};
    o.criterion = "maximality";
    o.witness = true;
    auto w = cmd_optimal(fixture("coin.json"), o).out;
    CHECK(w.find("  6: beaten by 1, margin 1/50 (0.02)\n") != std::string::npos);
    CHECK(w.find("  4: beaten by 5, margin 1/20 (0.05)\n") != std::string::npos);

    o = {};
    o.criterion = "intervaldominance";
    o.witness = true;
    o.format = Format::Json;
    auto j = credal::io::read_json(cmd_optimal(fixture("coin.json"), o).out);
    const auto& entry = j["results"][0];
    CHECK(entry["criterion"] == "interval");
    CHECK(entry["optimal"] == credal::io::Json::array({"1", "2", "3", "5", "6"}));
    CHECK(entry["witnesses"]["6"]["lower"] == "233/250");
    CHECK(entry["witnesses"]["6"]["upper"] == "139/50");
}

TEST_CASE("optimal: prefilter never changes the json sets") {
    OptimalOptions plain;
    plain.format = Format::Json;
    OptimalOptions pre = plain;
    pre.prefilter = true;
    auto a = credal::io::read_json(cmd_optimal(fixture("coin.json"), plain).out);
    auto b = credal::io::read_json(cmd_optimal(fixture("coin.json"), pre).out);
    REQUIRE(a["results"].size() == b["results"].size());
    for (std::size_t i = 0; i < a["results"].size(); ++i) {
        CHECK(a["results"][i]["optimal"] == b["results"][i]["optimal"]);
    }
    CHECK(b["results"][3]["pruned"] == credal::io::Json::array({"4"}));
    CHECK(b["results"][3]["lp_solves"].get<int>() < a["results"][3]["lp_solves"].get<int>());
}

TEST_CASE("optimal: flag misuse and failures") {
    OptimalOptions o;
    o.criterion = "meu";
    CHECK(cmd_optimal(fixture("coin.json"), o).exit_code == exit_code::flag_misuse);
    o.criterion = "maximin";
    o.mu_json = R"([0.5, 0.5])";
    CHECK(cmd_optimal(fixture("coin.json"), o).exit_code == exit_code::flag_misuse);
    o = {};
    o.criterion = "maximin";
    o.prefilter = true;
    CHECK(cmd_optimal(fixture("coin.json"), o).exit_code == exit_code::flag_misuse);
    o.criterion = "nonsense";
    o.prefilter = false;
    CHECK(cmd_optimal(fixture("coin.json"), o).exit_code == exit_code::flag_misuse);
    o = {};
    o.criterion = "meu";
    o.mu_json = R"([0.5, 0.6])";
    CHECK(cmd_optimal(fixture("coin.json"), o).exit_code == exit_code::parse_error);
    CHECK(cmd_optimal(fixture("sureloss.json"), {}).exit_code == exit_code::sure_loss);
    CHECK(cmd_optimal("/no/such/file.json", {}).exit_code == exit_code::parse_error);
    Scratch nodecisions(R"({"space": ["a"]})");
    CHECK(cmd_optimal(nodecisions.path, {}).exit_code == exit_code::parse_error);
}

TEST_CASE("binary exit codes") {
    CHECK(run_binary("check " + fixture("coin.json")) == 0);
    CHECK(run_binary("check " + fixture("incoherent.json")) == 0);
    CHECK(run_binary("check " + fixture("sureloss.json")) == 3);
    CHECK(run_binary("optimal " + fixture("coin.json") + " --criterion all") == 0);
    CHECK(run_binary("optimal " + fixture("coin.json") + " --criterion maximin --prefilter") == 4);
    CHECK(run_binary("optimal " + fixture("coin.json") + " --criterion meu") == 4);
    CHECK(run_binary("optimal " + fixture("coin.json")) == 4);
    CHECK(run_binary("extend " + fixture("coin.json") + " --gamble '{\"H\": 1, \"T\": 0}' --side upper") == 0);
    CHECK(run_binary("extend " + fixture("coin.json") + " --gamble '{\"H\": 1, \"T\": 0}' --side sideways") == 4);
    CHECK(run_binary("check /no/such/file.json") == 2);
}
