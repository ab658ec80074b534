/*
   Copyright 2026 The omegacub Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "omegacub/cli.hpp"
#include "omegacub/io.hpp"

using omegacub::io::json;

namespace {

std::string fixture(const std::string& name) { return std::string(OMEGACUB_FIXTURES) + "/" + name; }

struct Result {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = omegacub::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    static int counter = 0;
    const auto path = (std::filesystem::temp_directory_path() /
                       ("omegacub_" + std::to_string(::getpid()) + "_" + std::to_string(++counter) + "_" + name))
                          .string();
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("indicator command") {
    const Result r = run({"indicator", fixture("example1.json")});
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    CHECK(j["support_size"] == 5);
    CHECK(j["regular"] == false);
    CHECK(run({"indicator", fixture("full_factorial_3x2.json")}).parsed()["support_size"] == 1);
    CHECK(run({"indicator", fixture("example2.json")}).parsed()["support_size"] == 9);
    const Result t = run({"indicator", fixture("example1.json"), "--format", "text"});
    CHECK(t.out.find("regular: false") != std::string::npos);
    CHECK(t.out.find("z1*z2*z4") != std::string::npos);
}

TEST_CASE("weights command") {
    const Result r = run({"weights", fixture("example2.json"), fixture("example2_basis.json"), "gaussian"});
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    for (const auto& w : j["weights"]) CHECK(w["exact"] == "(1/4)");
    CHECK(j["equal_weights"] == true);
    CHECK(j["precision"]["classes"].size() == 8);

    const Result r1 = run({"weights", fixture("example1.json"), fixture("example1_basis.json"), "gaussian"});
    REQUIRE(r1.code == 0);
    for (const auto& w : r1.parsed()["weights"]) CHECK(w["exact"] == "(1/8)");

    const Result single = run({"weights", fixture("single_node.json"), "auto", "gaussian"});
    REQUIRE(single.code == 0);
    CHECK(single.parsed()["weights"][0]["exact"] == "1");

    const Result uni = run({"weights", fixture("omega2_design.json"), "auto", fixture("uniform_omega2.json")});
    REQUIRE(uni.code == 0);
    CHECK(uni.parsed()["weights"][1]["exact"] == "(1/2)");
}

TEST_CASE("weights with an explicit term order file") {
    const std::string order = temp_file("order.json", R"(["z1"])");
    const Result r = run({"weights", fixture("example3.json"), "auto", "gaussian", "--order", order});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["basis"] == json::parse("[[0,0],[1,0]]"));
    const Result d = run({"weights", fixture("example3.json"), "auto", "gaussian"});
    CHECK(d.parsed()["basis"] == json::parse("[[0,0],[0,1]]"));
    std::remove(order.c_str());
}

TEST_CASE("equal-search command") {
    const Result found = run({"equal-search", fixture("example2.json"), "gaussian"});
    REQUIRE(found.code == 0);
    const json j = found.parsed();
    CHECK(j["equal_weights"] == true);
    for (const auto& w : j["weights"]) CHECK(w["exact"] == "(1/4)");
    CHECK(j["precision"]["classes"].size() == 8);

    const Result none = run({"equal-search", fixture("example3.json"), "gaussian", "--format", "text"});
    CHECK(none.code == 3);
    CHECK(none.out.find("none") == 0);
    CHECK(run({"equal-search", fixture("example3.json"), "gaussian"}).parsed()["found"] == false);

    CHECK(run({"equal-search", fixture("regular_fraction.json"), "gaussian"}).code == 0);
}

TEST_CASE("weights output feeds verify") {
    const Result w = run({"weights", fixture("example2.json"), fixture("example2_basis.json"), "gaussian"});
    const std::string rule = temp_file("rule.json", w.out);
    const Result v = run({"verify", fixture("example2.json"), rule, "gaussian", "0,5", "1,1", "0,0"});
    REQUIRE(v.code == 0);
    const json j = v.parsed();
    CHECK(j["results"][0]["exact"] == true);
    CHECK(j["results"][1]["exact"] == false);
    CHECK(j["results"][1]["rule_value"]["exact"] == "(1/2)");
    CHECK(j["results"][2]["exact"] == true);

    const Result mc = run({"verify", fixture("example2.json"), rule, "gaussian", "0,5", "--mc", "2000", "--seed", "9"});
    REQUIRE(mc.code == 0);
    CHECK(mc.parsed()["results"][0]["mc"]["samples"] == 2000);
    // same seed, same output
    CHECK(run({"verify", fixture("example2.json"), rule, "gaussian", "0,5", "--mc", "2000", "--seed", "9"}).out ==
          mc.out);

    CHECK(run({"verify", fixture("example1.json"), rule, "gaussian", "0,0"}).code == 2);
    CHECK(run({"verify", fixture("example2.json"), rule, "gaussian", "0,0,1"}).code == 2);
    CHECK(run({"verify", fixture("example2.json"), rule, fixture("uniform_omega2.json"), "0,0", "--mc", "10"}).code ==
          2);
    std::remove(rule.c_str());
}

TEST_CASE("null-moment command") {
    const Result a = run({"null-moment", fixture("gaussian_p1.json"), "2:1"});
    REQUIRE(a.code == 0);
    CHECK(a.parsed()["verdict"] == "ProvablyZero");
    const Result b = run({"null-moment", fixture("gaussian_p2_independent.json"), "1:1,3:3"});
    CHECK(b.parsed()["verdict"] == "Unknown");
    const Result c = run({"null-moment", fixture("gaussian_p3_blocks.json"), "1:0,2:1,0:1"});
    CHECK(c.parsed()["verdict"] == "ProvablyZero");
    CHECK(c.parsed()["block"] == json::array({1}));
    CHECK(run({"null-moment", fixture("gaussian_p3_blocks.json"), "1:0"}).code == 2);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"indicator", "/nonexistent.json"}).code == 2);
    const std::string broken = temp_file("broken.json", "{\n  \"m\": 2,\n  \"k\": \n}");
    const Result r = run({"indicator", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find(":4:") != std::string::npos);
    std::remove(broken.c_str());
    const Result bad_pair = run({"weights", fixture("example3.json"), fixture("example2_basis.json"), "gaussian"});
    CHECK(bad_pair.code == 2);
    const std::string basis = temp_file("basis.json", R"({"m": 3, "k": 2, "basis": [[0, 0], [0, 1], [0, 2]]})");
    const Result defect = run({"weights", fixture("example3.json"), basis, "gaussian"});
    CHECK(defect.code == 2);
    CHECK(defect.err.find("incorrect pair") != std::string::npos);
    std::remove(basis.c_str());
    CHECK(run({"weights", fixture("example2.json"), "auto", "gaussian", "--format", "yaml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
