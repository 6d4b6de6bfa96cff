#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "commands.hpp"
#include "helpers.hpp"
#include "hurwitz/json_io.hpp"

using namespace hurwitz;
using namespace hurwitz::cli;

namespace {

CheckOptions check_of(const std::string& poly, bool quasi = false) {
    CheckOptions o;
    o.poly = poly;
    o.quasi = quasi;
    return o;
}

IdealizerOptions ideal_of(const std::string& poly, const std::string& family, std::optional<int> n = std::nullopt) {
    IdealizerOptions o;
    o.poly = poly;
    o.family = family;
    o.n = n;
    return o;
}

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string command = std::string(HURWITZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST_CASE("check exit codes") {
    CHECK(cmd_check(check_of("16,8,164,80,230,100")).exit_code == kAffirmative);
    const CommandResult q = cmd_check(check_of("1,1,1,1", true));
    CHECK(q.exit_code == kAffirmative);
    CHECK(q.payload["verdict"]["index"] == 1);
    CHECK(cmd_check(check_of("1,1,1,1")).exit_code == kNegative);
    CHECK(cmd_check(check_of("1,0")).exit_code == kUsageError);
    CHECK(cmd_check(check_of("1,a,2")).exit_code == kUsageError);
    CHECK(cmd_check(check_of("5")).exit_code == kUsageError);
    CHECK(cmd_check(check_of("1,-1,1")).exit_code == kNegative);

    CheckOptions desc = check_of("100,230,80,164,8,16");
    desc.descending = true;
    CHECK(cmd_check(desc).exit_code == kAffirmative);
}

TEST_CASE("hadamard exit codes") {
    HadamardOptions o;
    o.first = "16,8,164,80,230,100";
    o.second = "4.66,6.4,6.62,8.96,6.4,6.17";
    const CommandResult r = cmd_hadamard(o);
    CHECK(r.exit_code == kNegative);
    CHECK(polynomial_from_json(r.payload["product"]) == testing::P("74.56,51.2,1085.68,716.8,1472,617"));

    o.second = "1,1,1,1,1,1";
    CHECK(cmd_hadamard(o).exit_code == kAffirmative);

    o.second = "1,1,1";
    const CommandResult t = cmd_hadamard(o);
    CHECK(t.payload["nominal_degree"] == 2);
    CHECK(t.human_text.find("truncated") != std::string::npos);

    o.second = "1,x";
    CHECK(cmd_hadamard(o).exit_code == kUsageError);
}

TEST_CASE("idealizer exit codes") {
    CHECK(cmd_idealizer(ideal_of("4.5,10,4.75,5.5,1,1", "Y", 5)).exit_code == kAffirmative);
    const CommandResult bad = cmd_idealizer(ideal_of("4.66,6.4,6.62,8.96,6.4,6.17", "Y", 5));
    CHECK(bad.exit_code == kNegative);
    CHECK(bad.payload["witness"]["k"] == 5);
    CHECK(bad.human_text.find("witness: k = 5") != std::string::npos);
    CHECK(cmd_idealizer(ideal_of("1,1,1,1,1", "W", 4)).exit_code == kNegative);
    CHECK(cmd_idealizer(ideal_of("1,1,1,1,1", "Wbar", 4)).exit_code == kAffirmative);
    CHECK(cmd_idealizer(ideal_of("1,1,1,1,1", "Q", 4)).exit_code == kUsageError);
    CHECK(cmd_idealizer(ideal_of("1,1,1,1,1", "Y5")).exit_code == kUsageError);
    CHECK(cmd_idealizer(ideal_of("1,1,1,1,1", "W", 5)).exit_code == kUsageError);
}

TEST_CASE("verify, search and examples") {
    VerifyOptions v;
    v.suite = "lemmas";
    v.samples = 200;
    v.seed = 7;
    CHECK(cmd_verify(v).exit_code == kAffirmative);
    v.suite = "nope";
    CHECK(cmd_verify(v).exit_code == kUsageError);

    SearchOptions s;
    s.degrees = "5";
    s.samples = 100;
    CHECK(cmd_search(s).exit_code == kAffirmative);
    s.degrees = "2";
    CHECK(cmd_search(s).exit_code == kUsageError);
    s.degrees = "x..y";
    CHECK(cmd_search(s).exit_code == kUsageError);

    CHECK(cmd_examples().exit_code == kAffirmative);
}

TEST_CASE("binary exit codes and json round trip") {
    CHECK(run_cli("check 16,8,164,80,230,100").status == 0);
    CHECK(run_cli("check 1,0").status == 2);
    CHECK(run_cli("check").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("idealizer 4.66,6.4,6.62,8.96,6.4,6.17 --family Y --n 5").status == 1);

    const Run first = run_cli("hadamard 16,8,164,80,230,100 4.66,6.4,6.62,8.96,6.4,6.17 --json");
    CHECK(first.status == 1);
    const auto payload = nlohmann::json::parse(first.out);
    const Polynomial product = polynomial_from_json(payload["product"]);

    std::string coeffs;
    for (const auto& c : payload["product"]["coefficients"]) coeffs += (coeffs.empty() ? "" : ",") + c.get<std::string>();
    const Run again = run_cli("check " + coeffs + " --json");
    CHECK(again.status == 1);
    const auto second = nlohmann::json::parse(again.out);
    CHECK(polynomial_from_json(second["polynomial"]) == product);
    CHECK(second["minors"] == payload["analysis"]["minors"]);
    CHECK(second["verdict"] == payload["analysis"]["verdict"]);
}
