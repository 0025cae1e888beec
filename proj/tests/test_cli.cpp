#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef EHRHART_CLI_PATH
#error "EHRHART_CLI_PATH must point at the ehrhart executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" EHRHART_CLI_PATH "' " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "cli_test_" + name + ".json";
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("ehrhart prints the P_7 coefficients") {
    const auto r = run("ehrhart --family pn:7");
    REQUIRE(r.status == 0);
    const auto doc = json_of(r);
    const std::vector<std::string> want{"1",      "1534/105", "3188/45",  "7112/45",
                                        "1756/9", "7004/45",  "4952/45", "15656/315"};
    CHECK(doc["coefficients"].get<std::vector<std::string>>() == want);
}

TEST_CASE("wills reports the Q_13 violation with exit status 1") {
    const auto r = run("wills --family qn:13");
    CHECK(r.status == 1);
    const auto doc = json_of(r);
    CHECK(doc["overall"] == false);
    CHECK(doc["per_index"][5]["coefficient"] == "260832/5");
    CHECK(doc["per_index"][5]["bound"] == "41184");
    CHECK(doc["violated_indices"] == nlohmann::json::array({1, 5}));
    CHECK(run("wills --family cube:6").status == 0);
}

TEST_CASE("count formats") {
    CHECK(run("count --family pn:3 -k 2 --format plain").out == "93\n");
    CHECK(run("count --family pn:3 -k 2 --format csv").out == "k,count\n2,93\n");
    CHECK(json_of(run("count --family qn:4 -k 3"))["count"] == "649");
    CHECK(run("ehrhart --family cube:2 --format csv").out == "index,coefficient\n0,1\n1,4\n2,4\n");
}

TEST_CASE("box scans are opt-in and budgeted") {
    CHECK(run("count --family pn:4 -k 3 --box-scan --format plain").out == "1361\n");
    const auto big = run("count --family cube:13 -k 13 --box-scan");
    CHECK(big.status == 2);
    CHECK(big.out.find("exceeds the budget") != std::string::npos);
    CHECK(run("count --family cube:13 -k 13 --format plain").out == "4052555153018976267\n");
}

TEST_CASE("output does not depend on the worker count") {
    const auto one = run("ehrhart --family 'product(pn:3,cube:1)' --box-scan --threads 1");
    const auto four = run("ehrhart --family 'product(pn:3,cube:1)' --box-scan --threads 4");
    const auto env = run("ehrhart --family 'product(pn:3,cube:1)' --box-scan", "EHRHART_THREADS=3");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == env.out);
    CHECK(one.out == run("ehrhart --family 'product(pn:3,cube:1)'").out);
}

TEST_CASE("usage and input errors exit with status 2") {
    const auto bad_spec = run("ehrhart --family cube:");
    CHECK(bad_spec.status == 2);
    CHECK(bad_spec.out.find("position 5") != std::string::npos);
    CHECK(run("ehrhart").status == 2);
    CHECK(run("ehrhart --family cube:2 --input x.json").status == 2);
    CHECK(run("ehrhart --input does_not_exist.json").status == 2);
    CHECK(run("thm31 --family cube:2").status == 2);
    CHECK(run("thm31 --family cube:2 --a -1").status == 2);
    CHECK(run("thm31 --family cube:2 --a x").status == 2);
    CHECK(run("count --family cube:2 --format xml").status == 2);
    CHECK(run("frobnicate").status == 2);

    const auto malformed = temp_file("malformed", "{\"dimension\": 2, \"vertices\": [[0,0],[1,0],[0]]}");
    const auto r = run("ehrhart --input " + malformed);
    CHECK(r.status == 2);
    CHECK(r.out.find("/vertices/2") != std::string::npos);
    const auto broken = temp_file("broken", "{\"dimension\": ");
    CHECK(run("ehrhart --input " + broken).status == 2);
}

TEST_CASE("polytope JSON from the CLI re-parses to the same polytope") {
    for (const std::string spec : {"pn:4", "product(qn:3,cube:2)", "dilate(cross:3,2)"}) {
        const auto first = run("polytope --family '" + spec + "'");
        REQUIRE(first.status == 0);
        const auto path = temp_file("roundtrip", first.out);
        const auto second = run("polytope --input " + path);
        CHECK(second.out == first.out);
        CHECK(run("ehrhart --input " + path).out == run("ehrhart --family '" + spec + "'").out);
    }
}

TEST_CASE("thm31 and roots verdicts") {
    CHECK(run("thm31 --family cube:4 --a 2").status == 0);
    const auto cross = run("thm31 --family cross:5 --a 2");
    CHECK(cross.status == 0);
    const auto doc = json_of(cross);
    CHECK(doc["hypothesis"]["parity"] == true);
    CHECK(doc["volume_bound"]["is_equality"] == false);
    CHECK(run("thm31 --family pn:5 --a 2").status == 1);
    CHECK(run("thm31 --family cube:3 --a 3/2").status == 1);

    const auto roots = run("roots --family cube:3");
    CHECK(roots.status == 0);
    const auto rd = json_of(roots);
    CHECK(rd["roots"]["roots"].size() == 3);
    CHECK(rd["roots"]["roots"][0]["re"] == "-0.500000000000");
    CHECK(rd["common_real_part"] == "-0.500000000000");
    CHECK(run("roots --family cross:4 --a 2").status == 0);
    CHECK(run("roots --family qn:5 --a 2").status == 1);
}

TEST_CASE("reflexive subcommand") {
    const auto r = run("reflexive --family cube:2");
    CHECK(r.status == 0);
    CHECK(json_of(r)["agree"] == true);
    const auto diamond = temp_file("diamond", R"({"dimension": 2, "vertices": [[1,0],[0,2],[-1,0],[0,-2]],
        "halfspaces": [{"normal": [2,1], "rhs": 2}, {"normal": [-2,1], "rhs": 2},
                       {"normal": [-2,-1], "rhs": 2}, {"normal": [2,-1], "rhs": 2}]})");
    const auto d = run("reflexive --input " + diamond);
    CHECK(d.status == 1);
    const auto dd = json_of(d);
    CHECK(dd["index_l"] == 2);
    CHECK(dd["def_check"] == false);
    CHECK(dd["coefficient_check"] == true);
    CHECK(run("reflexive --family pn:3").status == 2);
}

TEST_CASE("reproduce-paper exits 0 exactly when every row passes") {
    const auto r = run("reproduce-paper");
    const auto doc = json_of(r);
    bool all = true;
    for (const auto& row : doc["rows"]) all = all && row["passed"].get<bool>();
    CHECK(doc["all_passed"] == all);
    CHECK(r.status == (all ? 0 : 1));
    CHECK(doc["rows"].size() == 12);
    CHECK(run("reproduce-paper").out == r.out);
}
