#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace polyaut::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, ClassifyJson) {
    const Result r = invoke({"classify", "5", "7", "9", "--json"});
    EXPECT_EQ(r.code, exit_ok);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["status"], "NOT_TAME");
    EXPECT_EQ(doc["rule"], "R2");
}

TEST(Cli, ClassifyTextAndExitCodes) {
    Result r = invoke({"classify", "1", "3", "5"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("TAME R1"), std::string::npos);
    EXPECT_NE(r.out.find("step: z += x^5"), std::string::npos);

    r = invoke({"classify", "4", "6", "7"});
    EXPECT_EQ(r.code, exit_unknown);
    EXPECT_EQ(r.out.rfind("UNKNOWN NONE", 0), 0u);

    EXPECT_EQ(invoke({"classify", "0", "6", "7"}).code, exit_math);
    EXPECT_EQ(invoke({"classify", "a", "6", "7"}).code, exit_usage);
    EXPECT_EQ(invoke({"classify", "4", "6"}).code, exit_usage);
    EXPECT_EQ(invoke({}).code, exit_usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, exit_usage);
}

TEST(Cli, ClassifyIsStable) {
    const auto a = invoke({"classify", "12", "5", "7", "--json"}).out;
    const auto b = invoke({"classify", "12", "5", "7", "--json"}).out;
    EXPECT_EQ(a, b);
}

TEST(Cli, Nagata) {
    const Result r = invoke({"nagata", "--power", "1", "--verify-invariant"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("multidegree: 1 3 5\n"), std::string::npos);
    EXPECT_NE(r.out.find("invariant: OK\n"), std::string::npos);

    const Result j = invoke({"nagata", "--power", "3", "--verify-invariant", "--json"});
    const Json doc = Json::parse(j.out);
    EXPECT_EQ(doc["multidegree"], Json::parse("[9,11,13]"));
    EXPECT_EQ(doc["invariant"], true);
    EXPECT_EQ(doc["map"]["vars"], Json::parse(R"(["x","y","z"])"));
}

TEST(Cli, WitnessPipesIntoMdeg) {
    for (const auto& triple : std::vector<std::vector<std::string>>{
             {"1", "3", "5"}, {"12", "7", "5"}, {"3", "6", "8"}, {"2", "2", "2"}}) {
        std::vector<std::string> args{"witness"};
        args.insert(args.end(), triple.begin(), triple.end());
        const Result w = invoke(args);
        ASSERT_EQ(w.code, exit_ok);
        const Result m = invoke({"mdeg", "--map", "-"}, w.out);
        EXPECT_EQ(m.code, exit_ok);
        std::vector<int> sorted;
        for (const auto& s : triple) {
            sorted.push_back(std::stoi(s));
        }
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(m.out, std::to_string(sorted[0]) + " " + std::to_string(sorted[1]) + " " +
                             std::to_string(sorted[2]) + "\n");
    }
    EXPECT_EQ(invoke({"witness", "5", "7", "9"}).code, exit_math);
}

TEST(Cli, MdegFromFileAndErrors) {
    const auto path = std::filesystem::temp_directory_path() / "polyaut_cli_test_map.json";
    {
        std::ofstream(path) << R"({"vars":["x","y","z"],"components":["x","y + x^3","z + x^5"]})";
    }
    Result r = invoke({"mdeg", "--map", path.string(), "--json"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(Json::parse(r.out)["multidegree"], Json::parse("[1,3,5]"));

    r = invoke({"reduce", "--map", path.string(), "--max-deg", "10"});
    EXPECT_EQ(r.code, exit_ok);
    const Json red = Json::parse(r.out);
    EXPECT_EQ(red["target"], 2);
    EXPECT_EQ(red["g"], "u^3");
    EXPECT_EQ(red["achieved_degree"], 1);
    std::filesystem::remove(path);

    EXPECT_EQ(invoke({"mdeg", "--map", "/nonexistent/map.json"}).code, exit_no_input);
    EXPECT_EQ(invoke({"mdeg", "--map", "-"}, "not json").code, exit_usage);
    EXPECT_EQ(invoke({"mdeg", "--map", "-"}, R"({"vars":["x"],"components":["x+"]})").code,
              exit_usage);
}

TEST(Cli, ReduceNoneFound) {
    const std::string tn = polymap_to_json(twisted_iterate(1)).dump();
    Result r = invoke({"reduce", "--map", "-", "--max-deg", "12"}, tn);
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "none found within bound 12\n");
    r = invoke({"reduce", "--map", "-", "--json"}, tn);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["bound"], 10);
    EXPECT_TRUE(doc["reduction"].is_null());
    EXPECT_EQ(invoke({"reduce", "--map", "-"}, R"({"vars":["x"],"components":["x"]})").code,
              exit_math);
}

TEST(Cli, Poisson) {
    Result r = invoke({"poisson", "--f", "x", "--g", "y"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "2\n");
    r = invoke({"poisson", "--f", "y^2 + z*x", "--g", "y", "--json"});
    EXPECT_EQ(Json::parse(r.out)["poisson_degree"], 3);
    r = invoke({"poisson", "--f", "a", "--g", "a^2", "--vars", "a,b"});
    EXPECT_EQ(r.out, "0\n");
    EXPECT_EQ(invoke({"poisson", "--f", "x +", "--g", "y"}).code, exit_usage);
    EXPECT_EQ(invoke({"poisson", "--f", "w", "--g", "y"}).code, exit_usage);
    EXPECT_EQ(invoke({"poisson", "--f", "x", "--g", "x", "--vars", "x"}).code, exit_math);
}

} // namespace
} // namespace polyaut::cli
