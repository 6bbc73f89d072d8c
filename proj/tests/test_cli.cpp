#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nefres/cli.hpp"

using namespace nefres;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has_float(const Json& j) {
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& x : j) if (has_float(x)) return true;
    return false;
}

void check_round_trip(const Result& r) {
    Json j = Json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK_FALSE(has_float(j));
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("classify on Q3") {
    auto r = call({"classify", "--variety", "Q3", "--rank", "2", "--c1", "1", "--output", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 3);
    CHECK(j["cases"].size() == 3);
    for (const auto& c : j["cases"]) {
        CHECK(c["citation"].is_string());
        CHECK_FALSE(c["citation"].get<std::string>().empty());
        CHECK(c["checks"]["rank"]["ok"] == true);
        CHECK(c["checks"]["det"]["lhs"].is_array());
    }
    check_round_trip(r);
}

TEST_CASE("homtable on Q2") {
    auto r = call({"homtable", "--variety", "Q2"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    auto h = j["hom"];
    REQUIRE(h.size() == 4);
    for (std::size_t a = 0; a < 4; ++a) {
        REQUIRE(h[a].size() == 4);
        CHECK(h[a][a] == 1);
        for (std::size_t b = 0; b < a; ++b) CHECK(h[a][b] == 0);
    }
    CHECK(j["generators"][3]["twist"] == Json::array({1, 1}));
    CHECK(j["variety"] == "Q2");
    CHECK(j["strong_exceptional"]["ok"] == true);
    check_round_trip(r);
}

TEST_CASE("verify the full grid") {
    auto r = call({"verify", "--all"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["ok"] == true);
    for (const auto& c : j["cases"]) {
        CHECK(c.contains("case"));
        CHECK(c.contains("n"));
        CHECK(c.contains("r"));
        CHECK(c["checks"].contains("rank"));
        CHECK(c["checks"].contains("chi"));
        CHECK(c.contains("citation"));
    }
    check_round_trip(r);
}

TEST_CASE("round trips across subcommands") {
    std::vector<std::vector<std::string>> cmds = {
        {"homtable", "--variety", "Q4"},
        {"homtable", "--variety", "P3", "--twist", "2"},
        {"resolve", "--variety", "Q3", "--rank", "2", "--c1", "1", "--dmin", "1", "--e", "3"},
        {"resolve", "--variety", "Q4", "--rank", "2", "--c1", "1", "--dmin", "1"},
        {"resolve", "--variety", "Q2", "--e0", "4,2,2,1"},
        {"resolve", "--variety", "P3", "--rank", "3", "--c1", "2", "--two-step", "2"},
        {"bounds", "--variety", "Q2", "--rank", "2", "--c1", "1,1", "--c2", "2", "--dmin", "1,1"},
        {"bounds", "--variety", "Q4", "--rank", "5", "--c1", "1", "--e", "6"},
        {"classify", "--fact", "d=2", "--fact", "hom(O(2),E)=0", "--fact", "hom(O(1),E)>=2"},
        {"verify", "--case", "pn_d2_p3_three_step", "--variety", "P3", "--rank", "4"},
        {"cohomology", "--variety", "Q3", "--twist", "1", "--flavor", "spinor"},
        {"cohomology", "--variety", "Q2", "--twist", "-2,1"},
    };
    for (const auto& c : cmds) {
        auto r = call(c);
        INFO(c[0], " ", r.err);
        CHECK(r.code == 0);
        check_round_trip(r);
    }
}

TEST_CASE("solver and section bound output") {
    auto r = call({"resolve", "--variety", "Q3", "--rank", "2", "--c1", "1", "--dmin", "1", "--e", "3"});
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "determined");
    CHECK(j["table"][0][1] == 12);
    CHECK(j["table"][1][1] == 12);
    CHECK(j["table"][2][0] == 48);
    auto b = Json::parse(call({"bounds", "--variety", "Q4", "--rank", "5", "--c1", "1", "--e", "6"}).out);
    CHECK(b["section_bound"]["bound"] == "6");
    CHECK(b["section_bound"]["boundary"] == true);
    auto two = Json::parse(call({"resolve", "--variety", "P3", "--rank", "3", "--c1", "2", "--two-step", "2"}).out);
    CHECK(two["f01"] == 6);
    CHECK(two["f10"] == 24);
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"homtable", "--variety", "X3"}).code == 2);
    CHECK(call({"homtable", "--variety", "Q1"}).code == 2);
    CHECK(call({"homtable"}).code == 2);
    CHECK(call({"homtable", "--variety", "P2", "--output", "xml"}).code == 2);
    CHECK(call({"classify", "--variety", "P3", "--rank", "2", "--c1", "3"}).code == 2);
    auto nc = call({"classify", "--variety", "Q3", "--rank", "2", "--c1", "2"});
    CHECK(nc.code == 2);
    CHECK(nc.err.find("not classified") != std::string::npos);
    CHECK(call({"classify", "--variety", "Q2", "--rank", "2", "--c1", "1,x"}).code == 2);
    CHECK(call({"classify", "--fact", "colour=blue"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"--help"}).code == 0);

    auto inf = call({"resolve", "--variety", "Q5", "--rank", "2", "--c1", "1", "--dmin", "1", "--e", "4"});
    CHECK(inf.code == 1);
    CHECK(Json::parse(inf.out)["status"] == "infeasible");
    CHECK(call({"resolve", "--variety", "P3", "--rank", "2", "--c1", "1", "--dmin", "0"}).code == 1);
    CHECK(call({"cohomology", "--variety", "Q3", "--twist", "-5", "--flavor", "spinor"}).code == 1);
    CHECK(call({"cohomology", "--variety", "P3", "--twist", "0", "--flavor", "spinor"}).code == 2);
}

TEST_CASE("user tables") {
    auto good = temp_path("nefres_good_table.json");
    auto bad = temp_path("nefres_bad_table.json");
    auto junk = temp_path("nefres_junk_table.json");
    {
        std::ofstream(good) << R"([[11,3,0,0],[12,0,0,0],[0,0,0,0],[0,0,0,0]])";
        std::ofstream(bad) << R"({"e": [[11,4,0,0],[16,0,0,0],[0,0,0,0],[0,0,0,0]], "dmin": 1})";
        std::ofstream(junk) << "[[1, 2], [3]]";
    }
    auto ok = call({"verify", "--table", good, "--variety", "P3", "--rank", "2", "--c1", "1", "--dmin", "1"});
    CHECK(ok.code == 0);
    check_round_trip(ok);
    auto fail = call({"verify", "--table", bad, "--variety", "P3", "--rank", "2", "--c1", "1"});
    CHECK(fail.code == 1);
    CHECK(Json::parse(fail.out)["ok"] == false);
    CHECK(call({"verify", "--table", junk, "--variety", "P3", "--rank", "2", "--c1", "1"}).code == 2);
    CHECK(call({"verify", "--table", temp_path("nefres_missing.json"), "--variety", "P3", "--rank", "2", "--c1", "1"}).code == 2);
    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(junk.c_str());
}

TEST_CASE("tsv and pretty renderers") {
    auto t = call({"homtable", "--variety", "P2", "--output", "tsv"});
    CHECK(t.code == 0);
    CHECK(t.out.find("hom.0\t1,3,6") != std::string::npos);
    CHECK(t.out.find("variety\tP2") != std::string::npos);
    auto p = call({"homtable", "--variety", "P2", "--output", "pretty"});
    CHECK(p.code == 0);
    CHECK(p.out.find("variety: P2") != std::string::npos);
    CHECK(p.out.find("hom:") != std::string::npos);
}

TEST_CASE("json helpers") {
    CHECK(to_json(PicClass(3)) == 3);
    CHECK(to_json(PicClass(1, 2)) == Json::array({1, 2}));
    CHECK(pic_from_json(Json::array({1, 2})) == PicClass(1, 2));
    CHECK(pic_from_json(Json(4)) == PicClass(4));
    ExponentTable t{{{1, 2}, {3, 0}}, PicClass(1)};
    CHECK(table_from_json(to_json(t)) == t);
    CHECK(to_json(LinExpr(Rational(63, 2))) == "63/2");
    CHECK(to_json(LinExpr(5)) == 5);
}
