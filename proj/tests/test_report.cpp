#include <doctest.h>

#include <cmath>

#include "qcauchy/errors.hpp"
#include "qcauchy/report.hpp"

using namespace qcauchy;

TEST_CASE("pass flag follows residual <= tolerance") {
    ExperimentReport r("demo", {{"b", 1}, {"a", "x"}}, 7);
    CHECK(r.addRow({{"i", 0}}, {}, 1e-9, 1e-8).pass);
    CHECK_FALSE(r.addRow({{"i", 1}}, {}, 1e-7, 1e-8).pass);
    CHECK_FALSE(r.addRow({{"i", 2}}, {}, std::nan(""), 1.0).pass);
    CHECK_FALSE(r.allPass());
    CHECK(r.failingRows() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("JSON is key-sorted and round-trips") {
    ExperimentReport r("demo", {{"zeta", 0.1}, {"alpha", 3}}, 42);
    r.addRow({{"w", 0.5}}, {{"value", toJson(Complex(0.1, -1.0 / 3.0))}}, 2.5e-17, 1e-12);
    const std::string text = r.dumpJson();
    CHECK(text.find("\"alpha\"") < text.find("\"zeta\""));
    CHECK(text.find("\"experiment\"") < text.find("\"meta\""));
    CHECK(text.find("\"meta\"") < text.find("\"params\""));
    CHECK(text.find("\"params\"") < text.find("\"rows\""));
    CHECK(text.find("0.1") != std::string::npos);  // shortest round-trip float
    const auto back = ExperimentReport::fromJson(Json::parse(text));
    CHECK(back == r);
    CHECK(back.dumpJson() == text);
    CHECK(complexFromJson(back.rows()[0].outputs["value"]) == Complex(0.1, -1.0 / 3.0));
}

TEST_CASE("CSV quoting and layout") {
    CHECK(csvField("plain") == "plain");
    CHECK(csvField("a,b") == "\"a,b\"");
    CHECK(csvField("say \"hi\"") == "\"say \"\"hi\"\"\"");
    ExperimentReport r("demo", Json::object());
    r.addRow({{"R", 2.0}}, {{"m", toJson(Complex(0.0, -0.25))}, {"note", "x,y"}}, 0.0, 1e-10);
    const std::string csv = r.dumpCsv();
    CHECK(csv.rfind("inputs.R,outputs.m.im,outputs.m.re,outputs.note,residual,tolerance,pass\r\n", 0) == 0);
    CHECK(csv.find("2.0,-0.25,0.0,\"x,y\",0.0,1e-10,true\r\n") != std::string::npos);
}

TEST_CASE("parameters must be an object") {
    CHECK_THROWS_AS(ExperimentReport("x", Json::array()), DomainError);
}
