#include "wshift/commands.hpp"
#include "wshift/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wshift;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "wshift");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_config(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("wshift_test_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}

const char* kBergman = R"({"base": {"type": "rational_tail", "numerator": ["2", "1"], "denominator": ["3", "1"]}})";

std::string with_backstep(const std::string& s)
{
    return R"({"base": {"type": "rational_tail", "numerator": ["2", "1"], "denominator": ["3", "1"]},
               "transforms": [{"backstep": ")" + s + R"("}]})";
}

std::vector<std::string> exact_column(const std::string& json_text)
{
    std::vector<std::string> out;
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& row : doc["rows"]) out.push_back(row["exact"].get<std::string>());
    return out;
}

} // namespace

TEST_CASE("config parsing")
{
    FamilyConfig c = parse_family_config(with_backstep("9/16"));
    CHECK(std::holds_alternative<RationalTailBase>(c.base));
    REQUIRE(c.transforms.size() == 1);
    CHECK(std::get<BackstepStep>(c.transforms[0]).s == make_rational(9, 16));
    CHECK(parse_family_config(serialize(c)).transforms.size() == 1);
    CHECK(serialize(parse_family_config(serialize(c))) == serialize(c));
    CHECK(is_bergman_family(parse_family_config(kBergman)));
    CHECK_FALSE(is_bergman_family(c));
    CHECK(known_measure(parse_family_config(kBergman)) == Measure::power_density(1));

    CHECK_THROWS_AS(parse_family_config(R"({"base": {"type": "constant", "value": 0.5}})"), ParseError);
    CHECK_THROWS_AS(parse_family_config(R"({"base": {"type": "constant", "value": "1"}, "extra": 1})"), ParseError);
    CHECK_THROWS_AS(parse_family_config(R"({"base": {"type": "mystery"}})"), ParseError);
    CHECK_THROWS_AS(parse_family_config("{\n  \"base\": \n"), ParseError);
    try {
        parse_family_config(R"({"base": {"type": "measure", "atoms": [{"at": "1/2", "mass": "x"}]}})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("base.atoms[0].mass") != std::string::npos);
    }
    CHECK_THROWS_AS(build_family(parse_family_config(R"({"base": {"type": "constant", "value": "-1"}})")), InvalidFamilyError);
}

TEST_CASE("moments command")
{
    auto b = run({"moments", "--config", write_config("bergman", kBergman), "--count", "4", "--format", "json"});
    CHECK(b.code == 0);
    CHECK(exact_column(b.out) == std::vector<std::string>{"1", "2/3", "1/2", "2/5"});
    auto c = run({"moments", "--config", write_config("one", R"({"base": {"type": "constant", "value": "1"}})"), "--count", "3", "--format", "json"});
    CHECK(exact_column(c.out) == std::vector<std::string>{"1", "1", "1"});
    auto m = run({"moments", "--config", write_config("m", R"({"base": {"type": "measure", "density": [{"coeff": "2", "exponent": "1"}]}})"),
                  "--count", "3", "--format", "json"});
    CHECK(exact_column(m.out) == std::vector<std::string>{"1", "2/3", "1/2"});
}

TEST_CASE("check command exit codes")
{
    auto ok = run({"check", "--config", write_config("b916", with_backstep("9/16")), "--k", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PassedWindow(25)") != std::string::npos);
    auto bad = run({"check", "--config", write_config("b35", with_backstep("3/5")), "--k", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FailedAt(0)") != std::string::npos);
    CHECK(run({"check", "--config", write_config("one", R"({"base": {"type": "constant", "value": "1"}})"), "--k", "3"}).code == 0);
    auto pw = run({"check", "--config", write_config("bergman", kBergman), "--k", "2", "--power", "3", "--window", "10"});
    CHECK(pw.code == 0);
}

TEST_CASE("threshold command")
{
    auto cfg = write_config("bergman", kBergman);
    auto k2 = run({"threshold", "--config", cfg, "--k", "2", "--power", "3", "--format", "json"});
    CHECK(k2.code == 0);
    CHECK(exact_column(k2.out).front() == "98/115");
    for (const char* l : {"1", "2", "5"}) {
        auto sub = run({"threshold", "--config", cfg, "--mode", "subnormal", "--power", l, "--format", "json"});
        CHECK(exact_column(sub.out).front() == "1/2");
    }
    auto pqh = run({"threshold", "--config", cfg, "--mode", "pqh", "--power", "2", "--format", "json"});
    CHECK(pqh.code == 0);
    CHECK(exact_column(pqh.out).front() == "9/10");

    auto refused = run({"threshold", "--config", write_config("b916", with_backstep("9/16")), "--mode", "pqh"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("pqh") != std::string::npos);
    auto explicit_base = write_config("ex", R"({"base": {"type": "explicit", "prefix": ["1/2"], "then": "1"}})");
    CHECK(run({"threshold", "--config", explicit_base}).code == 2);
}

TEST_CASE("decompose command")
{
    auto two = run({"decompose", "--config", write_config("bergman", kBergman), "--power", "2", "--count", "2", "--format", "json"});
    CHECK(two.code == 0);
    auto col = exact_column(two.out);
    REQUIRE(col.size() == 8);
    CHECK(col[0] == "1/2");
    CHECK(col[1] == "2/3");
    CHECK(col[4] == "3/5");
    auto four = run({"decompose", "--config", write_config("one", R"({"base": {"type": "constant", "value": "1"}})"), "--power", "4",
                     "--count", "2", "--format", "json"});
    CHECK(exact_column(four.out) == std::vector<std::string>(16, "1"));
}

TEST_CASE("threshold tables command")
{
    auto t = run({"paper-tables", "--format", "csv"});
    CHECK(t.code == 0);
    CHECK(t.out.find("MISMATCH") == std::string::npos);
    CHECK(t.out.find("l=2 2-hyponormal,225/322") != std::string::npos);
    CHECK(t.out.find("l=3 pqh,379/335") != std::string::npos);
    CHECK(t.out.find("\r\n") != std::string::npos);
    auto j = nlohmann::json::parse(run({"paper-tables", "--format", "json"}).out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["ok"] == true);
    CHECK(j["rows"].size() == 32);
    CHECK(j["rows"][0]["exact"] == "2/3");
    CHECK(j["rows"][0]["approx"].get<double>() == doctest::Approx(0.666667));
}

TEST_CASE("usage and input errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"moments"}).code == 2);
    CHECK(run({"moments", "--config", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"check", "--config", write_config("bergman", kBergman), "--format", "xml"}).code == 2);
    CHECK(run({"threshold", "--config", write_config("bergman", kBergman), "--mode", "bogus"}).code == 2);
    auto bad = run({"moments", "--config", write_config("bad", R"({"base": {"type": "constant", "value": 0.5}})")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("base.value") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report rendering")
{
    Report r{"demo", {"verdict"}, {}, {"a note"}, false};
    r.rows.push_back(value_row("plain", make_rational(-1, 3)));
    r.rows.push_back({"needs \"quotes\", and a comma", "", "", {{"verdict", "FailedAt(2)"}}});

    std::ostringstream csv;
    render(r, Format::Csv, csv);
    CHECK(csv.str() == "label,exact,approx,verdict\r\nplain,-1/3,-0.333333,\r\n"
                       "\"needs \"\"quotes\"\", and a comma\",,,FailedAt(2)\r\n");

    std::ostringstream text;
    render(r, Format::Text, text);
    CHECK(text.str().find("# a note") != std::string::npos);
    CHECK(text.str().find("# status: FAILED") != std::string::npos);

    std::ostringstream js;
    render(r, Format::Json, js);
    auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["ok"] == false);
    CHECK(doc["rows"][0]["approx"].get<double>() == doctest::Approx(-0.333333));
    CHECK(doc["rows"][1]["exact"].is_null());
    CHECK(doc["rows"][1]["verdict"] == "FailedAt(2)");

    std::ostringstream inf;
    Report t{"t", {}, {value_row("unbounded", Threshold::infinite())}, {}, true};
    render(t, Format::Json, inf);
    auto tdoc = nlohmann::json::parse(inf.str());
    CHECK(tdoc["rows"][0]["exact"] == "inf");
    CHECK(tdoc["rows"][0]["approx"].is_null());
}
