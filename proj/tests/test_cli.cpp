#include <doctest.h>

#include "dgkit/cli.hpp"

using namespace dgkit;

namespace {

CommandOptions options(std::vector<std::string> command, std::string object = "")
{
    CommandOptions o;
    o.command = std::move(command);
    o.object = std::move(object);
    return o;
}

}  // namespace

TEST_CASE("reports are deterministic")
{
    CommandOptions o = options({"bar"}, "dual-numbers");
    o.trunc = Truncation{-1, 6, 6};
    o.homology = true;
    Report a = dispatch(o), b = dispatch(o);
    CHECK(a.render() == b.render());
    CHECK(a.passed());
    CHECK(a.render().find("status: PASS") != std::string::npos);
    CHECK(a.render().find("truncation: -1:6:6") != std::string::npos);
}

TEST_CASE("a failing check is reported with its witness")
{
    Report r;
    r.command = "demo";
    Check c{"something holds"};
    c.fail("at x");
    r.checks.push_back(c);
    CHECK(!r.passed());
    std::string text = r.render();
    CHECK(text.find("FAIL something holds") != std::string::npos);
    CHECK(text.find("witness: at x") != std::string::npos);
    CHECK(text.find("status: FAIL") != std::string::npos);
}

TEST_CASE("dispatch rejects bad usage")
{
    CHECK_THROWS_AS(dispatch(options({})), UsageError);
    CHECK_THROWS_AS(dispatch(options({"nope"})), UsageError);
    CHECK_THROWS_AS(dispatch(options({"bar"})), UsageError);
    CHECK_THROWS_AS(dispatch(options({"cobar"}, "dual-numbers")), UsageError);
    CHECK_THROWS_AS(dispatch(options({"twist", "sideways"})), UsageError);
    CHECK_THROWS_AS(dispatch(options({"bar", "extra"}, "dual-numbers")), UsageError);
    CommandOptions o = options({"dims"}, "dual-numbers");
    o.convention = SignConvention::flipped();
    CHECK_THROWS_AS(dispatch(o), UsageError);
}

TEST_CASE("signs compare and mc reports")
{
    Report s = dispatch(options({"signs", "compare"}, "dual-numbers"));
    CHECK(s.passed());
    CHECK(!s.checks.empty());

    CommandOptions o = options({"mc"});
    o.homology = true;
    Report m = dispatch(o);
    CHECK(m.passed());
    bool found = false;
    for (const auto& t : m.tables)
        if (t.title == "homology") {
            found = true;
            for (const auto& row : t.rows)
                CHECK(row[1] == (row[0] == "0" ? "1" : "0"));
        }
    CHECK(found);

    CommandOptions e = options({"mc"}, "dual-numbers");
    e.field = "Fp:3";
    CHECK(dispatch(e).result == std::vector<std::string>{"count 1"});
}
