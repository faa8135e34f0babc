#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lenscalc/family.hpp"

using namespace lenscalc;

TEST_CASE("builtin family values") {
    ParamFamily f1 = ParamFamily::builtin("f1", 3);
    CHECK(f1.eval(0).k == 1);
    CHECK(f1.eval(0).n == 2);
    CHECK(f1.eval(1).k == 2);
    CHECK(f1.eval(1).n == 4);
    CHECK(f1.eval(2).k == 3);
    CHECK(f1.eval(2).n == 10);
    CHECK(!f1.max_index().has_value());

    ParamFamily f2 = ParamFamily::builtin("f2", 3);
    CHECK(f2.eval(2).k == 3);
    CHECK(f2.eval(2).n == 11);

    ParamFamily f3 = ParamFamily::builtin("f3", 3);
    CHECK(f3.eval(2).k == 4);
    CHECK(f3.eval(2).n == 28);  // 3^3 + 1
    CHECK(f3.eval(0).k == 1);
    CHECK(f3.eval(0).n == 2);

    ParamFamily cor = ParamFamily::builtin("cor", 3);
    CHECK(cor.eval(0).k == 0);
    CHECK(cor.eval(0).n == 4);
    CHECK(cor.eval(1).n == 10);
    CHECK(cor.eval(2).k == 2);
    CHECK(cor.eval(2).n == 25);  // 27 - 3 + 1
}

TEST_CASE("builtin family rejections and warnings") {
    CHECK_THROWS_AS(ParamFamily::builtin("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(ParamFamily::builtin("f1", 4), std::invalid_argument);
    CHECK_THROWS_AS(ParamFamily::builtin("cor", 2), std::invalid_argument);
    CHECK(ParamFamily::builtin("f1", 2).warnings().size() == 1);
    CHECK(ParamFamily::builtin("f1", 3).warnings().empty());
}

TEST_CASE("family file parsing") {
    std::istringstream in(
        "# candidate sequence\n"
        "p=5\n"
        "0 1 2   # first stage\n"
        "1 2 30\n"
        "\n"
        "2 4 700\n");
    ParamFamily f = ParamFamily::parse(in, "test-input");
    CHECK(f.p() == 5);
    CHECK(!f.is_builtin());
    CHECK(f.max_index() == 2);
    CHECK(f.eval(1).k == 2);
    CHECK(f.eval(1).n == 30);
    CHECK(f.eval(2).n == 700);
    CHECK_THROWS_AS(f.eval(3), std::out_of_range);
}

TEST_CASE("family file rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return ParamFamily::parse(in, "bad");
    };
    CHECK_THROWS(parse("0 1 2\n"));              // missing header
    CHECK_THROWS(parse("p=4\n0 1 2\n"));         // not prime
    CHECK_THROWS(parse("p=3\n1 1 2\n"));         // indices not from 0
    CHECK_THROWS(parse("p=3\n0 1 2\n2 2 3\n"));  // gap
    CHECK_THROWS(parse("p=3\n0 1\n"));           // missing column
    CHECK_THROWS(parse("p=3\n0 1 2 9\n"));       // extra column
    CHECK_THROWS(parse("p=3\n0 1 -2\n"));        // n < 1
    CHECK_THROWS(parse("p=3\n"));                // no stages
}

TEST_CASE("family json carries enough to re-evaluate") {
    ParamFamily f = ParamFamily::builtin("f2", 5);
    Json j = f.to_json();
    CHECK(j.at("builtin").get<bool>());
    CHECK(j.at("name").get<std::string>() == "f2");
    CHECK(j.at("p").get<std::string>() == "5");

    ParamFamily t = ParamFamily::from_table(3, {{BigInt(1), BigInt(4)}}, "tbl");
    Json tj = t.to_json();
    CHECK(!tj.at("builtin").get<bool>());
    CHECK(tj.at("table").size() == 1);
}
