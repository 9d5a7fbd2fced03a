#include <doctest.h>
#include <spinekit/rational.hpp>

using spinekit::Rat;
using spinekit::make_rat;
using spinekit::parse_rational;
using spinekit::rat_to_string;

TEST_CASE("make_rat canonicalizes") {
  CHECK(rat_to_string(make_rat(-2, 4)) == "-1/2");
  CHECK(rat_to_string(make_rat(6, 3)) == "2");
  CHECK(rat_to_string(make_rat(0, 7)) == "0");
  CHECK(rat_to_string(make_rat(5, -10)) == "-1/2");
}

TEST_CASE("parse_rational accepts integers, fractions, decimals") {
  CHECK(rat_to_string(*parse_rational("42")) == "42");
  CHECK(rat_to_string(*parse_rational("-11")) == "-11");
  CHECK(rat_to_string(*parse_rational("+7")) == "7");
  CHECK(rat_to_string(*parse_rational("3/4")) == "3/4");
  CHECK(rat_to_string(*parse_rational("-6/4")) == "-3/2");
  CHECK(rat_to_string(*parse_rational("1.6")) == "8/5");
  CHECK(rat_to_string(*parse_rational("4.4")) == "22/5");
  CHECK(rat_to_string(*parse_rational("0.8")) == "4/5");
  CHECK(rat_to_string(*parse_rational("-5.2")) == "-26/5");
  CHECK(rat_to_string(*parse_rational(".5")) == "1/2");
  CHECK(rat_to_string(*parse_rational("2.")) == "2");
  CHECK(rat_to_string(*parse_rational("0.050")) == "1/20");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("-"));
  CHECK(!parse_rational("."));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1/00"));
  CHECK(!parse_rational("1.5/2"));
  CHECK(!parse_rational("1e3"));
  CHECK(!parse_rational("a"));
  CHECK(!parse_rational("1 / 2"));
  CHECK(!parse_rational("--3"));
  CHECK(!parse_rational("3/-2"));
}

TEST_CASE("parse round-trips through rat_to_string") {
  for (const char* text : {"0", "-17", "22/7", "-8/5", "123456789123456789/2"}) {
    auto r = parse_rational(text);
    REQUIRE(r);
    CHECK(rat_to_string(*r) == text);
  }
}

TEST_CASE("format_rational_vector") {
  std::vector<Rat> v = {make_rat(-1), make_rat(13)};
  CHECK(spinekit::format_rational_vector(v) == "(-1, 13)");
  CHECK(spinekit::format_rational_vector({}) == "()");
}

TEST_CASE("arithmetic stays exact at scale") {
  Rat a = make_rat(1, 3);
  Rat sum = 0;
  for (int i = 0; i < 3000; ++i) sum += a;
  CHECK(sum == make_rat(1000));
}
