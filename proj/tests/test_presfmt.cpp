#include <doctest.h>

#include "lpres/fixtures.hpp"
#include "support.hpp"

using namespace lpres;
using namespace testing;

namespace {

ParseError capture(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError raised");
  return ParseError({}, "", "");
}

}  // namespace

TEST_CASE("parse_word") {
  const std::set<Generator> at{"a", "b", "t"};
  const Letter a{"a", 1}, t{"t", 1}, b{"b", 1};
  CHECK(parse_word("a^t * a^-2", at) == Word{t.inverse(), a, t, a.inverse(), a.inverse()});
  CHECK(parse_word("1", at).empty());
  CHECK(parse_word("[a,b]", at) == Word{a.inverse(), b.inverse(), a, b});
  CHECK(parse_word("a b", at) == Word{a, b});
  CHECK(parse_word("(a*b)^-1", at) == Word{b.inverse(), a.inverse()});
  CHECK(parse_word("a^t^b", at) == parse_word("(a^t)^b", at));
  CHECK(parse_word("a@-2^3", {Generator("a", -2)}) == Word::of(Generator("a", -2), 3));

  SUBCASE("errors carry spans") {
    auto e = capture([&] { parse_word("a*x", at); });
    CHECK(e.span() == SourceSpan{1, 3});
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    e = capture([&] { parse_word("a^", at); });
    CHECK(e.span() == SourceSpan{1, 3});
    e = capture([&] { parse_word("(a*b", at); });
    CHECK(e.expected() == "')'");
    e = capture([&] { parse_word("[a b]", at); });
    CHECK(e.span().column == 5);
    e = capture([&] { parse_word("2", at); });
    CHECK(e.span().column == 1);
  }
}

TEST_CASE("parse_presentation") {
  const auto p = parse_presentation(fixtures::remark3_pres);
  CHECK(p.generators.size() == 4);
  CHECK(p.relators.size() == 6);
  REQUIRE(p.degree);
  CHECK(p.degree->at("u") == 1);
  CHECK(p.degree->at("a") == 0);

  const auto z2 = parse_presentation("[group]\ngens = a, t\nrels = [a,t]\n");
  CHECK(z2.generators == std::vector<Generator>{"a", "t"});
  CHECK(z2.relators == std::vector<Word>{W("[a,t]", {"a", "t"})});
  CHECK_FALSE(z2.degree);

  SUBCASE("missing degree entries default to zero") {
    const auto q = parse_presentation("[group]\ngens = a, t\ndeg = t:1\nrels = [a,t]\n");
    CHECK(q.degree->at("a") == 0);
  }
  SUBCASE("errors") {
    auto e = capture([] { parse_presentation("[group]\ngens = a, t\nrels = [a,x]\n"); });
    CHECK(e.span() == SourceSpan{3, 11});
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    e = capture([] { parse_presentation("[group]\ngens = a, a\n"); });
    CHECK(e.span() == SourceSpan{2, 11});
    e = capture([] { parse_presentation("[group]\ngens = a\ndeg = q:1\n"); });
    CHECK(e.span().line == 3);
    e = capture([] { parse_presentation(""); });
    CHECK(e.expected() == "section header");
    e = capture([] { parse_presentation("[grup]\n"); });
    CHECK(e.span() == SourceSpan{1, 1});
    e = capture([] { parse_presentation("[group]\ngens a\n"); });
    CHECK(e.span().line == 2);
  }
}

TEST_CASE("parse_lpres") {
  const auto lys = parse_lpres(fixtures::lysenok_lpres);
  const std::vector<Generator> abcd{"a", "b", "c", "d"};
  CHECK(lys.generators == abcd);
  CHECK(lys.fixed == std::vector<Word>{W("a^2", abcd), W("b^2", abcd), W("c^2", abcd), W("d^2", abcd),
                                       W("b*c*d", abcd)});
  CHECK(lys.seeds == std::vector<Word>{W("(a*d)^4", abcd), W("(a*d*a*c*a*c)^4", abcd)});
  REQUIRE(lys.endos.size() == 1);
  CHECK(lys.endos[0].map.image("a") == W("a*c*a", abcd));

  const auto r3 = parse_lpres(fixtures::remark3_lpres);
  const std::vector<Generator> abz{"a", "b", "z"};
  CHECK(r3.generators == abz);
  CHECK(r3.fixed.empty());
  CHECK(r3.seeds == std::vector<Word>{W("[a,b]", abz), W("a^z*a^-2", abz), W("(b^2)^z*b^-1", abz)});
  CHECK(r3.endos.size() == 2);

  SUBCASE("totality") {
    auto e = capture([] {
      parse_lpres("[lpres]\ngens = a, b, c, d\nendo s = a -> a, b -> b, c -> c\n");
    });
    CHECK(e.span().line == 3);
    CHECK(std::string(e.what()).find("'d'") != std::string::npos);
  }
}

TEST_CASE("parse_certs") {
  const auto c = parse_certs(fixtures::z2_certs);
  CHECK(c.window.bound == 1);
  CHECK(c.up.at("a") == Word::of(Generator("a", 1)));
  CHECK(c.down.at("a") == Word::of(Generator("a", -1)));

  auto e = capture([] { parse_certs("[certs]\ngens = a\nN = 1\nup a = a@2\ndown a = a@-1\n"); });
  CHECK(e.span() == SourceSpan{4, 8});
  e = capture([] { parse_certs("[certs]\ngens = a, b\nN = 1\nup a = a@1\ndown a = a@0\nup b = b@0\n"); });
  CHECK(e.expected() == "'down b = <word>' row");
  CHECK(e.span().line == 1);
}

TEST_CASE("printing") {
  const std::vector<Generator> at{"a", "t"};
  CHECK(print_word(W("t^-1*a*t*a^-2", at)) == "t^-1*a*t*a^-2");
  CHECK(print_word(W("a*a*t", at)) == "a^2*t");
  CHECK(print_word(Word{}) == "1");
  CHECK(print_word(Word::of(Generator("a", -2), -1)) == "a@-2^-1");
}

TEST_CASE("shipped fixtures round-trip") {
  using namespace fixtures;
  const auto p = parse_presentation(remark3_pres);
  CHECK(parse_presentation(print_presentation(p)) == p);
  CHECK(print_presentation(parse_presentation(print_presentation(p))) == print_presentation(p));
  for (auto text : {lysenok_lpres, remark3_lpres}) {
    const auto lp = parse_lpres(text);
    CHECK(parse_lpres(print_lpres(lp)) == lp);
    CHECK(print_lpres(parse_lpres(print_lpres(lp))) == print_lpres(lp));
  }
  for (auto text : {remark3_certs, z2_certs}) {
    const auto c = parse_certs(text);
    CHECK(parse_certs(print_certs(c)) == c);
  }
  const auto m = parse_pullback(remark3_map);
  CHECK(parse_pullback(print_pullback(m)) == m);
  const auto d = parse_affine_images(remark3_map);
  CHECK(parse_affine_images(print_affine_images(d)) == d);
  CHECK(parse_presentation(print_presentation(parse_presentation(z2_pres))) == parse_presentation(z2_pres));
  CHECK(parse_presentation(print_presentation(parse_presentation(bs12_pres))) == parse_presentation(bs12_pres));
}

TEST_CASE("pullback and dyadic sections") {
  const auto m = parse_pullback(fixtures::remark3_map);
  REQUIRE(m.stable);
  CHECK(*m.stable == Word::of("t"));
  CHECK(m.indexed.at("u_t") == W("u*t^-1", {"u", "t"}));
  CHECK(m.plain.at("z") == W("t*u^-1", {"u", "t"}));

  const auto d = parse_affine_images(fixtures::remark3_map);
  CHECK(d.at("t")[0].k == -1);
  CHECK(d.at("a")[0].q == Dyadic(1));

  auto e = capture([] { parse_affine_images("[dyadic]\na = (0, 1/3)\n"); });
  CHECK(e.expected() == "power-of-two denominator");
  CHECK(e.span().line == 2);
  CHECK(parse_affine_images("[dyadic]\na = (1, -3/8)\n").at("a")[0].q == Dyadic(-3, -3));
}

TEST_CASE("sections") {
  CHECK(section_names(fixtures::remark3_map) == std::vector<std::string>{"map", "dyadic"});
  // A document may carry sections the caller does not ask for.
  CHECK(parse_presentation(std::string(fixtures::z2_pres) + std::string(fixtures::z2_certs)).relators.size() == 1);
}
