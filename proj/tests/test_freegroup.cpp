#include <doctest.h>

#include "lpres/fixtures.hpp"
#include "support.hpp"

using namespace lpres;
using namespace testing;

TEST_CASE("reduce") {
  const Letter a{"a", 1}, A{"a", -1}, b{"b", 1}, B{"b", -1}, c{"c", 1};
  std::vector<Letter> raw{a, b, B, c};
  CHECK(reduce(raw) == Word{a, c});
  CHECK(reduce({}) == Word{});
  raw = {a, A, a};
  CHECK(reduce(raw) == Word{a});
  raw = {a, b, B, A, c};
  CHECK(reduce(raw) == Word{c});
}

TEST_CASE("invert and multiply") {
  const Letter a{"a", 1}, b{"b", 1}, B{"b", -1}, c{"c", 1};
  CHECK(invert(Word{a, b}) == Word{b.inverse(), a.inverse()});
  CHECK(invert(Word{}) == Word{});
  CHECK(invert(Word::of("a", 2)) == Word::of("a", -2));
  CHECK(multiply(Word{a, b}, Word{B, c}) == Word{a, c});
  CHECK(multiply(Word{a, b}, Word{}) == Word{a, b});
  CHECK(multiply(Word{a}, Word{a.inverse()}).empty());
  CHECK(power(Word{a, b}, -2) == Word{B, a.inverse(), B, a.inverse()});
  CHECK(power(Word{a, b}, 0).empty());
}

TEST_CASE("exp_sum") {
  CHECK(exp_sum(W("t^-1*a*t", {"a", "t"}), "t") == 0);
  CHECK(exp_sum(W("a^3*b*a^-1", {"a", "b"}), "a") == 2);
  CHECK(exp_sum(Word{}, "a") == 0);
}

TEST_CASE("cyclic_reduce") {
  CHECK(cyclic_reduce(W("a*b*a^-1", {"a", "b"})) == W("b", {"b"}));
  CHECK(cyclic_reduce(W("a*b", {"a", "b"})) == W("a*b", {"a", "b"}));
  CHECK(cyclic_reduce(W("a*b*c*b^-1*a^-1", {"a", "b", "c"})) == W("c", {"c"}));
}

TEST_CASE("support is sorted and unique") {
  const auto s = support(W("b*a*b^-1*a@1", {"a", "b", at("a", 1)}));
  CHECK(s == std::vector<Generator>{"a", at("a", 1), "b"});
}

TEST_CASE("endomorphisms") {
  const auto lys = parse_lpres(fixtures::lysenok_lpres);
  const auto& sigma = lys.endos.at(0).map;
  const std::vector<Generator> abcd{"a", "b", "c", "d"};
  CHECK(apply_endo(sigma, W("a*d", abcd)) == W("a*c*a*c", abcd));
  CHECK(apply_endo(FreeEndomorphism::identity(abcd), W("a*b*d^-1", abcd)) == W("a*b*d^-1", abcd));

  const auto r3 = parse_lpres(fixtures::remark3_lpres);
  const std::vector<Generator> abz{"a", "b", "z"};
  const auto& eta = r3.endos.at(0).map;
  CHECK(r3.endos.at(0).name == "eta");
  CHECK(apply_endo(eta, W("a*z", abz)) == W("a^2*z", abz));
  CHECK(compose(eta, eta).image("a") == W("a^4", abz));
  CHECK(compose(sigma, sigma).image("b") == W("c", abcd));

  SUBCASE("compose is f after g") {
    std::map<Generator, Word> f_img{{"a", W("b", {"b"})}, {"b", W("b^2", {"b"})}};
    std::map<Generator, Word> g_img{{"a", W("a*b", {"a", "b"})}, {"b", W("a", {"a"})}};
    FreeEndomorphism f({"a", "b"}, f_img), g({"a", "b"}, g_img);
    CHECK(compose(f, g).image("a") == W("b^3", {"b"}));
    CHECK(compose(f, g).image("b") == W("b", {"b"}));
  }

  SUBCASE("letters outside the alphabet are rejected") {
    CHECK_THROWS_AS(sigma.apply(W("x", {"x"})), AlphabetMismatch);
    std::map<Generator, Word> partial{{"a", W("a", {"a"})}};
    CHECK_THROWS_AS(FreeEndomorphism({"a", "b"}, partial), AlphabetMismatch);
    std::map<Generator, Word> escapes{{"a", W("x", {"x"})}};
    CHECK_THROWS_AS(FreeEndomorphism({"a"}, escapes), AlphabetMismatch);
  }
}

TEST_CASE("enumerate_monoid") {
  const std::vector<Generator> abcd{"a", "b", "c", "d"};
  const auto id = FreeEndomorphism::identity(abcd);
  CHECK(enumerate_monoid({}, abcd, 5) == std::vector<FreeEndomorphism>{id});

  const auto lys = parse_lpres(fixtures::lysenok_lpres);
  const auto sigma = lys.endos.at(0).map;
  std::vector<FreeEndomorphism> phi{sigma};
  CHECK(enumerate_monoid(phi, abcd, 2) == std::vector<FreeEndomorphism>{id, sigma, compose(sigma, sigma)});

  const auto r3 = parse_lpres(fixtures::remark3_lpres);
  const auto r3phi = r3.endomorphisms();
  const auto layers = enumerate_monoid(r3phi, r3.generators, 1);
  REQUIRE(layers.size() == 3);
  CHECK(layers[1] == r3phi[0]);
  CHECK(layers[2] == r3phi[1]);

  SUBCASE("examined counts are formal") {
    const auto ls = monoid_layers(r3phi, r3.generators, 3);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0].examined == 1);
    CHECK(ls[3].examined == 8);
  }
  SUBCASE("idempotent endomorphisms stop producing layers") {
    std::map<Generator, Word> img{{"a", Word{}}, {"b", W("b", {"b"})}};
    std::vector<FreeEndomorphism> kill{FreeEndomorphism({"a", "b"}, img)};
    const auto ls = monoid_layers(kill, {"a", "b"}, 4);
    CHECK(ls[1].elements.size() == 1);
    CHECK(ls[2].elements.empty());
  }
}
