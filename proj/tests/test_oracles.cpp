#include <doctest.h>

#include "lpres/dyadic.hpp"
#include "lpres/fixtures.hpp"
#include "lpres/oracles.hpp"
#include "lpres/pullback.hpp"
#include "support.hpp"

using namespace lpres;
using namespace testing;

namespace {
const std::vector<Generator> abcd{"a", "b", "c", "d"};

IntegerMatrix matrix(std::vector<std::vector<long>> rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<mpz_class> vec(std::vector<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("Grigorchuk normalization and sections") {
  CHECK(grig_normalize(W("b*c", abcd)) == W("d", abcd));
  CHECK(grig_normalize(W("a*a*b*d", abcd)) == W("c", abcd));
  CHECK(grig_normalize(W("a^-1*b^-1", abcd)) == W("a*b", abcd));

  auto s = grig_sections(W("b", abcd));
  CHECK_FALSE(s.root_swap);
  CHECK(s.left == W("a", abcd));
  CHECK(s.right == W("c", abcd));

  s = grig_sections(W("a", abcd));
  CHECK(s.root_swap);
  CHECK(s.left.empty());
  CHECK(s.right.empty());

  s = grig_sections(W("a*d*a", abcd));
  CHECK_FALSE(s.root_swap);
  const std::multiset<Word> got{s.left, s.right}, want{W("b", abcd), Word{}};
  CHECK(got == want);
}

TEST_CASE("Grigorchuk triviality") {
  CHECK(grig_is_trivial(W("(a*d)^4", abcd)));
  CHECK(grig_is_trivial(W("b*c*d", abcd)));
  CHECK(grig_is_trivial(W("(a*d*a*c*a*c)^4", abcd)));
  CHECK(grig_is_trivial(W("(a*b)^16", abcd)));
  CHECK_FALSE(grig_is_trivial(W("(a*b)^8", abcd)));
  CHECK_FALSE(grig_is_trivial(W("(a*d)^2", abcd)));
  CHECK_FALSE(grig_is_trivial(W("a*d*a*c", abcd)));
  for (const auto& g : abcd) CHECK_FALSE(grig_is_trivial(Word::of(g)));
  CHECK(grig_witness(W("a", abcd)) == 1u);
  CHECK(grig_witness(W("b", abcd)) == 2u);
  CHECK(grig_witness(W("d", abcd)) == 3u);
  CHECK_THROWS_AS(grig_is_trivial(W("x", {"x"})), AlphabetMismatch);
}

TEST_CASE("dyadic affine maps") {
  const auto bs = bs12_images();
  const std::vector<Generator> at{"a", "t"};
  CHECK(dyadic_is_trivial(W("t^-1*a*t*a^-2", at), bs));
  CHECK(dyadic_eval(Word{}, bs) == std::vector<AffineMap>{AffineMap::identity()});
  const auto m = dyadic_eval(W("t*a*t^-1", at), bs);
  REQUIRE(m.size() == 1);
  CHECK(m[0].k == 0);
  CHECK(m[0].q == Dyadic(1, -1));
  CHECK(m[0].q.str() == "1/2");
  CHECK_FALSE(dyadic_is_trivial(W("[a,t]", at), bs));

  const AffineMap f{3, Dyadic(5, -2)};
  CHECK(compose(f, f.inverse()).is_identity());
  CHECK(compose(f.inverse(), f).is_identity());
  CHECK((Dyadic(3, -3) + Dyadic(5, -3)) == Dyadic(1));
  CHECK(Dyadic(-12).str() == "-12");

  const auto sq = bs12_square_images();
  const auto r3 = parse_presentation(fixtures::remark3_pres);
  for (const auto& r : r3.relators) CHECK(dyadic_is_trivial(r, sq));
  CHECK_THROWS_AS(dyadic_eval(W("x", {"x"}), bs), AlphabetMismatch);
}

TEST_CASE("snf") {
  auto d = snf(matrix({{2, 0}, {0, 3}}));
  CHECK(d.d == matrix({{1, 0}, {0, 6}}));
  CHECK(d.u * matrix({{2, 0}, {0, 3}}) * d.v == d.d);

  d = snf(matrix({{0, 0}, {0, 0}}));
  CHECK(d.d == matrix({{0, 0}, {0, 0}}));
  CHECK(d.u == IntegerMatrix::identity(2));
  CHECK(d.v == IntegerMatrix::identity(2));
  CHECK(d.rank == 0);

  d = snf(IntegerMatrix::identity(3));
  CHECK(d.d == IntegerMatrix::identity(3));

  const auto m = matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  d = snf(m);
  CHECK(d.d == matrix({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  CHECK(determinant(m) == -144);
}

TEST_CASE("relator lattice") {
  const auto bs12 = parse_presentation(fixtures::bs12_pres);
  CHECK(in_relator_lattice(vec({-2, 0}), bs12));
  CHECK_FALSE(in_relator_lattice(vec({0, 1}), bs12));
  CHECK(in_relator_lattice(vec({0, 0}), bs12));

  RowLattice lat(matrix({{2, 0}, {0, 3}}));
  CHECK(lat.contains(vec({4, -3})));
  CHECK_FALSE(lat.contains(vec({1, 0})));
  const auto x = lat.coefficients(vec({4, -3}));
  REQUIRE(x);
  CHECK(*x == vec({2, -1}));
  CHECK_THROWS_AS(lat.contains(vec({1})), PreconditionError);
}

TEST_CASE("pullback") {
  const std::vector<Generator> at{"a", "t"};
  CHECK(pullback(Word::of(Generator("a", 1)), "t") == W("t^-1*a*t", at));
  CHECK(pullback(Word::of(Generator("a", 0)), "t") == W("a", at));
  CHECK(pullback(W("a@1*a@0^-2", {Generator("a", 0), Generator("a", 1)}), "t") == W("t^-1*a*t*a^-2", at));
  CHECK_THROWS_AS(pullback(W("a", at), "t"), PreconditionError);
}

TEST_CASE("verify_lpres") {
  const auto lys = parse_lpres(fixtures::lysenok_lpres);
  const auto report = verify_lpres(lys, 6, grigorchuk_oracle());
  CHECK(report.verified());
  CHECK(report.total == 19);
  CHECK(print_report(report) == "OK 19\n");

  auto bad = lys;
  bad.seeds.push_back(W("(a*d)^2", abcd));
  const auto fail = verify_lpres(bad, 0, grigorchuk_oracle());
  REQUIRE(fail.failures.size() == 1);
  CHECK(fail.failures[0].relator == W("(a*d)^2", abcd));
  CHECK(print_report(fail).rfind("FAIL 0 a*d*a*d ", 0) == 0);

  const auto r3 = parse_lpres(fixtures::remark3_lpres);
  const auto spec = parse_pullback(fixtures::remark3_map);
  CHECK(verify_lpres(r3, 8, dyadic_oracle(parse_affine_images(fixtures::remark3_map)), &spec).verified());
  const auto abel = verify_lpres(r3, 5, abelian_oracle(truncate(r3)));
  CHECK(abel.verified());
  CHECK(print_report(abel).rfind("# necessary condition only", 0) == 0);

  SUBCASE("a wrong relator is caught with a witness") {
    auto wrong = r3;
    wrong.seeds.push_back(W("a^z*a^-3", {"a", "z"}));
    const auto rep = verify_lpres(wrong, 0, dyadic_oracle(parse_affine_images(fixtures::remark3_map)), &spec);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].witness == "factor 1: x -> 2^0*x + -1");
  }
}
