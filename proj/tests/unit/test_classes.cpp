#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "contring/canonical.hpp"
#include "contring/classes.hpp"
#include "contring/error.hpp"
#include "contring/linalg.hpp"
#include "contring/random.hpp"

using namespace contring;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

// Group order by filtering all of M_n through the Leibniz determinant.
std::size_t count_by_det(std::size_t n, std::uint32_t p, bool special) {
  std::size_t count = 0;
  for (const Mat& a : oracle::all_matrices(Field(p), n)) {
    const auto d = oracle::det_leibniz(a);
    if (special ? d == 1 : d != 0) ++count;
  }
  return count;
}

std::size_t find_class(const ClassTable& t, auto&& pred) {
  for (const auto& c : t.classes())
    if (pred(c)) return c.id;
  FAIL("no such class");
  return 0;
}

bool is_union_of_classes(const ClassTable& t, const IndexSet& elems) {
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const auto& m = t.members(c);
    const bool first = elems.test(m.front());
    for (std::size_t x : m)
      if (elems.test(x) != first) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(ClassTable::enumerate(2, 2, true).order() == 6);
  CHECK(ClassTable::enumerate(3, 2, true).order() == 168);
  CHECK(ClassTable::enumerate(2, 3, false).order() == 48);
  CHECK(*group_order_formula(2, 2, true) == 6);
  CHECK(*group_order_formula(3, 2, true) == 168);
  CHECK(*group_order_formula(2, 3, false) == 48);
  CHECK(*group_order_formula(3, 3, true) == 5616);
  CHECK(count_by_det(2, 3, false) == 48);
  CHECK(count_by_det(2, 3, true) == 24);
  CHECK(count_by_det(3, 2, true) == 168);
  CHECK_FALSE(group_order_formula(12, 65521, false).has_value());
  CHECK(kind_of([] { ClassTable::enumerate(3, 3, false, 1000); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("class tables partition the group consistently") {
  for (auto [n, p, special] : std::vector<std::tuple<std::size_t, std::uint32_t, bool>>{
           {2, 2, false}, {2, 3, false}, {2, 3, true}, {3, 2, true}, {2, 5, true}}) {
    const auto t = ClassTable::enumerate(n, p, special);
    CHECK(t.order() == *group_order_formula(n, p, special));
    std::size_t total = 0;
    std::set<std::size_t> seen;
    for (const auto& c : t.classes()) {
      total += c.size;
      CHECK(c.size == t.members(c.id).size());
      const auto factors = rcf(t.element(c.representative)).factors;
      CHECK(factors == c.factors);
      for (std::size_t x : t.members(c.id)) {
        CHECK(seen.insert(x).second);
        CHECK(t.class_of(x) == c.id);
        CHECK(rcf(t.element(x)).factors == factors);
      }
      CHECK(t.class_of(t.index_of(inverse(t.element(c.representative)))) == c.inverse);
      CHECK(c.ind == index(t.element(c.representative)));
    }
    CHECK(total == t.order());
    if (!special) CHECK(t.partition_matches_invariants());
  }
  CHECK(ClassTable::enumerate(3, 2, true).class_count() == 6);
  CHECK(ClassTable::enumerate(2, 3, false).class_count() == 8);
  // SL_2(3) splits some invariant-factor classes in two.
  const auto sl23 = ClassTable::enumerate(2, 3, true);
  CHECK(sl23.class_count() == 7);
  CHECK_FALSE(sl23.partition_matches_invariants());
}

TEST_CASE("classes are closed under conjugation") {
  Rng rng(1);
  const auto t = ClassTable::enumerate(3, 2, true);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t x = rng.below(t.order()), h = rng.below(t.order());
    const Mat conj = t.element(h) * t.element(x) * inverse(t.element(h));
    CHECK(t.class_of(t.index_of(conj)) == t.class_of(x));
    CHECK(t.element(t.multiply(x, h)) == t.element(x) * t.element(h));
  }
  CHECK(kind_of([&] { t.index_of(Mat::zero(Field(2), 3)); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("class products") {
  const auto t = ClassTable::enumerate(3, 2, true);
  const std::size_t id = t.class_of(t.identity());
  const std::vector<std::size_t> just_id{id};
  const auto only = class_product_closure(t, just_id);
  CHECK(only.count() == 1);
  CHECK(only.test(t.identity()));

  for (const auto& c : t.classes()) {
    const std::vector<std::size_t> pair{c.id, c.inverse};
    CHECK(class_product_closure(t, pair).test(t.identity()));
  }

  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> tuple(1 + rng.below(3));
    for (auto& c : tuple) c = rng.below(t.class_count());
    const auto fast = class_product_closure(t, tuple);
    CHECK(fast == class_product_bruteforce(t, tuple));
    CHECK(is_union_of_classes(t, fast));
    CHECK(t.expand(class_product_classes(t, tuple)) == fast);
  }
}

TEST_CASE("seven transvection classes cover SL_3(2)") {
  const auto t = ClassTable::enumerate(3, 2, true);
  const Mat tv = Mat::identity(Field(2), 3) + Mat::elementary(Field(2), 3, 0, 1);
  const std::size_t c = t.class_of(t.index_of(tv));
  CHECK(t.info(c).ind == 1);
  CHECK(t.info(c).size == 21);
  const std::vector<std::size_t> seven(7, c);
  CHECK(class_product_closure(t, seven).all());
}

TEST_CASE("Rodgers-Saxl threshold") {
  const auto t = ClassTable::enumerate(3, 2, true);
  const Mat tv = Mat::identity(Field(2), 3) + Mat::elementary(Field(2), 3, 0, 1);
  const std::size_t c = t.class_of(t.index_of(tv));

  const std::vector<std::size_t> thirteen(13, c);
  const auto r = rodgers_saxl_check(t, thirteen);
  CHECK(r.sum_ind == 13);
  CHECK(r.hypothesis);
  CHECK(r.covered);
  CHECK(r.consistent);
  CHECK(r.covered_count == 168);

  const std::vector<std::size_t> twelve(12, c);
  const auto below = rodgers_saxl_check(t, twelve);
  CHECK_FALSE(below.hypothesis);
  CHECK(below.consistent);

  const auto sl22 = ClassTable::enumerate(2, 2, true);
  const std::vector<std::size_t> any{0};
  CHECK(kind_of([&] { rodgers_saxl_check(sl22, any); }) == ErrorKind::HypothesisNotMet);
  CHECK(kind_of([&] { corollary_index_check(sl22, any); }) == ErrorKind::HypothesisNotMet);
}

TEST_CASE("Rodgers-Saxl on random SL_3(3) tuples") {
  const auto t = ClassTable::enumerate(3, 3, true);
  CHECK(t.order() == 5616);
  Rng rng(5);
  std::vector<std::size_t> nontrivial;
  for (const auto& c : t.classes())
    if (c.ind > 0) nontrivial.push_back(c.id);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::size_t> tuple;
    std::size_t sum = 0;
    while (sum <= 12) {
      tuple.push_back(nontrivial[rng.below(nontrivial.size())]);
      sum += t.info(tuple.back()).ind;
    }
    const auto r = rodgers_saxl_check(t, tuple);
    CHECK(r.hypothesis);
    CHECK(r.covered);
  }
}

TEST_CASE("distance form of the threshold") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto t = ClassTable::enumerate(3, p, true);
    for (const auto& c : t.classes()) {
      CHECK(c.center_dist == dist_to_center(t.element(c.representative)).dist);
      // d(a, K) <= (2/n) ind(a)
      CHECK(c.center_dist <= RankValue(2 * c.ind, 3));
    }
    std::size_t best = 0;
    for (const auto& c : t.classes())
      if (c.center_dist > t.info(best).center_dist) best = c.id;
    std::vector<std::size_t> tuple;
    RankValue sum{};
    while (sum < RankValue{12, 1}) {
      tuple.push_back(best);
      sum = sum + t.info(best).center_dist;
    }
    const auto r = corollary_index_check(t, tuple);
    CHECK(r.hypothesis);
    CHECK(r.covered);
    CHECK(r.sum_center_dist <= RankValue(2 * r.sum_ind, 3));

    const std::vector<std::size_t> short_tuple{best};
    const auto s = corollary_index_check(t, short_tuple);
    CHECK_FALSE(s.hypothesis);
    CHECK(s.consistent);
  }
}

TEST_CASE("centers from singleton classes") {
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 3}, {2, 5}, {3, 2}}) {
    const auto t = ClassTable::enumerate(n, p, false);
    std::size_t singletons = 0;
    for (const auto& c : t.classes())
      if (c.size == 1) {
        ++singletons;
        CHECK(t.element(c.representative).is_scalar());
      }
    CHECK(singletons == p - 1);
  }
}

TEST_CASE("conjugacy width") {
  const auto t = ClassTable::enumerate(3, 2, true);
  CHECK_FALSE(conjugacy_width(t, t.class_of(t.identity())).has_value());

  const Mat tv = Mat::identity(Field(2), 3) + Mat::elementary(Field(2), 3, 0, 1);
  const auto w = conjugacy_width(t, t.class_of(t.index_of(tv)));
  REQUIRE(w.has_value());
  CHECK(*w >= 2);
  CHECK(*w <= 7);

  const auto gl = ClassTable::enumerate(2, 3, false);
  const std::size_t central = gl.class_of(gl.index_of(Mat::scalar(Field(3), 2, 2)));
  CHECK_FALSE(conjugacy_width(gl, central).has_value());
}

TEST_CASE("IndexSet basics") {
  IndexSet a(130), b(130);
  a.set(0);
  a.set(129);
  b.set(64);
  CHECK(a.count() == 2);
  a |= b;
  CHECK(a.count() == 3);
  CHECK(a.indices() == std::vector<std::size_t>{0, 64, 129});
  CHECK_FALSE(a.all());
  IndexSet full(3);
  for (std::size_t i = 0; i < 3; ++i) full.set(i);
  CHECK(full.all());
}
