#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "contring/canonical.hpp"
#include "contring/error.hpp"
#include "contring/geodesic.hpp"
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

// All-pairs isometry check written against the oracle rank.
bool isometric(const GeodesicPath& path) {
  const std::size_t n = path.points.front().n();
  for (std::size_t i = 0; i < path.points.size(); ++i)
    for (std::size_t j = i + 1; j < path.points.size(); ++j) {
      const RankValue d{oracle::rank_by_columns(path.points[i] - path.points[j]), n};
      if (!(d == abs_diff(path.times[i], path.times[j]))) return false;
    }
  return true;
}

void check_path(const GeodesicPath& path, const Mat& from, const Mat& to) {
  REQUIRE(!path.points.empty());
  CHECK(path.points.front() == from);
  CHECK(path.points.back() == to);
  CHECK(path.length() == dist(from, to));
  CHECK(verify_geodesic(path));
  CHECK(isometric(path));
}

}  // namespace

TEST_CASE("verify_geodesic definition checks") {
  const Field k(3);
  GeodesicPath path{{Mat::zero(k, 2), Mat::identity(k, 2)}, {RankValue{0, 2}, RankValue{2, 2}}};
  CHECK(verify_geodesic(path));
  path.times[1] = RankValue{1, 2};
  CHECK_FALSE(verify_geodesic(path));

  const GeodesicPath good = geodesic_between(Mat::zero(k, 3), Mat::identity(k, 3));
  REQUIRE(good.points.size() == 4);
  CHECK(verify_geodesic(good));
  GeodesicPath swapped = good;
  std::swap(swapped.points[1], swapped.points[2]);
  CHECK_FALSE(verify_geodesic(swapped));
}

TEST_CASE("geodesic_between examples") {
  const Field k(3);
  const Mat a{k, {{1, 2}, {0, 1}}};
  const auto same = geodesic_between(a, a);
  CHECK(same.points.size() == 1);
  CHECK(same.length() == RankValue{0, 1});

  const auto unit = geodesic_between(Mat::zero(k, 2), Mat::identity(k, 2));
  REQUIRE(unit.points.size() == 3);
  check_path(unit, Mat::zero(k, 2), Mat::identity(k, 2));
  CHECK(rank(unit.points[1]) == 1);
  CHECK(unit.times[1] == RankValue{1, 2});
}

TEST_CASE("geodesic_between on random pairs") {
  Rng rng(3);
  const Field k(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = random_mat(rng, k, 6);
    Mat b = random_mat(rng, k, 6);
    if (trial % 2) b = a + random_mat(rng, k, 6) * random_idempotent(rng, k, 6, rng.below(7));
    const auto path = geodesic_between(a, b);
    check_path(path, a, b);
    CHECK(path.points.size() == rank(b - a) + 1);
    for (std::size_t i = 0; i < path.points.size(); ++i) CHECK(path.times[i] == RankValue(i, 6));
  }
}

TEST_CASE("unit geodesic examples") {
  const Field k2(2), k3(3);
  CHECK(geodesic_unit_to_identity(Mat::identity(k2, 3)).points.size() == 1);

  const Mat t = Mat::identity(k2, 2) + Mat::elementary(k2, 2, 0, 1);
  const auto pt = geodesic_unit_to_identity(t);
  CHECK(pt.points.size() == 2);
  CHECK(pt.length() == RankValue{1, 2});
  check_path(pt, t, Mat::identity(k2, 2));
  for (const Mat& x : pt.points) CHECK(is_invertible(x));

  const Mat d = Mat{k3, {{2, 0}, {0, 1}}} * (Mat::identity(k3, 2) + Mat::elementary(k3, 2, 0, 1));
  const auto pd = geodesic_unit_to_identity(d);
  check_path(pd, d, Mat::identity(k3, 2));
  for (const Mat& x : pd.points) CHECK(is_invertible(x));

  CHECK(kind_of([&] { geodesic_unit_to_identity(Mat::unit_block(k3, 2, 1)); }) == ErrorKind::NotInvertible);
  const Mat irreducible = companion(Poly(k2, {1, 1, 1}));
  CHECK_FALSE(corner_splits(irreducible));
  CHECK(kind_of([&] { geodesic_unit_to_identity(irreducible); }) == ErrorKind::NotTriangularizable);
}

TEST_CASE("every qualifying unit of M_2 reaches I through units") {
  for (std::uint32_t p : {2u, 3u}) {
    const Field k(p);
    std::size_t qualifying = 0;
    for (const Mat& a : oracle::all_matrices(k, 2)) {
      if (!is_invertible(a) || !corner_splits(a)) continue;
      ++qualifying;
      const auto path = geodesic_unit_to_identity(a);
      check_path(path, a, Mat::identity(k, 2));
      for (const Mat& x : path.points) CHECK(is_invertible(x));
    }
    CHECK(qualifying > 0);
  }
}

TEST_CASE("random split units reach I through units") {
  Rng rng(5);
  const Field k(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = random_split_unit(rng, k, 8);
    REQUIRE(corner_splits(a));
    const auto path = geodesic_unit_to_identity(a);
    check_path(path, a, Mat::identity(k, 8));
    for (const Mat& x : path.points) CHECK(is_invertible(x));
  }
}

TEST_CASE("triangularizing bases") {
  Rng rng(7);
  const Field k(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat a = random_split_unit(rng, k, 5);
    const auto y = triangularizing_basis(a);
    REQUIRE(y.has_value());
    CHECK((inverse(*y) * a * *y).is_upper_triangular());
  }
  CHECK_FALSE(triangularizing_basis(companion(Poly(Field(2), {1, 1, 1}))).has_value());
}

TEST_CASE("star geodesic examples") {
  const Field k5(5), k3(3);
  Rng rng(9);
  const std::vector<Poly> idem_s{Poly(k3, {0, -1, 1})};
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = random_idempotent(rng, k3, 4, rng.below(5));
    const auto path = star_geodesic_algebraic(a, idem_s, 0);
    check_path(path, a, Mat::zero(k3, 4));
    for (const Mat& x : path.points) CHECK(x * x == x);
  }

  const std::vector<Poly> inv_s{Poly(k5, {-1, 0, 1})};
  const Mat d = Mat::diagonal(k5, std::vector<Elem>{1, 4});
  const auto pd = star_geodesic_algebraic(d, inv_s, 1);
  REQUIRE(pd.points.size() == 2);
  CHECK(pd.points[1] == Mat::identity(k5, 2));
  for (const Mat& x : pd.points) CHECK(x * x == Mat::identity(k5, 2));

  CHECK(star_geodesic_algebraic(Mat::identity(k5, 3), inv_s, 1).points.size() == 1);

  CHECK(kind_of([&] { star_geodesic_algebraic(Mat::scalar(k5, 2, 2), inv_s, 1); }) == ErrorKind::NotAlgebraicOverS);
  CHECK(kind_of([&] { star_geodesic_algebraic(d, inv_s, 2); }) == ErrorKind::CenterNotRoot);
}

TEST_CASE("star geodesics through involutions") {
  Rng rng(11);
  const Field k(5);
  const std::vector<Poly> s{Poly(k, {-1, 0, 1})};
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = random_involution(rng, k, 4);
    const auto path = star_geodesic_algebraic(a, s, 1);
    check_path(path, a, Mat::identity(k, 4));
    for (const Mat& x : path.points) CHECK(x * x == Mat::identity(k, 4));
  }
}

TEST_CASE("block concatenation") {
  const Field k(3);
  const auto unit = geodesic_between(Mat::zero(k, 2), Mat::identity(k, 2));
  const std::vector<GeodesicPath> one{unit};
  const auto single = block_concat_geodesic(one);
  CHECK(single.points == unit.points);
  CHECK(single.times == unit.times);

  const std::vector<GeodesicPath> two{unit, unit};
  const auto joined = block_concat_geodesic(two);
  CHECK(joined.points.size() == 5);
  CHECK(joined.length() == RankValue{1, 1});
  check_path(joined, Mat::zero(k, 4), Mat::identity(k, 4));

  const GeodesicPath trivial{{Mat::identity(k, 2)}, {RankValue{}}};
  const std::vector<GeodesicPath> trivials{trivial, trivial};
  CHECK(block_concat_geodesic(trivials).points.size() == 1);

  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GeodesicPath> parts;
    std::vector<Mat> starts, ends;
    for (int b = 0; b < 3; ++b) {
      const std::size_t n = 1 + rng.below(3);
      starts.push_back(random_mat(rng, k, n));
      ends.push_back(random_mat(rng, k, n));
      parts.push_back(geodesic_between(starts.back(), ends.back()));
    }
    const auto path = block_concat_geodesic(parts);
    check_path(path, block_diag(starts), block_diag(ends));
  }
}

TEST_CASE("approximate midpoint examples") {
  const Field k2(2), k3(3);
  Rng rng(15);
  const Mat g = random_unit(rng, k3, 4);
  const auto same = approximate_midpoint(g, g, 1);
  CHECK(same.m == g);
  CHECK(same.err == RankValue{0, 1});

  const Mat t = Mat::identity(k2, 2) + Mat::elementary(k2, 2, 0, 1);
  const auto r = approximate_midpoint(t, Mat::identity(k2, 2), 1);
  CHECK((r.m == t || r.m == Mat::identity(k2, 2)));
  CHECK(r.err == RankValue{1, 4});
  CHECK(r.method == MidpointMethod::Direct);
}

TEST_CASE("approximate midpoints of random units") {
  Rng rng(17);
  const Field k(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat g1 = random_unit(rng, k, 8);
    const Mat g0 = random_split_unit(rng, k, 8) * g1;
    const auto r = approximate_midpoint(g0, g1, trial);
    CHECK(r.method == MidpointMethod::Direct);
    CHECK(r.err <= RankValue{1, 16});
    CHECK(is_invertible(r.m));
    const RankValue d = dist(g0, g1);
    const RankValue half{d.num, 2 * d.den};
    CHECK(std::max(abs_diff(dist(g0, r.m), half), abs_diff(dist(r.m, g1), half)) == r.err);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Mat g0 = random_unit(rng, k, 8), g1 = random_unit(rng, k, 8);
    const auto r = approximate_midpoint(g0, g1, trial);
    CHECK(r.err <= r.bound);
    CHECK(is_invertible(r.m));
    CHECK(is_invertible(r.h));
    CHECK(corner_splits(r.h));
    CHECK(r.delta == dist(g0 * inverse(g1), r.h));
  }
}

TEST_CASE("midpoint fallbacks") {
  const Field k(2);
  const Mat irreducible = companion(Poly(k, {1, 1, 1}));
  const Mat one = Mat::identity(k, 2);
  CHECK(kind_of([&] { approximate_midpoint(irreducible, one, 0, 0, false); }) ==
        ErrorKind::NoTriangularizableApproximant);
  const auto r = approximate_midpoint(irreducible, one, 0, 0, true);
  CHECK(r.method == MidpointMethod::CanonicalForm);
  CHECK(r.err <= r.bound);
  CHECK(kind_of([&] { approximate_midpoint(Mat::zero(k, 2), one, 0); }) == ErrorKind::NotInvertible);

  const Mat s = split_approximant(irreducible);
  CHECK(corner_splits(s));
  CHECK(dist(s, irreducible) <= RankValue{1, 2});
}
