#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "contring/error.hpp"
#include "contring/idempotent.hpp"
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

Idem diag_idem(const Field& k, std::vector<Elem> d) { return Idem::from(Mat::diagonal(k, d)); }

bool upper_by_entries(const Mat& a) {
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("Idem rejects non-idempotents") {
  const Field k(3);
  CHECK(kind_of([&] { Idem::from(Mat::scalar(k, 2, 2)); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([&] { Idem::from(Mat(k, 2, 3)); }) == ErrorKind::PreconditionViolation);
  const Idem e = diag_idem(k, {1, 0, 1});
  CHECK(e.rank() == 2);
  CHECK(e.rk() == RankValue{2, 3});
  CHECK(e.complement().mat() == Mat::diagonal(k, std::vector<Elem>{0, 1, 0}));
}

TEST_CASE("order and orthogonality examples") {
  const Field k(2);
  const Idem e = diag_idem(k, {1, 0}), f = diag_idem(k, {0, 1}), one = Idem::from(Mat::identity(k, 2));
  CHECK(idem_leq(e, one));
  CHECK_FALSE(idem_leq(one, e));
  CHECK(idem_orthogonal(e, f));
  CHECK_FALSE(idem_orthogonal(e, one));
}

TEST_CASE("orthogonality agrees with e <= I - f") {
  Rng rng(1);
  const Field k(3);
  int orthogonal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Mat g = random_unit(rng, k, 4);
    const Mat gi = inverse(g);
    Idem e = Idem::from(random_idempotent(rng, k, 4, rng.below(5)));
    Idem f = Idem::from(random_idempotent(rng, k, 4, rng.below(5)));
    if (trial % 2) {
      // Force an orthogonal pair from one conjugated diagonal split.
      const std::size_t r = rng.below(5);
      std::vector<Elem> d1(4, 0), d2(4, 0);
      for (std::size_t i = 0; i < 4; ++i) (i < r ? d1 : d2)[i] = rng.below(2);
      e = Idem::from(g * Mat::diagonal(k, d1) * gi);
      f = Idem::from(g * Mat::diagonal(k, d2) * gi);
    }
    const bool direct = (e.mat() * f.mat()).is_zero() && (f.mat() * e.mat()).is_zero();
    CHECK(idem_orthogonal(e, f) == direct);
    CHECK(direct == idem_leq(e, f.complement()));
    orthogonal += direct;
  }
  CHECK(orthogonal >= 50);
}

TEST_CASE("column_space_idempotent examples") {
  const Field k(2);
  Rng rng(3);
  CHECK(column_space_idempotent(random_unit(rng, k, 3)).mat() == Mat::identity(k, 3));
  CHECK(column_space_idempotent(Mat::zero(k, 3)).mat().is_zero());
  const Mat ones{k, {{1, 1}, {1, 1}}};
  const Idem e = column_space_idempotent(ones);
  CHECK(e.mat() * ones == ones);
  CHECK(e.rank() == 1);
}

TEST_CASE("column_space_idempotent on random matrices") {
  Rng rng(5);
  const Field k(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const Mat a = random_mat(rng, k, n) * random_idempotent(rng, k, n, rng.below(n + 1));
    const Idem e = column_space_idempotent(a);
    CHECK(e.mat() * a == a);
    CHECK(e.rank() == oracle::rank_by_columns(a));
  }
}

TEST_CASE("standard nests") {
  const Field k(3);
  const std::vector<std::size_t> r2{0, 1, 2};
  const auto n2 = standard_nest(k, 2, r2);
  REQUIRE(n2.size() == 3);
  CHECK(n2[0].mat().is_zero());
  CHECK(n2[1].mat() == Mat::unit_block(k, 2, 1));
  CHECK(n2[2].mat() == Mat::identity(k, 2));

  const std::vector<std::size_t> r4{0, 2, 4};
  const auto n4 = standard_nest(k, 4, r4);
  CHECK(n4[0].rk() == RankValue{0, 1});
  CHECK(n4[1].rk() == RankValue{1, 2});
  CHECK(n4[2].rk() == RankValue{1, 1});
  CHECK(NestChain::is_chain(n4.members()));

  const std::vector<std::size_t> bad1{0, 2, 2}, bad2{0, 5};
  CHECK(kind_of([&] { standard_nest(k, 4, bad1); }) == ErrorKind::BadRanks);
  CHECK(kind_of([&] { standard_nest(k, 4, bad2); }) == ErrorKind::BadRanks);
}

TEST_CASE("maximal nests in a corner") {
  const Field k(3);
  const auto full = max_nest_in_corner(Idem::from(Mat::identity(k, 2)));
  REQUIRE(full.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(full[i].rank() == i);

  const Idem e = diag_idem(k, {1, 0, 1});
  const auto chain = max_nest_in_corner(e);
  REQUIRE(chain.size() == 3);
  CHECK(chain[2] == e);
  CHECK(NestChain::is_chain(chain.members()));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK(idem_leq(chain[i], e));
    // Rank inside eRe is the ambient rank rescaled by rk(e).
    CHECK(RankValue(chain[i].rank(), e.rank()) == RankValue(chain[i].rank() * 3, 3 * e.rank()));
  }

  CHECK(kind_of([&] { max_nest_in_corner(Idem::from(Mat::zero(k, 2))); }) == ErrorKind::ZeroIdempotent);
}

TEST_CASE("random corner nests are chains") {
  Rng rng(7);
  const Field k(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    const Idem e = Idem::from(random_idempotent(rng, k, n, 1 + rng.below(n)));
    const auto chain = max_nest_in_corner(e);
    CHECK(chain.size() == e.rank() + 1);
    CHECK(chain[chain.size() - 1] == e);
    CHECK(NestChain::is_chain(chain.members()));
    const auto frame = corner_frame(e);
    CHECK(frame.basis * frame.coords == Mat::identity(k, n));
    const Mat y = random_mat(rng, k, e.rank());
    const Mat lifted = frame.lift(y);
    CHECK(e.mat() * lifted * e.mat() == lifted);
    CHECK(frame.restrict(lifted) == y);
  }
}

TEST_CASE("R_E membership") {
  const Field k(3);
  const std::vector<std::size_t> ranks{0, 1, 2, 3};
  const auto nest = standard_nest(k, 3, ranks);
  CHECK(in_R_E(Mat{k, {{1, 2, 0}, {0, 2, 1}, {0, 0, 1}}}, nest));
  const std::vector<std::size_t> r2{0, 1, 2};
  CHECK_FALSE(in_R_E(Mat::elementary(k, 2, 1, 0), standard_nest(k, 2, r2)));
  Rng rng(9);
  CHECK(in_R_E(random_mat(rng, k, 3), NestChain{}));
  for (int trial = 0; trial < 300; ++trial) {
    Mat a = random_mat(rng, k, 3);
    if (trial % 2)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (rng.below(3)) a(i, j) = 0;
    CHECK(in_R_E(a, nest) == upper_by_entries(a));
  }
}

TEST_CASE("pi_e examples and multiplicativity") {
  const Field k(5);
  Rng rng(11);
  const Mat a = random_mat(rng, k, 4);
  const Idem e = diag_idem(k, {1, 1, 0, 0});
  CHECK(pi_e(Mat::identity(k, 4), e) == Mat::identity(k, 4));
  CHECK(pi_e(a, Idem::from(Mat::identity(k, 4))) == a);

  const std::vector<std::size_t> ranks{0, 1, 2, 3, 4};
  const auto nest = standard_nest(k, 4, ranks);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat x = random_upper_unit(rng, k, 4), y = random_upper_unit(rng, k, 4);
    const Idem& ek = nest[1 + rng.below(4)];
    CHECK(pi_e(x * y, ek) == pi_e(x, ek) * pi_e(y, ek));
    CHECK(gamma_membership(pi_e(x, ek), ek));

    // e = f - f' for nest members f' <= f: a -> eae is multiplicative on R_E.
    const std::size_t hi = 1 + rng.below(4), lo = rng.below(hi);
    const Mat diff = nest[hi].mat() - nest[lo].mat();
    CHECK(diff * (x * y) * diff == (diff * x * diff) * (diff * y * diff));
  }
}

TEST_CASE("gamma groups") {
  const Field k2(2), k3(3);
  const Idem e2 = diag_idem(k2, {1, 0});
  const auto g2 = gamma_enumerate(e2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == Mat::identity(k2, 2));

  const auto g3 = gamma_enumerate(diag_idem(k3, {1, 0}));
  CHECK(g3.size() == 2);
  CHECK(is_subgroup(g3));

  const auto gl = gamma_enumerate(Idem::from(Mat::identity(k2, 2)));
  CHECK(gl.size() == 6);
  CHECK(is_subgroup(gl));

  CHECK(kind_of([&] { gamma_enumerate(Idem::from(Mat::identity(k3, 3)), 1000); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("gamma of a conjugated idempotent is a group isometric to GL(eRe)") {
  Rng rng(13);
  const Field k(3);
  const Idem e = Idem::from(random_idempotent(rng, k, 3, 2));
  const auto group = gamma_enumerate(e);
  CHECK(group.size() == 48);
  CHECK(is_subgroup(group));
  for (const Mat& g : group) CHECK(gamma_membership(g, e));
  CHECK_FALSE(gamma_membership(Mat::scalar(k, 3, 2), e));

  const auto frame = corner_frame(e);
  const Mat comp = Mat::identity(k, 3) - e.mat();
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = random_unit(rng, k, 2), b = random_unit(rng, k, 2);
    const Mat pa = frame.lift(a) + comp, pb = frame.lift(b) + comp;
    CHECK(gamma_membership(pa, e));
    // Distances in the corner ring are rescaled by rk(e).
    CHECK(dist(pa, pb) == RankValue(oracle::rank_by_columns(a - b), 3));
    CHECK(RankValue(rank(a - b), 2) == RankValue(rank(pa - pb) * 3, 3 * 2));
  }
}

TEST_CASE("parabolic subgroup examples") {
  const Field k3(3);
  const Idem f = diag_idem(k3, {0, 1}), e = diag_idem(k3, {1, 0});
  const auto elems = parabolic_enumerate(f, e);
  CHECK(elems.size() == 6);
  std::vector<Mat> images;
  for (const auto& [a, x] : elems) {
    images.push_back(a + x);
    CHECK(parabolic_membership(a + x, f, e));
    CHECK(dist(a + x, Mat::identity(k3, 2)) <= RankValue{1, 2});
  }
  CHECK(is_subgroup(images));
  CHECK(parabolic_subgroup_check(f, e, elems).all());

  const std::vector<std::pair<Mat, Mat>> trivial{{Mat::identity(k3, 2), Mat::zero(k3, 2)}};
  CHECK(parabolic_subgroup_check(f, e, trivial).all());

  CHECK(kind_of([&] { parabolic_enumerate(f, f); }) == ErrorKind::NotOrthogonal);
}

TEST_CASE("parabolic homomorphism on random samples") {
  Rng rng(17);
  const Field k(5);
  const Mat g = random_unit(rng, k, 4);
  const Mat gi = inverse(g);
  const Idem f = Idem::from(g * Mat::diagonal(k, std::vector<Elem>{0, 0, 1, 1}) * gi);
  const Idem e = Idem::from(g * Mat::diagonal(k, std::vector<Elem>{1, 0, 0, 0}) * gi);
  std::vector<std::pair<Mat, Mat>> elems;
  for (int i = 0; i < 100; ++i) elems.push_back(parabolic_sample(f, e, rng));
  const auto report = parabolic_subgroup_check(f, e, elems);
  CHECK(report.all());
  CHECK(report.elements == 100);
  for (const auto& [a, x] : elems) CHECK(parabolic_membership(a + x, f, e));
}

TEST_CASE("matrix units") {
  const Field k(3);
  const std::vector<Idem> parts{diag_idem(k, {1, 0}), diag_idem(k, {0, 1})};
  const auto s = matrix_units_from_idempotents(parts);
  CHECK(s.relations_hold());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(s(i, j) == Mat::elementary(k, 2, i, j));

  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat g = random_unit(rng, k, 4);
    const Mat gi = inverse(g);
    const std::vector<Idem> conj{Idem::from(g * Mat::unit_block(k, 4, 2) * gi),
                                 Idem::from(g * (Mat::identity(k, 4) - Mat::unit_block(k, 4, 2)) * gi)};
    const auto u = matrix_units_from_idempotents(conj);
    CHECK(u.relations_hold());
    CHECK(u(0, 0) == conj[0].mat());
    CHECK(u(1, 1) == conj[1].mat());
  }

  const std::vector<Idem> uneven{diag_idem(k, {1, 0, 0}), diag_idem(k, {0, 1, 1})};
  CHECK(kind_of([&] { matrix_units_from_idempotents(uneven); }) == ErrorKind::UnequalRanks);
  const std::vector<Idem> short_sum{diag_idem(k, {1, 0, 0}), diag_idem(k, {0, 1, 0})};
  CHECK(kind_of([&] { matrix_units_from_idempotents(short_sum); }) == ErrorKind::NotPartition);
}

TEST_CASE("conjugation intertwiner") {
  Rng rng(23);
  const Field k3(3);
  const std::vector<Idem> parts{Idem::from(Mat::unit_block(k3, 4, 2)),
                                Idem::from(Mat::identity(k3, 4) - Mat::unit_block(k3, 4, 2))};
  const auto s = matrix_units_from_idempotents(parts);

  const auto check_relation = [](const MatrixUnits& a, const MatrixUnits& b, const Mat& g) {
    REQUIRE(is_invertible(g));
    const Mat gi = inverse(g);
    for (std::size_t i = 0; i < a.m; ++i)
      for (std::size_t j = 0; j < a.m; ++j) CHECK(b(i, j) == g * a(i, j) * gi);
  };
  check_relation(s, s, conjugation_intertwiner(s, s));

  for (int trial = 0; trial < 20; ++trial) {
    const Mat h = random_unit(rng, k3, 4);
    const Mat hi = inverse(h);
    MatrixUnits t = s;
    for (auto& u : t.units) u = h * u * hi;
    check_relation(s, t, conjugation_intertwiner(s, t));
  }

  const Field k2(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto family = [&] {
      const Mat g = random_unit(rng, k2, 4);
      const Mat gi = inverse(g);
      const std::vector<Idem> p{Idem::from(g * Mat::unit_block(k2, 4, 2) * gi),
                                Idem::from(g * (Mat::identity(k2, 4) - Mat::unit_block(k2, 4, 2)) * gi)};
      return matrix_units_from_idempotents(p);
    };
    const auto a = family(), b = family();
    check_relation(a, b, conjugation_intertwiner(a, b));
  }

  const std::vector<Idem> three{Idem::from(Mat::diagonal(k3, std::vector<Elem>{1, 0, 0})),
                                Idem::from(Mat::diagonal(k3, std::vector<Elem>{0, 1, 0})),
                                Idem::from(Mat::diagonal(k3, std::vector<Elem>{0, 0, 1}))};
  const auto s3 = matrix_units_from_idempotents(three);
  CHECK(kind_of([&] { conjugation_intertwiner(s, s3); }) == ErrorKind::IncompatibleShapes);
}

TEST_CASE("centers by brute force") {
  const auto gl23 = center_bruteforce(Field(3), 2);
  CHECK(gl23.group_order == 48);
  REQUIRE(gl23.center.size() == 2);
  CHECK(gl23.center[0] == Mat::identity(Field(3), 2));
  CHECK(gl23.center[1] == Mat::scalar(Field(3), 2, 2));
  CHECK(gl23.center_is_nonzero_scalars);
  CHECK(gl23.commutant_is_scalars);
  CHECK(gl23.commutant_size == 3);

  const auto gl22 = center_bruteforce(Field(2), 2);
  CHECK(gl22.group_order == 6);
  REQUIRE(gl22.center.size() == 1);
  CHECK(gl22.center[0] == Mat::identity(Field(2), 2));

  CHECK(kind_of([] { center_bruteforce(Field(3), 3, 1000); }) == ErrorKind::BudgetExceeded);
}
