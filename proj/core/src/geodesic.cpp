#include "contring/geodesic.hpp"

#include <algorithm>
#include <stdexcept>

#include "contring/canonical.hpp"
#include "contring/error.hpp"
#include "contring/linalg.hpp"
#include "contring/random.hpp"

namespace contring {

namespace {

std::optional<Mat> triangularize_rec(const Mat& a) {
  const Field& k = a.field();
  const std::size_t n = a.n();
  if (n <= 1) return Mat::identity(k, n);
  const Poly f = charpoly(a);
  if (!splits(f)) return std::nullopt;
  const Elem lambda = poly_roots(f).front();
  const Mat v = nullspace(a - Mat::scalar(k, n, lambda)).column(0);
  const Mat w = complete_basis(v);
  const Mat moved = inverse(w) * a * w;
  auto inner = triangularize_rec(moved.submatrix(1, 1, n - 1, n - 1));
  if (!inner) return std::nullopt;
  const Mat blocks[] = {Mat::identity(k, 1), *inner};
  return w * block_diag(blocks);
}

// Column space of cI - a with an adapted basis whose leading columns
// triangularize the action of a there. Nullopt when that action does not
// split.
std::optional<Mat> adapted_triangular_basis(const Mat& a, const Idem& e) {
  const CornerFrame fr = corner_frame(e);
  auto y = triangularizing_basis(fr.restrict(a));
  if (!y) return std::nullopt;
  return hcat(fr.basis.columns(0, fr.r) * *y, fr.basis.columns(fr.r, a.n() - fr.r));
}

GeodesicPath nest_geodesic_to_scalar(const Mat& a, Elem c) {
  const Mat target = Mat::scalar(a.field(), a.n(), c);
  const Mat gap = target - a;
  if (gap.is_zero()) return GeodesicPath{{a}, {RankValue{0, a.n()}}};
  const Idem e = column_space_idempotent(gap);
  auto basis = adapted_triangular_basis(a, e);
  if (!basis) fail(ErrorKind::NotTriangularizable, "corner characteristic polynomial does not split");
  const NestChain nest = nest_from_basis(*basis, e.rank());
  if (!in_R_E(a, nest)) throw std::logic_error("triangularizing nest does not contain a in R_E");
  return path_along_nest(a, target, nest);
}

Mat random_transvection(Rng& rng, const Field& k, std::size_t n) {
  Mat x(k, n, 1);
  while (x.is_zero()) x = random_mat(rng, k, n, 1);
  const Mat perp = nullspace(x.transpose());
  Mat y(k, n, 1);
  while (y.is_zero()) y = perp * random_mat(rng, k, perp.cols(), 1);
  return Mat::identity(k, n) + x * y.transpose();
}

std::uint64_t abs_gap(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace

bool verify_geodesic(const GeodesicPath& path) {
  if (path.points.empty() || path.points.size() != path.times.size()) return false;
  if (!(path.times.front() == RankValue{})) return false;
  for (std::size_t i = 1; i < path.times.size(); ++i) {
    if (!(path.times[i - 1] < path.times[i])) return false;
  }
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    if (!path.points[i].is_square() || path.points[i].n() != path.points[0].n() ||
        !(path.points[i].field() == path.points[0].field())) {
      return false;
    }
    for (std::size_t j = i + 1; j < path.points.size(); ++j) {
      if (!(dist(path.points[i], path.points[j]) == abs_diff(path.times[i], path.times[j]))) return false;
    }
  }
  return true;
}

GeodesicPath path_along_nest(const Mat& a, const Mat& b, const NestChain& nest) {
  require_compatible(a, b);
  GeodesicPath path;
  const Mat id = Mat::identity(a.field(), a.n());
  for (const Idem& e : nest.members()) {
    Mat point = e.mat() * b + (id - e.mat()) * a;
    path.times.push_back(dist(a, point));
    path.points.push_back(std::move(point));
  }
  return path;
}

GeodesicPath geodesic_between(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  const Mat gap = b - a;
  if (gap.is_zero()) return GeodesicPath{{a}, {RankValue{0, a.n()}}};
  return path_along_nest(a, b, max_nest_in_corner(column_space_idempotent(gap)));
}

std::optional<Mat> triangularizing_basis(const Mat& a) {
  require_square(a);
  auto y = triangularize_rec(a);
  if (y && !(inverse(*y) * a * *y).is_upper_triangular()) {
    throw std::logic_error("triangularizing basis failed to triangularize");
  }
  return y;
}

bool corner_splits(const Mat& a, Elem c) {
  require_square(a);
  const Mat gap = Mat::scalar(a.field(), a.n(), c) - a;
  if (gap.is_zero()) return true;
  const CornerFrame fr = corner_frame(column_space_idempotent(gap));
  return splits(charpoly(fr.restrict(a)));
}

GeodesicPath geodesic_unit_to_identity(const Mat& a) {
  require_square(a);
  if (!is_invertible(a)) fail(ErrorKind::NotInvertible, "geodesic to the identity needs a unit");
  GeodesicPath path = nest_geodesic_to_scalar(a, 1);
  for (const Mat& point : path.points) {
    if (!is_invertible(point)) throw std::logic_error("unit geodesic left the unit group");
  }
  return path;
}

GeodesicPath star_geodesic_algebraic(const Mat& a, std::span<const Poly> s, Elem c) {
  require_square(a);
  if (s.empty()) fail(ErrorKind::PreconditionViolation, "polynomial set is empty");
  for (const Poly& f : s) {
    if (f.is_zero()) fail(ErrorKind::PreconditionViolation, "polynomial set contains zero");
    if (!poly_eval(f, a).is_zero()) fail(ErrorKind::NotAlgebraicOverS, "a is not annihilated by " + f.to_string());
    if (f.eval(a.field().reduce(c)) != 0) fail(ErrorKind::CenterNotRoot, "center is not a root of " + f.to_string());
  }
  GeodesicPath path = nest_geodesic_to_scalar(a, a.field().reduce(c));
  for (const Mat& point : path.points)
    for (const Poly& f : s) {
      if (!poly_eval(f, point).is_zero()) throw std::logic_error("star geodesic left the algebraic set");
    }
  return path;
}

GeodesicPath block_concat_geodesic(std::span<const GeodesicPath> paths) {
  if (paths.empty()) fail(ErrorKind::PreconditionViolation, "no paths to concatenate");
  std::vector<Mat> current;
  std::size_t total = 0;
  for (const GeodesicPath& p : paths) {
    if (p.points.empty()) fail(ErrorKind::PreconditionViolation, "empty path");
    current.push_back(p.points.front());
    total += p.points.front().n();
  }
  GeodesicPath out;
  out.points.push_back(block_diag(current));
  out.times.push_back(RankValue{0, total});
  std::uint64_t offset = 0;
  for (std::size_t b = 0; b < paths.size(); ++b) {
    const std::uint64_t nb = paths[b].points.front().n();
    for (std::size_t j = 1; j < paths[b].points.size(); ++j) {
      const RankValue& t = paths[b].times[j];
      if ((t.num * nb) % t.den != 0) fail(ErrorKind::PreconditionViolation, "block time is not a rank");
      current[b] = paths[b].points[j];
      out.points.push_back(block_diag(current));
      out.times.push_back(RankValue{offset + t.num * nb / t.den, total});
    }
    offset += paths[b].length().num * nb / paths[b].length().den;
  }
  return out;
}

const char* to_string(MidpointMethod m) noexcept {
  switch (m) {
    case MidpointMethod::Direct: return "direct";
    case MidpointMethod::Perturbation: return "perturbation";
    case MidpointMethod::CanonicalForm: return "canonical-form";
  }
  return "unknown";
}

Mat split_approximant(const Mat& g) {
  const Rcf r = rcf(g);
  const Field& k = g.field();
  std::vector<Mat> blocks;
  for (const Poly& f : r.factors) {
    if (splits(f)) {
      blocks.push_back(companion(f));
      continue;
    }
    Poly unipotent = Poly::constant(k, 1);
    for (int i = 0; i < f.degree(); ++i) unipotent = unipotent * Poly::linear(k, 1);
    blocks.push_back(companion(unipotent));
  }
  return inverse(r.transform) * block_diag(blocks) * r.transform;
}

MidpointResult approximate_midpoint(const Mat& g0, const Mat& g1, std::uint64_t seed, std::size_t budget,
                                    bool canonical_fallback) {
  require_compatible(g0, g1);
  require_square(g0);
  const auto g1_inv = try_inverse(g1);
  if (!g1_inv || !is_invertible(g0)) fail(ErrorKind::NotInvertible, "midpoints need units");
  const Field& k = g0.field();
  const std::size_t n = g0.n();
  const Mat h0 = g0 * *g1_inv;

  std::size_t tries = 0;
  std::optional<Mat> h;
  MidpointMethod method = MidpointMethod::Direct;
  if (corner_splits(h0)) {
    h = h0;
  } else {
    Rng rng(seed);
    method = MidpointMethod::Perturbation;
    while (tries < budget && !h) {
      ++tries;
      Mat candidate = h0 * random_transvection(rng, k, n);
      if (corner_splits(candidate)) h = std::move(candidate);
    }
    if (!h && canonical_fallback) {
      method = MidpointMethod::CanonicalForm;
      h = split_approximant(h0);
    }
  }
  if (!h) fail(ErrorKind::NoTriangularizableApproximant, "no triangularizable element found within budget");

  const GeodesicPath path = geodesic_unit_to_identity(*h);
  const std::uint64_t total = path.length().num;
  std::size_t best = 0;
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    if (abs_gap(2 * path.times[i].num, total) < abs_gap(2 * path.times[best].num, total)) best = i;
  }
  MidpointResult out{path.points[best] * g1, *h, {}, dist(h0, *h), {}, tries, method};
  const std::uint64_t d = dist(g0, g1).num;
  const std::uint64_t left = dist(g0, out.m).num;
  const std::uint64_t right = dist(out.m, g1).num;
  out.err = RankValue{std::max(abs_gap(2 * left, d), abs_gap(2 * right, d)), 2 * n};
  out.bound = RankValue{1 + 3 * out.delta.num, 2 * n};
  return out;
}

}  // namespace contring
