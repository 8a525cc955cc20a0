#include "contring/rank_metric.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "contring/canonical.hpp"
#include "contring/error.hpp"
#include "contring/linalg.hpp"

namespace contring {

RankValue RankValue::over(std::uint64_t new_den) const {
  if (new_den % den != 0) fail(ErrorKind::PreconditionViolation, "denominator is not a multiple");
  return {num * (new_den / den), new_den};
}

RankValue operator+(const RankValue& a, const RankValue& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  const std::uint64_t l = std::lcm(a.den, b.den);
  return {a.num * (l / a.den) + b.num * (l / b.den), l};
}

RankValue abs_diff(const RankValue& a, const RankValue& b) {
  const std::uint64_t l = a.den == b.den ? a.den : std::lcm(a.den, b.den);
  const std::uint64_t x = a.num * (l / a.den);
  const std::uint64_t y = b.num * (l / b.den);
  return {x > y ? x - y : y - x, l};
}

std::ostream& operator<<(std::ostream& os, const RankValue& r) { return os << r.num << "/" << r.den; }

RankValue rk(const Mat& a) {
  require_square(a);
  return {rank(a), a.n()};
}

RankValue dist(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  require_square(a);
  return rk(a - b);
}

namespace {

std::size_t rank_minus_scalar(const Mat& a, Elem c) {
  Mat m = a;
  for (std::size_t i = 0; i < a.n(); ++i) m(i, i) = a.field().sub(m(i, i), c);
  return rank(m);
}

}  // namespace

CenterDistance center_scan_exhaustive(const Mat& a) {
  require_square(a);
  std::size_t best = a.n() + 1;
  Elem arg = 0;
  for (Elem c = 0; c < a.field().p(); ++c) {
    const std::size_t r = rank_minus_scalar(a, c);
    if (r < best) {
      best = r;
      arg = c;
    }
  }
  return {{best, a.n()}, arg};
}

CenterDistance center_scan_eigen(const Mat& a) {
  require_square(a);
  std::vector<Elem> candidates = poly_roots(charpoly(a));
  candidates.insert(candidates.begin(), 0);
  std::size_t best = a.n() + 1;
  Elem arg = 0;
  for (Elem c : candidates) {
    const std::size_t r = rank_minus_scalar(a, c);
    if (r < best || (r == best && c < arg)) {
      best = r;
      arg = c;
    }
  }
  return {{best, a.n()}, arg};
}

CenterDistance dist_to_center(const Mat& a) {
  const CenterDistance full = center_scan_exhaustive(a);
  const CenterDistance eig = center_scan_eigen(a);
  if (!(full.dist == eig.dist) || full.argmin != eig.argmin) {
    throw std::logic_error("dist_to_center: exhaustive and eigenvalue scans disagree");
  }
  return full;
}

RankAxiomReport rank_axiom_suite(const Mat& a, const Mat& b, const Mat& e, const Mat& f) {
  require_compatible(a, b);
  require_compatible(a, e);
  require_compatible(a, f);
  require_square(a);
  if (!(e * e == e) || !(f * f == f) || !(e * f).is_zero() || !(f * e).is_zero()) {
    fail(ErrorKind::PreconditionViolation, "rank_axiom_suite needs orthogonal idempotents e, f");
  }
  const Mat one = Mat::identity(a.field(), a.n());
  RankAxiomReport rep;
  rep.unit_is_one = rk(one) == RankValue{1, 1};
  const RankValue ra = rk(a), rb = rk(b);
  const RankValue rab = rk(a * b);
  rep.submultiplicative = rab <= ra && rab <= rb;
  const RankValue re = rk(e), rf = rk(f), ref = rk(e + f);
  rep.orthogonal_additive = ref == re + rf;
  rep.subadditive = rk(a + b) <= ra + rb;
  rep.monotone_difference = ref >= re && rk((e + f) - e) == abs_diff(ref, re);
  return rep;
}

UnitSumDecomposition unit_sum_decomposition(const Mat& x, std::size_t n_terms) {
  require_square(x);
  const std::size_t n = x.n();
  const Field& k = x.field();
  if (n_terms == 0) fail(ErrorKind::RankTooSmall, "zero terms requested");
  const DiagFactorization fac = diag_factorize(x);
  const std::size_t r = fac.r;
  if (r * n_terms < n) {
    fail(ErrorKind::RankTooSmall, "rank " + std::to_string(r) + "/" + std::to_string(n) + " below 1/" +
                                      std::to_string(n_terms));
  }
  UnitSumDecomposition out;
  out.minimal_terms = (n + r - 1) / r;
  const Mat v_inv = inverse(fac.v);
  const Mat w_inv = inverse(fac.w);
  // Segment s covers diagonal positions [s*r, min((s+1)*r, n)); the cyclic
  // shift by s*r carries diag(I_len, 0) onto it.
  for (std::size_t s = 0; s < out.minimal_terms; ++s) {
    const std::size_t offset = s * r;
    const std::size_t len = std::min(r, n - offset);
    Mat shift(k, n, n);
    for (std::size_t j = 0; j < n; ++j) shift((j + offset) % n, j) = 1;
    Mat left = shift;
    if (len < r) left = left * Mat::unit_block(k, n, len);
    out.terms.emplace_back(left * v_inv, w_inv * shift.transpose());
  }
  return out;
}

}  // namespace contring
