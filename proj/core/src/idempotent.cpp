#include "contring/idempotent.hpp"

#include <set>
#include <stdexcept>

#include "contring/error.hpp"
#include "contring/linalg.hpp"

namespace contring {

namespace {

using Key = std::vector<Elem>;

Key key_of(const Mat& a) { return Key(a.data().begin(), a.data().end()); }

Mat frame_rows(const CornerFrame& fr) { return fr.coords.row_block(0, fr.r); }
Mat frame_cols(const CornerFrame& fr) { return fr.basis.columns(0, fr.r); }

void require_orthogonal(const Idem& f, const Idem& e) {
  if (f.n() != e.n()) fail(ErrorKind::DimensionMismatch, "idempotents of different sizes");
  if (!idem_orthogonal(f, e)) fail(ErrorKind::NotOrthogonal, "e and f are not orthogonal");
}

}  // namespace

Idem Idem::from(Mat m) {
  if (!m.is_square()) fail(ErrorKind::PreconditionViolation, "idempotent must be square");
  if (!(m * m == m)) fail(ErrorKind::PreconditionViolation, "matrix is not idempotent");
  const std::size_t r = contring::rank(m);
  return Idem(std::move(m), r);
}

Idem Idem::complement() const {
  return Idem(Mat::identity(m_.field(), m_.n()) - m_, m_.n() - rank_);
}

bool idem_leq(const Idem& e, const Idem& f) {
  require_compatible(e.mat(), f.mat());
  return e.mat() * f.mat() == e.mat() && f.mat() * e.mat() == e.mat();
}

bool idem_orthogonal(const Idem& e, const Idem& f) {
  require_compatible(e.mat(), f.mat());
  const bool orth = (e.mat() * f.mat()).is_zero() && (f.mat() * e.mat()).is_zero();
  if (orth != idem_leq(e, f.complement())) {
    throw std::logic_error("orthogonality disagrees with e <= 1 - f");
  }
  return orth;
}

bool NestChain::is_chain(std::span<const Idem> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Mat& m = chain[i].mat();
    if (!(m * m == m)) return false;
    if (i > 0 && chain[i - 1].rank() >= chain[i].rank()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!idem_leq(chain[j], chain[i])) return false;
    }
  }
  return true;
}

NestChain NestChain::from(std::vector<Idem> chain) {
  if (!is_chain(chain)) fail(ErrorKind::PreconditionViolation, "members do not form a strict chain");
  return NestChain(std::move(chain));
}

Idem column_space_idempotent(const Mat& a) {
  const DiagFactorization df = diag_factorize(a);
  return Idem::from(df.v * df.middle() * inverse(df.v));
}

NestChain standard_nest(const Field& field, std::size_t n, std::span<const std::size_t> ranks) {
  std::vector<Idem> chain;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] > n || (i > 0 && ranks[i] <= ranks[i - 1])) {
      fail(ErrorKind::BadRanks, "ranks must be strictly increasing and at most n");
    }
    chain.push_back(Idem::from(Mat::unit_block(field, n, ranks[i])));
  }
  return NestChain::from(std::move(chain));
}

NestChain nest_from_basis(const Mat& v, std::size_t r) {
  const Mat v_inv = inverse(v);
  std::vector<Idem> chain;
  chain.reserve(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    chain.push_back(Idem::from(v * Mat::unit_block(v.field(), v.n(), i) * v_inv));
  }
  return NestChain::from(std::move(chain));
}

CornerFrame corner_frame(const Idem& e) {
  Mat basis = hcat(column_basis(e.mat()), nullspace(e.mat()));
  Mat coords = inverse(basis);
  return CornerFrame{e.rank(), std::move(basis), std::move(coords)};
}

Mat CornerFrame::restrict(const Mat& x) const { return frame_rows(*this) * x * frame_cols(*this); }

Mat CornerFrame::lift(const Mat& y) const { return frame_cols(*this) * y * frame_rows(*this); }

NestChain max_nest_in_corner(const Idem& e) {
  if (e.rank() == 0) fail(ErrorKind::ZeroIdempotent, "corner of the zero idempotent");
  return nest_from_basis(corner_frame(e).basis, e.rank());
}

bool in_R_E(const Mat& a, const NestChain& nest) {
  for (const Idem& e : nest.members()) {
    const Mat ae = a * e.mat();
    if (!(e.mat() * ae == ae)) return false;
  }
  return true;
}

Mat pi_e(const Mat& a, const Idem& e) {
  require_compatible(a, e.mat());
  const Mat id = Mat::identity(a.field(), a.n());
  return e.mat() * a * e.mat() + id - e.mat();
}

bool gamma_membership(const Mat& g, const Idem& e) {
  require_compatible(g, e.mat());
  const Mat core = g - e.complement().mat();
  if (!(e.mat() * core * e.mat() == core)) return false;
  return is_invertible(g);
}

std::vector<Mat> gamma_enumerate(const Idem& e, std::uint64_t budget) {
  const CornerFrame fr = corner_frame(e);
  const Field& k = e.mat().field();
  const auto space = matrix_space_size(k, fr.r, fr.r);
  if (!space || *space > budget) fail(ErrorKind::BudgetExceeded, "corner group too large to enumerate");
  const Mat rest = e.complement().mat();
  std::vector<Mat> out;
  for (std::uint64_t code = 0; code < *space; ++code) {
    const Mat y = decode_matrix(k, fr.r, fr.r, code);
    if (fr.r > 0 && det(y) == 0) continue;
    out.push_back(fr.lift(y) + rest);
  }
  return out;
}

Mat gamma_sample(const Idem& e, Rng& rng) {
  const CornerFrame fr = corner_frame(e);
  const Field& k = e.mat().field();
  return fr.lift(random_unit(rng, k, fr.r)) + e.complement().mat();
}

bool parabolic_membership(const Mat& g, const Idem& f, const Idem& e) {
  require_orthogonal(f, e);
  const Mat x = e.mat() * g * f.mat();
  return gamma_membership(g - x, f);
}

std::vector<std::pair<Mat, Mat>> parabolic_enumerate(const Idem& f, const Idem& e, std::uint64_t budget) {
  require_orthogonal(f, e);
  const Field& k = f.mat().field();
  const CornerFrame fe = corner_frame(e);
  const CornerFrame ff = corner_frame(f);
  const auto shifts = matrix_space_size(k, fe.r, ff.r);
  const auto corner = matrix_space_size(k, ff.r, ff.r);
  if (!shifts || !corner || *corner > budget || *shifts > budget / *corner) {
    fail(ErrorKind::BudgetExceeded, "parabolic group too large to enumerate");
  }
  const std::vector<Mat> gamma = gamma_enumerate(f, budget);
  const Mat left = frame_cols(fe);
  const Mat right = frame_rows(ff);
  std::vector<std::pair<Mat, Mat>> out;
  out.reserve(gamma.size() * *shifts);
  for (const Mat& a : gamma) {
    for (std::uint64_t code = 0; code < *shifts; ++code) {
      out.emplace_back(a, left * decode_matrix(k, fe.r, ff.r, code) * right);
    }
  }
  return out;
}

std::pair<Mat, Mat> parabolic_sample(const Idem& f, const Idem& e, Rng& rng) {
  require_orthogonal(f, e);
  const Field& k = f.mat().field();
  const CornerFrame fe = corner_frame(e);
  const CornerFrame ff = corner_frame(f);
  Mat a = gamma_sample(f, rng);
  Mat x = frame_cols(fe) * random_mat(rng, k, fe.r, ff.r) * frame_rows(ff);
  return {std::move(a), std::move(x)};
}

ParabolicReport parabolic_subgroup_check(const Idem& f, const Idem& e,
                                         std::span<const std::pair<Mat, Mat>> elements) {
  require_orthogonal(f, e);
  ParabolicReport rep;
  rep.elements = elements.size();
  const Mat id = Mat::identity(f.mat().field(), f.n());
  for (const auto& [a, x] : elements) {
    if (!gamma_membership(a, f) || !(e.mat() * x * f.mat() == x)) rep.parts_valid = false;
    const Mat g = a + x;
    if (!is_invertible(g)) rep.units = false;
    if (dist(g, id) > f.rk()) rep.within_ball = false;
  }
  auto check_pair = [&](const std::pair<Mat, Mat>& p, const std::pair<Mat, Mat>& q) {
    const Mat ab = p.first * q.first;
    const Mat xy = p.second * q.first + q.second;
    if (!(ab + xy == (p.first + p.second) * (q.first + q.second))) rep.homomorphism = false;
    ++rep.pairs_checked;
  };
  if (elements.size() <= 256) {
    for (const auto& p : elements)
      for (const auto& q : elements) check_pair(p, q);
  } else {
    for (std::size_t i = 0; i < elements.size(); ++i) check_pair(elements[i], elements[(i + 1) % elements.size()]);
  }
  return rep;
}

bool is_subgroup(std::span<const Mat> elements) {
  if (elements.empty()) return false;
  std::set<Key> keys;
  for (const Mat& g : elements) keys.insert(key_of(g));
  if (!keys.contains(key_of(Mat::identity(elements[0].field(), elements[0].n())))) return false;
  for (const Mat& g : elements) {
    const auto inv = try_inverse(g);
    if (!inv || !keys.contains(key_of(*inv))) return false;
    for (const Mat& h : elements) {
      if (!keys.contains(key_of(g * h))) return false;
    }
  }
  return true;
}

bool MatrixUnits::relations_hold() const {
  if (m == 0 || units.size() != m * m) return false;
  const Mat& first = units.front();
  Mat sum = Mat::zero(first.field(), first.n());
  for (std::size_t i = 0; i < m; ++i) sum += (*this)(i, i);
  if (!sum.is_identity()) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const Mat prod = (*this)(i, j) * (*this)(k, l);
          if (j == k ? !(prod == (*this)(i, l)) : !prod.is_zero()) return false;
        }
  return true;
}

MatrixUnits matrix_units_from_idempotents(std::span<const Idem> parts) {
  if (parts.empty()) fail(ErrorKind::NotPartition, "no parts");
  const Field& k = parts[0].mat().field();
  const std::size_t n = parts[0].n();
  Mat sum = Mat::zero(k, n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].n() != n) fail(ErrorKind::NotPartition, "parts have different sizes");
    sum += parts[i].mat();
    for (std::size_t j = 0; j < i; ++j) {
      if (!(parts[i].mat() * parts[j].mat()).is_zero() || !(parts[j].mat() * parts[i].mat()).is_zero()) {
        fail(ErrorKind::NotPartition, "parts are not pairwise orthogonal");
      }
    }
  }
  if (!sum.is_identity()) fail(ErrorKind::NotPartition, "parts do not sum to the identity");
  const std::size_t r = parts[0].rank();
  for (const Idem& e : parts) {
    if (e.rank() != r) fail(ErrorKind::UnequalRanks, "parts have different ranks");
  }
  const std::size_t m = parts.size();
  std::vector<Mat> bases;
  Mat all(k, n, 0);
  for (const Idem& e : parts) {
    bases.push_back(column_basis(e.mat()));
    all = hcat(all, bases.back());
  }
  const Mat all_inv = inverse(all);
  MatrixUnits out{m, {}};
  out.units.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.units.push_back(bases[i] * all_inv.row_block(j * r, r));
  for (std::size_t i = 0; i < m; ++i) {
    if (!(out(i, i) == parts[i].mat())) throw std::logic_error("matrix units: diagonal does not match the parts");
  }
  return out;
}

Mat conjugation_intertwiner(const MatrixUnits& s, const MatrixUnits& t) {
  if (s.m != t.m || s.m == 0) fail(ErrorKind::IncompatibleShapes, "families of different sizes");
  if (s(0, 0).n() != t(0, 0).n() || !(s(0, 0).field() == t(0, 0).field())) {
    fail(ErrorKind::IncompatibleShapes, "families live in different rings");
  }
  const Idem s11 = Idem::from(s(0, 0));
  const Idem t11 = Idem::from(t(0, 0));
  if (s11.rank() != t11.rank()) fail(ErrorKind::IncompatibleShapes, "s_11 and t_11 have different ranks");
  // u carries an adapted basis of s_11 onto one of t_11, so t_11 = u s_11 u^-1.
  const Mat u = corner_frame(t11).basis * corner_frame(s11).coords;
  Mat g = Mat::zero(s(0, 0).field(), s(0, 0).n());
  for (std::size_t i = 0; i < s.m; ++i) g += t(i, 0) * u * s(0, i);
  const auto g_inv = try_inverse(g);
  if (!g_inv) throw std::logic_error("conjugation intertwiner is not a unit");
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.m; ++j) {
      if (!(g * s(i, j) * *g_inv == t(i, j))) throw std::logic_error("conjugation intertwiner fails a relation");
    }
  return g;
}

CenterReport center_bruteforce(const Field& field, std::size_t n, std::uint64_t budget) {
  const auto space = matrix_space_size(field, n, n);
  if (!space || *space > budget) fail(ErrorKind::BudgetExceeded, "matrix space too large to scan");
  std::vector<Mat> all;
  std::vector<Mat> group;
  all.reserve(*space);
  for (std::uint64_t code = 0; code < *space; ++code) {
    all.push_back(decode_matrix(field, n, n, code));
    if (is_invertible(all.back())) group.push_back(all.back());
  }
  auto commutes_with_group = [&](const Mat& a) {
    for (const Mat& h : group) {
      if (!(a * h == h * a)) return false;
    }
    return true;
  };
  CenterReport rep;
  rep.group_order = group.size();
  for (const Mat& g : group) {
    if (commutes_with_group(g)) rep.center.push_back(g);
  }
  bool all_scalar = true;
  std::size_t commutant = 0;
  for (const Mat& a : all) {
    if (commutes_with_group(a)) {
      ++commutant;
      if (!a.is_scalar()) all_scalar = false;
    }
  }
  rep.commutant_size = commutant;
  rep.commutant_is_scalars = all_scalar && commutant == field.p();
  bool center_scalar = rep.center.size() == field.p() - 1;
  for (const Mat& g : rep.center) center_scalar = center_scalar && g.is_scalar();
  rep.center_is_nonzero_scalars = center_scalar;
  return rep;
}

}  // namespace contring
