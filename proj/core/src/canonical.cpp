#include "contring/canonical.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "contring/error.hpp"
#include "contring/linalg.hpp"
#include "contring/rank_metric.hpp"

namespace contring {

PolyMat::PolyMat(Field field, std::size_t n) : field_(field), n_(n), cells_(n * n, Poly(field)) {}

PolyMat PolyMat::characteristic(const Mat& a) {
  require_square(a);
  const Field& k = a.field();
  PolyMat m(k, a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      m(i, j) = i == j ? Poly(k, std::vector<Elem>{k.neg(a(i, j)), 1})
                       : Poly::constant(k, k.neg(a(i, j)));
    }
  }
  return m;
}

namespace {

void swap_poly_rows(PolyMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.n(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_poly_cols(PolyMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.n(); ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace

std::vector<Poly> smith_diagonal(PolyMat m) {
  const std::size_t n = m.n();
  std::size_t k = 0;
  for (; k < n; ++k) {
    for (;;) {
      // Pivot: nonzero entry of least degree in the trailing block, first in
      // row-major order on ties.
      std::size_t pi = n, pj = n;
      int best = -1;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          const int d = m(i, j).degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            pi = i;
            pj = j;
          }
        }
      if (best < 0) goto done;  // trailing block is zero
      swap_poly_rows(m, k, pi);
      swap_poly_cols(m, k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        auto [q, r] = poly_divmod(m(i, k), m(k, k));
        for (std::size_t c = k; c < n; ++c) m(i, c) = m(i, c) - q * m(k, c);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m(k, j).is_zero()) continue;
        auto [q, r] = poly_divmod(m(k, j), m(k, k));
        for (std::size_t rr = k; rr < n; ++rr) m(rr, j) = m(rr, j) - q * m(rr, k);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!poly_divmod(m(i, j), m(k, k)).second.is_zero()) {
            for (std::size_t c = k; c < n; ++c) m(k, c) = m(k, c) + m(i, c);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
  }
done:
  std::vector<Poly> diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(m(i, i).monic());
  return diag;
}

Mat companion(const Poly& f) {
  if (f.is_zero() || !f.is_monic()) fail(ErrorKind::NotMonic, "companion needs a monic polynomial");
  if (f.degree() < 1) fail(ErrorKind::DegreeZero, "companion needs degree >= 1");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const Field& k = f.field();
  Mat c(k, d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = k.neg(f.coeff(i));
  return c;
}

Poly charpoly_cofactor(const Mat& a) {
  require_square(a);
  const std::size_t n = a.n();
  if (n > 20) fail(ErrorKind::BudgetExceeded, "cofactor expansion limited to n <= 20");
  const Field& k = a.field();
  const PolyMat xa = PolyMat::characteristic(a);
  // minor[mask] = det of rows 0..|mask|-1 against the columns in mask,
  // expanded along its last row.
  std::vector<Poly> minor(std::size_t{1} << n, Poly(k));
  minor[0] = Poly::constant(k, 1);
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Poly acc(k);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const Poly& entry = xa(row, j);
      if (entry.is_zero()) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << j);
      const int above = std::popcount(mask >> (j + 1));
      const Poly term = entry * minor[rest];
      acc = (above % 2 == 0) ? acc + term : acc - term;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

Poly charpoly_hessenberg(const Mat& a) {
  require_square(a);
  const std::size_t n = a.n();
  const Field& k = a.field();
  Mat h = a;
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(col + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, col + 1));
    }
    const Elem t_inv = k.inv(h(col + 1, col));
    for (std::size_t i = col + 2; i < n; ++i) {
      const Elem u = k.mul(h(i, col), t_inv);
      if (u == 0) continue;
      // Similarity: row_i -= u row_{col+1}, then col_{col+1} += u col_i.
      for (std::size_t c = 0; c < n; ++c) h(i, c) = k.sub(h(i, c), k.mul(u, h(col + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) = k.add(h(r, col + 1), k.mul(u, h(r, i)));
    }
  }
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(k, 1));
  for (std::size_t m = 1; m <= n; ++m) {
    Poly pm = Poly(k, std::vector<Elem>{k.neg(h(m - 1, m - 1)), 1}) * p[m - 1];
    Elem t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = k.mul(t, h(i, i - 1));
      if (t == 0) break;
      const Elem coef = k.mul(t, h(i - 1, m - 1));
      if (coef != 0) pm = pm - p[i - 1].scaled(coef);
    }
    p.push_back(std::move(pm));
  }
  return p.back();
}

Poly charpoly(const Mat& a) { return a.n() <= 6 ? charpoly_cofactor(a) : charpoly_hessenberg(a); }

namespace {

// Columns v, Av, ..., A^(d-1) v together with the minimal polynomial of v.
struct Krylov {
  Poly minpoly;
  Mat chain;
};

Krylov krylov(const Mat& a, const Mat& v) {
  const Field& k = a.field();
  const std::size_t n = a.n();
  Mat chain(k, n, 0);
  Mat next = v;
  for (std::size_t d = 0; d <= n; ++d) {
    if (d > 0) {
      if (auto coeffs = solve(chain, next)) {
        std::vector<Elem> c(d + 1, 0);
        for (std::size_t i = 0; i < d; ++i) c[i] = k.neg((*coeffs)(i, 0));
        c[d] = 1;
        return {Poly(k, std::move(c)), std::move(chain)};
      }
    } else if (v.is_zero()) {
      return {Poly::constant(k, 1), std::move(chain)};
    }
    chain = hcat(chain, next);
    next = a * next;
  }
  throw std::logic_error("krylov: sequence failed to become dependent");
}

Mat unit_vector(const Field& k, std::size_t n, std::size_t i) {
  Mat e(k, n, 1);
  e(i, 0) = 1;
  return e;
}

// A vector whose minimal polynomial is the minimal polynomial of a.
Mat maximal_vector(const Mat& a) {
  const Field& k = a.field();
  const std::size_t n = a.n();
  Mat u = unit_vector(k, n, 0);
  Poly mu = minpoly_of_vector(a, u);
  for (std::size_t i = 1; i < n; ++i) {
    const Mat w = unit_vector(k, n, i);
    const Poly nu = minpoly_of_vector(a, w);
    if (poly_divmod(mu, nu).second.is_zero()) continue;
    // Split lcm(mu, nu) = g * h with g | mu, h | nu and gcd(g, h) = 1.
    Poly g = mu;
    Poly h = poly_divmod(nu, poly_gcd(mu, nu)).first;
    for (;;) {
      const Poly d = poly_gcd(g, h);
      if (d.degree() <= 0) break;
      g = poly_divmod(g, d).first;
      h = h * d;
    }
    u = poly_eval(poly_divmod(mu, g).first, a) * u + poly_eval(poly_divmod(nu, h).first, a) * w;
    mu = (g * h).monic();
  }
  return u;
}

void decompose(const Mat& a, std::vector<std::pair<Poly, Mat>>& out_blocks) {
  const std::size_t n = a.n();
  if (n == 0) return;
  const Field& k = a.field();
  const Mat v = maximal_vector(a);
  Krylov kv = krylov(a, v);
  const std::size_t d = static_cast<std::size_t>(kv.minpoly.degree());
  if (d == n) {
    out_blocks.emplace_back(std::move(kv.minpoly), std::move(kv.chain));
    return;
  }
  // A functional phi vanishing on v..A^(d-2)v and equal to 1 on A^(d-1)v
  // cuts out the invariant complement {x : phi(A^j x) = 0, j < d}.
  auto phi = solve(kv.chain.transpose(), unit_vector(k, d, d - 1));
  if (!phi) throw std::logic_error("cyclic decomposition: Krylov chain is dependent");
  Mat functionals(k, d, n);
  Mat row = phi->transpose();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t c = 0; c < n; ++c) functionals(j, c) = row(0, c);
    row = row * a;
  }
  const Mat complement = nullspace(functionals);
  if (complement.cols() != n - d) throw std::logic_error("cyclic decomposition: complement has wrong dimension");
  auto restricted = solve(complement, a * complement);
  if (!restricted) throw std::logic_error("cyclic decomposition: complement is not invariant");
  out_blocks.emplace_back(std::move(kv.minpoly), std::move(kv.chain));
  std::vector<std::pair<Poly, Mat>> inner;
  decompose(*restricted, inner);
  for (auto& [f, basis] : inner) out_blocks.emplace_back(std::move(f), complement * basis);
}

}  // namespace

Poly minpoly_of_vector(const Mat& a, const Mat& v) {
  require_square(a);
  if (v.rows() != a.n() || v.cols() != 1) fail(ErrorKind::DimensionMismatch, "minpoly_of_vector needs a column vector");
  return krylov(a, v).minpoly;
}

std::vector<Poly> invariant_factors(const Mat& a) {
  require_square(a);
  std::vector<Poly> out;
  for (Poly& f : smith_diagonal(PolyMat::characteristic(a))) {
    if (f.degree() > 0) out.push_back(std::move(f));
  }
  return out;
}

CyclicDecomposition cyclic_decomposition(const Mat& a) {
  require_square(a);
  std::vector<std::pair<Poly, Mat>> blocks;
  decompose(a, blocks);
  // Blocks arrive largest first.
  CyclicDecomposition out{{}, Mat(a.field(), a.n(), 0)};
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.factors.push_back(it->first);
    out.basis = hcat(out.basis, it->second);
  }
  return out;
}

Mat Rcf::form() const {
  std::vector<Mat> blocks;
  blocks.reserve(factors.size());
  for (const auto& f : factors) blocks.push_back(companion(f));
  return block_diag(blocks);
}

Rcf rcf(const Mat& a) {
  require_square(a);
  Rcf out{invariant_factors(a), Mat(a.field(), 0, 0), 0};
  CyclicDecomposition cyc = cyclic_decomposition(a);
  if (cyc.factors != out.factors) {
    throw std::logic_error("rcf: Smith form and cyclic decomposition disagree");
  }
  out.transform = inverse(cyc.basis);
  out.index = a.n() - out.factors.size();
  if (!(out.transform * a * cyc.basis == out.form())) {
    throw std::logic_error("rcf: transform does not conjugate onto the companion blocks");
  }
  return out;
}

std::size_t index(const Mat& a) { return a.n() - invariant_factors(a).size(); }

IndexCertificate index_bound_certificate(const Mat& a) {
  require_square(a);
  const std::vector<Poly> factors = invariant_factors(a);
  IndexCertificate cert;
  cert.n = a.n();
  cert.index = a.n() - factors.size();
  const CenterDistance scan = center_scan_exhaustive(a);
  cert.min_rank = static_cast<std::size_t>(scan.dist.num);
  cert.argmin = scan.argmin;
  for (const auto& f : factors) {
    if (f.degree() != 1) break;
    ++cert.linear_blocks;
  }
  cert.block_rank = a.n();
  if (cert.linear_blocks > 0) {
    const Elem c = a.field().neg(factors.front().coeff(0));
    cert.block_scalar = c;
    cert.block_rank = rank(a - Mat::scalar(a.field(), a.n(), c));
  }
  cert.holds = cert.min_rank <= 2 * cert.index && cert.block_rank <= a.n() - cert.linear_blocks &&
               a.n() - cert.linear_blocks <= 2 * cert.index;
  return cert;
}

}  // namespace contring
