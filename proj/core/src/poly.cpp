#include "contring/poly.hpp"

#include <algorithm>
#include <sstream>

#include "contring/error.hpp"

namespace contring {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce_u64(c);
  trim();
}

Poly::Poly(Field field, std::initializer_list<std::int64_t> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(field_.reduce(c));
  trim();
}

Poly Poly::constant(Field field, Elem c) { return Poly(field, std::vector<Elem>{c}); }

Poly Poly::monomial(Field field, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(field, std::move(coeffs));
}

Poly Poly::linear(Field field, Elem c) { return Poly(field, std::vector<Elem>{field.neg(c), 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Poly::eval(Elem x) const noexcept {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a) { return Poly(a.field_) - a; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const Field& k = a.field_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = k.add(out[i + j], k.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(k, std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& k = f.field();
  if (f.degree() < g.degree()) return {Poly(k), f};
  std::vector<Elem> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<Elem> quot(rem.size() - dg, 0);
  const Elem lead_inv = k.inv(g.lead());
  for (std::size_t i = rem.size(); i-- > dg;) {
    const Elem c = k.mul(rem[i], lead_inv);
    quot[i - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      rem[i - dg + j] = k.sub(rem[i - dg + j], k.mul(c, g.coeffs()[j]));
    }
  }
  rem.resize(dg);
  return {Poly(k, std::move(quot)), Poly(k, std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Elem> poly_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Elem> roots;
  for (Elem c = 0; c < f.field().p(); ++c) {
    if (f.eval(c) == 0) roots.push_back(c);
  }
  return roots;
}

std::vector<std::pair<Elem, std::size_t>> root_multiplicities(const Poly& f) {
  std::vector<std::pair<Elem, std::size_t>> out;
  for (Elem c : poly_roots(f)) {
    const Poly lin = Poly::linear(f.field(), c);
    Poly rest = f;
    std::size_t mult = 0;
    for (;;) {
      auto [q, r] = poly_divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.emplace_back(c, mult);
  }
  return out;
}

bool splits(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "split test of the zero polynomial");
  Poly rest = f;
  // Peel linear factors until a constant remains or no root is left.
  while (rest.degree() > 0) {
    bool peeled = false;
    for (Elem c = 0; c < f.field().p(); ++c) {
      if (rest.eval(c) != 0) continue;
      rest = poly_divmod(rest, Poly::linear(f.field(), c)).first;
      peeled = true;
      break;
    }
    if (!peeled) return false;
  }
  return true;
}

}  // namespace contring
