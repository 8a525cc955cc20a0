#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "contring/field.hpp"

namespace contring {

/// Univariate polynomial over GF(p), coefficients stored low degree first.
/// The representation is always trimmed: the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading one.
class Poly {
 public:
  explicit Poly(Field field) : field_(field) {}
  Poly(Field field, std::vector<Elem> coeffs);
  Poly(Field field, std::initializer_list<std::int64_t> coeffs);

  static Poly constant(Field field, Elem c);
  static Poly monomial(Field field, Elem c, std::size_t degree);
  /// X - c
  static Poly linear(Field field, Elem c);

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Elem eval(Elem x) const noexcept;
  Poly monic() const;
  Poly scaled(Elem c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Elem> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

/// f = q*g + r with deg r < deg g. Throws DivisionByZero when g = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// All c in GF(p) with f(c) = 0, ascending. Throws ZeroPolynomial on f = 0.
std::vector<Elem> poly_roots(const Poly& f);

/// Root multiplicities obtained by repeated division by (X - c).
std::vector<std::pair<Elem, std::size_t>> root_multiplicities(const Poly& f);

/// True iff f is a product of linear factors over GF(p).
bool splits(const Poly& f);

}  // namespace contring
