#include "contring/field.hpp"

#include <string>

#include "contring/error.hpp"

namespace contring {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 16) || !is_prime(p)) {
    fail(ErrorKind::PreconditionViolation,
         "field modulus must be a prime in [2, 65536), got " + std::to_string(p));
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Elem Field::primitive_root() const {
  if (p_ == 2) return 1;
  const std::uint32_t order = p_ - 1;
  for (Elem g = 2; g < p_; ++g) {
    bool generator = true;
    std::uint32_t m = order;
    for (std::uint32_t q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      while (m % q == 0) m /= q;
      if (pow(g, order / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator && m > 1 && pow(g, order / m) == 1) generator = false;
    if (generator) return g;
  }
  return 1;
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "scalars from different fields");
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return {a.field_, static_cast<std::int64_t>(a.field_.add(a.value_, b.value_))};
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return {a.field_, static_cast<std::int64_t>(a.field_.sub(a.value_, b.value_))};
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return {a.field_, static_cast<std::int64_t>(a.field_.mul(a.value_, b.value_))};
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return {a.field_, static_cast<std::int64_t>(a.field_.div(a.value_, b.value_))};
}

Scalar scalar_arith(ScalarOp op, const Scalar& x, const Scalar* y) {
  switch (op) {
    case ScalarOp::Neg: return -x;
    case ScalarOp::Inv: return x.inv();
    case ScalarOp::Add:
    case ScalarOp::Mul:
      if (y == nullptr) fail(ErrorKind::PreconditionViolation, "binary scalar operation needs two operands");
      return op == ScalarOp::Add ? x + *y : x * *y;
  }
  fail(ErrorKind::PreconditionViolation, "unknown scalar operation");
}

}  // namespace contring
