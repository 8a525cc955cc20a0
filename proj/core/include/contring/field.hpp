#pragma once

#include <cstdint>
#include <ostream>

namespace contring {

// Canonical representative of a residue class, always in [0, p).
using Elem = std::uint32_t;

/// The prime field GF(p), 2 <= p < 2^16. Primality is checked on construction.
class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t size() const noexcept { return p_; }

  Elem reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = x % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
  }
  Elem reduce_u64(std::uint64_t x) const noexcept { return static_cast<Elem>(x % p_); }

  Elem add(Elem a, Elem b) const noexcept {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws Error{DivisionByZero} on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Smallest generator of the multiplicative group.
  Elem primitive_root() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A field element bundled with its field, for the scalar-level API.
class Scalar {
 public:
  Scalar(Field field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  Scalar inv() const { return {field_, static_cast<std::int64_t>(field_.inv(value_))}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a) { return {a.field_, static_cast<std::int64_t>(a.field_.neg(a.value_))}; }
  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.value_; }

 private:
  Field field_;
  Elem value_;
};

enum class ScalarOp { Add, Mul, Neg, Inv };

/// Single entry point mirroring the four primitive field operations; `y` is
/// only read for the binary ones.
Scalar scalar_arith(ScalarOp op, const Scalar& x, const Scalar* y = nullptr);

}  // namespace contring
