#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace witt {

/// Coefficient ring for (co)homology: Z, Q, or a prime field F_p.
class CoefficientSpec {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientSpec integers() { return CoefficientSpec(Kind::Integers, 0); }
  static CoefficientSpec rationals() { return CoefficientSpec(Kind::Rationals, 0); }
  /// Throws ValidationError unless p is prime.
  static CoefficientSpec prime_field(std::uint32_t p);
  static CoefficientSpec f2() { return prime_field(2); }
  /// Accepts "z", "q", "f2", "f3", "f<p>".
  static CoefficientSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t prime() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  bool is_f2() const { return kind_ == Kind::PrimeField && p_ == 2; }
  std::string name() const;

  friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;

 private:
  CoefficientSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p, values kept in [0, p).
struct PrimeField {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p);
  }
  value_type inv(value_type a) const {
    // a^(p-2)
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  std::int64_t to_int(value_type a) const { return a; }
};

/// Exact rational arithmetic (GMP).
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

/// Calls fn(field) with the concrete field for a field spec.
template <class Fn>
decltype(auto) with_field(const CoefficientSpec& spec, Fn&& fn) {
  if (spec.kind() == CoefficientSpec::Kind::Rationals) return fn(RationalField{});
  return fn(PrimeField{spec.prime()});
}

}  // namespace witt
