#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hiveweb/error.hpp"

namespace hiveweb {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace detail

/// An exact element of (1/3)Z, stored as its numerator over 3.
class Third {
 public:
  constexpr Third() = default;

  static constexpr Third from_thirds(std::int64_t thirds) { return Third(thirds); }
  static Third from_integer(std::int64_t n) { return Third(detail::checked_mul(n, 3)); }

  constexpr std::int64_t thirds() const { return thirds_; }

  constexpr bool is_integer() const { return thirds_ % 3 == 0; }

  /// Integer value; only meaningful when is_integer().
  constexpr std::int64_t integer_part() const { return thirds_ / 3; }

  Third operator-() const { return Third(detail::checked_sub(0, thirds_)); }

  Third& operator+=(Third o) {
    thirds_ = detail::checked_add(thirds_, o.thirds_);
    return *this;
  }
  Third& operator-=(Third o) {
    thirds_ = detail::checked_sub(thirds_, o.thirds_);
    return *this;
  }

  friend Third operator+(Third a, Third b) { return a += b; }
  friend Third operator-(Third a, Third b) { return a -= b; }
  friend Third operator*(std::int64_t k, Third a) { return Third(detail::checked_mul(k, a.thirds_)); }

  friend constexpr auto operator<=>(Third, Third) = default;

  std::string to_string() const;

 private:
  constexpr explicit Third(std::int64_t thirds) : thirds_(thirds) {}

  std::int64_t thirds_ = 0;
};

constexpr Third max(Third a, Third b) { return a < b ? b : a; }
constexpr Third min(Third a, Third b) { return b < a ? b : a; }

inline bool is_integer(Third v) { return v.is_integer(); }

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

}  // namespace hiveweb
