#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lieconn {

// Library errors. The CLI maps usage/resource failures to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct CompositionNotZero : Error { using Error::Error; };
struct UnsupportedRing : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct TruncationTooShallow : Error { using Error::Error; };
struct ResourceCap : Error { using Error::Error; };

struct ParseError : Error {
  std::size_t position;
  std::string expected;
  ParseError(std::size_t pos, std::string exp, const std::string& msg)
      : Error(msg), position(pos), expected(std::move(exp)) {}
};

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Coefficient ring: the integers or a prime field Z/p.
struct RingSpec {
  enum class Kind : std::uint8_t { Integers, PrimeField };

  Kind kind = Kind::Integers;
  std::uint32_t p = 0;  // modulus, nonzero iff PrimeField

  static RingSpec integers() { return {}; }
  static RingSpec gf(std::uint32_t p) {
    if (!is_prime(p))
      throw UnsupportedRing("modulus " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
  }

  bool is_field() const { return kind == Kind::PrimeField; }
  bool is_f2() const { return kind == Kind::PrimeField && p == 2; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

  std::string name() const {
    return kind == Kind::Integers ? "Z" : "F" + std::to_string(p);
  }
};

}  // namespace lieconn
