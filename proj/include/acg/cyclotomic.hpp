#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acg {

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned m);

std::uint64_t euler_phi(std::uint64_t n);

/// An element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1),
/// reduced modulo the m-th cyclotomic polynomial. The representation is
/// canonical, so equality and zero tests are exact.
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned conductor = 1);

  static Cyclotomic integer(unsigned conductor, std::int64_t value);
  /// zeta^k.
  static Cyclotomic root_power(unsigned conductor, std::int64_t k);
  /// sum_i weights[i] * zeta^i for i < weights.size().
  static Cyclotomic from_exponent_weights(unsigned conductor, std::span<const std::int64_t> weights);
  /// Parses the export form produced by to_string().
  static Cyclotomic parse(unsigned conductor, std::string_view text);

  unsigned conductor() const noexcept { return conductor_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_integer() const noexcept;
  /// Throws InternalError if the value is not a rational integer.
  std::int64_t to_integer() const;

  /// Complex conjugate: zeta -> zeta^-1.
  Cyclotomic conjugate() const;

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic& operator+=(const Cyclotomic& other);

  bool operator==(const Cyclotomic&) const = default;

  /// "c0+c1*z^1+..." listing c0 and every nonzero higher coefficient.
  std::string to_string() const;

 private:
  static Cyclotomic reduce(unsigned conductor, std::vector<std::int64_t> poly);
  unsigned conductor_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace acg
