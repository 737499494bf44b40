#include "acg/cyclotomic.hpp"

#include <charconv>
#include <map>
#include <mutex>

#include "acg/errors.hpp"

namespace acg {

namespace {

void require_same_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    throw PreconditionError("cyclotomic conductors differ: " + std::to_string(a.conductor()) + " vs " +
                            std::to_string(b.conductor()));
  }
}

// Exact division by a monic polynomial; returns the quotient.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  std::vector<std::int64_t> quotient(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quotient[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quotient;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, for divisors d of m in
  // increasing order; every e is then already cached.
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (unsigned e = 1; e < d; ++e) {
      if (d % e == 0) poly = divide_monic(poly, cache.at(e));
    }
    cache.emplace(d, std::move(poly));
  }
  return cache.at(m);
}

Cyclotomic::Cyclotomic(unsigned conductor) : conductor_(conductor) {
  if (conductor == 0) throw PreconditionError("cyclotomic conductor must be positive");
  coeffs_.assign(euler_phi(conductor), 0);
}

Cyclotomic Cyclotomic::reduce(unsigned conductor, std::vector<std::int64_t> poly) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    std::int64_t c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, 0);
  Cyclotomic result(conductor);
  result.coeffs_ = std::move(poly);
  return result;
}

Cyclotomic Cyclotomic::integer(unsigned conductor, std::int64_t value) {
  Cyclotomic result(conductor);
  result.coeffs_[0] = value;
  return result;
}

Cyclotomic Cyclotomic::root_power(unsigned conductor, std::int64_t k) {
  auto m = static_cast<std::int64_t>(conductor);
  std::vector<std::int64_t> poly(conductor, 0);
  poly[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return reduce(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::from_exponent_weights(unsigned conductor, std::span<const std::int64_t> weights) {
  std::vector<std::int64_t> poly(std::max<std::size_t>(conductor, weights.size()), 0);
  for (std::size_t i = 0; i < weights.size(); ++i) poly[i % conductor] += weights[i];
  return reduce(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::parse(unsigned conductor, std::string_view text) {
  std::vector<std::int64_t> poly(conductor, 0);
  std::size_t pos = 0;
  auto parse_int = [&](std::int64_t& out) {
    auto res = std::from_chars(text.data() + pos, text.data() + text.size(), out);
    if (res.ec != std::errc()) throw ParseError("expected integer coefficient", pos);
    pos = static_cast<std::size_t>(res.ptr - text.data());
  };
  bool first = true;
  while (pos < text.size()) {
    if (!first) {
      if (text[pos] != '+') throw ParseError("expected '+'", pos);
      ++pos;
    }
    std::int64_t coeff = 0;
    parse_int(coeff);
    std::int64_t exp = 0;
    if (text.substr(pos, 3) == "*z^") {
      pos += 3;
      parse_int(exp);
    }
    if (exp < 0 || exp >= static_cast<std::int64_t>(conductor)) throw ParseError("exponent out of range", pos);
    poly[static_cast<std::size_t>(exp)] += coeff;
    first = false;
  }
  return reduce(conductor, std::move(poly));
}

bool Cyclotomic::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_integer() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::int64_t Cyclotomic::to_integer() const {
  if (!is_integer()) throw InternalError("cyclotomic value " + to_string() + " is not an integer");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<std::int64_t> poly(conductor_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    poly[(conductor_ - i) % conductor_] += coeffs_[i];
  }
  return reduce(conductor_, std::move(poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  Cyclotomic r = *this;
  r += other;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_conductor(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
  require_same_conductor(*this, other);
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= other.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  require_same_conductor(*this, other);
  std::vector<std::int64_t> poly(coeffs_.size() * 2, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) poly[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return reduce(conductor_, std::move(poly));
}

std::string Cyclotomic::to_string() const {
  std::string out = std::to_string(coeffs_[0]);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += "+" + std::to_string(coeffs_[i]) + "*z^" + std::to_string(i);
  }
  return out;
}

}  // namespace acg
