#include "acg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "acg/errors.hpp"

namespace acg {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("degree mismatch: " + std::to_string(p.degree()) +
                         " vs " + std::to_string(q.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point img : images) {
    if (img >= images.size() || seen[img]) {
      throw PreconditionError("image table is not a bijection");
    }
    seen[img] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  require_same_degree(*this, other);
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[i] = other.images_[images_[i]];
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                  : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles()) {
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point img : p.images()) {
    h ^= img;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
        ++pos;
      }
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      }
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) throw ParseError("point out of range", start);
        ++pos;
      }
      if (value == 0) throw ParseError("point out of range", start);
      Point point = static_cast<Point>(value - 1);
      if (used[point]) throw ParseError("repeated point " + std::to_string(value), start);
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation conjugate(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g);
  return g.inverse() * x * g;
}

Permutation commutator(const Permutation& a, const Permutation& g) {
  require_same_degree(a, g);
  return a.inverse() * g.inverse() * a * g;
}

std::string to_string(const std::vector<Permutation>& perms) {
  std::string out = "[";
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i > 0) out += ", ";
    out += perms[i].to_string();
  }
  return out + "]";
}

}  // namespace acg
