#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "acg/permutation.hpp"

namespace acg {

/// Fixed-size bit set over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return size_; }
  bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  std::size_t intersection_count(const ElementSet& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return n;
  }
  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  ElementSet operator&(const ElementSet& other) const {
    ElementSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    return out;
  }
  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
  bool operator==(const ElementSet&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Multiplication table of a small group, indexed like PermGroup::elements().
/// Index 0 is the identity.
class CayleyTable {
 public:
  explicit CayleyTable(const std::vector<Permutation>& elements);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept { return mul_[std::size_t{x} * n_ + y]; }
  std::uint32_t inv(std::uint32_t x) const noexcept { return inv_[x]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const noexcept { return mul(mul(inv(g), x), g); }
  std::uint32_t comm(std::uint32_t a, std::uint32_t g) const noexcept {
    return mul(mul(inv(a), inv(g)), mul(a, g));
  }
  std::uint64_t order_of(std::uint32_t x) const noexcept { return orders_[x]; }
  const Permutation& element(std::uint32_t x) const noexcept { return elements_[x]; }
  std::optional<std::uint32_t> index_of(const Permutation& p) const;

  /// Smallest subgroup containing the given elements.
  ElementSet closure(std::span<const std::uint32_t> generators) const;
  ElementSet full() const;
  /// Elements of `set` converted to permutations, in index order.
  std::vector<Permutation> to_permutations(const ElementSet& set) const;

 private:
  std::size_t n_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint64_t> orders_;
};

}  // namespace acg
