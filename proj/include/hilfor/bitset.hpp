#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

#include "hilfor/error.hpp"

namespace hilfor {

// Subset of a fixed finite universe, packed into 64-bit words.
// All binary operations expect both operands to share the universe size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw InputError("negative bitset universe");
  }

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Complement within the universe.
  Bitset complement() const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  // this minus o.
  Bitset minus(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> r;
    for (int i = next(0); i >= 0; i = next(i + 1)) r.push_back(i);
    return r;
  }

  // Smallest member >= from, or -1.
  int next(int from) const {
    if (from < 0) from = 0;
    for (int b = from >> 6; b < static_cast<int>(w_.size()); ++b) {
      std::uint64_t w = w_[b];
      if (b == from >> 6) w &= ~std::uint64_t{0} << (from & 63);
      if (w) return b * 64 + std::countr_zero(w);
    }
    return -1;
  }

  // Numeric comparison, treating the set as a binary number with bit 0 least
  // significant. Used only to give families a deterministic order.
  bool value_less(const Bitset& o) const {
    for (int i = static_cast<int>(w_.size()) - 1; i >= 0; --i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto w : w_) h = h * 1099511628211ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    if (w_.empty()) return;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Deterministic order: fewer elements first, then by numeric value.
inline bool size_value_less(const Bitset& a, const Bitset& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.value_less(b);
}

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace hilfor
