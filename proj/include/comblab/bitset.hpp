#pragma once

#include <cstdint>
#include <vector>
#include <bit>
#include <compare>
#include <stdexcept>

namespace comblab {

/// Dynamic bitset over vertex indices 0..n-1. One 64-bit word covers the
/// target desk scale (n <= 32); larger n stays correct, just slower.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    check(v);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    check(v);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const VertexSet& o) const = default;
  auto operator<=>(const VertexSet& o) const {
    // lexicographic on member list: lowest differing vertex decides
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t d = words_[i] ^ o.words_[i];
      if (d) {
        int b = std::countr_zero(d);
        // set with the extra low vertex sorts first among equal prefixes
        return ((words_[i] >> b) & 1u) ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  /// Calls f(v) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
  }
  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }

private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace comblab
