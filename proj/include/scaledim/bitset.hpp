#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace scaledim {

// Subset of {0, ..., n-1}, bit-packed. The universe size n is fixed at
// construction; binary operations require equal universes.
class BitSet {
 public:
  static constexpr std::size_t npos = ~std::size_t{0};

  BitSet() = default;
  explicit BitSet(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  static BitSet full(std::size_t universe) {
    BitSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static BitSet single(std::size_t universe, std::size_t i) {
    BitSet s(universe);
    s.set(i);
    return s;
  }

  std::size_t universe() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == size_; }

  bool is_subset_of(const BitSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const BitSet& o) const {
    return is_subset_of(o) && words_ != o.words_;
  }
  bool comparable_with(const BitSet& o) const {
    return is_subset_of(o) || o.is_subset_of(*this);
  }
  bool intersects(const BitSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  BitSet& operator&=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

  BitSet complement() const {
    BitSet r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  BitSet without(const BitSet& o) const {
    BitSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

  // Lectic order: compare at the smallest index where the sets differ; the
  // set containing that index is the larger one. Empty is smallest, the
  // full set largest.
  static bool lectic_less(const BitSet& a, const BitSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) {
        std::uint64_t lowest = d & (~d + 1);
        return (b.words_[i] & lowest) != 0;
      }
    }
    return false;
  }

  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ size_;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

struct BitSetLecticLess {
  bool operator()(const BitSet& a, const BitSet& b) const {
    return BitSet::lectic_less(a, b);
  }
};

}  // namespace scaledim
