#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sbrace {

using Elem = std::uint32_t;

// Bitset over the index range [0, universe).
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe);
  static Subset singleton(std::size_t universe, Elem x);
  static Subset of(std::size_t universe, std::span<const Elem> elems);

  std::size_t universe() const { return n_; }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  std::size_t size() const;
  bool is_subset_of(const Subset& other) const;
  bool is_full() const { return size() == n_; }
  bool is_trivial() const { return size() == 1 && contains(0); }
  std::vector<Elem> elements() const;

  Subset operator&(const Subset& o) const;
  Subset operator|(const Subset& o) const;
  bool operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sbrace
