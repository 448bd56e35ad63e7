#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

#include "chaindec/error.hpp"

namespace chaindec {

// Ordered set of vertex labels, stored as a bitmap indexed by label.
// Iteration is always in ascending label order, which is what makes every
// "smallest label" choice in the library deterministic.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    VertexId operator*() const { return static_cast<VertexId>(word_ * 64 + std::countr_zero(bits_)); }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.word_ == b.word_ && a.bits_ == b.bits_;
    }

   private:
    friend class VertexSet;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t word)
        : words_(words), word_(word), bits_(word < words->size() ? (*words)[word] : 0) {
      advance();
    }
    void advance() {
      while (bits_ == 0 && word_ < words_->size()) {
        ++word_;
        bits_ = word_ < words_->size() ? (*words_)[word_] : 0;
      }
    }

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> labels);
  template <typename It>
  VertexSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<VertexId>(*first));
  }

  // {first, ..., last}; empty when first > last.
  static VertexSet interval(VertexId first, VertexId last);

  bool contains(VertexId v) const noexcept {
    const std::size_t w = v / 64;
    return w < words_.size() && ((words_[w] >> (v % 64)) & 1U) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v) noexcept;

  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept;
  // Smallest label; the set must be nonempty.
  VertexId front() const;
  VertexId back() const;

  const_iterator begin() const { return const_iterator(&words_, 0); }
  const_iterator end() const { return const_iterator(&words_, words_.size()); }

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic comparison of the ascending label sequences.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

 private:
  void trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  // Invariant: no trailing zero words, so defaulted equality is set equality.
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace chaindec
