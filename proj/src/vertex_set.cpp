#include "chaindec/vertex_set.hpp"

#include <algorithm>
#include <ostream>

namespace chaindec {

VertexSet::VertexSet(std::initializer_list<VertexId> labels) {
  for (VertexId v : labels) insert(v);
}

VertexSet VertexSet::interval(VertexId first, VertexId last) {
  VertexSet s;
  for (VertexId v = first; v <= last && first <= last; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  const std::size_t w = v / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(VertexId v) noexcept {
  const std::size_t w = v / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v % 64));
  trim();
}

std::size_t VertexSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

VertexId VertexSet::front() const {
  if (empty()) throw Error(ErrorCode::InvalidArgument, "front() of an empty vertex set");
  return *begin();
}

VertexId VertexSet::back() const {
  if (empty()) throw Error(ErrorCode::InvalidArgument, "back() of an empty vertex set");
  const std::size_t w = words_.size() - 1;
  return static_cast<VertexId>(w * 64 + 63 - std::countl_zero(words_[w]));
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (VertexId v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace chaindec
