// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESCERT_INDEX_SET_HPP_
#define RESCERT_INDEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace rescert {

inline constexpr std::size_t kMaxHyperplanes = 64;

/// Set of hyperplane indices, backed by a 64-bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> members) {
    for (auto i : members) insert(i);
  }
  static constexpr IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    s.bits_ = mask;
    return s;
  }
  /// {0, ..., n-1}.
  static constexpr IndexSet range(std::size_t n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t first() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return from_mask(a.bits_ | b.bits_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) {
    return from_mask(a.bits_ & b.bits_);
  }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) {
    return from_mask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  /// Orders by size, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.members() <=> b.members();
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace rescert

template <>
struct std::hash<rescert::IndexSet> {
  std::size_t operator()(rescert::IndexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask());
  }
};

#endif  // RESCERT_INDEX_SET_HPP_
