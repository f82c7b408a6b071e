// Copyright 2026 The bpmax Authors.
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

#ifndef BPMAX_ELEMENT_SET_H_
#define BPMAX_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bpmax {

// Largest ground set an ElementSet can address.
inline constexpr int kMaxGroundSize = 64;
// Largest ground set for which the library enumerates all 2^n subsets.
inline constexpr int kMaxExhaustiveSize = 30;

// Raised when an exhaustive routine is asked to run beyond its size gate.
class ScaleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Throws ScaleLimitError if n > limit.
void RequireExhaustive(int n, int limit, const char* operation);

// A subset of {0, ..., n-1} stored as a bit mask. Equality is extensional.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> ids);

  static constexpr ElementSet FromBits(uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static ElementSet FromIds(std::span<const int> ids);
  // {0, ..., n-1}.
  static ElementSet Full(int n);

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const {
    return v >= 0 && v < kMaxGroundSize && ((bits_ >> v) & 1u) != 0;
  }
  // Largest member id + 1, 0 when empty.
  constexpr int extent() const { return 64 - std::countl_zero(bits_); }

  ElementSet With(int v) const;
  ElementSet Without(int v) const;

  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Sorted member ids.
  std::vector<int> Ids() const;
  // "{0,2,5}".
  std::string ToString() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return FromBits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return FromBits(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return FromBits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  // Calls fn(id) for every member in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

 private:
  uint64_t bits_ = 0;
};

// Lexicographic order on the sorted id sequences: {0,2} < {1}, {0} < {0,1}.
bool LexLess(ElementSet a, ElementSet b);

// Calls fn(subset) for every subset of `of`, including empty and `of`.
template <typename Fn>
void ForEachSubset(ElementSet of, Fn&& fn) {
  const uint64_t mask = of.bits();
  uint64_t sub = 0;
  while (true) {
    fn(ElementSet::FromBits(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace bpmax

#endif  // BPMAX_ELEMENT_SET_H_
