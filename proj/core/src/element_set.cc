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

#include "bpmax/element_set.h"

#include <sstream>

namespace bpmax {

void RequireExhaustive(int n, int limit, const char* operation) {
  if (n > limit) {
    throw ScaleLimitError(std::string(operation) + ": ground set of size " +
                          std::to_string(n) + " exceeds exhaustive limit " +
                          std::to_string(limit));
  }
}

namespace {

void CheckId(int v) {
  if (v < 0 || v >= kMaxGroundSize) {
    throw std::out_of_range("element id " + std::to_string(v) +
                            " outside [0, 64)");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> ids) {
  for (int v : ids) {
    CheckId(v);
    bits_ |= uint64_t{1} << v;
  }
}

ElementSet ElementSet::FromIds(std::span<const int> ids) {
  ElementSet s;
  for (int v : ids) {
    CheckId(v);
    s.bits_ |= uint64_t{1} << v;
  }
  return s;
}

ElementSet ElementSet::Full(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::out_of_range("ground set size " + std::to_string(n));
  }
  return FromBits(n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
}

ElementSet ElementSet::With(int v) const {
  CheckId(v);
  return FromBits(bits_ | (uint64_t{1} << v));
}

ElementSet ElementSet::Without(int v) const {
  CheckId(v);
  return FromBits(bits_ & ~(uint64_t{1} << v));
}

std::vector<int> ElementSet::Ids() const {
  std::vector<int> ids;
  ids.reserve(size());
  ForEach([&](int v) { ids.push_back(v); });
  return ids;
}

std::string ElementSet::ToString() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  ForEach([&](int v) {
    if (!first) out << ',';
    out << v;
    first = false;
  });
  out << '}';
  return out.str();
}

bool LexLess(ElementSet a, ElementSet b) {
  const uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  // Both sequences agree below x; the one holding x continues with x, the
  // other either continues with something larger or has ended.
  const uint64_t above = x == 63 ? 0 : ~((uint64_t{1} << (x + 1)) - 1);
  if (a.contains(x)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

}  // namespace bpmax
