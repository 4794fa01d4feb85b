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

#ifndef MATACT_ELEMENT_SET_HPP
#define MATACT_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "matact/errors.hpp"

namespace matact {

using Mask = std::uint64_t;

// Largest usable element label. Labels are small positive integers; the
// linear order on the ground set is always numeric label order.
inline constexpr int kMaxLabel = 62;

// A subset of element labels, stored as a bitmask (bit i <=> label i).
// Value type: cheap to copy, immutable in spirit, canonically sorted by
// construction.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<int> labels) {
    ElementSet s;
    for (int e : labels) s = s.with(e);
    return s;
  }

  static ElementSet from_labels(const std::vector<int>& labels) {
    ElementSet s;
    for (int e : labels) s = s.with(e);
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int label) const {
    return label >= 0 && label <= kMaxLabel && (bits_ >> label) & 1u;
  }

  // Smallest label; the set must be nonempty.
  int min() const {
    if (bits_ == 0) fail(ErrorCode::kEmptyGroundSet, "min() of empty set");
    return std::countr_zero(bits_);
  }

  int max() const {
    if (bits_ == 0) fail(ErrorCode::kEmptyGroundSet, "max() of empty set");
    return 63 - std::countl_zero(bits_);
  }

  ElementSet with(int label) const {
    check_label(label);
    return ElementSet(bits_ | (Mask{1} << label));
  }

  ElementSet without(int label) const {
    check_label(label);
    return ElementSet(bits_ & ~(Mask{1} << label));
  }

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  // Elements of this set strictly below `label`.
  constexpr ElementSet below(int label) const {
    return ElementSet(bits_ & ((Mask{1} << label) - 1));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) {
    return a.bits_ != b.bits_;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = bits_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  // Iterates labels in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(Mask m) : rest_(m) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    Mask rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static void check_label(int label) {
    if (label < 1 || label > kMaxLabel) {
      fail(ErrorCode::kElementOutsideGround,
           "element label out of range: " + std::to_string(label));
    }
  }

  Mask bits_ = 0;
};

// Renders a set: "0" (ASCII) or the empty-set glyph (unicode) when empty,
// concatenated digit labels when all labels are below 10 (the "356" style),
// comma-separated labels otherwise.
inline std::string set_text(ElementSet s, bool unicode = false) {
  if (s.empty()) return unicode ? "∅" : "0";
  std::string out;
  const bool digits = s.max() <= 9;
  bool first = true;
  for (int e : s) {
    if (!first && !digits) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out;
}

// Lexicographic order on the sorted label sequences (a proper prefix sorts
// first). This is the order used for displaying and sorting bases; it is not
// the numeric order of the underlying masks.
inline bool lex_less(ElementSet a, ElementSet b) {
  Mask x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int ea = std::countr_zero(x), eb = std::countr_zero(y);
    if (ea != eb) return ea < eb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

// The linearly ordered ground set: distinct positive labels, ordered
// numerically.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(const std::vector<int>& labels) {
    for (int e : labels) {
      if (e < 1 || e > kMaxLabel) {
        fail(ErrorCode::kElementOutsideGround,
             "ground label out of range: " + std::to_string(e));
      }
      if (all_.contains(e)) {
        fail(ErrorCode::kElementOutsideGround,
             "duplicate ground label: " + std::to_string(e));
      }
      all_ = all_.with(e);
    }
  }

  explicit GroundSet(ElementSet all) : all_(all) {}

  static GroundSet first_n(int n) {
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int e = 1; e <= n; ++e) labels.push_back(e);
    return GroundSet(labels);
  }

  ElementSet all() const { return all_; }
  int size() const { return all_.size(); }
  bool empty() const { return all_.empty(); }
  bool contains(int label) const { return all_.contains(label); }
  bool contains(ElementSet s) const { return s.subset_of(all_); }
  std::vector<int> labels() const { return all_.labels(); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.all_ == b.all_;
  }

 private:
  ElementSet all_;
};

}  // namespace matact

#endif  // MATACT_ELEMENT_SET_HPP
