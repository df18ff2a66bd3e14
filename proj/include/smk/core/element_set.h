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

#ifndef SMK_CORE_ELEMENT_SET_H_
#define SMK_CORE_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace smk {

// Dense index of one ground-set element, 0 <= id < n.
using ElementId = std::uint32_t;

// An ordered set of distinct elements. Insertion order is preserved because
// the algorithms care about prefixes ("the first i elements added").
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  explicit ElementSet(std::span<const ElementId> ids);

  // Returns false (and leaves the set unchanged) if `e` is already present.
  bool Insert(ElementId e);
  // Appends every member of `other` not already present, in `other`'s order.
  void InsertAll(const ElementSet& other);
  void InsertAll(std::span<const ElementId> ids);

  bool Contains(ElementId e) const {
    return e < mask_.size() && mask_[e];
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::span<const ElementId> members() const { return members_; }
  ElementId operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // First `count` members in insertion order.
  ElementSet Prefix(std::size_t count) const;
  // Members in ascending id order.
  std::vector<ElementId> Sorted() const;

  // Largest id plus one, 0 for the empty set.
  std::size_t Extent() const;

  // Set equality, ignoring order.
  bool SameMembers(const ElementSet& other) const;
  // Same members in the same order.
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<ElementId> members_;
  std::vector<bool> mask_;
};

ElementSet Union(const ElementSet& a, const ElementSet& b);
ElementSet Difference(const ElementSet& a, const ElementSet& b);
bool Disjoint(const ElementSet& a, const ElementSet& b);
bool IsSubset(const ElementSet& a, const ElementSet& b);

}  // namespace smk

#endif  // SMK_CORE_ELEMENT_SET_H_
