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

#include "smk/core/element_set.h"

#include <algorithm>

namespace smk {

ElementSet::ElementSet(std::initializer_list<ElementId> ids) {
  for (ElementId e : ids) Insert(e);
}

ElementSet::ElementSet(std::span<const ElementId> ids) { InsertAll(ids); }

bool ElementSet::Insert(ElementId e) {
  if (Contains(e)) return false;
  if (e >= mask_.size()) mask_.resize(std::max<std::size_t>(e + 1, 2 * mask_.size()));
  mask_[e] = true;
  members_.push_back(e);
  return true;
}

void ElementSet::InsertAll(const ElementSet& other) { InsertAll(other.members()); }

void ElementSet::InsertAll(std::span<const ElementId> ids) {
  for (ElementId e : ids) Insert(e);
}

ElementSet ElementSet::Prefix(std::size_t count) const {
  count = std::min(count, members_.size());
  return ElementSet(std::span<const ElementId>(members_.data(), count));
}

std::vector<ElementId> ElementSet::Sorted() const {
  std::vector<ElementId> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::size_t ElementSet::Extent() const {
  if (members_.empty()) return 0;
  return *std::max_element(members_.begin(), members_.end()) + 1;
}

bool ElementSet::SameMembers(const ElementSet& other) const {
  if (size() != other.size()) return false;
  for (ElementId e : members_) {
    if (!other.Contains(e)) return false;
  }
  return true;
}

ElementSet Union(const ElementSet& a, const ElementSet& b) {
  ElementSet out = a;
  out.InsertAll(b);
  return out;
}

ElementSet Difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (ElementId e : a) {
    if (!b.Contains(e)) out.Insert(e);
  }
  return out;
}

bool Disjoint(const ElementSet& a, const ElementSet& b) {
  const ElementSet& small = a.size() <= b.size() ? a : b;
  const ElementSet& large = a.size() <= b.size() ? b : a;
  return std::none_of(small.begin(), small.end(),
                      [&](ElementId e) { return large.Contains(e); });
}

bool IsSubset(const ElementSet& a, const ElementSet& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](ElementId e) { return b.Contains(e); });
}

}  // namespace smk
