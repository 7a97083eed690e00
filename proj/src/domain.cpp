// SPDX-License-Identifier: Apache-2.0

#include "qentail/domain.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qentail {

Domain Domain::defaults() {
  Domain d;
  d.values = {0, 1, 2, 3};
  d.locations = {1, 2, 3};
  d.max_heap_cells = 3;
  d.k = 1;
  return d;
}

void Domain::validate() const {
  auto sorted_unique = [](const std::vector<std::int32_t>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (values.empty()) throw std::invalid_argument("domain: values must be nonempty");
  if (locations.empty()) throw std::invalid_argument("domain: locations must be nonempty");
  if (!sorted_unique(values) || !sorted_unique(locations))
    throw std::invalid_argument("domain: values/locations must be sorted and unique");
  if (locations.size() > kMaxLocs)
    throw std::invalid_argument("domain: at most " + std::to_string(kMaxLocs) + " locations");
  if (k < 1 || k > kMaxRec)
    throw std::invalid_argument("domain: k must be in [1," + std::to_string(kMaxRec) + "]");
  if (max_heap_cells < 0) throw std::invalid_argument("domain: max_heap_cells < 0");
  for (auto l : locations) {
    if (l <= 0) throw std::invalid_argument("domain: locations must be positive");
    if (!std::binary_search(values.begin(), values.end(), l))
      throw std::invalid_argument("domain: locations must be a subset of values");
  }
}

std::string to_string(const ConcreteState& st) {
  std::string s = "stack{";
  for (std::size_t i = 0; i < st.stack.size(); ++i) {
    if (i) s += ", ";
    s += st.stack[i].first + "=" + std::to_string(st.stack[i].second);
  }
  s += "} heap{";
  for (std::size_t i = 0; i < st.heap.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(st.heap[i].first) + "->";
    if (st.heap[i].second.size() == 1) {
      s += std::to_string(st.heap[i].second[0]);
    } else {
      s += "(";
      for (std::size_t j = 0; j < st.heap[i].second.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(st.heap[i].second[j]);
      }
      s += ")";
    }
  }
  return s + "}";
}

StateSpace::StateSpace(std::vector<std::string> vars, const Domain& d)
    : vars_(std::move(vars)), d_(d) {
  d_.validate();
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());

  std::uint64_t v = d_.values.size();
  for (std::size_t i = 0; i < vars_.size(); ++i) stack_count_ *= v;

  std::uint64_t full = std::uint64_t{1} << d_.locations.size();
  std::uint64_t rec_per_cell = 1;
  for (int i = 0; i < d_.k; ++i) rec_per_cell *= v;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (std::popcount(mask) > d_.max_heap_cells) continue;
    masks_.push_back(mask);
    heap_prefix_.push_back(heap_count_);
    std::uint64_t cnt = 1;
    for (int i = 0; i < std::popcount(mask); ++i) cnt *= rec_per_cell;
    heap_count_ += cnt;
  }
  total_ = stack_count_ * heap_count_;
}

void StateSpace::decode(std::uint64_t idx, std::vector<std::int32_t>& stack_vals,
                        std::uint32_t& mask, RecStore& store) const {
  std::uint64_t heap_idx = idx % heap_count_;
  std::uint64_t stack_idx = idx / heap_count_;

  stack_vals.resize(vars_.size());
  std::uint64_t v = d_.values.size();
  // first variable is the most significant digit
  for (std::size_t i = vars_.size(); i-- > 0;) {
    stack_vals[i] = d_.values[stack_idx % v];
    stack_idx /= v;
  }

  auto it = std::upper_bound(heap_prefix_.begin(), heap_prefix_.end(), heap_idx);
  std::size_t mi = static_cast<std::size_t>(it - heap_prefix_.begin()) - 1;
  mask = masks_[mi];
  std::uint64_t rec_idx = heap_idx - heap_prefix_[mi];

  // record fields, last field of the last cell least significant
  int cells[kMaxLocs];
  int n = 0;
  for (std::size_t i = 0; i < d_.locations.size(); ++i)
    if (mask & (1u << i)) cells[n++] = static_cast<int>(i);
  for (int c = n; c-- > 0;) {
    for (int f = d_.k; f-- > 0;) {
      store.rec[cells[c]][f] = d_.values[rec_idx % v];
      rec_idx /= v;
    }
  }
}

ConcreteState StateSpace::concrete(std::uint64_t idx) const {
  std::vector<std::int32_t> sv;
  std::uint32_t mask = 0;
  RecStore store;
  decode(idx, sv, mask, store);
  ConcreteState st;
  for (std::size_t i = 0; i < vars_.size(); ++i) st.stack.emplace_back(vars_[i], sv[i]);
  for (std::size_t i = 0; i < d_.locations.size(); ++i) {
    if (mask & (1u << i)) {
      std::vector<std::int32_t> rec(store.rec[i].begin(), store.rec[i].begin() + d_.k);
      st.heap.emplace_back(d_.locations[i], std::move(rec));
    }
  }
  return st;
}

}  // namespace qentail
