// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_DOMAIN_HPP
#define QENTAIL_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qentail {

// Hard caps on the bounded universe; Domain::validate enforces them.
constexpr int kMaxLocs = 16;
constexpr int kMaxRec = 4;

/* Finite stand-in for the paper-level infinite value and location sets.
 * Everything the oracle reports is relative to one of these; a "holds"
 * verdict certifies the bounded universe only. */
struct Domain {
  std::vector<std::int32_t> values;     // sorted, unique
  std::vector<std::int32_t> locations;  // sorted, unique, positive, subset of values
  int max_heap_cells = 3;
  int k = 1;

  static Domain defaults();  // values {0..3}, locations {1..3}, 3 cells, k = 1

  void validate() const;  // throws std::invalid_argument on a bad universe

  int loc_index(std::int32_t loc) const {  // -1 when loc is not a location
    for (std::size_t i = 0; i < locations.size(); ++i)
      if (locations[i] == loc) return static_cast<int>(i);
    return -1;
  }
  bool has_value(std::int32_t v) const {
    for (auto x : values)
      if (x == v) return true;
    return false;
  }
};

/* One record store shared by every heap arising while evaluating a single
 * state: a heap is just a bitmask over the domain's location slots, so heap
 * splits reuse the store and heap extensions write and later clear slots. */
struct RecStore {
  std::array<std::array<std::int32_t, kMaxRec>, kMaxLocs> rec{};
};

/* A concrete program state in portable form, used at API boundaries
 * (counterexamples, JSON serialization); the evaluator works on the packed
 * mask/store representation instead. */
struct ConcreteState {
  std::vector<std::pair<std::string, std::int32_t>> stack;  // sorted by name
  std::vector<std::pair<std::int32_t, std::vector<std::int32_t>>> heap;  // sorted by location
};

std::string to_string(const ConcreteState& st);

/* Deterministic enumeration of all states over `vars`: stacks ordered
 * lexicographically by variable name then value, heaps by location-subset
 * mask then record tuples. Random access by index keeps the sweep trivially
 * parallel. */
class StateSpace {
public:
  StateSpace(std::vector<std::string> vars, const Domain& d);

  std::uint64_t size() const { return total_; }
  std::uint64_t stack_count() const { return stack_count_; }
  std::uint64_t heap_count() const { return heap_count_; }

  // Decodes state #idx into stack values (aligned with vars()), a heap mask
  // and the record store.
  void decode(std::uint64_t idx, std::vector<std::int32_t>& stack_vals,
              std::uint32_t& mask, RecStore& store) const;

  ConcreteState concrete(std::uint64_t idx) const;

  const std::vector<std::string>& vars() const { return vars_; }
  const Domain& domain() const { return d_; }

private:
  std::vector<std::string> vars_;
  Domain d_;
  std::vector<std::uint32_t> masks_;          // admissible heap domains
  std::vector<std::uint64_t> heap_prefix_;    // heaps preceding masks_[i]
  std::uint64_t stack_count_ = 1, heap_count_ = 0, total_ = 0;
};

}  // namespace qentail

#endif
