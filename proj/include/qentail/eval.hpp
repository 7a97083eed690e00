// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_EVAL_HPP
#define QENTAIL_EVAL_HPP

#include <stdexcept>
#include <vector>

#include "qentail/domain.hpp"
#include "qentail/prob.hpp"
#include "qentail/qsl.hpp"
#include "qentail/sl.hpp"

namespace qentail {

class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EvalStats {
  std::uint64_t star_partitions = 0;  // quantitative star, one per split tried
  std::uint64_t wand_extensions = 0;
};

/* Mutable variable environment used during one evaluation. Names are stored
 * by pointer; the formula and state space own them for the whole sweep.
 * Shadowing works by reverse scan. */
class Env {
public:
  void push(const std::string* name, std::int32_t v) { slots_.emplace_back(name, v); }
  void pop() { slots_.pop_back(); }
  void set_back_value(std::size_t i, std::int32_t v) { slots_[i].second = v; }
  std::size_t size() const { return slots_.size(); }

  std::int32_t get(const std::string& name) const {
    for (std::size_t i = slots_.size(); i-- > 0;)
      if (*slots_[i].first == name) return slots_[i].second;
    throw EvalError("unbound variable: " + name);
  }

private:
  std::vector<std::pair<const std::string*, std::int32_t>> slots_;
};

struct EvalCtx {
  const Domain* d;
  RecStore* store;
  std::uint32_t full_mask;
  EvalStats* stats = nullptr;

  EvalCtx(const Domain& dom, RecStore& s, EvalStats* st = nullptr)
      : d(&dom), store(&s),
        full_mask((std::uint32_t{1} << dom.locations.size()) - 1), stats(st) {}
};

// Core evaluators on the packed heap representation. Quantifiers and wand
// extensions range over the bounded domain; inf over an empty extension set
// is 1.
bool eval_sl(EvalCtx& ctx, Env& env, const SlFormula& f, std::uint32_t mask);
Prob eval_qsl(EvalCtx& ctx, Env& env, const QslFormula& f, std::uint32_t mask);
bool eval_atom(EvalCtx& ctx, Env& env, const Atom& a, std::uint32_t mask);

// Convenience entry points on a concrete state (validates the state against
// the domain and that free variables are bound).
bool eval_sl_state(const SlPtr& f, const ConcreteState& st, const Domain& d,
                   EvalStats* stats = nullptr);
Prob eval_qsl_state(const QslPtr& f, const ConcreteState& st, const Domain& d,
                    EvalStats* stats = nullptr);

}  // namespace qentail

#endif
