// SPDX-License-Identifier: Apache-2.0

#include "qentail/eval.hpp"

#include <bit>

namespace qentail {

namespace {

std::int32_t eval_term(Env& env, const Term& t) {
  return t.is_var ? env.get(t.name) : static_cast<std::int32_t>(t.lit);
}

bool record_matches(EvalCtx& ctx, Env& env, int slot, const std::vector<Term>& rec) {
  for (std::size_t i = 0; i < rec.size(); ++i)
    if (ctx.store->rec[slot][i] != eval_term(env, rec[i])) return false;
  return true;
}

bool eval_ls(EvalCtx& ctx, Env& env, const Atom& a, std::uint32_t mask) {
  std::int32_t cur = eval_term(env, a.lhs);
  std::int32_t goal = eval_term(env, a.rhs);
  if (mask == 0) return cur == goal;
  std::uint32_t remaining = mask;
  int steps = std::popcount(mask);
  for (int i = 0; i < steps; ++i) {
    int idx = ctx.d->loc_index(cur);
    if (idx < 0 || !(remaining & (1u << idx))) return false;
    remaining &= ~(1u << idx);
    cur = ctx.store->rec[idx][0];
  }
  return remaining == 0 && cur == goal;
}

/* How a wand antecedent constrains the extension heaps. */
enum class ExtClass { AllHeaps, EmptyOnly, None, SingleCell, Filtered };

struct ExtShape {
  ExtClass cls = ExtClass::Filtered;
  int slot = -1;                           // SingleCell
  std::array<std::int32_t, kMaxRec> rec{};  // SingleCell
};

ExtShape classify_atom_antecedent(EvalCtx& ctx, Env& env, const Atom& a, std::uint32_t mask) {
  ExtShape s;
  switch (a.kind) {
    case AtomKind::True:
      s.cls = ExtClass::AllHeaps;
      return s;
    case AtomKind::Emp:
      s.cls = ExtClass::EmptyOnly;
      return s;
    case AtomKind::Eq:
      s.cls = eval_term(env, a.lhs) == eval_term(env, a.rhs) ? ExtClass::AllHeaps : ExtClass::None;
      return s;
    case AtomKind::Neq:
      s.cls = eval_term(env, a.lhs) != eval_term(env, a.rhs) ? ExtClass::AllHeaps : ExtClass::None;
      return s;
    case AtomKind::EqEmp:
      s.cls = eval_term(env, a.lhs) == eval_term(env, a.rhs) ? ExtClass::EmptyOnly : ExtClass::None;
      return s;
    case AtomKind::NeqEmp:
      s.cls = eval_term(env, a.lhs) != eval_term(env, a.rhs) ? ExtClass::EmptyOnly : ExtClass::None;
      return s;
    case AtomKind::PointsTo: {
      std::int32_t loc = eval_term(env, a.lhs);
      int idx = ctx.d->loc_index(loc);
      if (idx < 0 || (mask & (1u << idx))) {
        s.cls = ExtClass::None;
        return s;
      }
      for (std::size_t i = 0; i < a.record.size(); ++i) {
        std::int32_t v = eval_term(env, a.record[i]);
        if (!ctx.d->has_value(v)) {  // outside the bounded record universe
          s.cls = ExtClass::None;
          return s;
        }
        s.rec[i] = v;
      }
      s.cls = ExtClass::SingleCell;
      s.slot = idx;
      return s;
    }
    case AtomKind::Ls:
      s.cls = ExtClass::Filtered;
      return s;
  }
  return s;
}

/* Enumerates every heap h' disjoint from `mask` with |mask| + |h'| within
 * the cell budget, records drawn from the domain values. The store slots h'
 * occupies are saved and restored, since siblings of the current heap may
 * own them. `visit(ext_mask)` returns false to abort the enumeration. */
template <typename Visit>
bool for_each_extension(EvalCtx& ctx, std::uint32_t mask, Visit&& visit) {
  int budget = ctx.d->max_heap_cells - std::popcount(mask);
  std::uint32_t free = ctx.full_mask & ~mask;

  int slots[kMaxLocs];
  int nfree = 0;
  for (std::size_t i = 0; i < ctx.d->locations.size(); ++i)
    if (free & (1u << i)) slots[nfree++] = static_cast<int>(i);

  const auto& vals = ctx.d->values;
  int k = ctx.d->k;

  // subsets of the free slots, below the budget
  std::uint32_t nsub = std::uint32_t{1} << nfree;
  for (std::uint32_t sub = 0; sub < nsub; ++sub) {
    if (std::popcount(sub) > budget) continue;
    std::uint32_t ext_mask = 0;
    int chosen[kMaxLocs];
    int nchosen = 0;
    for (int i = 0; i < nfree; ++i)
      if (sub & (1u << i)) {
        chosen[nchosen++] = slots[i];
        ext_mask |= 1u << slots[i];
      }

    std::array<std::array<std::int32_t, kMaxRec>, kMaxLocs> saved;
    for (int c = 0; c < nchosen; ++c) saved[c] = ctx.store->rec[chosen[c]];

    // odometer over the chosen cells' records
    int counters[kMaxLocs * kMaxRec] = {0};
    int digits = nchosen * k;
    bool keep_going = true;
    while (keep_going) {
      for (int c = 0; c < nchosen; ++c)
        for (int f = 0; f < k; ++f)
          ctx.store->rec[chosen[c]][f] = vals[counters[c * k + f]];
      if (!visit(ext_mask)) {
        for (int c = 0; c < nchosen; ++c) ctx.store->rec[chosen[c]] = saved[c];
        return false;
      }
      int i = digits - 1;
      for (; i >= 0; --i) {
        if (++counters[i] < static_cast<int>(vals.size())) break;
        counters[i] = 0;
      }
      if (i < 0) keep_going = false;
      if (digits == 0) keep_going = false;
    }

    for (int c = 0; c < nchosen; ++c) ctx.store->rec[chosen[c]] = saved[c];
  }
  return true;
}

}  // namespace

bool eval_atom(EvalCtx& ctx, Env& env, const Atom& a, std::uint32_t mask) {
  switch (a.kind) {
    case AtomKind::True:
      return true;
    case AtomKind::Emp:
      return mask == 0;
    case AtomKind::Eq:
      return eval_term(env, a.lhs) == eval_term(env, a.rhs);
    case AtomKind::Neq:
      return eval_term(env, a.lhs) != eval_term(env, a.rhs);
    case AtomKind::EqEmp:
      return mask == 0 && eval_term(env, a.lhs) == eval_term(env, a.rhs);
    case AtomKind::NeqEmp:
      return mask == 0 && eval_term(env, a.lhs) != eval_term(env, a.rhs);
    case AtomKind::PointsTo: {
      std::int32_t loc = eval_term(env, a.lhs);
      int idx = ctx.d->loc_index(loc);
      if (idx < 0 || mask != (1u << idx)) return false;
      return record_matches(ctx, env, idx, a.record);
    }
    case AtomKind::Ls:
      return eval_ls(ctx, env, a, mask);
  }
  return false;
}

bool eval_sl(EvalCtx& ctx, Env& env, const SlFormula& f, std::uint32_t mask) {
  switch (f.tag) {
    case SlTag::Atom:
      return eval_atom(ctx, env, f.atom, mask);
    case SlTag::Not:
      return !eval_sl(ctx, env, *f.a, mask);
    case SlTag::And:
      return eval_sl(ctx, env, *f.a, mask) && eval_sl(ctx, env, *f.b, mask);
    case SlTag::Or:
      return eval_sl(ctx, env, *f.a, mask) || eval_sl(ctx, env, *f.b, mask);
    case SlTag::Exists: {
      for (auto v : ctx.d->values) {
        env.push(&f.var, v);
        bool ok = eval_sl(ctx, env, *f.a, mask);
        env.pop();
        if (ok) return true;
      }
      return false;
    }
    case SlTag::Forall: {
      for (auto v : ctx.d->values) {
        env.push(&f.var, v);
        bool ok = eval_sl(ctx, env, *f.a, mask);
        env.pop();
        if (!ok) return false;
      }
      return true;
    }
    case SlTag::Star: {
      std::uint32_t sub = mask;
      while (true) {
        if (eval_sl(ctx, env, *f.a, sub) && eval_sl(ctx, env, *f.b, mask & ~sub)) return true;
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      return false;
    }
    case SlTag::Wand: {
      ExtShape shape;
      if (f.a->tag == SlTag::Atom) {
        shape = classify_atom_antecedent(ctx, env, f.a->atom, mask);
      } else {
        shape.cls = ExtClass::Filtered;
      }
      switch (shape.cls) {
        case ExtClass::None:
          return true;
        case ExtClass::EmptyOnly:
          return eval_sl(ctx, env, *f.b, mask);
        case ExtClass::SingleCell: {
          int budget = ctx.d->max_heap_cells - std::popcount(mask);
          if (budget < 1) return true;
          auto saved = ctx.store->rec[shape.slot];
          ctx.store->rec[shape.slot] = shape.rec;
          bool ok = eval_sl(ctx, env, *f.b, mask | (1u << shape.slot));
          ctx.store->rec[shape.slot] = saved;
          return ok;
        }
        case ExtClass::AllHeaps:
          return for_each_extension(ctx, mask, [&](std::uint32_t ext) {
            if (ctx.stats) ++ctx.stats->wand_extensions;
            return eval_sl(ctx, env, *f.b, mask | ext);
          });
        case ExtClass::Filtered:
          return for_each_extension(ctx, mask, [&](std::uint32_t ext) {
            if (ctx.stats) ++ctx.stats->wand_extensions;
            if (!eval_sl(ctx, env, *f.a, ext)) return true;
            return eval_sl(ctx, env, *f.b, mask | ext);
          });
      }
      return true;
    }
  }
  return false;
}

Prob eval_qsl(EvalCtx& ctx, Env& env, const QslFormula& f, std::uint32_t mask) {
  switch (f.tag) {
    case QslTag::Iverson:
      return eval_atom(ctx, env, f.atom, mask) ? Prob::one() : Prob::zero();
    case QslTag::BoolChoice:
      return eval_atom(ctx, env, f.atom, mask) ? eval_qsl(ctx, env, *f.a, mask)
                                               : eval_qsl(ctx, env, *f.b, mask);
    case QslTag::ConvexSum:
      return Prob::convex(f.weight, eval_qsl(ctx, env, *f.a, mask),
                          eval_qsl(ctx, env, *f.b, mask));
    case QslTag::Mul: {
      Prob l = eval_qsl(ctx, env, *f.a, mask);
      if (l.is_zero()) return l;
      return l.times(eval_qsl(ctx, env, *f.b, mask));
    }
    case QslTag::OneMinus:
      return eval_qsl(ctx, env, *f.a, mask).complement();
    case QslTag::Max:
      return Prob::max(eval_qsl(ctx, env, *f.a, mask), eval_qsl(ctx, env, *f.b, mask));
    case QslTag::Min:
      return Prob::min(eval_qsl(ctx, env, *f.a, mask), eval_qsl(ctx, env, *f.b, mask));
    case QslTag::Sup: {
      Prob best = Prob::zero();
      for (auto v : ctx.d->values) {
        env.push(&f.var, v);
        Prob p = eval_qsl(ctx, env, *f.a, mask);
        env.pop();
        if (best < p) best = p;
        if (best.is_one()) break;
      }
      return best;
    }
    case QslTag::Inf: {
      Prob worst = Prob::one();
      for (auto v : ctx.d->values) {
        env.push(&f.var, v);
        Prob p = eval_qsl(ctx, env, *f.a, mask);
        env.pop();
        if (p < worst) worst = p;
        if (worst.is_zero()) break;
      }
      return worst;
    }
    case QslTag::Star: {
      // max over all 2^|dom(h)| splits; the left factor is evaluated first
      // and a zero skips the right one without skipping the split
      Prob best = Prob::zero();
      std::uint32_t sub = mask;
      while (true) {
        if (ctx.stats) ++ctx.stats->star_partitions;
        Prob l = eval_qsl(ctx, env, *f.a, sub);
        if (!l.is_zero()) {
          Prob p = l.times(eval_qsl(ctx, env, *f.b, mask & ~sub));
          if (best < p) best = p;
        }
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      return best;
    }
    case QslTag::Wand: {
      ExtShape shape = classify_atom_antecedent(ctx, env, f.atom, mask);
      switch (shape.cls) {
        case ExtClass::None:
          return Prob::one();  // inf over the empty set
        case ExtClass::EmptyOnly:
          return eval_qsl(ctx, env, *f.a, mask);
        case ExtClass::SingleCell: {
          int budget = ctx.d->max_heap_cells - std::popcount(mask);
          if (budget < 1) return Prob::one();
          auto saved = ctx.store->rec[shape.slot];
          ctx.store->rec[shape.slot] = shape.rec;
          Prob p = eval_qsl(ctx, env, *f.a, mask | (1u << shape.slot));
          ctx.store->rec[shape.slot] = saved;
          return p;
        }
        case ExtClass::AllHeaps:
        case ExtClass::Filtered: {
          bool filtered = shape.cls == ExtClass::Filtered;
          Prob worst = Prob::one();
          for_each_extension(ctx, mask, [&](std::uint32_t ext) {
            if (ctx.stats) ++ctx.stats->wand_extensions;
            if (filtered && !eval_atom(ctx, env, f.atom, ext)) return true;
            Prob p = eval_qsl(ctx, env, *f.a, mask | ext);
            if (p < worst) worst = std::move(p);
            return !worst.is_zero();
          });
          return worst;
        }
      }
      return Prob::one();
    }
  }
  return Prob::zero();
}

namespace {

struct StatePads {
  RecStore store;
  Env env;
  std::vector<std::string> names;  // owns pushed names
};

std::uint32_t load_concrete(const ConcreteState& st, const Domain& d, StatePads& pads) {
  d.validate();
  pads.names.reserve(st.stack.size());
  for (const auto& [name, v] : st.stack) {
    if (!d.has_value(v))
      throw EvalError("stack value " + std::to_string(v) + " outside the domain");
    pads.names.push_back(name);
  }
  for (std::size_t i = 0; i < st.stack.size(); ++i)
    pads.env.push(&pads.names[i], st.stack[i].second);
  std::uint32_t mask = 0;
  for (const auto& [loc, rec] : st.heap) {
    int idx = d.loc_index(loc);
    if (idx < 0) throw EvalError("heap location " + std::to_string(loc) + " outside the domain");
    if (mask & (1u << idx)) throw EvalError("duplicate heap location " + std::to_string(loc));
    if (static_cast<int>(rec.size()) != d.k) throw EvalError("heap record width mismatch");
    mask |= 1u << idx;
    for (int f = 0; f < d.k; ++f) pads.store.rec[idx][f] = rec[f];
  }
  if (static_cast<int>(st.heap.size()) > d.max_heap_cells)
    throw EvalError("heap exceeds max_heap_cells");
  return mask;
}

}  // namespace

bool eval_sl_state(const SlPtr& f, const ConcreteState& st, const Domain& d, EvalStats* stats) {
  StatePads pads;
  std::uint32_t mask = load_concrete(st, d, pads);
  EvalCtx ctx(d, pads.store, stats);
  return eval_sl(ctx, pads.env, *f, mask);
}

Prob eval_qsl_state(const QslPtr& f, const ConcreteState& st, const Domain& d, EvalStats* stats) {
  StatePads pads;
  std::uint32_t mask = load_concrete(st, d, pads);
  EvalCtx ctx(d, pads.store, stats);
  return eval_qsl(ctx, pads.env, *f, mask);
}

}  // namespace qentail
