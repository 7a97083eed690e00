// SPDX-License-Identifier: Apache-2.0

#include "qentail/sl.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

namespace qentail {

static SlPtr mk(SlTag tag, Atom atom, std::string var, SlPtr a, SlPtr b) {
  auto n = std::make_shared<SlFormula>();
  n->tag = tag;
  n->atom = std::move(atom);
  n->var = std::move(var);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

SlPtr sl_atom(Atom a) { return mk(SlTag::Atom, std::move(a), {}, nullptr, nullptr); }
SlPtr sl_true() { return sl_atom(Atom::mk_true()); }
SlPtr sl_not(SlPtr a) { return mk(SlTag::Not, {}, {}, std::move(a), nullptr); }
SlPtr sl_and(SlPtr a, SlPtr b) { return mk(SlTag::And, {}, {}, std::move(a), std::move(b)); }
SlPtr sl_or(SlPtr a, SlPtr b) { return mk(SlTag::Or, {}, {}, std::move(a), std::move(b)); }
SlPtr sl_exists(std::string x, SlPtr a) { return mk(SlTag::Exists, {}, std::move(x), std::move(a), nullptr); }
SlPtr sl_forall(std::string x, SlPtr a) { return mk(SlTag::Forall, {}, std::move(x), std::move(a), nullptr); }
SlPtr sl_star(SlPtr a, SlPtr b) { return mk(SlTag::Star, {}, {}, std::move(a), std::move(b)); }
SlPtr sl_wand(SlPtr a, SlPtr b) { return mk(SlTag::Wand, {}, {}, std::move(a), std::move(b)); }

bool is_true_atom(const SlPtr& a) {
  return a->tag == SlTag::Atom && a->atom.kind == AtomKind::True;
}

bool sl_equal(const SlPtr& a, const SlPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case SlTag::Atom:
      return a->atom == b->atom;
    case SlTag::Not:
      return sl_equal(a->a, b->a);
    case SlTag::Exists:
    case SlTag::Forall:
      return a->var == b->var && sl_equal(a->a, b->a);
    default:
      return sl_equal(a->a, b->a) && sl_equal(a->b, b->b);
  }
}

/* Printing with minimal parentheses. Precedence, loosest first: quantifier
 * bodies, |, &, -*, *, !. The wand is right-associative, the rest of the
 * binary connectives left-associative. */
namespace {

constexpr int kQuant = 0, kOr = 1, kAnd = 2, kWand = 3, kStar = 4, kNot = 5, kAtomLvl = 6;

int sl_level(const SlFormula& f) {
  switch (f.tag) {
    case SlTag::Atom: return kAtomLvl;
    case SlTag::Not: return kNot;
    case SlTag::And: return kAnd;
    case SlTag::Or: return kOr;
    case SlTag::Exists:
    case SlTag::Forall: return kQuant;
    case SlTag::Star: return kStar;
    case SlTag::Wand: return kWand;
  }
  return kAtomLvl;
}

void print_sl(const SlPtr& f, int min_level, std::string& out) {
  int lvl = sl_level(*f);
  bool parens = lvl < min_level;
  if (parens) out += "(";
  switch (f->tag) {
    case SlTag::Atom:
      out += to_string(f->atom);
      break;
    case SlTag::Not:
      out += "!";
      print_sl(f->a, kNot, out);
      break;
    case SlTag::And:
      print_sl(f->a, kAnd, out);
      out += " & ";
      print_sl(f->b, kAnd + 1, out);
      break;
    case SlTag::Or:
      print_sl(f->a, kOr, out);
      out += " | ";
      print_sl(f->b, kOr + 1, out);
      break;
    case SlTag::Exists:
      out += "E " + f->var + ": ";
      print_sl(f->a, kQuant, out);
      break;
    case SlTag::Forall:
      out += "A " + f->var + ": ";
      print_sl(f->a, kQuant, out);
      break;
    case SlTag::Star:
      print_sl(f->a, kStar, out);
      out += " * ";
      print_sl(f->b, kStar + 1, out);
      break;
    case SlTag::Wand:
      print_sl(f->a, kWand + 1, out);
      out += " -* ";
      print_sl(f->b, kWand, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const SlPtr& a) {
  std::string out;
  print_sl(a, kQuant, out);
  return out;
}

static void collect_term_vars_of(const SlPtr& f, std::set<std::string>& out) {
  // all variables occurring anywhere, including binders
  switch (f->tag) {
    case SlTag::Atom:
      collect_vars(f->atom, out);
      return;
    case SlTag::Not:
      collect_term_vars_of(f->a, out);
      return;
    case SlTag::Exists:
    case SlTag::Forall:
      out.insert(f->var);
      collect_term_vars_of(f->a, out);
      return;
    default:
      collect_term_vars_of(f->a, out);
      collect_term_vars_of(f->b, out);
      return;
  }
}

std::set<std::string> all_vars(const SlPtr& a) {
  std::set<std::string> out;
  collect_term_vars_of(a, out);
  return out;
}

static void free_vars_rec(const SlPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->tag) {
    case SlTag::Atom: {
      std::set<std::string> vs;
      collect_vars(f->atom, vs);
      for (auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case SlTag::Not:
      free_vars_rec(f->a, bound, out);
      return;
    case SlTag::Exists:
    case SlTag::Forall: {
      bool fresh = bound.insert(f->var).second;
      free_vars_rec(f->a, bound, out);
      if (fresh) bound.erase(f->var);
      return;
    }
    default:
      free_vars_rec(f->a, bound, out);
      free_vars_rec(f->b, bound, out);
      return;
  }
}

std::set<std::string> free_vars(const SlPtr& a) {
  std::set<std::string> bound, out;
  free_vars_rec(a, bound, out);
  return out;
}

SlPtr subst(const SlPtr& f, const std::string& x, const Term& t) {
  switch (f->tag) {
    case SlTag::Atom:
      return sl_atom(subst_atom(f->atom, x, t));
    case SlTag::Not:
      return sl_not(subst(f->a, x, t));
    case SlTag::Exists:
    case SlTag::Forall: {
      if (f->var == x) return f;  // x is shadowed
      if (t.is_var && t.name == f->var) {
        // the binder would capture t: rename it first
        std::set<std::string> avoid = all_vars(f->a);
        avoid.insert(x);
        avoid.insert(t.name);
        std::string y = fresh_var(f->var, avoid);
        SlPtr body = subst(f->a, f->var, Term::var(y));
        body = subst(body, x, t);
        return f->tag == SlTag::Exists ? sl_exists(y, body) : sl_forall(y, body);
      }
      SlPtr body = subst(f->a, x, t);
      return f->tag == SlTag::Exists ? sl_exists(f->var, body) : sl_forall(f->var, body);
    }
    case SlTag::And:
      return sl_and(subst(f->a, x, t), subst(f->b, x, t));
    case SlTag::Or:
      return sl_or(subst(f->a, x, t), subst(f->b, x, t));
    case SlTag::Star:
      return sl_star(subst(f->a, x, t), subst(f->b, x, t));
    case SlTag::Wand:
      return sl_wand(subst(f->a, x, t), subst(f->b, x, t));
  }
  return f;
}

static std::uint64_t size_rec(const SlPtr& f, std::unordered_map<const SlFormula*, std::uint64_t>& memo) {
  auto it = memo.find(f.get());
  if (it != memo.end()) return it->second;
  std::uint64_t s = 0;
  switch (f->tag) {
    case SlTag::Atom: s = atom_size(f->atom); break;
    case SlTag::Not:
    case SlTag::Exists:
    case SlTag::Forall: s = 1 + size_rec(f->a, memo); break;
    default: s = 1 + size_rec(f->a, memo) + size_rec(f->b, memo); break;
  }
  memo.emplace(f.get(), s);
  return s;
}

std::uint64_t size_sl(const SlPtr& a) {
  std::unordered_map<const SlFormula*, std::uint64_t> memo;
  return size_rec(a, memo);
}

namespace {

void flatten(const SlPtr& f, SlTag tag, std::vector<SlPtr>& out) {
  if (f->tag == tag) {
    flatten(f->a, tag, out);
    flatten(f->b, tag, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

SlPtr normalize_ac(const SlPtr& f) {
  switch (f->tag) {
    case SlTag::Atom:
      return f;
    case SlTag::Not:
      return sl_not(normalize_ac(f->a));
    case SlTag::Exists:
      return sl_exists(f->var, normalize_ac(f->a));
    case SlTag::Forall:
      return sl_forall(f->var, normalize_ac(f->a));
    case SlTag::Wand:
      return sl_wand(normalize_ac(f->a), normalize_ac(f->b));
    case SlTag::And:
    case SlTag::Or:
    case SlTag::Star: {
      std::vector<SlPtr> parts;
      flatten(f, f->tag, parts);
      std::vector<std::pair<std::string, SlPtr>> keyed;
      keyed.reserve(parts.size());
      for (auto& p : parts) {
        SlPtr n = normalize_ac(p);
        keyed.emplace_back(to_string(n), n);
      }
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      SlPtr acc = keyed[0].second;
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        switch (f->tag) {
          case SlTag::And: acc = sl_and(acc, keyed[i].second); break;
          case SlTag::Or: acc = sl_or(acc, keyed[i].second); break;
          default: acc = sl_star(acc, keyed[i].second); break;
        }
      }
      return acc;
    }
  }
  return f;
}

}  // namespace qentail
