// SPDX-License-Identifier: Apache-2.0

#include "qentail/qsl.hpp"

namespace qentail {

static QslPtr mk(QslTag tag, Atom atom, Prob w, std::string var, QslPtr a, QslPtr b) {
  auto n = std::make_shared<QslFormula>();
  n->tag = tag;
  n->atom = std::move(atom);
  n->weight = std::move(w);
  n->var = std::move(var);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

QslPtr qsl_iverson(Atom b) { return mk(QslTag::Iverson, std::move(b), {}, {}, nullptr, nullptr); }

QslPtr qsl_bool_choice(Atom guard, QslPtr g, QslPtr u) {
  if (!is_pure(guard))
    throw GrammarError(RestrictionKind::NonPureGuard,
                       "Boolean-choice guard must be pure: " + to_string(guard));
  return mk(QslTag::BoolChoice, std::move(guard), {}, {}, std::move(g), std::move(u));
}

QslPtr qsl_convex(Prob q, QslPtr g, QslPtr u) {
  return mk(QslTag::ConvexSum, {}, std::move(q), {}, std::move(g), std::move(u));
}

QslPtr qsl_mul(QslPtr g, QslPtr u) { return mk(QslTag::Mul, {}, {}, {}, std::move(g), std::move(u)); }
QslPtr qsl_one_minus(QslPtr g) { return mk(QslTag::OneMinus, {}, {}, {}, std::move(g), nullptr); }
QslPtr qsl_max(QslPtr g, QslPtr u) { return mk(QslTag::Max, {}, {}, {}, std::move(g), std::move(u)); }
QslPtr qsl_min(QslPtr g, QslPtr u) { return mk(QslTag::Min, {}, {}, {}, std::move(g), std::move(u)); }
QslPtr qsl_sup(std::string x, QslPtr g) { return mk(QslTag::Sup, {}, {}, std::move(x), std::move(g), nullptr); }
QslPtr qsl_inf(std::string x, QslPtr g) { return mk(QslTag::Inf, {}, {}, std::move(x), std::move(g), nullptr); }
QslPtr qsl_star(QslPtr g, QslPtr u) { return mk(QslTag::Star, {}, {}, {}, std::move(g), std::move(u)); }

QslPtr qsl_wand(Atom antecedent, QslPtr g) {
  return mk(QslTag::Wand, std::move(antecedent), {}, {}, std::move(g), nullptr);
}

bool qsl_equal(const QslPtr& a, const QslPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case QslTag::Iverson:
      return a->atom == b->atom;
    case QslTag::BoolChoice:
      return a->atom == b->atom && qsl_equal(a->a, b->a) && qsl_equal(a->b, b->b);
    case QslTag::ConvexSum:
      return a->weight == b->weight && qsl_equal(a->a, b->a) && qsl_equal(a->b, b->b);
    case QslTag::OneMinus:
      return qsl_equal(a->a, b->a);
    case QslTag::Sup:
    case QslTag::Inf:
      return a->var == b->var && qsl_equal(a->a, b->a);
    case QslTag::Wand:
      return a->atom == b->atom && qsl_equal(a->a, b->a);
    default:
      return qsl_equal(a->a, b->a) && qsl_equal(a->b, b->b);
  }
}

/* Precedence, loosest first: quantifiers and the sum forms, -*, *, ., 1-.
 * Sum forms only ever print parenthesized when nested. */
namespace {

constexpr int kTop = 0, kWandLvl = 1, kStarLvl = 2, kMulLvl = 3, kUnary = 4, kPrim = 5;

int qsl_level(const QslFormula& f) {
  switch (f.tag) {
    case QslTag::Iverson:
    case QslTag::Max:
    case QslTag::Min: return kPrim;
    case QslTag::OneMinus: return kUnary;
    case QslTag::Mul: return kMulLvl;
    case QslTag::Star: return kStarLvl;
    case QslTag::Wand: return kWandLvl;
    default: return kTop;  // sums and quantifiers
  }
}

void print_qsl(const QslPtr& f, int min_level, std::string& out) {
  int lvl = qsl_level(*f);
  bool parens = lvl < min_level;
  if (parens) out += "(";
  switch (f->tag) {
    case QslTag::Iverson:
      out += "[" + to_string(f->atom) + "]";
      break;
    case QslTag::BoolChoice:
      out += "[" + to_string(f->atom) + "]*";
      print_qsl(f->a, kWandLvl, out);
      out += " + [!" + to_string(f->atom) + "]*";
      print_qsl(f->b, kWandLvl, out);
      break;
    case QslTag::ConvexSum:
      out += f->weight.str() + "*";
      print_qsl(f->a, kWandLvl, out);
      out += " + " + f->weight.complement().str() + "*";
      print_qsl(f->b, kWandLvl, out);
      break;
    case QslTag::Mul:
      print_qsl(f->a, kMulLvl, out);
      out += " . ";
      print_qsl(f->b, kMulLvl + 1, out);
      break;
    case QslTag::OneMinus:
      out += "1 - ";
      print_qsl(f->a, kUnary, out);
      break;
    case QslTag::Max:
    case QslTag::Min:
      out += f->tag == QslTag::Max ? "max(" : "min(";
      print_qsl(f->a, kTop, out);
      out += ", ";
      print_qsl(f->b, kTop, out);
      out += ")";
      break;
    case QslTag::Sup:
      out += "S " + f->var + ": ";
      print_qsl(f->a, kTop, out);
      break;
    case QslTag::Inf:
      out += "J " + f->var + ": ";
      print_qsl(f->a, kTop, out);
      break;
    case QslTag::Star:
      print_qsl(f->a, kStarLvl, out);
      out += " * ";
      print_qsl(f->b, kStarLvl + 1, out);
      break;
    case QslTag::Wand:
      out += "[" + to_string(f->atom) + "] -* ";
      print_qsl(f->a, kWandLvl, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const QslPtr& f) {
  std::string out;
  print_qsl(f, kTop, out);
  return out;
}

static void all_vars_rec(const QslPtr& f, std::set<std::string>& out) {
  switch (f->tag) {
    case QslTag::Iverson:
    case QslTag::BoolChoice:
    case QslTag::Wand:
      collect_vars(f->atom, out);
      break;
    default:
      break;
  }
  if (f->tag == QslTag::Sup || f->tag == QslTag::Inf) out.insert(f->var);
  if (f->a) all_vars_rec(f->a, out);
  if (f->b) all_vars_rec(f->b, out);
}

std::set<std::string> all_vars(const QslPtr& f) {
  std::set<std::string> out;
  all_vars_rec(f, out);
  return out;
}

static void free_vars_rec(const QslPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto add_atom = [&](const Atom& a) {
    std::set<std::string> vs;
    collect_vars(a, vs);
    for (auto& v : vs)
      if (!bound.count(v)) out.insert(v);
  };
  switch (f->tag) {
    case QslTag::Iverson:
      add_atom(f->atom);
      return;
    case QslTag::BoolChoice:
      add_atom(f->atom);
      free_vars_rec(f->a, bound, out);
      free_vars_rec(f->b, bound, out);
      return;
    case QslTag::Wand:
      add_atom(f->atom);
      free_vars_rec(f->a, bound, out);
      return;
    case QslTag::Sup:
    case QslTag::Inf: {
      bool fresh = bound.insert(f->var).second;
      free_vars_rec(f->a, bound, out);
      if (fresh) bound.erase(f->var);
      return;
    }
    case QslTag::OneMinus:
      free_vars_rec(f->a, bound, out);
      return;
    default:
      free_vars_rec(f->a, bound, out);
      free_vars_rec(f->b, bound, out);
      return;
  }
}

std::set<std::string> free_vars(const QslPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

QslPtr subst(const QslPtr& f, const std::string& x, const Term& t) {
  switch (f->tag) {
    case QslTag::Iverson:
      return qsl_iverson(subst_atom(f->atom, x, t));
    case QslTag::BoolChoice:
      return qsl_bool_choice(subst_atom(f->atom, x, t), subst(f->a, x, t), subst(f->b, x, t));
    case QslTag::ConvexSum:
      return qsl_convex(f->weight, subst(f->a, x, t), subst(f->b, x, t));
    case QslTag::Mul:
      return qsl_mul(subst(f->a, x, t), subst(f->b, x, t));
    case QslTag::OneMinus:
      return qsl_one_minus(subst(f->a, x, t));
    case QslTag::Max:
      return qsl_max(subst(f->a, x, t), subst(f->b, x, t));
    case QslTag::Min:
      return qsl_min(subst(f->a, x, t), subst(f->b, x, t));
    case QslTag::Sup:
    case QslTag::Inf: {
      if (f->var == x) return f;
      if (t.is_var && t.name == f->var) {
        std::set<std::string> avoid = all_vars(f->a);
        avoid.insert(x);
        avoid.insert(t.name);
        std::string y = fresh_var(f->var, avoid);
        QslPtr body = subst(f->a, f->var, Term::var(y));
        body = subst(body, x, t);
        return f->tag == QslTag::Sup ? qsl_sup(y, body) : qsl_inf(y, body);
      }
      QslPtr body = subst(f->a, x, t);
      return f->tag == QslTag::Sup ? qsl_sup(f->var, body) : qsl_inf(f->var, body);
    }
    case QslTag::Star:
      return qsl_star(subst(f->a, x, t), subst(f->b, x, t));
    case QslTag::Wand:
      return qsl_wand(subst_atom(f->atom, x, t), subst(f->a, x, t));
  }
  return f;
}

std::uint64_t size_qsl(const QslPtr& f) {
  switch (f->tag) {
    case QslTag::Iverson:
      return atom_size(f->atom);
    case QslTag::BoolChoice: {
      // the negated guard is part of the formula; it costs 1 + |b| when it
      // only exists as !b rather than as a registry atom
      std::uint64_t nb = negate_atom(f->atom) ? atom_size(*negate_atom(f->atom))
                                              : 1 + atom_size(f->atom);
      return 1 + atom_size(f->atom) + nb + size_qsl(f->a) + size_qsl(f->b);
    }
    case QslTag::ConvexSum:
    case QslTag::Mul:
    case QslTag::Max:
    case QslTag::Min:
    case QslTag::Star:
      return 1 + size_qsl(f->a) + size_qsl(f->b);
    case QslTag::OneMinus:
    case QslTag::Sup:
    case QslTag::Inf:
      return 1 + size_qsl(f->a);
    case QslTag::Wand:
      return 1 + atom_size(f->atom) + size_qsl(f->a);
  }
  return 0;
}

std::uint64_t psize(const QslPtr& f) {
  switch (f->tag) {
    case QslTag::Iverson:
      return 0;
    case QslTag::ConvexSum:
    case QslTag::Mul:
    case QslTag::Star:
      return 1 + psize(f->a) + psize(f->b);
    case QslTag::BoolChoice:
    case QslTag::Max:
    case QslTag::Min:
      return psize(f->a) + psize(f->b);
    case QslTag::OneMinus:
    case QslTag::Sup:
    case QslTag::Inf:
    case QslTag::Wand:
      return psize(f->a);
  }
  return 0;
}

}  // namespace qentail
