// SPDX-License-Identifier: Apache-2.0

#include "qentail/hpgcl.hpp"

namespace qentail {

HpPtr hp_skip() {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Skip;
  return n;
}

HpPtr hp_assign(std::string x, Term e) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Assign;
  n->var = std::move(x);
  n->addr = std::move(e);
  return n;
}

HpPtr hp_alloc(std::string x, std::vector<Term> record) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Alloc;
  n->var = std::move(x);
  n->record = std::move(record);
  return n;
}

HpPtr hp_free(Term e) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Free;
  n->addr = std::move(e);
  return n;
}

HpPtr hp_lookup(std::string x, Term e) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Lookup;
  n->var = std::move(x);
  n->addr = std::move(e);
  return n;
}

HpPtr hp_mutate(Term e, std::vector<Term> record) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Mutate;
  n->addr = std::move(e);
  n->record = std::move(record);
  return n;
}

HpPtr hp_seq(HpPtr a, HpPtr b) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Seq;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

HpPtr hp_pchoice(Prob p, HpPtr a, HpPtr b) {
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::PChoice;
  n->p = std::move(p);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

HpPtr hp_ite(Atom guard, HpPtr a, HpPtr b) {
  if (!is_pure(guard))
    throw GrammarError(RestrictionKind::NonPureGuard,
                       "conditional guard must be pure: " + to_string(guard));
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::Ite;
  n->guard = std::move(guard);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

HpPtr hp_while(Atom guard, HpPtr body) {
  if (!is_pure(guard))
    throw GrammarError(RestrictionKind::NonPureGuard,
                       "loop guard must be pure: " + to_string(guard));
  auto n = std::make_shared<HpgclProgram>();
  n->tag = HpTag::While;
  n->guard = std::move(guard);
  n->a = std::move(body);
  return n;
}

bool is_loop_free(const HpPtr& c) {
  if (c->tag == HpTag::While) return false;
  if (c->a && !is_loop_free(c->a)) return false;
  if (c->b && !is_loop_free(c->b)) return false;
  return true;
}

static void vars_rec(const HpPtr& c, std::set<std::string>& out, bool modified_only) {
  auto add_term = [&](const Term& t) {
    if (!modified_only && t.is_var) out.insert(t.name);
  };
  switch (c->tag) {
    case HpTag::Skip:
      break;
    case HpTag::Assign:
    case HpTag::Lookup:
      out.insert(c->var);
      add_term(c->addr);
      break;
    case HpTag::Alloc:
      out.insert(c->var);
      for (const auto& r : c->record) add_term(r);
      break;
    case HpTag::Free:
      add_term(c->addr);
      break;
    case HpTag::Mutate:
      add_term(c->addr);
      for (const auto& r : c->record) add_term(r);
      break;
    case HpTag::Ite:
    case HpTag::While:
      if (!modified_only) collect_vars(c->guard, out);
      break;
    default:
      break;
  }
  if (c->a) vars_rec(c->a, out, modified_only);
  if (c->b) vars_rec(c->b, out, modified_only);
}

std::set<std::string> program_vars(const HpPtr& c) {
  std::set<std::string> out;
  vars_rec(c, out, false);
  return out;
}

std::set<std::string> modified_vars(const HpPtr& c) {
  std::set<std::string> out;
  vars_rec(c, out, true);
  return out;
}

static std::string record_str(const std::vector<Term>& rec) {
  if (rec.size() == 1) return to_string(rec[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < rec.size(); ++i) {
    if (i) s += ",";
    s += to_string(rec[i]);
  }
  return s + ")";
}

std::string to_string(const HpPtr& c) {
  switch (c->tag) {
    case HpTag::Skip: return "skip";
    case HpTag::Assign: return c->var + " := " + to_string(c->addr);
    case HpTag::Alloc: return c->var + " := new" + (c->record.size() == 1 ? "(" + to_string(c->record[0]) + ")" : record_str(c->record));
    case HpTag::Free: return "free(" + to_string(c->addr) + ")";
    case HpTag::Lookup: return c->var + " := <" + to_string(c->addr) + ">";
    case HpTag::Mutate: return "<" + to_string(c->addr) + "> := " + record_str(c->record);
    case HpTag::Seq: return to_string(c->a) + ";\n" + to_string(c->b);
    case HpTag::PChoice:
      return "{ " + to_string(c->a) + " } [" + c->p.str() + "] { " + to_string(c->b) + " }";
    case HpTag::Ite:
      return "if (" + to_string(c->guard) + ") { " + to_string(c->a) + " } else { " + to_string(c->b) + " }";
    case HpTag::While:
      return "while (" + to_string(c->guard) + ") { " + to_string(c->a) + " }";
  }
  return "?";
}

}  // namespace qentail
