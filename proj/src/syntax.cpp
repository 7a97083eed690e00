// SPDX-License-Identifier: Apache-2.0

#include "qentail/syntax.hpp"

#include <tuple>

namespace qentail {

std::string to_string(const Term& t) {
  return t.is_var ? t.name : std::to_string(t.lit);
}

bool Atom::operator==(const Atom& o) const {
  return kind == o.kind && lhs == o.lhs && rhs == o.rhs && record == o.record;
}

bool Atom::operator<(const Atom& o) const {
  return std::tie(kind, lhs, rhs, record) < std::tie(o.kind, o.lhs, o.rhs, o.record);
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::True: return "true";
    case AtomKind::Emp: return "emp";
    case AtomKind::Eq: return to_string(a.lhs) + " = " + to_string(a.rhs);
    case AtomKind::Neq: return to_string(a.lhs) + " != " + to_string(a.rhs);
    case AtomKind::EqEmp: return to_string(a.lhs) + " =emp " + to_string(a.rhs);
    case AtomKind::NeqEmp: return to_string(a.lhs) + " !=emp " + to_string(a.rhs);
    case AtomKind::PointsTo: {
      std::string s = to_string(a.lhs) + " |-> ";
      if (a.record.size() == 1) return s + to_string(a.record[0]);
      s += "(";
      for (std::size_t i = 0; i < a.record.size(); ++i) {
        if (i) s += ",";
        s += to_string(a.record[i]);
      }
      return s + ")";
    }
    case AtomKind::Ls: return "ls(" + to_string(a.lhs) + ", " + to_string(a.rhs) + ")";
  }
  return "?";
}

bool is_pure(const Atom& a) {
  switch (a.kind) {
    case AtomKind::True:
    case AtomKind::Eq:
    case AtomKind::Neq:
      return true;
    default:
      return false;
  }
}

std::optional<Atom> negate_atom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Eq: return Atom::neq(a.lhs, a.rhs);
    case AtomKind::Neq: return Atom::eq(a.lhs, a.rhs);
    default: return std::nullopt;
  }
}

std::uint64_t atom_size(const Atom&) { return 1; }

static Term subst_term(const Term& t, const std::string& x, const Term& r) {
  if (t.is_var && t.name == x) return r;
  return t;
}

Atom subst_atom(const Atom& a, const std::string& x, const Term& t) {
  Atom out = a;
  out.lhs = subst_term(a.lhs, x, t);
  out.rhs = subst_term(a.rhs, x, t);
  for (auto& r : out.record) r = subst_term(r, x, t);
  return out;
}

void collect_vars(const Atom& a, std::set<std::string>& out) {
  auto add = [&](const Term& t) {
    if (t.is_var) out.insert(t.name);
  };
  switch (a.kind) {
    case AtomKind::True:
    case AtomKind::Emp:
      break;
    case AtomKind::Eq:
    case AtomKind::Neq:
    case AtomKind::EqEmp:
    case AtomKind::NeqEmp:
    case AtomKind::Ls:
      add(a.lhs);
      add(a.rhs);
      break;
    case AtomKind::PointsTo:
      add(a.lhs);
      for (const auto& r : a.record) add(r);
      break;
  }
}

void validate_atom(const Atom& a, const AtomConfig& cfg) {
  if (a.kind == AtomKind::PointsTo && static_cast<int>(a.record.size()) != cfg.k)
    throw GrammarError(RestrictionKind::RecordWidthMismatch,
                       "points-to record has width " + std::to_string(a.record.size()) +
                           ", configured k = " + std::to_string(cfg.k));
  if (a.kind == AtomKind::Ls && cfg.k != 1)
    throw GrammarError(RestrictionKind::LsRequiresK1, "ls is only available for k = 1");
}

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (unsigned long i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace qentail
