// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_SYNTAX_HPP
#define QENTAIL_SYNTAX_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qentail {

/* A term is a variable or an integer literal. Terms are the only expressions
 * allowed inside atoms and hpGCL statements; there is no arithmetic. */
struct Term {
  bool is_var = true;
  std::string name;       // when is_var
  std::int64_t lit = 0;   // when !is_var

  static Term var(std::string n) { return Term{true, std::move(n), 0}; }
  static Term literal(std::int64_t v) { return Term{false, {}, v}; }

  bool operator==(const Term& o) const {
    return is_var == o.is_var && (is_var ? name == o.name : lit == o.lit);
  }
  bool operator<(const Term& o) const {
    if (is_var != o.is_var) return is_var < o.is_var;
    return is_var ? name < o.name : lit < o.lit;
  }
};

std::string to_string(const Term& t);

/* The atom registry. A fixed closed set covering both instantiations used in
 * practice: the plain points-to/list atoms and the symbolic-heap atoms with
 * conjoined emp. Pure atoms are exactly those whose truth is independent of
 * the heap. */
enum class AtomKind : std::uint8_t {
  True,      // true
  Emp,       // emp
  Eq,        // t = t
  Neq,       // t != t
  EqEmp,     // t =emp t   (t = t and the heap is empty)
  NeqEmp,    // t !=emp t
  PointsTo,  // t |-> (t,...,t), record width k
  Ls,        // ls(t, t), k = 1 only
};

struct Atom {
  AtomKind kind = AtomKind::True;
  Term lhs, rhs;             // binary kinds; PointsTo uses lhs + record
  std::vector<Term> record;  // PointsTo only, length k

  static Atom mk_true() { return Atom{}; }
  static Atom emp() { return Atom{AtomKind::Emp, {}, {}, {}}; }
  static Atom eq(Term a, Term b) { return Atom{AtomKind::Eq, std::move(a), std::move(b), {}}; }
  static Atom neq(Term a, Term b) { return Atom{AtomKind::Neq, std::move(a), std::move(b), {}}; }
  static Atom eq_emp(Term a, Term b) { return Atom{AtomKind::EqEmp, std::move(a), std::move(b), {}}; }
  static Atom neq_emp(Term a, Term b) { return Atom{AtomKind::NeqEmp, std::move(a), std::move(b), {}}; }
  static Atom points_to(Term l, std::vector<Term> rec) {
    return Atom{AtomKind::PointsTo, std::move(l), {}, std::move(rec)};
  }
  static Atom ls(Term a, Term b) { return Atom{AtomKind::Ls, std::move(a), std::move(b), {}}; }

  bool operator==(const Atom& o) const;
  bool operator<(const Atom& o) const;
};

std::string to_string(const Atom& a);

// Heap-independent atoms: True, Eq, Neq.
bool is_pure(const Atom& a);

// The registry negation, where it exists as an atom (Eq <-> Neq).
std::optional<Atom> negate_atom(const Atom& a);

// Declared atom size; every atom counts 1.
std::uint64_t atom_size(const Atom& a);

Atom subst_atom(const Atom& a, const std::string& x, const Term& t);
void collect_vars(const Atom& a, std::set<std::string>& out);

/* Session-wide registry configuration: the record width k shared by all
 * PointsTo atoms. */
struct AtomConfig {
  int k = 1;
};

// Throws GrammarError if the atom does not fit the configuration.
void validate_atom(const Atom& a, const AtomConfig& cfg);

/* Typed grammar-restriction violations, distinct from plain syntax errors. */
enum class RestrictionKind {
  NonPureGuard,
  GuardedWandRestriction,
  BadConvexWeights,
  GuardMismatch,
  RecordWidthMismatch,
  LsRequiresK1,
};

class GrammarError : public std::exception {
public:
  GrammarError(RestrictionKind kind, std::string msg)
      : kind_(kind), msg_(std::move(msg)) {}
  RestrictionKind kind() const { return kind_; }
  const char* what() const noexcept override { return msg_.c_str(); }

private:
  RestrictionKind kind_;
  std::string msg_;
};

// Deterministic fresh name: `base` if unused, else base1, base2, ...
std::string fresh_var(const std::string& base, const std::set<std::string>& avoid);

}  // namespace qentail

#endif
