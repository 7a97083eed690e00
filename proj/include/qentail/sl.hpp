// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_SL_HPP
#define QENTAIL_SL_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "qentail/syntax.hpp"

namespace qentail {

struct SlFormula;
using SlPtr = std::shared_ptr<const SlFormula>;

enum class SlTag : std::uint8_t { Atom, Not, And, Or, Exists, Forall, Star, Wand };

/* Immutable separation-logic formula tree. Nodes are shared freely; the
 * at-least construction produces heavily shared DAGs whose *tree* size we
 * still account for in the size metrics. */
struct SlFormula {
  SlTag tag;
  Atom atom;        // Atom
  std::string var;  // Exists / Forall
  SlPtr a, b;
};

SlPtr sl_atom(Atom a);
SlPtr sl_true();
SlPtr sl_not(SlPtr a);
SlPtr sl_and(SlPtr a, SlPtr b);
SlPtr sl_or(SlPtr a, SlPtr b);
SlPtr sl_exists(std::string x, SlPtr a);
SlPtr sl_forall(std::string x, SlPtr a);
SlPtr sl_star(SlPtr a, SlPtr b);
SlPtr sl_wand(SlPtr a, SlPtr b);

bool is_true_atom(const SlPtr& a);

bool sl_equal(const SlPtr& a, const SlPtr& b);

std::string to_string(const SlPtr& a);

// Capture-avoiding substitution of variable x by term t.
SlPtr subst(const SlPtr& a, const std::string& x, const Term& t);

std::set<std::string> free_vars(const SlPtr& a);
std::set<std::string> all_vars(const SlPtr& a);  // free + bound + atom vars

// Tree size per the inductive size table (atoms count their declared size).
std::uint64_t size_sl(const SlPtr& a);

/* Canonical form modulo commutativity/associativity of &, | and *:
 * chains are flattened, children sorted, and rebuilt left-associatively.
 * Used by golden tests that compare constructions up to AC. */
SlPtr normalize_ac(const SlPtr& a);

}  // namespace qentail

#endif
