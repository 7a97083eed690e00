// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_QSL_HPP
#define QENTAIL_QSL_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "qentail/prob.hpp"
#include "qentail/syntax.hpp"

namespace qentail {

struct QslFormula;
using QslPtr = std::shared_ptr<const QslFormula>;

enum class QslTag : std::uint8_t {
  Iverson,    // [b]
  BoolChoice, // [b]*g + [!b]*u, b pure
  ConvexSum,  // q*g + (1-q)*u
  Mul,        // g . u
  OneMinus,   // 1 - g
  Max,        // max(g, u)
  Min,        // min(g, u)
  Sup,        // S x: g
  Inf,        // J x: g
  Star,       // g * u
  Wand,       // [b] -* g
};

/* Immutable quantitative separation-logic formula. The wand antecedent is a
 * single atom by grammar; BoolChoice guards must be pure. Both restrictions
 * are enforced by the constructors. */
struct QslFormula {
  QslTag tag;
  Atom atom;        // Iverson / BoolChoice guard / Wand antecedent
  Prob weight;      // ConvexSum
  std::string var;  // Sup / Inf
  QslPtr a, b;
};

QslPtr qsl_iverson(Atom b);
QslPtr qsl_bool_choice(Atom guard, QslPtr g, QslPtr u);
QslPtr qsl_convex(Prob q, QslPtr g, QslPtr u);
QslPtr qsl_mul(QslPtr g, QslPtr u);
QslPtr qsl_one_minus(QslPtr g);
QslPtr qsl_max(QslPtr g, QslPtr u);
QslPtr qsl_min(QslPtr g, QslPtr u);
QslPtr qsl_sup(std::string x, QslPtr g);
QslPtr qsl_inf(std::string x, QslPtr g);
QslPtr qsl_star(QslPtr g, QslPtr u);
QslPtr qsl_wand(Atom antecedent, QslPtr g);

bool qsl_equal(const QslPtr& a, const QslPtr& b);

std::string to_string(const QslPtr& f);

QslPtr subst(const QslPtr& f, const std::string& x, const Term& t);

std::set<std::string> free_vars(const QslPtr& f);
std::set<std::string> all_vars(const QslPtr& f);

// |f| and p(f) per the inductive size table. p counts exactly the
// constructs that can grow the evaluation set: ConvexSum, Mul and Star.
std::uint64_t size_qsl(const QslPtr& f);
std::uint64_t psize(const QslPtr& f);

}  // namespace qentail

#endif
