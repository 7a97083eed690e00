// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_PARSER_HPP
#define QENTAIL_PARSER_HPP

#include <stdexcept>
#include <string>

#include "qentail/hpgcl.hpp"
#include "qentail/qsl.hpp"
#include "qentail/sl.hpp"

namespace qentail {

class SyntaxError : public std::exception {
public:
  SyntaxError(int line, int col, std::string msg)
      : line_(line), col_(col),
        msg_(std::to_string(line) + ":" + std::to_string(col) + ": " + msg) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const char* what() const noexcept override { return msg_.c_str(); }

private:
  int line_, col_;
  std::string msg_;
};

/* Concrete ASCII grammar, k-aware. Reserved words: true, emp, ls, max, min,
 * E, A, S, J, skip, new, free, if, else, while. `//` starts a line comment.
 *
 *   SL:   atoms | ! & | E x: | A x: | * | -*
 *   QSL:  [b] | [b]*f + [!b]*g | p*f + q*g (p+q=1) | f . g | 1 - f
 *         | max(f,g) | min(f,g) | S x: f | J x: f | f * g | [b] -* f
 *
 * Quantifiers bind weakest; * and -* bind tighter than & and |; -* is
 * right-associative. The sum forms are recognized by a `+` at nesting
 * depth zero and take wand-level branches. */
SlPtr parse_sl(const std::string& text, const AtomConfig& cfg = {});
QslPtr parse_qsl(const std::string& text, const AtomConfig& cfg = {});

/* hpGCL statements: skip, x := e, x := new(e,...), free(e), x := <e>,
 * <e> := e,...  plus c ; c, {c} [p] {c}, if (b) {c} else {c},
 * while (b) {c}. Guards are pure atoms. */
HpPtr parse_hpgcl(const std::string& text, const AtomConfig& cfg = {});

}  // namespace qentail

#endif
