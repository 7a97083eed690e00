// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_HPGCL_HPP
#define QENTAIL_HPGCL_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qentail/prob.hpp"
#include "qentail/syntax.hpp"

namespace qentail {

struct HpgclProgram;
using HpPtr = std::shared_ptr<const HpgclProgram>;

enum class HpTag : std::uint8_t {
  Skip,     // skip
  Assign,   // x := e
  Alloc,    // x := new(e1,...,ek)
  Free,     // free(e)
  Lookup,   // x := <e>        (k = 1)
  Mutate,   // <e> := e1,...,ek
  Seq,      // c ; c
  PChoice,  // {c} [p] {c}
  Ite,      // if (b) {c} else {c}
  While,    // while (b) {c}
};

/* Loop-free probabilistic pointer programs plus while, whose wlp is only
 * reachable through the invariant rule. Expressions are heap-independent
 * terms; guards are pure atoms. */
struct HpgclProgram {
  HpTag tag;
  std::string var;           // Assign / Alloc / Lookup target
  Term addr;                 // Assign rhs, Free / Lookup / Mutate address
  std::vector<Term> record;  // Alloc / Mutate record
  Prob p;                    // PChoice
  Atom guard;                // Ite / While
  HpPtr a, b;
};

HpPtr hp_skip();
HpPtr hp_assign(std::string x, Term e);
HpPtr hp_alloc(std::string x, std::vector<Term> record);
HpPtr hp_free(Term e);
HpPtr hp_lookup(std::string x, Term e);
HpPtr hp_mutate(Term e, std::vector<Term> record);
HpPtr hp_seq(HpPtr a, HpPtr b);
HpPtr hp_pchoice(Prob p, HpPtr a, HpPtr b);
HpPtr hp_ite(Atom guard, HpPtr a, HpPtr b);
HpPtr hp_while(Atom guard, HpPtr body);

bool is_loop_free(const HpPtr& c);

// Variables read or written anywhere in the program, binder-free.
std::set<std::string> program_vars(const HpPtr& c);

// Stack variables the program can write.
std::set<std::string> modified_vars(const HpPtr& c);

std::string to_string(const HpPtr& c);

}  // namespace qentail

#endif
