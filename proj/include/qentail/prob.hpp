// SPDX-License-Identifier: Apache-2.0

#ifndef QENTAIL_PROB_HPP
#define QENTAIL_PROB_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qentail {

/* Exact rational probability in [0,1]. Arithmetic stays exact throughout:
 * the reduction compares sums and products of probabilities for equality,
 * so floating point is never an option. Backed by GMP rationals, kept in
 * canonical reduced form. */
class Prob {
public:
  Prob() : q_(0) {}
  Prob(long num, unsigned long den);

  static Prob zero() { return Prob(); }
  static Prob one();

  // Accepts "0", "1", "0.4", ".25", "2/5".
  static Prob parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return cmp(q_, 1) == 0; }

  Prob complement() const;               // 1 - p
  Prob times(const Prob& o) const;       // p * o
  Prob plus(const Prob& o) const;        // p + o, must stay <= 1
  static Prob convex(const Prob& q, const Prob& a, const Prob& b);

  static const Prob& min(const Prob& a, const Prob& b) { return b < a ? b : a; }
  static const Prob& max(const Prob& a, const Prob& b) { return a < b ? b : a; }

  bool operator==(const Prob& o) const { return q_ == o.q_; }
  bool operator!=(const Prob& o) const { return q_ != o.q_; }
  bool operator<(const Prob& o) const { return q_ < o.q_; }
  bool operator<=(const Prob& o) const { return q_ <= o.q_; }
  bool operator>(const Prob& o) const { return q_ > o.q_; }
  bool operator>=(const Prob& o) const { return q_ >= o.q_; }

  // Canonical "n/d" with d > 1, else "0", "1" or plain integer numerator.
  std::string str() const;

  std::size_t hash() const;

private:
  explicit Prob(mpq_class q);
  void check_range() const;

  mpq_class q_;
};

}  // namespace qentail

#endif
