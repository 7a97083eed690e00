// SPDX-License-Identifier: Apache-2.0

#include "qentail/prob.hpp"

#include <stdexcept>

namespace qentail {

Prob::Prob(long num, unsigned long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Prob: zero denominator");
  q_.canonicalize();
  check_range();
}

Prob::Prob(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
  check_range();
}

Prob Prob::one() { return Prob(mpq_class(1)); }

void Prob::check_range() const {
  if (sgn(q_) < 0 || cmp(q_, 1) > 0)
    throw std::domain_error("Prob out of [0,1]: " + q_.get_str());
}

Prob Prob::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("bad probability literal: " + text); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw bad();
    return Prob(q);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    mpz_class n;
    if (n.set_str(text, 10) != 0) throw bad();
    return Prob(mpq_class(n));
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || frac_len == 0) throw bad();
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw bad();
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  return Prob(mpq_class(num) / mpq_class(den));
}

Prob Prob::complement() const { return Prob(mpq_class(1 - q_)); }

Prob Prob::times(const Prob& o) const { return Prob(mpq_class(q_ * o.q_)); }

Prob Prob::plus(const Prob& o) const { return Prob(mpq_class(q_ + o.q_)); }

Prob Prob::convex(const Prob& q, const Prob& a, const Prob& b) {
  return Prob(mpq_class(q.q_ * a.q_ + (1 - q.q_) * b.q_));
}

std::string Prob::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_str();
}

std::size_t Prob::hash() const {
  std::size_t h = mpz_get_ui(q_.get_num().get_mpz_t());
  std::size_t d = mpz_get_ui(q_.get_den().get_mpz_t());
  return h * 1000003u ^ d;
}

}  // namespace qentail
