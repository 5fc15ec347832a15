#pragma once

#include <cstddef>
#include <vector>

#include "mops/poly.hpp"
#include "mops/rational.hpp"

namespace mops {

// Rising factorial; for k < 0 uses (z)_{-j} = 1 / (z-j)_j.
Rational pochhammer(const Rational& z, int k);
Rational factorial(int n);
Rational binomial(int n, int k);

// Terminating pFq with polynomial argument. `upper[term_index]` must equal -n for
// an integer n >= 0; the sum is cut at j = n regardless of other upper entries.
Poly pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                     const Poly& arg, std::size_t term_index);
// Picks the first nonpositive integer upper entry as the terminating one.
Poly pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                     const Poly& arg);
Rational pfq_terminating_at(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                            const Rational& z);

// Closed form of (p+1)F(p)(-n, beta+1, f_i + m_i; beta, f_i; 1).
Rational minton_value(int n, const Rational& beta, const std::vector<Rational>& f,
                      const std::vector<int>& m);

}  // namespace mops
