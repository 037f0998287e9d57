#pragma once

#include <map>
#include <vector>

#include "schubert/common.hpp"
#include "schubert/perm.hpp"

namespace schubert {

// Exponent vector for x1, x2, ...; trailing zeros are trimmed so that equal
// monomials compare equal.  Map ordering = lexicographic on (e1, e2, ...),
// which makes poly.begin() the lex-least monomial.
using Monomial = std::vector<int>;

Monomial normalized(Monomial m);

// Sparse polynomial in x1, x2, ... with integer coefficients.
class Poly {
  public:
    Poly() = default;
    static Poly constant(coeff_t c);
    static Poly monomial(Monomial m, coeff_t c = 1);

    bool is_zero() const { return terms_.empty(); }
    coeff_t coeff(const Monomial& m) const;
    const std::map<Monomial, coeff_t>& terms() const { return terms_; }

    void add_term(Monomial m, coeff_t c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(coeff_t c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Substitute x_i = 1 for all i (sum of coefficients).
    coeff_t evaluate_all_ones() const;

  private:
    std::map<Monomial, coeff_t> terms_;
};

// Divided difference: (f - s_i f) / (x_i - x_{i+1}), i >= 1.  Exact on each
// monomial; the quotient is always polynomial.
Poly divided_difference(const Poly& f, int i);

// Schubert polynomial of a permutation (window is normalized to start at 1):
// the staircase monomial for the longest element, descending by divided
// differences along first ascents.  Memoized process-wide; thread-safe.
Poly schubert_poly(const Perm& w);

// Write f as a sum of Schubert polynomials.  Every polynomial with the
// right positivity structure (in particular any product of Schuberts) has a
// unique finite expansion; throws internal_error if elimination fails to
// terminate within a sane bound.
std::map<Perm, coeff_t> expand_in_schubert_basis(const Poly& f);

// Convenience: expansion of schubert_poly(u) * schubert_poly(v).
std::map<Perm, coeff_t> schubert_product_expansion(const Perm& u, const Perm& v);

} // namespace schubert
