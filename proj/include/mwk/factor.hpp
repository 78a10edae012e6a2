#ifndef MWK_FACTOR_HPP
#define MWK_FACTOR_HPP

#include "mwk/field.hpp"

namespace mwk {

struct Factorization {
    FieldElem unit;                              // leading unit
    std::vector<std::pair<Poly, int>> factors;   // monic irreducible, multiplicity
};

/// Factor a nonzero polynomial into monic irreducibles.
/// Coefficient fields: finite fields (towers included) via Cantor-Zassenhaus,
/// Q via Zassenhaus. Factors are sorted canonically, so output is deterministic.
Factorization factorPoly(const Poly& f);

/// Re-multiplied product of a factorization (for round-trip checks).
Poly factorProduct(const Factorization& fz);

/// Canonical representative of the square class of a nonzero element
/// (1 or least nonsquare over F_q; signed square-free integer over Q;
/// square-free monic part times unit representative over F_q(t), Q(t)).
FieldElem squareClassRep(const FieldElem& a);

/// Total order on field elements, used for canonical sorting only.
int cmpElem(const FieldElem& a, const FieldElem& b);
int cmpPoly(const Poly& a, const Poly& b);

}  // namespace mwk

#endif
