#ifndef MWK_VALUATION_HPP
#define MWK_VALUATION_HPP

#include "mwk/factor.hpp"

namespace mwk {

// Discrete valuation on a one-variable function field: a monic irreducible
// place polynomial, or the place at infinity with uniformizer -1/t.
struct Valuation {
    FieldPtr ff;
    bool atInfinity = false;
    Poly place;               // finite places only
    FieldPtr residueField;
};

Valuation placeValuation(const FieldPtr& ff, const Poly& place);
Valuation infinityValuation(const FieldPtr& ff);
bool sameValuation(const Valuation& a, const Valuation& b);
std::string showValuation(const Valuation& v);

/// The canonical uniformizer as a field element (the place polynomial, or -1/t).
FieldElem uniformizer(const Valuation& v);

/// a = pi^n * u with u a v-unit; returns (n, u). Throws on a = 0.
std::pair<long, FieldElem> valuationOf(const Valuation& v, const FieldElem& a);

/// Image of a v-unit in the residue field.
FieldElem residueClass(const Valuation& v, const FieldElem& u);

/// All places in the support of a (finite places where a is not a unit).
std::vector<Valuation> supportPlaces(const FieldElem& a);

}  // namespace mwk

#endif
