#ifndef MWK_EXT_HPP
#define MWK_EXT_HPP

#include <functional>

#include "mwk/field.hpp"

namespace mwk {

/// Ground field of a tower (F_p or Q) and the dimension over it.
FieldPtr bottomField(const FieldPtr& k);
int bottomDim(const FieldPtr& k);
Vec bottomCoords(const FieldElem& a);
FieldElem fromBottomCoords(const FieldPtr& k, const Vec& v);
/// Monomial basis of k over its ground field.
std::vector<FieldElem> bottomBasis(const FieldPtr& k);

using EmbedFn = std::function<FieldElem(const FieldElem&)>;

// A finite extension K/U presented inside a common tower: U embeds into K via
// `embed`, and K = U(g) for the stored primitive element g. Trace, norm and
// coordinates relative to the power basis {1, g, ..., g^{m-1}} come from exact
// linear algebra over the ground field.
struct RelExt {
    FieldPtr K, U;
    EmbedFn embed;
    FieldElem g;
    int relDeg = 1;
    Poly minPoly;                      // of g over U, monic

    std::vector<FieldElem> uBasis;     // basis of U over the ground field
    Mat columns;                       // bottomCoords(embed(u_i) * g^j)

    /// coordinates of y over U in the power basis; length relDeg
    std::vector<FieldElem> relCoords(const FieldElem& y) const;
    FieldElem relTrace(const FieldElem& y) const;
    FieldElem relNorm(const FieldElem& y) const;
    /// values of the trace functional on the power basis
    std::vector<FieldElem> traceFunctional() const;
    /// Scharlau's f_q functional: 1 on g^{m-1}, 0 below
    std::vector<FieldElem> fqFunctional() const;
};

/// Build K/U with an explicit embedding; throws when no primitive element is
/// found among the canonical candidates (does not happen for separable towers).
RelExt makeRelExt(const FieldPtr& K, const FieldPtr& U, const EmbedFn& embed);

/// K/U where U sits in K by the canonical tower inclusion.
RelExt canonicalRelExt(const FieldPtr& K, const FieldPtr& U);

}  // namespace mwk

#endif
