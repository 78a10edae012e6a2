#ifndef MWK_VTHEORY_HPP
#define MWK_VTHEORY_HPP

#include "mwk/mw.hpp"

namespace mwk {

// Residue and specialization homomorphisms on K^MW over function fields,
// unramifiedness certificates, and the geometric / cohomological transfers.

struct ResidueProblem {
    Valuation v;
    MWExpr expr;                       // over v.ff, homogeneous
    bool hasOverride = false;
    FieldElem uniformizerOverride;     // any element with v(pi') = 1
};

/// The residue as a symbolic expression over the residue field. The twist
/// generator is the uniformizer that was used (canonical unless overridden).
MWExpr residueExpr(const ResidueProblem& p);

/// Residue evaluated in the pullback model, tagged with the uniformizer as
/// twist generator (grading 1).
TwistedElem residue(const ResidueProblem& p);

/// Specialization s_v^pi(x) = d([pi] x) - [-1] d(x); a graded ring map on the
/// kernel of the residue.
MWExpr specializeExpr(const ResidueProblem& p);
MWElem specialize(const ResidueProblem& p);

enum class Curve { A1, Gm };

struct PlaceReport {
    Valuation v;
    MWExpr residue;        // over the residue field
    bool decided = false;  // zero-test available
    bool vanishes = false;
};

struct UnramifiedCertificate {
    bool unramified = false;
    std::vector<PlaceReport> places;
};

/// True iff all residues vanish at the places of the curve meeting the
/// entries of x. Gm excludes the place (t); infinity belongs to neither.
UnramifiedCertificate isUnramified(const MWExpr& x, Curve curve);

/// Transfer along K/F through a chosen functional (Milnor leg: canonical
/// norm; form leg: Scharlau transfer). Cohomological = trace functional.
MWElem transferFunctional(const RelExt& R, const std::vector<FieldElem>& sOnBasis, const MWElem& y);
MWElem transferCohomological(const RelExt& R, const MWElem& y);

/// omega_0 of the extension U(g)/U: p'(g) in the separable case, the paper's
/// p_0-factorization in characteristic p.
FieldElem omega0(const RelExt& R);

struct GeometricTransferData {
    FieldPtr F;                 // base field
    FieldPtr ff;                // F(t), scratch function field
    Valuation vp;               // the place (p) on F(t)
};

/// Prepare the split-exact-sequence pipeline for K = F[x]/(p).
GeometricTransferData geometricData(const FieldPtr& F, const Poly& p);

/// Geometric transfer of y in K^MW(kappa(p)); y must be presented with
/// F-rational angle and entries (throws std::domain_error otherwise).
MWElem transferGeometric(const GeometricTransferData& G, const MWExpr& yOverKappa);

/// n_epsilon = sum_{i=1}^{n} <(-1)^{i-1}>, the paper's n_eps element.
MWElem nEpsilon(const FieldPtr& k, const Int& n);

}  // namespace mwk

#endif
