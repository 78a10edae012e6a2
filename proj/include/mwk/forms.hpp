#ifndef MWK_FORMS_HPP
#define MWK_FORMS_HPP

#include "mwk/ext.hpp"
#include "mwk/factor.hpp"

namespace mwk {

// Diagonal symmetric bilinear form <a_1,...,a_n>, entries nonzero.
// Conventions (fixed once, documented for the record):
//   signed discriminant  d(q) = (-1)^{n(n-1)/2} det(q),
//   Hasse invariant      c_v(q) = prod_{i<j} (a_i, a_j)_v.
struct BilinearForm {
    FieldPtr k;
    std::vector<FieldElem> diag;
};

// Formal difference pos - neg in the Grothendieck-Witt ring.
struct GWClass {
    FieldPtr k;
    std::vector<FieldElem> pos, neg;
};

BilinearForm makeForm(const FieldPtr& k, std::vector<FieldElem> diag);
BilinearForm formSum(const BilinearForm& a, const BilinearForm& b);

GWClass gwZero(const FieldPtr& k);
GWClass gwOne(const FieldPtr& k);
GWClass gwFromForm(const BilinearForm& f);
GWClass gwFromEntry(const FieldElem& a);          // <a>
GWClass gwHyperbolic(const FieldPtr& k);          // <1,-1>
GWClass gwAdd(const GWClass& x, const GWClass& y);
GWClass gwNeg(const GWClass& x);
GWClass gwSub(const GWClass& x, const GWClass& y);
GWClass gwMul(const GWClass& x, const GWClass& y);
GWClass gwScale(const GWClass& x, const Int& n);
GWClass gwPromote(const FieldPtr& k, const GWClass& x);   // along a canonical inclusion
int gwRank(const GWClass& x);

/// Isometry of diagonal forms. Decidable bases: finite fields, Q, formal
/// reals (rank+signature), formal complexes (rank).
bool decideIso(const BilinearForm& a, const BilinearForm& b);
bool gwEq(const GWClass& x, const GWClass& y);

/// Witt-class queries (hyperbolic padding plus decideIso).
bool wittTrivial(const GWClass& x);
bool wittEq(const GWClass& x, const GWClass& y);

/// Signature over Q / formal reals.
long signatureOf(const GWClass& x);
/// Square class of the signed discriminant.
FieldElem signedDisc(const GWClass& x);
/// Hasse invariant at a place of Q (p = 0 means the real place).
int hasseAt(const std::vector<FieldElem>& diag, const Int& p);
/// Stabilized Hasse ratio E_v on I^2-classes with trivial signed disc;
/// satisfies E_v(<<a,b>>) = (a,b)_v and kills I^3.
int hasseRatioAt(const GWClass& x, const Int& p);
std::vector<Int> relevantPlaces(const GWClass& x);   // 2 and odd primes in the entries

/// Largest n <= bound with the Witt image of x in I^n (bound <= 6).
int fundamentalIdealLevel(const GWClass& x, int bound);

/// Diagonalization of a symmetric Gram matrix by symmetric Gauss elimination.
std::vector<FieldElem> diagonalizeGram(const FieldPtr& k, Mat G);

/// Scharlau transfer along K/F for the functional s given by its values on
/// the power basis of R; phi is a diagonal form over K.
GWClass scharlauTransfer(const RelExt& R, const std::vector<FieldElem>& sOnBasis,
                         const BilinearForm& phi);
GWClass scharlauTransferGW(const RelExt& R, const std::vector<FieldElem>& sOnBasis,
                           const GWClass& x);
/// Transfer along the trace form functional; trace_form(K/F) = this on <1>.
GWClass traceFormTransfer(const RelExt& R, const GWClass& x);
GWClass traceForm(const RelExt& R);

std::string showForm(const BilinearForm& f);
std::string showGW(const GWClass& x);
/// Canonical printing: entries replaced by square-class representatives, sorted.
std::string showGWCanonical(const GWClass& x);

}  // namespace mwk

#endif
