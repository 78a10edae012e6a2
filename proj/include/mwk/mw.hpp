#ifndef MWK_MW_HPP
#define MWK_MW_HPP

#include "mwk/milnor.hpp"

namespace mwk {

// Milnor-Witt K-theory class in the Cartesian-square model: a Milnor leg of
// degree max(n,0) and a Witt-class leg represented by a GW class lying in
// I^max(n,0). For n = 0 the Milnor leg carries the rank integer
// (GW = Z x_{Z/2} W); for n < 0 the Milnor leg is 0 and the form leg is a
// plain Witt class.
struct MWElem {
    FieldPtr k;
    int n = 0;
    MilnorElem milnor;
    GWClass form;
};

inline constexpr int kDegreeCap = 6;

MWElem mwZero(const FieldPtr& k, int n);
MWElem mwFromGW(const GWClass& x);                       // degree 0
MWElem mwSymbol(const FieldPtr& k, const std::vector<FieldElem>& entries);
MWElem mwAngle(const FieldElem& a);                      // <a> = 1 + eta[a]
MWElem mwEpsilon(const FieldPtr& k);                     // -<-1>
MWElem mwH(const FieldPtr& k);                           // 1 - eps = <1,-1>
MWElem mwAdd(const MWElem& x, const MWElem& y);
MWElem mwNeg(const MWElem& x);
MWElem mwSub(const MWElem& x, const MWElem& y);
MWElem mwMul(const MWElem& x, const MWElem& y);
MWElem mwScale(const MWElem& x, const Int& c);
MWElem mwEta(const MWElem& x);                           // degree drops by 1
MWElem mwAngleMul(const MWElem& x, const FieldElem& a);  // <a> * x
bool mwEq(const MWElem& x, const MWElem& y);
bool mwIsZero(const MWElem& x);
std::string showMW(const MWElem& x);

/// Cartesian-square compatibility of the two legs; throws std::logic_error on
/// violation. No-op over bases without a decidable model (number fields).
void mwValidate(const MWElem& x);

/// Forgetful map f: first projection (rank map in degree 0).
MilnorElem forgetful(const MWElem& x);
/// Hyperbolic map H(y) = h * [symbols of y]; needs a symbol presentation.
MWElem hyperbolic(const MilnorElem& y);

// Formal Z-linear combination of eta^s <angle> [a_1,...,a_m], homogeneous.
struct MWTerm {
    Int c;
    int eta = 0;
    FieldElem angle;                 // unit coefficient <angle>
    std::vector<FieldElem> entries;
};

struct MWExpr {
    FieldPtr k;
    int n = 0;                       // common degree entries - eta
    std::vector<MWTerm> terms;
};

MWExpr exprZero(const FieldPtr& k, int n);
MWExpr exprSymbol(const FieldPtr& k, const std::vector<FieldElem>& entries);
MWExpr exprAngle(const FieldPtr& k, const FieldElem& a);   // <a> as a degree-0 expr
MWExpr exprConst(const FieldPtr& k, const Int& c);
MWExpr exprEtaPow(const FieldPtr& k, int s);               // eta^s
MWExpr exprAdd(const MWExpr& x, const MWExpr& y);
MWExpr exprNeg(const MWExpr& x);
MWExpr exprScale(const MWExpr& x, const Int& c);
MWExpr exprMul(const MWExpr& x, const MWExpr& y);
MWExpr exprEta(const MWExpr& x);
MWExpr exprPromote(const FieldPtr& k, const MWExpr& x);    // canonical inclusion
std::string showExpr(const MWExpr& x);

/// Image in the pullback model; the normal form. Decidable bases only
/// (degree <= 1 data additionally works over number fields).
MWElem evaluate(const MWExpr& e);

// Twisted element: elem tensor a chosen generator of a one-dimensional space
// with an integer grading. Changing generator g' = u g rescales by <u>.
struct TwistedElem {
    MWElem elem;
    int grading = 0;
    std::string gen;
};

TwistedElem twisted(const MWElem& x, int grading, const std::string& gen);
/// Rewrite on the new generator newGen = u * oldGen.
TwistedElem twistChangeBasis(const TwistedElem& t, const FieldElem& u, const std::string& newGen);
bool twistedEq(const TwistedElem& a, const TwistedElem& b);
/// Tensor two twisted elements; swapFactors applies the (-1)^{i i'} rule.
TwistedElem twistTensor(const TwistedElem& a, const TwistedElem& b);
TwistedElem twistSwap(const TwistedElem& a, const TwistedElem& b);

}  // namespace mwk

#endif
