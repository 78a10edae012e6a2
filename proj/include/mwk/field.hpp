#ifndef MWK_FIELD_HPP
#define MWK_FIELD_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mwk/numbers.hpp"

namespace mwk {

// Concrete exact fields: F_p, towers of simple extensions over F_p or Q,
// the rationals, formal real/complex closures (for signatures only), and
// one-variable rational function fields.
enum class FieldKind { Finite, Rationals, Reals, Complexes, Extension, Function };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldElem;
struct RatRep;

// Dense univariate polynomial over an exact field, trimmed (no trailing zeros).
struct Poly {
    FieldPtr k;
    std::vector<FieldElem> c;
};

struct FieldElem {
    FieldPtr k;
    std::int64_t z = 0;                    // Finite residue in [0,p)
    Rat q;                                 // Rationals / Reals / Complexes
    std::vector<FieldElem> ext;            // Extension coords over base, trimmed
    std::shared_ptr<const RatRep> rf;      // Function field fraction
};

// Reduced fraction of polynomials, monic denominator.
struct RatRep {
    Poly num, den;
};

class Field {
public:
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0;                    // Finite characteristic
    FieldPtr base;                         // Extension / Function
    std::shared_ptr<const Poly> mod;       // Extension modulus, monic irreducible
    std::string gen = "t";                 // generator / variable name

    std::int64_t characteristic() const;
    bool finite() const { return kind == FieldKind::Finite || (kind == FieldKind::Extension && characteristic() != 0); }
    Int order() const;                     // finite fields only
    int extensionDegree() const;           // Extension: degree of mod
};

bool sameField(const FieldPtr& a, const FieldPtr& b);
std::string showField(const FieldPtr& k);

// --- factories ----------------------------------------------------------

FieldPtr gfPrime(std::int64_t p);
/// F_{p^d} over the deterministic lex-least monic irreducible modulus.
FieldPtr gfCanonical(std::int64_t p, int d);
FieldPtr rationalsField();
FieldPtr realsFormal();
FieldPtr complexesFormal();
/// Simple extension base[x]/(modulus); modulus monic; irreducibility checked
/// when `checkIrreducible` (prime-field moduli use Rabin's test, the rest the
/// caller's own factorization certificate).
FieldPtr makeExtension(const FieldPtr& base, const Poly& modulus, const std::string& genName,
                       bool checkIrreducible = false);
FieldPtr makeFunctionField(const FieldPtr& base, const std::string& var);

// --- element arithmetic ---------------------------------------------------

FieldElem zeroEl(const FieldPtr& k);
FieldElem oneEl(const FieldPtr& k);
FieldElem fromInt(const FieldPtr& k, const Int& n);
FieldElem fromRat(const FieldPtr& k, const Rat& r);
/// Class of the generator (Extension) or the variable (Function).
FieldElem genEl(const FieldPtr& k);

bool isZero(const FieldElem& a);
bool isOne(const FieldElem& a);
bool eqEl(const FieldElem& a, const FieldElem& b);

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem inv(const FieldElem& a);
FieldElem divEl(const FieldElem& a, const FieldElem& b);
FieldElem powEl(const FieldElem& a, Int e);

/// Canonical inclusion into an extension/function field built over a's field
/// (possibly through several stages). Throws if there is no canonical path.
FieldElem promote(const FieldPtr& k, const FieldElem& a);

/// If a lies in the canonical image of `sub`, return the preimage.
bool tryRestrict(const FieldElem& a, const FieldPtr& sub, FieldElem* out);

/// Square-class test. Supported: finite fields, Q, formal reals/complexes,
/// and (via factorization) F_q(t) and Q(t).
bool isSquareEl(const FieldElem& a);

/// All elements of a finite field, in a fixed deterministic order.
std::vector<FieldElem> allElements(const FieldPtr& k);

/// Seeded random element; `height` bounds numerators/denominators (Q) or
/// degrees (function fields).
FieldElem randomElem(const FieldPtr& k, std::mt19937_64& rng, int height = 6);
FieldElem randomUnit(const FieldPtr& k, std::mt19937_64& rng, int height = 6);

std::string showElem(const FieldElem& a);

// --- polynomials ----------------------------------------------------------

Poly polyZero(const FieldPtr& k);
Poly polyOne(const FieldPtr& k);
Poly polyFromCoeffs(const FieldPtr& k, std::vector<FieldElem> cs);
Poly polyVar(const FieldPtr& k);                 // the monomial x
Poly polyConst(const FieldPtr& k, const FieldElem& a);

bool polyIsZero(const Poly& f);
int degP(const Poly& f);                         // -1 for the zero polynomial
const FieldElem& leadCoeff(const Poly& f);
FieldElem coeffAt(const Poly& f, int i);
bool eqP(const Poly& f, const Poly& g);

Poly pAdd(const Poly& f, const Poly& g);
Poly pSub(const Poly& f, const Poly& g);
Poly pNeg(const Poly& f);
Poly pMul(const Poly& f, const Poly& g);
Poly pScale(const Poly& f, const FieldElem& a);
std::pair<Poly, Poly> pDivRem(const Poly& f, const Poly& g);
Poly pMod(const Poly& f, const Poly& g);
Poly pGcd(const Poly& f, const Poly& g);         // monic
Poly pMonic(const Poly& f);
Poly pPow(const Poly& f, Int e);
Poly pPowMod(const Poly& f, Int e, const Poly& m);
Poly pDeriv(const Poly& f);
FieldElem pEval(const Poly& f, const FieldElem& x);
Poly pRandom(const FieldPtr& k, int deg, std::mt19937_64& rng, int height = 6);
std::string showPoly(const Poly& f, const std::string& var);

/// Extended gcd: returns (g, u, v) monic g with u f + v h = g.
std::tuple<Poly, Poly, Poly> pXgcd(const Poly& f, const Poly& h);

/// Rabin irreducibility test over a finite field.
bool irreducibleFF(const Poly& f);

/// Elements of function fields.
FieldElem makeFrac(const FieldPtr& ff, const Poly& num, const Poly& den);
const Poly& fracNum(const FieldElem& a);
const Poly& fracDen(const FieldElem& a);

// --- generic linear algebra (exact) ---------------------------------------

using Vec = std::vector<FieldElem>;
using Mat = std::vector<Vec>;

/// Solve A x = b over the field; returns false when inconsistent.
bool solveLinear(const FieldPtr& k, Mat A, Vec b, Vec* sol);
int rankOf(const FieldPtr& k, Mat A);
FieldElem detOf(const FieldPtr& k, Mat A);

}  // namespace mwk

#endif
