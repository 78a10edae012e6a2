#ifndef MWK_GERSTEN_HPP
#define MWK_GERSTEN_HPP

#include "mwk/vtheory.hpp"

namespace mwk {

// Rost-Schmid machinery on the point, A^1, Gm and P^1: divisor classes of
// rational functions, transfer pushforwards to the base point, cohomology
// decisions, and the contraction decomposition over Gm.

enum class Scheme { Point, A1, Gm, P1 };
std::string showScheme(Scheme s);

// Degree-1 component of the Rost-Schmid complex at one place. Values are
// stored in the canonical basis: uniformizer = the monic place polynomial
// (-1/t at infinity), global twists trivialized by dt (d(-1/t) at infinity).
struct RSValue {
    Valuation v;
    MWElem val;  // over v.residueField
};

struct RSFamily {
    FieldPtr F;
    Scheme scheme = Scheme::P1;
    int weight = 1;
    std::vector<RSValue> entries;  // finite support, canonically sorted
};

RSFamily rsAdd(const RSFamily& a, const RSFamily& b);
RSFamily rsNeg(const RSFamily& a);
RSFamily rsSub(const RSFamily& a, const RSFamily& b);
bool rsIsZero(const RSFamily& a);

struct DivisorClass {
    Scheme scheme = Scheme::P1;
    FieldElem g;
    RSFamily family;
};

/// Residue family of [g] with the O(D)-twist trivialized by the global
/// equation; supported on the places of the given curve.
DivisorClass divisorClass(const FieldPtr& F, Scheme scheme, const FieldElem& g);

/// Pushforward along the structure map: geometric (f_q) transfers at finite
/// places after the canonical-orientation identification, the raw value at
/// infinity. Entries must have separable residue fields (always true here).
MWElem pushforwardPoint(const RSFamily& fam);

/// Total residue family of an arbitrary weight-j expression on a curve.
RSFamily totalResidueFamily(const FieldPtr& F, Scheme scheme, int weight, const MWExpr& x);

// --- cohomology decisions ----------------------------------------------------

struct RSComplexDesc {
    FieldPtr F;
    Scheme scheme = Scheme::P1;
    int weight = 1;
    bool omegaTwist = false;
};

enum class Verdict { Equal, NotEqual, Undecided };

struct H1Decision {
    Verdict verdict = Verdict::Undecided;
    std::string reason;
};

/// Envelope: |weight| <= 4 over finite fields, <= 2 over Q.
void checkEnvelope(const RSComplexDesc& c);

/// H^0 membership: the unramified-kernel test with certificate.
bool h0Membership(const RSComplexDesc& c, const MWExpr& x, UnramifiedCertificate* cert);

/// Equality of two degree-1 families in H^1. Complete on A^1 (homotopy
/// invariance) and on P^1 in weight 1 with the omega twist (pushforward);
/// elsewhere a bounded preimage search that may return Undecided.
H1Decision h1Equal(const RSComplexDesc& c, const RSFamily& a, const RSFamily& b);

// --- contraction over Gm -------------------------------------------------------

struct ContractionResult {
    MWElem a;  // degree j
    MWElem b;  // degree j-1
};

/// Decomposition x = p^* a + [t] p^* b of an unramified class on Gm:
/// a = s_{t-1}(x), b = residue at (t) with uniformizer t.
ContractionResult contractionDecompose(const MWExpr& x);

/// Reconstruction check: residues on Gm vanish, s_{t-1}(x) = a, and at a
/// further unit rational point c, s_{t-c}(x) = a + [c] b.
bool contractionVerify(const MWExpr& x, const ContractionResult& r);

// --- named computations ---------------------------------------------------------

/// (t^{n+1}-1)/(t^{n+1}-t) over F(t).
FieldElem degreeLemmaFunction(const FieldPtr& F, int n);
/// Pushforward over Gm of div of the function above; the paper's value is <-1>.
MWElem degreeLemmaPushforward(const FieldPtr& F, int n);
/// Pushforward over P^1 of div(g); reciprocity says this vanishes.
MWElem reciprocityPushforward(const FieldPtr& F, const FieldElem& g);

}  // namespace mwk

#endif
