#ifndef MWK_MILNOR_HPP
#define MWK_MILNOR_HPP

#include "mwk/forms.hpp"
#include "mwk/valuation.hpp"

namespace mwk {

// Milnor K-theory class in a decidable canonical model.
//   F_q : Z in degree 0, F_q^x in degree 1, zero in degrees >= 2.
//   Q   : Z, Q^x, the complete system of local invariants in degree 2
//         (tame residues at odd primes, Hilbert bits at 2 and the real place),
//         real mod-2 bit in degrees >= 3.
//   F(t): formal Z-linear combination of symbols, no equality decision.
// Symbol-built elements also carry their formal symbol list; products that
// need it (degree >= 2 over Q) require this presentation.
struct MilnorElem {
    FieldPtr k;
    int n = 0;
    Int z = 0;                                   // degree 0
    FieldElem unitVal;                           // degree 1 (finite fields, and Q)
    std::map<Int, Int> tame;                     // Q degree 2: odd p -> residue mod p
    int bit2 = 1, bitInf = 1;                    // Q degree 2: +-1
    int realBit = 0;                             // Q degree >= 3
    bool hasSymbols = false;
    std::vector<std::pair<Int, std::vector<FieldElem>>> symbols;
};

MilnorElem kmZero(const FieldPtr& k, int n);
MilnorElem kmInt(const FieldPtr& k, const Int& m);
MilnorElem kmSymbol(const FieldPtr& k, const std::vector<FieldElem>& entries);
MilnorElem kmAdd(const MilnorElem& x, const MilnorElem& y);
MilnorElem kmNeg(const MilnorElem& x);
MilnorElem kmScale(const MilnorElem& x, const Int& c);
MilnorElem kmMul(const MilnorElem& x, const MilnorElem& y);
bool kmEq(const MilnorElem& x, const MilnorElem& y);
bool kmIsZero(const MilnorElem& x);
std::string showMilnor(const MilnorElem& x);

/// Tame symbol at a place of F(t): degree drops by one, values land in the
/// residue field model.
MilnorElem kmTame(const Valuation& v, const MilnorElem& x);

/// Norm map along K/F: degree 0 is multiplication by [K:F], degree 1 the
/// field norm, degrees >= 2 supported over finite fields only (target 0).
MilnorElem kmNorm(const RelExt& R, const MilnorElem& x);

// Mod-2 data comparable across the two legs of the Cartesian square.
struct Mod2Class {
    FieldPtr k;
    int n = 0;
    int parity = 0;                  // n = 0
    FieldElem sqClass;               // n = 1
    std::map<Int, int> bits;         // n = 2 over Q (key 0 = real place)
    int realBit = 0;                 // n >= 3 over Q
};

Mod2Class kmMod2(const MilnorElem& x);
/// Class of a form in I^n/I^{n+1}, expressed in the K^M_n/2 model
/// (the inverse of Milnor's s_n). Requires the level-n certificate.
Mod2Class formMod2Class(const GWClass& q, int n);
bool mod2Eq(const Mod2Class& a, const Mod2Class& b);

}  // namespace mwk

#endif
