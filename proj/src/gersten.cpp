#include "mwk/gersten.hpp"

#include <algorithm>

namespace mwk {

std::string showScheme(Scheme s) {
    switch (s) {
        case Scheme::Point: return "Spec";
        case Scheme::A1: return "A1";
        case Scheme::Gm: return "Gm";
        case Scheme::P1: return "P1";
    }
    return "?";
}

namespace {

int placeOrder(const RSValue& x, const RSValue& y) {
    if (x.v.atInfinity != y.v.atInfinity) return x.v.atInfinity ? 1 : -1;
    if (x.v.atInfinity) return 0;
    return cmpPoly(x.v.place, y.v.place);
}

void sortFamily(RSFamily& f) {
    std::sort(f.entries.begin(), f.entries.end(),
              [](const RSValue& a, const RSValue& b) { return placeOrder(a, b) < 0; });
}

}  // namespace

RSFamily rsAdd(const RSFamily& a, const RSFamily& b) {
    if (!sameField(a.F, b.F) || a.scheme != b.scheme || a.weight != b.weight)
        throw std::invalid_argument("rsAdd: family mismatch");
    RSFamily r = a;
    for (auto& e : b.entries) {
        bool merged = false;
        for (auto& f : r.entries) {
            if (sameValuation(e.v, f.v)) {
                f.val = mwAdd(f.val, e.val);
                merged = true;
                break;
            }
        }
        if (!merged) r.entries.push_back(e);
    }
    sortFamily(r);
    return r;
}

RSFamily rsNeg(const RSFamily& a) {
    RSFamily r = a;
    for (auto& e : r.entries) e.val = mwNeg(e.val);
    return r;
}

RSFamily rsSub(const RSFamily& a, const RSFamily& b) { return rsAdd(a, rsNeg(b)); }

bool rsIsZero(const RSFamily& a) {
    for (auto& e : a.entries)
        if (!mwIsZero(e.val)) return false;
    return true;
}

DivisorClass divisorClass(const FieldPtr& F, Scheme scheme, const FieldElem& g) {
    if (isZero(g)) throw std::invalid_argument("divisorClass: zero function");
    if (g.k->kind != FieldKind::Function || !sameField(g.k->base, F))
        throw std::invalid_argument("divisorClass: function not over F(t)");
    if (scheme == Scheme::Point) throw std::invalid_argument("divisorClass: need a curve");
    DivisorClass D;
    D.scheme = scheme;
    D.g = g;
    D.family.F = F;
    D.family.scheme = scheme;
    D.family.weight = 1;
    Poly tPoly = polyVar(F);
    for (auto& v : supportPlaces(g)) {
        if (scheme == Scheme::Gm && eqP(v.place, tPoly)) continue;
        MWElem val = evaluate(residueExpr({v, exprSymbol(g.k, {g})}));
        D.family.entries.push_back({v, val});
    }
    if (scheme == Scheme::P1) {
        Valuation vinf = infinityValuation(g.k);
        if (valuationOf(vinf, g).first != 0) {
            MWElem val = evaluate(residueExpr({vinf, exprSymbol(g.k, {g})}));
            D.family.entries.push_back({vinf, val});
        }
    }
    sortFamily(D.family);
    return D;
}

MWElem pushforwardPoint(const RSFamily& fam) {
    MWElem acc = mwZero(fam.F, fam.weight - 1);
    for (auto& e : fam.entries) {
        if (e.v.atInfinity || degP(e.v.place) == 1) {
            acc = mwAdd(acc, e.val);
            continue;
        }
        RelExt R = canonicalRelExt(e.v.residueField, fam.F);
        acc = mwAdd(acc, transferFunctional(R, R.fqFunctional(), e.val));
    }
    return acc;
}

RSFamily totalResidueFamily(const FieldPtr& F, Scheme scheme, int weight, const MWExpr& x) {
    if (x.k->kind != FieldKind::Function || !sameField(x.k->base, F))
        throw std::invalid_argument("totalResidueFamily: expression not over F(t)");
    RSFamily fam;
    fam.F = F;
    fam.scheme = scheme;
    fam.weight = weight;
    std::vector<Valuation> places;
    auto addPlaces = [&](const FieldElem& f) {
        for (auto& v : supportPlaces(f)) {
            bool seen = false;
            for (auto& w : places) seen = seen || sameValuation(v, w);
            if (!seen) places.push_back(v);
        }
    };
    for (auto& t : x.terms) {
        if (!isOne(t.angle)) addPlaces(t.angle);
        for (auto& e : t.entries) addPlaces(e);
    }
    Poly tPoly = polyVar(F);
    for (auto& v : places) {
        if (scheme == Scheme::Gm && eqP(v.place, tPoly)) continue;
        MWElem val = evaluate(residueExpr({v, x}));
        if (!mwIsZero(val)) fam.entries.push_back({v, val});
    }
    if (scheme == Scheme::P1) {
        Valuation vinf = infinityValuation(x.k);
        MWElem val = evaluate(residueExpr({vinf, x}));
        if (!mwIsZero(val)) fam.entries.push_back({vinf, val});
    }
    sortFamily(fam);
    return fam;
}

void checkEnvelope(const RSComplexDesc& c) {
    int bound = c.F->finite() ? 4 : (c.F->kind == FieldKind::Rationals ? 2 : -1);
    if (bound < 0) throw std::domain_error("gersten: unsupported base field");
    if (c.weight > bound || c.weight < -bound)
        throw std::domain_error("gersten: weight outside the decidable envelope");
}

bool h0Membership(const RSComplexDesc& c, const MWExpr& x, UnramifiedCertificate* cert) {
    checkEnvelope(c);
    if (c.scheme == Scheme::Point) return true;
    if (c.scheme == Scheme::P1) {
        // unramified on A^1 plus trivial residue at infinity
        UnramifiedCertificate u = isUnramified(x, Curve::A1);
        Valuation vinf = infinityValuation(x.k);
        PlaceReport rep;
        rep.v = vinf;
        rep.residue = residueExpr({vinf, x});
        rep.decided = true;
        rep.vanishes = mwIsZero(evaluate(rep.residue));
        u.unramified = u.unramified && rep.vanishes;
        u.places.push_back(std::move(rep));
        if (cert) *cert = u;
        return u.unramified;
    }
    UnramifiedCertificate u = isUnramified(x, c.scheme == Scheme::A1 ? Curve::A1 : Curve::Gm);
    bool ok = u.unramified;
    if (cert) *cert = std::move(u);
    return ok;
}

H1Decision h1Equal(const RSComplexDesc& c, const RSFamily& a, const RSFamily& b) {
    checkEnvelope(c);
    RSFamily diff = rsSub(a, b);
    bool syntZero = true;
    try {
        syntZero = rsIsZero(diff);
    } catch (const std::exception&) {
        syntZero = false;
    }
    if (syntZero) return {Verdict::Equal, "families agree place by place"};
    if (c.scheme == Scheme::A1)
        return {Verdict::Equal, "H^1(A^1) = 0 by homotopy invariance"};
    if (c.scheme == Scheme::P1 && c.weight == 1 && c.omegaTwist) {
        MWElem p = pushforwardPoint(diff);
        if (mwIsZero(p)) return {Verdict::Equal, "pushforward to GW(F) vanishes"};
        return {Verdict::NotEqual, "pushforward to GW(F) distinguishes the classes"};
    }
    if (c.weight != 1)
        return {Verdict::Undecided, "preimage search implemented in weight 1 only"};
    // bounded preimage search over the support places
    std::vector<Poly> polys;
    for (auto& e : diff.entries)
        if (!e.v.atInfinity) polys.push_back(e.v.place);
    if (polys.size() > 4) return {Verdict::Undecided, "support too large for the bounded search"};
    FieldPtr ff = makeFunctionField(c.F, "t");
    std::vector<FieldElem> units{oneEl(c.F)};
    if (c.F->finite()) units.push_back(squareClassRep(neg(oneEl(c.F))));
    std::vector<int> exps(polys.size(), 0);
    while (true) {
        for (auto& u : units) {
            Poly m = polyConst(c.F, u);
            for (size_t i = 0; i < polys.size(); ++i)
                for (int e = 0; e < exps[i]; ++e) m = pMul(m, polys[i]);
            if (degP(m) >= 1) {
                FieldElem cand = makeFrac(ff, m, polyOne(c.F));
                RSFamily fam = totalResidueFamily(c.F, c.scheme, c.weight, exprSymbol(ff, {cand}));
                try {
                    if (rsIsZero(rsSub(fam, diff)))
                        return {Verdict::Equal, "difference is the boundary of [" + showElem(cand) + "]"};
                } catch (const std::exception&) {
                }
            }
        }
        size_t i = 0;
        while (i < exps.size() && exps[i] == 2) { exps[i] = 0; ++i; }
        if (i == exps.size()) break;
        ++exps[i];
    }
    return {Verdict::Undecided, "no boundary found in the bounded search"};
}

// --- contraction -----------------------------------------------------------------

ContractionResult contractionDecompose(const MWExpr& x) {
    UnramifiedCertificate cert = isUnramified(x, Curve::Gm);
    if (!cert.unramified) throw std::invalid_argument("contractionDecompose: ramified input");
    FieldPtr F = x.k->base;
    Poly tPoly = polyVar(F);
    Poly tMinus1 = polyFromCoeffs(F, {neg(oneEl(F)), oneEl(F)});
    ContractionResult r;
    r.b = evaluate(residueExpr({placeValuation(x.k, tPoly), x}));
    r.a = specialize({placeValuation(x.k, tMinus1), x});
    return r;
}

bool contractionVerify(const MWExpr& x, const ContractionResult& r) {
    UnramifiedCertificate cert = isUnramified(x, Curve::Gm);
    if (!cert.unramified) return false;
    FieldPtr F = x.k->base;
    Poly tPoly = polyVar(F);
    // s_{t-1}(x) = a and d_t(x) = b by construction; recheck both
    Poly tMinus1 = polyFromCoeffs(F, {neg(oneEl(F)), oneEl(F)});
    if (!mwEq(specialize({placeValuation(x.k, tMinus1), x}), r.a)) return false;
    if (!mwEq(evaluate(residueExpr({placeValuation(x.k, tPoly), x})), r.b)) return false;
    // one more rational unit point c: s_{t-c}(x) = a + [c] b
    auto tryPoint = [&](const FieldElem& cF) -> int {
        // entries must be units at (t-c)
        Poly tc = polyFromCoeffs(F, {neg(cF), oneEl(F)});
        Valuation v = placeValuation(x.k, tc);
        for (auto& t : x.terms) {
            if (!isOne(t.angle) && valuationOf(v, t.angle).first != 0) return -1;
            for (auto& e : t.entries)
                if (valuationOf(v, e).first != 0) return -1;
        }
        MWElem lhs = specialize({v, x});
        MWElem rhs = mwAdd(r.a, mwMul(mwSymbol(F, {cF}), r.b));
        return mwEq(lhs, rhs) ? 1 : 0;
    };
    if (F->finite()) {
        for (auto& cF : allElements(F)) {
            if (isZero(cF) || isOne(cF)) continue;
            int res = tryPoint(cF);
            if (res >= 0) return res == 1;
        }
        return true;  // no further rational unit point exists (e.g. tight supports over F_3)
    }
    for (int c = 2; c <= 20; ++c) {
        int res = tryPoint(fromInt(F, c));
        if (res >= 0) return res == 1;
    }
    return true;
}

// --- named computations -------------------------------------------------------------

FieldElem degreeLemmaFunction(const FieldPtr& F, int n) {
    if (n < 1) throw std::invalid_argument("degreeLemmaFunction: n >= 1");
    FieldPtr ff = makeFunctionField(F, "t");
    std::vector<FieldElem> numC(static_cast<size_t>(n) + 2, zeroEl(F));
    numC[0] = neg(oneEl(F));
    numC.back() = oneEl(F);
    std::vector<FieldElem> denC(static_cast<size_t>(n) + 2, zeroEl(F));
    denC[1] = neg(oneEl(F));
    denC.back() = oneEl(F);
    return makeFrac(ff, polyFromCoeffs(F, numC), polyFromCoeffs(F, denC));
}

MWElem degreeLemmaPushforward(const FieldPtr& F, int n) {
    DivisorClass D = divisorClass(F, Scheme::Gm, degreeLemmaFunction(F, n));
    return pushforwardPoint(D.family);
}

MWElem reciprocityPushforward(const FieldPtr& F, const FieldElem& g) {
    DivisorClass D = divisorClass(F, Scheme::P1, g);
    return pushforwardPoint(D.family);
}

}  // namespace mwk
