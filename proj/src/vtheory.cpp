#include "mwk/vtheory.hpp"

namespace mwk {

namespace {

struct SEntry {
    bool isPi;
    FieldElem u;  // unit value when !isPi
};

struct STerm {
    Int c;
    int eta = 0;
    int piParity = 0;         // coefficient <pi>^piParity
    FieldElem angleUnit;      // unit square-class coefficient
    std::vector<SEntry> es;
};

struct EntryOption {
    Int c;
    int piBit;
    SEntry e;
};

// [pi^e] = (n0 + n1 <pi>)[pi], folding the inverse rule for e < 0
void piPowerCoeffs(long e, Int* n0, Int* n1) {
    long a = e < 0 ? -e : e;
    Int ceilH((a + 1) / 2), floorH(a / 2);
    if (e >= 0) {
        *n0 = ceilH;
        *n1 = floorH;
    } else if (a % 2 == 0) {
        *n0 = -ceilH;
        *n1 = -floorH;
    } else {
        *n0 = -floorH;
        *n1 = -ceilH;
    }
}

// [f] = [pi^e] + <pi^e>[u] for f = pi^e u
std::vector<EntryOption> entryOptions(const FieldElem& f, const Valuation& v, const FieldElem& pi) {
    if (isZero(f)) throw std::invalid_argument("residue: zero symbol entry");
    long e = valuationOf(v, f).first;
    FieldElem u = mul(f, powEl(pi, Int(-e)));
    std::vector<EntryOption> out;
    if (e != 0) {
        Int n0, n1;
        piPowerCoeffs(e, &n0, &n1);
        if (n0 != 0) out.push_back({n0, 0, {true, zeroEl(f.k)}});
        if (n1 != 0) out.push_back({n1, 1, {true, zeroEl(f.k)}});
    }
    if (!isOne(u)) out.push_back({Int(1), static_cast<int>(((e % 2) + 2) % 2), {false, u}});
    return out;
}

// move pi's to the front by eps-commutation, collapse [pi][pi] = [pi][-1],
// and fold the <pi>-parity back into leading symbols
std::vector<STerm> normalizeTerm(STerm t, const FieldPtr& ff) {
    FieldElem minusOne = neg(oneEl(ff));
    long swaps = 0;
    std::vector<SEntry> sorted;
    long unitsSeen = 0;
    for (auto& e : t.es) {
        if (e.isPi) {
            swaps += unitsSeen;
            sorted.insert(sorted.begin() + (static_cast<long>(sorted.size()) - unitsSeen), e);
        } else {
            ++unitsSeen;
            sorted.push_back(e);
        }
    }
    if (swaps % 2) {
        t.c = -t.c;
        t.angleUnit = neg(t.angleUnit);
    }
    size_t nPi = 0;
    while (nPi < sorted.size() && sorted[nPi].isPi) ++nPi;
    for (size_t i = 1; i < nPi; ++i) sorted[i] = {false, minusOne};
    t.es = std::move(sorted);
    if (t.piParity == 0) return {t};
    // <pi> x = x + eta [pi] x  when x has no leading pi;
    // <pi>[pi] X = [pi] X + eta [pi][-1] X
    STerm t1 = t, t2 = t;
    t1.piParity = t2.piParity = 0;
    ++t2.eta;
    if (nPi >= 1) {
        t2.es.insert(t2.es.begin() + 1, {false, minusOne});
    } else {
        t2.es.insert(t2.es.begin(), {true, zeroEl(ff)});
    }
    return {t1, t2};
}

FieldElem uniformizerOf(const ResidueProblem& p) {
    if (!p.hasOverride) return uniformizer(p.v);
    auto [e, u] = valuationOf(p.v, p.uniformizerOverride);
    if (e != 1) throw std::invalid_argument("residue: override is not a uniformizer");
    return p.uniformizerOverride;
}

}  // namespace

MWExpr residueExpr(const ResidueProblem& p) {
    const Valuation& v = p.v;
    if (!sameField(p.expr.k, v.ff)) throw std::invalid_argument("residue: expression not over the valued field");
    FieldElem pi = uniformizerOf(p);
    FieldPtr kappa = v.residueField;
    MWExpr out = exprZero(kappa, p.expr.n - 1);
    for (auto& term : p.expr.terms) {
        if (static_cast<int>(term.entries.size()) - term.eta != p.expr.n)
            throw std::invalid_argument("residue: inhomogeneous expression");
        // seed with the angle coefficient split as <pi^e u>
        auto [ea, ua] = valuationOf(v, term.angle);
        STerm seed;
        seed.c = term.c;
        seed.eta = term.eta;
        seed.piParity = static_cast<int>(((ea % 2) + 2) % 2);
        seed.angleUnit = ua;
        std::vector<STerm> terms{seed};
        for (auto& f : term.entries) {
            auto opts = entryOptions(f, v, pi);
            std::vector<STerm> next;
            for (auto& t : terms)
                for (auto& o : opts) {
                    STerm s = t;
                    s.c *= o.c;
                    s.piParity ^= o.piBit;
                    s.es.push_back(o.e);
                    next.push_back(std::move(s));
                }
            terms = std::move(next);
        }
        for (auto& raw : terms) {
            for (auto& nt : normalizeTerm(raw, v.ff)) {
                if (nt.es.empty() || !nt.es[0].isPi) continue;  // units only: residue 0
                MWTerm rt;
                rt.c = nt.c;
                rt.eta = nt.eta;
                rt.angle = residueClass(v, nt.angleUnit);
                bool dead = false;
                for (size_t i = 1; i < nt.es.size(); ++i) {
                    FieldElem r = residueClass(v, nt.es[i].u);
                    if (isOne(r)) { dead = true; break; }
                    rt.entries.push_back(r);
                }
                if (dead || rt.c == 0) continue;
                out.terms.push_back(std::move(rt));
            }
        }
    }
    return out;
}

TwistedElem residue(const ResidueProblem& p) {
    MWExpr r = residueExpr(p);
    return twisted(evaluate(r), 1, showElem(uniformizerOf(p)));
}

MWExpr specializeExpr(const ResidueProblem& p) {
    FieldElem pi = uniformizerOf(p);
    ResidueProblem shifted = p;
    shifted.expr = exprMul(exprSymbol(p.v.ff, {pi}), p.expr);
    MWExpr a = residueExpr(shifted);
    MWExpr b = residueExpr(p);
    FieldPtr kappa = p.v.residueField;
    MWExpr corr = exprMul(exprSymbol(kappa, {neg(oneEl(kappa))}), b);
    return exprAdd(a, exprNeg(corr));
}

MWElem specialize(const ResidueProblem& p) { return evaluate(specializeExpr(p)); }

UnramifiedCertificate isUnramified(const MWExpr& x, Curve curve) {
    if (x.k->kind != FieldKind::Function) throw std::invalid_argument("isUnramified: not over a function field");
    UnramifiedCertificate cert;
    // places where some entry or angle is a non-unit
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
    Poly tPoly = polyVar(x.k->base);
    bool ok = true;
    for (auto& v : places) {
        if (curve == Curve::Gm && eqP(v.place, tPoly)) continue;
        PlaceReport rep;
        rep.v = v;
        rep.residue = residueExpr(ResidueProblem{v, x});
        MWElem val = evaluate(rep.residue);  // throws outside the decidable envelope
        rep.decided = true;
        rep.vanishes = mwIsZero(val);
        ok = ok && rep.vanishes;
        cert.places.push_back(std::move(rep));
    }
    cert.unramified = ok;
    return cert;
}

MWElem transferFunctional(const RelExt& R, const std::vector<FieldElem>& sOnBasis, const MWElem& y) {
    if (!sameField(y.k, R.K)) throw std::invalid_argument("transfer: element not over the extension");
    if (R.relDeg == 1 && sameField(R.K, R.U)) return y;
    MWElem r;
    r.k = R.U;
    r.n = y.n;
    r.milnor = kmNorm(R, y.milnor);
    r.form = scharlauTransferGW(R, sOnBasis, y.form);
    mwValidate(r);
    return r;
}

MWElem transferCohomological(const RelExt& R, const MWElem& y) {
    if (R.relDeg == 1 && sameField(R.K, R.U)) return y;
    return transferFunctional(R, R.traceFunctional(), y);
}

FieldElem omega0(const RelExt& R) {
    Poly p = R.minPoly;
    std::int64_t ell = R.U->characteristic();
    Int power = 1;
    while (polyIsZero(pDeriv(p))) {
        if (ell == 0) throw std::logic_error("omega0: zero derivative in characteristic 0");
        std::vector<FieldElem> cs;
        for (int i = 0; i <= degP(p); i += static_cast<int>(ell)) cs.push_back(coeffAt(p, i));
        p = polyFromCoeffs(R.U, std::move(cs));
        power *= ell;
    }
    Poly dp = pDeriv(p);
    FieldElem x = powEl(R.g, power);
    FieldElem val = zeroEl(R.K);
    FieldElem xp = oneEl(R.K);
    for (int i = 0; i <= degP(dp); ++i) {
        val = add(val, mul(R.embed(coeffAt(dp, i)), xp));
        xp = mul(xp, x);
    }
    return val;
}

GeometricTransferData geometricData(const FieldPtr& F, const Poly& p) {
    GeometricTransferData G;
    G.F = F;
    G.ff = makeFunctionField(F, "t");
    G.vp = placeValuation(G.ff, p);
    return G;
}

MWElem transferGeometric(const GeometricTransferData& G, const MWExpr& yOverKappa) {
    FieldPtr kappa = G.vp.residueField;
    if (!sameField(yOverKappa.k, kappa))
        throw std::invalid_argument("transferGeometric: element not over the residue field of (p)");
    FieldElem pEl = makeFrac(G.ff, G.vp.place, polyOne(G.F));
    MWExpr theta = exprZero(G.ff, yOverKappa.n + 1);
    for (auto& t : yOverKappa.terms) {
        FieldElem angleF;
        if (!tryRestrict(t.angle, G.F, &angleF))
            throw std::domain_error("transferGeometric: lift not constructible (angle not F-rational)");
        MWTerm lift;
        lift.c = t.c;
        lift.eta = t.eta;
        lift.angle = promote(G.ff, angleF);
        lift.entries.push_back(pEl);
        for (auto& e : t.entries) {
            FieldElem eF;
            if (!tryRestrict(e, G.F, &eF))
                throw std::domain_error("transferGeometric: lift not constructible (entry not F-rational)");
            lift.entries.push_back(promote(G.ff, eF));
        }
        theta.terms.push_back(std::move(lift));
    }
    ResidueProblem atInf{infinityValuation(G.ff), theta};
    MWExpr minus = exprNeg(residueExpr(atInf));
    return evaluate(minus);
}

MWElem nEpsilon(const FieldPtr& k, const Int& n) {
    Int m = n < 0 ? -n : n;
    GWClass g = gwZero(k);
    for (Int i = 1; i <= m; ++i)
        g = gwAdd(g, (i - 1) % 2 == 0 ? gwOne(k) : gwFromEntry(neg(oneEl(k))));
    MWElem r = mwFromGW(g);
    return n < 0 ? mwNeg(r) : r;
}

}  // namespace mwk
