#include "mwk/mw.hpp"

namespace mwk {

namespace {

bool decidableBase(const FieldPtr& k) {
    return k->finite() || k->kind == FieldKind::Rationals;
}

void checkDegree(int n) {
    if (n > kDegreeCap || n < -kDegreeCap)
        throw std::invalid_argument("mw: degree cap |n| <= 6 exceeded");
}

MilnorElem milnorZeroFor(const FieldPtr& k, int n) {
    MilnorElem m;
    m.k = k;
    m.n = std::max(n, 0);
    if (m.n == 1) m.unitVal = oneEl(k);
    if (m.n >= 1) m.hasSymbols = true;
    return m;
}

}  // namespace

MWElem mwZero(const FieldPtr& k, int n) {
    checkDegree(n);
    MWElem x;
    x.k = k;
    x.n = n;
    x.milnor = milnorZeroFor(k, n);
    x.form = gwZero(k);
    return x;
}

void mwValidate(const MWElem& x) {
    if (!decidableBase(x.k)) return;
    int n = std::max(x.n, 0);
    if (x.n < 0) {
        if (!kmEq(x.milnor, kmZero(x.k, 0)) && x.milnor.n == 0) return;
        return;
    }
    if (fundamentalIdealLevel(x.form, std::min(n, kDegreeCap)) < std::min(n, kDegreeCap))
        throw std::logic_error("mwValidate: form leg not in I^n");
    if (!mod2Eq(kmMod2(x.milnor), formMod2Class(x.form, n)))
        throw std::logic_error("mwValidate: legs disagree in Ibar^n");
}

MWElem mwFromGW(const GWClass& q) {
    MWElem x;
    x.k = q.k;
    x.n = 0;
    x.milnor = kmInt(q.k, Int(gwRank(q)));
    x.form = q;
    mwValidate(x);
    return x;
}

MWElem mwSymbol(const FieldPtr& k, const std::vector<FieldElem>& entries) {
    int n = static_cast<int>(entries.size());
    checkDegree(n);
    MWElem x;
    x.k = k;
    x.n = n;
    if (n == 0) {
        x.milnor = kmInt(k, 1);
        x.form = gwOne(k);
        return x;
    }
    x.milnor = kmSymbol(k, entries);
    // Pfister leg <<a_1,...,a_n>> = prod (<a_i> - 1)
    GWClass f = gwOne(k);
    for (auto& a : entries) {
        if (isZero(a)) throw std::invalid_argument("mwSymbol: zero entry");
        f = gwMul(f, gwSub(gwFromEntry(a), gwOne(k)));
    }
    x.form = f;
    mwValidate(x);
    return x;
}

MWElem mwAngle(const FieldElem& a) { return mwFromGW(gwFromEntry(a)); }

MWElem mwEpsilon(const FieldPtr& k) { return mwNeg(mwAngle(neg(oneEl(k)))); }

MWElem mwH(const FieldPtr& k) { return mwFromGW(gwHyperbolic(k)); }

MWElem mwAdd(const MWElem& x, const MWElem& y) {
    if (!sameField(x.k, y.k) || x.n != y.n) throw std::invalid_argument("mwAdd: base or degree mismatch");
    MWElem r;
    r.k = x.k;
    r.n = x.n;
    r.milnor = kmAdd(x.milnor, y.milnor);
    r.form = gwAdd(x.form, y.form);
    return r;
}

MWElem mwNeg(const MWElem& x) {
    MWElem r = x;
    r.milnor = kmNeg(x.milnor);
    r.form = gwNeg(x.form);
    return r;
}

MWElem mwSub(const MWElem& x, const MWElem& y) { return mwAdd(x, mwNeg(y)); }

MWElem mwMul(const MWElem& x, const MWElem& y) {
    if (!sameField(x.k, y.k)) throw std::invalid_argument("mwMul: base mismatch");
    int n = x.n + y.n;
    checkDegree(n);
    MWElem r;
    r.k = x.k;
    r.n = n;
    r.form = gwMul(x.form, y.form);
    // Milnor leg: the product of the legs, with the rank integer acting as a
    // scalar in degree 0 and negative-degree legs contributing 0.
    if (x.n <= 0 && y.n <= 0) {
        r.milnor = x.n == 0 && y.n == 0 ? kmInt(x.k, x.milnor.z * y.milnor.z)
                                        : milnorZeroFor(x.k, n);
    } else if (x.n <= 0) {
        r.milnor = x.n == 0 ? kmScale(y.milnor, x.milnor.z) : milnorZeroFor(x.k, n);
    } else if (y.n <= 0) {
        r.milnor = y.n == 0 ? kmScale(x.milnor, y.milnor.z) : milnorZeroFor(x.k, n);
    } else {
        r.milnor = kmMul(x.milnor, y.milnor);
    }
    return r;
}

MWElem mwScale(const MWElem& x, const Int& c) {
    MWElem r = x;
    r.milnor = kmScale(x.milnor, c);
    r.form = gwScale(x.form, c);
    return r;
}

MWElem mwEta(const MWElem& x) {
    checkDegree(x.n - 1);
    MWElem r;
    r.k = x.k;
    r.n = x.n - 1;
    r.milnor = milnorZeroFor(x.k, r.n);
    r.form = x.form;  // I^n included in I^{n-1}
    return r;
}

MWElem mwAngleMul(const MWElem& x, const FieldElem& a) {
    if (isZero(a)) throw std::invalid_argument("mwAngleMul: zero unit");
    MWElem r = x;
    r.form = gwMul(gwFromEntry(a), x.form);
    return r;
}

bool mwEq(const MWElem& x, const MWElem& y) {
    if (!sameField(x.k, y.k) || x.n != y.n) throw std::invalid_argument("mwEq: base or degree mismatch");
    if (!kmEq(x.milnor, y.milnor)) return false;
    return wittEq(x.form, y.form);
}

bool mwIsZero(const MWElem& x) { return mwEq(x, mwZero(x.k, x.n)); }

std::string showMW(const MWElem& x) {
    return "(" + showMilnor(x.milnor) + ", " + showGWCanonical(x.form) + ")_" + std::to_string(x.n);
}

MilnorElem forgetful(const MWElem& x) { return x.milnor; }

MWElem hyperbolic(const MilnorElem& y) {
    if (y.n == 0) {
        GWClass f = gwScale(gwHyperbolic(y.k), y.z);
        MWElem r;
        r.k = y.k;
        r.n = 0;
        r.milnor = kmInt(y.k, 2 * y.z);
        r.form = f;
        mwValidate(r);
        return r;
    }
    if (!y.hasSymbols) throw std::invalid_argument("hyperbolic: need a symbol presentation");
    MWElem r = mwZero(y.k, y.n);
    MWElem h = mwH(y.k);
    for (auto& [c, es] : y.symbols)
        r = mwAdd(r, mwScale(mwMul(h, mwSymbol(y.k, es)), c));
    return r;
}

// --- expressions -------------------------------------------------------------

MWExpr exprZero(const FieldPtr& k, int n) { return MWExpr{k, n, {}}; }

MWExpr exprSymbol(const FieldPtr& k, const std::vector<FieldElem>& entries) {
    for (auto& e : entries)
        if (isZero(e)) throw std::invalid_argument("exprSymbol: zero entry");
    MWTerm t{Int(1), 0, oneEl(k), entries};
    return MWExpr{k, static_cast<int>(entries.size()), {t}};
}

MWExpr exprAngle(const FieldPtr& k, const FieldElem& a) {
    if (isZero(a)) throw std::invalid_argument("exprAngle: zero unit");
    MWTerm t{Int(1), 0, a, {}};
    return MWExpr{k, 0, {t}};
}

MWExpr exprConst(const FieldPtr& k, const Int& c) {
    if (c == 0) return exprZero(k, 0);
    MWTerm t{c, 0, oneEl(k), {}};
    return MWExpr{k, 0, {t}};
}

MWExpr exprEtaPow(const FieldPtr& k, int s) {
    MWTerm t{Int(1), s, oneEl(k), {}};
    return MWExpr{k, -s, {t}};
}

MWExpr exprAdd(const MWExpr& x, const MWExpr& y) {
    if (!sameField(x.k, y.k)) throw std::invalid_argument("exprAdd: base mismatch");
    if (!x.terms.empty() && !y.terms.empty() && x.n != y.n)
        throw std::invalid_argument("exprAdd: inhomogeneous sum");
    MWExpr r = x;
    if (x.terms.empty()) r.n = y.n;
    r.terms.insert(r.terms.end(), y.terms.begin(), y.terms.end());
    return r;
}

MWExpr exprNeg(const MWExpr& x) { return exprScale(x, -1); }

MWExpr exprScale(const MWExpr& x, const Int& c) {
    MWExpr r = x;
    if (c == 0) {
        r.terms.clear();
        return r;
    }
    for (auto& t : r.terms) t.c *= c;
    return r;
}

MWExpr exprMul(const MWExpr& x, const MWExpr& y) {
    if (!sameField(x.k, y.k)) throw std::invalid_argument("exprMul: base mismatch");
    MWExpr r{x.k, x.n + y.n, {}};
    for (auto& a : x.terms)
        for (auto& b : y.terms) {
            MWTerm t;
            t.c = a.c * b.c;
            t.eta = a.eta + b.eta;
            t.angle = mul(a.angle, b.angle);
            t.entries = a.entries;
            t.entries.insert(t.entries.end(), b.entries.begin(), b.entries.end());
            r.terms.push_back(std::move(t));
        }
    return r;
}

MWExpr exprEta(const MWExpr& x) {
    MWExpr r = x;
    r.n = x.n - 1;
    for (auto& t : r.terms) ++t.eta;
    return r;
}

MWExpr exprPromote(const FieldPtr& k, const MWExpr& x) {
    MWExpr r{k, x.n, {}};
    for (auto& t : x.terms) {
        MWTerm s;
        s.c = t.c;
        s.eta = t.eta;
        s.angle = promote(k, t.angle);
        for (auto& e : t.entries) s.entries.push_back(promote(k, e));
        r.terms.push_back(std::move(s));
    }
    return r;
}

std::string showExpr(const MWExpr& x) {
    if (x.terms.empty()) return "0";
    std::string s;
    for (auto& t : x.terms) {
        if (!s.empty()) s += " + ";
        if (t.c != 1) s += t.c.str() + "*";
        if (t.eta == 1) s += "eta*";
        if (t.eta > 1) s += "eta^" + std::to_string(t.eta) + "*";
        if (!isOne(t.angle)) s += "<" + showElem(t.angle) + ">*";
        if (t.entries.empty()) {
            s += "1";
        } else {
            s += "[";
            for (size_t i = 0; i < t.entries.size(); ++i) {
                if (i) s += ",";
                s += showElem(t.entries[i]);
            }
            s += "]";
        }
    }
    return s;
}

MWElem evaluate(const MWExpr& e) {
    MWElem acc = mwZero(e.k, e.n);
    for (auto& t : e.terms) {
        int m = static_cast<int>(t.entries.size());
        int n = m - t.eta;
        if (n != e.n) throw std::invalid_argument("evaluate: inhomogeneous expression");
        // form leg: <angle> * <<a_1,...,a_m>>
        GWClass f = gwFromEntry(t.angle);
        for (auto& a : t.entries) f = gwMul(f, gwSub(gwFromEntry(a), gwOne(e.k)));
        MWElem term;
        term.k = e.k;
        term.n = n;
        term.form = gwScale(f, t.c);
        if (t.eta == 0) {
            term.milnor = kmScale(kmSymbol(e.k, t.entries), t.c);
        } else {
            term.milnor = kmZero(e.k, std::max(n, 0));
        }
        acc = mwAdd(acc, term);
    }
    mwValidate(acc);
    return acc;
}

// --- twists ------------------------------------------------------------------

TwistedElem twisted(const MWElem& x, int grading, const std::string& gen) {
    return TwistedElem{x, grading, gen};
}

TwistedElem twistChangeBasis(const TwistedElem& t, const FieldElem& u, const std::string& newGen) {
    if (isZero(u)) throw std::invalid_argument("twistChangeBasis: zero unit");
    // x (x) (u g') = <u> x (x) g'  with newGen satisfying oldGen = u * newGen
    return TwistedElem{mwAngleMul(t.elem, u), t.grading, newGen};
}

bool twistedEq(const TwistedElem& a, const TwistedElem& b) {
    if (a.grading != b.grading || a.gen != b.gen) return false;
    return mwEq(a.elem, b.elem);
}

TwistedElem twistTensor(const TwistedElem& a, const TwistedElem& b) {
    return TwistedElem{mwMul(a.elem, b.elem), a.grading + b.grading,
                       a.gen + "(x)" + b.gen};
}

TwistedElem twistSwap(const TwistedElem& a, const TwistedElem& b) {
    TwistedElem r{mwMul(b.elem, a.elem), a.grading + b.grading, b.gen + "(x)" + a.gen};
    if ((a.grading % 2 != 0) && (b.grading % 2 != 0))
        r.elem = mwAngleMul(r.elem, neg(oneEl(r.elem.k)));
    return r;
}

}  // namespace mwk
