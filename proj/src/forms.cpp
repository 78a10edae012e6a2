#include "mwk/forms.hpp"

#include <algorithm>

namespace mwk {

BilinearForm makeForm(const FieldPtr& k, std::vector<FieldElem> diag) {
    for (auto& a : diag)
        if (isZero(a)) throw std::invalid_argument("makeForm: zero diagonal entry");
    return BilinearForm{k, std::move(diag)};
}

BilinearForm formSum(const BilinearForm& a, const BilinearForm& b) {
    if (!sameField(a.k, b.k)) throw std::invalid_argument("formSum: field mismatch");
    BilinearForm r = a;
    r.diag.insert(r.diag.end(), b.diag.begin(), b.diag.end());
    return r;
}

GWClass gwZero(const FieldPtr& k) { return GWClass{k, {}, {}}; }
GWClass gwOne(const FieldPtr& k) { return GWClass{k, {oneEl(k)}, {}}; }

GWClass gwFromForm(const BilinearForm& f) { return GWClass{f.k, f.diag, {}}; }

GWClass gwFromEntry(const FieldElem& a) {
    if (isZero(a)) throw std::invalid_argument("gwFromEntry: zero entry");
    return GWClass{a.k, {a}, {}};
}

GWClass gwHyperbolic(const FieldPtr& k) { return GWClass{k, {oneEl(k), neg(oneEl(k))}, {}}; }

GWClass gwAdd(const GWClass& x, const GWClass& y) {
    if (!sameField(x.k, y.k)) throw std::invalid_argument("gwAdd: field mismatch");
    GWClass r = x;
    r.pos.insert(r.pos.end(), y.pos.begin(), y.pos.end());
    r.neg.insert(r.neg.end(), y.neg.begin(), y.neg.end());
    return r;
}

GWClass gwNeg(const GWClass& x) { return GWClass{x.k, x.neg, x.pos}; }
GWClass gwSub(const GWClass& x, const GWClass& y) { return gwAdd(x, gwNeg(y)); }

GWClass gwMul(const GWClass& x, const GWClass& y) {
    if (!sameField(x.k, y.k)) throw std::invalid_argument("gwMul: field mismatch");
    GWClass r{x.k, {}, {}};
    for (auto& a : x.pos) {
        for (auto& b : y.pos) r.pos.push_back(mul(a, b));
        for (auto& b : y.neg) r.neg.push_back(mul(a, b));
    }
    for (auto& a : x.neg) {
        for (auto& b : y.pos) r.neg.push_back(mul(a, b));
        for (auto& b : y.neg) r.pos.push_back(mul(a, b));
    }
    return r;
}

GWClass gwScale(const GWClass& x, const Int& n) {
    GWClass r{x.k, {}, {}};
    Int m = n < 0 ? -n : n;
    for (Int i = 0; i < m; ++i) {
        r.pos.insert(r.pos.end(), x.pos.begin(), x.pos.end());
        r.neg.insert(r.neg.end(), x.neg.begin(), x.neg.end());
    }
    return n < 0 ? gwNeg(r) : r;
}

GWClass gwPromote(const FieldPtr& k, const GWClass& x) {
    GWClass r{k, {}, {}};
    for (auto& a : x.pos) r.pos.push_back(promote(k, a));
    for (auto& a : x.neg) r.neg.push_back(promote(k, a));
    return r;
}

int gwRank(const GWClass& x) { return static_cast<int>(x.pos.size()) - static_cast<int>(x.neg.size()); }

// --- invariants over Q -------------------------------------------------------

namespace {

Rat ratOf(const FieldElem& a) { return a.q; }

long signatureDiag(const std::vector<FieldElem>& diag) {
    long s = 0;
    for (auto& a : diag) s += a.q > 0 ? 1 : -1;
    return s;
}

}  // namespace

long signatureOf(const GWClass& x) {
    if (x.k->kind != FieldKind::Rationals && x.k->kind != FieldKind::Reals)
        throw std::domain_error("signatureOf: needs Q or formal reals");
    return signatureDiag(x.pos) - signatureDiag(x.neg);
}

FieldElem signedDisc(const GWClass& x) {
    // signed disc of the virtual class via a rank-matching representative:
    // disc(pos ⟂ -neg) with the sign convention for its total rank.
    std::vector<FieldElem> diag = x.pos;
    for (auto& a : x.neg) diag.push_back(neg(a));
    int n = static_cast<int>(diag.size());
    FieldElem det = oneEl(x.k);
    for (auto& a : diag) det = mul(det, a);
    int exp = (n * (n - 1) / 2) % 2;
    FieldElem d = exp ? neg(det) : det;
    return squareClassRep(d);
}

int hasseAt(const std::vector<FieldElem>& diag, const Int& p) {
    int h = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            h *= hilbert(ratOf(diag[i]), ratOf(diag[j]), p);
    return h;
}

std::vector<Int> relevantPlaces(const GWClass& x) {
    std::vector<Rat> entries;
    for (auto& a : x.pos) entries.push_back(a.q);
    for (auto& a : x.neg) entries.push_back(a.q);
    return relevant_primes(entries);
}

int hasseRatioAt(const GWClass& x, const Int& p) {
    // representative of the Witt class with rank padded to 0 mod 4
    std::vector<FieldElem> diag = x.pos;
    for (auto& a : x.neg) diag.push_back(neg(a));
    while (diag.size() % 4 != 0) {
        diag.push_back(oneEl(x.k));
        diag.push_back(neg(oneEl(x.k)));
    }
    std::vector<FieldElem> hyp;
    for (size_t i = 0; i < diag.size() / 2; ++i) {
        hyp.push_back(oneEl(x.k));
        hyp.push_back(neg(oneEl(x.k)));
    }
    return hasseAt(diag, p) * hasseAt(hyp, p);
}

// --- decide_iso ---------------------------------------------------------------

bool decideIso(const BilinearForm& a, const BilinearForm& b) {
    if (!sameField(a.k, b.k)) throw std::invalid_argument("decideIso: field mismatch");
    if (a.diag.size() != b.diag.size()) return false;
    if (a.diag.empty()) return true;
    auto k = a.k;
    switch (k->kind) {
        case FieldKind::Finite:
        case FieldKind::Extension: {
            if (!k->finite()) throw std::domain_error("decideIso: unsupported base");
            FieldElem da = oneEl(k), db = oneEl(k);
            for (auto& e : a.diag) da = mul(da, e);
            for (auto& e : b.diag) db = mul(db, e);
            return isSquareEl(divEl(da, db));
        }
        case FieldKind::Rationals: {
            if (signatureDiag(a.diag) != signatureDiag(b.diag)) return false;
            FieldElem da = oneEl(k), db = oneEl(k);
            for (auto& e : a.diag) da = mul(da, e);
            for (auto& e : b.diag) db = mul(db, e);
            if (!is_square_rat(divEl(da, db).q)) return false;
            std::vector<Rat> all;
            for (auto& e : a.diag) all.push_back(e.q);
            for (auto& e : b.diag) all.push_back(e.q);
            for (auto& p : relevant_primes(all))
                if (hasseAt(a.diag, p) != hasseAt(b.diag, p)) return false;
            return true;
        }
        case FieldKind::Reals:
            return signatureDiag(a.diag) == signatureDiag(b.diag);
        case FieldKind::Complexes:
            return true;
        default:
            throw std::domain_error("decideIso: unsupported base");
    }
}

bool gwEq(const GWClass& x, const GWClass& y) {
    if (gwRank(x) != gwRank(y)) return false;
    // Witt cancellation: x = y iff pos_x + neg_y ~ pos_y + neg_x
    std::vector<FieldElem> l = x.pos, r = y.pos;
    l.insert(l.end(), y.neg.begin(), y.neg.end());
    r.insert(r.end(), x.neg.begin(), x.neg.end());
    return decideIso(BilinearForm{x.k, l}, BilinearForm{x.k, r});
}

bool wittTrivial(const GWClass& x) {
    // syntactic reduction first: cancel equal entries across pos/neg and
    // hyperbolic pairs <a>,<-a> inside each side; this also settles classes
    // over bases without a decision procedure (number-field intermediates)
    std::vector<FieldElem> pos = x.pos, ng = x.neg;
    auto dropPair = [](std::vector<FieldElem>& v, size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        v.erase(v.begin() + static_cast<long>(j));
        v.erase(v.begin() + static_cast<long>(i));
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < pos.size() && !changed; ++i)
            for (size_t j = 0; j < ng.size() && !changed; ++j)
                if (eqEl(pos[i], ng[j])) {
                    pos.erase(pos.begin() + static_cast<long>(i));
                    ng.erase(ng.begin() + static_cast<long>(j));
                    changed = true;
                }
        for (auto* side : {&pos, &ng})
            for (size_t i = 0; i < side->size() && !changed; ++i)
                for (size_t j = i + 1; j < side->size() && !changed; ++j)
                    if (eqEl((*side)[i], neg((*side)[j]))) {
                        dropPair(*side, i, j);
                        changed = true;
                    }
    }
    if (pos.empty() && ng.empty()) return true;
    std::vector<FieldElem> diag = pos;
    for (auto& a : ng) diag.push_back(neg(a));
    if (diag.size() % 2 != 0) return false;
    std::vector<FieldElem> hyp;
    for (size_t i = 0; i < diag.size() / 2; ++i) {
        hyp.push_back(oneEl(x.k));
        hyp.push_back(neg(oneEl(x.k)));
    }
    return decideIso(BilinearForm{x.k, diag}, BilinearForm{x.k, hyp});
}

bool wittEq(const GWClass& x, const GWClass& y) { return wittTrivial(gwSub(x, y)); }

int fundamentalIdealLevel(const GWClass& x, int bound) {
    if (bound < 0 || bound > 6) throw std::invalid_argument("fundamentalIdealLevel: bound must be in [0,6]");
    auto k = x.k;
    if (!(k->finite() || k->kind == FieldKind::Rationals || k->kind == FieldKind::Reals))
        throw std::domain_error("fundamentalIdealLevel: unsupported base");
    if (wittTrivial(x)) return bound;
    if (gwRank(x) % 2 != 0) return 0;
    if (k->finite()) {
        // I^2(F_q) = 0, so a nonzero even-rank Witt class sits exactly in I^1
        return std::min(bound, 1);
    }
    if (k->kind == FieldKind::Reals) {
        long s = signatureOf(x);
        int lvl = 0;
        while (lvl < bound && s % 2 == 0) { s /= 2; ++lvl; }
        return lvl;
    }
    // Q
    int lvl = 1;
    if (lvl >= bound) return bound;
    if (!isOne(signedDisc(x))) return lvl;
    lvl = 2;
    if (lvl >= bound) return bound;
    for (auto& p : relevantPlaces(x))
        if (hasseRatioAt(x, p) != 1) return lvl;
    if (hasseRatioAt(x, 0) != 1) return lvl;
    long s = signatureOf(x);
    while (lvl < bound && s % (1L << (lvl + 1)) == 0) ++lvl;
    return lvl;
}

// --- diagonalization and transfers ---------------------------------------------

std::vector<FieldElem> diagonalizeGram(const FieldPtr& k, Mat G) {
    size_t n = G.size();
    std::vector<FieldElem> out;
    FieldElem two = fromInt(k, 2);
    for (size_t i = 0; i < n; ++i) {
        if (isZero(G[i][i])) {
            size_t j = i + 1;
            for (; j < n; ++j)
                if (!isZero(G[j][j])) {
                    std::swap(G[i], G[j]);
                    for (size_t r = 0; r < n; ++r) std::swap(G[r][i], G[r][j]);
                    break;
                }
            if (isZero(G[i][i])) {
                for (j = i + 1; j < n; ++j)
                    if (!isZero(G[i][j])) break;
                if (j == n) continue;  // zero row: degenerate block, skip
                // e_i += e_j makes the diagonal entry 2*G[i][j] != 0
                for (size_t r = 0; r < n; ++r) G[i][r] = add(G[i][r], G[j][r]);
                for (size_t r = 0; r < n; ++r) G[r][i] = add(G[r][i], G[r][j]);
            }
        }
        FieldElem piv = G[i][i];
        FieldElem pinv = inv(piv);
        for (size_t j = i + 1; j < n; ++j) {
            if (isZero(G[i][j])) continue;
            FieldElem f = mul(G[i][j], pinv);
            for (size_t r = 0; r < n; ++r) G[j][r] = sub(G[j][r], mul(f, G[i][r]));
            for (size_t r = 0; r < n; ++r) G[r][j] = sub(G[r][j], mul(f, G[r][i]));
        }
        out.push_back(piv);
    }
    return out;
}

GWClass scharlauTransfer(const RelExt& R, const std::vector<FieldElem>& sOnBasis,
                         const BilinearForm& phi) {
    bool allZero = true;
    for (auto& v : sOnBasis) allZero = allZero && isZero(v);
    if (allZero) throw std::invalid_argument("scharlauTransfer: zero functional");
    if (static_cast<int>(sOnBasis.size()) != R.relDeg)
        throw std::invalid_argument("scharlauTransfer: functional size mismatch");
    auto s = [&](const FieldElem& y) {
        auto cs = R.relCoords(y);
        FieldElem acc = zeroEl(R.U);
        for (size_t i = 0; i < cs.size(); ++i) acc = add(acc, mul(sOnBasis[i], cs[i]));
        return acc;
    };
    int m = R.relDeg;
    GWClass out = gwZero(R.U);
    for (auto& c : phi.diag) {
        Mat G(static_cast<size_t>(m), Vec(static_cast<size_t>(m), zeroEl(R.U)));
        FieldElem ci = promote(R.K, c);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                FieldElem val = s(mul(ci, powEl(R.g, i + j)));
                G[static_cast<size_t>(i)][static_cast<size_t>(j)] = val;
                G[static_cast<size_t>(j)][static_cast<size_t>(i)] = val;
            }
        for (auto& d : diagonalizeGram(R.U, std::move(G))) out.pos.push_back(d);
    }
    return out;
}

GWClass scharlauTransferGW(const RelExt& R, const std::vector<FieldElem>& sOnBasis,
                           const GWClass& x) {
    GWClass p = scharlauTransfer(R, sOnBasis, BilinearForm{R.K, x.pos});
    GWClass n = scharlauTransfer(R, sOnBasis, BilinearForm{R.K, x.neg});
    return gwSub(p, n);
}

GWClass traceFormTransfer(const RelExt& R, const GWClass& x) {
    if (R.relDeg == 1 && sameField(R.K, R.U)) return x;
    return scharlauTransferGW(R, R.traceFunctional(), x);
}

GWClass traceForm(const RelExt& R) { return traceFormTransfer(R, gwOne(R.K)); }

// --- printing -------------------------------------------------------------------

std::string showForm(const BilinearForm& f) {
    std::string s = "<";
    for (size_t i = 0; i < f.diag.size(); ++i) {
        if (i) s += ",";
        s += showElem(f.diag[i]);
    }
    return s + ">";
}

std::string showGW(const GWClass& x) {
    std::string s = showForm(BilinearForm{x.k, x.pos});
    if (!x.neg.empty()) s += " - " + showForm(BilinearForm{x.k, x.neg});
    return s;
}

std::string showGWCanonical(const GWClass& x) {
    auto canon = [&](std::vector<FieldElem> v) {
        for (auto& a : v) a = squareClassRep(a);
        std::sort(v.begin(), v.end(), [](const FieldElem& a, const FieldElem& b) { return cmpElem(a, b) < 0; });
        return v;
    };
    GWClass y{x.k, canon(x.pos), canon(x.neg)};
    return showGW(y);
}

}  // namespace mwk
