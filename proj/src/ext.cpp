#include "mwk/ext.hpp"

namespace mwk {

FieldPtr bottomField(const FieldPtr& k) {
    if (k->kind == FieldKind::Extension) return bottomField(k->base);
    if (k->kind == FieldKind::Function) throw std::domain_error("bottomField: function field");
    return k;
}

int bottomDim(const FieldPtr& k) {
    if (k->kind == FieldKind::Extension) return k->extensionDegree() * bottomDim(k->base);
    return 1;
}

Vec bottomCoords(const FieldElem& a) {
    if (a.k->kind != FieldKind::Extension) return {a};
    int d = a.k->extensionDegree();
    Vec out;
    for (int i = 0; i < d; ++i) {
        FieldElem c = i < static_cast<int>(a.ext.size()) ? a.ext[i] : zeroEl(a.k->base);
        Vec sub = bottomCoords(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

FieldElem fromBottomCoords(const FieldPtr& k, const Vec& v) {
    if (k->kind != FieldKind::Extension) {
        if (v.size() != 1) throw std::invalid_argument("fromBottomCoords: length mismatch");
        return v[0];
    }
    int d = k->extensionDegree();
    int sub = bottomDim(k->base);
    std::vector<FieldElem> cs;
    for (int i = 0; i < d; ++i) {
        Vec piece(v.begin() + static_cast<long>(i) * sub, v.begin() + static_cast<long>(i + 1) * sub);
        cs.push_back(fromBottomCoords(k->base, piece));
    }
    std::vector<FieldElem> trimmed = cs;
    while (!trimmed.empty() && isZero(trimmed.back())) trimmed.pop_back();
    FieldElem e;
    e.k = k;
    e.ext = std::move(trimmed);
    return e;
}

std::vector<FieldElem> bottomBasis(const FieldPtr& k) {
    int d = bottomDim(k);
    std::vector<FieldElem> out;
    FieldPtr bot = bottomField(k);
    for (int i = 0; i < d; ++i) {
        Vec v(d, zeroEl(bot));
        v[i] = oneEl(bot);
        out.push_back(fromBottomCoords(k, v));
    }
    return out;
}

namespace {

// candidate primitive elements for K over U
std::vector<FieldElem> primitiveCandidates(const FieldPtr& K) {
    std::vector<FieldElem> gens;
    FieldPtr cur = K;
    while (cur->kind == FieldKind::Extension) {
        gens.push_back(promote(K, genEl(cur)));
        cur = cur->base;
    }
    std::vector<FieldElem> cands;
    if (gens.empty()) return cands;
    cands.push_back(gens[0]);
    FieldElem acc = gens[0];
    for (size_t i = 1; i < gens.size(); ++i) {
        acc = add(acc, gens[i]);
        cands.push_back(acc);
    }
    // a few more mixtures for bad luck
    for (int c = 2; c <= 5; ++c) {
        FieldElem e = gens[0];
        for (size_t i = 1; i < gens.size(); ++i) e = add(e, mul(fromInt(K, c), gens[i]));
        cands.push_back(e);
    }
    if (gens.size() > 1) cands.push_back(mul(gens[0], gens[1]));
    return cands;
}

Mat buildColumns(const FieldPtr& K, const std::vector<FieldElem>& uImages, const FieldElem& g, int m) {
    int D = bottomDim(K);
    Mat A(static_cast<size_t>(D));
    for (auto& row : A) row.reserve(static_cast<size_t>(m) * uImages.size());
    FieldElem gp = oneEl(K);
    for (int j = 0; j < m; ++j) {
        for (auto& u : uImages) {
            Vec col = bottomCoords(mul(u, gp));
            for (int r = 0; r < D; ++r) A[static_cast<size_t>(r)].push_back(col[static_cast<size_t>(r)]);
        }
        gp = mul(gp, g);
    }
    return A;
}

}  // namespace

std::vector<FieldElem> RelExt::relCoords(const FieldElem& y) const {
    if (relDeg == 1 && sameField(K, U)) return {y};
    Vec b = bottomCoords(y);
    Vec sol;
    if (!solveLinear(bottomField(K), columns, b, &sol))
        throw std::logic_error("RelExt::relCoords: not in span");
    std::vector<FieldElem> out;
    size_t nu = uBasis.size();
    for (int j = 0; j < relDeg; ++j) {
        FieldElem c = zeroEl(U);
        for (size_t i = 0; i < nu; ++i)
            c = add(c, mul(sol[static_cast<size_t>(j) * nu + i], uBasis[i]));
        out.push_back(c);
    }
    return out;
}

FieldElem RelExt::relTrace(const FieldElem& y) const {
    if (relDeg == 1 && sameField(K, U)) return y;
    FieldElem tr = zeroEl(U);
    FieldElem gp = oneEl(K);
    for (int j = 0; j < relDeg; ++j) {
        auto cs = relCoords(mul(y, gp));
        tr = add(tr, cs[static_cast<size_t>(j)]);
        gp = mul(gp, g);
    }
    return tr;
}

FieldElem RelExt::relNorm(const FieldElem& y) const {
    if (relDeg == 1 && sameField(K, U)) return y;
    Mat M(static_cast<size_t>(relDeg), Vec(static_cast<size_t>(relDeg), zeroEl(U)));
    FieldElem gp = oneEl(K);
    for (int j = 0; j < relDeg; ++j) {
        auto cs = relCoords(mul(y, gp));
        for (int i = 0; i < relDeg; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = cs[static_cast<size_t>(i)];
        gp = mul(gp, g);
    }
    return detOf(U, M);
}

std::vector<FieldElem> RelExt::traceFunctional() const {
    std::vector<FieldElem> out;
    FieldElem gp = oneEl(K);
    for (int j = 0; j < relDeg; ++j) {
        out.push_back(relTrace(gp));
        gp = mul(gp, g);
    }
    return out;
}

std::vector<FieldElem> RelExt::fqFunctional() const {
    std::vector<FieldElem> out(static_cast<size_t>(relDeg), zeroEl(U));
    out.back() = oneEl(U);
    return out;
}

RelExt makeRelExt(const FieldPtr& K, const FieldPtr& U, const EmbedFn& embed) {
    RelExt R;
    R.K = K;
    R.U = U;
    R.embed = embed;
    if (sameField(K, U)) {
        R.g = oneEl(K);
        R.relDeg = 1;
        R.minPoly = polyFromCoeffs(U, {neg(oneEl(U)), oneEl(U)});
        return R;
    }
    int D = bottomDim(K), dU = bottomDim(U);
    if (D % dU != 0) throw std::invalid_argument("makeRelExt: dimensions incompatible");
    int m = D / dU;
    R.relDeg = m;
    R.uBasis = bottomBasis(U);
    std::vector<FieldElem> uImages;
    for (auto& u : R.uBasis) uImages.push_back(embed(u));
    for (auto& cand : primitiveCandidates(K)) {
        Mat A = buildColumns(K, uImages, cand, m);
        if (rankOf(bottomField(K), A) != D) continue;
        R.g = cand;
        R.columns = std::move(A);
        // minimal polynomial: g^m = sum a_j g^j
        auto cs = R.relCoords(powEl(cand, m));
        std::vector<FieldElem> mp;
        for (auto& c : cs) mp.push_back(neg(c));
        mp.push_back(oneEl(U));
        R.minPoly = polyFromCoeffs(U, std::move(mp));
        return R;
    }
    throw std::logic_error("makeRelExt: no primitive element found");
}

RelExt canonicalRelExt(const FieldPtr& K, const FieldPtr& U) {
    return makeRelExt(K, U, [K](const FieldElem& u) { return promote(K, u); });
}

}  // namespace mwk
