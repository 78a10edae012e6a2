#include "mwk/valuation.hpp"

namespace mwk {

Valuation placeValuation(const FieldPtr& ff, const Poly& place) {
    if (ff->kind != FieldKind::Function) throw std::invalid_argument("placeValuation: not a function field");
    if (degP(place) < 1) throw std::invalid_argument("placeValuation: constant place");
    if (!isOne(leadCoeff(place))) throw std::invalid_argument("placeValuation: place must be monic");
    if (ff->base->finite()) {
        if (!irreducibleFF(place)) throw std::invalid_argument("placeValuation: reducible place");
    } else {
        auto fz = factorPoly(place);
        if (fz.factors.size() != 1 || fz.factors[0].second != 1)
            throw std::invalid_argument("placeValuation: reducible place");
    }
    Valuation v;
    v.ff = ff;
    v.place = place;
    v.residueField = degP(place) == 1 ? ff->base : makeExtension(ff->base, place, "x");
    return v;
}

Valuation infinityValuation(const FieldPtr& ff) {
    if (ff->kind != FieldKind::Function) throw std::invalid_argument("infinityValuation: not a function field");
    Valuation v;
    v.ff = ff;
    v.atInfinity = true;
    v.residueField = ff->base;
    return v;
}

bool sameValuation(const Valuation& a, const Valuation& b) {
    if (!sameField(a.ff, b.ff)) return false;
    if (a.atInfinity != b.atInfinity) return false;
    return a.atInfinity || eqP(a.place, b.place);
}

std::string showValuation(const Valuation& v) {
    return v.atInfinity ? "infinity" : "(" + showPoly(v.place, v.ff->gen) + ")";
}

FieldElem uniformizer(const Valuation& v) {
    if (v.atInfinity) {
        Poly minusOne = polyConst(v.ff->base, neg(oneEl(v.ff->base)));
        return makeFrac(v.ff, minusOne, polyVar(v.ff->base));
    }
    return makeFrac(v.ff, v.place, polyOne(v.ff->base));
}

namespace {

// multiplicity of the place in a polynomial
int placeMult(const Poly& f, const Poly& place) {
    int m = 0;
    Poly cur = f;
    while (true) {
        auto [q, r] = pDivRem(cur, place);
        if (!polyIsZero(r)) return m;
        cur = q;
        ++m;
    }
}

}  // namespace

std::pair<long, FieldElem> valuationOf(const Valuation& v, const FieldElem& a) {
    if (a.k->kind != FieldKind::Function || !sameField(a.k, v.ff))
        throw std::invalid_argument("valuationOf: element not in the valued field");
    if (isZero(a)) throw std::domain_error("valuationOf: zero element");
    long n;
    if (v.atInfinity) {
        n = degP(fracDen(a)) - degP(fracNum(a));
    } else {
        n = placeMult(fracNum(a), v.place) - placeMult(fracDen(a), v.place);
    }
    FieldElem pi = uniformizer(v);
    FieldElem u = mul(a, powEl(pi, Int(-n)));
    return {n, u};
}

FieldElem residueClass(const Valuation& v, const FieldElem& u) {
    auto [n, unit] = valuationOf(v, u);
    if (n != 0) throw std::invalid_argument("residueClass: not a v-unit");
    const Poly& num = fracNum(unit);
    const Poly& den = fracDen(unit);
    if (v.atInfinity) {
        // ratio of leading coefficients; degrees agree since the valuation is 0
        return divEl(leadCoeff(num), leadCoeff(den));
    }
    if (degP(v.place) == 1) {
        FieldElem root = neg(v.place.c[0]);
        return divEl(pEval(num, root), pEval(den, root));
    }
    FieldElem x = genEl(v.residueField);
    return divEl(pEval(num, x), pEval(den, x));
}

std::vector<Valuation> supportPlaces(const FieldElem& a) {
    if (isZero(a)) throw std::domain_error("supportPlaces: zero element");
    std::vector<Valuation> out;
    auto addFrom = [&](const Poly& f) {
        if (degP(f) < 1) return;
        for (auto& [q, m] : factorPoly(f).factors) {
            bool seen = false;
            for (auto& v : out) seen = seen || eqP(v.place, q);
            if (!seen) out.push_back(placeValuation(a.k, q));
        }
    };
    addFrom(fracNum(a));
    addFrom(fracDen(a));
    std::sort(out.begin(), out.end(), [](const Valuation& x, const Valuation& y) {
        return cmpPoly(x.place, y.place) < 0;
    });
    return out;
}

}  // namespace mwk
