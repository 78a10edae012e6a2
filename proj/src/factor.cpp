#include "mwk/factor.hpp"

#include <algorithm>
#include <map>

namespace mwk {

int cmpElem(const FieldElem& a, const FieldElem& b) {
    switch (a.k->kind) {
        case FieldKind::Finite: return a.z < b.z ? -1 : a.z > b.z ? 1 : 0;
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return a.q < b.q ? -1 : a.q > b.q ? 1 : 0;
        case FieldKind::Extension: {
            if (a.ext.size() != b.ext.size()) return a.ext.size() < b.ext.size() ? -1 : 1;
            for (size_t i = a.ext.size(); i-- > 0;) {
                int c = cmpElem(a.ext[i], b.ext[i]);
                if (c) return c;
            }
            return 0;
        }
        case FieldKind::Function: {
            int c = cmpPoly(fracNum(a), fracNum(b));
            if (c) return c;
            return cmpPoly(fracDen(a), fracDen(b));
        }
    }
    return 0;
}

int cmpPoly(const Poly& a, const Poly& b) {
    if (degP(a) != degP(b)) return degP(a) < degP(b) ? -1 : 1;
    for (int i = degP(a); i >= 0; --i) {
        int c = cmpElem(coeffAt(a, i), coeffAt(b, i));
        if (c) return c;
    }
    return 0;
}

namespace {

// ---------- finite fields: Cantor-Zassenhaus --------------------------------

void equalDegreeSplit(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degP(g) == d) {
        out.push_back(g);
        return;
    }
    Int q = g.k->order();
    Int e = 1;
    for (int i = 0; i < d; ++i) e *= q;
    e = (e - 1) / 2;
    while (true) {
        Poly r = pRandom(g.k, degP(g) - 1, rng);
        if (polyIsZero(r)) continue;
        Poly u = pGcd(r, g);
        if (degP(u) > 0 && degP(u) < degP(g)) {
            equalDegreeSplit(u, d, rng, out);
            equalDegreeSplit(pDivRem(g, u).first, d, rng, out);
            return;
        }
        Poly h = pSub(pPowMod(r, e, g), polyOne(g.k));
        u = pGcd(h, g);
        if (degP(u) > 0 && degP(u) < degP(g)) {
            equalDegreeSplit(u, d, rng, out);
            equalDegreeSplit(pDivRem(g, u).first, d, rng, out);
            return;
        }
    }
}

// distinct irreducible factors of a squarefree monic polynomial
std::vector<Poly> factorSquarefreeFF(Poly s, std::mt19937_64& rng) {
    std::vector<Poly> out;
    Int q = s.k->order();
    Poly x = polyVar(s.k);
    Poly w = pMod(x, s);
    int d = 0;
    while (degP(s) > 0 && 2 * (d + 1) <= degP(s)) {
        ++d;
        w = pPowMod(w, q, s);
        Poly g = pGcd(pSub(w, x), s);
        if (degP(g) > 0) {
            equalDegreeSplit(g, d, rng, out);
            s = pDivRem(s, g).first;
            w = pMod(w, s);
        }
    }
    if (degP(s) > 0) out.push_back(s);
    return out;
}

// p-th root of a finite field element: c^(q/p)
FieldElem pthRoot(const FieldElem& c) {
    Int q = c.k->order();
    return powEl(c, q / c.k->characteristic());
}

std::vector<Poly> distinctIrreducibleFF(Poly f, std::mt19937_64& rng);

// handles f' = 0: f = g(x^p)
std::vector<Poly> depthFactorFF(const Poly& f, std::mt19937_64& rng) {
    std::int64_t p = f.k->characteristic();
    std::vector<FieldElem> cs;
    for (int i = 0; i <= degP(f); i += static_cast<int>(p))
        cs.push_back(pthRoot(coeffAt(f, i)));
    Poly g = polyFromCoeffs(f.k, std::move(cs));
    return distinctIrreducibleFF(g, rng);
}

std::vector<Poly> distinctIrreducibleFF(Poly f, std::mt19937_64& rng) {
    f = pMonic(f);
    if (degP(f) == 0) return {};
    Poly df = pDeriv(f);
    if (polyIsZero(df)) return depthFactorFF(f, rng);
    Poly g = pGcd(f, df);
    Poly s = pDivRem(f, g).first;              // squarefree part, may miss p-th powers
    std::vector<Poly> out = factorSquarefreeFF(s, rng);
    if (degP(g) > 0) {
        // primes hiding in gcd(f,f') (høyere multiplicity or p-th powers)
        Poly rest = g;
        for (auto& q : out)
            while (true) {
                auto [quo, rem] = pDivRem(rest, q);
                if (!polyIsZero(rem)) break;
                rest = quo;
            }
        if (degP(rest) > 0)
            for (auto& q : distinctIrreducibleFF(rest, rng)) {
                bool seen = false;
                for (auto& o : out) seen = seen || eqP(o, q);
                if (!seen) out.push_back(q);
            }
    }
    return out;
}

// ---------- rationals: Zassenhaus -------------------------------------------

using ZPoly = std::vector<Int>;  // dense integer coefficients, trimmed

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    ztrim(c);
    return c;
}

ZPoly zmodp(const ZPoly& a, const Int& m) {
    ZPoly c = a;
    for (auto& v : c) {
        v %= m;
        if (v < 0) v += m;
    }
    ztrim(c);
    return c;
}

// symmetric range reduction mod m
ZPoly zsym(const ZPoly& a, const Int& m) {
    ZPoly c = zmodp(a, m);
    for (auto& v : c)
        if (2 * v > m) v -= m;
    ztrim(c);
    return c;
}

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (auto& c : f) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? Int(1) : g;
}

// exact divide over Z, returns false if not divisible
bool zdivExact(const ZPoly& f, const ZPoly& g, ZPoly* q) {
    ZPoly r = f, quo(std::max<size_t>(1, f.size()) , 0);
    if (g.empty()) return false;
    while (!r.empty() && zdeg(r) >= zdeg(g)) {
        if (r.back() % g.back() != 0) return false;
        Int c = r.back() / g.back();
        int shift = zdeg(r) - zdeg(g);
        quo[shift] = c;
        ZPoly sub(shift, 0);
        for (auto& gc : g) sub.push_back(gc * c);
        r = zsub(r, sub);
    }
    if (!r.empty()) return false;
    ztrim(quo);
    if (q) *q = quo;
    return true;
}

Poly zToQPoly(const ZPoly& f) {
    auto Q = rationalsField();
    std::vector<FieldElem> cs;
    for (auto& c : f) cs.push_back(fromRat(Q, Rat(c)));
    return polyFromCoeffs(Q, std::move(cs));
}

ZPoly qToZPrimitive(const Poly& f, Rat* content) {
    Int l = 1;
    for (auto& c : f.c) l = boost::multiprecision::lcm(l, denominator(c.q));
    ZPoly z;
    for (auto& c : f.c) z.push_back(numerator(c.q) * (l / denominator(c.q)));
    Int g = zcontent(z);
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    if (content) *content = Rat(g, l);
    return z;
}

ZPoly fpToZ(const Poly& f) {
    ZPoly z;
    for (auto& c : f.c) z.push_back(Int(c.z));
    return z;
}

Poly zToFp(const ZPoly& f, const FieldPtr& fp) {
    std::vector<FieldElem> cs;
    for (auto& c : f) cs.push_back(fromInt(fp, c));
    return polyFromCoeffs(fp, std::move(cs));
}

// one linear Hensel step: f = lc * prod(gi) mod p^k  ->  mod p^{k+1}
void henselStep(const ZPoly& f, std::vector<ZPoly>& gs, const Int& p, const Int& pk) {
    auto fp = gfPrime(static_cast<std::int64_t>(p));
    ZPoly prod{f.back()};
    for (auto& g : gs) prod = zmul(prod, g);
    ZPoly e = zsub(f, prod);
    ZPoly ebar;
    for (auto& c : e) ebar.push_back(c / pk);
    Poly E = zToFp(ebar, fp);
    // delta_i = E * lc^{-1} * (prod_{j != i} g_j)^{-1} mod g_i
    for (size_t i = 0; i < gs.size(); ++i) {
        Poly gi = zToFp(gs[i], fp);
        Poly rest = polyConst(fp, fromInt(fp, f.back()));
        for (size_t j = 0; j < gs.size(); ++j)
            if (j != i) rest = pMod(pMul(rest, zToFp(gs[j], fp)), gi);
        auto [g, u, v] = pXgcd(rest, gi);
        Poly delta = pMod(pMul(pMod(E, gi), pScale(u, inv(g.c[0]))), gi);
        for (int d = 0; d <= degP(delta); ++d) {
            Int c = Int(delta.c[d].z) * pk;
            if (d >= zdeg(gs[i]) + 1) gs[i].resize(d + 1, 0);
            gs[i][d] += c;
        }
    }
}

std::vector<ZPoly> factorSquarefreeZ(const ZPoly& s) {
    int d = zdeg(s);
    if (d == 1) return {s};
    // pick a prime keeping s squarefree
    std::int64_t p = 0;
    auto Q = rationalsField();
    for (std::int64_t cand : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67}) {
        if (s.back() % cand == 0) continue;
        auto fp = gfPrime(cand);
        Poly sp = zToFp(s, fp);
        if (degP(sp) != d) continue;
        if (degP(pGcd(sp, pDeriv(sp))) == 0) { p = cand; break; }
    }
    if (p == 0) throw std::logic_error("factorSquarefreeZ: no good prime found");
    auto fp = gfPrime(p);
    std::mt19937_64 rng(0x5eedf00dULL);
    std::vector<Poly> modFactors = factorSquarefreeFF(pMonic(zToFp(s, fp)), rng);
    if (modFactors.size() == 1) return {s};
    std::sort(modFactors.begin(), modFactors.end(), [](const Poly& a, const Poly& b) { return cmpPoly(a, b) < 0; });

    // Mignotte-style bound on coefficients of any factor times lc
    Int norm2 = 0;
    for (auto& c : s) norm2 += c * c;
    Int B = boost::multiprecision::sqrt(norm2) + 1;
    Int bound = (Int(1) << (d + 1)) * B * boost::multiprecision::abs(Int(s.back()));
    Int pk = p;
    std::vector<ZPoly> gs;
    for (auto& g : modFactors) gs.push_back(fpToZ(g));
    while (pk <= 2 * bound) {
        henselStep(s, gs, Int(p), pk);
        pk *= p;
    }

    // subset recombination
    std::vector<ZPoly> out;
    ZPoly rest = s;
    std::vector<int> alive(gs.size(), 1);
    int nAlive = static_cast<int>(gs.size());
    for (int card = 1; card <= nAlive; ++card) {
        bool retry = true;
        while (retry) {
            retry = false;
            std::vector<int> idxs;
            for (size_t i = 0; i < gs.size(); ++i)
                if (alive[i]) idxs.push_back(static_cast<int>(i));
            int n = static_cast<int>(idxs.size());
            if (card > n) break;
            std::vector<int> comb(card);
            for (int i = 0; i < card; ++i) comb[i] = i;
            while (true) {
                ZPoly cand{rest.back()};
                for (int i : comb) cand = zmul(cand, gs[idxs[i]]);
                cand = zsym(cand, pk);
                Int c = zcontent(cand);
                for (auto& v : cand) v /= c;
                ZPoly quo;
                if (zdivExact(rest, cand, &quo)) {
                    out.push_back(cand);
                    for (int i : comb) alive[idxs[i]] = 0;
                    // restore primitivity of the remaining part
                    Int rc = zcontent(quo);
                    if (!quo.empty() && quo.back() < 0) rc = -rc;
                    for (auto& v : quo) v /= rc;
                    rest = quo;
                    retry = true;
                    break;
                }
                int i = card - 1;
                while (i >= 0 && comb[i] == n - card + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }
    if (zdeg(rest) > 0) out.push_back(rest);
    return out;
}

}  // namespace

Factorization factorPoly(const Poly& f) {
    if (polyIsZero(f)) throw std::invalid_argument("factorPoly: zero polynomial");
    Factorization fz;
    fz.unit = leadCoeff(f);
    if (degP(f) == 0) return fz;

    std::vector<Poly> primes;
    if (f.k->finite()) {
        std::mt19937_64 rng(0xC0FFEEULL);
        primes = distinctIrreducibleFF(f, rng);
    } else if (f.k->kind == FieldKind::Rationals) {
        Rat content;
        ZPoly z = qToZPrimitive(f, &content);
        Poly m = pMonic(f);
        // squarefree part
        Poly g = pGcd(m, pDeriv(m));
        Poly s = pDivRem(m, g).first;
        ZPoly zs = qToZPrimitive(s, nullptr);
        for (auto& zf : factorSquarefreeZ(zs)) primes.push_back(pMonic(zToQPoly(zf)));
    } else {
        throw std::domain_error("factorPoly: unsupported coefficient field");
    }

    std::sort(primes.begin(), primes.end(), [](const Poly& a, const Poly& b) { return cmpPoly(a, b) < 0; });
    Poly rest = pMonic(f);
    for (auto& q : primes) {
        int mult = 0;
        while (true) {
            auto [quo, rem] = pDivRem(rest, q);
            if (!polyIsZero(rem)) break;
            rest = quo;
            ++mult;
        }
        if (mult > 0) fz.factors.emplace_back(q, mult);
    }
    if (degP(rest) != 0) throw std::logic_error("factorPoly: incomplete factorization");
    return fz;
}

Poly factorProduct(const Factorization& fz) {
    Poly r = polyConst(fz.unit.k, fz.unit);
    for (auto& [q, m] : fz.factors)
        for (int i = 0; i < m; ++i) r = pMul(r, q);
    return r;
}

bool isSquareEl(const FieldElem& a) {
    if (isZero(a)) throw std::invalid_argument("isSquareEl: zero");
    switch (a.k->kind) {
        case FieldKind::Finite: {
            Int l = powmod(Int(a.z), Int((a.k->p - 1) / 2), Int(a.k->p));
            return l == 1;
        }
        case FieldKind::Rationals: return is_square_rat(a.q);
        case FieldKind::Reals: return a.q > 0;
        case FieldKind::Complexes: return true;
        case FieldKind::Extension: {
            if (!a.k->finite()) throw std::domain_error("isSquareEl: unsupported field");
            Int q = a.k->order();
            return isOne(powEl(a, (q - 1) / 2));
        }
        case FieldKind::Function: {
            auto base = a.k->base;
            if (!(base->finite() || base->kind == FieldKind::Rationals))
                throw std::domain_error("isSquareEl: unsupported function field base");
            auto fn = factorPoly(fracNum(a));
            auto fd = factorPoly(fracDen(a));
            std::map<std::string, int> exps;
            std::map<std::string, int> sign{{"", 0}};
            for (auto& [p, m] : fn.factors) exps[showPoly(p, "x")] += m;
            for (auto& [p, m] : fd.factors) exps[showPoly(p, "x")] -= m;
            for (auto& [s, e] : exps)
                if (e % 2 != 0) return false;
            return isSquareEl(fn.unit);
        }
    }
    throw std::logic_error("isSquareEl");
}

FieldElem squareClassRep(const FieldElem& a) {
    if (isZero(a)) throw std::invalid_argument("squareClassRep: zero");
    switch (a.k->kind) {
        case FieldKind::Finite:
        case FieldKind::Extension: {
            if (!a.k->finite()) throw std::domain_error("squareClassRep: unsupported field");
            if (isSquareEl(a)) return oneEl(a.k);
            for (auto& e : allElements(a.k))
                if (!isZero(e) && !isSquareEl(e)) return e;
            throw std::logic_error("squareClassRep: no nonsquare found");
        }
        case FieldKind::Rationals: return fromInt(a.k, squareclass_rep(a.q));
        case FieldKind::Reals: return fromInt(a.k, a.q > 0 ? 1 : -1);
        case FieldKind::Complexes: return oneEl(a.k);
        case FieldKind::Function: {
            auto fn = factorPoly(fracNum(a));
            auto fd = factorPoly(fracDen(a));
            std::vector<std::pair<Poly, int>> all = fn.factors;
            for (auto& [p, m] : fd.factors) all.emplace_back(p, -m);
            Poly r = polyOne(a.k->base);
            std::map<std::string, int> exps;
            std::vector<Poly> order;
            for (auto& [p, m] : all) {
                auto key = showPoly(p, "x");
                if (!exps.count(key)) order.push_back(p);
                exps[key] += m;
            }
            for (auto& p : order)
                if (exps[showPoly(p, "x")] % 2 != 0) r = pMul(r, p);
            FieldElem u = squareClassRep(fn.unit);
            return mul(promote(a.k, u), makeFrac(a.k, r, polyOne(a.k->base)));
        }
    }
    throw std::logic_error("squareClassRep");
}

}  // namespace mwk
