#include "mwk/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mwk {

// --- Field basics ----------------------------------------------------------

std::int64_t Field::characteristic() const {
    switch (kind) {
        case FieldKind::Finite: return p;
        case FieldKind::Extension: return base->characteristic();
        case FieldKind::Function: return base->characteristic();
        default: return 0;
    }
}

Int Field::order() const {
    if (kind == FieldKind::Finite) return Int(p);
    if (kind == FieldKind::Extension && base->finite()) {
        Int b = base->order();
        Int r = 1;
        for (int i = 0; i < extensionDegree(); ++i) r *= b;
        return r;
    }
    throw std::domain_error("order: not a finite field");
}

int Field::extensionDegree() const {
    if (kind != FieldKind::Extension) throw std::domain_error("extensionDegree: not an extension");
    return static_cast<int>(mod->c.size()) - 1;
}

bool sameField(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case FieldKind::Finite: return a->p == b->p;
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return true;
        case FieldKind::Extension:
            return sameField(a->base, b->base) && eqP(*a->mod, *b->mod);
        case FieldKind::Function:
            return sameField(a->base, b->base) && a->gen == b->gen;
    }
    return false;
}

std::string showField(const FieldPtr& k) {
    switch (k->kind) {
        case FieldKind::Finite: return "GF(" + std::to_string(k->p) + ")";
        case FieldKind::Rationals: return "QQ";
        case FieldKind::Reals: return "RR";
        case FieldKind::Complexes: return "CC";
        case FieldKind::Extension:
            return showField(k->base) + "[" + k->gen + "]/(" + showPoly(*k->mod, k->gen) + ")";
        case FieldKind::Function:
            return "FunField(" + showField(k->base) + ",\"" + k->gen + "\")";
    }
    return "?";
}

// --- factories --------------------------------------------------------------

FieldPtr gfPrime(std::int64_t p) {
    if (p < 3 || !is_prime(Int(p))) throw std::invalid_argument("gfPrime: need an odd prime");
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Finite;
    f->p = p;
    return f;
}

FieldPtr rationalsField() {
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Rationals;
    return f;
}

FieldPtr realsFormal() {
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Reals;
    return f;
}

FieldPtr complexesFormal() {
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Complexes;
    return f;
}

FieldPtr makeExtension(const FieldPtr& base, const Poly& modulus, const std::string& genName,
                       bool checkIrreducible) {
    if (base->kind == FieldKind::Function)
        throw std::invalid_argument("makeExtension: extensions of function fields unsupported");
    if (degP(modulus) < 2) throw std::invalid_argument("makeExtension: modulus degree must be >= 2");
    if (!isOne(leadCoeff(modulus))) throw std::invalid_argument("makeExtension: modulus must be monic");
    if (checkIrreducible && base->finite() && !irreducibleFF(modulus))
        throw std::invalid_argument("makeExtension: reducible modulus");
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Extension;
    f->base = base;
    f->mod = std::make_shared<Poly>(modulus);
    f->gen = genName;
    return f;
}

FieldPtr gfCanonical(std::int64_t p, int d) {
    auto fp = gfPrime(p);
    if (d == 1) return fp;
    if (d < 1 || d > 12) throw std::invalid_argument("gfCanonical: degree out of range");
    // lex-least monic irreducible: scan coefficient tuples (c_0,...,c_{d-1})
    std::vector<std::int64_t> cs(d, 0);
    while (true) {
        std::vector<FieldElem> co;
        for (auto v : cs) co.push_back(fromInt(fp, Int(v)));
        co.push_back(oneEl(fp));
        Poly f = polyFromCoeffs(fp, co);
        if (irreducibleFF(f)) return makeExtension(fp, f, "a");
        int i = d - 1;
        while (i >= 0 && cs[i] == p - 1) { cs[i] = 0; --i; }
        if (i < 0) throw std::logic_error("gfCanonical: exhausted");
        ++cs[i];
    }
}

FieldPtr makeFunctionField(const FieldPtr& base, const std::string& var) {
    if (base->kind == FieldKind::Function)
        throw std::invalid_argument("makeFunctionField: one transcendence level only");
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Function;
    f->base = base;
    f->gen = var;
    return f;
}

// --- element helpers --------------------------------------------------------

namespace {

void trimExt(FieldElem& e) {
    while (!e.ext.empty() && isZero(e.ext.back())) e.ext.pop_back();
}

std::int64_t modp(Int v, std::int64_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

FieldElem makeFiniteEl(const FieldPtr& k, std::int64_t v) {
    FieldElem e;
    e.k = k;
    e.z = ((v % k->p) + k->p) % k->p;
    return e;
}

FieldElem makeRatEl(const FieldPtr& k, Rat q) {
    FieldElem e;
    e.k = k;
    e.q = std::move(q);
    return e;
}

FieldElem makeExtEl(const FieldPtr& k, std::vector<FieldElem> cs) {
    FieldElem e;
    e.k = k;
    e.ext = std::move(cs);
    trimExt(e);
    return e;
}

// reduce polynomial-coefficient vector mod the extension modulus
std::vector<FieldElem> reduceExt(const FieldPtr& k, std::vector<FieldElem> cs) {
    Poly f = polyFromCoeffs(k->base, std::move(cs));
    Poly r = pMod(f, *k->mod);
    return r.c;
}

}  // namespace

FieldElem zeroEl(const FieldPtr& k) { return fromInt(k, 0); }
FieldElem oneEl(const FieldPtr& k) { return fromInt(k, 1); }

FieldElem fromInt(const FieldPtr& k, const Int& n) {
    switch (k->kind) {
        case FieldKind::Finite: return makeFiniteEl(k, modp(n, k->p));
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return makeRatEl(k, Rat(n));
        case FieldKind::Extension: {
            FieldElem b = fromInt(k->base, n);
            std::vector<FieldElem> cs;
            if (!isZero(b)) cs.push_back(b);
            return makeExtEl(k, std::move(cs));
        }
        case FieldKind::Function: {
            FieldElem e;
            e.k = k;
            auto rep = std::make_shared<RatRep>();
            rep->num = polyConst(k->base, fromInt(k->base, n));
            rep->den = polyOne(k->base);
            e.rf = rep;
            return e;
        }
    }
    throw std::logic_error("fromInt");
}

FieldElem fromRat(const FieldPtr& k, const Rat& r) {
    switch (k->kind) {
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return makeRatEl(k, r);
        default: {
            FieldElem n = fromInt(k, numerator(r));
            FieldElem d = fromInt(k, denominator(r));
            return divEl(n, d);
        }
    }
}

FieldElem genEl(const FieldPtr& k) {
    if (k->kind == FieldKind::Extension) {
        std::vector<FieldElem> cs{zeroEl(k->base), oneEl(k->base)};
        return makeExtEl(k, std::move(cs));
    }
    if (k->kind == FieldKind::Function) {
        FieldElem e;
        e.k = k;
        auto rep = std::make_shared<RatRep>();
        rep->num = polyVar(k->base);
        rep->den = polyOne(k->base);
        e.rf = rep;
        return e;
    }
    throw std::domain_error("genEl: field has no generator");
}

bool isZero(const FieldElem& a) {
    switch (a.k->kind) {
        case FieldKind::Finite: return a.z == 0;
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return a.q == 0;
        case FieldKind::Extension: return a.ext.empty();
        case FieldKind::Function: return polyIsZero(a.rf->num);
    }
    return false;
}

bool isOne(const FieldElem& a) { return eqEl(a, oneEl(a.k)); }

bool eqEl(const FieldElem& a, const FieldElem& b) {
    if (!sameField(a.k, b.k)) throw std::invalid_argument("eqEl: field mismatch");
    switch (a.k->kind) {
        case FieldKind::Finite: return a.z == b.z;
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return a.q == b.q;
        case FieldKind::Extension: {
            if (a.ext.size() != b.ext.size()) return false;
            for (size_t i = 0; i < a.ext.size(); ++i)
                if (!eqEl(a.ext[i], b.ext[i])) return false;
            return true;
        }
        case FieldKind::Function:
            return eqP(a.rf->num, b.rf->num) && eqP(a.rf->den, b.rf->den);
    }
    return false;
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
    if (!sameField(a.k, b.k)) throw std::invalid_argument("add: field mismatch");
    switch (a.k->kind) {
        case FieldKind::Finite: return makeFiniteEl(a.k, a.z + b.z);
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return makeRatEl(a.k, a.q + b.q);
        case FieldKind::Extension: {
            std::vector<FieldElem> cs(std::max(a.ext.size(), b.ext.size()), zeroEl(a.k->base));
            for (size_t i = 0; i < cs.size(); ++i) {
                FieldElem x = i < a.ext.size() ? a.ext[i] : zeroEl(a.k->base);
                FieldElem y = i < b.ext.size() ? b.ext[i] : zeroEl(a.k->base);
                cs[i] = add(x, y);
            }
            return makeExtEl(a.k, std::move(cs));
        }
        case FieldKind::Function: {
            Poly n = pAdd(pMul(a.rf->num, b.rf->den), pMul(b.rf->num, a.rf->den));
            Poly d = pMul(a.rf->den, b.rf->den);
            return makeFrac(a.k, n, d);
        }
    }
    throw std::logic_error("add");
}

FieldElem neg(const FieldElem& a) {
    switch (a.k->kind) {
        case FieldKind::Finite: return makeFiniteEl(a.k, -a.z);
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return makeRatEl(a.k, -a.q);
        case FieldKind::Extension: {
            std::vector<FieldElem> cs;
            cs.reserve(a.ext.size());
            for (auto& c : a.ext) cs.push_back(neg(c));
            return makeExtEl(a.k, std::move(cs));
        }
        case FieldKind::Function: return makeFrac(a.k, pNeg(a.rf->num), a.rf->den);
    }
    throw std::logic_error("neg");
}

FieldElem sub(const FieldElem& a, const FieldElem& b) { return add(a, neg(b)); }

FieldElem mul(const FieldElem& a, const FieldElem& b) {
    if (!sameField(a.k, b.k)) throw std::invalid_argument("mul: field mismatch");
    switch (a.k->kind) {
        case FieldKind::Finite: {
            Int prod = Int(a.z) * b.z;
            return makeFiniteEl(a.k, modp(prod, a.k->p));
        }
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return makeRatEl(a.k, a.q * b.q);
        case FieldKind::Extension: {
            if (a.ext.empty() || b.ext.empty()) return zeroEl(a.k);
            std::vector<FieldElem> cs(a.ext.size() + b.ext.size() - 1, zeroEl(a.k->base));
            for (size_t i = 0; i < a.ext.size(); ++i)
                for (size_t j = 0; j < b.ext.size(); ++j)
                    cs[i + j] = add(cs[i + j], mul(a.ext[i], b.ext[j]));
            return makeExtEl(a.k, reduceExt(a.k, std::move(cs)));
        }
        case FieldKind::Function:
            return makeFrac(a.k, pMul(a.rf->num, b.rf->num), pMul(a.rf->den, b.rf->den));
    }
    throw std::logic_error("mul");
}

FieldElem inv(const FieldElem& a) {
    if (isZero(a)) throw std::domain_error("inv: division by zero");
    switch (a.k->kind) {
        case FieldKind::Finite: {
            Int r = powmod(Int(a.z), Int(a.k->p - 2), Int(a.k->p));
            return makeFiniteEl(a.k, static_cast<std::int64_t>(r));
        }
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: return makeRatEl(a.k, Rat(1) / a.q);
        case FieldKind::Extension: {
            Poly f = polyFromCoeffs(a.k->base, a.ext);
            auto [g, u, v] = pXgcd(f, *a.k->mod);
            if (degP(g) != 0) throw std::domain_error("inv: element not invertible");
            Poly r = pScale(u, inv(g.c[0]));
            return makeExtEl(a.k, pMod(r, *a.k->mod).c);
        }
        case FieldKind::Function: return makeFrac(a.k, a.rf->den, a.rf->num);
    }
    throw std::logic_error("inv");
}

FieldElem divEl(const FieldElem& a, const FieldElem& b) { return mul(a, inv(b)); }

FieldElem powEl(const FieldElem& a, Int e) {
    if (e < 0) return powEl(inv(a), -e);
    FieldElem r = oneEl(a.k), base = a;
    while (e > 0) {
        if ((e & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElem promote(const FieldPtr& k, const FieldElem& a) {
    if (sameField(k, a.k)) return a;
    if (k->kind == FieldKind::Extension || k->kind == FieldKind::Function) {
        FieldElem b = promote(k->base, a);
        if (k->kind == FieldKind::Extension) {
            std::vector<FieldElem> cs;
            if (!isZero(b)) cs.push_back(b);
            return makeExtEl(k, std::move(cs));
        }
        FieldElem e;
        e.k = k;
        auto rep = std::make_shared<RatRep>();
        rep->num = polyConst(k->base, b);
        rep->den = polyOne(k->base);
        e.rf = rep;
        return e;
    }
    if ((k->kind == FieldKind::Reals || k->kind == FieldKind::Complexes) &&
        (a.k->kind == FieldKind::Rationals || a.k->kind == FieldKind::Reals))
        return makeRatEl(k, a.q);
    throw std::invalid_argument("promote: no canonical inclusion into " + showField(k));
}

bool tryRestrict(const FieldElem& a, const FieldPtr& sub, FieldElem* out) {
    if (sameField(a.k, sub)) {
        if (out) *out = a;
        return true;
    }
    if (a.k->kind == FieldKind::Extension) {
        if (a.ext.size() > 1) return false;
        FieldElem c = a.ext.empty() ? zeroEl(a.k->base) : a.ext[0];
        return tryRestrict(c, sub, out);
    }
    if (a.k->kind == FieldKind::Function) {
        if (degP(a.rf->num) > 0 || degP(a.rf->den) > 0) return false;
        FieldElem c = polyIsZero(a.rf->num) ? zeroEl(a.k->base) : a.rf->num.c[0];
        return tryRestrict(c, sub, out);
    }
    return false;
}

std::vector<FieldElem> allElements(const FieldPtr& k) {
    if (k->kind == FieldKind::Finite) {
        std::vector<FieldElem> out;
        for (std::int64_t i = 0; i < k->p; ++i) out.push_back(makeFiniteEl(k, i));
        return out;
    }
    if (k->kind == FieldKind::Extension && k->finite()) {
        auto baseEls = allElements(k->base);
        int d = k->extensionDegree();
        std::vector<FieldElem> out;
        std::vector<size_t> idx(d, 0);
        while (true) {
            std::vector<FieldElem> cs;
            for (int i = 0; i < d; ++i) cs.push_back(baseEls[idx[i]]);
            out.push_back(makeExtEl(k, std::move(cs)));
            int i = 0;
            while (i < d && idx[i] + 1 == baseEls.size()) { idx[i] = 0; ++i; }
            if (i == d) break;
            ++idx[i];
        }
        return out;
    }
    throw std::domain_error("allElements: not a finite field");
}

FieldElem randomElem(const FieldPtr& k, std::mt19937_64& rng, int height) {
    switch (k->kind) {
        case FieldKind::Finite:
            return makeFiniteEl(k, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k->p)));
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: {
            std::uniform_int_distribution<int> num(-height, height);
            std::uniform_int_distribution<int> den(1, height);
            return makeRatEl(k, Rat(num(rng), den(rng)));
        }
        case FieldKind::Extension: {
            int d = k->extensionDegree();
            std::vector<FieldElem> cs;
            for (int i = 0; i < d; ++i) cs.push_back(randomElem(k->base, rng, height));
            return makeExtEl(k, std::move(cs));
        }
        case FieldKind::Function: {
            std::uniform_int_distribution<int> dg(0, std::max(1, height / 2));
            Poly n = pRandom(k->base, dg(rng), rng, height);
            Poly d = pRandom(k->base, dg(rng), rng, height);
            if (polyIsZero(d)) d = polyOne(k->base);
            if (polyIsZero(n)) return zeroEl(k);
            return makeFrac(k, n, d);
        }
    }
    throw std::logic_error("randomElem");
}

FieldElem randomUnit(const FieldPtr& k, std::mt19937_64& rng, int height) {
    for (int i = 0; i < 1000; ++i) {
        FieldElem e = randomElem(k, rng, height);
        if (!isZero(e)) return e;
    }
    throw std::logic_error("randomUnit: exhausted");
}

// --- printing ---------------------------------------------------------------

namespace {

bool needsParens(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+' || c == '/' || (c == '-' && i > 0)))
            return true;
    }
    return false;
}

std::string coeffStr(const FieldElem& a) {
    std::string s = showElem(a);
    return needsParens(s) ? "(" + s + ")" : s;
}

}  // namespace

std::string showPoly(const Poly& f, const std::string& var) {
    if (polyIsZero(f)) return "0";
    std::string out;
    for (int i = degP(f); i >= 0; --i) {
        FieldElem c = coeffAt(f, i);
        if (isZero(c)) continue;
        std::string term;
        if (i == 0) {
            term = coeffStr(c);
        } else {
            std::string v = i == 1 ? var : var + "^" + std::to_string(i);
            term = isOne(c) ? v : coeffStr(c) + "*" + v;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::string showElem(const FieldElem& a) {
    switch (a.k->kind) {
        case FieldKind::Finite: return std::to_string(a.z);
        case FieldKind::Rationals:
        case FieldKind::Reals:
        case FieldKind::Complexes: {
            std::ostringstream os;
            os << a.q;
            return os.str();
        }
        case FieldKind::Extension: {
            Poly f = polyFromCoeffs(a.k->base, a.ext);
            return showPoly(f, a.k->gen);
        }
        case FieldKind::Function: {
            if (polyIsZero(a.rf->num)) return "0";
            std::string n = showPoly(a.rf->num, a.k->gen);
            if (degP(a.rf->den) == 0 && isOne(a.rf->den.c[0])) return n;
            return "(" + n + ")/(" + showPoly(a.rf->den, a.k->gen) + ")";
        }
    }
    return "?";
}

// --- polynomials --------------------------------------------------------------

namespace {
void trimPoly(Poly& f) {
    while (!f.c.empty() && isZero(f.c.back())) f.c.pop_back();
}
}  // namespace

Poly polyZero(const FieldPtr& k) { return Poly{k, {}}; }
Poly polyOne(const FieldPtr& k) { return Poly{k, {oneEl(k)}}; }

Poly polyFromCoeffs(const FieldPtr& k, std::vector<FieldElem> cs) {
    Poly f{k, std::move(cs)};
    trimPoly(f);
    return f;
}

Poly polyVar(const FieldPtr& k) { return Poly{k, {zeroEl(k), oneEl(k)}}; }

Poly polyConst(const FieldPtr& k, const FieldElem& a) {
    if (isZero(a)) return polyZero(k);
    return Poly{k, {a}};
}

bool polyIsZero(const Poly& f) { return f.c.empty(); }
int degP(const Poly& f) { return static_cast<int>(f.c.size()) - 1; }

const FieldElem& leadCoeff(const Poly& f) {
    if (polyIsZero(f)) throw std::domain_error("leadCoeff: zero polynomial");
    return f.c.back();
}

FieldElem coeffAt(const Poly& f, int i) {
    if (i < 0 || i >= static_cast<int>(f.c.size())) return zeroEl(f.k);
    return f.c[i];
}

bool eqP(const Poly& f, const Poly& g) {
    if (f.c.size() != g.c.size()) return false;
    for (size_t i = 0; i < f.c.size(); ++i)
        if (!eqEl(f.c[i], g.c[i])) return false;
    return true;
}

Poly pAdd(const Poly& f, const Poly& g) {
    std::vector<FieldElem> cs(std::max(f.c.size(), g.c.size()), zeroEl(f.k));
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = add(coeffAt(f, static_cast<int>(i)), coeffAt(g, static_cast<int>(i)));
    return polyFromCoeffs(f.k, std::move(cs));
}

Poly pNeg(const Poly& f) {
    std::vector<FieldElem> cs;
    cs.reserve(f.c.size());
    for (auto& c : f.c) cs.push_back(neg(c));
    return Poly{f.k, std::move(cs)};
}

Poly pSub(const Poly& f, const Poly& g) { return pAdd(f, pNeg(g)); }

Poly pMul(const Poly& f, const Poly& g) {
    if (polyIsZero(f) || polyIsZero(g)) return polyZero(f.k);
    std::vector<FieldElem> cs(f.c.size() + g.c.size() - 1, zeroEl(f.k));
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j)
            cs[i + j] = add(cs[i + j], mul(f.c[i], g.c[j]));
    return polyFromCoeffs(f.k, std::move(cs));
}

Poly pScale(const Poly& f, const FieldElem& a) {
    if (isZero(a)) return polyZero(f.k);
    std::vector<FieldElem> cs;
    cs.reserve(f.c.size());
    for (auto& c : f.c) cs.push_back(mul(c, a));
    return polyFromCoeffs(f.k, std::move(cs));
}

std::pair<Poly, Poly> pDivRem(const Poly& f, const Poly& g) {
    if (polyIsZero(g)) throw std::domain_error("pDivRem: division by zero polynomial");
    Poly r = f;
    std::vector<FieldElem> q(std::max(0, degP(f) - degP(g) + 1), zeroEl(f.k));
    FieldElem lcInv = inv(leadCoeff(g));
    while (!polyIsZero(r) && degP(r) >= degP(g)) {
        int shift = degP(r) - degP(g);
        FieldElem c = mul(leadCoeff(r), lcInv);
        q[shift] = add(q[shift], c);
        std::vector<FieldElem> sub(shift, zeroEl(f.k));
        for (auto& gc : g.c) sub.push_back(mul(gc, c));
        r = pSub(r, polyFromCoeffs(f.k, std::move(sub)));
    }
    return {polyFromCoeffs(f.k, std::move(q)), r};
}

Poly pMod(const Poly& f, const Poly& g) { return pDivRem(f, g).second; }

Poly pMonic(const Poly& f) {
    if (polyIsZero(f)) return f;
    return pScale(f, inv(leadCoeff(f)));
}

Poly pGcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!polyIsZero(b)) {
        Poly r = pMod(a, b);
        a = b;
        b = pMonic(r);
    }
    return pMonic(a);
}

std::tuple<Poly, Poly, Poly> pXgcd(const Poly& f, const Poly& h) {
    Poly r0 = f, r1 = h;
    Poly s0 = polyOne(f.k), s1 = polyZero(f.k);
    Poly t0 = polyZero(f.k), t1 = polyOne(f.k);
    while (!polyIsZero(r1)) {
        auto [q, r] = pDivRem(r0, r1);
        Poly s2 = pSub(s0, pMul(q, s1));
        Poly t2 = pSub(t0, pMul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (polyIsZero(r0)) return {r0, s0, t0};
    FieldElem c = inv(leadCoeff(r0));
    return {pScale(r0, c), pScale(s0, c), pScale(t0, c)};
}

Poly pPow(const Poly& f, Int e) {
    Poly r = polyOne(f.k), b = f;
    while (e > 0) {
        if ((e & 1) != 0) r = pMul(r, b);
        b = pMul(b, b);
        e >>= 1;
    }
    return r;
}

Poly pPowMod(const Poly& f, Int e, const Poly& m) {
    Poly r = polyOne(f.k), b = pMod(f, m);
    while (e > 0) {
        if ((e & 1) != 0) r = pMod(pMul(r, b), m);
        b = pMod(pMul(b, b), m);
        e >>= 1;
    }
    return r;
}

Poly pDeriv(const Poly& f) {
    std::vector<FieldElem> cs;
    for (int i = 1; i <= degP(f); ++i)
        cs.push_back(mul(f.c[i], fromInt(f.k, i)));
    return polyFromCoeffs(f.k, std::move(cs));
}

FieldElem pEval(const Poly& f, const FieldElem& x) {
    FieldElem r = zeroEl(x.k);
    for (int i = degP(f); i >= 0; --i) r = add(mul(r, x), promote(x.k, f.c[i]));
    return r;
}

Poly pRandom(const FieldPtr& k, int deg, std::mt19937_64& rng, int height) {
    std::vector<FieldElem> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(randomElem(k, rng, height));
    return polyFromCoeffs(k, std::move(cs));
}

bool irreducibleFF(const Poly& f) {
    if (!f.k->finite()) throw std::domain_error("irreducibleFF: need a finite field");
    int d = degP(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    Poly x = polyVar(f.k);
    Int q = f.k->order();
    Int qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    if (!eqP(pPowMod(x, qd, f), pMod(x, f))) return false;
    for (auto& [ell, e] : factor_int(Int(d))) {
        Int qq = 1;
        int m = d / static_cast<int>(ell);
        for (int i = 0; i < m; ++i) qq *= q;
        Poly g = pSub(pPowMod(x, qq, f), pMod(x, f));
        if (degP(pGcd(g, f)) != 0) return false;
    }
    return true;
}

FieldElem makeFrac(const FieldPtr& ff, const Poly& num, const Poly& den) {
    if (ff->kind != FieldKind::Function) throw std::invalid_argument("makeFrac: not a function field");
    if (polyIsZero(den)) throw std::domain_error("makeFrac: zero denominator");
    Poly n = num, d = den;
    if (polyIsZero(n)) {
        FieldElem e;
        e.k = ff;
        auto rep = std::make_shared<RatRep>();
        rep->num = polyZero(ff->base);
        rep->den = polyOne(ff->base);
        e.rf = rep;
        return e;
    }
    Poly g = pGcd(n, d);
    if (degP(g) > 0) {
        n = pDivRem(n, g).first;
        d = pDivRem(d, g).first;
    }
    FieldElem lc = inv(leadCoeff(d));
    n = pScale(n, lc);
    d = pScale(d, lc);
    FieldElem e;
    e.k = ff;
    auto rep = std::make_shared<RatRep>();
    rep->num = n;
    rep->den = d;
    e.rf = rep;
    return e;
}

const Poly& fracNum(const FieldElem& a) {
    if (a.k->kind != FieldKind::Function) throw std::invalid_argument("fracNum: not a function field element");
    return a.rf->num;
}

const Poly& fracDen(const FieldElem& a) {
    if (a.k->kind != FieldKind::Function) throw std::invalid_argument("fracDen: not a function field element");
    return a.rf->den;
}

// --- linear algebra -----------------------------------------------------------

bool solveLinear(const FieldPtr& k, Mat A, Vec b, Vec* sol) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    std::vector<int> pivotCol;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && isZero(A[piv][col])) ++piv;
        if (piv == m) continue;
        std::swap(A[piv], A[row]);
        std::swap(b[piv], b[row]);
        FieldElem p = inv(A[row][col]);
        for (size_t j = col; j < n; ++j) A[row][j] = mul(A[row][j], p);
        b[row] = mul(b[row], p);
        for (size_t i = 0; i < m; ++i) {
            if (i == row || isZero(A[i][col])) continue;
            FieldElem f = A[i][col];
            for (size_t j = col; j < n; ++j) A[i][j] = sub(A[i][j], mul(f, A[row][j]));
            b[i] = sub(b[i], mul(f, b[row]));
        }
        pivotCol.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (!isZero(b[i])) return false;
    if (sol) {
        Vec x(n, zeroEl(k));
        for (size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = b[i];
        *sol = std::move(x);
    }
    return true;
}

int rankOf(const FieldPtr& k, Mat A) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && isZero(A[piv][col])) ++piv;
        if (piv == m) continue;
        std::swap(A[piv], A[row]);
        FieldElem p = inv(A[row][col]);
        for (size_t j = col; j < n; ++j) A[row][j] = mul(A[row][j], p);
        for (size_t i = row + 1; i < m; ++i) {
            if (isZero(A[i][col])) continue;
            FieldElem f = A[i][col];
            for (size_t j = col; j < n; ++j) A[i][j] = sub(A[i][j], mul(f, A[row][j]));
        }
        ++rank;
        ++row;
    }
    return rank;
}

FieldElem detOf(const FieldPtr& k, Mat A) {
    size_t n = A.size();
    FieldElem det = oneEl(k);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && isZero(A[piv][col])) ++piv;
        if (piv == n) return zeroEl(k);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = neg(det);
        }
        det = mul(det, A[col][col]);
        FieldElem p = inv(A[col][col]);
        for (size_t i = col + 1; i < n; ++i) {
            if (isZero(A[i][col])) continue;
            FieldElem f = mul(A[i][col], p);
            for (size_t j = col; j < n; ++j) A[i][j] = sub(A[i][j], mul(f, A[col][j]));
        }
    }
    return det;
}

}  // namespace mwk
