#include "mwk/numbers.hpp"

#include <algorithm>

namespace mwk {

Int powmod(Int base, Int exp, const Int& mod) {
    Int r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if ((exp & 1) != 0) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are deterministic below 3.3e24, far beyond our ranges.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2; y = 2; d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) { ++out[n]; return; }
    for (int q = 2; q < 100000; ++q) {
        if (n % q == 0) {
            while (n % q == 0) { ++out[Int(q)]; n /= q; }
            factor_rec(n, out);
            return;
        }
        if (Int(q) * q > n) break;
    }
    if (n == 1) return;
    if (is_prime(n)) { ++out[n]; return; }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factor_int(Int n) {
    if (n == 0) throw std::invalid_argument("factor_int: zero");
    if (n < 0) n = -n;
    std::map<Int, int> out;
    factor_rec(n, out);
    return out;
}

Int squarefree_part(const Int& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: zero");
    Int r = n < 0 ? Int(-1) : Int(1);
    for (auto& [p, e] : factor_int(n))
        if (e % 2) r *= p;
    return r;
}

Int squareclass_rep(const Rat& r) {
    if (r == 0) throw std::invalid_argument("squareclass_rep: zero");
    return squarefree_part(numerator(r) * denominator(r));
}

bool is_square_int(const Int& n) {
    if (n < 0) return false;
    if (n == 0) return true;
    Int s = boost::multiprecision::sqrt(n);
    return s * s == n;
}

bool is_square_rat(const Rat& r) {
    if (r == 0) return true;
    if (r < 0) return false;
    return is_square_int(numerator(r)) && is_square_int(denominator(r));
}

int legendre(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int l = powmod(a, (p - 1) / 2, p);
    return l == 1 ? 1 : -1;
}

namespace {

// v_p and unit part of a nonzero rational at a finite prime.
std::pair<long, Rat> padic_split(const Rat& a, const Int& p) {
    Int num = numerator(a), den = denominator(a);
    long v = 0;
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return {v, Rat(num, den)};
}

// epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2 for odd u.
int eps2(const Int& u) { return static_cast<int>(((u - 1) / 2) % 2 != 0); }
int omega2(const Int& u) { return static_cast<int>(((u * u - 1) / 8) % 2 != 0); }

}  // namespace

int hilbert(const Rat& a, const Rat& b, const Int& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert: zero argument");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    if (p == 2) {
        auto [al, u] = padic_split(a, 2);
        auto [bl, v] = padic_split(b, 2);
        // write u, v as odd integers mod 8
        Int un = numerator(u) * denominator(u);
        Int vn = numerator(v) * denominator(v);
        un %= 8; if (un < 0) un += 8;
        vn %= 8; if (vn < 0) vn += 8;
        int e = eps2(un) * eps2(vn) + al * omega2(vn) + bl * omega2(un);
        return e % 2 ? -1 : 1;
    }
    auto [al, u] = padic_split(a, p);
    auto [bl, v] = padic_split(b, p);
    Int un = numerator(u) * powmod(denominator(u), p - 2, p) % p;
    Int vn = numerator(v) * powmod(denominator(v), p - 2, p) % p;
    int e = 0;
    if ((al % 2) && (bl % 2) && legendre(-1, p) == -1) e ^= 1;
    if (bl % 2 && legendre(un, p) == -1) e ^= 1;
    if (al % 2 && legendre(vn, p) == -1) e ^= 1;
    return e ? -1 : 1;
}

std::vector<Int> relevant_primes(const std::vector<Rat>& entries) {
    std::map<Int, int> acc;
    acc[2] = 1;
    for (auto& r : entries) {
        if (r == 0) continue;
        for (auto& [p, e] : factor_int(numerator(r) * denominator(r))) acc[p] = 1;
    }
    std::vector<Int> out;
    for (auto& [p, e] : acc) out.push_back(p);
    return out;
}

}  // namespace mwk
