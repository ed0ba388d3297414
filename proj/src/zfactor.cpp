// Univariate factorization over Q: squarefree decomposition, then Zassenhaus
// (factor mod p, Hensel lift to p^K past the Mignotte bound, recombine).

#include <algorithm>
#include <random>

#include "efa/qpoly.hpp"

namespace efa {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

using FpPoly = std::vector<u64>;  // ascending, no trailing zeros

FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
    }
    return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = subm(r[i], b[i], p);
    return fp_trim(std::move(r));
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
    int db = fp_deg(b);
    u64 ib = invm(b.back(), p);
    while (fp_deg(a) >= db) {
        u64 c = mulm(a.back(), ib, p);
        int k = fp_deg(a) - db;
        for (int i = 0; i <= db; ++i) a[k + i] = subm(a[k + i], mulm(c, b[i], p), p);
        a = fp_trim(std::move(a));
    }
    return a;
}

FpPoly fp_monic(FpPoly a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, inv, p);
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), p);
}

FpPoly fp_deriv(const FpPoly& a, u64 p) {
    FpPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mulm(a[i], i % p, p));
    return fp_trim(std::move(r));
}

FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& mod, u64 p) {
    FpPoly r{1};
    base = fp_rem(std::move(base), mod, p);
    for (long bit = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit >= 0; --bit) {
        r = fp_rem(fp_mul(r, r, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = fp_rem(fp_mul(r, base, p), mod, p);
    }
    return r;
}

FpPoly fp_divexact(const FpPoly& f, const FpPoly& g, u64 p) {
    FpPoly q = f, quo;
    int dg = fp_deg(g);
    u64 ig = invm(g.back(), p);
    quo.assign(fp_deg(f) - dg + 1, 0);
    while (fp_deg(q) >= dg) {
        u64 c = mulm(q.back(), ig, p);
        int k = fp_deg(q) - dg;
        quo[k] = c;
        for (int i = 0; i <= dg; ++i) q[k + i] = subm(q[k + i], mulm(c, g[i], p), p);
        q = fp_trim(std::move(q));
    }
    return quo;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd, f a product of
// distinct irreducibles all of degree d.
void fp_edf(const FpPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(fp_monic(FpPoly(f), p));
        return;
    }
    Int pd(1);
    for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
    Int e = (pd - 1) / 2;
    while (true) {
        FpPoly a(fp_deg(f), 0);
        for (auto& c : a) c = rng() % p;
        a = fp_trim(std::move(a));
        if (fp_deg(a) < 1) continue;
        FpPoly t = fp_powmod(a, e, f, p);
        if (t.empty()) continue;
        t.resize(std::max<size_t>(t.size(), 1));
        t[0] = subm(t[0], 1, p);
        t = fp_trim(std::move(t));
        if (t.empty()) continue;
        FpPoly g = fp_gcd(t, f, p);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            fp_edf(g, d, p, rng, out);
            fp_edf(fp_divexact(f, g, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(FpPoly f, u64 p, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    f = fp_monic(std::move(f), p);
    FpPoly h{0, 1};  // x
    int d = 0;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = fp_powmod(h, Int(static_cast<unsigned long>(p)), f, p);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = subm(hx[1], 1, p);
        FpPoly g = fp_gcd(fp_trim(std::move(hx)), f, p);
        if (fp_deg(g) > 0) {
            fp_edf(g, d, p, rng, out);
            f = fp_divexact(f, g, p);
            h = fp_rem(h, f, p);
        }
    }
    return out;
}

// ---- Hensel lifting over Z/m ----

Int mod_sym(Int a, const Int& m) {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (a * 2 > m) a -= m;
    return a;
}

ZPoly zm_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ZPoly zm_reduce(ZPoly a, const Int& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return zm_trim(std::move(a));
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zm_reduce(std::move(r), m);
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zm_reduce(std::move(r), m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zm_reduce(std::move(r), m);
}

// divrem by monic b over Z/m; the top coefficient cancels exactly.
std::pair<ZPoly, ZPoly> zm_divrem(ZPoly a, const ZPoly& b, const Int& m) {
    int db = static_cast<int>(b.size()) - 1;
    ZPoly quo;
    if (static_cast<int>(a.size()) - 1 >= db) quo.assign(a.size() - b.size() + 1, Int(0));
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        Int c = a.back();
        int k = static_cast<int>(a.size()) - 1 - db;
        quo[k] = c;
        for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
        a = zm_reduce(std::move(a), m);
    }
    return {zm_reduce(std::move(quo), m), std::move(a)};
}

struct HenselPair {
    ZPoly g, h, s, t;  // f = g h, s g + t h = 1 (mod m), g and h monic
};

// One quadratic Hensel step: lifts the pair from mod m to mod m^2.
HenselPair hensel_step(const ZPoly& f, HenselPair P, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zm_sub(f, zm_mul(P.g, P.h, m2), m2);
    auto [q, r] = zm_divrem(zm_mul(P.s, e, m2), P.h, m2);
    ZPoly gs = zm_add(zm_add(P.g, zm_mul(P.t, e, m2), m2), zm_mul(q, P.g, m2), m2);
    ZPoly hs = zm_add(P.h, r, m2);
    ZPoly b = zm_sub(zm_add(zm_mul(P.s, gs, m2), zm_mul(P.t, hs, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = zm_divrem(zm_mul(P.s, b, m2), hs, m2);
    ZPoly ss = zm_sub(P.s, d, m2);
    ZPoly ts = zm_sub(zm_sub(P.t, zm_mul(P.t, b, m2), m2), zm_mul(c, gs, m2), m2);
    return {gs, hs, ss, ts};
}

// Extended gcd over F_p for the initial Bezout pair.
void fp_extgcd(const FpPoly& a, const FpPoly& b, u64 p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        FpPoly q(std::max<int>(fp_deg(r0) - fp_deg(r1) + 1, 0), 0);
        FpPoly rem = r0;
        u64 inv = invm(r1.back(), p);
        while (fp_deg(rem) >= fp_deg(r1)) {
            u64 c = mulm(rem.back(), inv, p);
            int k = fp_deg(rem) - fp_deg(r1);
            q[k] = c;
            for (int i = 0; i <= fp_deg(r1); ++i) rem[k + i] = subm(rem[k + i], mulm(c, r1[i], p), p);
            rem = fp_trim(std::move(rem));
        }
        q = fp_trim(std::move(q));
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = invm(r0.back(), p);
    for (auto& c : s0) c = mulm(c, inv, p);
    for (auto& c : t0) c = mulm(c, inv, p);
    s = s0;
    t = t0;
}

ZPoly fp_to_z(const FpPoly& a) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
    return r;
}

FpPoly z_to_fp(const ZPoly& a, u64 p) {
    FpPoly r(a.size());
    Int pm(static_cast<unsigned long>(p));
    for (size_t i = 0; i < a.size(); ++i) {
        Int c = a[i] % pm;
        if (c < 0) c += pm;
        r[i] = c.get_ui();
    }
    return fp_trim(std::move(r));
}

// Lift the factor list of monic f from mod p to mod p^(2^iters) >= target.
std::vector<ZPoly> hensel_lift_list(const ZPoly& f, std::vector<FpPoly> fac, u64 p,
                                    const Int& target, Int& modulus_out) {
    Int m(static_cast<unsigned long>(p));
    if (fac.size() == 1) {
        modulus_out = m;
        return {f};
    }
    // Binary split: f = G * H with G = product of the first half.
    size_t half = fac.size() / 2;
    FpPoly G{1}, H{1};
    std::vector<FpPoly> left(fac.begin(), fac.begin() + half), right(fac.begin() + half, fac.end());
    for (const auto& g : left) G = fp_mul(G, g, p);
    for (const auto& h : right) H = fp_mul(H, h, p);
    FpPoly s, t;
    fp_extgcd(G, H, p, s, t);
    HenselPair P{fp_to_z(G), fp_to_z(H), fp_to_z(s), fp_to_z(t)};
    while (m < target) {
        P = hensel_step(f, P, m);
        m = m * m;
    }
    // Recurse into both halves modulo the caller's final modulus.
    Int dummy;
    auto lift_side = [&](const ZPoly& side_f, std::vector<FpPoly>& side_fac) {
        return hensel_lift_list(side_f, side_fac, p, target, dummy);
    };
    std::vector<ZPoly> out = lift_side(zm_reduce(P.g, m), left);
    std::vector<ZPoly> out2 = lift_side(zm_reduce(P.h, m), right);
    out.insert(out.end(), out2.begin(), out2.end());
    modulus_out = m;
    return out;
}

Int zp_norm2_sq(const ZPoly& f) {
    Int s(0);
    for (const auto& c : f) s += c * c;
    return s;
}

// Exact division test over Z for monic divisor candidates.
bool z_divides(const ZPoly& f, const ZPoly& g, ZPoly* quotient) {
    ZPoly rem = f, quo;
    int dg = static_cast<int>(g.size()) - 1;
    if (static_cast<int>(f.size()) - 1 < dg) return false;
    quo.assign(f.size() - g.size() + 1, Int(0));
    while (static_cast<int>(rem.size()) - 1 >= dg && !rem.empty()) {
        if (!mpz_divisible_p(rem.back().get_mpz_t(), g.back().get_mpz_t())) return false;
        Int c = rem.back() / g.back();
        int k = static_cast<int>(rem.size()) - 1 - dg;
        quo[k] = c;
        for (int i = 0; i <= dg; ++i) rem[k + i] -= c * g[i];
        rem = zm_trim(std::move(rem));
    }
    if (!rem.empty()) return false;
    if (quotient) *quotient = quo;
    return true;
}

// Factor a squarefree monic integer polynomial into monic integer irreducibles.
std::vector<ZPoly> factor_squarefree_monic_z(ZPoly f) {
    std::vector<ZPoly> out;
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) {
        if (n == 1) out.push_back(f);
        return out;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<u64>(n));
    // Prime with squarefree reduction; f monic so the degree never drops.
    u64 p = 0;
    for (u64 cand = 3;; cand += 2) {
        Int c(static_cast<unsigned long>(cand));
        if (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) continue;
        FpPoly fb = z_to_fp(f, cand);
        if (fp_deg(fb) != n) continue;
        FpPoly d = fp_deriv(fb, cand);
        if (d.empty()) continue;
        if (fp_deg(fp_gcd(fb, d, cand)) == 0) {
            p = cand;
            break;
        }
    }
    std::vector<FpPoly> modular = fp_factor_squarefree(z_to_fp(f, p), p, rng);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });
    // Mignotte-style bound on factor coefficients, with margin.
    Int bound = (Int(1) << (n + 3)) * isqrt_ceil(zp_norm2_sq(f));
    Int target = 2 * bound + 1;
    Int modulus;
    std::vector<ZPoly> lifted = hensel_lift_list(f, modular, p, target, modulus);
    for (auto& g : lifted) g = zm_reduce(std::move(g), modulus);

    std::vector<bool> used(lifted.size(), false);
    ZPoly rest = f;
    size_t remaining = lifted.size();
    for (size_t card = 1; card <= remaining && 2 * card <= remaining; ++card) {
        std::vector<size_t> idx;
        std::vector<size_t> pool;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) pool.push_back(i);
        if (pool.size() < card) break;
        std::vector<size_t> comb(card);
        for (size_t i = 0; i < card; ++i) comb[i] = i;
        bool restart = false;
        while (true) {
            ZPoly g{Int(1)};
            for (size_t i : comb) g = zm_mul(g, lifted[pool[i]], modulus);
            for (auto& c : g) c = mod_sym(c, modulus);
            g = zm_trim(std::move(g));
            ZPoly quo;
            if (!g.empty() && g.back() == 1 && z_divides(rest, g, &quo)) {
                out.push_back(g);
                rest = quo;
                for (size_t i : comb) used[pool[i]] = true;
                remaining -= card;
                restart = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && comb[pos] == pool.size() - card + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (size_t i = pos + 1; i < card; ++i) comb[i] = comb[i - 1] + 1;
        }
        if (restart) --card;  // retry the same cardinality with the reduced pool
    }
    if (static_cast<int>(rest.size()) - 1 > 0) out.push_back(rest);
    return out;
}

}  // namespace

QFactorization qp_factor(const QPoly& p0) {
    QPoly p = qp_trim(p0);
    if (p.empty()) throw ValidationError("cannot factor the zero polynomial");
    QFactorization out;
    out.leading = p.back();
    if (qp_deg(p) == 0) return out;
    for (const auto& [part, mult] : qp_squarefree_decomposition(p)) {
        // Monicize over Z: W = d*part integer; Wt(x) = d^(n-1) W(x/d) monic.
        Int den(1);
        for (const auto& c : part) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        int n = qp_deg(part);
        ZPoly wt(n + 1);
        // coefficient of x^i in Wt equals d^(n-i-... ) built directly:
        // part = sum a_i x^i (a_n = 1); Wt_i = a_i * den^(n-i) * (den^i scaling makes it integral)
        for (int i = 0; i <= n; ++i) {
            Rat c = part[i];
            Int scaled = c.get_num() * (den / c.get_den());  // = den * a_i
            // Wt_i = a_i * den^(n-i) = scaled * den^(n-i-1), except i = n gives 1
            if (i == n) {
                wt[i] = 1;
            } else {
                Int pw(1);
                for (int k = 0; k < n - i - 1; ++k) pw *= den;
                wt[i] = scaled * pw;
            }
        }
        for (const auto& G : factor_squarefree_monic_z(wt)) {
            // map back x -> den*x and re-monicize
            int m = static_cast<int>(G.size()) - 1;
            QPoly g(m + 1);
            Int pw(1);
            for (int i = 0; i <= m; ++i) {
                g[i] = make_rat(G[i] * pw, Int(1));
                pw *= den;
            }
            g = qp_monic(g);
            out.factors.emplace_back(g, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

bool qp_is_irreducible(const QPoly& p) {
    if (qp_deg(p) < 1) return false;
    if (qp_deg(p) == 1) return true;
    auto f = qp_factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace efa
