#include "efa/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace efa {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw ValidationError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw InternalInconsistency("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int isqrt_ceil(const Int& n) {
    Int r = isqrt_floor(n);
    if (r * r < n) r += 1;
    return r;
}

Rat sqrt_upper(const Rat& q) {
    if (q < 0) throw InternalInconsistency("sqrt of negative rational");
    return make_rat(isqrt_ceil(q.get_num() * q.get_den()), q.get_den());
}

Rat sqrt_lower(const Rat& q) {
    if (q < 0) throw InternalInconsistency("sqrt of negative rational");
    return make_rat(isqrt_floor(q.get_num() * q.get_den()), q.get_den());
}

Rat dyadic_round(const Rat& q, unsigned prec, bool round_up) {
    Int scale = Int(1) << prec;
    Int num = q.get_num() * scale;
    Int quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    if (round_up && rem != 0) quo += 1;
    return make_rat(quo, scale);
}

QPoly qp_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly qp_from_ints(std::initializer_list<long> cs) {
    QPoly p;
    for (long c : cs) p.emplace_back(c);
    return qp_trim(std::move(p));
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qp_trim(std::move(r));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qp_trim(std::move(r));
}

QPoly qp_neg(QPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return qp_trim(std::move(r));
}

QPoly qp_scale(const QPoly& a, const Rat& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

QPoly qp_shift_up(const QPoly& a, int k) {
    if (a.empty()) return {};
    QPoly r(a.size() + k, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

std::pair<QPoly, QPoly> qp_divrem(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw InternalInconsistency("polynomial division by zero");
    QPoly rem = a, quo;
    int db = qp_deg(b);
    if (qp_deg(a) >= db) quo.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lb = b.back();
    while (qp_deg(rem) >= db) {
        int k = qp_deg(rem) - db;
        Rat c = rem.back() / lb;
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        rem = qp_trim(std::move(rem));
    }
    return {qp_trim(std::move(quo)), rem};
}

QPoly qp_monic(const QPoly& a) {
    if (a.empty()) return a;
    return qp_scale(a, Rat(1) / a.back());
}

QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
    return qp_trim(std::move(r));
}

Rat qp_eval(const QPoly& a, const Rat& x) {
    Rat r(0);
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

std::pair<Rat, ZPoly> qp_to_z_primitive(const QPoly& p) {
    if (p.empty()) return {Rat(0), {}};
    Int den(1);
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(p.size());
    Int g(0);
    for (size_t i = 0; i < p.size(); ++i) {
        z[i] = p[i].get_num() * (den / p[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (sgn(z.back()) < 0) g = -g;
    for (auto& c : z) c /= g;
    return {make_rat(g, den), z};
}

QPoly qp_from_z(const ZPoly& p) {
    QPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
    return qp_trim(std::move(r));
}

namespace {

ZPoly zp_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Int zp_content(const ZPoly& p) {
    Int g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Pseudo-remainder: lc(b)^(da-db+1) * a mod b, all over Z.
ZPoly zp_prem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int k = static_cast<int>(a.size()) - 1 - db;
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        a = zp_trim(std::move(a));
    }
    return a;
}

ZPoly zp_primitive_gcd(ZPoly a, ZPoly b) {
    a = zp_trim(std::move(a));
    b = zp_trim(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    Int c = zp_content(a);
    Int d = zp_content(b);
    for (auto& x : a) x /= c;
    for (auto& x : b) x /= d;
    while (true) {
        if (a.size() < b.size()) std::swap(a, b);
        ZPoly r = zp_prem(a, b);
        if (r.empty()) break;
        Int g = zp_content(r);
        for (auto& x : r) x /= g;
        a = std::move(b);
        b = std::move(r);
    }
    if (sgn(b.back()) < 0)
        for (auto& x : b) x = -x;
    return b;
}

}  // namespace

QPoly qp_gcd(const QPoly& a, const QPoly& b) {
    if (a.empty() && b.empty()) throw InternalInconsistency("gcd(0, 0)");
    if (a.empty()) return qp_monic(b);
    if (b.empty()) return qp_monic(a);
    auto [ca, za] = qp_to_z_primitive(a);
    auto [cb, zb] = qp_to_z_primitive(b);
    return qp_monic(qp_from_z(zp_primitive_gcd(za, zb)));
}

QPoly qp_lcm(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    return qp_monic(qp_divrem(qp_mul(a, b), qp_gcd(a, b)).first);
}

bool qp_is_squarefree(const QPoly& a) {
    if (qp_deg(a) <= 1) return true;
    return qp_deg(qp_gcd(a, qp_derivative(a))) == 0;
}

std::vector<std::pair<QPoly, int>> qp_squarefree_decomposition(const QPoly& a) {
    if (a.empty()) throw InternalInconsistency("squarefree decomposition of 0");
    std::vector<std::pair<QPoly, int>> out;
    QPoly f = qp_monic(a);
    if (qp_deg(f) == 0) return out;
    // Yun's algorithm.
    QPoly fp = qp_derivative(f);
    QPoly g = qp_gcd(f, fp);
    QPoly c = qp_divrem(f, g).first;
    QPoly d = qp_sub(qp_divrem(fp, g).first, qp_derivative(c));
    int i = 1;
    while (qp_deg(c) > 0) {
        QPoly h = qp_gcd(c, d);
        if (qp_deg(h) > 0) out.emplace_back(qp_monic(h), i);
        c = qp_divrem(c, h).first;
        d = qp_sub(qp_divrem(d, h).first, qp_derivative(c));
        ++i;
    }
    return out;
}

QPoly qp_taylor_shift(const QPoly& p, const Rat& a) {
    if (a == 0 || p.empty()) return p;
    // Horner: p(z+a) built from the top coefficient down.
    QPoly r{p.back()};
    for (size_t i = p.size() - 1; i-- > 0;) {
        QPoly t(r.size() + 1, Rat(0));
        for (size_t j = 0; j < r.size(); ++j) {
            t[j + 1] += r[j];
            t[j] += r[j] * a;
        }
        t[0] += p[i];
        r = qp_trim(std::move(t));
        if (r.empty()) r = {};
    }
    return r;
}

Rat qp_resultant(const QPoly& a0, const QPoly& b0) {
    QPoly a = qp_trim(a0), b = qp_trim(b0);
    if (a.empty() || b.empty()) return Rat(0);
    Rat res(1);
    // res(a,b) = lc(b)^da * prod b(roots of a); classical PRS recursion.
    while (true) {
        int da = qp_deg(a), db = qp_deg(b);
        if (db == 0) {
            Rat lb = b.back();
            Rat p(1);
            for (int i = 0; i < da; ++i) p *= lb;
            return res * p;
        }
        QPoly r = qp_divrem(a, b).second;
        if (r.empty()) return Rat(0);
        int dr = qp_deg(r);
        Rat lb = b.back();
        Rat p(1);
        for (int i = 0; i < da - dr; ++i) p *= lb;
        if ((da % 2) && (db % 2)) res = -res;
        res *= p;
        a = std::move(b);
        b = std::move(r);
    }
}

QPoly qp_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw InternalInconsistency("interpolation size mismatch");
    // Newton's divided differences.
    size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    QPoly r;
    for (size_t i = n; i-- > 0;) {
        QPoly lin{-xs[i], Rat(1)};
        r = qp_add(qp_mul(r, lin), QPoly{dd[i]});
    }
    return qp_trim(std::move(r));
}

std::string qp_to_string(const QPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << rat_to_string(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<Int> qp_integer_roots(const QPoly& p) {
    std::vector<Int> roots;
    if (qp_deg(p) < 1) return roots;
    for (const auto& [f, mult] : qp_factor(p).factors) {
        if (qp_deg(f) != 1) continue;
        Rat r = -f[0];  // monic z + f0
        if (r.get_den() == 1) roots.push_back(r.get_num());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace efa
