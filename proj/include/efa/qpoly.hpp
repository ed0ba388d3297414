#pragma once

// Dense univariate polynomials with rational coefficients, ascending degree.
// The zero polynomial is the empty vector; deg(0) = -1.

#include <utility>

#include "efa/rat.hpp"

namespace efa {

using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

QPoly qp_trim(QPoly p);
inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool qp_is_zero(const QPoly& p) { return p.empty(); }
QPoly qp_from_ints(std::initializer_list<long> cs);

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_neg(QPoly a);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rat& c);
QPoly qp_shift_up(const QPoly& a, int k);  // multiply by z^k

// Euclidean division over Q; b != 0.
std::pair<QPoly, QPoly> qp_divrem(const QPoly& a, const QPoly& b);
QPoly qp_monic(const QPoly& a);
QPoly qp_derivative(const QPoly& a);
Rat qp_eval(const QPoly& a, const Rat& x);

// Monic gcd; primitive PRS over Z internally.
QPoly qp_gcd(const QPoly& a, const QPoly& b);
QPoly qp_lcm(const QPoly& a, const QPoly& b);

// gcd(a, a') = 1 test and Yun decomposition: list of (factor, multiplicity),
// factors monic squarefree pairwise coprime, product^mult = a / lc.
bool qp_is_squarefree(const QPoly& a);
std::vector<std::pair<QPoly, int>> qp_squarefree_decomposition(const QPoly& a);

// Taylor shift: p(z + a).
QPoly qp_taylor_shift(const QPoly& p, const Rat& a);

// Res_x(a, b) over Q via a subresultant-style PRS.
Rat qp_resultant(const QPoly& a, const QPoly& b);

// Lagrange interpolation through distinct sample points.
QPoly qp_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Content/primitive part over Z: p = content * primitive, primitive in Z[x]
// with positive leading coefficient and coprime coefficients.
std::pair<Rat, ZPoly> qp_to_z_primitive(const QPoly& p);
QPoly qp_from_z(const ZPoly& p);

std::string qp_to_string(const QPoly& p, const std::string& var = "z");

// Factorization over Q: monic irreducible factors with multiplicities;
// the leading coefficient is returned separately.
struct QFactorization {
    Rat leading;
    std::vector<std::pair<QPoly, int>> factors;
};
QFactorization qp_factor(const QPoly& p);
bool qp_is_irreducible(const QPoly& p);

// All integer roots (exact), via the factorization.
std::vector<Int> qp_integer_roots(const QPoly& p);

}  // namespace efa
