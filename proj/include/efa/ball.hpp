#pragma once

// Complex disks with exact rational center and radius. All predicates are
// exact (squared-magnitude comparisons); magnitude bounds round outward, so
// every operation returns a true enclosure.

#include "efa/qpoly.hpp"

namespace efa {

struct ComplexBall {
    Rat re, im, rad;  // rad >= 0

    ComplexBall() : re(0), im(0), rad(0) {}
    ComplexBall(Rat r, Rat i, Rat d) : re(std::move(r)), im(std::move(i)), rad(std::move(d)) {}
    static ComplexBall point(const Rat& r, const Rat& i = Rat(0)) { return {r, i, Rat(0)}; }

    bool is_point() const { return rad == 0; }
    Rat center_norm_sq() const { return re * re + im * im; }
    Rat abs_upper() const { return sqrt_upper(center_norm_sq()) + rad; }
    Rat abs_lower() const;  // max(0, |center| - rad), rounded down

    bool contains_zero() const { return center_norm_sq() <= rad * rad; }
    bool contains_point(const Rat& x, const Rat& y) const;
    bool contains(const ComplexBall& other) const;
    bool disjoint(const ComplexBall& other) const;

    // Dyadic outward rounding of the representation at 2^-prec.
    ComplexBall compressed(unsigned prec) const;
};

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_neg(ComplexBall a);
ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_scale(const ComplexBall& a, const Rat& c);
// Requires 0 outside a.
ComplexBall ball_inv(const ComplexBall& a);
ComplexBall ball_div(const ComplexBall& a, const ComplexBall& b);

ComplexBall ball_eval_qpoly(const QPoly& p, const ComplexBall& x);

std::string ball_to_string(const ComplexBall& b, int digits = 10);

}  // namespace efa
