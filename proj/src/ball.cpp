#include "efa/ball.hpp"

#include <sstream>

namespace efa {

Rat ComplexBall::abs_lower() const {
    Rat lo = sqrt_lower(center_norm_sq()) - rad;
    if (lo < 0) return Rat(0);
    return lo;
}

bool ComplexBall::contains_point(const Rat& x, const Rat& y) const {
    Rat dx = re - x, dy = im - y;
    return dx * dx + dy * dy <= rad * rad;
}

bool ComplexBall::contains(const ComplexBall& other) const {
    Rat slack = rad - other.rad;
    if (slack < 0) return false;
    Rat dx = re - other.re, dy = im - other.im;
    return dx * dx + dy * dy <= slack * slack;
}

bool ComplexBall::disjoint(const ComplexBall& other) const {
    Rat s = rad + other.rad;
    Rat dx = re - other.re, dy = im - other.im;
    return dx * dx + dy * dy > s * s;
}

ComplexBall ComplexBall::compressed(unsigned prec) const {
    Rat nre = dyadic_round(re, prec, false);
    Rat nim = dyadic_round(im, prec, false);
    Rat slack_re = re - nre, slack_im = im - nim;
    Rat pad = sqrt_upper(slack_re * slack_re + slack_im * slack_im);
    return {nre, nim, dyadic_round(rad + pad, prec, true)};
}

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b) {
    return {a.re + b.re, a.im + b.im, a.rad + b.rad};
}

ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b) {
    return {a.re - b.re, a.im - b.im, a.rad + b.rad};
}

ComplexBall ball_neg(ComplexBall a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
}

ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b) {
    Rat re = a.re * b.re - a.im * b.im;
    Rat im = a.re * b.im + a.im * b.re;
    Rat abs_a = sqrt_upper(a.center_norm_sq());
    Rat abs_b = sqrt_upper(b.center_norm_sq());
    return {re, im, abs_a * b.rad + abs_b * a.rad + a.rad * b.rad};
}

ComplexBall ball_scale(const ComplexBall& a, const Rat& c) {
    Rat ac = c < 0 ? Rat(-c) : c;
    return {a.re * c, a.im * c, a.rad * ac};
}

ComplexBall ball_inv(const ComplexBall& a) {
    Rat n = a.center_norm_sq();
    if (a.rad == 0) {
        if (n == 0) throw InternalInconsistency("ball_inv: exact zero");
        return {a.re / n, -a.im / n, Rat(0)};
    }
    Rat lo = a.abs_lower();
    if (lo <= 0) throw InternalInconsistency("ball_inv: enclosure contains zero");
    Rat clow = sqrt_lower(n);
    return {a.re / n, -a.im / n, a.rad / (clow * lo)};
}

ComplexBall ball_div(const ComplexBall& a, const ComplexBall& b) {
    return ball_mul(a, ball_inv(b));
}

ComplexBall ball_eval_qpoly(const QPoly& p, const ComplexBall& x) {
    ComplexBall r = ComplexBall::point(Rat(0));
    for (size_t i = p.size(); i-- > 0;) {
        r = ball_mul(r, x);
        r.re += p[i];
    }
    return r;
}

std::string ball_to_string(const ComplexBall& b, int digits) {
    auto dec = [&](const Rat& q) {
        mpf_class f(q, 64 + 4 * digits);
        mp_exp_t exp;
        std::string s = f.get_str(exp, 10, digits);
        std::ostringstream os;
        if (s.empty() || s == "-") return std::string("0");
        bool neg = s[0] == '-';
        if (neg) s = s.substr(1);
        os << (neg ? "-" : "") << "0." << s << "e" << exp;
        return os.str();
    };
    std::ostringstream os;
    os << "(" << dec(b.re);
    if (b.im != 0) os << (sgn(b.im) < 0 ? " - " : " + ") << dec(abs(b.im)) << "i";
    os << " +/- " << dec(b.rad) << ")";
    return os.str();
}

}  // namespace efa
