#include "efa/algebraic.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace efa {

namespace {

unsigned ball_work_prec(const ComplexBall& b) {
    // enough dyadic digits that compression does not dominate the radius
    size_t bits = mpz_sizeinbase(b.rad.get_den().get_mpz_t(), 2);
    return static_cast<unsigned>(std::max<size_t>(64, 2 * bits + 32));
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rat& value)
    : min_poly_{-value, Rat(1)}, cache_(std::make_shared<Cache>()) {
    cache_->box = ComplexBall::point(value);
}

AlgebraicNumber::AlgebraicNumber(QPoly min_poly, ComplexBall box)
    : min_poly_(std::move(min_poly)), cache_(std::make_shared<Cache>()) {
    cache_->box = std::move(box);
}

Rat AlgebraicNumber::as_rational() const {
    if (!is_rational()) throw InternalInconsistency("as_rational on irrational value");
    return -min_poly_[0];
}

ComplexBall AlgebraicNumber::enclosure() const {
    std::lock_guard lk(cache_->mu);
    return cache_->box;
}

ComplexBall AlgebraicNumber::enclosure(const Rat& max_radius) const {
    std::lock_guard lk(cache_->mu);
    if (cache_->box.rad > max_radius)
        cache_->box = refine_ball(min_poly_, cache_->box, max_radius);
    return cache_->box;
}

Rat root_separation_lower_bound(const QPoly& squarefree) {
    int d = qp_deg(squarefree);
    if (d < 2) return Rat(1);
    auto [content, z] = qp_to_z_primitive(squarefree);
    QPoly zi = qp_from_z(z);
    Rat disc = qp_resultant(zi, qp_derivative(zi));
    if (disc == 0) throw InternalInconsistency("separation bound on non-squarefree input");
    Int norm_sq(0);
    for (const auto& c : z) norm_sq += c.get_num() * c.get_num();
    // Mahler: sep > sqrt(3 |disc|) / (d^((d+2)/2) * ||A||_2^(d-1))
    Rat num = sqrt_lower(Rat(3) * abs(disc));
    Int dint(1);
    for (int i = 0; i < d + 2; ++i) dint *= d;
    Rat dpow = sqrt_upper(Rat(dint));
    Rat npow(1);
    Rat n2 = sqrt_upper(Rat(norm_sq));
    for (int i = 0; i < d - 1; ++i) npow *= n2;
    Rat sep = num / (dpow * npow);
    if (sep <= 0) throw InternalInconsistency("vanishing separation bound");
    return sep;
}

ComplexBall refine_ball(const QPoly& p, ComplexBall box, const Rat& target) {
    if (box.rad <= target || box.is_point()) return box;
    QPoly dp = qp_derivative(p);
    for (int iter = 0; iter < 400; ++iter) {
        if (box.rad <= target) return box;
        unsigned prec = ball_work_prec(box) + 2 * iter;
        ComplexBall m = ComplexBall::point(dyadic_round(box.re, prec, false),
                                           dyadic_round(box.im, prec, false));
        // exact rational root hit
        ComplexBall pm = ball_eval_qpoly(p, m);
        if (pm.re == 0 && pm.im == 0) return m;
        ComplexBall dB = ball_eval_qpoly(dp, box);
        if (dB.contains_zero())
            throw InternalInconsistency("refine_ball: derivative enclosure contains zero");
        ComplexBall nb = ball_sub(m, ball_div(pm, dB)).compressed(prec);
        if (box.contains(nb) && nb.rad < box.rad) {
            box = nb;
        } else {
            // midpoint rounding too coarse; retry at higher precision
            continue;
        }
    }
    throw InternalInconsistency("refine_ball: no contraction after 400 iterations");
}

AlgebraicNumber refine_box(const AlgebraicNumber& x, const Rat& target_radius) {
    if (target_radius <= 0) throw ValidationError("refine_box: target radius must be positive");
    AlgebraicNumber out(x.min_poly(), x.enclosure(target_radius));
    return out;
}

namespace {

struct Rect {
    Rat x0, x1, y0, y1;
    int depth = 0;

    ComplexBall ball() const {
        Rat cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
        Rat hx = (x1 - x0) / 2, hy = (y1 - y0) / 2;
        return {cx, cy, sqrt_upper(hx * hx + hy * hy)};
    }
};

// Newton inclusion test; returns a tightened certified ball on success.
bool newton_certify(const QPoly& p, const QPoly& dp, const ComplexBall& B, ComplexBall& out) {
    ComplexBall dB = ball_eval_qpoly(dp, B);
    if (dB.contains_zero()) return false;
    unsigned prec = ball_work_prec(B);
    ComplexBall m = ComplexBall::point(dyadic_round(B.re, prec, false),
                                       dyadic_round(B.im, prec, false));
    ComplexBall n1 = ball_sub(m, ball_div(ball_eval_qpoly(p, m), dB)).compressed(prec);
    if (!B.contains(n1) || !(n1.rad * 2 <= B.rad)) return false;
    // one more step so the returned disk sits inside the quadratic basin
    ComplexBall d1 = ball_eval_qpoly(dp, n1);
    if (d1.contains_zero()) return false;
    ComplexBall m1 = ComplexBall::point(dyadic_round(n1.re, prec + 16, false),
                                        dyadic_round(n1.im, prec + 16, false));
    ComplexBall n2 = ball_sub(m1, ball_div(ball_eval_qpoly(p, m1), d1)).compressed(prec + 16);
    if (!n1.contains(n2)) return false;
    out = n2;
    return true;
}

}  // namespace

std::vector<ComplexBall> isolate_roots(const QPoly& p0) {
    QPoly p = qp_monic(qp_trim(p0));
    int d = qp_deg(p);
    if (d < 1) throw InternalInconsistency("isolate_roots: constant polynomial");
    if (d == 1) return {ComplexBall::point(-p[0])};
    QPoly dp = qp_derivative(p);
    Rat sep = root_separation_lower_bound(p);

    Rat R(1);
    for (int i = 0; i < d; ++i) R += abs(p[i]);

    for (int attempt = 0; attempt < 4; ++attempt) {
        std::mt19937_64 rng(0x5b1cull + attempt * 7919);
        auto jitter = [&]() {
            // split fraction in [7/16, 9/16] with dyadic denominator
            long t = static_cast<long>(rng() % 129);
            return Rat(7 * 128 + t, 16 * 128);
        };
        std::deque<Rect> queue{Rect{-R, R, -R, R, 0}};
        std::vector<ComplexBall> roots;
        bool failed = false;
        long steps = 0;
        while (!queue.empty()) {
            if (++steps > 200000 || queue.front().depth > 256) {
                failed = true;
                break;
            }
            Rect rect = queue.front();
            queue.pop_front();
            ComplexBall B = rect.ball().compressed(ball_work_prec(rect.ball()));
            ComplexBall pB = ball_eval_qpoly(p, B);
            if (!pB.contains_zero()) continue;
            ComplexBall cert;
            if (newton_certify(p, dp, B, cert)) {
                // dedupe against already certified roots
                bool dup = false;
                for (auto& known : roots) {
                    ComplexBall a = cert, b = known;
                    while (!a.disjoint(b) && (a.rad * 4 > sep || b.rad * 4 > sep)) {
                        a = refine_ball(p, a, a.rad / 8);
                        b = refine_ball(p, b, b.rad / 8);
                    }
                    if (!a.disjoint(b)) {
                        known = a.rad < b.rad ? a : b;
                        dup = true;
                        break;
                    }
                }
                if (!dup) roots.push_back(cert);
                continue;
            }
            Rat fx = jitter(), fy = jitter();
            Rat mx = rect.x0 + (rect.x1 - rect.x0) * fx;
            Rat my = rect.y0 + (rect.y1 - rect.y0) * fy;
            unsigned prec = static_cast<unsigned>(64 + 2 * rect.depth);
            mx = dyadic_round(mx, prec, false);
            my = dyadic_round(my, prec, false);
            int nd = rect.depth + 1;
            queue.push_back({rect.x0, mx, rect.y0, my, nd});
            queue.push_back({mx, rect.x1, rect.y0, my, nd});
            queue.push_back({rect.x0, mx, my, rect.y1, nd});
            queue.push_back({mx, rect.x1, my, rect.y1, nd});
        }
        if (!failed && static_cast<int>(roots.size()) == d) {
            // make the disks pairwise disjoint
            for (bool again = true; again;) {
                again = false;
                for (size_t i = 0; i < roots.size(); ++i)
                    for (size_t j = i + 1; j < roots.size(); ++j)
                        if (!roots[i].disjoint(roots[j])) {
                            roots[i] = refine_ball(p, roots[i], roots[i].rad / 8);
                            roots[j] = refine_ball(p, roots[j], roots[j].rad / 8);
                            again = true;
                        }
            }
            return roots;
        }
    }
    throw InternalInconsistency("isolate_roots: subdivision failed to certify all roots");
}

AlgebraicNumber alg_from_user(const QPoly& vanishing_poly, const ComplexBall& user_box) {
    QPoly A = qp_trim(vanishing_poly);
    if (qp_deg(A) < 1) throw ValidationError("defining polynomial must be nonconstant");
    auto fact = qp_factor(A);
    struct Cand {
        QPoly F;
        ComplexBall ball;
    };
    std::vector<Cand> inside;
    for (const auto& [F, mult] : fact.factors) {
        for (const auto& rb : isolate_roots(F)) {
            ComplexBall b = rb;
            // decide containment in the user disk
            for (int iter = 0;; ++iter) {
                if (user_box.contains(b)) {
                    inside.push_back({F, b});
                    break;
                }
                if (user_box.disjoint(b)) break;
                if (iter > 80)
                    throw ValidationError(
                        "cannot certify the isolating disk (a root sits on its boundary?)");
                b = refine_ball(F, b, b.rad / 16);
            }
        }
    }
    if (inside.size() != 1)
        throw ValidationError("isolating disk contains " + std::to_string(inside.size()) +
                              " roots of the defining polynomial; expected exactly 1");
    return AlgebraicNumber(inside[0].F, inside[0].ball);
}

bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (qp_trim(a.min_poly()) != qp_trim(b.min_poly())) return false;
    if (a.is_rational()) return a.as_rational() == b.as_rational();
    Rat sep = root_separation_lower_bound(a.min_poly());
    Rat target = sep / 4;
    ComplexBall ba = a.enclosure(target), bb = b.enclosure(target);
    return !ba.disjoint(bb);
}

}  // namespace efa
