#pragma once

// Determined algebraic numbers: an exact rational vanishing polynomial plus a
// certified isolating disk. Internally every stored polynomial is monic
// irreducible and every stored disk is Newton-contracting, so refinement is a
// plain interval-Newton iteration.

#include <memory>
#include <mutex>

#include "efa/ball.hpp"

namespace efa {

class AlgebraicNumber {
  public:
    AlgebraicNumber() : AlgebraicNumber(Rat(0)) {}
    explicit AlgebraicNumber(const Rat& value);
    // Trusted constructor: A monic irreducible, box certified isolating.
    AlgebraicNumber(QPoly min_poly, ComplexBall box);

    const QPoly& min_poly() const { return min_poly_; }
    int degree() const { return qp_deg(min_poly_); }
    bool is_rational() const { return degree() == 1; }
    Rat as_rational() const;

    // Current best enclosure; shrinks monotonically as refinements happen.
    ComplexBall enclosure() const;
    ComplexBall enclosure(const Rat& max_radius) const;

  private:
    struct Cache {
        std::mutex mu;
        ComplexBall box;
    };
    QPoly min_poly_;
    std::shared_ptr<Cache> cache_;
};

// Validates a user-supplied (polynomial, disk) pair: factors the polynomial,
// certifies that the disk isolates exactly one root, and returns that root
// with its minimal polynomial. Throws ValidationError otherwise.
AlgebraicNumber alg_from_user(const QPoly& vanishing_poly, const ComplexBall& user_box);

// Certified isolating disks for all complex roots of a monic irreducible
// polynomial, pairwise disjoint, one per root.
std::vector<ComplexBall> isolate_roots(const QPoly& irreducible);

// Interval-Newton refinement of a certified isolating disk down to the target
// radius. Exact-point disks pass through unchanged.
ComplexBall refine_ball(const QPoly& p, ComplexBall box, const Rat& target);

AlgebraicNumber refine_box(const AlgebraicNumber& x, const Rat& target_radius);

bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b);

// Positive lower bound on the distance between distinct roots (Mahler).
Rat root_separation_lower_bound(const QPoly& squarefree);

}  // namespace efa
