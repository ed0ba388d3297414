#pragma once

// The coefficient field K = Q[beta]/(p): exact arithmetic on dense rational
// coordinate vectors mod p, plus a certified numeric embedding through the
// distinguished root's isolating disk. Q itself is the degree-1 field Q[X]/(X).

#include "efa/algebraic.hpp"

namespace efa {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
  public:
    // Validates irreducibility and the isolating disk (user input path).
    static FieldPtr create(const QPoly& min_poly, const ComplexBall& root_box);
    // Trusted path for internally constructed fields.
    static FieldPtr create_trusted(QPoly monic_irreducible, ComplexBall certified_box);
    static FieldPtr rationals();

    int degree() const { return qp_deg(p_); }
    const QPoly& min_poly() const { return p_; }
    bool is_rationals() const { return degree() == 1; }

    // Shrinking enclosure of beta; cached, thread-safe.
    ComplexBall generator_enclosure() const;
    ComplexBall generator_enclosure(const Rat& max_radius) const;

    // X^(d) .. X^(2d-2) reduced mod p, for product reduction.
    const std::vector<QPoly>& power_table() const { return powers_; }

  private:
    NumberField(QPoly p, ComplexBall box);
    QPoly p_;
    std::vector<QPoly> powers_;
    mutable std::mutex mu_;
    mutable ComplexBall box_;
};

class KElement {
  public:
    KElement() = default;  // detached zero; adopts a field on first combination
    KElement(FieldPtr field, const Rat& rational_value);
    static KElement generator(const FieldPtr& field);
    static KElement from_coords(FieldPtr field, std::vector<Rat> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const;

    KElement operator-() const;
    KElement operator+(const KElement& o) const;
    KElement operator-(const KElement& o) const;
    KElement operator*(const KElement& o) const;
    KElement operator/(const KElement& o) const;
    KElement inverse() const;
    bool operator==(const KElement& o) const;
    bool operator!=(const KElement& o) const { return !(*this == o); }

    KElement& operator+=(const KElement& o) { return *this = *this + o; }
    KElement& operator-=(const KElement& o) { return *this = *this - o; }
    KElement& operator*=(const KElement& o) { return *this = *this * o; }
    KElement& operator/=(const KElement& o) { return *this = *this / o; }

    // Enclosure through the generator's disk, refined until rad <= target.
    ComplexBall enclosure(const Rat& target_radius) const;

    std::string to_string() const;

  private:
    FieldPtr field_;             // null for the detached zero
    std::vector<Rat> coords_;    // length degree(), reduced mod p
};

enum class ArithOp { add, sub, mul, div };
KElement kelem_arith(const KElement& a, const KElement& b, ArithOp op);

// Monic minimal polynomial of x over Q (squarefree part of the
// characteristic polynomial of multiplication by x).
QPoly minimal_polynomial_over_Q(const KElement& x);

// Field embedding determined by the image of the source generator.
struct FieldHom {
    FieldPtr src, dst;
    KElement gen_image;
    KElement operator()(const KElement& x) const;
};

// Compositum of K and Q(alpha) via a primitive element beta + k*alpha.
struct Extension {
    FieldPtr field;
    KElement beta_image;   // image of the source field's generator
    KElement alpha_image;  // image of alpha
    FieldHom hom() const { return {nullptr, field, beta_image}; }
};
Extension compose_extension(const FieldPtr& field, const AlgebraicNumber& alpha);

// The element's value as a determined algebraic number (minimal polynomial
// plus a certified isolating disk selected by the numeric embedding).
AlgebraicNumber kelem_to_algebraic(const KElement& x);

}  // namespace efa
