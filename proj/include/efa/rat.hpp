#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace efa {

using Int = mpz_class;
using Rat = mpq_class;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d", optional leading '-'.
Rat parse_rat(const std::string& s);

// Canonical form: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& q);

// floor(sqrt(n)) and ceil(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);
Int isqrt_ceil(const Int& n);

// Bounds on sqrt(q) for q >= 0: sqrt(a/b) = sqrt(a*b)/b.
Rat sqrt_upper(const Rat& q);
Rat sqrt_lower(const Rat& q);

// Nearest dyadic of denominator 2^prec in the requested direction.
Rat dyadic_round(const Rat& q, unsigned prec, bool round_up);

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

}  // namespace efa
