#pragma once

#include <stdexcept>
#include <string>

#include "oredil/rational.hpp"

namespace oredil {

/// A point of the circle group written additively: the class of a rational q
/// in Q/Z, standing for exp(2*pi*i*q). Phases form a group under addition;
/// complex conjugation is negation. All arithmetic is exact.
///
/// A phase only becomes an actual scalar when it multiplies a vector or an
/// algebra element. That conversion lands in Q(i) and is therefore defined
/// for denominators dividing 4; every multiplier shipped with the library
/// takes values there. Other denominators stay symbolic and refuse to
/// convert rather than round.
class Phase {
    Rat q_; // normalized to [0, 1)

    static Rat normalize(Rat q) {
        return q - Rat(q.floor());
    }

public:
    Phase() = default;
    explicit Phase(Rat q) : q_(normalize(q)) {}
    Phase(std::int64_t num, std::int64_t den) : q_(normalize(Rat(num, den))) {}

    static Phase zero() { return Phase(); }

    const Rat& value() const { return q_; }
    bool is_zero() const { return q_.is_zero(); }

    Phase conj() const { return Phase(-q_); }

    friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.q_ + b.q_); }
    friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.q_ - b.q_); }
    Phase operator-() const { return Phase(-q_); }
    Phase& operator+=(const Phase& b) { return *this = *this + b; }
    Phase& operator-=(const Phase& b) { return *this = *this - b; }

    friend bool operator==(const Phase& a, const Phase& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }

    /// exp(2*pi*i*q) as a Gaussian rational. Requires the denominator of q
    /// to divide 4.
    GaussRat scalar() const {
        std::int64_t d = q_.den();
        std::int64_t n = q_.num();
        if (d == 1)
            return GaussRat(1);
        if (d == 2)
            return GaussRat(-1);
        if (d == 4)
            return n == 1 ? GaussRat::i() : -GaussRat::i();
        throw std::domain_error("phase " + q_.str() +
                                " is not a fourth root of unity; no Q(i) scalar");
    }

    std::string str() const { return q_.str(); }
};

} // namespace oredil
