#ifndef EBF_TRIPLES_HPP
#define EBF_TRIPLES_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ebf/exactmath.hpp"

namespace ebf {

// Raw integer right triangle, legs in no particular parity order. May be
// degenerate (one zero leg). Composition and brick assembly trade in these.
struct Triangle {
    BigNat leg1;
    BigNat leg2;
    BigNat hyp;

    bool degenerate() const { return leg1.is_zero() || leg2.is_zero(); }

    bool is_pythagorean() const { return sq(leg1) + sq(leg2) == sq(hyp); }

    // Leg-sorted key for dedup and ordering.
    std::array<BigNat, 3> sorted() const {
        if (leg1 <= leg2) return {leg1, leg2, hyp};
        return {leg2, leg1, hyp};
    }

    friend bool operator==(const Triangle& a, const Triangle& b) {
        return a.sorted() == b.sorted();
    }
};

inline bool triangle_less(const Triangle& a, const Triangle& b) {
    return a.sorted() < b.sorted();
}

// Generators (x, y) of the classical parametrization (2xy, x^2-y^2, x^2+y^2).
struct GeneratorPair {
    BigNat x;
    BigNat y;

    GeneratorPair(BigNat x_, BigNat y_) : x(std::move(x_)), y(std::move(y_)) {
        if (y.is_zero() || x <= y) throw error("generator pair requires x > y >= 1");
    }
};

// Pythagorean triple normalized by parity: the even leg is stored first and
// the other leg is odd. Every leg-product formula downstream indexes legs by
// this parity role.
class PythagoreanTriple {
public:
    PythagoreanTriple(BigNat even_leg, BigNat odd_leg, BigNat hyp)
        : even_leg_(std::move(even_leg)), odd_leg_(std::move(odd_leg)), hyp_(std::move(hyp)) {
        if (even_leg_.is_zero() || odd_leg_.is_zero())
            throw error("degenerate triple: zero leg");
        if (!even_leg_.is_even() || !odd_leg_.is_odd())
            throw error("triple legs must be one even, one odd");
        if (sq(even_leg_) + sq(odd_leg_) != sq(hyp_))
            throw error("not a Pythagorean triple");
    }

    static PythagoreanTriple from_generators(const GeneratorPair& g) {
        BigNat even = BigNat(2) * g.x * g.y;
        BigNat odd = sq(g.x) - sq(g.y);
        BigNat hyp = sq(g.x) + sq(g.y);
        if (odd.is_even())
            throw error("generators of equal parity do not yield a normalizable triple");
        return PythagoreanTriple(std::move(even), std::move(odd), std::move(hyp));
    }

    static PythagoreanTriple from_legs(const BigNat& p, const BigNat& q) {
        BigNat hyp;
        if (!is_perfect_square(sq(p) + sq(q), &hyp))
            throw error("not a Pythagorean pair: " + p.to_decimal() + "," + q.to_decimal());
        if (p.is_even() == q.is_even())
            throw error("legs of equal parity cannot be normalized; reduce the triple first");
        return p.is_even() ? PythagoreanTriple(p, q, std::move(hyp))
                           : PythagoreanTriple(q, p, std::move(hyp));
    }

    const BigNat& even_leg() const { return even_leg_; }
    const BigNat& odd_leg() const { return odd_leg_; }
    const BigNat& hyp() const { return hyp_; }

    Triangle as_triangle() const { return {even_leg_, odd_leg_, hyp_}; }

    bool is_primitive() const {
        return gcd(gcd(even_leg_, odd_leg_), hyp_) == BigNat(1);
    }

    friend bool operator==(const PythagoreanTriple& a, const PythagoreanTriple& b) {
        return a.even_leg_ == b.even_leg_ && a.odd_leg_ == b.odd_leg_ && a.hyp_ == b.hyp_;
    }

private:
    BigNat even_leg_;
    BigNat odd_leg_;
    BigNat hyp_;
};

// Unnormalized escape hatch for legs of equal parity.
inline Triangle triangle_from_legs(const BigNat& p, const BigNat& q) {
    BigNat hyp;
    if (!is_perfect_square(sq(p) + sq(q), &hyp))
        throw error("not a Pythagorean pair: " + p.to_decimal() + "," + q.to_decimal());
    return {p, q, std::move(hyp)};
}

struct ReducedTriple {
    PythagoreanTriple primitive;
    BigNat scale;  // original = scale * primitive
};

inline ReducedTriple reduce(const Triangle& t) {
    if (!t.is_pythagorean()) throw error("reduce: not a Pythagorean triangle");
    if (t.degenerate()) throw error("reduce: degenerate triangle");
    BigNat k = gcd(gcd(t.leg1, t.leg2), t.hyp);
    BigNat a = t.leg1 / k, b = t.leg2 / k, c = t.hyp / k;
    if (a.is_even() == b.is_even())
        throw error("reduce: primitive part has legs of equal parity");
    PythagoreanTriple prim = a.is_even() ? PythagoreanTriple(a, b, std::move(c))
                                         : PythagoreanTriple(b, a, std::move(c));
    return {std::move(prim), std::move(k)};
}

inline ReducedTriple reduce(const PythagoreanTriple& t) { return reduce(t.as_triangle()); }

inline Triangle scale(const PythagoreanTriple& t, const BigNat& k) {
    if (k.is_zero()) throw error("scale factor must be >= 1");
    return {t.even_leg() * k, t.odd_leg() * k, t.hyp() * k};
}

// All primitive triples with hypotenuse <= limit, ascending by hypotenuse and
// then by even leg. Generator pairs with gcd 1 and opposite parity cover
// every primitive triple exactly once.
inline std::vector<PythagoreanTriple> enumerate_primitive(uint64_t limit_hyp) {
    std::vector<PythagoreanTriple> out;
    if (limit_hyp < 5) return out;
    for (uint64_t x = 2; x * x + 1 <= limit_hyp; ++x) {
        for (uint64_t y = 1 + (x % 2); y < x; y += 2) {
            if (x * x + y * y > limit_hyp) break;
            if (std::gcd(x, y) != 1) continue;
            out.emplace_back(BigNat(2 * x * y), BigNat(x * x - y * y), BigNat(x * x + y * y));
        }
    }
    std::sort(out.begin(), out.end(), [](const PythagoreanTriple& a, const PythagoreanTriple& b) {
        if (a.hyp() != b.hyp()) return a.hyp() < b.hyp();
        return a.even_leg() < b.even_leg();
    });
    return out;
}

}  // namespace ebf

#endif
