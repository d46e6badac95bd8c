#ifndef EBF_COMPOSE_HPP
#define EBF_COMPOSE_HPP

#include <span>
#include <vector>

#include "ebf/triples.hpp"

namespace ebf {

// Product of two normalized triples (a,b,c) x (d,e,f) under the two-squares
// composition law
//   (a^2+b^2)(d^2+e^2) = (ae+db)^2 + (ad-be)^2 = (ae-db)^2 + (ad+be)^2 = (cf)^2.
// Differences are stored as magnitudes; the sign flags record which side was
// larger for audit output.
struct CompositionResult {
    CompositionResult(PythagoreanTriple a, PythagoreanTriple b)
        : t1(std::move(a)), t2(std::move(b)) {}

    PythagoreanTriple t1;
    PythagoreanTriple t2;

    BigNat p_ae, p_db, p_ad, p_be;  // leg products: a,d even legs; b,e odd legs

    BigNat sum_mixed;   // ae + db
    BigNat diff_mixed;  // |ae - db|
    BigNat sum_same;    // ad + be
    BigNat diff_same;   // |ad - be|
    bool mixed_negative = false;  // ae < db
    bool same_negative = false;   // ad < be

    BigNat hyp_product;  // c * f

    // (sum_mixed, diff_same, cf) and (diff_mixed, sum_same, cf)
    std::array<Triangle, 2> derived;
    std::array<bool, 2> derived_degenerate{};

    // (fa, fb, fc) and (cd, ce, cf)
    std::array<Triangle, 2> scaled;
};

inline CompositionResult fibonacci_product(const PythagoreanTriple& t1,
                                           const PythagoreanTriple& t2) {
    const BigNat& a = t1.even_leg();
    const BigNat& b = t1.odd_leg();
    const BigNat& c = t1.hyp();
    const BigNat& d = t2.even_leg();
    const BigNat& e = t2.odd_leg();
    const BigNat& f = t2.hyp();

    CompositionResult r(t1, t2);
    r.p_ae = a * e;
    r.p_db = d * b;
    r.p_ad = a * d;
    r.p_be = b * e;
    r.sum_mixed = r.p_ae + r.p_db;
    r.diff_mixed = abs_diff(r.p_ae, r.p_db);
    r.mixed_negative = r.p_ae < r.p_db;
    r.sum_same = r.p_ad + r.p_be;
    r.diff_same = abs_diff(r.p_ad, r.p_be);
    r.same_negative = r.p_ad < r.p_be;
    r.hyp_product = c * f;

    r.derived[0] = Triangle{r.sum_mixed, r.diff_same, r.hyp_product};
    r.derived[1] = Triangle{r.diff_mixed, r.sum_same, r.hyp_product};
    r.derived_degenerate[0] = r.derived[0].degenerate();
    r.derived_degenerate[1] = r.derived[1].degenerate();

    r.scaled[0] = ::ebf::scale(t1, f);
    r.scaled[1] = ::ebf::scale(t2, c);
    return r;
}

// The two derived plus the two scaled triangles, all with hypotenuse cf.
inline std::vector<Triangle> same_hypotenuse_family(const CompositionResult& r) {
    return {r.derived[0], r.derived[1], r.scaled[0], r.scaled[1]};
}

struct ChainResult {
    BigNat hyp;                        // product of all input hypotenuses
    std::vector<Triangle> triangles;   // distinct non-degenerate, sorted by smaller leg
    std::vector<Triangle> degenerate;  // flagged, not folded further
    size_t branches = 0;               // leaves produced before dedup
};

// Left fold of fibonacci_product, branching on both derived triangles at each
// step. Derived legs always come out one even, one odd, so every branch
// renormalizes cleanly.
inline ChainResult chain_product(std::span<const PythagoreanTriple> ts) {
    if (ts.size() < 2) throw error("chain_product requires at least two triples");

    ChainResult out;
    out.hyp = BigNat(1);
    for (const auto& t : ts) out.hyp = out.hyp * t.hyp();

    std::vector<PythagoreanTriple> frontier{ts[0]};
    for (size_t i = 1; i < ts.size(); ++i) {
        std::vector<PythagoreanTriple> next;
        next.reserve(frontier.size() * 2);
        const bool last = i + 1 == ts.size();
        for (const auto& cur : frontier) {
            CompositionResult r = fibonacci_product(cur, ts[i]);
            for (int k = 0; k < 2; ++k) {
                if (r.derived_degenerate[k]) {
                    if (last) {
                        out.degenerate.push_back(r.derived[k]);
                        ++out.branches;
                    }
                    // a zero-leg branch is just a scaled hypotenuse; nothing to fold
                    continue;
                }
                if (last) {
                    out.triangles.push_back(r.derived[k]);
                    ++out.branches;
                } else {
                    const Triangle& t = r.derived[k];
                    const BigNat& even = t.leg1.is_even() ? t.leg1 : t.leg2;
                    const BigNat& odd = t.leg1.is_even() ? t.leg2 : t.leg1;
                    next.emplace_back(even, odd, t.hyp);
                }
            }
        }
        frontier = std::move(next);
    }

    std::sort(out.triangles.begin(), out.triangles.end(), triangle_less);
    out.triangles.erase(std::unique(out.triangles.begin(), out.triangles.end()),
                        out.triangles.end());
    return out;
}

inline ChainResult chain_product(const std::vector<PythagoreanTriple>& ts) {
    return chain_product(std::span<const PythagoreanTriple>(ts));
}

}  // namespace ebf

#endif
