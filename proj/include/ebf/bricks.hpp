#ifndef EBF_BRICKS_HPP
#define EBF_BRICKS_HPP

#include <array>
#include <string>
#include <vector>

#include "ebf/compose.hpp"

namespace ebf {

// The seven elements of a box with edges x <= y <= z, kept as exact squares.
// Flag order: x, y, z, dxy, dxz, dyz, g.
struct BrickElements {
    std::array<BigNat, 3> edge_sq;
    std::array<BigNat, 3> face_sq;
    BigNat space_sq;
    std::array<bool, 7> integer_flags{};
    std::string provenance;

    int noninteger_count() const {
        int k = 0;
        for (bool f : integer_flags) k += f ? 0 : 1;
        return k;
    }
};

enum class BrickKind {
    PerfectCuboid,
    EulerBrickIntegerDiagonal,
    EulerBrickNonIntegerDiagonal,
    Brick,  // two or more noninteger elements
};

struct BrickClass {
    BrickKind kind;
    int noninteger_count;

    std::string to_string() const {
        switch (kind) {
            case BrickKind::PerfectCuboid: return "PerfectCuboid";
            case BrickKind::EulerBrickIntegerDiagonal: return "EulerBrickIntegerDiagonal";
            case BrickKind::EulerBrickNonIntegerDiagonal: return "EulerBrickNonIntegerDiagonal";
            case BrickKind::Brick: return "Brick(" + std::to_string(noninteger_count) + ")";
        }
        return "?";
    }

    friend bool operator==(const BrickClass&, const BrickClass&) = default;
};

inline BrickClass classify(const BrickElements& b) {
    int k = b.noninteger_count();
    if (k == 0) return {BrickKind::PerfectCuboid, 0};
    if (k == 1)
        return b.integer_flags[6] ? BrickClass{BrickKind::EulerBrickIntegerDiagonal, 1}
                                  : BrickClass{BrickKind::EulerBrickNonIntegerDiagonal, 1};
    return {BrickKind::Brick, k};
}

inline BrickElements brick_from_edge_squares(std::array<BigNat, 3> edge_sq,
                                             std::string provenance = {}) {
    for (const BigNat& e : edge_sq)
        if (e.is_zero()) throw error("degenerate box: zero edge");
    std::sort(edge_sq.begin(), edge_sq.end());
    BrickElements b;
    b.edge_sq = std::move(edge_sq);
    b.face_sq = {b.edge_sq[0] + b.edge_sq[1], b.edge_sq[0] + b.edge_sq[2],
                 b.edge_sq[1] + b.edge_sq[2]};
    b.space_sq = b.edge_sq[0] + b.edge_sq[1] + b.edge_sq[2];
    for (int i = 0; i < 3; ++i) b.integer_flags[i] = is_perfect_square(b.edge_sq[i]);
    for (int i = 0; i < 3; ++i) b.integer_flags[3 + i] = is_perfect_square(b.face_sq[i]);
    b.integer_flags[6] = is_perfect_square(b.space_sq);
    b.provenance = std::move(provenance);
    return b;
}

inline BrickElements brick_from_edges(const BigNat& x, const BigNat& y, const BigNat& z,
                                      std::string provenance = {}) {
    if (x.is_zero() || y.is_zero() || z.is_zero()) throw error("degenerate box: zero edge");
    return brick_from_edge_squares({sq(x), sq(y), sq(z)}, std::move(provenance));
}

// One candidate edge triple with noninteger spatial diagonal, raw and reduced.
struct CandidateTriple {
    std::array<BigNat, 3> raw;
    std::array<BigNat, 3> reduced;
    BigNat scale;  // raw = scale * reduced
};

namespace detail {

inline CandidateTriple make_candidate(const BigNat& a, const BigNat& b, const BigNat& c) {
    CandidateTriple t;
    t.raw = {a, b, c};
    t.scale = gcd_all({a, b, c});
    t.reduced = {a / t.scale, b / t.scale, c / t.scale};
    return t;
}

}  // namespace detail

// The candidate rule: of the four leg products ae, db, ad, be, if ae^2+db^2
// is a perfect square the triples (ae,db,ad) and (ae,db,be) are emitted; if
// ad^2+be^2 is a perfect square, (ad,be,ae) and (ad,be,db). Two of the face
// diagonals of each candidate are integers automatically; the square
// condition supplies the third, so exactly the spatial diagonal is left.
inline std::vector<CandidateTriple> candidate_noninteger_diagonal_triples(
    const CompositionResult& r) {
    std::vector<CandidateTriple> out;
    if (is_perfect_square(sq(r.p_ae) + sq(r.p_db))) {
        out.push_back(detail::make_candidate(r.p_ae, r.p_db, r.p_ad));
        out.push_back(detail::make_candidate(r.p_ae, r.p_db, r.p_be));
    }
    if (is_perfect_square(sq(r.p_ad) + sq(r.p_be))) {
        out.push_back(detail::make_candidate(r.p_ad, r.p_be, r.p_ae));
        out.push_back(detail::make_candidate(r.p_ad, r.p_be, r.p_db));
    }
    return out;
}

struct AssembledBrick {
    BrickElements brick;
    BrickClass cls;
};

// Two triangles sharing a hypotenuse g pin five of a box's seven elements:
// edges e1, e2 and diagonals g, fd1, fd2. The remaining edge square is
// g^2 - e1^2 - e2^2; all four (e1, e2) leg assignments are tried.
inline std::vector<AssembledBrick> assemble_from_pair(const Triangle& t1, const Triangle& t2) {
    if (t1.hyp != t2.hyp) throw error("assemble_from_pair: hypotenuses differ");
    if (t1 == t2) throw error("assemble_from_pair: triangles must differ as leg sets");
    const BigNat g_sq = sq(t1.hyp);

    std::vector<AssembledBrick> out;
    for (const BigNat* e1 : {&t1.leg1, &t1.leg2}) {
        for (const BigNat* e2 : {&t2.leg1, &t2.leg2}) {
            if (e1->is_zero() || e2->is_zero()) continue;
            BigNat used = sq(*e1) + sq(*e2);
            if (used >= g_sq) continue;  // non-positive third edge square
            BigNat third_sq = g_sq - used;

            // The same square via either face diagonal; fd^2 = g^2 - e^2.
            const BigNat& fd1 = (e1 == &t1.leg1) ? t1.leg2 : t1.leg1;
            const BigNat& fd2 = (e2 == &t2.leg1) ? t2.leg2 : t2.leg1;
            if (sq(fd1) - sq(*e2) != third_sq || sq(fd2) - sq(*e1) != third_sq)
                throw error("assemble_from_pair: cross-check identity failed");

            std::string prov = "pair(" + e1->to_decimal() + "," + e2->to_decimal() + ")@" +
                               t1.hyp.to_decimal();
            BrickElements b = brick_from_edge_squares({sq(*e1), sq(*e2), third_sq}, prov);
            BrickClass c = classify(b);
            out.push_back({std::move(b), c});
        }
    }
    return out;
}

// Canonical form: sort edge squares, then divide out the largest square
// dividing their gcd. Integer-edge boxes reduce exactly by the gcd of the
// edges; square factors never change integrality flags.
inline std::array<BigNat, 3> canonical_edge_squares(const std::array<BigNat, 3>& edge_sq) {
    std::array<BigNat, 3> out = edge_sq;
    std::sort(out.begin(), out.end());
    BigNat g = gcd_all({out[0], out[1], out[2]});
    BigNat s = square_part(g);
    if (s > BigNat(1)) {
        BigNat s2 = sq(s);
        for (BigNat& e : out) e = e / s2;
    }
    return out;
}

inline std::vector<BrickElements> dedupe_bricks(const std::vector<BrickElements>& bricks) {
    std::vector<std::pair<std::array<BigNat, 3>, std::string>> canon;
    canon.reserve(bricks.size());
    for (const BrickElements& b : bricks)
        canon.emplace_back(canonical_edge_squares(b.edge_sq), b.provenance);
    // full ordering including provenance, so the kept representative does not
    // depend on input order (e.g. on the worker count of a parallel sweep)
    std::sort(canon.begin(), canon.end());
    std::vector<BrickElements> out;
    for (auto& [key, prov] : canon) {
        if (!out.empty() && out.back().edge_sq == key) continue;
        out.push_back(brick_from_edge_squares(key, prov));
    }
    return out;
}

}  // namespace ebf

#endif
