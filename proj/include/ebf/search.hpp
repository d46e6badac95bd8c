#ifndef EBF_SEARCH_HPP
#define EBF_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ebf/bricks.hpp"

namespace ebf {

// ---------------------------------------------------------------------------
// Deterministic search report. Wall time is informational only and excluded
// from determinism comparisons.
// ---------------------------------------------------------------------------

struct SearchReport {
    std::string predicate;
    std::vector<std::pair<std::string, uint64_t>> bounds;
    std::vector<std::string> hit_fields;
    std::vector<std::vector<uint64_t>> hits;
    std::vector<std::pair<std::string, std::vector<std::vector<uint64_t>>>> sidelists;
    std::vector<std::pair<std::string, uint64_t>> counters;
    uint64_t wall_ms = 0;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    uint64_t elapsed_ms() const {
        return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - start_)
                                         .count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Runs fn(worker) on `jobs` threads. Workers share nothing; each owns the
// items congruent to its index so results merge deterministically after a
// final sort.
template <typename Fn>
void run_workers(unsigned jobs, Fn&& fn) {
    if (jobs <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(fn, w);
    for (auto& t : threads) t.join();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Euler's polynomial formula for boxes with noninteger spatial diagonal:
//   X = n^6 - 15n^4 + 15n^2 - 1,  Y = 6n^5 - 20n^3 + 6n,  Z = 8n^5 - 8n.
// X is negative for small n; magnitudes are taken since edges are lengths.
// ---------------------------------------------------------------------------

struct EulerFormulaResult {
    uint64_t n = 0;
    std::array<BigNat, 3> raw;      // |X|, |Y|, |Z|
    std::array<BigNat, 3> reduced;  // gcd-reduced, ascending
    BigNat scale;
    BrickElements brick;  // built from the reduced edges
    BrickClass cls{BrickKind::Brick, 0};
};

inline EulerFormulaResult euler_formula(uint64_t n) {
    if (n < 2) throw error("euler_formula requires n >= 2");
    const BigNat bn(n);
    const BigNat n2 = sq(bn);
    const BigNat n3 = n2 * bn;
    const BigNat n4 = sq(n2);
    const BigNat n5 = n4 * bn;
    const BigNat n6 = n4 * n2;

    EulerFormulaResult r;
    r.n = n;
    r.raw[0] = abs_diff(n6 + BigNat(15) * n2, BigNat(15) * n4 + BigNat(1));
    r.raw[1] = abs_diff(BigNat(6) * n5 + BigNat(6) * bn, BigNat(20) * n3);
    r.raw[2] = BigNat(8) * n5 - BigNat(8) * bn;

    r.scale = gcd_all({r.raw[0], r.raw[1], r.raw[2]});
    r.reduced = {r.raw[0] / r.scale, r.raw[1] / r.scale, r.raw[2] / r.scale};
    std::sort(r.reduced.begin(), r.reduced.end());
    r.brick = brick_from_edges(r.reduced[0], r.reduced[1], r.reduced[2],
                               "euler-formula(n=" + std::to_string(n) + ")");
    r.cls = classify(r.brick);
    return r;
}

// ---------------------------------------------------------------------------
// The spatial-diagonal parametrization identity: with x1*y1 = x2*y2,
//   (x1^2+y1^2)^2 + (x2^2-y2^2)^2 = (x1^2-y1^2)^2 + (x2^2+y2^2)^2 = g^2.
// ---------------------------------------------------------------------------

struct CuboidParamPoint {
    BigNat x1, y1, x2, y2;
    BigNat g_sq;
    bool g_integer = false;
    bool degenerate = false;  // a squared term vanishes (x1 == y1 or x2 == y2)
};

inline CuboidParamPoint check_param_identity(const BigNat& x1, const BigNat& y1,
                                             const BigNat& x2, const BigNat& y2) {
    if (x1.is_zero() || y1.is_zero() || x2.is_zero() || y2.is_zero())
        throw error("parameters must be >= 1");
    if (x1 * y1 != x2 * y2)
        throw error("identity requires x1*y1 = x2*y2");

    BigNat lhs = sq(sq(x1) + sq(y1)) + sq(abs_diff(sq(x2), sq(y2)));
    BigNat rhs = sq(abs_diff(sq(x1), sq(y1))) + sq(sq(x2) + sq(y2));
    if (lhs != rhs) throw error("identity check failed");  // cannot happen given the precondition

    CuboidParamPoint p{x1, y1, x2, y2, lhs};
    p.g_integer = is_perfect_square(p.g_sq);
    p.degenerate = (x1 == y1) || (x2 == y2);
    return p;
}

// ---------------------------------------------------------------------------
// Perfect-cuboid scan. Edges m < n (both even) and k odd; a perfect cuboid
// has exactly one odd edge and no equal pair, so the pruning loses nothing.
// The unpruned variant scans all x <= y <= z.
// ---------------------------------------------------------------------------

inline SearchReport perfect_cuboid_search(uint64_t edge_bound, unsigned jobs = 1,
                                          bool parity_prune = true) {
    if (edge_bound < 1) throw error("perfect_cuboid_search requires bound >= 1");
    if (edge_bound > 2000000000) throw error("edge bound too large for the 64-bit scan");
    if (jobs < 1) jobs = 1;
    detail::Stopwatch timer;

    struct Slot {
        uint64_t candidates = 0;
        uint64_t rejected_two_plus = 0;
        std::vector<std::vector<uint64_t>> hits;
        std::vector<std::vector<uint64_t>> six_of_seven;
    };
    std::vector<Slot> slots(jobs);

    if (parity_prune) {
        detail::run_workers(jobs, [&](unsigned w) {
            Slot& slot = slots[w];
            for (uint64_t m = 2 + 2 * static_cast<uint64_t>(w); m <= edge_bound; m += 2 * jobs) {
                const uint64_t mm = m * m;
                for (uint64_t n = m + 2; n <= edge_bound; n += 2) {
                    const uint64_t nn = n * n;
                    const bool face_mn = is_square_u64(mm + nn);
                    for (uint64_t k = 1; k <= edge_bound; k += 2) {
                        ++slot.candidates;
                        const uint64_t kk = k * k;
                        int bad = face_mn ? 0 : 1;
                        if (!is_square_u64(mm + kk)) ++bad;
                        if (bad < 2 && !is_square_u64(nn + kk)) ++bad;
                        if (bad < 2 && !is_square_u64(mm + nn + kk)) ++bad;
                        if (bad == 0)
                            slot.hits.push_back({m, n, k});
                        else if (bad == 1)
                            slot.six_of_seven.push_back({m, n, k});
                        else
                            ++slot.rejected_two_plus;
                    }
                }
            }
        });
    } else {
        detail::run_workers(jobs, [&](unsigned w) {
            Slot& slot = slots[w];
            for (uint64_t x = 1 + w; x <= edge_bound; x += jobs) {
                const uint64_t xx = x * x;
                for (uint64_t y = x; y <= edge_bound; ++y) {
                    const uint64_t yy = y * y;
                    const bool face_xy = is_square_u64(xx + yy);
                    for (uint64_t z = y; z <= edge_bound; ++z) {
                        ++slot.candidates;
                        const uint64_t zz = z * z;
                        int bad = face_xy ? 0 : 1;
                        if (!is_square_u64(xx + zz)) ++bad;
                        if (bad < 2 && !is_square_u64(yy + zz)) ++bad;
                        if (bad < 2 && !is_square_u64(xx + yy + zz)) ++bad;
                        if (bad == 0)
                            slot.hits.push_back({x, y, z});
                        else if (bad == 1)
                            slot.six_of_seven.push_back({x, y, z});
                        else
                            ++slot.rejected_two_plus;
                    }
                }
            }
        });
    }

    SearchReport report;
    report.predicate = "perfect-cuboid";
    report.bounds = {{"edge_bound", edge_bound}};
    report.hit_fields = {"m", "n", "k"};
    uint64_t candidates = 0, rejected = 0;
    std::vector<std::vector<uint64_t>> six;
    for (Slot& s : slots) {
        candidates += s.candidates;
        rejected += s.rejected_two_plus;
        report.hits.insert(report.hits.end(), s.hits.begin(), s.hits.end());
        six.insert(six.end(), s.six_of_seven.begin(), s.six_of_seven.end());
    }
    std::sort(report.hits.begin(), report.hits.end());
    std::sort(six.begin(), six.end());
    report.sidelists = {{"six_of_seven", std::move(six)}};
    report.counters = {{"candidates", candidates},
                       {"hits", report.hits.size()},
                       {"six_of_seven", report.sidelists[0].second.size()},
                       {"rejected_two_plus_noninteger", rejected},
                       {"parity_prune", parity_prune ? 1u : 0u}};
    report.wall_ms = timer.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Quartic scan for x^4 + y^4 + z^4 = w^2, annotating each hit coordinate with
// whether it is a product of legs of two distinct Pythagorean triangles. The
// findings are recorded as data; no impossibility claim is encoded.
// ---------------------------------------------------------------------------

namespace detail {

// All right triangles with l as a leg: l^2 = (c-b)(c+b) over same-parity
// divisor pairs. Returned as canonical (minleg, maxleg, hyp).
inline std::set<std::tuple<uint64_t, uint64_t, uint64_t>> triangles_with_leg(uint64_t l) {
    std::set<std::tuple<uint64_t, uint64_t, uint64_t>> out;
    const uint64_t l2 = l * l;
    for (uint64_t d1 = 1; d1 * d1 < l2; ++d1) {
        if (l2 % d1) continue;
        const uint64_t d2 = l2 / d1;
        if ((d2 - d1) % 2) continue;
        const uint64_t b = (d2 - d1) / 2;
        if (b == 0) continue;
        out.insert({std::min(l, b), std::max(l, b), (d2 + d1) / 2});
    }
    return out;
}

}  // namespace detail

// True iff v = l1 * l2 where l1, l2 are legs of two distinct triangles.
inline bool is_leg_product_of_two_triangles(uint64_t v) {
    for (uint64_t l1 = 3; l1 * l1 <= v; ++l1) {
        if (v % l1) continue;
        const uint64_t l2 = v / l1;
        if (l2 < 3) continue;
        auto t1 = detail::triangles_with_leg(l1);
        if (t1.empty()) continue;
        if (l1 == l2) {
            if (t1.size() >= 2) return true;
            continue;
        }
        auto t2 = detail::triangles_with_leg(l2);
        if (t2.empty()) continue;
        if (t1.size() == 1 && t2.size() == 1 && *t1.begin() == *t2.begin()) continue;
        return true;
    }
    return false;
}

inline SearchReport quartic_corollary_search(uint64_t bound, unsigned jobs = 1) {
    if (bound < 1) throw error("quartic_corollary_search requires bound >= 1");
    if (bound > 1000000000) throw error("bound too large for the 128-bit scan");
    if (jobs < 1) jobs = 1;
    detail::Stopwatch timer;

    struct Slot {
        uint64_t candidates = 0;
        std::vector<std::vector<uint64_t>> hits;
    };
    std::vector<Slot> slots(jobs);

    detail::run_workers(jobs, [&](unsigned w) {
        Slot& slot = slots[w];
        for (uint64_t x = 1 + w; x <= bound; x += jobs) {
            const u128 x4 = static_cast<u128>(x) * x * x * x;
            for (uint64_t y = x; y <= bound; ++y) {
                const u128 y4 = static_cast<u128>(y) * y * y * y;
                for (uint64_t z = y; z <= bound; ++z) {
                    ++slot.candidates;
                    const u128 s = x4 + y4 + static_cast<u128>(z) * z * z * z;
                    uint64_t root;
                    if (is_square_u128(s, &root)) {
                        slot.hits.push_back({x, y, z, root,
                                             is_leg_product_of_two_triangles(x) ? 1u : 0u,
                                             is_leg_product_of_two_triangles(y) ? 1u : 0u,
                                             is_leg_product_of_two_triangles(z) ? 1u : 0u});
                    }
                }
            }
        }
    });

    SearchReport report;
    report.predicate = "quartic-sum-square";
    report.bounds = {{"bound", bound}};
    report.hit_fields = {"x", "y", "z", "w", "legprod_x", "legprod_y", "legprod_z"};
    uint64_t candidates = 0;
    for (Slot& s : slots) {
        candidates += s.candidates;
        report.hits.insert(report.hits.end(), s.hits.begin(), s.hits.end());
    }
    std::sort(report.hits.begin(), report.hits.end());
    report.counters = {{"candidates", candidates}, {"hits", report.hits.size()}};
    report.wall_ms = timer.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Composition sweep: every unordered pair of primitive triples up to a
// hypotenuse bound is multiplied; candidate triples and all same-hypotenuse
// pair assemblies become classified bricks, deduplicated canonically.
// ---------------------------------------------------------------------------

struct ComposeSweepResult {
    SearchReport report;
    std::vector<AssembledBrick> bricks;
};

inline ComposeSweepResult compose_sweep(uint64_t limit_hyp, unsigned jobs = 1) {
    if (limit_hyp < 5) throw error("compose_sweep requires a hypotenuse bound >= 5");
    if (jobs < 1) jobs = 1;
    detail::Stopwatch timer;

    const std::vector<PythagoreanTriple> triples = enumerate_primitive(limit_hyp);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < triples.size(); ++i)
        for (size_t j = i; j < triples.size(); ++j) pairs.emplace_back(i, j);

    struct Slot {
        uint64_t candidate_triples = 0;
        uint64_t assemblies = 0;
        std::vector<BrickElements> bricks;
    };
    std::vector<Slot> slots(jobs);

    detail::run_workers(jobs, [&](unsigned w) {
        Slot& slot = slots[w];
        for (size_t idx = w; idx < pairs.size(); idx += jobs) {
            const auto& [i, j] = pairs[idx];
            CompositionResult r = fibonacci_product(triples[i], triples[j]);
            std::string tag = "(" + triples[i].even_leg().to_decimal() + "," +
                              triples[i].odd_leg().to_decimal() + "," +
                              triples[i].hyp().to_decimal() + ")x(" +
                              triples[j].even_leg().to_decimal() + "," +
                              triples[j].odd_leg().to_decimal() + "," +
                              triples[j].hyp().to_decimal() + ")";

            for (const CandidateTriple& cand : candidate_noninteger_diagonal_triples(r)) {
                ++slot.candidate_triples;
                slot.bricks.push_back(brick_from_edge_squares(
                    {sq(cand.raw[0]), sq(cand.raw[1]), sq(cand.raw[2])}, "candidate " + tag));
            }

            const std::vector<Triangle> family = same_hypotenuse_family(r);
            for (size_t s = 0; s < family.size(); ++s) {
                if (family[s].degenerate()) continue;
                for (size_t t = s + 1; t < family.size(); ++t) {
                    if (family[t].degenerate() || family[s] == family[t]) continue;
                    for (AssembledBrick& ab : assemble_from_pair(family[s], family[t])) {
                        ++slot.assemblies;
                        ab.brick.provenance = "assembled " + tag;
                        slot.bricks.push_back(std::move(ab.brick));
                    }
                }
            }
        }
    });

    std::vector<BrickElements> all;
    uint64_t candidate_triples = 0, assemblies = 0;
    for (Slot& s : slots) {
        candidate_triples += s.candidate_triples;
        assemblies += s.assemblies;
        for (BrickElements& b : s.bricks) all.push_back(std::move(b));
    }

    ComposeSweepResult result;
    for (BrickElements& b : dedupe_bricks(all)) {
        BrickClass c = classify(b);
        result.bricks.push_back({std::move(b), c});
    }

    uint64_t n_perfect = 0, n_euler_int = 0, n_euler_nonint = 0, n_brick = 0;
    for (const AssembledBrick& ab : result.bricks) {
        switch (ab.cls.kind) {
            case BrickKind::PerfectCuboid: ++n_perfect; break;
            case BrickKind::EulerBrickIntegerDiagonal: ++n_euler_int; break;
            case BrickKind::EulerBrickNonIntegerDiagonal: ++n_euler_nonint; break;
            case BrickKind::Brick: ++n_brick; break;
        }
    }

    SearchReport& report = result.report;
    report.predicate = "compose-sweep";
    report.bounds = {{"max_hyp", limit_hyp}};
    report.counters = {{"primitive_triples", triples.size()},
                       {"pairs", pairs.size()},
                       {"candidate_triples", candidate_triples},
                       {"assemblies", assemblies},
                       {"bricks_raw", all.size()},
                       {"bricks_deduped", result.bricks.size()},
                       {"perfect_cuboids", n_perfect},
                       {"euler_integer_diagonal", n_euler_int},
                       {"euler_noninteger_diagonal", n_euler_nonint},
                       {"brick_two_plus", n_brick}};
    report.wall_ms = timer.elapsed_ms();
    return result;
}

}  // namespace ebf

#endif
