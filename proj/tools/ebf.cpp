// ebf — exact-arithmetic toolkit for Euler bricks built by multiplying
// Pythagorean triangles. Subcommands cover triple enumeration, two-squares
// representations, the composition product and its chains, brick assembly
// and classification, Euler's polynomial formula, and the bounded searches.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ebf/records.hpp"

using namespace ebf;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::array<BigNat, 3> parse_three(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw error("expected a comma-separated triple: " + s);
    return {BigNat::from_decimal(parts[0]), BigNat::from_decimal(parts[1]),
            BigNat::from_decimal(parts[2])};
}

// "a,b,c" in any order -> normalized triple; the largest entry is the hypotenuse
PythagoreanTriple parse_triple(const std::string& s) {
    auto v = parse_three(s);
    std::sort(v.begin(), v.end());
    PythagoreanTriple t = PythagoreanTriple::from_legs(v[0], v[1]);
    if (t.hyp() != v[2]) throw error("not a Pythagorean triple: " + s);
    return t;
}

Triangle parse_triangle(const std::string& s) {
    auto v = parse_three(s);
    std::sort(v.begin(), v.end());
    Triangle t{v[0], v[1], v[2]};
    if (!t.is_pythagorean()) throw error("not a Pythagorean triple: " + s);
    return t;
}

struct Options {
    std::string format = "human";
    unsigned jobs = 1;
    std::string only;
    std::string out_path;
};

// dedupe + classify + canonical order, shared by multiply and sweep-style output
std::vector<AssembledBrick> canonical_bricks(const std::vector<BrickElements>& raw) {
    std::vector<AssembledBrick> out;
    for (BrickElements& b : dedupe_bricks(raw)) {
        BrickClass c = classify(b);
        out.push_back({std::move(b), c});
    }
    return out;
}

void cmd_triples(RecordWriter& w, uint64_t max_hyp) {
    for (const auto& t : enumerate_primitive(max_hyp)) w.write(triple_record(t));
}

void cmd_reps(RecordWriter& w, const std::string& n_str) {
    BigNat n = BigNat::from_decimal(n_str);
    ordered_json j;
    j["kind"] = "reps";
    j["n"] = n.to_decimal();
    ordered_json reps = ordered_json::array();
    for (const auto& r : two_squares_reps(n))
        reps.push_back(ordered_json::array({r.a.to_decimal(), r.b.to_decimal()}));
    j["count"] = reps.size();
    j["reps"] = std::move(reps);
    j["admissible"] = j["count"] == 1;
    try {
        ordered_json factors = ordered_json::array();
        for (const auto& pp : factorize(n))
            factors.push_back(ordered_json::array({pp.prime.to_decimal(), pp.exponent}));
        j["factors"] = std::move(factors);
    } catch (const unfactored_error&) {
        j["factors"] = "unfactored";
    }
    w.write(j);
}

void cmd_multiply(RecordWriter& w, const std::string& t1_str, const std::string& t2_str) {
    PythagoreanTriple t1 = parse_triple(t1_str);
    PythagoreanTriple t2 = parse_triple(t2_str);
    CompositionResult r = fibonacci_product(t1, t2);
    w.write(composition_record(r));
    if (r.derived_degenerate[0] || r.derived_degenerate[1])
        w.note("note: a derived triangle is degenerate (zero leg), kept flagged");

    std::vector<BrickElements> collected;
    for (const CandidateTriple& cand : candidate_noninteger_diagonal_triples(r))
        collected.push_back(brick_from_edge_squares(
            {sq(cand.raw[0]), sq(cand.raw[1]), sq(cand.raw[2])}, "candidate"));

    const std::vector<Triangle> family = same_hypotenuse_family(r);
    for (size_t s = 0; s < family.size(); ++s) {
        if (family[s].degenerate()) continue;
        for (size_t t = s + 1; t < family.size(); ++t) {
            if (family[t].degenerate() || family[s] == family[t]) continue;
            for (AssembledBrick& ab : assemble_from_pair(family[s], family[t]))
                collected.push_back(std::move(ab.brick));
        }
    }
    for (const AssembledBrick& ab : canonical_bricks(collected))
        w.write(brick_record(ab.brick, ab.cls));
}

void cmd_chain(RecordWriter& w, const std::vector<std::string>& triple_strs) {
    std::vector<PythagoreanTriple> ts;
    for (const auto& s : triple_strs) ts.push_back(parse_triple(s));
    ChainResult chain = chain_product(ts);
    for (const Triangle& t : chain.triangles) {
        const BigNat& even = t.leg1.is_even() ? t.leg1 : t.leg2;
        const BigNat& odd = t.leg1.is_even() ? t.leg2 : t.leg1;
        w.write(triple_record(PythagoreanTriple(even, odd, t.hyp)));
    }
    for (const Triangle& t : chain.degenerate)
        w.note("degenerate: (" + t.leg1.to_decimal() + "," + t.leg2.to_decimal() + "," +
               t.hyp.to_decimal() + ")");
    SearchReport summary;
    summary.predicate = "chain";
    summary.bounds = {{"factors", ts.size()}};
    summary.counters = {{"branches", chain.branches},
                        {"distinct", chain.triangles.size()},
                        {"degenerate", chain.degenerate.size()}};
    w.write(report_record(summary, false));
}

void cmd_bricks_from_pair(RecordWriter& w, const std::string& t1_str, const std::string& t2_str) {
    Triangle t1 = parse_triangle(t1_str);
    Triangle t2 = parse_triangle(t2_str);
    for (const AssembledBrick& ab : assemble_from_pair(t1, t2))
        w.write(brick_record(ab.brick, ab.cls));
}

void cmd_bricks_from_edges(RecordWriter& w, const std::string& edges_str) {
    auto v = parse_three(edges_str);
    BrickElements b = brick_from_edges(v[0], v[1], v[2], "from-edges");
    w.write(brick_record(b, classify(b)));
}

ordered_json euler_formula_record(const EulerFormulaResult& r) {
    ordered_json j;
    j["kind"] = "euler-formula";
    j["n"] = r.n;
    j["raw"] = ordered_json::array(
        {r.raw[0].to_decimal(), r.raw[1].to_decimal(), r.raw[2].to_decimal()});
    j["scale"] = r.scale.to_decimal();
    j["reduced"] = ordered_json::array(
        {r.reduced[0].to_decimal(), r.reduced[1].to_decimal(), r.reduced[2].to_decimal()});
    return j;
}

void cmd_euler_formula(RecordWriter& w, const std::string& nspec) {
    uint64_t lo, hi;
    auto range_pos = nspec.find("..");
    try {
        if (range_pos == std::string::npos) {
            lo = hi = BigNat::from_decimal(nspec).to_u64();
        } else {
            lo = BigNat::from_decimal(nspec.substr(0, range_pos)).to_u64();
            hi = BigNat::from_decimal(nspec.substr(range_pos + 2)).to_u64();
        }
    } catch (const error&) {
        throw error("expected N or LO..HI, got: " + nspec);
    }
    if (lo < 2 || hi < lo) throw error("euler-formula requires 2 <= lo <= hi");
    for (uint64_t n = lo; n <= hi; ++n) {
        EulerFormulaResult r = euler_formula(n);
        w.write(euler_formula_record(r));
        w.write(brick_record(r.brick, r.cls));
    }
}

// ---------------------------------------------------------------------------
// verify-paper: the worked examples as assertions, each carrying its
// provenance tag. Exit 0 only if every check passes.
// ---------------------------------------------------------------------------

struct PaperCheck {
    std::string name;
    std::string tag;
    std::function<void()> run;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

void expect_eq(const BigNat& got, const BigNat& want, const std::string& what) {
    if (got != want)
        throw error(what + ": expected " + want.to_decimal() + ", got " + got.to_decimal());
}

PythagoreanTriple pt(uint64_t even, uint64_t odd, uint64_t hyp) {
    return PythagoreanTriple(BigNat(even), BigNat(odd), BigNat(hyp));
}

std::array<BigNat, 3> sorted3(std::array<BigNat, 3> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::array<BigNat, 3> arr3(uint64_t a, uint64_t b, uint64_t c) {
    return {BigNat(a), BigNat(b), BigNat(c)};
}

std::vector<PaperCheck> paper_checks() {
    std::vector<PaperCheck> checks;
    auto add = [&](std::string name, std::string tag, std::function<void()> fn) {
        checks.push_back({std::move(name), std::move(tag), std::move(fn)});
    };

    // --- 697 family -------------------------------------------------------
    add("697.intsqrt-485809", "672^2+185^2 = 697^2", [] {
        auto r = intsqrt(BigNat(485809));
        expect_eq(r.root, BigNat(697), "intsqrt(485809)");
        expect(r.exact, "485809 must be a perfect square");
    });
    add("697.factorize", "697 = 17 x 41", [] {
        auto f = factorize(BigNat(697));
        expect(f.size() == 2 && f[0].prime == BigNat(17) && f[1].prime == BigNat(41) &&
                   f[0].exponent == 1 && f[1].exponent == 1,
               "697 must factor as 17 x 41");
    });
    add("697.products", "8x9+40x15 = 672", [] {
        auto r = fibonacci_product(pt(8, 15, 17), pt(40, 9, 41));
        expect_eq(r.p_ae, BigNat(72), "ae");
        expect_eq(r.p_db, BigNat(600), "db");
        expect_eq(r.p_ad, BigNat(320), "ad");
        expect_eq(r.p_be, BigNat(135), "be");
        expect_eq(r.sum_mixed, BigNat(672), "ae+db");
        expect_eq(r.diff_mixed, BigNat(528), "|ae-db|");
        expect_eq(r.sum_same, BigNat(455), "ad+be");
        expect_eq(r.diff_same, BigNat(185), "|ad-be|");
        expect(r.mixed_negative, "72-600 is negative; magnitude stored");
    });
    add("697.derived-triangles", "672^2+185^2 = 528^2+455^2 = 697^2", [] {
        auto r = fibonacci_product(pt(8, 15, 17), pt(40, 9, 41));
        expect(r.derived[0] == (Triangle{BigNat(672), BigNat(185), BigNat(697)}),
               "first derived triangle");
        expect(r.derived[1] == (Triangle{BigNat(528), BigNat(455), BigNat(697)}),
               "second derived triangle");
    });
    add("697.scaled-triangles", "(41x8)^2+(41x15)^2 = (41x17)^2", [] {
        auto s1 = scale(pt(8, 15, 17), BigNat(41));
        expect(s1 == (Triangle{BigNat(328), BigNat(615), BigNat(697)}), "41-scaled triangle");
        auto s2 = scale(pt(40, 9, 41), BigNat(17));
        expect(s2 == (Triangle{BigNat(680), BigNat(153), BigNat(697)}), "17-scaled triangle");
    });
    add("697.assemble-104-153-672", "680^2-672^2 = 104^2", [] {
        auto bricks = assemble_from_pair(Triangle{BigNat(672), BigNat(185), BigNat(697)},
                                         Triangle{BigNat(680), BigNat(153), BigNat(697)});
        for (const auto& ab : bricks) {
            if (ab.brick.edge_sq == std::array<BigNat, 3>{BigNat(10816), BigNat(23409),
                                                          BigNat(451584)}) {
                expect(ab.cls.kind == BrickKind::EulerBrickIntegerDiagonal,
                       "104/153/672 must have integer spatial diagonal");
                return;
            }
        }
        throw error("brick 104/153/672 not assembled");
    });
    add("697.brick-104-153-672", "sides 104,153,672; faces 185,680,sqrt(474993); diagonal 697", [] {
        auto b = brick_from_edges(BigNat(104), BigNat(153), BigNat(672));
        expect_eq(b.face_sq[0], BigNat(34225), "185^2");
        expect_eq(b.face_sq[1], BigNat(462400), "680^2");
        expect_eq(b.face_sq[2], BigNat(474993), "nonsquare face");
        expect(!is_perfect_square(b.face_sq[2]), "474993 is not a square");
        expect_eq(b.space_sq, BigNat(485809), "697^2");
        expect(classify(b).kind == BrickKind::EulerBrickIntegerDiagonal, "classification");
    });
    add("697.second-pair-brick", "697^2-455^2-328^2 = 171200, not a square", [] {
        auto bricks = assemble_from_pair(Triangle{BigNat(528), BigNat(455), BigNat(697)},
                                         Triangle{BigNat(328), BigNat(615), BigNat(697)});
        for (const auto& ab : bricks) {
            if (ab.brick.edge_sq == std::array<BigNat, 3>{BigNat(107584), BigNat(171200),
                                                          BigNat(207025)}) {
                expect(ab.cls.kind == BrickKind::Brick && ab.cls.noninteger_count == 2,
                       "two noninteger elements expected");
                return;
            }
        }
        throw error("the 328/455 brick was not assembled");
    });

    // --- 44/117/240 family --------------------------------------------------
    add("classic.from-legs-44-117", "44^2+117^2 = 125^2", [] {
        auto t = PythagoreanTriple::from_legs(BigNat(44), BigNat(117));
        expect_eq(t.hyp(), BigNat(125), "hypotenuse");
    });
    add("classic.reduce-44-240-244", "44^2+240^2 = 4^2 x 61^2", [] {
        auto r = reduce(Triangle{BigNat(44), BigNat(240), BigNat(244)});
        expect_eq(r.scale, BigNat(4), "scale");
        expect_eq(r.primitive.even_leg(), BigNat(60), "even leg");
        expect_eq(r.primitive.odd_leg(), BigNat(11), "odd leg");
        expect_eq(r.primitive.hyp(), BigNat(61), "hypotenuse");
    });
    add("classic.reduce-240-117-267", "117^2+240^2 = 3^2 x 89^2", [] {
        auto r = reduce(Triangle{BigNat(240), BigNat(117), BigNat(267)});
        expect_eq(r.scale, BigNat(3), "scale");
        expect_eq(r.primitive.even_leg(), BigNat(80), "even leg");
        expect_eq(r.primitive.hyp(), BigNat(89), "hypotenuse");
    });
    add("classic.gcd-880-2340-4800", "gcd(880,2340,4800) = 20", [] {
        expect_eq(gcd_all({BigNat(880), BigNat(2340), BigNat(4800)}), BigNat(20), "gcd");
    });
    add("classic.products", "11x80+39x60 = 3220", [] {
        auto r = fibonacci_product(pt(60, 11, 61), pt(80, 39, 89));
        expect_eq(r.p_ae, BigNat(2340), "ae");
        expect_eq(r.p_db, BigNat(880), "db");
        expect_eq(r.p_ad, BigNat(4800), "ad");
        expect_eq(r.p_be, BigNat(429), "be");
        expect_eq(r.sum_mixed, BigNat(3220), "ae+db");
        expect_eq(r.hyp_product, BigNat(5429), "61x89");
    });
    add("classic.candidates", "(2340,880,4800) and (2340,880,429)", [] {
        auto r = fibonacci_product(pt(60, 11, 61), pt(80, 39, 89));
        auto cands = candidate_noninteger_diagonal_triples(r);
        expect(cands.size() == 2, "two candidate triples expected");
        expect(sorted3(cands[0].raw) == arr3(880, 2340, 4800), "first candidate");
        expect_eq(cands[0].scale, BigNat(20), "cancel by 20");
        expect(sorted3(cands[0].reduced) == arr3(44, 117, 240), "reduced candidate");
        expect(sorted3(cands[1].raw) == arr3(429, 880, 2340), "second candidate");
    });
    add("classic.brick-44-117-240", "faces 125,244,267; diagonal sqrt(73225)", [] {
        auto b = brick_from_edges(BigNat(44), BigNat(117), BigNat(240));
        expect_eq(b.face_sq[0], BigNat(15625), "125^2");
        expect_eq(b.face_sq[1], BigNat(59536), "244^2");
        expect_eq(b.face_sq[2], BigNat(71289), "267^2");
        expect(classify(b).kind == BrickKind::EulerBrickNonIntegerDiagonal, "classification");
    });

    // --- 140/480/693 family -------------------------------------------------
    add("140-480-693.first-pair", "(5544,1120,3840)/8 = (693,140,480)", [] {
        auto r = fibonacci_product(pt(160, 231, 281), pt(24, 7, 25));
        auto cands = candidate_noninteger_diagonal_triples(r);
        expect(cands.size() == 2, "two candidates expected");
        expect(sorted3(cands[0].raw) == arr3(1120, 3840, 5544), "raw triple");
        expect_eq(cands[0].scale, BigNat(8), "cancel by 8");
        expect(sorted3(cands[0].reduced) == arr3(140, 480, 693), "reduced triple");
        expect(sorted3(cands[1].raw) == arr3(1120, 1617, 5544), "second raw triple");
    });
    add("140-480-693.second-pair", "(2376,480,693)/3 = (792,160,231)", [] {
        auto r = fibonacci_product(pt(24, 7, 25), pt(20, 99, 101));
        auto cands = candidate_noninteger_diagonal_triples(r);
        expect(cands.size() == 2, "two candidates expected");
        bool found_2376 = false, found_complete = false;
        for (const auto& c : cands) {
            if (sorted3(c.raw) == arr3(480, 693, 2376)) {
                found_2376 = true;
                expect_eq(c.scale, BigNat(3), "cancel by 3");
                expect(sorted3(c.reduced) == arr3(160, 231, 792), "gives 792, 231, 160");
            }
            if (sorted3(c.raw) == arr3(140, 480, 693)) found_complete = true;
        }
        expect(found_2376 && found_complete, "both triples of the second pair");
    });
    add("140-480-693.third-pair", "(4620,15840,3200)/20 = (231,792,160)", [] {
        auto r = fibonacci_product(pt(160, 231, 281), pt(20, 99, 101));
        auto cands = candidate_noninteger_diagonal_triples(r);
        expect(cands.size() == 2, "two candidates expected");
        expect(sorted3(cands[0].raw) == arr3(3200, 4620, 15840), "raw triple");
        expect_eq(cands[0].scale, BigNat(20), "cancel by 20");
        expect(sorted3(cands[0].reduced) == arr3(160, 231, 792), "231, 792, 160");
        expect(sorted3(cands[1].raw) == arr3(4620, 15840, 22869), "and 4620, 15840, 22869");
    });

    // --- Eq. (2): the 1105 chain ---------------------------------------------
    add("1105.chain", "four primitive triangles on 1105 = 5 x 13 x 17", [] {
        std::vector<PythagoreanTriple> ts = {pt(4, 3, 5), pt(12, 5, 13), pt(8, 15, 17)};
        auto chain = chain_product(ts);
        expect_eq(chain.hyp, BigNat(1105), "chain hypotenuse");
        expect(chain.triangles.size() == 4, "exactly four triangles");
        expect(chain.triangles[0] == (Triangle{BigNat(47), BigNat(1104), BigNat(1105)}), "47/1104");
        expect(chain.triangles[1] == (Triangle{BigNat(264), BigNat(1073), BigNat(1105)}),
               "264/1073");
        expect(chain.triangles[2] == (Triangle{BigNat(576), BigNat(943), BigNat(1105)}), "576/943");
        expect(chain.triangles[3] == (Triangle{BigNat(744), BigNat(817), BigNat(1105)}), "744/817");
        for (const auto& t : chain.triangles)
            expect(reduce(t).scale == BigNat(1), "chain triangles have no common divisors");
    });
    add("1105.scaled-triangle", "520^2+975^2 = 1105^2, scaling 8,15,17 by 5 then 13", [] {
        auto t85 = scale(pt(8, 15, 17), BigNat(5));
        expect(t85 == (Triangle{BigNat(40), BigNat(75), BigNat(85)}), "40^2+75^2=85^2");
        auto t1105 = scale(pt(40, 75, 85).is_primitive() ? pt(40, 75, 85) : pt(40, 75, 85),
                           BigNat(13));
        expect(t1105 == (Triangle{BigNat(520), BigNat(975), BigNat(1105)}), "520^2+975^2=1105^2");
    });
    add("1105.brick-448-264-975", "sides 448,264,975; faces 520,1073,sqrt(1020321)",
        [] {
            auto bricks = assemble_from_pair(Triangle{BigNat(1073), BigNat(264), BigNat(1105)},
                                             Triangle{BigNat(520), BigNat(975), BigNat(1105)});
            for (const auto& ab : bricks) {
                if (ab.brick.edge_sq == std::array<BigNat, 3>{BigNat(69696), BigNat(200704),
                                                              BigNat(950625)}) {
                    expect(ab.cls.kind == BrickKind::EulerBrickIntegerDiagonal, "classification");
                    expect(!is_perfect_square(BigNat(1020321)), "third face nonsquare");
                    return;
                }
            }
            throw error("brick 448/264/975 not assembled");
        });
    add("1105.brick-520-576", "sides 520,576,sqrt(618849); faces 776,943,975", [] {
        auto bricks = assemble_from_pair(Triangle{BigNat(943), BigNat(576), BigNat(1105)},
                                         Triangle{BigNat(520), BigNat(975), BigNat(1105)});
        for (const auto& ab : bricks) {
            if (ab.brick.edge_sq == std::array<BigNat, 3>{BigNat(270400), BigNat(331776),
                                                          BigNat(618849)}) {
                expect_eq(ab.brick.face_sq[0], BigNat(602176), "776^2");
                expect_eq(ab.brick.face_sq[1], BigNat(889249), "943^2");
                expect_eq(ab.brick.face_sq[2], BigNat(950625), "975^2");
                expect(!is_perfect_square(BigNat(618849)), "side nonsquare");
                return;
            }
        }
        throw error("brick 520/576 not assembled");
    });

    // --- Euler's formula ------------------------------------------------------
    add("euler-formula.n2", "n=2 -> (44,117,240)", [] {
        auto r = euler_formula(2);
        expect(r.reduced == arr3(44, 117, 240), "n=2 gives 44, 117, 240");
    });
    add("euler-formula.n3", "n=3 -> (352,936,1920)/8 = (44,117,240)", [] {
        auto r = euler_formula(3);
        expect(r.raw == arr3(352, 936, 1920), "raw n=3");
        expect_eq(r.scale, BigNat(8), "cancel by 8");
        expect(r.reduced == arr3(44, 117, 240), "reduces to the n=2 box");
    });
    add("euler-formula.n4", "n=4 -> (495,4888,8160)", [] {
        auto r = euler_formula(4);
        expect(r.reduced == arr3(495, 4888, 8160), "n=4 box");
    });

    // --- 495/4888/8160 composition ---------------------------------------------
    add("n4.triangles", "495,8160,8175 = 15x(33,544,545); 4888,8160,9512 = 8x(611,1020,1189)", [] {
        auto r1 = reduce(Triangle{BigNat(495), BigNat(8160), BigNat(8175)});
        expect_eq(r1.scale, BigNat(15), "scale 15");
        expect(r1.primitive == pt(544, 33, 545), "33/544/545");
        auto r2 = reduce(Triangle{BigNat(4888), BigNat(8160), BigNat(9512)});
        expect_eq(r2.scale, BigNat(8), "scale 8");
        expect(r2.primitive == pt(1020, 611, 1189), "611/1020/1189");
        auto t = PythagoreanTriple::from_legs(BigNat(495), BigNat(4888));
        expect_eq(t.hyp(), BigNat(4913), "495^2+4888^2=4913^2");
    });
    add("n4.gcd-332384-33660-554880", "gcd(332384,33660,554880) = 68", [] {
        expect_eq(gcd_all({BigNat(332384), BigNat(33660), BigNat(554880)}), BigNat(68), "gcd");
    });
    add("n4.candidates", "(332384,33660,554880) and (332384,33660,20163)", [] {
        auto r = fibonacci_product(pt(544, 33, 545), pt(1020, 611, 1189));
        auto cands = candidate_noninteger_diagonal_triples(r);
        expect(cands.size() == 2, "two candidates expected");
        expect(sorted3(cands[0].raw) == arr3(33660, 332384, 554880), "first raw");
        expect_eq(cands[0].scale, BigNat(68), "cancel by 68");
        expect(sorted3(cands[0].reduced) == arr3(495, 4888, 8160), "complete triple");
        expect(sorted3(cands[1].raw) == arr3(20163, 33660, 332384), "second raw");
    });

    // --- composition sweeps reproduce the worked bricks -------------------------
    add("sweep.hyp41-contains-697-brick", "(8,15,17)x(40,9,41) yields the 697 family",
        [] {
            auto sweep = compose_sweep(41);
            for (const auto& ab : sweep.bricks)
                if (ab.brick.edge_sq ==
                    std::array<BigNat, 3>{BigNat(10816), BigNat(23409), BigNat(451584)})
                    return;
            throw error("brick 104/153/672 missing from the sweep");
        });
    add("sweep.hyp89-contains-classic-brick", "(11,60,61)x(39,80,89) yields 44,117,240", [] {
        auto sweep = compose_sweep(89);
        for (const auto& ab : sweep.bricks)
            if (ab.brick.edge_sq ==
                std::array<BigNat, 3>{BigNat(1936), BigNat(13689), BigNat(57600)})
                return;
        throw error("brick 44/117/240 missing from the sweep");
    });
    add("misc.dedupe-distinct-bricks", "44,117,240 and 140,480,693 are distinct boxes", [] {
        auto a = brick_from_edges(BigNat(44), BigNat(117), BigNat(240));
        auto b = brick_from_edges(BigNat(140), BigNat(480), BigNat(693));
        expect(dedupe_bricks({a, b}).size() == 2, "44/117/240 and 140/480/693 are distinct");
    });

    return checks;
}

int cmd_verify_paper(std::ostream& out, const std::string& only) {
    int passed = 0, failed = 0, skipped = 0;
    for (const PaperCheck& check : paper_checks()) {
        if (!only.empty() && check.name.find(only) == std::string::npos) {
            ++skipped;
            continue;
        }
        try {
            check.run();
            out << "[PASS] " << check.name << "  (" << check.tag << ")\n";
            ++passed;
        } catch (const std::exception& e) {
            out << "[FAIL] " << check.name << "  (" << check.tag << "): " << e.what() << "\n";
            ++failed;
        }
    }
    out << "verify-paper: " << passed << " passed, " << failed << " failed";
    if (skipped) out << ", " << skipped << " filtered out";
    out << "\n";
    if (passed + failed == 0) {
        out << "no checks matched filter '" << only << "'\n";
        return 2;
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Euler bricks via triangle multiplication"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "output format: human, json-lines, csv")
        ->default_val("human");
    app.add_option("--jobs", opts.jobs, "worker threads for searches")->default_val(1);
    app.add_option("--only", opts.only, "filter verify-paper checks by substring");
    app.add_option("--out", opts.out_path, "write records to a file instead of stdout");

    auto* sc_triples = app.add_subcommand("triples", "enumerate primitive triples");
    uint64_t max_hyp = 0;
    sc_triples->add_option("--max-hyp", max_hyp, "largest hypotenuse")->required();

    auto* sc_reps = app.add_subcommand("reps", "sum-of-two-squares representations");
    std::string reps_n;
    sc_reps->add_option("n", reps_n, "the number to represent")->required();

    auto* sc_multiply = app.add_subcommand("multiply", "compose two Pythagorean triples");
    std::string mul_t1, mul_t2;
    sc_multiply->add_option("t1", mul_t1, "first triple a,b,c")->required();
    sc_multiply->add_option("t2", mul_t2, "second triple d,e,f")->required();

    auto* sc_chain = app.add_subcommand("chain", "compose three or more triples");
    std::vector<std::string> chain_ts;
    sc_chain->add_option("triples", chain_ts, "triples a,b,c ...")->expected(2, -1);

    auto* sc_bricks = app.add_subcommand("bricks", "assemble and classify bricks");
    sc_bricks->require_subcommand(1);
    auto* sc_from_pair = sc_bricks->add_subcommand("from-pair", "from two same-hypotenuse triangles");
    std::string pair_t1, pair_t2;
    sc_from_pair->add_option("t1", pair_t1, "first triangle a,b,c")->required();
    sc_from_pair->add_option("t2", pair_t2, "second triangle d,e,f")->required();
    auto* sc_from_edges = sc_bricks->add_subcommand("from-edges", "from three integer edges");
    std::string edges_str;
    sc_from_edges->add_option("edges", edges_str, "edges x,y,z")->required();

    auto* sc_euler = app.add_subcommand("euler-formula", "Euler's polynomial boxes");
    std::string euler_nspec;
    sc_euler->add_option("n", euler_nspec, "n or lo..hi, n >= 2")->required();

    auto* sc_search = app.add_subcommand("search", "bounded exhaustive searches");
    sc_search->require_subcommand(1);
    auto* sc_compose = sc_search->add_subcommand("compose", "sweep all triple pairs");
    uint64_t sweep_hyp = 0;
    sc_compose->add_option("--max-hyp", sweep_hyp, "hypotenuse bound")->required();
    auto* sc_cuboid = sc_search->add_subcommand("cuboid", "perfect cuboid scan");
    uint64_t cuboid_bound = 0;
    bool all_parities = false;
    sc_cuboid->add_option("--bound", cuboid_bound, "edge bound")->required();
    sc_cuboid->add_flag("--all-parities", all_parities, "disable the even/even/odd pruning");
    auto* sc_quartic = sc_search->add_subcommand("quartic", "x^4+y^4+z^4 = w^2 scan");
    uint64_t quartic_bound = 0;
    sc_quartic->add_option("--bound", quartic_bound, "coordinate bound")->required();

    auto* sc_verify = app.add_subcommand("verify-paper", "assert every worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!opts.out_path.empty()) {
        out_file.open(opts.out_path);
        if (!out_file) {
            std::cerr << "error: cannot open " << opts.out_path << "\n";
            return 2;
        }
        out = &out_file;
    }

    try {
        RecordWriter writer(*out, parse_format(opts.format));
        if (sc_triples->parsed()) {
            if (max_hyp < 5) throw error("--max-hyp must be at least 5");
            cmd_triples(writer, max_hyp);
        } else if (sc_reps->parsed()) {
            cmd_reps(writer, reps_n);
        } else if (sc_multiply->parsed()) {
            cmd_multiply(writer, mul_t1, mul_t2);
        } else if (sc_chain->parsed()) {
            cmd_chain(writer, chain_ts);
        } else if (sc_from_pair->parsed()) {
            cmd_bricks_from_pair(writer, pair_t1, pair_t2);
        } else if (sc_from_edges->parsed()) {
            cmd_bricks_from_edges(writer, edges_str);
        } else if (sc_euler->parsed()) {
            cmd_euler_formula(writer, euler_nspec);
        } else if (sc_compose->parsed()) {
            ComposeSweepResult sweep = compose_sweep(sweep_hyp, opts.jobs);
            for (const AssembledBrick& ab : sweep.bricks)
                writer.write(brick_record(ab.brick, ab.cls));
            writer.write(report_record(sweep.report));
        } else if (sc_cuboid->parsed()) {
            writer.write(
                report_record(perfect_cuboid_search(cuboid_bound, opts.jobs, !all_parities)));
        } else if (sc_quartic->parsed()) {
            writer.write(report_record(quartic_corollary_search(quartic_bound, opts.jobs)));
        } else if (sc_verify->parsed()) {
            return cmd_verify_paper(*out, opts.only);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
