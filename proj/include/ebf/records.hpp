#ifndef EBF_RECORDS_HPP
#define EBF_RECORDS_HPP

#include <ostream>
#include <string>

#include "json.hpp"

#include "ebf/search.hpp"

namespace ebf {

using ordered_json = nlohmann::ordered_json;

// All arbitrary-precision values are serialized as decimal strings; 64-bit
// search data stays numeric. Key order is fixed so json-lines output is
// byte-stable.

inline std::string sqrt_display(const BigNat& square) {
    BigNat root;
    if (is_perfect_square(square, &root)) return root.to_decimal();
    return "sqrt(" + square.to_decimal() + ")";
}

// One-decimal truncated approximation of sqrt(square), for human output.
inline std::string sqrt_approx_1dp(const BigNat& square) {
    BigNat tenths = intsqrt(square * BigNat(100)).root;
    return (tenths / BigNat(10)).to_decimal() + "." + (tenths % BigNat(10)).to_decimal();
}

inline ordered_json triangle_value(const Triangle& t) {
    return ordered_json::array({t.leg1.to_decimal(), t.leg2.to_decimal(), t.hyp.to_decimal()});
}

inline ordered_json triple_record(const PythagoreanTriple& t) {
    ordered_json j;
    j["kind"] = "triple";
    j["even_leg"] = t.even_leg().to_decimal();
    j["odd_leg"] = t.odd_leg().to_decimal();
    j["hyp"] = t.hyp().to_decimal();
    j["primitive"] = t.is_primitive();
    return j;
}

inline ordered_json candidate_value(const CandidateTriple& c) {
    ordered_json j;
    j["raw"] = ordered_json::array(
        {c.raw[0].to_decimal(), c.raw[1].to_decimal(), c.raw[2].to_decimal()});
    j["scale"] = c.scale.to_decimal();
    j["reduced"] = ordered_json::array(
        {c.reduced[0].to_decimal(), c.reduced[1].to_decimal(), c.reduced[2].to_decimal()});
    return j;
}

inline ordered_json composition_record(const CompositionResult& r) {
    ordered_json j;
    j["kind"] = "composition";
    j["t1"] = triangle_value(r.t1.as_triangle());
    j["t2"] = triangle_value(r.t2.as_triangle());
    j["products"] = {{"ae", r.p_ae.to_decimal()},
                     {"db", r.p_db.to_decimal()},
                     {"ad", r.p_ad.to_decimal()},
                     {"be", r.p_be.to_decimal()}};
    j["combined"] = {{"sum_mixed", r.sum_mixed.to_decimal()},
                     {"diff_mixed", r.diff_mixed.to_decimal()},
                     {"sum_same", r.sum_same.to_decimal()},
                     {"diff_same", r.diff_same.to_decimal()}};
    j["signs"] = {{"mixed_negative", r.mixed_negative}, {"same_negative", r.same_negative}};
    j["hyp_product"] = r.hyp_product.to_decimal();
    j["derived"] = ordered_json::array({triangle_value(r.derived[0]), triangle_value(r.derived[1])});
    j["derived_degenerate"] =
        ordered_json::array({r.derived_degenerate[0], r.derived_degenerate[1]});
    j["scaled"] = ordered_json::array({triangle_value(r.scaled[0]), triangle_value(r.scaled[1])});
    j["hyp_admissible"] = ordered_json::array(
        {is_admissible_hypotenuse(r.t1.hyp()), is_admissible_hypotenuse(r.t2.hyp())});
    // the working assumptions are reported, never enforced
    j["inputs_coprime"] =
        gcd(gcd(gcd(r.t1.even_leg(), r.t1.odd_leg()), r.t1.hyp()),
            gcd(gcd(r.t2.even_leg(), r.t2.odd_leg()), r.t2.hyp())) == BigNat(1);
    ordered_json cands = ordered_json::array();
    for (const CandidateTriple& c : candidate_noninteger_diagonal_triples(r))
        cands.push_back(candidate_value(c));
    j["candidates"] = std::move(cands);
    return j;
}

inline ordered_json brick_record(const BrickElements& b, const BrickClass& cls) {
    ordered_json j;
    j["kind"] = "brick";
    ordered_json edges = ordered_json::array();
    for (const BigNat& e : b.edge_sq) edges.push_back(sqrt_display(e));
    j["edges"] = std::move(edges);
    j["edge_squares"] = ordered_json::array({b.edge_sq[0].to_decimal(), b.edge_sq[1].to_decimal(),
                                             b.edge_sq[2].to_decimal()});
    j["face_diagonal_squares"] = ordered_json::array(
        {b.face_sq[0].to_decimal(), b.face_sq[1].to_decimal(), b.face_sq[2].to_decimal()});
    j["space_diagonal_square"] = b.space_sq.to_decimal();
    ordered_json flags = ordered_json::array();
    for (bool f : b.integer_flags) flags.push_back(f);
    j["integer_flags"] = std::move(flags);
    j["class"] = cls.to_string();
    j["provenance"] = b.provenance;
    return j;
}

inline ordered_json report_record(const SearchReport& r, bool include_wall = true) {
    ordered_json j;
    j["kind"] = "report";
    j["predicate"] = r.predicate;
    ordered_json bounds = ordered_json::object();
    for (const auto& [k, v] : r.bounds) bounds[k] = v;
    j["bounds"] = std::move(bounds);
    j["hit_fields"] = r.hit_fields;
    j["hits"] = r.hits;
    ordered_json sides = ordered_json::object();
    for (const auto& [k, v] : r.sidelists) sides[k] = v;
    j["sidelists"] = std::move(sides);
    ordered_json counters = ordered_json::object();
    for (const auto& [k, v] : r.counters) counters[k] = v;
    j["counters"] = std::move(counters);
    if (include_wall) j["wall_ms"] = r.wall_ms;
    return j;
}

// ---------------------------------------------------------------------------
// Writer: json-lines, csv, or human text. CSV rows carry the same data as the
// json-lines records; non-scalar cells hold compact JSON.
// ---------------------------------------------------------------------------

enum class OutputFormat { Human, JsonLines, Csv };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "human") return OutputFormat::Human;
    if (s == "json-lines") return OutputFormat::JsonLines;
    if (s == "csv") return OutputFormat::Csv;
    throw error("unknown format: " + s);
}

class RecordWriter {
public:
    RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

    void write(const ordered_json& record) {
        switch (format_) {
            case OutputFormat::JsonLines:
                out_ << record.dump() << '\n';
                break;
            case OutputFormat::Csv:
                write_csv(record);
                break;
            case OutputFormat::Human:
                write_human(record);
                break;
        }
    }

    // Free-form human text; ignored by the machine formats.
    void note(const std::string& line) {
        if (format_ == OutputFormat::Human) out_ << line << '\n';
    }

private:
    static std::string csv_escape(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        q += "\"";
        return q;
    }

    static std::string cell(const ordered_json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    void write_csv(const ordered_json& record) {
        std::vector<std::string> keys;
        for (auto it = record.begin(); it != record.end(); ++it) keys.push_back(it.key());
        if (keys != csv_header_) {
            csv_header_ = keys;
            for (size_t i = 0; i < keys.size(); ++i)
                out_ << (i ? "," : "") << csv_escape(keys[i]);
            out_ << '\n';
        }
        size_t i = 0;
        for (auto it = record.begin(); it != record.end(); ++it, ++i)
            out_ << (i ? "," : "") << csv_escape(cell(it.value()));
        out_ << '\n';
    }

    void write_human(const ordered_json& record) {
        const std::string kind = record.value("kind", "");
        if (kind == "triple") {
            out_ << "triple (" << record["even_leg"].get<std::string>() << ","
                 << record["odd_leg"].get<std::string>() << ","
                 << record["hyp"].get<std::string>() << ")"
                 << (record["primitive"].get<bool>() ? " primitive" : "") << '\n';
        } else if (kind == "composition") {
            auto tri = [](const ordered_json& t) {
                return "(" + t[0].get<std::string>() + "," + t[1].get<std::string>() + "," +
                       t[2].get<std::string>() + ")";
            };
            out_ << "composition " << tri(record["t1"]) << " x " << tri(record["t2"]) << '\n';
            const auto& p = record["products"];
            out_ << "  leg products: ae=" << p["ae"].get<std::string>()
                 << " db=" << p["db"].get<std::string>() << " ad=" << p["ad"].get<std::string>()
                 << " be=" << p["be"].get<std::string>() << '\n';
            const auto& c = record["combined"];
            out_ << "  combined: ae+db=" << c["sum_mixed"].get<std::string>()
                 << " |ae-db|=" << c["diff_mixed"].get<std::string>()
                 << " ad+be=" << c["sum_same"].get<std::string>()
                 << " |ad-be|=" << c["diff_same"].get<std::string>() << '\n';
            out_ << "  hypotenuse product: " << record["hyp_product"].get<std::string>() << '\n';
            out_ << "  derived: " << tri(record["derived"][0]) << " " << tri(record["derived"][1])
                 << "  scaled: " << tri(record["scaled"][0]) << " " << tri(record["scaled"][1])
                 << '\n';
            for (const auto& cand : record["candidates"]) {
                out_ << "  candidate triple raw (" << cand["raw"][0].get<std::string>() << ","
                     << cand["raw"][1].get<std::string>() << ","
                     << cand["raw"][2].get<std::string>() << ") / "
                     << cand["scale"].get<std::string>() << " = ("
                     << cand["reduced"][0].get<std::string>() << ","
                     << cand["reduced"][1].get<std::string>() << ","
                     << cand["reduced"][2].get<std::string>() << ")\n";
            }
        } else if (kind == "brick") {
            out_ << "brick [";
            const auto& edges = record["edges"];
            const auto& esq = record["edge_squares"];
            for (size_t i = 0; i < edges.size(); ++i) {
                std::string e = edges[i].get<std::string>();
                out_ << (i ? " " : "") << e;
                if (e.rfind("sqrt(", 0) == 0)
                    out_ << "~" << sqrt_approx_1dp(BigNat::from_decimal(esq[i].get<std::string>()));
            }
            out_ << "] class " << record["class"].get<std::string>();
            out_ << " faces [";
            const auto& fsq = record["face_diagonal_squares"];
            for (size_t i = 0; i < fsq.size(); ++i) {
                BigNat f = BigNat::from_decimal(fsq[i].get<std::string>());
                std::string d = sqrt_display(f);
                out_ << (i ? " " : "") << d;
                if (d.rfind("sqrt(", 0) == 0) out_ << "~" << sqrt_approx_1dp(f);
            }
            BigNat g = BigNat::from_decimal(record["space_diagonal_square"].get<std::string>());
            std::string gd = sqrt_display(g);
            out_ << "] space " << gd;
            if (gd.rfind("sqrt(", 0) == 0) out_ << "~" << sqrt_approx_1dp(g);
            if (!record["provenance"].get<std::string>().empty())
                out_ << "  [" << record["provenance"].get<std::string>() << "]";
            out_ << '\n';
        } else if (kind == "report") {
            out_ << "report " << record["predicate"].get<std::string>() << " bounds ";
            for (const auto& [k, v] : record["bounds"].items()) out_ << k << "=" << v << " ";
            out_ << '\n';
            if (!record["hits"].empty()) {
                out_ << "  hit fields: ";
                for (const auto& f : record["hit_fields"]) out_ << f.get<std::string>() << " ";
                out_ << '\n';
                for (const auto& h : record["hits"]) {
                    out_ << "  hit:";
                    for (const auto& v : h) out_ << " " << v;
                    out_ << '\n';
                }
            }
            for (const auto& [name, rows] : record["sidelists"].items()) {
                out_ << "  " << name << ": " << rows.size() << " entries\n";
                for (const auto& h : rows) {
                    out_ << "    ";
                    for (const auto& v : h) out_ << v << " ";
                    out_ << '\n';
                }
            }
            out_ << "  counters:";
            for (const auto& [k, v] : record["counters"].items()) out_ << " " << k << "=" << v;
            out_ << '\n';
            if (record.contains("wall_ms")) out_ << "  wall_ms: " << record["wall_ms"] << '\n';
        } else if (kind == "euler-formula") {
            out_ << "euler-formula n=" << record["n"] << ": raw ("
                 << record["raw"][0].get<std::string>() << ","
                 << record["raw"][1].get<std::string>() << ","
                 << record["raw"][2].get<std::string>() << ") / "
                 << record["scale"].get<std::string>() << " -> ("
                 << record["reduced"][0].get<std::string>() << ","
                 << record["reduced"][1].get<std::string>() << ","
                 << record["reduced"][2].get<std::string>() << ")\n";
        } else if (kind == "reps") {
            out_ << record["n"].get<std::string>();
            if (record["reps"].empty()) {
                out_ << ": no sum of two positive squares";
            } else {
                for (const auto& r : record["reps"])
                    out_ << " = " << r[0].get<std::string>() << "^2+" << r[1].get<std::string>()
                         << "^2";
            }
            out_ << (record["admissible"].get<bool>() ? "  [admissible hypotenuse]" : "");
            if (record["factors"].is_array()) {
                out_ << "  factors:";
                for (const auto& f : record["factors"]) {
                    out_ << " " << f[0].get<std::string>();
                    if (f[1].get<unsigned>() > 1) out_ << "^" << f[1];
                }
            }
            out_ << '\n';
        } else {
            out_ << record.dump() << '\n';
        }
    }

    std::ostream& out_;
    OutputFormat format_;
    std::vector<std::string> csv_header_;
};

}  // namespace ebf

#endif
