#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grcm/classify.hpp"
#include "grcm/cmmod.hpp"
#include "grcm/combinat.hpp"
#include "grcm/error.hpp"
#include "grcm/matrix.hpp"
#include "grcm/oracle.hpp"
#include "grcm/series.hpp"

namespace grcm::io {

using nlohmann::json;

// Every reader reports malformed input as Error(InvalidInput) naming the
// offending field, never as a raw json exception.
namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw Error(Errc::InvalidInput, std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw Error(Errc::InvalidInput, std::string("missing field '") + key + "'");
    return *it;
}

inline int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(Errc::InvalidInput, std::string(what) + " must be an integer");
    return j.get<int>();
}

inline const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Errc::InvalidInput, std::string(what) + " must be an array");
    return j;
}

} // namespace detail

// ---- series ---------------------------------------------------------------

/// Coefficients as "p/q" strings, constant term first, trailing zeros dropped
/// ("0" alone for the zero series).
inline json to_json(const Series& s) {
    json a = json::array();
    const int top = s.is_zero() ? 0 : s.degree();
    for (int d = 0; d <= top; ++d) a.push_back(format_rational(s[d]));
    return a;
}

/// Accepts strings or integers; shorter arrays are padded with zeros.
inline Series series_from_json(const json& j, int order) {
    detail::as_array(j, "series");
    if (static_cast<int>(j.size()) > order)
        throw Error(Errc::InvalidInput, "series has " + std::to_string(j.size()) + " coefficients, truncation is " +
                                            std::to_string(order));
    Series s = Series::zero(order);
    for (std::size_t d = 0; d < j.size(); ++d) {
        const json& c = j[d];
        if (c.is_string())
            s[static_cast<int>(d)] = parse_rational(c.get<std::string>());
        else if (c.is_number_integer())
            s[static_cast<int>(d)] = Rational(c.get<long>());
        else
            throw Error(Errc::InvalidInput, "series coefficient must be a \"p/q\" string or an integer");
    }
    return s;
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, int order) {
    detail::as_array(j, "matrix");
    if (j.empty() || !j[0].is_array() || j[0].empty()) throw Error(Errc::InvalidInput, "matrix must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size()), cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols, order);
    for (int i = 0; i < rows; ++i) {
        detail::as_array(j[i], "matrix row");
        if (static_cast<int>(j[i].size()) != cols) throw Error(Errc::InvalidInput, "ragged matrix");
        for (int k = 0; k < cols; ++k) m(i, k) = series_from_json(j[i][k], order);
    }
    return m;
}

inline json to_json(const std::vector<Matrix>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(to_json(m));
    return a;
}

inline std::vector<Matrix> matrices_from_json(const json& j, int order) {
    std::vector<Matrix> out;
    for (const auto& m : detail::as_array(j, "matrix list")) out.push_back(matrix_from_json(m, order));
    return out;
}

// ---- rims and specs ----------------------------------------------------------

inline json to_json(const Rim& r) { return {{"n", r.n()}, {"members", r.members()}}; }

inline Rim rim_from_json(const json& j) {
    const int n = detail::as_int(detail::field(j, "n"), "n");
    std::vector<int> members;
    for (const auto& m : detail::as_array(detail::field(j, "members"), "members")) members.push_back(detail::as_int(m, "rim member"));
    return Rim(n, std::move(members));
}

inline json to_json(const RankTwoSpec& s) {
    json b = json::array();
    for (const auto& x : s.b) b.push_back(to_json(x));
    return {{"I", to_json(s.I)}, {"J", to_json(s.J)}, {"b", b}, {"truncation", s.truncation}};
}

/// `fallback_order` applies when the document has no "truncation" field.
/// The result is validated before it is returned.
inline RankTwoSpec spec_from_json(const json& j, int fallback_order = default_truncation) {
    RankTwoSpec s;
    s.I = rim_from_json(detail::field(j, "I"));
    s.J = rim_from_json(detail::field(j, "J"));
    s.truncation = j.is_object() && j.contains("truncation") ? detail::as_int(j["truncation"], "truncation") : fallback_order;
    if (s.truncation < 2) throw Error(Errc::InvalidInput, "truncation must be at least 2");
    for (const auto& x : detail::as_array(detail::field(j, "b"), "b")) s.b.push_back(series_from_json(x, s.truncation));
    validate(s);
    return s;
}

inline json to_json(const QuiverRep& M) {
    json xs = json::array(), ys = json::array();
    for (int i = 1; i <= M.n(); ++i) {
        xs.push_back(to_json(M.x(i)));
        ys.push_back(to_json(M.y(i)));
    }
    return {{"n", M.n()}, {"k", M.k()}, {"rank", M.rank()}, {"truncation", M.order()}, {"x", xs}, {"y", ys}};
}

inline QuiverRep rep_from_json(const json& j) {
    const int n = detail::as_int(detail::field(j, "n"), "n");
    const int k = detail::as_int(detail::field(j, "k"), "k");
    const int rank = detail::as_int(detail::field(j, "rank"), "rank");
    const int order = detail::as_int(detail::field(j, "truncation"), "truncation");
    QuiverRep M(n, k, rank, order);
    const auto xs = matrices_from_json(detail::field(j, "x"), order);
    const auto ys = matrices_from_json(detail::field(j, "y"), order);
    if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
        throw Error(Errc::InvalidInput, "expected one x and one y matrix per edge");
    for (int i = 1; i <= n; ++i) {
        M.set_x(i, xs[static_cast<std::size_t>(i - 1)]);
        M.set_y(i, ys[static_cast<std::size_t>(i - 1)]);
    }
    return M;
}

// ---- reports -------------------------------------------------------------------

inline json to_json(const InterlacingReport& r) {
    return {{"r", r.r}, {"tight", r.tight}, {"i_positions", r.i_positions}, {"j_positions", r.j_positions}};
}

inline InterlacingReport interlacing_from_json(const json& j) {
    InterlacingReport r;
    r.r = detail::as_int(detail::field(j, "r"), "r");
    const json& t = detail::field(j, "tight");
    if (!t.is_boolean()) throw Error(Errc::InvalidInput, "tight must be a boolean");
    r.tight = t.get<bool>();
    r.i_positions = detail::field(j, "i_positions").get<std::vector<int>>();
    r.j_positions = detail::field(j, "j_positions").get<std::vector<int>>();
    return r;
}

inline json pair_json(const std::optional<std::pair<int, int>>& p) {
    return p ? json::array({p->first, p->second}) : json(nullptr);
}

inline std::optional<std::pair<int, int>> pair_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidInput, "failing_pair must be null or [s, s']");
    return std::make_pair(detail::as_int(j[0], "failing_pair"), detail::as_int(j[1], "failing_pair"));
}

/// Verdict, nondivisible pair indices and the failing pair (if any).
inline json classification_json(const PairPattern& pat, const IndecomposabilityReport& rep) {
    json sums = json::array();
    for (const auto& p : pat.pair_sums) sums.push_back(to_json(p));
    return {{"verdict", rep.indecomposable ? "indecomposable" : "split"},
            {"S", rep.S},
            {"failing_pair", pair_json(rep.failing_pair)},
            {"pair_sums", sums}};
}

inline json to_json(const SplitWitness& w) {
    return {{"phi", to_json(w.phi)}, {"w", to_json(w.w)}, {"v", to_json(w.v)}};
}

/// phi_tilde is not serialised; it is rebuilt as Id - phi.
inline SplitWitness witness_from_json(const json& j, int order) {
    SplitWitness w;
    w.phi = matrices_from_json(detail::field(j, "phi"), order);
    w.w = matrices_from_json(detail::field(j, "w"), order);
    w.v = matrices_from_json(detail::field(j, "v"), order);
    for (const auto& p : w.phi) w.phi_tilde.push_back(Matrix::identity(p.rows(), order) - p);
    return w;
}

inline json to_json(const DecompositionResult& r, bool with_witness, int order) {
    if (r.indecomposable)
        return {{"verdict", "indecomposable"}, {"S", r.S}, {"failing_pair", pair_json(r.failing_pair)}};
    json out = {{"verdict", "split"}, {"X", to_json(*r.X)}, {"Y", to_json(*r.Y)}, {"S", r.S}};
    if (r.peaks) {
        out["r"] = r.peaks->r();
        out["peaks"] = r.peaks->members();
    }
    if (with_witness && r.witness) {
        out["witness"] = to_json(*r.witness);
        out["truncation"] = order;
    }
    return out;
}

inline DecompositionResult decomposition_from_json(const json& j) {
    DecompositionResult r;
    const json& v = detail::field(j, "verdict");
    if (!v.is_string()) throw Error(Errc::InvalidInput, "verdict must be a string");
    r.S = detail::field(j, "S").get<std::vector<int>>();
    if (v == "indecomposable") {
        r.indecomposable = true;
        r.failing_pair = pair_from_json(detail::field(j, "failing_pair"));
        return r;
    }
    if (v != "split") throw Error(Errc::InvalidInput, "verdict must be 'split' or 'indecomposable'");
    r.X = rim_from_json(detail::field(j, "X"));
    r.Y = rim_from_json(detail::field(j, "Y"));
    if (j.contains("peaks")) {
        const int rr = detail::as_int(detail::field(j, "r"), "r");
        r.peaks = PeakSubset::from_peaks(rr, j["peaks"].get<std::vector<int>>());
    }
    if (j.contains("witness"))
        r.witness = witness_from_json(j["witness"], detail::as_int(detail::field(j, "truncation"), "truncation"));
    return r;
}

inline json to_json(const DecomposableEntry& e) {
    json b = json::array();
    for (const auto& x : e.b) b.push_back(to_json(x));
    std::vector<int> div;
    for (bool d : e.divisible) div.push_back(d ? 1 : 0);
    return {{"peaks", e.peaks.members()}, {"divisible", div}, {"b", b}, {"X", to_json(e.X)}, {"Y", to_json(e.Y)}};
}

inline DecomposableEntry entry_from_json(const json& j, int r, int order) {
    DecomposableEntry e;
    e.peaks = PeakSubset::from_peaks(r, detail::field(j, "peaks").get<std::vector<int>>());
    for (int d : detail::field(j, "divisible").get<std::vector<int>>()) e.divisible.push_back(d != 0);
    for (const auto& x : detail::as_array(detail::field(j, "b"), "b")) e.b.push_back(series_from_json(x, order));
    e.X = rim_from_json(detail::field(j, "X"));
    e.Y = rim_from_json(detail::field(j, "Y"));
    return e;
}

inline json error_json(const Error& e) {
    json err = {{"code", e.code_name()}, {"message", e.what()}};
    if (const auto* cv = dynamic_cast<const ConditionsViolated*>(&e)) err["index"] = cv->index();
    return {{"error", err}};
}

/// Parses a JSON document, turning syntax errors into Error(InvalidInput).
inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

} // namespace grcm::io
