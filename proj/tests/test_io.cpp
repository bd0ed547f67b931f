#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "grcm/io.hpp"
#include "support.hpp"

using namespace grcm;
using grcm::io::json;

namespace {

constexpr int N = 16;

RankTwoSpec worked() {
    const Series one = Series::one(N), t = Series::t(N), z = Series::zero(N);
    return {Rim(8, {1, 3, 5, 7}), Rim(8, {2, 4, 6, 8}), {one, z, t, z, -one, z, -t, z}, N};
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::InvariantViolation;
}

TEST(SeriesJson, Format) {
    Series s = Series::zero(N);
    s[0] = Rational(1, 2);
    s[2] = -3;
    EXPECT_EQ(io::to_json(s), json::parse(R"(["1/2", "0", "-3"])"));
    EXPECT_EQ(io::to_json(Series::zero(N)), json::parse(R"(["0"])"));
}

TEST(SeriesJson, RoundTripRandom) {
    std::mt19937 rng(4);
    for (int rep = 0; rep < 50; ++rep) {
        const Series s = gen::random_series(rng, N, static_cast<int>(rng() % N));
        EXPECT_EQ(io::series_from_json(io::to_json(s), N), s);
        EXPECT_EQ(io::series_from_json(json::parse(io::to_json(s).dump()), N), s);
    }
}

TEST(SeriesJson, AcceptsIntegersAndPads) {
    EXPECT_EQ(io::series_from_json(json::parse("[1, \"-2/4\"]"), 4), Series(4, {1, Rational(-1, 2)}));
    EXPECT_EQ(code_of([] { io::series_from_json(json::parse("[1, 2, 3]"), 2); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::series_from_json(json::parse("[1.5]"), 4); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::series_from_json(json::parse("\"1\""), 4); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::series_from_json(json::parse("[\"1/0\"]"), 4); }), Errc::InvalidInput);
}

TEST(MatrixJson, RoundTrip) {
    const Matrix m = Matrix::of(Series::one(N), Series::t(N), Series::zero(N), -Series::t(N));
    EXPECT_EQ(io::matrix_from_json(io::to_json(m), N), m);
    const std::vector<Matrix> ms{m, Matrix::identity(2, N)};
    EXPECT_EQ(io::matrices_from_json(io::to_json(ms), N), ms);
    EXPECT_EQ(code_of([] { io::matrix_from_json(json::parse("[[[1]], [[1], [2]]]"), 4); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::matrix_from_json(json::parse("[]"), 4); }), Errc::InvalidInput);
}

TEST(RimJson, RoundTripAndValidation) {
    const Rim r(9, {2, 5, 7});
    EXPECT_EQ(io::to_json(r), json::parse(R"({"n": 9, "members": [2, 5, 7]})"));
    EXPECT_EQ(io::rim_from_json(io::to_json(r)), r);
    EXPECT_EQ(code_of([] { io::rim_from_json(json::parse(R"({"n": 4, "members": [5]})")); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::rim_from_json(json::parse(R"({"members": [1]})")); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::rim_from_json(json::parse(R"({"n": "4", "members": [1]})")); }), Errc::InvalidInput);
}

TEST(SpecJson, RoundTrip) {
    const RankTwoSpec s = worked();
    EXPECT_EQ(io::spec_from_json(io::to_json(s)), s);
    json j = io::to_json(s);
    j.erase("truncation");
    EXPECT_EQ(io::spec_from_json(j, 20).truncation, 20);
}

TEST(SpecJson, MatchesSampleFile) {
    std::ifstream in(std::string(GRCM_SAMPLES) + "/worked_4_8.json");
    ASSERT_TRUE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(io::spec_from_json(io::parse(ss.str())), worked());
}

TEST(SpecJson, RejectsBadSpecs) {
    json j = io::to_json(worked());
    j["b"][0] = json::parse(R"(["2"])");
    EXPECT_EQ(code_of([&] { io::spec_from_json(j); }), Errc::BadParameters);

    json short_b = io::to_json(worked());
    short_b["b"].erase(short_b["b"].begin());
    EXPECT_EQ(code_of([&] { io::spec_from_json(short_b); }), Errc::BadParameters);

    json loose = io::to_json(worked());
    loose["J"] = io::to_json(Rim(8, {1, 2, 3, 4}));
    EXPECT_EQ(code_of([&] { io::spec_from_json(loose); }), Errc::NotTight);

    json tiny = io::to_json(worked());
    tiny["truncation"] = 1;
    EXPECT_EQ(code_of([&] { io::spec_from_json(tiny); }), Errc::InvalidInput);
    EXPECT_EQ(code_of([] { io::spec_from_json(json::parse("[]")); }), Errc::InvalidInput);
}

TEST(RepJson, RoundTrip) {
    const QuiverRep M = build_rank2(worked());
    EXPECT_EQ(io::rep_from_json(io::to_json(M)), M);
    const QuiverRep L = build_rank1(Rim(5, {2, 3}), 6);
    EXPECT_EQ(io::rep_from_json(io::to_json(L)), L);
    json broken = io::to_json(L);
    broken["x"].erase(broken["x"].begin());
    EXPECT_EQ(code_of([&] { io::rep_from_json(broken); }), Errc::InvalidInput);
}

TEST(InterlacingJson, RoundTrip) {
    const auto rep = interlacing(Rim(7, {1, 4, 5}), Rim(7, {2, 4, 6}));
    EXPECT_EQ(io::interlacing_from_json(io::to_json(rep)), rep);
    EXPECT_EQ(io::to_json(rep)["r"], 2);
}

TEST(ClassificationJson, Fields) {
    const Series one = Series::one(N), z = Series::zero(N);
    const RankTwoSpec s{Rim(6, {1, 3, 5}), Rim(6, {2, 4, 6}), {one, z, -one - one, z, one, z}, N};
    const auto pat = pair_pattern(s);
    const json j = io::classification_json(pat, indecomposability(pat));
    EXPECT_EQ(j["verdict"], "indecomposable");
    EXPECT_EQ(j["S"], json::parse("[0, 1, 2]"));
    EXPECT_EQ(j["failing_pair"], json::parse("[0, 1]"));
    EXPECT_EQ(j["pair_sums"][1], json::parse(R"(["-2"])"));
    EXPECT_EQ(io::pair_from_json(j["failing_pair"]), std::make_optional(std::make_pair(0, 1)));
    EXPECT_EQ(io::pair_from_json(json(nullptr)), std::nullopt);
    EXPECT_EQ(code_of([] { io::pair_from_json(json::parse("[1]")); }), Errc::InvalidInput);
}

TEST(DecompositionJson, SplitRoundTripWithWitness) {
    const RankTwoSpec s = worked();
    const auto res = decompose(s);
    const json j = io::to_json(res, true, N);
    EXPECT_EQ(j["verdict"], "split");
    EXPECT_EQ(j["r"], 4);
    EXPECT_EQ(j["peaks"], json::parse("[0, 6]"));
    const auto back = io::decomposition_from_json(json::parse(j.dump()));
    EXPECT_FALSE(back.indecomposable);
    EXPECT_EQ(back.X, res.X);
    EXPECT_EQ(back.Y, res.Y);
    EXPECT_EQ(back.peaks, res.peaks);
    ASSERT_TRUE(back.witness.has_value());
    EXPECT_EQ(back.witness->phi, res.witness->phi);
    EXPECT_EQ(back.witness->phi_tilde, res.witness->phi_tilde);
    EXPECT_EQ(back.witness->w, res.witness->w);
    EXPECT_EQ(back.witness->v, res.witness->v);
    EXPECT_TRUE(verify_witness(build_rank2(s), *back.X, *back.Y, *back.witness).ok());
}

TEST(DecompositionJson, WitnessOmittedByDefault) {
    const json j = io::to_json(decompose(worked()), false, N);
    EXPECT_FALSE(j.contains("witness"));
    EXPECT_FALSE(j.contains("truncation"));
}

TEST(DecompositionJson, IndecomposableRoundTrip) {
    const Series one = Series::one(N), z = Series::zero(N);
    const auto res = decompose({Rim(6, {1, 3, 5}), Rim(6, {2, 4, 6}), {one, z, -one - one, z, one, z}, N});
    const json j = io::to_json(res, true, N);
    EXPECT_EQ(j["verdict"], "indecomposable");
    EXPECT_FALSE(j.contains("X"));
    const auto back = io::decomposition_from_json(j);
    EXPECT_TRUE(back.indecomposable);
    EXPECT_EQ(back.S, res.S);
    EXPECT_EQ(back.failing_pair, res.failing_pair);
}

TEST(DecompositionJson, Rejects) {
    EXPECT_EQ(code_of([] { io::decomposition_from_json(json::parse(R"({"verdict": "maybe", "S": []})")); }),
              Errc::InvalidInput);
    json j = io::to_json(decompose(worked()), false, N);
    j.erase("r");
    EXPECT_EQ(code_of([&] { io::decomposition_from_json(j); }), Errc::InvalidInput);
}

TEST(EntryJson, RoundTrip) {
    const auto entries = enumerate_decomposables(Rim(8, {1, 3, 5, 7}), Rim(8, {2, 4, 6, 8}), N);
    for (const auto& e : entries) {
        const auto back = io::entry_from_json(io::to_json(e), 4, N);
        EXPECT_EQ(back.peaks, e.peaks);
        EXPECT_EQ(back.divisible, e.divisible);
        EXPECT_EQ(back.b, e.b);
        EXPECT_EQ(back.X, e.X);
        EXPECT_EQ(back.Y, e.Y);
    }
}

TEST(ErrorJson, Shape) {
    const json j = io::error_json(Error(Errc::NotTight, "nope"));
    EXPECT_EQ(j, json::parse(R"({"error": {"code": "NotTight", "message": "nope"}})"));
    EXPECT_EQ(io::error_json(ConditionsViolated(2, "x"))["error"]["index"], 2);
}

TEST(Parse, MalformedIsInvalidInput) {
    EXPECT_EQ(code_of([] { io::parse("{\"n\": "); }), Errc::InvalidInput);
    EXPECT_EQ(io::parse("{\"a\": 1}")["a"], 1);
}

} // namespace
