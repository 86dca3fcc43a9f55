#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace test;

TEST(Serialize, TextFormat) {
	auto ctx = context(2, 0, 2, 4);
	Series f = poly(ctx, {{q(1), {}}, {q(-2), {{"x1", 2}, {"m1", 1}}}, {q(1, 2), {{"x1", 1}, {"x2", 1}}}});
	EXPECT_EQ(series_to_text(f), "1 - 2*x1^2*m1 + 1/2*x1*x2");
	EXPECT_EQ(series_to_text(Series(ctx)), "0");
	EXPECT_EQ(series_to_text(-gen(ctx, "x2")), "-x2");
}

TEST(Serialize, JsonRoundTrip) {
	auto ctx = context(2, 1, 2, 4, true, false, {"s"});
	Series f = poly(ctx, {{q(3, 7), {{"x1", 1}, {"s", 2}, {"t", 1}}},
						  {Rational("123456789012345678901234567890"), {{"b1", 1}, {"m2", 3}}}})
				   .truncated(4);
	Json j = series_to_json(f);
	EXPECT_EQ(j["context"]["A"], 2);
	EXPECT_EQ(j["context"]["D"], 4);
	Series back = series_from_json(Json::parse(j.dump()));
	EXPECT_EQ(back, f);
	EXPECT_EQ(back.bound(), 4);
	EXPECT_EQ(series_to_json(back), j);
	EXPECT_EQ(series_from_json(j, ctx), f);
}

TEST(Serialize, ContextMismatchIsRejected) {
	auto a = context(2, 0, 2, 4);
	auto b = context(2, 0, 3, 4);
	Json j = series_to_json(gen(a, "x1", 4));
	EXPECT_THROW(series_from_json(j, b), InvalidInput);
}

TEST(Serialize, MalformedInputIsRejected) {
	auto ctx = context(1, 0, 0, 3);
	EXPECT_THROW(series_from_json(Json::parse(R"({"x": 1})"), ctx), InvalidInput);
	EXPECT_THROW(series_from_json(Json::parse(R"({"terms": [{"exps": {"y9": 1}, "num": "1"}]})"), ctx), InvalidInput);
	EXPECT_THROW(series_from_json(Json::parse(R"({"terms": [{"exps": {"x1": 1}, "num": "1", "den": "0"}]})"), ctx),
				 InvalidInput);
	EXPECT_THROW(series_from_json(Json::parse(R"({"terms": [{"exps": {"x1": 5}, "num": "1"}]})"), ctx),
				 InvalidInput);
	EXPECT_THROW(read_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST(Serialize, WindowRoundTrip) {
	auto ctx = context(2, 0, 2, 3);
	FormalGroupLaw F(ctx, FglMode::universal);
	LaurentWindow w = segre_series(F, 2, -2, 3);
	Json j = window_to_json(w);
	EXPECT_EQ(j["k_min"], -2);
	EXPECT_EQ(window_from_json(Json::parse(j.dump())), w);
}

TEST(Serialize, Assignments) {
	auto ctx = context(1, 1, 2, 3, true);
	auto a = assignment_from_json(Json::parse(R"({"b1": "1/2", "t": -1})"), ctx);
	EXPECT_EQ(a.at(ctx->b(0)), Series::constant(ctx, q(1, 2), kExactBound));
	EXPECT_EQ(a.at(ctx->t()), num(ctx, -1));
	EXPECT_THROW(assignment_from_json(Json::parse(R"({"z": 1})"), ctx), InvalidInput);
	auto c = log_coefficients_from_json(Json::parse(R"({"m1": "1/2", "3": -1})"));
	EXPECT_EQ(c.at(1), q(1, 2));
	EXPECT_EQ(c.at(3), q(-1));
	EXPECT_THROW(log_coefficients_from_json(Json::parse(R"({"m0": 1})")), InvalidInput);
}

TEST(Serialize, ComputedSeriesRoundTrip) {
	auto ctx = context(3, 4, 2, 4);
	FormalGroupLaw F(ctx, FglMode::universal);
	Partition lam({2, 1}, 3);
	Series s = new_universal_schur(F, lam, Params::generators(ctx, required_b(lam)));
	EXPECT_EQ(series_from_json(Json::parse(series_to_json(s).dump())), s);
}
