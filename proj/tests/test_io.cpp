#include <doctest.h>

#include "hhverify/chain.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/generators.hpp"
#include "hhverify/io.hpp"

using namespace hhv;

TEST_CASE("matrix json round-trip is bit exact") {
  for (int k = 0; k < 50; ++k) {
    auto rng = CounterRng::substream(91, "io_mat", static_cast<uint64_t>(k));
    const auto m = gen_complex(rng, 2 + k % 6);
    const auto j = matrix_to_json(m);
    const auto back = matrix_from_json(json::parse(j.dump()));
    CHECK(back.data() == m.data());
  }
}

TEST_CASE("matrix reader rejects malformed payloads") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("{\"n\":2}")), ConfigError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          "{\"n\":2,\"re\":[[1,0]],\"im\":[[0,0],[0,0]]}")),
      ConfigError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          "{\"n\":1,\"re\":[[null]],\"im\":[[0]]}")),
      NotFinite);
  CHECK_THROWS_AS(matrix_from_json(json::parse("{\"n\":0,\"re\":[],\"im\":[]}")),
                  ConfigError);
}

TEST_CASE("pair json round-trip preserves the pair") {
  auto rng = CounterRng::substream(92, "io_pair", 0);
  const auto p = gen_commuting_pair(rng, 4, 0.1, 10.0);
  const auto back = pair_from_json(json::parse(pair_to_json(p).dump()));
  CHECK(back.a == p.a);
  CHECK(back.b == p.b);
  CHECK(back.u.data() == p.u.data());
}

TEST_CASE("verdict serialization carries status, margin, details, witness") {
  Verdict v;
  v.status = Status::Violated;
  v.margin = -0.25;
  v.details["lhs"] = 2.0;
  v.witness = "payload";
  const auto back = verdict_from_json(json::parse(verdict_to_json(v).dump()));
  CHECK(back.status == Status::Violated);
  CHECK(back.margin == v.margin);
  CHECK(back.details.at("lhs") == 2.0);
  CHECK(back.witness == v.witness);

  CHECK(std::string(to_string(Status::Skipped)) == "skipped");
  CHECK(status_from_string("inconclusive") == Status::Inconclusive);
  CHECK_THROWS_AS(status_from_string("bogus"), ConfigError);
}

TEST_CASE("chain report json and csv forms") {
  const auto r = make_chain_report({"left", "middle", "right"},
                                   {1.0, 2.0, 3.0}, LoewnerTolerance{});
  const auto j = chain_report_to_json(r);
  CHECK(j.at("links").size() == 3);
  CHECK(j.at("links")[0].at("name") == "left");
  CHECK(j.at("margins").size() == 2);
  CHECK(j.at("verdict").at("status") == "holds");

  CHECK(chain_report_csv_header(r) == "left,middle,right");
  CHECK(chain_report_csv_row(r) == "1,2,3");
}

TEST_CASE("operator chain report embeds matrices in the shared format") {
  const auto a = HermitianMatrix::identity(2);
  const auto b = scale(HermitianMatrix::identity(2), 2.0);
  const auto r = make_operator_chain_report({"a", "b"}, {a, b}, LoewnerTolerance{});
  const auto j = operator_chain_report_to_json(r);
  CHECK(j.at("links").size() == 2);
  CHECK(j.at("links")[0].at("matrix").at("n") == 2);
  CHECK(j.at("pairwise_verdicts").size() == 1);
  CHECK(j.at("overall").at("status") == "holds");
}

TEST_CASE("trace log chain report serializes both chains") {
  auto rng = CounterRng::substream(93, "io_tracelog", 0);
  const auto p = gen_commuting_pair(rng, 3, 0.1, 10.0);
  const auto r = trace_log_hh_chain(p, QuadratureSpec{});
  const auto j = trace_log_hh_report_to_json(r);
  CHECK(j.at("sqrt_chain").at("links").size() == 3);
  CHECK(j.at("squared_chain").at("links").size() == 3);
  CHECK(j.at("overall").at("status") == "holds");
}

TEST_CASE("chain reports classify their own monotonicity") {
  const auto bad = make_chain_report({"hi", "lo"}, {2.0, 1.0}, LoewnerTolerance{});
  CHECK(bad.verdict.status == Status::Violated);
  CHECK(bad.min_margin() == doctest::Approx(-1.0));
  CHECK_THROWS_AS(make_chain_report({"solo"}, {1.0}, LoewnerTolerance{}),
                  DimensionMismatch);
}
