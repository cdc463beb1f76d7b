#include <doctest.h>

#include <fstream>

#include "mglab/presets.hpp"

using namespace mglab;

TEST_CASE("family specs") {
  CHECK(make_family("z").group.key() == "Z");
  CHECK(make_family("zmod:7").group.key() == "Z/7");
  CHECK(make_family("free:2").group.key() == "F2");
  CHECK(make_family("sanov").group.key() == "SL2(Z)");
  CHECK(make_family("sanovmod:9").group.key() == "SL2(Z/9)");
  CHECK(make_family("slnp:3:3").marking.size() == 3);
  CHECK_THROWS_AS(make_family("wat"), InvalidSpecError);
}

TEST_CASE("ring and group specs") {
  CHECK(make_ring("z").key() == "Z");
  CHECK(make_ring("z2").key() == "Z/2");
  CHECK(make_ring("zmod:9").key() == "Z/9");
  CHECK(make_ring("gf4").key() == "GF4");
  CHECK(make_ring("mat:2:z3").key() == "mat2(Z/3)");
  CHECK(make_finite_group("c5").key() == "Z/5");
  CHECK(make_finite_group("s3").key() == "S3");
  CHECK(make_finite_group("v4").elements()->size() == 4);
}

TEST_CASE("chain specs") {
  Json j = {{"family", "z"}, {"modulus", 2}, {"length", 3}};
  QuotientChain c = load_chain_spec(j);
  CHECK(c.kind == "z");
  CHECK(c.stages.size() == 4);
  j["family"] = "sanov";
  CHECK(load_chain_spec(j).kind == "sanov");
  j["family"] = "other";
  CHECK_THROWS_AS(load_chain_spec(j), InvalidSpecError);
}

TEST_CASE("report payloads carry the advertised fields") {
  ReportOptions opts;

  Json ball = ball_report("free:2", 2, opts);
  CHECK(ball["vertex_count"] == 17);

  Json dist = distance_report("z", "zmod:7", 10, opts);
  CHECK(dist["valuation"] == 6);
  CHECK(dist["distance_lower"] == 0.015625);

  Json env = report_envelope("distance", Json{{"cap", 10}}, opts);
  CHECK(env["artifact"] == "mglab");
  CHECK(env["seed"] == 0);
  CHECK(env.contains("version"));

  Json orders = slnp_orders_report(3, 3, 10, opts);
  CHECK(orders["rows"].size() == 6);  // q in {2,4,5,7,8,10}
  std::string csv = slnp_orders_csv(orders);
  CHECK(csv.rfind("q,o_a,o_x,equal,gcd", 0) == 0);
  CHECK(csv.find("5,5,5,1,1") != std::string::npos);
}

TEST_CASE("timings only appear on request") {
  ReportOptions quiet;
  Json r1 = report_envelope("x", Json::object(), quiet);
  attach_timing(r1, quiet, 1.5);
  CHECK(!r1.contains("timings"));

  ReportOptions loud;
  loud.timings = true;
  Json r2 = report_envelope("x", Json::object(), loud);
  attach_timing(r2, loud, 1.5);
  CHECK(r2.contains("timings"));
}
