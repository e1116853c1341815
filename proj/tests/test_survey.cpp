// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/survey.hpp"

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "padicert/error.hpp"

using namespace padicert;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  out.close();
  return p.string();
}

}  // namespace

TEST_CASE("ingest accepts valid rows and collects screen failures") {
  std::string path = write_temp("padicert_ingest.jsonl",
                                "{\"n\":0,\"x\":\"3\",\"y\":\"5\"}\n"
                                "{\"n\":1,\"x\":\"-1\",\"y\":\"2\"}\n"
                                "\n"
                                "{\"n\":0,\"x\":\"0\",\"y\":\"0\"}\n"
                                "{\"n\":0,\"x\":\"129/100\",\"y\":\"-383/"
                                "1000\"}\n");
  IngestResult r = ingest_generators(path);
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].n == 0);
  CHECK(r.records[0].x == 3);
  CHECK(r.records[0].source == GeneratorSource::Dataset);
  CHECK(r.records[1].x == -1);
  CHECK(r.records[2].x == mpq_class(129, 100));
  CHECK(r.records[2].y == mpq_class(-383, 1000));
  REQUIRE(r.rejected.size() == 1);
  CHECK(r.rejected[0].line == 4);
  CHECK(r.rejected[0].message.find("NotOnCurve") != std::string::npos);
}

TEST_CASE("ingest raises BadDataset on structural damage") {
  auto expect_bad = [](const std::string& name, const std::string& body) {
    std::string path = write_temp(name, body);
    try {
      ingest_generators(path);
      FAIL("expected BadDataset for ", body);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadDataset);
    }
  };
  expect_bad("padicert_bad1.jsonl", "not json\n");
  expect_bad("padicert_bad2.jsonl", "{\"n\":\"0\",\"x\":\"3\",\"y\":\"5\"}\n");
  expect_bad("padicert_bad3.jsonl", "{\"n\":0,\"x\":\"3\"}\n");
  expect_bad("padicert_bad4.jsonl", "{\"n\":0,\"x\":\"3/0\",\"y\":\"5\"}\n");
  expect_bad("padicert_bad5.jsonl", "{\"n\":0,\"x\":\"abc\",\"y\":\"5\"}\n");
  try {
    ingest_generators("/nonexistent/padicert.jsonl");
    FAIL("expected BadDataset for a missing file");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadDataset);
  }
}

TEST_CASE("naive search enumerates deterministically") {
  auto r0 = naive_point_search(0, 3);
  REQUIRE(r0.has_value());
  CHECK(r0->x == 3);
  CHECK(r0->y == 5);
  CHECK(r0->source == GeneratorSource::NaiveSearch);
  CHECK_FALSE(naive_point_search(0, 2).has_value());
  // larger bounds do not change the first hit
  auto r0big = naive_point_search(0, 400);
  REQUIRE(r0big.has_value());
  CHECK(r0big->x == 3);

  auto r1 = naive_point_search(1, 1);
  REQUIRE(r1.has_value());
  CHECK(r1->x == -1);
  CHECK(r1->y == 2);

  CHECK_FALSE(naive_point_search(3, 1).has_value());
  auto r3 = naive_point_search(3, 5);
  REQUIRE(r3.has_value());
  CHECK(r3->x == 5);
  CHECK(r3->y == 12);

  for (const auto& rec : {*r0, *r1, *r3}) {
    mpz_class a = -2 + 7 * rec.n;
    CHECK(rec.y * rec.y == rec.x * rec.x * rec.x + a);
    CHECK_FALSE(mazur_torsion(rec.x, rec.y, a));
  }

  CHECK_THROWS_AS(naive_point_search(0, 0), Error);
}

TEST_CASE("sweep prefers dataset rows over the search") {
  std::string path = write_temp(
      "padicert_sweep_ds.jsonl",
      "{\"n\":0,\"x\":\"129/100\",\"y\":\"-383/1000\"}\n");
  SweepOptions opts;
  opts.dataset_path = path;
  opts.height = 3;
  SweepReport r = sweep(0, 0, opts);
  REQUIRE(r.entries.size() == 1);
  const SweepEntry& e = r.entries[0];
  CHECK(e.outcome == Outcome::Good);
  CHECK(e.source == GeneratorSource::Dataset);
  REQUIRE(e.has_certificate);
  // lambda 4 is the doubled generator's dlog; the search row would give 2
  CHECK(e.certificate.lambda == 4);
  CHECK(r.count_good == 1);
  CHECK(good_fraction(r) == 1.0);
}

TEST_CASE("sweep survives dry curves via NoGenerator") {
  SweepOptions opts;
  opts.height = 1;
  SweepReport r = sweep(3, 4, opts);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].outcome == Outcome::NoGenerator);
  CHECK_FALSE(r.entries[0].has_certificate);
  CHECK(r.entries[1].has_certificate);
  CHECK(r.count_no_generator == 1);
  CHECK(r.count_good + r.count_not_good == 1);

  CHECK_THROWS_AS(sweep(1, 0, opts), Error);
}

TEST_CASE("parallel sweep reproduces the serial report byte for byte") {
  SweepOptions serial;
  serial.height = 20;
  serial.jobs = 1;
  SweepOptions parallel = serial;
  parallel.jobs = 4;

  SweepReport rs = sweep(-6, 6, serial);
  SweepReport rs2 = sweep(-6, 6, serial);
  SweepReport rp = sweep(-6, 6, parallel);

  auto normalized = [](const SweepReport& r) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(
        sweep_report_json(r));
    j["wall_ms"] = 0;
    return j.dump();
  };
  CHECK(normalized(rs) == normalized(rs2));
  CHECK(normalized(rs) == normalized(rp));

  REQUIRE(rs.entries.size() == 13);
  for (size_t i = 0; i < rs.entries.size(); ++i) {
    CHECK(rs.entries[i].n == mpz_class(-6) + static_cast<long>(i));
    if (rs.entries[i].outcome == Outcome::Good) {
      CHECK(rs.entries[i].certificate.stable);
      CHECK(restrict_level_to_L(rs.entries[i].certificate) == 6);
    }
  }
  CHECK(rs.count_good + rs.count_not_good + rs.count_no_generator +
            rs.count_skipped ==
        13);
}

TEST_CASE("report serialization carries counts and certificates") {
  SweepOptions opts;
  opts.height = 3;
  SweepReport r = sweep(0, 1, opts);
  std::string body = sweep_report_json(r);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(body);
  CHECK(j["range"][0] == 0);
  CHECK(j["range"][1] == 1);
  CHECK(j["p"] == 7);
  CHECK(j["dataset"].is_null());
  CHECK(j["counts"]["Good"].get<long>() == r.count_good);
  CHECK(j["entries"].size() == 2);
  CHECK(j["entries"][0]["outcome"] == "Good");
  CHECK(j["entries"][0]["source"] == "naive-search");
  CHECK(j["entries"][0]["certificate"]["lambda"] == 2);
  CHECK(j["entries"][0]["certificate"]["verdict"] == "Good");
  CHECK(j["entries"][1]["certificate"]["lambda"] == 6);

  std::string table = sweep_table(r);
  CHECK(table.find("outcome") != std::string::npos);
  CHECK(table.find("Good") != std::string::npos);
  CHECK(table.find("good_fraction") != std::string::npos);

  SweepReport empty;
  CHECK(good_fraction(empty) == 0.0);
  CHECK(sweep_report_json(empty).find("\"good_fraction\": null") !=
        std::string::npos);
}
