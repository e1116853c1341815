// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_SURVEY_HPP
#define PADICERT_SURVEY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "padicert/certify.hpp"

namespace padicert {

enum class GeneratorSource { Dataset, NaiveSearch };

// A known rational point of infinite order on E_n : y^2 = x^3 - 2 + 7n.
// Rank and generator computation are delegated: rows either come from an
// external dataset or from the naive search below.
struct GeneratorRecord {
  mpz_class n;
  mpq_class x, y;
  GeneratorSource source = GeneratorSource::Dataset;
};

struct IngestReject {
  long line = 0;  // 1-based line number in the dataset file
  std::string message;
};

struct IngestResult {
  std::vector<GeneratorRecord> records;
  std::vector<IngestReject> rejected;
};

// Reads JSON lines {"n": int, "x": "num/den", "y": "num/den"}.  Structural
// damage (unreadable file, malformed JSON, missing or mistyped fields,
// zero denominators) raises BadDataset; rows that parse but fail the
// on-curve or torsion screens are collected in `rejected`.
IngestResult ingest_generators(const std::string& path);

// Enumerates x = u/d^2 with d <= sqrt(H), |u| <= H d^2, gcd(u, d) = 1,
// d ascending then u ascending, and returns the first non-torsion point
// of E_n, or nullopt.  Deterministic; H >= 1.
std::optional<GeneratorRecord> naive_point_search(const mpz_class& n,
                                                  long height);

enum class Outcome { Good, NotGood, NoGenerator, SkippedBadReduction };
const char* outcome_name(Outcome o);

struct SweepEntry {
  mpz_class n;
  Outcome outcome = Outcome::NoGenerator;
  GeneratorSource source = GeneratorSource::Dataset;  // when a point exists
  bool has_certificate = false;
  GoodPointCertificate certificate;  // valid iff has_certificate
  std::string detail;                // failure note for skipped entries
};

struct SweepOptions {
  std::string dataset_path;  // empty: naive search only
  long height = 50;          // 0 disables the search fallback
  long p = 7;
  long precision = kDefaultPrecision;
  int jobs = 1;
};

struct SweepReport {
  mpz_class n_lo, n_hi;
  SweepOptions options;
  std::vector<SweepEntry> entries;  // ascending n, one per value
  long count_good = 0;
  long count_not_good = 0;
  long count_no_generator = 0;
  long count_skipped = 0;
  long wall_ms = 0;
};

// Good / (Good + NotGood); 0 when nothing was certified.
double good_fraction(const SweepReport& r);

// Runs certify_good over [n_lo, n_hi].  Dataset rows win over the naive
// search; a per-n certification failure becomes SkippedBadReduction and
// never aborts the sweep.  Work is stolen from a shared counter by
// opts.jobs threads; per-n results land in fixed slots, so the report is
// identical to the single-threaded one.
SweepReport sweep(const mpz_class& n_lo, const mpz_class& n_hi,
                  const SweepOptions& opts);

// Deterministic JSON document (the wall_ms field excepted).
std::string sweep_report_json(const SweepReport& r);

// Aligned plain-text table with a summary footer.
std::string sweep_table(const SweepReport& r);

}  // namespace padicert

#endif
