// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/survey.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "padicert/error.hpp"

namespace padicert {

namespace {

const char* source_name(GeneratorSource s) {
  return s == GeneratorSource::Dataset ? "dataset" : "naive-search";
}

mpq_class parse_rational(const std::string& s, long line) {
  mpq_class q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    raise(ErrorCode::BadDataset,
          "line " + std::to_string(line) + ": unreadable rational '" + s +
              "'");
  if (q.get_den() == 0)
    raise(ErrorCode::BadDataset,
          "line " + std::to_string(line) + ": zero denominator");
  q.canonicalize();
  return q;
}

nlohmann::ordered_json json_int(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

IngestResult ingest_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    raise(ErrorCode::BadDataset, "cannot open dataset '" + path + "'");
  IngestResult out;
  std::string text;
  long line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorCode::BadDataset,
            "line " + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("x") ||
        !j.contains("y") || !j["n"].is_number_integer() ||
        !j["x"].is_string() || !j["y"].is_string())
      raise(ErrorCode::BadDataset,
            "line " + std::to_string(line) +
                ": expected {\"n\": int, \"x\": \"num/den\", \"y\": "
                "\"num/den\"}");
    GeneratorRecord rec;
    rec.n = mpz_class(static_cast<long>(j["n"].get<long long>()));
    rec.x = parse_rational(j["x"].get<std::string>(), line);
    rec.y = parse_rational(j["y"].get<std::string>(), line);
    rec.source = GeneratorSource::Dataset;

    mpz_class a = -2 + 7 * rec.n;
    if (rec.y * rec.y != rec.x * rec.x * rec.x + a) {
      out.rejected.push_back(
          {line, std::string(error_code_name(ErrorCode::NotOnCurve)) +
                     ": y^2 != x^3 + a for n = " + rec.n.get_str()});
      continue;
    }
    if (mazur_torsion(rec.x, rec.y, a)) {
      out.rejected.push_back(
          {line, std::string(error_code_name(ErrorCode::TorsionPoint)) +
                     ": kP = O for some k <= 12"});
      continue;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::optional<GeneratorRecord> naive_point_search(const mpz_class& n,
                                                  long height) {
  if (height < 1)
    raise(ErrorCode::InvalidArgument, "height bound must be >= 1");
  mpz_class a = -2 + 7 * n;
  for (long d = 1; d * d <= height; ++d) {
    mpz_class d2 = mpz_class(d) * d;
    mpz_class d3 = d2 * d, d6 = d3 * d3;
    mpz_class ulim = height * d2;
    for (mpz_class u = -ulim; u <= ulim; ++u) {
      if (gcd(u, mpz_class(d)) != 1) continue;
      mpz_class w2 = u * u * u + a * d6;
      if (w2 <= 0) continue;  // w = 0 is 2-torsion
      if (mpz_perfect_square_p(w2.get_mpz_t()) == 0) continue;
      mpz_class w;
      mpz_sqrt(w.get_mpz_t(), w2.get_mpz_t());
      mpq_class x(u, d2), y(w, d3);
      x.canonicalize();
      y.canonicalize();
      if (mazur_torsion(x, y, a)) continue;
      return GeneratorRecord{n, x, y, GeneratorSource::NaiveSearch};
    }
  }
  return std::nullopt;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Good:
      return "Good";
    case Outcome::NotGood:
      return "NotGood";
    case Outcome::NoGenerator:
      return "NoGenerator";
    case Outcome::SkippedBadReduction:
      return "SkippedBadReduction";
  }
  return "?";
}

double good_fraction(const SweepReport& r) {
  long certified = r.count_good + r.count_not_good;
  if (certified == 0) return 0.0;
  return static_cast<double>(r.count_good) / static_cast<double>(certified);
}

namespace {

SweepEntry sweep_one(const mpz_class& n,
                     const std::map<mpz_class, GeneratorRecord>& table,
                     const SweepOptions& opts) {
  SweepEntry entry;
  entry.n = n;
  std::optional<GeneratorRecord> gen;
  auto it = table.find(n);
  if (it != table.end())
    gen = it->second;
  else if (opts.height >= 1)
    gen = naive_point_search(n, opts.height);
  if (!gen) {
    entry.outcome = Outcome::NoGenerator;
    return entry;
  }
  entry.source = gen->source;
  try {
    entry.certificate =
        certify_good(n, gen->x, gen->y, opts.p, opts.precision);
    entry.has_certificate = true;
    entry.outcome =
        entry.certificate.good ? Outcome::Good : Outcome::NotGood;
  } catch (const Error& e) {
    entry.outcome = Outcome::SkippedBadReduction;
    entry.detail = e.what();
  }
  return entry;
}

}  // namespace

SweepReport sweep(const mpz_class& n_lo, const mpz_class& n_hi,
                  const SweepOptions& opts) {
  if (n_lo > n_hi)
    raise(ErrorCode::InvalidArgument, "empty sweep range");
  mpz_class width = n_hi - n_lo + 1;
  if (width > 2000000)
    raise(ErrorCode::InvalidArgument, "sweep range too large");
  auto t0 = std::chrono::steady_clock::now();

  std::map<mpz_class, GeneratorRecord> table;
  if (!opts.dataset_path.empty()) {
    IngestResult ing = ingest_generators(opts.dataset_path);
    for (auto& rec : ing.records) table.emplace(rec.n, rec);
  }

  long total = width.get_si();
  SweepReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.options = opts;
  report.entries.resize(static_cast<size_t>(total));

  std::atomic<long> cursor{0};
  auto worker = [&]() {
    for (;;) {
      long i = cursor.fetch_add(1);
      if (i >= total) return;
      report.entries[static_cast<size_t>(i)] =
          sweep_one(n_lo + i, table, opts);
    }
  };
  long jobs = std::max(1, opts.jobs);
  if (jobs > total) jobs = total;
  std::vector<std::thread> pool;
  for (long t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& e : report.entries) {
    switch (e.outcome) {
      case Outcome::Good:
        ++report.count_good;
        break;
      case Outcome::NotGood:
        ++report.count_not_good;
        break;
      case Outcome::NoGenerator:
        ++report.count_no_generator;
        break;
      case Outcome::SkippedBadReduction:
        ++report.count_skipped;
        break;
    }
  }
  report.wall_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return report;
}

std::string sweep_report_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["range"] = {json_int(r.n_lo), json_int(r.n_hi)};
  j["p"] = r.options.p;
  j["precision"] = r.options.precision;
  j["height"] = r.options.height;
  if (r.options.dataset_path.empty())
    j["dataset"] = nullptr;
  else
    j["dataset"] = r.options.dataset_path;
  j["counts"] = {{"Good", r.count_good},
                 {"NotGood", r.count_not_good},
                 {"NoGenerator", r.count_no_generator},
                 {"SkippedBadReduction", r.count_skipped}};
  if (r.count_good + r.count_not_good == 0)
    j["good_fraction"] = nullptr;
  else
    j["good_fraction"] = good_fraction(r);
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json je;
    je["n"] = json_int(e.n);
    je["outcome"] = outcome_name(e.outcome);
    if (e.outcome != Outcome::NoGenerator)
      je["source"] = source_name(e.source);
    if (e.has_certificate)
      je["certificate"] =
          nlohmann::ordered_json::parse(certificate_json(e.certificate));
    if (!e.detail.empty()) je["detail"] = e.detail;
    j["entries"].push_back(std::move(je));
  }
  j["wall_ms"] = r.wall_ms;
  return j.dump(2) + "\n";
}

std::string sweep_table(const SweepReport& r) {
  std::ostringstream out;
  out << std::setw(8) << "n" << "  " << std::left << std::setw(20)
      << "outcome" << std::setw(14) << "source" << std::right
      << std::setw(7) << "lambda" << std::setw(6) << "v(x)" << std::setw(8)
      << "stable" << "\n";
  for (const auto& e : r.entries) {
    out << std::setw(8) << e.n.get_str() << "  " << std::left
        << std::setw(20) << outcome_name(e.outcome) << std::setw(14)
        << (e.outcome == Outcome::NoGenerator ? "-" : source_name(e.source))
        << std::right;
    if (e.has_certificate)
      out << std::setw(7) << e.certificate.lambda << std::setw(6)
          << e.certificate.x_valuation << std::setw(8)
          << (e.certificate.stable ? "yes" : "no");
    else
      out << std::setw(7) << "-" << std::setw(6) << "-" << std::setw(8)
          << "-";
    out << "\n";
  }
  long certified = r.count_good + r.count_not_good;
  out << "Good " << r.count_good << " | NotGood " << r.count_not_good
      << " | NoGenerator " << r.count_no_generator
      << " | SkippedBadReduction " << r.count_skipped << "\n";
  out << "good_fraction ";
  if (certified == 0) {
    out << "n/a";
  } else {
    out << std::fixed << std::setprecision(4) << good_fraction(r);
  }
  out << " over " << certified << " certified curves, " << r.wall_ms
      << " ms\n";
  return out.str();
}

}  // namespace padicert
