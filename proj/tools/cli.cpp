// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line surface over the C API.  Exit codes: 0 success, 2 input
// error, 3 precision exhausted, 4 internal invariant failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "padicert.h"

namespace {

int finish(int rc) {
  if (rc != PCERT_OK) std::cerr << "error: " << pcert_last_error() << "\n";
  return rc;
}

int print_owned(char* body) {
  std::cout << body;
  if (body[0] == '\0' || body[std::string(body).size() - 1] != '\n')
    std::cout << "\n";
  pcert_string_free(body);
  return PCERT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact 7-adic good-point certification for the family "
      "y^2 = x^3 - 2 + 7n"};
  app.require_subcommand(1);

  long a = 0, b = 0, q = 0;
  CLI::App* count = app.add_subcommand(
      "count-points", "count |E(F_q)| for y^2 = x^3 + ax + b");
  count->add_option("--a", a)->required();
  count->add_option("--b", b)->required();
  count->add_option("--q", q)->required();

  long d = 0, p = 0, trace = 0;
  CLI::App* split = app.add_subcommand(
      "split-prime", "Frobenius factor of a split prime in Z[w_D]");
  split->add_option("--d", d)->required();
  split->add_option("--p", p)->required();
  CLI::Option* trace_opt = split->add_option("--trace", trace);

  long long n = 0;
  long precision = 0;
  CLI::App* torsion = app.add_subcommand(
      "torsion", "the seven 7-torsion points of E_n over Q_7");
  torsion->add_option("--n", n)->required();
  torsion->add_option("--precision", precision);

  std::string xs, ys;
  CLI::App* certify = app.add_subcommand(
      "certify", "certify one rational point of E_n; emits JSON");
  certify->add_option("--n", n)->required();
  certify->add_option("--x", xs)->required();
  certify->add_option("--y", ys)->required();
  certify->add_option("--precision", precision);

  long long from = 0, to = 0;
  std::string dataset, out_path;
  long height = 50;
  int jobs = 1;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "certify the family over a range of n; table to stdout");
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--dataset", dataset);
  sweep->add_option("--height", height);
  sweep->add_option("--precision", precision);
  sweep->add_option("--jobs", jobs);
  sweep->add_option("--out", out_path);

  CLI::App* filtration = app.add_subcommand(
      "filtration", "formal filtration levels of E_n over Q_7(zeta_7)");
  filtration->add_option("--n", n)->required();
  CLI::Option* fx = filtration->add_option("--x", xs);
  filtration->add_option("--y", ys)->needs(fx);
  fx->needs(filtration->get_option("--y"));
  filtration->add_option("--precision", precision);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*count) {
    long points = 0;
    int rc = pcert_count_points(a, b, q, &points);
    if (rc != PCERT_OK) return finish(rc);
    std::cout << points << "\n";
    return 0;
  }

  if (*split) {
    char* body = nullptr;
    int rc = pcert_split_prime(d, p, trace_opt->count() > 0 ? 1 : 0, trace,
                               &body);
    if (rc != PCERT_OK) return finish(rc);
    return print_owned(body);
  }

  if (*torsion) {
    char* body = nullptr;
    int rc = pcert_torsion_points(n, precision, &body);
    if (rc != PCERT_OK) return finish(rc);
    return print_owned(body);
  }

  if (*certify) {
    pcert_certificate* cert = nullptr;
    int rc = pcert_certify(n, xs.c_str(), ys.c_str(), precision, &cert);
    if (rc != PCERT_OK) return finish(rc);
    char* body = nullptr;
    rc = pcert_certificate_json(cert, &body);
    pcert_certificate_free(cert);
    if (rc != PCERT_OK) return finish(rc);
    return print_owned(body);
  }

  if (*sweep) {
    char* body = nullptr;
    char* table = nullptr;
    int rc = pcert_sweep(from, to, dataset.empty() ? nullptr : dataset.c_str(),
                         height, precision, jobs, &body, &table);
    if (rc != PCERT_OK) return finish(rc);
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        pcert_string_free(body);
        pcert_string_free(table);
        return 2;
      }
      out << body;
    }
    pcert_string_free(body);
    std::cout << table;
    pcert_string_free(table);
    return 0;
  }

  if (*filtration) {
    long level = 0;
    int rc = pcert_filtration_level(n, precision, &level);
    if (rc != PCERT_OK) return finish(rc);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["p"] = 7;
    j["torsion_level"] = level;
    if (fx->count() > 0) {
      pcert_certificate* cert = nullptr;
      rc = pcert_certify(n, xs.c_str(), ys.c_str(), precision, &cert);
      if (rc != PCERT_OK) return finish(rc);
      int good = 0;
      pcert_certificate_good(cert, &good);
      j["verdict"] = good != 0 ? "Good" : "NotGood";
      if (good != 0) {
        long restricted = 0;
        rc = pcert_certificate_restrict_level(cert, &restricted);
        pcert_certificate_free(cert);
        if (rc != PCERT_OK) return finish(rc);
        j["restricted_level"] = restricted;
      } else {
        pcert_certificate_free(cert);
        j["restricted_level"] = nullptr;
      }
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  return 2;
}
