// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "padicert/certify.hpp"
#include "padicert/cm_order.hpp"
#include "padicert/error.hpp"
#include "padicert/finite_field.hpp"
#include "padicert/survey.hpp"
#include "padicert/torsion.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int code_of(const padicert::Error& e) {
  switch (e.code()) {
    case padicert::ErrorCode::PrecisionExhausted:
    case padicert::ErrorCode::DivisionByZeroAtPrecision:
      return PCERT_EPRECISION;
    case padicert::ErrorCode::Internal:
    case padicert::ErrorCode::ConsistencyFailure:
    case padicert::ErrorCode::HasseViolation:
      return PCERT_EINTERNAL;
    default:
      return PCERT_EINVAL;
  }
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const padicert::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PCERT_EINTERNAL;
  }
}

int fail_invalid(const char* what) {
  g_last_error = what;
  return PCERT_EINVAL;
}

mpq_class parse_rational_arg(const char* s) {
  mpq_class q;
  if (s == nullptr || *s == '\0' ||
      mpq_set_str(q.get_mpq_t(), s, 10) != 0)
    padicert::raise(padicert::ErrorCode::InvalidArgument,
                    "unreadable rational argument");
  if (q.get_den() == 0)
    padicert::raise(padicert::ErrorCode::InvalidArgument,
                    "zero denominator");
  q.canonicalize();
  return q;
}

long effective_precision(long precision) {
  return precision <= 0 ? padicert::kDefaultPrecision : precision;
}

nlohmann::ordered_json point_json(const padicert::Point<padicert::PadicNumber>& P) {
  nlohmann::ordered_json j;
  if (P.inf) {
    j["infinity"] = true;
  } else {
    j["x"] = P.x.str();
    j["y"] = P.y.str();
  }
  return j;
}

}  // namespace

struct pcert_certificate {
  padicert::GoodPointCertificate cert;
};

extern "C" {

const char* pcert_version(void) { return "0.1.0"; }

const char* pcert_last_error(void) { return g_last_error.c_str(); }

void pcert_string_free(char* s) { std::free(s); }

int pcert_count_points(long a, long b, long q, long* out) {
  if (out == nullptr) return fail_invalid("null output");
  return guarded([&]() {
    *out = padicert::count_points(a, b, q);
    return PCERT_OK;
  });
}

int pcert_split_prime(long d, long p, int has_trace, long trace,
                      char** out_json) {
  if (out_json == nullptr) return fail_invalid("null output");
  return guarded([&]() {
    if (has_trace == 0 && d != -3)
      padicert::raise(padicert::ErrorCode::InvalidArgument,
                      "a trace is required for D != -3");
    padicert::QuadInt pi = has_trace != 0
                               ? padicert::split_frobenius(d, p, trace)
                               : padicert::eisenstein_prime_above(p);
    nlohmann::ordered_json j;
    j["D"] = d;
    j["p"] = p;
    j["pi"] = pi.str();
    j["conj"] = pi.conj().str();
    j["norm"] = pi.norm().get_str();
    j["trace"] = pi.trace().get_str();
    *out_json = dup_string(j.dump());
    return PCERT_OK;
  });
}

int pcert_torsion_points(long long n, long precision, char** out_json) {
  if (out_json == nullptr) return fail_invalid("null output");
  return guarded([&]() {
    long N = effective_precision(precision);
    mpz_class a = -2 + 7 * mpz_class(static_cast<long>(n));
    auto points = padicert::torsion7_qp(a, N);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["a"] = a.get_str();
    j["p"] = 7;
    j["precision"] = N;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& P : points) j["points"].push_back(point_json(P));
    *out_json = dup_string(j.dump(2));
    return PCERT_OK;
  });
}

int pcert_filtration_level(long long n, long precision, long* out_level) {
  if (out_level == nullptr) return fail_invalid("null output");
  return guarded([&]() {
    long N = effective_precision(precision);
    mpz_class a = -2 + 7 * mpz_class(static_cast<long>(n));
    *out_level = padicert::formal_torsion_cyclotomic(a, 7, N).level;
    return PCERT_OK;
  });
}

int pcert_certify(long long n, const char* x, const char* y, long precision,
                  pcert_certificate** out) {
  if (out == nullptr) return fail_invalid("null output");
  *out = nullptr;
  return guarded([&]() {
    mpq_class xq = parse_rational_arg(x);
    mpq_class yq = parse_rational_arg(y);
    auto cert = padicert::certify_good(mpz_class(static_cast<long>(n)), xq,
                                       yq, 7, effective_precision(precision));
    *out = new pcert_certificate{std::move(cert)};
    return PCERT_OK;
  });
}

void pcert_certificate_free(pcert_certificate* cert) { delete cert; }

int pcert_certificate_json(const pcert_certificate* cert, char** out_json) {
  if (cert == nullptr || out_json == nullptr)
    return fail_invalid("null argument");
  return guarded([&]() {
    *out_json = dup_string(padicert::certificate_json(cert->cert));
    return PCERT_OK;
  });
}

int pcert_certificate_good(const pcert_certificate* cert, int* out) {
  if (cert == nullptr || out == nullptr) return fail_invalid("null argument");
  *out = cert->cert.good ? 1 : 0;
  return PCERT_OK;
}

int pcert_certificate_lambda(const pcert_certificate* cert, long* out) {
  if (cert == nullptr || out == nullptr) return fail_invalid("null argument");
  *out = cert->cert.lambda;
  return PCERT_OK;
}

int pcert_certificate_x_valuation(const pcert_certificate* cert, long* out) {
  if (cert == nullptr || out == nullptr) return fail_invalid("null argument");
  *out = cert->cert.x_valuation;
  return PCERT_OK;
}

int pcert_certificate_stable(const pcert_certificate* cert, int* out) {
  if (cert == nullptr || out == nullptr) return fail_invalid("null argument");
  *out = cert->cert.stable ? 1 : 0;
  return PCERT_OK;
}

int pcert_certificate_restrict_level(const pcert_certificate* cert,
                                     long* out) {
  if (cert == nullptr || out == nullptr) return fail_invalid("null argument");
  return guarded([&]() {
    *out = padicert::restrict_level_to_L(cert->cert);
    return PCERT_OK;
  });
}

int pcert_sweep(long long n_lo, long long n_hi, const char* dataset_path,
                long height, long precision, int jobs, char** out_json,
                char** out_table) {
  return guarded([&]() {
    padicert::SweepOptions opts;
    if (dataset_path != nullptr) opts.dataset_path = dataset_path;
    opts.height = height;
    opts.precision = effective_precision(precision);
    opts.jobs = jobs <= 0 ? 1 : jobs;
    auto report =
        padicert::sweep(mpz_class(static_cast<long>(n_lo)),
                        mpz_class(static_cast<long>(n_hi)), opts);
    if (out_json != nullptr)
      *out_json = dup_string(padicert::sweep_report_json(report));
    if (out_table != nullptr)
      *out_table = dup_string(padicert::sweep_table(report));
    return PCERT_OK;
  });
}

}  // extern "C"
