#include "phf/report.hpp"

#include <cmath>
#include <cstdlib>

namespace phf {

void CheckReport::absorb(const SeriesDiff& d, const std::string& where) {
  if (!d.exactly_zero) {
    if (mode == Mode::Exact) exact_nonzero = true;
    if (d.max_abs > max_discrepancy || worst.empty()) {
      max_discrepancy = std::max(max_discrepancy, d.max_abs);
      worst = where + (d.worst.empty() ? "" : " at " + d.worst);
    }
  }
}

void CheckReport::absorb_value(double v, const std::string& where) {
  if (std::isnan(v)) {
    max_discrepancy = NAN;
    worst = where;
    return;
  }
  if (v > max_discrepancy || (worst.empty() && v > 0)) {
    max_discrepancy = std::max(max_discrepancy, v);
    worst = where;
  }
}

void CheckReport::finish() {
  if (mode == Mode::Exact)
    pass = !exact_nonzero;
  else
    pass = !std::isnan(max_discrepancy) && max_discrepancy <= tolerance;
  if (failed_sub) pass = false;
}

void CheckReport::merge(const CheckReport& sub) {
  if (!sub.pass) failed_sub = true;
  if (sub.exact_nonzero) exact_nonzero = true;
  if (std::isnan(sub.max_discrepancy) || sub.max_discrepancy > max_discrepancy) {
    max_discrepancy = sub.max_discrepancy;
    worst = sub.id + (sub.worst.empty() ? "" : ": " + sub.worst);
  }
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["identityId"] = r.id;
  j["mode"] = mode_name(r.mode);
  if (r.truncation >= 0) j["truncation"] = r.truncation;
  if (r.mode == Mode::Float) j["tolerance"] = r.tolerance;
  if (std::isnan(r.max_discrepancy))
    j["maxDiscrepancy"] = "nan";
  else
    j["maxDiscrepancy"] = r.max_discrepancy;
  j["worst"] = r.worst;
  j["pass"] = r.pass;
  if (r.seed) j["seed"] = *r.seed;
  j["notes"] = r.notes;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

long Rng::integer(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(gen_);
}

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(gen_);
}

double Rng::log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

Scalar Rng::rational(long max_den, long bound, bool non_integer) {
  for (;;) {
    long q = integer(1, max_den);
    long p = integer(-bound * q, bound * q);
    mpq_class v(p, q);
    v.canonicalize();
    if (non_integer && v.get_den() == 1) continue;
    return Scalar(v);
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PHF_SEED")) {
    char* end = nullptr;
    auto v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 20240517ULL;
}

}  // namespace phf
