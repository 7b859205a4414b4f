#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "phf/scalar.hpp"
#include "phf/series.hpp"

namespace phf {

struct CheckReport {
  std::string id;
  Mode mode = Mode::Exact;
  int truncation = -1;
  double tolerance = 0.0;
  double max_discrepancy = 0.0;
  std::string worst;
  bool pass = false;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();

  // Fold a series comparison into this report (exact: pass needs zero difference).
  void absorb(const SeriesDiff& d, const std::string& where);
  void absorb_value(double v, const std::string& where);
  // Sets pass from the accumulated discrepancy.
  void finish();
  // Merge a sub-report; pass becomes the conjunction.
  void merge(const CheckReport& sub);

  bool exact_nonzero = false;
  bool failed_sub = false;
};

nlohmann::json to_json(const CheckReport& r);

// Deterministic random draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi);
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  // p/q with 1 <= q <= max_den and |p/q| <= bound, never an integer when `non_integer`
  Scalar rational(long max_den, long bound, bool non_integer = false);
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t default_seed();

}  // namespace phf
