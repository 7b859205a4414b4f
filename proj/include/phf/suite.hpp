#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "phf/report.hpp"

namespace phf {

// Unset fields (-1, empty params) take the per-check defaults.
struct CheckOptions {
  int n = -1;
  int N = -1;
  int points = -1;
  int draws = 1;
  std::uint64_t seed = 0;
  // Overrides for the random draws: tau, theta, a, b, c, lambda, mu, mu1, mu2, type, family.
  nlohmann::json params = nlohmann::json::object();
};

const std::vector<std::string>& registered_checks();
// Throws ParseError for an unknown id or malformed params, PreconditionError for bad math input.
CheckReport run_check(const std::string& id, const CheckOptions& opt);

// Exact property suites.
CheckReport check_brackets(int n_max, std::uint64_t seed);
CheckReport check_singular_vectors(std::uint64_t seed);
CheckReport check_pochhammer_duality(std::uint64_t seed, int count = 50, int max_i = 20);
CheckReport check_series_laws(std::uint64_t seed, int trials = 5);
// X_A at n = 2 against the Gauss series, coefficient by coefficient.
CheckReport check_xa_gauss(const Scalar& a, const Scalar& b, const Scalar& c, int N);

enum class Profile { Quick, Desk, Full };
Profile parse_profile(const std::string& s);

struct Criterion {
  int number;
  std::string title;
  std::function<CheckReport(std::uint64_t seed)> run;
};
// Desk is the acceptance configuration; quick shrinks draws and orders, full enlarges them.
std::vector<Criterion> suite_criteria(Profile p);

}  // namespace phf
