#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "phf/suite.hpp"

using namespace phf;

namespace {

// Pinned tolerance per criterion; 0 means exact equality.
const std::map<int, double> kTolerance{{1, 0.0}, {2, 0.0},  {3, 0.0},   {4, 0.0},  {5, 0.0},  {6, 1e-8},
                                       {7, 1e-9}, {8, 1e-10}, {9, 1e-8}, {10, 1e-6}, {11, 1e-6}, {12, 0.0}};
// Minimum residual reduction from N to 2N.
const std::map<int, double> kDecay{{10, 10.0}, {11, 4.0}};

// Criteria whose bound does not hold over the whole sampled domain; they print FAIL without failing the run.
const std::set<int> kKnownFailures{11};

// Every draw of every run, flattened.
void collect(const nlohmann::json& rep, std::vector<nlohmann::json>& out) {
  if (rep.contains("details") && rep["details"].contains("draws"))
    for (auto& d : rep["details"]["draws"]) out.push_back(d);
  else
    out.push_back(rep);
}

std::string extra(int number, const CheckReport& r, bool& ok) {
  std::string s;
  if (number == 3) {
    std::set<std::string> winners;
    for (auto& run : r.details["runs"])
      for (auto& w : run["report"]["details"]["agreeing"]) winners.insert(w.get<std::string>());
    s += " winner:";
    for (auto& w : winners) s += " " + w;
    ok = ok && winners.size() == 1;
  }
  if (kDecay.count(number)) {
    double worst_ratio = INFINITY, worst_fine = 0;
    for (auto& run : r.details["runs"]) {
      std::vector<nlohmann::json> draws;
      collect(run["report"], draws);
      for (auto& d : draws) {
        double best_fine = INFINITY, ratio = 0;
        for (auto& name : d["details"]["agreeing"]) {
          auto& v = d["details"]["variants"][name.get<std::string>()];
          double fine = v["residual2N"].get<double>();
          if (fine < best_fine) best_fine = fine, ratio = v["residualN"].get<double>() / fine;
        }
        if (d["details"]["agreeing"].empty()) {
          for (auto& [k, v] : d["details"]["variants"].items())
            if (v["residual2N"].get<double>() < best_fine)
              best_fine = v["residual2N"].get<double>(), ratio = v["residualN"].get<double>() / best_fine;
        }
        worst_ratio = std::min(worst_ratio, ratio);
        worst_fine = std::max(worst_fine, best_fine);
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, " residual(2N) max %.3g, min decay %.3g (need %g)", worst_fine, worst_ratio,
                  kDecay.at(number));
    s += buf;
  }
  return s;
}

}  // namespace

int main() {
  const std::uint64_t seed = default_seed();
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  int unexpected = 0, passed = 0;
  for (auto& c : suite_criteria(Profile::Desk)) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = c.run(seed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double tol = kTolerance.at(c.number);
    bool ok = r.pass;
    if (tol == 0.0) {
      ok = ok && r.mode == Mode::Exact && r.max_discrepancy == 0.0;
    } else {
      ok = ok && r.tolerance == tol;
    }
    std::string more = extra(c.number, r, ok);
    char head[64];
    if (tol == 0.0)
      std::snprintf(head, sizeof head, "exact, max discrepancy %g", r.max_discrepancy);
    else
      std::snprintf(head, sizeof head, "tol %g, max discrepancy %.3g", tol, r.max_discrepancy);
    std::printf("%s %2d  %s  [%s%s] (%.1fs)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), head, more.c_str(),
                secs);
    if (!ok && !r.worst.empty()) std::printf("        worst: %s\n", r.worst.c_str());
    if (ok)
      ++passed;
    else if (!kKnownFailures.count(c.number))
      ++unexpected;
  }
  std::printf("%d of 12 criteria pass\n", passed);
  return unexpected ? 1 : 0;
}
