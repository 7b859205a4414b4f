#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "phf/hyperfun.hpp"
#include "phf/suite.hpp"
#include "phf/verma.hpp"

using namespace phf;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kPrecondition = 3;

// "[1, 2]" as JSON, otherwise a comma-separated list of numbers.
json parse_list(const std::string& s) {
  if (!s.empty() && s.front() == '[') {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("malformed list '" + s + "'");
    return j;
  }
  json out = json::array();
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw ParseError("malformed list '" + s + "'");
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  return out;
}

std::vector<Scalar> scalars(const json& list, Mode m) {
  std::vector<Scalar> v;
  for (auto& x : list) v.push_back(scalar_from_json(x, m));
  return v;
}

void emit(const json& j, const std::string& path) {
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text << "\n";
  }
}

void summary(const CheckReport& r) {
  std::cerr << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " (max discrepancy " << r.max_discrepancy;
  if (!r.worst.empty()) std::cerr << ", worst " << r.worst;
  std::cerr << ")\n";
}

// Expands --config FILE into flags placed after the command words, so flags on the command line win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read config " + path);
  json cfg = json::parse(f, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object()) throw ParseError("config must be a JSON object");

  size_t pos = 1;
  if (args.size() < 2 || args[1].rfind("-", 0) == 0) {
    std::vector<std::string> words;
    if (!cfg.contains("command")) throw ParseError("config names no command");
    words.push_back(cfg["command"].get<std::string>());
    for (const char* k : {"id", "function"})
      if (cfg.contains(k)) words.push_back(cfg[k].get<std::string>());
    args.insert(args.begin() + 1, words.begin(), words.end());
    pos = 1 + words.size();
  } else {
    pos = 2;
    bool takes_word = args[1] == "check" || args[1] == "eval";
    if (pos < args.size() && args[pos].rfind("-", 0) != 0) {
      ++pos;
    } else if (takes_word) {
      for (const char* k : {"id", "function"})
        if (cfg.contains(k)) args.insert(args.begin() + pos++, cfg[k].get<std::string>());
    }
  }
  std::vector<std::string> flags;
  for (auto& [k, v] : cfg.items()) {
    if (k == "command" || k == "id" || k == "function") continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) flags.push_back("--" + k);
      continue;
    }
    flags.push_back("--" + k);
    flags.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  args.insert(args.begin() + pos, flags.begin(), flags.end());
  return args;
}

TraceSeries closed_form(const std::string& variant, Algebra alg, const std::vector<Scalar>& lambda, const Scalar& mu,
                        int n, int N) {
  XiA xi = variant.find("z_s") != std::string::npos ? XiA::SmallerIndex : XiA::LargerIndex;
  if (alg == Algebra::SP)
    return closed_trace_C(lambda.back(), n, N, xi, {variant.find("doubled") != std::string::npos, false});
  if (variant == "gauss") return closed_trace_gl2(lambda, mu, N);
  ThetaSlot slot = variant.find("lambda_n-mu") != std::string::npos ? ThetaSlot::LambdaNMinusMu : ThetaSlot::MinusSigma;
  return closed_trace_A(lambda, mu, N, xi, slot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path hypergeometric functions: evaluation and identity checks"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::uint64_t seed = default_seed();
  std::string out_path;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a series or its value at a point");
  std::string fn, a_s, b_s, c_s, tau_s, theta_s, at_s;
  int trunc = -1, n = -1;
  bool use_float = false;
  eval->add_option("function", fn, "2f1, xa, xb, xc or xd")->required();
  eval->add_option("--a", a_s);
  eval->add_option("--b", b_s);
  eval->add_option("--c", c_s);
  eval->add_option("--n", n);
  eval->add_option("--tau", tau_s, "list of tau values");
  eval->add_option("--theta", theta_s);
  eval->add_option("--trunc", trunc)->required();
  eval->add_option("--at", at_s, "point: one value per variable, or one value for all");
  eval->add_flag("--float", use_float, "floating-point mode");
  eval->add_option("--json", out_path);

  // check
  auto* check = app.add_subcommand("check", "run a registered check");
  std::string id, params_s, mu_s, mu1_s, mu2_s, lambda_s, type_s, family_s;
  int points = -1, draws = 1;
  check->add_option("id", id)->required();
  check->add_option("--n", n);
  check->add_option("--trunc", trunc);
  check->add_option("--points", points);
  check->add_option("--draws", draws);
  check->add_option("--seed", seed);
  check->add_option("--params", params_s, "JSON object of parameters");
  check->add_option("--a", a_s);
  check->add_option("--b", b_s);
  check->add_option("--c", c_s);
  check->add_option("--tau", tau_s);
  check->add_option("--theta", theta_s);
  check->add_option("--mu", mu_s);
  check->add_option("--mu1", mu1_s);
  check->add_option("--mu2", mu2_s);
  check->add_option("--lambda", lambda_s);
  check->add_option("--type", type_s);
  check->add_option("--family", family_s);
  check->add_option("--json", out_path);

  // weyl-check
  auto* weyl = app.add_subcommand("weyl-check", "eigenfunction check for a Weyl-variation theorem");
  std::string theorem;
  weyl->add_option("--theorem", theorem, "6.2, 6.3, 6.4 or 6.5")->required();
  weyl->add_option("--n", n);
  weyl->add_option("--mu", mu_s);
  weyl->add_option("--mu1", mu1_s);
  weyl->add_option("--mu2", mu2_s);
  weyl->add_option("--points", points);
  weyl->add_option("--draws", draws);
  weyl->add_option("--seed", seed);
  weyl->add_option("--json", out_path);

  // trace
  auto* trace = app.add_subcommand("trace", "brute-force trace against the closed form");
  std::string algebra, variant;
  trace->add_option("--algebra", algebra)->required()->check(CLI::IsMember({"gl", "sp"}));
  trace->add_option("--n", n)->required();
  trace->add_option("--trunc", trunc)->required();
  trace->add_option("--lambda", lambda_s)->required();
  trace->add_option("--mu", mu_s);
  trace->add_option("--variant", variant, "closed-form reading to print");
  trace->add_option("--json", out_path);

  // suite
  auto* suite = app.add_subcommand("suite", "run the acceptance suite");
  std::string profile = "desk";
  suite->add_option("--profile", profile)->check(CLI::IsMember({"quick", "desk", "full"}));
  suite->add_option("--seed", seed);
  suite->add_option("--json", out_path);

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(args);
    std::vector<const char*> cargs;
    for (auto& s : args) cargs.push_back(s.c_str());
    try {
      app.parse(int(cargs.size()), const_cast<char**>(cargs.data()));
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? kPass : kUsage;
    }

    if (*eval) {
      Mode m = use_float ? Mode::Float : Mode::Exact;
      Series s;
      json j;
      j["function"] = fn;
      j["mode"] = mode_name(m);
      if (fn == "2f1") {
        if (a_s.empty() || b_s.empty() || c_s.empty()) throw ParseError("2f1 needs --a, --b and --c");
        Scalar a = Scalar::parse(a_s, m), b = Scalar::parse(b_s, m), c = Scalar::parse(c_s, m);
        s = gauss_2f1(a, b, c, trunc);
        j["params"] = {{"a", scalar_json(a)}, {"b", scalar_json(b)}, {"c", scalar_json(c)}};
      } else {
        Family f;
        if (fn == "xa") f = Family::A;
        else if (fn == "xb") f = Family::B;
        else if (fn == "xc") f = Family::C;
        else if (fn == "xd") f = Family::D;
        else throw ParseError("unknown function '" + fn + "'");
        if (n < 1 || tau_s.empty() || theta_s.empty()) throw ParseError(fn + " needs --n, --tau and --theta");
        HyperParams p;
        p.family = f;
        p.n = n;
        p.tau = scalars(parse_list(tau_s), m);
        if (int(p.tau.size()) != n) throw ParseError("--tau needs n values");
        p.theta = Scalar::parse(theta_s, m);
        s = build_X(p, trunc);
        j["params"] = p.str();
      }
      j["truncation"] = trunc;
      if (at_s.empty()) {
        j["series"] = to_json(s);
      } else {
        auto pt = scalars(parse_list(at_s), m);
        int vars = s.vars().size();
        if (pt.size() == 1 && vars > 1) pt.assign(vars, pt[0]);
        if (int(pt.size()) != vars) throw ParseError("--at needs " + std::to_string(vars) + " values");
        Scalar v = eval_at(s, pt);
        json at = json::array();
        for (auto& x : pt) at.push_back(scalar_json(x));
        j["at"] = at;
        j["value"] = scalar_json(v);
        j["numeric"] = v.real();
      }
      emit(j, out_path);
      std::cerr << fn << ": " << (at_s.empty() ? std::to_string(s.size()) + " terms" : j["numeric"].dump()) << "\n";
      return kPass;
    }

    if (*check || *weyl) {
      CheckOptions o;
      o.n = n;
      o.N = trunc;
      o.points = points;
      o.draws = draws;
      o.seed = seed;
      if (!params_s.empty()) {
        o.params = json::parse(params_s, nullptr, false);
        if (o.params.is_discarded() || !o.params.is_object()) throw ParseError("--params must be a JSON object");
      }
      auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) o.params[key] = v;
      };
      put("a", a_s);
      put("b", b_s);
      put("c", c_s);
      put("theta", theta_s);
      put("mu", mu_s);
      put("mu1", mu1_s);
      put("mu2", mu2_s);
      put("type", type_s);
      put("family", family_s);
      if (!tau_s.empty()) o.params["tau"] = parse_list(tau_s);
      if (!lambda_s.empty()) o.params["lambda"] = lambda_s.front() == '[' ? parse_list(lambda_s) : json(lambda_s);
      if (*weyl) id = "weyl-" + theorem;
      CheckReport r = run_check(id, o);
      emit(to_json(r), out_path);
      summary(r);
      return r.pass ? kPass : kFail;
    }

    if (*trace) {
      Algebra alg = algebra == "gl" ? Algebra::GL : Algebra::SP;
      auto lambda = scalars(parse_list(lambda_s), Mode::Exact);
      Scalar mu = mu_s.empty() ? Scalar::zero(Mode::Exact) : Scalar::parse(mu_s, Mode::Exact);
      CheckReport r = compare_trace(alg, lambda, mu, n, trunc);
      json j;
      j["trace"] = r.details["oracle"];
      std::string pick = variant;
      if (pick.empty() && !r.details["agreeing"].empty()) pick = r.details["agreeing"][0].get<std::string>();
      if (!pick.empty()) {
        if (!variant.empty() && !r.details["variants"].contains(variant)) throw ParseError("unknown variant '" + variant + "'");
        j["variant"] = pick;
        j["closedForm"] = to_json(closed_form(pick, alg, lambda, mu, n, trunc));
      }
      r.seed.reset();
      j["report"] = to_json(r);
      emit(j, out_path);
      summary(r);
      return r.pass ? kPass : kFail;
    }

    if (*suite) {
      json j;
      j["profile"] = profile;
      j["seed"] = seed;
      bool all = true;
      for (auto& c : suite_criteria(parse_profile(profile))) {
        CheckReport r = c.run(seed);
        all = all && r.pass;
        j["criteria"].push_back({{"number", c.number}, {"title", c.title}, {"pass", r.pass}, {"report", to_json(r)}});
        std::cerr << c.number << ". " << c.title << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
      }
      j["pass"] = all;
      emit(j, out_path);
      return all ? kPass : kFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "precondition"}}.dump(2) << "\n";
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
