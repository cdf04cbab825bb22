// Command line front end: algebra inspection, kernel and fan polynomial
// printing, stem recovery, fan classification, and the verification suites.
// Exit codes: 0 success, 1 verification failure, 2 usage or config error.

#include "CLI11.hpp"
#include "tregular/verify.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace tregular;

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + s + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer list: '" + s + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

MultiIndex parse_multiindex(const std::string& s) {
  const auto v = parse_csv_ints(s);
  for (int x : v)
    if (x < 0) throw std::invalid_argument("multi-index entries must be nonnegative: '" + s + "'");
  return MultiIndex(v.begin(), v.end());
}

std::string fan_string(const TFan& fan) {
  std::string s = "(";
  for (std::size_t i = 0; i < fan.steps().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(fan.steps()[i]);
  }
  return s + ")";
}

nlohmann::ordered_json poly_json(const PolyMap<Rational>& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [k, c] : p.terms()) terms[format_monomial(k)] = format_element(c);
  return terms;
}

int run_algebra(const std::string& spec, bool table, bool json) {
  const Algebra a = load_algebra(spec);
  if (json) {
    std::cout << algebra_to_json(a).dump(2) << "\n";
    return 0;
  }
  std::cout << a.name() << ": dimension " << a.dim() << ", " << (a.associative() ? "associative" : "nonassociative")
            << ", " << (a.alternative() ? "alternative" : "not alternative") << "\n";
  std::cout << "basis:";
  for (int i = 0; i < a.dim(); ++i) std::cout << " " << a.label(i);
  std::cout << "\n";
  if (table) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        std::cout << a.label(i) << " * " << a.label(j) << " = "
                  << format_element(Element<Rational>::basis(a, i) * Element<Rational>::basis(a, j)) << "\n";
  }
  return 0;
}

int run_fueter(const std::string& kcsv, const std::string& algebra_spec, bool json) {
  const MultiIndex k = parse_multiindex(kcsv);
  const Algebra a = load_algebra(algebra_spec);
  const HypercomplexBasis b = HypercomplexBasis::standard(a, static_cast<int>(k.size()));
  FueterFamily fam(b);
  const PolyMap<Rational>& p = fam.poly(k);
  if (json) {
    nlohmann::ordered_json j;
    j["algebra"] = a.name();
    j["k"] = k;
    j["poly"] = poly_json(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_poly(p) << "\n";
  }
  return 0;
}

int run_tpoly(const std::string& fancsv, const std::string& kcsv, const std::string& algebra_spec, bool json) {
  const TFan fan(parse_csv_ints(fancsv));
  const MultiIndex k = parse_multiindex(kcsv);
  const Algebra a = load_algebra(algebra_spec);
  const HypercomplexBasis b = HypercomplexBasis::standard(a, fan.m());
  TFamily tf(b, fan);
  const PolyMap<Rational>& p = tf.poly(k);
  if (json) {
    nlohmann::ordered_json j;
    j["algebra"] = a.name();
    j["fan"] = fan.steps();
    j["k"] = k;
    j["poly"] = poly_json(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_poly(p) << "\n";
  }
  return 0;
}

int run_stem(const std::string& fancsv, const std::string& kcsv, const std::string& algebra_spec,
             std::uint64_t seed, bool json) {
  const TFan fan(parse_csv_ints(fancsv));
  const MultiIndex k = parse_multiindex(kcsv);
  const Algebra a = load_algebra(algebra_spec);
  const HypercomplexBasis b = HypercomplexBasis::standard(a, fan.m());
  TFamily tf(b, fan);
  RngStream g{CounterRng(seed)};
  const TorusPoint ip = torus_point(b, fan, g);
  const StemTable stem = recover_stem(b, fan, tf.poly(k), ip);
  nlohmann::ordered_json j;
  j["fan"] = fan.steps();
  j["k"] = k;
  nlohmann::ordered_json comps = nlohmann::ordered_json::object();
  for (unsigned K = 0; K < stem.comps.size(); ++K) {
    std::string key = "F_{";
    bool first = true;
    for (int h = 1; h <= fan.tau(); ++h)
      if (K & (1u << (h - 1))) {
        if (!first) key += ",";
        key += std::to_string(h);
        first = false;
      }
    key += "}";
    comps[key] = json ? nlohmann::ordered_json(poly_json(stem.comps[K]))
                      : nlohmann::ordered_json(format_poly(stem.comps[K]));
  }
  j["components"] = comps;
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "stem of T_" << kcsv << " for fan " << fan_string(fan)
              << " (variables: x0..x" << fan.mirror_units() << " mirror, then one beta per block):\n";
    for (const auto& [key, val] : j["components"].items()) std::cout << "  " << key << " = " << val.get<std::string>() << "\n";
  }
  return 0;
}

int run_classify(int n, bool json) {
  if (n < 1 || n > 8) throw std::invalid_argument("classify: n must be between 1 and 8");
  const auto fans = all_fans(n);
  std::vector<bool> used(fans.size(), false);
  std::vector<std::vector<const TFan*>> classes;
  for (std::size_t i = 0; i < fans.size(); ++i) {
    if (used[i]) continue;
    classes.push_back({&fans[i]});
    used[i] = true;
    for (std::size_t j = i + 1; j < fans.size(); ++j)
      if (!used[j] && fans_equivalent(fans[i], fans[j])) {
        classes.back().push_back(&fans[j]);
        used[j] = true;
      }
  }
  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& cls : classes) {
      nlohmann::ordered_json c = nlohmann::ordered_json::array();
      for (const TFan* f : cls) c.push_back(f->steps());
      out.push_back(std::move(c));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << fans.size() << " fans on " << n << " units, " << classes.size() << " classes:\n";
    for (const auto& cls : classes) {
      std::cout << " ";
      for (const TFan* f : cls) std::cout << " " << fan_string(*f);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_verify(const std::string& suite, const VerifyConfig& cfg, bool json) {
  const std::vector<int> ids = suite_ids(suite);
  const auto results = run_criteria(ids, cfg);
  if (json) {
    std::cout << report_json(suite, results, cfg).dump(2) << "\n";
  } else {
    bool all = true;
    for (const auto& r : results) {
      std::printf("[%s] criterion %2d %-22s (%zu checks, %.1fs)\n", r.pass() ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.checks.size(), r.seconds);
      for (const auto& c : r.checks)
        if (!c.pass)
          std::printf("       failed: %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : " -- ", c.detail.c_str());
      all = all && r.pass();
    }
    std::printf("suite '%s': %s\n", suite.c_str(), all ? "pass" : "FAIL");
  }
  for (const auto& r : results)
    if (!r.pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational hypercomplex analysis toolkit"};
  app.require_subcommand(1);

  std::string algebra_spec = "quaternion";
  std::string fan_csv, k_csv, suite = "all";
  bool json = false, table = false;
  VerifyConfig cfg;

  auto* alg = app.add_subcommand("algebra", "inspect a builtin algebra or a json structure file");
  alg->add_option("spec", algebra_spec, "builtin name or json file path")->required();
  alg->add_flag("--table", table, "print the full multiplication table");
  alg->add_flag("--json", json, "machine readable output");

  auto* fue = app.add_subcommand("fueter", "print a monogenic basis polynomial");
  fue->add_option("--k", k_csv, "multi-index, comma separated")->required();
  fue->add_option("--algebra", algebra_spec, "builtin name or json file path");
  fue->add_flag("--json", json, "machine readable output");

  auto* tpo = app.add_subcommand("tpoly", "print a fan basis polynomial");
  tpo->add_option("--fan", fan_csv, "fan step list, comma separated")->required();
  tpo->add_option("--k", k_csv, "multi-index, comma separated")->required();
  tpo->add_option("--algebra", algebra_spec, "builtin name or json file path");
  tpo->add_flag("--json", json, "machine readable output");

  auto* ste = app.add_subcommand("stem", "recover the stem of a fan basis polynomial");
  ste->add_option("--fan", fan_csv, "fan step list, comma separated")->required();
  ste->add_option("--k", k_csv, "multi-index, comma separated")->required();
  ste->add_option("--algebra", algebra_spec, "builtin name or json file path");
  ste->add_option("--seed", cfg.seed, "torus point seed");
  ste->add_flag("--json", json, "machine readable output");

  int classify_n = 3;
  auto* cla = app.add_subcommand("classify", "group fans into regularity classes");
  cla->add_option("--n", classify_n, "number of imaginary units");
  cla->add_flag("--json", json, "machine readable output");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "symbolic, classify, stems, quadrature, or all");
  ver->add_option("--seed", cfg.seed, "base seed for all sampling");
  ver->add_option("--samples", cfg.samples, "monte carlo sample count");
  ver->add_option("--tolerance-sigma", cfg.tolerance_sigma, "allowance in standard errors");
  ver->add_option("--grid", cfg.grid, "grid size for maxima");
  ver->add_option("--determinism-samples", cfg.determinism_samples, "sample count inside the determinism rebuild");
  ver->add_flag("--json", json, "machine readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(alg)) return run_algebra(algebra_spec, table, json);
    if (app.got_subcommand(fue)) return run_fueter(k_csv, algebra_spec, json);
    if (app.got_subcommand(tpo)) return run_tpoly(fan_csv, k_csv, algebra_spec, json);
    if (app.got_subcommand(ste)) return run_stem(fan_csv, k_csv, algebra_spec, cfg.seed, json);
    if (app.got_subcommand(cla)) return run_classify(classify_n, json);
    if (app.got_subcommand(ver)) return run_verify(suite, cfg, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
