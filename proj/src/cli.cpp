#include "physkit/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "physkit/demos.hpp"
#include "physkit/divsum.hpp"
#include "physkit/finhilb.hpp"
#include "physkit/greens.hpp"
#include "physkit/harmonic.hpp"
#include "physkit/specfun.hpp"

namespace physkit::cli {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int require_int(double v, const std::string& what) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9)
    throw std::invalid_argument(what + " must be an integer");
  return static_cast<int>(r);
}

struct EvalFn {
  int arity;
  std::string signature;
  std::function<double(const std::vector<double>&)> call;
};

const std::map<std::string, EvalFn>& eval_registry() {
  using namespace physkit;
  static const std::map<std::string, EvalFn> reg = {
      {"pochhammer",
       {2, "pochhammer a n",
        [](const std::vector<double>& a) {
          return specfun::pochhammer(a[0], require_int(a[1], "n"));
        }}},
      {"gamma",
       {1, "gamma x",
        [](const std::vector<double>& a) { return specfun::gamma_real(a[0]); }}},
      {"beta",
       {2, "beta x y",
        [](const std::vector<double>& a) { return specfun::beta(a[0], a[1]); }}},
      {"hyp-2f1",
       {4, "hyp-2f1 a b c x",
        [](const std::vector<double>& a) {
          return specfun::hyp_2f1(a[0], a[1], a[2], a[3]);
        }}},
      {"legendre-p",
       {3, "legendre-p l m x",
        [](const std::vector<double>& a) {
          return specfun::legendre_p(require_int(a[0], "l"),
                                     require_int(a[1], "m"), a[2]);
        }}},
      {"ylm-re",
       {4, "ylm-re l m theta phi",
        [](const std::vector<double>& a) {
          return specfun::spherical_harmonic(require_int(a[0], "l"),
                                             require_int(a[1], "m"), a[2],
                                             a[3])
              .real();
        }}},
      {"ylm-im",
       {4, "ylm-im l m theta phi",
        [](const std::vector<double>& a) {
          return specfun::spherical_harmonic(require_int(a[0], "l"),
                                             require_int(a[1], "m"), a[2],
                                             a[3])
              .imag();
        }}},
      {"chebyshev-t",
       {2, "chebyshev-t n x",
        [](const std::vector<double>& a) {
          return specfun::classical_polynomial(specfun::PolyKind::chebyshev1,
                                               require_int(a[0], "n"), 0.0,
                                               a[1]);
        }}},
      {"laguerre",
       {2, "laguerre n x",
        [](const std::vector<double>& a) {
          return specfun::classical_polynomial(specfun::PolyKind::laguerre,
                                               require_int(a[0], "n"), 0.0,
                                               a[1]);
        }}},
      {"hermite",
       {2, "hermite n x",
        [](const std::vector<double>& a) {
          return specfun::classical_polynomial(specfun::PolyKind::hermite,
                                               require_int(a[0], "n"), 0.0,
                                               a[1]);
        }}},
      {"stieltjes-euler",
       {1, "stieltjes-euler x",
        [](const std::vector<double>& a) {
          return divsum::stieltjes_euler(a[0]);
        }}},
      {"beam-deflection",
       {4, "beam-deflection c L x J",
        [](const std::vector<double>& a) {
          return greens::beam_deflection(a[0], a[1], a[2],
                                         require_int(a[3], "J"));
        }}},
      {"singlet-correlation",
       {4, "singlet-correlation theta1 phi1 theta2 phi2",
        [](const std::vector<double>& a) {
          return finhilb::singlet_correlation(a[0], a[1], a[2], a[3]);
        }}},
  };
  return reg;
}

void print_records(const std::vector<physkit::demos::DemoRecord>& recs,
                   std::ostream& out) {
  for (const auto& r : recs) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name
        << "  computed=" << fmt17(r.computed)
        << " expected=" << fmt17(r.expected) << " tol=" << fmt17(r.tol)
        << (r.relative ? " (rel)" : " (abs)") << "  [" << r.anchor << "]\n";
  }
}

int cmd_demo(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  if (args.empty()) {
    err << "usage: physkit demo <name|all> [--key value ...]\n";
    return 2;
  }
  std::string name = args[0];
  physkit::demos::Options opts;
  for (size_t i = 1; i < args.size(); i += 2) {
    const std::string& key = args[i];
    if (key.rfind("--", 0) != 0 || i + 1 >= args.size()) {
      err << "demo: options are --key value pairs\n";
      return 2;
    }
    opts[key.substr(2)] = args[i + 1];
  }

  std::vector<std::string> names;
  if (name == "all") {
    names = physkit::demos::demo_names();
  } else if (physkit::demos::has_demo(name)) {
    names = {name};
  } else {
    err << "unknown demo '" << name << "'\n";
    return 2;
  }
  bool all_pass = true;
  for (const std::string& n : names) {
    std::string emitted;
    auto recs = physkit::demos::run_demo(n, opts, &emitted);
    print_records(recs, out);
    if (!emitted.empty()) out << emitted;
    for (const auto& r : recs) all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_eval(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  if (args.empty()) {
    err << "usage: physkit eval <fn> <args...>\n";
    return 2;
  }
  auto it = eval_registry().find(args[0]);
  if (it == eval_registry().end()) {
    err << "unknown function '" << args[0] << "'\n";
    return 2;
  }
  const EvalFn& fn = it->second;
  if (static_cast<int>(args.size()) - 1 != fn.arity) {
    err << "usage: physkit eval " << fn.signature << "\n";
    return 2;
  }
  std::vector<double> vals;
  try {
    for (size_t i = 1; i < args.size(); ++i) vals.push_back(std::stod(args[i]));
  } catch (const std::exception&) {
    err << "eval: arguments must be numeric\n";
    return 2;
  }
  try {
    out << fmt17(fn.call(vals)) << "\n";
  } catch (const std::exception& e) {
    err << "eval: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_table(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].rfind("--", 0) == 0) {
      if (i + 1 >= args.size()) {
        err << "table: flag " << args[i] << " needs a value\n";
        return 2;
      }
      flags[args[i].substr(2)] = args[i + 1];
      ++i;
    } else {
      positional.push_back(args[i]);
    }
  }
  if (positional.empty()) {
    err << "usage: physkit table <fn> [fixed args...] --from F --to T --steps "
           "N [--out FILE]\n";
    return 2;
  }
  if (positional[0] == "fourier-series") {
    // table fourier-series --f abs --L 6.2831853 --K 25 [--out csv|FILE]
    std::string fname = flags.count("f") ? flags["f"] : "abs";
    double L;
    int K;
    try {
      L = std::stod(flags.count("L") ? flags["L"] : "6.283185307179586");
      K = std::stoi(flags.count("K") ? flags["K"] : "25");
    } catch (const std::exception&) {
      err << "table fourier-series: --L and --K must be numeric\n";
      return 2;
    }
    std::function<double(double)> f;
    std::vector<double> kinks;
    if (fname == "abs") {
      f = [](double x) { return std::abs(x); };
      kinks = {0.0};
    } else if (fname == "sin") {
      f = [L](double x) { return std::sin(2.0 * M_PI * x / L); };
    } else {
      err << "table fourier-series: --f is 'abs' or 'sin'\n";
      return 2;
    }
    auto fs = physkit::harmonic::fourier_series_coeffs(f, L, K, kinks);
    std::ostringstream csv;
    csv << "k,a_k,b_k\n";
    for (int k = 0; k <= K; ++k)
      csv << k << "," << fmt17(fs.a[k]) << "," << fmt17(fs.b[k]) << "\n";
    if (flags.count("out") && flags["out"] != "csv") {
      std::ofstream fo(flags["out"]);
      if (!fo) {
        err << "table: cannot open '" << flags["out"] << "' for writing\n";
        return 3;
      }
      fo << csv.str();
      if (!fo.good()) {
        err << "table: write failed\n";
        return 3;
      }
    } else {
      out << csv.str();
    }
    return 0;
  }
  auto it = eval_registry().find(positional[0]);
  if (it == eval_registry().end()) {
    err << "unknown function '" << positional[0] << "'\n";
    return 2;
  }
  const EvalFn& fn = it->second;
  if (!flags.count("from") || !flags.count("to") || !flags.count("steps")) {
    err << "table: --from, --to and --steps are required\n";
    return 2;
  }
  double from, to;
  int steps;
  try {
    from = std::stod(flags["from"]);
    to = std::stod(flags["to"]);
    steps = std::stoi(flags["steps"]);
  } catch (const std::exception&) {
    err << "table: --from/--to/--steps must be numeric\n";
    return 2;
  }
  if (!(from < to) || steps < 2) {
    err << "table: need from < to and steps >= 2\n";
    return 2;
  }
  std::vector<double> fixed;
  try {
    for (size_t i = 1; i < positional.size(); ++i)
      fixed.push_back(std::stod(positional[i]));
  } catch (const std::exception&) {
    err << "table: fixed arguments must be numeric\n";
    return 2;
  }
  if (static_cast<int>(fixed.size()) + 1 != fn.arity) {
    err << "table: " << fn.signature << " needs " << fn.arity - 1
        << " fixed arguments before the grid variable\n";
    return 2;
  }

  std::ostringstream csv;
  csv << "x," << positional[0] << "\n";
  for (int i = 0; i < steps; ++i) {
    double x = from + (to - from) * i / (steps - 1.0);
    std::vector<double> a = fixed;
    a.push_back(x);
    double v;
    try {
      v = fn.call(a);
    } catch (const std::exception& e) {
      err << "table: " << e.what() << "\n";
      return 2;
    }
    csv << fmt17(x) << "," << fmt17(v) << "\n";
  }
  if (flags.count("out")) {
    std::ofstream f(flags["out"]);
    if (!f) {
      err << "table: cannot open '" << flags["out"] << "' for writing\n";
      return 3;
    }
    f << csv.str();
    if (!f.good()) {
      err << "table: write failed\n";
      return 3;
    }
  } else {
    out << csv.str();
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  if (args.empty()) {
    err << "usage: physkit <demo|eval|table|list> ...\n";
    return 2;
  }
  const std::string& cmd = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (cmd == "demo") return cmd_demo(rest, out, err);
    if (cmd == "eval") return cmd_eval(rest, out, err);
    if (cmd == "table") return cmd_table(rest, out, err);
    if (cmd == "list") {
      out << "demos:\n";
      for (const auto& n : physkit::demos::demo_names()) out << "  " << n << "\n";
      out << "functions:\n";
      for (const auto& [k, v] : eval_registry())
        out << "  " << v.signature << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << cmd << ": " << e.what() << "\n";
    return 2;
  }
  err << "unknown command '" << cmd << "'\n";
  return 2;
}

}  // namespace physkit::cli
