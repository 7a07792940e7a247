#include "primemodes/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "primemodes/abel_sums.hpp"
#include "primemodes/acceptance.hpp"
#include "primemodes/asymptotics.hpp"
#include "primemodes/casimir.hpp"
#include "primemodes/errors.hpp"
#include "primemodes/fock.hpp"
#include "primemodes/kernels.hpp"
#include "primemodes/prime_core.hpp"
#include "primemodes/special_functions.hpp"
#include "primemodes/table.hpp"

namespace primemodes::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "csv";
  std::string output;
  int threads = 0;
  std::uint64_t seed = 0;
  std::string config;
};

std::int64_t i64(std::uint64_t x) { return static_cast<std::int64_t>(x); }

// key=value lines become "--key value" unless the key was given explicitly.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") path = args[i + 1];
  }
  for (const auto& a : args) {
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
  }
  auto out = args;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config" || given.count(key)) continue;
    out.push_back("--" + key);
    out.push_back(value);
  }
  return out;
}

void write_output(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.output.empty() || g.output == "-") {
    out << text;
    if (!out) throw IoError("write to standard output failed");
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw IoError("cannot open '" + g.output + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + g.output + "' failed");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }

  Globals g;
  CLI::App app{"primemodes: prime-mode field sums, Goldbach counts, Abel asymptotics, "
               "Casimir energies and bosonization central terms"};
  app.name(args.empty() ? "primemodes" : args.front());
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", g.format, "csv | json | pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--output,-o", g.output, "write the table here instead of stdout");
  app.add_option("--threads", g.threads, "cap on worker threads (0 = all)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--config", g.config, "file of key=value lines, same keys as the flags");

  Table table;
  std::function<void()> action;
  std::string note;  // summary line for stderr

  // sieve
  std::uint64_t limit = 100;
  bool list = false;
  auto* sieve_cmd = app.add_subcommand(
      "sieve", "Segmented sieve of Eratosthenes on [2, limit] (limit <= 2^40).");
  sieve_cmd->add_option("--limit", limit, "upper bound")->required();
  sieve_cmd->add_flag("--list", list, "list the primes instead of counting them");
  sieve_cmd->callback([&] {
    action = [&] {
      if (list) {
        const auto t = sieve(limit);
        table.columns = {"index", "prime"};
        std::int64_t i = 0;
        for (auto p : t.primes()) table.add_row({++i, i64(p)});
      } else {
        table.columns = {"limit", "pi"};
        table.add_row({i64(limit), i64(kernels::count_primes(limit))});
      }
    };
  });

  // goldbach
  std::uint64_t gn = 0, gto = 0;
  std::string gmodes = "primes";
  auto* gold = app.add_subcommand(
      "goldbach",
      "Goldbach partitions r(n): pairs (p, q) in the mode set with p + q = n.\n"
      "ordered counts (p, q) and (q, p) separately; unordered = (ordered + [n/2 in set]) / 2.");
  gold->add_option("--n", gn, "even n >= 2")->required();
  gold->add_option("--to", gto, "also report every even n up to this value");
  gold->add_option("--modes", gmodes, "primes | pprime (odd primes and 1)");
  gold->callback([&] {
    action = [&] {
      const auto modes = parse_mode_set(gmodes);
      const std::uint64_t last = std::max(gn, gto);
      const auto t = sieve(std::max<std::uint64_t>(last, 2));
      table.columns = {"n", "modes", "ordered", "unordered"};
      for (std::uint64_t n = gn; n <= last; n += 2) {
        const auto c = goldbach_partitions(t, n, modes);
        table.add_row({i64(n), std::string(to_string(modes)), i64(c.ordered), i64(c.unordered)});
      }
    };
  });

  // polignac
  std::uint64_t gap = 2, plimit = 100;
  auto* pol = app.add_subcommand(
      "polignac", "Number of prime pairs (p, p + gap) with p + gap <= limit.");
  pol->add_option("--gap", gap, "even gap >= 2");
  pol->add_option("--limit", plimit, "upper bound for p + gap");
  pol->callback([&] {
    action = [&] {
      table.columns = {"gap", "limit", "count"};
      table.add_row({i64(gap), i64(plimit), i64(polignac_count(gap, plimit))});
    };
  });

  // prime-zeta
  double zs = 2.0;
  std::uint64_t zlimit = 10'000'000;
  int zk = 0;
  auto* pz = app.add_subcommand(
      "prime-zeta",
      "Prime zeta P(s) = sum_p p^{-s}, s > 1, two ways:\n"
      "  direct:  sum_{p <= limit} p^{-s}, tail <= limit^{1-s}/(s-1)\n"
      "  mobius:  sum_k mu(k)/k log zeta(k s)");
  pz->add_option("--s", zs, "exponent s > 1");
  pz->add_option("--limit", zlimit, "sieve limit for the direct sum");
  pz->add_option("--k-max", zk, "Moebius terms (0 = automatic)");
  pz->callback([&] {
    action = [&] {
      const auto d = prime_zeta_direct(zs, zlimit);
      const auto m = prime_zeta_mobius(zs, zk);
      table.columns = {"method", "s", "value", "bound"};
      table.add_row({std::string("direct"), zs, d.value, d.tail_bound});
      table.add_row({std::string("mobius"), zs, m.value, m.error_bound});
    };
  });

  // mertens
  int mk = 64;
  auto* mer = app.add_subcommand(
      "mertens", "Mertens constant B1 = gamma + sum_{k=2}^{k_max} mu(k)/k log zeta(k).");
  mer->add_option("--k-max", mk, "last term (>= 2)");
  mer->callback([&] {
    action = [&] {
      table.columns = {"k_max", "B1"};
      table.add_row({std::int64_t{mk}, mertens_constant(mk)});
    };
  });

  // abel
  std::vector<double> agrid{1e-2};
  std::string akind = "f", amodes = "primes";
  double atol = 1e-12;
  std::uint64_t amax = AbelOptions{}.max_cutoff;
  auto* abel = app.add_subcommand(
      "abel",
      "Damped prime sums with certified tails:\n"
      "  f(a) = sum_p e^{-a p}/p,  g(a) = sum_p p e^{-a p},  plain(a) = sum_p e^{-a p}\n"
      "a >= 1e-8; the cutoff N is the smallest with tail bound <= tol.");
  abel->add_option("--a", agrid, "damping values")->delimiter(',');
  abel->add_option("--kind", akind, "f | g | plain")->check(CLI::IsMember({"f", "g", "plain"}));
  abel->add_option("--modes", amodes, "primes | pprime");
  abel->add_option("--tol", atol, "absolute tail tolerance (>= 1e-13)");
  abel->add_option("--max-cutoff", amax, "largest cutoff the sieve may reach");
  abel->callback([&] {
    action = [&] {
      const auto modes = parse_mode_set(amodes);
      const AbelOptions opts{.max_cutoff = amax};
      table.columns = {"a", "kind", "modes", "value", "cutoff", "tail_bound", "terms"};
      for (double a : agrid) {
        AbelSumResult r;
        if (akind == "f") {
          r = f_abel(a, modes, atol, opts);
        } else if (akind == "g") {
          r = g_abel(a, modes, atol, opts);
        } else {
          const auto c = mode_sum_complex({a, 0.0}, modes, atol, opts);
          r = {c.value.real(), c.damping, c.cutoff, c.tail_bound, c.terms};
        }
        table.add_row({a, akind, std::string(to_string(modes)), r.value, i64(r.cutoff),
                       r.tail_bound, i64(r.terms)});
      }
    };
  });

  // asymptote
  std::vector<double> sgrid{1e-2, 1e-3, 1e-4};
  int skmax = 5;
  double stol = 1e-10;
  auto* asy = app.add_subcommand(
      "asymptote",
      "Small-a forms, L = -log a:\n"
      "  f_series = log L + B1 - sum_{k=1}^{k_max} (-1)^k Gamma^(k)(1)/k L^{-k}\n"
      "  f_integral = 1/2 log(1 + L^2) + B1 - I1,\n"
      "    I1 = Im int_0^inf e^{-i t L} (Gamma(-i t) - i e^{-t}/t) dt\n"
      "  g_series = a^{-2} sum_{k=0}^{k_max} (-1)^k Gamma^(k)(2) L^{-(k+1)}\n"
      "  F = -a^{-2} Im int_0^inf e^{-i t L} Gamma(2 - i t) dt");
  asy->add_option("--a", sgrid, "values of a in (0, 1/e)")->delimiter(',');
  asy->add_option("--k-max", skmax, "series terms (<= 12)");
  asy->add_option("--tol", stol, "quadrature tolerance");
  asy->callback([&] {
    action = [&] {
      table.columns = {"a", "f_series", "f_integral", "I1", "g_series", "F"};
      for (double a : sgrid) {
        const auto i1 = oscillatory_I1(a, stol);
        table.add_row({a, f_log_series(a, skmax), f_integral_form(a, stol).value, i1.value,
                       g_log_series(a, skmax), F_of_a(a, stol).value});
      }
    };
  });

  // residuals
  std::vector<double> rgrid{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  std::string rkind = "f", rform = "integral";
  int rkmax = 5;
  double rtol = 1e-10;
  auto* res = app.add_subcommand(
      "residuals",
      "Exact Abel sum minus an asymptotic form (residual = exact - approx).\n"
      "  kind f: f(a) vs f_integral or f_series, normalized_residual = residual / a^0.45\n"
      "  kind g: g(a) vs F(a) or g_series, normalized_residual = residual * a^1.55\n"
      "The fitted log-log decay exponent of |residual| (f) or a^2 |residual| (g) goes to stderr.");
  res->add_option("--kind", rkind, "f | g")->check(CLI::IsMember({"f", "g"}));
  res->add_option("--form", rform, "integral | series")
      ->check(CLI::IsMember({"integral", "series"}));
  res->add_option("--a", rgrid, "grid of a")->delimiter(',');
  res->add_option("--k-max", rkmax, "series terms (<= 12)");
  res->add_option("--tol", rtol, "quadrature tolerance");
  res->callback([&] {
    action = [&] {
      const auto rep =
          residual_report(rkind == "f" ? ResidualKind::F : ResidualKind::G, rgrid, rkmax, rtol);
      const auto& rows = rform == "integral" ? rep.integral_rows : rep.series_rows;
      table.columns = {"a", "exact", "approx", "residual", "normalized_residual"};
      for (const auto& r : rows) {
        table.add_row({r.a, r.exact, r.approx, r.residual, r.normalized_residual});
      }
      note = "fitted decay exponent: " +
             format_double(rform == "integral" ? rep.integral_exponent : rep.series_exponent);
    };
  });

  // casimir
  std::string cmodes = "all";
  double cR = 1.0;
  std::vector<double> ceps{1e-3};
  auto* cas = app.add_subcommand(
      "casimir",
      "Point-split vacuum energy density on a circle of radius R:\n"
      "  raw = (2 pi R)^{-1} sum_n (n/R) e^{-eps n/R}   (all: 1/(2 pi R^2 (e^{eps/2R} - "
      "e^{-eps/2R})^2))\n"
      "  renormalized = raw - c/(2 pi eps^2), c = 1 (all), 1/2 (even, odd)\n"
      "zeta_value is (1/2 pi R^2) S(-1) with S = zeta, 2^{-s} zeta, (1 - 2^{-s}) zeta.");
  cas->add_option("--modes", cmodes, "all | even | odd");
  cas->add_option("--R", cR, "radius");
  cas->add_option("--eps", ceps, "point splitting (eps/R <= 1e-2)")->delimiter(',');
  cas->callback([&] {
    action = [&] {
      const auto modes = parse_mode_set(cmodes);
      table.columns = {"modes", "R", "eps", "raw", "counterterm", "renormalized", "zeta_value"};
      for (double eps : ceps) {
        const auto r = renormalized_energy(modes, cR, eps);
        table.add_row({std::string(to_string(modes)), cR, eps, r.raw, r.counterterm,
                       r.renormalized, zeta_regularized_density(modes).value() / (cR * cR)});
      }
    };
  });

  // prime-energy
  std::string emodes = "primes";
  double eR = 1.0, etol = 1e-10;
  std::vector<double> eeps{1e-4, 1e-3, 1e-2};
  auto* pe = app.add_subcommand(
      "prime-energy",
      "Prime-mode energy density and its would-be counterterm:\n"
      "  raw = -(4 pi R^2)^{-1} g(eps/R),  counterterm = -(4 pi R^2)^{-1} F(eps/R)\n"
      "  (+ 1/(4 pi R^2) for pprime),  difference = raw - counterterm,\n"
      "  scaled_residual = (eps/R)^2 |g - F|. The difference has no eps -> 0 plateau.");
  pe->add_option("--modes", emodes, "primes | pprime");
  pe->add_option("--R", eR, "radius");
  pe->add_option("--eps", eeps, "point splitting values")->delimiter(',');
  pe->add_option("--tol", etol, "quadrature tolerance for F");
  pe->callback([&] {
    action = [&] {
      const auto rep = prime_energy_report(eR, eeps, parse_mode_set(emodes), etol);
      table.columns = {"eps", "raw", "counterterm", "difference", "scaled_residual"};
      for (const auto& r : rep.rows) {
        table.add_row({r.eps, r.raw, r.counterterm, r.difference, r.scaled_residual});
      }
      note = "scaled residual decay exponent: " + format_double(rep.scaled_residual_exponent);
    };
  });

  // twopoint
  double du = 0.0, dv = 0.0, teps = 0.1, tR = 1.0, ttol = 1e-12;
  int tn = 5000;
  bool tprime = false;
  auto* tp = app.add_subcommand(
      "twopoint",
      "Scalar two-point function on the cylinder:\n"
      "  mode sum (1/4 pi) sum_{n <= n_max} (1/n) (e^{-i n (du - i eps)/R} + e^{-i n (dv - i "
      "eps)/R})\n"
      "  closed form -(1/4 pi) log[(1 - e^{-i(du - i eps)/R})(1 - e^{-i(dv - i eps)/R})]\n"
      "With --prime: (1/2 pi R) sum_{p in P'} e^{-p (eps + i du)/R}.");
  tp->add_option("--du", du, "Delta u");
  tp->add_option("--dv", dv, "Delta v");
  tp->add_option("--eps", teps, "regulator > 0");
  tp->add_option("--R", tR, "radius");
  tp->add_option("--n-max", tn, "modes in the truncated sum");
  tp->add_option("--tol", ttol, "tail tolerance for --prime");
  tp->add_flag("--prime", tprime, "prime-mode fermion two-point function");
  tp->callback([&] {
    action = [&] {
      if (tprime) {
        const auto v = two_point_prime(du, teps, tR, ttol);
        table.columns = {"d", "eps", "R", "re", "im"};
        table.add_row({du, teps, tR, v.real(), v.imag()});
        return;
      }
      const auto s = two_point_scalar(du, dv, teps, tR, tn);
      table.columns = {"du", "dv", "eps", "R", "n_max", "mode_sum_re", "mode_sum_im",
                       "closed_re", "closed_im", "abs_diff", "bound"};
      table.add_row({s.du, s.dv, s.eps, s.R, std::int64_t{s.n_max}, s.mode_sum.real(),
                     s.mode_sum.imag(), s.closed_form.real(), s.closed_form.imag(),
                     std::abs(s.mode_sum - s.closed_form), s.bound});
    };
  });

  // commutator
  int cn = 2, cm = 0, ccut = 0, ctable = 0;
  std::string kmodes = "all";
  auto* com = app.add_subcommand(
      "commutator",
      "Central term of composite modes a_n = sgn(n) sum_r i :b1_r b2_{n-r}: (r, n - r in the "
      "mode set):\n"
      "  raw = <0|[a_n, a_m^dagger]|0>, normalized = raw / n, raw_literal = <0|[a_n, "
      "a_{-m}]|0>.\n"
      "On pprime the raw diagonal term is the ordered Goldbach count of n.");
  com->add_option("--n", cn, "n > 0");
  com->add_option("--m", cm, "m > 0 (default n)");
  com->add_option("--modes", kmodes, "all | even | odd | primes | pprime");
  com->add_option("--cutoff", ccut, "mode window (default n + m)");
  com->add_option("--table", ctable, "all n, m <= this value instead of a single cell");
  com->callback([&] {
    action = [&] {
      const auto modes = parse_mode_set(kmodes);
      table.columns = {"modes", "n", "m", "cutoff", "raw", "normalized", "raw_literal"};
      auto cell = [&](int n, int m) {
        const int cut = ccut > 0 ? ccut : n + m;
        const auto r = central_term(n, m, modes, cut);
        table.add_row({std::string(to_string(modes)), std::int64_t{n}, std::int64_t{m},
                       std::int64_t{cut}, r.raw, r.normalized, r.raw_literal});
      };
      if (ctable > 0) {
        const int step = (modes == ModeSet::AllIntegers || modes == ModeSet::PrimesP) ? 1 : 2;
        for (int n = step; n <= ctable; n += step) {
          for (int m = step; m <= ctable; m += step) cell(n, m);
        }
      } else {
        cell(cn, cm > 0 ? cm : cn);
      }
    };
  });

  // states
  std::uint64_t sn = 10;
  int sparts = 2;
  std::string smodes = "primes";
  auto* st = app.add_subcommand(
      "states",
      "Multi-prime Fock states: multisets {p_1 <= ... <= p_k} from the mode set with sum n,\n"
      "normalization 1/sqrt(prod multiplicity!).");
  st->add_option("--n", sn, "total mode number");
  st->add_option("--parts", sparts, "number of particles");
  st->add_option("--modes", smodes, "mode set");
  st->callback([&] {
    action = [&] {
      table.columns = {"n", "state", "normalization"};
      for (const auto& s : enumerate_prime_states(sn, sparts, parse_mode_set(smodes))) {
        std::string text;
        for (std::size_t i = 0; i < s.size(); ++i) text += (i ? "+" : "") + std::to_string(s[i]);
        table.add_row({i64(sn), text, normalization_factor(s)});
      }
    };
  });

  // report
  std::vector<int> only;
  bool any_failed = false;
  auto* rep = app.add_subcommand(
      "report", "Run the acceptance suite; one PASS/FAIL row per criterion. Exit 1 if any fail.");
  rep->add_option("--only", only, "criterion ids")->delimiter(',');
  rep->callback([&] {
    action = [&] {
      AcceptanceOptions opt;
      opt.seed = g.seed;
      opt.only.insert(only.begin(), only.end());
      table.columns = {"id", "criterion", "status", "seconds", "budget", "detail"};
      for (const auto& r : run_acceptance(opt)) {
        any_failed = any_failed || !r.passed;
        table.add_row({std::int64_t{r.id}, r.name, std::string(r.passed ? "PASS" : "FAIL"),
                       r.seconds, r.budget_seconds, r.detail});
      }
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("primemodes");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    kernels::set_thread_count(g.threads);
    const Format format = parse_format(g.format);
    action();
    write_output(g, emit(table, format), out);
    if (!note.empty()) err << note << '\n';
    return any_failed ? kExitCompute : kExitOk;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n  best achievable tail bound "
        << format_double(e.best_bound()) << " at cutoff " << e.max_cutoff() << '\n';
    return kExitCompute;
  } catch (const QuadratureError& e) {
    err << "quadrature error: " << e.what() << "\n  error estimate "
        << format_double(e.error_estimate()) << '\n';
    return kExitCompute;
  } catch (const CutoffError& e) {
    err << "cutoff error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace primemodes::cli
