#include "qaseries/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "qaseries/errors.hpp"
#include "qaseries/expr.hpp"
#include "qaseries/io.hpp"
#include "qaseries/local_ring.hpp"
#include "qaseries/pipelines.hpp"
#include "qaseries/weierstrass.hpp"

namespace qaseries::cli {

namespace {

using nlohmann::json;

// Usage problem detected after flag parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::size_t nvars = 2;
  unsigned trunc = 8;
  std::size_t var = 0;  // 0: last variable
  std::optional<std::string> expr;
  std::optional<std::string> f_expr;
  std::optional<std::string> g_expr;
  std::optional<std::string> coeffs;
  bool json = false;
};

// Collects "name = value" lines or one JSON document.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json, std::string command)
      : out_(out), json_(json) {
    doc_["command"] = std::move(command);
  }

  void series(const std::string& name, const Series& s) {
    if (json_) {
      doc_[name] = to_json(s);
    } else {
      out_ << name << " = " << to_string(s) << '\n';
    }
  }

  template <typename T>
  void value(const std::string& name, const T& v, json structured) {
    if (json_) {
      doc_[name] = std::move(structured);
    } else {
      out_ << name << " = " << v << '\n';
    }
  }

  // Pass/fail lines read "name: PASS" in text mode.
  void verdict(const std::string& name, bool passes, json structured) {
    if (json_) {
      doc_[name] = std::move(structured);
    } else {
      out_ << name << ": " << (passes ? "PASS" : "FAIL") << '\n';
    }
  }

  void value(const std::string& name, long long v) {
    value(name, v, json(v));
  }

  void line(const std::string& text) {
    if (!json_) out_ << text << '\n';
  }

  json& doc() { return doc_; }

  void finish() {
    if (json_) out_ << doc_.dump(2) << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
  json doc_;
};

const std::string& require(const std::optional<std::string>& value,
                           const char* flag, const char* command) {
  if (!value) {
    throw UsageError(std::string(command) + " requires " + flag);
  }
  return *value;
}

RunConfig config_from(const Options& opt, std::size_t nvars) {
  RunConfig config;
  config.nvars = nvars;
  config.trunc = opt.trunc;
  config.var = opt.var == 0 ? nvars : opt.var;
  config.mode = opt.json ? RunConfig::OutputMode::kJson
                         : RunConfig::OutputMode::kText;
  if (config.var < 1 || config.var > nvars) {
    throw UsageError("--var " + std::to_string(config.var) +
                     " out of range 1.." + std::to_string(nvars));
  }
  return config;
}

Series read(const std::string& text, const RunConfig& config) {
  return eval_expr(parse_expr(text, config.nvars), config);
}

void require_pipeline_trunc(const RunConfig& config) {
  if (config.trunc < 4) {
    throw UsageError("--trunc must be >= 4 for this command");
  }
}

std::string expo_text(const Expo& e) {
  return e.is_zero() ? std::string("1") : monomial_to_string(e);
}

int cmd_prepare(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, opt.nvars);
  const Series f = read(require(opt.expr, "-e", "prepare"), config);
  const PreparationResult prep = weierstrass_prepare(f, config.var);
  if (opt.json) {
    em.doc()["result"] = to_json(prep);
    return kOk;
  }
  em.series("U", prep.unit);
  em.series("P", expand(prep.poly));
  em.value("d", prep.poly.d);
  em.value("k", static_cast<long long>(prep.poly.k));
  for (unsigned i = 1; i <= prep.poly.d; ++i) {
    em.series("a" + std::to_string(i), prep.poly.coeff_embedded(i));
  }
  em.value("guaranteed_degree", prep.guaranteed_degree);
  return kOk;
}

int cmd_divide(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, opt.nvars);
  const Series g = read(require(opt.g_expr, "-g", "divide"), config);
  const Series f = read(require(opt.f_expr, "-f", "divide"), config);
  const DivisionResult div = weierstrass_divide(g, f, config.var);
  if (opt.json) {
    em.doc()["result"] = to_json(div);
    return kOk;
  }
  em.series("q", div.quotient);
  em.series("r", div.remainder);
  em.value("d", div.d);
  em.value("guaranteed_degree", div.guaranteed_degree);
  return kOk;
}

int cmd_implicit(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, opt.nvars);
  const Series f = read(require(opt.expr, "-e", "implicit"), config);
  const Series phi = implicit_solve(f, config.var);
  json original = json::array();
  std::string names;
  for (std::size_t i = 1; i <= config.nvars; ++i) {
    if (i == config.var) continue;
    original.push_back(i);
    if (!names.empty()) names += ' ';
    names += "x" + std::to_string(i);
  }
  em.series("phi", phi);
  em.value("phi_variables", names.empty() ? std::string("(none)") : names,
           std::move(original));
  return kOk;
}

int cmd_split(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, opt.nvars);
  const Series f = read(require(opt.expr, "-e", "split"), config);
  const EvenOddParts parts = even_odd_split(f, config.var);
  em.series("g0", parts.even);
  em.series("g1", parts.odd);
  return kOk;
}

int cmd_lemma(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, opt.nvars);
  require_pipeline_trunc(config);
  const Series f = read(require(opt.expr, "-e", "lemma"), config);
  const LemmaResult lemma = lemma_split(f, config.var);
  em.series("f0", lemma.f0);
  em.series("f1", lemma.f1);
  em.value("guaranteed_degree", lemma.guaranteed_degree);
  return kOk;
}

Series read_h(const Options& opt, const RunConfig& config) {
  if (opt.expr && opt.coeffs) {
    throw UsageError("holo takes either -e or --coeffs, not both");
  }
  if (opt.expr) return read(*opt.expr, config);
  const std::string& list = require(opt.coeffs, "-e or --coeffs", "holo");
  Series::TermMap terms;
  std::stringstream stream(list);
  std::string item;
  unsigned power = 0;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw UsageError("--coeffs: empty entry at position " +
                       std::to_string(power));
    }
    terms.emplace(Expo{power}, parse_coeff(item.substr(first, last - first + 1)));
    ++power;
  }
  return Series(1, config.trunc, std::move(terms),
                static_cast<Degree>(config.trunc));
}

int cmd_holo(const Options& opt, Emitter& em) {
  RunConfig config = config_from(opt, 1);
  require_pipeline_trunc(config);
  const Series h = read_h(opt, config);
  const NormalizedH norm = normalize_h(h);
  const HoloPair pair = holomorphic_extension(norm.normalized);
  const CauchyRiemannResidual cr = cauchy_riemann_check(pair);
  em.series("q", norm.correction);
  em.series("h", norm.normalized);
  em.series("u", pair.u);
  em.series("v", pair.v);
  em.value("guaranteed_degree", pair.guaranteed_degree);
  em.verdict("CR", cr.passes, to_json(cr));
  if (!cr.passes) {
    throw InvariantError("holomorphic extension failed the Cauchy-Riemann check");
  }
  return kOk;
}

int cmd_cr_check(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, 2);
  const Series u = read(require(opt.f_expr, "-f (real part u)", "cr-check"), config);
  const Series v = read(require(opt.g_expr, "-g (imaginary part v)", "cr-check"), config);
  const HoloPair pair{u, v, std::min(u.guaranteed_degree(), v.guaranteed_degree())};
  const CauchyRiemannResidual cr = cauchy_riemann_check(pair);
  em.series("residual1", cr.du_dx1_minus_dv_dx2);
  em.series("residual2", cr.du_dx2_plus_dv_dx1);
  em.verdict("CR", cr.passes, json(cr.passes));
  return kOk;
}

int cmd_semigroup(const Options& opt, Emitter& em) {
  const RunConfig config = config_from(opt, opt.nvars);
  const Series f = read(require(opt.expr, "-e", "semigroup"), config);
  const PreparationResult prep = weierstrass_prepare(f, config.var);
  const SemigroupReport report =
      semigroup_check(prep.poly, f, prep.guaranteed_degree);
  em.series("P", expand(prep.poly));
  if (opt.json) {
    em.doc()["report"] = to_json(report);
  } else {
    std::string gens;
    for (const auto& g : report.generators) {
      if (!gens.empty()) gens += ", ";
      gens += expo_text(g);
    }
    em.line("generators = " + gens);
    for (const auto& entry : report.checked) {
      std::string text = "check " + expo_text(entry.target) + ": ";
      if (entry.member) {
        std::string sum;
        for (const auto& w : entry.witness) {
          if (!sum.empty()) sum += " + ";
          sum += expo_text(w);
        }
        text += "member = " + sum;
      } else {
        text += "NOT a member";
      }
      em.line(text);
    }
    em.line("members = " + std::to_string(report.member_count()) + "/" +
            std::to_string(report.checked.size()));
  }
  return kOk;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Truncated formal power series: Weierstrass division and "
               "preparation, implicit functions, even/odd decomposition and "
               "holomorphic extension."};
  app.name("qaseries");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--vars", opt.nvars, "number of variables")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  app.add_option("--trunc", opt.trunc, "truncation degree N");
  app.add_option("--var", opt.var,
                 "distinguished / solved variable k (default: last)");
  app.add_option("-e", opt.expr, "input series expression");
  app.add_option("-f", opt.f_expr,
                 "divisor (divide) or real part u (cr-check)");
  app.add_option("-g", opt.g_expr,
                 "dividend (divide) or imaginary part v (cr-check)");
  app.add_option("--coeffs", opt.coeffs,
                 "holo: comma-separated coefficients h0,h1,h2,...");
  app.add_flag("--json", opt.json, "structured output");

  using Handler = std::function<int(const Options&, Emitter&)>;
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"prepare", "Weierstrass preparation f = U*P in x_k", cmd_prepare},
      {"divide", "Weierstrass division g = q*f + r in x_k", cmd_divide},
      {"implicit",
       "solve f(x', x_k) = 0 for x_k; the solution's variables are the "
       "remaining ones renumbered consecutively (see phi_variables)",
       cmd_implicit},
      {"split", "even/odd parts of f in x_k", cmd_split},
      {"lemma", "f = f0(x', x_k^2) + x_k f1(x', x_k^2)", cmd_lemma},
      {"holo",
       "holomorphic extension of a one-variable h (normalized "
       "automatically) with Cauchy-Riemann check",
       cmd_holo},
      {"cr-check", "Cauchy-Riemann residuals of u (-f) and v (-g) in x1, x2",
       cmd_cr_check},
      {"semigroup",
       "prepare f in x_k and test supp(P) against the semigroup generated "
       "by supp(f)",
       cmd_semigroup},
  };
  for (const auto& [name, help, handler] : commands) {
    app.add_subcommand(name, help);
  }

  std::vector<const char*> argv{"qaseries"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  for (const auto& [name, help, handler] : commands) {
    if (name != chosen->get_name()) continue;
    Emitter em(out, opt.json, name);
    try {
      const int code = handler(opt, em);
      em.finish();
      return code;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return kUsage;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << '\n';
      return kUsage;
    } catch (const PreconditionError& e) {
      err << "precondition violated: " << e.what() << '\n';
      return kPrecondition;
    } catch (const InvariantError& e) {
      em.finish();
      err << "internal invariant breached: " << e.what() << '\n';
      return kInternal;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    }
  }
  err << "unknown command\n";
  return kUsage;
}

}  // namespace qaseries::cli
