// ximon: command-line front end for the xi evaluation library.
//
// Subcommands:
//   eval      evaluate xi at a single point
//   scan      sample log|xi| along a horizontal half-line and check
//             that it is monotone in the scan direction
//   hadamard  compare a truncated zero product against the direct value
//   bconst    report the product constant B and its partial-sum deficit
//   cond      check the derivative positivity condition at a point
//   zeros     compute critical-line zero ordinates, or validate a table
//
// Output is deterministic: doubles are printed with %.15g in csv and
// human formats, and JSON serialization is handled by nlohmann::json.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ximon/hadamard.hpp"
#include "ximon/monotone.hpp"
#include "ximon/xi.hpp"
#include "ximon/zeros.hpp"

#ifndef XIMON_BUNDLED_ZEROS_PATH
#define XIMON_BUNDLED_ZEROS_PATH "data/zeta_zeros_10k.txt"
#endif

namespace {

using nlohmann::ordered_json;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// Resolution order for the zero table: --zeros, then the XI_ZEROS_PATH
// environment variable, then the path compiled in at build time.
ximon::ZeroTable open_zero_table(const std::string& cli_path) {
  std::string path = cli_path;
  if (path.empty()) {
    const char* env = std::getenv("XI_ZEROS_PATH");
    if (env != nullptr && *env != '\0') path = env;
  }
  if (path.empty()) path = XIMON_BUNDLED_ZEROS_PATH;
  std::ifstream in(path);
  if (!in) throw ximon::ParseError("cannot open zero table: " + path);
  return ximon::load_zero_table(in, path);
}

enum class Format { human, csv, json };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return Format::human;
}

void emit_json(const ordered_json& doc) {
  std::fputs(doc.dump(2).c_str(), stdout);
  std::fputs("\n", stdout);
}

int run_eval(Format fmt, double re, double im) {
  const ximon::XiValue v = ximon::xi({re, im});
  switch (fmt) {
    case Format::csv:
      std::fputs("log_abs_xi,phase,value_re,value_im,representable\n", stdout);
      std::printf("%s,%s,%s,%s,%s\n", num(v.log_modulus).c_str(),
                  num(v.phase).c_str(), num(v.value.real()).c_str(),
                  num(v.value.imag()).c_str(),
                  v.representable ? "true" : "false");
      break;
    case Format::json: {
      ordered_json doc;
      doc["s"] = {{"re", re}, {"im", im}};
      doc["log_abs_xi"] = v.log_modulus;
      doc["phase"] = v.phase;
      doc["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
      doc["representable"] = v.representable;
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("s=(%s, %s)\n", num(re).c_str(), num(im).c_str());
      std::printf("log_abs_xi=%s\n", num(v.log_modulus).c_str());
      std::printf("phase=%s\n", num(v.phase).c_str());
      std::printf("value=(%s, %s)\n", num(v.value.real()).c_str(),
                  num(v.value.imag()).c_str());
      std::printf("representable=%s\n", v.representable ? "true" : "false");
      break;
  }
  return 0;
}

int emit_scan(Format fmt, const ximon::ScanReport& rep, bool probe) {
  const char* dir = rep.spec.direction == ximon::Direction::rightward
                        ? "rightward"
                        : "leftward";
  const char* note =
      "a reported violation at double precision is far more likely "
      "roundoff in the samples than a genuine decrease";
  switch (fmt) {
    case Format::csv:
      std::fputs("sigma,log_abs_xi\n", stdout);
      for (const ximon::ScanSample& s : rep.samples)
        std::printf("%s,%s\n", num(s.sigma).c_str(),
                    num(s.log_abs_xi).c_str());
      std::printf("# monotone=%s\n", rep.monotone ? "true" : "false");
      for (const ximon::ScanViolation& v : rep.violations)
        std::printf("# violation sigma_lo=%s sigma_hi=%s delta=%s\n",
                    num(v.sigma_lo).c_str(), num(v.sigma_hi).c_str(),
                    num(v.delta).c_str());
      break;
    case Format::json: {
      ordered_json doc;
      doc["t0"] = rep.spec.t0;
      doc["sigma_start"] = rep.spec.sigma_start;
      doc["sigma_end"] = rep.spec.sigma_end;
      doc["step"] = rep.spec.step;
      doc["direction"] = dir;
      doc["rh_probe"] = probe;
      ordered_json samples = ordered_json::array();
      for (const ximon::ScanSample& s : rep.samples)
        samples.push_back({{"sigma", s.sigma}, {"log_abs_xi", s.log_abs_xi}});
      doc["samples"] = std::move(samples);
      doc["monotone"] = rep.monotone;
      ordered_json violations = ordered_json::array();
      for (const ximon::ScanViolation& v : rep.violations)
        violations.push_back({{"sigma_lo", v.sigma_lo},
                              {"sigma_hi", v.sigma_hi},
                              {"delta", v.delta}});
      doc["violations"] = std::move(violations);
      if (probe && !rep.monotone) doc["note"] = note;
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("scan t0=%s sigma=[%s, %s] step=%s direction=%s\n",
                  num(rep.spec.t0).c_str(), num(rep.spec.sigma_start).c_str(),
                  num(rep.spec.sigma_end).c_str(), num(rep.spec.step).c_str(),
                  dir);
      std::printf("samples=%zu\n", rep.samples.size());
      std::printf("monotone=%s\n", rep.monotone ? "true" : "false");
      for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
        const ximon::ScanViolation& v = rep.violations[i];
        std::printf("violation: sigma=[%s, %s] delta=%s\n",
                    num(v.sigma_lo).c_str(), num(v.sigma_hi).c_str(),
                    num(v.delta).c_str());
      }
      if (rep.violations.size() > 10)
        std::printf("(%zu further violations suppressed)\n",
                    rep.violations.size() - 10);
      if (probe && !rep.monotone) std::printf("note: %s\n", note);
      break;
  }
  return rep.monotone ? 0 : 1;
}

// Relative difference |a/b - 1| computed from log-polar parts, so it stays
// meaningful when the magnitudes are far outside double range.
double rel_error_logpolar(const ximon::XiValue& a, const ximon::XiValue& b) {
  if (std::isinf(a.log_modulus) && std::isinf(b.log_modulus)) return 0.0;
  const double dlog = a.log_modulus - b.log_modulus;
  const double dphase = std::remainder(a.phase - b.phase, 2.0 * ximon::pi_const);
  return std::abs(std::polar(std::exp(dlog), dphase) - 1.0);
}

int run_hadamard(Format fmt, const ximon::ZeroTable& table, double re,
                 double im, std::size_t n, const std::string& mode_name) {
  const ximon::TruncationMode mode = mode_name == "paired"
                                         ? ximon::TruncationMode::paired
                                         : ximon::TruncationMode::regrouped;
  const ximon::Complex s(re, im);
  const ximon::XiValue truncated = ximon::truncated_xi(s, table, {n, mode});
  const ximon::XiValue direct = ximon::xi(s);
  const double rel = rel_error_logpolar(truncated, direct);
  switch (fmt) {
    case Format::csv:
      std::fputs(
          "n,mode,trunc_log_abs,trunc_phase,direct_log_abs,direct_phase,"
          "rel_error\n",
          stdout);
      std::printf("%zu,%s,%s,%s,%s,%s,%s\n", n, mode_name.c_str(),
                  num(truncated.log_modulus).c_str(),
                  num(truncated.phase).c_str(),
                  num(direct.log_modulus).c_str(), num(direct.phase).c_str(),
                  num(rel).c_str());
      break;
    case Format::json: {
      ordered_json doc;
      doc["s"] = {{"re", re}, {"im", im}};
      doc["n"] = n;
      doc["mode"] = mode_name;
      doc["truncated"] = {{"log_abs", truncated.log_modulus},
                          {"phase", truncated.phase}};
      doc["direct"] = {{"log_abs", direct.log_modulus},
                       {"phase", direct.phase}};
      doc["rel_error"] = rel;
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("s=(%s, %s) n=%zu mode=%s\n", num(re).c_str(),
                  num(im).c_str(), n, mode_name.c_str());
      std::printf("truncated: log_abs=%s phase=%s\n",
                  num(truncated.log_modulus).c_str(),
                  num(truncated.phase).c_str());
      std::printf("direct:    log_abs=%s phase=%s\n",
                  num(direct.log_modulus).c_str(), num(direct.phase).c_str());
      std::printf("rel_error=%s\n", num(rel).c_str());
      break;
  }
  return 0;
}

int run_bconst(Format fmt, const std::string& zeros_path, std::size_t n) {
  const double b = ximon::b_closed_form();
  double s_n = 0.0;
  if (n > 0) {
    const ximon::ZeroTable table = open_zero_table(zeros_path);
    s_n = ximon::partial_sum_S(table, n);
  }
  const double deficit = -(b + s_n);
  switch (fmt) {
    case Format::csv:
      std::fputs("n,b,s_n,deficit\n", stdout);
      std::printf("%zu,%s,%s,%s\n", n, num(b).c_str(), num(s_n).c_str(),
                  num(deficit).c_str());
      break;
    case Format::json: {
      ordered_json doc;
      doc["n"] = n;
      doc["b"] = b;
      doc["s_n"] = s_n;
      doc["deficit"] = deficit;
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("n=%zu\n", n);
      std::printf("b=%s\n", num(b).c_str());
      std::printf("s_n=%s\n", num(s_n).c_str());
      std::printf("deficit=%s\n", num(deficit).c_str());
      break;
  }
  return 0;
}

int emit_cond(Format fmt, const ximon::ConditionReport& rep,
              bool from_search) {
  switch (fmt) {
    case Format::csv:
      std::fputs("sigma,t0,n,lhs,rhs,holds\n", stdout);
      std::printf("%s,%s,%zu,%s,%s,%s\n", num(rep.sigma).c_str(),
                  num(rep.t0).c_str(), rep.n, num(rep.lhs).c_str(),
                  num(rep.rhs).c_str(), rep.holds ? "true" : "false");
      break;
    case Format::json: {
      ordered_json doc;
      doc["sigma"] = rep.sigma;
      doc["t0"] = rep.t0;
      doc["n"] = rep.n;
      doc["lhs"] = rep.lhs;
      doc["rhs"] = rep.rhs;
      doc["holds"] = rep.holds;
      if (from_search) doc["minimal_n"] = rep.n;
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("sigma=%s t0=%s n=%zu\n", num(rep.sigma).c_str(),
                  num(rep.t0).c_str(), rep.n);
      if (from_search) std::printf("minimal_n=%zu\n", rep.n);
      std::printf("lhs=%s\n", num(rep.lhs).c_str());
      std::printf("rhs=%s\n", num(rep.rhs).c_str());
      std::printf("holds=%s\n", rep.holds ? "true" : "false");
      break;
  }
  return rep.holds ? 0 : 1;
}

int run_zeros_compute(Format fmt, double tmax, std::size_t limit) {
  ximon::ZeroTable table;
  try {
    table = ximon::find_zeros_on_critical_line(tmax, limit);
  } catch (const ximon::NoZerosError& e) {
    std::fprintf(stderr, "warning: %s\n", e.what());
    table.source = "computed: critical-line sign scan, bisection to 1e-9";
  }
  switch (fmt) {
    case Format::csv:
      std::fputs("index,gamma\n", stdout);
      for (std::size_t i = 0; i < table.zeros.size(); ++i)
        std::printf("%zu,%s\n", i + 1, num(table.zeros[i].gamma).c_str());
      break;
    case Format::json: {
      ordered_json doc;
      doc["count"] = table.zeros.size();
      doc["source"] = table.source;
      ordered_json zeros = ordered_json::array();
      for (const ximon::ZetaZero& z : table.zeros) zeros.push_back(z.gamma);
      doc["zeros"] = std::move(zeros);
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("count=%zu\n", table.zeros.size());
      for (std::size_t i = 0; i < table.zeros.size(); ++i)
        std::printf("%6zu  %s\n", i + 1, num(table.zeros[i].gamma).c_str());
      break;
  }
  return 0;
}

int run_zeros_validate(Format fmt, const std::string& zeros_path,
                       double tmax) {
  const ximon::ZeroTable table = open_zero_table(zeros_path);
  std::size_t expected = 0;
  while (expected < table.zeros.size() &&
         table.zeros[expected].gamma <= tmax)
    ++expected;
  if (expected == 0)
    throw std::invalid_argument("zeros --validate: table has no entries at "
                                "or below tmax");
  const ximon::ZeroTable computed =
      ximon::find_zeros_on_critical_line(tmax, expected + 8);

  const std::size_t common = std::min(expected, computed.zeros.size());
  double max_diff = 0.0;
  std::size_t first_bad = 0;
  for (std::size_t i = 0; i < common; ++i) {
    const double d =
        std::abs(computed.zeros[i].gamma - table.zeros[i].gamma);
    if (d > max_diff) max_diff = d;
    if (first_bad == 0 && d > 1e-6) first_bad = i + 1;
  }
  const bool count_ok = computed.zeros.size() == expected;
  const bool ok = count_ok && first_bad == 0;

  switch (fmt) {
    case Format::csv:
      std::fputs("index,table_gamma,computed_gamma,abs_diff\n", stdout);
      for (std::size_t i = 0; i < common; ++i)
        std::printf("%zu,%s,%s,%s\n", i + 1,
                    num(table.zeros[i].gamma).c_str(),
                    num(computed.zeros[i].gamma).c_str(),
                    num(std::abs(computed.zeros[i].gamma -
                                 table.zeros[i].gamma))
                        .c_str());
      std::printf("# ok=%s count_table=%zu count_computed=%zu\n",
                  ok ? "true" : "false", expected, computed.zeros.size());
      break;
    case Format::json: {
      ordered_json doc;
      doc["tmax"] = tmax;
      doc["count_table"] = expected;
      doc["count_computed"] = computed.zeros.size();
      doc["max_abs_diff"] = max_diff;
      doc["ok"] = ok;
      if (first_bad != 0) doc["first_mismatch_index"] = first_bad;
      emit_json(doc);
      break;
    }
    case Format::human:
      std::printf("tmax=%s\n", num(tmax).c_str());
      std::printf("count_table=%zu\n", expected);
      std::printf("count_computed=%zu\n", computed.zeros.size());
      std::printf("max_abs_diff=%s\n", num(max_diff).c_str());
      if (first_bad != 0)
        std::printf("first_mismatch_index=%zu\n", first_bad);
      std::printf("ok=%s\n", ok ? "true" : "false");
      break;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"completed xi function evaluation and zero-product checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "human";
  std::string zeros_path;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"human", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--zeros", zeros_path,
                 "path to a zero ordinate table (overrides XI_ZEROS_PATH "
                 "and the bundled table)");

  // eval
  double ev_re = 0.0, ev_im = 0.0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate xi at s = re + im*i");
  eval->add_option("--re", ev_re, "real part of s")->required();
  eval->add_option("--im", ev_im, "imaginary part of s")
      ->capture_default_str();

  // scan
  double sc_t0 = 0.0, sc_from = 0.0, sc_to = 0.0, sc_step = 0.0;
  std::string sc_dir = "rightward";
  bool sc_probe = false;
  CLI::App* scan =
      app.add_subcommand("scan", "sample log|xi| on a horizontal half-line");
  scan->add_option("--t0", sc_t0, "imaginary part of the half-line")
      ->capture_default_str();
  CLI::Option* scan_from =
      scan->add_option("--from", sc_from, "first sigma sample");
  scan->add_option("--to", sc_to,
                   "last sigma sample (with --rh-probe: right endpoint)")
      ->required();
  scan->add_option("--step", sc_step, "sigma increment")->required();
  CLI::Option* scan_dir_opt =
      scan->add_option("--direction", sc_dir,
                       "direction in which log|xi| must not decrease")
          ->check(CLI::IsMember({"rightward", "leftward"}))
          ->capture_default_str();
  CLI::Option* scan_probe =
      scan->add_flag("--rh-probe", sc_probe,
                     "scan (1/2, to] rightward starting at 1/2 + step");
  scan_probe->excludes(scan_from);
  scan_probe->excludes(scan_dir_opt);

  // hadamard
  double ha_re = 0.0, ha_im = 0.0;
  std::size_t ha_n = 0;
  std::string ha_mode = "regrouped";
  CLI::App* hadamard = app.add_subcommand(
      "hadamard", "compare the truncated zero product with direct xi");
  hadamard->add_option("--re", ha_re, "real part of s")->required();
  hadamard->add_option("--im", ha_im, "imaginary part of s")
      ->capture_default_str();
  hadamard->add_option("--n", ha_n, "number of zero pairs")->required();
  hadamard->add_option("--mode", ha_mode, "product regrouping")
      ->check(CLI::IsMember({"paired", "regrouped"}))
      ->capture_default_str();

  // bconst
  std::size_t bc_n = 0;
  CLI::App* bconst = app.add_subcommand(
      "bconst", "report B, the partial sum over zeros, and the deficit");
  bconst->add_option("--n", bc_n, "number of zero pairs in the partial sum")
      ->capture_default_str();

  // cond
  double co_sigma = 0.0, co_t0 = 0.0;
  std::size_t co_n = 0;
  bool co_find = false;
  CLI::App* cond = app.add_subcommand(
      "cond", "check the derivative positivity condition at (sigma, t0)");
  cond->add_option("--sigma", co_sigma, "sigma")->required();
  cond->add_option("--t0", co_t0, "t0")->required();
  CLI::Option* cond_n =
      cond->add_option("--n", co_n, "truncation order to test");
  CLI::Option* cond_find = cond->add_flag(
      "--find-min-n", co_find, "search for the smallest order that holds");
  cond_find->excludes(cond_n);

  // zeros
  double ze_tmax = 0.0;
  std::size_t ze_limit = static_cast<std::size_t>(-1);
  bool ze_compute = false, ze_validate = false;
  CLI::App* zeros = app.add_subcommand(
      "zeros", "compute zero ordinates or validate a table against "
               "recomputation");
  CLI::Option* zeros_compute =
      zeros->add_flag("--compute", ze_compute, "compute ordinates");
  CLI::Option* zeros_validate = zeros->add_flag(
      "--validate", ze_validate, "recompute and compare with the table");
  zeros->add_option("--tmax", ze_tmax, "upper end of the search range")
      ->required();
  zeros->add_option("--limit", ze_limit, "stop after this many zeros");
  zeros_compute->excludes(zeros_validate);
  zeros_validate->excludes(zeros_compute);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  const Format fmt = parse_format(format_name);
  try {
    if (eval->parsed()) return run_eval(fmt, ev_re, ev_im);
    if (scan->parsed()) {
      ximon::ScanReport rep;
      if (sc_probe) {
        rep = ximon::rh_probe(sc_t0, sc_to, sc_step);
      } else {
        if (scan_from->count() == 0)
          throw std::invalid_argument("scan: --from is required unless "
                                      "--rh-probe is given");
        const ximon::Direction dir = sc_dir == "leftward"
                                         ? ximon::Direction::leftward
                                         : ximon::Direction::rightward;
        rep = ximon::scan_half_line({sc_t0, sc_from, sc_to, sc_step, dir});
      }
      return emit_scan(fmt, rep, sc_probe);
    }
    if (hadamard->parsed()) {
      const ximon::ZeroTable table = open_zero_table(zeros_path);
      return run_hadamard(fmt, table, ha_re, ha_im, ha_n, ha_mode);
    }
    if (bconst->parsed()) return run_bconst(fmt, zeros_path, bc_n);
    if (cond->parsed()) {
      if (!co_find && cond_n->count() == 0)
        throw std::invalid_argument("cond: give either --n or --find-min-n");
      const ximon::ZeroTable table = open_zero_table(zeros_path);
      if (co_find) {
        std::size_t n_min;
        try {
          n_min = ximon::minimal_truncation_order(co_sigma, co_t0, table);
        } catch (const ximon::TableExhaustedError& e) {
          std::fprintf(stderr, "%s\n", e.what());
          return 1;
        }
        return emit_cond(
            fmt, ximon::derivative_condition(co_sigma, co_t0, table, n_min),
            true);
      }
      return emit_cond(
          fmt, ximon::derivative_condition(co_sigma, co_t0, table, co_n),
          false);
    }
    if (zeros->parsed()) {
      if (!ze_compute && !ze_validate)
        throw std::invalid_argument("zeros: give either --compute or "
                                    "--validate");
      if (ze_validate) return run_zeros_validate(fmt, zeros_path, ze_tmax);
      return run_zeros_compute(fmt, ze_tmax, ze_limit);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
