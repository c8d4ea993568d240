#pragma once

// Command implementations behind the `schmidt` tool.  Each command returns
// the rendered stdout text and an exit code; argument parsing and stream
// handling live in tools/schmidt.cpp.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed (witness in
// the output), 2 usage error.

#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schmidt/core.hpp"
#include "schmidt/hypergeometric.hpp"
#include "schmidt/legendre.hpp"
#include "schmidt/sampling.hpp"

namespace schmidt::cli {

using Json = nlohmann::ordered_json;

enum class Command { compute, t_table, verify, identities };
enum class Format { plain, json, csv };
enum class Route { definition, inverse, closed };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline std::string_view name(Command c) {
  switch (c) {
    case Command::compute: return "compute";
    case Command::t_table: return "t-table";
    case Command::verify: return "verify";
    case Command::identities: return "identities";
  }
  return "?";
}

inline std::string_view name(Route r) {
  switch (r) {
    case Route::definition: return "definition";
    case Route::inverse: return "inverse";
    case Route::closed: return "closed";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::compute;
  unsigned r = 2;
  unsigned r_max = 8;
  std::size_t n_max = 12;
  unsigned m_max = 5;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Format format = Format::plain;
  std::vector<Route> routes{Route::definition, Route::inverse, Route::closed};
};

struct Failure {
  std::string description;
  Json witness;
};

struct VerificationReport {
  std::size_t checks_run = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;

  bool ok() const noexcept { return failures.empty(); }

  /// Counts one check; records a failure when `passed` is false.
  void check(bool passed, std::string description, Json witness) {
    ++checks_run;
    if (!passed) failures.push_back({std::move(description), std::move(witness)});
  }
};

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

namespace detail {

inline Json failures_json(const std::vector<Failure>& failures) {
  Json out = Json::array();
  for (const auto& f : failures) {
    out.push_back({{"description", f.description}, {"witness", f.witness}});
  }
  return out;
}

inline std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

/// Runs `body`, turning a library exception into a recorded failure.
template <typename Body>
void guarded(VerificationReport& report, const std::string& description,
             const Json& witness, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++report.checks_run;
    Json w = witness;
    w["error"] = e.what();
    report.failures.push_back({description, std::move(w)});
  }
}

inline Json params_json(const RunConfig& config) {
  Json p;
  switch (config.command) {
    case Command::compute: {
      p["r"] = config.r;
      p["n_max"] = config.n_max;
      Json routes = Json::array();
      for (Route route : config.routes) routes.push_back(name(route));
      p["routes"] = routes;
      break;
    }
    case Command::t_table:
      p["r"] = config.r;
      p["n_max"] = config.n_max;
      break;
    case Command::verify:
      p["r_max"] = config.r_max;
      p["n_max"] = config.n_max;
      break;
    case Command::identities:
      p["trials"] = config.trials;
      p["m_max"] = config.m_max;
      p["seed"] = config.seed;
      break;
  }
  return p;
}

inline std::string render_json(const RunConfig& config, Json results,
                               const std::vector<Failure>& failures) {
  Json doc;
  doc["command"] = name(config.command);
  doc["params"] = params_json(config);
  doc["results"] = std::move(results);
  doc["failures"] = failures_json(failures);
  return doc.dump(2) + "\n";
}

inline std::string render_report(const RunConfig& config,
                                 const VerificationReport& report,
                                 Json extra_results) {
  std::ostringstream out;
  switch (config.format) {
    case Format::json: {
      Json results;
      results["checks_run"] = report.checks_run;
      for (auto& [key, value] : extra_results.items()) results[key] = value;
      return render_json(config, std::move(results), report.failures);
    }
    case Format::csv:
      out << "checks_run,failures\n"
          << report.checks_run << ',' << report.failures.size() << '\n';
      if (!report.failures.empty()) {
        out << "description,witness\n";
        for (const auto& f : report.failures) {
          // Witness JSON contains commas and quotes; quote it per RFC 4180.
          std::string w = f.witness.dump();
          std::string quoted;
          for (char ch : w) {
            if (ch == '"') quoted += '"';
            quoted += ch;
          }
          out << f.description << ",\"" << quoted << "\"\n";
        }
      }
      return out.str();
    case Format::plain:
      out << "checks run: " << report.checks_run << '\n'
          << "failures: " << report.failures.size() << '\n';
      for (auto& [key, value] : extra_results.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
      }
      for (const auto& f : report.failures) {
        out << "FAIL " << f.description << ' ' << f.witness.dump() << '\n';
      }
      return out.str();
  }
  return out.str();
}

}  // namespace detail

// compute --------------------------------------------------------------------

inline std::vector<ExactInt> compute_route(Route route, unsigned r,
                                           std::size_t n_max) {
  std::vector<ExactInt> out;
  switch (route) {
    case Route::definition:
      return c_by_definition(r, n_max).values();
    case Route::inverse:
      for (std::size_t n = 0; n <= n_max; ++n) out.push_back(c_from_t(n, r));
      return out;
    case Route::closed:
      for (std::size_t n = 0; n <= n_max; ++n) out.push_back(c_closed(n, r));
      return out;
  }
  return out;
}

inline CommandOutput run_compute(const RunConfig& config) {
  std::vector<std::vector<ExactInt>> tables;
  std::vector<Failure> failures;
  for (Route route : config.routes) {
    try {
      tables.push_back(compute_route(route, config.r, config.n_max));
    } catch (const std::exception& e) {
      failures.push_back({"route " + std::string(name(route)) + " failed",
                          Json{{"r", config.r}, {"error", e.what()}}});
      tables.emplace_back();
    }
  }
  bool agree = failures.empty();
  for (std::size_t i = 1; agree && i < tables.size(); ++i) {
    for (std::size_t n = 0; n <= config.n_max; ++n) {
      if (tables[i][n] != tables[0][n]) {
        agree = false;
        failures.push_back(
            {"routes disagree",
             Json{{"r", config.r},
                  {"n", n},
                  {std::string(name(config.routes[0])), tables[0][n].str()},
                  {std::string(name(config.routes[i])), tables[i][n].str()}}});
        break;
      }
    }
  }

  CommandOutput result;
  result.exit_code = failures.empty() ? kExitOk : kExitCheckFailed;
  std::ostringstream out;
  switch (config.format) {
    case Format::json: {
      Json results;
      results["routes_agree"] = agree;
      Json routes = Json::array();
      for (std::size_t i = 0; i < config.routes.size(); ++i) {
        Json values = Json::array();
        for (std::size_t n = 0; n < tables[i].size(); ++n) {
          values.push_back({{"n", n}, {"c", tables[i][n].str()}});
        }
        routes.push_back({{"route", name(config.routes[i])}, {"values", values}});
      }
      results["routes"] = std::move(routes);
      result.text = detail::render_json(config, std::move(results), failures);
      return result;
    }
    case Format::csv: {
      out << 'n';
      for (Route route : config.routes) out << ',' << name(route);
      out << '\n';
      for (std::size_t n = 0; n <= config.n_max; ++n) {
        out << n;
        for (const auto& table : tables) {
          out << ',' << (n < table.size() ? table[n].str() : std::string());
        }
        out << '\n';
      }
      break;
    }
    case Format::plain: {
      auto line = [](const std::vector<ExactInt>& values) {
        std::vector<std::string> items;
        for (const auto& v : values) items.push_back(v.str());
        return detail::join(items, ' ');
      };
      if (agree) {
        out << line(tables.front()) << '\n';
      } else {
        for (std::size_t i = 0; i < tables.size(); ++i) {
          out << name(config.routes[i]) << ": " << line(tables[i]) << '\n';
        }
        for (const auto& f : failures) {
          out << "FAIL " << f.description << ' ' << f.witness.dump() << '\n';
        }
      }
      break;
    }
  }
  result.text = out.str();
  return result;
}

// t-table --------------------------------------------------------------------

inline CommandOutput run_t_table(const RunConfig& config) {
  struct Row {
    std::size_t n;
    std::size_t j;
    std::string t;
    std::string ratio;  // empty when the division failed
  };
  std::vector<Row> rows;
  std::vector<Failure> failures;
  for (std::size_t n = 0; n <= config.n_max; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      const ExactInt t = t_sum(n, j, config.r);
      Row row{n, j, t.str(), {}};
      try {
        row.ratio = exact_divide(central_binomial(j) * t, central_binomial(n)).str();
      } catch (const DivisibilityError&) {
        failures.push_back({"ratio C(2j,j) t / C(2n,n) is not an integer",
                            Json{{"n", n}, {"j", j}, {"r", config.r},
                                 {"t", row.t}}});
      }
      rows.push_back(std::move(row));
    }
  }

  CommandOutput result;
  result.exit_code = failures.empty() ? kExitOk : kExitCheckFailed;
  std::ostringstream out;
  switch (config.format) {
    case Format::json: {
      Json results = Json::array();
      for (const auto& row : rows) {
        results.push_back({{"n", row.n},
                           {"j", row.j},
                           {"t", row.t},
                           {"ratio", row.ratio.empty() ? Json(nullptr) : Json(row.ratio)}});
      }
      result.text = detail::render_json(config, std::move(results), failures);
      return result;
    }
    case Format::csv:
      out << "n,j,t,ratio\n";
      for (const auto& row : rows) {
        out << row.n << ',' << row.j << ',' << row.t << ',' << row.ratio << '\n';
      }
      break;
    case Format::plain:
      out << "n j t ratio\n";
      for (const auto& row : rows) {
        out << row.n << ' ' << row.j << ' ' << row.t << ' '
            << (row.ratio.empty() ? "-" : row.ratio) << '\n';
      }
      for (const auto& f : failures) {
        out << "FAIL " << f.description << ' ' << f.witness.dump() << '\n';
      }
      break;
  }
  result.text = out.str();
  return result;
}

// verify ---------------------------------------------------------------------

/// Checks for one exponent r: route agreement, integrality, n-independence
/// and closed-form t agreement.  r = 1 gets the route checks only; its
/// Theorem-2 style ratios are reported through `r1_ratios_integral` rather
/// than asserted.
inline void verify_exponent(unsigned r, std::size_t n_max,
                            VerificationReport& report,
                            bool* r1_ratios_integral = nullptr) {
  IntegerSequence c{1};
  std::vector<ExactInt> a_values;
  for (std::size_t n = 0; n <= n_max; ++n) a_values.push_back(lhs_sum(n, r));
  const IntegerSequence a(a_values);
  try {
    c = triangular_solve(a);
    ++report.checks_run;
  } catch (const std::exception& e) {
    report.check(false, "defining identity has a non-integral c",
                 Json{{"r", r}, {"error", e.what()}});
    return;
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    const Json w{{"r", r}, {"n", n}, {"expected", c[n].str()}};
    detail::guarded(report, "c from t disagrees with definition", w, [&] {
      report.check(c_from_t(n, r) == c[n], "c from t disagrees with definition", w);
    });
    detail::guarded(report, "closed c disagrees with definition", w, [&] {
      report.check(c_closed(n, r) == c[n], "closed c disagrees with definition", w);
    });
    detail::guarded(report, "Legendre inverse disagrees with definition", w, [&] {
      report.check(legendre_inverse(a, n) == ExactRat(c[n]),
                   "Legendre inverse disagrees with definition", w);
    });
    // One fixed prefix must satisfy the defining identity at every order.
    report.check(legendre_forward(c, n) == a[n] &&
                     legendre_forward_central(c, n) == a[n],
                 "prefix does not reproduce lhs_sum", w);
    if (r == 1) report.check(c[n] == 1, "c^(1) is not identically one", w);
    if (r >= 4) {
      detail::guarded(report, "nested c disagrees", w, [&] {
        if (r == 4) report.check(c4_closed(n) == c[n], "c4_closed disagrees", w);
        if (r == 5) report.check(c5_closed(n) == c[n], "c5_closed disagrees", w);
      });
    }
  }
  if (n_max >= 1) {
    report.check(c[1] == ipow(ExactInt(2), r - 1), "c_1 != 2^(r-1)",
                 Json{{"r", r}, {"c1", c[1].str()}});
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Json w{{"r", r}, {"n", n}, {"j", j}};
      const ExactInt t = t_sum(n, j, r);
      if (r == 1) {
        ExactInt q;
        ExactInt rem;
        boost::multiprecision::divide_qr(central_binomial(j) * t,
                                         central_binomial(n), q, rem);
        if (rem != 0 && r1_ratios_integral) *r1_ratios_integral = false;
        continue;
      }
      detail::guarded(report, "t ratio is not an integer", w, [&] {
        exact_divide(central_binomial(j) * t, central_binomial(n));
        ++report.checks_run;
      });
      detail::guarded(report, "closed-form t disagrees with sum", w, [&] {
        if (r == 3) report.check(t3_closed(n, j) == t, "t3_closed disagrees with sum", w);
        if (r == 4) report.check(t4_closed(n, j) == t, "t4_closed disagrees with sum", w);
        if (r == 5) report.check(t5_closed(n, j) == t, "t5_closed disagrees with sum", w);
        if (r >= 4) report.check(t_general(n, j, r) == t, "t_general disagrees with sum", w);
        report.check(t_as_hypergeometric(n, j, r) == t,
                     "hypergeometric t disagrees with sum", w);
      });
    }
  }
}

inline VerificationReport verify_report(unsigned r_max, std::size_t n_max,
                                        bool* r1_ratios_integral = nullptr) {
  VerificationReport report;
  for (unsigned r = 1; r <= r_max; ++r) {
    verify_exponent(r, n_max, report, r1_ratios_integral);
  }
  return report;
}

inline CommandOutput run_verify(const RunConfig& config) {
  bool r1_integral = true;
  const VerificationReport report =
      verify_report(config.r_max, config.n_max, &r1_integral);
  Json extra = Json::object();
  if (config.r_max >= 1) extra["r1_ratios_integral"] = r1_integral;
  return {detail::render_report(config, report, std::move(extra)),
          report.ok() ? kExitOk : kExitCheckFailed};
}

// identities -----------------------------------------------------------------

namespace detail {

inline Json spec_json(const WellPoisedSpec& spec) {
  Json pairs = Json::array();
  for (const auto& [b, c] : spec.pairs) {
    pairs.push_back(Json::array({to_string(b), to_string(c)}));
  }
  return Json{{"a", to_string(spec.a)}, {"pairs", pairs}, {"m", spec.m}};
}

inline ExactRat neg(long long x) { return make_rat(-x); }

}  // namespace detail

/// Deterministic reductions at the integer parameters that turn the
/// very-well-poised series into t_{n,j}^(r): Dougall at r = 3, Whipple at
/// r = 5 and at r = 4 via b = (1+a)/2.  The r = 4, 5 forms are taken only
/// where 3j >= n; below that the balanced 4F3 has a pole inside its range.
inline void structural_identity_checks(VerificationReport& report,
                                       std::size_t n_limit = 4) {
  for (std::size_t n = 0; n <= n_limit; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      const auto sn = static_cast<long long>(n);
      const auto sj = static_cast<long long>(j);
      const unsigned m = static_cast<unsigned>(n - j);
      const ExactRat a = detail::neg(2 * sn + 1);
      const ExactRat x = detail::neg(sn - sj);
      const ExactInt base = binomial(sn + sj, sn - sj);
      const Json w{{"n", n}, {"j", j}};

      detail::guarded(report, "structural reduction raised", w, [&] {
        report.check(is_very_well_poised(dougall_lhs(a, x, x, m)),
                     "5F4 is not very-well-poised", w);
        report.check(check_dougall(a, x, x, m), "Dougall fails at t^(3) parameters", w);
        report.check(ExactRat(ipow(base, 3)) * dougall_rhs(a, x, x, m) ==
                         ExactRat(t3_closed(n, j)),
                     "Dougall does not reproduce t3_closed", w);
        if (3 * j >= n) {
          report.check(check_whipple(a, x, x, x, x, m),
                       "Whipple fails at t^(5) parameters", w);
          report.check(ExactRat(ipow(base, 5)) * whipple_rhs(a, x, x, x, x, m) ==
                           ExactRat(t_sum(n, j, 5)),
                       "Whipple does not reproduce t^(5)", w);
          const ExactRat half = detail::neg(sn);  // (1+a)/2
          report.check(ExactRat(ipow(base, 4)) * whipple_rhs(a, half, x, x, x, m) ==
                           ExactRat(t_sum(n, j, 4)),
                       "Whipple with b=(1+a)/2 does not reproduce t^(4)", w);
        }
      });
    }
  }
}

inline VerificationReport identities_report(std::size_t trials, unsigned m_max,
                                            std::uint64_t seed) {
  VerificationReport report;
  structural_identity_checks(report);

  // One stream per identity family.
  constexpr std::uint64_t kStride = 0x9E3779B97F4A7C15ULL;
  ParameterSampler dougall(seed, m_max);
  ParameterSampler whipple(seed + kStride, m_max);
  ParameterSampler andrews(seed + 2 * kStride, m_max);

  for (std::size_t t = 0; t < trials; ++t) {
    const WellPoisedSpec spec = dougall.well_poised(1);
    const auto& [c, d] = spec.pairs[0];
    const Json w = detail::spec_json(spec);
    detail::guarded(report, "Dougall check raised", w, [&] {
      report.check(check_dougall(spec.a, c, d, spec.m), "Dougall summation fails", w);
      report.check(check_andrews(spec), "multiple transformation fails at s=1", w);
      report.check(andrews_rhs(spec) == dougall_rhs(spec.a, c, d, spec.m),
                   "s=1 multiple transformation is not Dougall", w);
    });
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const WellPoisedSpec spec = whipple.well_poised(2);
    const auto& [b, c] = spec.pairs[0];
    const auto& [d, e] = spec.pairs[1];
    const Json w = detail::spec_json(spec);
    detail::guarded(report, "Whipple check raised", w, [&] {
      report.check(check_whipple(spec.a, b, c, d, e, spec.m),
                   "Whipple transformation fails", w);
      report.check(check_andrews(spec), "multiple transformation fails at s=2", w);
      report.check(andrews_rhs(spec) == whipple_rhs(spec.a, b, c, d, e, spec.m),
                   "s=2 multiple transformation is not Whipple", w);
    });
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const WellPoisedSpec spec = andrews.well_poised(3);
    const Json w = detail::spec_json(spec);
    detail::guarded(report, "multiple transformation check raised", w, [&] {
      report.check(check_andrews(spec), "multiple transformation fails at s=3", w);
    });
  }
  return report;
}

inline CommandOutput run_identities(const RunConfig& config) {
  const VerificationReport report =
      identities_report(config.trials, config.m_max, config.seed);
  return {detail::render_report(config, report, Json::object()),
          report.ok() ? kExitOk : kExitCheckFailed};
}

// dispatch -------------------------------------------------------------------

inline CommandOutput run(const RunConfig& config) {
  switch (config.command) {
    case Command::compute: return run_compute(config);
    case Command::t_table: return run_t_table(config);
    case Command::verify: return run_verify(config);
    case Command::identities: return run_identities(config);
  }
  return {"", kExitUsage};
}

}  // namespace schmidt::cli
