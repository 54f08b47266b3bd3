#pragma once

// Command-line front end: `seq`, `intervals`, `verify`, `roots`.
//
// Exit codes: 0 success, 1 a verification failed (DISCREPANCY, or
// KNOWN_ERRATUM under --strict), 2 usage error.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "analytic.hpp"
#include "intervals.hpp"
#include "json.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "verifier.hpp"

namespace ineq::cli {

enum class Format { Text, Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

enum class Suite { Table, Intervals, Theorem1, Theorem2, Lemmas, Analytic, All };

struct SuiteInfo {
  std::string_view name;
  Suite suite;
  std::int64_t min_limit;
  std::int64_t default_limit;
};

inline constexpr std::array<SuiteInfo, 7> kSuites{{
    {"table", Suite::Table, 1, 1},
    {"intervals", Suite::Intervals, 1, 1},
    {"theorem1", Suite::Theorem1, 547, 600},
    {"theorem2", Suite::Theorem2, 404, 1000},
    {"lemmas", Suite::Lemmas, 404, 5000},
    {"analytic", Suite::Analytic, 1, 100'000},
    {"all", Suite::All, 547, 0},
}};

inline const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : kSuites)
    if (s.name == name) return &s;
  return nullptr;
}

/// Runs one suite. `limit` overrides the per-suite default scan limit.
inline std::vector<VerificationReport> run_suite(Suite suite, std::optional<std::int64_t> limit) {
  auto lim = [&](Suite s) {
    for (const auto& info : kSuites)
      if (info.suite == s) return limit.value_or(info.default_limit);
    return limit.value_or(1);
  };
  std::vector<VerificationReport> out;
  auto append = [&](std::vector<VerificationReport> more) { out.insert(out.end(), more.begin(), more.end()); };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Table) append(check_exercise_table());
  if (all || suite == Suite::Intervals) append(check_interval_table());
  if (all || suite == Suite::Lemmas) {
    const auto n = lim(Suite::Lemmas);
    out.push_back(check_lemma12(n));
    out.push_back(check_lemma24(n));
    out.push_back(check_L5(n));
    out.push_back(check_L2(n));
    out.push_back(check_P1(n));
  }
  if (all || suite == Suite::Theorem1) out.push_back(check_theorem1(lim(Suite::Theorem1)));
  if (all || suite == Suite::Theorem2) out.push_back(check_theorem2(lim(Suite::Theorem2)));
  if (all || suite == Suite::Analytic) {
    const auto n = lim(Suite::Analytic);
    out.push_back(check_family());
    append(check_roots());
    out.push_back(check_bounds_x(n));
    out.push_back(check_bounds_Y(n));
    out.push_back(check_sign_consistency(n));
    append(check_remark_final());
  }
  return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_reports(std::ostream& os, const std::vector<VerificationReport>& reps, Format fmt) {
  switch (fmt) {
    case Format::Json:
      os << to_json(reps).dump(2) << '\n';
      break;
    case Format::Csv:
      os << "claim_id,lo,hi,status,printed,computed,counterexamples,details\n";
      for (const auto& r : reps) {
        std::string ce;
        for (auto n : r.counterexamples) ce += (ce.empty() ? "" : " ") + std::to_string(n);
        os << r.claim_id << ',' << r.lo << ',' << r.hi << ',' << to_string(r.status) << ','
           << csv_field(r.printed.value_or("")) << ',' << csv_field(r.computed.value_or("")) << ',' << ce << ','
           << csv_field(r.details) << '\n';
      }
      break;
    case Format::Text:
      write_text(os, reps);
      os << count_status(reps, Status::Confirmed) << " confirmed, " << count_status(reps, Status::KnownErratum)
         << " known errata, " << count_status(reps, Status::Discrepancy) << " discrepancies\n";
      break;
  }
}

}  // namespace detail

/// `seq`: one record per n in [from, to].
inline void write_seq(std::ostream& os, std::int64_t from, std::int64_t to, Format fmt, bool exact_y) {
  static constexpr std::array<std::string_view, 8> kCols{"n", "z", "m", "r", "c", "x", "c_minus_m", "y_sign"};
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < kCols.size(); ++i) os << (i ? "," : "") << kCols[i];
    os << (exact_y ? ",y\n" : "\n");
  } else if (fmt == Format::Json) {
    os << '[';
  } else {
    for (auto col : kCols) os << std::setw(col == "c_minus_m" ? 10 : 8) << col;
    os << (exact_y ? "  y\n" : "\n");
  }
  for (std::int64_t n = from; n <= to; ++n) {
    const auto rw = row(n);
    const std::array<std::int64_t, 8> vals{rw.n, rw.z, rw.m, rw.r, rw.c, rw.x, rw.c_minus_m, rw.y_sign};
    switch (fmt) {
      case Format::Csv:
        for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
        if (exact_y) os << ',' << y_value(n);
        os << '\n';
        break;
      case Format::Json:
        // Flat integer records; y stays a JSON number however long it is.
        os << (n == from ? "" : ",") << "\n  {";
        for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << '"' << kCols[i] << "\":" << vals[i];
        if (exact_y) os << ",\"y\":" << y_value(n);
        os << '}';
        break;
      case Format::Text:
        for (std::size_t i = 0; i < vals.size(); ++i) os << std::setw(i == 6 ? 10 : 8) << vals[i];
        if (exact_y) os << "  " << y_value(n);
        os << '\n';
        break;
    }
  }
  if (fmt == Format::Json) os << "\n]\n";
}

inline void write_intervals(std::ostream& os, std::int64_t n_max, Format fmt) {
  const auto table = interval_table(n_max);
  if (fmt == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : table) {
      arr.push_back({{"index", t.index}, {"lo", t.lo}, {"hi", t.hi}, {"r", t.r_const}, {"m", t.m_const},
                     {"x_lo", t.x_lo}, {"x_hi", t.x_hi}});
    }
    os << arr.dump(2) << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    os << "index,lo,hi,r,m,x_lo,x_hi\n";
    for (const auto& t : table)
      os << t.index << ',' << t.lo << ',' << t.hi << ',' << t.r_const << ',' << t.m_const << ',' << t.x_lo << ','
         << t.x_hi << '\n';
    return;
  }
  os << std::setw(6) << "i" << std::setw(8) << "lo" << std::setw(8) << "hi" << std::setw(5) << "r" << std::setw(6)
     << "m" << std::setw(7) << "x_lo" << std::setw(7) << "x_hi" << '\n';
  for (const auto& t : table)
    os << std::setw(6) << t.index << std::setw(8) << t.lo << std::setw(8) << t.hi << std::setw(5) << t.r_const
       << std::setw(6) << t.m_const << std::setw(7) << t.x_lo << std::setw(7) << t.x_hi << '\n';
}

inline void write_roots(std::ostream& os, double tol, Format fmt) {
  std::vector<RootFinding> found;
  for (const auto& nb : kNamedBounds) found.push_back(find_root(nb, tol));
  if (fmt == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : found) {
      arr.push_back({{"name", f.bound.name},
                     {"A", f.bound.coeffs.A},
                     {"B", f.bound.coeffs.B},
                     {"C", f.bound.coeffs.C},
                     {"lo", f.bracket.lo},
                     {"hi", f.bracket.hi},
                     {"lo_sign", f.bracket.lo_sign},
                     {"hi_sign", f.bracket.hi_sign},
                     {"grid_sign_changes", f.grid_sign_changes}});
    }
    os << arr.dump(2) << '\n';
    return;
  }
  const auto old_precision = os.precision(15);
  if (fmt == Format::Csv) os << "name,A,B,C,lo,hi,lo_sign,hi_sign,grid_sign_changes\n";
  for (const auto& f : found) {
    const auto& k = f.bound.coeffs;
    if (fmt == Format::Csv) {
      os << f.bound.name << ',' << k.A << ',' << k.B << ',' << k.C << ',' << f.bracket.lo << ',' << f.bracket.hi << ','
         << f.bracket.lo_sign << ',' << f.bracket.hi_sign << ',' << f.grid_sign_changes << '\n';
    } else {
      os << std::left << std::setw(8) << f.bound.name << std::right << " (A,B,C)=(" << k.A << ',' << k.B << ','
         << k.C << ")  root in [" << f.bracket.lo << ", " << f.bracket.hi << "]  sign changes on integer grid: "
         << f.grid_sign_changes << '\n';
    }
  }
  os.precision(old_precision);
}

/// Entry point shared by the tool and the tests. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of an integer inequality and its sign classifications", "ineqcheck"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto formats = CLI::IsMember({"csv", "json", "text"});

  std::int64_t from = 1, to = 16;
  bool exact_y = false;
  auto* seq = app.add_subcommand("seq", "Print z, m, r, c, x, c-m and the sign of y for a range of n");
  seq->add_option("--from", from, "First n (>= 1)");
  seq->add_option("--to", to, "Last n (>= from)");
  seq->add_option("--format", format, "csv | json | text")->check(formats);
  seq->add_flag("--exact-y", exact_y, "Also print y(n) exactly");

  std::int64_t interval_limit = 600;
  auto* intervals = app.add_subcommand("intervals", "Print the maximal intervals of constant (m, r)");
  intervals->add_option("--limit", interval_limit, "Cover [1, limit]");
  intervals->add_option("--format", format, "csv | json | text")->check(formats);

  std::string suite_name = "all";
  std::optional<std::int64_t> limit;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite_name, "table | intervals | theorem1 | theorem2 | lemmas | analytic | all");
  verify->add_option("--limit", limit, "Scan limit N (suite defaults otherwise)");
  verify->add_option("--format", format, "csv | json | text")->check(formats);
  verify->add_flag("--strict", strict, "Treat known errata as failures");

  double tol = 1e-9;
  auto* roots = app.add_subcommand("roots", "Isolate the roots of the four bounding functions");
  roots->add_option("--tol", tol, "Bracket width");
  roots->add_option("--format", format, "csv | json | text")->check(formats);

  std::vector<std::string> argv_store{"ineqcheck"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const Format fmt = parse_format(format);

  try {
    if (*seq) {
      if (from < 1 || to < from || to > kMaxN) {
        err << "seq: need 1 <= --from <= --to <= 1e17\n";
        return 2;
      }
      write_seq(out, from, to, fmt, exact_y);
      return 0;
    }
    if (*intervals) {
      if (interval_limit < 1 || interval_limit > kMaxN) {
        err << "intervals: need 1 <= --limit <= 1e17\n";
        return 2;
      }
      write_intervals(out, interval_limit, fmt);
      return 0;
    }
    if (*roots) {
      if (!(tol > 0)) {
        err << "roots: --tol must be positive\n";
        return 2;
      }
      write_roots(out, tol, fmt);
      return 0;
    }
    const SuiteInfo* info = find_suite(suite_name);
    if (info == nullptr) {
      err << "verify: unknown suite '" << suite_name << "'\n";
      return 2;
    }
    if (limit && (*limit < info->min_limit || *limit > kMaxN)) {
      err << "verify " << info->name << ": --limit must be at least " << info->min_limit << "\n";
      return 2;
    }
    const auto reps = run_suite(info->suite, limit);
    detail::write_reports(out, reps, fmt);
    if (count_status(reps, Status::Discrepancy) > 0) return 1;
    if (strict && count_status(reps, Status::KnownErratum) > 0) return 1;
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ineq::cli
