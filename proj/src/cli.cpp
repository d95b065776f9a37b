#include "qtrunc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtrunc/errors.hpp"

namespace qtrunc::cli {

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ParameterError("unknown format '" + text + "' (expected text, json or csv)");
}

namespace {

std::string describe_params(const CheckReport& r) {
  std::string out;
  for (const auto& [key, value] : r.params()) {
    if (!out.empty()) out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

void write_run(const SuiteRun& run, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["suite"] = run.suite;
      doc["pass"] = run.pass();
      doc["points"] = run.reports.size();
      auto reports = nlohmann::ordered_json::array();
      for (const auto& r : run.reports) reports.push_back(to_json(r));
      doc["reports"] = reports;
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << kReportCsvHeader << '\n';
      for (const auto& r : run.reports) {
        for (const auto& row : to_csv_rows(r)) out << row << '\n';
      }
      return;
    case Format::Text: {
      std::size_t passed = 0;
      std::vector<std::string> notes;
      for (const auto& r : run.reports) {
        passed += r.pass() ? 1 : 0;
        out << (r.pass() ? "PASS " : "FAIL ") << run.suite << ' ' << describe_params(r);
        for (const auto& [key, value] : r.values()) out << ' ' << key << '=' << value;
        out << '\n';
        for (const auto& v : r.violations()) {
          out << "  violation: " << v.witness << ": expected " << v.expected << ", actual " << v.actual << '\n';
        }
        for (const auto& note : r.notes()) {
          if (std::find(notes.begin(), notes.end(), note) == notes.end()) notes.push_back(note);
        }
      }
      for (const auto& note : notes) out << "note: " << note << '\n';
      out << run.suite << ": " << passed << '/' << run.reports.size() << " points passed\n";
      return;
    }
  }
}

void write_table(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["table"] = table.name;
      doc["columns"] = table.columns;
      doc["rows"] = table.rows;
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_cell(table.columns[i]);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
      }
      return;
    }
    case Format::Text: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out << "  ";
          out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        out << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      return;
    }
  }
}

namespace {

struct Options {
  std::string suite;
  std::string format = "text";
  std::string out_path;
  std::map<std::string, std::string> ranges;
  std::optional<std::string> kmax;
  std::optional<std::string> nmax;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("suite", o.suite, "Suite name")->required();
  for (const char* name : {"R", "S", "k", "m", "n", "N"}) {
    cmd->add_option_function<std::string>(
        std::string("--") + name, [&o, name](const std::string& v) { o.ranges[name] = v; },
        "Value or inclusive range a..b");
  }
  cmd->add_option_function<std::string>("--kmax", [&o](const std::string& v) { o.kmax = v; }, "Same as --k 1..K");
  cmd->add_option_function<std::string>("--nmax", [&o](const std::string& v) { o.nmax = v; }, "Same as --n 1..N");
  cmd->add_option("--format", o.format, "text, json or csv");
  cmd->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
}

SuiteSpec build_spec(const Options& o) {
  SuiteSpec spec;
  spec.suite = canonical_suite(o.suite);
  for (const auto& [key, text] : o.ranges) spec.grid[key] = parse_range(text);
  auto upper = [](const std::string& name, const std::string& text) {
    const IntRange r = parse_range(text);
    if (r.lo != r.hi) throw ParameterError("--" + name + " takes a single integer");
    return IntRange{1, r.hi};
  };
  if (o.kmax) {
    if (o.ranges.count("k")) throw ParameterError("--k and --kmax are mutually exclusive");
    spec.grid["k"] = upper("kmax", *o.kmax);
  }
  if (o.nmax) {
    if (o.ranges.count("n")) throw ParameterError("--n and --nmax are mutually exclusive");
    spec.grid["n"] = upper("nmax", *o.nmax);
  }
  return spec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of truncated theta-series identities and partition inequalities"};
  app.require_subcommand(1);
  Options verify_opts;
  Options table_opts;
  auto* verify = app.add_subcommand("verify", "Check a suite over a parameter grid (exit 0 pass, 1 violation)");
  auto* table = app.add_subcommand("table", "Print exact coefficient or count tables for a suite");
  add_common(verify, verify_opts);
  add_common(table, table_opts);
  app.footer("Suites: pentagonal jacobi-cube am-identity theorem12 mk-identity phi psi conjecture theorem13\n"
             "        corollary14 gz mao decomposition wang-yee recurrence117\n"
             "Worker count: QTRUNC_WORKERS (defaults to OMP_NUM_THREADS / all cores).");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  const bool is_verify = verify->parsed();
  const Options& opts = is_verify ? verify_opts : table_opts;
  try {
    const Format format = parse_format(opts.format);
    const SuiteSpec spec = build_spec(opts);
    std::ofstream file;
    if (!opts.out_path.empty()) {
      file.open(opts.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << opts.out_path << "' for writing\n";
        return kExitUsage;
      }
    }
    std::ostream& sink = opts.out_path.empty() ? out : file;
    if (is_verify) {
      const SuiteRun result = run_suite(spec);
      write_run(result, format, sink);
      if (!result.pass()) {
        err << result.suite << ": violation found\n";
        return kExitViolation;
      }
      return kExitPass;
    }
    write_table(table_suite(spec), format, sink);
    return kExitPass;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qtrunc::cli
