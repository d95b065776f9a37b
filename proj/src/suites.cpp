#include "qtrunc/suites.hpp"

#include <charconv>
#include <cstdlib>
#include <exception>
#include <functional>

#include <omp.h>

#include "qtrunc/bijections.hpp"
#include "qtrunc/errors.hpp"
#include "qtrunc/partitions.hpp"
#include "qtrunc/series.hpp"
#include "qtrunc/trunclab.hpp"

namespace qtrunc {

namespace {

struct ParamDef {
  std::string name;
  IntRange fallback;
  std::int64_t min;
  bool axis = true;  ///< false: the whole range is handed to one evaluation
};

struct SuiteDef {
  std::string name;
  std::vector<ParamDef> params;
  std::function<bool(const GridPoint&)> admissible;
  std::function<CheckReport(const GridPoint&)> verify;
  std::vector<std::string> columns;
  std::function<void(const GridPoint&, std::vector<std::vector<std::string>>&)> rows;
};

std::int64_t at(const GridPoint& p, const std::string& key) { return p.at(key); }

TruncParams trunc_params(const GridPoint& p, const char* depth = "k") {
  return {at(p, "R"), at(p, "S"), at(p, depth), at(p, "N")};
}

std::string str(std::int64_t v) { return std::to_string(v); }

bool s_below_r(const GridPoint& p) { return at(p, "S") < at(p, "R"); }
bool any_point(const GridPoint&) { return true; }

const ParamDef kR{"R", {2, 8}, 2};
const ParamDef kS{"S", {1, 7}, 1};
const ParamDef kN{"N", {100, 100}, 0};

// Rows "prefix..., n, coefficient" for a series.
void series_rows(std::vector<std::string> prefix, const IntSeries& s, std::vector<std::vector<std::string>>& out) {
  for (Degree n = 0; n <= s.order(); ++n) {
    auto row = prefix;
    row.push_back(str(n));
    row.push_back(to_string(s.coeff(n)));
    out.push_back(std::move(row));
  }
}

std::string value_of(const CheckReport& r, const std::string& key) {
  for (const auto& [name, value] : r.values()) {
    if (name == key) return value;
  }
  return {};
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> suites = [] {
    std::vector<SuiteDef> s;

    s.push_back({"pentagonal", {kR, kS, kN}, s_below_r,
                 [](const GridPoint& p) { return pentagonal_check(at(p, "R"), at(p, "S"), at(p, "N")); },
                 {"R", "S", "n", "triple_product", "bilateral_theta"},
                 [](const GridPoint& p, auto& out) {
                   const auto R = at(p, "R"), S = at(p, "S"), N = at(p, "N");
                   const auto tp = triple_product(R, S, N);
                   const auto th = bilateral_theta(R, S, N);
                   for (Degree n = 0; n <= N; ++n) {
                     out.push_back({str(R), str(S), str(n), to_string(tp.coeff(n)), to_string(th.coeff(n))});
                   }
                 }});

    s.push_back({"jacobi-cube", {kN}, any_point, [](const GridPoint& p) { return jacobi_cube_check(at(p, "N")); },
                 {"n", "cube_coefficient", "t"},
                 [](const GridPoint& p, auto& out) {
                   const auto N = at(p, "N");
                   const auto cube = power(pochhammer(1, 1, N), 3);
                   const auto t = t_counts(N);
                   for (Degree n = 0; n <= N; ++n) {
                     out.push_back({str(n), to_string(cube.coeff(n)), to_string(t[static_cast<std::size_t>(n)])});
                   }
                 }});

    s.push_back({"am-identity", {{"k", {1, 6}, 1}, kN}, any_point,
                 [](const GridPoint& p) { return am_check(at(p, "k"), at(p, "N")); },
                 {"k", "n", "am_lhs", "am_rhs"},
                 [](const GridPoint& p, auto& out) {
                   const auto k = at(p, "k"), N = at(p, "N");
                   const auto lhs = am_lhs(k, N);
                   const auto rhs = am_rhs(k, N);
                   for (Degree n = 0; n <= N; ++n) {
                     out.push_back({str(k), str(n), to_string(lhs.coeff(n)), to_string(rhs.coeff(n))});
                   }
                 }});

    s.push_back({"theorem12", {{"n", {1, 40}, 1}, {"k", {1, 5}, 1}}, any_point,
                 [](const GridPoint& p) { return theorem12_check(at(p, "n"), at(p, "k")); },
                 {"n", "k", "A_{k-1}^(2)", "A_{-k}^(1)", "difference", "A_k^(1)", "partial_sum"},
                 [](const GridPoint& p, auto& out) {
                   const auto r = theorem12_check(at(p, "n"), at(p, "k"));
                   out.push_back({str(at(p, "n")), str(at(p, "k")), value_of(r, "A_{k-1}^(2)"),
                                  value_of(r, "A_{-k}^(1)"), value_of(r, "difference"), value_of(r, "A_k^(1)"),
                                  value_of(r, "partial_sum")});
                 }});

    s.push_back({"mk-identity", {{"n", {1, 30}, 1}, {"k", {1, 4}, 1}}, any_point,
                 [](const GridPoint& p) { return mk_identity_check(at(p, "n"), at(p, "k")); },
                 {"n", "k", "M_k", "series_coefficient", "A_{k-1}^(2)", "A_{-k}^(1)"},
                 [](const GridPoint& p, auto& out) {
                   const auto r = mk_identity_check(at(p, "n"), at(p, "k"));
                   out.push_back({str(at(p, "n")), str(at(p, "k")), value_of(r, "M_k"),
                                  value_of(r, "series_coefficient"), value_of(r, "A_{k-1}^(2)"),
                                  value_of(r, "A_{-k}^(1)")});
                 }});

    s.push_back({"phi", {{"n", {1, 30}, 1}}, any_point, [](const GridPoint& p) { return verify_phi(at(p, "n")); },
                 {"n", "pairs", "even_total", "odd_total"},
                 [](const GridPoint& p, auto& out) {
                   const auto r = verify_phi(at(p, "n"));
                   out.push_back({str(at(p, "n")), value_of(r, "pairs"), value_of(r, "even_total"),
                                  value_of(r, "odd_total")});
                 }});

    s.push_back({"psi", {{"n", {1, 30}, 1}, {"k", {1, 4}, 1}}, any_point,
                 [](const GridPoint& p) { return verify_psi(at(p, "n"), static_cast<int>(at(p, "k"))); },
                 {"n", "k", "source_size", "target_size", "images"},
                 [](const GridPoint& p, auto& out) {
                   const auto r = verify_psi(at(p, "n"), static_cast<int>(at(p, "k")));
                   out.push_back({str(at(p, "n")), str(at(p, "k")), value_of(r, "source_size"),
                                  value_of(r, "target_size"), value_of(r, "images")});
                 }});

    const ParamDef r3{"R", {3, 3}, 2};
    const ParamDef s1{"S", {1, 1}, 1};

    s.push_back({"conjecture", {r3, s1, {"k", {1, 5}, 1}, kN}, s_below_r,
                 [](const GridPoint& p) { return conjecture_check(trunc_params(p)); },
                 {"R", "S", "k", "n", "coefficient"},
                 [](const GridPoint& p, auto& out) {
                   series_rows({str(at(p, "R")), str(at(p, "S")), str(at(p, "k"))},
                               conjecture_series(trunc_params(p)), out);
                 }});

    s.push_back({"theorem13", {r3, s1, {"k", {1, 5}, 1}, kN}, s_below_r,
                 [](const GridPoint& p) { return theorem13_check(trunc_params(p)); },
                 {"R", "S", "k", "n", "coefficient"},
                 [](const GridPoint& p, auto& out) {
                   series_rows({str(at(p, "R")), str(at(p, "S")), str(at(p, "k"))},
                               theorem13_series(trunc_params(p)), out);
                 }});

    s.push_back({"corollary14", {{"k", {1, 6}, 1}, {"n", {1, 100}, 1, false}}, any_point,
                 [](const GridPoint& p) { return corollary14_report(at(p, "k"), at(p, "n"), at(p, "n_lo")); },
                 {"k", "n", "partial_sum", "divisor_diff"},
                 [](const GridPoint& p, auto& out) {
                   const auto k = at(p, "k");
                   for (Degree n = at(p, "n_lo"); n <= at(p, "n"); ++n) {
                     BigInt lhs = 0;
                     for (Degree j = -k; j <= k - 1; ++j) {
                       lhs += BigInt(j % 2 == 0 ? 1 : -1) * big(j) * p_euler(n - gpn(j));
                     }
                     out.push_back({str(k), str(n), to_string(lhs), str(divisor_diff(n, 3, 1))});
                   }
                 }});

    s.push_back({"gz", {{"k", {1, 5}, 1}, kN}, any_point, [](const GridPoint& p) { return gz_check(at(p, "k"), at(p, "N")); },
                 {"k", "n", "coefficient"},
                 [](const GridPoint& p, auto& out) { series_rows({str(at(p, "k"))}, gz_series(at(p, "k"), at(p, "N")), out); }});

    s.push_back({"mao", {r3, s1, {"k", {1, 4}, 1}, kN}, s_below_r,
                 [](const GridPoint& p) { return mao_check(trunc_params(p)); },
                 {"R", "S", "k", "n", "one_minus_f_plus", "theta_plus", "one_minus_f_minus", "theta_minus"},
                 [](const GridPoint& p, auto& out) {
                   const auto tp = trunc_params(p);
                   validate_theorem_params(tp);
                   const auto one = IntSeries::one(tp.N);
                   const auto fp = one - f_series(tp.R, tp.S, tp.k, tp.N);
                   const auto tp_side = mao_theta_side(tp.R, tp.S, tp.k, tp.N);
                   const auto fm = one - f_series(tp.R, -tp.S, tp.k, tp.N);
                   const auto tm_side = mao_theta_side(tp.R, -tp.S, tp.k, tp.N);
                   for (Degree n = 0; n <= tp.N; ++n) {
                     out.push_back({str(tp.R), str(tp.S), str(tp.k), str(n), to_string(fp.coeff(n)),
                                    to_string(tp_side.coeff(n)), to_string(fm.coeff(n)), to_string(tm_side.coeff(n))});
                   }
                 }});

    s.push_back({"decomposition", {r3, s1, {"k", {1, 4}, 1}, kN}, s_below_r,
                 [](const GridPoint& p) { return decomposition_check(trunc_params(p)); },
                 {"R", "S", "k", "n", "I1", "I2", "I3", "I4"},
                 [](const GridPoint& p, auto& out) {
                   const auto tp = trunc_params(p);
                   const auto i1 = i_series(1, tp), i2 = i_series(2, tp), i3 = i_series(3, tp), i4 = i_series(4, tp);
                   for (Degree n = 0; n <= tp.N; ++n) {
                     out.push_back({str(tp.R), str(tp.S), str(tp.k), str(n), to_string(i1.coeff(n)),
                                    to_string(i2.coeff(n)), to_string(i3.coeff(n)), to_string(i4.coeff(n))});
                   }
                 }});

    s.push_back({"wang-yee", {r3, s1, {"m", {1, 3}, 1}, {"N", {60, 60}, 0}},
                 [](const GridPoint& p) { return 2 * at(p, "S") <= at(p, "R"); },
                 [](const GridPoint& p) { return wang_yee_check(at(p, "R"), at(p, "S"), at(p, "m"), at(p, "N")); },
                 {"R", "S", "m", "n", "lhs", "rhs"},
                 [](const GridPoint& p, auto& out) {
                   const auto R = at(p, "R"), S = at(p, "S"), m = at(p, "m"), N = at(p, "N");
                   const auto lhs = wang_yee_lhs(R, S, m, N);
                   const auto rhs = wang_yee_rhs(R, S, m, N);
                   for (Degree n = 0; n <= N; ++n) {
                     out.push_back({str(R), str(S), str(m), str(n), to_string(lhs.coeff(n)), to_string(rhs.coeff(n))});
                   }
                 }});

    s.push_back({"recurrence117", {{"n", {1, 100}, 1, false}}, any_point,
                 [](const GridPoint& p) { return recurrence117_check(at(p, "n"), at(p, "n_lo")); },
                 {"n", "lhs", "divisor_diff"},
                 [](const GridPoint& p, auto& out) {
                   for (Degree n = at(p, "n_lo"); n <= at(p, "n"); ++n) {
                     out.push_back({str(n), to_string(recurrence117_lhs(n)), str(divisor_diff(n, 3, 1))});
                   }
                 }});
    return s;
  }();
  return suites;
}

const SuiteDef& find_suite(const std::string& name) {
  const std::string canonical = canonical_suite(name);
  for (const auto& def : registry()) {
    if (def.name == canonical) return def;
  }
  throw ParameterError("unknown suite '" + name + "'");
}

void apply_worker_env() {
  if (const char* env = std::getenv("QTRUNC_WORKERS")) {
    int workers = 0;
    const std::string text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), workers);
    if (ec != std::errc() || ptr != text.data() + text.size() || workers < 1) {
      throw ParameterError("QTRUNC_WORKERS must be a positive integer, got '" + text + "'");
    }
    omp_set_num_threads(workers);
  }
}

}  // namespace

IntRange parse_range(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParameterError("malformed integer or range '" + text + "'");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const std::string_view view(text);
  IntRange r{parse_int(view.substr(0, dots)), parse_int(view.substr(dots + 2))};
  if (r.lo > r.hi) throw ParameterError("empty range '" + text + "'");
  return r;
}

bool SuiteRun::pass() const {
  for (const auto& r : reports) {
    if (!r.pass()) return false;
  }
  return true;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& def : registry()) names.push_back(def.name);
  return names;
}

std::string canonical_suite(const std::string& name) {
  if (name == "mk") return "mk-identity";
  for (const auto& def : registry()) {
    if (def.name == name) return name;
  }
  throw ParameterError("unknown suite '" + name + "'");
}

std::vector<GridPoint> expand_grid(const SuiteSpec& spec) {
  const SuiteDef& def = find_suite(spec.suite);
  for (const auto& [key, range] : spec.grid) {
    bool known = false;
    for (const auto& param : def.params) known = known || param.name == key;
    if (!known) throw ParameterError("suite '" + def.name + "' does not take --" + key);
  }
  std::vector<GridPoint> points{GridPoint{}};
  for (const auto& param : def.params) {
    const auto it = spec.grid.find(param.name);
    const IntRange range = it != spec.grid.end() ? it->second : param.fallback;
    if (range.lo > range.hi) throw ParameterError("empty range for --" + param.name);
    if (range.lo < param.min) {
      throw ParameterError("--" + param.name + " must be >= " + std::to_string(param.min) + ", got " +
                           std::to_string(range.lo));
    }
    std::vector<GridPoint> next;
    if (!param.axis) {
      for (auto p : points) {
        p[param.name + "_lo"] = range.lo;
        p[param.name] = range.hi;
        next.push_back(std::move(p));
      }
    } else {
      for (const auto& p : points) {
        for (std::int64_t v = range.lo; v <= range.hi; ++v) {
          auto q = p;
          q[param.name] = v;
          next.push_back(std::move(q));
        }
      }
    }
    points = std::move(next);
  }
  std::vector<GridPoint> admitted;
  for (auto& p : points) {
    if (def.admissible(p)) admitted.push_back(std::move(p));
  }
  if (admitted.empty()) {
    throw ParameterError("no grid point of suite '" + def.name + "' satisfies its parameter constraints");
  }
  return admitted;
}

SuiteRun run_suite(const SuiteSpec& spec) {
  const SuiteDef& def = find_suite(spec.suite);
  const auto points = expand_grid(spec);
  apply_worker_env();
  SuiteRun run{def.name, std::vector<CheckReport>(points.size())};
  std::vector<std::exception_ptr> errors(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      run.reports[idx] = def.verify(points[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return run;
}

Table table_suite(const SuiteSpec& spec) {
  const SuiteDef& def = find_suite(spec.suite);
  const auto points = expand_grid(spec);
  apply_worker_env();
  std::vector<std::vector<std::vector<std::string>>> chunks(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      def.rows(points[idx], chunks[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Table table{def.name, def.columns, {}};
  for (auto& chunk : chunks) {
    for (auto& row : chunk) table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qtrunc
