#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tanglerep/cache.hpp"
#include "tanglerep/errors.hpp"
#include "tanglerep/report.hpp"

using namespace tanglerep;

namespace {

constexpr long kGenericSizeLimit = 1296;

struct GridOptions {
  long m = 0, n = 0;
  long f = -1; // -1 selects every valid level
  std::string grid;
  std::vector<std::string> field_specs;
  std::string out = "table";
  std::string cache_dir;
  bool force_generic = false;
};

void add_grid_options(CLI::App* sub, GridOptions& o, bool with_f,
                      bool with_cache) {
  sub->add_option("--m", o.m, "symplectic rank (dim V = 2m)");
  sub->add_option("--n", o.n, "tensor degree");
  if (with_f) sub->add_option("--f", o.f, "contraction level (default: all)");
  sub->add_option("--grid", o.grid, "ranges m1..m2,n1..n2 instead of --m/--n");
  sub->add_option("--field", o.field_specs,
                  "coefficient field: generic | modp:P | zeta:A/B (repeatable)");
  sub->add_option("--out", o.out, "output format: table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  if (with_cache)
    sub->add_option("--cache", o.cache_dir,
                    "cache directory (default: $TANGLEREP_CACHE_DIR)");
  sub->add_flag("--force-generic", o.force_generic,
                "allow generic coefficients beyond the size guard");
}

std::pair<long, long> parse_range(const std::string& part) {
  auto bad = [&] {
    throw usage_error("bad range \"" + part + "\": expected a or a..b");
  };
  std::size_t dots = part.find("..");
  try {
    if (dots == std::string::npos) {
      long v = std::stol(part);
      return {v, v};
    }
    long a = std::stol(part.substr(0, dots));
    long b = std::stol(part.substr(dots + 2));
    if (a > b) bad();
    return {a, b};
  } catch (const usage_error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return {0, 0};
}

/// Resolve --m/--n/--grid into inclusive bounds.
std::array<long, 4> resolve_grid(const GridOptions& o) {
  if (!o.grid.empty()) {
    if (o.m != 0 || o.n != 0)
      throw usage_error("pass either --m/--n or --grid, not both");
    std::size_t comma = o.grid.find(',');
    if (comma == std::string::npos)
      throw usage_error("bad grid \"" + o.grid + "\": expected m1..m2,n1..n2");
    auto [m1, m2] = parse_range(o.grid.substr(0, comma));
    auto [n1, n2] = parse_range(o.grid.substr(comma + 1));
    return {m1, m2, n1, n2};
  }
  if (o.m == 0 || o.n == 0) throw usage_error("need --m and --n, or --grid");
  return {o.m, o.m, o.n, o.n};
}

void validate_point(long m, long n) {
  if (m < 1) throw usage_error("rank must be at least 1");
  if (n < 2) throw usage_error("tensor degree must be at least 2");
}

std::vector<Field> resolve_fields(const std::vector<std::string>& specs) {
  std::vector<Field> out;
  if (specs.empty()) {
    out.push_back(make_generic_field());
    return out;
  }
  for (const std::string& s : specs) out.push_back(parse_field(s));
  return out;
}

long tensor_dim(long m, long n) {
  long d = 1;
  for (long i = 0; i < n; ++i) {
    if (d > kGenericSizeLimit) return d; // already beyond any guard
    d *= 2 * m;
  }
  return d;
}

void size_guard(long m, long n, const std::vector<Field>& fields,
                bool force_generic) {
  if (force_generic || tensor_dim(m, n) <= kGenericSizeLimit) return;
  for (const Field& f : fields)
    if (f->label() == "generic")
      throw usage_error(
          "generic coefficients at m=" + std::to_string(m) +
          ", n=" + std::to_string(n) + " exceed the size guard (dimension " +
          std::to_string(tensor_dim(m, n)) + " > " +
          std::to_string(kGenericSizeLimit) +
          "); pass --force-generic or run it over a specialized field "
          "(modp:P or zeta:A/B)");
}

std::string field_list_echo(const std::vector<Field>& fields) {
  std::string out = "[";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += fields[i]->label();
  }
  return out + "]";
}

void emit(const ReportEnvelope& envelope, const std::string& format) {
  if (format == "json")
    std::cout << envelope_json(envelope);
  else if (format == "csv")
    std::cout << envelope_csv(envelope);
  else
    std::cout << envelope_table(envelope);
}

void report_cache_traffic(const Cache& cache) {
  for (const std::string& w : cache.warnings())
    std::cerr << "cache: " << w << "\n";
  if (cache.enabled())
    std::cerr << "cache: " << cache.hits() << " hits, " << cache.misses()
              << " misses\n";
}

AlgebraSpan cached_algebra(Cache& cache, const RepContext& ctx) {
  std::string key = Cache::algebra_key(ctx.m(), ctx.n(), ctx.field());
  if (auto hit = cache.load_algebra(key, ctx.field())) {
    std::cerr << "cache: hit " << key << "\n";
    return std::move(*hit);
  }
  AlgebraSpan algebra = bmw_algebra(ctx);
  if (cache.enabled()) {
    cache.store_algebra(key, algebra);
    std::cerr << "cache: stored " << key << "\n";
  }
  return algebra;
}

// ---------------------------------------------------------------- eval ----

struct EvalOptions {
  std::string expr;
  long m = 1;
  std::string field_spec = "generic";
  bool force_generic = false;
};

int cmd_eval(const EvalOptions& o) {
  Field fld = parse_field(o.field_spec);
  TanglePtr t = parse_tangle(fld, o.expr);
  size_guard(o.m, std::max({t->src, t->dst, 1L}), {fld}, o.force_generic);
  RepContext ctx(o.m, 1, fld);
  Mat M = rt_eval(ctx, t);
  std::cout << M.rows() << "x" << M.cols() << " matrix over " << fld->label()
            << ", " << M.nnz() << " nonzero entries\n";
  if (M.rows() <= 8 && M.cols() <= 8) {
    for (long i = 0; i < M.rows(); ++i) {
      std::cout << "[";
      for (long j = 0; j < M.cols(); ++j) {
        if (j) std::cout << ", ";
        Scalar v = M.at(i, j);
        std::cout << (v.is_zero() ? "0" : v.str());
      }
      std::cout << "]\n";
    }
  } else {
    for (long i = 0; i < M.rows(); ++i)
      for (const auto& [j, v] : M.row(i))
        std::cout << i << " " << j << " " << v.str() << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- check ----

struct CheckOptions {
  GridOptions grid;
  std::string suite = "all";
};

int cmd_check(const CheckOptions& o) {
  auto [m1, m2, n1, n2] = resolve_grid(o.grid);
  std::vector<Field> fields = resolve_fields(o.grid.field_specs);

  ReportEnvelope envelope;
  {
    std::ostringstream cfg;
    cfg << "check suite=" << o.suite << " m=" << m1 << ".." << m2
        << " n=" << n1 << ".." << n2 << " fields=" << field_list_echo(fields)
        << " out=" << o.grid.out;
    envelope.config = cfg.str();
  }

  for (long m = m1; m <= m2; ++m)
    for (long n = n1; n <= n2; ++n) {
      validate_point(m, n);
      size_guard(m, n, fields, o.grid.force_generic);
      for (const Field& fld : fields) {
        RepContext ctx(m, n, fld);
        if (o.suite == "relations" || o.suite == "all")
          envelope.suites.push_back(
              {"relations", m, n, fld->label(), check_bmw_relations(ctx)});
        if (o.suite == "tangle" || o.suite == "all")
          envelope.suites.push_back(
              {"tangle", m, n, fld->label(), check_tangle_relations(ctx)});
        if (o.suite == "uq-commute" || o.suite == "all")
          envelope.suites.push_back(
              {"uq-commute", m, n, fld->label(), check_uq_commutation(ctx)});
      }
    }

  bool ok = true;
  for (const SuiteOutcome& s : envelope.suites) ok = ok && all_pass(s.results);
  emit(envelope, o.grid.out);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- dims ----

/// Levels to show for one degree: an explicit --f, or all of 0..floor(n/2).
std::vector<long> levels_for(long n, long f, bool duality) {
  long lo = duality ? 1 : 0;
  long top = n / 2 + (duality ? 0 : 1);
  if (f < 0) {
    std::vector<long> out;
    for (long k = lo; k <= n / 2; ++k) out.push_back(k);
    return out;
  }
  if (f < lo || f > top)
    throw usage_error("level " + std::to_string(f) + " out of range for n=" +
                      std::to_string(n));
  return {f};
}

/// Record a cross-field dimension mismatch note per (m,n,f) group.
template <typename Row, typename Key>
void flag_mismatches(const std::vector<Row>& rows, Key key,
                     ReportEnvelope& envelope, bool& ok) {
  std::map<std::tuple<long, long, long>, std::vector<const Row*>> groups;
  for (const Row& r : rows) groups[{r.m, r.n, r.f}].push_back(&r);
  for (const auto& [point, members] : groups)
    for (std::size_t i = 1; i < members.size(); ++i)
      if (key(*members[i]) != key(*members[0])) {
        std::ostringstream msg;
        msg << "dimension mismatch at m=" << std::get<0>(point)
            << " n=" << std::get<1>(point) << " f=" << std::get<2>(point)
            << " between " << members[0]->field_label << " and "
            << members[i]->field_label;
        envelope.notes.push_back(msg.str());
        ok = false;
      }
}

int cmd_dims(const GridOptions& o) {
  auto [m1, m2, n1, n2] = resolve_grid(o);
  std::vector<Field> fields = resolve_fields(o.field_specs);
  Cache cache(o.cache_dir.empty() ? Cache::default_dir() : o.cache_dir);

  ReportEnvelope envelope;
  {
    std::ostringstream cfg;
    cfg << "dims m=" << m1 << ".." << m2 << " n=" << n1 << ".." << n2
        << " f=" << (o.f < 0 ? std::string("all") : std::to_string(o.f))
        << " fields=" << field_list_echo(fields) << " out=" << o.out;
    envelope.config = cfg.str();
  }

  for (long m = m1; m <= m2; ++m)
    for (long n = n1; n <= n2; ++n) {
      validate_point(m, n);
      size_guard(m, n, fields, o.force_generic);
      std::vector<long> levels = levels_for(n, o.f, false);
      for (const Field& fld : fields) {
        RepContext ctx(m, n, fld);
        AlgebraSpan algebra = cached_algebra(cache, ctx);
        std::vector<LevelDims> ladder = level_dims(ctx, algebra);
        for (long f : levels) {
          const LevelDims& row = ladder[f];
          envelope.dims.push_back({m, n, f, fld->label(), ctx.dim_tensor(),
                                   algebra.span.dim(), row.dim_ideal,
                                   row.dim_w, ctx.dim_tensor() - row.dim_w,
                                   row.dim_ht});
        }
      }
    }

  bool ok = true;
  flag_mismatches(
      envelope.dims,
      [](const DimsRow& r) {
        return std::tuple(r.dim_total, r.dim_algebra, r.dim_ideal, r.dim_w,
                          r.dim_quotient, r.dim_ht);
      },
      envelope, ok);
  emit(envelope, o.out);
  report_cache_traffic(cache);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------- duality ----

int cmd_duality(const GridOptions& o) {
  auto [m1, m2, n1, n2] = resolve_grid(o);
  std::vector<Field> fields = resolve_fields(o.field_specs);
  Cache cache(o.cache_dir.empty() ? Cache::default_dir() : o.cache_dir);

  ReportEnvelope envelope;
  {
    std::ostringstream cfg;
    cfg << "duality m=" << m1 << ".." << m2 << " n=" << n1 << ".." << n2
        << " f=" << (o.f < 0 ? std::string("all") : std::to_string(o.f))
        << " fields=" << field_list_echo(fields) << " out=" << o.out;
    envelope.config = cfg.str();
  }

  for (long m = m1; m <= m2; ++m)
    for (long n = n1; n <= n2; ++n) {
      validate_point(m, n);
      size_guard(m, n, fields, o.force_generic);
      std::vector<long> levels = levels_for(n, o.f, true);
      for (const Field& fld : fields) {
        RepContext ctx(m, n, fld);
        AlgebraSpan algebra = cached_algebra(cache, ctx);
        for (long f : levels)
          envelope.reports.push_back(duality_report(ctx, f, algebra));
      }
    }

  bool ok = true;
  for (const DualityReport& r : envelope.reports) ok = ok && r.surjective;
  flag_mismatches(
      envelope.reports,
      [](const DualityReport& r) {
        return std::tuple(r.dim_total, r.dim_algebra, r.dim_ideal, r.dim_w,
                          r.dim_quotient, r.dim_ht, r.dim_image,
                          r.dim_commutant);
      },
      envelope, ok);
  emit(envelope, o.out);
  report_cache_traffic(cache);
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluator for framed tangles on symplectic tensor space"};
  app.require_subcommand(1);

  EvalOptions eval_opts;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate a diagram expression to its matrix");
  eval->add_option("expr", eval_opts.expr, "diagram expression")->required();
  eval->add_option("--m", eval_opts.m, "symplectic rank (dim V = 2m)");
  eval->add_option("--field", eval_opts.field_spec,
                   "coefficient field: generic | modp:P | zeta:A/B");
  eval->add_flag("--force-generic", eval_opts.force_generic,
                 "allow generic coefficients beyond the size guard");

  CheckOptions check_opts;
  CLI::App* check = app.add_subcommand(
      "check", "run relation suites on a grid of (m, n) points");
  check->add_option("--suite", check_opts.suite,
                    "relations | tangle | uq-commute | all")
      ->check(CLI::IsMember({"relations", "tangle", "uq-commute", "all"}));
  add_grid_options(check, check_opts.grid, false, false);

  GridOptions dims_opts;
  CLI::App* dims = app.add_subcommand(
      "dims", "dimension ladder of ideals, sweeps and harmonic layers");
  add_grid_options(dims, dims_opts, true, true);

  GridOptions duality_opts;
  CLI::App* duality = app.add_subcommand(
      "duality", "image vs commutant on the quotient, with verdicts");
  add_grid_options(duality, duality_opts, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (eval->parsed())
      code = cmd_eval(eval_opts);
    else if (check->parsed())
      code = cmd_check(check_opts);
    else if (dims->parsed())
      code = cmd_dims(dims_opts);
    else
      code = cmd_duality(duality_opts);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "timing: total " << elapsed.count() << " ms\n";
  return code;
}
