#include "cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzpart/mf_dsl.hpp"
#include "fuzzpart/variants.hpp"

namespace fuzzpart::cli {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& s, const std::string& key) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) {
    throw ConfigError("bad numeric value for '" + key + "': " + s);
  }
  return v;
}

long long parse_int(const std::string& s, const std::string& key) {
  long long v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) {
    throw ConfigError("bad integer value for '" + key + "': " + s);
  }
  return v;
}

bool parse_bool(const std::string& s, const std::string& key) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw ConfigError("bad boolean value for '" + key + "': " + s);
}

}  // namespace

CsvError::CsvError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

ConfigInput parse_config_text(std::string_view text) {
  ConfigInput in;
  std::size_t lineno = 0;
  std::istringstream stream{std::string(text)};
  std::string raw;
  while (std::getline(stream, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "dim") {
      in.dim = static_cast<int>(parse_int(value, key));
    } else if (key == "origin") {
      in.origins.push_back(parse_double(value, key));
    } else if (key == "spacing") {
      in.spacings.push_back(parse_double(value, key));
    } else if (key == "count") {
      in.counts.push_back(static_cast<int>(parse_int(value, key)));
    } else if (key == "mf") {
      in.mfs.push_back(value);
    } else if (key == "variant") {
      in.variant = value;
    } else if (key == "tolerance") {
      in.tolerance = parse_double(value, key);
    } else if (key == "seed") {
      in.seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "samples") {
      in.samples_per_axis = static_cast<int>(parse_int(value, key));
    } else if (key == "random") {
      in.random_points = static_cast<int>(parse_int(value, key));
    } else if (key == "resolution") {
      in.resolution = static_cast<int>(parse_int(value, key));
    } else if (key == "panel") {
      in.panel = value;
    } else if (key == "shift") {
      in.shifts.push_back(parse_double(value, key));
    } else if (key == "skip_bad") {
      in.skip_bad = parse_bool(value, key);
    } else if (key == "out") {
      in.out = value;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return in;
}

ConfigInput load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

void overlay(ConfigInput& base, const ConfigInput& over) {
  if (over.dim) base.dim = over.dim;
  if (!over.origins.empty()) base.origins = over.origins;
  if (!over.spacings.empty()) base.spacings = over.spacings;
  if (!over.counts.empty()) base.counts = over.counts;
  if (!over.mfs.empty()) base.mfs = over.mfs;
  if (over.variant) base.variant = over.variant;
  if (over.tolerance) base.tolerance = over.tolerance;
  if (over.seed) base.seed = over.seed;
  if (over.samples_per_axis) base.samples_per_axis = over.samples_per_axis;
  if (over.random_points) base.random_points = over.random_points;
  if (over.resolution) base.resolution = over.resolution;
  if (over.panel) base.panel = over.panel;
  if (!over.shifts.empty()) base.shifts = over.shifts;
  if (over.skip_bad) base.skip_bad = over.skip_bad;
  if (over.out) base.out = over.out;
}

RunConfig resolve(const ConfigInput& in) {
  RunConfig cfg;
  cfg.variant = in.variant.has_value();
  if (cfg.variant && *in.variant != "eq12") {
    throw ConfigError("unknown variant '" + *in.variant +
                      "' (supported: eq12)");
  }
  if (cfg.variant && !in.mfs.empty()) {
    throw ConfigError("--variant and --mf are mutually exclusive");
  }

  std::size_t longest = std::max({in.origins.size(), in.spacings.size(),
                                  in.counts.size(), in.mfs.size()});
  int dim = in.dim.value_or(0);
  if (dim == 0) dim = static_cast<int>(longest);
  if (dim == 0 && cfg.variant) dim = 2;
  if (dim <= 0) {
    throw ConfigError(
        "cannot infer the dimension; pass --dim or per-axis options");
  }
  if (cfg.variant && dim != 2) {
    throw UnsupportedDimension("the eq12 variant is two-dimensional");
  }

  auto broadcast = [dim](const auto& list, auto fallback, const char* key,
                         auto setter) {
    if (list.empty()) {
      for (int j = 0; j < dim; ++j) setter(j, fallback);
    } else if (list.size() == 1) {
      for (int j = 0; j < dim; ++j) setter(j, list[0]);
    } else if (static_cast<int>(list.size()) == dim) {
      for (int j = 0; j < dim; ++j) setter(j, list[j]);
    } else {
      throw ConfigError(std::string("option '") + key + "' given " +
                        std::to_string(list.size()) + " times for " +
                        std::to_string(dim) + " axes");
    }
  };

  cfg.dim = dim;
  cfg.axes.resize(dim);
  broadcast(in.origins, 0.0, "origin",
            [&](int j, double v) { cfg.axes[j].origin = v; });
  broadcast(in.spacings, 1.0, "spacing",
            [&](int j, double v) { cfg.axes[j].spacing = v; });
  broadcast(in.counts, 3, "count",
            [&](int j, int v) { cfg.axes[j].count = v; });
  broadcast(in.mfs, std::string("triangular"), "mf",
            [&](int j, const std::string& v) { cfg.axes[j].mf = v; });

  if (in.tolerance) cfg.tolerance = *in.tolerance;
  if (in.seed) cfg.seed = *in.seed;
  if (in.samples_per_axis) cfg.samples_per_axis = *in.samples_per_axis;
  if (in.random_points) cfg.random_points = *in.random_points;
  if (in.resolution) cfg.resolution = *in.resolution;
  if (in.panel) {
    if (*in.panel != "A" && *in.panel != "B") {
      throw ConfigError("panel must be A or B, got '" + *in.panel + "'");
    }
    cfg.panel = (*in.panel)[0];
  }
  cfg.shifts = in.shifts;
  if (in.skip_bad) cfg.skip_bad = *in.skip_bad;
  if (in.out) cfg.out = *in.out;
  if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (cfg.resolution < 2) throw ConfigError("resolution must be >= 2");
  for (double s : cfg.shifts) {
    if (!(s >= 0.0 && s < 1.0)) {
      throw ConfigError("shift fractions must lie in [0, 1)");
    }
  }
  return cfg;
}

std::string canonical_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "dim = " << cfg.dim << "\n";
  if (cfg.variant) out << "variant = eq12\n";
  out << "tolerance = " << fmt(cfg.tolerance) << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "samples = " << cfg.samples_per_axis << "\n";
  out << "random = " << cfg.random_points << "\n";
  out << "resolution = " << cfg.resolution << "\n";
  out << "panel = " << cfg.panel << "\n";
  out << "skip_bad = " << (cfg.skip_bad ? 1 : 0) << "\n";
  for (double s : cfg.shifts) out << "shift = " << fmt(s) << "\n";
  if (!cfg.out.empty()) out << "out = " << cfg.out << "\n";
  for (const AxisSpec& a : cfg.axes) {
    out << "origin = " << fmt(a.origin) << "\n";
    out << "spacing = " << fmt(a.spacing) << "\n";
    out << "count = " << a.count << "\n";
    if (!cfg.variant) out << "mf = " << a.mf << "\n";
  }
  return out.str();
}

CentralizedMembership PartitionHandle::centralized() const {
  if (is_variant) {
    return variant_centralized(axes[0].spacing, axes[1].spacing);
  }
  return centralized_of(*tensor);
}

double PartitionHandle::set_membership(std::span<const int> node_ix,
                                       std::span<const double> x) const {
  if (!is_variant) {
    return tensor->membership(FuzzySetId{{node_ix.begin(), node_ix.end()}}, x);
  }
  if (node_ix.size() != 2 || x.size() != 2) {
    throw DimensionMismatch("the variant partition is two-dimensional");
  }
  for (int j = 0; j < 2; ++j) {
    if (node_ix[j] < 1 || node_ix[j] > axes[j].count) {
      throw IndexOutOfRange("set index outside the node range");
    }
  }
  if (!in_universe(axes, x)) return 0.0;
  return variant_mu((x[0] - axes[0].node(node_ix[0])) / axes[0].spacing,
                    (x[1] - axes[1].node(node_ix[1])) / axes[1].spacing);
}

double PartitionHandle::corner_sum_at(std::span<const double> x) const {
  const Bin bin{locate_bin_indices(axes, x)};
  double sum = 0.0;
  for (const FuzzySetId& id : bin.corners()) {
    sum += set_membership(id.ix, x);
  }
  return sum;
}

PartitionHandle build_partition(const RunConfig& cfg) {
  PartitionHandle handle;
  handle.axes.reserve(cfg.axes.size());
  for (const AxisSpec& spec : cfg.axes) {
    Axis a{spec.origin, spec.spacing, spec.count};
    a.validate();
    handle.axes.push_back(a);
  }
  handle.is_variant = cfg.variant;
  if (cfg.variant) return handle;

  std::vector<NormalizedMF> mfs;
  mfs.reserve(cfg.axes.size());
  for (const AxisSpec& spec : cfg.axes) {
    if (auto builtin = find_builtin(spec.mf)) {
      mfs.push_back(std::move(*builtin));
    } else {
      mfs.push_back(dsl::compile_mf(spec.mf));
    }
  }
  handle.tensor.emplace(handle.axes, std::move(mfs));
  return handle;
}

CsvResult read_csv(std::istream& in, bool skip_bad) {
  CsvResult result;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  std::vector<double> row;

  auto parse_cells = [](const std::string& text, std::vector<double>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      const std::string cell =
          trim(text.substr(start, comma == std::string::npos
                                      ? std::string::npos
                                      : comma - start));
      double v = 0.0;
      const char* b = cell.data();
      const char* e = b + cell.size();
      auto [p, ec] = std::from_chars(b, e, v);
      if (cell.empty() || ec != std::errc() || p != e || !std::isfinite(v)) {
        return false;
      }
      out.push_back(v);
      if (comma == std::string::npos) return true;
      start = comma + 1;
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (!parse_cells(line, row)) {
      if (first) {
        // Non-numeric first row: header with column names.
        result.data.columns.clear();
        std::size_t start = 0;
        while (true) {
          std::size_t comma = line.find(',', start);
          result.data.columns.push_back(trim(
              line.substr(start, comma == std::string::npos
                                     ? std::string::npos
                                     : comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        first = false;
        continue;
      }
      if (skip_bad) {
        ++result.bad_rows;
        continue;
      }
      throw CsvError(lineno, "malformed numeric row: " + trim(line));
    }
    if (result.data.width == 0) {
      result.data.width = row.size();
    } else if (row.size() != result.data.width) {
      if (skip_bad) {
        ++result.bad_rows;
        first = false;
        continue;
      }
      throw CsvError(lineno, "expected " + std::to_string(result.data.width) +
                                 " columns, got " + std::to_string(row.size()));
    }
    result.data.values.insert(result.data.values.end(), row.begin(), row.end());
    first = false;
  }
  return result;
}

CsvResult read_csv_file(const std::string& path, bool skip_bad) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open data file: " + path);
  return read_csv(f, skip_bad);
}

GridExport make_grid(const PartitionHandle& p, char panel, int resolution) {
  if (p.dim() != 2) {
    throw UnsupportedDimension("panel exports are defined for d = 2");
  }
  if (resolution < 2) throw ConfigError("resolution must be >= 2");

  GridExport g;
  g.metadata.emplace_back("generator", "fuzzpart grid");
  g.metadata.emplace_back("panel", std::string(1, panel));
  g.metadata.emplace_back("dim", "2");
  for (int j = 0; j < 2; ++j) {
    std::ostringstream os;
    os << "origin=" << fmt(p.axes[j].origin)
       << " spacing=" << fmt(p.axes[j].spacing) << " count="
       << p.axes[j].count;
    g.metadata.emplace_back("axis" + std::to_string(j + 1), os.str());
  }
  if (p.is_variant) {
    g.metadata.emplace_back("shape", "variant eq12");
  } else {
    for (int j = 0; j < 2; ++j) {
      g.metadata.emplace_back("mf" + std::to_string(j + 1),
                              p.tensor->mfs()[j].name);
    }
  }
  g.metadata.emplace_back("resolution", std::to_string(resolution));

  g.axis_samples.assign(2, std::vector<double>(resolution));
  if (panel == 'A') {
    g.metadata.emplace_back("quantity", "centralized membership over one support box");
    const CentralizedMembership mu = p.centralized();
    for (int j = 0; j < 2; ++j) {
      const double cj = p.axes[j].spacing;
      for (int i = 0; i < resolution; ++i) {
        g.axis_samples[j][i] = -cj + 2.0 * cj * i / (resolution - 1);
      }
    }
    g.values.reserve(static_cast<std::size_t>(resolution) * resolution);
    double offset[2];
    for (int i0 = 0; i0 < resolution; ++i0) {
      offset[0] = g.axis_samples[0][i0];
      for (int i1 = 0; i1 < resolution; ++i1) {
        offset[1] = g.axis_samples[1][i1];
        g.values.push_back(mu.mu(std::span<const double>(offset, 2)));
      }
    }
  } else if (panel == 'B') {
    g.metadata.emplace_back("quantity", "sum of the four corner memberships over the first bin");
    for (int j = 0; j < 2; ++j) {
      const double lo = p.axes[j].node(1);
      const double hi = p.axes[j].node(2);
      for (int i = 0; i < resolution; ++i) {
        g.axis_samples[j][i] = lo + (hi - lo) * i / (resolution - 1);
      }
    }
    const int corners[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    g.values.reserve(static_cast<std::size_t>(resolution) * resolution);
    double x[2];
    for (int i0 = 0; i0 < resolution; ++i0) {
      x[0] = g.axis_samples[0][i0];
      for (int i1 = 0; i1 < resolution; ++i1) {
        x[1] = g.axis_samples[1][i1];
        double sum = 0.0;
        for (const auto& corner : corners) {
          sum += p.set_membership(std::span<const int>(corner, 2),
                                  std::span<const double>(x, 2));
        }
        g.values.push_back(sum);
      }
    }
  } else {
    throw ConfigError(std::string("unknown panel '") + panel + "'");
  }
  return g;
}

void write_grid_csv(const GridExport& g, std::ostream& out) {
  for (const auto& [k, v] : g.metadata) out << "# " << k << " = " << v << "\n";
  out << "# columns = x1,x2,value\n";
  const std::size_t n1 = g.axis_samples[0].size();
  const std::size_t n2 = g.axis_samples[1].size();
  for (std::size_t i0 = 0; i0 < n1; ++i0) {
    for (std::size_t i1 = 0; i1 < n2; ++i1) {
      out << fmt(g.axis_samples[0][i0]) << "," << fmt(g.axis_samples[1][i1])
          << "," << fmt(g.values[i0 * n2 + i1]) << "\n";
    }
  }
}

namespace {

void write_hist_header(const RunConfig& cfg, std::size_t points,
                       std::size_t dropped, std::ostream& out) {
  out << "# dim = " << cfg.dim << "\n";
  for (const AxisSpec& a : cfg.axes) {
    out << "# axis = origin=" << fmt(a.origin) << " spacing=" << fmt(a.spacing)
        << " count=" << a.count;
    if (!cfg.variant) out << " mf=" << a.mf;
    out << "\n";
  }
  out << "# points = " << points << "\n";
  out << "# dropped = " << dropped << "\n";
}

std::string index_key(const std::vector<int>& ix) {
  std::string s;
  for (std::size_t j = 0; j < ix.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(ix[j]);
  }
  return s;
}

}  // namespace

void write_fuzzy_csv(const FuzzyHistogram& h, const RunConfig& cfg,
                     std::ostream& out) {
  out << "# fuzzpart histogram export (fuzzy)\n";
  write_hist_header(cfg, h.total_points, h.dropped, out);
  out << "# total_mass = " << fmt(h.total_mass()) << "\n";
  out << "# columns = indices...,mass\n";
  for (const auto& [ix, acc] : h.cells) {
    const double mass = acc.value();
    if (mass == 0.0) continue;
    out << index_key(ix) << "," << fmt(mass) << "\n";
  }
}

void write_crisp_csv(const CrispHistogram& h, const RunConfig& cfg,
                     std::ostream& out) {
  out << "# fuzzpart histogram export (crisp)\n";
  write_hist_header(cfg, h.total_points, h.dropped, out);
  out << "# columns = indices...,count\n";
  for (const auto& [ix, count] : h.counts) {
    if (count == 0) continue;
    out << index_key(ix) << "," << count << "\n";
  }
}

namespace {

struct CommandContext {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
};

std::ostream& open_or(std::ofstream& file, const std::string& path,
                      std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw ConfigError("cannot open output file: " + path);
  return file;
}

int cmd_eval(const CommandContext& ctx, const std::vector<double>& point) {
  const PartitionHandle p = build_partition(ctx.cfg);
  if (static_cast<int>(point.size()) != p.dim()) {
    throw ConfigError("point dimension does not match the partition");
  }
  const CentralizedMembership mu = p.centralized();
  ctx.out << "mu(offset) = " << fmt(mu.mu(point)) << "\n";
  if (!in_universe(p.axes, point)) {
    ctx.out << "x lies outside the universe; all set memberships are 0\n";
    return 0;
  }
  const Bin bin{locate_bin_indices(p.axes, point)};
  ctx.out << "bin lower corner = (" << index_key(bin.lower) << ")\n";
  double sum = 0.0;
  for (const FuzzySetId& id : bin.corners()) {
    const double m = p.set_membership(id.ix, point);
    sum += m;
    ctx.out << "A(" << index_key(id.ix) << ") = " << fmt(m) << "\n";
  }
  ctx.out << "corner sum = " << fmt(sum) << "\n";
  return 0;
}

int cmd_verify(const CommandContext& ctx, int definition) {
  const PartitionHandle p = build_partition(ctx.cfg);
  VerifyConfig vcfg;
  vcfg.samples_per_axis = ctx.cfg.samples_per_axis;
  vcfg.random_points = ctx.cfg.random_points;
  vcfg.tolerance = ctx.cfg.tolerance;
  vcfg.seed = ctx.cfg.seed;

  ConditionReport report;
  if (definition == 1) {
    if (p.dim() != 1 || p.is_variant) {
      throw UnsupportedDimension(
          "the nine-condition check applies to one-dimensional partitions");
    }
    report = verify_definition1(
        Partition1D{p.axes[0], p.tensor->mfs()[0]},
        vcfg);
  } else if (definition == 2) {
    std::vector<double> spacings(p.dim());
    for (int j = 0; j < p.dim(); ++j) spacings[j] = p.axes[j].spacing;
    report = verify_definition2(p.centralized(), spacings, vcfg);
  } else {
    throw ConfigError("--definition must be 1 or 2");
  }

  std::ofstream file;
  std::ostream& dest = open_or(file, ctx.cfg.out, ctx.out);
  dest << report.to_text();
  std::size_t passed = 0;
  for (const auto& e : report.entries) passed += e.passed();
  ctx.out << passed << "/" << report.entries.size() << " conditions passed\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_grid(const CommandContext& ctx) {
  const PartitionHandle p = build_partition(ctx.cfg);
  const GridExport g = make_grid(p, ctx.cfg.panel, ctx.cfg.resolution);
  std::ofstream file;
  std::ostream& dest = open_or(file, ctx.cfg.out, ctx.out);
  write_grid_csv(g, dest);
  return 0;
}

int cmd_hist(const CommandContext& ctx, const std::string& data_path,
             const std::string& crisp_out) {
  const PartitionHandle p = build_partition(ctx.cfg);
  if (p.is_variant) {
    throw ConfigError("histograms use tensor partitions (drop --variant)");
  }
  const CsvResult csv = read_csv_file(data_path, ctx.cfg.skip_bad);
  if (csv.data.rows() != 0 &&
      csv.data.width != static_cast<std::size_t>(p.dim())) {
    throw ConfigError("data width " + std::to_string(csv.data.width) +
                      " does not match partition dimension " +
                      std::to_string(p.dim()));
  }
  Dataset data = csv.data;
  data.width = static_cast<std::size_t>(p.dim());

  const FuzzyHistogram h = accumulate_fuzzy(*p.tensor, data);
  ctx.out << "points = " << h.total_points << "\n";
  ctx.out << "dropped = " << h.dropped << "\n";
  if (csv.bad_rows > 0) ctx.out << "bad rows skipped = " << csv.bad_rows << "\n";
  ctx.out << "total mass = " << fmt(h.total_mass()) << "\n";
  if (h.effective_points() == 0) {
    ctx.out << "empty histogram (no points in the universe)\n";
  }

  std::ofstream file;
  std::ostream& dest = open_or(file, ctx.cfg.out, ctx.out);
  write_fuzzy_csv(h, ctx.cfg, dest);
  if (!crisp_out.empty()) {
    const CrispHistogram ch = accumulate_crisp(p.axes, data);
    std::ofstream cfile(crisp_out);
    if (!cfile) throw ConfigError("cannot open output file: " + crisp_out);
    write_crisp_csv(ch, ctx.cfg, cfile);
  }
  return 0;
}

int cmd_compare(const CommandContext& ctx, const std::string& data_path) {
  const PartitionHandle p = build_partition(ctx.cfg);
  if (p.is_variant) {
    throw ConfigError("histograms use tensor partitions (drop --variant)");
  }
  const CsvResult csv = read_csv_file(data_path, ctx.cfg.skip_bad);
  if (csv.data.rows() != 0 &&
      csv.data.width != static_cast<std::size_t>(p.dim())) {
    throw ConfigError("data width does not match partition dimension");
  }
  Dataset data = csv.data;
  data.width = static_cast<std::size_t>(p.dim());

  const auto crisp =
      shift_sensitivity(EstimatorKind::Crisp, data, p.axes,
                        p.tensor->mfs(), ctx.cfg.shifts);
  const auto fuzzy =
      shift_sensitivity(EstimatorKind::Fuzzy, data, p.axes,
                        p.tensor->mfs(), ctx.cfg.shifts);

  std::ofstream file;
  std::ostream& dest = open_or(file, ctx.cfg.out, ctx.out);
  dest << "shift,crisp_l1,fuzzy_l1\n";
  for (std::size_t i = 0; i < crisp.size(); ++i) {
    dest << fmt(crisp[i].shift) << "," << fmt(crisp[i].l1) << ","
         << fmt(fuzzy[i].l1) << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"strong-uniform fuzzy partitions: evaluation, verification, "
               "figure grids, and fuzzy histograms"};
  app.require_subcommand(1);

  ConfigInput flags;
  std::string config_path;
  bool echo_config = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--dim", flags.dim, "number of dimensions");
    cmd->add_option("--origin", flags.origins, "axis origin (repeat per axis)")
        ->allow_extra_args(false);
    cmd->add_option("--spacing", flags.spacings,
                    "node spacing (repeat per axis)")
        ->allow_extra_args(false);
    cmd->add_option("--count", flags.counts, "node count (repeat per axis)")
        ->allow_extra_args(false);
    cmd->add_option("--mf", flags.mfs,
                    "membership function: built-in name or expression "
                    "(repeat per axis)")
        ->allow_extra_args(false);
    cmd->add_option("--variant", flags.variant,
                    "built-in non-tensor shape (eq12)");
    cmd->add_option("--tolerance", flags.tolerance, "numeric tolerance");
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--out", flags.out, "output file (default: stdout)");
    cmd->add_option("--config", config_path, "flat key=value config file");
    cmd->add_flag("--echo-config", echo_config,
                  "print the canonical configuration before running");
    return cmd;
  };

  std::vector<double> eval_point;
  CLI::App* eval = add_common(app.add_subcommand(
      "eval", "evaluate the centralized membership and corner sums"));
  eval->add_option("point", eval_point, "coordinates of the point")
      ->expected(-1);

  int definition = 2;
  CLI::App* verify = add_common(app.add_subcommand(
      "verify", "check the defining partition conditions"));
  verify->add_option("--samples", flags.samples_per_axis,
                     "grid samples per axis");
  verify->add_option("--random", flags.random_points, "random sample count");
  verify->add_option("--definition", definition,
                     "1 (one-dimensional, 9 conditions) or 2 (7 conditions)");

  CLI::App* grid = add_common(app.add_subcommand(
      "grid", "export a figure grid (panel A or B) as CSV"));
  grid->add_option("--resolution", flags.resolution, "samples per axis");
  grid->add_option("--panel", flags.panel, "A or B");

  std::string data_path;
  std::string crisp_out;
  CLI::App* hist = add_common(app.add_subcommand(
      "hist", "accumulate a fuzzy histogram from a CSV dataset"));
  hist->add_option("data", data_path, "CSV dataset path")->required();
  hist->add_flag("--skip-bad", [&flags](std::int64_t) { flags.skip_bad = true; },
                 "skip malformed rows instead of failing");
  hist->add_option("--crisp-out", crisp_out,
                   "also write a crisp histogram to this path");

  CLI::App* compare = add_common(app.add_subcommand(
      "compare", "crisp vs fuzzy density shift-sensitivity table"));
  compare->add_option("data", data_path, "CSV dataset path")->required();
  compare->add_option("--shift", flags.shifts,
                      "shift fraction in [0,1) (repeatable)")
      ->allow_extra_args(false);
  compare->add_flag("--skip-bad",
                    [&flags](std::int64_t) { flags.skip_bad = true; },
                    "skip malformed rows instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    ConfigInput input;
    if (!config_path.empty()) input = load_config_file(config_path);
    overlay(input, flags);
    RunConfig cfg = resolve(input);
    if (echo_config) out << canonical_config(cfg);

    CommandContext ctx{cfg, out, err};
    if (eval->parsed()) return cmd_eval(ctx, eval_point);
    if (verify->parsed()) return cmd_verify(ctx, definition);
    if (grid->parsed()) return cmd_grid(ctx);
    if (hist->parsed()) return cmd_hist(ctx, data_path, crisp_out);
    if (compare->parsed()) return cmd_compare(ctx, data_path);
    err << "no command given\n";
    return 2;
  } catch (const CsvError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fuzzpart::cli
