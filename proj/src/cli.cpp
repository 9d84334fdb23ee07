#include "spinor_disc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spinor_disc/clifford.hpp"
#include "spinor_disc/errors.hpp"
#include "spinor_disc/kernels.hpp"
#include "spinor_disc/spectrum.hpp"
#include "spinor_disc/verify.hpp"

namespace spinor_disc::cli {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rendering

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return std::signbit(v) ? "-0" : "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

namespace {

std::string value_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return format_double(x);
        else return x;
      },
      v);
}

json value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return json(format_double(x));
        }
        return json(x);
      },
      v);
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, format_double(j.get<double>()));
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

}  // namespace

std::string render_csv(const Document& doc) {
  std::ostringstream os;
  os << "# " << kToolName << " " << kToolVersion << "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  flatten(doc.meta, "", lines);
  for (const auto& [k, v] : lines) os << "# " << k << ": " << v << "\n";
  bool first = true;
  for (const auto& t : doc.tables) {
    if (!first) os << "\n";
    first = false;
    os << "# table: " << t.name << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(value_text(row[c]));
      os << "\n";
    }
  }
  return os.str();
}

std::string render_json(const Document& doc) {
  json root = json::object();
  root["meta"] = doc.meta;
  for (const auto& t : doc.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = value_json(row[c]);
      rows.push_back(std::move(r));
    }
    root[t.name] = std::move(rows);
  }
  return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v))
    throw UsageError("invalid number '" + s + "' in " + what);
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const char* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw UsageError("invalid integer '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

void require_epsilons(const std::vector<double>& eps) {
  for (double e : eps)
    if (!(e >= 0.0 && e < 0.5)) throw UsageError("epsilon " + format_double(e) + " outside [0, 0.5)");
}

}  // namespace

std::vector<double> parse_double_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw UsageError("range '" + spec + "' must look like a:b:steps");
  const double a = parse_double(parts[0], "range start");
  const double b = parse_double(parts[1], "range end");
  const int steps = parse_int(parts[2], "range steps");
  if (steps < 1) throw UsageError("range steps must be >= 1");
  if (b < a) throw UsageError("range end is below its start");
  if (steps == 1) {
    if (a != b) throw UsageError("a single-step range needs a == b");
    return {a};
  }
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) out[i] = a + (b - a) * i / (steps - 1);
  out.back() = b;
  return out;
}

std::vector<int> parse_int_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return {parse_int(parts[0], "integer value")};
  if (parts.size() != 2) throw UsageError("integer range '" + spec + "' must look like a:b");
  const int a = parse_int(parts[0], "range start");
  const int b = parse_int(parts[1], "range end");
  if (b < a) throw UsageError("range end is below its start");
  std::vector<int> out;
  for (int k = a; k <= b; ++k) out.push_back(k);
  return out;
}

std::pair<int, int> parse_grid(const std::string& spec) {
  const auto parts = split(spec, 'x');
  if (parts.empty() || parts.size() > 2) throw UsageError("grid '" + spec + "' must look like NX or NXxNE");
  const int nx = parse_int(parts[0], "grid");
  const int ne = parts.size() == 2 ? parse_int(parts[1], "grid") : 0;
  if (nx < 2 || (parts.size() == 2 && ne < 2)) throw UsageError("grid resolutions must be >= 2");
  return {nx, ne};
}

json RunConfig::echo() const {
  json j = json::object();
  j["command"] = command;
  // Unset selections echo as "default"; each command documents what that means.
  j["epsilon"] = epsilon_spec ? json(epsilons) : json("default");
  j["n"] = n_spec ? json(ns) : json("default");
  j["l0"] = l0_spec ? json(l0s) : json("default");
  j["grid"] = std::to_string(grid_x) + (grid_e ? "x" + std::to_string(grid_e) : "");
  j["delta"] = delta;
  j["format"] = format == Format::Csv ? "csv" : "json";
  j["out"] = out;
  if (!figure_id.empty()) j["figure_id"] = figure_id;
  if (!dims.empty()) j["dim"] = dims;
  if (!slices.empty()) j["slices"] = slices;
  j["inject_fault"] = inject_fault;
  return j;
}

namespace {

json base_meta(const RunConfig& cfg) {
  json m = json::object();
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  m["config"] = cfg.echo();
  return m;
}

std::string pair_name(const clifford::CartanPair& p) { return "S" + std::to_string(p.a) + std::to_string(p.b); }

std::string complex_text(std::complex<double> z) {
  if (z.imag() != 0.0 && z.real() == 0.0) return format_double(z.imag()) + "i";
  return format_double(z.real());
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

Document cmd_spectrum(const RunConfig& cfg) {
  require_epsilons(cfg.epsilons);
  Document doc;
  doc.meta = base_meta(cfg);
  doc.meta["b_phase"] = "+i";
  Table t{"spectrum", {"epsilon", "n", "l0", "mass_sq", "mass", "consistency_residual", "consistent"}, {}};
  for (double e : cfg.epsilons)
    for (int n : cfg.ns)
      for (int l0 : cfg.l0s) {
        if (n < 0) throw UsageError("n must be >= 0");
        if (l0 < n) continue;
        const auto s = spectrum::terminating_mode({e, n, l0});
        t.rows.push_back({e, static_cast<long long>(n), static_cast<long long>(l0), s.mass_sq, s.mass(),
                          s.consistency_residual, s.consistency_residual < 1e-8});
      }
  if (t.rows.empty()) throw UsageError("no (epsilon, n, l0) combination with l0 >= n");
  doc.tables.push_back(std::move(t));
  return doc;
}

Document cmd_mode(const RunConfig& cfg) {
  require_epsilons(cfg.epsilons);
  if (cfg.epsilons.size() != 1 || cfg.ns.size() != 1 || cfg.l0s.size() != 1)
    throw UsageError("mode needs a single --epsilon, --n and --l0");
  const int n = cfg.ns[0];
  const int l0 = cfg.l0s[0];
  if (n < 0) throw UsageError("n must be >= 0");
  if (n > l0) throw UsageError("mode needs n <= l0");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
  const int points = cfg.grid_x ? cfg.grid_x : 401;

  const auto s = spectrum::terminating_mode({cfg.epsilons[0], n, l0});
  const auto grid = spectrum::clamped_grid(points, cfg.delta);
  const auto prof = kernels::sample_mode(s, grid, kernels::Execution::Parallel);

  Document doc;
  doc.meta = base_meta(cfg);
  doc.meta["mass_sq"] = s.mass_sq;
  doc.meta["mass"] = s.mass();
  doc.meta["norm_const"] = s.norm_const;
  doc.meta["consistency_residual"] = s.consistency_residual;
  doc.meta["exact_solution"] = s.consistency_residual < 1e-8;
  doc.meta["b_phase"] = "+i";

  Table c{"coefficients", {"l", "a"}, {}};
  for (int l = l0; l >= n; --l) c.rows.push_back({static_cast<long long>(l), s.coeff(l)});
  Table p{"profile", {"x", "A", "B_amplitude"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) p.rows.push_back({prof.x[i], prof.a[i], prof.b[i]});
  doc.tables.push_back(std::move(c));
  doc.tables.push_back(std::move(p));
  return doc;
}

namespace {

struct FigureSpec {
  const char* id;
  kernels::Quantity quantity;
  int n;
  int l0;
  bool slices;
};

constexpr FigureSpec kFigures[] = {
    {"fig1", kernels::Quantity::A, 0, 2, false}, {"fig2", kernels::Quantity::B, 0, 2, false},
    {"fig3", kernels::Quantity::A, 0, 4, false}, {"fig4", kernels::Quantity::B, 0, 4, false},
    {"fig5", kernels::Quantity::A, 0, 4, true},  {"fig6", kernels::Quantity::B, 0, 4, true},
    {"fig7", kernels::Quantity::A, 1, 2, false}, {"fig8", kernels::Quantity::B, 1, 2, false},
};

const FigureSpec& find_figure(const std::string& id) {
  std::string key = id;
  if (key.size() == 1 && key[0] >= '1' && key[0] <= '8') key = "fig" + key;
  for (const auto& f : kFigures)
    if (key == f.id) return f;
  throw UsageError("unknown figure id '" + id + "' (expected fig1 ... fig8)");
}

}  // namespace

Document cmd_figure(const RunConfig& cfg) {
  if (cfg.figure_id.empty()) throw UsageError("figure needs --figure-id");
  const FigureSpec& f = find_figure(cfg.figure_id);
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
  const int nx = cfg.grid_x ? cfg.grid_x : 400;
  const int ne = cfg.grid_e ? cfg.grid_e : 50;

  std::vector<double> eps;
  if (!cfg.slices.empty()) {
    eps = cfg.slices;
  } else if (f.slices) {
    eps = {0.0, 0.25, 0.49};
  } else if (cfg.epsilon_spec) {
    eps = cfg.epsilons;
  } else {
    eps = parse_double_range("0:0.49:" + std::to_string(ne));
  }
  require_epsilons(eps);

  const auto x = spectrum::clamped_grid(nx, cfg.delta);
  const auto surf = kernels::figure_surface(f.n, f.l0, f.quantity, x, eps, kernels::Execution::Parallel);
  double worst = 0.0;
  for (double r : surf.consistency_residual) worst = std::max(worst, r);

  Document doc;
  doc.meta = base_meta(cfg);
  doc.meta["figure"] = f.id;
  doc.meta["quantity"] = f.quantity == kernels::Quantity::A ? "A" : "B_amplitude";
  doc.meta["n"] = f.n;
  doc.meta["l0"] = f.l0;
  doc.meta["layout"] = f.slices || !cfg.slices.empty() ? "slices" : "surface";
  doc.meta["gauge"] = "a^l0 = 1";
  doc.meta["b_phase"] = "+i";
  doc.meta["max_consistency_residual"] = worst;
  doc.meta["exact_solution"] = worst < 1e-8;

  Table t{"figure", {"epsilon", "x", f.quantity == kernels::Quantity::A ? "A" : "B_amplitude"}, {}};
  for (std::size_t j = 0; j < eps.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) t.rows.push_back({eps[j], x[i], surf.at(j, i)});
  doc.tables.push_back(std::move(t));
  return doc;
}

namespace {

struct Case {
  double eps;
  int n;
  int l0;
};

std::vector<Case> verify_cases(const RunConfig& cfg) {
  std::vector<Case> out;
  const bool custom = cfg.epsilon_spec || cfg.n_spec || cfg.l0_spec;
  if (!custom) {
    for (double e : {0.0, 0.1, 0.25, 0.4, 0.49})
      for (int l0 = 1; l0 <= 5; ++l0) out.push_back({e, 0, l0});
    for (int n : {1, 2})
      for (int l0 = n; l0 <= 5; ++l0) out.push_back({0.0, n, l0});
    return out;
  }
  const std::vector<double> eps = cfg.epsilon_spec ? cfg.epsilons : std::vector<double>{0.0, 0.1, 0.25, 0.4, 0.49};
  const std::vector<int> ns = cfg.n_spec ? cfg.ns : std::vector<int>{0};
  std::vector<int> l0s = cfg.l0_spec ? cfg.l0s : std::vector<int>{1, 2, 3, 4, 5};
  for (double e : eps)
    for (int n : ns)
      for (int l0 : l0s)
        if (l0 >= std::max(n, 1)) out.push_back({e, n, l0});
  return out;
}

}  // namespace

Document cmd_verify(const RunConfig& cfg) {
  if (cfg.epsilon_spec) require_epsilons(cfg.epsilons);
  for (int n : cfg.ns)
    if (n < 0) throw UsageError("n must be >= 0");
  const auto cases = verify_cases(cfg);
  if (cases.empty()) throw UsageError("verification sweep is empty (need l0 >= max(n, 1))");

  // One finite-volume solve per (eps, n), shared by every l0.
  std::vector<kernels::FdCase> fd_cases;
  std::vector<int> fd_count;
  for (const auto& c : cases) {
    auto it = std::find_if(fd_cases.begin(), fd_cases.end(),
                           [&](const kernels::FdCase& f) { return f.epsilon == c.eps && f.n == c.n; });
    if (it == fd_cases.end()) {
      fd_cases.push_back({c.eps, c.n});
      fd_count.push_back(0);
      it = fd_cases.end() - 1;
    }
    auto& cnt = fd_count[it - fd_cases.begin()];
    cnt = std::max(cnt, c.l0 - c.n + 1);
  }
  const int count = *std::max_element(fd_count.begin(), fd_count.end());
  const auto fd = kernels::fd_sweep(fd_cases, count, 2000, kernels::Execution::Parallel);

  const auto grid = spectrum::clamped_grid(cfg.grid_x ? cfg.grid_x : 199, 0.01);
  Table t{"checks", {"check", "epsilon", "n", "l0", "value", "budget", "pass"}, {}};
  Document doc;
  auto add = [&](const std::string& name, const Case& c, double value, double budget) {
    const bool pass = value <= budget;
    t.rows.push_back({name, c.eps, static_cast<long long>(c.n), static_cast<long long>(c.l0), value, budget, pass});
    if (!pass && doc.ok) {
      doc.ok = false;
      doc.failure_summary = name + " failed at epsilon=" + format_double(c.eps) + " n=" + std::to_string(c.n) +
                            " l0=" + std::to_string(c.l0) + " (" + format_double(value) + " > " +
                            format_double(budget) + ")";
    }
  };

  for (const auto& c : cases) {
    auto s = spectrum::terminating_mode({c.eps, c.n, c.l0});
    if (cfg.inject_fault) {
      const int l = c.l0 > c.n ? c.l0 - 1 : c.l0;
      s.coeffs[l - c.n] += 1e-3;
    }
    const std::size_t fi = std::find_if(fd_cases.begin(), fd_cases.end(),
                                        [&](const kernels::FdCase& f) { return f.epsilon == c.eps && f.n == c.n; }) -
                           fd_cases.begin();
    const double oracle = fd[fi][c.l0 - c.n];
    add("fd_spectrum", c, std::abs(oracle - s.mass_sq) / std::max(1.0, s.mass_sq), 1e-3);
    add("recursion_consistency", c, s.consistency_residual, 1e-8);
    add("first_order", c, verify::first_order_residual(s, grid).worst_ratio, 1.0);
    add("second_order_A", c, verify::second_order_residual(s, verify::Component::A, grid).worst_ratio, 1.0);
    add("second_order_B", c, verify::second_order_residual(s, verify::Component::B, grid).worst_ratio, 1.0);
    const auto ac = verify::projection_recurrence_check(s, c.l0 + 20);
    add("projection_alpha", c, ac.alpha_max, 1e-8);
    add("projection_beta", c, ac.beta_max, 1e-8);
  }

  std::size_t failed = 0;
  for (const auto& r : t.rows)
    if (!std::get<bool>(r.back())) ++failed;
  doc.meta = base_meta(cfg);
  doc.meta["residual_budgets"] = "1e-8 for |x| <= 0.9, 1e-6 for |x| <= 0.99 (value = worst residual/budget)";
  doc.meta["checks"] = t.rows.size();
  doc.meta["failed"] = failed;
  doc.meta["status"] = doc.ok ? "pass" : "fail";
  if (!doc.ok) doc.meta["first_failure"] = doc.failure_summary;
  doc.tables.push_back(std::move(t));
  return doc;
}

Document cmd_clifford(const RunConfig& cfg) {
  const std::vector<int> dims = cfg.dims.empty() ? std::vector<int>{6} : cfg.dims;
  for (int d : dims)
    if (d < 2 || d > 10 || d % 2) throw UsageError("--dim must be even and within 2..10, got " + std::to_string(d));

  Document doc;
  doc.meta = base_meta(cfg);
  Table fam{"families", {"d", "family", "checks", "max_error", "pass"}, {}};
  Table st{"states", {"d", "index", "tags", "handedness", "cartan_eigenvalues"}, {}};
  json dims_meta = json::object();
  for (int d : dims) {
    const auto g = clifford::GammaSet::build(d);
    json dm = json::object();
    dm["labels"] = g.labels();
    std::vector<std::string> cartan;
    for (const auto& p : g.cartan_pairs()) cartan.push_back(pair_name(p));
    dm["cartan"] = cartan;
    dm["spinor_dim"] = g.dim();
    dims_meta[std::to_string(d)] = dm;

    for (const auto& f : clifford::check_identities(g)) {
      fam.rows.push_back({static_cast<long long>(d), f.family, static_cast<long long>(f.checks), f.max_error, f.pass});
      if (!f.pass && doc.ok) {
        doc.ok = false;
        doc.failure_summary = "clifford family " + f.family + " failed in d=" + std::to_string(d);
      }
    }
    const auto states = clifford::weyl_basis(g);
    for (std::size_t i = 0; i < states.size(); ++i) {
      std::string eig;
      for (const auto& tag : states[i].tags) {
        if (!eig.empty()) eig += " ";
        eig += pair_name(tag.pair) + "=" + complex_text(tag.eigenvalue());
      }
      st.rows.push_back({static_cast<long long>(d), static_cast<long long>(i + 1), states[i].name,
                         static_cast<long long>(states[i].handedness), eig});
    }
  }
  doc.meta["dimensions"] = dims_meta;
  doc.meta["status"] = doc.ok ? "pass" : "fail";
  doc.tables.push_back(std::move(fam));
  doc.tables.push_back(std::move(st));
  return doc;
}

// ---------------------------------------------------------------------------
// Driver

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spinor modes on an almost-S2 disc: spectra, profiles, figure data and checks", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  std::string eps_value, eps_range, n_spec, l0_value, l0_range, grid, format = "csv", out_path, figure_id, dim_spec,
      slices_spec;
  double delta = 1e-10;
  bool inject_fault = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
  };
  auto physics = [&](CLI::App* sub) {
    auto* e = sub->add_option("--epsilon", eps_value, "spin-connection parameter in [0, 0.5)");
    sub->add_option("--epsilon-range", eps_range, "a:b:steps")->excludes(e);
    sub->add_option("--n", n_spec, "orbital number k or range a:b");
    auto* l = sub->add_option("--l0", l0_value, "terminating degree");
    sub->add_option("--l0-range", l0_range, "a:b")->excludes(l);
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "mass spectrum table");
  physics(spectrum_cmd);
  common(spectrum_cmd);

  auto* mode_cmd = app.add_subcommand("mode", "sampled radial profiles of one mode");
  physics(mode_cmd);
  mode_cmd->add_option("--grid", grid, "NX");
  mode_cmd->add_option("--delta", delta, "endpoint clamp");
  common(mode_cmd);

  auto* figure_cmd = app.add_subcommand("figure", "surface or slice data for figures fig1 ... fig8");
  figure_cmd->add_option("--figure-id", figure_id, "fig1 ... fig8")->required();
  figure_cmd->add_option("--grid", grid, "NXxNE");
  figure_cmd->add_option("--delta", delta, "endpoint clamp");
  figure_cmd->add_option("--epsilon-range", eps_range, "a:b:steps");
  figure_cmd->add_option("--slices", slices_spec, "comma-separated epsilon values");
  common(figure_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "oracle and residual checks");
  physics(verify_cmd);
  verify_cmd->add_option("--grid", grid, "residual grid points");
  verify_cmd->add_flag("--inject-fault", inject_fault, "perturb one coefficient per mode by 1e-3");
  common(verify_cmd);

  auto* clifford_cmd = app.add_subcommand("clifford", "gamma-matrix identity checks");
  clifford_cmd->add_option("--dim", dim_spec, "even dimension(s), e.g. 6 or 2,4,6");
  common(clifford_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  RunConfig cfg;
  Document doc;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!eps_value.empty()) {
      cfg.epsilons = {parse_double(eps_value, "--epsilon")};
      cfg.epsilon_spec = eps_value;
    } else if (!eps_range.empty()) {
      cfg.epsilons = parse_double_range(eps_range);
      cfg.epsilon_spec = eps_range;
    } else {
      cfg.epsilons = {0.0};
    }
    if (!n_spec.empty()) {
      cfg.ns = parse_int_range(n_spec);
      cfg.n_spec = n_spec;
    } else {
      cfg.ns = {0};
    }
    if (!l0_value.empty()) {
      cfg.l0s = parse_int_range(l0_value);
      if (cfg.l0s.size() != 1) throw UsageError("--l0 takes one value; use --l0-range for ranges");
      cfg.l0_spec = l0_value;
    } else if (!l0_range.empty()) {
      cfg.l0s = parse_int_range(l0_range);
      cfg.l0_spec = l0_range;
    } else {
      cfg.l0s = {cfg.command == "spectrum" ? 0 : 2};
    }
    for (int l : cfg.l0s)
      if (l < 0) throw UsageError("l0 must be >= 0");
    if (!grid.empty()) std::tie(cfg.grid_x, cfg.grid_e) = parse_grid(grid);
    if (!(delta > 0.0 && delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
    cfg.delta = delta;
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    cfg.out = out_path;
    cfg.figure_id = figure_id;
    if (!dim_spec.empty())
      for (const auto& p : split(dim_spec, ',')) cfg.dims.push_back(parse_int(p, "--dim"));
    if (!slices_spec.empty())
      for (const auto& p : split(slices_spec, ',')) cfg.slices.push_back(parse_double(p, "--slices"));
    cfg.inject_fault = inject_fault;

    if (cfg.command == "spectrum") doc = cmd_spectrum(cfg);
    else if (cfg.command == "mode") doc = cmd_mode(cfg);
    else if (cfg.command == "figure") doc = cmd_figure(cfg);
    else if (cfg.command == "verify") doc = cmd_verify(cfg);
    else doc = cmd_clifford(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }

  const std::string text = cfg.format == Format::Json ? render_json(doc) : render_csv(doc);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kVerificationFailure;
    }
    f << text;
  }
  if (!doc.ok) {
    err << "verification failed: " << doc.failure_summary << "\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace spinor_disc::cli
