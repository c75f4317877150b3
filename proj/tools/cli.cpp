#include "landau/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "landau/gauge.hpp"
#include "landau/marginals.hpp"
#include "landau/quad.hpp"
#include "landau/verify.hpp"
#include "landau/wigner.hpp"

namespace landau::cli {

namespace {

using json = nlohmann::ordered_json;
using Meta = std::vector<std::pair<std::string, std::string>>;

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string sci(double x) { return fmt("%.15e", x); }

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(x)) throw std::invalid_argument(what + ": '" + text + "' is not a finite number");
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

PhasePoint parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw std::invalid_argument("--at expects q1,q2,p1,p2");
  return {parse_number(parts[0], "--at"), parse_number(parts[1], "--at"), parse_number(parts[2], "--at"),
          parse_number(parts[3], "--at")};
}

std::pair<double, double> parse_range(const std::string& text, const std::string& what) {
  const auto colon = text.find(':', 1);  // a leading sign is not a separator
  if (colon == std::string::npos) throw std::invalid_argument(what + " expects a:b");
  return {parse_number(text.substr(0, colon), what), parse_number(text.substr(colon + 1), what)};
}

// exact decimal constant, e.g. "0.5" or "-3e-2"
Rational parse_constant(const std::string& text, const std::string& what) {
  const PhasePoly p = parse_gauge_poly(text, Rational(0));
  if (!p.is_constant() || p.constant_term().im != 0)
    throw std::invalid_argument(what + " must be a real constant");
  return p.constant_term().re;
}

std::string str(const Rational& r) { return r.get_str(); }

// coordinates in units of gamma (positions) and m omega gamma (momenta)
double reduced_unit(int axis, const Params& p) { return axis < 2 ? p.gamma() : p.m() * p.omega() * p.gamma(); }

PhasePoint scale_point(const PhasePoint& x, const Params& p) {
  return {x.q1 * reduced_unit(0, p), x.q2 * reduced_unit(1, p), x.p1 * reduced_unit(2, p), x.p2 * reduced_unit(3, p)};
}

struct IndexOpts {
  std::optional<int> n, l, n1, n2, l1, l2;

  void add(CLI::App* sub) {
    sub->add_option("--n", n, "energy index n (diagonal)");
    sub->add_option("--l", l, "index l (diagonal)");
    sub->add_option("--n1", n1, "off-diagonal index n1");
    sub->add_option("--n2", n2, "off-diagonal index n2");
    sub->add_option("--l1", l1, "off-diagonal index l1");
    sub->add_option("--l2", l2, "off-diagonal index l2");
  }

  WignerIndex get() const {
    const bool any4 = n1 || n2 || l1 || l2;
    WignerIndex idx;
    if (any4) {
      if (n || l) throw std::invalid_argument("use either --n/--l or --n1/--n2/--l1/--l2");
      if (!(n1 && n2 && l1 && l2)) throw std::invalid_argument("--n1, --n2, --l1 and --l2 must be given together");
      idx = {*n1, *n2, *l1, *l2};
    } else {
      if (n.has_value() != l.has_value()) throw std::invalid_argument("--n and --l must be given together");
      idx = WignerIndex::diag(n.value_or(0), l.value_or(0));
    }
    if (idx.n1 < 0 || idx.n2 < 0 || idx.l1 < 0 || idx.l2 < 0) throw std::invalid_argument("indices must be non-negative");
    return idx;
  }
};

struct GridOpts {
  std::string plane = "q1q2", range = "-6:6", vrange, at = "0,0,0,0", out;
  int count = 201;
  std::optional<int> vcount;

  void add(CLI::App* sub) {
    sub->add_option("--plane", plane, "coordinate pair: q1q2 p1p2 q1p1 q2p2 q1p2 q2p1");
    sub->add_option("--range", range, "first-axis range a:b");
    sub->add_option("--vrange", vrange, "second-axis range (default: --range)");
    sub->add_option("--count", count, "samples per axis");
    sub->add_option("--vcount", vcount, "samples on the second axis (default: --count)");
    sub->add_option("--at", at, "base point q1,q2,p1,p2 for the remaining coordinates");
    sub->add_option("--out", out, "output file (default: stdout)");
  }

  GridSpec spec() const {
    GridSpec s;
    std::tie(s.u_min, s.u_max) = parse_range(range, "--range");
    std::tie(s.v_min, s.v_max) = parse_range(vrange.empty() ? range : vrange, "--vrange");
    s.nu = count;
    s.nv = vcount.value_or(count);
    if (s.nu < 2 || s.nv < 2) throw std::invalid_argument("--count must be at least 2");
    if (!(s.u_min < s.u_max) || !(s.v_min < s.v_max)) throw std::invalid_argument("ranges must be increasing");
    return s;
  }
};

Meta base_meta(const std::string& command, const Config& cfg, bool reduced) {
  const Params& p = cfg.params;
  return {{"command", command},
          {"m", sci(p.m())},
          {"omega", sci(p.omega())},
          {"hbar", sci(p.hbar())},
          {"gamma", sci(p.gamma())},
          {"kappa", sci(p.kappa())},
          {"h", sci(p.h())},
          {"coordinates", reduced ? "reduced (q/gamma, p/(m omega gamma))" : "physical"}};
}

void add_grid_meta(Meta& meta, Plane plane, const GridSpec& s, const PhasePoint& base) {
  const auto [iu, iv] = plane_axes(plane);
  static const char* names[] = {"q1", "q2", "p1", "p2"};
  meta.emplace_back("plane", plane_name(plane));
  meta.emplace_back("x_axis", names[iu]);
  meta.emplace_back("y_axis", names[iv]);
  meta.emplace_back("x_min", sci(s.u_min));
  meta.emplace_back("x_max", sci(s.u_max));
  meta.emplace_back("x_count", std::to_string(s.nu));
  meta.emplace_back("y_min", sci(s.v_min));
  meta.emplace_back("y_max", sci(s.v_max));
  meta.emplace_back("y_count", std::to_string(s.nv));
  meta.emplace_back("base", sci(base.q1) + "," + sci(base.q2) + "," + sci(base.p1) + "," + sci(base.p2));
}

std::string render_grid(const FieldGrid& g, bool complex_values, const std::string& format) {
  std::vector<std::string> cols = {"x", "y"};
  if (complex_values) {
    cols.push_back("re");
    cols.push_back("im");
  } else {
    cols.push_back("value");
  }
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["metadata"] = json::object();
    for (const auto& [k, v] : g.metadata) doc["metadata"][k] = v;
    doc["columns"] = cols;
    json rows = json::array();
    for (int j = 0; j < g.spec.nv; ++j)
      for (int i = 0; i < g.spec.nu; ++i) {
        const cplx z = g.at(i, j);
        json row = {g.spec.u(i), g.spec.v(j), z.real()};
        if (complex_values) row.push_back(z.imag());
        rows.push_back(std::move(row));
      }
    doc["rows"] = std::move(rows);
    os << doc.dump(1) << "\n";
    return os.str();
  }
  for (const auto& [k, v] : g.metadata) os << "# " << k << "=" << v << "\n";
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << "\n";
  char buf[160];
  for (int j = 0; j < g.spec.nv; ++j)
    for (int i = 0; i < g.spec.nu; ++i) {
      const cplx z = g.at(i, j);
      if (complex_values)
        std::snprintf(buf, sizeof buf, "%.15e,%.15e,%.15e,%.15e\n", g.spec.u(i), g.spec.v(j), z.real(), z.imag());
      else
        std::snprintf(buf, sizeof buf, "%.15e,%.15e,%.15e\n", g.spec.u(i), g.spec.v(j), z.real());
      os << buf;
    }
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw std::ios_base::failure("write to '" + path + "' failed");
}

std::string status(const CheckResult& r) { return r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL"; }

void print_checks(const std::string& group, const std::vector<CheckResult>& rs, std::ostream& out) {
  for (const CheckResult& r : rs) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e  tol %.1e", r.residual, r.tolerance);
    out << status(r) << "  " << std::left << std::setw(14) << group << std::setw(56) << r.name << buf;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
}

json checks_json(const std::vector<CheckResult>& rs) {
  json a = json::array();
  for (const CheckResult& r : rs)
    a.push_back({{"check", r.name}, {"status", status(r)}, {"residual", r.residual}, {"tolerance", r.tolerance},
                 {"detail", r.detail}});
  return a;
}

}  // namespace

void Config::validate() const {
  if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json, got '" + format + "'");
  if (!(quad_tol > 0) || !std::isfinite(quad_tol)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (!(verify_tolerance_scale > 0) || !std::isfinite(verify_tolerance_scale))
    throw std::invalid_argument("verify tolerance scale must be positive");
}

void load_config(const std::string& path, Config& cfg) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw std::invalid_argument("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  try {
    const json& ps = j.contains("params") ? j.at("params") : j;
    const double m = ps.value("m", cfg.params.m()), w = ps.value("omega", cfg.params.omega()),
                 hb = ps.value("hbar", cfg.params.hbar());
    cfg.params = Params(m, w, hb);
    cfg.format = j.value("format", cfg.format);
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      cfg.quad_tol = t.value("quad", cfg.quad_tol);
      cfg.verify_tolerance_scale = t.value("verify_scale", cfg.verify_tolerance_scale);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument("config '" + path + "': " + e.what());
  }
  cfg.validate();
}

void apply_env(Config& cfg) {
  if (const char* v = std::getenv("LANDAU_QUAD_TOL")) cfg.quad_tol = parse_number(v, "LANDAU_QUAD_TOL");
  if (const char* v = std::getenv("LANDAU_VERIFY_TOL_SCALE"))
    cfg.verify_tolerance_scale = parse_number(v, "LANDAU_VERIFY_TOL_SCALE");
  cfg.validate();
}

std::string format_value(cplx z) {
  if (z.imag() == 0.0) return fmt("%.15g", z.real() == 0.0 ? 0.0 : z.real());
  return fmt("%.15g", z.real()) + fmt("%+.15g", z.imag()) + "i";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wigner functions and marginals of Landau levels", "landau"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format;
  std::optional<double> m, omega, hbar;
  bool reduced = false;
  app.add_option("--config", config_path, "JSON config: params {m, omega, hbar}, format, tolerances {quad, verify_scale}");
  app.add_option("--m", m, "mass");
  app.add_option("--omega", omega, "cyclotron frequency");
  app.add_option("--hbar", hbar, "reduced Planck constant");
  app.add_flag("--reduced", reduced, "coordinates in units of gamma and m omega gamma");
  app.add_option("--format", format, "csv or json");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate W at one phase-space point");
  IndexOpts eval_idx;
  eval_idx.add(eval);
  std::string eval_at;
  eval->add_option("--at", eval_at, "q1,q2,p1,p2")->required();

  // grid
  auto* grid = app.add_subcommand("grid", "sample W on a plane");
  IndexOpts grid_idx;
  grid_idx.add(grid);
  GridOpts grid_opts;
  grid_opts.add(grid);

  // marginal
  auto* marg = app.add_subcommand("marginal", "marginal density on one of the six coordinate planes");
  int marg_n = 0, marg_l = 0;
  marg->add_option("--n", marg_n, "index n");
  marg->add_option("--l", marg_l, "index l");
  GridOpts marg_opts;
  marg_opts.add(marg);
  std::string method = "auto";
  std::optional<int> order;
  marg->add_option("--method", method, "auto, closed or numeric");
  marg->add_option("--order", order, "Gauss-Hermite order per axis for numeric marginals");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int max_index = -1;
  ver->add_option("--suite", suite, "algebra, eigen, projection, normalization, symmetry, gauge, appendix or all")
      ->required();
  ver->add_option("--max-index", max_index, "largest index the suite ranges over");

  // transform
  auto* tr = app.add_subcommand("transform", "gauge transform H_L and W_nl by U = exp(i theta chi(q))");
  std::string gauge_text, c_text, theta_text;
  int tr_n = 0, tr_l = 0;
  tr->add_option("--gauge", gauge_text, "polynomial chi in q1, q2 and the constant c, e.g. \"c*q1*q2\"")->required();
  tr->add_option("--c", c_text, "value of c (default m omega / 2)");
  tr->add_option("--theta", theta_text, "theta = charge/(c hbar) (default 1/hbar)");
  tr->add_option("--n", tr_n, "index n");
  tr->add_option("--l", tr_l, "index l");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return usage_error;
  }

  try {
    Config cfg;
    if (!config_path.empty()) load_config(config_path, cfg);
    apply_env(cfg);
    if (m || omega || hbar)
      cfg.params = Params(m.value_or(cfg.params.m()), omega.value_or(cfg.params.omega()), hbar.value_or(cfg.params.hbar()));
    if (!format.empty()) cfg.format = format;
    cfg.validate();
    const Params& p = cfg.params;
    auto physical = [&](const PhasePoint& x) { return reduced ? scale_point(x, p) : x; };

    if (*eval) {
      const WignerIndex idx = eval_idx.get();
      const PhasePoint x = parse_point(eval_at);
      const cplx w = eval_wigner(idx, physical(x), p);
      if (cfg.format == "json") {
        json j = {{"index", {idx.n1, idx.n2, idx.l1, idx.l2}}, {"point", {x.q1, x.q2, x.p1, x.p2}},
                  {"re", w.real()}, {"im", w.imag()}};
        out << j.dump() << "\n";
      } else {
        out << format_value(w) << "\n";
      }
      return ok;
    }

    if (*grid) {
      const WignerIndex idx = grid_idx.get();
      const Plane plane = parse_plane(grid_opts.plane);
      const GridSpec spec = grid_opts.spec();
      const PhasePoint base = parse_point(grid_opts.at);
      Meta meta = base_meta("grid", cfg, reduced);
      meta.emplace_back("quantity", "wigner");
      meta.emplace_back("index", idx.str());
      add_grid_meta(meta, plane, spec, base);
      const FieldGrid g = sample_grid(
          [&](double u, double v) { return eval_wigner(idx, physical(plane_point(plane, u, v, base)), p); }, spec,
          std::move(meta));
      emit(render_grid(g, !idx.diagonal(), cfg.format), grid_opts.out, out);
      return ok;
    }

    if (*marg) {
      if (marg_n < 0 || marg_l < 0) throw std::invalid_argument("indices must be non-negative");
      const Plane plane = parse_plane(marg_opts.plane);
      const GridSpec spec = marg_opts.spec();
      const PhasePoint base = parse_point(marg_opts.at);
      if (method != "auto" && method != "closed" && method != "numeric")
        throw std::invalid_argument("--method must be auto, closed or numeric");
      const bool known = plane == Plane::q1q2 || plane == Plane::q1p2 || plane == Plane::q2p1;
      const bool numeric = method == "numeric" || (method == "auto" && !known);
      const int ord = order.value_or(std::max(40, 20 + 4 * std::max(marg_n, marg_l)));
      if (numeric && ord < 20 + 4 * std::max(marg_n, marg_l))
        throw std::invalid_argument("--order must be at least 20 + 4 max(n, l)");
      Meta meta = base_meta("marginal", cfg, reduced);
      meta.emplace_back("quantity", "marginal density");
      meta.emplace_back("index", "(" + std::to_string(marg_n) + "," + std::to_string(marg_l) + ")");
      add_grid_meta(meta, plane, spec, base);
      meta.emplace_back("method", numeric ? "numeric" : known ? "closed" : "closed (axial form)");
      if (numeric) {
        meta.emplace_back("quad_order", std::to_string(ord));
        meta.emplace_back("quad_tol", sci(cfg.quad_tol));
      }
      std::atomic<long> nwarn{0};
      const WignerIndex idx = WignerIndex::diag(marg_n, marg_l);
      const auto [iu, iv] = plane_axes(plane);
      const double su = reduced ? reduced_unit(iu, p) : 1.0, sv = reduced ? reduced_unit(iv, p) : 1.0;
      FieldGrid g = sample_grid(
          [&](double u, double v) -> cplx {
            if (!numeric) return marginal_closed(plane, marg_n, marg_l, u * su, v * sv, p);
            const MarginalResult r = marginal_numeric(idx, plane, u * su, v * sv, p, ord, cfg.quad_tol);
            if (r.warning) ++nwarn;
            return r.value;
          },
          spec, std::move(meta));
      if (numeric) g.metadata.emplace_back("accuracy_warnings", std::to_string(nwarn.load()));
      if (nwarn) err << "warning: " << nwarn << " samples changed by more than " << sci(cfg.quad_tol) << " at order + 8\n";
      emit(render_grid(g, false, cfg.format), marg_opts.out, out);
      return ok;
    }

    if (*ver) {
      SuiteOptions so;
      so.max_index = max_index;
      so.tolerance_scale = cfg.verify_tolerance_scale;
      so.params = p;
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool pass = true;
      json doc = json::object();
      for (const std::string& s : names) {
        const auto rs = run_suite(s, so);
        pass = pass && all_pass(rs);
        if (cfg.format == "json")
          doc[s] = checks_json(rs);
        else
          print_checks(s, rs, out);
      }
      if (cfg.format == "json") out << doc.dump(1) << "\n";
      else out << (pass ? "all checks passed" : "FAILED") << "\n";
      return pass ? ok : check_failed;
    }

    if (*tr) {
      const ExactParams ep = ExactParams::from(p);
      const Rational c = c_text.empty() ? ep.kappa : parse_constant(c_text, "--c");
      GaugeFn g;
      g.chi = parse_gauge_poly(gauge_text, c);
      g.theta = theta_text.empty() ? Rational(1) / ep.hbar : parse_constant(theta_text, "--theta");
      g.theta.canonicalize();
      SuiteOptions so;
      so.tolerance_scale = cfg.verify_tolerance_scale;
      so.params = p;
      const TransformReport rep = gauge_transform_report(g, tr_n, tr_l, so);
      if (cfg.format == "json") {
        std::ostringstream chi, h;
        chi << g.chi;
        h << rep.hamiltonian;
        json j = {{"chi", chi.str()}, {"theta", str(g.theta)}, {"hamiltonian", h.str()},
                  {"checks", checks_json(rep.checks)}};
        out << j.dump(1) << "\n";
      } else {
        out << "chi = " << g.chi << "\n" << "theta = " << str(g.theta) << "\n";
        out << "H' = " << rep.hamiltonian << "\n";
        print_checks("transform", rep.checks, out);
      }
      return all_pass(rep.checks) ? ok : check_failed;
    }
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return io_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return check_failed;
  }
  return usage_error;
}

}  // namespace landau::cli
