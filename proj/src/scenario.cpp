#include "gamowlab/scenario.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gamowlab/channels.hpp"
#include "gamowlab/commutator_lab.hpp"
#include "gamowlab/linalg.hpp"
#include "gamowlab/qlattice.hpp"

namespace gamowlab::cli {
namespace {

using nlohmann::json;

// Collects "field: message" diagnostics while walking the document.
class Checker {
 public:
  void fail(const std::string& field, const std::string& message) {
    diagnostics_.push_back(field + ": " + message);
  }
  std::vector<std::string>& diagnostics() { return diagnostics_; }

  const json* require(const json& doc, const std::string& key, const std::string& prefix = "") {
    if (!doc.contains(key)) {
      fail(prefix + key, "required field is missing");
      return nullptr;
    }
    return &doc.at(key);
  }

  std::optional<double> number(const json& v, const std::string& field) {
    if (!v.is_number()) {
      fail(field, "must be a number");
      return std::nullopt;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      fail(field, "must be finite");
      return std::nullopt;
    }
    return x;
  }

  std::optional<std::size_t> count(const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      fail(field, "must be a non-negative integer");
      return std::nullopt;
    }
    return static_cast<std::size_t>(v.get<long long>());
  }

  std::optional<ComplexMatrix> matrix(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) {
      fail(field, "must be a non-empty array of rows");
      return std::nullopt;
    }
    const std::size_t rows = v.size();
    const std::size_t cols = v.front().is_array() ? v.front().size() : 0;
    if (cols == 0) {
      fail(field, "rows must be non-empty arrays of [re, im] pairs");
      return std::nullopt;
    }
    std::vector<complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string row_field = field + "[" + std::to_string(r) + "]";
      if (!v[r].is_array() || v[r].size() != cols) {
        fail(row_field, "expected " + std::to_string(cols) + " entries (ragged matrix)");
        return std::nullopt;
      }
      for (std::size_t c = 0; c < cols; ++c) {
        const json& z = v[r][c];
        const std::string entry_field = row_field + "[" + std::to_string(c) + "]";
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          fail(entry_field, "complex entries are [re, im] pairs of numbers");
          return std::nullopt;
        }
        const double re = z[0].get<double>();
        const double im = z[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
          fail(entry_field, "must be finite");
          return std::nullopt;
        }
        entries.emplace_back(re, im);
      }
    }
    if (rows != cols) {
      fail(field, "must be square, got " + std::to_string(rows) + "x" + std::to_string(cols));
      return std::nullopt;
    }
    return ComplexMatrix(rows, cols, std::move(entries));
  }

 private:
  std::vector<std::string> diagnostics_;
};

void check_observables(Checker& ck, const json& doc, Scenario& s, std::size_t count, std::size_t dim) {
  const json* obs = ck.require(doc, "observables");
  if (obs == nullptr) return;
  if (!obs->is_array() || obs->size() != count) {
    ck.fail("observables", "expected exactly " + std::to_string(count) + " matrices");
    return;
  }
  for (std::size_t i = 0; i < obs->size(); ++i) {
    const std::string field = "observables[" + std::to_string(i) + "]";
    auto m = ck.matrix((*obs)[i], field);
    if (!m) continue;
    if (dim != 0 && m->rows() != dim) {
      ck.fail(field, "dimension " + std::to_string(m->rows()) + " does not match the scenario dimension " +
                         std::to_string(dim));
      continue;
    }
    s.observables.push_back(std::move(*m));
  }
}

void check_grid(Checker& ck, const json& doc, Scenario& s) {
  const json* grid = ck.require(doc, "grid");
  if (grid == nullptr) return;
  if (!grid->is_object()) {
    ck.fail("grid", "must be an object {t_start, t_end, steps}");
    return;
  }
  const json* a = ck.require(*grid, "t_start", "grid.");
  const json* b = ck.require(*grid, "t_end", "grid.");
  const json* n = ck.require(*grid, "steps", "grid.");
  bool have_t0 = false, have_t1 = false;
  if (a != nullptr)
    if (auto v = ck.number(*a, "grid.t_start")) s.grid.t_start = *v, have_t0 = true;
  if (b != nullptr)
    if (auto v = ck.number(*b, "grid.t_end")) s.grid.t_end = *v, have_t1 = true;
  auto steps = n ? ck.count(*n, "grid.steps") : std::nullopt;
  if (steps && *steps < 2) ck.fail("grid.steps", "must be >= 2");
  if (have_t0 && have_t1 && !(s.grid.t_end > s.grid.t_start)) ck.fail("grid.t_end", "must be greater than grid.t_start");
  if (steps) s.grid.steps = *steps;
}

void check_eps(Checker& ck, const json& doc, Scenario& s) {
  if (!doc.contains("eps")) return;
  if (auto e = ck.number(doc.at("eps"), "eps")) {
    if (*e > 0.0) s.eps = *e;
    else ck.fail("eps", "must be > 0");
  }
}

void check_fit_window(Checker& ck, const json& doc, Scenario& s) {
  if (!doc.contains("fit_window")) return;
  if (auto f = ck.number(doc.at("fit_window"), "fit_window")) {
    if (*f > 0.0 && *f <= 1.0) s.fit_window = *f;
    else ck.fail("fit_window", "must lie in (0, 1]");
  }
}

Scenario check_document(Checker& ck, const json& doc) {
  Scenario s;
  if (!doc.is_object()) {
    ck.fail("<root>", "scenario must be a JSON object");
    return s;
  }
  const json* kind = ck.require(doc, "kind");
  if (kind == nullptr) return s;
  const std::string k = kind->is_string() ? kind->get<std::string>() : "";
  if (k == "damping") {
    s.kind = ScenarioKind::damping;
    if (const json* p = ck.require(doc, "p")) {
      if (auto v = ck.number(*p, "p")) {
        if (*v >= 0.0 && *v <= 1.0) s.p = *v;
        else ck.fail("p", "probability must lie in [0, 1]");
      }
    }
    if (const json* n = ck.require(doc, "n_max")) {
      if (auto v = ck.count(*n, "n_max")) s.n_max = *v;
    }
    check_observables(ck, doc, s, 2, 2);
    check_eps(ck, doc, s);
  } else if (k == "resonance") {
    s.kind = ScenarioKind::resonance;
    std::size_t dim = 0;
    if (const json* rs = ck.require(doc, "resonances")) {
      if (!rs->is_array() || rs->empty()) {
        ck.fail("resonances", "must be a non-empty array of {energy, width}");
      } else if (rs->size() > kDefaultResonanceCap) {
        ck.fail("resonances", "at most " + std::to_string(kDefaultResonanceCap) + " resonances");
      } else {
        bool ok = true;
        for (std::size_t i = 0; i < rs->size(); ++i) {
          const std::string base = "resonances[" + std::to_string(i) + "]";
          const json& r = (*rs)[i];
          if (!r.is_object()) {
            ck.fail(base, "must be an object {energy, width}");
            ok = false;
            continue;
          }
          const json* e = ck.require(r, "energy", base + ".");
          const json* w = ck.require(r, "width", base + ".");
          auto ev = e ? ck.number(*e, base + ".energy") : std::nullopt;
          auto wv = w ? ck.number(*w, base + ".width") : std::nullopt;
          if (wv && !(*wv > 0.0)) {
            ck.fail(base + ".width", "width must be > 0 (got " + format_double(*wv) + ")");
            wv.reset();
          }
          if (ev && wv) s.resonances.emplace_back(*ev, *wv);
          else ok = false;
        }
        if (ok) dim = 2 * s.resonances.size();
      }
    }
    if (doc.contains("variant")) {
      const json& v = doc.at("variant");
      try {
        s.variant = parse_variant(v.is_string() ? v.get<std::string>() : "");
      } catch (const std::invalid_argument& e) {
        ck.fail("variant", e.what());
      }
    }
    check_observables(ck, doc, s, 2, dim);
    check_grid(ck, doc, s);
    check_eps(ck, doc, s);
    check_fit_window(ck, doc, s);
  } else if (k == "lattice") {
    s.kind = ScenarioKind::lattice;
    check_observables(ck, doc, s, 3, 0);
    if (s.observables.size() == 3) {
      const std::size_t d = s.observables[0].rows();
      for (std::size_t i = 0; i < 3; ++i) {
        const std::string field = "observables[" + std::to_string(i) + "]";
        if (s.observables[i].rows() != d) {
          ck.fail(field, "all projectors must share one dimension");
          continue;
        }
        try {
          Projector check(s.observables[i]);
        } catch (const std::invalid_argument& e) {
          ck.fail(field, e.what());
        }
      }
    }
  } else {
    ck.fail("kind", "must be one of damping, resonance, lattice");
  }
  return s;
}

Scenario parse_checked(const std::string& text, std::vector<std::string>& diagnostics) {
  Checker ck;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    diagnostics.push_back(std::string("<document>: not valid JSON: ") + e.what());
    return {};
  }
  Scenario s = check_document(ck, doc);
  diagnostics = std::move(ck.diagnostics());
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError({"<file>: cannot read " + path.string()});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string taqm_flag(double t) {
  const bool d = taqm_validity(GamowKind::decaying, t).raw;
  const bool g = taqm_validity(GamowKind::growing, t).converted;
  return d && g ? "1" : "0";
}

int run_damping(const Scenario& s, const std::filesystem::path& out, std::ostream& log) {
  const auto ch = damping_channel(s.p);
  ComplexMatrix o1 = s.observables[0];
  ComplexMatrix o2 = s.observables[1];
  std::string csv = "n,norm\n";
  std::vector<double> ns;
  std::vector<double> logs;
  std::optional<std::size_t> commutation_step;
  for (std::size_t n = 0; n <= s.n_max; ++n) {
    if (n > 0) {
      o1 = apply_heisenberg(ch, o1);
      o2 = apply_heisenberg(ch, o2);
    }
    const double norm = frobenius_norm(commutator(o1, o2));
    csv += std::to_string(n) + "," + format_double(norm) + "\n";
    if (norm > kUnderflowFloor) {
      ns.push_back(static_cast<double>(n));
      logs.push_back(std::log(norm));
    }
    if (!commutation_step && norm < s.eps) commutation_step = n;
  }
  write_text(out / "commutators.csv", csv);

  std::string report = "kind = damping\np = " + format_double(s.p) + "\nn_max = " + std::to_string(s.n_max) + "\n";
  std::string fit_summary = "no fit (fewer than two nonzero norms)";
  if (ns.size() >= 2) {
    const auto line = fit_line(ns, logs);
    report += "slope_per_step = " + format_double(line.slope) + "\nintercept = " + format_double(line.intercept) +
              "\nmax_abs_residual = " + format_double(line.max_abs_residual) + "\n";
    fit_summary = "slope/step=" + format_double(line.slope);
  }
  report += "eps = " + format_double(s.eps) + "\ncommutation_step = " +
            (commutation_step ? std::to_string(*commutation_step) : std::string("none")) + "\n";
  write_text(out / "fit.txt", report);
  log << "damping: p=" << format_double(s.p) << " n_max=" << s.n_max << " " << fit_summary
      << " commutation_step=" << (commutation_step ? std::to_string(*commutation_step) : "none") << "\n";
  return kOk;
}

int run_resonance(const Scenario& s, const std::filesystem::path& out, std::ostream& log) {
  const auto space = GamowSpace::create(s.resonances);
  const auto times = s.grid.points();
  const auto traj = trajectory(space, s.observables[0], s.observables[1], times, s.variant);

  std::string csv = "t,norm,log_norm,alpha_re,alpha_im,beta_re,beta_im,ansatz_residual,taqm_valid\n";
  std::optional<double> t_c;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const auto rep = ansatz_report(traj, k);
    const double norm = traj.norms[k];
    const double log_norm = norm > kUnderflowFloor ? std::log(norm) : -INFINITY;
    csv += format_double(times[k]) + "," + format_double(norm) + "," + format_double(log_norm) + "," +
           format_double(rep.alpha[0].real()) + "," + format_double(rep.alpha[0].imag()) + "," +
           format_double(rep.beta[0].real()) + "," + format_double(rep.beta[0].imag()) + "," +
           format_double(rep.residual) + "," + taqm_flag(times[k]) + "\n";
    if (!t_c && norm < s.eps) t_c = times[k];
  }
  write_text(out / "commutators.csv", csv);

  const double window = s.fit_window.value_or(default_window_fraction(*space));
  const double expected = -2.0 * space->min_width();
  std::string report = "kind = resonance\nvariant = " + std::string(to_string(s.variant)) + "\n";
  if (!conjugation_is_modelled(s.variant)) report += "note = conjugation rule for this variant is an extrapolation\n";
  report += "resonances = " + std::to_string(space->resonance_count()) + "\nwindow_fraction = " + format_double(window) + "\n";
  DecayFit fit;
  try {
    fit = envelope_fit(traj, window);
  } catch (const EmptyFitError& e) {
    report += "fit = failed (" + std::string(e.what()) + ")\n";
    write_text(out / "fit.txt", report);
    throw;
  }
  const double deviation = std::abs(fit.slope - expected);
  report += "n_points = " + std::to_string(fit.n_points) + "\nslope = " + format_double(fit.slope) +
            "\nintercept = " + format_double(fit.intercept) + "\nmax_abs_residual = " +
            format_double(fit.max_abs_residual) + "\nexpected_slope = " + format_double(expected) +
            "\nabs_deviation = " + format_double(deviation) + "\neps = " + format_double(s.eps) +
            "\ncommutation_time = " + (t_c ? format_double(*t_c) : std::string("none")) + "\n";
  if (space->resonance_count() == 1) {
    report += "predicted_commutation_time = " +
              format_double(predicted_commutation_time(traj.norms.front(), s.eps, space->min_width())) + "\n";
  }
  write_text(out / "fit.txt", report);
  log << "resonance: N=" << space->resonance_count() << " variant=" << to_string(s.variant)
      << " slope=" << format_double(fit.slope) << " expected=" << format_double(expected)
      << " deviation=" << format_double(deviation)
      << " t_c=" << (t_c ? format_double(*t_c) : std::string("none")) << "\n";
  return kOk;
}

int run_lattice(const Scenario& s, const std::filesystem::path& out, std::ostream& log) {
  const Projector a(s.observables[0]);
  const Projector b(s.observables[1]);
  const Projector c(s.observables[2]);
  const auto r = distributivity_check(a, b, c);
  const auto cert = abelian_certificate(s.observables, 1e-10);

  std::string csv = "relation,lhs_rank,rhs_rank,equal\n";
  csv += "meet," + std::to_string(r.lhs_meet.rank()) + "," + std::to_string(r.rhs_meet.rank()) + "," +
         (r.meet_equal ? "1" : "0") + "\n";
  csv += "join," + std::to_string(r.lhs_join.rank()) + "," + std::to_string(r.rhs_join.rank()) + "," +
         (r.join_equal ? "1" : "0") + "\n";
  write_text(out / "lattice.csv", csv);

  auto verdict = [](bool ok) { return ok ? std::string("HOLDS") : std::string("VIOLATED"); };
  std::string report;
  report += "meet distributivity: " + verdict(r.meet_equal) + "\n";
  report += "join distributivity: " + verdict(r.join_equal) + "\n";
  report += "distributive inequalities: " + verdict(r.inequality_holds) + "\n";
  report += "compatible(a,b) = " + std::string(compatible(a, b) ? "yes" : "no") + "\n";
  report += "compatible(a,c) = " + std::string(compatible(a, c) ? "yes" : "no") + "\n";
  report += "compatible(b,c) = " + std::string(compatible(b, c) ? "yes" : "no") + "\n";
  report += "abelian = " + std::string(cert.abelian ? "yes" : "no") + " (worst pair " +
            std::to_string(cert.worst_i) + "," + std::to_string(cert.worst_j) + " norm " +
            format_double(cert.worst_norm) + ")\n";
  write_text(out / "lattice.txt", report);
  log << "lattice: meet distributivity: " << verdict(r.meet_equal)
      << ", join distributivity: " << verdict(r.join_equal)
      << ", inequalities: " << verdict(r.inequality_holds) << "\n";
  return kOk;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> t(steps);
  const double h = (t_end - t_start) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) t[k] = t_start + static_cast<double>(k) * h;
  t.back() = t_end;
  return t;
}

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "invalid scenario" : diagnostics.front()),
      diagnostics_(std::move(diagnostics)) {}

Scenario parse_scenario(const std::string& text) {
  std::vector<std::string> diagnostics;
  Scenario s = parse_checked(text, diagnostics);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_file(path)); }

std::vector<std::string> validate(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const ValidationError& e) {
    return e.diagnostics();
  }
  std::vector<std::string> diagnostics;
  parse_checked(text, diagnostics);
  return diagnostics;
}

int run(const std::filesystem::path& scenario_path, const std::filesystem::path& out_dir,
        std::ostream& log, std::ostream& err) {
  Scenario s;
  try {
    s = load_scenario(scenario_path);
  } catch (const ValidationError& e) {
    for (const auto& d : e.diagnostics()) err << "validation: " << d << "\n";
    return kValidation;
  }
  try {
    std::filesystem::create_directories(out_dir);
    switch (s.kind) {
      case ScenarioKind::damping: return run_damping(s, out_dir, log);
      case ScenarioKind::resonance: return run_resonance(s, out_dir, log);
      case ScenarioKind::lattice: return run_lattice(s, out_dir, log);
    }
  } catch (const std::exception& e) {
    err << "runtime: " << e.what() << "\n";
    return kRuntime;
  }
  return kRuntime;
}

std::vector<std::filesystem::path> write_demo(const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const ComplexMatrix sx{{0, 1}, {1, 0}};
  const ComplexMatrix sy{{0, complex{0, -1}}, {complex{0, 1}, 0}};
  const ComplexMatrix sz{{1, 0}, {0, -1}};
  const ComplexMatrix ket0{{1, 0}, {0, 0}};
  const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
  const ComplexMatrix minus{{0.5, -0.5}, {-0.5, 0.5}};

  const json damping = {{"kind", "damping"},
                        {"p", 0.5},
                        {"n_max", 40},
                        {"observables", {matrix_json(sx), matrix_json(sz)}},
                        {"eps", 1e-6}};
  const json resonance = {{"kind", "resonance"},
                          {"resonances", {{{"energy", 1.0}, {"width", 0.5}}}},
                          {"variant", "hermitian"},
                          {"observables", {matrix_json(sx), matrix_json(sy)}},
                          {"grid", {{"t_start", 0.0}, {"t_end", 5.0}, {"steps", 101}}},
                          {"eps", 1e-6}};
  const json lattice = {{"kind", "lattice"},
                        {"observables", {matrix_json(ket0), matrix_json(plus), matrix_json(minus)}}};

  std::vector<std::filesystem::path> written;
  for (const auto& [name, doc] : {std::pair{"damping.json", damping}, std::pair{"resonance.json", resonance},
                                  std::pair{"lattice.json", lattice}}) {
    const auto path = out_dir / name;
    write_text(path, doc.dump(2) + "\n");
    written.push_back(path);
  }
  return written;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace gamowlab::cli
