// Acceptance suite: one PASS/FAIL line per criterion, plus "info" lines with
// the measured quantities. Exits nonzero if any criterion fails.
//
// usage: acceptance <gamowlab-cli> <work-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "gamowlab/channels.hpp"
#include "gamowlab/commutator_lab.hpp"
#include "gamowlab/evolution.hpp"
#include "gamowlab/gamow.hpp"
#include "gamowlab/kernels.hpp"
#include "gamowlab/qlattice.hpp"
#include "test_support.hpp"

using namespace gamowlab;
using namespace gamowlab::testing;
namespace fs = std::filesystem;

namespace {

int failures = 0;

// A few ulps, relative to the observable scale.
constexpr double kResolution = 8 * std::numeric_limits<double>::epsilon();

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d: %s  %s  [%s]\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

void info(int id, const std::string& text) { std::printf("          %2d  info: %s\n", id, text.c_str()); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> grid(double t0, double t1, std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t k = 0; k < n; ++k) ts[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(n - 1);
  return ts;
}

// 1. n-fold damping against the closed form.
void damping_closed_form_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto o = random_matrix(rng, 2, 2);
    for (double p : {0.1, 0.5, 0.9}) {
      const auto ch = damping_channel(p);
      ComplexMatrix it = o;
      for (std::size_t n = 0; n <= 200; ++n) {
        worst = std::max(worst, naive_distance(it, damping_closed_form(p, n, o)));
        it = apply_heisenberg(ch, it);
      }
    }
  }
  const double secs = seconds_since(t0);
  report(1, worst <= 1e-12 && secs < 1.0, "damping closed form, 50 observables, p in {0.1,0.5,0.9}, n <= 200",
         "max error " + sci(worst) + " <= 1e-12, runtime " + sci(secs) + " s < 1 s");
}

// 2. Convergence to O00·I and the commutation process.
void commutative_limit_criterion() {
  std::mt19937_64 rng(102);
  double worst_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto o = random_matrix(rng, 2, 2);
    const double bound_scale = 2.0 * naive_norm(o);
    for (double p : {0.1, 0.5, 0.9}) {
      const auto ch = damping_channel(p);
      ComplexMatrix it = o;
      for (std::size_t n = 0; n <= 200; ++n) {
        // Past ~1e-16 relative the (1,1) entry can only sit within a few ulps
        // of O00, so the exact-arithmetic bound gets a resolution floor.
        const double bound = bound_scale * std::pow(1 - p, 0.5 * n) + kResolution * naive_norm(o);
        worst_ratio = std::max(worst_ratio, naive_norm(it - damping_limit(o)) / bound);
        it = apply_heisenberg(ch, it);
      }
    }
  }
  bool monotone = true;
  double worst_final = 0.0;
  const auto ch = damping_channel(0.5);
  for (int k = 0; k < 50; ++k) {
    ComplexMatrix a = random_hermitian(rng, 2), b = random_hermitian(rng, 2);
    const double scale = naive_norm(a) * naive_norm(b);
    double prev = naive_norm(naive_commutator(a, b));
    for (int n = 1; n <= 100; ++n) {
      a = apply_heisenberg(ch, a);
      b = apply_heisenberg(ch, b);
      const double cur = naive_norm(naive_commutator(a, b));
      // Same resolution floor: off-diagonal commutator entries carry an
      // unresolved diagonal gap times the coherence factor.
      if (cur > prev + kResolution * scale * std::pow(0.5, 0.5 * n)) monotone = false;
      prev = cur;
    }
    worst_final = std::max(worst_final, prev);
  }
  report(2, worst_ratio <= 1.0 && monotone && worst_final < 1e-10,
         "commutative limit bound 2||O||(1-p)^{n/2}; monotone commutator decay at p = 0.5",
         "max distance/bound " + sci(worst_ratio) + " <= 1, monotone " + (monotone ? "yes" : "no") +
             ", max norm at n=100 " + sci(worst_final) + " < 1e-10");
}

// 3. Schrödinger/Heisenberg duality.
void duality_criterion() {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> pdist(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto ch = damping_channel(pdist(rng));
    const DensityMatrix rho(random_density(rng, 2));
    const auto o = random_matrix(rng, 2, 2);
    const cx lhs = trace(naive_mul(apply_schrodinger(ch, rho).mat(), o));
    const cx rhs = trace(naive_mul(rho.mat(), apply_heisenberg(ch, o)));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  report(3, worst <= 1e-12, "duality Tr(E(rho)O) = Tr(rho E*(O)), 100 random pairs",
         "max deviation " + sci(worst) + " <= 1e-12");
}

// 4. Pairing table, roots of the metric, semigroup from the roots.
void pseudometric_criterion() {
  bool table_exact = true;
  double root_err = 0.0, rebuild_err = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Resonance> rs;
    for (std::size_t j = 0; j < n; ++j) rs.emplace_back(0.5 * static_cast<double>(j) - 1.0, 0.2 + 0.3 * static_cast<double>(j));
    const auto s = GamowSpace::create(rs);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        for (auto ki : {GamowKind::decaying, GamowKind::growing})
          for (auto kj : {GamowKind::decaying, GamowKind::growing}) {
            const cx got = pseudo_product(*s, basis_vector(*s, {i, ki}), basis_vector(*s, {j, kj}));
            const double want = (i == j && ki != kj) ? 1.0 : 0.0;
            if (got != cx{want, 0.0}) table_exact = false;
          }
    const auto& b = s->root_b();
    const auto bd = adjoint(b);
    root_err = std::max({root_err, naive_distance(naive_mul(b, b), s->metric()),
                         naive_distance(naive_mul(bd, bd), s->metric())});
    for (double t : {0.0, 0.5, 2.0, 5.0})
      rebuild_err = std::max(rebuild_err, naive_distance(semigroup_from_roots(*s, t),
                                                         evolution_operator(s, t, EvolutionVariant::semigroup_d).mat));
  }
  report(4, table_exact && root_err <= 1e-13 && rebuild_err <= 1e-12,
         "pairing table exact for N <= 8; B^2 = (B^dag)^2 = A; semigroup rebuilt from B",
         std::string("table exact ") + (table_exact ? "yes" : "no") + ", root error " + sci(root_err) +
             " <= 1e-13, rebuild error " + sci(rebuild_err) + " <= 1e-12");
}

// 5. Inverse, square law, identity at t = 0.
void evolution_criterion() {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> tdist(-5.0, 5.0), width(0.1, 3.0), energy(-2.0, 2.0);
  double inv_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto s = GamowSpace::create({Resonance(energy(rng), width(rng))});
    const auto op = evolution_operator(s, tdist(rng), EvolutionVariant::invertible);
    inv_err = std::max(inv_err, naive_distance(naive_mul(op.mat, inverse(op).mat), ComplexMatrix::identity(2)));
  }
  // Square law over both E = 0 and E ≠ 0 instances.
  double sq_err_all = 0.0, sq_err_zero = 0.0, gram_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double e = k % 2 == 0 ? 0.0 : energy(rng);
    const auto s = GamowSpace::create({Resonance(e, width(rng))});
    const double t = std::abs(tdist(rng));
    const auto law = hermitian_square_law(s, t);
    const auto target = ComplexMatrix::identity(2) * std::exp(-t * s->resonances()[0].width());
    const double err = naive_distance(law.square, target);
    sq_err_all = std::max(sq_err_all, err);
    if (e == 0.0) sq_err_zero = std::max(sq_err_zero, err);
    const auto u = evolution_operator(s, t, EvolutionVariant::hermitian).mat;
    gram_err = std::max(gram_err, naive_distance(naive_mul(u, adjoint(u)), target));
  }
  double id_err = 0.0;
  for (auto v : {EvolutionVariant::invertible, EvolutionVariant::hermitian}) {
    const auto s = GamowSpace::create({Resonance(0.7, 0.4), Resonance(-1.1, 2.0)});
    id_err = std::max(id_err, naive_distance(evolution_operator(s, 0.0, v).mat, ComplexMatrix::identity(4)));
  }
  report(5, inv_err <= 1e-12 && sq_err_all <= 1e-13 && id_err == 0.0,
         "U(t)U(-t) = I; hermitian U(t)^2 = e^{-t Gamma} I for N = 1; U(0) = I",
         "inverse error " + sci(inv_err) + " <= 1e-12, square error " + sci(sq_err_all) + " <= 1e-13, U(0) error " +
             sci(id_err));
  info(5, "square error restricted to E = 0: " + sci(sq_err_zero) + "; with E != 0 U^2 carries e^{-2itE} phases");
  info(5, "U(t) U(t)^dag vs e^{-t Gamma} I over all instances: " + sci(gram_err));
}

// 6. Invertible-family growth.
void growth_criterion() {
  const ComplexMatrix o{{0.3, cx{1.0, -0.5}}, {cx{1.0, 0.5}, -0.8}};
  double worst = 0.0;
  for (double g : {0.5, 2.0})
    for (double t : {1.0, 2.0}) {
      const auto s = GamowSpace::create({Resonance(0.9, g)});
      worst = std::max(worst, std::abs(growth_witness(s, o, t) / std::exp(t * g) - 1.0));
    }
  report(6, worst <= 1e-10, "growth witness equals e^{t Gamma}, Gamma in {0.5, 2}, t in {1, 2}",
         "max relative error " + sci(worst) + " <= 1e-10");
}

// 7. One-resonance decay law and phase law.
void decay_law_criterion() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> width(0.1, 1.5), energy(-2.0, 2.0);
  const auto ts = grid(0.0, 5.0, 101);
  double slope_dev = 0.0, modulus_err = 0.0, alpha_spread = 0.0, rate_err = 0.0, rate_err_zero = 0.0;
  for (int k = 0; k < 40; ++k) {
    const double e = k % 4 == 0 ? 0.0 : energy(rng);
    const double g = width(rng);
    const auto s = GamowSpace::create({Resonance(e, g)});
    ComplexMatrix o1 = random_hermitian(rng, 2), o2 = random_hermitian(rng, 2);
    const auto kmat = naive_commutator(o1, o2);
    const auto traj = trajectory(s, o1, o2, ts);
    slope_dev = std::max(slope_dev, std::abs(envelope_fit(traj).slope + 2 * g));
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
          const double want = std::exp(-2 * ts[i] * g) * std::abs(kmat(a, b));
          if (want > 0.0) modulus_err = std::max(modulus_err, std::abs(std::abs(traj.values[i](a, b)) / want - 1.0));
        }
    const auto law = phase_law(traj);
    alpha_spread = std::max(alpha_spread, law.alpha_modulus_spread);
    const double err = std::abs(law.measured_rate + 2 * e);
    rate_err = std::max(rate_err, err);
    if (e == 0.0) rate_err_zero = std::max(rate_err_zero, err);
  }
  report(7, slope_dev <= 1e-6 && modulus_err <= 1e-12 && alpha_spread <= 1e-9 && rate_err <= 1e-6,
         "N = 1 slope -2 Gamma, entry moduli e^{-2t Gamma}|K_ab|, |alpha| constant, arg alpha rate -2E",
         "slope deviation " + sci(slope_dev) + " <= 1e-6, modulus error " + sci(modulus_err) +
             " <= 1e-12, |alpha| spread " + sci(alpha_spread) + " <= 1e-9, rate error " + sci(rate_err) + " <= 1e-6");
  info(7, "rate error restricted to E = 0: " + sci(rate_err_zero) + "; alpha(t) carries no phase for any E");
}

// 8. Several resonances: envelope bound, slowest-mode slope, ansatz residual.
void multi_resonance_criterion() {
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> energy(-2.0, 2.0), slow(0.4, 0.6), fast(4.0, 6.0);
  const auto ts = grid(0.0, 5.0, 101);
  double bound_ratio = 0.0, slope_rel = 0.0, block_residual = 0.0, diag_block_residual = 0.0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 2;
    std::vector<Resonance> rs;
    for (std::size_t j = 0; j < n; ++j) rs.emplace_back(energy(rng), j == 0 ? slow(rng) : fast(rng));
    const auto s = GamowSpace::create(rs);
    const double gmin = s->min_width();
    const auto o1 = random_hermitian(rng, 2 * n), o2 = random_hermitian(rng, 2 * n);
    const double knorm = naive_norm(naive_commutator(o1, o2));
    const auto traj = trajectory(s, o1, o2, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
      bound_ratio = std::max(bound_ratio, traj.norms[i] / (knorm * std::exp(-2 * ts[i] * gmin)));
    slope_rel = std::max(slope_rel, std::abs(envelope_fit(traj).slope / (-2 * gmin) - 1.0));

    // Block-diagonal pairs: generic Hermitian blocks, then blocks whose
    // commutators are diagonal (σx/σy multiples).
    ComplexMatrix b1(2 * n, 2 * n), b2(2 * n, 2 * n), d1(2 * n, 2 * n), d2(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto h1 = random_hermitian(rng, 2), h2 = random_hermitian(rng, 2);
      std::normal_distribution<double> g(0.0, 1.0);
      const double c1 = g(rng), c2 = g(rng);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
          b1(2 * j + a, 2 * j + b) = h1(a, b);
          b2(2 * j + a, 2 * j + b) = h2(a, b);
          d1(2 * j + a, 2 * j + b) = c1 * pauli_x()(a, b);
          d2(2 * j + a, 2 * j + b) = c2 * pauli_y()(a, b);
        }
    }
    const auto bt = trajectory(s, b1, b2, ts);
    const auto dt = trajectory(s, d1, d2, ts);
    for (std::size_t i = 0; i < ts.size(); i += 10) {
      block_residual = std::max(block_residual, ansatz_report(bt, i).residual);
      diag_block_residual = std::max(diag_block_residual, ansatz_report(dt, i).residual);
    }
  }
  report(8, bound_ratio <= 1.0 + 1e-12 && slope_rel <= 0.05 && block_residual <= 1e-12,
         "N in {2,3}: norm <= ||K|| e^{-2t Gamma_min}; late slope within 5% of -2 Gamma_min; block-diagonal ansatz residual 0",
         "max norm/bound " + sci(bound_ratio) + " <= 1, max relative slope error " + sci(slope_rel) +
             " <= 0.05, block-diagonal residual " + sci(block_residual) + " <= 1e-12");
  info(8, "residual for block-diagonal pairs with diagonal block commutators: " + sci(diag_block_residual));
}

// 9. Distributive inequalities.
void lattice_criterion() {
  const double r = 1.0 / std::sqrt(2.0);
  const auto a = Projector::onto(ComplexMatrix{{1}, {0}});
  const auto b = Projector::onto(ComplexMatrix{{r}, {r}});
  const auto c = Projector::onto(ComplexMatrix{{r}, {-r}});
  const auto witness = distributivity_check(a, b, c);
  const bool witness_ok = lattice_equal(witness.lhs_meet, a) && witness.lhs_meet.rank() == 1 &&
                          witness.rhs_meet.rank() == 0 && !witness.meet_equal;

  std::mt19937_64 rng(109);
  int violations = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t d = 1 + k % 6;
    const auto pool = random_matrix(rng, d, 1 + k % 5);
    std::uniform_int_distribution<std::size_t> pick(0, pool.cols() - 1), count(0, pool.cols());
    auto subspace = [&]() {
      const std::size_t m = count(rng);
      if (m == 0) return Projector::zero(d);
      ComplexMatrix cols(d, m);
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t src = pick(rng);
        for (std::size_t i = 0; i < d; ++i) cols(i, j) = pool(i, src);
      }
      return Projector::onto(cols);
    };
    const auto pa = subspace(), pb = subspace(), pc = subspace();
    if (!distributivity_check(pa, pb, pc).inequality_holds) ++violations;
  }

  int compatible_failures = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = 1 + k % 6;
    // Random orthonormal basis; projectors diagonal in it commute pairwise.
    auto basis = random_matrix(rng, d, d);
    for (std::size_t col = 0; col < d; ++col) {
      for (std::size_t p = 0; p < col; ++p) {
        cx dot{};
        for (std::size_t i = 0; i < d; ++i) dot += std::conj(basis(i, p)) * basis(i, col);
        for (std::size_t i = 0; i < d; ++i) basis(i, col) -= dot * basis(i, p);
      }
      double nn = 0.0;
      for (std::size_t i = 0; i < d; ++i) nn += std::norm(basis(i, col));
      for (std::size_t i = 0; i < d; ++i) basis(i, col) /= std::sqrt(nn);
    }
    std::uniform_int_distribution<unsigned> mask(0, (1u << d) - 1);
    auto spectral = [&](unsigned m) {
      std::vector<cx> diag(d);
      for (std::size_t i = 0; i < d; ++i) diag[i] = (m >> i) & 1u ? 1.0 : 0.0;
      return Projector(naive_mul(naive_mul(basis, ComplexMatrix::diagonal(diag)), adjoint(basis)));
    };
    const auto r3 = distributivity_check(spectral(mask(rng)), spectral(mask(rng)), spectral(mask(rng)));
    if (!r3.meet_equal || !r3.join_equal) ++compatible_failures;
  }
  report(9, witness_ok && violations == 0 && compatible_failures == 0,
         "|0>,|+>,|->: a^(bvc) = a != 0 = (a^b)v(a^c); inequalities on 200 random triples; compatible triples distributive",
         std::string("witness ") + (witness_ok ? "ok" : "wrong") + ", violations " + std::to_string(violations) +
             "/200, compatible failures " + std::to_string(compatible_failures) + "/100");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 10. CLI demo runs are byte-identical.
void cli_criterion(const std::string& cli, const fs::path& work) {
  const auto t0 = std::chrono::steady_clock::now();
  fs::remove_all(work);
  fs::create_directories(work);
  auto sh = [&](const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + (work / "log.txt").string() + "\" 2>&1";
    return std::system(cmd.c_str());
  };
  bool ok = sh("demo --out \"" + (work / "scenarios").string() + "\"") == 0;
  const char* names[] = {"damping", "resonance", "lattice"};
  for (int pass = 1; pass <= 2 && ok; ++pass)
    for (const char* name : names) {
      const auto out = work / ("run" + std::to_string(pass)) / name;
      ok = ok && sh("run \"" + (work / "scenarios" / (std::string(name) + ".json")).string() + "\" --out \"" +
                    out.string() + "\"") == 0;
    }
  std::size_t compared = 0;
  bool identical = ok;
  if (ok) {
    for (const auto& entry : fs::recursive_directory_iterator(work / "run1")) {
      if (entry.path().extension() != ".csv") continue;
      const auto other = work / "run2" / fs::relative(entry.path(), work / "run1");
      ++compared;
      if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) identical = false;
    }
  }
  const double secs = seconds_since(t0);
  report(10, ok && identical && compared == 3 && secs < 5.0, "demo scenarios run twice give byte-identical CSV",
         std::string("runs ") + (ok ? "ok" : "failed") + ", " + std::to_string(compared) + " CSV files " +
             (identical ? "identical" : "differ") + ", runtime " + sci(secs) + " s < 5 s");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <gamowlab-cli> <work-dir>\n", argv[0]);
    return 2;
  }
  std::printf("kernels: %s\n", std::string(kernels::active().name).c_str());
  damping_closed_form_criterion();
  commutative_limit_criterion();
  duality_criterion();
  pseudometric_criterion();
  evolution_criterion();
  growth_criterion();
  decay_law_criterion();
  multi_resonance_criterion();
  lattice_criterion();
  cli_criterion(argv[1], argv[2]);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
