// ccenum: rigorous enumeration of planar central configurations.
//
// Subcommands: aniso-enumerate, nbody-enumerate, analytic, compare,
// verify.  Exit codes: 0 = complete run, 2 = INCOMPLETE (undecided
// boxes remain), 1 = usage or configuration error.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "ccenum/bridge.hpp"
#include "ccenum/report.hpp"

using namespace ccenum;
using nlohmann::json;

namespace {

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string paint(const std::string& s, const char* code) {
  if (!use_color()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

void add_search_flags(CLI::App* cmd, SearchSettings& s) {
  cmd->add_option("--epsilon-c3", s.epsilon_c3,
                  "width below which an undecided box is abandoned");
  cmd->add_option("--max-boxes", s.max_boxes, "processed-box budget");
  cmd->add_option("--workers", s.workers, "worker threads");
  cmd->add_option("--checkpoint", s.checkpoint_path, "checkpoint file");
  cmd->add_option("--checkpoint-period", s.checkpoint_period,
                  "boxes between checkpoints (0 = off)");
  cmd->add_flag("!--no-prune", s.prune,
                "disable identity/floor pruning (soundness audit)");
}

json settings_echo(const SearchSettings& s) {
  return json{{"epsilon_c3", s.epsilon_c3},
              {"max_boxes", s.max_boxes},
              {"workers", s.workers},
              {"prune", s.prune}};
}

void emit_plot_data(const std::string& path, const EnumerationReport& rep,
                    const System& sys) {
  std::ofstream out(path);
  out.precision(17);
  for (const auto& cert : rep.certificates) {
    std::vector<Interval> px, py;
    sys.positions(cert.box, px, py);
    for (size_t b = 0; b < px.size(); ++b)
      out << px[b].mid() << ' ' << py[b].mid() << ' ' << cert.shape_class
          << '\n';
    out << '\n';
  }
}

int finish_enumeration(const EnumerationReport& rep, const System& sys,
                       const json& config, const std::string& output,
                       const std::string& plot_path) {
  if (!output.empty()) write_json_atomic(output, report_to_json(rep, config));
  if (!plot_path.empty()) emit_plot_data(plot_path, rep, sys);
  std::cout << (rep.complete ? paint("COMPLETE", "32")
                             : paint("INCOMPLETE", "31"))
            << ": " << rep.certificates.size() << " certificates, "
            << rep.undecided_total << " undecided, "
            << rep.stats.boxes_processed << " boxes, " << rep.wall_seconds
            << " s\n";
  for (const auto& [shape, count] : rep.counts_by_shape)
    std::cout << "  " << shape << ": " << count << '\n';
  return rep.complete ? 0 : 2;
}

void print_interval(const char* name, const Interval& x) {
  std::cout.precision(17);
  std::cout << "  " << name << " = [" << x.lo() << ", " << x.hi()
            << "]  width " << x.hi() - x.lo() << '\n';
}

int run_analytic(const std::string& family, double mu, double a, double b,
                 int k, const std::string& axis_name, double m1) {
  if (family == "l4") {
    L4Params p = l4_hessian_params(m1, 1.0 - m1);
    print_interval("a", p.a);
    print_interval("b", p.b);
    std::cout << "  rotation = " << p.rotation << '\n';
    return 0;
  }
  if (family == "triangle") {
    auto t = isosceles_triangle(mu, a, b);
    if (!t) {
      std::cout << "  degenerate: no triangle for these coefficients\n";
      return 0;
    }
    print_interval("s", t->s);
    print_interval("r", t->r);
    print_interval("x", t->x);
    print_interval("y", t->y);
    return 0;
  }
  if (family == "rhombus") {
    RhombusSolution s = rhombus(mu, a, b);
    print_interval("kratio", s.kratio);
    print_interval("r", s.r);
    print_interval("x", s.x);
    print_interval("y", s.y);
    return 0;
  }
  if (family == "rectangle") {
    RectangleSolution s = rectangle(mu, a, b);
    print_interval("phi", s.phi);
    print_interval("r", s.r);
    print_interval("x", s.x);
    print_interval("y", s.y);
    return 0;
  }
  if (family == "moulton") {
    Axis axis = axis_name == "y" ? Axis::Y : Axis::X;
    double coeff = axis == Axis::X ? a : b;
    auto sols =
        moulton_axis(k, MassVector(std::vector<double>(k, mu)), axis, coeff);
    std::cout << "  " << sols.size() << " orderings on the " << axis_name
              << " axis\n";
    for (const auto& s : sols) {
      std::cout << "  ordering";
      for (int idx : s.ordering) std::cout << ' ' << idx;
      std::cout << ":";
      std::cout.precision(12);
      for (const auto& z : s.axis_positions)
        std::cout << "  [" << z.lo() << ", " << z.hi() << "]";
      std::cout << '\n';
    }
    return 0;
  }
  std::cerr << "unknown family: " << family << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous central-configuration enumeration"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file (flags override)");

  // --- aniso-enumerate -------------------------------------------------
  auto* aniso = app.add_subcommand(
      "aniso-enumerate", "enumerate the anisotropic limit problem");
  int ak = 3;
  double aa = 0.75, ab = 2.25;
  std::vector<double> amu;
  bool equal_masses = false;
  SearchSettings aset;
  std::string aout, aplot, aresume;
  aniso->add_option("--k", ak, "body count")->required();
  aniso->add_option("--a", aa, "x-axis coefficient")->required();
  aniso->add_option("--b", ab, "y-axis coefficient")->required();
  aniso->add_option("--mu", amu, "weights (k values)");
  aniso->add_flag("--equal-masses", equal_masses, "use mu_i = 1/k");
  aniso->add_option("--output,-o", aout, "report file");
  aniso->add_option("--emit-plot-data", aplot, "midpoint dump for plotting");
  aniso->add_option("--resume", aresume, "checkpoint to resume from");
  add_search_flags(aniso, aset);

  // --- nbody-enumerate -------------------------------------------------
  auto* nbody = app.add_subcommand(
      "nbody-enumerate", "enumerate the reduced n-body problem");
  std::vector<double> nmasses;
  int ngauge = -1;
  std::vector<double> nregion;
  SearchSettings nset;
  std::string nout, nplot, nresume;
  nbody->add_option("--masses", nmasses, "all n masses")->required();
  nbody->add_option("--gauge", ngauge, "body with pinned y (default n-2)");
  nbody
      ->add_option("--region", nregion,
                   "initial box, lo hi per variable (2(n-1)-1 pairs)")
      ->required();
  nbody->add_option("--output,-o", nout, "report file");
  nbody->add_option("--emit-plot-data", nplot, "midpoint dump for plotting");
  nbody->add_option("--resume", nresume, "checkpoint to resume from");
  add_search_flags(nbody, nset);

  // --- analytic ----------------------------------------------------------
  auto* analytic = app.add_subcommand(
      "analytic", "closed-form and one-dimensional solution families");
  std::string family, axis_name = "x";
  double fmu = 1.0 / 3, fa = 0.75, fb = 2.25, fm1 = 0.5;
  int fk = 3;
  analytic
      ->add_option("--family", family,
                   "triangle | rhombus | rectangle | moulton | l4")
      ->required();
  analytic->add_option("--mu", fmu, "equal weight per body");
  analytic->add_option("--a", fa, "x-axis coefficient");
  analytic->add_option("--b", fb, "y-axis coefficient");
  analytic->add_option("--k", fk, "body count (moulton)");
  analytic->add_option("--axis", axis_name, "x | y (moulton)");
  analytic->add_option("--m1", fm1, "first primary mass (l4)");

  // --- compare -----------------------------------------------------------
  auto* compare = app.add_subcommand(
      "compare", "pair a full-problem run against a limit-problem run");
  std::string full_path, limit_path, cmp_out, cmp_csv;
  double threshold = 5e-3;
  int k_light = 0;
  compare->add_option("full", full_path, "full-problem report")->required();
  compare->add_option("limit", limit_path, "limit-problem report")
      ->required();
  compare->add_option("--threshold", threshold, "max pairing discrepancy");
  compare->add_option("--k-light", k_light,
                      "light body count (default from reports)");
  compare->add_option("--output,-o", cmp_out, "pairing report file");
  compare->add_option("--csv", cmp_csv, "comparison table file");

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "re-certify every box of a report from exact endpoints");
  std::string verify_path;
  verify->add_option("report", verify_path, "report file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (aniso->parsed()) {
      if (equal_masses) amu.assign(ak, 1.0 / ak);
      if (static_cast<int>(amu.size()) != ak) {
        std::cerr << "mu: expected " << ak << " weights\n";
        return 1;
      }
      AnisoProblem prob(amu, aa, ab);
      json config{{"problem",
                   {{"family", "aniso"}, {"mu", amu}, {"a", aa}, {"b", ab}}},
                  {"settings", settings_echo(aset)}};
      EnumerationReport rep;
      if (!aresume.empty()) {
        EnumerationReport partial;
        std::vector<IntervalVector> pending;
        if (!load_checkpoint(aresume, partial, pending)) {
          std::cerr << "cannot load checkpoint " << aresume << '\n';
          return 1;
        }
        rep = search_from(prob, std::move(partial), std::move(pending), aset);
        for (auto& cert : rep.certificates)
          cert.shape_class = classify_shape(cert, prob);
        rep.counts_by_shape.clear();
        for (const auto& cert : rep.certificates)
          ++rep.counts_by_shape[cert.shape_class];
      } else {
        rep = enumerate_aniso(prob, aset);
      }
      return finish_enumeration(rep, prob, config, aout, aplot);
    }

    if (nbody->parsed()) {
      MassVector mv(nmasses);
      if (ngauge < 0) ngauge = mv.size() - 2;
      ReducedNBodyProblem prob(mv, ngauge);
      if (static_cast<int>(nregion.size()) != 2 * prob.dim()) {
        std::cerr << "region: expected " << 2 * prob.dim() << " numbers\n";
        return 1;
      }
      IntervalVector region(prob.dim());
      for (int i = 0; i < prob.dim(); ++i)
        region[i] = Interval(nregion[2 * i], nregion[2 * i + 1]);
      json config{
          {"problem",
           {{"family", "nbody"}, {"masses", nmasses}, {"gauge", ngauge}}},
          {"settings", settings_echo(nset)}};
      EnumerationReport rep;
      if (!nresume.empty()) {
        EnumerationReport partial;
        std::vector<IntervalVector> pending;
        if (!load_checkpoint(nresume, partial, pending)) {
          std::cerr << "cannot load checkpoint " << nresume << '\n';
          return 1;
        }
        rep = search_from(prob, std::move(partial), std::move(pending), nset);
      } else {
        rep = enumerate_nbody(prob, region, nset);
      }
      return finish_enumeration(rep, prob, config, nout, nplot);
    }

    if (analytic->parsed())
      return run_analytic(family, fmu, fa, fb, fk, axis_name, fm1);

    if (compare->parsed()) {
      json jf = load_json(full_path);
      json jl = load_json(limit_path);
      EnumerationReport full = report_from_json(jf);
      EnumerationReport limit = report_from_json(jl);
      const json& fp = jf.at("config").at("problem");
      const json& lp = jl.at("config").at("problem");
      if (fp.at("family") != "nbody" || lp.at("family") != "aniso") {
        std::cerr << "compare: expected an nbody report then an aniso "
                     "report\n";
        return 1;
      }
      int k_limit = lp.at("mu").get<std::vector<double>>().size();
      if (k_light == 0) k_light = k_limit;
      if (k_light != k_limit) {
        std::cerr << "compare: light body counts differ (" << k_light
                  << " vs " << k_limit << ")\n";
        return 1;
      }
      ReducedNBodyProblem prob(
          MassVector(fp.at("masses").get<std::vector<double>>()),
          fp.at("gauge").get<int>());
      PairingReport pairing =
          pair_solutions(full, prob, k_light, limit, threshold);
      json config{{"full", full_path},
                  {"limit", limit_path},
                  {"threshold", threshold},
                  {"k_light", k_light}};
      if (!cmp_out.empty())
        write_json_atomic(cmp_out, pairing_to_json(pairing, config));
      if (!cmp_csv.empty()) {
        std::ofstream out(cmp_csv);
        out << pairing_csv(pairing, limit);
      }
      std::cout << pairing.pairs.size() << " pairs, "
                << pairing.unmatched_full.size() << '+'
                << pairing.unmatched_limit.size()
                << " unmatched, max discrepancy " << pairing.max_discrepancy
                << '\n';
      return pairing.unmatched_full.empty() && pairing.unmatched_limit.empty()
                 ? 0
                 : 2;
    }

    if (verify->parsed()) {
      std::string diag;
      if (verify_report(verify_path, &diag)) {
        std::cout << paint("VERIFIED", "32") << '\n';
        return 0;
      }
      std::cout << paint("VERIFICATION FAILED", "31") << ": " << diag << '\n';
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
