#include "ccenum/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ccenum/hexfloat.hpp"
#include "ccenum/krawczyk.hpp"

namespace ccenum {

using nlohmann::json;

json interval_to_json(const Interval& x) {
  return json{{"hex", {to_hex(x.lo()), to_hex(x.hi())}},
              {"dec", {x.lo(), x.hi()}}};
}

Interval interval_from_json(const json& j) {
  const auto& hex = j.at("hex");
  return Interval(from_hex(hex.at(0).get<std::string>()),
                  from_hex(hex.at(1).get<std::string>()));
}

json box_to_json(const IntervalVector& b) {
  json out = json::array();
  for (const Interval& x : b) out.push_back(interval_to_json(x));
  return out;
}

IntervalVector box_from_json(const json& j) {
  IntervalVector out;
  for (const auto& e : j) out.push_back(interval_from_json(e));
  return out;
}

namespace {

json cert_to_json(const SolutionCertificate& c) {
  return json{{"problem_id", c.problem_id},
              {"box", box_to_json(c.box)},
              {"image", box_to_json(c.image)},
              {"contraction_norm", c.contraction_norm},
              {"midpoint_residual_norm", c.midpoint_residual_norm},
              {"shape_class", c.shape_class}};
}

SolutionCertificate cert_from_json(const json& j) {
  SolutionCertificate c;
  c.problem_id = j.at("problem_id").get<std::string>();
  c.box = box_from_json(j.at("box"));
  c.image = box_from_json(j.at("image"));
  c.contraction_norm = j.at("contraction_norm").get<double>();
  c.midpoint_residual_norm = j.at("midpoint_residual_norm").get<double>();
  c.shape_class = j.at("shape_class").get<std::string>();
  return c;
}

json stats_to_json(const SearchStats& s) {
  return json{{"boxes_processed", s.boxes_processed},
              {"pruned_by_bounds", s.pruned_by_bounds},
              {"pruned_by_krawczyk", s.pruned_by_krawczyk},
              {"collision_splits", s.collision_splits},
              {"bisections", s.bisections},
              {"krawczyk_contractions", s.krawczyk_contractions},
              {"gauge_rejected", s.gauge_rejected},
              {"volume_accounted", s.volume_accounted}};
}

SearchStats stats_from_json(const json& j) {
  SearchStats s;
  s.boxes_processed = j.at("boxes_processed").get<std::uint64_t>();
  s.pruned_by_bounds = j.at("pruned_by_bounds").get<std::uint64_t>();
  s.pruned_by_krawczyk = j.at("pruned_by_krawczyk").get<std::uint64_t>();
  s.collision_splits = j.at("collision_splits").get<std::uint64_t>();
  s.bisections = j.at("bisections").get<std::uint64_t>();
  s.krawczyk_contractions = j.at("krawczyk_contractions").get<std::uint64_t>();
  s.gauge_rejected = j.at("gauge_rejected").get<std::uint64_t>();
  s.volume_accounted = j.at("volume_accounted").get<double>();
  return s;
}

}  // namespace

json report_to_json(const EnumerationReport& rep, const json& config) {
  json certs = json::array();
  for (const auto& c : rep.certificates) certs.push_back(cert_to_json(c));
  json undecided = json::array();
  for (const auto& b : rep.undecided) undecided.push_back(box_to_json(b));
  return json{{"schema", kReportSchema},
              {"tool_version", kToolVersion},
              {"config", config},
              {"problem_id", rep.problem_id},
              {"initial_box", box_to_json(rep.initial_box)},
              {"certificates", certs},
              {"counts_by_shape", rep.counts_by_shape},
              {"undecided", undecided},
              {"undecided_total", rep.undecided_total},
              {"stats", stats_to_json(rep.stats)},
              {"budget_exhausted", rep.budget_exhausted},
              {"complete", rep.complete},
              {"wall_seconds", rep.wall_seconds}};
}

EnumerationReport report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kReportSchema)
    throw InvalidArgument("report: unknown schema " +
                          j.at("schema").get<std::string>());
  EnumerationReport rep;
  rep.problem_id = j.at("problem_id").get<std::string>();
  rep.initial_box = box_from_json(j.at("initial_box"));
  for (const auto& c : j.at("certificates"))
    rep.certificates.push_back(cert_from_json(c));
  rep.counts_by_shape =
      j.at("counts_by_shape").get<std::map<std::string, int>>();
  for (const auto& b : j.at("undecided"))
    rep.undecided.push_back(box_from_json(b));
  rep.undecided_total = j.at("undecided_total").get<std::uint64_t>();
  rep.stats = stats_from_json(j.at("stats"));
  rep.budget_exhausted = j.at("budget_exhausted").get<bool>();
  rep.complete = j.at("complete").get<bool>();
  rep.wall_seconds = j.at("wall_seconds").get<double>();
  return rep;
}

json pairing_to_json(const PairingReport& rep, const json& config) {
  json pairs = json::array();
  for (const auto& p : rep.pairs)
    pairs.push_back(json{{"full_index", p.full_index},
                         {"limit_index", p.limit_index},
                         {"discrepancy", p.discrepancy},
                         {"normalized", p.normalized}});
  return json{{"schema", "ccenum-pairing-1"},
              {"tool_version", kToolVersion},
              {"config", config},
              {"pairs", pairs},
              {"unmatched_full", rep.unmatched_full},
              {"unmatched_limit", rep.unmatched_limit},
              {"max_discrepancy", rep.max_discrepancy}};
}

void write_json_atomic(const std::string& path, const json& j) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw DomainError("cannot open " + tmp + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw DomainError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw DomainError("rename failed: " + path);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return json::parse(in);
}

std::unique_ptr<System> system_from_config(const json& config) {
  const json& p = config.at("problem");
  std::string family = p.at("family").get<std::string>();
  if (family == "aniso") {
    return std::make_unique<AnisoProblem>(
        p.at("mu").get<std::vector<double>>(), p.at("a").get<double>(),
        p.at("b").get<double>());
  }
  if (family == "nbody") {
    return std::make_unique<ReducedNBodyProblem>(
        MassVector(p.at("masses").get<std::vector<double>>()),
        p.at("gauge").get<int>());
  }
  throw InvalidArgument("unknown problem family: " + family);
}

bool verify_report(const std::string& path, std::string* diagnostic) {
  json j = load_json(path);
  EnumerationReport rep = report_from_json(j);
  std::unique_ptr<System> sys = system_from_config(j.at("config"));
  for (size_t i = 0; i < rep.certificates.size(); ++i) {
    const auto& cert = rep.certificates[i];
    KrawczykOutcome o;
    try {
      o = krawczyk_step(*sys, cert.box);
    } catch (const std::exception& e) {
      if (diagnostic)
        *diagnostic = "certificate " + std::to_string(i) + ": " + e.what();
      return false;
    }
    if (o.status != KrawczykStatus::UniqueZero ||
        !sys->accept_certificate(o.refined)) {
      if (diagnostic)
        *diagnostic =
            "certificate " + std::to_string(i) + " failed to re-certify";
      return false;
    }
  }
  return true;
}

std::string pairing_csv(const PairingReport& rep,
                        const EnumerationReport& limit) {
  std::ostringstream out;
  out << "full_index,limit_index,body,full_x,full_y,limit_x,limit_y,"
         "discrepancy\n";
  out.precision(10);
  for (const auto& p : rep.pairs) {
    const IntervalVector& box = limit.certificates[p.limit_index].box;
    int k = static_cast<int>(p.normalized.size()) / 2;
    for (int j = 0; j < k; ++j) {
      out << p.full_index << ',' << p.limit_index << ',' << j << ','
          << p.normalized[2 * j] << ',' << p.normalized[2 * j + 1] << ','
          << box[2 * j].mid() << ',' << box[2 * j + 1].mid() << ','
          << p.discrepancy << '\n';
    }
  }
  return out.str();
}

}  // namespace ccenum
