#include "ccenum/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

#include "ccenum/hexfloat.hpp"
#include "json.hpp"

namespace ccenum {

namespace {

constexpr std::size_t kUndecidedStoreCap = 10000;

double rel_volume(const IntervalVector& box, const std::vector<double>& extent) {
  double v = 1.0;
  for (std::size_t d = 0; d < box.size(); ++d)
    if (extent[d] > 0.0) v *= box[d].width() / extent[d];
  return v;
}

struct BoxResult {
  enum Kind { Pruned, Excluded, Certified, C3, Split, Contracted } kind;
  IntervalVector child_a, child_b;  // Split halves, or Contracted box
  SolutionCertificate cert;
  bool collision_split = false;
  bool gauge_rejected = false;
  double volume = 0.0;          // relative volume of the input box
  double child_volume = 0.0;    // of the contracted box
};

class Driver {
 public:
  Driver(const System& sys, const SearchSettings& st, EnumerationReport rep,
         std::vector<IntervalVector> pending)
      : sys_(sys), st_(st), rep_(std::move(rep)), stack_(std::move(pending)) {
    extent_.resize(rep_.initial_box.size());
    for (std::size_t d = 0; d < extent_.size(); ++d)
      extent_[d] = rep_.initial_box[d].width();
    inflight_.resize(std::max(1, st_.workers));
    busy_.assign(std::max(1, st_.workers), false);
    next_checkpoint_ = st_.checkpoint_period > 0
                           ? rep_.stats.boxes_processed + st_.checkpoint_period
                           : 0;
  }

  EnumerationReport run() {
    auto t0 = std::chrono::steady_clock::now();
    int nw = std::max(1, st_.workers);
    if (nw == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (int w = 0; w < nw; ++w) pool.emplace_back([this, w] { worker(w); });
      for (auto& t : pool) t.join();
    }
    rep_.complete = rep_.undecided_total == 0 && !rep_.budget_exhausted;
    std::sort(rep_.certificates.begin(), rep_.certificates.end(),
              [](const SolutionCertificate& a, const SolutionCertificate& b) {
                return midpoint(a.box) < midpoint(b.box);
              });
    rep_.wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return std::move(rep_);
  }

 private:
  void worker(int w) {
    std::unique_lock<std::mutex> lk(mu_);
    for (;;) {
      cv_.wait(lk, [this] { return stopping_ || !stack_.empty() || nbusy_ == 0; });
      if (stopping_) return;
      if (stack_.empty()) {
        if (nbusy_ == 0) {
          cv_.notify_all();
          return;
        }
        continue;
      }
      if (rep_.stats.boxes_processed >= st_.max_boxes) {
        rep_.budget_exhausted = true;
        for (auto& b : stack_) store_undecided(std::move(b));
        stack_.clear();
        stopping_ = true;
        cv_.notify_all();
        return;
      }
      IntervalVector box = std::move(stack_.back());
      stack_.pop_back();
      ++rep_.stats.boxes_processed;
      inflight_[w] = box;
      busy_[w] = true;
      ++nbusy_;
      lk.unlock();

      BoxResult r = process(box);

      lk.lock();
      commit(std::move(r));
      busy_[w] = false;
      --nbusy_;
      if (next_checkpoint_ > 0 &&
          rep_.stats.boxes_processed >= next_checkpoint_ && !stopping_) {
        next_checkpoint_ += st_.checkpoint_period;
        write_checkpoint();
      }
      cv_.notify_all();
    }
  }

  // run under the lock
  void commit(BoxResult r) {
    switch (r.kind) {
      case BoxResult::Pruned:
        ++rep_.stats.pruned_by_bounds;
        rep_.stats.volume_accounted += r.volume;
        break;
      case BoxResult::Excluded:
        ++rep_.stats.pruned_by_krawczyk;
        rep_.stats.volume_accounted += r.volume;
        break;
      case BoxResult::Certified:
        rep_.stats.volume_accounted += r.volume;
        if (r.gauge_rejected)
          ++rep_.stats.gauge_rejected;
        else
          rep_.certificates.push_back(std::move(r.cert));
        break;
      case BoxResult::C3:
        rep_.stats.volume_accounted += r.volume;
        store_undecided(std::move(r.child_a));
        break;
      case BoxResult::Contracted:
        ++rep_.stats.krawczyk_contractions;
        rep_.stats.volume_accounted += r.volume - r.child_volume;
        push_child(std::move(r.child_a), r.child_volume);
        break;
      case BoxResult::Split:
        if (r.collision_split)
          ++rep_.stats.collision_splits;
        else
          ++rep_.stats.bisections;
        push_child(std::move(r.child_a), 0.5 * r.volume);
        push_child(std::move(r.child_b), 0.5 * r.volume);
        break;
    }
  }

  void push_child(IntervalVector box, double vol) {
    if (stopping_) {
      // budget already exhausted; account the box as undecided
      rep_.stats.volume_accounted += vol;
      store_undecided(std::move(box));
      return;
    }
    stack_.push_back(std::move(box));
  }

  void store_undecided(IntervalVector box) {
    ++rep_.undecided_total;
    if (rep_.undecided.size() < kUndecidedStoreCap)
      rep_.undecided.push_back(std::move(box));
  }

  BoxResult process(const IntervalVector& box) const {
    BoxResult r;
    r.volume = rel_volume(box, extent_);

    std::pair<int, int> coll{-1, -1};
    bool collided = false;
    if (st_.prune) {
      switch (sys_.prescreen(box, &coll)) {
        case Prescreen::NoZero:
          r.kind = BoxResult::Pruned;
          return r;
        case Prescreen::Collision:
          collided = true;
          break;
        case Prescreen::Unknown:
          break;
      }
    } else {
      IntervalVector f;
      collided = !sys_.eval(box, f, &coll);
    }

    if (collided) return split(box, r, coll, true);

    KrawczykOutcome o = krawczyk_step(sys_, box);
    switch (o.status) {
      case KrawczykStatus::Excluded:
        r.kind = BoxResult::Excluded;
        return r;
      case KrawczykStatus::UniqueZero: {
        IntervalVector rb = refine(sys_, o.refined);
        KrawczykOutcome fo = krawczyk_step(sys_, rb);
        const KrawczykOutcome& best =
            fo.status == KrawczykStatus::UniqueZero ? fo : o;
        r.kind = BoxResult::Certified;
        r.gauge_rejected = !sys_.accept_certificate(best.refined);
        r.cert = make_certificate(sys_, rep_.problem_id, best);
        return r;
      }
      case KrawczykStatus::Undecided:
        break;
    }

    // keep the Krawczyk contraction when it shrinks the box appreciably
    double bw = max_width(box);
    double rw = max_width(o.refined);
    if (rw <= 0.75 * bw) {
      r.kind = BoxResult::Contracted;
      r.child_a = o.refined;
      r.child_volume = rel_volume(o.refined, extent_);
      return r;
    }
    return split(box, r, {-1, -1}, false);
  }

  BoxResult split(const IntervalVector& box, BoxResult& r,
                  std::pair<int, int> coll, bool collision) const {
    if (max_width(box) < st_.epsilon_c3) {
      r.kind = BoxResult::C3;
      r.child_a = box;
      return r;
    }
    // Collision boxes are split like undecided ones: refining every
    // coordinate is what lets the summed-row test exclude neighborhoods
    // of the collision manifold away from merged configurations.
    (void)coll;
    (void)collision;
    int dim = -1;
    double best = -1.0;
    for (std::size_t d = 0; d < box.size(); ++d) {
      if (extent_[d] <= 0.0) continue;
      double w = box[d].width() / extent_[d];
      if (w > best) {
        best = w;
        dim = static_cast<int>(d);
      }
    }
    if (dim < 0 || box[dim].width() <= 0.0) {
      // fully degenerate box we cannot decide
      r.kind = BoxResult::C3;
      r.child_a = box;
      return r;
    }
    double m = box[dim].mid();
    r.kind = BoxResult::Split;
    r.collision_split = collision;
    r.child_a = box;
    r.child_b = box;
    r.child_a[dim] = Interval(box[dim].lo(), m);
    r.child_b[dim] = Interval(m, box[dim].hi());
    return r;
  }

  void write_checkpoint() {
    if (st_.checkpoint_path.empty()) return;
    std::vector<IntervalVector> pending = stack_;
    for (int w = 0; w < static_cast<int>(busy_.size()); ++w)
      if (busy_[w]) pending.push_back(inflight_[w]);
    save_checkpoint(st_.checkpoint_path, rep_, pending);
  }

  const System& sys_;
  const SearchSettings& st_;
  EnumerationReport rep_;
  std::vector<double> extent_;
  std::vector<IntervalVector> stack_;
  std::vector<IntervalVector> inflight_;
  std::vector<bool> busy_;
  int nbusy_ = 0;
  bool stopping_ = false;
  std::uint64_t next_checkpoint_ = 0;
  std::mutex mu_;
  std::condition_variable cv_;
};

nlohmann::json box_to_json(const IntervalVector& box) {
  nlohmann::json j = nlohmann::json::array();
  for (const Interval& c : box)
    j.push_back({to_hex(c.lo()), to_hex(c.hi())});
  return j;
}

IntervalVector box_from_json(const nlohmann::json& j) {
  IntervalVector box;
  box.reserve(j.size());
  for (const auto& c : j)
    box.push_back(Interval(from_hex(c.at(0).get<std::string>()),
                           from_hex(c.at(1).get<std::string>())));
  return box;
}

}  // namespace

EnumerationReport search(const System& sys, const IntervalVector& initial,
                         const SearchSettings& settings,
                         const std::string& problem_id) {
  if (static_cast<int>(initial.size()) != sys.dim())
    throw InvalidArgument("search: initial box dimension mismatch");
  EnumerationReport rep;
  rep.problem_id = problem_id;
  rep.initial_box = initial;
  std::vector<IntervalVector> pending{initial};
  return Driver(sys, settings, std::move(rep), std::move(pending)).run();
}

EnumerationReport search_from(const System& sys, EnumerationReport partial,
                              std::vector<IntervalVector> pending,
                              const SearchSettings& settings) {
  if (static_cast<int>(partial.initial_box.size()) != sys.dim())
    throw InvalidArgument("search_from: box dimension mismatch");
  return Driver(sys, settings, std::move(partial), std::move(pending)).run();
}

EnumerationReport enumerate_aniso(const AnisoProblem& prob,
                                  const SearchSettings& settings) {
  const int k = prob.k();
  // Initial box from the a-priori bounds, inflated asymmetrically so
  // that 0 (an exact coordinate of many solutions) never coincides with
  // a bisection boundary.
  IntervalVector init(2 * k);
  auto axis = [](double b) {
    if (b <= 0.0) return Interval(0.0);
    double eta = std::ldexp(b, -16);
    return Interval(-b - 2.0 * eta, b + eta);
  };
  for (int i = 0; i < k; ++i) {
    init[2 * i] = axis(prob.bound_x());
    init[2 * i + 1] = axis(prob.bound_y());
  }
  char idbuf[128];
  std::snprintf(idbuf, sizeof idbuf, "aniso-k%d-a%.17g-b%.17g", k, prob.a(),
                prob.b());
  EnumerationReport rep = search(prob, init, settings, idbuf);
  rep.counts_by_shape.clear();
  for (auto& cert : rep.certificates) {
    cert.shape_class = classify_shape(cert, prob);
    ++rep.counts_by_shape[cert.shape_class];
  }
  return rep;
}

EnumerationReport enumerate_nbody(const ReducedNBodyProblem& prob,
                                  const IntervalVector& region,
                                  const SearchSettings& settings) {
  char idbuf[64];
  std::snprintf(idbuf, sizeof idbuf, "nbody-n%d-gauge%d", prob.n(),
                prob.gauge());
  return search(prob, region, settings, idbuf);
}

namespace {

// geometric predicates on certificate midpoints
constexpr double kAxisTol = 1e-6;

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

struct Pt {
  double x, y;
};

double dist(const Pt& a, const Pt& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool point_in_triangle(const Pt& p, const Pt& a, const Pt& b, const Pt& c) {
  auto cross = [](const Pt& o, const Pt& u, const Pt& v) {
    return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
  };
  double d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
  bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

// relative side spread of a triangle: (max side - min side) / max side
double equilateral_defect(const Pt& a, const Pt& b, const Pt& c) {
  double s1 = dist(a, b), s2 = dist(b, c), s3 = dist(c, a);
  double mx = std::max({s1, s2, s3}), mn = std::min({s1, s2, s3});
  return mx > 0 ? (mx - mn) / mx : 1.0;
}

}  // namespace

std::string classify_shape(const SolutionCertificate& cert,
                           const AnisoProblem& prob) {
  const int k = prob.k();
  std::vector<double> m = midpoint(cert.box);
  std::vector<Pt> p(k);
  for (int i = 0; i < k; ++i) p[i] = {m[2 * i], m[2 * i + 1]};

  bool all_y0 = true, all_x0 = true;
  for (const Pt& q : p) {
    if (std::fabs(q.y) > kAxisTol) all_y0 = false;
    if (std::fabs(q.x) > kAxisTol) all_x0 = false;
  }
  if (all_y0) return "collinear-x";
  if (all_x0) return "collinear-y";

  if (k == 3) {
    // the only non-collinear family: isosceles, mirror-symmetric in x
    double s1 = dist(p[0], p[1]), s2 = dist(p[1], p[2]), s3 = dist(p[2], p[0]);
    double mx = std::max({s1, s2, s3});
    double iso = std::min({std::fabs(s1 - s2), std::fabs(s2 - s3),
                           std::fabs(s3 - s1)});
    if (mx > 0 && iso / mx < 1e-6) return "isosceles-triangle";
    return "other";
  }

  if (k != 4) return "other";

  double scale = 0.0;
  for (const Pt& q : p) scale = std::max(scale, std::hypot(q.x, q.y));
  const double tol = std::max(kAxisTol, 1e-9 * scale);

  // central symmetry: every point has its antipode present
  bool central = true;
  std::vector<int> anti(k, -1);
  for (int i = 0; i < k && central; ++i) {
    for (int j = 0; j < k; ++j)
      if (j != i && near(p[j].x, -p[i].x, tol) && near(p[j].y, -p[i].y, tol)) {
        anti[i] = j;
        break;
      }
    if (anti[i] < 0) central = false;
  }
  if (central) {
    int on_x = 0, on_y = 0;
    for (const Pt& q : p) {
      if (std::fabs(q.y) <= tol) ++on_x;
      if (std::fabs(q.x) <= tol) ++on_y;
    }
    if (on_x == 2 && on_y == 2) return "rhombus";
    // rectangle: all |x| equal, all |y| equal, four sign quadrants
    bool rect = true;
    for (int i = 1; i < k; ++i)
      rect = rect && near(std::fabs(p[i].x), std::fabs(p[0].x), tol) &&
             near(std::fabs(p[i].y), std::fabs(p[0].y), tol);
    if (rect) return "rectangle";
    // slanted rhombus: vertices u, v, -u, -v with all four sides equal
    int u = 0, v = anti[0] == 1 ? 2 : 1;
    double s1 = dist(p[u], p[v]);
    double s2 = dist(p[v], p[anti[u]]);
    if (near(s1, s2, 1e-6 * std::max(s1, s2) + tol)) return "slanted-rhombus";
    return "other";
  }

  // mirror symmetry about the x axis: two bodies on the axis plus a
  // mirror pair — the two triangle-derived families
  std::vector<int> on_axis, off_axis;
  for (int i = 0; i < k; ++i)
    (std::fabs(p[i].y) <= tol ? on_axis : off_axis).push_back(i);
  if (on_axis.size() == 2 && off_axis.size() == 2 &&
      near(p[off_axis[0]].x, p[off_axis[1]].x, tol) &&
      near(p[off_axis[0]].y, -p[off_axis[1]].y, tol)) {
    // equilateral sub-triangle (mirror pair + one axis point)?
    for (int ax : on_axis) {
      if (equilateral_defect(p[ax], p[off_axis[0]], p[off_axis[1]]) < 1e-3)
        return "equilateral-in-isosceles";
    }
    // one axis point interior to the triangle formed by the other three
    for (int i = 0; i < 2; ++i) {
      int inner = on_axis[i], apex = on_axis[1 - i];
      if (point_in_triangle(p[inner], p[apex], p[off_axis[0]],
                            p[off_axis[1]]))
        return "triangle-with-interior-point";
    }
    return "other";
  }
  return "other";
}

void save_checkpoint(const std::string& path, const EnumerationReport& partial,
                     const std::vector<IntervalVector>& pending) {
  nlohmann::json j;
  j["schema"] = "ccenum-checkpoint-1";
  j["problem_id"] = partial.problem_id;
  j["initial_box"] = box_to_json(partial.initial_box);
  j["stats"] = {
      {"boxes_processed", partial.stats.boxes_processed},
      {"pruned_by_bounds", partial.stats.pruned_by_bounds},
      {"pruned_by_krawczyk", partial.stats.pruned_by_krawczyk},
      {"collision_splits", partial.stats.collision_splits},
      {"bisections", partial.stats.bisections},
      {"krawczyk_contractions", partial.stats.krawczyk_contractions},
      {"gauge_rejected", partial.stats.gauge_rejected},
      {"volume_accounted", to_hex(partial.stats.volume_accounted)},
  };
  j["budget_exhausted"] = partial.budget_exhausted;
  j["undecided_total"] = partial.undecided_total;
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : partial.certificates) {
    certs.push_back({{"box", box_to_json(c.box)},
                     {"image", box_to_json(c.image)},
                     {"contraction_norm", to_hex(c.contraction_norm)},
                     {"midpoint_residual_norm", to_hex(c.midpoint_residual_norm)},
                     {"shape_class", c.shape_class}});
  }
  j["certificates"] = std::move(certs);
  nlohmann::json und = nlohmann::json::array();
  for (const auto& b : partial.undecided) und.push_back(box_to_json(b));
  j["undecided"] = std::move(und);
  nlohmann::json pend = nlohmann::json::array();
  for (const auto& b : pending) pend.push_back(box_to_json(b));
  j["pending"] = std::move(pend);

  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(1) << '\n';
    if (!out) throw DomainError("save_checkpoint: write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw DomainError("save_checkpoint: rename failed: " + path);
}

bool load_checkpoint(const std::string& path, EnumerationReport& partial,
                     std::vector<IntervalVector>& pending) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("schema", "") != "ccenum-checkpoint-1")
    return false;
  partial = EnumerationReport();
  partial.problem_id = j.at("problem_id").get<std::string>();
  partial.initial_box = box_from_json(j.at("initial_box"));
  const auto& s = j.at("stats");
  partial.stats.boxes_processed = s.at("boxes_processed").get<std::uint64_t>();
  partial.stats.pruned_by_bounds = s.at("pruned_by_bounds").get<std::uint64_t>();
  partial.stats.pruned_by_krawczyk =
      s.at("pruned_by_krawczyk").get<std::uint64_t>();
  partial.stats.collision_splits = s.at("collision_splits").get<std::uint64_t>();
  partial.stats.bisections = s.at("bisections").get<std::uint64_t>();
  partial.stats.krawczyk_contractions =
      s.at("krawczyk_contractions").get<std::uint64_t>();
  partial.stats.gauge_rejected = s.at("gauge_rejected").get<std::uint64_t>();
  partial.stats.volume_accounted =
      from_hex(s.at("volume_accounted").get<std::string>());
  partial.budget_exhausted = j.at("budget_exhausted").get<bool>();
  partial.undecided_total = j.at("undecided_total").get<std::uint64_t>();
  for (const auto& c : j.at("certificates")) {
    SolutionCertificate cert;
    cert.problem_id = partial.problem_id;
    cert.box = box_from_json(c.at("box"));
    cert.image = box_from_json(c.at("image"));
    cert.contraction_norm = from_hex(c.at("contraction_norm").get<std::string>());
    cert.midpoint_residual_norm =
        from_hex(c.at("midpoint_residual_norm").get<std::string>());
    cert.shape_class = c.at("shape_class").get<std::string>();
    partial.certificates.push_back(std::move(cert));
  }
  for (const auto& b : j.at("undecided"))
    partial.undecided.push_back(box_from_json(b));
  pending.clear();
  for (const auto& b : j.at("pending")) pending.push_back(box_from_json(b));
  return true;
}

}  // namespace ccenum
