#include "vlp/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <utility>

#include "vlp/duality.hpp"
#include "vlp/efficiency.hpp"
#include "vlp/error.hpp"

namespace vlp {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [s](const CheckRecord& r) { return r.status == s; }));
}

void VerificationReport::normalize() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.instance, a.check) <
                            std::tie(b.instance, b.check);
                   });
}

void VerificationReport::append(VerificationReport other) {
  for (auto& r : other.records) records.push_back(std::move(r));
  for (const auto& [name, n] : other.executions) executions[name] += n;
}

namespace {

using Clock = std::chrono::steady_clock;

// Checks the suite registers on every instance.
const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> names{
      "converse_duality",     "efficiency_oracle",   "emptiness_bounded",
      "emptiness_improvement", "emptiness_quadrant", "image_inclusion",
      "lagrange_dual_map",    "lambda_existence",    "membership_witness",
      "minimal_images",       "scalarization_equivalence",
      "strict_gap_search",    "strong_duality",      "value_map",
      "weak_duality",
  };
  return names;
}

struct Tally {
  std::size_t executions = 0;
  std::size_t failures = 0;
  Json first_failure;
  std::string skip_reason;
  Json info = Json::object();
  double ms = 0;
};

class Recorder {
 public:
  Recorder(const VlpProblem& p, std::string instance, bool timing)
      : p_(p), instance_(std::move(instance)), timing_(timing) {}

  void ok(const std::string& check, std::size_t n = 1) {
    tallies_[check].executions += n;
  }

  void fail(const std::string& check, const std::string& detail,
            Json data = Json::object()) {
    Tally& t = tallies_[check];
    ++t.executions;
    if (t.failures++ == 0) {
      Json payload = Json::object();
      payload["detail"] = detail;
      payload["problem"] = to_json(p_);
      for (auto& [key, value] : data.items()) payload[key] = value;
      t.first_failure = std::move(payload);
    }
  }

  // Counts one execution; on a false condition records the payload built
  // by `data`.
  template <class F>
  void expect(const std::string& check, bool cond, const std::string& detail,
              F&& data) {
    if (cond) {
      ok(check);
    } else {
      fail(check, detail, data());
    }
  }

  void expect(const std::string& check, bool cond, const std::string& detail) {
    expect(check, cond, detail, [] { return Json::object(); });
  }

  void skip(const std::string& check, const std::string& reason) {
    tallies_[check].skip_reason = reason;
  }

  Json& info(const std::string& check) { return tallies_[check].info; }

  // Runs `body` as check `check`. Library errors become failures, limit
  // errors a skip.
  void run(const std::string& check, const std::function<void()>& body) {
    const auto start = Clock::now();
    try {
      body();
    } catch (const LimitError& e) {
      skip(check, e.what());
    } catch (const Error& e) {
      fail(check, std::string("exception: ") + e.what());
    }
    if (timing_) {
      tallies_[check].ms +=
          std::chrono::duration<double, std::milli>(Clock::now() - start)
              .count();
    }
  }

  VerificationReport finish(const std::vector<std::string>& registered) {
    for (const auto& name : registered) tallies_[name];
    VerificationReport r;
    for (auto& [name, t] : tallies_) {
      CheckRecord rec;
      rec.check = name;
      rec.instance = instance_;
      rec.elapsed_ms = t.ms;
      Json w = Json::object();
      w["executions"] = t.executions;
      if (t.failures > 0) {
        rec.status = CheckStatus::Fail;
        w["failures"] = t.failures;
        w["counterexample"] = std::move(t.first_failure);
      } else if (t.executions > 0) {
        rec.status = CheckStatus::Pass;
      } else {
        rec.status = CheckStatus::Skipped;
        w["reason"] = t.skip_reason.empty() ? "not applicable" : t.skip_reason;
      }
      for (auto& [key, value] : t.info.items()) w[key] = value;
      rec.witness = std::move(w);
      r.executions[name] += t.executions;
      r.records.push_back(std::move(rec));
    }
    return r;
  }

 private:
  const VlpProblem& p_;
  std::string instance_;
  bool timing_;
  std::map<std::string, Tally> tallies_;
};

bool primal_feasible_point(const VlpProblem& p, const QVector& x) {
  return x.dim() == p.n() && x.is_nonnegative() && p.A() * x == p.b();
}

Json dual_json(const DualCandidateD& c) { return to_json(c); }

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!rng.chance(1, 4)) m(i, j) = rng.small_rational();
    }
  }
  return m;
}

QVector random_vector(Rng& rng, std::size_t dim) {
  QVector v(dim);
  for (auto& x : v) x = rng.small_rational();
  return v;
}

// Constraint-by-constraint check of a (lambda, z) witness for the image
// set systems; `equality` selects h(B) (true) or h^L (false).
bool witness_system_holds(const VlpProblem& p, const MembershipWitness& w,
                          const QVector& d, bool equality) {
  for (const auto& g : p.K().generators()) {
    if (dot(w.lambda, g) < 1) return false;
  }
  for (std::size_t j = 0; j < p.n(); ++j) {
    Rational s;
    for (std::size_t i = 0; i < p.k(); ++i) s += p.L()(i, j) * w.lambda[i];
    for (std::size_t i = 0; i < p.m(); ++i) s -= p.A()(i, j) * w.z[i];
    if (s < 0) return false;
  }
  const Rational gap = dot(w.lambda, d) - dot(p.b(), w.z);
  return equality ? gap.is_zero() : gap <= 0;
}

class InstanceSuite {
 public:
  InstanceSuite(const VlpProblem& p, const std::string& instance,
                std::uint64_t seed, const HarnessOptions& opts)
      : p_(p), opts_(opts), rng_(seed), rec_(p, instance, opts.timing) {}

  VerificationReport run() {
    bool have_vertices = true;
    try {
      vertices_ = enumerate_vertices(p_);
    } catch (const LimitError& e) {
      have_vertices = false;
      for (const auto& c : suite_checks()) rec_.skip(c, e.what());
    }
    if (have_vertices) {
      duals_ = sample_dual_points(p_, rng_, {opts_.dual_samples, 10});
      primal_pool_ = vertices_;
      for (auto& x : sample_primal_points(vertices_, rng_, opts_.primal_samples)) {
        primal_pool_.push_back(std::move(x));
      }
      for (const auto& x : primal_pool_) images_.push_back(p_.L() * x);

      rec_.run("scalarization_equivalence", [&] { scalarization(); });
      rec_.run("efficiency_oracle", [&] { efficiency_oracle(); });
      rec_.run("weak_duality", [&] { weak_duality(); });
      rec_.run("strong_duality", [&] { strong_duality(); });
      rec_.run("converse_duality", [&] { converse_duality(); });
      rec_.run("lagrange_dual_map", [&] { lagrange_map(); });
      rec_.run("lambda_existence", [&] { lambda_existence(); });
      rec_.run("image_inclusion", [&] { image_inclusion(); });
      rec_.run("value_map", [&] { value_map(); });
      rec_.run("emptiness_quadrant", [&] { quadrant(); });
      rec_.run("emptiness_bounded", [&] { emptiness_bounded(); });
      rec_.run("emptiness_improvement", [&] { emptiness_improvement(); });
      rec_.run("minimal_images", [&] { minimal_images(); });
    }
    return rec_.finish(suite_checks());
  }

 private:
  const EfficiencyCertificate& efficiency_of(std::size_t i) {
    if (efficiency_.size() != vertices_.size()) {
      efficiency_.clear();
      for (const auto& v : vertices_) efficiency_.push_back(is_efficient(p_, v));
    }
    return efficiency_[i];
  }

  // Efficiency decided by the domination LP matches the existence of a
  // scalarization certificate; certificates and dominators verify.
  void scalarization() {
    const std::string name = "scalarization_equivalence";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const QVector& x = vertices_[i];
      const EfficiencyCertificate& e = efficiency_of(i);
      const auto direct = proper_efficiency_certificate(p_, x);
      auto payload = [&] { return Json{{"point", to_json(x)}}; };
      if (e.efficient() != direct.has_value()) {
        rec_.fail(name, "domination LP and certificate search disagree",
                  payload());
        continue;
      }
      if (!e.efficient()) {
        const QVector& y = *e.dominator;
        const QVector gap = p_.L() * x - p_.L() * y;
        rec_.expect(name,
                    primal_feasible_point(p_, y) && !gap.is_zero() &&
                        contains(p_.K(), gap),
                    "dominator does not verify", [&] {
                      Json j = payload();
                      j["dominator"] = to_json(y);
                      return j;
                    });
        continue;
      }
      bool ok = certificate_valid(p_, x, e) && certificate_valid(p_, x, *direct);
      // Both weight vectors make x optimal among all vertices.
      for (const auto* lam : {&*e.lambda, &*direct->lambda}) {
        const Rational best = dot(*lam, p_.L() * x);
        for (const auto& y : vertices_) {
          if (dot(*lam, p_.L() * y) < best) ok = false;
        }
      }
      rec_.expect(name, ok, "scalarization certificate does not verify", [&] {
        Json j = payload();
        j["lambda"] = to_json(*direct->lambda);
        j["eta"] = to_json(*direct->eta);
        return j;
      });
      efficient_.emplace_back(x, *direct);
    }
  }

  // is_efficient against enumeration of the (x, mu) polyhedron of the
  // domination LP and of its normalized recession cone.
  void efficiency_oracle() {
    const std::size_t n = p_.n(), m = p_.m(), k = p_.k();
    const std::size_t r = p_.K().num_generators();
    const QMatrix& G = p_.K().generator_matrix();
    QMatrix aug(m + k, n + r);
    QMatrix rec(m + k + 1, n + r);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = rec(i, j) = p_.A()(i, j);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(m + i, j) = rec(m + i, j) = p_.L()(i, j);
      }
      for (std::size_t j = 0; j < r; ++j) aug(m + i, n + j) = rec(m + i, n + j) = G(i, j);
    }
    for (std::size_t j = 0; j < r; ++j) rec(m + k, n + j) = 1;
    QVector rec_rhs(m + k + 1);
    rec_rhs[m + k] = 1;
    const bool ray = !enumerate_basic_solutions(rec, rec_rhs).empty();

    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const QVector& x = vertices_[i];
      bool oracle = !ray;
      for (const auto& s : enumerate_basic_solutions(
               aug, concat(p_.b(), p_.L() * x))) {
        if (!slice(s, n, r).is_zero()) oracle = false;
      }
      rec_.expect("efficiency_oracle", oracle == efficiency_of(i).efficient(),
                  "is_efficient disagrees with enumeration", [&] {
                    return Json{{"point", to_json(x)}, {"enumeration", oracle}};
                  });
    }
  }

  // No sampled dual objective lies strictly K-above a primal objective.
  void weak_duality() {
    for (const auto& c : duals_) {
      const QVector h = objective_D(c, p_);
      for (std::size_t i = 0; i < primal_pool_.size(); ++i) {
        rec_.expect("weak_duality", cmp(p_.K(), images_[i], h) != Order::Below,
                    "dual objective strictly above a primal objective", [&] {
                      return Json{{"point", to_json(primal_pool_[i])},
                                  {"dual", dual_json(c)}};
                    });
      }
    }
  }

  void strong_duality() {
    const std::string name = "strong_duality";
    for (const auto& [x, cert] : efficient_) {
      const DualCandidateD c = construct_dual_solution(p_, x, cert);
      const QVector h = objective_D(c, p_);
      const QMatrix M = reduced_objective(p_, c.U);
      bool ok = check_feasible_D(p_, c) && h == p_.L() * x &&
                dot(x, transpose_times(M, c.lambda)).is_zero();
      for (const auto& s : duals_) {
        if (cmp(p_.K(), h, objective_D(s, p_)) == Order::Below) ok = false;
      }
      rec_.expect(name, ok, "constructed dual point fails", [&] {
        return Json{{"point", to_json(x)}, {"dual", dual_json(c)}};
      });
      constructed_.push_back(c);
    }
  }

  void converse_duality() {
    for (const auto& c : constructed_) {
      const QVector h = objective_D(c, p_);
      const auto x = recover_primal(p_, h);
      bool ok = x && primal_feasible_point(p_, *x) && p_.L() * *x == h &&
                is_efficient(p_, *x).efficient();
      rec_.expect("converse_duality", ok, "no efficient preimage recovered",
                  [&] {
                    Json j{{"value", to_json(h)}, {"dual", dual_json(c)}};
                    if (x) j["recovered"] = to_json(*x);
                    return j;
                  });
    }
  }

  void lagrange_map() {
    auto check = [&](const DualCandidateD& c) {
      const DualCandidateL l = map_D_to_DL(p_, c);
      rec_.expect("lagrange_dual_map",
                  check_feasible_L(p_, l) && l.v == objective_D(c, p_),
                  "mapped point infeasible or objective changed",
                  [&] { return Json{{"dual", dual_json(c)}}; });
    };
    for (const auto& c : constructed_) check(c);
    for (const auto& c : duals_) check(c);
  }

  void lambda_existence() {
    for (std::size_t i = 0; i < opts_.lambda_pairs; ++i) {
      QMatrix U = (i % 2 == 1 && !duals_.empty())
                      ? duals_[static_cast<std::size_t>(rng_.uniform(
                                   0, static_cast<long>(duals_.size()) - 1))]
                            .U
                      : random_matrix(rng_, p_.k(), p_.m());
      const bool feasible = check_feasible_U(p_, DualCandidateU{U, UFlavor::H});
      const auto lam = lemma2_lambda_exists(p_, U);
      bool ok = feasible == lam.has_value();
      if (lam) {
        const QMatrix M = reduced_objective(p_, U);
        ok = ok && in_quasi_interior(p_.K(), *lam) &&
             transpose_times(M, *lam).is_nonnegative();
      }
      rec_.expect("lambda_existence", ok, "equivalence violated", [&] {
        return Json{{"U", to_json(U)}, {"no_domination", feasible},
                    {"lambda_found", lam.has_value()}};
      });
    }
  }

  void check_witness(const MembershipVerdict& v, const QVector& d) {
    bool ok = v.witness.has_value();
    switch (v.set) {
      case ImageSet::hB:
        ok = ok && v.candidate_D && witness_system_holds(p_, *v.witness, d, true) &&
             check_feasible_D(p_, *v.candidate_D) &&
             objective_D(*v.candidate_D, p_) == d;
        break;
      case ImageSet::hL:
        ok = ok && v.candidate_L && witness_system_holds(p_, *v.witness, d, false) &&
             check_feasible_L(p_, *v.candidate_L) && v.candidate_L->v == d;
        break;
      case ImageSet::hJ:
        ok = ok && v.candidate_J && check_feasible_J(p_, *v.candidate_J) &&
             objective_J(*v.candidate_J, p_) == d;
        break;
    }
    rec_.expect("membership_witness", ok, "witness does not reproduce value",
                [&] { return Json{{"value", to_json(d)}}; });
  }

  std::vector<QVector> membership_values() {
    std::vector<QVector> values;
    const std::size_t total = opts_.membership_samples;
    const std::size_t quarter = (total + 3) / 4;
    for (std::size_t i = 0; i < duals_.size() && values.size() < quarter; ++i) {
      values.push_back(objective_D(duals_[i], p_));
    }
    for (std::size_t i = 0; i < images_.size() && values.size() < 2 * quarter; ++i) {
      values.push_back(images_[i]);
    }
    const std::size_t seeded = values.size();
    for (std::size_t i = 0; i < seeded && values.size() < 3 * quarter; ++i) {
      values.push_back(values[i] + random_vector(rng_, p_.k()));
    }
    while (values.size() < total) values.push_back(random_vector(rng_, p_.k()));
    return values;
  }

  void image_inclusion() {
    for (const auto& d : membership_values()) {
      const MembershipVerdict j = membership_hJ(p_, d);
      const MembershipVerdict b = membership_hB(p_, d);
      const MembershipVerdict l = membership_hL(p_, d);
      for (const auto* v : {&j, &b, &l}) {
        if (v->member) check_witness(*v, d);
      }
      rec_.expect("image_inclusion",
                  (!j.member || b.member) && (!b.member || l.member),
                  "membership chain broken", [&] {
                    return Json{{"value", to_json(d)}, {"hJ", j.member},
                                {"hB", b.member}, {"hL", l.member}};
                  });
    }
  }

  // Values U b + (L - U A) x minimal in the image cone map to points of B
  // with the same objective. Values outside h^J found on the way witness
  // a strict gap between h^J and h^H.
  void value_map() {
    std::vector<QMatrix> us;
    for (const auto& c : duals_) {
      if (us.size() == 5) break;
      if (std::find(us.begin(), us.end(), c.U) == us.end()) us.push_back(c.U);
    }
    std::size_t tested = 0;
    Json gap;
    for (const auto& U : us) {
      if (!check_feasible_U(p_, DualCandidateU{U, UFlavor::H})) {
        rec_.fail("value_map", "U from a feasible dual point is not H-feasible",
                  Json{{"U", to_json(U)}});
        continue;
      }
      const QMatrix M = reduced_objective(p_, U);
      std::vector<QVector> xs{QVector(p_.n())};
      for (std::size_t j = 0; j < p_.n(); ++j) xs.push_back(QVector::unit(p_.n(), j));
      for (const auto& x : xs) {
        const QVector value = U * p_.b() + M * x;
        if (!h_H_value_membership(p_, U, value)) continue;
        const DualCandidateD c = map_DH_to_D(p_, U, x);
        rec_.expect("value_map",
                    check_feasible_D(p_, c) && objective_D(c, p_) == value &&
                        membership_hB(p_, value).member,
                    "mapped point fails", [&] {
                      return Json{{"U", to_json(U)}, {"point", to_json(x)}};
                    });
        ++tested;
        if (gap.is_null() && !membership_hJ(p_, value).member) {
          gap = Json{{"U", to_json(U)}, {"value", to_json(value)}};
        }
      }
    }
    rec_.ok("strict_gap_search", tested);
    rec_.info("strict_gap_search")["found"] = !gap.is_null();
    if (!gap.is_null()) rec_.info("strict_gap_search")["gap"] = gap;
  }

  void quadrant() {
    const auto farkas = primal_farkas(p_);
    dual_nonempty_ = dual_B_nonempty(p_);
    bool ok = farkas.has_value() == vertices_.empty();
    if (farkas) {
      ok = ok && (-transpose_times(p_.A(), *farkas)).is_nonnegative() &&
           dot(p_.b(), *farkas) > 0;
    }
    rec_.expect("emptiness_quadrant", ok, "primal emptiness verdicts disagree",
                [&] { return Json{{"vertices", vertices_.size()}}; });
    Json& info = rec_.info("emptiness_quadrant");
    info["primal_empty"] = vertices_.empty();
    info["dual_empty"] = !dual_nonempty_;
  }

  void emptiness_bounded() {
    if (vertices_.empty()) {
      rec_.skip("emptiness_bounded", "primal feasible set empty");
      return;
    }
    const bool no_efficient = efficient_vertices(p_).empty();
    const bool pointed = recession_image_pointed(p_);
    const bool dual_empty = !dual_B_witness(p_).has_value();
    rec_.expect("emptiness_bounded",
                (no_efficient && !pointed) == dual_empty &&
                    no_efficient == !pointed,
                "emptiness verdicts disagree", [&] {
                  return Json{{"no_efficient_vertex", no_efficient},
                              {"recession_pointed", pointed},
                              {"dual_empty", dual_empty}};
                });
  }

  void emptiness_improvement() {
    if (!vertices_.empty() || !dual_nonempty_) {
      rec_.skip("emptiness_improvement",
                "needs an empty primal and a nonempty dual feasible set");
      return;
    }
    for (const auto& c : duals_) {
      const DualCandidateD better = improve_dual_point(p_, c);
      rec_.expect("emptiness_improvement",
                  check_feasible_D(p_, better) &&
                      cmp(p_.K(), objective_D(c, p_), objective_D(better, p_)) ==
                          Order::Below,
                  "improvement step failed",
                  [&] { return Json{{"dual", dual_json(c)}}; });
    }
  }

  // On a bounded feasible set, minimal vertex images that belong to
  // efficient vertices lie in h(B) and are not strictly below any sampled
  // dual objective.
  void minimal_images() {
    if (vertices_.empty() || !feasible_set_bounded(p_)) {
      rec_.skip("minimal_images", "needs a nonempty bounded feasible set");
      return;
    }
    std::vector<QVector> imgs;
    for (const auto& v : vertices_) imgs.push_back(p_.L() * v);
    const auto mins = min_elements_finite(p_.K(), imgs);
    std::size_t unrealized = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (std::find(mins.begin(), mins.end(), imgs[i]) == mins.end()) continue;
      if (!efficiency_of(i).efficient()) {
        ++unrealized;
        continue;
      }
      bool ok = membership_hB(p_, imgs[i]).member;
      for (const auto& c : duals_) {
        if (cmp(p_.K(), imgs[i], objective_D(c, p_)) == Order::Below) ok = false;
      }
      rec_.expect("minimal_images", ok, "minimal image not a dual value",
                  [&] { return Json{{"point", to_json(vertices_[i])}}; });
    }
    rec_.info("minimal_images")["unrealized"] = unrealized;
  }

  const VlpProblem& p_;
  HarnessOptions opts_;
  Rng rng_;
  Recorder rec_;
  std::vector<QVector> vertices_;
  std::vector<EfficiencyCertificate> efficiency_;
  std::vector<QVector> primal_pool_;
  std::vector<QVector> images_;
  std::vector<DualCandidateD> duals_;
  std::vector<std::pair<QVector, EfficiencyCertificate>> efficient_;
  std::vector<DualCandidateD> constructed_;
  bool dual_nonempty_ = false;
};

// ---------------------------------------------------------------------------
// Fixtures.

QVector vec(std::initializer_list<long> xs) {
  QVector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

struct Expectation {
  std::string name;
  std::function<bool(Json&)> check;  // fills details on failure
};

struct Fixture {
  std::string name;
  VlpProblem problem;
  std::vector<Expectation> expectations;
};

// n = 1, k = 2, m = 2: L = 0, A = (1, 1)^T, b = (-1, -1). The feasible set
// is empty while B is not.
Fixture fixture_r5() {
  VlpProblem p(QMatrix(2, 1), QMatrix{{1}, {1}}, vec({-1, -1}),
               OrderingCone::orthant(2));
  std::vector<Expectation> e;
  e.push_back({"lower_candidate_feasible", [p](Json&) {
                 return check_feasible_L(
                     p, DualCandidateL{vec({1, 1}), vec({0, 0}), vec({-1, -1})});
               }});
  e.push_back({"hL_contains_(-1,-1)", [p](Json&) {
                 return membership_hL(p, vec({-1, -1})).member;
               }});
  e.push_back({"hB_excludes_(-1,-1)", [p](Json&) {
                 return !membership_hB(p, vec({-1, -1})).member;
               }});
  e.push_back({"no_vertices", [p](Json& j) {
                 const auto v = enumerate_vertices(p);
                 j["vertices"] = v.size();
                 return v.empty();
               }});
  e.push_back({"dual_nonempty", [p](Json&) { return dual_B_nonempty(p); }});
  e.push_back({"improvement_from_(1,-1)", [p](Json& j) {
                 const DualCandidateD c{vec({1, 1}), QMatrix(2, 2), vec({1, -1})};
                 const DualCandidateD better = improve_dual_point(p, c);
                 j["improved"] = to_json(better);
                 // Farkas vector z = (-1, -1) with lt = (1, 0).
                 return better.U == QMatrix{{-1, -1}, {0, 0}} &&
                        objective_D(better, p) == vec({3, -1});
               }});
  return {"FIX-R5", std::move(p), std::move(e)};
}

// b = 0: the image set h^J collapses to {0} while h(B) is a line.
Fixture fixture_zb() {
  VlpProblem p(QMatrix{{-1, 1}, {1, -1}}, QMatrix{{0, 0}}, vec({0}),
               OrderingCone::orthant(2));
  std::vector<Expectation> e;
  e.push_back({"hJ_excludes_(1,-1)", [p](Json&) {
                 return !membership_hJ(p, vec({1, -1})).member;
               }});
  e.push_back({"hB_contains_(1,-1)", [p](Json&) {
                 return membership_hB(p, vec({1, -1})).member;
               }});
  e.push_back({"hJ_contains_origin", [p](Json&) {
                 return membership_hJ(p, vec({0, 0})).member;
               }});
  e.push_back({"efficient_origin", [p](Json& j) {
                 const auto ev = efficient_vertices(p);
                 j["efficient_vertices"] = ev.size();
                 return ev.size() == 1 && ev[0].vertex == vec({0, 0});
               }});
  e.push_back({"strong_duality_at_origin", [p](Json& j) {
                 const QVector x = vec({0, 0});
                 const auto cert = proper_efficiency_certificate(p, x);
                 if (!cert) return false;
                 const DualCandidateD c = construct_dual_solution(p, x, *cert);
                 j["constructed"] = to_json(c);
                 return c == DualCandidateD{vec({1, 1}), QMatrix(2, 1), vec({0, 0})};
               }});
  return {"FIX-ZB", std::move(p), std::move(e)};
}

// L = I, A = [1 1], b = 1: every point of the segment is efficient.
Fixture fixture_seg() {
  VlpProblem p(QMatrix::identity(2), QMatrix{{1, 1}}, vec({1}),
               OrderingCone::orthant(2));
  std::vector<Expectation> e;
  e.push_back({"two_efficient_vertices", [p](Json& j) {
                 const auto ev = efficient_vertices(p);
                 j["efficient_vertices"] = ev.size();
                 return ev.size() == 2 && ev[0].vertex == vec({0, 1}) &&
                        ev[1].vertex == vec({1, 0});
               }});
  for (const auto& [x, pinned] :
       {std::pair{vec({0, 1}),
                  DualCandidateD{vec({1, 1}), QMatrix{{1}, {0}}, vec({-1, 1})}},
        std::pair{vec({1, 0}),
                  DualCandidateD{vec({1, 1}), QMatrix{{1}, {0}}, vec({0, 0})}}}) {
    e.push_back({"round_trip_" + x.str(), [p, x, pinned](Json& j) {
                   const auto cert = proper_efficiency_certificate(p, x);
                   if (!cert) return false;
                   const DualCandidateD c = construct_dual_solution(p, x, *cert);
                   j["constructed"] = to_json(c);
                   const auto back = recover_primal(p, objective_D(c, p));
                   return c == pinned && objective_D(c, p) == p.L() * x &&
                          back == x && is_efficient(p, *back).efficient();
                 }});
  }
  return {"FIX-SEG", std::move(p), std::move(e)};
}

// L = -I, A = [0 0], b = 1: both the primal and the dual feasible set are
// empty.
Fixture fixture_ee() {
  VlpProblem p(-QMatrix::identity(2), QMatrix{{0, 0}}, vec({1}),
               OrderingCone::orthant(2));
  std::vector<Expectation> e;
  e.push_back({"no_vertices", [p](Json& j) {
                 const auto v = enumerate_vertices(p);
                 j["vertices"] = v.size();
                 return v.empty();
               }});
  e.push_back({"primal_farkas_(1)", [p](Json& j) {
                 const auto z = primal_farkas(p);
                 if (z) j["farkas"] = to_json(*z);
                 return z == vec({1});
               }});
  e.push_back({"dual_empty", [p](Json&) { return !dual_B_nonempty(p); }});
  e.push_back({"hL_excludes_origin", [p](Json&) {
                 return !membership_hL(p, vec({0, 0})).member;
               }});
  return {"FIX-EE", std::move(p), std::move(e)};
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{fixture_r5(), fixture_zb(),
                                        fixture_seg(), fixture_ee()};
  return all;
}

const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw PreconditionError("unknown fixture \"" + name + "\"");
}

std::string pad(std::size_t i, std::size_t width) {
  std::string s = std::to_string(i);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

}  // namespace

VerificationReport run_instance_suite(const VlpProblem& p,
                                      const std::string& instance,
                                      std::uint64_t seed,
                                      const HarnessOptions& opts) {
  VerificationReport r = InstanceSuite(p, instance, seed, opts).run();
  r.normalize();
  return r;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : fixtures()) names.push_back(f.name);
  return names;
}

const VlpProblem& fixture_problem(const std::string& name) {
  return find_fixture(name).problem;
}

VerificationReport run_fixture(const std::string& name,
                               const HarnessOptions& opts) {
  const Fixture& f = find_fixture(name);
  Recorder rec(f.problem, f.name, opts.timing);
  std::vector<std::string> names;
  for (const auto& e : f.expectations) {
    const std::string check = "expect:" + e.name;
    names.push_back(check);
    rec.run(check, [&] {
      Json details = Json::object();
      const bool ok = e.check(details);
      if (ok) {
        rec.ok(check);
      } else {
        rec.fail(check, "pinned expectation not met", details);
      }
    });
  }
  VerificationReport r = rec.finish(names);
  r.append(run_instance_suite(f.problem, f.name, 0, opts));
  r.normalize();
  return r;
}

VerificationReport run_random_campaign(std::uint64_t seed, std::size_t count,
                                       const HarnessOptions& opts) {
  if (count == 0) throw PreconditionError("campaign count must be at least 1");
  Rng gen(seed);
  VerificationReport r;
  const std::size_t width = std::max<std::size_t>(4, std::to_string(count).size());
  for (std::size_t i = 0; i < count; ++i) {
    const VlpProblem p = random_instance(gen);
    const std::string id = "random-" + std::to_string(seed) + "-" + pad(i, width);
    const std::uint64_t instance_seed =
        seed * 0x9E3779B97F4A7C15ULL + (i + 1) * 0xBF58476D1CE4E5B9ULL;
    r.append(run_instance_suite(p, id, instance_seed, opts));
  }
  r.normalize();
  return r;
}

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json a = Json::array();
    for (const auto& rec : r.records) {
      Json j;
      j["check"] = rec.check;
      j["instance"] = rec.instance;
      j["status"] = std::string(status_name(rec.status));
      j["witness"] = rec.witness;
      if (rec.elapsed_ms == 0) {
        j["elapsed_ms"] = 0;
      } else {
        j["elapsed_ms"] = rec.elapsed_ms;
      }
      a.push_back(std::move(j));
    }
    return a.dump();
  }
  std::string out;
  for (const auto& rec : r.records) {
    std::string status(status_name(rec.status));
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    out += status + " " + rec.instance + " " + rec.check;
    if (rec.witness.is_object() && rec.witness.contains("executions")) {
      out += " executions=" + rec.witness["executions"].dump();
    }
    if (rec.status == CheckStatus::Fail || rec.status == CheckStatus::Skipped) {
      out += " " + rec.witness.dump();
    }
    if (rec.elapsed_ms != 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.3fms", rec.elapsed_ms);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

VerificationReport parse_report(std::string_view text) {
  Json a;
  try {
    a = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("report", e.what());
  }
  if (!a.is_array()) throw ParseError("report", "expected an array");
  VerificationReport r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Json& j = a[i];
    const std::string where = "report[" + std::to_string(i) + "]";
    try {
      CheckRecord rec;
      rec.check = j.at("check").get<std::string>();
      rec.instance = j.at("instance").get<std::string>();
      const std::string status = j.at("status").get<std::string>();
      if (status == "pass") {
        rec.status = CheckStatus::Pass;
      } else if (status == "fail") {
        rec.status = CheckStatus::Fail;
      } else if (status == "skipped") {
        rec.status = CheckStatus::Skipped;
      } else {
        throw ParseError(where + ".status", "unknown status \"" + status + "\"");
      }
      rec.witness = j.at("witness");
      rec.elapsed_ms = j.at("elapsed_ms").get<double>();
      if (rec.witness.is_object() && rec.witness.contains("executions")) {
        r.executions[rec.check] += rec.witness["executions"].get<std::size_t>();
      }
      r.records.push_back(std::move(rec));
    } catch (const Json::exception& e) {
      throw ParseError(where, e.what());
    }
  }
  return r;
}

}  // namespace vlp
