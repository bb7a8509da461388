// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fplab/bounds.hpp"
#include "fplab/constructions.hpp"
#include "fplab/focal.hpp"
#include "fplab/matching.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace fplab;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check chk;
  const auto start = Clock::now();
  try {
    body(chk);
  } catch (const std::exception& e) {
    chk.require(false, std::string("exception: ") + e.what());
  }
  const double took = seconds_since(start);
  chk.require(took <= limit_s, "took " + std::to_string(took) + " s, limit " + std::to_string(limit_s) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s / %.0f s", took, limit_s);
  std::cout << (chk.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << buf << ")";
  if (!chk.ok) std::cout << ": " << chk.detail.str();
  std::cout << "\n" << chk.notes.str();
  return chk.ok;
}

// Per-instance timing inside criterion 1.
void matching_instance(Check& chk, int n, int t, int lambda, int k1, int k2, std::uint64_t expected) {
  const auto start = Clock::now();
  const auto cert = matching_number_exact({n, t, DisjointnessParams(k1, k2, lambda)});
  const double took = seconds_since(start);
  const std::string tag = "m(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(lambda) + ";" +
                          std::to_string(k1) + "," + std::to_string(k2) + ")";
  chk.require(cert.status == CertificateStatus::exact, tag + " not exact");
  chk.require(cert.value == expected, tag + " = " + std::to_string(cert.value));
  chk.require(cert.extremal_family.size() == expected, tag + " family size");
  chk.require(!find_violating_collection(cert.extremal_family, DisjointnessParams(k1, k2, lambda)),
              tag + " family has a violation");
  chk.require(took <= 60.0, tag + " over 60 s");
}

void property(Check& chk, const std::string& name, const props::Outcome& o, int min_cases = 200) {
  chk.require(o.failures == 0, name + ": " + std::to_string(o.failures) + " failures, first " + o.first_failure);
  chk.require(o.cases >= min_cases, name + ": only " + std::to_string(o.cases) + " cases");
  chk.notes << "       " << name << ": " << o.cases << " cases\n";
}

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "exact generalized matching numbers", 240.0, [](Check& chk) {
    matching_instance(chk, 4, 2, 2, 2, 2, 3);
    matching_instance(chk, 6, 2, 2, 2, 3, 5);
    matching_instance(chk, 6, 3, 2, 2, 2, 10);
    matching_instance(chk, 6, 4, 2, 3, 2, 5);
  });

  all &= report(2, "closed-form sandwich pins the solver value", 1.0, [](Check& chk) {
    struct Row {
      int n, t, lambda, s1, s2;
      std::uint64_t value;
    };
    for (const Row& r : {Row{6, 2, 2, 1, 2, 5}, Row{6, 3, 2, 1, 1, 10}}) {
      const auto rep = matching_closed_bounds(r.n, r.t, r.lambda, r.s1, r.s2);
      const auto* up = rep.find("cyclic-double-counting");
      const auto lo = rep.best_lower();
      const auto cert = matching_number_exact({r.n, r.t, DisjointnessParams(r.s1 + 1, r.s2 + 1, r.lambda)});
      const std::string tag = "(" + std::to_string(r.n) + "," + std::to_string(r.t) + ")";
      chk.require(up && up->applicable() && up->integral() == r.value, tag + " upper");
      chk.require(lo && *lo == r.value, tag + " lower");
      chk.require(cert.status == CertificateStatus::exact && cert.value == r.value, tag + " solver");
    }
  });

  all &= report(3, "Fano plane is an extremal (4,2)-frameproof family", 10.0, [](Check& chk) {
    const Packing pk = greedy_packing(7, 3, 2);
    chk.require(pk.family.size() == 7 && pk.is_design, "greedy packing is not the Fano plane");
    const auto vf = packing_to_frameproof(pk, FrameproofParams(4, 2));
    chk.require(vf.validation.checked && vf.validation.frameproof, "verifier found a witness");
    chk.require(!oracle::focal(oracle::masks(pk.family), 4, 2, false), "naive enumeration found a witness");
    const auto m = matching_number_exact({3, 2, DisjointnessParams(3, 3, 2)}).value;
    const auto rep = hypergraph_bounds(7, 3, 4, 2, m, pk.family.size(), pk.is_design);
    chk.require(m == 0, "m(3,2,2;3,3) != 0");
    chk.require(rep.pinned_value() == 7, "bounds do not pin 7");
    const auto* ex = rep.find("design-exact");
    chk.require(ex && ex->applicable() && ex->integral() == 7, "design exactness not applicable");
  });

  all &= report(4, "Reed-Solomon code of length 5 over GF(5) is an extremal (2,1)-frameproof code", 120.0,
                [](Check& chk) {
                  const Code rs = rs_code(5, 5, 3);
                  chk.require(rs.size() == 125, "word count");
                  chk.require(minimum_distance(rs) == 3, "minimum distance");
                  const auto dc = certify_frameproof_by_distance(rs, FrameproofParams(2, 1));
                  chk.require(dc.certified, "distance certificate");
                  chk.require(!find_focal_code(rs, FrameproofParams(2, 1)), "verifier found a witness");
                  chk.require(!oracle::focal_code(rs, 2, 1, false), "naive enumeration found a witness");
                  const auto m = matching_number_exact({5, 3, DisjointnessParams(2, 2, 1)}).value;
                  const auto rep = code_bounds(5, 2, 1, 5, m);
                  chk.require(rep.pinned_value() == 125, "bounds do not pin 125");
                  const auto* ex = rep.find("code-exact");
                  chk.require(ex && ex->applicable(), "exactness entry not applicable");
                });

  all &= report(5, "short-circuit laws across c <= 6, n <= 8", 5.0, [](Check& chk) {
    int checked = 0;
    for (int c = 2; c <= 6; ++c) {
      for (int s = 1; s < c; ++s) {
        const int s0 = std::min(s, c - s);
        for (int n = 2; n <= 8; ++n) {
          for (int t = 1; t <= n; ++t) {
            for (int lambda = 1; lambda <= c + 1; ++lambda) {
              const DisjointnessParams p(s + 1, c - s + 1, lambda);
              const std::string tag = "c=" + std::to_string(c) + " s=" + std::to_string(s) + " n=" +
                                      std::to_string(n) + " t=" + std::to_string(t) + " lambda=" +
                                      std::to_string(lambda);
              if (lambda <= s0) {
                const auto cert = matching_number_exact({n, t, p});
                chk.require(cert.status == CertificateStatus::exact && cert.value == 0, tag + " not 0");
                ++checked;
              }
              if (lambda >= c + 1) {
                const auto cert = matching_number_exact({n, t, p});
                chk.require(cert.status == CertificateStatus::exact && cert.value == oracle::binom(n, t),
                            tag + " not C(n,t)");
                ++checked;
              }
            }
          }
        }
      }
    }
    chk.require(checked > 0, "empty grid");
  });

  all &= report(6, "randomized property suites", 240.0, [](Check& chk) {
    property(chk, "lambda identity", props::lambda_identity());
    property(chk, "disjointness dual form", props::disjointness_dual_form(101, 500));
    property(chk, "multiset partition", props::partition_identity(102, 300));
    property(chk, "cyclic plan", props::cyclic_plan(103, 300));
    property(chk, "star families", props::star_violation_free(104, 300));
    property(chk, "packings verifier-clean", props::packings_clean(105, 200));
    property(chk, "induced families verifier-clean", props::induced_clean(106, 200));
    property(chk, "faithful codes verifier-clean", props::faithful_clean(107, 200));
    property(chk, "census through the transversal map", props::pi_census(108, 200));
    property(chk, "frameproof implies critical-frameproof", props::monotonicity(109, 400));
    int members = 0;
    property(chk, "own-subset census law", props::own_subset_census_law(110, 200, &members));
    chk.require(members > 0, "census law never exercised");
    property(chk, "distinctified coalitions", props::distinctify_valid(111, 200));
  });

  all &= report(7, "tiny-instance oracle equivalence", 300.0, [](Check& chk) {
    int instances = 0;
    property(chk, "matching vs enumeration", props::matching_vs_enumeration(&instances), 1);
    chk.require(instances >= 100, "too few matching instances");
    property(chk, "verifier vs enumeration", props::verifier_vs_enumeration(112, 600));
  });

  return all ? 0 : 1;
}
