// Runs every acceptance criterion at its stated size and prints one line each.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nrt/expr.hpp"
#include "nrt/nearring.hpp"
#include "nrt/sample.hpp"
#include "nrt/suites.hpp"
#include "nrt/word_core.hpp"

using namespace nrt;

namespace {

constexpr std::uint64_t kSeed = 20240601;
const Variant kVariants[] = {Variant::A, Variant::B, Variant::C};

SampleConfig config(std::size_t count) {
  SampleConfig cfg;
  cfg.seed = kSeed;
  cfg.count = count;
  cfg.max_level = 3;
  return cfg;
}

// Collects per-report detail; the criterion passes only if every report does.
class Outcome {
 public:
  void add(const Report& r) {
    ok_ = ok_ && r.passed;
    note(r.suite + "/" + to_string(r.variant) + " " + std::to_string(r.cases_run) +
         " cases " + std::to_string(r.failures.size()) + " failures");
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      note("first failure " + f.check + ": " + f.got);
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      note("violated: " + what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return ok_; }
  std::string detail() const {
    std::string s;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> notes_;
};

Outcome axioms() {
  Outcome o;
  for (Variant v : kVariants) o.add(check_nearring_axioms(v, config(500)));
  return o;
}

Outcome britton() {
  Outcome o;
  for (Variant v : kVariants) o.add(check_britton_engine(v, config(1000)));
  return o;
}

Outcome power() {
  Outcome o;
  for (Variant v : kVariants) {
    Report r = check_power_oracle(v, config(500));
    o.add(r);
    o.require(!r.witnesses.empty() && r.witnesses.front() == "constructed positives: 100",
              "100 constructed positives");
  }
  return o;
}

Outcome conjugacy() {
  Outcome o;
  for (Variant v : kVariants) {
    Report r = check_conjugacy(v, config(100));
    o.add(r);
    o.require(r.cases_run >= 100, "100 sampled pairs");
  }
  return o;
}

Outcome nonequiprime_c() {
  Outcome o;
  Report r = witness_nonequiprime_C(config(200), 2, 3);
  o.add(r);
  o.require(r.cases_run >= 3 * 200, "200 tau, 200 zeta and 200 lambda cases");
  return o;
}

Outcome nonequiprime_b() {
  Outcome o;
  Report r = witness_nonequiprime_B(config(200));
  o.add(r);
  o.require(r.cases_run >= 2 * 200, "200 x and 200 mu-additivity cases");
  return o;
}

Outcome equiprime_a() {
  Outcome o;
  Report r = check_equiprime_instances_A(config(200));
  o.add(r);
  o.require(r.cases_run >= 200, "200 sampled triples");
  return o;
}

Outcome invariant() {
  Outcome o;
  o.add(check_invariant_subgroups(Variant::B, config(200)));
  o.add(check_invariant_subgroups(Variant::C, config(200)));
  return o;
}

Outcome left_distrib() {
  Outcome o;
  for (Variant v : kVariants) o.add(find_left_distrib_counterexample(v, config(1000)));
  return o;
}

Outcome determinism() {
  Outcome o;
  for (Variant v : kVariants) {
    for (const auto& name : {"axioms", "britton", "left-distrib"}) {
      SampleConfig cfg = config(100);
      const std::string first = write_report(run_suite(name, v, cfg));
      const std::string second = write_report(run_suite(name, v, cfg));
      o.require(first == second, std::string(name) + "/" + to_string(v) + " byte-identical");
    }
    SampleConfig cfg = config(0);
    std::size_t mismatches = 0;
    for (std::uint64_t pos = 0; pos < 500; ++pos) {
      Element e = sample_element(v, cfg, pos);
      if (!identical(parse_element(render(e), v), e)) ++mismatches;
    }
    o.require(mismatches == 0, std::string("round trip ") + to_string(v));
    o.note(std::string("round trip ") + to_string(v) + " 500 elements, " +
           std::to_string(mismatches) + " mismatches");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "nearring axioms, 500 triples per variant", axioms},
      {2, "reduction engine fuzz, 1000 cases per variant", britton},
      {3, "power_of against brute force, 500 pairs per variant", power},
      {4, "conjugacy, 100 pairs per variant", conjugacy},
      {5, "non-equiprime witness C (2,3), om shift, same layer", nonequiprime_c},
      {6, "non-equiprime witness B, mu grid and additivity", nonequiprime_b},
      {7, "equiprime instances A, 200 triples", equiprime_a},
      {8, "invariant subgroups W* and H*, preimage round trip", invariant},
      {9, "left distributivity counterexample within 1000", left_distrib},
      {10, "deterministic reports and text round trip", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " " << (o.ok() ? "PASS" : "FAIL") << " " << c.name << " ("
         << secs << "s) " << o.detail();
    std::cout << line.str() << std::endl;
    if (!o.ok()) ++failed;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
