#pragma once

// Seeded verification suites. Each returns a Report; failures inside a case
// (including thrown errors) are recorded, never propagated.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/element.hpp"
#include "nrt/sample.hpp"

namespace nrt {

struct Failure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string got;
};

struct Report {
  std::string suite;
  Variant variant = Variant::A;
  SampleConfig config;
  std::size_t cases_run = 0;
  std::vector<Failure> failures;
  std::vector<std::string> witnesses;
  bool passed = false;
};

/// Right distributivity, associativity, two-sided identity and zero
/// symmetry of the product on sampled triples.
Report check_nearring_axioms(Variant v, const SampleConfig& cfg);

/// -t + alpha + t == beta for t = conjugator(alpha, beta) on sampled pairs.
Report check_conjugacy(Variant v, const SampleConfig& cfg);

/// a = b = pi_1, c = 2 pi_1: a x b == a x c for every sampled x.
Report witness_nonequiprime_B(const SampleConfig& cfg);

/// om_0 tau zeta1 == om_0 tau zeta2 for every sampled tau. zeta1 and zeta2
/// must be distinct integers outside {0, 1}.
Report witness_nonequiprime_C(const SampleConfig& cfg, std::int64_t zeta1 = 2,
                              std::int64_t zeta2 = 3);

/// x = t[1,-1] separates a x b from a x c whenever a != 0 and b != c.
Report check_equiprime_instances_A(const SampleConfig& cfg);

/// Two-sided closure of W* (variant B) or of the image of f_{om_0}
/// (variant C).
Report check_invariant_subgroups(Variant v, const SampleConfig& cfg);

/// Passes when some sampled triple violates c (a + b) == c a + c b.
Report find_left_distrib_counterexample(Variant v, const SampleConfig& cfg);

/// Normalizer fuzz: idempotence, associativity, inverses, the defining
/// relation for |k| <= 5, scalar multiples and text round trip.
Report check_britton_engine(Variant v, const SampleConfig& cfg);

/// power_of against brute-force repeated addition for k in [-6, 6].
Report check_power_oracle(Variant v, const SampleConfig& cfg);

std::vector<std::string> suite_names();

/// Dispatches by name. Throws Error(Usage) for unknown names or variants a
/// suite does not support.
Report run_suite(std::string_view name, Variant v, const SampleConfig& cfg,
                 std::int64_t zeta1 = 2, std::int64_t zeta2 = 3);

/// Stable JSON, fixed key order, newline-terminated.
std::string write_report(const Report& report);

}  // namespace nrt
