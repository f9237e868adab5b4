#pragma once

#include <cstdint>
#include <cstddef>

#include "nrt/element.hpp"

namespace nrt {

/// Parameters for seeded element generation. Identical configs give
/// identical element streams.
struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t count = 100;
  int max_level = 3;
  int max_syllables = 4;
  std::int64_t int_min = -6;
  std::int64_t int_max = 6;
  std::uint32_t basis_max = 5;
  std::uint32_t omega_max = 3;
};

/// Canonical element of level <= max_level, a pure function of
/// (variant, config, position). May be zero after accidental cancellation.
Element sample_element(Variant v, const SampleConfig& config,
                       std::uint64_t position);

/// Variant-B element built only from pi_i (i > 0) and letters over such
/// elements.
Element sample_w_element(const SampleConfig& config, std::uint64_t position);

}  // namespace nrt
