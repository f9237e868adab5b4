#include "nrt/sample.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "nrt/word_core.hpp"

namespace nrt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Builds elements bottom-up from generators, so every output is canonical.
// Bounded draws use plain modulo on the engine output to stay independent of
// the standard library's distribution implementations.
class Generator {
 public:
  Generator(Variant v, const SampleConfig& cfg, std::uint64_t position,
            bool w_only)
      : variant_(v),
        cfg_(cfg),
        rng_(splitmix64(cfg.seed ^ splitmix64(position + 0x5eedULL))),
        w_only_(w_only) {}

  Element element() {
    const int top = std::max(0, cfg_.max_level);
    const int level = static_cast<int>(uniform(0, top));
    for (int attempt = 0; attempt < 8; ++attempt) {
      Element e = at_level(level, std::max(1, cfg_.max_syllables));
      if (!e.is_zero()) return e;
    }
    return Element(variant_);
  }

 private:
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  bool coin(int one_in) { return uniform(1, one_in) == 1; }

  std::int64_t nonzero_int(std::int64_t lo, std::int64_t hi) {
    for (;;) {
      std::int64_t n = uniform(lo, hi);
      if (n != 0) return n;
    }
  }

  Element base() {
    if (variant_ != Variant::B) {
      return make_int(variant_, nonzero_int(cfg_.int_min, cfg_.int_max));
    }
    const std::uint32_t lowest = w_only_ ? 1 : 0;
    const std::uint32_t highest = std::max(lowest, cfg_.basis_max);
    for (;;) {
      const auto n = uniform(1, std::max(1, cfg_.max_syllables));
      std::vector<BasisPower> word;
      for (std::int64_t i = 0; i < n; ++i) {
        word.push_back({static_cast<std::uint32_t>(uniform(lowest, highest)),
                        coin(2) ? 1 : -1});
      }
      Element e = make_pi(variant_, word);
      if (!e.is_zero()) return e;
    }
  }

  // Nonzero element of level exactly `level` where cancellation allows,
  // otherwise of lower level.
  Element at_level(int level, int syllables) {
    if (level <= 0) return base();
    const int inner = std::max(1, syllables / 2);
    const int omega_level = level - 1;
    const bool omega_ok = variant_ == Variant::C &&
                          omega_level <= static_cast<int>(cfg_.omega_max);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<Element> items;
      if (omega_ok && coin(5)) {
        // central letter on top of a lower-level element
        items.push_back(at_level(static_cast<int>(uniform(0, level - 1)), inner));
      } else {
        const auto letters = uniform(1, syllables);
        for (std::int64_t i = 0; i < letters; ++i) {
          if (coin(2)) {
            items.push_back(at_level(static_cast<int>(uniform(0, level - 1)), inner));
          }
          items.push_back(letter(level, inner));
        }
        if (coin(2)) {
          items.push_back(at_level(static_cast<int>(uniform(0, level - 1)), inner));
        }
      }
      if (omega_ok && (items.size() == 1 || coin(3))) {
        items.push_back(make_omega(variant_, static_cast<std::uint32_t>(omega_level),
                                   nonzero_int(-3, 3)));
      }
      Element e = sum(items);
      if (!e.is_zero()) return e;
    }
    return base();
  }

  Element letter(int level, int syllables) {
    Element alpha = at_level(level - 1, syllables);
    Element beta = at_level(static_cast<int>(uniform(0, level - 1)), syllables);
    if (beta == alpha) beta = neg(alpha);
    if (beta == alpha) beta = add(alpha, alpha);
    if (coin(2)) std::swap(alpha, beta);
    return make_stable(alpha, beta, coin(2) ? 1 : -1);
  }

  Variant variant_;
  const SampleConfig& cfg_;
  std::mt19937_64 rng_;
  bool w_only_;
};

}  // namespace

Element sample_element(Variant v, const SampleConfig& config,
                       std::uint64_t position) {
  return Generator(v, config, position, false).element();
}

Element sample_w_element(const SampleConfig& config, std::uint64_t position) {
  return Generator(Variant::B, config, position, true).element();
}

}  // namespace nrt
