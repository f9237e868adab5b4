#pragma once

// Group arithmetic in the tower. Everything is written additively even
// though the group is nonabelian.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nrt/element.hpp"
#include "nrt/error.hpp"

namespace nrt {

/// pi_index raised to `exponent`, one syllable of a free-base word.
struct BasisPower {
  std::uint32_t index = 0;
  std::int64_t exponent = 1;
};

Element zero(Variant v);
Element make_int(Variant v, std::int64_t n);
Element make_pi(Variant v, std::span<const BasisPower> word);
Element make_pi(Variant v, std::uint32_t index, std::int64_t exponent = 1);
/// m * om_j. Variant C only.
Element make_omega(Variant v, std::uint32_t j, std::int64_t m = 1);
/// sign * t[alpha,beta].
Element make_stable(const Element& alpha, const Element& beta, int sign = 1);

/// The nearring identity: 1 under A and C, pi_0 under B.
Element unit(Variant v);

Element add(const Element& a, const Element& b);
Element sum(std::span<const Element> items);
Element neg(const Element& a);
Element sub(const Element& a, const Element& b);
/// -c + a + c
Element conjugate(const Element& a, const Element& c);
/// k * a as a group multiple.
Element scalar(std::int64_t k, const Element& a);
/// k * a by |k|-fold addition; the reference route for `scalar`.
Element repeated_add(std::int64_t k, const Element& a);

int level(const Element& a);
bool equal(const Element& a, const Element& b);
std::size_t size(const Element& a);
/// Number of stable letters at the top level of a sequence, 0 otherwise.
std::size_t letter_count(const Element& a);

/// Rebuilds a from its pieces through the normalizer.
Element renormalize(const Element& a);

/// a = -conj + core + conj with core cyclically reduced. For level-0 input
/// in A and C the conjugator is zero.
CyclicForm cyclic_reduce(const Element& a);

/// k with g = k * alpha, if it exists.
std::optional<std::int64_t> power_of(const Element& g, const Element& alpha);
/// Same, with alpha given by a precomputed cyclic form.
std::optional<std::int64_t> power_of(const Element& g, const CyclicForm& alpha);
Element scalar(std::int64_t k, const CyclicForm& a);

/// t[alpha,beta], which conjugates alpha to beta.
Element conjugator(const Element& alpha, const Element& beta);

void require_same_variant(const Element& a, const Element& b);

}  // namespace nrt
