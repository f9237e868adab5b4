#pragma once

// Internal node layout and raw constructors. Callers are responsible for
// passing canonical data; nothing here normalizes.

#include <cstdint>
#include <vector>

#include "nrt/element.hpp"

namespace nrt {

struct Node {
  Element::Kind kind = Element::Kind::Zero;
  int level = -1;
  std::size_t hash = 0;
  std::int64_t integer = 0;
  std::vector<std::int32_t> word;
  std::vector<Element> coeffs;
  std::vector<SignedLetter> letters;
  std::int64_t omega = 0;
};

struct NodeAccess {
  static const Node* get(const Element& e) { return e.node_.get(); }
  static Element wrap(Variant v, std::shared_ptr<const Node> n) {
    return Element(v, std::move(n));
  }
};

inline std::size_t hash_mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

/// n must be nonzero.
Element raw_integer(Variant v, std::int64_t n);
/// word must be nonempty and freely reduced.
Element raw_word(Variant v, std::vector<std::int32_t> word);
/// coeffs.size() == letters.size() + 1; either letters nonempty or omega != 0.
Element raw_sequence(Variant v, int level, std::vector<Element> coeffs,
                     std::vector<SignedLetter> letters, std::int64_t omega);

}  // namespace nrt
