#pragma once

// Nearring structure on the tower group: a * b = f_b(a), where f_b is the
// recursive embedding sending the identity to b.

#include <cstdint>
#include <optional>

#include "nrt/element.hpp"

namespace nrt {

/// f_zeta(x). zeta must be nonzero.
Element f_eval(const Element& zeta, const Element& x);

/// a * b; zero whenever b is zero.
Element mul(const Element& a, const Element& b);

/// Basis offset of a nonzero variant-B element: the largest basis index
/// occurring anywhere in its canonical form, subscripts included.
std::uint64_t mu(const Element& gamma);

enum class PreimageStatus {
  Found,
  NotInImage,
  /// Structural descent produced a candidate whose image did not match.
  AmbiguousParse,
};

struct Preimage {
  PreimageStatus status = PreimageStatus::NotInImage;
  std::optional<Element> value;
};

/// Some y with f_zeta(y) == x, verified before it is returned.
Preimage preimage_search(const Element& zeta, const Element& x);
std::optional<Element> preimage(const Element& zeta, const Element& x);

/// Membership in the subgroup generated hereditarily by pi_i (i > 0) and
/// the stable letters over its own members. Variant B only.
bool in_W(const Element& x);

/// Membership in the image of f_zeta.
bool in_H(const Element& zeta, const Element& x);

}  // namespace nrt
