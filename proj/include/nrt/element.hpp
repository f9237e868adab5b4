#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>

namespace nrt {

/// The three towers the engine can run.
///   A: base group Z, plain HNN tower.
///   B: base group free on pi_0, pi_1, ... with pi_0 the nearring identity.
///   C: base group Z, each stage also adjoins a central letter om_i.
enum class Variant : std::uint8_t { A, B, C };

const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

class StableLetter;
struct Node;

/// One occurrence of a stable letter, sign +1 or -1.
struct SignedLetter {
  std::shared_ptr<const StableLetter> letter;
  int sign = 1;
};

/// An element of the tower group as a Britton-reduced word.
///
/// The structure is recursive. Zero; a level-0 chunk (nonzero integer, or a
/// nonempty freely reduced word over the basis); or a level-i sequence
/// c0 s1 c1 ... sk ck whose letters all have level i and whose coefficients
/// have level < i, with no pinch -t c +t (c in <alpha>) or +t c -t
/// (c in <beta>). Under variant C a level-i sequence also carries the
/// coefficient of the central letter om_{i-1}; it may then have no stable
/// letters at all.
///
/// Reduced words of one element share their level, letter sequence and om
/// coefficients but may differ in the coefficients, so operator== decides
/// group equality and identical() compares structure.
///
/// Elements are immutable and cheap to copy.
class Element {
 public:
  enum class Kind : std::uint8_t { Zero, Integer, Word, Sequence };

  explicit Element(Variant v = Variant::A) : variant_(v) {}

  Variant variant() const noexcept { return variant_; }
  Kind kind() const noexcept;
  bool is_zero() const noexcept { return node_ == nullptr; }
  /// -1 for zero, 0 for base chunks, i for level-i sequences.
  int level() const noexcept;
  /// Depends only on the group element.
  std::size_t hash() const noexcept;

  std::int64_t integer() const;
  /// Syllables of a free-base word: +(i+1) for pi_i, -(i+1) for -pi_i.
  std::span<const std::int32_t> word() const;

  std::span<const Element> coeffs() const;
  std::span<const SignedLetter> letters() const;
  /// Coefficient of om_{level-1}; always 0 outside variant C.
  std::int64_t omega() const;

  /// Stable identity of the underlying node, used for memo tables.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Element& a, const Element& b);

 private:
  friend struct NodeAccess;
  Element(Variant v, std::shared_ptr<const Node> node)
      : variant_(v), node_(std::move(node)) {}

  Variant variant_;
  std::shared_ptr<const Node> node_;
};

/// Structural equality of the reduced words.
bool identical(const Element& a, const Element& b);

bool operator==(const SignedLetter& a, const SignedLetter& b);

/// a = -conj + core + conj, with core cyclically reduced.
struct CyclicForm {
  Element conj;
  Element core;
};

/// The stable letter t[alpha,beta] with relation -t + alpha + t = beta.
/// Identity is the ordered pair (alpha, beta) up to group equality.
class StableLetter {
 public:
  StableLetter(Element alpha, Element beta);
  StableLetter(const StableLetter&) = delete;
  StableLetter& operator=(const StableLetter&) = delete;

  const Element& alpha() const noexcept { return alpha_; }
  const Element& beta() const noexcept { return beta_; }
  int level() const noexcept { return level_; }
  std::size_t hash() const noexcept { return hash_; }

  /// Cyclic reductions of the two subscripts, computed once on demand.
  const CyclicForm& alpha_cyclic() const;
  const CyclicForm& beta_cyclic() const;

 private:
  Element alpha_;
  Element beta_;
  int level_;
  std::size_t hash_;
  mutable std::once_flag cyclic_once_;
  mutable std::optional<CyclicForm> alpha_cyclic_;
  mutable std::optional<CyclicForm> beta_cyclic_;

  void ensure_cyclic() const;
};

bool same_letter(const StableLetter& a, const StableLetter& b);

}  // namespace nrt

template <>
struct std::hash<nrt::Element> {
  std::size_t operator()(const nrt::Element& e) const noexcept {
    return e.hash();
  }
};
