#include "nrt/element.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "node.hpp"
#include "nrt/error.hpp"
#include "nrt/word_core.hpp"

namespace nrt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongVariant: return "WrongVariant";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::ZeroZeta: return "ZeroZeta";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Usage: return "UsageError";
  }
  return "?";
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::A: return "A";
    case Variant::B: return "B";
    case Variant::C: return "C";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "A" || text == "a") return Variant::A;
  if (text == "B" || text == "b") return Variant::B;
  if (text == "C" || text == "c") return Variant::C;
  return std::nullopt;
}

namespace {

const Node& node_of(const Element& e, Element::Kind expected,
                    const char* what) {
  const Node* n = NodeAccess::get(e);
  if (n == nullptr || n->kind != expected) {
    throw std::logic_error(std::string("Element is not ") + what);
  }
  return *n;
}

std::size_t letter_hash(const StableLetter& l) { return l.hash(); }

}  // namespace

Element::Kind Element::kind() const noexcept {
  return node_ ? node_->kind : Kind::Zero;
}

int Element::level() const noexcept { return node_ ? node_->level : -1; }

std::size_t Element::hash() const noexcept {
  return node_ ? node_->hash : 0x51ed270b27ULL;
}

std::int64_t Element::integer() const {
  return node_of(*this, Kind::Integer, "an integer chunk").integer;
}

std::span<const std::int32_t> Element::word() const {
  return node_of(*this, Kind::Word, "a free-base word").word;
}

std::span<const Element> Element::coeffs() const {
  return node_of(*this, Kind::Sequence, "a sequence").coeffs;
}

std::span<const SignedLetter> Element::letters() const {
  return node_of(*this, Kind::Sequence, "a sequence").letters;
}

std::int64_t Element::omega() const {
  return node_ && node_->kind == Kind::Sequence ? node_->omega : 0;
}

bool identical(const Element& a, const Element& b) {
  if (a.variant() != b.variant()) return false;
  const Node* x = NodeAccess::get(a);
  const Node* y = NodeAccess::get(b);
  if (x == y) return true;
  if (x == nullptr || y == nullptr) return false;
  if (x->hash != y->hash || x->kind != y->kind || x->level != y->level) {
    return false;
  }
  switch (x->kind) {
    case Element::Kind::Zero: return true;
    case Element::Kind::Integer: return x->integer == y->integer;
    case Element::Kind::Word: return x->word == y->word;
    case Element::Kind::Sequence: break;
  }
  if (x->omega != y->omega || x->letters.size() != y->letters.size()) return false;
  for (std::size_t i = 0; i < x->letters.size(); ++i) {
    const auto& p = x->letters[i];
    const auto& q = y->letters[i];
    if (p.sign != q.sign) return false;
    if (p.letter != q.letter && !(identical(p.letter->alpha(), q.letter->alpha()) &&
                                  identical(p.letter->beta(), q.letter->beta()))) {
      return false;
    }
  }
  for (std::size_t i = 0; i < x->coeffs.size(); ++i) {
    if (!identical(x->coeffs[i], y->coeffs[i])) return false;
  }
  return true;
}

bool operator==(const Element& a, const Element& b) {
  if (a.variant() != b.variant()) return false;
  const Node* x = NodeAccess::get(a);
  const Node* y = NodeAccess::get(b);
  if (x == y) return true;
  if (x == nullptr || y == nullptr) return false;
  // hash, level and letter signs are invariants of the group element
  if (x->hash != y->hash || x->level != y->level) return false;
  if (identical(a, b)) return true;
  return x->level > 0 && sub(a, b).is_zero();
}

bool same_letter(const StableLetter& a, const StableLetter& b) {
  if (&a == &b) return true;
  if (a.hash() != b.hash()) return false;
  if (identical(a.alpha(), b.alpha()) && identical(a.beta(), b.beta())) return true;
  return a.alpha() == b.alpha() && a.beta() == b.beta();
}

bool operator==(const SignedLetter& a, const SignedLetter& b) {
  return a.sign == b.sign && same_letter(*a.letter, *b.letter);
}

Element raw_integer(Variant v, std::int64_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Element::Kind::Integer;
  node->level = 0;
  node->integer = n;
  node->hash = hash_mix(0x1234, std::hash<std::int64_t>{}(n));
  return NodeAccess::wrap(v, std::move(node));
}

Element raw_word(Variant v, std::vector<std::int32_t> word) {
  auto node = std::make_shared<Node>();
  node->kind = Element::Kind::Word;
  node->level = 0;
  std::size_t h = 0x5678;
  for (auto s : word) h = hash_mix(h, std::hash<std::int32_t>{}(s));
  node->hash = h;
  node->word = std::move(word);
  return NodeAccess::wrap(v, std::move(node));
}

Element raw_sequence(Variant v, int level, std::vector<Element> coeffs,
                     std::vector<SignedLetter> letters, std::int64_t omega) {
  auto node = std::make_shared<Node>();
  node->kind = Element::Kind::Sequence;
  node->level = level;
  // Coefficients are left out: they differ between reduced forms of one
  // element, while the letter sequence and om coefficient do not.
  std::size_t h = hash_mix(0x9abc, static_cast<std::size_t>(level));
  for (const auto& s : letters) {
    h = hash_mix(h, letter_hash(*s.letter) * 2 + (s.sign > 0 ? 1 : 0));
  }
  h = hash_mix(h, std::hash<std::int64_t>{}(omega));
  node->hash = h;
  node->coeffs = std::move(coeffs);
  node->letters = std::move(letters);
  node->omega = omega;
  return NodeAccess::wrap(v, std::move(node));
}

StableLetter::StableLetter(Element alpha, Element beta)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      level_(std::max(alpha_.level(), beta_.level()) + 1),
      hash_(hash_mix(hash_mix(0xdef0, alpha_.hash()), beta_.hash())) {}

void StableLetter::ensure_cyclic() const {
  std::call_once(cyclic_once_, [this] {
    alpha_cyclic_ = cyclic_reduce(alpha_);
    beta_cyclic_ = cyclic_reduce(beta_);
  });
}

const CyclicForm& StableLetter::alpha_cyclic() const {
  ensure_cyclic();
  return *alpha_cyclic_;
}

const CyclicForm& StableLetter::beta_cyclic() const {
  ensure_cyclic();
  return *beta_cyclic_;
}

}  // namespace nrt
