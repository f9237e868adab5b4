#include "nrt/word_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "node.hpp"

namespace nrt {

namespace {

// Cap on the letters of one multiple; larger normal forms raise Overflow.
constexpr std::size_t kMaxLetters = std::size_t{1} << 14;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in group arithmetic");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in group arithmetic");
  }
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

Element int_or_zero(Variant v, std::int64_t n) {
  return n == 0 ? Element(v) : raw_integer(v, n);
}

// Free reduction of a syllable list.
std::vector<std::int32_t> reduce_word(const std::vector<std::int32_t>& in) {
  std::vector<std::int32_t> out;
  out.reserve(in.size());
  for (auto s : in) {
    if (!out.empty() && out.back() == -s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Element word_or_zero(Variant v, std::vector<std::int32_t> w) {
  return w.empty() ? Element(v) : raw_word(v, std::move(w));
}

Element sequence_or_lower(Variant v, int level, std::vector<Element> coeffs,
                          std::vector<SignedLetter> letters,
                          std::int64_t omega) {
  if (letters.empty() && omega == 0) return coeffs.front();
  return raw_sequence(v, level, std::move(coeffs), std::move(letters), omega);
}

Element letter_element(Variant v, const SignedLetter& s) {
  return raw_sequence(v, s.letter->level(), {Element(v), Element(v)}, {s}, 0);
}

// The part of a level-j sequence that lies outside the om_{j-1} summand.
Element kpart(const Element& a) {
  if (a.kind() != Element::Kind::Sequence || a.omega() == 0) return a;
  auto cs = a.coeffs();
  auto ls = a.letters();
  if (ls.empty()) return cs.front();
  return raw_sequence(a.variant(), a.level(), {cs.begin(), cs.end()},
                      {ls.begin(), ls.end()}, 0);
}

Element with_omega(const Element& x, std::int64_t m, int level) {
  if (m == 0) return x;
  if (x.level() == level) {
    auto cs = x.coeffs();
    auto ls = x.letters();
    return raw_sequence(x.variant(), level, {cs.begin(), cs.end()},
                        {ls.begin(), ls.end()}, m);
  }
  return raw_sequence(x.variant(), level, {x}, {}, m);
}

// Letter count for sequences, syllable count for words, measured at `level`.
std::size_t weight_at(const Element& x, int level) {
  if (x.level() != level) return 0;
  if (x.kind() == Element::Kind::Word) return x.word().size();
  if (x.kind() == Element::Kind::Sequence) return x.letters().size();
  return 0;
}

Element multiple_of_cyclic(std::int64_t k, const Element& core);
std::optional<std::int64_t> power_core(const Element& h, const Element& core);

std::optional<std::int64_t> power_with(const Element& g, const CyclicForm& cf) {
  if (g.is_zero()) return 0;
  Element h = cf.conj.is_zero() ? g : conjugate(g, neg(cf.conj));
  return power_core(h, cf.core);
}

Element scalar_with(std::int64_t k, const CyclicForm& cf) {
  if (k == 0) return Element(cf.core.variant());
  Element p = multiple_of_cyclic(k, cf.core);
  return cf.conj.is_zero() ? p : conjugate(p, cf.conj);
}

// Incremental reducer for one level. The state is always Britton-reduced:
// no pinch is present, so only the newest junction can need work.
class SequenceBuilder {
 public:
  SequenceBuilder(Variant v, int level)
      : variant_(v), level_(level), coeffs_{Element(v)} {}

  void load(const Element& x) {
    auto cs = x.coeffs();
    auto ls = x.letters();
    coeffs_.assign(cs.begin(), cs.end());
    letters_.assign(ls.begin(), ls.end());
    omega_ = x.omega();
  }

  void push(const Element& x) {
    if (x.is_zero()) return;
    if (x.level() < level_) {
      push_coeff(x);
      return;
    }
    auto cs = x.coeffs();
    auto ls = x.letters();
    push_coeff(cs[0]);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      push_letter(ls[i]);
      push_coeff(cs[i + 1]);
    }
    push_omega(x.omega());
  }

  void push_coeff(const Element& g) {
    if (!g.is_zero()) coeffs_.back() = add(coeffs_.back(), g);
  }

  void push_omega(std::int64_t m) { omega_ = checked_add(omega_, m); }

  void push_letter(const SignedLetter& s) {
    const StableLetter& t = *s.letter;
    if (!letters_.empty() && letters_.back().sign == -s.sign &&
        same_letter(*letters_.back().letter, t)) {
      // pinch: -t + k alpha + t = k beta, +t + k beta - t = k alpha
      const bool plus = s.sign > 0;
      const CyclicForm& through = plus ? t.alpha_cyclic() : t.beta_cyclic();
      if (auto k = power_with(coeffs_.back(), through)) {
        const CyclicForm& other = plus ? t.beta_cyclic() : t.alpha_cyclic();
        letters_.pop_back();
        coeffs_.pop_back();
        coeffs_.back() = add(coeffs_.back(), scalar_with(*k, other));
        return;
      }
    }
    letters_.push_back(s);
    coeffs_.push_back(Element(variant_));
  }

  Element finish() {
    return sequence_or_lower(variant_, level_, std::move(coeffs_),
                             std::move(letters_), omega_);
  }

 private:
  Variant variant_;
  int level_;
  std::vector<Element> coeffs_;
  std::vector<SignedLetter> letters_;
  std::int64_t omega_ = 0;
};

Element sum_level0(std::span<const Element> items, Variant v) {
  if (v == Variant::B) {
    std::vector<std::int32_t> w;
    for (const auto& x : items) {
      if (x.is_zero()) continue;
      auto s = x.word();
      w.insert(w.end(), s.begin(), s.end());
    }
    return word_or_zero(v, reduce_word(w));
  }
  std::int64_t n = 0;
  for (const auto& x : items) {
    if (!x.is_zero()) n = checked_add(n, x.integer());
  }
  return int_or_zero(v, n);
}

Element multiple_of_cyclic(std::int64_t k, const Element& core) {
  const Variant v = core.variant();
  if (k == 0 || core.is_zero()) return Element(v);
  if (core.kind() == Element::Kind::Integer) {
    return raw_integer(v, checked_mul(k, core.integer()));
  }
  Element base = k < 0 ? neg(core) : core;
  std::uint64_t n = k < 0 ? 0 - static_cast<std::uint64_t>(k)
                          : static_cast<std::uint64_t>(k);
  const std::size_t w = std::max<std::size_t>(1, weight_at(core, core.level()));
  if (n > kMaxLetters / w) {
    throw Error(ErrorKind::Overflow, "normal form exceeds " +
                                         std::to_string(kMaxLetters) + " letters");
  }
  if (core.kind() == Element::Kind::Word) {
    auto w = base.word();
    std::vector<std::int32_t> out;
    out.reserve(w.size() * n);
    for (std::uint64_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
    return word_or_zero(v, reduce_word(out));
  }
  Element result(v);
  while (n > 0) {
    if (n & 1U) result = add(result, base);
    n >>= 1U;
    if (n > 0) base = add(base, base);
  }
  return result;
}

std::optional<std::int64_t> power_core(const Element& h, const Element& core) {
  if (h.is_zero()) return 0;
  if (h.level() != core.level()) return std::nullopt;
  const int j = core.level();
  if (j == 0) {
    if (core.kind() == Element::Kind::Integer) {
      if (h.integer() % core.integer() != 0) return std::nullopt;
      return h.integer() / core.integer();
    }
    const auto L = core.word().size();
    const auto n = h.word().size();
    if (n % L != 0) return std::nullopt;
    const auto k = static_cast<std::int64_t>(n / L);
    if (multiple_of_cyclic(k, core) == h) return k;
    if (multiple_of_cyclic(-k, core) == h) return -k;
    return std::nullopt;
  }
  Element kc = kpart(core);
  const std::int64_t mc = core.omega();
  Element kh = kpart(h);
  const std::int64_t mh = h.omega();
  if (kc.is_zero()) {
    if (!kh.is_zero() || mh % mc != 0) return std::nullopt;
    return mh / mc;
  }
  if (kc.level() < j) {
    auto k = power_core(kh, kc);
    if (!k || checked_mul(*k, mc) != mh) return std::nullopt;
    return k;
  }
  if (kh.level() != j) return std::nullopt;
  const auto L = kc.letters().size();
  const auto n = kh.letters().size();
  if (n % L != 0) return std::nullopt;
  const auto k = static_cast<std::int64_t>(n / L);
  for (std::int64_t cand : {k, -k}) {
    if (checked_mul(cand, mc) == mh && multiple_of_cyclic(cand, kc) == kh) {
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

void require_same_variant(const Element& a, const Element& b) {
  if (a.variant() != b.variant()) {
    throw Error(ErrorKind::VariantMismatch,
                std::string("operands from variants ") +
                    to_string(a.variant()) + " and " + to_string(b.variant()));
  }
}

Element zero(Variant v) { return Element(v); }

Element make_int(Variant v, std::int64_t n) {
  if (n == 0) return Element(v);
  if (v == Variant::B) {
    throw Error(ErrorKind::WrongVariant,
                "integer base chunks exist only under variants A and C");
  }
  return raw_integer(v, n);
}

Element make_pi(Variant v, std::span<const BasisPower> word) {
  if (v != Variant::B) {
    throw Error(ErrorKind::WrongVariant, "basis letters exist only under variant B");
  }
  std::vector<std::int32_t> syllables;
  for (const auto& p : word) {
    if (p.index >= static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max())) {
      throw Error(ErrorKind::Overflow, "basis index too large");
    }
    const auto letter = static_cast<std::int32_t>(p.index) + 1;
    const std::int32_t s = p.exponent < 0 ? -letter : letter;
    const auto reps = p.exponent < 0 ? -p.exponent : p.exponent;
    for (std::int64_t i = 0; i < reps; ++i) syllables.push_back(s);
  }
  return word_or_zero(v, reduce_word(syllables));
}

Element make_pi(Variant v, std::uint32_t index, std::int64_t exponent) {
  BasisPower p{index, exponent};
  return make_pi(v, std::span<const BasisPower>(&p, 1));
}

Element make_omega(Variant v, std::uint32_t j, std::int64_t m) {
  if (v != Variant::C) {
    throw Error(ErrorKind::WrongVariant, "om letters exist only under variant C");
  }
  if (m == 0) return Element(v);
  return raw_sequence(v, static_cast<int>(j) + 1, {Element(v)}, {}, m);
}

Element make_stable(const Element& alpha, const Element& beta, int sign) {
  require_same_variant(alpha, beta);
  if (alpha.is_zero() || beta.is_zero() || alpha == beta) {
    throw Error(ErrorKind::DegeneratePair,
                "stable letters need two distinct nonzero subscripts");
  }
  auto letter = std::make_shared<const StableLetter>(alpha, beta);
  return letter_element(alpha.variant(), {std::move(letter), sign < 0 ? -1 : 1});
}

Element unit(Variant v) {
  return v == Variant::B ? make_pi(v, 0) : make_int(v, 1);
}

Element sum(std::span<const Element> items) {
  if (items.empty()) return Element();
  const Variant v = items.front().variant();
  int top = -1;
  const Element* first_top = nullptr;
  for (const auto& x : items) {
    require_same_variant(items.front(), x);
    if (x.level() > top) {
      top = x.level();
      first_top = &x;
    }
  }
  if (top < 0) return Element(v);
  if (top == 0) return sum_level0(items, v);
  SequenceBuilder b(v, top);
  std::size_t start = 0;
  // Leading lower-level items go in first, unless the first item is already
  // at the top level, in which case it is loaded as-is.
  if (&items.front() == first_top) {
    b.load(items.front());
    start = 1;
  }
  for (std::size_t i = start; i < items.size(); ++i) b.push(items[i]);
  return b.finish();
}

Element add(const Element& a, const Element& b) {
  require_same_variant(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Element items[2] = {a, b};
  return sum(items);
}

Element neg(const Element& a) {
  const Variant v = a.variant();
  switch (a.kind()) {
    case Element::Kind::Zero: return a;
    case Element::Kind::Integer: return raw_integer(v, checked_neg(a.integer()));
    case Element::Kind::Word: {
      auto w = a.word();
      std::vector<std::int32_t> out(w.rbegin(), w.rend());
      for (auto& s : out) s = -s;
      return raw_word(v, std::move(out));
    }
    case Element::Kind::Sequence: break;
  }
  auto cs = a.coeffs();
  auto ls = a.letters();
  SequenceBuilder b(v, a.level());
  b.push_coeff(neg(cs.back()));
  for (std::size_t i = ls.size(); i-- > 0;) {
    b.push_letter({ls[i].letter, -ls[i].sign});
    b.push_coeff(neg(cs[i]));
  }
  b.push_omega(checked_neg(a.omega()));
  return b.finish();
}

Element sub(const Element& a, const Element& b) { return add(a, neg(b)); }

Element conjugate(const Element& a, const Element& c) {
  require_same_variant(a, c);
  if (c.is_zero() || a.is_zero()) return a;
  const Element items[3] = {neg(c), a, c};
  return sum(items);
}

Element scalar(std::int64_t k, const Element& a) {
  if (k == 0 || a.is_zero()) return Element(a.variant());
  if (a.kind() == Element::Kind::Integer) {
    return raw_integer(a.variant(), checked_mul(k, a.integer()));
  }
  return scalar_with(k, cyclic_reduce(a));
}

Element repeated_add(std::int64_t k, const Element& a) {
  Element step = k < 0 ? neg(a) : a;
  Element acc(a.variant());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) acc = add(acc, step);
  return acc;
}

int level(const Element& a) { return a.level(); }

bool equal(const Element& a, const Element& b) {
  require_same_variant(a, b);
  return a == b;
}

std::size_t size(const Element& a) {
  switch (a.kind()) {
    case Element::Kind::Zero: return 0;
    case Element::Kind::Integer: {
      auto n = a.integer();
      return static_cast<std::size_t>(n < 0 ? -n : n);
    }
    case Element::Kind::Word: return a.word().size();
    case Element::Kind::Sequence: break;
  }
  std::size_t total = static_cast<std::size_t>(std::llabs(a.omega()));
  for (const auto& c : a.coeffs()) total += size(c);
  for (const auto& s : a.letters()) {
    total += 1 + size(s.letter->alpha()) + size(s.letter->beta());
  }
  return total;
}

std::size_t letter_count(const Element& a) {
  return a.kind() == Element::Kind::Sequence ? a.letters().size() : 0;
}

Element renormalize(const Element& a) {
  const Variant v = a.variant();
  switch (a.kind()) {
    case Element::Kind::Zero:
    case Element::Kind::Integer: return a;
    case Element::Kind::Word: {
      auto w = a.word();
      return word_or_zero(v, reduce_word({w.begin(), w.end()}));
    }
    case Element::Kind::Sequence: break;
  }
  auto cs = a.coeffs();
  auto ls = a.letters();
  SequenceBuilder b(v, a.level());
  b.push_coeff(renormalize(cs[0]));
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto fresh = std::make_shared<const StableLetter>(
        renormalize(ls[i].letter->alpha()), renormalize(ls[i].letter->beta()));
    b.push_letter({std::move(fresh), ls[i].sign});
    b.push_coeff(renormalize(cs[i + 1]));
  }
  b.push_omega(a.omega());
  return b.finish();
}

CyclicForm cyclic_reduce(const Element& a) {
  const Variant v = a.variant();
  if (a.is_zero()) {
    throw Error(ErrorKind::ZeroInput, "cyclic_reduce of zero");
  }
  if (a.kind() == Element::Kind::Integer) return {Element(v), a};
  if (a.kind() == Element::Kind::Word) {
    auto w = a.word();
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (2 * i + 1 < n && w[i] == -w[n - 1 - i]) ++i;
    Element prefix = word_or_zero(v, {w.begin(), w.begin() + i});
    Element core = raw_word(v, {w.begin() + i, w.end() - i});
    return {neg(prefix), core};
  }

  const int j = a.level();
  Element x = kpart(a);
  const std::int64_t m = a.omega();
  Element conj_acc(v);  // x == -conj_acc + kpart(a) + conj_acc
  while (x.level() == j) {
    auto cs = x.coeffs();
    if (!cs.front().is_zero()) {
      Element c0 = cs.front();
      x = conjugate(x, c0);
      conj_acc = add(conj_acc, c0);
      continue;
    }
    auto ls = x.letters();
    const SignedLetter& first = ls.front();
    const SignedLetter& last = ls.back();
    if (first.sign == -last.sign && same_letter(*first.letter, *last.letter)) {
      const CyclicForm& through = first.sign > 0 ? first.letter->alpha_cyclic()
                                                 : first.letter->beta_cyclic();
      if (power_with(cs.back(), through)) {
        Element s = letter_element(v, first);
        x = conjugate(x, s);
        conj_acc = add(conj_acc, s);
        continue;
      }
    }
    break;
  }
  if (x.level() < j && !x.is_zero()) {
    CyclicForm inner = cyclic_reduce(x);
    x = inner.core;
    conj_acc = sub(conj_acc, inner.conj);
  }
  return {neg(conj_acc), with_omega(x, m, j)};
}

std::optional<std::int64_t> power_of(const Element& g, const Element& alpha) {
  require_same_variant(g, alpha);
  if (alpha.is_zero()) {
    throw Error(ErrorKind::ZeroAlpha, "power_of with zero base");
  }
  if (g.is_zero()) return 0;
  return power_of(g, cyclic_reduce(alpha));
}

std::optional<std::int64_t> power_of(const Element& g, const CyclicForm& cf) {
  require_same_variant(g, cf.core);
  return power_with(g, cf);
}

Element scalar(std::int64_t k, const CyclicForm& a) { return scalar_with(k, a); }

Element conjugator(const Element& alpha, const Element& beta) {
  return make_stable(alpha, beta, 1);
}

}  // namespace nrt
