#include "nrt/nearring.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "nrt/error.hpp"
#include "nrt/word_core.hpp"

namespace nrt {

namespace {

void require_nonzero_zeta(const Element& zeta) {
  if (zeta.is_zero()) {
    throw Error(ErrorKind::ZeroZeta, "f_zeta is only defined for nonzero zeta");
  }
}

std::uint64_t max_basis_index(const Element& x,
                              std::unordered_map<const void*, std::uint64_t>& memo) {
  switch (x.kind()) {
    case Element::Kind::Zero:
    case Element::Kind::Integer: return 0;
    case Element::Kind::Word: {
      std::uint64_t best = 0;
      for (auto s : x.word()) {
        best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(s < 0 ? -s : s) - 1);
      }
      return best;
    }
    case Element::Kind::Sequence: break;
  }
  if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
  std::uint64_t best = 0;
  for (const auto& c : x.coeffs()) best = std::max(best, max_basis_index(c, memo));
  for (const auto& s : x.letters()) {
    best = std::max(best, max_basis_index(s.letter->alpha(), memo));
    best = std::max(best, max_basis_index(s.letter->beta(), memo));
  }
  memo.emplace(x.identity(), best);
  return best;
}

// Evaluates f_zeta on canonical forms, one generator at a time, and lets the
// normalizer reassemble. Subtrees shared between letters are evaluated once.
class Embedding {
 public:
  explicit Embedding(const Element& zeta)
      : zeta_(zeta),
        variant_(zeta.variant()),
        zeta_level_(zeta.level()),
        zeta_cyclic_(cyclic_reduce(zeta)) {
    if (variant_ == Variant::B) offset_ = mu(zeta);
  }

  int zeta_level() const { return zeta_level_; }
  std::uint64_t offset() const { return offset_; }
  const CyclicForm& zeta_cyclic() const { return zeta_cyclic_; }

  Element image(const Element& x) {
    switch (x.kind()) {
      case Element::Kind::Zero: return x;
      case Element::Kind::Integer: return scalar(x.integer(), zeta_cyclic_);
      case Element::Kind::Word: return word_image(x);
      case Element::Kind::Sequence: break;
    }
    if (auto it = memo_.find(x.identity()); it != memo_.end()) return it->second;
    auto cs = x.coeffs();
    auto ls = x.letters();
    std::vector<Element> items;
    items.reserve(2 * ls.size() + 2);
    items.push_back(image(cs[0]));
    for (std::size_t i = 0; i < ls.size(); ++i) {
      items.push_back(letter_image(ls[i]));
      items.push_back(image(cs[i + 1]));
    }
    if (x.omega() != 0) {
      items.push_back(make_omega(variant_,
                                 static_cast<std::uint32_t>(zeta_level_ + x.level() - 1),
                                 x.omega()));
    }
    Element out = sum(items);
    memo_.emplace(x.identity(), out);
    return out;
  }

 private:
  Element word_image(const Element& x) {
    std::vector<Element> items;
    items.reserve(x.word().size());
    for (auto s : x.word()) {
      const auto index = static_cast<std::uint64_t>(s < 0 ? -s : s) - 1;
      Element piece = index == 0
                          ? zeta_
                          : make_pi(variant_, static_cast<std::uint32_t>(offset_ + index));
      items.push_back(s < 0 ? neg(piece) : piece);
    }
    return sum(items);
  }

  Element letter_image(const SignedLetter& s) {
    const StableLetter* key = s.letter.get();
    auto it = letters_.find(key);
    if (it == letters_.end()) {
      Element t = make_stable(image(s.letter->alpha()), image(s.letter->beta()));
      it = letters_.emplace(key, std::move(t)).first;
    }
    return s.sign > 0 ? it->second : neg(it->second);
  }

  Element zeta_;
  Variant variant_;
  int zeta_level_;
  CyclicForm zeta_cyclic_;
  std::uint64_t offset_ = 0;
  std::unordered_map<const void*, Element> memo_;
  std::unordered_map<const StableLetter*, Element> letters_;
};

// Inverts an Embedding by structural descent. Returns an unverified
// candidate; the caller checks it.
class Descent {
 public:
  explicit Descent(Embedding& f) : f_(f), variant_(f.zeta_cyclic().core.variant()) {}

  std::optional<Element> invert(const Element& x) {
    if (x.is_zero()) return x;
    if (auto k = power_of(x, f_.zeta_cyclic())) return scalar(*k, unit(variant_));
    switch (x.kind()) {
      case Element::Kind::Zero: return x;
      case Element::Kind::Integer: return std::nullopt;
      case Element::Kind::Word: return invert_word(x);
      case Element::Kind::Sequence: break;
    }
    if (auto it = memo_.find(x.identity()); it != memo_.end()) return it->second;
    std::optional<Element> out = invert_sequence(x);
    memo_.emplace(x.identity(), out);
    return out;
  }

 private:
  std::optional<Element> invert_sequence(const Element& x) {
    auto cs = x.coeffs();
    auto ls = x.letters();
    std::vector<Element> items;
    auto c0 = invert(cs[0]);
    if (!c0) return std::nullopt;
    items.push_back(*c0);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      auto a = invert(ls[i].letter->alpha());
      auto b = invert(ls[i].letter->beta());
      if (!a || !b || a->is_zero() || b->is_zero() || *a == *b) return std::nullopt;
      items.push_back(make_stable(*a, *b, ls[i].sign));
      auto c = invert(cs[i + 1]);
      if (!c) return std::nullopt;
      items.push_back(*c);
    }
    if (x.omega() != 0) {
      const int j = x.level() - 1 - f_.zeta_level();
      if (j < 0) return std::nullopt;
      items.push_back(make_omega(variant_, static_cast<std::uint32_t>(j), x.omega()));
    }
    return sum(items);
  }

  // Splits a base word into maximal runs over pi_0..pi_mu, each of which must
  // be a power of zeta, and single letters pi_k with k > mu.
  std::optional<Element> invert_word(const Element& x) {
    const auto mu_z = f_.offset();
    std::vector<Element> items;
    std::vector<std::int32_t> run;
    auto flush = [&]() -> bool {
      if (run.empty()) return true;
      std::vector<BasisPower> powers;
      for (auto s : run) {
        powers.push_back({static_cast<std::uint32_t>((s < 0 ? -s : s) - 1), s < 0 ? -1 : 1});
      }
      run.clear();
      auto k = power_of(make_pi(variant_, powers), f_.zeta_cyclic());
      if (!k) return false;
      items.push_back(make_pi(variant_, 0, *k));
      return true;
    };
    for (auto s : x.word()) {
      const auto index = static_cast<std::uint64_t>(s < 0 ? -s : s) - 1;
      if (index <= mu_z) {
        run.push_back(s);
        continue;
      }
      if (!flush()) return std::nullopt;
      items.push_back(make_pi(variant_, static_cast<std::uint32_t>(index - mu_z), s < 0 ? -1 : 1));
    }
    if (!flush()) return std::nullopt;
    return sum(items);
  }

  Embedding& f_;
  Variant variant_;
  std::unordered_map<const void*, std::optional<Element>> memo_;
};

}  // namespace

Element f_eval(const Element& zeta, const Element& x) {
  require_same_variant(zeta, x);
  require_nonzero_zeta(zeta);
  if (x.is_zero()) return x;
  if (zeta == unit(zeta.variant())) return x;
  Embedding f(zeta);
  return f.image(x);
}

Element mul(const Element& a, const Element& b) {
  require_same_variant(a, b);
  if (a.is_zero() || b.is_zero()) return Element(a.variant());
  return f_eval(b, a);
}

std::uint64_t mu(const Element& gamma) {
  if (gamma.variant() != Variant::B) {
    throw Error(ErrorKind::WrongVariant, "mu is defined for variant B only");
  }
  if (gamma.is_zero()) throw Error(ErrorKind::ZeroInput, "mu of zero");
  std::unordered_map<const void*, std::uint64_t> memo;
  return max_basis_index(gamma, memo);
}

Preimage preimage_search(const Element& zeta, const Element& x) {
  require_same_variant(zeta, x);
  require_nonzero_zeta(zeta);
  if (x.is_zero()) return {PreimageStatus::Found, x};
  if (zeta == unit(zeta.variant())) return {PreimageStatus::Found, x};
  Embedding f(zeta);
  Descent d(f);
  auto candidate = d.invert(x);
  if (!candidate) {
    // Descent is complete when f_zeta shifts every level uniformly, which
    // fails only for variant B with zeta above the base.
    const bool complete = zeta.variant() != Variant::B || zeta.level() == 0;
    return {complete ? PreimageStatus::NotInImage : PreimageStatus::AmbiguousParse,
            std::nullopt};
  }
  if (f.image(*candidate) != x) return {PreimageStatus::AmbiguousParse, std::nullopt};
  return {PreimageStatus::Found, std::move(candidate)};
}

std::optional<Element> preimage(const Element& zeta, const Element& x) {
  return preimage_search(zeta, x).value;
}

bool in_W(const Element& x) {
  if (x.variant() != Variant::B) {
    throw Error(ErrorKind::WrongVariant, "W* lives in variant B only");
  }
  switch (x.kind()) {
    case Element::Kind::Zero: return true;
    case Element::Kind::Integer: return false;
    case Element::Kind::Word:
      return std::none_of(x.word().begin(), x.word().end(),
                          [](std::int32_t s) { return s == 1 || s == -1; });
    case Element::Kind::Sequence: break;
  }
  for (const auto& c : x.coeffs()) {
    if (!in_W(c)) return false;
  }
  for (const auto& s : x.letters()) {
    if (!in_W(s.letter->alpha()) || !in_W(s.letter->beta())) return false;
  }
  return true;
}

bool in_H(const Element& zeta, const Element& x) {
  require_same_variant(zeta, x);
  require_nonzero_zeta(zeta);
  if (x.is_zero()) return true;
  return preimage_search(zeta, x).status == PreimageStatus::Found;
}

}  // namespace nrt
