#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrt/error.hpp"
#include "nrt/expr.hpp"
#include "nrt/sample.hpp"
#include "nrt/word_core.hpp"

using namespace nrt;

namespace {

Element A(std::int64_t n) { return make_int(Variant::A, n); }
Element P(std::string_view s, Variant v = Variant::A) { return parse_element(s, v); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

std::vector<Element> samples(Variant v, std::size_t n, std::uint64_t seed = 11) {
  SampleConfig cfg;
  cfg.seed = seed;
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_element(v, cfg, i));
  return out;
}

const Variant kVariants[] = {Variant::A, Variant::B, Variant::C};

}  // namespace

TEST_CASE("constructors") {
  CHECK(make_int(Variant::A, 0).is_zero());
  CHECK(make_omega(Variant::C, 3, 0).is_zero());

  Element one = make_pi(Variant::B, 0);
  CHECK(level(one) == 0);
  CHECK(one == unit(Variant::B));

  CHECK(level(make_omega(Variant::C, 0, 1)) == 1);
  CHECK(level(make_stable(A(1), A(2))) == 1);
  CHECK(level(make_stable(make_omega(Variant::C, 0), make_int(Variant::C, 1))) == 2);

  CHECK(kind_of([] { make_stable(A(1), A(1)); }) == ErrorKind::DegeneratePair);
  CHECK(kind_of([] { make_stable(A(1), Element(Variant::A)); }) == ErrorKind::DegeneratePair);
  CHECK(kind_of([] { make_omega(Variant::A, 0); }) == ErrorKind::WrongVariant);
  CHECK(kind_of([] { make_pi(Variant::C, 1); }) == ErrorKind::WrongVariant);
  CHECK(kind_of([] { make_int(Variant::B, 2); }) == ErrorKind::WrongVariant);
}

TEST_CASE("add and the defining relation") {
  Element t = make_stable(A(1), A(2));
  Element a = P("t[1,2]+5");
  CHECK(add(a, Element(Variant::A)) == a);
  CHECK(add(t, neg(t)).is_zero());
  CHECK(add(add(neg(t), A(1)), t) == A(2));
  CHECK(add(add(t, A(4)), neg(t)) == A(2));
  CHECK(kind_of([&] { add(t, make_int(Variant::C, 1)); }) == ErrorKind::VariantMismatch);
}

TEST_CASE("neg") {
  CHECK(neg(Element(Variant::A)).is_zero());
  CHECK(neg(A(5)) == A(-5));
  Element x = add(A(1), make_stable(A(1), A(2)));
  CHECK(render(neg(x)) == "-t[1,2]-1");
  CHECK(add(x, neg(x)).is_zero());
}

TEST_CASE("levels") {
  CHECK(level(Element(Variant::C)) == -1);
  CHECK(level(make_omega(Variant::C, 0)) == 1);
  CHECK(level(P("t[om(0),2]", Variant::C)) == 2);
  CHECK(level(P("-t[1,2]+1+t[1,2]")) == 0);
}

TEST_CASE("distinct reduced words of one element compare equal") {
  // -t + 2 + t = 3, so 2 + t and t + 3 are the same element
  Element lhs = P("2+t[2,3]");
  Element rhs = P("t[2,3]+3");
  CHECK_FALSE(identical(lhs, rhs));
  CHECK(lhs == rhs);
  CHECK(lhs.hash() == rhs.hash());
  CHECK(lhs != P("t[2,3]+2"));
  CHECK(make_stable(lhs, A(1)) == make_stable(rhs, A(1)));
}

TEST_CASE("cyclic_reduce") {
  auto seven = cyclic_reduce(A(7));
  CHECK(seven.conj.is_zero());
  CHECK(seven.core == A(7));

  Element t = make_stable(A(2), A(3));
  auto cf = cyclic_reduce(P("-t[2,3]+5+t[2,3]"));
  CHECK(cf.conj == t);
  CHECK(cf.core == A(5));

  auto letter = cyclic_reduce(make_stable(A(1), A(2)));
  CHECK(letter.conj.is_zero());
  CHECK(letter.core == make_stable(A(1), A(2)));

  CHECK(kind_of([] { cyclic_reduce(Element(Variant::A)); }) == ErrorKind::ZeroInput);
}

TEST_CASE("cyclic_reduce contract on samples") {
  for (Variant v : kVariants) {
    for (const Element& a : samples(v, 150)) {
      if (a.is_zero()) continue;
      auto cf = cyclic_reduce(a);
      CHECK(conjugate(cf.core, cf.conj) == a);
      const std::size_t base = letter_count(cf.core);
      for (std::int64_t k = 1; k <= 4; ++k) {
        CHECK(letter_count(repeated_add(k, cf.core)) == static_cast<std::size_t>(k) * base);
      }
    }
  }
}

TEST_CASE("power_of") {
  CHECK(power_of(A(6), A(2)) == 3);
  CHECK_FALSE(power_of(A(3), A(2)));
  Element t = make_stable(A(1), A(2));
  CHECK(power_of(add(t, t), t) == 2);
  CHECK(power_of(P("-t[1,2]+10+t[1,2]"), P("-t[1,2]+5+t[1,2]")) == 2);
  CHECK(power_of(P("-t[2,3]+10+t[2,3]"), P("-t[2,3]+5+t[2,3]")) == 2);
  CHECK(power_of(Element(Variant::A), t) == 0);
  CHECK(power_of(make_omega(Variant::C, 1, 6), make_omega(Variant::C, 1, -2)) == -3);
  CHECK_FALSE(power_of(make_omega(Variant::C, 1, 6), make_omega(Variant::C, 0, 2)));
  CHECK(power_of(make_pi(Variant::B, 3, -4), make_pi(Variant::B, 3, 2)) == -2);
  CHECK(kind_of([&] { power_of(t, Element(Variant::A)); }) == ErrorKind::ZeroAlpha);
}

TEST_CASE("power_of against brute force") {
  for (Variant v : kVariants) {
    auto xs = samples(v, 120, 5);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const Element& a = xs[i];
      if (a.is_zero()) continue;
      for (std::int64_t k = -6; k <= 6; ++k) {
        CHECK(power_of(repeated_add(k, a), a) == k);
      }
      const Element& g = xs[i + 1];
      if (!power_of(g, a)) {
        for (std::int64_t k = -6; k <= 6; ++k) CHECK(repeated_add(k, a) != g);
      }
    }
  }
}

TEST_CASE("conjugator and equal") {
  Element t = conjugator(A(1), A(2));
  CHECK(t == make_stable(A(1), A(2)));
  CHECK(add(add(neg(t), A(1)), t) == A(2));
  CHECK(conjugator(A(1), A(-1)) == make_stable(A(1), A(-1)));
  CHECK(kind_of([] { conjugator(A(2), A(2)); }) == ErrorKind::DegeneratePair);

  CHECK(equal(P("-t[1,2]+1+t[1,2]"), A(2)));
  CHECK_FALSE(equal(make_stable(A(1), A(2)), make_stable(A(1), A(3))));
  CHECK(equal(Element(Variant::A), make_int(Variant::A, 0)));
  CHECK(kind_of([] { equal(Element(Variant::A), Element(Variant::B)); }) ==
        ErrorKind::VariantMismatch);
}

TEST_CASE("size") {
  CHECK(size(Element(Variant::A)) == 0);
  CHECK(size(A(3)) == 3);
  CHECK(size(A(-3)) == 3);
  CHECK(size(make_stable(A(1), A(2))) == 4);
}

TEST_CASE("group laws on samples") {
  for (Variant v : kVariants) {
    auto xs = samples(v, 150, 21);
    const Element zero_v(v);
    for (std::size_t i = 0; i + 2 < xs.size(); i += 3) {
      const Element &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
      CHECK(identical(renormalize(a), a));
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      CHECK(add(a, zero_v) == a);
      CHECK(add(zero_v, a) == a);
      CHECK(add(a, neg(a)).is_zero());
      CHECK(level(add(a, b)) <= std::max(level(a), level(b)));
      if (a.is_zero()) continue;
      for (std::int64_t k = 1; k <= 6; ++k) {
        CHECK_FALSE(repeated_add(k, a).is_zero());
        CHECK(scalar(k, a) == repeated_add(k, a));
        CHECK(scalar(-k, a) == repeated_add(-k, a));
      }
      auto cf = cyclic_reduce(a);
      CHECK(level(scalar(3, cf.core)) == level(cf.core));
    }
  }
}

TEST_CASE("relation law on sampled letters") {
  for (Variant v : kVariants) {
    auto xs = samples(v, 80, 33);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const Element &alpha = xs[i], &beta = xs[i + 1];
      if (alpha.is_zero() || beta.is_zero() || alpha == beta) continue;
      Element t = make_stable(alpha, beta);
      for (std::int64_t k = -5; k <= 5; ++k) {
        CHECK(add(add(neg(t), repeated_add(k, alpha)), t) == repeated_add(k, beta));
        CHECK(add(add(t, repeated_add(k, beta)), neg(t)) == repeated_add(k, alpha));
      }
    }
  }
}

TEST_CASE("om coefficients are central at their level") {
  const Variant v = Variant::C;
  Element w = make_omega(v, 0);
  Element t = P("t[1,2]", v);
  CHECK(add(w, t) == add(t, w));
  CHECK(add(w, neg(w)).is_zero());
  CHECK(add(make_omega(v, 0, 2), make_omega(v, 0, -2)).is_zero());
  Element s = P("t[om(0),1]", v);
  CHECK(add(make_omega(v, 1), s) == add(s, make_omega(v, 1)));
  CHECK(add(add(neg(s), w), s) == make_int(v, 1));
}

TEST_CASE("free base words") {
  const Variant v = Variant::B;
  Element p1 = make_pi(v, 1);
  Element p2 = make_pi(v, 2);
  CHECK(add(p1, p2) != add(p2, p1));
  CHECK(add(add(p1, p2), neg(p2)) == p1);
  BasisPower w[] = {{1, 1}, {2, -1}, {2, 1}, {1, 1}};
  CHECK(make_pi(v, w) == make_pi(v, 1, 2));
  Element t = make_stable(p1, p2);
  CHECK(add(add(neg(t), make_pi(v, 1, 3)), t) == make_pi(v, 2, 3));
}
