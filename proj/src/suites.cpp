#include "nrt/suites.hpp"

#include <functional>
#include <optional>
#include <utility>

#include "nrt/error.hpp"
#include "nrt/expr.hpp"
#include "nrt/nearring.hpp"
#include "nrt/word_core.hpp"

namespace nrt {

namespace {

// Sequential draws from the element stream; positions are consumed in a
// fixed order so reports depend only on (suite, variant, config).
class Draws {
 public:
  Draws(Variant v, const SampleConfig& cfg) : variant_(v), cfg_(cfg) {}

  Element any() { return sample_element(variant_, cfg_, next_++); }

  Element nonzero() {
    for (int i = 0; i < 64; ++i) {
      Element e = any();
      if (!e.is_zero()) return e;
    }
    return unit(variant_);
  }

  std::pair<Element, Element> distinct_nonzero() {
    Element a = nonzero();
    for (int i = 0; i < 64; ++i) {
      Element b = nonzero();
      if (b != a) return {a, b};
    }
    return {a, add(a, a)};
  }

  Element w_member() { return sample_w_element(cfg_, next_++); }

 private:
  Variant variant_;
  const SampleConfig& cfg_;
  std::uint64_t next_ = 0;
};

using Inputs = std::vector<std::pair<const char*, Element>>;

std::string describe(const Inputs& inputs) {
  std::string s;
  for (const auto& [name, value] : inputs) {
    if (!s.empty()) s += "; ";
    s += std::string(name) + "=" + render(value);
  }
  return s;
}

class Recorder {
 public:
  Recorder(std::string suite, Variant v, const SampleConfig& cfg) {
    report_.suite = std::move(suite);
    report_.variant = v;
    report_.config = cfg;
  }

  void equal(const char* check, const Inputs& inputs, const Element& expected,
             const Element& got) {
    if (expected == got) return;
    report_.failures.push_back({check, describe(inputs), render(expected), render(got)});
  }

  void same_structure(const char* check, const Inputs& inputs, const Element& expected,
                      const Element& got) {
    if (identical(expected, got)) return;
    report_.failures.push_back({check, describe(inputs), render(expected), render(got)});
  }

  void differ(const char* check, const Inputs& inputs, const Element& lhs,
              const Element& rhs) {
    if (lhs != rhs) return;
    report_.failures.push_back(
        {check, describe(inputs), "distinct from " + render(rhs), render(lhs)});
  }

  void truth(const char* check, const Inputs& inputs, bool expected, bool got) {
    if (expected == got) return;
    report_.failures.push_back({check, describe(inputs), expected ? "true" : "false",
                                got ? "true" : "false"});
  }

  void fail(const char* check, const std::string& inputs, const std::string& expected,
            const std::string& got) {
    report_.failures.push_back({check, inputs, expected, got});
  }

  // Runs one case; a thrown error becomes a failure of that case.
  void run_case(const std::function<void()>& body) {
    ++report_.cases_run;
    try {
      body();
    } catch (const std::exception& e) {
      report_.failures.push_back({"exception", "case " + std::to_string(report_.cases_run),
                                  "no error", e.what()});
    }
  }

  void witness(std::string w) { report_.witnesses.push_back(std::move(w)); }

  Report finish() {
    report_.passed = report_.failures.empty();
    return std::move(report_);
  }

  Report& report() { return report_; }

 private:
  Report report_;
};

void require_variant(Variant got, Variant want, const char* suite) {
  if (got != want) {
    throw Error(ErrorKind::Usage, std::string("suite '") + suite +
                                      "' runs under variant " + to_string(want) +
                                      " only");
  }
}

}  // namespace

Report check_nearring_axioms(Variant v, const SampleConfig& cfg) {
  Recorder rec("axioms", v, cfg);
  Draws draws(v, cfg);
  const Element one = unit(v);
  const Element zero_v(v);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element a = draws.any();
    Element b = draws.any();
    Element c = draws.any();
    rec.run_case([&] {
      const Inputs in{{"a", a}, {"b", b}, {"c", c}};
      Element ac = mul(a, c);
      rec.equal("right_distributivity", in, add(ac, mul(b, c)), mul(add(a, b), c));
      rec.equal("associativity", in, mul(a, mul(b, c)), mul(mul(a, b), c));
      rec.equal("right_identity", in, a, mul(a, one));
      rec.equal("left_identity", in, a, mul(one, a));
      rec.equal("right_zero", in, zero_v, mul(a, zero_v));
      rec.equal("left_zero", in, zero_v, mul(zero_v, a));
    });
  }
  return rec.finish();
}

Report check_conjugacy(Variant v, const SampleConfig& cfg) {
  Recorder rec("conjugacy", v, cfg);
  auto check_pair = [&](const Element& alpha, const Element& beta) {
    rec.run_case([&] {
      Element t = conjugator(alpha, beta);
      rec.equal("conjugates", {{"alpha", alpha}, {"beta", beta}}, beta,
                conjugate(alpha, t));
    });
  };
  if (v == Variant::B) {
    check_pair(make_pi(v, 0), make_pi(v, 1));
  } else {
    check_pair(make_int(v, 1), make_int(v, 2));
  }
  if (v == Variant::C) check_pair(make_omega(v, 0), make_int(v, 1));
  Draws draws(v, cfg);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    auto [alpha, beta] = draws.distinct_nonzero();
    check_pair(alpha, beta);
  }
  return rec.finish();
}

Report witness_nonequiprime_B(const SampleConfig& cfg) {
  constexpr Variant v = Variant::B;
  Recorder rec("nonequiprime", v, cfg);
  const Element a = make_pi(v, 1);
  const Element b = a;
  const Element c = make_pi(v, 1, 2);
  rec.witness("a=" + render(a));
  rec.witness("b=" + render(b));
  rec.witness("c=" + render(c));
  rec.truth("b_differs_from_c", {{"b", b}, {"c", c}}, false, b == c);
  Draws draws(v, cfg);
  auto check_x = [&](const Element& x) {
    rec.run_case([&] {
      Element ax = mul(a, x);
      rec.equal("axb_equals_axc", {{"x", x}}, mul(ax, b), mul(ax, c));
    });
  };
  check_x(Element(v));
  check_x(make_pi(v, 1));
  for (std::size_t i = 0; i < cfg.count; ++i) check_x(draws.any());

  rec.run_case([&] {
    for (std::int64_t k = -3; k <= 3; ++k) {
      if (k == 0) continue;
      for (std::uint32_t iota = 0; iota <= 5; ++iota) {
        const Element g = make_pi(v, iota, k);
        const auto m = mu(g);
        if (m != iota) {
          rec.fail("mu_grid", "gamma=" + render(g), std::to_string(iota), std::to_string(m));
        }
      }
    }
  });
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element gamma = draws.nonzero();
    Element x = draws.nonzero();
    rec.run_case([&] {
      const auto want = mu(gamma) + mu(x);
      const auto got = mu(f_eval(gamma, x));
      if (want != got) {
        rec.fail("mu_additive", describe({{"gamma", gamma}, {"x", x}}), std::to_string(want),
                 std::to_string(got));
      }
    });
  }
  return rec.finish();
}

Report witness_nonequiprime_C(const SampleConfig& cfg, std::int64_t zeta1,
                              std::int64_t zeta2) {
  constexpr Variant v = Variant::C;
  if (zeta1 == 0 || zeta1 == 1 || zeta2 == 0 || zeta2 == 1 || zeta1 == zeta2) {
    throw Error(ErrorKind::Usage,
                "zeta1 and zeta2 must be distinct integers outside {0, 1}");
  }
  Recorder rec("nonequiprime", v, cfg);
  const Element w0 = make_omega(v, 0);
  const Element z1 = make_int(v, zeta1);
  const Element z2 = make_int(v, zeta2);
  rec.witness("a=" + render(w0));
  rec.witness("zeta1=" + render(z1));
  rec.witness("zeta2=" + render(z2));
  rec.truth("zeta1_differs_from_zeta2", {{"zeta1", z1}, {"zeta2", z2}}, false, z1 == z2);
  Draws draws(v, cfg);
  auto check_tau = [&](const Element& tau) {
    rec.run_case([&] {
      Element lhs_base = mul(w0, tau);
      rec.equal("om0_tau_zeta", {{"tau", tau}}, mul(lhs_base, z1), mul(lhs_base, z2));
    });
  };
  check_tau(Element(v));
  check_tau(make_stable(make_int(v, 1), make_int(v, 2)));
  for (std::size_t i = 0; i < cfg.count; ++i) check_tau(draws.any());

  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element zeta = draws.nonzero();
    rec.run_case([&] {
      for (std::uint32_t j = 0; j <= 4; ++j) {
        const Element w = make_omega(v, j);
        const auto shifted = static_cast<std::uint32_t>(level(zeta)) + j;
        rec.equal("omega_shift", {{"zeta", zeta}, {"x", w}}, make_omega(v, shifted),
                  f_eval(zeta, w));
      }
    });
  }
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element lambda = draws.nonzero();
    const std::int64_t zs[2] = {zeta1, zeta2};
    const Element zeta = make_int(v, zs[i % 2]);
    rec.run_case([&] {
      const int got = level(f_eval(zeta, lambda));
      if (got != level(lambda)) {
        rec.fail("same_layer", describe({{"zeta", zeta}, {"lambda", lambda}}),
                 std::to_string(level(lambda)), std::to_string(got));
      }
    });
  }
  return rec.finish();
}

Report check_equiprime_instances_A(const SampleConfig& cfg) {
  constexpr Variant v = Variant::A;
  Recorder rec("equiprime", v, cfg);
  const Element x = make_stable(make_int(v, 1), make_int(v, -1));
  rec.witness("x=" + render(x));
  for (std::int64_t n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    rec.run_case([&] {
      Element b = make_int(v, n);
      rec.equal("x_times_b", {{"b", b}}, make_stable(b, neg(b)), mul(x, b));
    });
  }
  Draws draws(v, cfg);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element a = draws.nonzero();
    auto [b, c] = draws.distinct_nonzero();
    rec.run_case([&] {
      const Inputs in{{"a", a}, {"b", b}, {"c", c}};
      Element xb = mul(x, b);
      Element xc = mul(x, c);
      rec.equal("x_times_b", in, make_stable(b, neg(b)), xb);
      rec.equal("x_times_c", in, make_stable(c, neg(c)), xc);
      rec.differ("x_distinguishes", in, mul(a, xb), mul(a, xc));
    });
  }
  return rec.finish();
}

Report check_invariant_subgroups(Variant v, const SampleConfig& cfg) {
  if (v == Variant::A) {
    throw Error(ErrorKind::Usage, "suite 'invariant' runs under variants B and C");
  }
  Recorder rec("invariant", v, cfg);
  Draws draws(v, cfg);
  if (v == Variant::B) {
    const Element p0 = make_pi(v, 0);
    const Element p1 = make_pi(v, 1);
    rec.truth("proper", {{"x", p0}}, false, in_W(p0));
    rec.truth("nontrivial", {{"x", p1}}, true, in_W(p1));
    rec.witness("pi(0) in W*: false");
    rec.witness("pi(1) in W*: true");
    auto check = [&](const Element& w, const Element& gamma) {
      rec.run_case([&] {
        const Inputs in{{"w", w}, {"gamma", gamma}};
        rec.truth("sample_in_W", in, true, in_W(w));
        rec.truth("left_invariant", in, true, in_W(mul(gamma, w)));
        rec.truth("right_invariant", in, true, in_W(mul(w, gamma)));
      });
    };
    check(p1, add(p0, make_pi(v, 2)));
    for (std::size_t i = 0; i < cfg.count; ++i) {
      Element w = draws.w_member();
      check(w, draws.nonzero());
    }
    return rec.finish();
  }

  const Element w0 = make_omega(v, 0);
  const Element one = unit(v);
  rec.truth("nontrivial", {{"x", w0}}, true, in_H(w0, w0));
  const bool one_inside = in_H(w0, one);
  rec.witness(std::string("1 in H*(om(0)): ") + (one_inside ? "true" : "false"));
  rec.witness("om(0) in H*(om(0)): true");
  auto check = [&](const Element& y, const Element& gamma) {
    rec.run_case([&] {
      Element h = f_eval(w0, y);
      const Inputs in{{"y", y}, {"h", h}, {"gamma", gamma}};
      auto back = preimage(w0, h);
      rec.equal("preimage_round_trip", in, y, back ? *back : Element(v));
      if (!back) rec.fail("preimage_found", describe(in), render(y), "none");
      rec.truth("left_invariant", in, true, in_H(w0, mul(gamma, h)));
      rec.truth("right_invariant", in, true, in_H(w0, mul(h, gamma)));
    });
  };
  check(one, make_stable(make_int(v, 1), make_int(v, 2)));
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element y = draws.any();
    check(y, draws.nonzero());
  }
  return rec.finish();
}

Report find_left_distrib_counterexample(Variant v, const SampleConfig& cfg) {
  Recorder rec("left-distrib", v, cfg);
  Draws draws(v, cfg);
  bool found = false;
  for (std::size_t i = 0; i < cfg.count && !found; ++i) {
    Element a = draws.any();
    Element b = draws.any();
    Element c = draws.any();
    rec.run_case([&] {
      Element lhs = mul(c, add(a, b));
      Element rhs = add(mul(c, a), mul(c, b));
      if (lhs != rhs) {
        found = true;
        rec.witness("a=" + render(a));
        rec.witness("b=" + render(b));
        rec.witness("c=" + render(c));
        rec.witness("c(a+b)=" + render(lhs));
        rec.witness("ca+cb=" + render(rhs));
      }
    });
  }
  if (!found) {
    rec.fail("left_distributivity_counterexample", "",
             "a triple with c(a+b) != ca+cb",
             "none in " + std::to_string(rec.report().cases_run) + " samples");
  }
  return rec.finish();
}

Report check_britton_engine(Variant v, const SampleConfig& cfg) {
  Recorder rec("britton", v, cfg);
  Draws draws(v, cfg);
  const Element zero_v(v);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element a = draws.any();
    Element b = draws.any();
    Element c = draws.any();
    auto [alpha, beta] = draws.distinct_nonzero();
    const std::int64_t k = static_cast<std::int64_t>(i % 13) - 6;
    rec.run_case([&] {
      const Inputs in{{"a", a}, {"b", b}, {"c", c}};
      rec.same_structure("idempotent", in, a, renormalize(a));
      rec.equal("associative", in, add(add(a, b), c), add(a, add(b, c)));
      rec.equal("right_inverse", in, zero_v, add(a, neg(a)));
      rec.equal("left_inverse", in, zero_v, add(neg(a), a));
      rec.equal("scalar_matches_repeated_add", in, repeated_add(k, a), scalar(k, a));
      rec.same_structure("text_round_trip", in, a, parse_element(render(a), v));
      const Element t = make_stable(alpha, beta);
      const Inputs rel{{"alpha", alpha}, {"beta", beta}};
      for (std::int64_t m = -5; m <= 5; ++m) {
        const Element lhs[3] = {neg(t), repeated_add(m, alpha), t};
        rec.equal("relation", rel, repeated_add(m, beta), sum(lhs));
      }
    });
  }
  return rec.finish();
}

Report check_power_oracle(Variant v, const SampleConfig& cfg) {
  Recorder rec("power", v, cfg);
  Draws draws(v, cfg);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Element alpha = draws.nonzero();
    Element g(v);
    const std::int64_t k = static_cast<std::int64_t>(i / 5 % 13) - 6;
    switch (i % 5) {
      case 0:
        g = repeated_add(k, alpha);
        ++positives;
        break;
      case 1:
        g = add(repeated_add(k, alpha), draws.nonzero());
        break;
      case 2:
        g = conjugate(repeated_add(k, alpha), draws.nonzero());
        break;
      default:
        g = draws.any();
        break;
    }
    rec.run_case([&] {
      const Inputs in{{"g", g}, {"alpha", alpha}};
      std::optional<std::int64_t> brute;
      for (std::int64_t m = -6; m <= 6 && !brute; ++m) {
        if (repeated_add(m, alpha) == g) brute = m;
      }
      auto fast = power_of(g, alpha);
      auto show = [](const std::optional<std::int64_t>& x) {
        return x ? std::to_string(*x) : std::string("none");
      };
      if (brute) {
        if (fast != brute) rec.fail("agrees_with_brute_force", describe(in), show(brute), show(fast));
      } else if (fast) {
        const bool outside = *fast < -6 || *fast > 6;
        if (!outside || repeated_add(*fast, alpha) != g) {
          rec.fail("agrees_with_brute_force", describe(in), "none", show(fast));
        }
      }
    });
  }
  rec.witness("constructed positives: " + std::to_string(positives));
  return rec.finish();
}

std::vector<std::string> suite_names() {
  return {"axioms", "conjugacy", "nonequiprime", "equiprime", "invariant",
          "left-distrib", "britton", "power"};
}

Report run_suite(std::string_view name, Variant v, const SampleConfig& cfg,
                 std::int64_t zeta1, std::int64_t zeta2) {
  if (name == "axioms") return check_nearring_axioms(v, cfg);
  if (name == "conjugacy") return check_conjugacy(v, cfg);
  if (name == "nonequiprime") {
    if (v == Variant::B) return witness_nonequiprime_B(cfg);
    if (v == Variant::C) return witness_nonequiprime_C(cfg, zeta1, zeta2);
    throw Error(ErrorKind::Usage, "suite 'nonequiprime' runs under variants B and C");
  }
  if (name == "equiprime") {
    require_variant(v, Variant::A, "equiprime");
    return check_equiprime_instances_A(cfg);
  }
  if (name == "invariant") return check_invariant_subgroups(v, cfg);
  if (name == "left-distrib") return find_left_distrib_counterexample(v, cfg);
  if (name == "britton") return check_britton_engine(v, cfg);
  if (name == "power") return check_power_oracle(v, cfg);
  throw Error(ErrorKind::Usage, "unknown suite '" + std::string(name) + "'");
}

}  // namespace nrt
