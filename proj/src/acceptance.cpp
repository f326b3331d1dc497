#include "cinfty/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "cinfty/geometry.hpp"
#include "cinfty/integrate.hpp"
#include "cinfty/kaehler.hpp"
#include "cinfty/parse.hpp"
#include "cinfty/random_gen.hpp"

namespace cinfty {

namespace {

using Kind = Verdict::Kind;

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    if (r_.failures++ == 0) r_.detail = what;
  }

  // Runs body; an exception counts as one failed check.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

 private:
  CriterionResult& r_;
};

SmoothExpr x(int i) { return SmoothExpr::var(i); }
SmoothExpr q(long num, long den = 1) { return SmoothExpr::constant(Rational(num, den)); }
Ring cross_ring() { return present_ring(2, {parse("x1*x2", 2)}); }
Ring circle_ring() { return present_ring(2, {parse("x1^2 + x2^2 - 1", 2)}); }

Form random_form(gen::Rng& rng, const Ring& r, int k, bool transcendental) {
  Form out(r, k);
  for (const MultiIndex& idx : multi_indices(r->n(), k)) {
    SmoothExpr c = transcendental ? gen::random_smooth(rng, r->n(), 2) : gen::random_polynomial(rng, r->n(), 2);
    out.add_term(idx, element(r, c));
  }
  return out;
}

std::string ring_label(const Ring& r) {
  std::string out = "C(R^" + std::to_string(r->n()) + ")";
  for (std::size_t i = 0; i < r->generators().size(); ++i) out += (i ? ", " : "/<") + to_string(r->generators()[i]);
  return r->generators().empty() ? out : out + ">";
}

// Cofactor degree bound for comparing two forms: at least 6, and at least the
// degree of the polynomial coefficients of the difference.
int law_degree_bound(const Form& diff) {
  int bound = 6;
  for (const auto& [idx, f] : diff.terms()) {
    if (is_polynomial(f.rep())) bound = std::max(bound, to_poly(f.rep(), diff.ring()->n()).degree());
  }
  return bound;
}

Verdict law_verdict(const Form& a, const Form& b) {
  const Form diff = a - b;
  if (diff.is_zero_rep()) {
    Verdict v;
    v.kind = Kind::ProvedEqual;
    v.reason = "difference reduces to zero";
    return v;
  }
  return form_equal(a, b, law_degree_bound(diff));
}

// Endomorphisms used for the pullback laws.
RingHom random_endomorphism(gen::Rng& rng, const Ring& r) {
  if (r->is_free()) {
    std::vector<RingElement> images;
    for (int i = 0; i < r->n(); ++i) images.push_back(element(r, gen::random_polynomial(rng, r->n(), 2, 3, 2)));
    return hom(r, r, std::move(images));
  }
  if (r->generators()[0] == normalize(x(1) * x(2))) {
    // (x1, x2) -> (x1 p, x2 q) keeps x1 x2 in the ideal.
    SmoothExpr p = gen::random_polynomial(rng, 2, 1, 2, 2), s = gen::random_polynomial(rng, 2, 1, 2, 2);
    return hom(r, r, {element(r, x(1) * p), element(r, x(2) * s)});
  }
  // Circle: rotations by Pythagorean angles, a reflection, the double-angle map.
  switch (rng.uniform_int(0, 3)) {
    case 0:
      return hom(r, r, {element(r, q(3, 5) * x(1) - q(4, 5) * x(2)), element(r, q(4, 5) * x(1) + q(3, 5) * x(2))});
    case 1:
      return hom(r, r, {element(r, q(5, 13) * x(1) + q(12, 13) * x(2)), element(r, q(5, 13) * x(2) - q(12, 13) * x(1))});
    case 2:
      return hom(r, r, {element(r, x(2)), element(r, x(1))});
    default:
      return hom(r, r, {element(r, x(1) * x(1) - x(2) * x(2)), element(r, q(2) * x(1) * x(2))});
  }
}

void criterion_xy(Checker& c, std::uint64_t) {
  Ring cross = cross_ring();
  c.guarded("d(x1 x2) in J", [&] {
    OneForm w = one_form(cross, {coordinate(cross, 2), coordinate(cross, 1)});
    Verdict v = oneform_equal(w, one_form(cross, {ring_constant(cross, 0), ring_constant(cross, 0)}));
    c.check(v.kind == Kind::ProvedEqual, "x2 dx1 + x1 dx2 vs 0 gave " + to_string(v.kind));
  });
  const OneForm x1dx2 = one_form(cross, {ring_constant(cross, 0), coordinate(cross, 1)});
  c.guarded("x1 dx2 not in J", [&] {
    Verdict v = oneform_member_J(x1dx2, 6);
    c.check(v.kind == Kind::NotMemberUpToDegree && v.degree_bound == 6,
            "x1 dx2 membership gave " + to_string(v.kind));
  });
  c.guarded("contractions", [&] {
    const std::vector<Derivation> basis = enumerate_tangent_derivations(cross, 4);
    c.check(!basis.empty(), "no tangent derivations enumerated");
    for (const Derivation& v : basis) {
      const RingElement k = contract(v, x1dx2);
      Verdict m = ideal_member(cross, k.rep(), 4);
      c.check(k.is_zero_rep() || m.kind == Kind::ProvedEqual, "contraction " + to_string(k.rep()) + " not in <x1 x2>");
    }
  });
}

void criterion_free_kaehler(Checker& c, std::uint64_t seed) {
  for (int n = 1; n <= 5; ++n) {
    c.guarded("free presentation", [&] {
      KaehlerPresentation p = kaehler_presentation(free_ring(n));
      c.check(p.module.rank == n && p.module.relations.empty(),
              "free ring n=" + std::to_string(n) + " has rank " + std::to_string(p.module.rank));
    });
  }
  gen::Rng rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    c.guarded("chain rule", [&] {
      const int n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 3);
      Ring r = free_ring(n);
      const SmoothExpr f = gen::random_polynomial(rng, m, 3);
      std::vector<RingElement> args;
      for (int i = 0; i < m; ++i) args.push_back(element(r, gen::random_polynomial(rng, n, 2)));
      const OneForm lhs = d0(apply_op(r, f, args));
      OneForm rhs = one_form(r, std::vector<RingElement>(static_cast<std::size_t>(n), ring_constant(r, 0)));
      for (int i = 1; i <= m; ++i) {
        rhs = rhs + apply_op(r, partial(f, i, m), args) * d0(args[static_cast<std::size_t>(i) - 1]);
      }
      bool same = true;
      for (int i = 0; i < n; ++i) same = same && (lhs.coeffs[static_cast<std::size_t>(i)] - rhs.coeffs[static_cast<std::size_t>(i)]).is_zero_rep();
      c.check(same, "chain rule fails for f = " + to_string(f));
    });
  }
}

void criterion_cdga(Checker& c, std::uint64_t seed) {
  const std::vector<Ring> rings = {free_ring(3), cross_ring(), circle_ring()};
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const Ring& r = rings[i];
    for (const SuiteResult& suite :
         identity_suites(r, seed + i, 100, [&r](gen::Rng& rng) { return random_endomorphism(rng, r); })) {
      if (suite.name == "chain_rule") continue;  // criterion 2
      for (int k = 0; k < suite.checks; ++k) {
        c.check(k >= suite.failures, suite.name + " over " + ring_label(r) + ": " + suite.first_failure);
      }
    }
  }
}

void criterion_stokes(Checker& c, std::uint64_t seed) {
  gen::Rng rng(seed);
  Ring free2 = free_ring(2), free3 = free_ring(3), circle = circle_ring();
  auto t = [](const std::string& text, int k) { return parse(text, k, 't'); };
  auto run = [&](const std::string& label, const SimplexMap& s, const Form& gamma) {
    c.guarded(label, [&] {
      StokesReport rep = stokes_check(s, gamma, 1e-6);
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: residual %.3g", label.c_str(), rep.residual);
      c.check(rep.pass, buf);
    });
  };
  int cases = 0;
  c.guarded("triangle", [&] {
    StokesReport rep = stokes_check(identity_simplex(2), parse_form("x1 * dx2", chart_ring(2)), 1e-6);
    ++cases;
    c.check(std::abs(rep.lhs - 0.5) <= 1e-8 && std::abs(rep.rhs - 0.5) <= 1e-8 && rep.pass,
            "triangle example sides differ from 0.5");
  });
  for (int i = 0; i < 7; ++i, ++cases) {
    const SmoothExpr quarter = q(1, 4);
    SimplexMap s = simplex_map(2, free2, {x(1) + quarter * gen::random_polynomial(rng, 2, 2),
                                          x(2) + quarter * gen::random_polynomial(rng, 2, 2)});
    run("polynomial map " + std::to_string(i), s, random_form(rng, free2, 1, i % 2 == 1));
  }
  for (int i = 0; i < 6; ++i, ++cases) {
    const std::string theta =
        std::to_string(rng.uniform_int(1, 3)) + "*t1 + " + std::to_string(rng.uniform_int(-2, 2)) + "*t2^2 + t1*t2";
    SimplexMap s = simplex_map(2, circle, {t("cos(" + theta + ")", 2), t("sin(" + theta + ")", 2)});
    run("circle 2-simplex " + std::to_string(i), s, random_form(rng, circle, 1, i % 2 == 0));
  }
  for (int i = 0; i < 3; ++i, ++cases) {
    SimplexMap s = simplex_map(1, circle, {t("cos(2*pi*t1)", 1), t("sin(2*pi*t1)", 1)});
    run("circle loop " + std::to_string(i), s, random_form(rng, circle, 0, true));
  }
  for (int i = 0; i < 3; ++i, ++cases) {
    SimplexMap s = simplex_map(3, free3, {t("t1 + t2*t3", 3), t("t2 - t1^2", 3), t("t3 + t1*t2", 3)});
    run("3-simplex " + std::to_string(i), s, random_form(rng, free3, 2, i == 2));
  }
  c.check(cases == 20, "suite does not have 20 cases");
  for (int k = 2; k <= 4; ++k) {
    c.guarded("boundary squared", [&] {
      c.check(boundary(boundary(Chain(identity_simplex(k)))).empty(), "boundary of boundary nonzero at k=" + std::to_string(k));
    });
  }
}

void criterion_square_zero(Checker& c, std::uint64_t seed) {
  gen::Rng rng(seed);
  Ring cross = cross_ring();
  SquareZeroRing s(free_module(cross, 2));
  auto rnd = [&] { return element(cross, gen::random_polynomial(rng, 2, 2)); };
  const RingElement zero = ring_constant(cross, 0);
  for (int trial = 0; trial < 50; ++trial) {
    c.guarded("square zero", [&] {
      auto m1 = s.make(zero, {rnd(), rnd()}), m2 = s.make(zero, {rnd(), rnd()});
      c.check(s.equal(s.multiply(m1, m2), s.make(zero, zero_element(s.module()))).kind == Kind::ProvedEqual,
              "(0,m)(0,m') != 0");
      RingElement a = rnd(), b = rnd();
      ModuleElement m = {rnd(), rnd()}, n = {rnd(), rnd()};
      auto u = s.make(a, m), v = s.make(b, n);
      auto via_op = s.apply_op(x(1) * x(2), {u, v});
      auto expected = s.make(a * b, {a * n[0] + b * m[0], a * n[1] + b * m[1]});
      c.check(s.equal(via_op, expected).kind == Kind::ProvedEqual, "f(x,y)=xy does not give the product formula");
    });
  }
}

void criterion_recip(Checker& c, std::uint64_t seed) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    c.guarded("recip", [&] {
      const int n = 3;
      const SmoothExpr a = gen::random_nonvanishing(rng, n);
      const SmoothExpr inv = SmoothExpr::recip(a);
      // w = sum_i c_i d/dx_i with polynomial coefficients.
      std::vector<SmoothExpr> coeffs;
      for (int i = 0; i < n; ++i) coeffs.push_back(gen::random_polynomial(rng, n, 1, 2, 2));
      auto w = [&](const SmoothExpr& f) {
        SmoothExpr out = q(0);
        for (int i = 1; i <= n; ++i) out = out + coeffs[static_cast<std::size_t>(i) - 1] * partial(f, i, n);
        return out;
      };
      const SmoothExpr lhs = w(inv) + SmoothExpr::pow(inv, 2) * w(a);
      c.check(normalize(lhs).is_zero(), "w(1/a) + (1/a)^2 w(a) does not vanish for a = " + to_string(a));
    });
  }
}

void criterion_bump(Checker& c, std::uint64_t seed) {
  gen::Rng rng(seed);
  const Point center = {0.25, -0.5};
  const double r_in = 0.5, r_out = 1.0;
  std::vector<Point> closed;
  while (closed.size() < 200) {
    Point p = gen::random_point(rng, 2, -3, 3);
    if (std::hypot(p[0] - center[0], p[1] - center[1]) >= r_out) closed.push_back(p);
  }
  c.guarded("bump", [&] {
    const SmoothExpr tau = bump(2, closed, center, r_in, r_out);
    for (int k = 0; k < 1000; ++k) {
      const double v = evaluate(tau, gen::random_point(rng, 2, -3, 3));
      c.check(v >= -1e-12 && v <= 1 + 1e-12, "bump leaves [0, 1]");
    }
    for (int k = 0; k < 100; ++k) {
      const double rad = r_in * std::sqrt(rng.uniform(0, 1)), ang = rng.uniform(0, 2 * std::numbers::pi);
      const Point p = {center[0] + rad * std::cos(ang), center[1] + rad * std::sin(ang)};
      c.check(std::abs(evaluate(tau, p) - 1.0) <= 1e-12, "bump is not 1 on the inner ball");
    }
    for (const Point& p : closed) c.check(std::abs(evaluate(tau, p)) <= 1e-12, "bump is not 0 on the closed set");
  });
}

BasicOpen arc(double theta, double w) {
  return BasicOpen{{normalize(SmoothExpr::constant(Rational(std::cos(theta))) * x(1) +
                              SmoothExpr::constant(Rational(std::sin(theta))) * x(2) -
                              SmoothExpr::constant(Rational(std::cos(w))))}};
}

void criterion_sheaf(Checker& c, std::uint64_t seed) {
  gen::Rng rng(seed);
  Space circle = make_space(circle_ring());
  const double third = 2 * std::numbers::pi / 3;
  const std::vector<BasicOpen> arcs = {arc(0, 1.3), arc(third, 1.3), arc(2 * third, 1.3)};
  for (int trial = 0; trial < 5; ++trial) {
    c.guarded("consistent glue", [&] {
      Section top = section(circle, whole_space(), gen::random_smooth(rng, 2, 2));
      std::vector<Section> family;
      for (const BasicOpen& a : arcs) family.push_back(presheaf_restrict(top, open_set(a)));
      GlueResult g = glue(family);
      c.check(g.max_overlap_disagreement == 0.0, "consistent family has overlap disagreement");
      for (const Point& p : circle->samples()) {
        c.check(std::abs(g.section(p) - top(p)) <= 1e-9 * (1 + std::abs(top(p))), "glued section differs");
      }
    });
  }
  c.guarded("inconsistent glue", [&] {
    std::vector<Section> family = {section(circle, open_set(arcs[0]), x(1)), section(circle, open_set(arcs[1]), x(1)),
                                   section(circle, open_set(arcs[2]), x(1) + q(1, 4))};
    try {
      glue(family);
      c.check(false, "inconsistent family was glued");
    } catch (const IncompatibleFamily& e) {
      c.check(!e.witness.empty() && arcs[2].contains(e.witness), "rejection carries no usable witness");
    }
  });
  Space plane = make_space(free_ring(2));
  for (int trial = 0; trial < 20; ++trial) {
    c.guarded("germ invert", [&] {
      const Space& s = trial % 2 ? circle : plane;
      SmoothExpr e = gen::random_nonvanishing(rng, 2);
      if (rng.uniform_int(0, 1)) e = -e;
      const Point base = s->samples()[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(s->samples().size()) - 1))];
      GermRep g = germ(section(s, whole_space(), e), base);
      GermRep inv = germ_invert(g);
      const auto pts = neighborhood_points(*s, base, 0.25, inv.section.open);
      c.check(!pts.empty(), "no neighbourhood samples");
      for (const Point& p : pts) {
        c.check(std::abs(inv.section(p) * g.section(p) - 1.0) <= 1e-10, "germ times its inverse is not 1");
      }
    });
  }
}

void criterion_functoriality(Checker& c, std::uint64_t seed) {
  gen::Rng rng(seed);
  Space line = make_space(free_ring(1), {{-3, 3}});
  Space circle = make_space(circle_ring());
  c.guarded("ringed maps", [&] {
    RingedMap f = ringed_map({parse("cos(x1)", 1), parse("sin(x1)", 1)}, line, circle);
    RingedMap g = ringed_map({parse("x1^2 - x2^2", 2), parse("2*x1*x2", 2)}, circle, circle);
    RingedMap gf = compose(g, f);
    for (int trial = 0; trial < 20; ++trial) {
      Section h = section(circle, whole_space(), gen::random_smooth(rng, 2, 2));
      Section lhs = gf.pull(h), rhs = f.pull(g.pull(h));
      Section psi = f.pull(h);
      for (const Point& p : line->samples()) {
        c.check(std::abs(lhs(p) - rhs(p)) <= 1e-10 * (1 + std::abs(rhs(p))), "I(g o f) != I(f) I(g)");
        const double direct = h(f(p));
        c.check(std::abs(psi(p) - direct) <= 1e-10 * (1 + std::abs(direct)), "psi(h) != h o f");
      }
    }
  });
}

struct Entry {
  const char* name;
  double limit;
  void (*run)(Checker&, std::uint64_t);
};

const Entry kEntries[kCriterionCount] = {
    {"xy=0 example suite", 5, criterion_xy},
    {"free-ring Kähler module and chain rule", 5, criterion_free_kaehler},
    {"CDGA laws", 30, criterion_cdga},
    {"Stokes suite and boundary squared", 60, criterion_stokes},
    {"square-zero extension", 60, criterion_square_zero},
    {"derivative of an inverse", 60, criterion_recip},
    {"bump functions", 60, criterion_bump},
    {"sheaf gluing and germ inversion", 60, criterion_sheaf},
    {"ringed-space functoriality", 60, criterion_functoriality},
};

}  // namespace

std::vector<SuiteResult> identity_suites(const Ring& ring, std::uint64_t seed, int trials, const Endomorphisms& endo) {
  gen::Rng rng(seed);
  const int n = ring->n();
  // Transcendental coefficients only over the free ring, where every check stays exact.
  const bool trans = ring->is_free();
  const Ring source = free_ring(n);
  std::vector<SuiteResult> out(6);
  const char* names[] = {"d_squared",  "graded_leibniz", "graded_commutativity",
                         "chain_rule", "pullback_cdga",  "pullback_functor"};
  for (int i = 0; i < 6; ++i) out[i].name = names[i];
  auto record = [](SuiteResult& s, const Verdict& v, const std::string& what) {
    ++s.checks;
    ++s.verdicts[to_string(v.kind)];
    if (v.kind == Kind::ProvedEqual) return;
    if (s.failures++ == 0) s.first_failure = what + " (" + to_string(v.kind) + ")";
  };
  auto guarded = [](SuiteResult& s, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++s.checks;
      ++s.verdicts["Error"];
      if (s.failures++ == 0) s.first_failure = e.what();
    }
  };
  // Homs from free rings are well defined for any images, so they serve
  // every presentation when no endomorphisms are supplied.
  auto free_hom = [&](const Ring& from, const Ring& to) {
    std::vector<RingElement> images;
    for (int i = 0; i < from->n(); ++i) images.push_back(element(to, gen::random_polynomial(rng, to->n(), 2, 3, 2)));
    return RingHom(from, to, std::move(images));
  };

  for (int trial = 0; trial < trials; ++trial) {
    const int p = rng.uniform_int(0, n), s = rng.uniform_int(0, n);
    const bool t = trans && trial % 2 == 1;
    guarded(out[0], [&] {
      Form a = random_form(rng, ring, p, t);
      record(out[0], law_verdict(d(d(a)), zero_form(ring, p + 2)), "d(d(a)) for a = " + to_string(a));
    });
    guarded(out[1], [&] {
      Form a = random_form(rng, ring, p, t), b = random_form(rng, ring, s, t);
      Form rhs = wedge(d(a), b) + (p % 2 == 0 ? wedge(a, d(b)) : -wedge(a, d(b)));
      record(out[1], law_verdict(d(wedge(a, b)), rhs), "d(a^b) for a = " + to_string(a) + ", b = " + to_string(b));
    });
    guarded(out[2], [&] {
      Form a = random_form(rng, ring, p, t), b = random_form(rng, ring, s, t);
      Form ab = wedge(a, b);
      record(out[2], law_verdict(wedge(b, a), (p * s) % 2 == 0 ? ab : -ab), "b^a for a = " + to_string(a));
    });
    guarded(out[3], [&] {
      const int m = rng.uniform_int(1, 3);
      const SmoothExpr f = t ? gen::random_smooth(rng, m, 2) : gen::random_polynomial(rng, m, 3);
      std::vector<RingElement> args;
      for (int i = 0; i < m; ++i) args.push_back(element(ring, gen::random_polynomial(rng, n, 2)));
      Form rhs = zero_form(ring, 1);
      for (int i = 1; i <= m; ++i) {
        rhs = rhs + apply_op(ring, partial(f, i, m), args) * from_one_form(d0(args[static_cast<std::size_t>(i) - 1]));
      }
      record(out[3], law_verdict(from_one_form(d0(apply_op(ring, f, args))), rhs), "chain rule for f = " + to_string(f));
    });
    guarded(out[4], [&] {
      const RingHom phi = endo ? endo(rng) : free_hom(source, ring);
      const Ring& from = phi.source();
      const int q = std::min(p, from->n()), r2 = std::min(s, from->n());
      Form a = random_form(rng, from, q, t), b = random_form(rng, from, r2, t);
      record(out[4], law_verdict(pullback(phi, d(a)), d(pullback(phi, a))), "pullback of d(a), a = " + to_string(a));
      record(out[4], law_verdict(pullback(phi, wedge(a, b)), wedge(pullback(phi, a), pullback(phi, b))),
             "pullback of a^b, a = " + to_string(a));
    });
    guarded(out[5], [&] {
      // phi: A -> B and psi: B -> ring; the pullback along psi o phi is psi* o phi*.
      RingHom psi = endo ? endo(rng) : free_hom(source, ring);
      RingHom phi = endo ? endo(rng) : free_hom(free_ring(n), psi.source());
      Form a = random_form(rng, phi.source(), std::min(p, n), t);
      record(out[5], law_verdict(pullback(hom_compose(psi, phi), a), pullback(psi, pullback(phi, a))),
             "pullback functor for a = " + to_string(a));
      Form e = random_form(rng, ring, p, t);
      record(out[5], law_verdict(pullback(identity_hom(ring), e), e), "identity pullback of " + to_string(e));
    });
  }
  return out;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw IndexError("criterion id out of range");
  const Entry& entry = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = entry.name;
  r.time_limit = entry.limit;
  Checker c(r);
  const auto start = std::chrono::steady_clock::now();
  c.guarded("criterion", [&] { entry.run(c, seed + static_cast<std::uint64_t>(id)); });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.failures == 0 && r.checks > 0 && r.seconds <= r.time_limit;
  if (r.failures == 0 && r.seconds > r.time_limit) r.detail = "time limit exceeded";
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s [%d] %s: %d checks, %d failed (%.2f s / %.0f s)", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.checks, r.failures, r.seconds, r.time_limit);
  std::string out = buf;
  if (!r.detail.empty()) out += " - " + r.detail;
  return out;
}

}  // namespace cinfty
