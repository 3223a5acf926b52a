#include <algorithm>
#include <map>
#include <string>

#include "cablecone/pipeline.hpp"
#include "cablecone/reduction.hpp"
#include "harness.hpp"

namespace cablecone::verify::detail {

namespace {

constexpr double kTrefoilRunLimit = 1.0;
constexpr double kPhiGridLimit = 30.0;
constexpr double kComplexCLimit = 5.0;

Report pipeline(Int q, Int n, SurgerySpec spec) {
  PipelineInput in{"torus:2," + std::to_string(q), staircase_t2(q), n, spec, std::nullopt, false};
  return run_pipeline(in);
}

KnotComplex reduced_uv(Int q, Int n, SurgerySpec spec) {
  return to_uv_presentation(reduce(build_cone(staircase_t2(q), n, spec)));
}

std::vector<Int> trefoil_rule(Int n) {
  std::vector<Int> seq{-1};
  for (Int i = 1; i <= n - 1; ++i) seq.insert(seq.end(), {n - i + 1, 1, -1, -i - 1});
  seq.push_back(1);
  return seq;
}

Int phi_at(const PhiTable& t, Int i, Int j) {
  auto it = t.find({i, j});
  return it == t.end() ? 0 : it->second;
}

KnotComplex shifted(const KnotComplex& c, Int du, Int dv) {
  KnotComplex out;
  for (const auto& g : c.gens()) out.add_generator(g.id, g.gr_u + du, g.gr_v + dv);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k)) out.toggle_arrow(k, a.to, a.coeff);
  return out;
}

KnotComplex complex_c() {
  KnotComplex c;
  auto x1 = c.add_generator("x1", -1, 3);
  auto x2 = c.add_generator("x2", 1, -1);
  auto y1 = c.add_generator("y1", 3, -1);
  auto y2 = c.add_generator("y2", -1, 1);
  auto w1 = c.add_generator("w1", 4, 6);
  auto w2 = c.add_generator("w2", 6, 4);
  auto z = c.add_generator("z", 0, 0);
  c.toggle_arrow(x1, w1, {3, 2});
  c.toggle_arrow(x2, w1, {2, 4});
  c.toggle_arrow(x2, w2, {3, 3});
  c.toggle_arrow(y1, w2, {2, 3});
  c.toggle_arrow(y2, w1, {3, 3});
  c.toggle_arrow(y2, w2, {4, 2});
  c.toggle_arrow(z, x2, {1, 0});
  c.toggle_arrow(z, y2, {0, 1});
  return c;
}

const std::vector<XEdge> kComplexCSequence{{-1, 3, 2}, {1, 4, 2}, {1, 1, 0}, {-1, 1, 0}, {-1, 4, 2}, {1, 3, 2}};

void expect_complex_c_phi(Failures& f, const PhiTable& t, const std::string& where) {
  const PhiTable want{{{1, 0}, 1}, {{3, 2}, -1}, {{4, 2}, -1}};
  PhiTable nonzero;
  for (const auto& [k, v] : t)
    if (v != 0) nonzero[k] = v;
  f.expect(nonzero == want, where + " phi " + show(t));
}

Int ceil_half(Int a) { return -floor_div(-a, 2); }

}  // namespace

CheckResult criterion_trefoil_family() {
  return run_check("C1", "trefoil cable family standard sequences, n = 1..5", [](Failures& f) {
    const std::map<Int, std::vector<Int>> literal{
        {1, {-1, 1}}, {2, {-1, 2, 1, -1, -2, 1}}, {3, {-1, 3, 1, -1, -2, 2, 1, -1, -3, 1}}};
    for (const auto& [n, seq] : literal) f.expect(trefoil_rule(n) == seq, "rule disagrees at n=" + std::to_string(n));
    for (Int n = 1; n <= 5; ++n) {
      Stopwatch clock;
      Report r = pipeline(3, n, SurgerySpec::plus_one());
      const double t = clock.seconds();
      const std::string tag = "n=" + std::to_string(n);
      f.expect(r.standard_sequence_status == "ok", tag + " status " + r.standard_sequence_status);
      f.expect(r.standard_sequence == trefoil_rule(n), tag + " got " + show(r.standard_sequence));
      f.expect(t < kTrefoilRunLimit, tag + " took " + std::to_string(t) + " s");
    }
  });
}

CheckResult criterion_phi_grid() {
  return run_check("C2", "phi_{k+n,k} = -1 and phi_{i,k} = 0 for i > k+n", [](Failures& f) {
    Stopwatch clock;
    for (Int k = 0; k <= 2; ++k)
      for (Int n = 1; n <= 3; ++n) {
        Report r = pipeline(4 * k + 3, n, SurgerySpec::plus_one());
        const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        f.expect(r.standard_complex_x_status == "ok", tag + " status " + r.standard_complex_x_status);
        f.expect(phi_at(r.phi_ij, k + n, k) == -1, tag + " phi " + show(r.phi_ij));
        for (const auto& [key, v] : r.phi_ij)
          if (key.second == k && key.first > k + n) f.expect(v == 0, tag + " phi " + show(r.phi_ij));
      }
    f.expect(clock.seconds() < kPhiGridLimit, "grid took " + std::to_string(clock.seconds()) + " s");
  });
}

CheckResult criterion_complex_c() {
  return run_check("C3", "T(2,11) n=2 reduces to the seven-generator complex C and standardizes over X", [](Failures& f) {
    Stopwatch clock;
    const KnotComplex c = complex_c();
    f.expect(validate(c).empty(), "hand-entered complex is invalid");

    const ReducedComplex red = reduce(build_cone_truncated(staircase_t2(11), 2, 2));
    f.expect(red.complex.size() == 7, "X<2> reduces to " + std::to_string(red.complex.size()) + " generators");
    const KnotComplex k = to_uv_presentation(red);
    if (auto shift = mean_shift(c, k))
      f.expect(are_isomorphic(shifted(c, shift->first, shift->second), k), "reduced X<2> not isomorphic to C");
    else
      f.expect(false, "grading multisets of C and reduced X<2> are incompatible");

    const StandardComplexX from_c = standardize_x(c);
    f.expect(from_c.edges == kComplexCSequence, "C standardizes to " + show(from_c.edges));
    expect_complex_c_phi(f, phi_from_standard(from_c), "C");
    const StandardComplexX from_k = standardize_x(k);
    f.expect(from_k.edges == kComplexCSequence, "X<2> standardizes to " + show(from_k.edges));

    Report r = pipeline(11, 2, SurgerySpec::plus_one());
    f.expect(r.standard_complex_x == kComplexCSequence, "pipeline gives " + show(r.standard_complex_x));
    expect_complex_c_phi(f, r.phi_ij, "pipeline");
    f.expect(clock.seconds() < kComplexCLimit, "took " + std::to_string(clock.seconds()) + " s");
  });
}

CheckResult criterion_delta_shifts() {
  return run_check("C4", "filtration shifts of top generators, T(2,7) n=3", [](Failures& f) {
    constexpr Int q = 7;
    constexpr Int g = 3;
    constexpr Int n = 3;
    const FilteredComplex red =
        reduce(build_cone(staircase_t2(q), n, SurgerySpec::plus_one()), ReductionOrder::TowerLocalFirst).complex;
    const Window w = red.meta().window;
    f.expect(w.lo == 1 - g && w.hi == g + n - 1, "unexpected default window");

    std::map<Int, std::vector<std::size_t>> b_towers;
    std::map<Int, std::map<Int, std::size_t>> x_gens;  // s -> staircase index m -> generator
    for (std::size_t k = 0; k < red.size(); ++k) {
      const auto& gen = red.gen(k);
      if (gen.tower == Tower::B)
        b_towers[gen.index].push_back(k);
      else if (gen.base.front() == 'b')
        x_gens[gen.index][std::stoll(gen.base.substr(1))] = k;
    }
    std::map<Int, std::size_t> beta;
    for (Int s = w.lo + 1; s <= w.hi; ++s) {
      f.expect(b_towers[s].size() == 1, "B_" + std::to_string(s) + " keeps " + std::to_string(b_towers[s].size()));
      if (b_towers[s].size() == 1) beta[s] = b_towers[s].front();
    }

    using Delta = std::pair<Int, Int>;
    auto delta = [&](std::size_t from, std::size_t to) -> std::optional<Delta> {
      for (const auto& a : red.arrows(from))
        if (a.to == to) {
          auto [di, dj] = red.drops(from, a);
          if (dj.den() != 1) return std::nullopt;
          return Delta{di, dj.num()};
        }
      return std::nullopt;
    };
    auto show_delta = [](std::optional<Delta> d) {
      return d ? "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")" : std::string("none");
    };

    for (Int s = w.lo; s <= w.hi; ++s) {
      const std::string tag = "s=" + std::to_string(s);
      const auto& xs = x_gens[s];
      if (xs.empty()) {
        f.expect(false, tag + " has no surviving x generators");
        continue;
      }
      const Int top = xs.rbegin()->first;
      const Int bottom = xs.begin()->first;
      const bool even = s % 2 == 0;
      if (s <= g) {
        f.expect(top == (even ? (s + g + 1) / 2 : (s + g + 2) / 2), tag + " top index " + std::to_string(top));
        const Int lo = even ? (s + g + 1) / 2 - floor_div(n - 1, 2) : (s + g + 2) / 2 - ceil_half(n - 1);
        f.expect(bottom == std::max<Int>(1, lo), tag + " bottom index " + std::to_string(bottom));
      }
      if (s >= g) {
        f.expect(top == g + 1, tag + " top index " + std::to_string(top));
        f.expect(bottom == std::max<Int>(1, (g + 3) / 2 - ceil_half(n - s)), tag + " bottom index " +
                                                                               std::to_string(bottom));
      }

      const std::size_t x_top = xs.rbegin()->second;
      std::vector<std::pair<Delta, Delta>> forms;  // (to beta_s, to beta_{s+1})
      if (s <= g) {
        if (even)
          forms.push_back({{(-s + g + 1) / 2, n + (-s + g - 1) / 2}, {(s + g + 1) / 2, (s + g - 1) / 2}});
        else
          forms.push_back({{(-s + g) / 2, n + (-s + g) / 2}, {(s + g) / 2, (s + g) / 2}});
      }
      if (s >= g) forms.push_back({{0, n + g - s}, {s, g}});
      for (const auto& [own, next] : forms) {
        if (beta.count(s)) {
          auto d = delta(x_top, beta[s]);
          f.expect(d == own, tag + " delta(x_s, beta_s) " + show_delta(d));
        }
        if (beta.count(s + 1)) {
          auto d = delta(x_top, beta[s + 1]);
          f.expect(d == next, tag + " delta(x_s, beta_s+1) " + show_delta(d));
        }
      }

      for (auto it = xs.begin(); std::next(it) != xs.end(); ++it) {
        const std::size_t lower = it->second;
        const std::size_t upper = std::next(it)->second;
        for (Int t : {s, s + 1}) {
          if (!beta.count(t)) continue;
          auto dl = delta(lower, beta[t]);
          auto du = delta(upper, beta[t]);
          f.expect(dl && du && dl->first == du->first + 1 && dl->second == du->second - 1,
                   tag + " step (1,-1) fails below index " + std::to_string(std::next(it)->first));
        }
      }
    }
  });
}

CheckResult criterion_symmetry_additivity() {
  return run_check("C8", "standard complexes are symmetric; phi is additive under tensor", [](Failures& f) {
    for (const auto& item : corpus()) {
      PipelineInput in{"torus:2," + std::to_string(item.q), staircase_t2(item.q), item.n, item.spec, std::nullopt,
                       false};
      Report r = run_pipeline(in);
      f.expect(r.standard_complex_x_status == "ok", item.label() + " X status " + r.standard_complex_x_status);
      if (r.standard_complex_x_status == "ok")
        f.expect(is_symmetric(StandardComplexX{r.standard_complex_x, 0, 0}), item.label() + " X not symmetric");
      if (r.standard_sequence_status == "ok")
        f.expect(is_symmetric(StandardComplexZ{r.standard_sequence, 0, 0}), item.label() + " Z not symmetric");
    }

    struct Pair {
      std::string label;
      KnotComplex a;
      KnotComplex b;
    };
    const KnotComplex t3n2 = reduced_uv(3, 2, SurgerySpec::plus_one());
    const std::vector<Pair> pairs{
        {"T(2,3)n1 x T(2,3)n2", reduced_uv(3, 1, SurgerySpec::plus_one()), t3n2},
        {"T(2,3)n2 x T(2,7)n1", t3n2, reduced_uv(7, 1, SurgerySpec::plus_one())},
        {"T(2,3)n2 x dual", t3n2, dual(t3n2)},
    };
    for (const auto& p : pairs) {
      const KnotComplex t = tensor(p.a, p.b);
      const PhiTable want = phi_sum(phi_from_standard(standardize_x(p.a)), phi_from_standard(standardize_x(p.b)));
      const PhiTable got = phi_from_standard(standardize_x(t));
      f.expect(phi_sum(got, {}) == phi_sum(want, {}), p.label + " X: " + show(got) + " vs " + show(want));
    }
    // Over F2[U,V]/(UV) both factors of the first pair live in L-spaces.
    const KnotComplex a = reduced_uv(3, 1, SurgerySpec::plus_one());
    const KnotComplex b = reduced_uv(3, 2, SurgerySpec::plus_one());
    const PhiTable want = phi_sum(phi_from_standard(standardize_z(a)), phi_from_standard(standardize_z(b)));
    const PhiTable got = phi_from_standard(standardize_z(tensor(a, b)));
    f.expect(phi_sum(got, {}) == phi_sum(want, {}), "Z: " + show(got) + " vs " + show(want));
  });
}

CheckResult criterion_stabilization() {
  return run_check("C9", "middle tower of the T(2,3) cone is a copy of the staircase, n = 2, 3", [](Failures& f) {
    constexpr Int q = 3;
    constexpr Int g = 1;
    const KnotComplex stair = staircase_t2(q);
    for (Int n : {2, 3}) {
      const std::string tag = "n=" + std::to_string(n);
      const FilteredComplex cone = build_cone(stair, n, SurgerySpec::plus_one());
      const Int m = -floor_div(-n, 2);
      const Rational j_shift = j_constant(m, n, 1) - Rational(m);
      auto in_middle = [&](std::size_t k) { return cone.gen(k).tower == Tower::A && cone.gen(k).index == m; };

      FilteredComplex middle(cone.meta());
      std::map<std::size_t, std::size_t> slot;
      for (std::size_t k = 0; k < cone.size(); ++k) {
        if (!in_middle(k)) continue;
        const auto& gen = cone.gen(k);
        const Rational sum = Rational(gen.filt_i) + gen.filt_j - j_shift;
        f.expect(Rational(-g) <= sum && sum <= Rational(g), tag + " " + gen.id + " outside -g <= i+j <= g");
        slot[k] = middle.add_generator(gen);
      }
      for (std::size_t k = 0; k < cone.size(); ++k)
        for (const auto& a : cone.arrows(k)) {
          if (!in_middle(a.to)) continue;
          f.expect(in_middle(k), tag + " arrow into the middle tower from " + cone.gen(k).id);
          if (in_middle(k)) middle.toggle_arrow(slot.at(k), slot.at(a.to), a.u_power);
        }
      f.expect(validate(middle).empty(), tag + " middle tower is not a filtered quotient complex");
      const KnotComplex uv = to_uv_presentation(middle);
      auto shift = mean_shift(uv, stair);
      f.expect(shift && find_relabelling(uv, stair, shift->first, shift->second).has_value(),
               tag + " middle tower differs from the staircase");
    }
  });
}

}  // namespace cablecone::verify::detail
