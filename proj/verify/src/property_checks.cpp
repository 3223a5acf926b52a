#include <set>
#include <string>

#include "cablecone/pipeline.hpp"
#include "cablecone/reduction.hpp"
#include "harness.hpp"

namespace cablecone::verify::detail {

namespace {

constexpr double kPropertyLimit = 120.0;

void check_levels(Failures& f, const FilteredComplex& cone, const std::string& tag) {
  const Int n = cone.meta().n;
  const Int p = cone.meta().surgery.p;
  std::set<Rational> a_levels;
  for (const auto& gen : cone.gens()) {
    const Rational level = gen.filt_j - Rational(gen.filt_i) - j_constant(gen.index, n, p);
    if (gen.tower == Tower::B) {
      f.expect(level == Rational(-n), tag + " " + gen.id + " off the B level");
    } else {
      f.expect(Rational(-n) <= level && level <= Rational(0), tag + " " + gen.id + " outside the n+1 levels");
      a_levels.insert(level);
    }
  }
  if (cone.meta().genus >= 1)
    f.expect(a_levels.size() == static_cast<std::size_t>(n + 1),
             tag + " A slices span " + std::to_string(a_levels.size()) + " levels");
}

}  // namespace

CheckResult criterion_properties() {
  return run_check("C5", "cone and reduction invariants over the corpus", [](Failures& f) {
    Stopwatch clock;
    for (const auto& item : corpus()) {
      const std::string tag = item.label();
      const FilteredComplex cone = build_cone(staircase_t2(item.q), item.n, item.spec);
      for (const auto& v : validate(cone)) f.expect(false, tag + " cone: " + v);
      check_levels(f, cone, tag);

      const ReducedComplex red = reduce(cone);
      for (const auto& v : validate(red.complex)) f.expect(false, tag + " reduced: " + v);
      for (std::size_t k = 0; k < red.complex.size(); ++k)
        for (const auto& a : red.complex.arrows(k)) {
          auto [di, dj] = red.complex.drops(k, a);
          f.expect(di > 0 || dj > Rational(0), tag + " flat arrow out of " + red.complex.gen(k).id);
        }
      f.expect(is_reduced(red.complex), tag + " not reduced");

      const ReducedComplex again = reduce(red.complex);
      f.expect(again.log.empty() && again.complex == red.complex, tag + " reduce is not idempotent");

      const LaurentHomology before = homology_laurent(cone);
      const LaurentHomology after = homology_laurent(red.complex);
      f.expect(before.rank_by_coset == after.rank_by_coset, tag + " homology rank changed");
      f.expect(after.total() == 1, tag + " Laurent rank " + std::to_string(after.total()));
    }
    f.expect(clock.seconds() < kPropertyLimit, "corpus took " + std::to_string(clock.seconds()) + " s");
  });
}

CheckResult criterion_truncation() {
  return run_check("C6", "window enlarged by 3 on both sides leaves phi and d unchanged", [](Failures& f) {
    for (const auto& item : corpus()) {
      const std::string tag = item.label();
      const KnotComplex knot = staircase_t2(item.q);
      const Window w = default_window(knot.genus(), item.n, item.spec);
      PipelineInput base{"torus:2," + std::to_string(item.q), knot, item.n, item.spec, std::nullopt, false};
      PipelineInput wide = base;
      wide.window = Window{w.lo - 3, w.hi + 3};
      const Report a = run_pipeline(base);
      const Report b = run_pipeline(wide);
      f.expect(b.generators_cone > a.generators_cone, tag + " wider window did not grow the cone");
      f.expect(a.d_invariant == b.d_invariant,
               tag + " d " + a.d_invariant.to_string() + " vs " + b.d_invariant.to_string());
      f.expect(a.phi == b.phi, tag + " phi " + show(a.phi) + " vs " + show(b.phi));
      f.expect(a.phi_ij == b.phi_ij, tag + " phi_ij " + show(a.phi_ij) + " vs " + show(b.phi_ij));
      f.expect(a.standard_sequence_status == b.standard_sequence_status &&
                   a.standard_complex_x_status == b.standard_complex_x_status,
               tag + " statuses differ");
    }
  });
}

}  // namespace cablecone::verify::detail
