#include <string>

#include "cablecone/oracles/cancellation_orders.hpp"
#include "cablecone/oracles/plus_cone.hpp"
#include "cablecone/oracles/x_rewriting.hpp"
#include "cablecone/pipeline.hpp"
#include "cablecone/reduction.hpp"
#include "harness.hpp"

namespace cablecone::verify::detail {

namespace {

// Frozen after the plus-cone oracle first produced them.
constexpr Int kPinnedTrefoilPlusOne = -2;
constexpr Int kPinnedTrefoilHalf = -2;

constexpr double kLocalEquivItemLimit = 60.0;
constexpr std::size_t kLocalEquivMaxGenerators = 10;
constexpr Int kLocalEquivExponentBound = 6;
constexpr std::size_t kExhaustiveOrderMaxGenerators = 12;

Rational pipeline_d(Int q, SurgerySpec spec) {
  PipelineInput in{"torus:2," + std::to_string(q), staircase_t2(q), 1, spec, std::nullopt, false};
  return run_pipeline(in).d_invariant;
}

}  // namespace

CheckResult criterion_oracle_d() {
  return run_check("C7", "d-invariants agree with the unfiltered plus-cone oracle", [](Failures& f) {
    const Rational unknot = pipeline_d(1, SurgerySpec::plus_one());
    f.expect(unknot == Rational(0), "unknot d = " + unknot.to_string());
    const std::vector<std::pair<Int, Int>> pins{{1, kPinnedTrefoilPlusOne}, {2, kPinnedTrefoilHalf}};
    for (const auto& [p, pin] : pins) {
      const SurgerySpec spec = p == 1 ? SurgerySpec::plus_one() : SurgerySpec::one_over(p);
      const Rational oracle = oracles::plus_cone_d(3, p);
      const Rational main = pipeline_d(3, spec);
      const std::string tag = "T(2,3) " + spec.to_string();
      f.expect(oracle == Rational(pin), tag + " oracle " + oracle.to_string() + " vs pin " + std::to_string(pin));
      f.expect(main == oracle, tag + " pipeline " + main.to_string() + " vs oracle " + oracle.to_string());
    }
  });
}

CheckResult criterion_local_equivalence() {
  return run_check("C10", "reduced cones are locally equivalent to their standard complexes", [](Failures& f) {
    std::size_t tried = 0;
    for (const auto& item : corpus()) {
      const ReducedComplex red = reduce(build_cone(staircase_t2(item.q), item.n, item.spec));
      if (red.complex.size() > kLocalEquivMaxGenerators) continue;
      ++tried;
      const std::string tag = item.label();
      Stopwatch clock;
      const KnotComplex k = to_uv_presentation(red);
      const StandardComplexX sx = standardize_x(k);
      LocalEquivLimits limits;
      limits.exponent_bound = kLocalEquivExponentBound;
      f.expect(verify_local_equiv(embed_in_x(k), realize(sx), limits, LocalRing::X),
               tag + " not locally equivalent over X to " + show(sx.edges));
      try {
        const StandardComplexZ sz = standardize_z(k);
        f.expect(verify_local_equiv(k, realize(sz), kLocalEquivExponentBound, LocalRing::UVQuotient),
                 tag + " not locally equivalent over F[U,V]/(UV) to " + show(sz.seq));
      } catch (const NotKnotLike&) {
      }
      f.expect(clock.seconds() < kLocalEquivItemLimit, tag + " took " + std::to_string(clock.seconds()) + " s");
    }
    f.expect(tried > 0, "no corpus item is small enough");
  });
}

std::vector<CheckResult> oracle_pins() {
  std::vector<CheckResult> out;

  out.push_back(run_check("pin:x-mixed", "mixed products in X rewrite to zero; one-sided products agree", [](Failures& f) {
    std::vector<RUMonomial> us;
    std::vector<RVMonomial> vs;
    for (Int j = 0; j <= 3; ++j)
      for (Int i = -3; i <= 3; ++i) {
        if (auto m = RUMonomial::make(i, j); m && !m->is_one()) us.push_back(*m);
        if (auto m = RVMonomial::make(i, j); m && !m->is_one()) vs.push_back(*m);
      }
    for (const auto& a : us)
      for (const auto& b : vs) {
        const std::string tag = "U_B^" + std::to_string(a.i) + "W_B^" + std::to_string(a.j) + " * V_T^" +
                                std::to_string(b.i) + "W_T^" + std::to_string(b.j);
        f.expect(oracles::rewrites_to_zero(oracles::concat(oracles::word_of(a), oracles::word_of(b))),
                 tag + " does not rewrite to 0");
        f.expect(x_mul(XPoly::from(a), XPoly::from(b)).is_zero(), tag + " nonzero in x_mul");
      }
    for (const auto& a : us)
      for (const auto& b : us) {
        auto nf = oracles::rewrite_normal_form(oracles::concat(oracles::word_of(a), oracles::word_of(b)));
        f.expect(nf && *nf == x_mul(XPoly::from(a), XPoly::from(b)), "R_U product disagrees");
      }
    for (const auto& a : vs)
      for (const auto& b : vs) {
        auto nf = oracles::rewrite_normal_form(oracles::concat(oracles::word_of(a), oracles::word_of(b)));
        f.expect(nf && *nf == x_mul(XPoly::from(a), XPoly::from(b)), "R_V product disagrees");
      }
  }));

  out.push_back(run_check("pin:cone-count", "cone generator counts match tower enumeration", [](Failures& f) {
    const FilteredComplex t3 = build_cone(staircase_t2(3), 2, SurgerySpec::plus_one());
    f.expect(t3.size() == 15, "T(2,3) n=2 cone has " + std::to_string(t3.size()));
    for (const auto& item : corpus()) {
      const KnotComplex k = staircase_t2(item.q);
      const FilteredComplex cone = build_cone(k, item.n, item.spec);
      f.expect(cone.size() == oracles::count_cone_generators(k.size(), cone.meta().window),
               item.label() + " count mismatch");
    }
  }));

  out.push_back(run_check("pin:orders", "every cancellation order gives the same count and phi", [](Failures& f) {
    const FilteredComplex t3 = build_cone(staircase_t2(3), 1, SurgerySpec::plus_one());
    for (const auto& r : oracles::all_cancellation_outcomes(t3))
      f.expect(r.size() == 3, "T(2,3) n=1 order reaching " + std::to_string(r.size()) + " generators");
    std::size_t tried = 0;
    for (const auto& item : corpus()) {
      const FilteredComplex cone = build_cone(staircase_t2(item.q), item.n, item.spec);
      if (cone.size() > kExhaustiveOrderMaxGenerators) continue;
      ++tried;
      const ReducedComplex ours = reduce(cone);
      const PhiTable phi = phi_from_standard(standardize_x(to_uv_presentation(ours)));
      for (const auto& r : oracles::all_cancellation_outcomes(cone, kExhaustiveOrderMaxGenerators)) {
        f.expect(r.size() == ours.complex.size(), item.label() + " generator count depends on order");
        f.expect(phi_from_standard(standardize_x(to_uv_presentation(r))) == phi,
                 item.label() + " phi depends on order");
      }
    }
    f.expect(tried > 1, "too few small cones");
  }));

  out.push_back(run_check("pin:laurent", "Laurent homology rank 1 by elimination at U = 1", [](Failures& f) {
    for (const auto& item : corpus()) {
      const FilteredComplex cone = build_cone(staircase_t2(item.q), item.n, item.spec);
      const Int oracle = oracles::laurent_rank(cone);
      f.expect(oracle == 1, item.label() + " oracle rank " + std::to_string(oracle));
      f.expect(homology_laurent(cone).total() == oracle, item.label() + " rank disagrees with the oracle");
    }
  }));

  out.push_back(run_check("pin:d-corpus", "pipeline d agrees with the plus-cone oracle on the corpus", [](Failures& f) {
    for (Int q : {1, 3, 5, 7, 11})
      for (Int p : {1, 2, 3}) {
        const SurgerySpec spec = p == 1 ? SurgerySpec::plus_one() : SurgerySpec::one_over(p);
        const Rational main = pipeline_d(q, spec);
        const Rational oracle = oracles::plus_cone_d(q, p);
        f.expect(main == oracle, "T(2," + std::to_string(q) + ") " + spec.to_string() + ": " + main.to_string() +
                                     " vs " + oracle.to_string());
      }
  }));

  out.push_back(run_check("pin:local", "local equivalence pins", [](Failures& f) {
    const KnotComplex k = to_uv_presentation(reduce(build_cone(staircase_t2(3), 2, SurgerySpec::plus_one())));
    f.expect(verify_local_equiv(k, realize(standardize_z(k)), 2), "T(2,3) n=2 vs its standard complex");
    f.expect(!verify_local_equiv(staircase_t2(3), staircase_t2(1), 2), "trefoil locally equivalent to the unknot");
  }));

  return out;
}

}  // namespace cablecone::verify::detail
