#include "doctest.h"
#include "hyperchrom/bounds.hpp"
#include "hyperchrom/coloring.hpp"
#include "hyperchrom/instances.hpp"

using namespace hyperchrom;

namespace {

struct FanoCase2 {
  Hypergraph h = fano();
  EdgeColoring c;
  Metrics m;
  CaseSplit split;
  std::vector<ThetaClass> thetas;

  FanoCase2() {
    c = chromatic_index_exact(h);
    m = metrics(h);
    split = classify_case(h, c, pick_pivot(h));
    thetas = omega_theta(split, sim_partition(h, c));
  }
};

}  // namespace

TEST_CASE("ratio inequality evaluates in exact rationals") {
  // |Γ|=3, ar=3, Δ₂=6: rhs (4/2)·6+1 = 13 against q+|Γ| = 10.
  const Inequality fano_ratio = ratio_bound_evaluate(7, 3, 3, 6);
  CHECK(fano_ratio.lhs == Rational(10));
  CHECK(fano_ratio.rhs == Rational(13));
  CHECK(fano_ratio.lhs.str() == "10");
  CHECK(fano_ratio.rhs.str() == "13");
  CHECK(fano_ratio.holds);

  // Non-integral right side: (2/3)·7+1 = 17/3 < 6, so the bound fails; any
  // rounding would flip the verdict.
  const Inequality tight = ratio_bound_evaluate(5, 1, 4, 7);
  CHECK(tight.lhs == Rational(6));
  CHECK(tight.rhs == Rational(17, 3));
  CHECK(tight.rhs.str() == "17/3");
  CHECK_FALSE(tight.holds);

  CHECK_THROWS_AS(ratio_bound_evaluate(3, 1, 1, 5), AntirankDegenerate);
}

TEST_CASE("published worked example: faithful formula vs printed arithmetic") {
  // Inputs q=7, |Γ|=2, ar=3, Δ₂=20. The faithful right side is
  // ((2+1)/(3-1))·20+1 = 31; the source text printed (2/2)·20+1 = 21.
  // Both dominate the left side 9, so the certified inequality agrees.
  const Inequality faithful = ratio_bound_evaluate(7, 2, 3, 20);
  CHECK(faithful.lhs == Rational(9));
  CHECK(faithful.rhs == Rational(31));
  CHECK(faithful.holds);

  const Rational printed_rhs = Rational(2, 2) * Rational(20) + Rational(1);
  CHECK(printed_rhs == Rational(21));
  CHECK(faithful.lhs <= printed_rhs);
  CHECK(printed_rhs <= faithful.rhs);
}

TEST_CASE("per-color bounds report on the fano plane") {
  const FanoCase2 f;
  for (int c0 : f.split.missing_colors) {
    const BoundsReport b = bounds_report(f.thetas, f.split, c0, f.c.q, f.m);
    CHECK(b.c0 == c0);
    CHECK(b.gamma_size == 3);
    CHECK(b.star_color_count == 3);
    CHECK(b.key_union_size == 7);
    CHECK(b.hstar_degree2_c0 == 6);

    CHECK(b.union_bound.lhs == Rational(7));
    CHECK(b.union_bound.rhs == Rational(10));
    CHECK(b.union_bound.holds);
    CHECK(b.hstar_bound.rhs == Rational(10));
    CHECK(b.hstar_bound.holds);
    CHECK(b.degree_bound.rhs == Rational(10));
    CHECK(b.degree_bound.holds);

    CHECK(b.ratio_bound.lhs == Rational(10));
    CHECK(b.ratio_bound.rhs == Rational(13));
    CHECK(b.ratio_bound.holds);

    CHECK(b.gamma_antirank.lhs == Rational(4));
    CHECK(b.gamma_antirank.rhs == Rational(2));
    CHECK_FALSE(b.gamma_antirank.holds);
    CHECK_FALSE(b.certificate);

    CHECK(b.hstar.vertex_names.size() == 7);
    CHECK(b.hstar.edges.size() == 3);
  }
}

TEST_CASE("hstar degree of the fixed color counts the other key colors") {
  // Every key contains c0, so c0 touches every other vertex of H*.
  const FanoCase2 f;
  const BoundsReport b = bounds_report(f.thetas, f.split, 3, f.c.q, f.m);
  CHECK(b.hstar_degree2_c0 == b.key_union_size - 1);
}

TEST_CASE("helly sufficiency is inapplicable outside case 2 or below antirank 3") {
  const Hypergraph tri = Hypergraph::validate("tri2", {"a", "b", "c"},
                                              {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const EdgeColoring c = chromatic_index_exact(tri);
  const Metrics m = metrics(tri);
  const CaseSplit split = classify_case(tri, c, 0);  // single missing color
  const HellySufficiency hs = helly_sufficiency_check(c, split, {}, m);
  CHECK_FALSE(hs.applicable);
  CHECK_FALSE(hs.certificate);
}

TEST_CASE("helly sufficiency on the fano plane does not fire") {
  const FanoCase2 f;
  const HellySufficiency hs = helly_sufficiency_check(f.c, f.split, f.thetas, f.m);
  CHECK(hs.applicable);
  CHECK_FALSE(hs.fires);
  CHECK_FALSE(hs.helly.helly);
  CHECK(hs.helly.witness.size() == 4);
  CHECK(hs.hgamma.edges.size() == 4);
  CHECK_FALSE(hs.certificate);
}

TEST_CASE("helly sufficiency fires on the pencil construction") {
  const HellyPositiveInstance inst = helly_positive(3);
  const Hypergraph& h = inst.hypergraph;
  const EdgeColoring c = chromatic_index_exact(h);
  const Metrics m = metrics(h);
  const CaseSplit split = classify_case(h, c, h.label_index(inst.pivot_label));
  const auto thetas = omega_theta(split, sim_partition(h, c));

  const HellySufficiency hs = helly_sufficiency_check(c, split, thetas, m);
  CHECK(hs.applicable);
  CHECK(hs.fires);
  CHECK(hs.helly.helly);
  CHECK(hs.certificate);
  CHECK(hs.q_decomposition_lhs == c.q);
  CHECK(hs.q_decomposition_rhs == c.q);
  CHECK(hs.two_delta.lhs == Rational(c.q));
  CHECK(hs.two_delta.rhs == Rational(2LL * m.delta));
  CHECK(hs.two_delta.holds);
}

TEST_CASE("clique condition on the fano plane finds a family below threshold") {
  const FanoCase2 f;
  const CliqueCondition cc = clique_condition_check(f.h, f.c, f.split, f.m);
  CHECK(cc.applicable);
  CHECK(cc.k == 3);
  CHECK(cc.threshold == 7);
  CHECK(cc.family_found);
  CHECK(cc.family == std::vector<int>{3, 4, 5, 6});
  CHECK_FALSE(cc.fires);
  CHECK_FALSE(cc.common_vertex.has_value());
  CHECK_FALSE(cc.certificate);
}

TEST_CASE("clique condition fires on the large pencil construction") {
  const HellyPositiveInstance inst = helly_positive(8);
  const Hypergraph& h = inst.hypergraph;
  const EdgeColoring c = chromatic_index_exact(h);
  const Metrics m = metrics(h);
  const CaseSplit split = classify_case(h, c, h.label_index(inst.pivot_label));

  const CliqueCondition cc = clique_condition_check(h, c, split, m);
  CHECK(cc.applicable);
  CHECK(cc.k == 3);
  CHECK(cc.threshold == 7);
  REQUIRE(cc.family_found);
  CHECK(cc.family.size() == 8);
  CHECK(cc.fires);
  REQUIRE(cc.common_vertex.has_value());
  CHECK(h.label(*cc.common_vertex) == inst.hub_label);
  CHECK(cc.certificate);

  // Re-verify the conclusion independently of the checker: the hub lies in
  // every family edge.
  for (int e : cc.family) {
    bool found = false;
    for (int v : h.edge(e)) found = found || v == *cc.common_vertex;
    CHECK(found);
  }
}

TEST_CASE("clique condition is inapplicable for non-uniform or low-rank instances") {
  // Case 2 at vertex a, but the edge sizes are mixed.
  const Hypergraph h = Hypergraph::validate(
      "mixedc2", {"a", "b", "c", "d", "e", "f", "g"},
      {{"a", "b"}, {"c", "d", "e"}, {"f", "g"}});
  const EdgeColoring padded = canonical_coloring(h, {0, 1, 2});
  const CaseSplit split = classify_case(h, padded, 0);
  REQUIRE(split.kind == CaseKind::Case2);
  CHECK_FALSE(clique_condition_check(h, padded, split, metrics(h)).applicable);

  // Uniform but 2-uniform: the pencil argument needs edge size at least 3.
  const Hypergraph fl = flower(3, 2);
  const EdgeColoring c2 = chromatic_index_exact(fl);
  const CaseSplit tip = classify_case(fl, c2, 1);
  REQUIRE(tip.kind == CaseKind::Case2);
  CHECK_FALSE(clique_condition_check(fl, c2, tip, metrics(fl)).applicable);
}
