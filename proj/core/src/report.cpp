#include "hyperchrom/report.hpp"

#include <algorithm>
#include <sstream>

#include "hyperchrom/io.hpp"
#include "hyperchrom/oracles.hpp"
#include "json.hpp"

namespace hyperchrom {

namespace {

using ordered_json = nlohmann::ordered_json;

Certificate single_missing_certificate(const CaseSplit& split, int q, const Metrics& m) {
  // q = |C*| + 1 here, and |C*| equals the pivot's degree, which is at
  // most Delta <= Delta2. Check the whole chain instead of trusting it.
  const long long star = static_cast<long long>(split.star_colors.size());
  if (q != star + 1 || star > m.delta || m.delta > m.delta2) {
    throw std::logic_error("single-missing bound chain failed numerically");
  }
  Certificate cert;
  cert.kind = "single_missing";
  cert.c0 = split.missing_colors.front();
  cert.detail = "q = " + std::to_string(q) + " = star colors + 1 <= Delta + 1 = " +
                std::to_string(m.delta + 1) + " <= Delta2 + 1";
  return cert;
}

PivotAnalysis analyze_pivot(const Hypergraph& h, const EdgeColoring& coloring,
                            const std::vector<SimClass>& classes, const Metrics& m, int pivot,
                            int max_degree2) {
  PivotAnalysis a;
  a.pivot = pivot;
  a.pivot_is_max = m.degree2[pivot] == max_degree2;
  a.split = classify_case(h, coloring, pivot);

  if (a.split.kind == CaseKind::Case1) {
    return a;  // every color is present at the pivot; the direct check covers it
  }

  a.thetas = omega_theta(a.split, classes);

  if (a.split.kind == CaseKind::SingleMissing) {
    a.certificates.push_back(single_missing_certificate(a.split, coloring.q, m));
    return a;
  }

  // Minimality consequence: every pair of missing colors must co-occur in
  // some theta key. pair_witness throws if the coloring were not minimum.
  const auto& missing = a.split.missing_colors;
  for (std::size_t i = 0; i < missing.size(); ++i) {
    for (std::size_t j = i + 1; j < missing.size(); ++j) {
      pair_witness(a.thetas, a.split, missing[i], missing[j]);
    }
  }

  for (int c0 : missing) {
    BoundsReport b = bounds_report(a.thetas, a.split, c0, coloring.q, m);
    if (b.certificate) {
      Certificate cert;
      cert.kind = "gamma_antirank";
      cert.c0 = c0;
      cert.detail = "missing color c" + std::to_string(c0 + 1) + ": |Gamma| + 1 = " +
                    std::to_string(b.gamma_size + 1) + " <= antirank - 1 = " +
                    std::to_string(m.antirank - 1) + ", hence q <= Delta2 + 1";
      a.certificates.push_back(cert);
    }
    a.per_color.push_back(std::move(b));
  }

  a.helly = helly_sufficiency_check(coloring, a.split, a.thetas, m);
  if (a.helly.certificate) {
    Certificate cert;
    cert.kind = "helly_gamma";
    cert.detail = "antirank >= 3 and H_Gamma is Helly, hence q <= 2*Delta <= Delta2 + 1";
    a.certificates.push_back(cert);
  }

  a.clique = clique_condition_check(h, coloring, a.split, m);
  if (a.clique.certificate) {
    Certificate cert;
    cert.kind = "uniform_pencil";
    cert.detail = "pairwise-intersecting family of " + std::to_string(a.clique.family.size()) +
                  " missing-colored edges exceeds k^2 - k + 1 = " +
                  std::to_string(a.clique.threshold) + " and has a common vertex";
    a.certificates.push_back(cert);
  }

  return a;
}

SymmetrySection symmetry_section(const Hypergraph& h, const EdgeColoring& coloring,
                                 int automorphism_cap) {
  SymmetrySection s;
  if (h.vertex_count() > automorphism_cap) {
    s.skip_reason = "vertex count " + std::to_string(h.vertex_count()) +
                    " exceeds the automorphism cap " + std::to_string(automorphism_cap);
    return s;
  }
  AutomorphismOptions opts;
  opts.max_vertices = automorphism_cap;
  s.aut = automorphisms(h, opts);
  s.color_preserving = color_preserving_subgroup(s.aut, h, coloring);
  s.edge_orbits = orbits(s.color_preserving, h);
  s.burnside = burnside_bound(s.color_preserving, h);
  s.orbits_monochromatic = true;
  for (const auto& orbit : s.edge_orbits) {
    for (int e : orbit) {
      if (coloring.colors[e] != coloring.colors[orbit.front()]) {
        s.orbits_monochromatic = false;
      }
    }
  }
  s.burnside_bounds_q = coloring.q <= s.burnside.bound;
  s.computed = true;
  return s;
}

OracleSection oracle_section(const Hypergraph& h, const ConjectureReport& r) {
  OracleSection o;
  o.requested = true;

  if (h.edge_count() <= 10) {
    o.chromatic.oracle_value = oracle_chromatic_index(h);
    o.chromatic.fast_value = r.coloring.q;
    o.chromatic.agree = o.chromatic.oracle_value == o.chromatic.fast_value;
    o.chromatic.ran = true;
  } else {
    o.chromatic.skip_reason = "more than 10 edges";
  }

  if (!r.symmetry.computed) {
    o.automorphism_order.skip_reason = "symmetry section was skipped";
  } else if (h.vertex_count() <= 8) {
    o.automorphism_order.oracle_value = oracle_automorphism_order(h);
    o.automorphism_order.fast_value = r.symmetry.aut.order();
    o.automorphism_order.agree =
        o.automorphism_order.oracle_value == o.automorphism_order.fast_value;
    o.automorphism_order.ran = true;
  } else {
    o.automorphism_order.skip_reason = "more than 8 vertices";
  }

  const PivotAnalysis* case2 = nullptr;
  for (const auto& a : r.analyses) {
    if (a.helly.applicable) {
      case2 = &a;
      break;
    }
  }
  if (case2 == nullptr) {
    o.helly.skip_reason = "no pivot with at least two missing colors";
  } else if (case2->helly.hgamma.edges.size() <= 12) {
    o.helly.oracle_value = oracle_helly(case2->helly.hgamma.edges) ? 1 : 0;
    o.helly.fast_value = case2->helly.helly.helly ? 1 : 0;
    o.helly.agree = o.helly.oracle_value == o.helly.fast_value;
    o.helly.ran = true;
  } else {
    o.helly.skip_reason = "gamma hypergraph has more than 12 edges";
  }

  return o;
}

}  // namespace

ConjectureReport analyze(const Hypergraph& h, const AnalyzeOptions& opts) {
  ConjectureReport r;
  r.name = h.name();
  r.labels = h.labels();
  r.m = metrics(h);
  r.sandwich = check_sandwich(h);
  r.coloring = chromatic_index_exact(h, opts.solver_seed);
  r.pair_adjacency = pair_adjacency_check(h, r.coloring);

  r.direct.q = r.coloring.q;
  r.direct.bound = static_cast<long long>(r.m.delta2) + 1;
  r.direct.holds = r.direct.q <= r.direct.bound;
  r.direct.equality = r.direct.q == r.direct.bound;

  r.classes = sim_partition(h, r.coloring);

  std::vector<int> pivots;
  if (!opts.pivot_label.empty()) {
    const int idx = h.label_index(opts.pivot_label);
    if (idx < 0) {
      throw UnknownPivot("pivot label \"" + opts.pivot_label + "\" is not a vertex of " +
                         h.name());
    }
    pivots.push_back(idx);
  } else if (opts.all_pivots) {
    pivots = pivot_candidates(h);
  } else {
    pivots.push_back(pick_pivot(h));
  }

  const int max_degree2 = *std::max_element(r.m.degree2.begin(), r.m.degree2.end());
  for (int pivot : pivots) {
    r.analyses.push_back(analyze_pivot(h, r.coloring, r.classes, r.m, pivot, max_degree2));
  }

  r.symmetry = symmetry_section(h, r.coloring, opts.automorphism_cap);

  for (const auto& a : r.analyses) {
    if (!a.certificates.empty()) {
      r.any_certificate = true;
    }
  }

  if (opts.oracle_check) {
    r.oracle = oracle_section(h, r);
  }

  return r;
}

namespace {

ordered_json inequality_json(const Inequality& ineq) {
  ordered_json j;
  j["name"] = ineq.name;
  j["lhs"] = ineq.lhs.str();
  j["rhs"] = ineq.rhs.str();
  j["holds"] = ineq.holds;
  return j;
}

ordered_json derived_json(const DerivedHypergraph& d) {
  ordered_json j;
  j["name"] = d.name;
  j["vertices"] = d.vertex_names;
  j["edges"] = d.edges;
  j["edge_sources"] = d.edge_sources;
  j["merged_duplicates"] = d.merged_duplicates;
  return j;
}

ordered_json agreement_json(const OracleAgreement& a) {
  ordered_json j;
  j["ran"] = a.ran;
  if (!a.ran) {
    j["skip_reason"] = a.skip_reason;
    return j;
  }
  j["oracle"] = a.oracle_value;
  j["fast"] = a.fast_value;
  j["agree"] = a.agree;
  return j;
}

const char* case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::Case1:
      return "case1";
    case CaseKind::SingleMissing:
      return "single_missing";
    case CaseKind::Case2:
      return "case2";
  }
  return "unknown";
}

}  // namespace

std::string report_json(const ConjectureReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["vertices"] = r.labels;

  j["metrics"] = {{"delta", r.m.delta},
                  {"delta2", r.m.delta2},
                  {"rank", r.m.rank},
                  {"antirank", r.m.antirank}};
  j["sandwich"] = {{"lhs", r.sandwich.lhs},
                   {"mid", r.sandwich.mid},
                   {"rhs", r.sandwich.rhs},
                   {"holds", r.sandwich.holds}};

  j["q"] = r.coloring.q;
  j["coloring"] = {{"q", r.coloring.q}, {"colors", r.coloring.colors}};

  ordered_json pa;
  pa["holds"] = r.pair_adjacency.holds;
  if (r.pair_adjacency.violation) {
    pa["violation"] = {r.pair_adjacency.violation->first, r.pair_adjacency.violation->second};
    pa["merged_colors"] = r.pair_adjacency.merged_colors;
  }
  j["pair_adjacency"] = std::move(pa);

  j["direct_check"] = {{"q", r.direct.q},
                       {"delta2_plus_1", r.direct.bound},
                       {"holds", r.direct.holds},
                       {"equality", r.direct.equality}};

  ordered_json classes = ordered_json::array();
  for (const auto& cls : r.classes) {
    ordered_json c;
    ordered_json members = ordered_json::array();
    for (int v : cls.members) {
      members.push_back(r.labels[v]);
    }
    c["members"] = std::move(members);
    c["star"] = cls.star;
    c["colors"] = cls.colors;
    classes.push_back(std::move(c));
  }
  j["similarity_classes"] = std::move(classes);

  ordered_json analyses = ordered_json::array();
  for (const auto& a : r.analyses) {
    ordered_json aj;
    aj["pivot"] = r.labels[a.pivot];
    aj["pivot_is_max"] = a.pivot_is_max;
    aj["case"] = case_name(a.split.kind);
    aj["star_colors"] = a.split.star_colors;
    aj["missing_colors"] = a.split.missing_colors;

    ordered_json thetas = ordered_json::array();
    for (const auto& t : a.thetas) {
      thetas.push_back({{"key", t.key}, {"classes", t.class_indices}});
    }
    aj["theta"] = std::move(thetas);

    ordered_json per_color = ordered_json::array();
    for (const auto& b : a.per_color) {
      ordered_json bj;
      bj["c0"] = b.c0;
      bj["gamma_size"] = b.gamma_size;
      bj["star_color_count"] = b.star_color_count;
      bj["key_union_size"] = b.key_union_size;
      bj["hstar_degree2_c0"] = b.hstar_degree2_c0;
      bj["hstar"] = derived_json(b.hstar);
      bj["bounds"] = ordered_json::array({inequality_json(b.union_bound),
                                          inequality_json(b.hstar_bound),
                                          inequality_json(b.degree_bound),
                                          inequality_json(b.ratio_bound),
                                          inequality_json(b.gamma_antirank)});
      bj["certificate"] = b.certificate;
      per_color.push_back(std::move(bj));
    }
    aj["per_c0"] = std::move(per_color);

    ordered_json hj;
    hj["applicable"] = a.helly.applicable;
    if (a.helly.applicable) {
      hj["fires"] = a.helly.fires;
      hj["helly"] = a.helly.helly.helly;
      if (!a.helly.helly.helly) {
        hj["witness"] = a.helly.helly.witness;
      }
      hj["hgamma"] = derived_json(a.helly.hgamma);
      if (a.helly.fires) {
        hj["q_decomposition"] = {a.helly.q_decomposition_lhs, a.helly.q_decomposition_rhs};
        hj["two_delta"] = inequality_json(a.helly.two_delta);
      }
      hj["certificate"] = a.helly.certificate;
    }
    aj["helly"] = std::move(hj);

    ordered_json cj;
    cj["applicable"] = a.clique.applicable;
    if (a.clique.applicable) {
      cj["k"] = a.clique.k;
      cj["threshold"] = a.clique.threshold;
      cj["family_found"] = a.clique.family_found;
      if (a.clique.family_found) {
        cj["family"] = a.clique.family;
      }
      cj["fires"] = a.clique.fires;
      if (a.clique.common_vertex) {
        cj["common_vertex"] = r.labels[*a.clique.common_vertex];
      }
      cj["certificate"] = a.clique.certificate;
    }
    aj["clique_condition"] = std::move(cj);

    ordered_json certs = ordered_json::array();
    for (const auto& cert : a.certificates) {
      ordered_json kj;
      kj["kind"] = cert.kind;
      if (cert.c0 >= 0) {
        kj["c0"] = cert.c0;
      }
      kj["detail"] = cert.detail;
      certs.push_back(std::move(kj));
    }
    aj["certificates"] = std::move(certs);

    analyses.push_back(std::move(aj));
  }
  j["analyses"] = std::move(analyses);

  ordered_json sj;
  sj["computed"] = r.symmetry.computed;
  if (!r.symmetry.computed) {
    sj["skip_reason"] = r.symmetry.skip_reason;
  } else {
    sj["aut_order"] = r.symmetry.aut.order();
    sj["color_preserving_order"] = r.symmetry.color_preserving.order();
    if (r.symmetry.aut.order() <= 512) {
      sj["aut_elements"] = r.symmetry.aut.elements;
    }
    if (r.symmetry.color_preserving.order() <= 512) {
      sj["color_preserving_elements"] = r.symmetry.color_preserving.elements;
    }
    sj["edge_orbits"] = r.symmetry.edge_orbits;
    sj["burnside"] = {{"bound", r.symmetry.burnside.bound},
                      {"fixed_counts", r.symmetry.burnside.fixed_counts}};
    sj["orbits_monochromatic"] = r.symmetry.orbits_monochromatic;
    sj["burnside_bounds_q"] = r.symmetry.burnside_bounds_q;
  }
  j["symmetry"] = std::move(sj);

  if (r.oracle.requested) {
    ordered_json oj;
    oj["chromatic_index"] = agreement_json(r.oracle.chromatic);
    oj["automorphism_order"] = agreement_json(r.oracle.automorphism_order);
    oj["helly"] = agreement_json(r.oracle.helly);
    j["oracle_check"] = std::move(oj);
  }

  j["certificate_found"] = r.any_certificate;
  j["conjecture_holds"] = r.direct.holds;

  return j.dump(2) + "\n";
}

namespace {

std::string color_name(int c) { return "c" + std::to_string(c + 1); }

std::string color_set(const std::vector<int>& colors) {
  std::string out = "{";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += color_name(colors[i]);
  }
  out += "}";
  return out;
}

const char* ok(bool b) { return b ? "ok" : "VIOLATED"; }

void text_inequality(std::ostream& out, const Inequality& ineq) {
  out << ineq.name << " " << ineq.lhs.str() << " <= " << ineq.rhs.str() << " ["
      << (ineq.holds ? "ok" : "no") << "]";
}

}  // namespace

std::string report_text(const ConjectureReport& r) {
  std::ostringstream out;
  out << "instance " << r.name << ": " << r.labels.size() << " vertices, "
      << r.coloring.colors.size() << " edges\n";
  out << "metrics: Delta=" << r.m.delta << " Delta2=" << r.m.delta2 << " rank=" << r.m.rank
      << " antirank=" << r.m.antirank << "\n";
  out << "sandwich: " << r.sandwich.lhs << " <= " << r.sandwich.mid
      << " <= " << r.sandwich.rhs << " [" << ok(r.sandwich.holds) << "]\n";
  out << "chromatic index: q = " << r.coloring.q << "\n";
  out << "pair adjacency: " << (r.pair_adjacency.holds ? "every color pair meets [ok]"
                                                       : "violated (coloring not minimum?)")
      << "\n";

  for (const auto& a : r.analyses) {
    out << "pivot " << r.labels[a.pivot] << (a.pivot_is_max ? " (max deg2)" : " (override)")
        << ": ";
    switch (a.split.kind) {
      case CaseKind::Case1:
        out << "case 1, no missing colors; q = deg(pivot), direct check applies\n";
        break;
      case CaseKind::SingleMissing:
        out << "single missing color " << color_name(a.split.missing_colors.front())
            << "; q <= Delta + 1 directly\n";
        break;
      case CaseKind::Case2: {
        out << "case 2, star colors " << color_set(a.split.star_colors) << ", missing "
            << color_set(a.split.missing_colors) << "\n";
        out << "  theta classes: " << a.thetas.size() << "\n";
        for (const auto& b : a.per_color) {
          out << "  " << color_name(b.c0) << ": |Gamma| = " << b.gamma_size << "; ";
          text_inequality(out, b.union_bound);
          out << ", ";
          text_inequality(out, b.hstar_bound);
          out << ", ";
          text_inequality(out, b.degree_bound);
          out << ", ";
          text_inequality(out, b.ratio_bound);
          out << ", ";
          text_inequality(out, b.gamma_antirank);
          out << "\n";
        }
        if (a.helly.applicable) {
          out << "  Helly sufficiency: H_Gamma "
              << (a.helly.helly.helly ? "is Helly" : "is not Helly");
          if (!a.helly.helly.helly) {
            out << " (witness family of " << a.helly.helly.witness.size() << " sets)";
          }
          if (a.helly.certificate) {
            out << "; fires: ";
            text_inequality(out, a.helly.two_delta);
          }
          out << "\n";
        }
        if (a.clique.applicable) {
          out << "  clique condition (k=" << a.clique.k
              << ", threshold=" << a.clique.threshold << "): ";
          if (!a.clique.family_found) {
            out << "no qualifying family";
          } else {
            out << "family of " << a.clique.family.size()
                << (a.clique.fires ? " edges, fires" : " edges, below threshold");
            if (a.clique.common_vertex) {
              out << ", common vertex " << r.labels[*a.clique.common_vertex];
            }
          }
          out << "\n";
        }
        break;
      }
    }
    for (const auto& cert : a.certificates) {
      out << "  certificate [" << cert.kind << "] " << cert.detail << "\n";
    }
  }

  if (r.symmetry.computed) {
    out << "symmetry: |Aut| = " << r.symmetry.aut.order()
        << ", color-preserving |T| = " << r.symmetry.color_preserving.order()
        << ", edge orbits = " << r.symmetry.edge_orbits.size()
        << ", Burnside bound = " << r.symmetry.burnside.bound << " ["
        << (r.symmetry.burnside_bounds_q ? "q <= bound" : "BOUND FAILED") << "]\n";
  } else {
    out << "symmetry: skipped (" << r.symmetry.skip_reason << ")\n";
  }

  if (r.oracle.requested) {
    auto line = [&](const char* what, const OracleAgreement& a) {
      out << "oracle " << what << ": ";
      if (!a.ran) {
        out << "skipped (" << a.skip_reason << ")";
      } else {
        out << a.oracle_value << " vs " << a.fast_value << " ["
            << (a.agree ? "agree" : "DISAGREE") << "]";
      }
      out << "\n";
    };
    line("chromatic index", r.oracle.chromatic);
    line("automorphism order", r.oracle.automorphism_order);
    line("Helly verdict", r.oracle.helly);
  }

  out << "direct check: q = " << r.direct.q << " <= Delta2 + 1 = " << r.direct.bound << " ["
      << (r.direct.holds ? (r.direct.equality ? "holds with equality" : "holds")
                         : "VIOLATED")
      << "]\n";
  return out.str();
}

int report_exit_code(const ConjectureReport& r) { return r.direct.holds ? 0 : 2; }

std::string counterexample_json(const Hypergraph& h, const ConjectureReport& r) {
  ordered_json j;
  j["what"] = "chromatic index exceeds Delta2 + 1";
  j["instance"] = nlohmann::ordered_json::parse(serialize_instance(h));
  j["q"] = r.coloring.q;
  j["colors"] = r.coloring.colors;
  j["delta2"] = r.m.delta2;
  return j.dump(2) + "\n";
}

}  // namespace hyperchrom
