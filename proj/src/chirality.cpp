#include "knotpoly/chirality.hpp"

#include "knotpoly/cabling.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/vassiliev.hpp"

namespace knotpoly {

namespace {

// Lowest a+b (then lowest b) at which the derivation invariant separates p
// from its conjugate.
std::optional<std::pair<unsigned, int>> first_derivation_witness(const LaurentPoly2& p, const LaurentPoly2& q) {
  std::vector<int> rows;
  for (const auto& [e, c] : p.terms())
    if (rows.empty() || rows.back() != e.z) rows.push_back(e.z);
  int max_a = 0;
  for (const auto& [e, c] : p.terms()) max_a = std::max(max_a, std::abs(e.v) + 2);
  for (int degree = rows.empty() ? 0 : rows.front(); degree <= rows.back() + max_a; ++degree)
    for (int b : rows) {
      const int a = degree - b;
      if (a < 0 || a > max_a) continue;
      if (v_derivation_invariant(p, a, b) != v_derivation_invariant(q, a, b)) return std::pair{unsigned(a), b};
    }
  return std::nullopt;
}

void add_derivation_witness(ChiralityReport& r, const LaurentPoly2& p, const LaurentPoly2& q, unsigned a, int b) {
  std::string label = "2-cable HOMFLY, v-derivation a=" + std::to_string(a) + " of z^" + std::to_string(b) + " at v=i";
  for (const auto& w : r.witnesses)
    if (w.invariant == label) return;
  r.witnesses.push_back({label, v_derivation_invariant(p, a, b).to_string(), v_derivation_invariant(q, a, b).to_string()});
}

}  // namespace

ChiralityReport chirality_report(const KnotRecord& record, bool include_cable, const SkeinConfig& cfg) {
  ChiralityReport r;
  r.knot = record.name;
  r.homfly = record_homfly(record, cfg);
  r.kauffman = record_kauffman(record, cfg);
  const LaurentPoly2 hom_conj = conj_homfly(r.homfly);
  const LaurentPoly2 kau_conj = conj_kauffman(r.kauffman);
  r.homfly_self_conjugate = hom_conj == r.homfly;
  r.kauffman_self_conjugate = kau_conj == r.kauffman;
  r.determinant = determinant_signed(conway(r.homfly));
  r.determinant_sign = sgn(r.determinant);

  if (!r.homfly_self_conjugate) r.witnesses.push_back({"HOMFLY", r.homfly.to_string("v", "z"), hom_conj.to_string("v", "z")});
  if (!r.kauffman_self_conjugate)
    r.witnesses.push_back({"Kauffman", r.kauffman.to_string("a", "z"), kau_conj.to_string("a", "z")});
  if (r.determinant_sign < 0)
    r.witnesses.push_back({"signed determinant (negative)", r.determinant.get_str(), r.determinant.get_str()});

  if (include_cable && record.braid) {
    const BraidWord cable = two_cable(*record.braid);
    cable_writhe_audit(*record.braid, cable);
    r.cable_homfly = homfly_braid(cable, cfg);
    const LaurentPoly2 cable_conj = conj_homfly(*r.cable_homfly);
    r.cable_homfly_self_conjugate = cable_conj == *r.cable_homfly;
    if (!*r.cable_homfly_self_conjugate) {
      if (v_derivation_invariant(*r.cable_homfly, 6, 1) != v_derivation_invariant(cable_conj, 6, 1))
        add_derivation_witness(r, *r.cable_homfly, cable_conj, 6, 1);
      if (auto w = first_derivation_witness(*r.cable_homfly, cable_conj))
        add_derivation_witness(r, *r.cable_homfly, cable_conj, w->first, w->second);
    }
  }
  return r;
}

}  // namespace knotpoly
