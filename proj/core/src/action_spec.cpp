#include "cohomog/action_spec.hpp"

#include "cohomog/linalg.hpp"

namespace cohomog {

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Circle: return "Circle";
    case CaseTag::OddOdd: return "OddOdd";
    case CaseTag::OddEven: return "OddEven";
    case CaseTag::EvenEven: return "EvenEven";
    case CaseTag::GenericMV: return "GenericMV";
  }
  return "?";
}

MatrixGroup conjugate_to_h(const MatrixGroup& wk, const QMatrix& embedding) {
  QMatrix s = embedding.transpose();  // substitution matrix for K variables
  if (!s.is_square() || !s.is_invertible())
    throw GroupStructureError("equal-rank embedding must be invertible");
  QMatrix sinv = s.inverse();
  std::vector<QMatrix> gens;
  for (const auto& g : wk.generators()) gens.push_back(sinv * g * s);
  return close_group(gens);
}

EqualRankData equal_rank_data(const ActionSpec& spec) {
  if (spec.H.rank != spec.Kminus.rank || spec.H.rank != spec.Kplus.rank)
    throw GroupStructureError("equal_rank_data: ranks differ");
  EqualRankData d{spec.H.weyl,
                  conjugate_to_h(spec.Kminus.weyl, spec.iota_minus),
                  conjugate_to_h(spec.Kplus.weyl, spec.iota_plus)};
  return d;
}

namespace {

// Echelonized image of the degree-d invariants of `source` under
// restriction along `embedding`, in H monomial coordinates.
Echelon image_echelon(const InvariantRing& source, const QMatrix& embedding,
                      const std::vector<Monomial>& h_monos, int d) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : source.basis(d)) {
    GradedPolynomial img = restrict_along(embedding, p);
    if (!img.is_zero()) rows.push_back(coords_in_monomials(img, h_monos, 1));
  }
  return row_reduce(std::move(rows));
}

void leg_checks(const std::string& leg, const InvariantRing& ring_h,
                const InvariantRing& ring_k, const QMatrix& embedding,
                int n, bool orientable, int rank_h, int rank_k, int truncation,
                ValidationReport& report) {
  auto& checks = report.checks;

  if (n < 1) {
    checks.push_back({leg + " sphere dimension", false, "S^0 leg", -1});
    return;
  }
  checks.push_back({leg + " sphere dimension", true, "n >= 1", -1});

  if (embedding.rows() != rank_h || embedding.cols() != rank_k) {
    checks.push_back({leg + " embedding shape", false,
                      "expected " + std::to_string(rank_h) + "x" +
                          std::to_string(rank_k),
                      -1});
    return;
  }
  checks.push_back({leg + " embedding shape", true, "", -1});

  bool even = n % 2 == 0;
  if (even && rank_h != rank_k) {
    checks.push_back({leg + " equal rank", false,
                      "even-dimensional leg requires equal rank", -1});
    return;
  }

  // Degreewise injectivity (even legs) or surjectivity (odd orientable
  // legs) of the restriction on invariants.
  if (even) {
    for (int d = 0; d <= truncation; d += 2) {
      auto monos = homogeneous_monomials(rank_h, d);
      Echelon img = image_echelon(ring_k, embedding, monos, d);
      if (static_cast<int>(img.rows.size()) != ring_k.dim(d)) {
        checks.push_back({leg + " restriction injective", false,
                          "kernel appears in degree " + std::to_string(d), d});
        return;
      }
    }
    checks.push_back({leg + " restriction injective", true, "", -1});
  } else if (orientable) {
    for (int d = 0; d <= truncation; d += 2) {
      auto monos = homogeneous_monomials(rank_h, d);
      Echelon img = image_echelon(ring_k, embedding, monos, d);
      if (static_cast<int>(img.rows.size()) != ring_h.dim(d)) {
        checks.push_back({leg + " restriction surjective", false,
                          "not onto in degree " + std::to_string(d), d});
        return;
      }
    }
    checks.push_back({leg + " restriction surjective", true, "", -1});
  }

  // Freeness series identity; an orientability hypothesis in both
  // source results, so skipped for non-orientable legs.
  if (!orientable) {
    checks.push_back(
        {leg + " freeness identity", true, "skipped: non-orientable leg", -1});
    return;
  }
  PoincareSeries ph = molien(ring_h.group(), truncation);
  PoincareSeries pk = molien(ring_k.group(), truncation);
  PoincareSeries factor = PoincareSeries::one(truncation);
  if (even)
    factor.set_coeff(n, Rational(1));  // P_H = P_K * (1 + t^n)
  else
    factor.set_coeff(n + 1, Rational(-1));  // P_H = P_K * (1 - t^{n+1})
  int diff = ph.first_difference(pk * factor);
  if (diff >= 0) {
    checks.push_back({leg + " freeness identity", false,
                      "freeness identity fails at degree " +
                          std::to_string(diff),
                      diff});
  } else {
    checks.push_back({leg + " freeness identity", true, "", -1});
  }
}

}  // namespace

ValidationReport validate(const ActionSpec& spec, int truncation) {
  ValidationReport report;

  if (spec.orbit_type == ActionSpec::OrbitType::Circle) {
    if (spec.K.weyl.rank() != spec.K.rank) {
      report.checks.push_back(
          {"K weyl rank", false, "group rank does not match subgroup", -1});
      return report;
    }
    report.checks.push_back({"K weyl rank", true, "", -1});
    if (spec.translation_aut.rows() != spec.K.rank ||
        !spec.translation_aut.is_invertible()) {
      report.checks.push_back(
          {"translation automorphism", false, "not an invertible rank-" +
               std::to_string(spec.K.rank) + " matrix", -1});
      return report;
    }
    report.checks.push_back({"translation automorphism", true, "", -1});
    bool norm = aut_normalizes(spec.translation_aut, spec.K.weyl);
    report.checks.push_back({"translation normalizes W(K)", norm,
                             norm ? "" : "conjugation leaves W(K)", -1});
    return report;
  }

  for (const auto* sub : {&spec.H, &spec.Kminus, &spec.Kplus}) {
    if (sub->weyl.rank() != sub->rank) {
      report.checks.push_back({sub->name + " weyl rank", false,
                               "group rank does not match subgroup", -1});
      return report;
    }
  }
  report.checks.push_back({"weyl ranks", true, "", -1});

  InvariantRing ring_h(spec.H.weyl);
  InvariantRing ring_km(spec.Kminus.weyl);
  InvariantRing ring_kp(spec.Kplus.weyl);

  leg_checks("minus leg", ring_h, ring_km, spec.iota_minus, spec.n_minus,
             spec.orientable_minus, spec.H.rank, spec.Kminus.rank, truncation,
             report);
  leg_checks("plus leg", ring_h, ring_kp, spec.iota_plus, spec.n_plus,
             spec.orientable_plus, spec.H.rank, spec.Kplus.rank, truncation,
             report);
  if (!report.passed()) return report;

  // Optional G block: its classes must restrict into both leg images.
  if (spec.G && spec.iota_G) {
    InvariantRing ring_g(spec.G->weyl);
    bool ok = true;
    int bad_degree = -1;
    for (int d = 2; d <= truncation && ok; d += 2) {
      auto monos = homogeneous_monomials(spec.H.rank, d);
      Echelon im_minus =
          image_echelon(ring_km, spec.iota_minus, monos, d);
      Echelon im_plus = image_echelon(ring_kp, spec.iota_plus, monos, d);
      for (const auto& p : ring_g.basis(d)) {
        GradedPolynomial img = restrict_along(*spec.iota_G, p);
        if (img.is_zero()) continue;
        auto v = coords_in_monomials(img, monos, 1);
        if (!in_span(im_minus, v) || !in_span(im_plus, v)) {
          ok = false;
          bad_degree = d;
          break;
        }
      }
    }
    report.checks.push_back(
        {"G classes factor through both legs", ok,
         ok ? "" : "fails in degree " + std::to_string(bad_degree),
         bad_degree});
  }

  return report;
}

Classification classify(const ActionSpec& spec, int truncation) {
  if (spec.orbit_type == ActionSpec::OrbitType::Circle)
    return {CaseTag::Circle, false};

  bool minus_odd = spec.n_minus % 2 == 1;
  bool plus_odd = spec.n_plus % 2 == 1;

  if (minus_odd && plus_odd) {
    if (spec.orientable_minus && spec.orientable_plus)
      return {CaseTag::OddOdd, false};
    return {CaseTag::GenericMV, false};
  }
  if (minus_odd != plus_odd) {
    // Theorem hypothesis: the odd leg's bundle is orientable.
    bool odd_orientable =
        plus_odd ? spec.orientable_plus : spec.orientable_minus;
    if (odd_orientable) return {CaseTag::OddEven, minus_odd};
    return {CaseTag::GenericMV, false};
  }

  // Both even.
  if (!spec.orientable_minus || !spec.orientable_plus)
    return {CaseTag::GenericMV, false};
  if (spec.H.rank != spec.Kminus.rank || spec.H.rank != spec.Kplus.rank)
    return {CaseTag::GenericMV, false};
  try {
    EqualRankData d = equal_rank_data(spec);
    index_two_check(d.wh, d.wk_minus);
    index_two_check(d.wh, d.wk_plus);
  } catch (const GroupStructureError&) {
    return {CaseTag::GenericMV, false};
  }
  (void)truncation;
  return {CaseTag::EvenEven, false};
}

}  // namespace cohomog
