#include "cohomog/presentations.hpp"

#include <algorithm>
#include <numeric>

namespace cohomog {

namespace {

std::string tag_err(const std::string& op, CaseTag got) {
  return op + ": wrong case (" + case_tag_name(got) + ")";
}

bool proportional(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  int k = std::max(a.field(), b.field());
  GradedPolynomial ak = a.promoted_to(k), bk = b.promoted_to(k);
  if (ak.leading_monomial() != bk.leading_monomial()) return false;
  Scalar ratio = ak.leading_coeff() / bk.leading_coeff();
  return ak == bk * ratio;
}

// zeta^l eigencomponent of p under the substitution action of r of
// order dividing k: (1/k) sum_j zeta^{-lj} r^j . p.
GradedPolynomial eigencomponent(const GradedPolynomial& p, const QMatrix& r,
                                int k, int l) {
  GradedPolynomial pk = p.promoted_to(k);
  GradedPolynomial acc(p.vars());
  QMatrix power = QMatrix::identity(r.rows());
  for (int j = 0; j < k; ++j) {
    acc += act(power, pk) * Scalar::zeta(k, -static_cast<long>(l) * j);
    power = power * r;
  }
  return acc * Scalar::rational_in(k, Rational(1, k));
}

ActionSpec swapped_legs(const ActionSpec& spec) {
  ActionSpec s = spec;
  std::swap(s.Kminus, s.Kplus);
  std::swap(s.iota_minus, s.iota_plus);
  std::swap(s.n_minus, s.n_plus);
  std::swap(s.orientable_minus, s.orientable_plus);
  return s;
}

}  // namespace

GradedPolynomial euler_generator(const InvariantRing& ring_k,
                                 const InvariantRing& ring_h,
                                 const QMatrix& embedding, int n,
                                 int truncation) {
  if (n % 2 != 1)
    throw PresentationError("euler_generator: leg dimension must be odd");
  int e_degree = n + 1;

  auto kernel_at = [&](int d) {
    auto monos = homogeneous_monomials(ring_h.vars(), d);
    std::vector<std::vector<Scalar>> columns;
    for (const auto& p : ring_k.basis(d))
      columns.push_back(coords_in_monomials(restrict_along(embedding, p),
                                            monos, 1));
    return kernel_basis(columns, monos.size());
  };

  GradedPolynomial e;
  for (int d = 2; d <= truncation; d += 2) {
    auto ker = kernel_at(d);
    int expected = d < e_degree ? 0 : ring_k.dim(d - e_degree);
    if (d == e_degree) {
      if (ker.size() != 1)
        throw PresentationError(
            "euler_generator: kernel not one-dimensional in degree " +
            std::to_string(d));
      const auto& basis = ring_k.basis(d);
      GradedPolynomial gen(ring_k.vars());
      for (size_t i = 0; i < basis.size(); ++i) gen += basis[i] * ker[0][i];
      e = lex_normalized(gen);
    } else if (static_cast<int>(ker.size()) != expected) {
      throw PresentationError(
          "euler_generator: kernel not principal at degree " +
          std::to_string(d));
    }
  }
  if (e.is_zero())
    throw PresentationError("euler_generator: no kernel element at degree " +
                            std::to_string(e_degree));

  // Series identity P_K * (1 - t^{n+1}) = P_H.
  PoincareSeries factor = PoincareSeries::one(truncation);
  factor.set_coeff(e_degree, Rational(-1));
  PoincareSeries lhs = molien(ring_k.group(), truncation) * factor;
  if (lhs.first_difference(molien(ring_h.group(), truncation)) >= 0)
    throw PresentationError("euler_generator: series identity fails");
  return e;
}

TrichotomyReport trichotomy_classify(const ActionSpec& spec, int truncation) {
  Classification cls = classify(spec, truncation);
  if (cls.tag != CaseTag::EvenEven)
    throw PresentationError(tag_err("trichotomy_classify", cls.tag));

  EqualRankData erd = equal_rank_data(spec);
  DihedralData dd = dihedral_parameters(erd.wh, erd.wk_minus, erd.wk_plus);
  int k = dd.k;
  int paper_sum = half_dim(spec.n_minus) + half_dim(spec.n_plus);
  if ((k * paper_sum) % 2 != 0)
    throw PresentationError("trichotomy_classify: k(n-+n+) is odd");

  InvariantRing ring_h(erd.wh);
  auto eigenvector_for = [&](const QMatrix& w, int degree) {
    for (const auto& p : ring_h.basis(degree)) {
      if (act(w, p) != p) {
        GradedPolynomial diff = p - act(w, p);
        return lex_normalized(diff);
      }
    }
    throw PresentationError(
        "trichotomy_classify: no non-invariant element in degree " +
        std::to_string(degree));
  };

  TrichotomyReport report;
  report.k = k;
  report.p_minus = eigenvector_for(dd.w_minus, spec.n_minus);
  report.p_plus = eigenvector_for(dd.w_plus, spec.n_plus);

  QMatrix r = dd.w_plus * dd.w_minus;

  // Eigenspace dimension table over Q(zeta_k).
  report.eigen_dims.assign(k, {});
  for (int l = 0; l < k; ++l) {
    for (int d = 0; d <= truncation; d += 2) {
      auto monos = homogeneous_monomials(spec.H.rank, d);
      std::vector<std::vector<Scalar>> rows;
      for (const auto& b : ring_h.basis(d)) {
        GradedPolynomial comp = eigencomponent(b, r, k, l);
        if (!comp.is_zero())
          rows.push_back(coords_in_monomials(comp, monos, k));
      }
      report.eigen_dims[l].push_back(rank_of(rows));
    }
  }

  auto support = [&](const GradedPolynomial& p) {
    std::vector<int> s;
    for (int l = 0; l < k; ++l)
      if (!eigencomponent(p, r, k, l).is_zero()) s.push_back(l);
    return s;
  };
  std::vector<int> s_minus = support(report.p_minus);
  std::vector<int> s_plus = support(report.p_plus);

  if (k == 1) {
    if (spec.n_minus != spec.n_plus)
      throw PresentationError("trichotomy_classify: k=1 but n- != n+");
    if (report.p_minus != report.p_plus)
      throw PresentationError(
          "trichotomy_classify: k=1 but p- and p+ differ after rescaling");
    report.case_number = 1;
    return report;
  }

  bool half_only = k % 2 == 0 && s_minus == std::vector<int>{k / 2} &&
                   s_plus == std::vector<int>{k / 2};
  if (half_only) {
    if (k != 2)
      throw PresentationError(
          "trichotomy_classify: p in E_{k/2} forces k=2, got k=" +
          std::to_string(k));
    report.case_number = 2;
    return report;
  }

  // Case III: supports must be {j, k-j} for a single j coprime to k.
  if (s_minus != s_plus || s_minus.size() != 2 ||
      s_minus[0] + s_minus[1] != k)
    throw PresentationError("trichotomy_classify: no case matches");
  int j = s_minus[0];
  if (!(0 < j && 2 * j < k) || std::gcd(j, k) != 1)
    throw PresentationError("trichotomy_classify: eigenvalue index " +
                            std::to_string(j) + " not admissible");
  if (spec.n_minus != spec.n_plus)
    throw PresentationError("trichotomy_classify: case III but n- != n+");
  int degree_index = spec.n_minus / 2;
  if (report.eigen_dims[j][degree_index] != 1 ||
      report.eigen_dims[k - j][degree_index] != 1)
    throw PresentationError(
        "trichotomy_classify: E_j eigenspace not one-dimensional");

  report.j = j;
  report.q = eigencomponent(report.p_plus, r, k, j);
  for (const auto& pw :
       {std::pair{&report.p_minus, &dd.w_minus},
        std::pair{&report.p_plus, &dd.w_plus}}) {
    GradedPolynomial expected = report.q - act(*pw.second, report.q);
    if (!proportional(pw.first->promoted_to(k), expected))
      throw PresentationError(
          "trichotomy_classify: p is not q - w q up to rescaling");
  }
  report.case_number = 3;
  return report;
}

RingPresentation present_even_even(const ActionSpec& spec, int truncation) {
  Classification cls = classify(spec, truncation);
  if (cls.tag != CaseTag::EvenEven)
    throw PresentationError(tag_err("present_even_even", cls.tag));

  EqualRankData erd = equal_rank_data(spec);
  DihedralData dd = dihedral_parameters(erd.wh, erd.wk_minus, erd.wk_plus);
  int sphere =
      dd.k * (half_dim(spec.n_minus) + half_dim(spec.n_plus)) + 1;

  RingPresentation pres;
  pres.case_tag = CaseTag::EvenEven;
  pres.dihedral = dd;
  pres.trichotomy = trichotomy_classify(spec, truncation);
  pres.sphere_degree = sphere;

  InvariantRing xi_ring(dd.xi);
  int idx = 0;
  for (const auto& [d, g] : xi_ring.minimal_generators(truncation))
    pres.generators.push_back({"g" + std::to_string(++idx), d, g});
  pres.generators.push_back({"z", sphere, GradedPolynomial()});

  pres.shape.kind = PresentationShape::Kind::TensorExterior;
  pres.shape.base = molien(dd.xi, truncation);
  pres.shape.sphere_degree = sphere;
  pres.series = series_from_shape(pres.shape, truncation);
  pres.relations = "z^2 = 0; base ring: Xi-invariants of H^*_S";
  return pres;
}

RingPresentation present_odd_odd(const ActionSpec& spec, int truncation) {
  Classification cls = classify(spec, truncation);
  if (cls.tag != CaseTag::OddOdd)
    throw PresentationError(tag_err("present_odd_odd", cls.tag));

  InvariantRing ring_h(spec.H.weyl);
  InvariantRing ring_km(spec.Kminus.weyl);
  InvariantRing ring_kp(spec.Kplus.weyl);

  RingPresentation pres;
  pres.case_tag = CaseTag::OddOdd;
  GradedPolynomial e_minus = euler_generator(ring_km, ring_h, spec.iota_minus,
                                             spec.n_minus, truncation);
  GradedPolynomial e_plus = euler_generator(ring_kp, ring_h, spec.iota_plus,
                                            spec.n_plus, truncation);

  int idx = 0;
  for (const auto& [d, g] : ring_h.minimal_generators(truncation))
    pres.generators.push_back({"h" + std::to_string(++idx), d, g});
  pres.generators.push_back({"e-", spec.n_minus + 1, e_minus});
  pres.generators.push_back({"e+", spec.n_plus + 1, e_plus});

  pres.shape.kind = PresentationShape::Kind::AdjoinTwoNilpotents;
  pres.shape.base = molien(spec.H.weyl, truncation);
  pres.shape.e_minus_degree = spec.n_minus + 1;
  pres.shape.e_plus_degree = spec.n_plus + 1;
  pres.series = series_from_shape(pres.shape, truncation);
  pres.relations = "e- * e+ = 0";
  return pres;
}

RingPresentation present_odd_even(const ActionSpec& spec, int truncation) {
  Classification cls = classify(spec, truncation);
  if (cls.tag != CaseTag::OddEven)
    throw PresentationError(tag_err("present_odd_even", cls.tag));

  // Normalize so the + leg is the odd one.
  ActionSpec s = cls.legs_swapped ? swapped_legs(spec) : spec;

  InvariantRing ring_h(s.H.weyl);
  InvariantRing ring_km(s.Kminus.weyl);
  InvariantRing ring_kp(s.Kplus.weyl);

  RingPresentation pres;
  pres.case_tag = CaseTag::OddEven;
  pres.legs_swapped = cls.legs_swapped;
  GradedPolynomial e =
      euler_generator(ring_kp, ring_h, s.iota_plus, s.n_plus, truncation);

  int idx = 0;
  for (const auto& [d, g] : ring_km.minimal_generators(truncation))
    pres.generators.push_back({"k" + std::to_string(++idx), d, g});
  pres.generators.push_back({"e", s.n_plus + 1, e});

  pres.shape.kind = PresentationShape::Kind::OddEven;
  pres.shape.base = molien(s.Kminus.weyl, truncation);
  pres.shape.second = molien(s.H.weyl, truncation);
  pres.shape.e_plus_degree = s.n_plus + 1;
  pres.series = series_from_shape(pres.shape, truncation);
  pres.relations =
      "H_{K-} + e * H_H[e] inside H_H[e]; products through H_{K-} -> H_H";
  return pres;
}

RingPresentation present_generic(const ActionSpec& spec, int truncation) {
  if (spec.orbit_type != ActionSpec::OrbitType::Interval)
    throw PresentationError("present_generic: interval specs only");

  MVComputer mv(spec);
  RingPresentation pres;
  pres.case_tag = CaseTag::GenericMV;

  PoincareSeries table(truncation);
  for (int d = 0; d <= truncation; ++d)
    table.set_coeff(d, d % 2 == 0 ? mv.even_dim(d) : mv.odd_dim(d));
  pres.shape.kind = PresentationShape::Kind::Table;
  pres.shape.base = table;
  pres.series = table;
  pres.relations = "degreewise Mayer-Vietoris table";

  // Greedy even-part generators: new classes modulo products of
  // lower-degree even classes.
  auto even_coords = [&](const MVClass& c, int d) {
    auto monos_m = homogeneous_monomials(spec.Kminus.rank, d);
    auto monos_p = homogeneous_monomials(spec.Kplus.rank, d);
    std::vector<Scalar> v = coords_in_monomials(c.x_minus, monos_m, 1);
    auto w = coords_in_monomials(c.x_plus, monos_p, 1);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };
  for (int d = 2; d <= truncation; d += 2) {
    std::vector<std::vector<Scalar>> products;
    for (int d1 = 2; d1 <= d - d1; d1 += 2) {
      for (const auto& a : mv.degree(d1).even)
        for (const auto& b : mv.degree(d - d1).even)
          products.push_back(even_coords(mv.multiply(a, b), d));
    }
    Echelon span = row_reduce(std::move(products));
    std::vector<std::vector<Scalar>> fresh;
    for (const auto& c : mv.degree(d).even) {
      auto res = reduce_against(span, even_coords(c, d));
      if (!std::all_of(res.begin(), res.end(),
                       [](const Scalar& s) { return s.is_zero(); }))
        fresh.push_back(std::move(res));
    }
    int count = rank_of(fresh);
    for (int i = 0; i < count; ++i)
      pres.generators.push_back(
          {"g" + std::to_string(d) + "_" + std::to_string(i + 1), d, GradedPolynomial()});
  }

  // Odd-part module generators over the even part.
  for (int d = 1; d <= truncation; d += 2) {
    auto monos = homogeneous_monomials(spec.H.rank, d - 1);
    std::vector<std::vector<Scalar>> products;
    for (int d1 = 2; d1 < d; d1 += 2) {
      for (const auto& a : mv.degree(d1).even)
        for (const auto& o : mv.degree(d - d1).odd) {
          MVClass prod = mv.multiply(a, o);
          if (!prod.q.is_zero())
            products.push_back(coords_in_monomials(prod.q, monos, 1));
        }
    }
    Echelon span = row_reduce(std::move(products));
    std::vector<std::vector<Scalar>> fresh;
    for (const auto& o : mv.degree(d).odd) {
      auto res = reduce_against(span, coords_in_monomials(o.q, monos, 1));
      if (!std::all_of(res.begin(), res.end(),
                       [](const Scalar& s) { return s.is_zero(); }))
        fresh.push_back(std::move(res));
    }
    int count = rank_of(fresh);
    for (int i = 0; i < count; ++i)
      pres.generators.push_back(
          {"s" + std::to_string(d) + "_" + std::to_string(i + 1), d, GradedPolynomial()});
  }
  return pres;
}

RingPresentation mapping_torus_presentation(const ActionSpec& spec,
                                            int truncation) {
  if (spec.orbit_type != ActionSpec::OrbitType::Circle)
    throw PresentationError("mapping_torus_presentation: circle specs only");

  std::vector<QMatrix> gens = spec.K.weyl.generators();
  gens.push_back(spec.translation_aut);
  MatrixGroup enlarged = close_group(gens);

  RingPresentation pres;
  pres.case_tag = CaseTag::Circle;
  pres.sphere_degree = 1;

  InvariantRing ring(enlarged);
  int idx = 0;
  for (const auto& [d, g] : ring.minimal_generators(truncation))
    pres.generators.push_back({"g" + std::to_string(++idx), d, g});
  pres.generators.push_back({"s1", 1, GradedPolynomial()});

  pres.shape.kind = PresentationShape::Kind::TensorExterior;
  pres.shape.base = molien(enlarged, truncation);
  pres.shape.sphere_degree = 1;
  pres.series = series_from_shape(pres.shape, truncation);
  pres.relations = "s1^2 = 0; base ring: <W(K), r*>-invariants";
  return pres;
}

RingPresentation present(const ActionSpec& spec, int truncation) {
  Classification cls = classify(spec, truncation);
  switch (cls.tag) {
    case CaseTag::Circle:
      return mapping_torus_presentation(spec, truncation);
    case CaseTag::OddOdd:
      return present_odd_odd(spec, truncation);
    case CaseTag::OddEven:
      return present_odd_even(spec, truncation);
    case CaseTag::EvenEven:
      return present_even_even(spec, truncation);
    case CaseTag::GenericMV:
      return present_generic(spec, truncation);
  }
  throw PresentationError("present: unreachable");
}

}  // namespace cohomog
