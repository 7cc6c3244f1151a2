#include "cohomog/mv.hpp"

#include <algorithm>

namespace cohomog {

MVComputer::MVComputer(const ActionSpec& spec)
    : spec_(spec),
      ring_h_(spec.H.weyl),
      ring_km_(spec.Kminus.weyl),
      ring_kp_(spec.Kplus.weyl) {
  if (spec.orbit_type != ActionSpec::OrbitType::Interval)
    throw std::invalid_argument("MVComputer: interval specs only");
}

const Echelon& MVComputer::image_sum(int h_degree) {
  auto it = image_cache_.find(h_degree);
  if (it != image_cache_.end()) return it->second;
  auto monos = homogeneous_monomials(spec_.H.rank, h_degree);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : ring_km_.basis(h_degree)) {
    GradedPolynomial img = restrict_along(spec_.iota_minus, p);
    if (!img.is_zero()) rows.push_back(coords_in_monomials(img, monos, 1));
  }
  for (const auto& p : ring_kp_.basis(h_degree)) {
    GradedPolynomial img = restrict_along(spec_.iota_plus, p);
    if (!img.is_zero()) rows.push_back(coords_in_monomials(img, monos, 1));
  }
  return image_cache_.emplace(h_degree, row_reduce(std::move(rows)))
      .first->second;
}

const MVComputer::DegreeBases& MVComputer::degree(int d) {
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;

  DegreeBases bases;
  if (d >= 0 && d % 2 == 0) {
    // Kernel of (x_-, x_+) |-> rho_+(x_+) - rho_-(x_-).
    const auto& bm = ring_km_.basis(d);
    const auto& bp = ring_kp_.basis(d);
    auto monos = homogeneous_monomials(spec_.H.rank, d);
    std::vector<std::vector<Scalar>> columns;
    for (const auto& p : bm) {
      GradedPolynomial img = -restrict_along(spec_.iota_minus, p);
      columns.push_back(coords_in_monomials(img, monos, 1));
    }
    for (const auto& p : bp) {
      GradedPolynomial img = restrict_along(spec_.iota_plus, p);
      columns.push_back(coords_in_monomials(img, monos, 1));
    }
    for (const auto& v : kernel_basis(columns, monos.size())) {
      MVClass c;
      c.parity = MVClass::Parity::Even;
      c.degree = d;
      c.x_minus = GradedPolynomial(spec_.Kminus.rank);
      c.x_plus = GradedPolynomial(spec_.Kplus.rank);
      for (size_t i = 0; i < bm.size(); ++i)
        c.x_minus += bm[i] * v[i];
      for (size_t i = 0; i < bp.size(); ++i)
        c.x_plus += bp[i] * v[bm.size() + i];
      bases.even.push_back(std::move(c));
    }
  } else if (d >= 1) {
    // Cokernel of im rho_- + im rho_+ inside the H invariants of
    // degree d-1, as reduced representatives.
    int hd = d - 1;
    auto monos = homogeneous_monomials(spec_.H.rank, hd);
    const Echelon& img = image_sum(hd);
    std::vector<std::vector<Scalar>> residues;
    for (const auto& p : ring_h_.basis(hd)) {
      auto res = reduce_against(img, coords_in_monomials(p, monos, 1));
      bool zero = std::all_of(res.begin(), res.end(),
                              [](const Scalar& s) { return s.is_zero(); });
      if (!zero) residues.push_back(std::move(res));
    }
    Echelon reps = row_reduce(std::move(residues));
    for (const auto& row : reps.rows) {
      MVClass c;
      c.parity = MVClass::Parity::Odd;
      c.degree = d;
      c.q = poly_from_coords(row, monos, spec_.H.rank);
      bases.odd.push_back(std::move(c));
    }
  }
  return cache_.emplace(d, std::move(bases)).first->second;
}

MVClass MVComputer::unit() {
  MVClass c;
  c.parity = MVClass::Parity::Even;
  c.degree = 0;
  c.x_minus = GradedPolynomial::constant(spec_.Kminus.rank, Scalar(1L));
  c.x_plus = GradedPolynomial::constant(spec_.Kplus.rank, Scalar(1L));
  return c;
}

GradedPolynomial MVComputer::reduce_odd_rep(const GradedPolynomial& q) {
  if (q.is_zero()) return q;
  if (!q.is_homogeneous())
    throw std::invalid_argument("reduce_odd_rep: not homogeneous");
  int hd = q.degree();
  auto monos = homogeneous_monomials(spec_.H.rank, hd);
  auto res = reduce_against(image_sum(hd), coords_in_monomials(q, monos, 1));
  return poly_from_coords(res, monos, spec_.H.rank);
}

MVClass MVComputer::multiply(const MVClass& a, const MVClass& b) {
  using P = MVClass::Parity;
  MVClass out;
  out.degree = a.degree + b.degree;
  if (a.parity == P::Even && b.parity == P::Even) {
    out.parity = P::Even;
    out.x_minus = a.x_minus * b.x_minus;
    out.x_plus = a.x_plus * b.x_plus;
    return out;
  }
  if (a.parity == P::Odd && b.parity == P::Odd) {
    // Odd times odd is zero.
    out.parity = P::Even;
    out.x_minus = GradedPolynomial(spec_.Kminus.rank);
    out.x_plus = GradedPolynomial(spec_.Kplus.rank);
    return out;
  }
  const MVClass& even = a.parity == P::Even ? a : b;
  const MVClass& odd = a.parity == P::Odd ? a : b;
  out.parity = P::Odd;
  GradedPolynomial h_factor = restrict_along(spec_.iota_minus, even.x_minus);
  GradedPolynomial prod = h_factor * odd.q;
  out.q = prod.is_zero() ? GradedPolynomial(spec_.H.rank)
                         : reduce_odd_rep(prod);
  return out;
}

int MVComputer::exactness_defect(int d) {
  if (d % 2 != 0) throw std::invalid_argument("exactness_defect: even d");
  return even_dim(d) - (ring_km_.dim(d) + ring_kp_.dim(d)) + ring_h_.dim(d) -
         odd_dim(d + 1);
}

}  // namespace cohomog
