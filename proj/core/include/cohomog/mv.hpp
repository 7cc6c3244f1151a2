#pragma once

#include <map>

#include "cohomog/action_spec.hpp"
#include "cohomog/linalg.hpp"

namespace cohomog {

// Degreewise Mayer-Vietoris class of the double mapping cylinder. Even
// classes are fiber-product pairs; odd classes are cokernel
// representatives in H degree (degree - 1), reduced against the image
// of both restrictions.
struct MVClass {
  enum class Parity { Even, Odd };
  Parity parity = Parity::Even;
  int degree = 0;
  GradedPolynomial x_minus, x_plus;  // even
  GradedPolynomial q;                // odd representative
  bool is_zero() const {
    return parity == Parity::Even ? x_minus.is_zero() && x_plus.is_zero()
                                  : q.is_zero();
  }
};

// Degreewise MV computation bound to one interval spec. Uses only
// invariant bases, restriction, and row reduction; never the
// closed-form presentation paths.
class MVComputer {
 public:
  explicit MVComputer(const ActionSpec& spec);

  const ActionSpec& spec() const { return spec_; }
  InvariantRing& ring_h() { return ring_h_; }
  InvariantRing& ring_kminus() { return ring_km_; }
  InvariantRing& ring_kplus() { return ring_kp_; }

  // Even basis at even d (kernel of the difference of restrictions),
  // odd basis at odd d (cokernel of their sum in H degree d-1). The
  // other component is always empty.
  struct DegreeBases {
    std::vector<MVClass> even;
    std::vector<MVClass> odd;
  };
  const DegreeBases& degree(int d);

  int even_dim(int d) { return static_cast<int>(degree(d).even.size()); }
  int odd_dim(int d) { return static_cast<int>(degree(d).odd.size()); }

  MVClass unit();
  MVClass multiply(const MVClass& a, const MVClass& b);

  // Representative of q modulo im rho_- + im rho_+ in its degree.
  GradedPolynomial reduce_odd_rep(const GradedPolynomial& q);

  // Exactness defect of the four-term sequence at even degree d:
  // even(d) - [dim K-(d) + dim K+(d)] + dim H(d) - odd(d+1).
  int exactness_defect(int d);

 private:
  const Echelon& image_sum(int h_degree);

  ActionSpec spec_;
  InvariantRing ring_h_, ring_km_, ring_kp_;
  std::map<int, DegreeBases> cache_;
  std::map<int, Echelon> image_cache_;
};

}  // namespace cohomog
