#pragma once

#include <optional>

#include "cohomog/action_spec.hpp"
#include "cohomog/mv.hpp"
#include "cohomog/series.hpp"

namespace cohomog {

struct PresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string name;
  int degree = 0;
  GradedPolynomial rep;  // may be empty for purely formal generators
};

// Outcome of the dihedral eigenspace analysis of an even-even pair.
struct TrichotomyReport {
  int k = 1;
  int case_number = 0;  // 1, 2, or 3
  GradedPolynomial p_minus, p_plus;
  int j = 0;             // case 3
  GradedPolynomial q;    // case 3, coefficients in Q(zeta_k)
  // eigen_dims[l][m] = dim of the zeta^l eigenspace in cohomological
  // degree 2m, inside the W(H) invariants.
  std::vector<std::vector<int>> eigen_dims;
};

struct RingPresentation {
  CaseTag case_tag = CaseTag::GenericMV;
  bool legs_swapped = false;
  std::vector<Generator> generators;
  std::string relations;
  PresentationShape shape;
  PoincareSeries series;
  int sphere_degree = 0;  // exterior-generator degree when one exists
  std::optional<DihedralData> dihedral;
  std::optional<TrichotomyReport> trichotomy;
};

// Generator of the kernel ideal of the restriction H*_K -> H*_H for an
// odd leg: the lex-normalized lowest-degree kernel element, degree n+1.
// Verifies kernel principality degreewise up to the truncation and the
// series identity; throws PresentationError on inconsistent input.
GradedPolynomial euler_generator(const InvariantRing& ring_k,
                                 const InvariantRing& ring_h,
                                 const QMatrix& embedding, int n,
                                 int truncation);

TrichotomyReport trichotomy_classify(const ActionSpec& spec, int truncation);

RingPresentation present_odd_even(const ActionSpec& spec, int truncation);
RingPresentation present_odd_odd(const ActionSpec& spec, int truncation);
RingPresentation present_even_even(const ActionSpec& spec, int truncation);
RingPresentation present_generic(const ActionSpec& spec, int truncation);
RingPresentation mapping_torus_presentation(const ActionSpec& spec,
                                            int truncation);

// Dispatch on classify.
RingPresentation present(const ActionSpec& spec, int truncation);

}  // namespace cohomog
