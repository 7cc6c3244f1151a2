#pragma once

#include <optional>
#include <string>

#include "cohomog/group.hpp"
#include "cohomog/invariant_ring.hpp"

namespace cohomog {

struct SubgroupDatum {
  std::string name;
  int rank = 0;
  MatrixGroup weyl;
};

// Complete input datum of a cohomogeneity-one action. Weyl groups are
// the effective images in Aut(S); embeddings are torus maps s -> t in
// row convention (shape rank(H) x rank(K)).
struct ActionSpec {
  enum class OrbitType { Interval, Circle };

  OrbitType orbit_type = OrbitType::Interval;
  std::string name;

  // Interval data.
  SubgroupDatum H, Kminus, Kplus;
  QMatrix iota_minus, iota_plus;
  int n_minus = 0, n_plus = 0;
  bool orientable_minus = false, orientable_plus = false;
  std::optional<SubgroupDatum> G;
  std::optional<QMatrix> iota_G;

  // Circle data.
  SubgroupDatum K;
  QMatrix translation_aut;
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  int failing_degree = -1;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + ": " + c.detail;
    return "";
  }
};

// Checks every ActionSpec invariant up to cohomological degree N.
// Structured failures, never throws on bad mathematical input.
ValidationReport validate(const ActionSpec& spec, int truncation);

enum class CaseTag { Circle, OddOdd, OddEven, EvenEven, GenericMV };

struct Classification {
  CaseTag tag = CaseTag::GenericMV;
  // OddEven is normalized so the + leg is the odd one; records the swap.
  bool legs_swapped = false;
};

std::string case_tag_name(CaseTag tag);

// Requires validate to pass. Pure function of the spec data.
Classification classify(const ActionSpec& spec, int truncation);

// The n of the even-even theorem is half the sphere dimension.
inline int half_dim(int n) { return n / 2; }

// Conjugates W(K) into the H-torus coordinates along the (square,
// invertible) embedding of an equal-rank leg.
MatrixGroup conjugate_to_h(const MatrixGroup& wk, const QMatrix& embedding);

// ActionSpec with an equal-rank interval normalized so both Weyl groups
// act in the H coordinates. Throws on non-equal-rank input.
struct EqualRankData {
  MatrixGroup wh, wk_minus, wk_plus;  // all in rank(H) coordinates
};
EqualRankData equal_rank_data(const ActionSpec& spec);

}  // namespace cohomog
