#include "cohomog/verify.hpp"

#include <random>
#include <sstream>

namespace cohomog {

bool VerificationReport::verdict() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  for (const auto& s : spotchecks)
    if (!s.pass) return false;
  for (const auto& f : freeness)
    if (f.checked && !f.pass) return false;
  return true;
}

int VerificationReport::first_mismatch_degree() const {
  for (const auto& r : rows)
    if (!r.match) return r.degree;
  return -1;
}

namespace {

int series_dim(const PoincareSeries& s, int d) {
  const Rational& c = s.coeff(d);
  return static_cast<int>(numerator(c));  // series coefficients are integers
}

std::string degrees_str(int a, int b) {
  return "degrees " + std::to_string(a) + ", " + std::to_string(b);
}

}  // namespace

VerificationReport compare_series(const ActionSpec& spec,
                                  const RingPresentation& pres, int N) {
  VerificationReport report;
  report.spec_name = spec.name;
  report.truncation = N;

  if (spec.orbit_type == ActionSpec::OrbitType::Circle) {
    std::vector<QMatrix> gens = spec.K.weyl.generators();
    gens.push_back(spec.translation_aut);
    InvariantRing ring(close_group(gens));
    for (int d = 0; d <= N; ++d) {
      VerificationRow row;
      row.degree = d;
      int dim = ring.dim(d) + (d >= 1 ? ring.dim(d - 1) : 0);
      (d % 2 == 0 ? row.mv_even : row.mv_odd) = dim;
      int pres_dim = series_dim(pres.series, d);
      (d % 2 == 0 ? row.pres_even : row.pres_odd) = pres_dim;
      row.match = dim == pres_dim;
      report.rows.push_back(row);
    }
    return report;
  }

  MVComputer mv(spec);
  for (int d = 0; d <= N; ++d) {
    VerificationRow row;
    row.degree = d;
    row.mv_even = mv.even_dim(d);
    row.mv_odd = mv.odd_dim(d);
    int pres_dim = series_dim(pres.series, d);
    (d % 2 == 0 ? row.pres_even : row.pres_odd) = pres_dim;
    row.match = (d % 2 == 0 ? row.mv_even : row.mv_odd) == pres_dim;
    if (d % 2 == 0 && d + 1 <= N) row.exactness_defect = mv.exactness_defect(d);
    report.rows.push_back(row);
  }
  return report;
}

void product_spotchecks(const ActionSpec& spec, int trials, unsigned seed,
                        VerificationReport& report) {
  if (spec.orbit_type != ActionSpec::OrbitType::Interval) return;

  MVComputer mv(spec);
  int half = report.truncation > 0 ? report.truncation / 2 : 20;

  std::vector<int> even_degrees, odd_degrees;
  for (int d = 2; d <= half; ++d) {
    if (d % 2 == 0 && mv.even_dim(d) > 0) even_degrees.push_back(d);
    if (d % 2 == 1 && mv.odd_dim(d) > 0) odd_degrees.push_back(d);
  }
  if (even_degrees.empty()) {
    report.spotchecks.push_back(
        {"spotchecks", "no nonzero even degrees below truncation/2", true});
    return;
  }

  std::mt19937 rng(seed);
  auto pick = [&](const std::vector<int>& v) {
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
  };
  auto random_class = [&](const std::vector<MVClass>& basis) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    MVClass acc = basis.front();
    acc.x_minus = GradedPolynomial(acc.x_minus.vars());
    acc.x_plus = GradedPolynomial(acc.x_plus.vars());
    acc.q = GradedPolynomial(acc.q.vars());
    for (const auto& b : basis) {
      Scalar c{static_cast<long>(coeff(rng))};
      acc.x_minus += b.x_minus * c;
      acc.x_plus += b.x_plus * c;
      acc.q += b.q * c;
    }
    return acc;
  };
  auto closed = [&](const MVClass& c) {
    return restrict_along(spec.iota_minus, c.x_minus) ==
           restrict_along(spec.iota_plus, c.x_plus);
  };

  for (int t = 0; t < trials; ++t) {
    int d1 = pick(even_degrees);
    int d2 = pick(even_degrees);
    MVClass a = random_class(mv.degree(d1).even);
    MVClass b = random_class(mv.degree(d2).even);

    MVClass ua = mv.multiply(mv.unit(), a);
    report.spotchecks.push_back(
        {"unit law", "degree " + std::to_string(d1),
         ua.x_minus == a.x_minus && ua.x_plus == a.x_plus});

    MVClass ab = mv.multiply(a, b);
    report.spotchecks.push_back(
        {"even closure", degrees_str(d1, d2), closed(ab)});

    if (!odd_degrees.empty()) {
      int d3 = pick(odd_degrees);
      int d4 = pick(odd_degrees);
      MVClass p = random_class(mv.degree(d3).odd);
      MVClass q = random_class(mv.degree(d4).odd);
      MVClass pq = mv.multiply(p, q);
      report.spotchecks.push_back(
          {"odd*odd = 0", degrees_str(d3, d4), pq.is_zero()});

      MVClass lhs = mv.multiply(ab, p);
      MVClass rhs = mv.multiply(a, mv.multiply(b, p));
      report.spotchecks.push_back(
          {"associativity", degrees_str(d1 + d2, d3), lhs.q == rhs.q});
    } else {
      MVClass c = random_class(mv.degree(pick(even_degrees)).even);
      MVClass lhs = mv.multiply(ab, c);
      MVClass rhs = mv.multiply(a, mv.multiply(b, c));
      report.spotchecks.push_back(
          {"associativity", degrees_str(d1, d2),
           lhs.x_minus == rhs.x_minus && lhs.x_plus == rhs.x_plus});
    }
  }
}

void freeness_checks(const ActionSpec& spec, int N,
                     VerificationReport& report) {
  if (spec.orbit_type != ActionSpec::OrbitType::Interval) return;

  PoincareSeries p_h = molien(spec.H.weyl, N);
  struct Leg {
    const char* name;
    const SubgroupDatum* k;
    int n;
    bool orientable;
  };
  for (const Leg& leg : {Leg{"minus", &spec.Kminus, spec.n_minus,
                             spec.orientable_minus},
                         Leg{"plus", &spec.Kplus, spec.n_plus,
                             spec.orientable_plus}}) {
    FreenessRow row;
    row.leg = leg.name;
    if (!leg.orientable) {
      row.detail = "skipped (non-orientable)";
      report.freeness.push_back(row);
      continue;
    }
    row.checked = true;
    PoincareSeries factor = PoincareSeries::one(N);
    if (leg.n % 2 == 1) {
      if (leg.n + 1 <= N) factor.set_coeff(leg.n + 1, Rational(-1));
      row.detail = "P_H = P_K (1 - t^" + std::to_string(leg.n + 1) + ")";
    } else {
      if (leg.n <= N) factor.set_coeff(leg.n, Rational(1));
      row.detail = "P_H = P_K (1 + t^" + std::to_string(leg.n) + ")";
    }
    PoincareSeries lhs = molien(leg.k->weyl, N) * factor;
    int diff = lhs.first_difference(p_h);
    row.pass = diff < 0;
    if (!row.pass) row.detail += ", fails at degree " + std::to_string(diff);
    report.freeness.push_back(row);
  }
}

VerificationReport full_verification(const ActionSpec& spec,
                                     const RingPresentation& pres, int N,
                                     int trials, unsigned seed) {
  VerificationReport report = compare_series(spec, pres, N);
  product_spotchecks(spec, trials, seed, report);
  freeness_checks(spec, N, report);
  return report;
}

}  // namespace cohomog
