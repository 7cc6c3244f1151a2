#include "cohomog/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cohomog {

std::vector<Monomial> homogeneous_monomials(int r, int d) {
  std::vector<Monomial> out;
  if (d < 0 || d % 2 != 0) return out;
  int total = d / 2;
  if (r == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  Monomial current(r, 0);
  // Enumerate compositions of `total` into r parts, descending lex.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == r - 1) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, total);
  return out;
}

GradedPolynomial GradedPolynomial::variable(int vars, int index) {
  Monomial m(vars, 0);
  m.at(index) = 1;
  return monomial(m, Scalar(1));
}

GradedPolynomial GradedPolynomial::constant(int vars, const Scalar& c) {
  return monomial(Monomial(vars, 0), c);
}

GradedPolynomial GradedPolynomial::monomial(const Monomial& m,
                                            const Scalar& c) {
  GradedPolynomial p(static_cast<int>(m.size()));
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int GradedPolynomial::field() const {
  return terms_.empty() ? 1 : terms_.begin()->second.field();
}

Scalar GradedPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return Scalar::rational_in(field(), Rational(0));
  return it->second;
}

void GradedPolynomial::set_coeff(const Monomial& m, const Scalar& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_.insert_or_assign(m, c);
}

const Monomial& GradedPolynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->first;
}

const Scalar& GradedPolynomial::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->second;
}

namespace {
int mono_degree(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return 2 * s;
}
}  // namespace

int GradedPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

bool GradedPolynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int md = mono_degree(m);
    if (d == -1) d = md;
    if (md != d) return false;
  }
  return true;
}

GradedPolynomial GradedPolynomial::homogeneous_component(int d) const {
  GradedPolynomial out(vars_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) == d) out.terms_.emplace(m, c);
  return out;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

static void check_vars(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (a.vars() != b.vars())
    throw ShapeMismatchError("polynomial variable counts differ");
}

GradedPolynomial GradedPolynomial::operator+(
    const GradedPolynomial& o) const {
  check_vars(*this, o);
  int k = std::max(field(), o.field());
  GradedPolynomial out = promoted_to(k);
  for (const auto& [m, c] : o.terms_) {
    Scalar cc = c.promoted_to(k);
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_.emplace(m, cc);
    } else {
      it->second += cc;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

GradedPolynomial GradedPolynomial::operator-(
    const GradedPolynomial& o) const {
  return *this + (-o);
}

GradedPolynomial GradedPolynomial::operator*(
    const GradedPolynomial& o) const {
  check_vars(*this, o);
  int k = std::max(field(), o.field());
  GradedPolynomial out(vars_);
  for (const auto& [ma, ca] : terms_) {
    Scalar cak = ca.promoted_to(k);
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(vars_);
      for (int i = 0; i < vars_; ++i) m[i] = ma[i] + mb[i];
      Scalar prod = cak * cb.promoted_to(k);
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        if (!prod.is_zero()) out.terms_.emplace(std::move(m), prod);
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

GradedPolynomial GradedPolynomial::operator*(const Scalar& c) const {
  int k = std::max(field(), c.field());
  GradedPolynomial out(vars_);
  if (c.is_zero()) return out;
  Scalar ck = c.promoted_to(k);
  for (const auto& [m, a] : terms_) {
    Scalar prod = a.promoted_to(k) * ck;
    if (!prod.is_zero()) out.terms_.emplace(m, prod);
  }
  return out;
}

bool GradedPolynomial::operator==(const GradedPolynomial& o) const {
  return vars_ == o.vars_ && (*this - o).is_zero();
}

GradedPolynomial GradedPolynomial::substitute_linear(
    const std::vector<std::vector<Rational>>& m, int target_vars) const {
  std::vector<std::vector<Scalar>> sm(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) sm[i].push_back(Scalar(e));
  return substitute_linear_scalar(sm, target_vars);
}

GradedPolynomial GradedPolynomial::substitute_linear_scalar(
    const std::vector<std::vector<Scalar>>& m, int target_vars) const {
  if (static_cast<int>(m.size()) != vars_)
    throw ShapeMismatchError("substitution matrix has wrong row count");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != target_vars)
      throw ShapeMismatchError("substitution matrix has wrong column count");

  std::vector<GradedPolynomial> images;
  images.reserve(vars_);
  for (int i = 0; i < vars_; ++i) {
    GradedPolynomial form(target_vars);
    for (int j = 0; j < target_vars; ++j) {
      if (m[i][j].is_zero()) continue;
      form += GradedPolynomial::variable(target_vars, j) * m[i][j];
    }
    images.push_back(std::move(form));
  }

  GradedPolynomial out(target_vars);
  for (const auto& [mono, c] : terms_) {
    GradedPolynomial term = GradedPolynomial::constant(target_vars, c);
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < mono[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

GradedPolynomial GradedPolynomial::promoted_to(int k) const {
  GradedPolynomial out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.promoted_to(k));
  return out;
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")";
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out << "*x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
    }
    first = false;
  }
  return out.str();
}

}  // namespace cohomog
