#include "stanley/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stanley/error.hpp"

namespace stanley {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw RingMismatch("monomials have " + std::to_string(a.nvars()) + " and " +
                       std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  if (std::any_of(exps_.begin(), exps_.end(), [](Exponent e) { return e < 0; })) {
    throw std::invalid_argument("negative exponent in monomial");
  }
}

Monomial Monomial::variable(int nvars, int i, Exponent e) {
  Monomial m(nvars);
  m.exps_.at(i) = e;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Exponent Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), Exponent{0}); }

Exponent Monomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

VarSet Monomial::support() const {
  VarSet s;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] > 0) s.insert(i);
  }
  return s;
}

bool Monomial::is_squarefree() const { return max_exponent() <= 1; }

bool Monomial::is_pure_power() const { return support().count() == 1; }

Monomial Monomial::restricted(VarSet vars) const {
  Monomial out(*this);
  for (int i = 0; i < nvars(); ++i) {
    if (!vars.contains(i)) out.exps_[i] = 0;
  }
  return out;
}

Monomial Monomial::squarefree_part() const {
  Monomial out(*this);
  for (auto& e : out.exps_) e = e > 0 ? 1 : 0;
  return out;
}

Monomial Monomial::compressed(VarSet vars) const {
  std::vector<Exponent> out;
  out.reserve(vars.count());
  for (int i : vars.indices()) out.push_back(exps_.at(i));
  return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial out(a);
  for (int i = 0; i < a.nvars(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial out(a);
  for (int i = 0; i < a.nvars(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial out(a);
  for (int i = 0; i < a.nvars(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial out(a);
  for (int i = 0; i < a.nvars(); ++i) out[i] = std::max(0, a[i] - b[i]);
  return out;
}

std::string to_string(const Monomial& m, const RingCtx& ring) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Monomial& m) {
  if (m.nvars() == 0) return "1";
  return to_string(m, RingCtx(m.nvars()));
}

}  // namespace stanley
