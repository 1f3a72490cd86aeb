#include "stanley/ideal.hpp"

#include <algorithm>
#include <functional>

#include "stanley/error.hpp"

namespace stanley {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatch("ideals live in different rings");
  }
}

void require_same_ring(const MonomialIdeal& a, const Monomial& m) {
  if (a.nvars() != m.nvars()) {
    throw RingMismatch("monomial has " + std::to_string(m.nvars()) + " variables, ring has " +
                       std::to_string(a.nvars()));
  }
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal::MonomialIdeal(RingCtx ring) : ring_(std::move(ring)) {}

MonomialIdeal::MonomialIdeal(RingCtx ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators) {
    if (g.nvars() != ring_.nvars()) {
      throw RingMismatch("generator " + to_string(g) + " does not match a ring with " +
                         std::to_string(ring_.nvars()) + " variables");
    }
    if (g.max_exponent() > ring_.exponent_cap()) {
      throw ExponentCapError("exponent " + std::to_string(g.max_exponent()) + " exceeds cap " +
                             std::to_string(ring_.exponent_cap()));
    }
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(RingCtx ring) {
  int n = ring.nvars();
  return MonomialIdeal(std::move(ring), {Monomial::unit(n)});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

VarSet MonomialIdeal::support() const {
  VarSet s;
  for (const auto& g : gens_) s |= g.support();
  return s;
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial out(nvars());
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(*this, m);
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return ring_ == other.ring_ && gens_ == other.gens_;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) {
    throw DomainError("intersection of an empty family of ideals");
  }
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w) {
  require_same_ring(ideal, w);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(colon(g, w));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.squarefree_part());
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal restrict_to_subring(const MonomialIdeal& ideal, VarSet vars) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.support().is_subset_of(vars)) gens.push_back(g);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal reindex_to_subring(const MonomialIdeal& ideal, VarSet vars) {
  if (vars.empty()) {
    throw DomainError("cannot re-index onto an empty variable set");
  }
  if (!ideal.support().is_subset_of(vars)) {
    throw DomainError("ideal " + to_string(ideal) + " is not supported on the requested subring");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.compressed(vars));
  return MonomialIdeal(ideal.ring().subring(vars), std::move(gens));
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.nvars();
  const Monomial top = ideal.lcm_of_generators();
  // first_new[i]: index of x_{i,2}; x_{i,1} is x_i itself.
  std::vector<int> first_new(n, -1);
  std::vector<int> parent;
  for (int i = 0; i < n; ++i) parent.push_back(i);
  int next = n;
  for (int i = 0; i < n; ++i) {
    if (top[i] >= 2) {
      first_new[i] = next;
      for (int k = 2; k <= top[i]; ++k) parent.push_back(i);
      next += top[i] - 1;
    }
  }
  const int total = next;
  RingCtx ring(total, ideal.ring().exponent_cap());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    Monomial p(total);
    for (int i = 0; i < n; ++i) {
      if (g[i] >= 1) p[i] = 1;
      for (int k = 2; k <= g[i]; ++k) p[first_new[i] + k - 2] = 1;
    }
    gens.push_back(std::move(p));
  }
  return Polarization{MonomialIdeal(std::move(ring), std::move(gens)), total - n, std::move(parent)};
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, ideal.ring());
  }
  return out;
}

}  // namespace stanley
