#include "stanley/decomposition.hpp"

#include <algorithm>
#include <map>

#include "stanley/error.hpp"

namespace stanley {

IrreducibleComponent::IrreducibleComponent(std::vector<Power> powers) : powers_(std::move(powers)) {
  if (powers_.empty()) {
    throw DomainError("irreducible component needs at least one generator");
  }
  std::sort(powers_.begin(), powers_.end());
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    auto [var, exp] = powers_[k];
    if (exp < 1) throw std::invalid_argument("irreducible component exponents must be positive");
    if (k > 0 && powers_[k - 1].first == var) {
      throw std::invalid_argument("variable repeated in irreducible component");
    }
    support_.insert(var);
  }
}

IrreducibleComponent IrreducibleComponent::from_ideal(const MonomialIdeal& ideal) {
  std::vector<Power> powers;
  for (const auto& g : ideal.generators()) {
    if (!g.is_pure_power()) {
      throw DomainError("generator " + to_string(g, ideal.ring()) + " is not a pure power");
    }
    int var = g.support().indices().front();
    powers.emplace_back(var, g[var]);
  }
  return IrreducibleComponent(std::move(powers));
}

Exponent IrreducibleComponent::exponent(int var) const {
  for (auto [v, e] : powers_) {
    if (v == var) return e;
  }
  return 0;
}

bool IrreducibleComponent::contains(const Monomial& m) const {
  return std::any_of(powers_.begin(), powers_.end(), [&](const Power& p) { return m[p.first] >= p.second; });
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  return std::all_of(other.powers_.begin(), other.powers_.end(), [&](const Power& p) {
    Exponent mine = exponent(p.first);
    return mine > 0 && p.second >= mine;
  });
}

MonomialIdeal IrreducibleComponent::to_ideal(const RingCtx& ring) const {
  std::vector<Monomial> gens;
  for (auto [v, e] : powers_) gens.push_back(Monomial::variable(ring.nvars(), v, e));
  return MonomialIdeal(ring, std::move(gens));
}

bool IrreducibleComponent::operator<(const IrreducibleComponent& other) const {
  auto a = support_.indices();
  auto b = other.support_.indices();
  if (a != b) return a < b;
  return powers_ < other.powers_;
}

Decomposition::Decomposition(RingCtx ring, std::vector<IrreducibleComponent> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.empty()) {
    throw DomainError("decomposition needs at least one component");
  }
  for (const auto& q : components_) {
    if (!q.support().is_subset_of(VarSet::all(ring_.nvars()))) {
      throw RingMismatch("component uses variables outside the ring");
    }
  }
  std::sort(components_.begin(), components_.end());
}

MonomialIdeal Decomposition::intersection() const {
  MonomialIdeal acc = component_ideal(0);
  for (int j = 1; j < size(); ++j) acc = intersect(acc, component_ideal(j));
  return acc;
}

Decomposition prune_irredundant(RingCtx ring, std::vector<IrreducibleComponent> components) {
  std::vector<bool> removed(components.size(), false);
  for (std::size_t k = 0; k < components.size(); ++k) {
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j != k && !removed[j] && components[k].contains(components[j])) {
        removed[k] = true;
        break;
      }
    }
  }
  std::vector<IrreducibleComponent> kept;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!removed[k]) kept.push_back(std::move(components[k]));
  }
  return Decomposition(std::move(ring), std::move(kept));
}

bool is_irreducible(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return false;
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.is_pure_power(); });
}

namespace {

class Splitter {
public:
  Splitter(RingCtx ring, std::size_t max_nodes) : ring_(std::move(ring)), max_nodes_(max_nodes) {}

  const std::vector<IrreducibleComponent>& run(const std::vector<Monomial>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    if (memo_.size() >= max_nodes_) {
      throw ResourceError("irreducible decomposition exceeded " + std::to_string(max_nodes_) + " sub-ideals");
    }

    auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return !g.is_pure_power(); });
    std::vector<IrreducibleComponent> result;
    if (mixed == gens.end()) {
      result.push_back(IrreducibleComponent::from_ideal(MonomialIdeal(ring_, gens)));
    } else {
      // g = x_i^{e_i} * rest with i the first variable of g; I = (I + x_i^{e_i}) ∩ (I + rest).
      const Monomial& g = *mixed;
      int var = g.support().indices().front();
      Monomial head = Monomial::variable(g.nvars(), var, g[var]);
      Monomial rest = colon(g, head);
      for (const Monomial& piece : {head, rest}) {
        std::vector<Monomial> next(gens);
        next.push_back(piece);
        auto branch = run(minimalize(std::move(next)));
        result.insert(result.end(), branch.begin(), branch.end());
      }
      result = prune_irredundant(ring_, std::move(result)).components();
    }
    return memo_.emplace(gens, std::move(result)).first->second;
  }

private:
  RingCtx ring_;
  std::size_t max_nodes_;
  std::map<std::vector<Monomial>, std::vector<IrreducibleComponent>> memo_;
};

}  // namespace

Decomposition decompose(const MonomialIdeal& ideal, const DecomposeOptions& options) {
  if (ideal.is_zero()) throw DomainError("the zero ideal has no irreducible decomposition");
  if (ideal.is_unit()) throw DomainError("the unit ideal has no irreducible decomposition");
  Splitter splitter(ideal.ring(), options.max_nodes);
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  return Decomposition(ideal.ring(), splitter.run(gens));
}

}  // namespace stanley
