#include "stanley/ring.hpp"

#include <set>
#include <stdexcept>

#include "stanley/error.hpp"

namespace stanley {

std::vector<int> VarSet::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  return names;
}

}  // namespace

RingCtx::RingCtx(int n, int exponent_cap) : RingCtx(default_names(n < 0 ? 0 : n), exponent_cap) {}

RingCtx::RingCtx(std::vector<std::string> names, int exponent_cap) {
  if (names.empty()) {
    throw DomainError("ring must have at least one variable");
  }
  if (names.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw ResourceError("ring has " + std::to_string(names.size()) + " variables; at most " +
                        std::to_string(kMaxVariables) + " are supported");
  }
  if (exponent_cap < 1) {
    throw std::invalid_argument("exponent cap must be positive");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) {
    throw std::invalid_argument("variable names must be unique");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names), exponent_cap});
}

RingCtx RingCtx::subring(VarSet vars) const {
  std::vector<std::string> names;
  for (int i : vars.indices()) {
    names.push_back(name(i));
  }
  return RingCtx(std::move(names), exponent_cap());
}

bool RingCtx::operator==(const RingCtx& other) const {
  return data_ == other.data_ ||
         (data_->names == other.data_->names && data_->exponent_cap == other.data_->exponent_cap);
}

}  // namespace stanley
