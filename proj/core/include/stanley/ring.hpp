#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace stanley {

inline constexpr int kMaxVariables = 64;
inline constexpr int kDefaultExponentCap = 64;

/// Subset of the variable indices {0, ..., n-1}, stored as a 64-bit mask.
class VarSet {
public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VarSet all(int n) {
    return VarSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VarSet single(int i) { return VarSet(std::uint64_t{1} << i); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool is_subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet operator-(VarSet o) const { return VarSet(bits_ & ~o.bits_); }
  constexpr VarSet& operator|=(VarSet o) { bits_ |= o.bits_; return *this; }
  constexpr VarSet& operator&=(VarSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const VarSet&) const = default;

  // Member indices in increasing order.
  std::vector<int> indices() const;

private:
  std::uint64_t bits_ = 0;
};

/// Polynomial ring context K[x1..xn]. Only the variable count and display
/// names matter; the coefficient field never appears.
class RingCtx {
public:
  explicit RingCtx(int n, int exponent_cap = kDefaultExponentCap);
  RingCtx(std::vector<std::string> names, int exponent_cap = kDefaultExponentCap);

  int nvars() const { return data_->names.size(); }
  int exponent_cap() const { return data_->exponent_cap; }
  const std::string& name(int i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const { return data_->names; }

  // Dense ring on the given ambient variables (names carried over, order kept).
  RingCtx subring(VarSet vars) const;

  bool operator==(const RingCtx& other) const;

private:
  struct Data {
    std::vector<std::string> names;
    int exponent_cap;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace stanley
