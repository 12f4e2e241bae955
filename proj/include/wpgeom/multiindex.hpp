#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpgeom {

/// Exponent vector of a monomial in up to kMaxVars variables.
///
/// Multi-indices are the keys of every truncated power series in this
/// library. They are small value types: comparable (lexicographic, so they
/// can key a std::map), addable, and partially subtractable.
class MultiIndex {
 public:
  static constexpr int kMaxVars = 8;

  MultiIndex() : nvars_(0) { exps_.fill(0); }

  explicit MultiIndex(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    exps_.fill(0);
  }

  MultiIndex(std::initializer_list<int> exps) : nvars_(0) {
    exps_.fill(0);
    for (int e : exps) exps_[nvars_++] = static_cast<std::uint8_t>(e);
  }

  /// e_i: the exponent vector of the variable z_i.
  static MultiIndex unit(int nvars, int i) {
    MultiIndex m(nvars);
    m.exps_[i] = 1;
    return m;
  }

  int vars() const { return nvars_; }

  int operator[](int i) const { return exps_[i]; }

  void set(int i, int value) { exps_[i] = static_cast<std::uint8_t>(value); }

  /// Total degree |beta|.
  int degree() const {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += exps_[i];
    return d;
  }

  MultiIndex plus(const MultiIndex& other) const {
    MultiIndex r(nvars_);
    for (int i = 0; i < nvars_; ++i)
      r.exps_[i] = static_cast<std::uint8_t>(exps_[i] + other.exps_[i]);
    return r;
  }

  /// this - other, or nullopt if any component would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const {
    MultiIndex r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      if (exps_[i] < other.exps_[i]) return std::nullopt;
      r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
    }
    return r;
  }

  /// beta! as a double (exact for the degrees handled here).
  double factorial() const {
    double f = 1.0;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 2; k <= exps_[i]; ++k) f *= k;
    return f;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < nvars_; ++i) {
      if (i) s += ",";
      s += std::to_string(exps_[i]);
    }
    return s + ")";
  }

  /// All multi-indices on nvars variables with total degree <= max_degree,
  /// in increasing lexicographic order.
  static std::vector<MultiIndex> all_up_to(int nvars, int max_degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(nvars);
    enumerate(nvars, max_degree, 0, cur, out);
    return out;
  }

 private:
  static void enumerate(int nvars, int budget, int pos, MultiIndex& cur,
                        std::vector<MultiIndex>& out) {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur.set(pos, e);
      enumerate(nvars, budget - e, pos + 1, cur, out);
    }
    cur.set(pos, 0);
  }

  std::array<std::uint8_t, kMaxVars> exps_;
  std::uint8_t nvars_;
};

/// Binomial coefficient C(n, k) as a double.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace wpgeom
