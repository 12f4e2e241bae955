#pragma once

#include <array>
#include <vector>

namespace wpgeom {

/// Tiny dense rank-R tensor over an arbitrary element type (Complex, Jet,
/// BiJet). All axes share one extent n; at desk scale n <= 4 so storage and
/// loops are trivial.
template <class T, int R>
class Tensor {
 public:
  Tensor() : n_(0) {}

  explicit Tensor(int n, const T& init = T()) : n_(n) {
    std::size_t size = 1;
    for (int r = 0; r < R; ++r) size *= n_;
    data_.assign(size, init);
  }

  int extent() const { return n_; }

  template <class... Idx>
  T& operator()(Idx... idx) {
    static_assert(sizeof...(Idx) == R);
    return data_[flatten({idx...})];
  }

  template <class... Idx>
  const T& operator()(Idx... idx) const {
    static_assert(sizeof...(Idx) == R);
    return data_[flatten({idx...})];
  }

  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

 private:
  std::size_t flatten(const std::array<int, R>& idx) const {
    std::size_t f = 0;
    for (int r = 0; r < R; ++r) f = f * n_ + idx[r];
    return f;
  }

  int n_;
  std::vector<T> data_;
};

}  // namespace wpgeom
