#pragma once

#include "canonlat/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace canonlat {

// Hashing and ordering for exact vectors and matrices, so they can key
// hash sets and sorted containers.

template <typename Derived>
std::size_t hash_dense(const Eigen::DenseBase<Derived>& m) {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(m.rows() * 131 + m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      h ^= std::hash<typename Derived::Scalar>{}(m(i, j)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct DenseHash {
  template <typename Derived>
  std::size_t operator()(const Eigen::DenseBase<Derived>& m) const {
    return hash_dense(m);
  }
};

struct DenseEqual {
  template <typename A, typename B>
  bool operator()(const Eigen::DenseBase<A>& a, const Eigen::DenseBase<B>& b) const {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.derived() == b.derived();
  }
};

/// Lexicographic order on column-major entries (shape first).
struct DenseLess {
  template <typename A, typename B>
  bool operator()(const Eigen::DenseBase<A>& a, const Eigen::DenseBase<B>& b) const {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (Index j = 0; j < a.cols(); ++j)
      for (Index i = 0; i < a.rows(); ++i) {
        if (a(i, j) < b(i, j)) return true;
        if (b(i, j) < a(i, j)) return false;
      }
    return false;
  }
};

/// Worker count: CANONLAT_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();

/// Applies fn to every index in [0, count) on up to worker_count() threads.
/// fn must only write to per-index storage; results are therefore
/// independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// out[i] = fn(in[i]), evaluated in parallel, order preserved.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& in, Fn fn) {
  using Out = decltype(fn(in[0]));
  std::vector<Out> out(in.size());
  parallel_for(in.size(), [&](std::size_t i) { out[i] = fn(in[i]); });
  return out;
}

}  // namespace canonlat
