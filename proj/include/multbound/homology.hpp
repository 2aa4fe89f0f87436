#pragma once

// Exact ranks over Q and homology dimensions of finite chain complexes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "multbound/error.hpp"
#include "multbound/simplicial.hpp"

namespace multbound {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix. Zero entries are never stored.
class ExactMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Index, BigInt>& entries() const { return entries_; }

  void set(std::size_t r, std::size_t c, BigInt v) {
    if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = std::move(v);
  }
  void add(std::size_t r, std::size_t c, const BigInt& v) { set(r, c, at(r, c) + v); }

  BigInt at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
  }

  /// this * other
  ExactMatrix operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix extents do not compose");
    std::vector<std::vector<std::pair<std::size_t, const BigInt*>>> by_row(other.rows_);
    for (const auto& [rc, v] : other.entries_) by_row[rc.first].emplace_back(rc.second, &v);
    ExactMatrix out(rows_, other.cols_);
    for (const auto& [rc, v] : entries_)
      for (const auto& [c, w] : by_row[rc.second]) out.add(rc.first, c, v * *w);
    return out;
  }

  bool is_zero() const { return entries_.empty(); }
  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, BigInt> entries_;
};

namespace detail {

// Fraction-free (Bareiss) elimination; every intermediate is a minor of the input.
template <typename Int, typename Wide, typename Overflow>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a, std::size_t cols, Overflow&& narrow) {
  std::size_t rows = a.size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Int piv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Wide num = Wide(piv) * Wide(a[i][j]) - Wide(lead) * Wide(a[rank][j]);
        auto v = narrow(num / Wide(prev));
        if (!v) return std::nullopt;
        a[i][j] = *v;
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over Q. Tries 64-bit minors with 128-bit products first and falls back
/// to arbitrary precision on overflow.
inline std::size_t rank(const ExactMatrix& m) {
  if (m.is_zero()) return 0;
  bool small = true;
  for (const auto& [rc, v] : m.entries())
    if (abs(v) > std::numeric_limits<std::int64_t>::max() / 4) small = false;
  if (small) {
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = static_cast<std::int64_t>(v);
    auto r = detail::bareiss_rank<std::int64_t, __int128>(std::move(a), m.cols(), [](__int128 x) -> std::optional<std::int64_t> {
      constexpr __int128 lim = __int128{1} << 62;  // keeps the next cross product inside 128 bits
      if (x > lim || x < -lim) return std::nullopt;
      return static_cast<std::int64_t>(x);
    });
    if (r) return *r;
  }
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols(), 0));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  return *detail::bareiss_rank<BigInt, BigInt>(std::move(a), m.cols(), [](BigInt x) -> std::optional<BigInt> { return x; });
}

/// C_low <- C_{low+1} <- ... <- C_{low+L}. boundary(k) maps C_k to C_{k-1} and
/// has rows = dim C_{k-1}, cols = dim C_k.
class FiniteChainComplex {
 public:
  /// dims[t] = dim C_{low+t}; maps[t] = boundary out of C_{low+t+1}.
  FiniteChainComplex(int low, std::vector<std::size_t> dims, std::vector<ExactMatrix> maps, bool verify = true)
      : low_(low), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.empty() ? !maps_.empty() : maps_.size() + 1 != dims_.size())
      throw InputError("chain complex needs one boundary map between consecutive groups");
    for (std::size_t t = 0; t < maps_.size(); ++t)
      if (maps_[t].rows() != dims_[t] || maps_[t].cols() != dims_[t + 1])
        throw InputError("boundary map extents do not match group dimensions");
    if (verify)
      for (std::size_t t = 0; t + 1 < maps_.size(); ++t)
        if (!(maps_[t] * maps_[t + 1]).is_zero()) throw InputError("boundary maps do not square to zero");
  }

  int lowest() const { return low_; }
  int highest() const { return low_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int k) const {
    if (k < low_ || k > highest()) return 0;
    return dims_[static_cast<std::size_t>(k - low_)];
  }
  /// boundary out of C_k (k in low+1..highest)
  const ExactMatrix& boundary(int k) const { return maps_.at(static_cast<std::size_t>(k - low_ - 1)); }

 private:
  int low_;
  std::vector<std::size_t> dims_;
  std::vector<ExactMatrix> maps_;
};

/// dim H_k for k = lowest..highest.
inline std::vector<std::size_t> homology_dims(const FiniteChainComplex& c) {
  int lo = c.lowest(), hi = c.highest();
  if (hi < lo) return {};
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 2), 0);  // ranks[t] = rank of boundary out of C_{lo+t}
  for (int k = lo + 1; k <= hi; ++k) ranks[static_cast<std::size_t>(k - lo)] = rank(c.boundary(k));
  std::vector<std::size_t> out;
  for (int k = lo; k <= hi; ++k) {
    std::size_t t = static_cast<std::size_t>(k - lo);
    out.push_back(c.dim(k) - ranks[t] - ranks[t + 1]);
  }
  return out;
}

/// Augmented simplicial chain complex, C_{-1} = span{emptyset}.
inline FiniteChainComplex simplicial_chain_complex(const SimplicialComplex& d) {
  if (d.is_void()) return FiniteChainComplex(-1, {0}, {});
  std::vector<VertexSet> faces = d.faces();
  int top = d.dimension();
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(top + 2));
  for (VertexSet f : faces) by_dim[static_cast<std::size_t>(face_size(f))].push_back(f);
  std::vector<std::map<VertexSet, std::size_t>> index(by_dim.size());
  std::vector<std::size_t> dims;
  for (std::size_t s = 0; s < by_dim.size(); ++s) {
    for (std::size_t k = 0; k < by_dim[s].size(); ++k) index[s][by_dim[s][k]] = k;
    dims.push_back(by_dim[s].size());
  }
  std::vector<ExactMatrix> maps;
  for (std::size_t s = 1; s < by_dim.size(); ++s) {
    ExactMatrix m(dims[s - 1], dims[s]);
    for (std::size_t col = 0; col < by_dim[s].size(); ++col) {
      VertexSet f = by_dim[s][col];
      int pos = 0;
      for (VertexSet rest = f; rest; rest &= rest - 1, ++pos) {
        VertexSet v = rest & (~rest + 1);
        m.set(index[s - 1].at(f & ~v), col, pos % 2 == 0 ? 1 : -1);
      }
    }
    maps.push_back(std::move(m));
  }
  return FiniteChainComplex(-1, std::move(dims), std::move(maps), false);
}

/// dim H~_k(Delta; Q) for k = -1..dim Delta. The VOID complex yields {0}.
inline std::vector<std::size_t> reduced_simplicial_homology(const SimplicialComplex& d) {
  return homology_dims(simplicial_chain_complex(d));
}

}  // namespace multbound
