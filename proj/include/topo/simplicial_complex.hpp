#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topo/error.hpp"
#include "topo/simplex.hpp"

namespace topo {

/// Number of cells per dimension, c_0..c_n.
struct CVector {
  std::vector<std::size_t> counts;

  std::size_t dim() const { return counts.empty() ? 0 : counts.size() - 1; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(counts[i]);
    }
    return s + "}";
  }

  friend bool operator==(const CVector&, const CVector&) = default;
};

inline long long euler_characteristic(const CVector& c) {
  long long chi = 0;
  for (std::size_t i = 0; i < c.counts.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(c.counts[i]);
  return chi;
}

/// Finite, non-empty, downward-closed family of simplices, graded by dimension.
/// Within each dimension simplices are kept in lexicographic order; this order
/// defines the chain bases and the global cell ids (dimension-major).
class SimplicialComplex {
 public:
  explicit SimplicialComplex(const std::set<Simplex>& simplices) {
    if (simplices.empty()) throw InvalidInput("empty complex");
    for (const Simplex& s : simplices) {
      auto d = static_cast<std::size_t>(s.dim());
      if (by_dim_.size() <= d) by_dim_.resize(d + 1);
      by_dim_[d].push_back(s);  // std::set iteration keeps lex order per dim
    }
    for (std::size_t d = 1; d < by_dim_.size(); ++d)
      for (const Simplex& s : by_dim_[d])
        for (const Simplex& f : s.facets())
          if (!contains(f))
            throw InvalidInput("not downward closed: " + f.to_string() + " missing from " + s.to_string());
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
      if (by_dim_[d].empty()) throw InvalidInput("no simplices of dimension " + std::to_string(d));
    offsets_.assign(by_dim_.size() + 1, 0);
    for (std::size_t d = 0; d < by_dim_.size(); ++d) offsets_[d + 1] = offsets_[d] + by_dim_[d].size();
  }

  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const noexcept { return offsets_.back(); }

  const std::vector<Simplex>& simplices(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d > dim()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  bool contains(const Simplex& s) const { return index_in_dim(s).has_value(); }

  /// Position of `s` among the simplices of its dimension.
  std::optional<std::size_t> index_in_dim(const Simplex& s) const {
    const auto& v = simplices(s.dim());
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  /// Dimension-major global id of `s`; throws if absent.
  std::size_t global_index(const Simplex& s) const {
    auto i = index_in_dim(s);
    if (!i) throw InvalidInput("simplex " + s.to_string() + " not in complex");
    return offsets_[static_cast<std::size_t>(s.dim())] + *i;
  }

  const Simplex& at_global(std::size_t id) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    auto d = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return by_dim_.at(d).at(id - offsets_[d]);
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const Simplex& s : by_dim_[0]) out.push_back(s[0]);
    return out;
  }

  /// Simplices that are not a facet of any other simplex, in dimension-major order.
  std::vector<Simplex> maximal_simplices() const {
    std::set<Simplex> faces;
    for (std::size_t d = 1; d < by_dim_.size(); ++d)
      for (const Simplex& s : by_dim_[d])
        for (const Simplex& f : s.facets()) faces.insert(f);
    std::vector<Simplex> out;
    for (const auto& layer : by_dim_)
      for (const Simplex& s : layer)
        if (!faces.contains(s)) out.push_back(s);
    return out;
  }

  std::set<Simplex> all() const {
    std::set<Simplex> out;
    for (const auto& layer : by_dim_) out.insert(layer.begin(), layer.end());
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.by_dim_ == b.by_dim_; }

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::size_t> offsets_;
};

namespace detail {
inline void insert_closed(std::set<Simplex>& out, const Simplex& s) {
  if (!out.insert(s).second) return;
  for (const Simplex& f : s.facets()) insert_closed(out, f);
}
}  // namespace detail

/// Smallest downward-closed family containing every generator.
inline SimplicialComplex generate_complex(const std::vector<std::vector<Vertex>>& generators) {
  std::set<Simplex> out;
  for (const auto& g : generators) {
    if (g.empty()) throw InvalidInput("empty generator");
    std::vector<Vertex> vs = g;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    detail::insert_closed(out, Simplex(std::move(vs)));
  }
  return SimplicialComplex(out);
}

inline SimplicialComplex generate_complex(const std::vector<Simplex>& generators) {
  std::set<Simplex> out;
  for (const Simplex& s : generators) detail::insert_closed(out, s);
  return SimplicialComplex(out);
}

inline CVector c_vector(const SimplicialComplex& k) {
  CVector c;
  for (int d = 0; d <= k.dim(); ++d) c.counts.push_back(k.simplices(d).size());
  return c;
}

inline long long euler_characteristic(const SimplicialComplex& k) { return euler_characteristic(c_vector(k)); }

inline SimplicialComplex skeleton(const SimplicialComplex& k, int n) {
  if (n < 0) throw InvalidInput("skeleton dimension must be non-negative");
  if (n >= k.dim()) return k;
  std::set<Simplex> out;
  for (int d = 0; d <= n; ++d) out.insert(k.simplices(d).begin(), k.simplices(d).end());
  return SimplicialComplex(out);
}

/// Vertices of the result are the global ids of the simplices of `k`; simplices
/// are the flags sigma_0 < sigma_1 < ... < sigma_j under the face order.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::set<Simplex> out;
  for (const Simplex& top : k.maximal_simplices()) {
    std::vector<Vertex> perm = top.vertices();
    do {
      std::vector<Vertex> flag;
      std::vector<Vertex> prefix;
      for (Vertex v : perm) {
        prefix.push_back(v);
        flag.push_back(static_cast<Vertex>(k.global_index(Simplex(prefix))));
      }
      detail::insert_closed(out, Simplex(std::move(flag)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex(out);
}

}  // namespace topo
