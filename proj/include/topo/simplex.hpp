#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "topo/error.hpp"

namespace topo {

using Vertex = std::uint32_t;

/// A non-empty set of vertex labels, stored in strictly ascending order.
class Simplex {
 public:
  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

  explicit Simplex(std::vector<Vertex> vs) : vertices_(std::move(vs)) {
    if (vertices_.empty()) throw InvalidInput("simplex must be non-empty");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw InvalidInput("simplex has repeated vertex " + std::to_string(*std::adjacent_find(vertices_.begin(), vertices_.end())));
  }

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
  }

  /// The facet obtained by deleting the i-th vertex. Requires dim() >= 1.
  Simplex facet(std::size_t i) const {
    std::vector<Vertex> vs;
    vs.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i) vs.push_back(vertices_[j]);
    return Simplex(std::move(vs), already_sorted{});
  }

  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    if (dim() == 0) return out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(facet(i));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(vertices_[i]);
    }
    return s + "}";
  }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct already_sorted {};
  Simplex(std::vector<Vertex> vs, already_sorted) : vertices_(std::move(vs)) {}

  std::vector<Vertex> vertices_;
};

/// Sign of the permutation sorting `seq` ascending; throws on repeated labels.
inline int permutation_sign(std::span<const Vertex> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) throw InvalidInput("repeated vertex " + std::to_string(seq[i]));
      if (seq[i] > seq[j]) sign = -sign;
    }
  return sign;
}

/// A simplex with orientation relative to ascending vertex order (+1) or its opposite (-1).
struct OrientedSimplex {
  Simplex simplex;
  int sign = 1;

  /// Orientation given by the vertex order in `seq`.
  static OrientedSimplex from_sequence(std::span<const Vertex> seq) {
    int s = permutation_sign(seq);
    return {Simplex(std::vector<Vertex>(seq.begin(), seq.end())), s};
  }

  OrientedSimplex operator-() const { return {simplex, -sign}; }
  friend bool operator==(const OrientedSimplex&, const OrientedSimplex&) = default;
};

/// Formal integer combination of simplices (ascending orientation as basis).
class Chain {
 public:
  Chain() = default;

  void add(const Simplex& s, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const OrientedSimplex& s, long long coeff = 1) { add(s.simplex, coeff * s.sign); }

  Chain& operator+=(const Chain& other) {
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
  }

  long long coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Simplex, long long>& terms() const noexcept { return terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [simplex, c] : terms_) {
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long mag = c < 0 ? -c : c;
      if (mag != 1) s += std::to_string(mag);
      s += simplex.to_string();
      first = false;
    }
    return s;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::map<Simplex, long long> terms_;
};

/// d(v0..vi) = sum_j (-1)^j (v0..^vj..vi); vertices map to the empty chain.
inline Chain boundary_chain(const OrientedSimplex& sigma) {
  Chain out;
  const Simplex& s = sigma.simplex;
  if (s.dim() == 0) return out;
  for (std::size_t j = 0; j < s.size(); ++j) out.add(s.facet(j), (j % 2 == 0 ? 1 : -1) * sigma.sign);
  return out;
}

inline Chain boundary(const Chain& c) {
  Chain out;
  for (const auto& [s, coeff] : c.terms()) {
    if (s.dim() == 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j) out.add(s.facet(j), (j % 2 == 0 ? coeff : -coeff));
  }
  return out;
}

}  // namespace topo
