// Copyright 2026 The cyclomat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclomat/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cyclomat {

Digraph::Digraph(std::size_t n) : n_(n), entries_(n * n, 0) {
  if (n == 0) throw std::invalid_argument("digraph order must be at least 1");
}

Digraph::Digraph(std::size_t n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {}

Digraph::Digraph(std::initializer_list<std::initializer_list<Entry>> rows)
    : Digraph(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("matrix is not square");
    std::copy(r.begin(), r.end(), entries_.begin() + i * n_);
    ++i;
  }
}

Digraph Digraph::FromRows(const std::vector<std::vector<Entry>>& rows) {
  Digraph g(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("matrix is not square");
    std::copy(rows[i].begin(), rows[i].end(), g.entries_.begin() + i * g.n_);
  }
  return g;
}

Digraph Digraph::FromRowMajor(std::size_t n, std::vector<Entry> entries) {
  if (n == 0) throw std::invalid_argument("digraph order must be at least 1");
  if (entries.size() != n * n)
    throw std::invalid_argument("row-major data does not have n*n entries");
  return Digraph(n, std::move(entries));
}

VertexSet::VertexSet(std::vector<std::size_t> sorted) : v_(std::move(sorted)) {
  for (std::size_t k = 1; k < v_.size(); ++k) {
    if (v_[k - 1] >= v_[k])
      throw std::invalid_argument("vertex set must be strictly increasing");
  }
}

VertexSet VertexSet::FromUnsorted(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return VertexSet(std::move(indices));
}

VertexSet VertexSet::All(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return VertexSet(std::move(v));
}

bool VertexSet::contains(std::size_t v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

SurdMatrix::SurdMatrix(std::size_t n) : t_(n) {}

SurdMatrix SurdMatrix::FromSquares(const Digraph& t) {
  if (!is_symmetric(t))
    throw std::invalid_argument("surd matrix must be symmetric");
  return SurdMatrix(t);
}

void SurdMatrix::set(std::size_t i, std::size_t j, Entry t_value) {
  t_.set(i, j, t_value);
  t_.set(j, i, t_value);
}

double SurdMatrix::value(std::size_t i, std::size_t j) const {
  const Entry t = t_(i, j);
  return sign(t) * std::sqrt(static_cast<double>(t < 0 ? -t : t));
}

int sign(Entry x) { return (x > 0) - (x < 0); }

bool is_sign_symmetric(const Digraph& g) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sign(g(i, j)) != sign(g(j, i))) return false;
  return true;
}

bool is_symmetric(const Digraph& g) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) return false;
  return true;
}

bool has_nonnegative_entries(const Digraph& g) {
  return std::all_of(g.entries().begin(), g.entries().end(),
                     [](Entry x) { return x >= 0; });
}

bool has_charge(const Digraph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.charge(i) != 0) return true;
  return false;
}

Digraph transpose(const Digraph& g) {
  const std::size_t n = g.order();
  Digraph t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.set(j, i, g(i, j));
  return t;
}

Digraph negated(const Digraph& g) {
  std::vector<Entry> e = g.entries();
  for (Entry& x : e) {
    if (x == std::numeric_limits<Entry>::min())
      throw std::overflow_error("cannot negate INT64_MIN entry");
    x = -x;
  }
  return Digraph::FromRowMajor(g.order(), std::move(e));
}

Digraph multiply(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("multiply: order mismatch");
  const std::size_t n = a.order();
  Digraph c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += static_cast<__int128>(a(i, k)) * b(k, j);
      }
      if (acc > std::numeric_limits<Entry>::max() ||
          acc < std::numeric_limits<Entry>::min())
        throw std::overflow_error("multiply: entry overflows int64");
      c.set(i, j, static_cast<Entry>(acc));
    }
  }
  return c;
}

Digraph induced_subgraph(const Digraph& g, const VertexSet& keep) {
  if (keep.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (keep.indices().back() >= g.order())
    throw std::invalid_argument("induced_subgraph: vertex index out of range");
  return induced_subgraph(g, std::span<const std::size_t>(keep.indices()));
}

Digraph induced_subgraph(const Digraph& g, std::span<const std::size_t> order) {
  if (order.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  Digraph h(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.order())
      throw std::invalid_argument("induced_subgraph: vertex index out of range");
    for (std::size_t j = 0; j < order.size(); ++j)
      h.set(i, j, g(order[i], order[j]));
  }
  return h;
}

namespace {

// Vertices reachable from `start` along nonzero arcs; forward uses a(u,v),
// backward uses a(v,u).
std::vector<char> reachable(const Digraph& g, std::size_t start, bool forward) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v] || v == u) continue;
      if ((forward ? g(u, v) : g(v, u)) != 0) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const Digraph& g) {
  const auto fwd = reachable(g, 0, true);
  const auto bwd = reachable(g, 0, false);
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!fwd[v] || !bwd[v]) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<char> assigned(n, 0);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (assigned[s]) continue;
    const auto fwd = reachable(g, s, true);
    const auto bwd = reachable(g, s, false);
    std::vector<std::size_t> comp;
    for (std::size_t v = s; v < n; ++v) {
      if (fwd[v] && bwd[v]) {
        comp.push_back(v);
        assigned[v] = 1;
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> symmetric_components(const Digraph& g) {
  const std::size_t n = g.order();
  Digraph star(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) == g(j, i)) star.set(i, j, g(i, j));
  return connected_components(star);
}

std::string to_string(const Digraph& g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (j) os << ',';
      os << g(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace cyclomat
