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

#include "cyclomat/symmetrize.hpp"

#include <algorithm>
#include <deque>

namespace cyclomat {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Entry checked_product(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("symmetrization entry overflows int64");
  return out;
}

struct Labelling {
  std::vector<mpq_class> dsq;
  std::vector<std::size_t> component;  // root index per vertex
  std::optional<CycleViolation> violation;
};

std::vector<std::size_t> path_from_root(const std::vector<std::size_t>& parent,
                                        std::size_t v) {
  std::vector<std::size_t> path;
  for (std::size_t x = v; x != kNone; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

CycleViolation make_violation(const Digraph& g,
                              const std::vector<std::size_t>& parent,
                              std::size_t u, std::size_t v) {
  const auto pu = path_from_root(parent, u);
  const auto pv = path_from_root(parent, v);
  std::size_t common = 0;
  while (common < pu.size() && common < pv.size() && pu[common] == pv[common])
    ++common;
  // Cycle: lca -> ... -> u -> v -> ... -> (child of lca on v's side).
  CycleViolation out;
  out.cycle.assign(pu.begin() + static_cast<std::ptrdiff_t>(common - 1),
                   pu.end());
  for (std::size_t k = pv.size(); k-- > common;) out.cycle.push_back(pv[k]);
  out.forward_product = 1;
  out.backward_product = 1;
  const std::size_t t = out.cycle.size();
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t a = out.cycle[k];
    const std::size_t b = out.cycle[(k + 1) % t];
    out.forward_product *= mpz_class(static_cast<long>(g(a, b)));
    out.backward_product *= mpz_class(static_cast<long>(g(b, a)));
  }
  return out;
}

// Breadth-first labelling: the root of each component gets d^2 = 1 and an
// arc u -> v sets d_v^2 = d_u^2 * a_vu / a_uv. Every arc is examined, so arcs
// outside the BFS tree are checked against the finished labels as well.
Labelling label(const Digraph& g) {
  const std::size_t n = g.order();
  Labelling out;
  out.dsq.assign(n, mpq_class(0));
  out.component.assign(n, kNone);
  std::vector<std::size_t> parent(n, kNone);
  for (std::size_t root = 0; root < n; ++root) {
    if (out.component[root] != kNone) continue;
    out.dsq[root] = 1;
    out.component[root] = root;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || g(u, v) == 0) continue;
        mpq_class candidate = out.dsq[u] * mpq_class(static_cast<long>(g(v, u)),
                                                      1) /
                              mpq_class(static_cast<long>(g(u, v)), 1);
        candidate.canonicalize();
        if (out.component[v] == kNone) {
          out.dsq[v] = candidate;
          out.component[v] = root;
          parent[v] = u;
          queue.push_back(v);
        } else if (out.dsq[v] != candidate) {
          out.violation = make_violation(g, parent, u, v);
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::optional<CycleViolation> check_cycle_condition(const Digraph& g) {
  if (!is_sign_symmetric(g))
    throw std::invalid_argument("check_cycle_condition: input is not sign symmetric");
  return label(g).violation;
}

bool is_symmetrizable(const Digraph& g) {
  return is_sign_symmetric(g) && !label(g).violation.has_value();
}

Symmetrizer compute_symmetrizer(const Digraph& g) {
  if (!is_sign_symmetric(g))
    throw NotSymmetrizableError("matrix is not sign symmetric", std::nullopt);
  Labelling lab = label(g);
  if (lab.violation)
    throw NotSymmetrizableError("matrix violates the cycle condition",
                                std::move(lab.violation));
  const std::size_t n = g.order();
  Symmetrizer out;
  out.dsq.assign(n, mpz_class(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (lab.component[root] != root) continue;
    mpz_class den_lcm = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (lab.component[v] == root)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                lab.dsq[v].get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (lab.component[v] != root) continue;
      mpq_class scaled = lab.dsq[v] * den_lcm;
      out.dsq[v] = scaled.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), out.dsq[v].get_mpz_t());
    }
    for (std::size_t v = 0; v < n; ++v)
      if (lab.component[v] == root) out.dsq[v] /= num_gcd;
  }
  return out;
}

SurdMatrix symmetrization(const Digraph& g) {
  if (!is_sign_symmetric(g))
    throw NotSymmetrizableError("matrix is not sign symmetric", std::nullopt);
  if (auto v = label(g).violation)
    throw NotSymmetrizableError("matrix violates the cycle condition", std::move(v));
  const std::size_t n = g.order();
  SurdMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Entry c = g(i, i);
    s.set(i, i, sign(c) * checked_product(c, c));
    for (std::size_t j = i + 1; j < n; ++j)
      s.set(i, j, sign(g(i, j)) * checked_product(g(i, j), g(j, i)));
  }
  return s;
}

bool balancing_holds(const Digraph& g, const Symmetrizer& d) {
  const std::size_t n = g.order();
  if (d.dsq.size() != n)
    throw std::invalid_argument("balancing_holds: symmetrizer length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const mpz_class lhs = mpz_class(static_cast<long>(g(i, j))) * d.dsq[j];
      const mpz_class rhs = mpz_class(static_cast<long>(g(j, i))) * d.dsq[i];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace cyclomat
