// Acyclic-subset outer bound. For every nonempty message set S whose
// induced side-information subgraph is acyclic,
//   sum_{j in S} R_j  <=  sum over senders k with S_k meeting S of C_k,
// together with R >= 0. The output is the irredundant canonical system.
#pragma once

#include <cstdint>
#include <vector>

#include "instance.hpp"
#include "polyops.hpp"
#include "regionio.hpp"

namespace icrr {

// Acyclicity of the subgraph induced by `subset`, by iterative DFS with
// the usual three-color scheme (back arc inside the subset => cycle).
inline bool is_acyclic(const SideInfoDigraph& g, std::uint32_t subset) {
  const int n = g.num_vertices;
  std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
  for (int s = 0; s < n; ++s) {
    if (!(subset & (1u << s)) || color[s] != 0) continue;
    std::vector<std::pair<int, std::uint32_t>> stack;  // (vertex, pending successors)
    color[s] = 1;
    stack.push_back({s, g.out[s] & subset});
    while (!stack.empty()) {
      auto& [v, pending] = stack.back();
      if (pending == 0) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = __builtin_ctz(pending);
      pending &= pending - 1;
      if (color[w] == 1) return false;
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, g.out[w] & subset});
      }
    }
  }
  return true;
}

// All nonempty acyclic-inducing subsets, ordered by size then mask.
inline std::vector<std::uint32_t> enumerate_acyclic_sets(const SideInfoDigraph& g,
                                                         int max_vertices = 20) {
  if (g.num_vertices > max_vertices)
    throw std::runtime_error("enumerate_acyclic_sets: vertex count exceeds limit");
  std::vector<std::uint32_t> out;
  const std::uint32_t all = (g.num_vertices == 32)
                                ? 0xffffffffu
                                : ((1u << g.num_vertices) - 1);
  for (std::uint32_t s = 1; s <= all; ++s)
    if (is_acyclic(g, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

inline Polyhedron mais_region(const Instance& inst) {
  auto g = derive_digraph(inst);
  std::vector<VarId> vars;
  for (int j = 1; j <= inst.num_messages; ++j) vars.push_back(VarId::message_rate(j));
  Polyhedron poly(std::move(vars));
  poly.add_nonnegativity();
  for (std::uint32_t s : enumerate_acyclic_sets(g)) {
    LinearInequality q;
    for (int j = 1; j <= inst.num_messages; ++j)
      if (s & (1u << (j - 1))) q.coeffs[VarId::message_rate(j)] = 1;
    q.rhs = 0;
    for (const auto& sd : inst.senders)
      if (sd.messages & s) q.rhs += sd.capacity;
    poly.add(std::move(q));
  }
  return remove_redundant(poly);
}

// Outer bound from a region file; an empty inequality list means the
// full nonnegative orthant over the declared variables.
inline Polyhedron load_outer_region(const std::string& path) {
  Polyhedron poly = load_region(path);
  Polyhedron out(poly.variables());
  out.add_nonnegativity();
  for (const auto& q : poly.inequalities()) out.add(q);
  return out;
}

}  // namespace icrr
