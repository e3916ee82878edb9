#include "densekit/cuts.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace densekit {

namespace {

std::vector<char> membership(std::size_t n, const VertexSet& s) {
  std::vector<char> in(n, 0);
  for (VertexId v : s) in[v] = 1;
  return in;
}

}  // namespace

double weight_between(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  auto in2 = membership(g.vertex_count(), s2);
  double total = 0;
  for (VertexId u : s1)
    for (const auto& [v, w] : g.neighbors(u))
      if (in2[v]) total += w;
  return total;
}

double arc_weight_between(const Digraph& d, const VertexSet& from, const VertexSet& to) {
  auto in2 = membership(d.vertex_count(), to);
  double total = 0;
  for (VertexId u : from)
    for (const auto& [v, w] : d.out_neighbors(u))
      if (in2[v]) total += w;
  return total;
}

namespace {

double boundary_weight(const Graph& g, const VertexSet& s) {
  auto in = membership(g.vertex_count(), s);
  double cut = 0;
  for (VertexId u : s)
    for (const auto& [v, w] : g.neighbors(u))
      if (!in[v]) cut += w;
  return cut;
}

}  // namespace

double conductance(const Graph& g, const VertexSet& s) {
  if (s.empty() || s.size() >= g.vertex_count())
    throw std::domain_error("conductance requires a nonempty proper subset");
  double cut = boundary_weight(g, s);
  if (cut == 0) return 0.0;
  double vol = g.volume(s);
  return cut / std::min(vol, g.total_volume() - vol);
}

double conductance_one_sided(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::domain_error("conductance of empty set");
  double cut = boundary_weight(g, s);
  if (cut == 0) return 0.0;
  return cut / g.volume(s);
}

double bipartiteness(const Graph& g, const VertexSet& l, const VertexSet& r) {
  if (!sets_disjoint(l, r)) throw std::domain_error("bipartiteness: L and R overlap");
  double vol = g.volume(l) + g.volume(r);
  if (vol <= 0) throw std::domain_error("bipartiteness: vol(L u R) is zero");
  return 1.0 - 2.0 * weight_between(g, l, r) / vol;
}

double flow_ratio(const Digraph& d, const VertexSet& l, const VertexSet& r) {
  if (!sets_disjoint(l, r)) throw std::domain_error("flow_ratio: L and R overlap");
  double denom = d.volume_out(l) + d.volume_in(r);
  if (denom <= 0) throw std::domain_error("flow_ratio: vol_out(L) + vol_in(R) is zero");
  return 1.0 - 2.0 * arc_weight_between(d, l, r) / denom;
}

double cut_imbalance(const Digraph& d, const VertexSet& l, const VertexSet& r) {
  if (!sets_disjoint(l, r)) throw std::domain_error("cut_imbalance: L and R overlap");
  double lr = arc_weight_between(d, l, r);
  double rl = arc_weight_between(d, r, l);
  if (lr + rl <= 0) throw std::domain_error("cut_imbalance: no edges between L and R");
  return 0.5 * std::abs((lr - rl) / (lr + rl));
}

double restricted_weight(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  auto ina = membership(h.vertex_count(), a);
  auto inb = membership(h.vertex_count(), b);
  auto inc = membership(h.vertex_count(), c);
  double total = 0;
  for (const auto& e : h.edges()) {
    bool hits_a = false, hits_b = false, hits_c = false;
    for (VertexId v : e.members) {
      hits_a |= static_cast<bool>(ina[v]);
      hits_b |= static_cast<bool>(inb[v]);
      hits_c |= static_cast<bool>(inc[v]);
    }
    if (hits_a && hits_b && !hits_c) total += e.w;
  }
  return total;
}

double hyper_bipartiteness(const Hypergraph& h, const VertexSet& l, const VertexSet& r) {
  if (!sets_disjoint(l, r)) throw std::domain_error("hyper_bipartiteness: L and R overlap");
  double vol = h.volume(l) + h.volume(r);
  if (vol <= 0) throw std::domain_error("hyper_bipartiteness: vol(L u R) is zero");
  auto inl = membership(h.vertex_count(), l);
  auto inr = membership(h.vertex_count(), r);
  double num = 0;
  for (const auto& e : h.edges()) {
    std::size_t cl = 0, cr = 0;
    for (VertexId v : e.members) {
      cl += inl[v];
      cr += inr[v];
    }
    std::size_t rank = e.members.size();
    if (cl == rank || cr == rank)
      num += 2.0 * e.w;  // edge confined to one side: w(L | ~L) or w(R | ~R)
    else if (cl > 0 && cr == 0)
      num += e.w;  // crosses out of L while avoiding R: w(L, ~L | R)
    else if (cr > 0 && cl == 0)
      num += e.w;  // crosses out of R while avoiding L: w(R, ~R | L)
  }
  return num / vol;
}

double hyper_conductance_one_sided(const Hypergraph& h, const VertexSet& s) {
  if (s.empty()) throw std::domain_error("conductance of empty set");
  auto in = membership(h.vertex_count(), s);
  double cut = 0;
  for (const auto& e : h.edges()) {
    std::size_t c = 0;
    for (VertexId v : e.members) c += in[v];
    if (c > 0 && c < e.members.size()) cut += e.w;
  }
  double vol = h.volume(s);
  if (cut == 0) return 0.0;
  return cut / vol;
}

}  // namespace densekit
