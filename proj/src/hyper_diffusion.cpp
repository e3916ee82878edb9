#include "densekit/hyper_diffusion.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "densekit/cuts.h"
#include "densekit/eigs.h"
#include "densekit/maxflow.h"

namespace densekit {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// f-values are compared after rounding to 12 decimal digits, which defines
// the equivalence classes stably under floating-point noise.
constexpr double kGrid = 1e12;

std::int64_t grid_key(double x) {
  if (!(std::abs(x) < 1e6)) throw std::domain_error("diffusion vector entry out of range");
  return std::llround(x * kGrid);
}

struct EdgeView {
  std::int64_t max_key = 0, min_key = 0;
  std::vector<VertexId> s_side, i_side;  // argmax / argmin members
  double delta = 0;
  double c = 0;  // w(e) |delta|
};

std::vector<EdgeView> edge_views(const Hypergraph& h, const Eigen::VectorXd& f) {
  std::vector<EdgeView> views(h.edge_count());
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
    const auto& e = h.edge(ei);
    EdgeView v;
    v.max_key = std::numeric_limits<std::int64_t>::min();
    v.min_key = std::numeric_limits<std::int64_t>::max();
    for (VertexId u : e.members) {
      std::int64_t k = grid_key(f[u]);
      v.max_key = std::max(v.max_key, k);
      v.min_key = std::min(v.min_key, k);
    }
    for (VertexId u : e.members) {
      std::int64_t k = grid_key(f[u]);
      if (k == v.max_key) v.s_side.push_back(u);
      if (k == v.min_key) v.i_side.push_back(u);
    }
    v.delta = static_cast<double>(v.max_key + v.min_key) / kGrid;
    v.c = e.w * std::abs(v.delta);
    views[ei] = std::move(v);
  }
  return views;
}

// An edge's footprint inside one equivalence class: it can hold the edge's
// maximum vertices, its minimum vertices, or both (an all-equal edge).
struct ClassRole {
  std::uint32_t edge;
  bool positive;  // delta < 0: mass flows into the class through this edge
  bool s_in, i_in;
};

bool is_positive(double x) { return x > 1e-12; }
bool is_positive(const Rational& x) { return x > 0; }

template <typename Scalar>
Scalar c_exact(const Hypergraph& h, const EdgeView& v, std::uint32_t edge) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    Rational d(v.max_key + v.min_key);
    if (d < 0) d = -d;
    return Rational(h.edge(edge).w) * d / Rational(static_cast<std::int64_t>(kGrid));
  } else {
    (void)h;
    (void)edge;
    return v.c;
  }
}

// One level of the rate recursion: solve the densest-rate LP over the
// remaining class members and return the maximal optimal support.
template <typename Scalar>
std::vector<VertexId> solve_level(const Hypergraph& h, const std::vector<EdgeView>& views,
                                  const std::vector<VertexId>& members, const std::vector<ClassRole>& roles,
                                  typename SimplexSolver<Scalar>::PivotRule rule) {
  const std::size_t nv = members.size();
  std::vector<std::uint32_t> edge_ids;
  std::unordered_map<std::uint32_t, std::size_t> edge_pos;
  for (const auto& r : roles)
    if (!edge_pos.count(r.edge)) {
      edge_pos[r.edge] = edge_ids.size();
      edge_ids.push_back(r.edge);
    }
  const std::size_t ne = edge_ids.size();
  std::unordered_map<VertexId, std::size_t> vert_pos;
  for (std::size_t i = 0; i < nv; ++i) vert_pos[members[i]] = ne + i;
  const std::size_t nvar = ne + nv;

  SimplexSolver<Scalar> lp;
  lp.set_pivot_rule(rule);
  using Rel = typename SimplexSolver<Scalar>::Rel;

  {
    std::vector<Scalar> row(nvar, Scalar(0));
    for (std::size_t i = 0; i < nv; ++i) {
      Scalar deg(0);
      for (std::uint32_t ei : h.incident_edges(members[i])) deg += Scalar(h.edge(ei).w);
      row[ne + i] = deg;
    }
    lp.add_constraint(std::move(row), Rel::Eq, Scalar(1));
  }

  std::vector<char> in_class(h.vertex_count(), 0);
  for (VertexId v : members) in_class[v] = 1;

  auto add_side = [&](const ClassRole& role, const std::vector<VertexId>& side, Rel rel) {
    for (VertexId v : side) {
      if (!in_class[v]) continue;
      std::vector<Scalar> row(nvar, Scalar(0));
      row[edge_pos.at(role.edge)] = Scalar(1);
      row[vert_pos.at(v)] = Scalar(-1);
      lp.add_constraint(std::move(row), rel, Scalar(0));
    }
  };
  for (const auto& role : roles) {
    const auto& view = views[role.edge];
    if (role.s_in) add_side(role, view.s_side, role.positive ? Rel::Eq : Rel::Ge);
    if (role.i_in) add_side(role, view.i_side, role.positive ? Rel::Le : Rel::Eq);
  }

  std::vector<Scalar> objective(nvar, Scalar(0));
  for (const auto& role : roles) {
    Scalar c = c_exact<Scalar>(h, views[role.edge], role.edge);
    // an all-equal edge holds both its S and I conservation shares here
    if (role.s_in && role.i_in) c = c + c;
    objective[edge_pos.at(role.edge)] = role.positive ? c : -c;
  }

  auto primary = lp.maximize(objective);
  if (!primary) throw std::runtime_error("rate LP infeasible (uniform y should be feasible)");

  // Maximal optimal set: grow the support of an optimal point until no zero
  // coordinate can be made positive while staying on the optimal face.
  std::vector<Scalar> acc = primary->x;
  lp.add_constraint(objective, Rel::Ge, primary->objective);
  for (std::size_t round = 0; round <= nv; ++round) {
    std::vector<Scalar> want(nvar, Scalar(0));
    bool any = false;
    for (std::size_t i = 0; i < nv; ++i)
      if (!is_positive(acc[ne + i])) {
        want[ne + i] = Scalar(1);
        any = true;
      }
    if (!any) break;
    auto secondary = lp.maximize(want);
    if (!secondary || !is_positive(secondary->objective)) break;
    for (std::size_t i = 0; i < nvar; ++i) acc[i] = (acc[i] + secondary->x[i]) / Scalar(2);
  }

  std::vector<VertexId> chosen;
  for (std::size_t i = 0; i < nv; ++i)
    if (is_positive(acc[ne + i])) chosen.push_back(members[i]);
  if (chosen.empty()) throw std::runtime_error("rate LP returned an empty support");
  return chosen;
}

struct ConsumedRole {
  std::uint32_t edge;
  bool positive;
  double c;
  VertexSet participants;
};

// Builds the flow network of one level, solves it, and returns the deficit
// cut({s}) - maxflow (zero up to rounding iff valid contributions exist).
// When `contrib` is given the realised flows are recorded as r_e(v).
double level_flow(const Hypergraph& h, const VertexSet& chosen, double delta,
                  const std::vector<ConsumedRole>& roles,
                  std::map<std::pair<std::uint32_t, VertexId>, double>* contrib) {
  // An all-equal edge consumed on both sides carries one constraint: merge.
  std::map<std::uint32_t, ConsumedRole> merged;
  for (const auto& role : roles) {
    auto [it, fresh] = merged.emplace(role.edge, role);
    if (!fresh) {
      for (VertexId v : role.participants) it->second.participants.push_back(v);
      it->second.participants = make_vertex_set(std::move(it->second.participants));
    }
  }

  std::unordered_map<VertexId, int> vnode;
  int next = 2;  // 0 = source, 1 = sink
  for (VertexId v : chosen) vnode[v] = next++;
  std::map<std::uint32_t, int> enode;
  for (const auto& [e, _] : merged) enode[e] = next++;

  MaxFlow flow(next);
  double source_cut = 0;
  for (VertexId v : chosen) {
    double cap = h.degree(v) * std::abs(delta);
    if (delta >= 0) {
      flow.add_edge(vnode[v], 1, cap);
    } else {
      flow.add_edge(0, vnode[v], cap);
      source_cut += cap;
    }
  }
  std::map<std::pair<std::uint32_t, VertexId>, std::pair<int, int>> interior;
  for (const auto& [e, role] : merged) {
    if (role.positive) {
      flow.add_edge(0, enode[e], role.c);
      source_cut += role.c;
    } else {
      flow.add_edge(enode[e], 1, role.c);
    }
    for (VertexId v : role.participants) {
      int a = flow.add_edge(enode[e], vnode.at(v), MaxFlow::kInf);
      int b = flow.add_edge(vnode.at(v), enode[e], MaxFlow::kInf);
      interior[{e, v}] = {a, b};
    }
  }

  double total = flow.solve(0, 1);
  if (contrib) {
    for (const auto& [key, arcs] : interior) {
      double into_v = flow.flow_on(arcs.first) - flow.flow_on(arcs.second);
      double deg = h.degree(key.second);
      if (deg > 0) (*contrib)[key] = into_v / deg;
    }
  }
  return source_cut - total;
}

VertexSet intersect_marked(const std::vector<VertexId>& side, const std::vector<char>& mark) {
  VertexSet out;
  for (VertexId v : side)
    if (mark[v]) out.push_back(v);
  return make_vertex_set(std::move(out));
}

bool all_marked(const std::vector<VertexId>& side, const std::vector<char>& in_members,
                const std::vector<char>& in_chosen) {
  for (VertexId v : side)
    if (in_members[v] && !in_chosen[v]) return false;
  return true;
}

}  // namespace

std::vector<EdgeDiscrepancy> edge_discrepancies(const Hypergraph& h, const Eigen::VectorXd& f) {
  auto views = edge_views(h, f);
  std::vector<EdgeDiscrepancy> out(views.size());
  for (std::size_t i = 0; i < views.size(); ++i)
    out[i] = {static_cast<std::uint32_t>(i), views[i].delta, views[i].c};
  return out;
}

double rayleigh_quotient(const Hypergraph& h, const Eigen::VectorXd& f) {
  double num = 0, den = 0;
  for (const auto& e : h.edges()) {
    double mx = -std::numeric_limits<double>::max(), mn = std::numeric_limits<double>::max();
    for (VertexId v : e.members) {
      mx = std::max(mx, f[v]);
      mn = std::min(mn, f[v]);
    }
    num += e.w * (mx + mn) * (mx + mn);
  }
  for (VertexId v = 0; v < h.vertex_count(); ++v) den += h.degree(v) * f[v] * f[v];
  if (den <= 0) throw std::domain_error("rayleigh_quotient: zero measure");
  return num / den;
}

RatePlan compute_change_rate(const Hypergraph& h, const Eigen::VectorXd& f, int exact_class_limit,
                             SimplexSolver<double>::PivotRule rule) {
  const std::size_t n = h.vertex_count();
  if (static_cast<std::size_t>(f.size()) != n) throw std::invalid_argument("vector size mismatch");
  auto views = edge_views(h, f);

  std::map<std::int64_t, std::vector<VertexId>> classes;
  for (VertexId v = 0; v < n; ++v)
    if (h.degree(v) > 0) classes[grid_key(f[v])].push_back(v);

  RatePlan plan;
  plan.r = Eigen::VectorXd::Zero(n);

  for (auto& [key, initial_members] : classes) {
    // footprint of every adjacent edge in this class
    std::map<std::uint32_t, ClassRole> role_map;
    for (VertexId v : initial_members)
      for (std::uint32_t ei : h.incident_edges(v)) {
        const auto& view = views[ei];
        if (view.delta == 0) continue;
        bool s_in = view.max_key == key, i_in = view.min_key == key;
        if (!s_in && !i_in) continue;
        auto& role = role_map.emplace(ei, ClassRole{ei, view.delta < 0, false, false}).first->second;
        role.s_in |= s_in;
        role.i_in |= i_in;
      }
    std::vector<ClassRole> roles;
    for (auto& [_, role] : role_map) roles.push_back(role);

    std::vector<VertexId> members = initial_members;
    std::vector<char> in_members(n, 0), in_chosen(n, 0);
    for (VertexId v : members) in_members[v] = 1;

    while (!members.empty()) {
      std::vector<VertexId> chosen;
      if (roles.empty() || members.size() == 1) {
        chosen = members;
      } else if (static_cast<int>(members.size()) <= exact_class_limit) {
        auto rational_rule = rule == SimplexSolver<double>::PivotRule::Bland
                                 ? SimplexSolver<Rational>::PivotRule::Bland
                                 : SimplexSolver<Rational>::PivotRule::Dantzig;
        chosen = solve_level<Rational>(h, views, members, roles, rational_rule);
      } else {
        chosen = solve_level<double>(h, views, members, roles, rule);
      }
      for (VertexId v : chosen) in_chosen[v] = 1;

      std::vector<ConsumedRole> consumed;
      std::vector<ClassRole> remaining;
      double gain = 0;
      for (const auto& role : roles) {
        const auto& view = views[role.edge];
        bool consume;
        VertexSet parts;
        if (role.s_in && role.i_in) {
          // all-equal edge: one conservation constraint over all of e
          consume = all_marked(view.s_side, in_members, in_chosen);
          if (consume) parts = intersect_marked(view.s_side, in_chosen);
        } else if (role.s_in) {
          if (role.positive) {
            consume = all_marked(view.s_side, in_members, in_chosen);
            if (consume) parts = intersect_marked(view.s_side, in_chosen);
          } else {
            parts = intersect_marked(view.s_side, in_chosen);
            consume = !parts.empty();
          }
        } else {
          consume = all_marked(view.i_side, in_members, in_chosen);
          if (consume) parts = intersect_marked(view.i_side, in_chosen);
        }
        if (consume) {
          double c = role.s_in && role.i_in ? 2 * view.c : view.c;
          gain += role.positive ? c : -c;
          consumed.push_back({role.edge, role.positive, c, std::move(parts)});
        } else {
          remaining.push_back(role);
        }
      }

      double vol = 0;
      for (VertexId v : chosen) vol += h.degree(v);
      double delta = vol > 0 ? gain / vol : 0.0;
      for (VertexId v : chosen) plan.r[v] = delta;
      plan.levels.push_back({members, chosen, delta});
      if (!consumed.empty()) level_flow(h, make_vertex_set(chosen), delta, consumed, &plan.edge_contrib);

      std::vector<VertexId> rest;
      for (VertexId v : members)
        if (!in_chosen[v]) rest.push_back(v);
      for (VertexId v : chosen) {
        in_members[v] = 0;
        in_chosen[v] = 0;
      }
      members = std::move(rest);
      roles = std::move(remaining);
    }
  }
  return plan;
}

RateVerification verify_rate_plan(const Hypergraph& h, const Eigen::VectorXd& f, const RatePlan& plan,
                                  double tol) {
  const std::size_t n = h.vertex_count();
  auto views = edge_views(h, f);
  RateVerification out;
  out.ok = true;
  std::ostringstream detail;

  // r(v) = sum_e r_e(v), and contributions only on S/I members.
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(n);
  for (const auto& [key, val] : plan.edge_contrib) {
    const auto& view = views[key.first];
    bool on_side = std::find(view.s_side.begin(), view.s_side.end(), key.second) != view.s_side.end() ||
                   std::find(view.i_side.begin(), view.i_side.end(), key.second) != view.i_side.end();
    if (!on_side && std::abs(val) > tol) {
      out.ok = false;
      detail << "contribution outside S/I on edge " << key.first << "; ";
    }
    sums[key.second] += val;
  }
  for (VertexId v = 0; v < n; ++v)
    out.max_consistency_error = std::max(out.max_consistency_error, std::abs(sums[v] - plan.r[v]));

  // Rule (1) per edge and side; an all-equal edge carries both shares on the
  // same vertex set.
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
    const auto& view = views[ei];
    if (view.delta == 0) continue;
    double target = -h.edge(ei).w * view.delta;
    bool all_equal = view.max_key == view.min_key;
    if (all_equal) target *= 2;
    for (const auto* side : {&view.s_side, &view.i_side}) {
      double sum = 0;
      for (VertexId v : *side) {
        auto it = plan.edge_contrib.find({static_cast<std::uint32_t>(ei), v});
        if (it != plan.edge_contrib.end()) sum += h.degree(v) * it->second;
      }
      out.max_rule1_error = std::max(out.max_rule1_error, std::abs(sum - target));
      if (all_equal) break;
    }
  }

  // Reconstruct the (class, rate) levels straight from (f, r) and check that
  // a feasible contribution assignment exists via max-flow saturation.
  std::map<std::pair<std::int64_t, std::int64_t>, VertexSet> groups;
  auto rate_key = [&](double r) { return std::llround(r * kGrid); };
  for (VertexId v = 0; v < n; ++v)
    if (h.degree(v) > 0) groups[{grid_key(f[v]), rate_key(plan.r[v])}].push_back(v);

  std::vector<char> in_group(n, 0);
  for (auto& [gk, members] : groups) {
    members = make_vertex_set(std::move(members));
    for (VertexId v : members) in_group[v] = 1;
    double delta = plan.r[members.front()];

    std::vector<ConsumedRole> roles;
    std::set<std::uint32_t> seen;
    for (VertexId v : members)
      for (std::uint32_t ei : h.incident_edges(v)) {
        const auto& view = views[ei];
        if (view.delta == 0 || seen.count(ei)) continue;
        bool positive = view.delta < 0;
        auto level_participants = [&](const std::vector<VertexId>& side, bool whole) -> VertexSet {
          if (whole) return make_vertex_set({side.begin(), side.end()});
          // participants carry the extreme rate on their side
          double extreme = positive ? std::numeric_limits<double>::max()
                                    : -std::numeric_limits<double>::max();
          for (VertexId u : side)
            extreme = positive ? std::min(extreme, plan.r[u]) : std::max(extreme, plan.r[u]);
          VertexSet p;
          for (VertexId u : side)
            if (rate_key(plan.r[u]) == rate_key(extreme)) p.push_back(u);
          return make_vertex_set(std::move(p));
        };
        VertexSet parts;
        double cap = view.c;
        if (view.max_key == gk.first && view.min_key == gk.first) {
          parts = level_participants(view.s_side, true);
          cap *= 2;  // both conservation shares land on the same set
        } else if (view.max_key == gk.first) {
          parts = level_participants(view.s_side, positive);  // S+: whole side, S-: argmax r
        } else if (view.min_key == gk.first) {
          parts = level_participants(view.i_side, !positive);  // I-: whole side, I+: argmin r
        } else {
          continue;
        }
        // The role belongs to this level iff its participants live here.
        bool here = true, split = false;
        for (VertexId u : parts) {
          if (!in_group[u]) here = false;
          if (rate_key(plan.r[u]) != rate_key(plan.r[parts.front()])) split = true;
        }
        if (split) {
          out.ok = false;
          detail << "participants of edge " << ei << " span several rates; ";
        }
        if (!here) continue;
        seen.insert(ei);
        roles.push_back({ei, positive, cap, std::move(parts)});
      }

    if (!roles.empty() || std::abs(delta) > tol) {
      double deficit = level_flow(h, members, delta, roles, nullptr);
      double scale = std::max(1.0, std::abs(delta) * h.volume(members));
      out.max_flow_deficit = std::max(out.max_flow_deficit, deficit / scale);
    }
    for (VertexId v : members) in_group[v] = 0;
  }

  if (out.max_rule1_error > tol || out.max_consistency_error > tol || out.max_flow_deficit > tol)
    out.ok = false;
  out.detail = detail.str();
  return out;
}

Eigen::VectorXd even_split_rate(const Hypergraph& h, const Eigen::VectorXd& f) {
  const std::size_t n = h.vertex_count();
  if (static_cast<std::size_t>(f.size()) != n) throw std::invalid_argument("vector size mismatch");
  auto views = edge_views(h, f);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
    const auto& view = views[ei];
    if (view.delta == 0) continue;
    double w = h.edge(ei).w;
    for (VertexId u : view.s_side)
      if (h.degree(u) > 0) r[u] -= w * view.delta / (static_cast<double>(view.s_side.size()) * h.degree(u));
    for (VertexId u : view.i_side)
      if (h.degree(u) > 0) r[u] -= w * view.delta / (static_cast<double>(view.i_side.size()) * h.degree(u));
  }
  return r;
}

DiffusionState make_diffusion_state(const Hypergraph& h, const Eigen::VectorXd& f0, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("step size must be positive");
  double norm2 = 0;
  for (VertexId v = 0; v < h.vertex_count(); ++v) norm2 += h.degree(v) * f0[v] * f0[v];
  if (norm2 <= 0) throw std::domain_error("starting vector carries no measure");
  DiffusionState s;
  s.f = f0 / std::sqrt(norm2);
  s.eps = eps;
  s.rq_history.push_back(rayleigh_quotient(h, s.f));
  return s;
}

void diffusion_step(const Hypergraph& h, DiffusionState& state, DiffusionMode mode) {
  Eigen::VectorXd r = mode == DiffusionMode::ExactLp ? compute_change_rate(h, state.f).r
                                                     : even_split_rate(h, state.f);
  double before = state.rq_history.empty() ? rayleigh_quotient(h, state.f) : state.rq_history.back();

  // The continuous diffusion never raises the quotient; a full Euler step can
  // overshoot and oscillate, so the step is halved until it is monotone.
  double eps = state.eps;
  for (int attempt = 0; attempt < 24; ++attempt) {
    Eigen::VectorXd next = state.f + eps * r;
    double norm2 = 0;
    for (VertexId v = 0; v < h.vertex_count(); ++v) norm2 += h.degree(v) * next[v] * next[v];
    if (norm2 <= 1e-280) {
      // the step annihilated the measure (eigenvalue 1/eps); the current
      // vector is a fixed direction
      break;
    }
    next /= std::sqrt(norm2);
    double after = rayleigh_quotient(h, next);
    if (after <= before + 1e-12 * std::max(1.0, before)) {
      state.f = next;
      break;
    }
    eps /= 2;
  }
  state.t += eps;
  state.rq_history.push_back(rayleigh_quotient(h, state.f));
}

BipartitePair two_sided_sweep_hyper(const Hypergraph& h, const Eigen::VectorXd& f) {
  const std::size_t n = h.vertex_count();
  if (static_cast<std::size_t>(f.size()) != n) throw std::invalid_argument("vector size mismatch");
  if (f.cwiseAbs().maxCoeff() == 0) throw std::domain_error("two_sided_sweep_hyper: all-zero vector");

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    double ka = std::abs(f[a]), kb = std::abs(f[b]);
    if (ka != kb) return ka > kb;
    return a < b;
  });

  std::vector<std::uint32_t> cl(h.edge_count(), 0), cr(h.edge_count(), 0);
  auto category = [&](std::uint32_t ei) -> double {
    std::uint32_t rank = static_cast<std::uint32_t>(h.edge(ei).members.size());
    double w = h.edge(ei).w;
    if (cl[ei] == rank || cr[ei] == rank) return 2 * w;
    if (cl[ei] > 0 && cr[ei] == 0) return w;
    if (cr[ei] > 0 && cl[ei] == 0) return w;
    return 0;
  };

  double num = 0, vol = 0;
  double best = std::numeric_limits<double>::max();
  std::size_t best_j = 0;
  for (std::size_t j = 0; j < n; ++j) {
    VertexId v = order[j];
    bool left = f[v] < 0;
    for (std::uint32_t ei : h.incident_edges(v)) {
      num -= category(ei);
      (left ? cl : cr)[ei] += 1;
      num += category(ei);
    }
    vol += h.degree(v);
    if (vol <= 0) continue;
    double beta = num / vol;
    if (beta < best - 1e-15) {
      best = beta;
      best_j = j;
    }
  }

  BipartitePair pair;
  for (std::size_t j = 0; j <= best_j; ++j) {
    VertexId v = order[j];
    (f[v] < 0 ? pair.left : pair.right).push_back(v);
  }
  pair.left = make_vertex_set(std::move(pair.left));
  pair.right = make_vertex_set(std::move(pair.right));
  pair.beta = hyper_bipartiteness(h, pair.left, pair.right);
  return pair;
}

DiffusionResult find_bipartite_components(const Hypergraph& h, const Eigen::VectorXd& f0, double eps,
                                          double convergence_ratio, int max_iters, DiffusionMode mode) {
  DiffusionState state = make_diffusion_state(h, f0, eps);
  DiffusionResult res;
  int consecutive = 0;
  for (int it = 0; it < max_iters; ++it) {
    double before = state.rq_history.back();
    if (before < 1e-12) {
      res.converged = true;
      break;
    }
    diffusion_step(h, state, mode);
    res.iters = it + 1;
    double after = state.rq_history.back();
    double ratio = after / before;
    consecutive = ratio >= convergence_ratio ? consecutive + 1 : 0;
    if (consecutive >= 5) {
      res.converged = true;
      break;
    }
  }
  if (state.rq_history.back() < 1e-12) res.converged = true;
  res.lambda = state.rq_history.back();
  res.f = state.f;
  res.rq_history = state.rq_history;
  res.pair = two_sided_sweep_hyper(h, state.f);
  return res;
}

Eigen::VectorXd default_start_vector(const Hypergraph& h) {
  return min_signless_vector(clique_reduction(h));
}

Graph clique_reduction(const Hypergraph& h) {
  std::vector<WeightedEdge> edges;
  for (const auto& e : h.edges()) {
    double w = e.w / static_cast<double>(e.members.size() - 1);
    for (std::size_t i = 0; i < e.members.size(); ++i)
      for (std::size_t j = i + 1; j < e.members.size(); ++j)
        edges.push_back({e.members[i], e.members[j], w});
  }
  return Graph(h.vertex_count(), edges);
}

Graph random_reduction(const Hypergraph& h, CounterRng& rng) {
  std::vector<WeightedEdge> edges;
  for (const auto& e : h.edges()) {
    std::size_t r = e.members.size();
    std::size_t pairs = r * (r - 1) / 2;
    std::size_t pick = static_cast<std::size_t>(rng.next_below(pairs));
    // unrank the pair index
    std::size_t i = 0;
    while (pick >= r - 1 - i) {
      pick -= r - 1 - i;
      ++i;
    }
    std::size_t j = i + 1 + pick;
    edges.push_back({e.members[i], e.members[j], e.w});
  }
  return Graph(h.vertex_count(), edges);
}

BipartitePair clique_cut(const Hypergraph& h) {
  Eigen::VectorXd f = default_start_vector(h);
  return two_sided_sweep_hyper(h, f);
}

}  // namespace densekit
