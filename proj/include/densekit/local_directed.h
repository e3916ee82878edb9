#pragma once

#include <cstdint>

#include "densekit/graph.h"
#include "densekit/rng.h"

namespace densekit {

// One evolving-set transition: draw t uniform on [0,1] and return the set of
// vertices whose one-step lazy-walk probability into S is at least t.
VertexSet esp_step(const Graph& g, const VertexSet& s, CounterRng& rng);

// Exact sampler for the volume-biased chain: enumerates the candidate
// threshold sets of the current state, weights each by vol(S') K(S, S'), and
// draws the next state from that distribution. Never absorbs at the empty set.
VertexSet volume_biased_step(const Graph& g, const VertexSet& s, CounterRng& rng);

// Trajectory S_0 = {start}, ..., S_T of the volume-biased chain.
std::vector<VertexSet> volume_biased_sample(const Graph& g, VertexId start, int steps, CounterRng& rng);

struct EvoCutResult {
  VertexSet left, right;
  double flow_ratio = 1.0;
  double cut_imbalance = 0.0;
  double cover_conductance = 1.0;  // w(S,~S)/vol(S) of the chosen cover set
  int steps = 0;
  bool found = false;
};

// Volume-biased ESP on the semi-double cover from (u, side); among visited
// states takes the minimum-conductance set and extracts the vertices with
// exactly one copy present. steps_override < 0 uses T = floor(1/(100 phi^{2/3})).
EvoCutResult evo_cut_directed(const Digraph& d, VertexId u, int side, double phi, std::uint64_t seed,
                              int steps_override = -1);

// Runs both sides and returns the pair with the better flow ratio.
EvoCutResult evo_cut_directed_both(const Digraph& d, VertexId u, double phi, std::uint64_t seed,
                                   int steps_override = -1);

}  // namespace densekit
