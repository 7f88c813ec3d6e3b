#pragma once

#include "pogroup/cayley.hpp"
#include "pogroup/classify.hpp"
#include "pogroup/order_props.hpp"

namespace pogroup {

struct Schedule {
  std::vector<int> radii{4, 6, 8};
  std::vector<int> slacks{1, 2, 3};
};

enum class ConnStatus { Connected, Disconnected, Inconclusive };
const char* conn_status_name(ConnStatus s);

struct NpathCell {
  int radius = 0;
  int slack = 0;
  ConnStatus status = ConnStatus::Inconclusive;
  int components = 0;  // among members within the radius
  std::optional<std::pair<Element, Element>> witness;
};

// Precomputed neighbor indices of a ball (steps = gens then their inverses).
struct BallAdjacency {
  int n_steps = 0;
  std::vector<std::int32_t> next;  // size() * n_steps, -1 when outside the ball
  std::int32_t at(size_t v, int s) const { return next[v * n_steps + s]; }
};
BallAdjacency ball_adjacency(const CayleyBall& ball);

// Component labels of the slack-power graph on members, hopping through
// vertices with dist <= hop_limit. label[i] = -1 for non-members/outside.
std::vector<int> npath_components(const CayleyBall& ball, const BallAdjacency& adj,
                                  const std::vector<char>& member, int slack, int hop_limit);

// Connectivity of the members within `radius`, with paths allowed through
// dist <= radius + slack + 1; a disconnection is certified only if stable
// when the margin grows by 2, otherwise Inconclusive. The ball must have
// radius >= radius + slack + 3.
NpathCell npath_cell(const CayleyBall& ball, const BallAdjacency& adj,
                     const std::vector<char>& member, int radius, int slack);

struct SigmaKernelVerdict {
  std::string kernel_desc;
  std::vector<NpathCell> cells;
  ConnStatus outcome = ConnStatus::Inconclusive;
  int outcome_radius = 0;
  int outcome_slack = 0;
  std::optional<std::pair<Element, Element>> witness;
};

struct SigmaVerdict {
  std::string order_desc;
  Schedule schedule;
  std::vector<Element> gen_set;
  std::vector<SigmaKernelVerdict> kernels;
  ConnStatus outcome = ConnStatus::Inconclusive;
  std::vector<std::string> caveats;
};

struct SigmaOptions {
  Schedule schedule;
  std::vector<Element> gens;  // empty: presentation generators
  std::string cache_dir;
  size_t max_vertices = 4000000;
  std::shared_ptr<const CayleyBall> prebuilt;  // reuse across runs
};

// Coarse-connectivity evidence for K_succeq over every maximal antichain
// normal subgroup. Requires a nontrivial order that is structurally full and
// archimedean.
SigmaVerdict sigma_membership(const OrderRef& o, const SigmaOptions& opt = {});

// Classical route: half-space chi >= 0 of a nonzero character. Computed via
// the induced order; the classical and order-theoretic half-spaces are
// asserted pointwise equal on the ball.
SigmaVerdict classical_sigma_membership(const Character& chi, const SigmaOptions& opt = {});

enum class TriState { Yes, No, Inconclusive };
const char* tristate_name(TriState t);

// Membership of o in the relative order sphere of (G, N): nontrivial, full
// and archimedean (structurally), with N an antichain.
TriState relative_sphere_contains(const GroupRef& g, const Subgroup& n, const OrderRef& o);

struct TheoremAOrderResult {
  std::string order_desc;
  SigmaVerdict verdict;
};

struct TheoremAReport {
  std::string hom_desc;
  bool kernel_fg = false;
  std::string kernel_fg_source;
  std::optional<Subgroup> kernel_gens;
  std::vector<TheoremAOrderResult> orders;
  int inconclusive_count = 0;
  std::optional<bool> predicted_fg;
  bool agreement = false;
  std::vector<std::string> caveats;
};

struct TheoremAOptions {
  Schedule schedule;
  CensusBounds census_bounds;
  int sample_budget = 20;
  std::string cache_dir;
  size_t max_vertices = 4000000;
};

// Ground truth for ker(phi) finitely generated (computed for nilpotent
// domains, classical facts for free domains) against the sigma verdicts of
// the pulled-back census orders.
TheoremAReport theorem_a_experiment(const Homomorphism& phi, const TheoremAOptions& opt = {});

}  // namespace pogroup
