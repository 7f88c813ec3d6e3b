#include "pogroup/sigma.hpp"

#include <algorithm>
#include <deque>

namespace pogroup {

const char* conn_status_name(ConnStatus s) {
  switch (s) {
    case ConnStatus::Connected: return "connected";
    case ConnStatus::Disconnected: return "disconnected";
    case ConnStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* tristate_name(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Inconclusive: return "inconclusive";
  }
  return "?";
}

BallAdjacency ball_adjacency(const CayleyBall& ball) {
  std::vector<Element> steps;
  for (auto& e : ball.gens) {
    steps.push_back(e);
    steps.push_back(inverse(e));
  }
  BallAdjacency adj;
  adj.n_steps = static_cast<int>(steps.size());
  adj.next.assign(ball.size() * steps.size(), -1);
  for (size_t v = 0; v < ball.size(); ++v) {
    for (int s = 0; s < adj.n_steps; ++s) {
      Element w = multiply(ball.vertices[v], steps[s]);
      adj.next[v * adj.n_steps + s] = static_cast<std::int32_t>(ball.find(w));
    }
  }
  return adj;
}

std::vector<int> npath_components(const CayleyBall& ball, const BallAdjacency& adj,
                                  const std::vector<char>& member, int slack, int hop_limit) {
  size_t n = ball.size();
  std::vector<int> label(n, -1);
  std::vector<int> budget(n, -1);  // best remaining hop budget seen in the current flood
  std::vector<size_t> touched;
  std::deque<size_t> queue;
  int next_label = 0;
  for (size_t seed = 0; seed < n; ++seed) {
    if (!member[seed] || ball.dist[seed] > hop_limit || label[seed] != -1) continue;
    int lab = next_label++;
    label[seed] = lab;
    budget[seed] = slack;
    touched.clear();
    touched.push_back(seed);
    queue.clear();
    queue.push_back(seed);
    while (!queue.empty()) {
      size_t v = queue.front();
      queue.pop_front();
      int b = budget[v];
      if (b <= 0) continue;
      for (int s = 0; s < adj.n_steps; ++s) {
        std::int32_t u = adj.at(v, s);
        if (u < 0 || ball.dist[u] > hop_limit) continue;
        if (member[u]) {
          if (label[u] == -1) {
            label[u] = lab;
            budget[u] = slack;
            touched.push_back(u);
            queue.push_back(u);
          } else if (label[u] == lab && budget[u] < slack) {
            budget[u] = slack;
            queue.push_back(u);
          }
        } else if (budget[u] < b - 1) {
          if (budget[u] < 0) touched.push_back(u);
          budget[u] = b - 1;
          queue.push_back(u);
        }
      }
    }
    for (size_t v : touched) budget[v] = -1;
  }
  return label;
}

namespace {

// canonical partition of the members with dist <= radius: relabel component
// ids by first occurrence in vertex order
std::vector<int> restricted_partition(const CayleyBall& ball, const std::vector<char>& member,
                                      const std::vector<int>& label, int radius) {
  std::vector<int> out;
  std::vector<int> remap;
  for (size_t v = 0; v < ball.size(); ++v) {
    if (!member[v] || ball.dist[v] > radius) continue;
    int lab = label[v];
    if (lab < 0) fail(ErrorCode::Validation, "member without component label");
    int canon = -1;
    for (size_t i = 0; i < remap.size(); ++i)
      if (remap[i] == lab) canon = static_cast<int>(i);
    if (canon == -1) {
      canon = static_cast<int>(remap.size());
      remap.push_back(lab);
    }
    out.push_back(canon);
  }
  return out;
}

}  // namespace

NpathCell npath_cell(const CayleyBall& ball, const BallAdjacency& adj,
                     const std::vector<char>& member, int radius, int slack) {
  NpathCell cell;
  cell.radius = radius;
  cell.slack = slack;
  int margin = slack + 1;
  if (ball.radius < radius + margin + 2)
    fail(ErrorCode::Validation, "ball too small for the requested cell");

  std::vector<int> label = npath_components(ball, adj, member, slack, radius + margin);
  std::vector<int> part = restricted_partition(ball, member, label, radius);
  int comps = part.empty() ? 0 : 1 + *std::max_element(part.begin(), part.end());
  cell.components = comps;
  if (comps <= 1) {
    cell.status = ConnStatus::Connected;
    return cell;
  }
  std::vector<int> label2 = npath_components(ball, adj, member, slack, radius + margin + 2);
  std::vector<int> part2 = restricted_partition(ball, member, label2, radius);
  if (part != part2) {
    cell.status = ConnStatus::Inconclusive;
    return cell;
  }
  cell.status = ConnStatus::Disconnected;
  // witness: first member in radius, and the first member in a different component
  std::ptrdiff_t first = -1, other = -1;
  size_t pi = 0;
  int first_lab = -1;
  for (size_t v = 0; v < ball.size() && other < 0; ++v) {
    if (!member[v] || ball.dist[v] > radius) continue;
    int lab = part[pi++];
    if (first < 0) {
      first = v;
      first_lab = lab;
    } else if (lab != first_lab) {
      other = v;
    }
  }
  cell.witness = std::make_pair(ball.vertices[first], ball.vertices[other]);
  return cell;
}

namespace {

void require_structural(const OrderRef& o) {
  if (!sample_positive(o))
    fail(ErrorCode::Validation, "sigma membership needs a nontrivial order");
  if (is_archimedean(o).verdict != Verdict3::YesStructural)
    fail(ErrorCode::Unsupported, "sigma membership needs a structurally archimedean order");
  if (is_full(o).verdict != Verdict3::YesStructural)
    fail(ErrorCode::Unsupported, "sigma membership needs a structurally full order");
}

SigmaVerdict run_sigma(const OrderRef& o, const SigmaOptions& opt,
                       const std::vector<char>* classical_member) {
  require_structural(o);
  SigmaVerdict verdict;
  verdict.order_desc = order_describe(*o);
  verdict.schedule = opt.schedule;
  std::vector<Element> gens = opt.gens.empty() ? default_gens(o->group) : opt.gens;
  verdict.gen_set = gens;
  verdict.caveats.push_back(
      "evidence only: computed for the fixed generating set and schedule, not a decision "
      "procedure");

  int rmax = *std::max_element(opt.schedule.radii.begin(), opt.schedule.radii.end());
  int nmax = *std::max_element(opt.schedule.slacks.begin(), opt.schedule.slacks.end());
  int need = rmax + nmax + 3;

  std::shared_ptr<const CayleyBall> ball = opt.prebuilt;
  if (!ball || ball->radius < need || !ball->group->same_as(*o->group) ||
      gens_hash(ball->gens) != gens_hash(gens)) {
    ball = std::make_shared<CayleyBall>(
        cayley_ball_cached(o->group, gens, need, opt.cache_dir, opt.max_vertices));
  }
  BallAdjacency adj = ball_adjacency(*ball);

  auto kernels = maximal_antichain_normal_subgroups(o);
  for (auto& k : kernels) {
    SigmaKernelVerdict kv;
    kv.kernel_desc = k.desc;
    std::vector<char> member(ball->size(), 0);
    for (size_t v = 0; v < ball->size(); ++v)
      member[v] = k.halfspace_contains(ball->vertices[v]) ? 1 : 0;
    if (classical_member) {
      if (*classical_member != member)
        fail(ErrorCode::Validation,
             "classical half-space disagrees with the order-theoretic half-space");
    }
    for (int r : opt.schedule.radii)
      for (int n : opt.schedule.slacks) kv.cells.push_back(npath_cell(*ball, adj, member, r, n));

    // aggregate at the largest scheduled radius
    ConnStatus agg = ConnStatus::Inconclusive;
    int agg_r = 0, agg_n = 0;
    std::optional<std::pair<Element, Element>> wit;
    for (auto& c : kv.cells) {
      if (c.radius != rmax) continue;
      if (c.status == ConnStatus::Connected && agg != ConnStatus::Connected) {
        agg = ConnStatus::Connected;
        agg_r = c.radius;
        agg_n = c.slack;
        break;  // cells are ordered by slack; smallest connected slack wins
      }
    }
    if (agg != ConnStatus::Connected) {
      for (auto& c : kv.cells) {
        if (c.radius != rmax) continue;
        if (c.status == ConnStatus::Disconnected) {
          agg = ConnStatus::Disconnected;
          agg_r = c.radius;
          agg_n = c.slack;
          wit = c.witness;
        }
      }
    }
    kv.outcome = agg;
    kv.outcome_radius = agg_r;
    kv.outcome_slack = agg_n;
    kv.witness = wit;
    verdict.kernels.push_back(std::move(kv));
  }

  bool all_conn = true, any_disc = false;
  for (auto& kv : verdict.kernels) {
    if (kv.outcome != ConnStatus::Connected) all_conn = false;
    if (kv.outcome == ConnStatus::Disconnected) any_disc = true;
  }
  verdict.outcome = all_conn    ? ConnStatus::Connected
                    : any_disc  ? ConnStatus::Disconnected
                                : ConnStatus::Inconclusive;
  return verdict;
}

}  // namespace

SigmaVerdict sigma_membership(const OrderRef& o, const SigmaOptions& opt) {
  return run_sigma(o, opt, nullptr);
}

SigmaVerdict classical_sigma_membership(const Character& chi, const SigmaOptions& opt) {
  if (char_is_zero(chi)) fail(ErrorCode::Validation, "zero character has no sigma verdict");
  OrderRef o = order_character(chi);
  // classical half-space chi^-1([0, infinity)), evaluated independently
  std::vector<Element> gens = opt.gens.empty() ? default_gens(chi.dom) : opt.gens;
  int rmax = *std::max_element(opt.schedule.radii.begin(), opt.schedule.radii.end());
  int nmax = *std::max_element(opt.schedule.slacks.begin(), opt.schedule.slacks.end());
  int need = rmax + nmax + 3;
  SigmaOptions opt2 = opt;
  if (!opt2.prebuilt || opt2.prebuilt->radius < need)
    opt2.prebuilt = std::make_shared<CayleyBall>(
        cayley_ball_cached(chi.dom, gens, need, opt.cache_dir, opt.max_vertices));
  std::vector<char> classical(opt2.prebuilt->size(), 0);
  for (size_t v = 0; v < opt2.prebuilt->size(); ++v)
    classical[v] = char_apply(chi, opt2.prebuilt->vertices[v]).sign() >= 0 ? 1 : 0;
  SigmaVerdict verdict = run_sigma(o, opt2, &classical);
  verdict.caveats.push_back("classical and order-theoretic half-spaces asserted pointwise equal");
  return verdict;
}

TriState relative_sphere_contains(const GroupRef& g, const Subgroup& n, const OrderRef& o) {
  if (!o->group->same_as(*g)) fail(ErrorCode::GroupMismatch, "order not on the given group");
  if (!n.ambient->same_as(*g)) fail(ErrorCode::GroupMismatch, "subgroup of a different group");
  if (!sample_positive(o)) return TriState::No;  // trivial orders are excluded
  PropertyVerdict full = is_full(o);
  if (full.verdict == Verdict3::NoWithWitness) return TriState::No;
  if (full.verdict != Verdict3::YesStructural) return TriState::Inconclusive;
  PropertyVerdict arch = is_archimedean(o);
  if (arch.verdict == Verdict3::NoWithWitness) return TriState::No;
  if (arch.verdict != Verdict3::YesStructural) return TriState::Inconclusive;
  AntichainVerdict av = is_antichain(o, n);
  if (!av.exact) return TriState::Inconclusive;
  return av.antichain ? TriState::Yes : TriState::No;
}

TheoremAReport theorem_a_experiment(const Homomorphism& phi, const TheoremAOptions& opt) {
  require_valid_hom(phi);
  if (!phi.cod->is_pc_like())
    fail(ErrorCode::Unsupported, "theorem A experiment needs a pc-like codomain");
  if (!hom_is_surjective(phi)) fail(ErrorCode::Validation, "theorem A experiment needs an onto map");

  TheoremAReport report;
  report.hom_desc = phi.dom->name + " -> " + phi.cod->name;

  if (phi.dom->is_pc_like()) {
    report.kernel_gens = kernel_generators(phi);
    report.kernel_fg = true;
    report.kernel_fg_source = "computed: domain is finitely generated nilpotent";
  } else {
    bool image_trivial = std::all_of(phi.images.begin(), phi.images.end(),
                                     [](const Element& e) { return is_identity(e); });
    if (image_trivial) {
      report.kernel_fg = true;
      report.kernel_fg_source = "configured: kernel is the whole (finitely generated) group";
    } else if (phi.dom->rank == 1) {
      report.kernel_fg = true;
      report.kernel_fg_source = "configured: rank-1 free domain has cyclic kernels";
    } else {
      report.kernel_fg = false;
      report.kernel_fg_source =
          "configured: nontrivial infinite-index normal subgroups of free groups are not "
          "finitely generated";
    }
  }

  OrderCensus cns = census(phi.cod, opt.census_bounds);
  size_t limit = std::min<size_t>(cns.entries.size(), static_cast<size_t>(opt.sample_budget));
  if (limit < cns.entries.size())
    report.caveats.push_back("census truncated to the sample budget of " +
                             std::to_string(opt.sample_budget) + " orders");

  std::vector<Element> gens = default_gens(phi.dom);
  int rmax = *std::max_element(opt.schedule.radii.begin(), opt.schedule.radii.end());
  int nmax = *std::max_element(opt.schedule.slacks.begin(), opt.schedule.slacks.end());
  auto ball = std::make_shared<CayleyBall>(
      cayley_ball_cached(phi.dom, gens, rmax + nmax + 3, opt.cache_dir, opt.max_vertices));

  bool all_conn = true, any_disc = false;
  for (size_t i = 0; i < limit; ++i) {
    OrderRef pulled = order_pullback(phi, cns.entries[i].order);
    SigmaOptions so;
    so.schedule = opt.schedule;
    so.gens = gens;
    so.cache_dir = opt.cache_dir;
    so.max_vertices = opt.max_vertices;
    so.prebuilt = ball;
    TheoremAOrderResult res;
    res.order_desc = order_describe(*cns.entries[i].order);
    res.verdict = sigma_membership(pulled, so);
    if (res.verdict.outcome != ConnStatus::Connected) all_conn = false;
    if (res.verdict.outcome == ConnStatus::Disconnected) any_disc = true;
    if (res.verdict.outcome == ConnStatus::Inconclusive) ++report.inconclusive_count;
    report.orders.push_back(std::move(res));
  }

  if (all_conn)
    report.predicted_fg = true;
  else if (any_disc)
    report.predicted_fg = false;
  if (report.predicted_fg)
    report.agreement = (*report.predicted_fg == report.kernel_fg);
  else
    report.caveats.push_back("no prediction: inconclusive verdicts present");
  return report;
}

}  // namespace pogroup
