#include "pogroup/cayley.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace pogroup {

namespace {

bool data_less(const Element& a, const Element& b) { return elem_cmp(a, b) < 0; }

}  // namespace

std::ptrdiff_t CayleyBall::find(const Element& e) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), e, data_less);
  if (it == vertices.end() || elem_cmp(*it, e) != 0) return -1;
  return it - vertices.begin();
}

std::vector<Element> default_gens(const GroupRef& g) {
  std::vector<Element> out;
  for (int i = 0; i < g->n_gens(); ++i) out.push_back(generator(g, i));
  return out;
}

CayleyBall cayley_ball(const GroupRef& g, const std::vector<Element>& gens, int radius,
                       size_t max_vertices) {
  for (auto& e : gens) {
    if (!e.group->same_as(*g)) fail(ErrorCode::GroupMismatch, "generator in wrong group");
    if (is_identity(e)) fail(ErrorCode::Validation, "identity in generating set");
  }
  CayleyBall ball;
  ball.group = g;
  ball.gens = gens;
  ball.radius = radius;

  std::vector<Element> steps;
  for (auto& e : gens) {
    steps.push_back(e);
    steps.push_back(inverse(e));
  }

  // level-synchronous BFS; all membership tests and merges work on indices
  // into `all`, so elements are constructed and moved exactly once
  std::vector<Element> all{identity(g)};
  std::vector<int> alldist{0};
  std::vector<std::uint32_t> sorted_idx{0};  // indices sorted by element
  std::vector<std::uint32_t> frontier{0};
  auto less_idx = [&](std::uint32_t a, const Element& e) { return data_less(all[a], e); };
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<Element> cand;
    cand.reserve(std::min(frontier.size() * steps.size(), max_vertices));
    for (std::uint32_t v : frontier) {
      for (auto& s : steps) cand.push_back(multiply(all[v], s));
      if (all.size() + cand.size() > max_vertices)
        fail(ErrorCode::ResourceLimit,
             "ball exceeds vertex budget (" + std::to_string(max_vertices) + ")");
    }
    std::sort(cand.begin(), cand.end(), data_less);
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](const Element& a, const Element& b) { return elem_cmp(a, b) == 0; }),
               cand.end());
    std::vector<std::uint32_t> fresh;
    for (auto& v : cand) {
      auto it = std::lower_bound(sorted_idx.begin(), sorted_idx.end(), v, less_idx);
      if (it != sorted_idx.end() && elem_cmp(all[*it], v) == 0) continue;
      all.push_back(std::move(v));
      alldist.push_back(d);
      fresh.push_back(static_cast<std::uint32_t>(all.size() - 1));
    }
    if (all.size() > max_vertices)
      fail(ErrorCode::ResourceLimit,
           "ball exceeds vertex budget (" + std::to_string(max_vertices) + ")");
    // fresh indices are already sorted by element (cand was sorted)
    std::vector<std::uint32_t> merged;
    merged.reserve(sorted_idx.size() + fresh.size());
    std::merge(sorted_idx.begin(), sorted_idx.end(), fresh.begin(), fresh.end(),
               std::back_inserter(merged),
               [&](std::uint32_t a, std::uint32_t b) { return data_less(all[a], all[b]); });
    sorted_idx = std::move(merged);
    frontier = std::move(fresh);
  }

  // final order: sorted by normal form, distances carried along
  ball.vertices.reserve(all.size());
  ball.dist.reserve(all.size());
  for (std::uint32_t i : sorted_idx) {
    ball.vertices.push_back(std::move(all[i]));
    ball.dist.push_back(alldist[i]);
  }
  return ball;
}

std::uint64_t gens_hash(const std::vector<Element>& gens) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(gens.size());
  for (auto& e : gens) {
    mix(e.data.size());
    for (long long x : e.data) mix(static_cast<std::uint64_t>(x));
  }
  return h;
}

namespace {

constexpr char kMagic[8] = {'P', 'O', 'G', 'B', 'A', 'L', 'L', '1'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool get(std::ifstream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return bool(is);
}

std::string cache_path(const std::string& dir, const GroupRef& g,
                       const std::vector<Element>& gens, int radius) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "ball_%016llx_%016llx_r%d.pgb",
                static_cast<unsigned long long>(g->canonical_hash()),
                static_cast<unsigned long long>(gens_hash(gens)), radius);
  return dir + "/" + buf;
}

bool load_ball(const std::string& path, const GroupRef& g, const std::vector<Element>& gens,
               int radius, CayleyBall* out) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return false;
  char magic[8];
  is.read(magic, 8);
  if (!is || !std::equal(magic, magic + 8, kMagic)) return false;
  std::uint32_t version;
  std::uint64_t ghash, genshash;
  std::uint32_t r;
  std::uint64_t n;
  if (!get(is, version) || version != kVersion) return false;
  if (!get(is, ghash) || ghash != g->canonical_hash()) return false;
  if (!get(is, genshash) || genshash != gens_hash(gens)) return false;
  if (!get(is, r) || static_cast<int>(r) != radius) return false;
  if (!get(is, n)) return false;
  CayleyBall ball;
  ball.group = g;
  ball.gens = gens;
  ball.radius = radius;
  ball.vertices.reserve(n);
  ball.dist.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint8_t d;
    std::uint32_t len;
    if (!get(is, d) || !get(is, len)) return false;
    IntVec data(len);
    for (auto& x : data) {
      std::int64_t v;
      if (!get(is, v)) return false;
      x = v;
    }
    ball.vertices.push_back(Element{g, std::move(data)});
    ball.dist.push_back(d);
  }
  *out = std::move(ball);
  return true;
}

void store_ball(const std::string& path, const CayleyBall& ball) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) return;
    os.write(kMagic, 8);
    put(os, kVersion);
    put(os, static_cast<std::uint64_t>(ball.group->canonical_hash()));
    put(os, static_cast<std::uint64_t>(gens_hash(ball.gens)));
    put(os, static_cast<std::uint32_t>(ball.radius));
    put(os, static_cast<std::uint64_t>(ball.size()));
    for (size_t i = 0; i < ball.size(); ++i) {
      put(os, static_cast<std::uint8_t>(ball.dist[i]));
      put(os, static_cast<std::uint32_t>(ball.vertices[i].data.size()));
      for (long long x : ball.vertices[i].data) put(os, static_cast<std::int64_t>(x));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

CayleyBall cayley_ball_cached(const GroupRef& g, const std::vector<Element>& gens, int radius,
                              const std::string& cache_dir, size_t max_vertices) {
  if (cache_dir.empty()) return cayley_ball(g, gens, radius, max_vertices);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::string path = cache_path(cache_dir, g, gens, radius);
  CayleyBall ball;
  if (load_ball(path, g, gens, radius, &ball)) return ball;
  ball = cayley_ball(g, gens, radius, max_vertices);
  store_ball(path, ball);
  return ball;
}

}  // namespace pogroup
