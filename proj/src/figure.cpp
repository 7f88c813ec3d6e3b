#include "pogroup/figure.hpp"

#include <sstream>

#include "pogroup/sigma.hpp"

namespace pogroup {

namespace {

const char* color_of(const OrderRef& o, const Element& g) {
  if (is_positive(o, g)) return "red";
  if (is_negative(o, g)) return "blue";
  return "gray";
}

// edges inherit the class of their endpoints when those agree
std::string edge_color(const OrderRef& o, const Element& a, const Element& b) {
  std::string ca = color_of(o, a), cb = color_of(o, b);
  return ca == cb ? ca : "black";
}

}  // namespace

std::string figure_dot(const OrderRef& o, const CayleyBall& ball) {
  std::ostringstream os;
  os << "graph cayley_ball {\n";
  os << "  // vertices colored by sign: red positive, blue negative, gray incomparable\n";
  os << "  node [shape=circle, style=filled, fontsize=10];\n";
  for (size_t v = 0; v < ball.size(); ++v) {
    os << "  v" << v << " [label=\"" << elem_str(ball.vertices[v]) << "\", fillcolor=\""
       << color_of(o, ball.vertices[v]) << "\"];\n";
  }
  BallAdjacency adj = ball_adjacency(ball);
  int gen_steps = static_cast<int>(ball.gens.size());
  for (size_t v = 0; v < ball.size(); ++v) {
    for (int s = 0; s < gen_steps; ++s) {
      // only positive generator directions to avoid duplicate edges
      std::int32_t u = adj.at(v, 2 * s);
      if (u >= 0)
        os << "  v" << v << " -- v" << u << " [color=\""
           << edge_color(o, ball.vertices[v], ball.vertices[u]) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string figure_svg_grid(const OrderRef& o, const CayleyBall& ball) {
  if (ball.group->kind != GroupKind::FreeAbelian || ball.group->rank != 2)
    fail(ErrorCode::Unsupported, "svg grid layout is for rank-2 free-abelian groups; use dot");
  const int cell = 40, r = ball.radius;
  const int size = (2 * r + 2) * cell;
  auto coord = [&](const Element& e, int axis) {
    return cell + (static_cast<int>(e.data[axis]) + r) * cell;
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\">\n";
  BallAdjacency adj = ball_adjacency(ball);
  int gen_steps = static_cast<int>(ball.gens.size());
  for (size_t v = 0; v < ball.size(); ++v) {
    for (int s = 0; s < gen_steps; ++s) {
      std::int32_t u = adj.at(v, 2 * s);
      if (u < 0) continue;
      std::string col = edge_color(o, ball.vertices[v], ball.vertices[u]);
      if (col == "black") col = "#999";
      os << "  <line x1=\"" << coord(ball.vertices[v], 0) << "\" y1=\""
         << size - coord(ball.vertices[v], 1) << "\" x2=\"" << coord(ball.vertices[u], 0)
         << "\" y2=\"" << size - coord(ball.vertices[u], 1) << "\" stroke=\"" << col
         << "\"/>\n";
    }
  }
  for (size_t v = 0; v < ball.size(); ++v) {
    os << "  <circle cx=\"" << coord(ball.vertices[v], 0) << "\" cy=\""
       << size - coord(ball.vertices[v], 1) << "\" r=\"8\" fill=\""
       << color_of(o, ball.vertices[v]) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pogroup
