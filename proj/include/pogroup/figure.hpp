#pragma once

#include "pogroup/cayley.hpp"
#include "pogroup/orders.hpp"

namespace pogroup {

// Cayley-ball diagram colored by sign class: positive red, negative blue,
// incomparable-to-1 gray. DOT works for every supported group; SVG lays the
// exponent grid of rank-2 free-abelian groups out directly.
std::string figure_dot(const OrderRef& o, const CayleyBall& ball);
std::string figure_svg_grid(const OrderRef& o, const CayleyBall& ball);

}  // namespace pogroup
