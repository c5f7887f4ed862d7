#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlab/book/book.hpp"
#include "mlab/book/types.hpp"
#include "mlab/core/rng.hpp"

namespace mlab {

// Behavioral order-flow model: long-memory signs, Student-t placement around
// the same-side best (crossing prices transact immediately), and a
// cancellation hazard that grows with an order's relative drift from the
// opposite best, the book imbalance against it, and the inverse number of
// resting orders.
struct MikeFarmerParams {
  std::size_t n_events = 100000;
  double hurst = 0.75;
  double t_dof = 1.3;             // placement tail exponent + 1
  double placement_scale = 10.0;  // ticks
  double cancel_scale = 0.6;      // hazard prefactor A
  double cancel_imb_offset = 0.2; // hazard offset B
  std::int64_t p0 = 100000;
  std::int64_t seed_depth = 50;   // seeded ticks per side
};

struct MikeFarmerResult {
  EventStream events;  // includes seeding limits
  OrderBook book;
  std::size_t n_seed_events = 0;
  std::size_t n_crossing = 0;  // placements that transacted immediately
  std::size_t n_cancels = 0;
};

MikeFarmerResult gen_mike_farmer(const MikeFarmerParams& params, Rng& rng);

}  // namespace mlab
