#include "mlab/flow/mike_farmer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "mlab/flow/farima.hpp"

namespace mlab {

namespace {

struct Tracked {
  Side side = Side::Buy;
  std::int64_t price = 0;
  std::int64_t dist0 = 1;  // distance to opposite best at placement
};

}  // namespace

MikeFarmerResult gen_mike_farmer(const MikeFarmerParams& params, Rng& rng) {
  if (params.t_dof <= 1.0) {
    throw std::invalid_argument(
        "gen_mike_farmer: t_dof must exceed 1 (finite-mean placement)");
  }
  MikeFarmerResult out;
  std::uint64_t seq = 0;
  std::unordered_map<std::uint64_t, Tracked> tracked;

  auto emit = [&](Event e) -> ApplyResult {
    e.seq = ++seq;
    ApplyResult r = out.book.apply(e);
    out.events.push_back(e);
    for (const Fill& f : r.fills) {
      if (!out.book.order_alive(f.maker_seq)) tracked.erase(f.maker_seq);
    }
    return r;
  };

  for (std::int64_t d = 0; d < params.seed_depth; ++d) {
    Event b{0, EventKind::Limit, Side::Buy, params.p0 - 1 - d, 1, -1, 0.0};
    Event a{0, EventKind::Limit, Side::Sell, params.p0 + 1 + d, 1, -1, 0.0};
    ApplyResult rb = emit(b);
    ApplyResult ra = emit(a);
    if (rb.rested_volume > 0)
      tracked[b.seq] = Tracked{Side::Buy, b.price_ticks, d + 2};
    if (ra.rested_volume > 0)
      tracked[a.seq] = Tracked{Side::Sell, a.price_ticks, d + 2};
  }
  out.n_seed_events = out.events.size();

  FarimaSeries signs = gen_signs_farima(params.n_events, params.hurst, rng);

  std::vector<std::uint64_t> victims;
  for (std::size_t n = 0; n < params.n_events; ++n) {
    Side side = signs.sign[n] > 0 ? Side::Buy : Side::Sell;
    auto same = side == Side::Buy ? out.book.best_bid() : out.book.best_ask();
    auto opp = side == Side::Buy ? out.book.best_ask() : out.book.best_bid();
    std::int64_t ref = same ? *same
                            : (opp ? *opp - sign_of(side) : params.p0);
    std::int64_t shift = static_cast<std::int64_t>(
        std::llround(params.placement_scale * rng.student_t(params.t_dof)));
    std::int64_t price = ref + sign_of(side) * shift;

    Event e{0, EventKind::Limit, side, price, 1, -1, 0.0};
    ApplyResult r = emit(e);
    if (r.executed_volume > 0) ++out.n_crossing;
    if (r.rested_volume > 0) {
      std::int64_t dist = 1;
      auto opp_after =
          side == Side::Buy ? out.book.best_ask() : out.book.best_bid();
      if (opp_after) dist = std::max<std::int64_t>(1, std::abs(*opp_after - price));
      tracked[e.seq] = Tracked{side, price, dist};
    }

    // Cancellation sweep: independent hazards, then deterministic order.
    double n_orders = std::max<double>(1.0, static_cast<double>(tracked.size()));
    std::int64_t bid_vol = out.book.side_volume(Side::Buy);
    std::int64_t ask_vol = out.book.side_volume(Side::Sell);
    double tot_vol = std::max<double>(1.0, static_cast<double>(bid_vol + ask_vol));
    victims.clear();
    for (const auto& [id, t] : tracked) {
      auto opp_best =
          t.side == Side::Buy ? out.book.best_ask() : out.book.best_bid();
      double y = 1.0;
      if (opp_best) {
        double dist = std::max<double>(
            1.0, static_cast<double>(std::abs(*opp_best - t.price)));
        y = dist / static_cast<double>(t.dist0);
      }
      double against =
          t.side == Side::Buy ? static_cast<double>(ask_vol) / tot_vol
                              : static_cast<double>(bid_vol) / tot_vol;
      double hazard = params.cancel_scale * (1.0 - std::exp(-y)) *
                      (against + params.cancel_imb_offset) * 2.0 / n_orders;
      hazard = std::min(hazard, 0.95);
      if (rng.bernoulli(hazard)) victims.push_back(id);
    }
    std::sort(victims.begin(), victims.end());
    for (std::uint64_t id : victims) {
      Event c{0, EventKind::Cancel, Side::Buy,
              static_cast<std::int64_t>(id), 0, -1, 0.0};
      emit(c);
      tracked.erase(id);
      ++out.n_cancels;
    }
  }
  return out;
}

}  // namespace mlab
