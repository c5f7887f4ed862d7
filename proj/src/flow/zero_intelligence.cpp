#include "mlab/flow/zero_intelligence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "mlab/core/stats.hpp"

namespace mlab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Uniform pick with O(1) removal.
class LivePool {
 public:
  void add(std::uint64_t id) {
    pos_[id] = ids_.size();
    ids_.push_back(id);
  }
  void remove(std::uint64_t id) {
    auto it = pos_.find(id);
    if (it == pos_.end()) return;
    std::size_t p = it->second;
    std::uint64_t last = ids_.back();
    ids_[p] = last;
    pos_[last] = p;
    ids_.pop_back();
    pos_.erase(it);
  }
  std::uint64_t pick(Rng& rng) const {
    return ids_[rng.uniform_int(ids_.size())];
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::vector<std::uint64_t> ids_;
  std::unordered_map<std::uint64_t, std::size_t> pos_;
};

}  // namespace

ZiResult gen_zero_intelligence(const ZiParams& params, Rng& rng) {
  if (params.mu <= 0 || params.rho <= 0 || params.nu < 0) {
    throw std::invalid_argument("gen_zero_intelligence: rates must be positive");
  }
  if (params.band < 4) {
    throw std::invalid_argument("gen_zero_intelligence: band too narrow");
  }

  ZiResult out;
  std::uint64_t seq = 0;
  double now = 0.0;
  LivePool live;

  auto emit = [&](Event e) -> ApplyResult {
    e.seq = ++seq;
    e.ts = now;
    ApplyResult r = out.book.apply(e);
    if (e.kind == EventKind::Limit && r.rested_volume > 0) live.add(e.seq);
    for (const Fill& f : r.fills) {
      if (!out.book.order_alive(f.maker_seq)) live.remove(f.maker_seq);
    }
    out.events.push_back(e);
    return r;
  };

  // Seed: one unit at every tick within the band on both sides.
  for (std::int64_t d = 0; d < params.band; ++d) {
    emit(Event{0, EventKind::Limit, Side::Buy,
               params.p0 - params.init_half_spread - d, 1, -1, 0.0});
    emit(Event{0, EventKind::Limit, Side::Sell,
               params.p0 + params.init_half_spread + d, 1, -1, 0.0});
  }
  out.n_seed_events = out.events.size();

  double limit_rate_side = params.rho * static_cast<double>(params.band);

  for (std::size_t n = 0; n < params.n_events; ++n) {
    double cancel_rate = params.nu * static_cast<double>(live.size());
    double total =
        2.0 * params.mu + 2.0 * limit_rate_side + cancel_rate;
    double dt = rng.exponential(total);
    now += dt;

    double u = rng.uniform() * total;
    Event e;
    if (u < 2.0 * params.mu) {
      e.kind = EventKind::Market;
      e.side = u < params.mu ? Side::Buy : Side::Sell;
      e.volume = 1;
      ApplyResult r = emit(e);
      if (!r.accepted) ++out.n_market_rejected;
    } else if (u < 2.0 * params.mu + 2.0 * limit_rate_side) {
      bool buy = u < 2.0 * params.mu + limit_rate_side;
      e.kind = EventKind::Limit;
      e.volume = 1;
      std::int64_t offset =
          1 + static_cast<std::int64_t>(rng.uniform_int(
                  static_cast<std::uint64_t>(params.band)));
      if (buy) {
        auto a = out.book.best_ask();
        std::int64_t ref = a ? *a : params.p0 + params.init_half_spread;
        e.side = Side::Buy;
        e.price_ticks = ref - offset;
      } else {
        auto b = out.book.best_bid();
        std::int64_t ref = b ? *b : params.p0 - params.init_half_spread;
        e.side = Side::Sell;
        e.price_ticks = ref + offset;
      }
      emit(e);
    } else {
      if (live.size() == 0) {
        // Nothing to cancel; the dwell interval still elapses.
        out.spread_after.push_back(out.spread_after.empty()
                                       ? kNaN
                                       : out.spread_after.back());
        out.dwell.push_back(dt);
        continue;
      }
      std::uint64_t victim = live.pick(rng);
      live.remove(victim);
      e.kind = EventKind::Cancel;
      e.side = Side::Buy;  // ignored
      e.price_ticks = static_cast<std::int64_t>(victim);
      e.volume = 0;
      emit(e);
    }

    auto s = out.book.spread();
    out.spread_after.push_back(s ? static_cast<double>(*s) : kNaN);
    out.dwell.push_back(dt);
  }

  // Time-weighted spread after burn-in, batch-mean SE over event batches.
  std::vector<double> weighted;
  double wsum = 0.0, vsum = 0.0;
  for (std::size_t i = params.burn_in; i < out.spread_after.size(); ++i) {
    if (!std::isfinite(out.spread_after[i])) continue;
    vsum += out.spread_after[i] * out.dwell[i];
    wsum += out.dwell[i];
    weighted.push_back(out.spread_after[i]);
  }
  if (wsum > 0) {
    out.mean_spread = vsum / wsum;
    out.mean_spread_se = batch_mean_se(weighted);
  } else {
    out.mean_spread = kNaN;
    out.mean_spread_se = kNaN;
  }
  return out;
}

}  // namespace mlab
