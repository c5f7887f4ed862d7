#include "mlab/book/book.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

Classification OrderBook::classify(const Event& e) const {
  Classification c;
  if (e.kind == EventKind::Cancel) return c;
  if (e.volume <= 0) return c;

  std::int64_t remaining = e.volume;
  if (e.side == Side::Buy) {
    for (const auto& [price, level] : asks_) {
      if (e.kind == EventKind::Limit && price > e.price_ticks) break;
      for (const RestingOrder& o : level) {
        std::int64_t take = std::min(remaining, o.volume);
        c.crossing_volume += take;
        remaining -= take;
        if (remaining == 0) break;
      }
      if (remaining == 0) break;
    }
  } else {
    for (const auto& [price, level] : bids_) {
      if (e.kind == EventKind::Limit && price < e.price_ticks) break;
      for (const RestingOrder& o : level) {
        std::int64_t take = std::min(remaining, o.volume);
        c.crossing_volume += take;
        remaining -= take;
        if (remaining == 0) break;
      }
      if (remaining == 0) break;
    }
  }
  if (e.kind == EventKind::Limit) c.resting_volume = remaining;
  return c;
}

template <typename Map>
std::int64_t OrderBook::match_against(Map& levels, const Event& e,
                                      std::int64_t budget,
                                      std::function<bool(std::int64_t)> crosses,
                                      std::vector<Fill>& fills) {
  std::int64_t executed = 0;
  auto it = levels.begin();
  while (it != levels.end() && budget > 0 && crosses(it->first)) {
    Level& level = it->second;
    while (!level.empty() && budget > 0) {
      RestingOrder& maker = level.front();
      std::int64_t take = std::min(budget, maker.volume);
      fills.push_back(Fill{e.seq, maker.id, it->first, take, e.side});
      maker.volume -= take;
      budget -= take;
      executed += take;
      // Each fill retires volume from two submissions (taker and maker).
      total_executed_ += 2 * take;
      if (maker.volume == 0) {
        id_index_.erase(maker.id);
        level.pop_front();
      }
    }
    if (level.empty()) {
      it = levels.erase(it);
    } else {
      ++it;
    }
  }
  return executed;
}

ApplyResult OrderBook::apply(const Event& e) {
  ApplyResult r;
  switch (e.kind) {
    case EventKind::Cancel: {
      auto target = static_cast<std::uint64_t>(e.price_ticks);
      auto it = id_index_.find(target);
      if (it == id_index_.end()) {
        r.reject_reason = "unknown order id";
        return r;
      }
      auto [side, price] = it->second;
      Level* level = nullptr;
      if (side == Side::Buy) {
        level = &bids_.at(price);
      } else {
        level = &asks_.at(price);
      }
      for (auto o = level->begin(); o != level->end(); ++o) {
        if (o->id == target) {
          r.cancelled_volume = o->volume;
          total_cancelled_ += o->volume;
          level->erase(o);
          break;
        }
      }
      if (level->empty()) {
        if (side == Side::Buy) {
          bids_.erase(price);
        } else {
          asks_.erase(price);
        }
      }
      id_index_.erase(it);
      r.accepted = true;
      return r;
    }

    case EventKind::Market: {
      if (e.volume <= 0) {
        r.reject_reason = "non-positive volume";
        return r;
      }
      total_submitted_ += e.volume;
      std::int64_t executed = 0;
      if (e.side == Side::Buy) {
        executed = match_against(
            asks_, e, e.volume, [](std::int64_t) { return true; }, r.fills);
      } else {
        executed = match_against(
            bids_, e, e.volume, [](std::int64_t) { return true; }, r.fills);
      }
      r.executed_volume = executed;
      r.rejected_volume = e.volume - executed;
      total_rejected_ += r.rejected_volume;
      if (executed == 0) {
        r.reject_reason = "empty opposite side";
        return r;
      }
      r.accepted = true;
      return r;
    }

    case EventKind::Limit: {
      if (e.volume <= 0) {
        r.reject_reason = "non-positive volume";
        return r;
      }
      total_submitted_ += e.volume;
      std::int64_t executed = 0;
      if (e.side == Side::Buy) {
        executed = match_against(
            asks_, e, e.volume,
            [&e](std::int64_t p) { return p <= e.price_ticks; }, r.fills);
      } else {
        executed = match_against(
            bids_, e, e.volume,
            [&e](std::int64_t p) { return p >= e.price_ticks; }, r.fills);
      }
      r.executed_volume = executed;
      std::int64_t rest = e.volume - executed;
      if (rest > 0) {
        RestingOrder o{e.seq, rest, e.agent};
        if (e.side == Side::Buy) {
          bids_[e.price_ticks].push_back(o);
        } else {
          asks_[e.price_ticks].push_back(o);
        }
        id_index_[e.seq] = {e.side, e.price_ticks};
        r.rested_volume = rest;
      }
      r.accepted = true;
      return r;
    }
  }
  r.reject_reason = "unknown event kind";
  return r;
}

std::optional<std::int64_t> OrderBook::best_bid() const {
  if (bids_.empty()) return std::nullopt;
  return bids_.begin()->first;
}

std::optional<std::int64_t> OrderBook::best_ask() const {
  if (asks_.empty()) return std::nullopt;
  return asks_.begin()->first;
}

std::optional<double> OrderBook::mid() const {
  auto b = best_bid(), a = best_ask();
  if (!b || !a) return std::nullopt;
  return 0.5 * (static_cast<double>(*a) + static_cast<double>(*b));
}

std::optional<std::int64_t> OrderBook::spread() const {
  auto b = best_bid(), a = best_ask();
  if (!b || !a) return std::nullopt;
  return *a - *b;
}

std::int64_t OrderBook::depth_at(Side side, std::int64_t price) const {
  std::int64_t total = 0;
  if (side == Side::Buy) {
    auto it = bids_.find(price);
    if (it == bids_.end()) return 0;
    for (const RestingOrder& o : it->second) total += o.volume;
  } else {
    auto it = asks_.find(price);
    if (it == asks_.end()) return 0;
    for (const RestingOrder& o : it->second) total += o.volume;
  }
  return total;
}

std::int64_t OrderBook::depth_at_best(Side side) const {
  auto best = side == Side::Buy ? best_bid() : best_ask();
  if (!best) return 0;
  return depth_at(side, *best);
}

std::int64_t OrderBook::side_volume(Side side) const {
  std::int64_t total = 0;
  if (side == Side::Buy) {
    for (const auto& [p, level] : bids_)
      for (const RestingOrder& o : level) total += o.volume;
  } else {
    for (const auto& [p, level] : asks_)
      for (const RestingOrder& o : level) total += o.volume;
  }
  return total;
}

std::vector<std::pair<std::int64_t, std::int64_t>> OrderBook::levels(
    Side side, std::size_t max_levels) const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto take = [&out, max_levels](const auto& map) {
    for (const auto& [price, level] : map) {
      if (out.size() >= max_levels) break;
      std::int64_t v = 0;
      for (const auto& o : level) v += o.volume;
      out.emplace_back(price, v);
    }
  };
  if (side == Side::Buy) {
    take(bids_);
  } else {
    take(asks_);
  }
  return out;
}

std::vector<std::int64_t> OrderBook::gaps(Side side,
                                          std::size_t max_gaps) const {
  auto lv = levels(side, max_gaps + 1);
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < lv.size(); ++i) {
    out.push_back(std::abs(lv[i].first - lv[i - 1].first));
  }
  return out;
}

VirtualImpact OrderBook::virtual_impact(Side taker_side,
                                        std::int64_t volume) const {
  VirtualImpact vi;
  vi.requested = volume;
  auto m0 = mid();
  vi.mid_before = m0 ? *m0 : kNaN;
  vi.vwap = kNaN;
  vi.mid_after = kNaN;
  vi.impact = kNaN;
  if (volume <= 0) return vi;

  std::int64_t remaining = volume;
  double notional = 0.0;
  std::optional<std::int64_t> new_best;

  auto walk = [&](const auto& map) {
    for (const auto& [price, level] : map) {
      std::int64_t level_vol = 0;
      for (const auto& o : level) level_vol += o.volume;
      if (remaining > 0) {
        std::int64_t take = std::min(remaining, level_vol);
        notional += static_cast<double>(take) * static_cast<double>(price);
        remaining -= take;
        if (take < level_vol) {
          new_best = price;  // level survives partially
          return;
        }
      } else {
        new_best = price;
        return;
      }
    }
  };

  if (taker_side == Side::Buy) {
    walk(asks_);
  } else {
    walk(bids_);
  }

  vi.executable = volume - remaining;
  if (vi.executable > 0) {
    vi.vwap = notional / static_cast<double>(vi.executable);
  }
  auto same_best = taker_side == Side::Buy ? best_bid() : best_ask();
  if (new_best && same_best) {
    vi.mid_after =
        0.5 * (static_cast<double>(*new_best) + static_cast<double>(*same_best));
    if (m0) vi.impact = vi.mid_after - vi.mid_before;
  }
  return vi;
}

BookStats OrderBook::stats() const {
  BookStats s;
  s.mid = mid();
  s.spread = spread();
  s.phi_b = depth_at_best(Side::Buy);
  s.phi_a = depth_at_best(Side::Sell);
  s.bid_volume = side_volume(Side::Buy);
  s.ask_volume = side_volume(Side::Sell);
  s.n_bid_levels = bids_.size();
  s.n_ask_levels = asks_.size();
  s.n_orders = id_index_.size();
  return s;
}

std::int64_t OrderBook::resting_volume() const {
  return side_volume(Side::Buy) + side_volume(Side::Sell);
}

}  // namespace mlab
