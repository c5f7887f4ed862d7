#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mlab/book/types.hpp"

namespace mlab {

// Price-time priority limit order book on an integer tick grid.
//
// apply() is a deterministic function of (book state, event): identical
// event streams replayed on identical initial states produce identical
// books, fills and rejections. The book is a value type; copying it is the
// supported way to branch counterfactual histories.
class OrderBook {
 public:
  struct RestingOrder {
    std::uint64_t id = 0;
    std::int64_t volume = 0;
    std::int64_t agent = -1;
  };

  using Level = std::deque<RestingOrder>;

  // Non-mutating split of an incoming order into the immediately-transacting
  // part and the resting part. Market orders never rest: their crossing part
  // is capped by available opposite depth and the remainder is unfillable.
  Classification classify(const Event& e) const;

  ApplyResult apply(const Event& e);

  std::optional<std::int64_t> best_bid() const;
  std::optional<std::int64_t> best_ask() const;
  std::optional<double> mid() const;
  std::optional<std::int64_t> spread() const;

  std::int64_t depth_at(Side side, std::int64_t price) const;
  std::int64_t depth_at_best(Side side) const;
  std::int64_t side_volume(Side side) const;

  // Occupied levels best-first as (price, total volume), at most max_levels.
  std::vector<std::pair<std::int64_t, std::int64_t>> levels(
      Side side, std::size_t max_levels) const;

  // Price differences between successive occupied levels, best-first.
  std::vector<std::int64_t> gaps(Side side, std::size_t max_gaps) const;

  // Midprice move caused by sweeping `volume` against the book, without
  // mutating it.
  VirtualImpact virtual_impact(Side taker_side, std::int64_t volume) const;

  BookStats stats() const;

  std::size_t n_orders() const { return id_index_.size(); }
  bool order_alive(std::uint64_t id) const { return id_index_.count(id) > 0; }

  // Lifetime volume accounting (for conservation checks):
  // submitted == executed + resting + cancelled + rejected.
  std::int64_t total_submitted() const { return total_submitted_; }
  std::int64_t total_executed() const { return total_executed_; }
  std::int64_t total_cancelled() const { return total_cancelled_; }
  std::int64_t total_rejected() const { return total_rejected_; }
  std::int64_t resting_volume() const;

  bool operator==(const OrderBook& other) const {
    return bids_ == other.bids_ && asks_ == other.asks_;
  }

 private:
  friend bool operator==(const RestingOrder& a, const RestingOrder& b);

  std::map<std::int64_t, Level, std::greater<std::int64_t>> bids_;
  std::map<std::int64_t, Level> asks_;
  std::unordered_map<std::uint64_t, std::pair<Side, std::int64_t>> id_index_;

  std::int64_t total_submitted_ = 0;
  std::int64_t total_executed_ = 0;
  std::int64_t total_cancelled_ = 0;
  std::int64_t total_rejected_ = 0;

  template <typename Map>
  std::int64_t match_against(Map& levels, const Event& e,
                             std::int64_t budget,
                             std::function<bool(std::int64_t)> crosses,
                             std::vector<Fill>& fills);
};

inline bool operator==(const OrderBook::RestingOrder& a,
                       const OrderBook::RestingOrder& b) {
  return a.id == b.id && a.volume == b.volume && a.agent == b.agent;
}

}  // namespace mlab
