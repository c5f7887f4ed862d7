#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlab {

enum class Side : std::uint8_t { Buy, Sell };

inline Side opposite(Side s) { return s == Side::Buy ? Side::Sell : Side::Buy; }
inline int sign_of(Side s) { return s == Side::Buy ? 1 : -1; }
inline char side_char(Side s) { return s == Side::Buy ? 'B' : 'S'; }

enum class EventKind : char { Limit = 'L', Market = 'M', Cancel = 'C' };

// One order-flow event. For Cancel events `price_ticks` carries the seq of
// the order being cancelled (order id == seq of the submitting event) and
// `volume` is ignored.
struct Event {
  std::uint64_t seq = 0;
  EventKind kind = EventKind::Limit;
  Side side = Side::Buy;
  std::int64_t price_ticks = 0;
  std::int64_t volume = 0;
  std::int64_t agent = -1;
  double ts = 0.0;
};

using EventStream = std::vector<Event>;

struct Fill {
  std::uint64_t taker_seq = 0;
  std::uint64_t maker_seq = 0;
  std::int64_t price_ticks = 0;
  std::int64_t volume = 0;
  Side taker_side = Side::Buy;
};

// Split of an incoming order into the part that would transact immediately
// (effective market order) and the part that would rest (effective limit
// order). A crossing limit order contributes to both.
struct Classification {
  std::int64_t crossing_volume = 0;
  std::int64_t resting_volume = 0;
};

struct ApplyResult {
  bool accepted = false;
  std::optional<std::string> reject_reason;
  std::vector<Fill> fills;
  std::int64_t executed_volume = 0;  // taker-side volume that transacted
  std::int64_t rested_volume = 0;    // volume added to the book
  std::int64_t cancelled_volume = 0;
  std::int64_t rejected_volume = 0;  // unfillable remainder of market orders
};

struct BookStats {
  std::optional<double> mid;
  std::optional<std::int64_t> spread;
  std::int64_t phi_b = 0;  // resting volume at best bid
  std::int64_t phi_a = 0;  // resting volume at best ask
  std::int64_t bid_volume = 0;
  std::int64_t ask_volume = 0;
  std::size_t n_bid_levels = 0;
  std::size_t n_ask_levels = 0;
  std::size_t n_orders = 0;
};

struct VirtualImpact {
  std::int64_t requested = 0;
  std::int64_t executable = 0;
  double vwap = 0.0;        // NaN when nothing is executable
  double mid_before = 0.0;  // NaN when the book is one-sided
  double mid_after = 0.0;   // NaN when the sweep empties the opposite side
  double impact = 0.0;      // mid_after - mid_before
};

}  // namespace mlab
