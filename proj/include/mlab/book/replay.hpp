#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlab/book/book.hpp"
#include "mlab/book/types.hpp"
#include "mlab/core/series.hpp"

namespace mlab {

// Post-event book snapshot. mid/spread are NaN while the book is one-sided.
struct ReplayRow {
  std::uint64_t seq = 0;
  double mid = 0.0;
  double spread = 0.0;
  double phi_b = 0.0;
  double phi_a = 0.0;
};

struct ReplayResult {
  std::vector<ReplayRow> rows;  // one per event, in stream order
  OrderBook book;               // final state
  std::uint64_t n_rejected = 0;
  std::uint64_t n_fills = 0;
};

// Applies the stream to a copy of `start`. Deterministic: equal inputs give
// byte-identical rows, and replay(s1 + s2) equals replay(s1) followed by
// replay(s2) from the intermediate book.
ReplayResult replay(OrderBook start, const EventStream& stream);

void write_replay_csv(const std::string& path, const ReplayResult& result);

// Trade-level view of a replayed stream: one entry per event that caused an
// immediate transaction (effective market order), carrying its sign, total
// crossing volume, prevailing pre-event mid/spread and the agent label.
TradeSeries trades_from_replay(OrderBook start, const EventStream& stream);

}  // namespace mlab
