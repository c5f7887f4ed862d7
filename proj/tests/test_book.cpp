#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "mlab/book/book.hpp"
#include "mlab/book/replay.hpp"
#include "mlab/book/types.hpp"
#include "mlab/core/rng.hpp"

using namespace mlab;

namespace {

Event limit(std::uint64_t seq, Side side, std::int64_t price,
            std::int64_t vol) {
  return Event{seq, EventKind::Limit, side, price, vol, -1, 0.0};
}
Event market(std::uint64_t seq, Side side, std::int64_t vol) {
  return Event{seq, EventKind::Market, side, 0, vol, -1, 0.0};
}
Event cancel(std::uint64_t seq, std::uint64_t target) {
  return Event{seq, EventKind::Cancel, Side::Buy,
               static_cast<std::int64_t>(target), 0, -1, 0.0};
}

// Brute-force book: flat vector of live orders, linear scans everywhere.
// Deliberately unlike the production data structures so that agreement is
// meaningful.
struct ShadowBook {
  struct Order {
    std::uint64_t id;
    Side side;
    std::int64_t price;
    std::int64_t vol;
  };
  std::vector<Order> live;

  // Index of the best opposite maker: best price first, lowest id to break
  // ties (ids grow with submission order, so this is time priority).
  int best_opposite(Side taker) const {
    int best = -1;
    for (int i = 0; i < static_cast<int>(live.size()); ++i) {
      if (live[i].side != opposite(taker)) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      bool better;
      if (taker == Side::Buy) {
        better = live[i].price < live[best].price ||
                 (live[i].price == live[best].price &&
                  live[i].id < live[best].id);
      } else {
        better = live[i].price > live[best].price ||
                 (live[i].price == live[best].price &&
                  live[i].id < live[best].id);
      }
      if (better) best = i;
    }
    return best;
  }

  bool crosses(Side taker, std::int64_t maker_price,
               std::int64_t limit_price) const {
    return taker == Side::Buy ? maker_price <= limit_price
                              : maker_price >= limit_price;
  }

  std::vector<Fill> apply(const Event& e) {
    std::vector<Fill> fills;
    if (e.kind == EventKind::Cancel) {
      auto it = std::find_if(live.begin(), live.end(), [&](const Order& o) {
        return o.id == static_cast<std::uint64_t>(e.price_ticks);
      });
      if (it != live.end()) live.erase(it);
      return fills;
    }
    std::int64_t budget = e.volume;
    bool is_market = e.kind == EventKind::Market;
    while (budget > 0) {
      int j = best_opposite(e.side);
      if (j < 0) break;
      if (!is_market && !crosses(e.side, live[j].price, e.price_ticks)) break;
      std::int64_t take = std::min(budget, live[j].vol);
      fills.push_back(Fill{e.seq, live[j].id, live[j].price, take, e.side});
      budget -= take;
      live[j].vol -= take;
      if (live[j].vol == 0) live.erase(live.begin() + j);
    }
    if (!is_market && budget > 0) {
      live.push_back(Order{e.seq, e.side, e.price_ticks, budget});
    }
    return fills;
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> levels(Side s) const {
    std::map<std::int64_t, std::int64_t> agg;
    for (const auto& o : live) {
      if (o.side == s) agg[o.price] += o.vol;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> out(agg.begin(),
                                                           agg.end());
    if (s == Side::Buy) std::reverse(out.begin(), out.end());
    return out;
  }
};

}  // namespace

TEST_CASE("book: empty state has no quotes") {
  OrderBook b;
  CHECK(!b.best_bid());
  CHECK(!b.best_ask());
  CHECK(!b.mid());
  CHECK(!b.spread());
  CHECK(b.n_orders() == 0);
}

TEST_CASE("book: price priority then time priority") {
  OrderBook b;
  b.apply(limit(1, Side::Sell, 102, 5));
  b.apply(limit(2, Side::Sell, 101, 5));  // better price
  b.apply(limit(3, Side::Sell, 101, 5));  // same price, later
  auto r = b.apply(market(4, Side::Buy, 7));
  REQUIRE(r.fills.size() == 2);
  CHECK(r.fills[0].maker_seq == 2);
  CHECK(r.fills[0].volume == 5);
  CHECK(r.fills[0].price_ticks == 101);
  CHECK(r.fills[1].maker_seq == 3);
  CHECK(r.fills[1].volume == 2);
  CHECK(b.depth_at(Side::Sell, 101) == 3);
  CHECK(b.depth_at(Side::Sell, 102) == 5);
}

TEST_CASE("book: marketable limit executes crossing part, rests remainder") {
  OrderBook b;
  b.apply(limit(1, Side::Sell, 101, 4));
  b.apply(limit(2, Side::Sell, 103, 4));

  Event e = limit(3, Side::Buy, 102, 10);
  Classification cls = b.classify(e);
  CHECK(cls.crossing_volume == 4);  // only the 101 level crosses 102
  CHECK(cls.resting_volume == 6);

  auto r = b.apply(e);
  CHECK(r.executed_volume == 4);
  CHECK(r.rested_volume == 6);
  CHECK(*b.best_bid() == 102);
  CHECK(*b.best_ask() == 103);
  CHECK(b.depth_at(Side::Buy, 102) == 6);
}

TEST_CASE("book: market order never rests; unfillable part is rejected") {
  OrderBook b;
  b.apply(limit(1, Side::Sell, 101, 3));
  auto r = b.apply(market(2, Side::Buy, 10));
  CHECK(r.executed_volume == 3);
  CHECK(r.rejected_volume == 7);
  CHECK(r.rested_volume == 0);
  CHECK(!b.best_ask());

  auto r2 = b.apply(market(3, Side::Buy, 1));
  CHECK(!r2.accepted);
  CHECK(r2.reject_reason.has_value());
  CHECK(r2.rejected_volume == 1);
}

TEST_CASE("book: cancel by id, unknown id rejected") {
  OrderBook b;
  b.apply(limit(1, Side::Buy, 99, 5));
  b.apply(limit(2, Side::Buy, 99, 7));
  auto r = b.apply(cancel(3, 1));
  CHECK(r.accepted);
  CHECK(r.cancelled_volume == 5);
  CHECK(b.depth_at(Side::Buy, 99) == 7);
  auto r2 = b.apply(cancel(4, 1));
  CHECK(!r2.accepted);
  CHECK(!b.order_alive(1));
  CHECK(b.order_alive(2));
}

TEST_CASE("book: classify is consistent with apply and does not mutate") {
  Rng rng(11);
  OrderBook b;
  std::uint64_t seq = 0;
  for (int i = 0; i < 200; ++i) {
    Side s = rng.bernoulli(0.5) ? Side::Buy : Side::Sell;
    std::int64_t p = 95 + static_cast<std::int64_t>(rng.uniform_int(11));
    b.apply(limit(++seq, s, p, 1 + static_cast<std::int64_t>(rng.uniform_int(5))));
  }
  for (int i = 0; i < 200; ++i) {
    Event e;
    if (rng.bernoulli(0.5)) {
      e = limit(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                95 + static_cast<std::int64_t>(rng.uniform_int(11)),
                1 + static_cast<std::int64_t>(rng.uniform_int(8)));
    } else {
      e = market(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                 1 + static_cast<std::int64_t>(rng.uniform_int(8)));
    }
    Classification cls = b.classify(e);
    auto r = b.apply(e);
    CHECK(cls.crossing_volume == r.executed_volume);
    CHECK(cls.resting_volume == r.rested_volume);
  }
}

TEST_CASE("book: random soup matches brute-force oracle") {
  Rng rng(12);
  OrderBook b;
  ShadowBook shadow;
  std::uint64_t seq = 0;
  std::vector<std::uint64_t> submitted_ids;

  for (int i = 0; i < 5000; ++i) {
    double u = rng.uniform();
    Event e;
    if (u < 0.55 || submitted_ids.empty()) {
      e = limit(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                990 + static_cast<std::int64_t>(rng.uniform_int(21)),
                1 + static_cast<std::int64_t>(rng.uniform_int(9)));
      submitted_ids.push_back(e.seq);
    } else if (u < 0.8) {
      e = market(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                 1 + static_cast<std::int64_t>(rng.uniform_int(9)));
    } else {
      std::uint64_t target =
          submitted_ids[rng.uniform_int(submitted_ids.size())];
      e = cancel(++seq, target);
    }
    auto got = b.apply(e).fills;
    auto want = shadow.apply(e);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].maker_seq == want[k].maker_seq);
      CHECK(got[k].price_ticks == want[k].price_ticks);
      CHECK(got[k].volume == want[k].volume);
    }
  }

  for (Side s : {Side::Buy, Side::Sell}) {
    auto got = b.levels(s, 100000);
    auto want = shadow.levels(s);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].first == want[k].first);
      CHECK(got[k].second == want[k].second);
    }
  }
}

TEST_CASE("book: volume conservation across a random soup") {
  Rng rng(13);
  OrderBook b;
  std::uint64_t seq = 0;
  std::vector<std::uint64_t> ids;
  for (int i = 0; i < 20000; ++i) {
    double u = rng.uniform();
    if (u < 0.5 || ids.empty()) {
      Event e = limit(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                      990 + static_cast<std::int64_t>(rng.uniform_int(21)),
                      1 + static_cast<std::int64_t>(rng.uniform_int(9)));
      ids.push_back(e.seq);
      b.apply(e);
    } else if (u < 0.85) {
      b.apply(market(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                     1 + static_cast<std::int64_t>(rng.uniform_int(9))));
    } else {
      b.apply(cancel(++seq, ids[rng.uniform_int(ids.size())]));
    }
  }
  CHECK(b.total_submitted() == b.total_executed() + b.resting_volume() +
                                   b.total_cancelled() + b.total_rejected());
  BookStats st = b.stats();
  CHECK(st.bid_volume + st.ask_volume == b.resting_volume());
}

TEST_CASE("book: virtual impact is monotone and non-mutating") {
  OrderBook b;
  b.apply(limit(1, Side::Buy, 99, 5));
  b.apply(limit(2, Side::Sell, 101, 3));
  b.apply(limit(3, Side::Sell, 102, 4));
  b.apply(limit(4, Side::Sell, 105, 2));

  OrderBook before = b;
  double last = 0.0;
  for (std::int64_t v = 1; v <= 8; ++v) {
    VirtualImpact vi = b.virtual_impact(Side::Buy, v);
    CHECK(vi.requested == v);
    CHECK(vi.executable == v);
    CHECK(vi.impact >= last - 1e-12);
    last = vi.impact;
  }
  // Sweeping the whole side leaves no quote to mark against.
  VirtualImpact all = b.virtual_impact(Side::Buy, 12);
  CHECK(all.executable == 9);
  CHECK(std::isnan(all.mid_after));
  CHECK(b == before);

  VirtualImpact one = b.virtual_impact(Side::Buy, 1);
  CHECK(one.vwap == doctest::Approx(101.0));
  // Consuming part of the 101 level leaves the best ask unchanged.
  CHECK(one.impact == doctest::Approx(0.0));
  VirtualImpact four = b.virtual_impact(Side::Buy, 4);
  CHECK(four.vwap == doctest::Approx((3 * 101 + 102) / 4.0));
  CHECK(four.mid_after == doctest::Approx((99 + 102) / 2.0));
}

TEST_CASE("replay: composition and determinism") {
  Rng rng(14);
  EventStream s1, s2;
  std::uint64_t seq = 0;
  auto gen = [&](EventStream& out, int n) {
    for (int i = 0; i < n; ++i) {
      if (rng.bernoulli(0.6)) {
        out.push_back(limit(++seq, rng.bernoulli(0.5) ? Side::Buy : Side::Sell,
                            995 + static_cast<std::int64_t>(rng.uniform_int(11)),
                            1 + static_cast<std::int64_t>(rng.uniform_int(4))));
      } else {
        out.push_back(market(++seq,
                             rng.bernoulli(0.5) ? Side::Buy : Side::Sell, 1));
      }
    }
  };
  gen(s1, 300);
  gen(s2, 300);

  EventStream all = s1;
  all.insert(all.end(), s2.begin(), s2.end());

  ReplayResult whole = replay(OrderBook{}, all);
  ReplayResult part1 = replay(OrderBook{}, s1);
  ReplayResult part2 = replay(part1.book, s2);
  CHECK(whole.book == part2.book);
  REQUIRE(whole.rows.size() == part1.rows.size() + part2.rows.size());
  for (std::size_t i = 0; i < part2.rows.size(); ++i) {
    const auto& a = whole.rows[part1.rows.size() + i];
    const auto& b = part2.rows[i];
    CHECK(a.seq == b.seq);
    if (std::isnan(a.mid)) {
      CHECK(std::isnan(b.mid));
    } else {
      CHECK(a.mid == b.mid);
    }
  }

  ReplayResult again = replay(OrderBook{}, all);
  CHECK(again.book == whole.book);
  CHECK(again.n_fills == whole.n_fills);
}

TEST_CASE("replay: trade series extraction") {
  OrderBook start;
  start.apply(limit(1000001, Side::Buy, 99, 10));
  start.apply(limit(1000002, Side::Sell, 101, 10));

  EventStream s;
  s.push_back(market(1, Side::Buy, 2));
  s.push_back(limit(2, Side::Buy, 99, 1));    // no trade
  s.push_back(market(3, Side::Sell, 1));
  s.push_back(limit(4, Side::Buy, 101, 3));   // marketable limit => trade

  TradeSeries t = trades_from_replay(start, s);
  REQUIRE(t.size() == 3);
  CHECK(t.sign[0] == 1);
  CHECK(t.sign[1] == -1);
  CHECK(t.sign[2] == 1);
  CHECK(t.mid.size() == 4);
  CHECK(t.mid[0] == doctest::Approx(100.0));
  CHECK(t.volume[0] == doctest::Approx(2.0));
  CHECK_NOTHROW(t.validate());
}
