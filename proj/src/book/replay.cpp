#include "mlab/book/replay.hpp"

#include <cmath>
#include <limits>

#include "mlab/core/csv.hpp"

namespace mlab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }
double or_nan_i(const std::optional<std::int64_t>& v) {
  return v ? static_cast<double>(*v) : kNaN;
}
}  // namespace

ReplayResult replay(OrderBook start, const EventStream& stream) {
  ReplayResult out;
  out.book = std::move(start);
  out.rows.reserve(stream.size());
  for (const Event& e : stream) {
    ApplyResult r = out.book.apply(e);
    if (!r.accepted) ++out.n_rejected;
    out.n_fills += r.fills.size();
    ReplayRow row;
    row.seq = e.seq;
    row.mid = or_nan(out.book.mid());
    row.spread = or_nan_i(out.book.spread());
    row.phi_b = static_cast<double>(out.book.depth_at_best(Side::Buy));
    row.phi_a = static_cast<double>(out.book.depth_at_best(Side::Sell));
    out.rows.push_back(row);
  }
  return out;
}

void write_replay_csv(const std::string& path, const ReplayResult& result) {
  CsvWriter w(path, {"seq", "mid_ticks", "spread_ticks", "phi_b", "phi_a"});
  for (const ReplayRow& r : result.rows) {
    w.begin_row();
    w.cell(static_cast<std::uint64_t>(r.seq));
    w.cell(r.mid);
    w.cell(r.spread);
    w.cell(r.phi_b);
    w.cell(r.phi_a);
    w.end_row();
  }
}

TradeSeries trades_from_replay(OrderBook start, const EventStream& stream) {
  TradeSeries ts;
  OrderBook book = std::move(start);
  double last_mid = or_nan(book.mid());
  double last_spread = or_nan_i(book.spread());
  for (const Event& e : stream) {
    double pre_mid = last_mid;
    double pre_spread = last_spread;
    ApplyResult r = book.apply(e);
    last_mid = or_nan(book.mid());
    last_spread = or_nan_i(book.spread());
    if (r.executed_volume > 0 && std::isfinite(pre_mid)) {
      ts.sign.push_back(sign_of(e.side));
      ts.volume.push_back(static_cast<double>(r.executed_volume));
      ts.mid.push_back(pre_mid);
      ts.spread.push_back(pre_spread);
      ts.agent.push_back(e.agent);
    }
  }
  ts.mid.push_back(last_mid);
  return ts;
}

}  // namespace mlab
