#include "mlab/flow/lmf.hpp"

#include <cmath>
#include <stdexcept>

namespace mlab {

namespace {

struct HiddenOrder {
  std::int64_t id = 0;
  int sign = 0;
  std::int64_t remaining = 0;
  std::int64_t agent = 0;
};

}  // namespace

LmfResult gen_lmf(const LmfParams& params, Rng& rng) {
  if (params.alpha <= 1.0) {
    throw std::invalid_argument("gen_lmf: alpha must exceed 1");
  }
  if (params.min_size < 1.0) {
    throw std::invalid_argument("gen_lmf: min_size must be >= 1");
  }
  if (!params.generalized && params.n_orders == 0) {
    throw std::invalid_argument("gen_lmf: n_orders must be positive");
  }
  if (params.generalized && !(params.lambda_c > 0.0 && params.lambda_c <= 1.0)) {
    throw std::invalid_argument("gen_lmf: lambda_c must lie in (0, 1]");
  }

  LmfResult out;
  out.sign.reserve(params.n_events);
  out.volume.reserve(params.n_events);
  out.agent.reserve(params.n_events);
  out.order_id.reserve(params.n_events);

  std::int64_t next_id = 0;
  std::vector<HiddenOrder> pool;

  auto fresh_order = [&]() {
    HiddenOrder o;
    o.id = next_id++;
    o.sign = rng.sign();
    o.remaining =
        static_cast<std::int64_t>(std::ceil(rng.pareto(params.alpha,
                                                       params.min_size)));
    o.agent = params.n_agents > 0
                  ? static_cast<std::int64_t>(
                        rng.uniform_int(params.n_agents))
                  : o.id;
    ++out.orders_created;
    return o;
  };

  pool.reserve(params.n_orders);
  for (std::size_t i = 0; i < params.n_orders; ++i) {
    pool.push_back(fresh_order());
  }

  // Birth-death variant: a completed order is replaced with probability
  // lambda_c instead of always; an exhausted pool forces a creation. Volume
  // in/out stays balanced for every lambda_c, and lambda_c = 1 reduces
  // exactly to the fixed-pool model.
  for (std::size_t step = 0; step < params.n_events; ++step) {
    if (pool.empty()) pool.push_back(fresh_order());
    std::size_t pick = pool.size() == 1
                           ? 0
                           : static_cast<std::size_t>(
                                 rng.uniform_int(pool.size()));
    HiddenOrder& o = pool[pick];
    out.sign.push_back(o.sign);
    out.volume.push_back(1.0);
    out.agent.push_back(o.agent);
    out.order_id.push_back(o.id);
    if (--o.remaining == 0) {
      ++out.orders_retired;
      if (!params.generalized || rng.bernoulli(params.lambda_c)) {
        pool[pick] = fresh_order();  // replacement keeps the pool size
      } else {
        pool[pick] = pool.back();
        pool.pop_back();
      }
    }
  }
  out.pool_final = pool.size();
  return out;
}

}  // namespace mlab
