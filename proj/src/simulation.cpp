#include "ransom/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ransom/stochastics.hpp"

namespace ransom {

PlayoutRecord resolve_branches(const GameParams& g, GameVariant variant, double x, HackerType type,
                               VictimAction action, double r, RngStream& rng) {
  if (!is_admissible(variant, action)) throw std::invalid_argument("action not available in this variant");
  PlayoutRecord rec;
  rec.victim_valuation = x;
  rec.hacker_type = type;
  rec.action = action;
  const bool fake = type == HackerType::A2;
  const double lost = fake ? x : 0.0;

  double victim = 0.0;
  double hacker = -g.c4;
  auto crack = [&] {
    victim -= g.c1;
    const bool ok = rng.bernoulli(g.p1);
    rec.crack_succeeded = ok;
    if (ok) {
      if (fake) hacker += g.b1;
      return;
    }
    const bool pays = rng.bernoulli(p2_eval(g.willingness, r));
    rec.paid_after_crack_fail = pays;
    if (fake) hacker += g.b2;
    if (pays) {
      victim -= g.c2 + r + lost;
      hacker += r;
    }
  };

  switch (action) {
    case VictimAction::D:
      victim = -x;
      if (fake) hacker += g.b1;
      break;
    case VictimAction::P:
      victim = -r - lost;
      hacker += r + (fake ? g.b2 : 0.0);
      break;
    case VictimAction::C:
      crack();
      break;
    case VictimAction::R: {
      victim -= g.recovery_cost();
      const bool ok = rng.bernoulli(g.recovery_prob());
      rec.recovery_succeeded = ok;
      if (ok) {
        if (fake) hacker += g.b1;
      } else {
        crack();
      }
      break;
    }
  }
  rec.victim_payoff = victim;
  rec.hacker_payoff = hacker;
  return rec;
}

PlayoutRecord playout(const GameParams& g, GameVariant variant, const RegionPartition& part, double r,
                      RngStream& rng, std::optional<HackerType> fixed_type) {
  if (!(r >= 0.0)) throw std::invalid_argument("ransom must be >= 0");
  const double x = sample(g.valuation, rng);
  const bool genuine = rng.bernoulli(g.p);
  const HackerType type = fixed_type.value_or(genuine ? HackerType::A1 : HackerType::A2);
  const VictimAction a = best_response(g, variant, part, x, r);
  return resolve_branches(g, variant, x, type, a, r, rng);
}

PlayoutRecord playout(const GameParams& g, GameVariant variant, double r, RngStream& rng) {
  return playout(g, variant, region_boundary(g, variant), r, rng);
}

void RunningStats::add(double v) {
  ++n;
  const double delta = v - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (v - mean);
}

void RunningStats::merge(const RunningStats& o) {
  if (o.n == 0) return;
  if (n == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n);
  const double nb = static_cast<double>(o.n);
  const double total = na + nb;
  const double delta = o.mean - mean;
  mean += delta * nb / total;
  m2 += o.m2 + delta * delta * na * nb / total;
  n += o.n;
}

double RunningStats::variance() const { return n < 2 ? 0.0 : m2 / static_cast<double>(n - 1); }

double RunningStats::std_error() const { return n == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(n)); }

namespace {

struct Block {
  RunningStats hacker;
  RunningStats victim;
  std::array<std::array<RunningStats, 4>, 2> victim_by_profile{};
  std::array<std::array<RunningStats, 4>, 2> hacker_by_profile{};
  std::array<std::uint64_t, 2> type_counts{};

  void merge(const Block& o) {
    hacker.merge(o.hacker);
    victim.merge(o.victim);
    for (int t = 0; t < 2; ++t) {
      type_counts[t] += o.type_counts[t];
      for (int a = 0; a < 4; ++a) {
        victim_by_profile[t][a].merge(o.victim_by_profile[t][a]);
        hacker_by_profile[t][a].merge(o.hacker_by_profile[t][a]);
      }
    }
  }
};

}  // namespace

SimulationSummary simulate(const GameParams& g, GameVariant variant, double r, std::uint64_t n, std::uint64_t seed,
                           const SimulationOptions& opt) {
  if (n == 0) throw std::invalid_argument("simulation needs n >= 1");
  if (opt.block_size == 0) throw std::invalid_argument("block size must be positive");
  require_valid(g, variant);
  const RegionPartition part = region_boundary(g, variant);
  const RngStream root(seed);

  const std::uint64_t nblocks = (n + opt.block_size - 1) / opt.block_size;
  std::vector<Block> blocks(nblocks);
  auto run_block = [&](std::uint64_t b) {
    Block& blk = blocks[b];
    const std::uint64_t end = std::min(n, (b + 1) * opt.block_size);
    for (std::uint64_t i = b * opt.block_size; i < end; ++i) {
      RngStream rng = root.substream(i);
      const PlayoutRecord rec = playout(g, variant, part, r, rng, opt.fixed_type);
      const auto t = static_cast<std::size_t>(rec.hacker_type);
      const auto a = static_cast<std::size_t>(rec.action);
      blk.hacker.add(rec.hacker_payoff);
      blk.victim.add(rec.victim_payoff);
      blk.victim_by_profile[t][a].add(rec.victim_payoff);
      blk.hacker_by_profile[t][a].add(rec.hacker_payoff);
      ++blk.type_counts[t];
    }
  };

  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(nblocks)));
  if (threads == 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = static_cast<std::uint64_t>(w); b < nblocks; b += static_cast<std::uint64_t>(threads)) {
          run_block(b);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Reduction always runs in block order.
  Block total;
  for (const auto& blk : blocks) total.merge(blk);

  SimulationSummary s;
  s.n = n;
  s.mean_hacker_payoff = total.hacker.mean;
  s.std_error = total.hacker.std_error();
  s.mean_victim_payoff = total.victim.mean;
  s.victim_std_error = total.victim.std_error();
  s.type_counts = total.type_counts;
  s.victim_by_profile = total.victim_by_profile;
  s.hacker_by_profile = total.hacker_by_profile;
  for (int a = 0; a < 4; ++a) {
    s.action_counts[a] = total.victim_by_profile[0][a].n + total.victim_by_profile[1][a].n;
    s.action_frequencies[a] = static_cast<double>(s.action_counts[a]) / static_cast<double>(n);
  }
  return s;
}

}  // namespace ransom
