#include "iqmis/ising.hpp"

#include <stdexcept>

namespace iqmis {

PenaltyWeight::PenaltyWeight(double v) : value(v) {
  if (!(value > 0.0)) throw std::invalid_argument("penalty weight must be positive");
}

IsingCost encode_mis(const Graph& g, PenaltyWeight lambda) {
  IsingCost cost;
  cost.n = g.n();
  double total = 0.0;
  cost.fields.resize(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    total += g.weight(v);
    cost.fields[static_cast<std::size_t>(v)] = -g.weight(v) + lambda.value * g.degree(v);
  }
  cost.constant = -total + lambda.value * g.m();
  for (auto [u, v] : g.edges()) cost.couplings[{u, v}] = lambda.value;
  return cost;
}

RewardPenalty reward_penalty(const Graph& g, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != g.n())
    throw std::invalid_argument("reward_penalty: bitstring length mismatch");
  RewardPenalty rp{0.0, 0};
  for (int v = 0; v < g.n(); ++v)
    if (bits[static_cast<std::size_t>(v)]) rp.reward += g.weight(v);
  for (auto [u, v] : g.edges())
    if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)]) ++rp.penalized;
  return rp;
}

double evaluate(const IsingCost& cost, const std::vector<int>& spins) {
  if (static_cast<int>(spins.size()) != cost.n)
    throw std::invalid_argument("evaluate: spin count mismatch");
  for (int s : spins)
    if (s != 1 && s != -1) throw std::invalid_argument("evaluate: spins must be +1 or -1");
  double value = cost.constant;
  for (int i = 0; i < cost.n; ++i) value += cost.fields[static_cast<std::size_t>(i)] * spins[static_cast<std::size_t>(i)];
  for (const auto& [key, J] : cost.couplings)
    value += J * spins[static_cast<std::size_t>(key.first)] * spins[static_cast<std::size_t>(key.second)];
  return value;
}

namespace {

void check_qubit(const IsingCost& cost, int i, const char* op) {
  if (i < 0 || i >= cost.n) throw std::invalid_argument(std::string(op) + ": qubit id out of range");
}

// renumber after deleting qubit `gone`; prunes exact-zero couplings
IsingCost compact_without(const IsingCost& cost, int gone) {
  IsingCost out;
  out.n = cost.n - 1;
  out.constant = cost.constant;
  out.fields.reserve(static_cast<std::size_t>(out.n));
  for (int i = 0; i < cost.n; ++i)
    if (i != gone) out.fields.push_back(cost.fields[static_cast<std::size_t>(i)]);
  auto shift = [gone](int i) { return i > gone ? i - 1 : i; };
  for (const auto& [key, J] : cost.couplings) {
    if (key.first == gone || key.second == gone) continue;
    if (J == 0.0) continue;
    out.couplings[{shift(key.first), shift(key.second)}] = J;
  }
  return out;
}

}  // namespace

IsingCost fix_spin(const IsingCost& cost, int i, int s) {
  check_qubit(cost, i, "fix_spin");
  if (s != 1 && s != -1) throw std::invalid_argument("fix_spin: spin must be +1 or -1");
  IsingCost work = cost;
  work.constant += work.fields[static_cast<std::size_t>(i)] * s;
  work.fields[static_cast<std::size_t>(i)] = 0.0;
  for (const auto& [key, J] : cost.couplings) {
    if (key.first == i)
      work.fields[static_cast<std::size_t>(key.second)] += J * s;
    else if (key.second == i)
      work.fields[static_cast<std::size_t>(key.first)] += J * s;
  }
  return compact_without(work, i);
}

IsingCost substitute_anticorrelated(const IsingCost& cost, int l, int k) {
  check_qubit(cost, l, "substitute_anticorrelated");
  check_qubit(cost, k, "substitute_anticorrelated");
  if (l == k) throw std::invalid_argument("substitute_anticorrelated: qubits must differ");
  IsingCost work = cost;
  // z_l = -z_k: field of l flips onto k
  work.fields[static_cast<std::size_t>(k)] -= work.fields[static_cast<std::size_t>(l)];
  work.fields[static_cast<std::size_t>(l)] = 0.0;
  for (const auto& [key, J] : cost.couplings) {
    if (key.first != l && key.second != l) continue;
    int m = key.first == l ? key.second : key.first;
    if (m == k) {
      // J z_l z_k -> -J
      work.constant -= J;
      continue;
    }
    auto mk = m < k ? std::make_pair(m, k) : std::make_pair(k, m);
    work.couplings[mk] -= J;
  }
  return compact_without(work, l);
}

namespace {

inline void fnv_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

std::uint64_t cost_digest(const IsingCost& cost) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::int64_t n = cost.n;
  fnv_bytes(h, &n, sizeof n);
  fnv_bytes(h, &cost.constant, sizeof cost.constant);
  for (double f : cost.fields) fnv_bytes(h, &f, sizeof f);
  for (const auto& [key, J] : cost.couplings) {
    std::int32_t e[2] = {key.first, key.second};
    fnv_bytes(h, e, sizeof e);
    fnv_bytes(h, &J, sizeof J);
  }
  return h;
}

}  // namespace iqmis
