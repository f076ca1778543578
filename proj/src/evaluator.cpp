#include "ocw/evaluator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "ocw/error.hpp"
#include "ocw/kernels.hpp"
#include "ocw/limits.hpp"

namespace ocw {

namespace {

struct CacheKey {
  std::string shape;
  std::vector<Permutation> modulus;  // empty means none

  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    return a.modulus < b.modulus;
  }
};

using GroupCache = std::map<CacheKey, std::shared_ptr<const std::vector<Permutation>>>;

std::mutex g_cache_mutex;
std::map<std::weak_ptr<const PermGroup>, GroupCache, std::owner_less<std::weak_ptr<const PermGroup>>>
    g_cache;

std::shared_ptr<const std::vector<Permutation>> cache_find(const GroupPtr& g, const CacheKey& key) {
  std::lock_guard lock(g_cache_mutex);
  auto it = g_cache.find(g);
  if (it == g_cache.end()) return nullptr;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? nullptr : jt->second;
}

void cache_store(const GroupPtr& g, CacheKey key,
                 std::shared_ptr<const std::vector<Permutation>> values) {
  std::lock_guard lock(g_cache_mutex);
  for (auto it = g_cache.begin(); it != g_cache.end();)
    it = it->first.expired() ? g_cache.erase(it) : std::next(it);
  g_cache[g].emplace(std::move(key), std::move(values));
}

std::shared_ptr<const std::vector<Permutation>> values_recursive(const GroupPtr& g,
                                                                 const WordTree& w,
                                                                 const Subgroup* mod) {
  CacheKey key{w.shape(), mod ? mod->elements() : std::vector<Permutation>{}};
  if (auto hit = cache_find(g, key)) return hit;

  std::vector<Permutation> values;
  if (w.is_leaf(w.root())) {
    if (mod) {
      std::unordered_set<Permutation, PermutationHash> reps;
      for (const Permutation& e : g->elements()) reps.insert(coset_rep(e, *mod));
      values.assign(reps.begin(), reps.end());
      std::sort(values.begin(), values.end());
    } else {
      values = g->elements();
    }
  } else {
    auto left = values_recursive(g, w.subtree(w.at(w.root()).left), mod);
    auto right = values_recursive(g, w.subtree(w.at(w.root()).right), mod);
    values = kernels::pairwise_commutators(*left, *right, mod);
  }
  if (values.size() > limits().max_value_set)
    throw resource_error("value set exceeds the configured cap");

  auto shared = std::make_shared<const std::vector<Permutation>>(std::move(values));
  cache_store(g, std::move(key), shared);
  return shared;
}

void check_modulus(const GroupPtr& g, const Subgroup* mod) {
  if (!mod) return;
  if (mod->parent() != g) throw argument_error("modulus belongs to a different group");
  if (!mod->is_normal_in_parent()) throw argument_error("modulus is not normal");
}

}  // namespace

bool ValueSet::contains(const Permutation& p) const {
  return std::binary_search(values.begin(), values.end(), p);
}

ValueSet value_set(const GroupPtr& g, const WordTree& w, const Subgroup* modulus) {
  check_modulus(g, modulus);
  ValueSet vs;
  vs.group = g;
  vs.word = w;
  if (modulus) vs.modulus = *modulus;
  vs.values = *values_recursive(g, w, modulus);
  return vs;
}

Permutation evaluate_word(const WordTree& w, std::span<const Permutation> assignment) {
  struct Eval {
    const WordTree& t;
    std::span<const Permutation> args;
    Permutation at(VertexId v) const {
      if (t.is_leaf(v)) return args[t.leaf_index(v)];
      return commutator(at(t.at(v).left), at(t.at(v).right));
    }
  };
  if (assignment.size() != static_cast<std::size_t>(w.measures().indeterminate_count))
    throw argument_error("assignment size does not match the indeterminate count");
  return Eval{w, assignment}.at(w.root());
}

ValueSet value_set_naive(const GroupPtr& g, const WordTree& w) {
  const std::size_t k = static_cast<std::size_t>(w.measures().indeterminate_count);
  const std::size_t n = g->order();

  double cost = static_cast<double>(w.vertex_count());
  for (std::size_t j = 0; j < k; ++j) cost *= static_cast<double>(n);
  if (cost > static_cast<double>(limits().naive_eval_budget))
    throw resource_error("naive evaluation exceeds the configured budget");

  std::unordered_set<Permutation, PermutationHash> values;
  std::vector<std::size_t> pick(k, 0);
  std::vector<Permutation> args(k, g->identity_element());
  while (true) {
    for (std::size_t j = 0; j < k; ++j) args[j] = g->elements()[pick[j]];
    values.insert(evaluate_word(w, args));

    std::size_t j = 0;
    for (; j < k; ++j) {
      if (++pick[j] < n) break;
      pick[j] = 0;
    }
    if (j == k) break;
  }

  ValueSet vs;
  vs.group = g;
  vs.word = w;
  vs.values.assign(values.begin(), values.end());
  std::sort(vs.values.begin(), vs.values.end());
  return vs;
}

Subgroup verbal_subgroup(const GroupPtr& g, const WordTree& w, const Subgroup* modulus) {
  ValueSet vs = value_set(g, w, modulus);
  std::vector<Permutation> gens = std::move(vs.values);
  if (modulus)
    gens.insert(gens.end(), modulus->elements().begin(), modulus->elements().end());
  return generated_subgroup(g, gens);
}

int width(const GroupPtr& g, const WordTree& w, std::span<const Permutation> over) {
  ValueSet vs = value_set(g, w, nullptr);
  std::vector<Permutation> gens = vs.values;
  for (const Permutation& v : vs.values) gens.push_back(v.inverse());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Subgroup target = verbal_subgroup(g, w, nullptr);
  for (const Permutation& s : over)
    if (!target.contains(s))
      throw argument_error("width query element outside the verbal subgroup");

  std::unordered_map<Permutation, int, PermutationHash> dist;
  std::deque<Permutation> queue;
  dist.emplace(g->identity_element(), 0);
  queue.push_back(g->identity_element());
  while (!queue.empty()) {
    Permutation e = std::move(queue.front());
    queue.pop_front();
    int d = dist.at(e);
    for (const Permutation& v : gens) {
      Permutation next = e * v;
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    }
  }

  int best = 0;
  auto consider = [&](const Permutation& s) {
    auto it = dist.find(s);
    if (it == dist.end()) throw internal_error("verbal element unreachable from values");
    best = std::max(best, it->second);
  };
  if (over.empty())
    for (const Permutation& s : target.elements()) consider(s);
  else
    for (const Permutation& s : over) consider(s);
  return best;
}

}  // namespace ocw
