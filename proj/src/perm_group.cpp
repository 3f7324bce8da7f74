#include "blockfunctor/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>

#include "blockfunctor/errors.hpp"

namespace blockfunctor {

std::size_t desk_scale_bound() {
  if (const char* env = std::getenv("BLOCKFUNCTOR_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 512;
}

namespace {

struct Level {
  Point base_point = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<int> slot;  // per point: index into reps, or -1
  std::vector<Permutation> reps;

  void rebuild(std::size_t degree) {
    orbit.assign(1, base_point);
    slot.assign(degree, -1);
    reps.assign(1, Permutation::identity(degree));
    slot[base_point] = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      Point beta = orbit[i];
      const Permutation u = reps[static_cast<std::size_t>(slot[beta])];
      for (const auto& s : gens) {
        Point gamma = s(beta);
        if (slot[gamma] >= 0) continue;
        slot[gamma] = static_cast<int>(reps.size());
        reps.push_back(u * s);
        orbit.push_back(gamma);
      }
    }
  }

  const Permutation* transversal(Point beta) const {
    return slot[beta] < 0 ? nullptr : &reps[static_cast<std::size_t>(slot[beta])];
  }
};

// Strips h through levels [from, end). Returns the residue and the level at
// which sifting stopped (levels.size() when it passed every level).
std::pair<Permutation, std::size_t> sift(const std::vector<Level>& levels, Permutation h,
                                         std::size_t from) {
  for (std::size_t i = from; i < levels.size(); ++i) {
    const Permutation* u = levels[i].transversal(h(levels[i].base_point));
    if (u == nullptr) return {std::move(h), i};
    h = h * u->inverse();
  }
  return {std::move(h), levels.size()};
}

bool fixes_all(const Permutation& g, const std::vector<Level>& levels, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (g(levels[i].base_point) != levels[i].base_point) return false;
  return true;
}

// Deterministic Schreier-Sims: base points are the first points moved, in
// generator order; Schreier generators are checked level by level from the
// bottom, restarting at the level where a new strong generator was added.
std::vector<Level> schreier_sims(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<Level> levels;
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    if (fixes_all(g, levels, levels.size())) {
      Level level;
      level.base_point = g.first_moved_point();
      levels.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& g : gens)
      if (!g.is_identity() && fixes_all(g, levels, i)) levels[i].gens.push_back(g);
    levels[i].rebuild(degree);
  }

  long i = static_cast<long>(levels.size()) - 1;
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels[li].orbit.size() && !restarted; ++oi) {
      const Point beta = levels[li].orbit[oi];
      const Permutation u_beta = *levels[li].transversal(beta);
      const std::vector<Permutation> level_gens = levels[li].gens;
      for (const auto& s : level_gens) {
        const Point gamma = s(beta);
        Permutation y = u_beta * s * levels[li].transversal(gamma)->inverse();
        auto [h, j] = sift(levels, std::move(y), li + 1);
        if (h.is_identity()) continue;
        if (j == levels.size()) {
          Level level;
          level.base_point = h.first_moved_point();
          levels.push_back(std::move(level));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].gens.push_back(h);
          levels[l].rebuild(degree);
        }
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return levels;
}

}  // namespace

struct PermGroup::Core {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::vector<Level> levels;
  std::vector<Point> base;
  std::vector<Permutation> strong_generators;
  Order order = 1;
};

struct PermGroup::Cache {
  std::once_flag elements_once;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, Index, PermutationHash> lookup;
  std::vector<Index> generator_indices;

  std::once_flag table_once;
  std::vector<Index> mul;  // row-major n x n
  std::vector<Index> inv;
  std::vector<std::size_t> orders;

  std::once_flag classes_once;
  std::vector<std::size_t> class_of;
  std::vector<Index> class_reps;
  std::vector<std::size_t> class_sizes;
};

PermGroup::PermGroup() : PermGroup(trivial(1)) {}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> gens) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw DomainError("generator " + g.to_cycle_string() + " has degree " +
                        std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  auto core = std::make_shared<Core>();
  core->degree = degree;
  core->levels = schreier_sims(degree, gens);
  core->generators = std::move(gens);
  for (const auto& level : core->levels) {
    core->base.push_back(level.base_point);
    core->order *= level.orbit.size();
    for (const auto& g : level.gens)
      if (std::find(core->strong_generators.begin(), core->strong_generators.end(), g) ==
          core->strong_generators.end())
        core->strong_generators.push_back(g);
  }

  return PermGroup(std::move(core), std::make_shared<Cache>());
}

PermGroup PermGroup::trivial(std::size_t degree) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  auto core = std::make_shared<Core>();
  core->degree = degree;
  return PermGroup(std::move(core), std::make_shared<Cache>());
}

std::size_t PermGroup::degree() const { return core_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return core_->generators; }
const std::vector<Point>& PermGroup::base() const { return core_->base; }
const std::vector<Permutation>& PermGroup::strong_generators() const {
  return core_->strong_generators;
}
const Order& PermGroup::order() const { return core_->order; }

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : core_->levels) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree()) return false;
  auto [h, j] = sift(core_->levels, g, 0);
  return j == core_->levels.size() && h.is_identity();
}

std::size_t PermGroup::size() const {
  const std::size_t bound = desk_scale_bound();
  if (core_->order > bound)
    throw SizeBoundError("group order " + core_->order.str() + " exceeds the desk-scale bound " +
                         std::to_string(bound) + " (set BLOCKFUNCTOR_MAX_ORDER to raise it)");
  return static_cast<std::size_t>(core_->order);
}

const PermGroup::Cache& PermGroup::enumerated() const {
  const std::size_t n = size();
  std::call_once(cache_->elements_once, [&] {
    auto& c = *cache_;
    std::unordered_map<Permutation, Index, PermutationHash> seen;
    std::vector<Permutation> found{Permutation::identity(degree())};
    seen.emplace(found.front(), 0);
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto& g : core_->generators) {
        Permutation next = found[i] * g;
        if (seen.emplace(next, static_cast<Index>(found.size())).second)
          found.push_back(std::move(next));
      }
    }
    if (found.size() != n)
      throw InternalError("element closure found " + std::to_string(found.size()) +
                          " elements, Schreier-Sims order is " + std::to_string(n));
    std::sort(found.begin(), found.end());
    c.elements = std::move(found);
    c.lookup.reserve(n);
    for (Index i = 0; i < c.elements.size(); ++i) c.lookup.emplace(c.elements[i], i);
    for (const auto& g : core_->generators) c.generator_indices.push_back(c.lookup.at(g));
  });
  return *cache_;
}

const PermGroup::Cache& PermGroup::tabulated() const {
  const Cache& e = enumerated();
  std::call_once(cache_->table_once, [&] {
    auto& c = *cache_;
    const std::size_t n = e.elements.size();
    const auto& gens = e.generator_indices;

    // Right multiplication by generators, plus a spanning tree of words.
    std::vector<Index> right(n * gens.size());
    for (Index a = 0; a < n; ++a)
      for (std::size_t k = 0; k < gens.size(); ++k)
        right[a * gens.size() + k] = e.lookup.at(e.elements[a] * e.elements[gens[k]]);
    std::vector<Index> bfs{0};
    std::vector<Index> parent(n, 0);
    std::vector<std::size_t> via(n, 0);
    std::vector<bool> reached(n, false);
    reached[0] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Index b = right[bfs[i] * gens.size() + k];
        if (reached[b]) continue;
        reached[b] = true;
        parent[b] = bfs[i];
        via[b] = k;
        bfs.push_back(b);
      }

    c.mul.assign(n * n, 0);
    for (Index x = 0; x < n; ++x) {
      Index* row = &c.mul[x * n];
      row[0] = x;
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        Index b = bfs[i];
        row[b] = right[row[parent[b]] * gens.size() + via[b]];
      }
    }
    c.inv.assign(n, 0);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (c.mul[x * n + y] == 0) {
          c.inv[x] = y;
          break;
        }
    c.orders.resize(n);
    for (Index x = 0; x < n; ++x) c.orders[x] = e.elements[x].order();
  });
  return *cache_;
}

const PermGroup::Cache& PermGroup::classified() const {
  const Cache& t = tabulated();
  std::call_once(cache_->classes_once, [&] {
    auto& c = *cache_;
    const std::size_t n = t.elements.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    c.class_of.assign(n, kUnset);
    for (Index x = 0; x < n; ++x) {
      if (c.class_of[x] != kUnset) continue;
      const std::size_t id = c.class_reps.size();
      c.class_reps.push_back(x);
      std::vector<Index> queue{x};
      c.class_of[x] = id;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (Index g : t.generator_indices) {
          Index y = t.mul[t.mul[g * n + queue[i]] * n + t.inv[g]];
          if (c.class_of[y] != kUnset) continue;
          c.class_of[y] = id;
          queue.push_back(y);
        }
      c.class_sizes.push_back(queue.size());
    }
  });
  return *cache_;
}

const std::vector<Permutation>& PermGroup::elements() const { return enumerated().elements; }

std::optional<Index> PermGroup::find(const Permutation& g) const {
  const auto& lookup = enumerated().lookup;
  auto it = lookup.find(g);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

Index PermGroup::index_of(const Permutation& g) const {
  if (auto i = find(g)) return *i;
  throw DomainError("permutation " + g.to_cycle_string() + " is not an element of the group");
}

Index PermGroup::multiply(Index a, Index b) const {
  const Cache& t = tabulated();
  return t.mul[a * t.elements.size() + b];
}

Index PermGroup::inverse(Index a) const { return tabulated().inv[a]; }

Index PermGroup::conjugate(Index g, Index x) const {
  return multiply(multiply(g, x), inverse(g));
}

std::size_t PermGroup::element_order(Index a) const { return tabulated().orders[a]; }

Index PermGroup::power(Index a, long long e) const {
  const std::size_t ord = element_order(a);
  long long r = e % static_cast<long long>(ord);
  if (r < 0) r += static_cast<long long>(ord);
  Index result = identity_index();
  for (long long i = 0; i < r; ++i) result = multiply(result, a);
  return result;
}

const std::vector<Index>& PermGroup::generator_indices() const {
  return enumerated().generator_indices;
}

const std::vector<std::size_t>& PermGroup::class_of() const { return classified().class_of; }
const std::vector<Index>& PermGroup::class_representatives() const {
  return classified().class_reps;
}
const std::vector<std::size_t>& PermGroup::class_sizes() const {
  return classified().class_sizes;
}

ElementSet indices_in(const PermGroup& parent, const PermGroup& sub) {
  if (sub.degree() != parent.degree())
    throw DomainError("subgroup degree " + std::to_string(sub.degree()) +
                      " differs from parent degree " + std::to_string(parent.degree()));
  for (const auto& g : sub.generators())
    if (!parent.contains(g))
      throw DomainError("generator " + g.to_cycle_string() + " is not in the parent group");
  ElementSet out;
  out.reserve(sub.size());
  for (const auto& g : sub.elements()) out.push_back(parent.index_of(g));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet closure(const PermGroup& parent, std::span<const Index> gens) {
  const std::size_t n = parent.size();
  std::vector<bool> in(n, false);
  ElementSet out{PermGroup::identity_index()};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Index g : gens) {
      Index y = parent.multiply(out[i], g);
      if (in[y]) continue;
      in[y] = true;
      out.push_back(y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> greedy_generators(const PermGroup& parent, std::span<const Index> elements) {
  std::vector<Index> order(elements.begin(), elements.end());
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    const auto oa = parent.element_order(a), ob = parent.element_order(b);
    return oa != ob ? oa > ob : a < b;
  });
  std::vector<bool> wanted(parent.size(), false);
  for (Index x : elements) wanted[x] = true;

  std::vector<Index> gens;
  ElementSet current{PermGroup::identity_index()};
  for (Index x : order) {
    if (current.size() == elements.size()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = closure(parent, gens);
    for (Index y : current)
      if (!wanted[y]) throw InternalError("element set is not closed under multiplication");
  }
  if (current.size() != elements.size())
    throw InternalError("element set is not a subgroup");
  return gens;
}

PermGroup subgroup_from_indices(const PermGroup& parent, std::span<const Index> elements) {
  std::vector<Permutation> gens;
  for (Index g : greedy_generators(parent, elements)) gens.push_back(parent.element(g));
  return PermGroup::from_generators(parent.degree(), std::move(gens));
}

}  // namespace blockfunctor
