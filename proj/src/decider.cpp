#include "gaplab/decider.hpp"

#include "gaplab/errors.hpp"
#include "gaplab/transforms.hpp"
#include "symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace gaplab {

namespace {

constexpr long long kUnknown = -1;
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

void require_searchable(const Graph& g) {
  if (g.vertex_count() < 2) {
    throw UnsupportedInput("labelability search needs at least 2 vertices");
  }
  if (!is_connected(g)) {
    throw UnsupportedInput("labelability search needs a connected graph");
  }
}

class AssignmentCounter {
public:
  explicit AssignmentCounter(std::optional<unsigned long long> budget) : budget_(budget) {}

  void tick() {
    const auto now = ++count_;
    if (budget_ && now > *budget_) {
      throw SearchBudgetExceeded(*budget_);
    }
  }

  unsigned long long count() const { return count_.load(); }

private:
  std::optional<unsigned long long> budget_;
  std::atomic<unsigned long long> count_{0};
};

// Places vertices on ranks from both ends inwards: n-1, 0, n-2, 1, ...
// Once a vertex has a neighbour among the top ranks and one among the bottom
// ranks, its extreme neighbours are final and so is its colour.
class MarkSearch {
public:
  MarkSearch(const Graph& g, const std::vector<long long>& rank_labels, AssignmentCounter& counter,
             const std::atomic<std::size_t>& best_root)
      : g_(g), n_(g.vertex_count()), rank_labels_(rank_labels), counter_(counter),
        best_root_(best_root), rank_of_(n_, kUnassigned), colour_(n_, kUnknown) {
    for (std::size_t i = 0; i < n_; ++i) {
      slots_.push_back(i % 2 == 0 ? n_ - 1 - i / 2 : i / 2);
    }
  }

  // Search with `top` on the largest mark. `root_index` orders roots for
  // cancellation: a search stops once a lower-indexed root has succeeded.
  bool run(Vertex top, std::size_t root_index) {
    root_index_ = root_index;
    return place(0, top);
  }

  Labelling witness() const {
    std::vector<BigInt> labels(n_);
    for (Vertex v = 0; v < n_; ++v) {
      labels[v] = rank_labels_[rank_of_[v]];
    }
    return Labelling(std::move(labels));
  }

private:
  bool cancelled() const { return best_root_.load(std::memory_order_relaxed) < root_index_; }

  long long colour_if_determined(Vertex w, std::size_t depth) const {
    const auto nbrs = g_.neighbours(w);
    if (nbrs.size() == 1) {
      const auto r = rank_of_[nbrs.front()];
      return r == kUnassigned ? kUnknown : rank_labels_[r];
    }
    const auto top_count = (depth + 1) / 2;
    const auto bottom_count = depth / 2;
    std::size_t assigned = 0;
    std::size_t lo = kUnassigned;
    std::size_t hi = 0;
    bool has_top = false;
    bool has_bottom = false;
    for (auto u : nbrs) {
      const auto r = rank_of_[u];
      if (r == kUnassigned) {
        continue;
      }
      ++assigned;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      has_top = has_top || r >= n_ - top_count;
      has_bottom = has_bottom || r < bottom_count;
    }
    if (assigned == nbrs.size() || (has_top && has_bottom)) {
      return rank_labels_[hi] - rank_labels_[lo];
    }
    return kUnknown;
  }

  bool place(std::size_t depth, Vertex x) {
    counter_.tick();
    const auto rank = slots_[depth];
    rank_of_[x] = rank;
    const auto mark = fixed_.size();
    bool ok = true;
    for (auto w : g_.neighbours(x)) {
      if (colour_[w] != kUnknown) {
        continue;
      }
      const auto c = colour_if_determined(w, depth + 1);
      if (c == kUnknown) {
        continue;
      }
      colour_[w] = c;
      fixed_.push_back(w);
      for (auto y : g_.neighbours(w)) {
        if (colour_[y] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        break;
      }
    }
    if (ok) {
      if (depth + 1 == n_) {
        return true;
      }
      for (Vertex next = 0; next < n_ && !cancelled(); ++next) {
        if (rank_of_[next] == kUnassigned && place(depth + 1, next)) {
          return true;
        }
      }
    }
    while (fixed_.size() > mark) {
      colour_[fixed_.back()] = kUnknown;
      fixed_.pop_back();
    }
    rank_of_[x] = kUnassigned;
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  const std::vector<long long>& rank_labels_;
  AssignmentCounter& counter_;
  const std::atomic<std::size_t>& best_root_;
  std::size_t root_index_ = 0;
  std::vector<std::size_t> slots_;
  std::vector<std::size_t> rank_of_;
  std::vector<long long> colour_;
  std::vector<Vertex> fixed_;
};

} // namespace

DecisionResult decide(const Graph& g, const DecideOptions& options) {
  require_searchable(g);
  const auto n = g.vertex_count();
  const auto p = next_prime(n).p;
  const auto ruler = erdos_turan_ruler(p);
  std::vector<long long> rank_labels(n);
  for (std::size_t r = 0; r < n; ++r) {
    rank_labels[r] = static_cast<long long>(2 * p * p + ruler.marks()[r]);
  }

  std::vector<Vertex> roots;
  if (options.use_symmetry) {
    for (const auto& orbit : detail::automorphism_orbits(g)) {
      roots.push_back(orbit.front());
    }
  } else {
    roots.resize(n);
    std::iota(roots.begin(), roots.end(), Vertex{0});
  }

  AssignmentCounter counter(options.budget);
  std::atomic<std::size_t> best_root{kUnassigned};
  std::optional<Labelling> witness;
  std::mutex witness_mutex;
  std::exception_ptr failure;
  std::atomic<std::size_t> next_root{0};

  auto worker = [&] {
    MarkSearch search(g, rank_labels, counter, best_root);
    try {
      for (auto i = next_root++; i < roots.size(); i = next_root++) {
        if (best_root.load() < i) {
          break;
        }
        if (search.run(roots[i], i)) {
          std::lock_guard lock(witness_mutex);
          if (i < best_root.load()) {
            best_root = i;
            witness = search.witness();
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard lock(witness_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
  };

  const auto workers = std::clamp<std::size_t>(options.workers, 1, roots.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  DecisionResult result;
  result.assignments_tried = counter.count();
  result.labelable = witness.has_value();
  result.witness = std::move(witness);
  return result;
}

namespace {

class BoundedLabelSearch {
public:
  BoundedLabelSearch(const Graph& g, std::size_t k, AssignmentCounter& counter)
      : g_(g), k_(k), counter_(counter), label_(g.vertex_count(), 0),
        colour_(g.vertex_count(), kUnknown), labelled_nbrs_(g.vertex_count(), 0) {
    // Breadth-first order so neighbourhoods complete early.
    const auto n = g.vertex_count();
    std::vector<bool> queued(n, false);
    order_.push_back(0);
    queued[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (auto w : g.neighbours(order_[head])) {
        if (!queued[w]) {
          queued[w] = true;
          order_.push_back(w);
        }
      }
    }
  }

  bool run() { return extend(0); }

private:
  long long colour_of(Vertex w) const {
    const auto nbrs = g_.neighbours(w);
    if (nbrs.size() == 1) {
      return label_[nbrs.front()];
    }
    long long lo = std::numeric_limits<long long>::max();
    long long hi = 0;
    for (auto u : nbrs) {
      lo = std::min(lo, label_[u]);
      hi = std::max(hi, label_[u]);
    }
    return hi - lo;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    const auto x = order_[depth];
    for (std::size_t value = 1; value <= k_; ++value) {
      counter_.tick();
      label_[x] = static_cast<long long>(value);
      std::vector<Vertex> fixed;
      bool ok = true;
      for (auto w : g_.neighbours(x)) {
        if (++labelled_nbrs_[w] != g_.degree(w)) {
          continue;
        }
        colour_[w] = colour_of(w);
        fixed.push_back(w);
        for (auto y : g_.neighbours(w)) {
          ok = ok && colour_[y] != colour_[w];
        }
      }
      if (ok && extend(depth + 1)) {
        return true;
      }
      for (auto w : g_.neighbours(x)) {
        --labelled_nbrs_[w];
      }
      for (auto w : fixed) {
        colour_[w] = kUnknown;
      }
    }
    label_[x] = 0;
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  AssignmentCounter& counter_;
  std::vector<Vertex> order_;
  std::vector<long long> label_;
  std::vector<long long> colour_;
  std::vector<std::size_t> labelled_nbrs_;
};

} // namespace

std::optional<std::size_t> vertex_gap_number(const Graph& g, std::size_t k_max,
                                             std::optional<unsigned long long> budget) {
  require_searchable(g);
  if (k_max < 1) {
    throw InvalidArgument("k_max must be >= 1");
  }
  AssignmentCounter counter(budget);
  for (std::size_t k = 1; k <= k_max; ++k) {
    BoundedLabelSearch search(g, k, counter);
    if (search.run()) {
      return k;
    }
  }
  return std::nullopt;
}

} // namespace gaplab
