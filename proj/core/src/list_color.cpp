#include "colorcount/list_color.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "json.hpp"

namespace colorcount {

bool lex_less(const ListAssignment& a, const ListAssignment& b) { return a.lists < b.lists; }

ListAssignment same_lists_assignment(int n, int k) {
  ListAssignment a;
  a.fold = k;
  std::vector<int> list(k);
  std::iota(list.begin(), list.end(), 1);
  a.lists.assign(n, list);
  return a;
}

std::string assignment_to_json(const ListAssignment& a) {
  nlohmann::json j;
  j["fold"] = a.fold;
  nlohmann::json lists = nlohmann::json::object();
  for (std::size_t v = 0; v < a.lists.size(); ++v) lists[std::to_string(v)] = a.lists[v];
  j["lists"] = lists;
  return j.dump();
}

namespace {

struct StepCounter {
  long long used = 0;
  long long limit = 0;
  std::string refusal;

  void charge() {
    if (++used > limit) throw BudgetError(refusal + " (consumed > " + std::to_string(limit) + " steps)");
  }
};

// Shared backtracking core. Counts completions; an optional cap stops the
// walk once the running total exceeds it (the total then reads cap+1), and an
// optional step counter converts long runs into budget refusals.
class ListCounter {
 public:
  ListCounter(const Graph& g, const ListAssignment& a) : g_(g) {
    const int n = g.vertex_count();
    if (static_cast<int>(a.lists.size()) != n)
      throw InputError("assignment covers " + std::to_string(a.lists.size()) +
                       " vertices, graph has " + std::to_string(n));
    lists_ = a.lists;
    for (auto& list : lists_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    order_.reserve(n);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 0)
        free_factor_ *= static_cast<unsigned long>(lists_[v].size());
      else
        order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return g.degree(x) > g.degree(y); });
    position_.assign(n, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<int>(i);
    earlier_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (int w : g.neighbors(order_[i]))
        if (position_[w] >= 0 && position_[w] < static_cast<int>(i))
          earlier_[i].push_back(position_[w]);
    chosen_.assign(order_.size(), 0);
  }

  ColorCount count(const ColorCount* cap, StepCounter* steps) {
    if (free_factor_ == 0) return 0;  // some isolated vertex had an empty list
    total_ = 0;
    cap_ = cap;
    steps_ = steps;
    walk(0);
    return total_ * free_factor_;
  }

 private:
  bool walk(std::size_t pos) {
    if (steps_) steps_->charge();
    if (pos == order_.size()) {
      ++total_;
      return cap_ == nullptr || total_ <= *cap_;
    }
    for (int color : lists_[order_[pos]]) {
      bool ok = true;
      for (int earlier : earlier_[pos]) {
        if (chosen_[earlier] == color) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen_[pos] = color;
      if (!walk(pos + 1)) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::vector<int>> lists_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> earlier_;
  std::vector<int> chosen_;
  ColorCount free_factor_ = 1;
  ColorCount total_ = 0;
  const ColorCount* cap_ = nullptr;
  StepCounter* steps_ = nullptr;
};

ColorCount count_colorings_impl(const Graph& g, const ListAssignment& a, const ColorCount* cap,
                                StepCounter* steps) {
  ListCounter counter(g, a);
  return counter.count(cap, steps);
}

// Class enumeration over membership types, largest popcount first so the
// trailing singleton types absorb whatever demand remains (no dead branches).
class ClassEnumerator {
 public:
  ClassEnumerator(const Graph& g, int k, long long budget) : n_(g.vertex_count()), k_(k) {
    if (k < 1) throw InputError("k-assignment enumeration needs k >= 1");
    steps_.limit = budget;
    steps_.refusal = "k-assignment enumeration refused: class space bounded by C(nk,k)^n = " +
                     naive_bound_text();
    if (n_ > 20)
      throw BudgetError(steps_.refusal + "; n = " + std::to_string(n_) +
                        " exceeds any representable budget");
    types_.reserve((1ULL << n_) - 1);
    for (std::uint64_t t = (1ULL << n_) - 1; t >= 1; --t) types_.push_back(t);
    std::stable_sort(types_.begin(), types_.end(), [](std::uint64_t a, std::uint64_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    remaining_.assign(n_, k);
  }

  void run(const std::function<bool(const ListAssignment&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    descend(0);
  }

  long long steps_used() const { return steps_.used; }

 private:
  std::string naive_bound_text() const {
    return to_decimal(ipow(binomial(static_cast<unsigned long>(n_) * k_, k_),
                           static_cast<unsigned long>(n_)));
  }

  void apply(std::uint64_t type, int mult) {
    chosen_.push_back({type, mult});
    for (std::uint64_t bits = type; bits; bits &= bits - 1)
      remaining_[std::countr_zero(bits)] -= mult;
  }

  void undo_last() {
    const auto [type, mult] = chosen_.back();
    chosen_.pop_back();
    for (std::uint64_t bits = type; bits; bits &= bits - 1)
      remaining_[std::countr_zero(bits)] += mult;
  }

  // Zero multiplicities advance iteratively; only positive choices recurse,
  // so the stack depth is bounded by the number of chosen types (<= n*k).
  void descend(std::size_t type_index) {
    if (stopped_) return;
    const std::size_t applied_mark = chosen_.size();
    std::size_t idx = type_index;
    while (idx < types_.size() && !stopped_) {
      steps_.charge();
      const std::uint64_t t = types_[idx];
      int max_mult = k_;
      for (std::uint64_t bits = t; bits; bits &= bits - 1)
        max_mult = std::min(max_mult, remaining_[std::countr_zero(bits)]);
      if (std::popcount(t) == 1) {
        // trailing singletons absorb whatever demand remains
        if (max_mult > 0) apply(t, max_mult);
        ++idx;
        continue;
      }
      for (int m = 1; m <= max_mult && !stopped_; ++m) {
        apply(t, m);
        descend(idx + 1);
        undo_last();
      }
      ++idx;  // the m = 0 branch continues in place
    }
    if (!stopped_ && idx == types_.size()) emit();
    while (chosen_.size() > applied_mark) undo_last();
  }

  void emit() {
    ListAssignment a;
    a.fold = k_;
    a.lists.assign(n_, {});
    auto sorted = chosen_;
    std::sort(sorted.begin(), sorted.end());
    int color = 1;
    for (const auto& [type, mult] : sorted) {
      for (int copy = 0; copy < mult; ++copy, ++color)
        for (std::uint64_t bits = type; bits; bits &= bits - 1)
          a.lists[std::countr_zero(bits)].push_back(color);
    }
    if (!(*visit_)(a)) stopped_ = true;
  }

  int n_;
  int k_;
  std::vector<std::uint64_t> types_;
  std::vector<int> remaining_;
  std::vector<std::pair<std::uint64_t, int>> chosen_;
  StepCounter steps_;
  const std::function<bool(const ListAssignment&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

ColorCount count_L_colorings(const Graph& g, const ListAssignment& a) {
  return count_colorings_impl(g, a, nullptr, nullptr);
}

void enumerate_k_assignments(const Graph& g, int k, long long budget,
                             const std::function<bool(const ListAssignment&)>& visit) {
  ClassEnumerator enumerator(g, k, budget);
  enumerator.run(visit);
}

ListColorResult list_color_function(const Graph& g, int k, long long budget) {
  StepCounter steps;
  steps.limit = budget;
  steps.refusal = "list color function refused on " + std::to_string(g.vertex_count()) +
                  " vertices at k = " + std::to_string(k);

  ListColorResult best;
  bool have_best = false;
  enumerate_k_assignments(g, k, budget, [&](const ListAssignment& a) {
    const ColorCount* cap = have_best ? &best.value : nullptr;
    ColorCount count = count_colorings_impl(g, a, cap, &steps);
    if (!have_best || count < best.value ||
        (count == best.value && lex_less(a, best.witness))) {
      best.value = std::move(count);
      best.witness = a;
      have_best = true;
    }
    return true;
  });
  return best;
}

}  // namespace colorcount
