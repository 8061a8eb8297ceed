#include <deque>
#include <vector>

#include "polyadic/error.hpp"
#include "polyadic/post_cover.hpp"

namespace polyadic {

namespace {

constexpr int undefined = -1;

// Felsch-style enumeration: cosets are defined in row-major order of the
// first empty table entry, and each new edge is pushed through every
// relator conjugate that starts with it. Coincidences are resolved with a
// union-find and a queue of dead cosets.
class CosetTable {
 public:
  CosetTable(const GroupPresentation& pres, std::size_t cap)
      : cols_(2 * pres.generators.size()), cap_(cap) {
    for (const auto& rel : pres.relators) {
      std::vector<int> letters;
      for (const auto& r : rel.runs()) {
        int col = static_cast<int>(2 * r.gen) + (r.exp < 0 ? 1 : 0);
        for (std::int64_t k = 0; k < (r.exp < 0 ? -r.exp : r.exp); ++k) letters.push_back(col);
      }
      // Cyclically reduce.
      while (letters.size() >= 2 && letters.front() == (letters.back() ^ 1)) {
        letters.erase(letters.begin());
        letters.pop_back();
      }
      if (letters.empty()) continue;
      std::vector<int> inverse(letters.rbegin(), letters.rend());
      for (int& l : inverse) l ^= 1;
      for (const auto* word : {&letters, &inverse})
        for (std::size_t s = 0; s < word->size(); ++s) {
          std::vector<int> conj(word->begin() + s, word->end());
          conj.insert(conj.end(), word->begin(), word->begin() + s);
          relators_.push_back(conj);
        }
    }
    by_first_.resize(cols_);
    for (std::size_t i = 0; i < relators_.size(); ++i) by_first_[relators_[i].front()].push_back(i);
    new_coset();
  }

  void run() {
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      for (std::size_t col = 0; col < cols_; ++col) {
        if (!live(c)) break;
        if (entry(c, col) != undefined) continue;
        int d = new_coset();
        set_edge(static_cast<int>(c), static_cast<int>(col), d);
        process_deductions();
      }
    }
    // Final consistency sweep; Felsch deductions should already have
    // closed every relator cycle, this only guards against gaps.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < rows_.size(); ++c)
        for (std::size_t r = 0; r < relators_.size() && live(c); ++r)
          if (scan(static_cast<int>(c), relators_[r])) changed = true;
      process_deductions();
    }
  }

  // Live cosets renumbered in breadth-first order from coset 0, with the
  // BFS tree (parent coset and column) for representative words.
  struct Standard {
    std::vector<std::vector<int>> action;  // [coset][col]
    std::vector<int> parent, parent_col;
  };

  Standard standardize() const {
    std::vector<int> number(rows_.size(), undefined);
    std::vector<int> order{0};
    number[0] = 0;
    Standard s;
    s.parent.push_back(undefined);
    s.parent_col.push_back(undefined);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t col = 0; col < cols_; ++col) {
        int d = entry(order[i], col);
        if (number[d] == undefined) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
          s.parent.push_back(static_cast<int>(i));
          s.parent_col.push_back(static_cast<int>(col));
        }
      }
    s.action.assign(order.size(), std::vector<int>(cols_));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t col = 0; col < cols_; ++col) s.action[i][col] = number[entry(order[i], col)];
    return s;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  int entry(std::size_t c, std::size_t col) const { return rows_[c][col]; }

  int new_coset() {
    if (rows_.size() >= cap_)
      throw Error(ErrorCode::CapExceeded,
                  "coset enumeration did not close within " + std::to_string(cap_) + " cosets",
                  {std::int64_t(cap_)});
    rows_.emplace_back(cols_, undefined);
    parent_.push_back(static_cast<int>(rows_.size() - 1));
    return static_cast<int>(rows_.size() - 1);
  }

  void set_edge(int c, int col, int d) {
    rows_[c][col] = d;
    rows_[d][col ^ 1] = c;
    deductions_.push_back({c, col});
  }

  int find(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < cols_; ++col) {
        int f = rows_[e][col];
        if (f == undefined) continue;
        if (rows_[f][col ^ 1] == e) rows_[f][col ^ 1] = undefined;
        int e1 = find(e), f1 = find(f);
        if (rows_[e1][col] != undefined) {
          merge(f1, rows_[e1][col], queue);
        } else if (rows_[f1][col ^ 1] != undefined) {
          merge(e1, rows_[f1][col ^ 1], queue);
        } else {
          set_edge(e1, static_cast<int>(col), f1);
        }
      }
    }
  }

  // Scans relator r at coset c. Deduces the single missing edge or
  // processes a coincidence. Returns true if the table changed.
  bool scan(int c, const std::vector<int>& r) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(r.size()) - 1;
    while (i <= j && rows_[f][r[i]] != undefined) f = rows_[f][r[i++]];
    if (i > j) {
      if (f != c) {
        coincidence(f, c);
        return true;
      }
      return false;
    }
    while (j >= i && rows_[b][r[j] ^ 1] != undefined) b = rows_[b][r[j--] ^ 1];
    if (j < i) {
      coincidence(f, b);
      return true;
    }
    if (i == j) {
      set_edge(f, r[i], b);
      return true;
    }
    return false;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (std::size_t r : by_first_[col]) {
        if (!live(c)) break;
        scan(c, relators_[r]);
      }
      int d = rows_[c][col];
      if (d == undefined || !live(d)) continue;
      for (std::size_t r : by_first_[col ^ 1]) {
        if (!live(d)) break;
        scan(d, relators_[r]);
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

FiniteGroup coset_enumerate(const GroupPresentation& pres, std::size_t cap, const Limits& limits) {
  if (cap < 1) throw Error(ErrorCode::InvalidInput, "coset cap must be at least 1");
  if (pres.generators.empty())
    throw Error(ErrorCode::EmptyGeneratorSet, "a presentation needs at least one generator");
  for (const auto& r : pres.relators)
    for (const auto& run : r.runs())
      if (run.gen >= pres.generators.size())
        throw Error(ErrorCode::IndexOutOfRange, "relator uses an undeclared generator");

  CosetTable table(pres, cap);
  table.run();
  auto s = table.standardize();
  const std::size_t order = s.action.size();
  if (order > limits.max_derived_order)
    throw Error(ErrorCode::SizeCapExceeded, "enumerated group of order " + std::to_string(order) +
                                                " exceeds the derived-order cap");

  Alphabet alphabet(pres.generators);
  std::vector<FreeWord> words(order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (i > 0) {
      int col = s.parent_col[i];
      words[i] = words[s.parent[i]] * FreeWord::generator(GenId(col / 2), col % 2 ? -1 : 1);
    }
    names[i] = to_string(words[i], alphabet);
  }

  // mul(c, d) = c acted on by the word of d, built along the BFS tree.
  std::vector<Elem> mul(order * order);
  for (std::size_t c = 0; c < order; ++c) {
    mul[c * order] = static_cast<Elem>(c);
    for (std::size_t d = 1; d < order; ++d)
      mul[c * order + d] =
          static_cast<Elem>(s.action[mul[c * order + s.parent[d]]][s.parent_col[d]]);
  }
  return validate_group(std::move(names), std::move(mul), "");
}

}  // namespace polyadic
