#include "pgl/enumerate.hpp"

#include <deque>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

// Columns come in (generator, inverse) pairs: column 2g acts as generator g,
// column 2g+1 as its inverse.
constexpr int inv_col(int x) { return x ^ 1; }

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, const EnumerateOptions& opt)
      : ncols_(2 * static_cast<int>(pres.generator_names.size())), opt_(opt) {
    for (const Word& w : pres.relators) {
      std::vector<int> cols;
      for (const Factor& f : w.factors()) {
        int col = f.exp > 0 ? 2 * f.gen : 2 * f.gen + 1;
        for (int i = 0; i < std::abs(f.exp); ++i) cols.push_back(col);
      }
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
  }

  // Runs the enumeration and leaves a complete, relator-closed table.
  void run() {
    new_coset();
    int stalled = 0;
    for (;;) {
      auto before = std::pair(live_, table_size());
      for (int a = 0; a < table_size(); ++a) {
        if (!live(a)) continue;
        if (live_ > opt_.max_cosets) {
          lookahead();
          if (live_ > opt_.max_cosets)
            throw LimitError(
                "coset limit exceeded (" + std::to_string(live_) +
                " live cosets); the group may be infinite or the limit too small");
          if (!live(a)) continue;
        }
        for (const auto& rel : relators_) {
          scan_and_fill(a, rel);
          if (!live(a)) break;
        }
        if (!live(a)) continue;
        for (int x = 0; x < ncols_; ++x)
          if (tab_[a][x] < 0) define(a, x);
      }
      normalize();
      if (complete_and_closed()) break;
      if (before == std::pair(live_, table_size()) && ++stalled > 4)
        throw InternalError("coset table failed to close");
    }
  }

  int live_count() const { return live_; }

  // Final table restricted to live cosets, renumbered in BFS order from the
  // coset of the identity (which stays at index 0).
  struct Result {
    int order = 0;
    std::vector<std::vector<int>> tab;  // row per element, ncols entries
    std::vector<int> bfs_parent;        // defining edge, -1 for identity
    std::vector<int> bfs_letter;        // column of the defining edge
  };

  Result compact() {
    std::vector<int> index(table_size(), -1);
    Result res;
    std::vector<int> order_of;  // new index -> old coset
    index[find(0)] = 0;
    order_of.push_back(find(0));
    res.bfs_parent.push_back(-1);
    res.bfs_letter.push_back(-1);
    for (size_t i = 0; i < order_of.size(); ++i) {
      int c = order_of[i];
      for (int x = 0; x < ncols_; ++x) {
        int d = tab_[c][x];
        if (d < 0) throw InternalError("hole in finished coset table");
        d = find(d);
        if (index[d] < 0) {
          index[d] = static_cast<int>(order_of.size());
          order_of.push_back(d);
          res.bfs_parent.push_back(static_cast<int>(i));
          res.bfs_letter.push_back(x);
        }
      }
    }
    if (static_cast<int>(order_of.size()) != live_)
      throw InternalError("coset table is not transitive");

    res.order = live_;
    res.tab.assign(live_, std::vector<int>(ncols_, -1));
    for (int i = 0; i < live_; ++i)
      for (int x = 0; x < ncols_; ++x)
        res.tab[i][x] = index[find(tab_[order_of[i]][x])];

    // Mirror consistency and relator closure on the compacted table.
    for (int i = 0; i < live_; ++i)
      for (int x = 0; x < ncols_; ++x)
        if (res.tab[res.tab[i][x]][inv_col(x)] != i)
          throw InternalError("inconsistent internal tables (mirror violation)");
    for (int i = 0; i < live_; ++i)
      for (const auto& rel : relators_) {
        int c = i;
        for (int x : rel) c = res.tab[c][x];
        if (c != i)
          throw InternalError("inconsistent internal tables (relator open)");
      }
    return res;
  }

 private:
  int table_size() const { return static_cast<int>(tab_.size()); }
  bool live(int c) { return find(c) == c; }

  int find(int c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  int new_coset() {
    tab_.emplace_back(ncols_, -1);
    rep_.push_back(table_size() - 1);
    ++live_;
    if (live_ > opt_.max_cosets + kSlack)
      throw LimitError("coset limit exceeded; the group may be infinite or the limit too small");
    return table_size() - 1;
  }

  void define(int a, int x) {
    int b = new_coset();
    tab_[a][x] = b;
    tab_[b][inv_col(x)] = a;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --live_;
    deadq_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!deadq_.empty()) {
      int g = deadq_.front();
      deadq_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int d = tab_[g][x];
        if (d < 0) continue;
        if (tab_[d][inv_col(x)] == g) tab_[d][inv_col(x)] = -1;
        int mu = find(g), nu = find(d);
        if (tab_[mu][x] >= 0) {
          merge(nu, tab_[mu][x]);
        } else if (tab_[nu][inv_col(x)] >= 0) {
          merge(mu, tab_[nu][inv_col(x)]);
        } else {
          tab_[mu][x] = nu;
          tab_[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  void scan_and_fill(int a, const std::vector<int>& w) {
    int f = a, i = 0;
    int b = a, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && tab_[f][w[i]] >= 0) f = tab_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab_[b][inv_col(w[j])] >= 0) b = tab_[b][inv_col(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {  // deduction
        tab_[f][w[i]] = b;
        tab_[b][inv_col(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  // Scan without defining: apply only deductions and coincidences. Used to
  // shrink the table when the live-coset limit is reached.
  void scan(int a, const std::vector<int>& w) {
    int f = a, i = 0;
    int b = a, j = static_cast<int>(w.size()) - 1;
    while (i <= j && tab_[f][w[i]] >= 0) f = tab_[f][w[i++]];
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && tab_[b][inv_col(w[j])] >= 0) b = tab_[b][inv_col(w[j--])];
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      tab_[f][w[i]] = b;
      tab_[b][inv_col(w[i])] = f;
    }
  }

  void lookahead() {
    for (int a = 0; a < table_size(); ++a) {
      if (!live(a)) continue;
      for (const auto& rel : relators_) {
        scan(a, rel);
        if (!live(a)) break;
      }
    }
  }

  // Rewrite entries of live rows through the union-find representatives.
  void normalize() {
    for (int a = 0; a < table_size(); ++a) {
      if (!live(a)) continue;
      for (int x = 0; x < ncols_; ++x)
        if (tab_[a][x] >= 0) tab_[a][x] = find(tab_[a][x]);
    }
  }

  bool complete_and_closed() {
    for (int a = 0; a < table_size(); ++a) {
      if (!live(a)) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = tab_[a][x];
        if (d < 0 || find(d) != d) return false;
      }
      for (const auto& rel : relators_) {
        int c = a;
        for (int x : rel) {
          c = tab_[c][x];
          if (c < 0) return false;
          c = find(c);
        }
        if (c != a) return false;
      }
    }
    return true;
  }

  static constexpr int kSlack = 4096;

  int ncols_;
  EnumerateOptions opt_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> rep_;
  std::deque<int> deadq_;
  int live_ = 0;
};

}  // namespace

GroupRef enumerate(const Presentation& pres, const EnumerateOptions& opt) {
  const int ngens = static_cast<int>(pres.generator_names.size());
  for (const Word& w : pres.relators)
    if (w.max_generator() >= ngens)
      throw DomainError("relator references an undeclared generator");
  if (opt.max_cosets < 1) throw DomainError("max_cosets must be positive");

  CosetEnumerator en(pres, opt);
  en.run();
  if (en.live_count() > opt.max_order)
    throw LimitError("group order " + std::to_string(en.live_count()) +
                     " exceeds max_order " + std::to_string(opt.max_order));
  auto res = en.compact();
  const int n = res.order;

  // Witness words along the BFS tree; parents precede children, so the
  // multiplication table fills by one table lookup per (element, element).
  std::vector<Word> words(n);
  for (int i = 1; i < n; ++i) {
    int x = res.bfs_letter[i];
    words[i] = words[res.bfs_parent[i]] *
               Word::generator(x / 2, x % 2 == 0 ? 1 : -1);
  }

  ConcreteGroup::Data d;
  d.order = n;
  d.mul.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) d.mul[a * n + 0] = a;
  for (int j = 1; j < n; ++j) {
    int par = res.bfs_parent[j], x = res.bfs_letter[j];
    for (int a = 0; a < n; ++a)
      d.mul[a * n + j] = res.tab[d.mul[a * n + par]][x];
  }
  d.generators.reserve(ngens);
  for (int g = 0; g < ngens; ++g) d.generators.push_back(res.tab[0][2 * g]);
  d.prime = pres.prime;
  d.element_words = std::move(words);
  d.generator_names = pres.generator_names;
  GroupRef grp = ConcreteGroup::create(std::move(d));

  ValidationReport v = grp->validate();
  if (!v.ok) throw InternalError("enumerated table invalid: " + v.failure);
  for (const Word& w : pres.relators)
    if (grp->evaluate(w) != ConcreteGroup::identity)
      throw InternalError("relator does not evaluate to the identity");
  return grp;
}

}  // namespace pgl
