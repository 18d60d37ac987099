#include "regeq/language.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace regeq {

// One behavior cell: the eps bit, a per-symbol residual rule, and a memo
// of the residuals demanded so far. Combinators are subclasses so a cell
// costs a single allocation.
//
// Memo entries are weak. Strong edges only ever point from a cell to the
// children it was constructed from, so the cell graph is acyclic by
// construction order and a residual is owned by its consumers alone. A
// dropped residual is simply recomputed on the next demand; interning
// makes the recomputation land on the same cell whenever the previous one
// is still alive somewhere.
struct Lang::Cell {
  explicit Cell(bool e) : eps(e) {}
  virtual ~Cell() = default;
  virtual Lang compute(Symbol a) = 0;

  const bool eps;
  std::mutex mu;
  // Alphabets are small, so a scanned vector beats a hash map here.
  std::vector<std::pair<Symbol, std::weak_ptr<Cell>>> memo;
};

bool Lang::eps() const { return cell_->eps; }

Lang Lang::delta(Symbol a) const {
  Cell& cell = *cell_;
  {
    std::lock_guard<std::mutex> lock(cell.mu);
    for (const auto& [sym, weak] : cell.memo) {
      if (sym == a) {
        if (auto live = weak.lock()) return Lang{std::move(live)};
        break;
      }
    }
  }
  // Compute outside the lock: compute() may recurse into other cells.
  // Losing a race only wastes the recomputation; the first inserted value
  // wins, so every caller observes one identity per symbol.
  Lang child = cell.compute(a);
  std::lock_guard<std::mutex> lock(cell.mu);
  for (auto& [sym, weak] : cell.memo) {
    if (sym == a) {
      if (auto live = weak.lock()) return Lang{std::move(live)};
      weak = child.cell_;
      return child;
    }
  }
  cell.memo.emplace_back(a, child.cell_);
  return child;
}

const void* Lang::identity() const { return cell_.get(); }

namespace {

struct ZeroCell final : Lang::Cell {
  ZeroCell() : Cell(false) {}
  Lang compute(Symbol) override { return Lang::zero(); }
};

struct OneCell final : Lang::Cell {
  OneCell() : Cell(true) {}
  Lang compute(Symbol) override { return Lang::zero(); }
};

struct SingletonCell final : Lang::Cell {
  explicit SingletonCell(Symbol s) : Cell(false), sym(s) {}
  Lang compute(Symbol a) override {
    return sym == a ? Lang::one() : Lang::zero();
  }
  Symbol sym;
};

struct PlusCell final : Lang::Cell {
  PlusCell(Lang a, Lang b)
      : Cell(a.eps() || b.eps()), l1(std::move(a)), l2(std::move(b)) {}
  Lang compute(Symbol a) override {
    return Lang::plus(l1.delta(a), l2.delta(a));
  }
  Lang l1, l2;
};

struct CompCell final : Lang::Cell {
  CompCell(Lang a, Lang b)
      : Cell(a.eps() && b.eps()), l1(std::move(a)), l2(std::move(b)) {}
  Lang compute(Symbol a) override {
    return Lang::plus(
        Lang::comp(l1.delta(a), l2),
        Lang::comp(l1.eps() ? Lang::one() : Lang::zero(), l2.delta(a)));
  }
  Lang l1, l2;
};

struct StarCell final : Lang::Cell {
  explicit StarCell(Lang a) : Cell(true), l(std::move(a)) {}
  Lang compute(Symbol a) override {
    // star(l) interns back to this very cell; the result references it
    // strongly, but the weak memo never closes the loop.
    return Lang::comp(l.delta(a), Lang::star(l));
  }
  Lang l;
};

struct UnfoldCell final : Lang::Cell {
  UnfoldCell(bool e, Lang::Step s) : Cell(e), step(std::move(s)) {}
  Lang compute(Symbol a) override { return step(a); }
  Lang::Step step;
};

// Interning for the structural cells, keyed by constructor and child
// identities. A key never outlives the cells it points to: a live entry
// holds its children alive through the interned cell itself, so addresses
// in live keys cannot be recycled. Values are weak; expired entries are
// swept whenever the table has doubled since the last sweep.
struct CellKey {
  unsigned char tag;  // 'p' plus, 'c' comp, 's' star, 'a' singleton
  char32_t sym;
  const void* c0;
  const void* c1;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    auto mix = [](std::size_t seed, std::size_t v) {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    };
    std::size_t h = mix(0, k.tag);
    h = mix(h, std::hash<char32_t>{}(k.sym));
    h = mix(h, std::hash<const void*>{}(k.c0));
    return mix(h, std::hash<const void*>{}(k.c1));
  }
};

using CellInternMap =
    std::unordered_map<CellKey, std::weak_ptr<Lang::Cell>, CellKeyHash>;

std::mutex& cell_intern_mutex() {
  static std::mutex mu;
  return mu;
}

CellInternMap& cell_intern_map() {
  static CellInternMap map;
  return map;
}

void sweep_if_bloated(CellInternMap& map) {
  static std::size_t threshold = 1024;  // guarded by cell_intern_mutex()
  if (map.size() < threshold) return;
  std::erase_if(map, [](const auto& kv) { return kv.second.expired(); });
  threshold = std::max<std::size_t>(1024, map.size() * 2);
}

template <typename Make>
std::shared_ptr<Lang::Cell> intern_cell(const CellKey& key, Make&& make) {
  {
    std::lock_guard<std::mutex> lock(cell_intern_mutex());
    auto& map = cell_intern_map();
    if (auto it = map.find(key); it != map.end()) {
      if (auto cell = it->second.lock()) return cell;
    }
  }
  std::shared_ptr<Lang::Cell> fresh = make();
  std::lock_guard<std::mutex> lock(cell_intern_mutex());
  auto& map = cell_intern_map();
  auto& slot = map[key];
  if (auto winner = slot.lock()) return winner;
  slot = fresh;
  sweep_if_bloated(map);
  return fresh;
}

}  // namespace

Lang Lang::unfold(bool eps, Step step) {
  return Lang{std::make_shared<UnfoldCell>(eps, std::move(step))};
}

Lang Lang::zero() {
  static const Lang instance{std::make_shared<ZeroCell>()};
  return instance;
}

Lang Lang::one() {
  static const Lang instance{std::make_shared<OneCell>()};
  return instance;
}

Lang Lang::singleton(Symbol a) {
  CellKey key{'a', a.value(), nullptr, nullptr};
  return Lang{intern_cell(key, [&] { return std::make_shared<SingletonCell>(a); })};
}

Lang Lang::plus(Lang l1, Lang l2) {
  CellKey key{'p', U'\0', l1.identity(), l2.identity()};
  return Lang{intern_cell(key, [&] {
    return std::make_shared<PlusCell>(std::move(l1), std::move(l2));
  })};
}

Lang Lang::comp(Lang l1, Lang l2) {
  CellKey key{'c', U'\0', l1.identity(), l2.identity()};
  return Lang{intern_cell(key, [&] {
    return std::make_shared<CompCell>(std::move(l1), std::move(l2));
  })};
}

Lang Lang::star(Lang l) {
  CellKey key{'s', U'\0', l.identity(), nullptr};
  return Lang{intern_cell(key, [&] {
    return std::make_shared<StarCell>(std::move(l));
  })};
}

bool member(const Lang& l, const Word& w) {
  Lang cur = l;
  for (Symbol s : w) cur = cur.delta(s);
  return cur.eps();
}

std::vector<Word> enumerate(const Lang& l, const Alphabet& alphabet,
                            std::size_t max_len) {
  require_valid_alphabet(alphabet);
  std::vector<Word> result;
  // FIFO over the word trie yields length-then-lexicographic order.
  std::deque<std::pair<Word, Lang>> queue;
  queue.emplace_back(Word{}, l);
  while (!queue.empty()) {
    auto [word, lang] = std::move(queue.front());
    queue.pop_front();
    if (lang.eps()) result.push_back(word);
    if (word.size() < max_len) {
      for (Symbol a : alphabet) {
        Word next = word;
        next.push_back(a);
        queue.emplace_back(std::move(next), lang.delta(a));
      }
    }
  }
  return result;
}

}  // namespace regeq
