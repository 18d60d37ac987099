#include "regeq/semantics.hpp"

#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace regeq {

namespace {

// The functions in this file are pure over interned expressions, so their
// results are cached by structural key. A cache holds its keys and values
// alive, which keeps every cached address meaningful; when one outgrows
// its budget it is cleared wholesale — recomputation is always sound, so
// a clear only costs time.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class BoundedCache {
 public:
  explicit BoundedCache(std::size_t budget) : budget_(budget) {}

  std::optional<Value> find(const Key& key) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = map_.find(key); it != map_.end()) return it->second;
    return std::nullopt;
  }

  // Keeps the first stored value for a key; the return value is the
  // canonical one and is what callers should hand out.
  Value store(const Key& key, Value value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= budget_) map_.clear();
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return it->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<Key, Value, Hash> map_;
  std::size_t budget_;
};

struct DerivKey {
  Exp e;
  char32_t sym;
  bool operator==(const DerivKey&) const = default;
};

struct DerivKeyHash {
  std::size_t operator()(const DerivKey& k) const {
    std::size_t h = k.e.hash();
    return h ^ (std::hash<char32_t>{}(k.sym) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

// Deliberately leaked: the caches live for the whole process, so their
// teardown order against other statics never matters.
BoundedCache<Exp, bool>& nullable_cache() {
  static auto* cache = new BoundedCache<Exp, bool>(std::size_t{1} << 21);
  return *cache;
}

BoundedCache<DerivKey, Exp, DerivKeyHash>& derivative_cache() {
  static auto* cache =
      new BoundedCache<DerivKey, Exp, DerivKeyHash>(std::size_t{1} << 20);
  return *cache;
}

BoundedCache<Exp, Lang>& denotational_cache() {
  static auto* cache = new BoundedCache<Exp, Lang>(std::size_t{1} << 18);
  return *cache;
}

BoundedCache<Exp, Lang>& operational_cache() {
  static auto* cache = new BoundedCache<Exp, Lang>(std::size_t{1} << 18);
  return *cache;
}

}  // namespace

Lang denotational(const Exp& e) {
  if (auto hit = denotational_cache().find(e)) return *hit;
  Lang result = Lang::zero();
  switch (e.kind()) {
    case Exp::Kind::Zero:
      result = Lang::zero();
      break;
    case Exp::Kind::One:
      result = Lang::one();
      break;
    case Exp::Kind::Char:
      result = Lang::singleton(e.symbol());
      break;
    case Exp::Kind::Plus:
      result = Lang::plus(denotational(e.left()), denotational(e.right()));
      break;
    case Exp::Kind::Comp:
      result = Lang::comp(denotational(e.left()), denotational(e.right()));
      break;
    case Exp::Kind::Star:
      result = Lang::star(denotational(e.inner()));
      break;
  }
  return denotational_cache().store(e, std::move(result));
}

bool nullable(const Exp& e) {
  switch (e.kind()) {
    case Exp::Kind::Zero:
      return false;
    case Exp::Kind::One:
      return true;
    case Exp::Kind::Char:
      return false;
    case Exp::Kind::Star:
      return true;
    case Exp::Kind::Plus:
    case Exp::Kind::Comp:
      break;
  }
  if (auto hit = nullable_cache().find(e)) return *hit;
  bool result = e.kind() == Exp::Kind::Plus
                    ? nullable(e.left()) || nullable(e.right())
                    : nullable(e.left()) && nullable(e.right());
  return nullable_cache().store(e, result);
}

Exp derivative(const Exp& e, Symbol a) {
  switch (e.kind()) {
    case Exp::Kind::Zero:
    case Exp::Kind::One:
      return Exp::zero();
    case Exp::Kind::Char:
      return e.symbol() == a ? Exp::one() : Exp::zero();
    default:
      break;
  }
  DerivKey key{e, a.value()};
  if (auto hit = derivative_cache().find(key)) return *hit;
  Exp result = Exp::zero();
  switch (e.kind()) {
    case Exp::Kind::Plus:
      result = Exp::plus(derivative(e.left(), a), derivative(e.right(), a));
      break;
    case Exp::Kind::Comp:
      // The left factor may be skipped only through its empty word, hence
      // the nullability guard on the right summand.
      result = Exp::plus(
          Exp::comp(derivative(e.left(), a), e.right()),
          Exp::comp(nullable(e.left()) ? Exp::one() : Exp::zero(),
                    derivative(e.right(), a)));
      break;
    case Exp::Kind::Star:
      result = Exp::comp(derivative(e.inner(), a), e);
      break;
    default:
      throw std::logic_error("derivative: unreachable");
  }
  return derivative_cache().store(key, std::move(result));
}

Exp normalized_derivative(const Exp& e, Symbol a) {
  return normalize(derivative(e, a));
}

Lang operational(const Exp& e) {
  if (auto hit = operational_cache().find(e)) return *hit;
  Lang result = Lang::unfold(
      nullable(e), [e](Symbol a) { return operational(derivative(e, a)); });
  return operational_cache().store(e, std::move(result));
}

}  // namespace regeq
