#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flagtrans {

class ClosureOverflow : public std::runtime_error {
 public:
  explicit ClosureOverflow(std::size_t cap)
      : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) + " elements") {}
};

/// Anything with an associative operator*, inverse(), a total order and a
/// std::hash specialization.
template <class E>
concept GroupElementLike = requires(const E& a, const E& b) {
  { a * b } -> std::convertible_to<E>;
  { inverse(a) } -> std::convertible_to<E>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
};

/// Finite group with every element listed, sorted ascending.
template <GroupElementLike E>
class EnumeratedGroup {
 public:
  EnumeratedGroup() = default;

  /// Breadth-first product closure of the generators.
  static EnumeratedGroup generate(std::vector<E> gens, const E& identity, std::size_t cap) {
    std::unordered_map<E, std::size_t> seen;
    std::vector<E> elems{identity};
    seen.emplace(identity, 0);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : gens) {
        E y = elems[head] * g;
        if (seen.contains(y)) continue;
        if (elems.size() >= cap) throw ClosureOverflow(cap);
        seen.emplace(y, elems.size());
        elems.push_back(std::move(y));
      }
    }
    return EnumeratedGroup(std::move(gens), std::move(elems));
  }

  /// Wraps an element list that must form a group. A generating set is
  /// picked greedily in element order; the list is rejected unless those
  /// generators close up to exactly the given elements.
  static EnumeratedGroup from_elements(std::vector<E> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    auto id = std::find_if(elems.begin(), elems.end(), [](const E& x) { return x * x == x; });
    if (id == elems.end()) throw std::invalid_argument("element list has no identity");
    std::vector<E> gens;
    EnumeratedGroup current = generate({}, *id, 1);
    for (const auto& e : elems) {
      if (current.contains(e)) continue;
      gens.push_back(e);
      try {
        current = generate(gens, *id, elems.size());
      } catch (const ClosureOverflow&) {
        throw std::invalid_argument("element list is not a group");
      }
    }
    if (current.elements() != elems) throw std::invalid_argument("element list is not a group");
    return current;
  }

  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  const E& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& e) const { return index_.contains(e); }

  bool is_subgroup_of(const EnumeratedGroup& parent) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const E& e) { return parent.contains(e); });
  }

 protected:
  EnumeratedGroup(std::vector<E> gens, std::vector<E> elems) : generators_(std::move(gens)), elements_(std::move(elems)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

 private:
  std::vector<E> generators_;
  std::vector<E> elements_;
  std::unordered_map<E, std::size_t> index_;
};

}  // namespace flagtrans
