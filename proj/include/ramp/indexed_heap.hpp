#pragma once

#include <cassert>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace ramp {

/// Binary min-heap addressed by dense integer ids, with decrease-key and erase.
/// Ids may be arbitrary non-negative integers; storage grows on demand.
template <typename Key, typename Compare = std::less<Key>>
class IndexedMinHeap {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit IndexedMinHeap(std::size_t capacity = 0, Compare cmp = Compare{}) : cmp_(std::move(cmp)) {
    reserve(capacity);
  }

  void reserve(std::size_t capacity) {
    if (capacity > pos_.size()) {
      pos_.resize(capacity, npos);
      keys_.resize(capacity);
    }
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(std::size_t id) const { return id < pos_.size() && pos_[id] != npos; }
  const Key& key(std::size_t id) const { return keys_[id]; }
  std::size_t top() const { return heap_.front(); }
  const Key& top_key() const { return keys_[heap_.front()]; }

  void push(std::size_t id, Key key) {
    reserve(id + 1);
    assert(!contains(id));
    keys_[id] = std::move(key);
    pos_[id] = heap_.size();
    heap_.push_back(id);
    sift_up(heap_.size() - 1);
  }

  /// New key must not compare greater than the current one.
  void decrease(std::size_t id, Key key) {
    assert(contains(id));
    assert(!cmp_(keys_[id], key));
    keys_[id] = std::move(key);
    sift_up(pos_[id]);
  }

  std::pair<std::size_t, Key> pop() {
    assert(!empty());
    const std::size_t id = heap_.front();
    remove_at(0);
    return {id, keys_[id]};
  }

  void erase(std::size_t id) {
    if (contains(id)) remove_at(pos_[id]);
  }

  void clear() {
    for (std::size_t id : heap_) pos_[id] = npos;
    heap_.clear();
  }

 private:
  bool less(std::size_t i, std::size_t j) const { return cmp_(keys_[heap_[i]], keys_[heap_[j]]); }

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!less(i, parent)) break;
      swap_at(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t best = i;
      const std::size_t l = 2 * i + 1;
      const std::size_t r = l + 1;
      if (l < n && less(l, best)) best = l;
      if (r < n && less(r, best)) best = r;
      if (best == i) return;
      swap_at(i, best);
      i = best;
    }
  }

  void remove_at(std::size_t i) {
    const std::size_t last = heap_.size() - 1;
    const std::size_t id = heap_[i];
    if (i != last) {
      swap_at(i, last);
      heap_.pop_back();
      pos_[id] = npos;
      sift_down(i);
      sift_up(i);
    } else {
      heap_.pop_back();
      pos_[id] = npos;
    }
  }

  std::vector<std::size_t> heap_;
  std::vector<std::size_t> pos_;
  std::vector<Key> keys_;
  Compare cmp_;
};

}  // namespace ramp
