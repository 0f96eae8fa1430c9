#pragma once

#include "superweyl/gaussian_rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace superweyl {

/// Incremental row-echelon span of sparse vectors keyed by Key. Each stored
/// row has its smallest key as pivot with coefficient 1. When tracking is on,
/// rows remember their expression in the inserted vectors so decompositions
/// can be reported against the original list.
template <class Key>
class SparseSpan {
 public:
  using Vector = std::map<Key, GaussianRational>;

  explicit SparseSpan(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Reduces v in place to its normal form modulo the span; optionally
  /// accumulates the coefficients of the inserted vectors that were removed.
  void reduce(Vector& v, std::map<int, GaussianRational>* combo = nullptr) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Row& row = rows_[p->second];
      GaussianRational c = it->second;
      Key here = it->first;
      for (const auto& [k, val] : row.entries) {
        auto [slot, fresh] = v.try_emplace(k);
        slot->second -= c * val;
        if (slot->second.is_zero()) v.erase(slot);
      }
      if (combo)
        for (const auto& [j, val] : row.combo) {
          GaussianRational& s = (*combo)[j];
          s += c * val;
          if (s.is_zero()) combo->erase(j);
        }
      it = v.upper_bound(here);
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  /// Adds v (the inserted_-th vector); returns true when the rank grew.
  bool insert(Vector v) {
    int index = inserted_++;
    std::map<int, GaussianRational> combo;
    reduce(v, track_ ? &combo : nullptr);
    if (v.empty()) return false;
    Row row;
    GaussianRational inv = v.begin()->second.inverse();
    row.entries.reserve(v.size());
    for (auto& [k, val] : v) row.entries.emplace_back(k, val * inv);
    if (track_) {
      // row = (v_index - sum combo_j v_j) * inv
      row.combo[index] = inv;
      for (auto& [j, val] : combo) row.combo[j] = -val * inv;
    }
    pivots_.emplace(row.entries.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  /// Stored echelon rows, pivot first.
  std::vector<Vector> rows() const {
    std::vector<Vector> out;
    for (const auto& r : rows_) out.emplace_back(r.entries.begin(), r.entries.end());
    return out;
  }

  /// Coefficients of the inserted vectors summing to v (dependent vectors get
  /// zero), or nullopt when v is outside the span. Requires tracking.
  std::optional<std::vector<GaussianRational>> decompose(Vector v) const {
    std::map<int, GaussianRational> combo;
    reduce(v, &combo);
    if (!v.empty()) return std::nullopt;
    std::vector<GaussianRational> out(static_cast<std::size_t>(inserted_));
    for (auto& [j, val] : combo) out[static_cast<std::size_t>(j)] = val;
    return out;
  }

 private:
  struct Row {
    std::vector<std::pair<Key, GaussianRational>> entries;
    std::map<int, GaussianRational> combo;
  };

  bool track_ = false;
  int inserted_ = 0;
  std::vector<Row> rows_;
  std::map<Key, std::size_t> pivots_;
};

}  // namespace superweyl
