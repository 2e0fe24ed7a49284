#pragma once

#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "gotas/element_set.hpp"
#include "gotas/errors.hpp"

namespace gotas {

/// Word budget for packed sets: universes larger than this are rejected.
inline constexpr std::size_t kMaxUniverseSize = 1024;

/// Finite ground set. Elements are canonically indexed by their position in
/// the label list; every set, relation and order refers to these indices.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
      throw SchemaError("universe", "must contain at least one element");
    if (labels_.size() > kMaxUniverseSize) throw UniverseTooLarge(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, fresh] = index_.emplace(labels_[i], i);
      if (!fresh)
        throw SchemaError("universe", "duplicate label '" + labels_[i] + "'");
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownLabel(label);
    return it->second;
  }

  bool has_label(const std::string& label) const {
    return index_.find(label) != index_.end();
  }

  ElementSet empty_set() const { return ElementSet::empty_set(size()); }
  ElementSet full_set() const { return ElementSet::full_set(size()); }

  ElementSet set_of(const std::vector<std::string>& labels) const {
    ElementSet s = empty_set();
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
  }

  ElementSet set_of(std::initializer_list<const char*> labels) const {
    ElementSet s = empty_set();
    for (const char* l : labels) s.insert(index_of(l));
    return s;
  }

  std::vector<std::string> labels_of(const ElementSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.count());
    s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  /// Renders a set as "{a,c}" in label order.
  std::string render(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
      if (!first) out += ',';
      out += labels_[i];
      first = false;
    });
    out += '}';
    return out;
  }

  bool operator==(const Universe& o) const { return labels_ == o.labels_; }
  bool operator!=(const Universe& o) const { return !(*this == o); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace gotas
