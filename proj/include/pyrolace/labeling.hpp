#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pyrolace {

/// Bijection between external vertex names ("v1", "h2", ...) and dense indices.
class VertexLabeling {
 public:
  VertexLabeling() = default;

  /// prefix1, prefix2, ..., prefix<count>
  static VertexLabeling numbered(std::string_view prefix, std::size_t count);

  /// Appends a label and returns its index. Throws PreconditionError on a
  /// duplicate or on a label that is empty or contains whitespace.
  std::size_t add(std::string label);

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws PreconditionError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  /// Throws IndexError when out of range.
  const std::string& label(std::size_t index) const;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Space-separated labels of the given indices.
  template <class Range>
  std::string join(const Range& indices) const {
    std::string out;
    for (auto i : indices) {
      if (!out.empty()) out += ' ';
      out += label(static_cast<std::size_t>(i));
    }
    return out;
  }

  friend bool operator==(const VertexLabeling& a, const VertexLabeling& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace pyrolace
