#include "pyrolace/labeling.hpp"

#include <algorithm>
#include <cctype>

#include "pyrolace/errors.hpp"

namespace pyrolace {

VertexLabeling VertexLabeling::numbered(std::string_view prefix, std::size_t count) {
  VertexLabeling labels;
  for (std::size_t i = 1; i <= count; ++i) labels.add(std::string(prefix) + std::to_string(i));
  return labels;
}

std::size_t VertexLabeling::add(std::string label) {
  if (label.empty()) throw PreconditionError("empty vertex label");
  if (std::any_of(label.begin(), label.end(),
                  [](unsigned char c) { return std::isspace(c) != 0; }))
    throw PreconditionError("vertex label contains whitespace: '" + label + "'");
  if (index_.contains(label)) throw PreconditionError("duplicate vertex label '" + label + "'");
  const std::size_t index = labels_.size();
  index_.emplace(label, index);
  labels_.push_back(std::move(label));
  return index;
}

std::optional<std::size_t> VertexLabeling::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VertexLabeling::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw PreconditionError("unknown vertex label '" + std::string(label) + "'");
}

const std::string& VertexLabeling::label(std::size_t index) const {
  if (index >= labels_.size())
    throw IndexError("label index " + std::to_string(index) + " out of range");
  return labels_[index];
}

}  // namespace pyrolace
