#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oppo/term.hpp"

namespace oppo {

/// Ordered label -> namespace table. Labels are unique; re-adding a label
/// replaces its namespace (last declaration wins, as in Turtle).
class PrefixMap {
 public:
  PrefixMap() = default;

  void add(std::string label, Iri ns);

  const std::vector<std::pair<std::string, Iri>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::optional<Iri> namespace_of(std::string_view label) const;

  /// Expands "label:local" into a full Iri; nullopt when the label is unknown
  /// or the input has no colon.
  std::optional<Iri> expand(std::string_view prefixed_name) const;

  /// Renders an Iri as "label:local" using the longest matching namespace;
  /// nullopt when no namespace matches or the remainder is not a valid
  /// local name for the Turtle subset.
  std::optional<std::string> compact(const Iri& iri) const;

 private:
  std::vector<std::pair<std::string, Iri>> entries_;
};

/// Valid local name for the Turtle subset: [A-Za-z0-9_][A-Za-z0-9_-]*.
bool valid_local_name(std::string_view name);

/// Valid prefix label: [A-Za-z][A-Za-z0-9_-]*.
bool valid_prefix_label(std::string_view label);

}  // namespace oppo
