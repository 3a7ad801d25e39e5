#include "oppo/prefix.hpp"

#include <algorithm>
#include <cctype>

namespace oppo {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

}  // namespace

bool valid_prefix_label(std::string_view label) {
  if (label.empty() || !name_start(label.front())) return false;
  return std::all_of(label.begin(), label.end(), name_char);
}

bool valid_local_name(std::string_view name) {
  if (name.empty()) return false;
  char first = name.front();
  if (!(std::isalnum(static_cast<unsigned char>(first)) != 0 || first == '_')) return false;
  return std::all_of(name.begin(), name.end(), name_char);
}

void PrefixMap::add(std::string label, Iri ns) {
  if (!valid_prefix_label(label)) throw Error("invalid prefix label: " + label);
  for (auto& entry : entries_) {
    if (entry.first == label) {
      entry.second = std::move(ns);
      return;
    }
  }
  entries_.emplace_back(std::move(label), std::move(ns));
}

std::optional<Iri> PrefixMap::namespace_of(std::string_view label) const {
  for (const auto& [l, ns] : entries_) {
    if (l == label) return ns;
  }
  return std::nullopt;
}

std::optional<Iri> PrefixMap::expand(std::string_view prefixed_name) const {
  auto colon = prefixed_name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto ns = namespace_of(prefixed_name.substr(0, colon));
  if (!ns) return std::nullopt;
  return Iri(ns->value() + std::string(prefixed_name.substr(colon + 1)));
}

std::optional<std::string> PrefixMap::compact(const Iri& iri) const {
  const std::string& full = iri.value();
  const std::pair<std::string, Iri>* best = nullptr;
  for (const auto& entry : entries_) {
    const std::string& ns = entry.second.value();
    if (full.size() <= ns.size() || full.compare(0, ns.size(), ns) != 0) continue;
    if (best == nullptr || ns.size() > best->second.value().size()) best = &entry;
  }
  if (best == nullptr) return std::nullopt;
  std::string local = full.substr(best->second.value().size());
  if (!valid_local_name(local)) return std::nullopt;
  return best->first + ":" + local;
}

}  // namespace oppo
