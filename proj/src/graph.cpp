#include "oppo/graph.hpp"

#include <algorithm>

namespace oppo {

namespace {

std::uint64_t max_blank_plus_one(const Triple& t) {
  std::uint64_t watermark = 0;
  for (const Term* term : {&t.subject, &t.object}) {
    if (term->is_blank()) watermark = std::max(watermark, term->blank_id() + 1);
  }
  return watermark;
}

}  // namespace

bool matches(const TriplePattern& pattern, const Triple& triple) {
  return (!pattern.subject || *pattern.subject == triple.subject) &&
         (!pattern.predicate || *pattern.predicate == triple.predicate) &&
         (!pattern.object || *pattern.object == triple.object);
}

bool Graph::insert(Triple t) {
  if (frozen_) throw Error("cannot insert into a frozen graph");
  auto [it, inserted] = triples_.insert(std::move(t));
  if (!inserted) return false;
  const Triple& stored = *it;
  blank_watermark_ = std::max(blank_watermark_, max_blank_plus_one(stored));
  idx_s_[stored.subject].insert(stored);
  idx_p_[stored.predicate].insert(stored);
  idx_o_[stored.object].insert(stored);
  idx_sp_[{stored.subject, stored.predicate}].insert(stored);
  idx_po_[{stored.predicate, stored.object}].insert(stored);
  return true;
}

std::uint64_t Graph::fresh_blank() {
  if (frozen_) throw Error("cannot allocate blank nodes in a frozen graph");
  return blank_watermark_++;
}

namespace {

template <typename Key, typename Map>
const std::set<Triple>* bucket(const Map& index, const Key& key) {
  auto it = index.find(key);
  return it == index.end() ? nullptr : &it->second;
}

const std::set<Triple> kEmptyBucket;

}  // namespace

std::vector<Triple> Graph::match(const TriplePattern& pattern) const {
  const std::set<Triple>* source = &triples_;
  bool s = pattern.subject.has_value();
  bool p = pattern.predicate.has_value();
  bool o = pattern.object.has_value();

  // Most-bound index first; remaining slots are filtered below.
  const std::set<Triple>* indexed = nullptr;
  if (s && p) {
    indexed = bucket(idx_sp_, std::make_pair(*pattern.subject, *pattern.predicate));
  } else if (p && o) {
    indexed = bucket(idx_po_, std::make_pair(*pattern.predicate, *pattern.object));
  } else if (s) {
    indexed = bucket(idx_s_, *pattern.subject);
  } else if (p) {
    indexed = bucket(idx_p_, *pattern.predicate);
  } else if (o) {
    indexed = bucket(idx_o_, *pattern.object);
  }
  if (s || p || o) source = indexed ? indexed : &kEmptyBucket;

  std::vector<Triple> out;
  for (const Triple& t : *source) {
    if (matches(pattern, t)) out.push_back(t);
  }
  return out;  // already canonical: buckets are ordered sets
}

std::size_t Graph::match_count(const TriplePattern& pattern) const {
  return match(pattern).size();
}

bool Graph::audit_indexes() const {
  auto bucket_total = [](const auto& index) {
    std::size_t n = 0;
    for (const auto& [key, entries] : index) n += entries.size();
    return n;
  };
  if (bucket_total(idx_s_) != triples_.size() || bucket_total(idx_p_) != triples_.size() ||
      bucket_total(idx_o_) != triples_.size() || bucket_total(idx_sp_) != triples_.size() ||
      bucket_total(idx_po_) != triples_.size()) {
    return false;
  }
  for (const Triple& t : triples_) {
    const auto* bs = bucket(idx_s_, t.subject);
    const auto* bp = bucket(idx_p_, t.predicate);
    const auto* bo = bucket(idx_o_, t.object);
    const auto* bsp = bucket(idx_sp_, std::make_pair(t.subject, t.predicate));
    const auto* bpo = bucket(idx_po_, std::make_pair(t.predicate, t.object));
    if (!bs || !bs->contains(t) || !bp || !bp->contains(t) || !bo || !bo->contains(t) ||
        !bsp || !bsp->contains(t) || !bpo || !bpo->contains(t)) {
      return false;
    }
  }
  return true;
}

namespace {

Term rename_blank(const Term& term, std::uint64_t offset) {
  if (!term.is_blank()) return term;
  return Term::blank(term.blank_id() + offset);
}

}  // namespace

Graph merge(const Graph& g, const Graph& h) {
  Graph out;
  for (const Triple& t : g.triples()) out.insert(t);
  const std::uint64_t offset = g.blank_watermark();
  for (const Triple& t : h.triples()) {
    out.insert(Triple(rename_blank(t.subject, offset), t.predicate,
                      rename_blank(t.object, offset)));
  }
  return out;
}

}  // namespace oppo
