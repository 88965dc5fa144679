#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "opmine/edb.hpp"

namespace opmine {

/// A mineable unit: one BBA on one attribute, with its plausibility cached.
struct Item {
    std::size_t attribute;
    MassFunction bba;
    PlausibilityVector pl;
};

/// Items grouped by attribute in one flat, canonically ordered list. Within an
/// attribute, items are sorted by their plausibility values (lexicographic on
/// the dense vector), so ids are stable across runs.
class ItemCatalog {
public:
    ItemCatalog(std::vector<Item> items, std::size_t attribute_count);

    std::size_t size() const noexcept { return items_.size(); }
    std::span<const Item> items() const noexcept { return items_; }
    const Item& item(std::size_t id) const;
    std::size_t attribute_count() const noexcept { return spans_.size(); }
    /// [first, last) item-id range of one attribute.
    std::pair<std::size_t, std::size_t> attribute_span(std::size_t attribute) const;
    std::span<const Item> for_attribute(std::size_t attribute) const;

private:
    std::vector<Item> items_;
    std::vector<std::pair<std::size_t, std::size_t>> spans_;
};

/// Per attribute, keeps only the most committed distinct cell BBAs: a cell is
/// dropped when another cell of the same column is strictly below it in the
/// plausibility order, and cells with equal plausibility (within kPlTolerance)
/// collapse into one item. Incomparable cells all survive.
ItemCatalog extract_items(const EvidentialDatabase& db);

/// Pattern as catalog item ids, strictly increasing; since the catalog is
/// grouped by attribute this implies at most one item per attribute.
using IndexPattern = std::vector<std::uint32_t>;

/// Pattern given directly as (attribute id, BBA) pairs, at most one per attribute.
using BbaPattern = std::vector<std::pair<std::size_t, MassFunction>>;

struct MinerConfig {
    /// Inclusive frequency threshold in (0,1]. 0 is accepted and treated as
    /// the smallest positive double (keep everything with nonzero support).
    double minsup = 0.5;
    /// Longest pattern, counted in items; 0 means the attribute count.
    std::size_t maxlen = 0;
};

/// Throws RangeError for minsup outside [0,1] (or NaN).
void validate_config(const MinerConfig& config);

struct MinedPattern {
    IndexPattern items;
    double support = 0.0;
};

struct MiningResult {
    ItemCatalog catalog;
    /// Sorted by (length, attribute ids, support descending, item ids).
    std::vector<MinedPattern> patterns;
};

/// Average over rows of the product of per-item commitments against the row's
/// cell on the item's attribute. Empty pattern -> 1; empty database -> 0.
double support(const BbaPattern& pattern, const PlProjection& proj);
double support(const IndexPattern& pattern, const ItemCatalog& catalog, const PlProjection& proj);

/// Extends every frequent k-pattern by each extension item whose attribute is
/// strictly greater than the pattern's last attribute. With the full catalog
/// as the pool this is the duplicate-free closure of the unordered join.
std::vector<IndexPattern> generate_candidates(std::span<const MinedPattern> frequent_k,
                                              const ItemCatalog& catalog);
std::vector<IndexPattern> generate_candidates(std::span<const MinedPattern> frequent_k,
                                              const ItemCatalog& catalog,
                                              std::span<const std::uint32_t> extension_items);

/// Level-wise mining over the extracted items: exactly the patterns with
/// support >= minsup and length <= maxlen. Deterministic; requires a database
/// that passes validate().
MiningResult opminer(const EvidentialDatabase& db, const MinerConfig& config);

/// The (attribute, BBA) view of an index pattern.
BbaPattern materialize(const IndexPattern& pattern, const ItemCatalog& catalog);

}  // namespace opmine
