#include "opmine/miner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opmine/errors.hpp"

namespace opmine {

namespace {

bool pl_values_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool pl_values_close(std::span<const double> a, std::span<const double> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kPlTolerance) {
            return false;
        }
    }
    return true;
}

/// v strictly more committed than u: v <=_pl u but not u <=_pl v.
bool strictly_below(const PlausibilityVector& v, const PlausibilityVector& u) {
    return pl_leq(v, u) && !pl_leq(u, v);
}

double effective_minsup(double minsup) {
    return minsup > 0.0 ? minsup : std::numeric_limits<double>::denorm_min();
}

}  // namespace

ItemCatalog::ItemCatalog(std::vector<Item> items, std::size_t attribute_count)
    : items_(std::move(items)) {
    spans_.assign(attribute_count, {0, 0});
    std::size_t pos = 0;
    for (std::size_t j = 0; j < attribute_count; ++j) {
        const std::size_t first = pos;
        while (pos < items_.size() && items_[pos].attribute == j) {
            ++pos;
        }
        spans_[j] = {first, pos};
    }
    if (pos != items_.size()) {
        throw RangeError("catalog items must be grouped by increasing attribute");
    }
}

const Item& ItemCatalog::item(std::size_t id) const {
    if (id >= items_.size()) {
        throw RangeError("item id " + std::to_string(id) + " out of range");
    }
    return items_[id];
}

std::pair<std::size_t, std::size_t> ItemCatalog::attribute_span(std::size_t attribute) const {
    if (attribute >= spans_.size()) {
        throw RangeError("attribute index " + std::to_string(attribute) + " out of range");
    }
    return spans_[attribute];
}

std::span<const Item> ItemCatalog::for_attribute(std::size_t attribute) const {
    auto [first, last] = attribute_span(attribute);
    return std::span<const Item>(items_).subspan(first, last - first);
}

ItemCatalog extract_items(const EvidentialDatabase& db) {
    std::vector<Item> items;
    for (std::size_t j = 0; j < db.attribute_count(); ++j) {
        std::vector<std::pair<PlausibilityVector, const MassFunction*>> cands;
        cands.reserve(db.row_count());
        for (std::size_t i = 0; i < db.row_count(); ++i) {
            const MassFunction& cell = db.cell(i, j);
            cands.emplace_back(plausibility(cell), &cell);
        }
        std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            return pl_values_less(a.first.values(), b.first.values());
        });
        // merge duplicates: equal plausibility determines an equal BBA
        std::vector<std::pair<PlausibilityVector, const MassFunction*>> uniq;
        for (auto& c : cands) {
            if (uniq.empty() || !pl_values_close(uniq.back().first.values(), c.first.values())) {
                uniq.push_back(std::move(c));
            }
        }
        for (std::size_t u = 0; u < uniq.size(); ++u) {
            bool dominated = false;
            for (std::size_t v = 0; v < uniq.size() && !dominated; ++v) {
                dominated = v != u && strictly_below(uniq[v].first, uniq[u].first);
            }
            if (!dominated) {
                items.push_back({j, *uniq[u].second, uniq[u].first});
            }
        }
    }
    return ItemCatalog(std::move(items), db.attribute_count());
}

void validate_config(const MinerConfig& config) {
    if (!(config.minsup >= 0.0 && config.minsup <= 1.0)) {
        throw RangeError("minsup must be in [0,1]");
    }
}

double support(const BbaPattern& pattern, const PlProjection& proj) {
    if (pattern.empty()) {
        return 1.0;
    }
    std::vector<std::pair<std::size_t, PlausibilityVector>> pls;
    pls.reserve(pattern.size());
    for (const auto& [attribute, bba] : pattern) {
        if (attribute >= proj.attribute_count()) {
            throw RangeError("pattern attribute " + std::to_string(attribute) + " out of range");
        }
        for (const auto& prev : pls) {
            if (prev.first == attribute) {
                throw RangeError("pattern has two items on attribute " + std::to_string(attribute));
            }
        }
        pls.emplace_back(attribute, plausibility(bba));
    }
    if (proj.row_count() == 0) {
        return 0.0;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < proj.row_count(); ++i) {
        double prod = 1.0;
        for (const auto& [attribute, pl] : pls) {
            prod *= commitment(pl, proj.at(i, attribute));
            if (prod == 0.0) {
                break;
            }
        }
        total += prod;
    }
    return total / static_cast<double>(proj.row_count());
}

double support(const IndexPattern& pattern, const ItemCatalog& catalog, const PlProjection& proj) {
    if (pattern.empty()) {
        return 1.0;
    }
    if (proj.row_count() == 0) {
        return 0.0;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < proj.row_count(); ++i) {
        double prod = 1.0;
        for (std::uint32_t id : pattern) {
            const Item& item = catalog.item(id);
            prod *= commitment(item.pl, proj.at(i, item.attribute));
            if (prod == 0.0) {
                break;
            }
        }
        total += prod;
    }
    return total / static_cast<double>(proj.row_count());
}

std::vector<IndexPattern> generate_candidates(std::span<const MinedPattern> frequent_k,
                                              const ItemCatalog& catalog) {
    std::vector<std::uint32_t> all(catalog.size());
    for (std::uint32_t id = 0; id < catalog.size(); ++id) {
        all[id] = id;
    }
    return generate_candidates(frequent_k, catalog, all);
}

std::vector<IndexPattern> generate_candidates(std::span<const MinedPattern> frequent_k,
                                              const ItemCatalog& catalog,
                                              std::span<const std::uint32_t> extension_items) {
    std::vector<IndexPattern> out;
    for (const MinedPattern& pat : frequent_k) {
        if (pat.items.empty()) {
            throw RangeError("cannot extend an empty pattern");
        }
        const std::size_t last_attribute = catalog.item(pat.items.back()).attribute;
        for (std::uint32_t id : extension_items) {
            if (catalog.item(id).attribute > last_attribute) {
                IndexPattern next = pat.items;
                next.push_back(id);
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

MiningResult opminer(const EvidentialDatabase& db, const MinerConfig& config) {
    validate_config(config);
    const double minsup = effective_minsup(config.minsup);
    const std::size_t maxlen =
        config.maxlen == 0 ? db.attribute_count() : std::min(config.maxlen, db.attribute_count());

    ItemCatalog catalog = extract_items(db);
    const PlProjection proj = pl_project(db);
    const std::size_t d = db.row_count();

    // Per-row commitment columns for items that stay in play; support of a
    // longer pattern is then a plain product-sum over these columns.
    std::vector<std::vector<double>> columns(catalog.size());
    std::vector<MinedPattern> level;
    std::vector<std::uint32_t> frequent_items;
    for (std::uint32_t id = 0; id < catalog.size(); ++id) {
        const Item& item = catalog.item(id);
        std::vector<double> col(d);
        double total = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            col[i] = commitment(item.pl, proj.at(i, item.attribute));
            total += col[i];
        }
        const double sup = d == 0 ? 0.0 : total / static_cast<double>(d);
        if (sup >= minsup) {
            level.push_back({{id}, sup});
            frequent_items.push_back(id);
            columns[id] = std::move(col);
        }
    }

    std::vector<MinedPattern> out;
    std::size_t size = 1;
    while (!level.empty()) {
        out.insert(out.end(), level.begin(), level.end());
        if (++size > maxlen) {
            break;
        }
        // Extending by infrequent items cannot produce a frequent pattern
        // (support is anti-monotone), so the pool is the frequent items.
        std::vector<IndexPattern> candidates = generate_candidates(level, catalog, frequent_items);
        level.clear();
        for (IndexPattern& cand : candidates) {
            double total = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                double prod = 1.0;
                for (std::uint32_t id : cand) {
                    prod *= columns[id][i];
                    if (prod == 0.0) {
                        break;
                    }
                }
                total += prod;
            }
            const double sup = d == 0 ? 0.0 : total / static_cast<double>(d);
            if (sup >= minsup) {
                level.push_back({std::move(cand), sup});
            }
        }
    }

    std::sort(out.begin(), out.end(), [&](const MinedPattern& a, const MinedPattern& b) {
        if (a.items.size() != b.items.size()) {
            return a.items.size() < b.items.size();
        }
        for (std::size_t k = 0; k < a.items.size(); ++k) {
            const std::size_t aa = catalog.item(a.items[k]).attribute;
            const std::size_t ba = catalog.item(b.items[k]).attribute;
            if (aa != ba) {
                return aa < ba;
            }
        }
        if (a.support != b.support) {
            return a.support > b.support;
        }
        return a.items < b.items;
    });
    return MiningResult{std::move(catalog), std::move(out)};
}

BbaPattern materialize(const IndexPattern& pattern, const ItemCatalog& catalog) {
    BbaPattern out;
    out.reserve(pattern.size());
    for (std::uint32_t id : pattern) {
        const Item& item = catalog.item(id);
        out.emplace_back(item.attribute, item.bba);
    }
    return out;
}

}  // namespace opmine
