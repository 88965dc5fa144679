#include "opmine/edb.hpp"

#include <cmath>

#include "opmine/errors.hpp"

namespace opmine {

EvidentialDatabase::EvidentialDatabase(std::vector<AttributeSchema> attributes,
                                       std::vector<Row> rows, std::string source)
    : attributes_(std::move(attributes)), rows_(std::move(rows)), source_(std::move(source)) {}

const AttributeSchema& EvidentialDatabase::attribute(std::size_t index) const {
    if (index >= attributes_.size()) {
        throw RangeError("attribute index " + std::to_string(index) + " out of range");
    }
    return attributes_[index];
}

std::optional<std::size_t> EvidentialDatabase::attribute_index(std::string_view name) const noexcept {
    for (std::size_t j = 0; j < attributes_.size(); ++j) {
        if (attributes_[j].name == name) {
            return j;
        }
    }
    return std::nullopt;
}

const EvidentialDatabase::Row& EvidentialDatabase::row(std::size_t index) const {
    if (index >= rows_.size()) {
        throw RangeError("row index " + std::to_string(index) + " out of range");
    }
    return rows_[index];
}

const MassFunction& EvidentialDatabase::cell(std::size_t row, std::size_t attribute) const {
    const Row& r = this->row(row);
    if (attribute >= r.cells.size()) {
        throw RangeError("attribute index " + std::to_string(attribute) + " out of range in row " +
                         std::to_string(row));
    }
    return r.cells[attribute];
}

bool EvidentialDatabase::operator==(const EvidentialDatabase& other) const noexcept {
    if (source_ != other.source_ || attributes_.size() != other.attributes_.size() ||
        rows_.size() != other.rows_.size()) {
        return false;
    }
    for (std::size_t j = 0; j < attributes_.size(); ++j) {
        if (attributes_[j].name != other.attributes_[j].name ||
            !(attributes_[j].frame == other.attributes_[j].frame)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].label != other.rows_[i].label || rows_[i].cells != other.rows_[i].cells) {
            return false;
        }
    }
    return true;
}

std::vector<Violation> validate(const EvidentialDatabase& db) {
    std::vector<Violation> out;

    for (std::size_t j = 0; j < db.attribute_count(); ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            if (db.attribute(k).name == db.attribute(j).name) {
                out.push_back({std::nullopt, j,
                               "attribute name '" + db.attribute(j).name + "' duplicates attribute " +
                                   std::to_string(k)});
            }
        }
    }

    for (std::size_t i = 0; i < db.row_count(); ++i) {
        const auto& row = db.rows()[i];
        if (row.cells.size() != db.attribute_count()) {
            out.push_back({i, std::nullopt,
                           "row has " + std::to_string(row.cells.size()) + " cells, expected " +
                               std::to_string(db.attribute_count())});
        }
        const std::size_t width = std::min(row.cells.size(), db.attribute_count());
        for (std::size_t j = 0; j < width; ++j) {
            const MassFunction& cell = row.cells[j];
            if (!(cell.frame() == db.attribute(j).frame)) {
                out.push_back({i, j, "cell frame differs from the attribute frame"});
                continue;
            }
            const SubsetMask full = cell.frame().full_mask();
            bool masks_ok = true;
            for (const auto& [set, mass] : cell.focal()) {
                if (set == 0) {
                    out.push_back({i, j, "focal entry on the empty set"});
                    masks_ok = false;
                } else if (set > full) {
                    out.push_back({i, j, "focal mask " + std::to_string(set) + " references elements outside the frame"});
                    masks_ok = false;
                }
                if (!(mass > 0.0) || !std::isfinite(mass)) {
                    out.push_back({i, j, "focal mass " + std::to_string(mass) + " is not strictly positive"});
                    masks_ok = false;
                }
            }
            if (masks_ok) {
                const double sum = cell.total_mass();
                if (std::abs(sum - 1.0) > kMassTolerance) {
                    out.push_back({i, j, "masses sum to " + std::to_string(sum) + ", expected 1"});
                }
            }
        }
    }
    return out;
}

PlProjection::PlProjection(std::size_t rows, std::size_t attributes,
                           std::vector<PlausibilityVector> cells)
    : rows_(rows), attributes_(attributes), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * attributes_) {
        throw RangeError("projection needs rows*attributes cells");
    }
}

const PlausibilityVector& PlProjection::at(std::size_t row, std::size_t attribute) const {
    if (row >= rows_ || attribute >= attributes_) {
        throw RangeError("projection cell (" + std::to_string(row) + "," + std::to_string(attribute) +
                         ") out of range");
    }
    return cells_[row * attributes_ + attribute];
}

PlProjection pl_project(const EvidentialDatabase& db) {
    std::vector<PlausibilityVector> cells;
    cells.reserve(db.row_count() * db.attribute_count());
    for (std::size_t i = 0; i < db.row_count(); ++i) {
        for (std::size_t j = 0; j < db.attribute_count(); ++j) {
            cells.push_back(plausibility(db.cell(i, j)));
        }
    }
    return PlProjection(db.row_count(), db.attribute_count(), std::move(cells));
}

}  // namespace opmine
