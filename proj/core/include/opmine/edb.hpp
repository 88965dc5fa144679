#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opmine/plausibility.hpp"

namespace opmine {

/// One column of an evidential database: a named attribute with its own frame.
struct AttributeSchema {
    std::string name;
    FrameOfDiscernment frame;
};

/// d transactions by n attributes, one BBA per cell. Missing answers are
/// stored as vacuous BBAs, so a cell is always present. Immutable after
/// construction; see validate() for the full invariant scan.
class EvidentialDatabase {
public:
    struct Row {
        std::string label;  // free-form id, e.g. the expert name; may be empty
        std::vector<MassFunction> cells;
    };

    EvidentialDatabase(std::vector<AttributeSchema> attributes, std::vector<Row> rows,
                       std::string source = {});

    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::span<const AttributeSchema> attributes() const noexcept { return attributes_; }
    const AttributeSchema& attribute(std::size_t index) const;
    std::optional<std::size_t> attribute_index(std::string_view name) const noexcept;
    std::span<const Row> rows() const noexcept { return rows_; }
    const Row& row(std::size_t index) const;
    const MassFunction& cell(std::size_t row, std::size_t attribute) const;

    /// Optional tag naming where the data came from (e.g. the survey source).
    const std::string& source() const noexcept { return source_; }

    bool operator==(const EvidentialDatabase& other) const noexcept;

private:
    std::vector<AttributeSchema> attributes_;
    std::vector<Row> rows_;
    std::string source_;
};

/// One invariant violation found by validate(). Coordinates are absent for
/// schema-level findings (e.g. duplicate attribute names).
struct Violation {
    std::optional<std::size_t> row;
    std::optional<std::size_t> attribute;
    std::string message;
};

/// Full invariant scan: attribute-name uniqueness, row widths, per-cell frame
/// agreement, focal masks inside the frame, positive finite masses, mass sums
/// within kMassTolerance. Reports every violation instead of stopping at the
/// first; an empty result means the database is ready for mining.
std::vector<Violation> validate(const EvidentialDatabase& db);

/// Plausibility of every cell, precomputed once for mining.
class PlProjection {
public:
    PlProjection(std::size_t rows, std::size_t attributes, std::vector<PlausibilityVector> cells);

    std::size_t row_count() const noexcept { return rows_; }
    std::size_t attribute_count() const noexcept { return attributes_; }
    const PlausibilityVector& at(std::size_t row, std::size_t attribute) const;

private:
    std::size_t rows_;
    std::size_t attributes_;
    std::vector<PlausibilityVector> cells_;  // row-major
};

/// Requires a database that passes validate().
PlProjection pl_project(const EvidentialDatabase& db);

}  // namespace opmine
