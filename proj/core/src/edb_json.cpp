#include "opmine/edb_json.hpp"

#include <fstream>
#include <sstream>

#include "opmine/errors.hpp"
#include "opmine/json_codec.hpp"

namespace opmine {

namespace {

const Json& expect(const Json& node, const char* key, const std::string& path) {
    auto it = node.find(key);
    if (!node.is_object() || it == node.end()) {
        throw SchemaError(path + "." + key + ": missing");
    }
    return *it;
}

std::string expect_string(const Json& node, const std::string& path) {
    if (!node.is_string()) {
        throw SchemaError(path + ": expected a string");
    }
    return node.get<std::string>();
}

}  // namespace

Json bba_to_json(const MassFunction& m) {
    Json cell = Json::array();
    for (const auto& [set, mass] : m.focal()) {
        Json entry;
        entry["set"] = m.frame().names_of(set);
        entry["mass"] = mass;
        cell.push_back(std::move(entry));
    }
    return cell;
}

MassFunction bba_from_json(const Json& cell, const FrameOfDiscernment& frame,
                           const std::string& path) {
    if (!cell.is_array() || cell.empty()) {
        throw SchemaError(path + ": expected a nonempty array of focal entries");
    }
    std::vector<MassFunction::Focal> focal;
    std::vector<SubsetMask> seen;
    for (std::size_t k = 0; k < cell.size(); ++k) {
        const std::string epath = path + "[" + std::to_string(k) + "]";
        const Json& entry = cell[k];
        if (!entry.is_object()) {
            throw SchemaError(epath + ": expected an object with 'set' and 'mass'");
        }
        const Json& set_node = expect(entry, "set", epath);
        if (!set_node.is_array() || set_node.empty()) {
            throw SchemaError(epath + ".set: expected a nonempty array of element names");
        }
        SubsetMask mask = 0;
        for (std::size_t e = 0; e < set_node.size(); ++e) {
            const std::string name = expect_string(set_node[e], epath + ".set[" + std::to_string(e) + "]");
            auto idx = frame.index_of(name);
            if (!idx) {
                throw SchemaError(epath + ".set[" + std::to_string(e) + "]: element '" + name +
                                  "' is not in the attribute frame");
            }
            const SubsetMask bit = SubsetMask(1) << *idx;
            if (mask & bit) {
                throw SchemaError(epath + ".set[" + std::to_string(e) + "]: duplicate element '" + name + "'");
            }
            mask |= bit;
        }
        for (SubsetMask m2 : seen) {
            if (m2 == mask) {
                throw SchemaError(epath + ".set: duplicate focal set in one cell");
            }
        }
        seen.push_back(mask);
        const Json& mass_node = expect(entry, "mass", epath);
        if (!mass_node.is_number()) {
            throw SchemaError(epath + ".mass: expected a number");
        }
        focal.emplace_back(mask, mass_node.get<double>());
    }
    return MassFunction::unchecked(frame, std::move(focal));
}

Json db_to_json(const EvidentialDatabase& db) {
    Json root;
    if (!db.source().empty()) {
        root["source"] = db.source();
    }
    root["attributes"] = Json::array();
    for (const auto& attr : db.attributes()) {
        Json a;
        a["name"] = attr.name;
        a["frame"] = std::vector<std::string>(attr.frame.elements().begin(), attr.frame.elements().end());
        root["attributes"].push_back(std::move(a));
    }
    root["rows"] = Json::array();
    for (const auto& row : db.rows()) {
        Json r;
        if (!row.label.empty()) {
            r["label"] = row.label;
        }
        r["cells"] = Json::array();
        for (const auto& cell : row.cells) {
            r["cells"].push_back(bba_to_json(cell));
        }
        root["rows"].push_back(std::move(r));
    }
    return root;
}

EvidentialDatabase db_from_json(const Json& root) {
    if (!root.is_object()) {
        throw SchemaError("$: expected an object");
    }
    std::string source;
    if (auto it = root.find("source"); it != root.end()) {
        source = expect_string(*it, "$.source");
    }

    const Json& attrs = expect(root, "attributes", "$");
    if (!attrs.is_array() || attrs.empty()) {
        throw SchemaError("$.attributes: expected a nonempty array");
    }
    std::vector<AttributeSchema> attributes;
    for (std::size_t j = 0; j < attrs.size(); ++j) {
        const std::string apath = "$.attributes[" + std::to_string(j) + "]";
        const Json& a = attrs[j];
        if (!a.is_object()) {
            throw SchemaError(apath + ": expected an object");
        }
        const std::string name = expect_string(expect(a, "name", apath), apath + ".name");
        for (const auto& prev : attributes) {
            if (prev.name == name) {
                throw SchemaError(apath + ".name: duplicate attribute name '" + name + "'");
            }
        }
        const Json& frame_node = expect(a, "frame", apath);
        if (!frame_node.is_array()) {
            throw SchemaError(apath + ".frame: expected an array of element names");
        }
        std::vector<std::string> elements;
        for (std::size_t e = 0; e < frame_node.size(); ++e) {
            elements.push_back(expect_string(frame_node[e], apath + ".frame[" + std::to_string(e) + "]"));
        }
        try {
            attributes.push_back({name, FrameOfDiscernment(std::move(elements))});
        } catch (const FrameError& err) {
            throw SchemaError(apath + ".frame: " + err.what());
        }
    }

    const Json& rows_node = expect(root, "rows", "$");
    if (!rows_node.is_array()) {
        throw SchemaError("$.rows: expected an array");
    }
    std::vector<EvidentialDatabase::Row> rows;
    for (std::size_t i = 0; i < rows_node.size(); ++i) {
        const std::string rpath = "$.rows[" + std::to_string(i) + "]";
        const Json& r = rows_node[i];
        if (!r.is_object()) {
            throw SchemaError(rpath + ": expected an object");
        }
        EvidentialDatabase::Row row;
        if (auto it = r.find("label"); it != r.end()) {
            row.label = expect_string(*it, rpath + ".label");
        }
        const Json& cells = expect(r, "cells", rpath);
        if (!cells.is_array() || cells.size() != attributes.size()) {
            throw SchemaError(rpath + ".cells: expected one cell per attribute (" +
                              std::to_string(attributes.size()) + ")");
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            row.cells.push_back(bba_from_json(cells[j], attributes[j].frame,
                                              rpath + ".cells[" + std::to_string(j) + "]"));
        }
        rows.push_back(std::move(row));
    }
    return EvidentialDatabase(std::move(attributes), std::move(rows), std::move(source));
}

std::string to_json_string(const EvidentialDatabase& db, int indent) {
    return db_to_json(db).dump(indent);
}

EvidentialDatabase from_json_string(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw SchemaError(std::string("$: ") + err.what());
    }
    return db_from_json(root);
}

void save_json(const EvidentialDatabase& db, const std::filesystem::path& path, int indent) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << to_json_string(db, indent) << '\n';
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

EvidentialDatabase load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

}  // namespace opmine
