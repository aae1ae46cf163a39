#pragma once

// JSON file formats.  All integers travel as decimal strings so arbitrary
// precision survives any JSON parser.
//
//   field:   {"min_poly": ["f0", ..., "f_{m-1}"], "interval": ["p/q", "r/s"]}
//   element: ["a0", ..., "a_{m-1}"]
//   matrix:  {"field": <field object or path string>, "rows": [[elem, ...], ...]}

#include <memory>
#include <string>

#include <json.hpp>

#include "zalpha/bareiss.hpp"
#include "zalpha/field.hpp"

namespace zalpha {

using Json = nlohmann::json;

/// Decimal string -> integer; throws ParseError.
Int parse_int(const std::string& s);
/// "p/q" or "p" -> rational; throws ParseError (q = 0 included).
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& x);

std::shared_ptr<Field> field_from_json(const Json& j);
Json field_to_json(const Field& f);
std::shared_ptr<Field> load_field(const std::string& path);

Elem elem_from_json(const Field& f, const Json& j);
Json elem_to_json(const Field& f, const Elem& e);

struct LoadedMatrix {
    std::shared_ptr<Field> field;  // keeps the entries' field alive
    MatrixZA mat;
};

/// Matrix from a parsed document.  The "field" member may be a field object
/// or a path string (resolved relative to base_dir); when `field` is given
/// it takes precedence and the member becomes optional.
LoadedMatrix matrix_from_json(const Json& j, const std::string& base_dir,
                              std::shared_ptr<Field> field = nullptr);
LoadedMatrix load_matrix(const std::string& path, std::shared_ptr<Field> field = nullptr);
Json matrix_to_json(const MatrixZA& m, bool embed_field = true);

Json load_json_file(const std::string& path);

}  // namespace zalpha
