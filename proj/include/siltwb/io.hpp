#pragma once

#include <json.hpp>

#include "siltwb/derived.hpp"

namespace siltwb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Quiver input: either the text format
///   vertices n
///   arrow s t
/// (one arrow line per arrow) or JSON {"vertices": n, "arrows": [[s,t],...]}.
QuiverPtr quiver_from_text(const std::string& text);
QuiverPtr quiver_from_file(const std::string& path);
Json quiver_to_json(const Quiver& q);

/// Representation JSON: {"dims": [...], "arrows": [matrix, ...]} with one
/// row-major matrix (list of rows) per arrow id; entries are integers, or
/// strings "a/b" over the rationals.
Representation rep_from_json(QuiverPtr q, const Field& f, const Json& j);
Json rep_to_json(const Representation& r);

/// Derived object JSON: {"summands": [{"shift": s, "rep": {...}}, ...]}.
DObject dobject_from_json(QuiverPtr q, const Field& f, const Json& j);
Json dobject_to_json(const DObject& o);

/// Compact object notation: terms joined by '+', each term P<v>, S<v> or
/// I<i>-<j> (interval, type A only) with an optional shift suffix [k],
/// e.g. "P1[1]+S2".  A spec starting with '@' names a JSON file holding
/// either a derived object or a bare representation.
DObject parse_object(QuiverPtr q, const Field& f, const std::string& spec);

/// Human-readable name in the compact notation; falls back to dimension
/// vectors for non-interval summands.
std::string object_label(const DObject& o);

}  // namespace siltwb
