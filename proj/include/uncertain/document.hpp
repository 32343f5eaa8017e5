#ifndef UNCERTAIN_DOCUMENT_HPP
#define UNCERTAIN_DOCUMENT_HPP

#include <string>

#include <json.hpp>

#include "uncertain/lattice.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what_) : std::runtime_error(what_) {}
};

// Documents are {"kind": <registered kind>, "payload": {...}, "meta": ...?}.
Instance parse_document(const Json& doc);
Instance parse_document_text(const std::string& text);
Json serialize_document(const Instance& instance);

// Sorted keys, reals rendered with 12 significant digits, 2-space indent.
// emit(parse(emit(x))) == emit(x) byte for byte.
std::string canonical_dump(const Json& j);

std::string emit_document(const Instance& instance);

}  // namespace uncertain

#endif
