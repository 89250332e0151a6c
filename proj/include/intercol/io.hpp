#pragma once

#include <string>
#include <variant>

#include "intercol/equivalence.hpp"

namespace intercol {

inline constexpr int document_format_version = 1;

// Optional provenance attached to a coloring document. Empty strings
// mean the field is absent and stays out of the serialized form.
struct DocumentMetadata {
    std::string method;
    std::string shift_vector;

    bool empty() const { return method.empty() && shift_vector.empty(); }
    bool operator==(const DocumentMetadata&) const = default;
};

// A complete edge coloring of K_{2n} as a file: format_version, n, t,
// one {a, b, color} entry per edge, optional metadata {method,
// shift_vector}.
struct ColoringDocument {
    EdgeColoring coloring;
    DocumentMetadata metadata;
};

// A labeled one-factorization as a file: format_version, n, and the
// matchings in storage order, each {label, edges}. Label 0 means free.
// The file carries no vertex ordering, so serialization normalizes the
// factorization to the identity pair ordering first and parsing reads
// labels relative to it.
struct FactorizationDocument {
    LabeledFactorization factorization;
};

// Canonical serialization: keys sorted, edges sorted by endpoints with
// a < b, two-space indent, trailing newline. Re-serializing a parsed
// document reproduces it byte for byte.
std::string serialize(const ColoringDocument& doc);
std::string serialize(const FactorizationDocument& doc);

// Parsers throw std::runtime_error naming the offending field on any
// malformed input; the returned values always satisfy their types'
// invariants.
ColoringDocument parse_coloring_document(const std::string& text);
FactorizationDocument parse_factorization_document(const std::string& text);

// Dispatches on the top-level shape: "edges" marks a coloring document,
// "matchings" a factorization document.
using Document = std::variant<ColoringDocument, FactorizationDocument>;
Document parse_document(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace intercol
