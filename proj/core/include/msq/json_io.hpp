#pragma once

#include <msq/lie.hpp>
#include <msq/triples.hpp>

#include <string>

namespace msq {

// Bracket table as JSON: {"name", "dimension", "basis": [{"id", "label"}],
// "bracket": [{"i", "j", "out": [[k, "num/den"], ...]}, ...]} with i < j
// and only nonempty brackets listed. Fixed key order and canonical
// rational strings keep the output byte-identical across runs.
std::string to_json(const StructureConstants& sc);

// Triple systems use the same envelope, with the nonzero form entries
// ("i", "j", "c", i < j) and the nonempty product triples
// ("x", "y", "z", "out") in place of the bracket list.
std::string to_json(const SymplecticTripleSystem& t);
std::string to_json(const FreudenthalTripleSystem& t);

// Writes content to path, throwing std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace msq
