#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "griesmer/search.hpp"

namespace griesmer {

/// Witness-set text format:
///
///   # comment
///   q k
///   00
///   01
///   10
///
/// Blank lines and lines starting with '#' are ignored. Each prefix uses the
/// word text form. Throws ParseError with a line number on malformed input.
WitnessSet read_witness_set(std::istream& in);
WitnessSet read_witness_set(const std::filesystem::path& path);

std::string format_witness_set(const WitnessSet& ws);

}  // namespace griesmer
