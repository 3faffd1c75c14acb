#include "griesmer/witness_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "griesmer/errors.hpp"

namespace griesmer {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("witness file line " + std::to_string(line) + ": " + what);
}

}  // namespace

WitnessSet read_witness_set(std::istream& in) {
  std::string raw;
  int line = 0;
  int q = 0;
  int k = 0;
  bool have_header = false;
  std::vector<Word> prefixes;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!have_header) {
      std::istringstream header{std::string(text)};
      std::string extra;
      if (!(header >> q >> k) || (header >> extra)) fail(line, "expected header 'q k'");
      if (q < 2 || q > kMaxAlphabet) fail(line, "q must lie in [2, 256]");
      if (k < 1) fail(line, "k must be >= 1");
      have_header = true;
      continue;
    }
    Word w = [&] {
      try {
        return parse_word(text, q);
      } catch (const std::exception& e) {
        fail(line, e.what());
      }
    }();
    if (w.length() != static_cast<std::size_t>(k)) {
      fail(line, "prefix '" + std::string(text) + "' has length " + std::to_string(w.length()) + ", expected " +
                     std::to_string(k));
    }
    prefixes.push_back(std::move(w));
  }
  if (!have_header) throw ParseError("witness file: missing 'q k' header");
  if (prefixes.empty()) throw ParseError("witness file: no prefixes");
  try {
    return WitnessSet(q, k, std::move(prefixes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("witness file: ") + e.what());
  }
}

WitnessSet read_witness_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open witness file '" + path.string() + "'");
  return read_witness_set(in);
}

std::string format_witness_set(const WitnessSet& ws) {
  std::string out = std::to_string(ws.q()) + " " + std::to_string(ws.k()) + "\n";
  for (const Word& p : ws.prefixes()) out += p.str() + "\n";
  return out;
}

}  // namespace griesmer
