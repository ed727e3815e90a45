#include "domino/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "domino/errors.hpp"

namespace domino {
namespace {

// Strips an inline comment and surrounding whitespace.
std::string clean(const std::string& raw) {
  std::string s = raw;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// A line whose first non-blank character is '#' is a pure comment and does
// not count as an entry; a blank line does (empty neighbor list).
bool is_comment_line(const std::string& raw) {
  auto first = raw.find_first_not_of(" \t\r");
  return first != std::string::npos && raw[first] == '#';
}

}  // namespace

ArrivalSequence parse_instance(std::istream& in, std::string name) {
  std::string line;
  std::string header;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (is_comment_line(line)) continue;
    header = clean(line);
    if (header.empty()) continue;  // leading blank lines before the header
    have_header = true;
    break;
  }
  if (!have_header) throw ValidationError("missing `n <count>` header line");

  std::istringstream hs(header);
  std::string tag;
  long long count = -1;
  hs >> tag >> count;
  if (tag != "n" || count < 0 || !hs.eof())
    throw ValidationError("bad header line: expected `n <count>`, got `" + header + "`");

  std::vector<std::vector<int>> entries;
  entries.reserve(static_cast<size_t>(count));
  while (static_cast<long long>(entries.size()) < count) {
    if (!std::getline(in, line)) {
      throw ValidationError("expected " + std::to_string(count) + " entries, found only " +
                            std::to_string(entries.size()));
    }
    if (is_comment_line(line)) continue;
    std::istringstream ls(clean(line));
    std::vector<int> nbrs;
    long long v;
    while (ls >> v) nbrs.push_back(static_cast<int>(v));
    if (!ls.eof())
      throw ValidationError("entry " + std::to_string(entries.size() + 1) +
                            " contains a non-integer token");
    entries.push_back(std::move(nbrs));
  }

  ArrivalSequence seq(std::move(entries), std::move(name));
  return seq;
}

ArrivalSequence parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::string name = path;
  if (auto pos = name.find_last_of("/\\"); pos != std::string::npos) name.erase(0, pos + 1);
  if (auto pos = name.rfind('.'); pos != std::string::npos && pos > 0) name.erase(pos);
  return parse_instance(in, name);
}

std::string serialize_instance(const ArrivalSequence& seq) {
  std::ostringstream out;
  out << "n " << seq.n << "\n";
  for (const auto& nbrs : seq.arrivals) {
    for (size_t k = 0; k < nbrs.size(); ++k) {
      if (k > 0) out << ' ';
      out << nbrs[k];
    }
    out << "\n";
  }
  return out.str();
}

void write_instance_file(const ArrivalSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write instance file: " + path);
  out << serialize_instance(seq);
}

}  // namespace domino
