#include "pancake/formats.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "pancake/error.hpp"

namespace pancake {

using ordered_json = nlohmann::ordered_json;

std::string format_permutation(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s[i]);
  }
  out += '\n';
  return out;
}

Sequence parse_permutation(std::string_view text) {
  std::vector<long long> values;
  std::size_t i = 0;
  auto separator = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']';
  };
  while (i < text.size()) {
    if (separator(text[i])) {
      ++i;
      continue;
    }
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    const auto used = static_cast<std::size_t>(ptr - (text.data() + i));
    if (ec != std::errc{} || used == 0 || (i + used < text.size() && !separator(text[i + used]))) {
      throw Error(Errc::NotAPermutation, "cannot read '" + std::string(text) + "' as integers");
    }
    values.push_back(v);
    i += used;
  }
  return make_sequence(values);
}

std::vector<Sequence> parse_permutations(std::string_view text) {
  std::vector<Sequence> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_permutation(line));
  }
  return out;
}

std::string trace_json(const FlipPath& path, const SearchStats& stats, int indent) {
  ordered_json j;
  j["source"] = path.source.block();
  j["flips"] = path.flips;
  j["efficient"] = path.is_efficient();
  j["db_trace"] = path.db_trace();
  j["stats"] = {{"nodes", stats.nodes_expanded}, {"seconds", stats.elapsed_seconds}};
  return j.dump(indent) + '\n';
}

std::string layout_json(const ReductionInstance& inst, int indent) {
  ordered_json j;
  j["n"] = inst.n();
  j["db"] = breakpoint_count(inst.s_phi);
  ordered_json zones = ordered_json::array();
  for (const Zone& z : inst.layout) {
    ordered_json zone;
    zone["role"] = z.role;
    zone["index"] = z.index;
    zone["block"] = z.block;
    zone["positions"] = {z.start, z.end};
    zones.push_back(std::move(zone));
  }
  j["zones"] = std::move(zones);
  return j.dump(indent) + '\n';
}

}  // namespace pancake
