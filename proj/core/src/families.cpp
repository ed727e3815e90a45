#include "domino/families.hpp"

#include <algorithm>
#include <string>

#include "domino/errors.hpp"

namespace domino {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::vector<std::vector<int>> path_entries(int n) {
  std::vector<std::vector<int>> entries(static_cast<size_t>(n));
  for (int i = 2; i <= n; ++i) entries[static_cast<size_t>(i - 1)] = {i - 1};
  return entries;
}

}  // namespace

ArrivalSequence path_standard(int n) {
  require(n >= 1, "path: n >= 1");
  return ArrivalSequence(path_entries(n), "path-" + std::to_string(n));
}

ArrivalSequence star(int n, CenterPos center) {
  require(n >= 2, "star: n >= 2");
  std::vector<std::vector<int>> entries(static_cast<size_t>(n));
  std::string tag;
  switch (center) {
    case CenterPos::First:
      tag = "first";
      for (int i = 2; i <= n; ++i) entries[static_cast<size_t>(i - 1)] = {1};
      break;
    case CenterPos::Second:
      tag = "second";
      entries[1] = {1};
      for (int i = 3; i <= n; ++i) entries[static_cast<size_t>(i - 1)] = {2};
      break;
    case CenterPos::Last: {
      tag = "last";
      std::vector<int> all;
      for (int i = 1; i < n; ++i) all.push_back(i);
      entries[static_cast<size_t>(n - 1)] = std::move(all);
      break;
    }
  }
  return ArrivalSequence(std::move(entries), "star-" + std::to_string(n) + "-" + tag);
}

ArrivalSequence disjoint_stars(int copies, int delta) {
  require(copies >= 1, "disjoint-stars: copies >= 1");
  require(delta >= 1, "disjoint-stars: delta >= 1");
  std::vector<std::vector<int>> entries;
  for (int c = 0; c < copies; ++c) {
    int base = c * (delta + 1);  // leaves base+1..base+delta, center base+delta+1
    for (int l = 0; l < delta; ++l) entries.emplace_back();
    std::vector<int> leaves;
    for (int l = 1; l <= delta; ++l) leaves.push_back(base + l);
    entries.push_back(std::move(leaves));
  }
  return ArrivalSequence(std::move(entries), "disjoint-stars-" + std::to_string(copies) + "x" +
                                                std::to_string(delta));
}

ArrivalSequence fan(int delta) {
  require(delta >= 2, "fan: delta >= 2");
  auto entries = path_entries(delta);
  std::vector<int> apex;
  for (int i = 1; i <= delta; ++i) apex.push_back(i);
  entries.push_back(std::move(apex));
  return ArrivalSequence(std::move(entries), "fan-" + std::to_string(delta));
}

ArrivalSequence alternating_fan(int k, int delta) {
  require(k >= 1, "alternating-fan: k >= 1");
  require(delta >= 4, "alternating-fan: delta >= 4");
  std::vector<std::vector<int>> entries;
  int shared = 0;  // last path vertex of the previous fan
  for (int f = 0; f < k; ++f) {
    std::vector<int> path;  // this fan's path vertices, in order
    if (shared != 0) path.push_back(shared);
    while (static_cast<int>(path.size()) < delta) {
      int before = path.empty() ? 0 : path.back();
      entries.push_back(before == 0 ? std::vector<int>{} : std::vector<int>{before});
      path.push_back(static_cast<int>(entries.size()));
    }
    entries.push_back(path);  // apex adjacent to the whole path
    shared = path.back();
  }
  return ArrivalSequence(std::move(entries), "alternating-fan-" + std::to_string(k) + "x" +
                                                std::to_string(delta));
}

ArrivalSequence modular_bridge(int k, int delta) {
  require(k >= 2 && k % 2 == 0, "modular-bridge: k even and >= 2");
  require(delta >= 2, "modular-bridge: delta >= 2");
  int section = delta - 1;
  int m = k * section;
  auto entries = path_entries(m);
  for (int c = 1; c <= k; ++c) {
    std::vector<int> nbrs;
    for (int p = (c - 1) * section + 1; p <= c * section; ++p) nbrs.push_back(p);
    if (c % 2 == 0) nbrs.push_back(m + c - 1);  // matching partner u_{c-1}
    entries.push_back(std::move(nbrs));
  }
  return ArrivalSequence(std::move(entries), "modular-bridge-" + std::to_string(k) + "x" +
                                                std::to_string(delta));
}

ArrivalSequence bridge(int k, int delta) {
  require(k >= 2 && k % 2 == 0, "bridge: k even and >= 2");
  require(delta >= 3, "bridge: delta >= 3");
  ArrivalSequence seq = modular_bridge(k, delta - 1);
  int m = k * (delta - 2);
  // Join consecutive chord pairs: u_{2i} -- u_{2i+1}.
  for (int i = 1; i <= k / 2 - 1; ++i) {
    int u_even = m + 2 * i;
    int u_next = m + 2 * i + 1;
    seq.arrivals[static_cast<size_t>(u_next - 1)].push_back(u_even);
  }
  seq.name = "bridge-" + std::to_string(k) + "x" + std::to_string(delta);
  seq.validate();
  return seq;
}

ArrivalSequence rotor(int delta) {
  require(delta >= 2 && delta % 2 == 0, "rotor: delta even and >= 2");
  std::vector<std::vector<int>> entries;
  for (int p = 1; p <= delta; ++p) {
    if (p % 2 == 1)
      entries.emplace_back();           // first of a matched pair
    else
      entries.push_back({p - 1});       // completes the pair
  }
  std::vector<int> center;
  for (int p = 1; p <= delta; ++p) center.push_back(p);
  entries.push_back(std::move(center));
  return ArrivalSequence(std::move(entries), "rotor-" + std::to_string(delta));
}

ArrivalSequence two_sided_fan(int n) {
  require(n >= 4, "two-sided-fan: n >= 4");
  int m = n - 2;
  auto entries = path_entries(m);
  std::vector<int> evens, odds;
  for (int p = 1; p <= m; ++p) (p % 2 == 0 ? evens : odds).push_back(p);
  entries.push_back(evens);            // apex over even positions
  odds.push_back(m + 1);               // apex over odd positions, joined to the other apex
  entries.push_back(std::move(odds));
  return ArrivalSequence(std::move(entries), "two-sided-fan-" + std::to_string(n));
}

ArrivalSequence pendant_path(int m) {
  require(m >= 2 && m % 6 == 2, "pendant-path: m = 2 (mod 6)");
  auto entries = path_entries(m);
  std::vector<int> hosts;
  for (int v = 2; v <= m; v += 3) hosts.push_back(v);
  // m pendants split as evenly as possible, grouped by host in host order.
  int h = static_cast<int>(hosts.size());
  for (int idx = 0; idx < h; ++idx) {
    int share = m / h + (idx < m % h ? 1 : 0);
    for (int p = 0; p < share; ++p) entries.push_back({hosts[static_cast<size_t>(idx)]});
  }
  return ArrivalSequence(std::move(entries), "pendant-path-" + std::to_string(m));
}

ArrivalSequence ids_pendant_path(int n_path, int delta) {
  require(n_path >= 3, "ids-pendant-path: n_path >= 3");
  require(delta >= 3, "ids-pendant-path: delta >= 3");
  auto entries = path_entries(n_path);
  for (int v = 2; v <= n_path; v += 2)
    for (int p = 0; p < delta - 2; ++p) entries.push_back({v});
  return ArrivalSequence(std::move(entries), "ids-pendant-path-" + std::to_string(n_path) + "x" +
                                                std::to_string(delta));
}

namespace {

int int_param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw PreconditionError("family `" + spec.family + "` needs parameter `" + key + "`");
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw PreconditionError("parameter `" + key + "` is not an integer: " + it->second);
  }
}

std::string normalized(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

}  // namespace

ArrivalSequence generate(const FamilySpec& spec) {
  std::string family = normalized(spec.family);
  if (family == "path") return path_standard(int_param(spec, "n"));
  if (family == "star") {
    auto it = spec.params.find("center");
    std::string pos = it == spec.params.end() ? "first" : it->second;
    CenterPos c;
    if (pos == "first") c = CenterPos::First;
    else if (pos == "second") c = CenterPos::Second;
    else if (pos == "last") c = CenterPos::Last;
    else throw PreconditionError("star: center must be first|second|last");
    return star(int_param(spec, "n"), c);
  }
  if (family == "disjoint-stars") return disjoint_stars(int_param(spec, "copies"), int_param(spec, "delta"));
  if (family == "fan") return fan(int_param(spec, "delta"));
  if (family == "alternating-fan") return alternating_fan(int_param(spec, "k"), int_param(spec, "delta"));
  if (family == "modular-bridge") return modular_bridge(int_param(spec, "k"), int_param(spec, "delta"));
  if (family == "bridge") return bridge(int_param(spec, "k"), int_param(spec, "delta"));
  if (family == "rotor") return rotor(int_param(spec, "delta"));
  if (family == "two-sided-fan") return two_sided_fan(int_param(spec, "n"));
  if (family == "pendant-path") return pendant_path(int_param(spec, "m"));
  if (family == "ids-pendant-path") return ids_pendant_path(int_param(spec, "npath"), int_param(spec, "delta"));
  throw PreconditionError("unknown family `" + spec.family + "`");
}

}  // namespace domino
