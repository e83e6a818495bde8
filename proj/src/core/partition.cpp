#include "partition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"

namespace moddiag {

Partition Partition::discrete(const ModularSystem& sys) {
  Partition p;
  for (const auto& name : sys.names()) p.blocks.push_back({name});
  return p;
}

Partition Partition::coarsest(const ModularSystem& sys) {
  Partition p;
  p.blocks.push_back(sys.names());
  return p;
}

int Partition::block_of(const std::string& module) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), module) != blocks[b].end())
      return static_cast<int>(b);
  return -1;
}

Partition Partition::canonical(const ModularSystem& sys) const {
  auto order = [&](const std::string& name) {
    int i = sys.index_of(name);
    return i < 0 ? sys.size() : i;  // unknown names sort last, validation catches them
  };
  Partition out = *this;
  for (auto& block : out.blocks)
    std::sort(block.begin(), block.end(),
              [&](const auto& a, const auto& b) { return order(a) < order(b); });
  std::sort(out.blocks.begin(), out.blocks.end(), [&](const auto& a, const auto& b) {
    int oa = a.empty() ? sys.size() : order(a.front());
    int ob = b.empty() ? sys.size() : order(b.front());
    return oa < ob;
  });
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& block : blocks) {
    if (!out.empty()) out += "|";
    out += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += block[i];
    }
    out += "}";
  }
  return out;
}

ValidationReport validate_partition(const Partition& p, const ModularSystem& sys) {
  ValidationReport rep;
  std::map<std::string, int> hits;
  for (const auto& block : p.blocks) {
    if (block.empty()) rep.violations.push_back("empty block");
    for (const auto& name : block) {
      if (sys.index_of(name) < 0)
        rep.violations.push_back("unknown module '" + name + "'");
      else
        hits[name]++;
    }
  }
  for (const auto& name : sys.names()) {
    auto it = hits.find(name);
    if (it == hits.end())
      rep.violations.push_back("module '" + name + "' is not covered");
    else if (it->second > 1)
      rep.violations.push_back("module '" + name + "' appears in more than one block");
  }
  return rep;
}

Partition parse_partition(const std::string& text) {
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  Partition p;
  std::vector<std::string> block;
  std::string cur;
  auto flush_name = [&]() {
    std::string name = trim(cur);
    cur.clear();
    if (!name.empty()) block.push_back(name);
  };
  for (char ch : text) {
    if (ch == ',') {
      flush_name();
    } else if (ch == '|') {
      flush_name();
      p.blocks.push_back(block);
      block.clear();
    } else if (ch != '{' && ch != '}') {
      cur += ch;
    }
  }
  flush_name();
  p.blocks.push_back(block);
  return p;
}

}  // namespace moddiag
