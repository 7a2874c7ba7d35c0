#include "flagtrans/incidence.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace flagtrans::design {

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::size_t PointSet::count_and(const PointSet& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

IncidenceStructure::IncidenceStructure(std::size_t v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
  for (auto& blk : blocks_) {
    if (blk.empty()) throw std::invalid_argument("empty block");
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw std::invalid_argument("block repeats a point");
    if (blk.back() >= v) throw std::invalid_argument("block point " + std::to_string(blk.back()) + " out of range");
  }
  std::sort(blocks_.begin(), blocks_.end());
  block_sets_.assign(blocks_.size(), PointSet(v));
  point_rows_.assign(v, PointSet(blocks_.size()));
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (auto x : blocks_[i]) {
      block_sets_[i].set(x);
      point_rows_[x].set(i);
    }
}

std::vector<std::size_t> IncidenceStructure::block_indices_through(Point x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (block_sets_[i].test(x)) out.push_back(i);
  return out;
}

IncidenceStructure IncidenceStructure::image(const Perm& g) const {
  if (g.degree() != v_) throw std::invalid_argument("permutation degree differs from the point count");
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const auto& blk : blocks_) {
    Block img;
    img.reserve(blk.size());
    for (auto x : blk) img.push_back(g[x]);
    out.push_back(std::move(img));
  }
  return IncidenceStructure(v_, std::move(out));
}

std::string to_json(const IncidenceStructure& d, int indent) {
  nlohmann::ordered_json j;
  j["v"] = d.v();
  j["k"] = d.b() ? d.block(0).size() : 0;
  j["blocks"] = d.blocks();
  return j.dump(indent);
}

IncidenceStructure from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("design file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
    throw std::invalid_argument("design JSON needs fields \"v\" and \"blocks\"");
  try {
    auto v = j.at("v").get<std::size_t>();
    auto blocks = j.at("blocks").get<std::vector<Block>>();
    IncidenceStructure d(v, std::move(blocks));
    if (j.contains("k")) {
      auto k = j.at("k").get<std::size_t>();
      for (const auto& blk : d.blocks())
        if (blk.size() != k) throw std::invalid_argument("block size differs from the declared k");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("design JSON has the wrong shape: ") + e.what());
  }
}

std::string to_text(const IncidenceStructure& d) {
  std::ostringstream os;
  os << d.v() << ' ' << d.b() << '\n';
  for (const auto& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace flagtrans::design
