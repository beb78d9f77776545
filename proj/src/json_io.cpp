#include "tl3d/json_io.hpp"

#include <cstdio>

#include "tl3d/errors.hpp"

namespace tl3d {

using nlohmann::json;

nlohmann::json to_json(const RootedTree& t) {
  return json{{"brackets", to_bracket(t).str()}, {"loops", t.loops()}};
}

RootedTree tree_from_json(const json& j) {
  RootedTree t = tree_from_string(j.at("brackets").get<std::string>());
  if (j.contains("loops") && j.at("loops").get<int>() != t.loops()) {
    throw ParseError("loop count disagrees with the bracket string");
  }
  return t;
}

namespace {

// "3-" -> ground position; minus = bottom, plus = top.
int position_from_label(const std::string& label, int bottom, int top) {
  if (label.size() < 2) throw ParseError("malformed loop label: " + label);
  char side = label.back();
  int index;
  try {
    index = std::stoi(label.substr(0, label.size() - 1));
  } catch (const std::exception&) {
    throw ParseError("malformed loop label: " + label);
  }
  if (side == '-') {
    if (index < 1 || index > bottom) {
      throw ParseError("bottom loop out of range: " + label);
    }
    return index - 1;
  }
  if (side == '+') {
    if (index < 1 || index > top) {
      throw ParseError("top loop out of range: " + label);
    }
    return bottom + index - 1;
  }
  throw ParseError("loop label must end in '-' or '+': " + label);
}

std::pair<int, int> sides_from_ground(const json& ground) {
  int bottom = 0, top = 0;
  for (const auto& g : ground) {
    std::string label = g.get<std::string>();
    if (label.empty()) throw ParseError("empty loop label");
    (label.back() == '-' ? bottom : top) += 1;
  }
  return {bottom, top};
}

json blocks_to_json(const SetPartition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) {
    json jb = json::array();
    for (int pos : block) jb.push_back(p.label(pos));
    blocks.push_back(std::move(jb));
  }
  return blocks;
}

std::vector<std::vector<int>> blocks_from_json(const json& jblocks, int bottom,
                                               int top) {
  std::vector<std::vector<int>> blocks;
  for (const auto& jb : jblocks) {
    std::vector<int> block;
    for (const auto& l : jb) {
      block.push_back(
          position_from_label(l.get<std::string>(), bottom, top));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace

nlohmann::json to_json(const SetPartition& p) {
  json ground = json::array();
  for (int pos = 0; pos < p.ground_size(); ++pos) ground.push_back(p.label(pos));
  return json{{"ground", std::move(ground)}, {"blocks", blocks_to_json(p)}};
}

SetPartition partition_from_json(const json& j) {
  auto [bottom, top] = sides_from_ground(j.at("ground"));
  return SetPartition(bottom, top,
                      blocks_from_json(j.at("blocks"), bottom, top));
}

nlohmann::json to_json(const Diagram& d) {
  return json{{"source", to_bracket(d.source).str()},
              {"target", to_bracket(d.target).str()},
              {"blocks", blocks_to_json(d.partition)}};
}

Diagram diagram_from_json(const json& j) {
  RootedTree source = tree_from_string(j.at("source").get<std::string>());
  RootedTree target = tree_from_string(j.at("target").get<std::string>());
  SetPartition p(source.loops(), target.loops(),
                 blocks_from_json(j.at("blocks"), source.loops(),
                                  target.loops()));
  return Diagram(std::move(source), std::move(target), std::move(p));
}

nlohmann::json to_json(const Poly2& p) {
  json out = json::object();
  for (const auto& [key, c] : p.terms()) {
    out["q^" + std::to_string(key.first) + "*k^" +
        std::to_string(key.second)] = to_string(c);
  }
  return out;
}

Poly2 poly_from_json(const json& j) {
  Poly2 out;
  for (const auto& [key, value] : j.items()) {
    int qe, ke;
    if (std::sscanf(key.c_str(), "q^%d*k^%d", &qe, &ke) != 2) {
      throw ParseError("malformed monomial key: " + key);
    }
    out += Poly2::monomial(qe, ke,
                           rational_from_string(value.get<std::string>()));
  }
  return out;
}

nlohmann::json to_json(const LinComb& l) {
  json terms = json::array();
  for (const Term& t : l.to_terms()) {
    terms.push_back(json{{"poly", to_json(t.coeff)},
                         {"diagram", to_json(t.diagram)}});
  }
  return json{{"source", to_bracket(l.source()).str()},
              {"target", to_bracket(l.target()).str()},
              {"terms", std::move(terms)}};
}

LinComb lincomb_from_json(const json& j) {
  LinComb out(tree_from_string(j.at("source").get<std::string>()),
              tree_from_string(j.at("target").get<std::string>()));
  for (const auto& jt : j.at("terms")) {
    out.add(diagram_from_json(jt.at("diagram")),
            poly_from_json(jt.at("poly")));
  }
  return out;
}

nlohmann::json to_json(const GramMatrix& m) {
  json basis = json::array();
  for (const Diagram& d : m.basis()) basis.push_back(to_json(d));
  json entries = json::array();
  json flags = json::array();
  for (int i = 0; i < m.dimension(); ++i) {
    json row = json::array();
    json frow = json::array();
    for (int jcol = 0; jcol < m.dimension(); ++jcol) {
      const GramEntry& e = m.entry(i, jcol);
      row.push_back(e.flagged ? "flagged" : e.value.to_string());
      frow.push_back(e.flagged);
    }
    entries.push_back(std::move(row));
    flags.push_back(std::move(frow));
  }
  return json{{"object", to_bracket(m.object()).str()},
              {"section", to_bracket(m.section()).str()},
              {"basis", std::move(basis)},
              {"entries", std::move(entries)},
              {"flags", std::move(flags)}};
}

nlohmann::json to_json(const HasseDiagram& h) {
  json nodes = json::array();
  for (const RootedTree& t : h.nodes) nodes.push_back(to_bracket(t).str());
  json covers = json::array();
  for (const auto& [lower, upper] : h.covers) {
    covers.push_back(json::array({lower, upper}));
  }
  return json{{"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

}  // namespace tl3d
