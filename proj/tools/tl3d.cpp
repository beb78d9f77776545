// tl3d: exact computation in the diagram categories over rooted-tree
// objects: object enumeration, hom-set listings, sh/h composition with
// polynomial scalars, Gram matrix reports, and the sub/fold poset.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tl3d/checks.hpp"
#include "tl3d/errors.hpp"
#include "tl3d/json_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitCheckFailed = 4;

struct Output {
  std::string format = "text";
  std::string out_dir;

  // Prints to stdout, and into out_dir/<name> when --out is given.
  void deliver(const std::string& name, const std::string& payload) const {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    if (out_dir.empty()) return;
    fs::create_directories(out_dir);
    fs::path file = fs::path(out_dir) / name;
    std::ofstream stream(file);
    stream << payload;
    if (!payload.empty() && payload.back() != '\n') stream << "\n";
    std::cerr << "wrote " << file.string() << "\n";
  }
};

std::string extension(const std::string& format) {
  if (format == "json") return ".json";
  if (format == "dot") return ".dot";
  return ".txt";
}

tl3d::RootedTree tree_argument(const std::string& text) {
  if (text == "∅" || text == "empty") return tl3d::RootedTree();
  return tl3d::tree_from_string(text);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tl3d::ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw tl3d::ParseError(std::string("malformed JSON in ") + path + ": " +
                           e.what());
  }
  return j;
}

int cmd_objects(int max_loops, const Output& output) {
  std::ostringstream text;
  json jout = json::array();
  for (int n = 0; n <= max_loops; ++n) {
    tl3d::BigInt count = tl3d::count_trees(n);
    text << "L_" << n << " = " << tl3d::to_string(count) << ":";
    json jtrees = json::array();
    for (const tl3d::RootedTree& t : tl3d::enumerate_trees(n)) {
      text << " " << t.display();
      jtrees.push_back(tl3d::to_bracket(t).str());
    }
    text << "\n";
    jout.push_back(json{{"loops", n},
                        {"count", tl3d::to_string(count)},
                        {"trees", std::move(jtrees)}});
  }
  output.deliver("objects" + extension(output.format),
                 output.format == "json" ? jout.dump(2) : text.str());
  return 0;
}

int cmd_homs(const std::string& f_text, const std::string& fp_text,
             const Output& output) {
  tl3d::RootedTree f = tree_argument(f_text);
  tl3d::RootedTree fp = tree_argument(fp_text);
  std::vector<tl3d::Diagram> homs = tl3d::enumerate_homs(f, fp);
  std::map<int, std::vector<const tl3d::Diagram*>> by_prop;
  for (const tl3d::Diagram& d : homs) {
    by_prop[d.propagating_number()].push_back(&d);
  }
  std::ostringstream text;
  text << "hom(" << f.display() << ", " << fp.display() << "): "
       << homs.size() << " diagrams\n";
  json jgroups = json::array();
  for (const auto& [prop, group] : by_prop) {
    text << "# propagating " << prop << " (" << group.size() << ")\n";
    json jdiagrams = json::array();
    for (const tl3d::Diagram* d : group) {
      text << "  " << d->to_string() << "\n";
      jdiagrams.push_back(tl3d::to_json(*d));
    }
    jgroups.push_back(json{{"propagating", prop},
                           {"diagrams", std::move(jdiagrams)}});
  }
  json jout{{"source", tl3d::to_bracket(f).str()},
            {"target", tl3d::to_bracket(fp).str()},
            {"count", homs.size()},
            {"groups", std::move(jgroups)}};
  output.deliver("homs" + extension(output.format),
                 output.format == "json" ? jout.dump(2) : text.str());
  return 0;
}

int cmd_compose(const std::string& file_a, const std::string& file_b,
                const std::string& mode, const Output& output) {
  tl3d::Diagram a = tl3d::diagram_from_json(load_json(file_a));
  tl3d::Diagram b = tl3d::diagram_from_json(load_json(file_b));
  tl3d::LinComb result = mode == "h"
                             ? tl3d::compose_h(a, b)
                             : [&] {
                                 tl3d::Term t = tl3d::compose_sh(a, b);
                                 return tl3d::LinComb::single(t.diagram,
                                                              t.coeff);
                               }();
  output.deliver("compose" + extension(output.format),
                 output.format == "json" ? tl3d::to_json(result).dump(2)
                                         : result.to_string());
  return 0;
}

int cmd_gram(const std::string& f_text, const Output& output) {
  tl3d::RootedTree f = tree_argument(f_text);
  std::ostringstream text;
  json jsections = json::array();
  tl3d::Poly2 combined = tl3d::Poly2::one();
  bool any_flagged = false;
  for (int n = 0; n <= f.loops(); ++n) {
    for (const tl3d::RootedTree& p : tl3d::enumerate_trees(n)) {
      tl3d::GramMatrix m = tl3d::gram_matrix(f, p);
      if (m.dimension() == 0) continue;
      text << "section " << p.display() << ": dimension " << m.dimension()
           << "\n";
      for (const tl3d::Diagram& h : m.basis()) {
        text << "  basis " << h.to_string() << "\n";
      }
      for (int i = 0; i < m.dimension(); ++i) {
        text << "  [";
        for (int j = 0; j < m.dimension(); ++j) {
          const tl3d::GramEntry& e = m.entry(i, j);
          text << (j ? ", " : " ")
               << (e.flagged ? std::string("FLAGGED") : e.value.to_string());
        }
        text << " ]\n";
      }
      if (m.has_flagged()) {
        any_flagged = true;
        text << "  determinant: undefined (flagged entries: composite is "
                "full but not the identity)\n";
      } else {
        tl3d::Poly2 det = tl3d::gram_det(m);
        combined *= det;
        text << "  determinant: " << det.to_string() << " = "
             << tl3d::factor_scalar(det).to_string() << "\n";
      }
      jsections.push_back(tl3d::to_json(m));
    }
  }
  std::ostringstream locus;
  if (any_flagged) {
    locus << "combined locus: undefined (some sections flagged)";
  } else {
    tl3d::FactoredScalar fac = tl3d::factor_scalar(combined);
    locus << "combined singular locus: ";
    bool wrote = false;
    if (fac.q_power > 0) {
      locus << "q";
      wrote = true;
    }
    if (fac.k_power > 0) {
      locus << (wrote ? " * " : "") << "k";
      wrote = true;
    }
    if (fac.qk_minus_one_power > 0) {
      locus << (wrote ? " * " : "") << "(q*k - 1)";
      wrote = true;
    }
    if (!fac.remainder.is_one()) {
      locus << (wrote ? " * " : "") << "(" << fac.remainder.to_string()
            << ")";
      wrote = true;
    }
    if (!wrote) locus << "1 (never singular)";
    else locus << " = 0";
  }
  text << locus.str() << "\n";
  json jout{{"object", tl3d::to_bracket(f).str()},
            {"sections", std::move(jsections)},
            {"locus", locus.str()}};
  output.deliver("gram" + extension(output.format),
                 output.format == "json" ? jout.dump(2) : text.str());
  return 0;
}

int cmd_hasse(int max_loops, const Output& output) {
  tl3d::HasseDiagram h = tl3d::hasse(max_loops);
  std::string payload;
  if (output.format == "json") {
    payload = tl3d::to_json(h).dump(2);
  } else if (output.format == "dot") {
    payload = tl3d::to_dot(h);
  } else {
    std::ostringstream text;
    text << h.nodes.size() << " nodes, " << h.covers.size() << " covers\n";
    for (const auto& [lo, up] : h.covers) {
      text << "  " << h.nodes[lo].display() << " -> "
           << h.nodes[up].display() << "\n";
    }
    payload = text.str();
  }
  output.deliver("hasse" + extension(output.format), payload);
  return 0;
}

int cmd_check(const std::string& suite, std::uint64_t seed,
              const Output& output) {
  if (!tl3d::is_suite_name(suite)) {
    std::ostringstream known;
    for (const std::string& name : tl3d::suite_names()) known << " " << name;
    std::cerr << "unknown suite '" << suite << "'; available:" << known.str()
              << "\n";
    return kExitUsage;
  }
  tl3d::SuiteResult r = tl3d::run_suite(suite, seed);
  std::ostringstream text;
  text << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.checks
       << " checks, " << r.seconds << "s)";
  if (!r.detail.empty()) text << " " << r.detail;
  text << "\n";
  output.deliver("check" + extension(output.format), text.str());
  return r.passed ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact diagram-category computations over rooted-tree "
               "objects"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--out", output.out_dir, "directory for output files");

  int objects_max = 4;
  auto* objects =
      app.add_subcommand("objects", "count and list rooted trees by loops");
  objects->add_option("max_loops", objects_max, "largest loop count")
      ->check(CLI::NonNegativeNumber);
  objects->add_option("--max", objects_max, "largest loop count")
      ->check(CLI::NonNegativeNumber);

  std::string homs_f, homs_fp;
  auto* homs = app.add_subcommand(
      "homs", "enumerate a hom set grouped by propagating number");
  homs->add_option("source", homs_f, "bottom tree bracket string");
  homs->add_option("target", homs_fp, "top tree bracket string");

  std::string comp_a, comp_b, comp_mode = "sh";
  auto* comp =
      app.add_subcommand("compose", "compose two diagrams from JSON files");
  comp->add_option("a", comp_a, "lower diagram JSON file")->required();
  comp->add_option("b", comp_b, "upper diagram JSON file")->required();
  comp->add_option("--mode", comp_mode, "composition flavour")
      ->check(CLI::IsMember({"sh", "h"}))
      ->capture_default_str();

  std::string gram_f;
  auto* gram = app.add_subcommand(
      "gram", "Gram matrices, determinants and the singular locus");
  gram->add_option("object", gram_f, "tree bracket string");

  int hasse_max = 3;
  auto* hasse_cmd =
      app.add_subcommand("hasse", "sub/fold order Hasse diagram");
  hasse_cmd->add_option("max_loops", hasse_max, "largest loop count")
      ->check(CLI::NonNegativeNumber);
  hasse_cmd->add_option("--max", hasse_max, "largest loop count")
      ->check(CLI::NonNegativeNumber);

  std::string check_suite = "all";
  std::uint64_t check_seed = 1;
  auto* check =
      app.add_subcommand("check", "run a named property suite");
  check->add_option("suite", check_suite, "suite name (see --help)");
  check->add_option("--seed", check_seed, "seed for randomised suites")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (objects->parsed()) return cmd_objects(objects_max, output);
    if (homs->parsed()) return cmd_homs(homs_f, homs_fp, output);
    if (comp->parsed()) return cmd_compose(comp_a, comp_b, comp_mode, output);
    if (gram->parsed()) return cmd_gram(gram_f, output);
    if (hasse_cmd->parsed()) return cmd_hasse(hasse_max, output);
    if (check->parsed()) return cmd_check(check_suite, check_seed, output);
  } catch (const tl3d::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const tl3d::ObjectMismatch& e) {
    std::cerr << "interface mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const tl3d::FlaggedEntry& e) {
    std::cerr << "flagged: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const tl3d::CheckViolation& e) {
    std::cerr << "internal check violation: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
