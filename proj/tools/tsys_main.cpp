// tsys: enumerate, classify and convert transfer systems, premodel
// structures, noncrossing partitions, tricolored trees and stacked
// triangulations on finite lattices.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsys/tsys.hpp"

namespace {

using namespace tsys;

struct Options {
  int chain = -1;
  std::string lattice_file;
  std::string kind = "all";
  std::string objects;
  std::string format;
  std::string in_path;
  std::string out_path;
  std::string legend_path;
  std::string convert_to;
  int max_n = 8;
};

LatticePtr pick_lattice(const Options& opt) {
  if (opt.chain >= 0 && !opt.lattice_file.empty())
    throw Error("--chain and --lattice are mutually exclusive");
  if (opt.chain >= 0) return FiniteLattice::chain(opt.chain);
  if (!opt.lattice_file.empty()) {
    std::ifstream in(opt.lattice_file);
    if (!in) throw Error("cannot open lattice file " + opt.lattice_file);
    Json j;
    in >> j;
    return lattice_from_json(j);
  }
  throw Error("a lattice is required: pass --chain N or --lattice FILE");
}

Json read_input_json(const Options& opt) {
  if (!opt.in_path.empty()) {
    std::ifstream in(opt.in_path);
    if (!in) throw Error("cannot open input file " + opt.in_path);
    Json j;
    in >> j;
    return j;
  }
  Json j;
  std::cin >> j;
  return j;
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw Error("cannot open output file " + opt.out_path);
  return file;
}

PairKind parse_kind(const std::string& s) {
  if (s == "premodel") return PairKind::premodel;
  if (s == "cc") return PairKind::composition_closed;
  if (s == "model") return PairKind::model;
  if (s == "compatible") return PairKind::compatible;
  throw Error("unknown kind \"" + s + "\"");
}

const char* kind_name(PairKind k) {
  switch (k) {
    case PairKind::premodel:
      return "premodel";
    case PairKind::composition_closed:
      return "cc";
    case PairKind::model:
      return "model";
    case PairKind::compatible:
      return "compatible";
  }
  return "?";
}

std::vector<PairKind> selected_kinds(const std::string& kind) {
  if (kind == "all")
    return {PairKind::premodel, PairKind::composition_closed, PairKind::model,
            PairKind::compatible};
  return {parse_kind(kind)};
}

int run_enumerate(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const LatticePtr L = pick_lattice(opt);
  std::string objects = opt.objects;
  if (objects.empty()) objects = opt.kind == "all" ? "transfer" : "pairs";

  if (objects == "transfer") {
    for (const TransferSystem& R : enumerate_transfer_systems(L))
      out << transfer_to_json(R).dump() << "\n";
  } else if (objects == "pairs") {
    const PairKind k =
        opt.kind == "all" ? PairKind::premodel : parse_kind(opt.kind);
    for (const StructurePair& p : enumerate_structures(L, k))
      out << pair_to_json(p).dump() << "\n";
  } else if (objects == "partitions") {
    for (const TransferSystem& R : enumerate_transfer_systems(L))
      out << partition_to_json(partition_of(R)).dump() << "\n";
  } else if (objects == "trees") {
    if (!L->is_chain())
      throw NotAChain("tricolored trees enumerate over chains only");
    for (const TricoloredTree& t : enumerate_trees(L->size()))
      out << tree_to_json(t).dump() << "\n";
  } else {
    throw Error("unknown --objects \"" + objects +
                "\" (transfer|pairs|partitions|trees)");
  }
  return 0;
}

int run_count(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const LatticePtr L = pick_lattice(opt);
  const bool chain = L->is_chain();
  const long long n = L->size() - 1;
  const auto systems = enumerate_transfer_systems(L);

  bool mismatch = false;
  out << "kind        enumerated  closed_form  verdict\n";
  for (PairKind k : selected_kinds(opt.kind)) {
    const std::size_t enumerated = enumerate_structures(systems, k).size();
    std::string closed = "-";
    std::string verdict = "-";
    if (chain) {
      const BigInt c = closed_form_count(n, k);
      closed = c.str();
      verdict = BigInt(enumerated) == c ? "MATCH" : "MISMATCH";
      if (verdict == "MISMATCH") mismatch = true;
    }
    char line[128];
    std::snprintf(line, sizeof line, "%-12s%-12zu%-13s%s\n", kind_name(k),
                  enumerated, closed.c_str(), verdict.c_str());
    out << line;
  }
  return mismatch ? 1 : 0;
}

int run_classify(const Options& opt) {
  const Json j = read_input_json(opt);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  std::optional<StructurePair> pair;
  try {
    pair = pair_from_json(j);
  } catch (const NotAPremodelPair&) {
    // classify reports rather than rejects a non-premodel input pair
  }
  if (!pair) {
    if (opt.format == "json")
      out << Json{{"premodel", false},
                  {"cc", false},
                  {"model", false},
                  {"compatible", false}}
                 .dump()
          << "\n";
    else
      out << "premodel=false\ncc=false\nmodel=false\ncompatible=false\n";
    return 0;
  }
  if (opt.format == "json") {
    out << pair_to_json(*pair).dump() << "\n";
    return 0;
  }
  out << "premodel=true\n";
  out << "cc=" << (is_cc_pair(*pair) ? "true" : "false") << "\n";
  out << "model=" << (is_model_pair(*pair) ? "true" : "false") << "\n";
  out << "compatible=" << (is_compatible_pair(*pair) ? "true" : "false")
      << "\n";
  return 0;
}

enum class Repr { transfer, partition, pair, tree, triangulation };

Repr detect_repr(const Json& j) {
  if (!j.is_object()) throw Error("input must be a JSON object");
  if (j.contains("insertions")) return Repr::triangulation;
  if (j.contains("edges") && j.contains("m")) return Repr::tree;
  if (j.contains("blocks")) return Repr::partition;
  if (j.contains("R") && j.contains("R_prime")) return Repr::pair;
  if (j.contains("pairs")) return Repr::transfer;
  throw Error("unrecognized input object");
}

int run_convert(const Options& opt) {
  const Json j = read_input_json(opt);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const Repr from = detect_repr(j);

  auto as_tree = [&]() -> TricoloredTree {
    switch (from) {
      case Repr::tree:
        return tree_from_json(j);
      case Repr::triangulation:
        return triangulation_to_tree(triangulation_from_json(j));
      case Repr::pair:
        return pair_to_tree(pair_from_json(j));
      default:
        throw Error("cannot convert this input to a tree");
    }
  };

  const std::string& to = opt.convert_to;
  if (to == "transfer") {
    if (from == Repr::transfer)
      out << transfer_to_json(transfer_from_json(j)).dump() << "\n";
    else if (from == Repr::partition)
      out << transfer_to_json(transfer_of(partition_from_json(j))).dump()
          << "\n";
    else
      throw Error("convert --to transfer expects a transfer system or partition");
  } else if (to == "partition") {
    if (from == Repr::partition)
      out << partition_to_json(partition_from_json(j)).dump() << "\n";
    else if (from == Repr::transfer)
      out << partition_to_json(partition_of(transfer_from_json(j))).dump()
          << "\n";
    else
      throw Error("convert --to partition expects a transfer system or partition");
  } else if (to == "pair") {
    if (from == Repr::pair)
      out << pair_to_json(pair_from_json(j)).dump() << "\n";
    else
      out << pair_to_json(tree_to_pair(as_tree())).dump() << "\n";
  } else if (to == "tree") {
    out << tree_to_json(as_tree()).dump() << "\n";
  } else if (to == "triangulation") {
    if (from == Repr::triangulation)
      out << triangulation_to_json(triangulation_from_json(j)).dump() << "\n";
    else
      out << triangulation_to_json(tree_to_triangulation(as_tree())).dump()
          << "\n";
  } else {
    throw Error("unknown --to \"" + to +
                "\" (transfer|partition|pair|tree|triangulation)");
  }
  return 0;
}

OrderKind parse_order_kind(const std::string& s) {
  if (s == "inclusion" || s == "premodel") return OrderKind::inclusion;
  if (s == "cc") return OrderKind::cc;
  if (s == "model") return OrderKind::model;
  throw Error("hasse orders: inclusion (premodel), cc, model");
}

int run_hasse(const Options& opt) {
  if (!opt.format.empty() && opt.format != "dot")
    throw Error("hasse emits DOT only");
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const LatticePtr L = pick_lattice(opt);
  const auto systems = enumerate_transfer_systems(L);
  const PosetRelation order =
      order_poset(systems, parse_order_kind(opt.kind == "all" ? "inclusion"
                                                              : opt.kind));
  const int m = order.size();
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < m; ++i) out << "  " << i << ";\n";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !order.le(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && order.le(i, k) && order.le(k, j)) cover = false;
      if (cover) out << "  " << i << " -> " << j << ";\n";
    }
  out << "}\n";

  if (!opt.legend_path.empty()) {
    std::ofstream legend(opt.legend_path);
    if (!legend) throw Error("cannot open legend file " + opt.legend_path);
    Json map = Json::object();
    for (int i = 0; i < m; ++i) {
      Json pairs = Json::array();
      for (const auto& [x, y] : systems[i].pairs())
        pairs.push_back(Json::array({x, y}));
      map[std::to_string(i)] = pairs;
    }
    legend << map.dump(2) << "\n";
  }
  return 0;
}

const char* svg_color(Color c) {
  switch (c) {
    case Color::red:
      return "#c0392b";
    case Color::blue:
      return "#2980b9";
    case Color::green:
      return "#27ae60";
  }
  return "#000000";
}

int run_triangulate(const Options& opt) {
  if (!opt.format.empty() && opt.format != "svg")
    throw Error("triangulate emits SVG only");
  const Json j = read_input_json(opt);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);

  StackedTriangulation s;
  switch (detect_repr(j)) {
    case Repr::triangulation:
      s = triangulation_from_json(j);
      break;
    case Repr::tree:
      s = tree_to_triangulation(tree_from_json(j));
      break;
    case Repr::pair:
      s = tree_to_triangulation(pair_to_tree(pair_from_json(j)));
      break;
    default:
      throw Error("triangulate expects a triangulation, tree or cc pair");
  }

  const detail::TriReplay r = detail::replay(s);
  const int m = s.internal_count();
  // barycentric placement: each vertex at the centroid of its face
  std::map<int, std::pair<double, double>> pos = {
      {StackedTriangulation::corner_red, {40.0, 660.0}},
      {StackedTriangulation::corner_blue, {760.0, 660.0}},
      {StackedTriangulation::corner_green, {400.0, 36.6}}};
  for (int k = 0; k < m; ++k) {
    double x = 0, y = 0;
    for (int i = 0; i < 3; ++i) {
      x += pos.at(r.face_of[k].v[i]).first;
      y += pos.at(r.face_of[k].v[i]).second;
    }
    pos[k] = {x / 3.0, y / 3.0};
  }

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 700\">\n";
  auto line = [&](int a, int b, const char* color) {
    out << "  <line x1=\"" << pos.at(a).first << "\" y1=\"" << pos.at(a).second
        << "\" x2=\"" << pos.at(b).first << "\" y2=\"" << pos.at(b).second
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  };
  line(StackedTriangulation::corner_red, StackedTriangulation::corner_blue,
       "#000000");
  line(StackedTriangulation::corner_blue, StackedTriangulation::corner_green,
       "#000000");
  line(StackedTriangulation::corner_green, StackedTriangulation::corner_red,
       "#000000");
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < 3; ++i)
      line(k, r.face_of[k].v[i], svg_color(r.edge_color[k][i]));
  for (const auto& [v, p] : pos) {
    const char* fill = v >= 0 ? "#000000" : svg_color(v == -1 ? Color::red
                                                     : v == -2 ? Color::blue
                                                               : Color::green);
    out << "  <circle cx=\"" << p.first << "\" cy=\"" << p.second
        << "\" r=\"6\" fill=\"" << fill << "\"/>\n";
  }
  out << "</svg>\n";
  return 0;
}

int run_report(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const bool csv = opt.format == "csv";
  if (csv)
    out << "n,premodel,cc,model,compatible,model_over_cc,cc_over_premodel\n";
  else
    out << "exact structure counts on the chain [n] and exact ratios\n"
        << "n | premodel | cc | model | compatible | |Q|/|C| | |C|/|P|\n";
  for (long long n = 0; n <= opt.max_n; ++n) {
    const BigInt p = closed_form_count(n, PairKind::premodel);
    const BigInt c = closed_form_count(n, PairKind::composition_closed);
    const BigInt q = closed_form_count(n, PairKind::model);
    const BigInt com = closed_form_count(n, PairKind::compatible);
    const BigRational qc = model_to_cc_ratio(n);
    const BigRational cp = cc_to_premodel_ratio(n);
    const std::string qc_s =
        boost::multiprecision::numerator(qc).str() + "/" +
        boost::multiprecision::denominator(qc).str();
    const std::string cp_s =
        boost::multiprecision::numerator(cp).str() + "/" +
        boost::multiprecision::denominator(cp).str();
    const char sep = csv ? ',' : ' ';
    if (csv)
      out << n << sep << p << sep << c << sep << q << sep << com << sep << qc_s
          << sep << cp_s << "\n";
    else
      out << n << " | " << p << " | " << c << " | " << q << " | " << com
          << " | " << qc_s << " | " << cp_s << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "transfer systems, premodel structures and their combinatorial models "
      "on finite lattices"};
  app.require_subcommand(1);
  Options opt;

  auto add_lattice_opts = [&](CLI::App* cmd) {
    cmd->add_option("--chain", opt.chain, "use the chain 0 < 1 < ... < N");
    cmd->add_option("--lattice", opt.lattice_file,
                    "lattice JSON file ({\"chain\": n} or {\"size\", \"leq\"})");
  };

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "stream transfer systems, pairs, partitions or trees as JSON lines");
  add_lattice_opts(enumerate);
  enumerate->add_option("--objects", opt.objects,
                        "transfer|pairs|partitions|trees");
  enumerate->add_option("--kind", opt.kind,
                        "premodel|cc|model|compatible|all (pairs)");
  enumerate->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* count = app.add_subcommand(
      "count", "enumerated vs closed-form counts with a MATCH/MISMATCH verdict");
  add_lattice_opts(count);
  count->add_option("--kind", opt.kind, "premodel|cc|model|compatible|all");
  count->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* classify = app.add_subcommand(
      "classify", "read a pair and print its premodel/cc/model/compatible flags");
  classify->add_option("--in", opt.in_path, "input file (default stdin)");
  classify->add_option("--format", opt.format, "json for the full pair object");
  classify->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* convert = app.add_subcommand(
      "convert", "map between transfer/partition/pair/tree/triangulation");
  convert->add_option("--to", opt.convert_to,
                      "transfer|partition|pair|tree|triangulation")
      ->required();
  convert->add_option("--in", opt.in_path, "input file (default stdin)");
  convert->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* hasse =
      app.add_subcommand("hasse", "emit the chosen order on Tr(L) as DOT");
  add_lattice_opts(hasse);
  hasse->add_option("--kind", opt.kind, "inclusion|cc|model");
  hasse->add_option("--format", opt.format, "dot");
  hasse->add_option("--out", opt.out_path, "output file (default stdout)");
  hasse->add_option("--legend", opt.legend_path,
                    "also write a JSON index -> pair-list legend");

  CLI::App* triangulate = app.add_subcommand(
      "triangulate", "emit a stacked triangulation as SVG");
  triangulate->add_option("--in", opt.in_path, "input file (default stdin)");
  triangulate->add_option("--format", opt.format, "svg");
  triangulate->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* report = app.add_subcommand(
      "report", "exact count table and exact ratios up to --max-n");
  report->add_option("--max-n", opt.max_n, "largest n in the table");
  report->add_option("--format", opt.format, "csv");
  report->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return run_enumerate(opt);
    if (count->parsed()) return run_count(opt);
    if (classify->parsed()) return run_classify(opt);
    if (convert->parsed()) return run_convert(opt);
    if (hasse->parsed()) return run_hasse(opt);
    if (triangulate->parsed()) return run_triangulate(opt);
    if (report->parsed()) return run_report(opt);
  } catch (const tsys::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
