#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treelat/biclosed.hpp"
#include "treelat/corpus.hpp"
#include "treelat/ncp.hpp"
#include "treelat/polygon.hpp"
#include "treelat/tiling.hpp"
#include "treelat/treeio.hpp"
#include "treelat/verify.hpp"

using json = nlohmann::json;
using namespace treelat;

namespace {

struct Workspace {
  EmbeddedTree tree;
  Segments segs;
  Arcs arcs;
  NoncrossingComplex ncc;

  explicit Workspace(const TreeSpec& spec)
      : tree(EmbeddedTree::load(spec)),
        segs(tree),
        arcs(segs),
        ncc(arcs) {}
};

std::string facet_name(const Workspace& w, const Facet& f) {
  std::string s;
  for (size_t i = 0; i < f.arcs.size(); ++i) {
    if (i) s += " ";
    s += w.arcs.arc_name(f.arcs[i]);
  }
  return s;
}

json seg_list(const Workspace& w, SegSet x) {
  json a = json::array();
  for (SegId s = 0; s < w.segs.count(); ++s)
    if (seg_in(x, s)) a.push_back(w.segs.seg_name(s));
  return a;
}

json lattice_json(const FiniteLattice& l,
                  const std::function<json(int)>& element,
                  const std::function<std::string(int)>& label) {
  json nodes = json::array(), covers = json::array();
  for (int i = 0; i < l.size(); ++i) nodes.push_back(element(i));
  for (const auto& c : l.covers()) {
    json e = {{"from", c.lo}, {"to", c.hi}};
    if (c.label >= 0) e["label"] = label(c.label);
    covers.push_back(e);
  }
  return {{"elements", nodes}, {"covers", covers}};
}

std::string lattice_dot(const FiniteLattice& l,
                        const std::function<std::string(int)>& element,
                        const std::function<std::string(int)>& label) {
  std::string out = "digraph {\n  rankdir=BT;\n";
  for (int i = 0; i < l.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + element(i) + "\"];\n";
  for (const auto& c : l.covers()) {
    out += "  n" + std::to_string(c.lo) + " -> n" + std::to_string(c.hi);
    if (c.label >= 0) out += " [label=\"" + label(c.label) + "\"]";
    out += ";\n";
  }
  return out + "}\n";
}

void emit(const std::string& text, const std::string& outfile) {
  if (outfile.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(outfile);
    f << text;
  }
}

int run_verify(const std::optional<TreeSpec>& spec, int random_count,
               std::uint64_t seed) {
  std::vector<std::pair<std::string, TreeSpec>> jobs;
  if (spec) jobs.emplace_back("input", *spec);
  for (int i = 0; i < random_count; ++i)
    jobs.emplace_back("random" + std::to_string(i),
                      corpus_random(5 + i % 2, seed + i));
  bool ok = true;
  for (const auto& [name, s] : jobs) {
    VerifyReport rep = verify_tree(s, name);
    Workspace w(s);
    OrientedFlipGraph fg = build_flip_graph(w.ncc);
    NcpLattice ncp = enumerate_ncp(w.ncc, &fg);
    BicLattice bic(w.ncc);
    std::cout << name << ": " << fg.facets.size() << " facets, "
              << ncp.elements.size() << " ncp, " << bic.size()
              << " biclosed sets\n";
    for (const auto& c : rep.checks) {
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (!c.pass) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    ok = ok && rep.all_pass();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncrossing complexes, flip graphs and tiling algebras of "
               "trees embedded in a disk"};
  app.require_subcommand(1);

  std::string treefile, outfile;
  bool json_input = false, dot_output = false;
  int random_count = 0;

  auto add_common = [&](CLI::App* cmd, bool tree_required = true) {
    auto* opt = cmd->add_option("tree", treefile, "tree file");
    if (tree_required) opt->required();
    cmd->add_option("-o,--output", outfile, "write output to a file");
    cmd->add_flag("--json", json_input, "input file is JSON");
    return cmd;
  };

  auto* c_facets = add_common(app.add_subcommand("facets", "list all facets"));
  auto* c_fg = add_common(
      app.add_subcommand("flipgraph", "oriented flip graph"));
  c_fg->add_flag("--dot", dot_output, "emit graphviz instead of JSON");
  auto* c_bic = add_common(
      app.add_subcommand("biclosed", "lattice of biclosed segment sets"));
  c_bic->add_flag("--dot", dot_output, "emit graphviz instead of JSON");
  auto* c_ncp = add_common(
      app.add_subcommand("ncp", "noncrossing tree partitions"));
  c_ncp->add_flag("--dot", dot_output, "emit graphviz instead of JSON");
  auto* c_krew = add_common(
      app.add_subcommand("kreweras", "Kreweras complement of each partition"));
  auto* c_shard = add_common(
      app.add_subcommand("shard", "shard intersection order"));
  c_shard->add_flag("--dot", dot_output, "emit graphviz instead of JSON");
  auto* c_torsf = add_common(
      app.add_subcommand("torsf", "lattice of torsion-free classes"));
  c_torsf->add_flag("--dot", dot_output, "emit graphviz instead of JSON");
  auto* c_wide = add_common(
      app.add_subcommand("wide", "lattice of wide subcategories"));
  c_wide->add_flag("--dot", dot_output, "emit graphviz instead of JSON");
  auto* c_smc = add_common(
      app.add_subcommand("smc", "2-term simple-minded collections"));
  auto* c_cmat = add_common(
      app.add_subcommand("cmat", "c-matrices (degree-3 trees)"));
  auto* c_verify = add_common(
      app.add_subcommand("verify", "run the property suite"), false);
  c_verify->add_option("--random", random_count,
                       "also verify this many random trees (seed from "
                       "FLIPGRAPH_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<TreeSpec> spec;
    if (!treefile.empty()) spec = load_tree_file(treefile, json_input);

    if (c_verify->parsed()) {
      std::uint64_t seed = 1;
      if (const char* env = std::getenv("FLIPGRAPH_SEED"))
        seed = std::strtoull(env, nullptr, 10);
      if (!spec && random_count == 0) random_count = 4;
      return run_verify(spec, random_count, seed);
    }

    Workspace w(*spec);
    auto segname = [&](int s) { return w.segs.seg_name(s); };

    if (c_facets->parsed()) {
      OrientedFlipGraph fg = build_flip_graph(w.ncc);
      json out = {{"facet_count", fg.facets.size()}};
      json fl = json::array();
      for (const auto& f : fg.facets) {
        json one = json::array();
        for (ArcId a : f.arcs) one.push_back(w.arcs.arc_name(a));
        fl.push_back(one);
      }
      out["facets"] = fl;
      emit(out.dump(2) + "\n", outfile);
    } else if (c_fg->parsed()) {
      OrientedFlipGraph fg = build_flip_graph(w.ncc);
      auto elem = [&](int i) { return facet_name(w, fg.facets[i]); };
      if (dot_output)
        emit(lattice_dot(fg.lattice, elem, segname), outfile);
      else
        emit(lattice_json(fg.lattice, [&](int i) { return json(elem(i)); },
                          segname)
                     .dump(2) +
                 "\n",
             outfile);
    } else if (c_bic->parsed()) {
      BicLattice bic(w.ncc);
      auto elem = [&](int i) { return seg_list(w, bic.element(i)); };
      if (dot_output)
        emit(lattice_dot(bic.lattice(),
                         [&](int i) { return elem(i).dump(); }, segname),
             outfile);
      else
        emit(lattice_json(bic.lattice(), elem, segname).dump(2) + "\n",
             outfile);
    } else if (c_ncp->parsed() || c_krew->parsed()) {
      OrientedFlipGraph fg = build_flip_graph(w.ncc);
      NcpLattice ncp = enumerate_ncp(w.ncc, &fg);
      auto elem = [&](int i) {
        return partition_name(w.tree, ncp.elements[i]);
      };
      if (c_krew->parsed()) {
        json out = json::array();
        for (const auto& p : ncp.elements)
          out.push_back(
              {{"partition", partition_name(w.tree, p)},
               {"complement",
                partition_name(w.tree, kreweras_complement(w.segs, p))}});
        emit(out.dump(2) + "\n", outfile);
      } else if (dot_output) {
        emit(lattice_dot(ncp.lattice, elem, segname), outfile);
      } else {
        emit(lattice_json(ncp.lattice, [&](int i) { return json(elem(i)); },
                          segname)
                     .dump(2) +
                 "\n",
             outfile);
      }
    } else if (c_shard->parsed()) {
      OrientedFlipGraph fg = build_flip_graph(w.ncc);
      auto sh = fg.lattice.shard_order();
      auto elem = [&](int i) {
        SegSet x = 0;
        for (int s : sh.psi[sh.element_of[i]]) x |= seg_bit(s);
        return seg_list(w, x);
      };
      if (dot_output)
        emit(lattice_dot(sh.poset, [&](int i) { return elem(i).dump(); },
                         segname),
             outfile);
      else
        emit(lattice_json(sh.poset, elem, segname).dump(2) + "\n", outfile);
    } else if (c_torsf->parsed() || c_wide->parsed()) {
      TilingAlgebra alg(w.segs);
      TilingAlgebra::SubcatLattice sub;
      if (c_torsf->parsed()) {
        BicLattice bic(w.ncc);
        sub = alg.torsion_free_classes(bic);
      } else {
        OrientedFlipGraph fg = build_flip_graph(w.ncc);
        NcpLattice ncp = enumerate_ncp(w.ncc, &fg);
        sub = alg.wide_subcategories(ncp);
      }
      auto elem = [&](int i) {
        json a = json::array();
        for (SegId s = 0; s < w.segs.count(); ++s)
          if (seg_in(sub.elements[i], s))
            a.push_back("M(" + w.segs.seg_name(s) + ")");
        return a;
      };
      if (dot_output)
        emit(lattice_dot(sub.lattice, [&](int i) { return elem(i).dump(); },
                         segname),
             outfile);
      else
        emit(lattice_json(sub.lattice, elem, segname).dump(2) + "\n", outfile);
    } else if (c_smc->parsed()) {
      OrientedFlipGraph fg = build_flip_graph(w.ncc);
      NcpLattice ncp = enumerate_ncp(w.ncc, &fg);
      TilingAlgebra alg(w.segs);
      json out = json::array();
      for (const auto& p : ncp.elements) {
        SmcCollection x = alg.theta_map(p);
        json objs = json::array();
        for (const auto& o : x.objects)
          objs.push_back("M(" + w.segs.seg_name(o.seg) + ")" +
                         (o.degree == -1 ? "[1]" : ""));
        out.push_back({{"partition", partition_name(w.tree, p)},
                       {"objects", objs}});
      }
      emit(out.dump(2) + "\n", outfile);
    } else if (c_cmat->parsed()) {
      OrientedFlipGraph fg = build_flip_graph(w.ncc);
      NcpLattice ncp = enumerate_ncp(w.ncc, &fg);
      TilingAlgebra alg(w.segs);
      json edge_order = json::array();
      for (EdgeId e = 0; e < w.tree.interior_edge_count(); ++e) {
        auto [u, v] = w.tree.edge(e);
        edge_order.push_back(std::to_string(w.tree.label(u)) + "-" +
                             std::to_string(w.tree.label(v)));
      }
      json mats = json::array();
      for (const auto& p : ncp.elements) {
        CMatrix c = alg.c_matrix(p);
        mats.push_back(c.rows);
      }
      emit(json{{"edge_order", edge_order}, {"matrices", mats}}.dump(2) + "\n",
           outfile);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DeskScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
