#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "comblab/dependency.hpp"
#include "comblab/io.hpp"
#include "comblab/median_order.hpp"
#include "comblab/patterns.hpp"
#include "comblab/recognition.hpp"
#include "comblab/snp_engine.hpp"
#include "comblab/suites.hpp"

using nlohmann::json;
using namespace comblab;

namespace {

json vs_to_json(const VertexSet& s) { return json(s.to_vector()); }

json blocks_to_json(const std::vector<VertexSet>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(b.to_vector());
  return out;
}

json arcs_to_json(const std::vector<std::pair<int, int>>& arcs) {
  json out = json::array();
  for (auto [u, v] : arcs) out.push_back({u, v});
  return out;
}

/// The input graph for classification commands: a graph file directly, or the
/// missing graph of an oriented-graph file.
Graph classification_input(const std::string& path) {
  AnyGraph any = load_any(path);
  if (!any.oriented) return any.graph;
  return missing_graph(any.digraph).first;
}

int cmd_recognize(const std::string& path) {
  Graph g = classification_input(path);
  json j;
  j["n"] = g.size();
  j["edges"] = g.edge_count();
  j["threshold"] = is_threshold(g);
  auto sp = split_partition(g);
  j["split"] = sp.has_value();
  if (sp) {
    j["split_partition"] = {{"stable", vs_to_json(sp->stable)}, {"clique", vs_to_json(sp->clique)}};
  }
  j["comb"] = forbidden_free(g, PatternFamily::Comb);
  j["comb_or_c5"] = forbidden_free(g, PatternFamily::CombC5Ok);
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

json decomposition_to_json(const Graph& g, const CombDecomposition& dec) {
  json j;
  j["comb"] = true;
  j["chain_length"] = dec.chain_length();
  j["levels"] = dec.levels();
  j["k0"] = dec.k0;
  j["A"] = blocks_to_json(dec.A);
  j["X_tail"] = blocks_to_json(dec.x_tail);  // X_2..X_{n+1}; X_1 is Y[0]
  j["M"] = blocks_to_json(dec.M);
  j["Y"] = blocks_to_json(dec.Y);
  j["matching"] = arcs_to_json(dec.matching);
  j["stripped"] = vs_to_json(dec.stripped);
  j["valid"] = validate_comb_decomposition(g, dec).ok();
  return j;
}

int cmd_decompose(const std::string& path) {
  Graph g = classification_input(path);
  auto dec = find_comb_decomposition(g);
  if (!dec) {
    json j;
    j["comb"] = false;
    std::printf("%s\n", j.dump(2).c_str());
    return 1;
  }
  std::printf("%s\n", decomposition_to_json(g, *dec).dump(2).c_str());
  return 0;
}

int cmd_depgraph(const std::string& path) {
  OrientedGraph d = load_oriented(path);
  DependencyDigraph delta = dependency_digraph(d);
  json j;
  j["nodes"] = json::array();
  for (const auto& e : delta.nodes) j["nodes"].push_back({e.a, e.b});
  j["arcs"] = arcs_to_json(delta.arcs);
  j["disjoint_paths"] = is_disjoint_paths(delta);
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

int cmd_median(const std::string& path) {
  OrientedGraph d = load_oriented(path);
  MedianOrder order = local_median_order(d);
  json j;
  j["order"] = order.order;
  j["forward_arcs"] = order.forward_arcs;
  j["feed"] = feed_vertex(order);
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

json certificate_to_json(const SNPCertificate& cert) {
  json j;
  j["feed"] = cert.feed;
  j["d_plus"] = cert.d_plus;
  j["d_plus_plus"] = cert.d_plus_plus;
  j["case"] = cert.case_label ? cert.case_label->to_string() : "unclassified";
  j["order"] = cert.order.order;
  j["tournament_arcs"] = arcs_to_json(cert.tournament.arcs());
  j["trace"] = {{"path_arcs", arcs_to_json(cert.trace.path_arcs)},
                {"residual_arcs", arcs_to_json(cert.trace.residual_arcs)},
                {"added_arcs", arcs_to_json(cert.trace.added_arcs)}};
  return j;
}

int cmd_snp(const std::string& path) {
  OrientedGraph d = load_oriented(path);
  try {
    SNPCertificate cert = find_snp_vertex(d);
    std::printf("%s\n", certificate_to_json(cert).dump(2).c_str());
    return 0;
  } catch (const snp_error& e) {
    json j;
    j["error"] = e.what();
    std::printf("%s\n", j.dump(2).c_str());
    return 1;
  }
}

int cmd_verify(const std::string& suite, int n, uint64_t seed, int samples, int jobs) {
  SuiteParams p;
  p.n = n;
  p.seed = seed;
  p.samples = samples;
  p.jobs = jobs;
  SuiteReport rep;
  try {
    rep = run_suite(suite, p);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  std::printf("%s\n", rep.to_json().c_str());
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comb-missing oriented graphs: recognition, dependency analysis, "
               "second-neighborhood certificates, verification suites"};
  app.require_subcommand(1);

  std::string path;
  auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", path, "input file")->required();
    return sub;
  };
  CLI::App* recognize = add_file_cmd("recognize", "classify a graph (threshold / split / comb)");
  CLI::App* decompose = add_file_cmd("decompose", "comb decomposition blocks as JSON");
  CLI::App* depgraph = add_file_cmd("depgraph", "dependency digraph of an oriented graph");
  CLI::App* median = add_file_cmd("median", "local median order and feed vertex");
  CLI::App* snp = add_file_cmd("snp", "second-neighborhood certificate for an oriented graph");

  std::string suite;
  int n = -1, samples = -1, jobs = 0;
  uint64_t seed = 12345;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--n", n, "instance size parameter");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--samples", samples, "sample count (0: exhaustive mode)");
  verify->add_option("--jobs", jobs, "worker count (0: all cores, 1: serial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is fine; any parse problem is a usage error
  }

  try {
    if (recognize->parsed()) return cmd_recognize(path);
    if (decompose->parsed()) return cmd_decompose(path);
    if (depgraph->parsed()) return cmd_depgraph(path);
    if (median->parsed()) return cmd_median(path);
    if (snp->parsed()) return cmd_snp(path);
    if (verify->parsed()) return cmd_verify(suite, n, seed, samples, jobs);
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
