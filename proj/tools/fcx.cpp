// Command-line front end: parse graph or complex JSON, run decisions, emit
// certificates and DOT exports.
//
// Exit status: 0 embeddable / true / critical, 1 not, 2 undecided,
// 3 schema or input error, 4 verification failure, 5 internal error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fcx/catalog.hpp"
#include "fcx/surface.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitSchema = 3;
constexpr int kExitVerify = 4;
constexpr int kExitInternal = 5;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fcx::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  fcx::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("invalid json: ") + e.what());
  }
  return j;
}

fcx::Graph load_graph(const std::string& path) {
  try {
    return fcx::Graph::from_json(read_json_file(path));
  } catch (const fcx::GraphError& e) {
    throw SchemaError(e.what());
  }
}

fcx::MBComplex load_complex(const std::string& file, const std::string& catalog_id) {
  if (!catalog_id.empty()) {
    try {
      return fcx::catalog_complex(catalog_id);
    } catch (const fcx::UnknownCatalogId& e) {
      throw SchemaError(e.what());
    }
  }
  try {
    return fcx::MBComplex::from_json(read_json_file(file));
  } catch (const fcx::ComplexError& e) {
    throw SchemaError(e.what());
  } catch (const fcx::GraphError& e) {
    throw SchemaError(e.what());
  }
}

void emit(const fcx::json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit(fcx::VerdictKind k) {
  switch (k) {
    case fcx::VerdictKind::Embeddable: return kExitYes;
    case fcx::VerdictKind::NotEmbeddable: return kExitNo;
    case fcx::VerdictKind::Undecided: return kExitUndecided;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engine for 3-sphere embeddability of product-form 2-complexes"};
  app.require_subcommand(1);

  std::string file, catalog_id, format = "json", file_b;
  std::uint64_t budget = 0;
  int threads = 1;
  int genus_bound = 0;
  bool verify = false;
  bool certificate = false;

  auto add_common = [&](CLI::App* cmd, bool with_catalog = true) {
    cmd->add_option("--file", file, "input JSON path");
    if (with_catalog) cmd->add_option("--catalog", catalog_id, "built-in catalog id");
    cmd->add_option("--budget", budget, "search node budget (mirrors FCX_MAX_NODES)");
    cmd->add_option("--threads", threads, "worker threads for the arrangement search");
    cmd->add_option("--format", format, "output format: json or dot");
    cmd->add_flag("--verify", verify, "re-validate the emitted certificate from the input");
  };

  auto* planarity = app.add_subcommand("planarity", "planarity of a graph, with certificate");
  add_common(planarity, false);
  planarity->add_flag("--certificate", certificate, "emit a Kuratowski certificate when nonplanar");

  auto* genus = app.add_subcommand("genus", "minimum genus by rotation enumeration");
  add_common(genus, false);
  genus->add_option("--bound", genus_bound, "genus bound for the criticality report");

  auto* decide = app.add_subcommand("decide", "decide 3-sphere embeddability of a complex");
  add_common(decide);

  auto* critical = app.add_subcommand("critical", "criticality report of a complex");
  add_common(critical);

  auto* extract = app.add_subcommand("extract", "extract a critical subcomplex");
  add_common(extract);

  auto* reduce = app.add_subcommand("reduce", "reduction of a complex to a graph");
  add_common(reduce);

  auto* classify = app.add_subcommand("classify", "pattern type of a critical candidate");
  add_common(classify);

  auto* equiv = app.add_subcommand("equiv", "poset relation between two graphs");
  equiv->add_option("--a", file, "first graph JSON")->required();
  equiv->add_option("--b", file_b, "second graph JSON")->required();
  equiv->add_option("--budget", budget, "search node budget");

  auto* catalog = app.add_subcommand("catalog", "list or build the named complexes");
  std::string catalog_action = "list", catalog_build_id;
  catalog->add_option("action", catalog_action, "list | build")->required();
  catalog->add_option("id", catalog_build_id, "catalog id for build");

  CLI11_PARSE(app, argc, argv);

  fcx::EngineOptions opt = fcx::EngineOptions::from_env();
  if (budget > 0) opt.node_budget = budget;
  opt.threads = threads;

  try {
    if (planarity->parsed()) {
      if (file.empty()) throw SchemaError("planarity requires --file");
      fcx::Graph g = load_graph(file);
      bool planar = fcx::is_planar(g);
      if (format == "dot") {
        if (!planar && certificate)
          std::cout << fcx::kuratowski_to_dot(g.simplified(), fcx::kuratowski_certificate(g));
        else
          std::cout << g.to_dot();
        return planar ? kExitYes : kExitNo;
      }
      fcx::json j;
      j["schema"] = "fcx/1";
      j["planar"] = planar;
      if (!planar && certificate) {
        auto cert = fcx::kuratowski_certificate(g);
        j["kuratowski"] = cert.to_json();
        if (verify && !fcx::validate_kuratowski(g.simplified(), cert)) return kExitVerify;
      }
      emit(j);
      return planar ? kExitYes : kExitNo;
    }

    if (genus->parsed()) {
      if (file.empty()) throw SchemaError("genus requires --file");
      fcx::Graph g = load_graph(file);
      fcx::SurfaceVerdict v = fcx::surface_verdict(g, genus_bound);
      if (verify && v.embedding_certificate) {
        fcx::FaceSet fs = fcx::trace_faces(g, *v.embedding_certificate);
        if ((fs.genus <= genus_bound) != v.embeds) return kExitVerify;
      }
      emit(v.to_json());
      return v.embeds ? kExitYes : kExitNo;
    }

    if (decide->parsed()) {
      fcx::MBComplex x = load_complex(file, catalog_id);
      fcx::Verdict v = fcx::decide_embeddable_s3(x, opt);
      emit(v.to_json());
      if (verify && !fcx::verify_verdict(x, v, opt)) {
        std::cerr << "certificate verification failed\n";
        return kExitVerify;
      }
      return verdict_exit(v.kind);
    }

    if (critical->parsed()) {
      fcx::MBComplex x = load_complex(file, catalog_id);
      fcx::CriticalityReport rep = fcx::check_critical_s3(x, opt);
      emit(rep.to_json());
      switch (rep.overall) {
        case fcx::Criticality::Critical: return kExitYes;
        case fcx::Criticality::NotCritical: return kExitNo;
        case fcx::Criticality::Undecided: return kExitUndecided;
      }
    }

    if (extract->parsed()) {
      fcx::MBComplex x = load_complex(file, catalog_id);
      try {
        fcx::ExtractionTrace trace = fcx::extract_critical(x, opt);
        emit(trace.to_json());
        return trace.flagged_undecided ? kExitUndecided : kExitYes;
      } catch (const fcx::StuckUndecided& e) {
        std::cerr << e.what() << "\n";
        return kExitUndecided;
      }
    }

    if (reduce->parsed()) {
      fcx::MBComplex x = load_complex(file, catalog_id);
      fcx::Graph r = fcx::reduction(x);
      if (format == "dot") {
        std::cout << r.to_dot("reduction");
      } else {
        fcx::json j;
        j["schema"] = "fcx/1";
        j["reduction"] = r.to_json();
        j["planar"] = fcx::is_planar(r);
        j["product_minor"] =
            fcx::product_minor_str(fcx::classify_product_minor(x, opt.node_budget));
        emit(j);
      }
      return kExitYes;
    }

    if (classify->parsed()) {
      fcx::MBComplex x = load_complex(file, catalog_id);
      fcx::TypeTag t = fcx::classify_type(x);
      fcx::json j;
      j["schema"] = "fcx/1";
      j["type"] = fcx::type_tag_str(t);
      emit(j);
      return t == fcx::TypeTag::Unclassified ? kExitNo : kExitYes;
    }

    if (equiv->parsed()) {
      fcx::Graph a = load_graph(file);
      fcx::Graph b = load_graph(file_b);
      fcx::ClassRelation r =
          fcx::graph_class_relation(a, b, budget > 0 ? budget : 10'000'000);
      fcx::json j;
      j["schema"] = "fcx/1";
      j["relation"] = fcx::class_relation_str(r);
      emit(j);
      return r == fcx::ClassRelation::EqualClass ? kExitYes : kExitNo;
    }

    if (catalog->parsed()) {
      if (catalog_action == "list") {
        fcx::json j;
        j["schema"] = "fcx/1";
        fcx::json list = fcx::json::array();
        for (auto& e : fcx::catalog_entries()) {
          fcx::json je = e.to_json();
          je.erase("complex");
          list.push_back(je);
        }
        j["entries"] = list;
        emit(j);
        return kExitYes;
      }
      if (catalog_action == "build") {
        if (catalog_build_id.empty()) throw SchemaError("catalog build needs an id");
        fcx::CatalogEntry e = fcx::fixture(catalog_build_id);
        emit(e.to_json());
        return e.complex ? kExitYes : kExitUndecided;
      }
      throw SchemaError("catalog action must be list or build");
    }
  } catch (const SchemaError& e) {
    fcx::json err;
    err["schema"] = "fcx/1";
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return kExitSchema;
  } catch (const fcx::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
