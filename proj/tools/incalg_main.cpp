// Command-line front end: analyze | solve | witness | verify | enumerate.
// JSON goes to standard output, diagnostics to standard error.
//
// Exit codes: 0 success (analyze: guaranteed); 10 analyze found the
// properness guarantee does not hold; 11 witness reports none; 2 invalid
// input (files, flags, rings, bounds); 3 a solving command was given a
// non-field ring; 1 internal failure or enumerate equivalence violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "incalg/circles.hpp"
#include "incalg/json_io.hpp"

namespace {

using namespace incalg;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAField:
      return 3;
    case ErrorKind::ParseError:
    case ErrorKind::UnknownElement:
    case ErrorKind::DuplicateElement:
    case ErrorKind::NotTransitive:
    case ErrorKind::UnknownBasisElement:
    case ErrorKind::RingMismatch:
    case ErrorKind::MissingCoefficient:
    case ErrorKind::NotRelated:
    case ErrorKind::InvalidModulus:
    case ErrorKind::TwoTorsion:
    case ErrorKind::OracleBoundExceeded:
    case ErrorKind::DivisionByZero:
      return 2;
    default:
      return 1;
  }
}

struct Options {
  std::string poset_file;
  std::string map_file;
  std::string ring = "Z";
  bool ring_given = false;
  int oracle_bound = 8;
  int max_size = 4;
  std::string dot_path;
  std::uint64_t seed = 0;
};

void write_dot(const Options& opt, const PreOrder& order) {
  if (opt.dot_path.empty()) return;
  std::ofstream out(opt.dot_path);
  if (!out) fail(ErrorKind::ParseError, "cannot write DOT file: " + opt.dot_path);
  // Two graphs in one file: the undirected comparability graph and the
  // directed strict-pair graph.
  out << to_dot_comparability(order, "comparability") << "\n"
      << to_dot_directed(order, "directed_edges");
}

Json labels_of(const PreOrder& order, const std::vector<int>& indices) {
  Json arr = Json::array();
  for (int i : indices) arr.push_back(order.label(i));
  return arr;
}

Json edge_classes_json(const PreOrder& order,
                       const std::vector<std::vector<std::pair<int, int>>>& classes) {
  Json arr = Json::array();
  for (const auto& cls : classes) {
    Json c = Json::array();
    for (auto [x, y] : cls) c.push_back(Json::array({order.label(x), order.label(y)}));
    arr.push_back(std::move(c));
  }
  return arr;
}

int cmd_analyze(const Options& opt) {
  PreOrderPtr order = load_poset_file(opt.poset_file);
  write_dot(opt, *order);
  PropernessReport report = properness_guaranteed(*order);

  Json out = Json::object();
  Json input = Json::object();
  input["elements"] = labels_of(*order, [&] {
    std::vector<int> all(static_cast<std::size_t>(order->size()));
    for (int i = 0; i < order->size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }());
  input["ring"] = opt.ring;
  out["input"] = std::move(input);
  out["guaranteed"] = report.guaranteed;
  Json comps = Json::array();
  for (const auto& comp : report.components) {
    Json c = Json::object();
    c["elements"] = labels_of(*order, comp.members);
    c["edge_classes"] = edge_classes_json(*order, comp.edge_classes);
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);

  Ring ring(RingSpec::parse(opt.ring));
  if (ring.is_field()) {
    AlgebraPtr algebra = Algebra::create(order, ring);
    int dim_commuting = commuting_space(algebra).dimension();
    int dim_proper = proper_space(algebra).dimension();
    Json dims = Json::object();
    dims["commuting"] = dim_commuting;
    dims["proper"] = dim_proper;
    out["dimensions"] = std::move(dims);
    out["witness_available"] = dim_commuting > dim_proper;
  }
  std::cout << out.dump(2) << "\n";
  return report.guaranteed ? 0 : 10;
}

int cmd_solve(const Options& opt) {
  PreOrderPtr order = load_poset_file(opt.poset_file);
  write_dot(opt, *order);
  Ring ring(RingSpec::parse(opt.ring));
  AlgebraPtr algebra = Algebra::create(order, ring);
  MapSpace space = commuting_space(algebra);
  Json out = Json::object();
  out["ring"] = ring.spec().str();
  out["dimension"] = space.dimension();
  Json maps = Json::array();
  for (const LinearMap& m : space.basis) maps.push_back(map_to_json(m));
  out["maps"] = std::move(maps);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_witness(const Options& opt) {
  PreOrderPtr order = load_poset_file(opt.poset_file);
  write_dot(opt, *order);
  Ring ring(RingSpec::parse(opt.ring));
  AlgebraPtr algebra = Algebra::create(order, ring);
  auto witness = improper_witness(algebra);
  if (!witness) {
    std::cout << "none\n";
    return 11;
  }
  std::cout << map_to_json(*witness).dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& opt) {
  PreOrderPtr order = load_poset_file(opt.poset_file);
  write_dot(opt, *order);
  Json map_doc = load_json_file(opt.map_file);
  RingSpec file_spec = map_ring_spec(map_doc);
  if (opt.ring_given && !(RingSpec::parse(opt.ring) == file_spec))
    fail(ErrorKind::RingMismatch, "--ring " + opt.ring + " conflicts with the map file's ring " +
                                      file_spec.str());
  Ring ring(file_spec);
  AlgebraPtr algebra = Algebra::create(order, ring);
  LinearMap theta = map_from_json(algebra, map_doc);

  const int spot_checks = 5;
  CommutingCheck check = check_commuting(theta, opt.seed, spot_checks);

  Json out = Json::object();
  out["ring"] = ring.spec().str();
  out["commuting"] = check.commuting;
  if (check.violating_pair) {
    auto [b1, b2] = *check.violating_pair;
    auto [i, j] = algebra->basis()[static_cast<std::size_t>(b1)];
    auto [k, l] = algebra->basis()[static_cast<std::size_t>(b2)];
    out["violating_pair"] =
        Json::array({Json::array({order->label(i), order->label(j)}),
                     Json::array({order->label(k), order->label(l)})});
  }

  if (order->is_connected()) {
    bool shape = shape_check(theta);
    out["shape"] = shape;
    if (shape) {
      RelationsReport relations = relations_check(theta);
      Json rel = Json::object();
      rel["ok"] = relations.ok();
      Json viols = Json::array();
      for (const RelationViolation& v : relations.violations) {
        Json item = Json::object();
        item["relation"] = to_string(v.relation);
        Json elems = Json::array();
        for (int e : v.elements) elems.push_back(order->label(e));
        item["elements"] = std::move(elems);
        item["detail"] = v.detail;
        viols.push_back(std::move(item));
      }
      rel["violations"] = std::move(viols);
      out["relations"] = std::move(rel);
    } else {
      out["relations"] = nullptr;
    }
  } else {
    out["shape"] = nullptr;
    out["relations"] = nullptr;
  }

  if (!check.commuting) {
    out["proper"] = false;  // a proper map is always commuting
  } else if (ring.is_field()) {
    auto decomposition = decompose_proper(theta);
    out["proper"] = decomposition.has_value();
    if (decomposition) {
      Json dec = Json::object();
      dec["lambda"] = element_to_json(decomposition->lambda);
      Json mu = Json::array();
      for (int b = 0; b < algebra->basis_size(); ++b) {
        const Element& value = decomposition->mu[static_cast<std::size_t>(b)];
        if (value.is_zero()) continue;
        auto [i, j] = algebra->basis()[static_cast<std::size_t>(b)];
        Json entry = Json::object();
        entry["on"] = Json::array({order->label(i), order->label(j)});
        entry["value"] = element_to_json(value);
        mu.push_back(std::move(entry));
      }
      dec["mu"] = std::move(mu);
      out["decomposition"] = std::move(dec);
    }
  } else {
    out["proper"] = nullptr;  // deciding properness is gated on a field ring
  }
  out["spot_checks"] = check.commuting ? spot_checks : 0;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_enumerate(const Options& opt) {
  Ring ring(RingSpec::parse(opt.ring));
  if (!ring.is_field())
    fail(ErrorKind::NotAField,
         "enumeration compares solution-space dimensions and needs a field ring");
  if (opt.max_size > opt.oracle_bound)
    fail(ErrorKind::OracleBoundExceeded,
         "--max-size " + std::to_string(opt.max_size) + " exceeds --oracle-bound " +
             std::to_string(opt.oracle_bound));
  if (opt.max_size > 5)
    fail(ErrorKind::OracleBoundExceeded,
         "exhaustive enumeration is supported up to 5 elements (2^30 candidate relations at 6)");
  bool violation = false;
  std::cout << "id,guaranteed,dim_commuting,dim_proper\n";
  for (int n = 1; n <= opt.max_size; ++n) {
    std::uint64_t index = 0;
    for_each_preorder(n, [&](const PreOrder& order) {
      PropernessReport report = properness_guaranteed(order);
      AlgebraPtr algebra = Algebra::create(std::make_shared<const PreOrder>(order), ring);
      int dim_commuting = commuting_space(algebra).dimension();
      int dim_proper = proper_space(algebra).dimension();
      if ((dim_commuting == dim_proper) != report.guaranteed) {
        std::cerr << "fatal: properness criterion disagrees with dimensions on " << n << "-"
                  << index << " (guaranteed=" << report.guaranteed << ", dims " << dim_commuting
                  << "/" << dim_proper << ")\n";
        violation = true;
      }
      std::cout << n << "-" << index << "," << (report.guaranteed ? "true" : "false") << ","
                << dim_commuting << "," << dim_proper << "\n";
      ++index;
    });
  }
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting maps on incidence algebras of finite pre-ordered sets"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_poset) {
    if (needs_poset)
      cmd->add_option("poset", opt.poset_file, "Pre-order JSON file")->required();
    cmd->add_option("--ring", opt.ring, "Coefficient ring: Z, Q, or Z/<m> (odd m)")
        ->each([&](const std::string&) { opt.ring_given = true; });
    cmd->add_option("--oracle-bound", opt.oracle_bound,
                    "Maximum set size for exhaustive/oracle operations (default 8)");
    cmd->add_option("--dot", opt.dot_path,
                    "Write the comparability graph and directed-edge graph as DOT");
    cmd->add_option("--seed", opt.seed, "Seed for randomized sanity sampling");
    return cmd;
  };

  CLI::App* analyze = add_common(
      app.add_subcommand("analyze", "Report edge classes and whether every commuting map is proper"),
      true);
  CLI::App* solve = add_common(
      app.add_subcommand("solve", "Compute a basis of the space of commuting maps"), true);
  CLI::App* witness = add_common(
      app.add_subcommand("witness", "Extract an improper commuting map if one exists"), true);
  CLI::App* verify = add_common(
      app.add_subcommand("verify", "Check a map file: commuting, shape, relations, properness"),
      true);
  verify->add_option("map", opt.map_file, "Map JSON file")->required();
  CLI::App* enumerate_cmd = add_common(
      app.add_subcommand("enumerate", "Scan all labeled pre-orders up to --max-size"), false);
  enumerate_cmd->add_option("--max-size", opt.max_size, "Largest set size to enumerate (<= 5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(solve)) return cmd_solve(opt);
    if (app.got_subcommand(witness)) return cmd_witness(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(opt);
  } catch (const incalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
