#include <brickbasis/builder.hpp>
#include <brickbasis/decomposition.hpp>
#include <brickbasis/errors.hpp>
#include <brickbasis/scene_io.hpp>
#include <brickbasis/tree.hpp>
#include <brickbasis/verifier.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace brickbasis;

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_invalid_input = 2;

std::vector<std::string> split_list(const std::string &text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    parts.push_back(item);
  return parts;
}

std::vector<long long> parse_int_list(const std::string &text,
                                      std::size_t expected,
                                      const std::string &flag) {
  std::vector<long long> values;
  for (const std::string &item : split_list(text)) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw invalid_input(flag + ": cannot parse integer '" + item + "'");
    }
  }
  if (values.size() != expected)
    throw invalid_input(flag + ": expected " + std::to_string(expected) +
                        " comma-separated values");
  return values;
}

std::vector<rational> parse_rational_list(const std::string &text,
                                          std::size_t expected,
                                          const std::string &flag) {
  std::vector<rational> values;
  for (const std::string &item : split_list(text)) {
    try {
      values.push_back(rational::parse(item));
    } catch (const invalid_input &) {
      throw invalid_input(flag + ": cannot parse rational '" + item + "'");
    }
  }
  if (values.size() != expected)
    throw invalid_input(flag + ": expected " + std::to_string(expected) +
                        " comma-separated values");
  return values;
}

problem_spec spec_from_flags(std::size_t n, const std::string &s_text,
                             const std::string &x_text) {
  if (n < 1)
    throw invalid_input("--n must be at least 1");
  std::vector<long long> s = parse_int_list(s_text, n, "--s");
  std::vector<rational> x =
      x_text.empty() ? std::vector<rational>(n, rational(0))
                     : parse_rational_list(x_text, n, "--x");
  return problem_spec::make(std::move(s), std::move(x));
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw invalid_input("cannot open '" + path + "' for writing");
  out << content;
  if (!out)
    throw invalid_input("failed writing '" + path + "'");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw invalid_input("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_tree(std::size_t n, const std::string &s_text,
             const std::string &format) {
  const labeled_tree tree = generate_tree(spec_from_flags(n, s_text, ""));
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = tree.n();
    doc["s"] = tree.spec().s;
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= tree.size(); ++i) {
      const labeled_node &v = tree.node(i);
      nlohmann::ordered_json entry;
      entry["index"] = i;
      entry["left"] = v.left ? nlohmann::ordered_json(*v.left)
                             : nlohmann::ordered_json(nullptr);
      entry["right"] = v.right ? nlohmann::ordered_json(*v.right)
                               : nlohmann::ordered_json(nullptr);
      entry["phi"] = v.phi;
      entry["r"] = v.r;
      entry["h"] = v.height;
      nodes.push_back(std::move(entry));
    }
    doc["nodes"] = std::move(nodes);
    std::cout << doc.dump(2) << "\n";
  } else if (format == "text") {
    std::cout << print_tree_table(tree);
  } else {
    throw invalid_input("--format must be text or json");
  }
  return exit_ok;
}

std::string render_q(const basis_element &element) {
  std::ostringstream out;
  for (std::size_t j = 0; j < element.roots.size(); ++j) {
    const long long r = element.roots[j];
    if (r == 0)
      out << "x" << j + 1;
    else
      out << "(x" << j + 1 << (r > 0 ? "+" : "-") << std::llabs(r) << ")";
  }
  const bigint denom = factorial(element.roots.size());
  if (denom > 1)
    out << "/" << denom.str();
  return out.str();
}

int run_decompose(std::size_t n, const std::string &s_text) {
  const decomposition decomp =
      roots_and_coefs(generate_tree(spec_from_flags(n, s_text, "")));
  for (const basis_element &element : decomp.elements) {
    std::ostringstream subset, roots;
    subset << "{";
    for (std::size_t i = 0; i < element.subset.size(); ++i)
      subset << (i ? "," : "") << element.subset[i];
    subset << "}";
    roots << "(";
    for (std::size_t i = 0; i < element.roots.size(); ++i)
      roots << (i ? "," : "") << element.roots[i];
    roots << ")";
    std::cout << element.bits << "  " << subset.str() << "  " << roots.str()
              << "  " << render_q(element) << "  "
              << element.coefficient.str() << "\n";
  }
  return exit_ok;
}

int run_identity(std::size_t n, const std::string &s_text) {
  const bool ok = verify_identity(spec_from_flags(n, s_text, ""));
  std::cout << (ok ? "identity holds\n" : "identity violated\n");
  return ok ? exit_ok : exit_verification_failed;
}

int run_build(std::size_t n, const std::string &s_text,
              const std::string &x_text, const std::string &start_text,
              long long seed, const std::string &out_path,
              const std::string &off_path) {
  const labeled_tree tree =
      generate_tree(spec_from_flags(n, s_text, x_text));

  start_request request = start_request::automatic();
  if (start_text == "root") {
    request = start_request::root();
  } else if (start_text != "auto") {
    try {
      std::size_t used = 0;
      const unsigned long long index = std::stoull(start_text, &used);
      if (used != start_text.size())
        throw std::invalid_argument(start_text);
      request = start_request::at(index);
    } catch (const std::exception &) {
      throw invalid_input("--start must be auto, root, or a node index");
    }
  }

  const std::size_t start = choose_start(tree, request);
  const scene scn = build(tree, start, seed);
  const std::string document = export_scene(scn);

  if (!out_path.empty())
    write_file(out_path, document);
  else
    std::cout << document;
  if (!off_path.empty())
    write_file(off_path, export_off(scn));

  std::cerr << "built " << scn.bricks.size() << " bricks in " << scn.m
            << "D from node " << start << "\n";
  return exit_ok;
}

int run_verify(const std::string &scene_path, bool lattice,
               unsigned long long resolution) {
  const scene scn = import_scene(read_file(scene_path));
  const tiling_report report = verify_tiling(scn);

  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "contained: " << yesno(report.contained) << "\n";
  std::cout << "interior_disjoint: " << yesno(report.disjoint) << "\n";
  std::cout << "brick_volume_sum: " << report.brick_volume_sum.str() << "\n";
  std::cout << "target_volume: " << report.target_volume.str() << "\n";
  std::cout << "volume_ok: " << yesno(report.volume_ok) << "\n";
  for (const tiling_violation &violation : report.violations) {
    std::cout << "violation: " << violation.kind;
    for (std::size_t id : violation.bricks)
      std::cout << " " << id;
    std::cout << "\n";
  }
  bool ok = report.exact_tiling();
  std::cout << "exact_tiling: " << yesno(ok) << "\n";

  if (lattice) {
    const unsigned long long r =
        resolution > 0 ? resolution : natural_lattice_resolution(scn);
    const bool covered = lattice_cover_check(scn, r);
    std::cout << "lattice_cover: " << yesno(covered) << " (resolution " << r
              << ")\n";
    ok = ok && covered;
  }
  return ok ? exit_ok : exit_verification_failed;
}

int run_eulerian(std::size_t n) {
  if (n < 1)
    throw invalid_input("--n must be at least 1");
  const refinement_groups groups = refinement_by_subset_size(n);
  bool ok = groups.sums_by_size[0] == 0;
  std::cout << "|S|  coef_sum  eulerian\n";
  std::cout << "  0  " << groups.sums_by_size[0].str() << "  0\n";
  for (std::size_t k = 1; k <= n; ++k) {
    ok = ok && groups.sums_by_size[k] == groups.eulerian_row[k];
    std::cout << "  " << k << "  " << groups.sums_by_size[k].str() << "  "
              << groups.eulerian_row[k].str() << "\n";
  }
  const bigint expected_total = factorial(n);
  ok = ok && groups.total == expected_total;
  std::cout << "total " << groups.total.str() << " expected "
            << expected_total.str() << "\n";
  std::cout << (ok ? "refinement holds\n" : "refinement violated\n");
  return ok ? exit_ok : exit_verification_failed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"binomial-basis decomposition and brick constructions for "
               "multilinear polynomials with integer roots"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string s_text, x_text, format = "text", start_text = "auto";
  std::string out_path, off_path, scene_path;
  long long seed = 0;
  bool lattice = false;
  unsigned long long resolution = 0;

  CLI::App *tree_cmd = app.add_subcommand("tree", "print the labeled tree");
  tree_cmd->add_option("--n", n, "number of variables")->required();
  tree_cmd->add_option("--s", s_text, "roots s_1,...,s_n")->required();
  tree_cmd->add_option("--format", format, "text or json");

  CLI::App *decompose_cmd =
      app.add_subcommand("decompose", "print the basis elements and "
                                      "coefficients");
  decompose_cmd->add_option("--n", n, "number of variables")->required();
  decompose_cmd->add_option("--s", s_text, "roots s_1,...,s_n")->required();

  CLI::App *identity_cmd =
      app.add_subcommand("identity", "verify the decomposition identity");
  identity_cmd->add_option("--n", n, "number of variables")->required();
  identity_cmd->add_option("--s", s_text, "roots s_1,...,s_n")->required();

  CLI::App *build_cmd =
      app.add_subcommand("build", "build the brick construction");
  build_cmd->add_option("--n", n, "number of variables")->required();
  build_cmd->add_option("--s", s_text, "roots s_1,...,s_n")->required();
  build_cmd->add_option("--x", x_text, "edge lengths x_1,...,x_n")->required();
  build_cmd->add_option("--start", start_text, "auto, root, or a node index");
  build_cmd->add_option("--seed", seed, "palette seed");
  build_cmd->add_option("--out", out_path, "write the scene document here");
  build_cmd->add_option("--off", off_path, "write an OFF mesh here");

  CLI::App *verify_cmd =
      app.add_subcommand("verify", "certify a scene document");
  verify_cmd->add_option("--scene", scene_path, "scene document path")
      ->required();
  verify_cmd->add_flag("--lattice", lattice, "also run the lattice oracle");
  verify_cmd->add_option("--resolution", resolution,
                         "lattice resolution (default: least common "
                         "denominator)");

  CLI::App *eulerian_cmd = app.add_subcommand(
      "eulerian", "coefficient sums by subset size vs Eulerian numbers");
  eulerian_cmd->add_option("--n", n, "number of variables")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &help) {
    return app.exit(help);
  } catch (const CLI::ParseError &err) {
    app.exit(err);
    return exit_invalid_input;
  }

  try {
    if (tree_cmd->parsed())
      return run_tree(n, s_text, format);
    if (decompose_cmd->parsed())
      return run_decompose(n, s_text);
    if (identity_cmd->parsed())
      return run_identity(n, s_text);
    if (build_cmd->parsed())
      return run_build(n, s_text, x_text, start_text, seed, out_path,
                       off_path);
    if (verify_cmd->parsed())
      return run_verify(scene_path, lattice, resolution);
    if (eulerian_cmd->parsed())
      return run_eulerian(n);
  } catch (const construction_error &err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_invalid_input;
  } catch (const invalid_input &err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_invalid_input;
  }
  return exit_ok;
}
