#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "netcx/emit.hpp"
#include "netcx/error.hpp"
#include "netcx/ingest.hpp"
#include "netcx/metrics.hpp"
#include "netcx/reference.hpp"
#include "netcx/report.hpp"
#include "netcx/resource.hpp"
#include "netcx/topologies.hpp"

namespace fs = std::filesystem;
using namespace netcx;

namespace {

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path &path, const std::string &text) {
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Error("cannot write " + path.string());
}

std::vector<SourceText> collect_sources(const std::vector<std::string> &inputs) {
  std::vector<fs::path> files;
  for (const auto &input : inputs) {
    fs::path p(input);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto &entry : fs::directory_iterator(p))
        if (entry.is_regular_file())
          found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw Error("no such input: " + input);
    }
  }
  std::vector<SourceText> sources;
  for (const auto &f : files)
    sources.push_back({f.stem().string(), read_file(f)});
  return sources;
}

const char *extension(const std::string &format) {
  if (format == "md")
    return ".md";
  if (format == "csv")
    return ".csv";
  if (format == "dot")
    return ".dot";
  return ".graphml";
}

// One format: stdout or exactly --out. Several: one file per format next to --out.
void emit_outputs(const std::vector<std::pair<std::string, std::string>> &outputs, const std::string &out) {
  if (out.empty()) {
    for (const auto &[format, text] : outputs)
      std::cout << text;
    return;
  }
  if (outputs.size() == 1) {
    write_file(out, outputs.front().second);
    return;
  }
  for (const auto &[format, text] : outputs) {
    fs::path p(out);
    p.replace_extension(extension(format));
    write_file(p, text);
  }
}

Taxonomy load_taxonomy(const std::string &path) { return path.empty() ? Taxonomy::builtin() : Taxonomy::load(path); }

MetricsRow parse_row(const std::string &line, const std::string &origin) {
  std::vector<std::string> cells;
  std::stringstream s(line);
  std::string cell;
  while (std::getline(s, cell, ','))
    cells.push_back(cell);
  if (cells.size() != 7)
    throw ParseError(origin + ": expected 7 columns, got " + std::to_string(cells.size()));
  try {
    MetricsRow row;
    row.topology_name = cells[0];
    row.nodes_per_endpoint = std::stod(cells[1]);
    row.l_edges = std::stoul(cells[2]);
    row.t_edges = std::stoul(cells[3]);
    row.i_types = std::stoul(cells[4]);
    row.p_types = std::stoul(cells[5]);
    row.ip_excess_degree = std::stoul(cells[6]);
    return row;
  } catch (const std::logic_error &) {
    throw ParseError(origin + ": malformed row '" + line + "'");
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Configuration complexity metrics for network abstraction models"};
  app.require_subcommand(1);

  std::string dialect_name, taxonomy_path, out, topology_name;
  std::vector<std::string> inputs;
  std::vector<std::string> formats;
  TopologyParams params;
  bool no_acls = false;

  const std::vector<std::string> kFormats{"csv", "md", "dot", "graphml"};
  const std::vector<std::string> kDialects{"azure", "k8s", "cli", "aci"};
  std::vector<std::string> topology_names;
  for (auto id : all_topologies())
    topology_names.emplace_back(to_string(id));

  auto *analyze = app.add_subcommand("analyze", "Measure configuration files of one dialect");
  analyze->add_option("--dialect", dialect_name)->required()->check(CLI::IsMember(kDialects));
  analyze->add_option("--input", inputs, "File or directory (repeatable)")->required();
  analyze->add_option("--taxonomy", taxonomy_path, "Replaces the built-in taxonomy")->check(CLI::ExistingFile);
  analyze->add_option("--out", out);
  analyze->add_option("--format", formats)->check(CLI::IsMember(kFormats));
  std::string row_name;
  analyze->add_option("--name", row_name, "Row label (default: dialect)");

  auto *generate_cmd = app.add_subcommand("generate", "Write a reference topology in its native format");
  generate_cmd->add_option("--topology", topology_name)->required()->check(CLI::IsMember(topology_names));
  generate_cmd->add_option("--out", out, "Output directory (default: stdout)");
  generate_cmd->add_option("--app-units", params.app_units);
  generate_cmd->add_option("--tiers", params.tiers);
  generate_cmd->add_option("--shared-services", params.shared_services);
  generate_cmd->add_option("--endpoints-per-tier", params.endpoints_per_tier);
  generate_cmd->add_flag("--no-acls", no_acls, "cli-3 only");

  auto *compare = app.add_subcommand("compare", "Merge stored CSV rows into one table");
  compare->add_option("--input", inputs, "CSV row files (repeatable)")->required()->check(CLI::ExistingFile);
  compare->add_option("--out", out);
  compare->add_option("--format", formats)->check(CLI::IsMember(std::vector<std::string>{"csv", "md"}));

  auto *reproduce = app.add_subcommand("reproduce", "Measure all six default topologies against the reference rows");
  reproduce->add_option("--taxonomy", taxonomy_path)->check(CLI::ExistingFile);
  reproduce->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      auto dialect = *parse_dialect_name(dialect_name);
      auto taxonomy = load_taxonomy(taxonomy_path);
      auto sources = collect_sources(inputs);
      if (sources.empty())
        throw Error("no resources: no input files");
      auto set = parse_sources(dialect, sources);
      for (const auto &w : set.warnings)
        std::cerr << "warning: " << w << '\n';
      if (set.resources.empty())
        throw Error("no resources found in input");
      auto name = row_name.empty() ? dialect_name : row_name;
      auto graph = build_graph(set, taxonomy, name);
      if (formats.empty())
        formats.push_back("csv");
      std::vector<std::pair<std::string, std::string>> outputs;
      for (const auto &f : formats) {
        if (f == "csv" || f == "md") {
          MetricsRow row = compute_metrics(graph, name);
          outputs.emplace_back(f, render_comparison(std::span(&row, 1), f == "csv" ? TableFormat::csv : TableFormat::markdown));
        } else if (f == "dot") {
          outputs.emplace_back(f, export_dot(summarize_types(graph), name));
        } else {
          outputs.emplace_back(f, export_graphml(graph));
        }
      }
      emit_outputs(outputs, out);
    } else if (generate_cmd->parsed()) {
      auto id = *parse_topology_id(topology_name);
      params.cli_acls = !no_acls;
      auto set = generate({id, params});
      auto dialect = dialect_of(id);
      auto files = emit_native(dialect, set);
      std::string ext(native_extension(dialect));
      for (const auto &f : files) {
        if (out.empty())
          std::cout << f.text;
        else
          write_file(fs::path(out) / (f.name + "." + ext), f.text);
      }
    } else if (compare->parsed()) {
      std::vector<MetricsRow> rows;
      for (const auto &input : inputs) {
        std::stringstream s(read_file(input));
        std::string line;
        while (std::getline(s, line)) {
          if (!line.empty() && line.back() == '\r')
            line.pop_back();
          if (line.empty() || line.rfind("Topology,", 0) == 0)
            continue;
          rows.push_back(parse_row(line, input));
        }
      }
      if (rows.empty())
        throw Error("no rows to compare");
      if (formats.empty())
        formats.push_back("md");
      std::vector<std::pair<std::string, std::string>> outputs;
      for (const auto &f : formats)
        outputs.emplace_back(f, render_comparison(rows, f == "csv" ? TableFormat::csv : TableFormat::markdown));
      emit_outputs(outputs, out);
    } else if (reproduce->parsed()) {
      auto text = reproduce_report(load_taxonomy(taxonomy_path));
      if (out.empty())
        std::cout << text;
      else
        write_file(out, text);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
