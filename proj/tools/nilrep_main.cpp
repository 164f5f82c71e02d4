#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilrep/bch.hpp"
#include "nilrep/corpus.hpp"
#include "nilrep/json_io.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/representation.hpp"
#include "nilrep/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

int max_dim_cap() {
  const char* env = std::getenv("NILREP_MAX_DIM");
  if (!env) return 8;
  try {
    size_t used = 0;
    const int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 1)
      throw nilrep::BadParameter("NILREP_MAX_DIM must be a positive integer");
    return value;
  } catch (const nilrep::BadParameter&) {
    throw;
  } catch (...) {
    throw nilrep::BadParameter("NILREP_MAX_DIM must be a positive integer");
  }
}

nilrep::LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nilrep::ParseError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nilrep::LieAlgebra g = nilrep::algebra_from_json(buffer.str());
  const int cap = max_dim_cap();
  if (g.dim() > cap) {
    throw nilrep::BadParameter("input dimension " + std::to_string(g.dim()) +
                               " exceeds the NILREP_MAX_DIM cap of " +
                               std::to_string(cap));
  }
  return g;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw nilrep::ParseError("cannot write output file '" + out_path + "'");
  out << text;
}

nilrep::Vec parse_coords(const std::string& csv, int dim) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  if (static_cast<int>(parts.size()) != dim)
    throw nilrep::DimensionMismatch("expected " + std::to_string(dim) +
                                    " comma-separated coordinates");
  nilrep::Vec v;
  v.reserve(parts.size());
  for (const auto& p : parts) v.push_back(nilrep::Rational::parse(p));
  return v;
}

json coords_json(const nilrep::Vec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(c.str());
  return arr;
}

json report_row(const nilrep::VerificationReport& report) {
  json row;
  row["name"] = report.algebra;
  row["dim_g"] = report.dim_g;
  row["N"] = report.N;
  row["dim_FG"] = report.dim_fg;
  row["max_nilpotence_index"] = report.max_nilpotence_index;
  row["bound"] = report.bound;
  row["pass"] = report.all_pass();
  return row;
}

void print_report_table(const std::vector<nilrep::VerificationReport>& reports) {
  size_t name_width = 7;
  for (const auto& r : reports) name_width = std::max(name_width, r.algebra.size());
  std::cout << std::left << std::setw(static_cast<int>(name_width) + 2) << "algebra"
            << std::right << std::setw(6) << "dim_g" << std::setw(4) << "N"
            << std::setw(8) << "dim_FG" << std::setw(11) << "max_index" << std::setw(7)
            << "bound" << "  result\n";
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(static_cast<int>(name_width) + 2) << r.algebra
              << std::right << std::setw(6) << r.dim_g << std::setw(4) << r.N
              << std::setw(8) << r.dim_fg << std::setw(11) << r.max_nilpotence_index
              << std::setw(7) << r.bound << "  " << (r.all_pass() ? "pass" : "FAIL")
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilrep: exact construction and verification of faithful nilpotent "
               "representations on polynomial spaces"};
  app.require_subcommand(1);

  std::string path, out_path, x_csv, y_csv, family;
  std::optional<int> parameter;
  std::vector<std::string> paths;
  int samples = 100;
  uint64_t seed = 42;
  int height = nilrep::Sampler::kDefaultHeight;

  CLI::App* validate = app.add_subcommand("validate", "Validate an algebra file");
  validate->add_option("path", path)->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "Lower central series, degree and center");
  analyze->add_option("path", path)->required();

  CLI::App* bch = app.add_subcommand("bch", "Group product x * y");
  bch->add_option("path", path)->required();
  bch->add_option("--x", x_csv, "comma-separated rational coordinates")->required();
  bch->add_option("--y", y_csv, "comma-separated rational coordinates")->required();

  CLI::App* represent =
      app.add_subcommand("represent", "Build the representation and dump it");
  represent->add_option("path", path)->required();
  represent->add_option("--out", out_path, "write JSON here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Run the exact verification suite");
  verify->add_option("path", path)->required();
  verify->add_option("--samples", samples, "samples per identity check");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--height", height, "max numerator/denominator of samples");
  verify->add_option("--out", out_path, "write the report JSON here too");

  CLI::App* corpus = app.add_subcommand("corpus", "Emit a standard algebra");
  corpus->add_option("family", family)->required();
  corpus->add_option("parameter", parameter, "family-specific size");
  corpus->add_option("--out", out_path, "write JSON here instead of stdout");

  CLI::App* report =
      app.add_subcommand("report", "Verification table over several algebras");
  report->add_option("paths", paths)->required()->expected(-1);
  report->add_option("--samples", samples, "samples per identity check");
  report->add_option("--seed", seed, "sampling seed");
  report->add_option("--height", height, "max numerator/denominator of samples");
  report->add_option("--out", out_path, "write the JSON document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      const nilrep::LieAlgebra g = load_algebra(path);
      json doc;
      doc["valid"] = true;
      doc["name"] = g.name();
      doc["dim"] = g.dim();
      doc["N"] = g.nilpotency_degree();
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    if (analyze->parsed()) {
      const nilrep::LieAlgebra g = load_algebra(path);
      json doc;
      doc["name"] = g.name();
      doc["dim"] = g.dim();
      json dims = json::array();
      for (const auto& layer : g.lower_central_series()) dims.push_back(layer.dim());
      doc["lcs_dims"] = std::move(dims);
      doc["N"] = g.nilpotency_degree();
      json center = json::array();
      for (const auto& row : g.center().row_vectors()) center.push_back(coords_json(row));
      doc["center"] = std::move(center);
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    if (bch->parsed()) {
      const nilrep::LieAlgebra g = load_algebra(path);
      const nilrep::Vec x = parse_coords(x_csv, g.dim());
      const nilrep::Vec y = parse_coords(y_csv, g.dim());
      json doc;
      doc["x"] = coords_json(x);
      doc["y"] = coords_json(y);
      doc["product"] = coords_json(nilrep::bch_product(g, x, y));
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    if (represent->parsed()) {
      const nilrep::LieAlgebra g = load_algebra(path);
      emit(nilrep::representation_to_json(nilrep::build_representation(g)), out_path);
      return 0;
    }
    if (verify->parsed()) {
      const nilrep::LieAlgebra g = load_algebra(path);
      nilrep::VerifyOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.height = height;
      const nilrep::VerificationReport rep = nilrep::run_verification(g, opts);
      const std::string text = nilrep::report_to_json(rep);
      std::cout << text;
      if (!out_path.empty()) emit(text, out_path);
      return rep.all_pass() ? 0 : 1;
    }
    if (corpus->parsed()) {
      const nilrep::LieAlgebra g = nilrep::make_by_name(family, parameter);
      emit(nilrep::algebra_to_json(g), out_path);
      return 0;
    }
    if (report->parsed()) {
      nilrep::VerifyOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.height = height;
      std::vector<nilrep::VerificationReport> reports;
      for (const auto& p : paths) reports.push_back(nilrep::run_verification(load_algebra(p), opts));
      print_report_table(reports);
      json doc;
      json rows = json::array();
      for (const auto& r : reports) rows.push_back(report_row(r));
      doc["rows"] = std::move(rows);
      json full = json::array();
      for (const auto& r : reports) full.push_back(json::parse(nilrep::report_to_json(r)));
      doc["reports"] = std::move(full);
      if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
      } else {
        emit(doc.dump(2) + "\n", out_path);
      }
      for (const auto& r : reports)
        if (!r.all_pass()) return 1;
      return 0;
    }
  } catch (const nilrep::JacobiViolation& e) {
    json doc;
    doc["error"]["kind"] = e.kind();
    doc["error"]["message"] = e.what();
    doc["error"]["indices"] = {e.i, e.j, e.k};
    std::cout << doc.dump(2) << "\n";
    return 1;
  } catch (const nilrep::Error& e) {
    json doc;
    doc["error"]["kind"] = e.kind();
    doc["error"]["message"] = e.what();
    std::cout << doc.dump(2) << "\n";
    return 1;
  }
  return 2;
}
