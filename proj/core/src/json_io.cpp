#include "nilrep/json_io.hpp"

#include <json.hpp>

#include "nilrep/errors.hpp"

namespace nilrep {

using json = nlohmann::ordered_json;

namespace {

json poly_to_json_obj(const PolyFun& phi) {
  json terms = json::array();
  for (const auto& [e, c] : phi.terms()) {
    json term;
    term["exp"] = e;
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  json doc;
  doc["vars"] = phi.vars();
  doc["terms"] = std::move(terms);
  return doc;
}

PolyFun poly_from_json_obj(const json& doc) {
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("terms"))
    throw ParseError("polynomial document needs 'vars' and 'terms'");
  const int vars = doc.at("vars").get<int>();
  if (vars < 0) throw ParseError("polynomial variable count must be nonnegative");
  PolyFun p(vars);
  for (const auto& term : doc.at("terms")) {
    const auto exps = term.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != vars)
      throw ParseError("term exponent length does not match 'vars'");
    for (int e : exps)
      if (e < 0) throw ParseError("negative exponent in polynomial term");
    p.add_term(exps, Rational::parse(term.at("coeff").get<std::string>()));
  }
  return p;
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("input is not valid JSON");
  return doc;
}

}  // namespace

LieAlgebra algebra_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("dim"))
    throw ParseError("algebra document needs a 'dim' field");
  const int dim = doc.at("dim").get<int>();
  std::string name = doc.value("name", std::string("g"));
  std::vector<std::string> basis;
  if (doc.contains("basis")) basis = doc.at("basis").get<std::vector<std::string>>();
  LieAlgebra::StructureMap structure;
  if (doc.contains("brackets")) {
    for (const auto& entry : doc.at("brackets")) {
      const int i = entry.at("i").get<int>();
      const int j = entry.at("j").get<int>();
      const auto coeff_strs = entry.at("coeffs").get<std::vector<std::string>>();
      Vec coeffs;
      coeffs.reserve(coeff_strs.size());
      for (const auto& s : coeff_strs) coeffs.push_back(Rational::parse(s));
      if (structure.count({i, j}))
        throw ParseError("duplicate bracket entry for the same basis pair");
      structure[{i, j}] = std::move(coeffs);
    }
  }
  return LieAlgebra(dim, std::move(basis), std::move(structure), std::move(name));
}

std::string algebra_to_json(const LieAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["dim"] = g.dim();
  doc["basis"] = g.basis_names();
  json brackets = json::array();
  for (const auto& [pair, coeffs] : g.structure()) {
    json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    json cs = json::array();
    for (const auto& c : coeffs) cs.push_back(c.str());
    entry["coeffs"] = std::move(cs);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

PolyFun poly_from_json(const std::string& text) {
  return poly_from_json_obj(parse_document(text));
}

std::string poly_to_json(const PolyFun& phi) {
  return poly_to_json_obj(phi).dump(2) + "\n";
}

std::string representation_to_json(const Representation& rep) {
  const LieAlgebra& g = rep.space.algebra;
  json doc;
  doc["algebra"] = g.name();
  doc["dim_g"] = g.dim();
  doc["N"] = g.nilpotency_degree();
  doc["bound"] = rep.bound;
  doc["dim_FG"] = rep.dim();
  json basis = json::array();
  for (const auto& phi : rep.space.basis) basis.push_back(poly_to_json_obj(phi));
  doc["basis"] = std::move(basis);
  json generators = json::array();
  for (size_t i = 0; i < rep.generators.size(); ++i) {
    json entry;
    entry["x"] = i;
    json matrix = json::array();
    for (int r = 0; r < rep.generators[i].rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < rep.generators[i].cols(); ++c)
        row.push_back(rep.generators[i].at(r, c).str());
      matrix.push_back(std::move(row));
    }
    entry["matrix"] = std::move(matrix);
    generators.push_back(std::move(entry));
  }
  doc["generators"] = std::move(generators);
  return doc.dump(2) + "\n";
}

}  // namespace nilrep
