#include <cmath>
#include <json.hpp>
#include <limits>

#include "qre/core/error.hpp"
#include "qre/dfact/double_factorization.hpp"

namespace qre::dfact {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "qre.dfdecomposition";
constexpr int kVersion = 1;

json tolerance_to_json(double t) {
  if (std::isinf(t)) return nullptr;
  return t;
}

double tolerance_from_json(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

}  // namespace

std::string to_json(const DFDecomposition& df) {
  json out;
  out["format"] = kFormat;
  out["version"] = kVersion;
  out["n_orb"] = df.n_orb;
  out["core_energy"] = df.core_energy;
  out["tol_first"] = tolerance_to_json(df.tol_first);
  out["tol_second"] = tolerance_to_json(df.tol_second);
  out["discarded_first"] = df.discarded_first;
  out["h_bar"] = df.h_bar;
  json leaves = json::array();
  for (const auto& leaf : df.leaves) {
    json l;
    l["weight"] = leaf.weight;
    l["eigvals"] = leaf.eigvals;
    l["vecs"] = leaf.vecs;
    l["discarded_norm"] = leaf.discarded_norm;
    leaves.push_back(std::move(l));
  }
  out["leaves"] = std::move(leaves);
  return out.dump(1) + "\n";
}

DFDecomposition from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (in.at("format").get<std::string>() != kFormat) {
      throw Error(ErrorCategory::parse, "not a DF decomposition document");
    }
    DFDecomposition df;
    df.n_orb = in.at("n_orb").get<std::size_t>();
    df.core_energy = in.at("core_energy").get<double>();
    df.tol_first = tolerance_from_json(in.at("tol_first"));
    df.tol_second = tolerance_from_json(in.at("tol_second"));
    df.discarded_first = in.at("discarded_first").get<double>();
    df.h_bar = in.at("h_bar").get<std::vector<double>>();
    if (df.h_bar.size() != df.n_orb * df.n_orb) {
      throw Error(ErrorCategory::parse, "h_bar has the wrong size");
    }
    for (const auto& l : in.at("leaves")) {
      DFLeaf leaf;
      leaf.weight = l.at("weight").get<double>();
      leaf.eigvals = l.at("eigvals").get<std::vector<double>>();
      leaf.vecs = l.at("vecs").get<std::vector<double>>();
      leaf.discarded_norm = l.at("discarded_norm").get<double>();
      if (leaf.vecs.size() != leaf.eigvals.size() * df.n_orb) {
        throw Error(ErrorCategory::parse, "leaf vectors have the wrong size");
      }
      df.leaves.push_back(std::move(leaf));
    }
    return df;
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::parse, std::string("malformed DF document: ") + e.what());
  }
}

}  // namespace qre::dfact
