// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "furst/finset.hpp"
#include "furst/groups.hpp"
#include "furst/measure.hpp"

namespace furst {

/// Malformed content: wrong schema, bad weights, bad elements.
class MeasureFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing or unreadable file).
class MeasureIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyMeasure = std::variant<FiniteSupportMeasure<FinSetGroup>,
                                FiniteSupportMeasure<IntegerGroup>,
                                FiniteSupportMeasure<CyclicGroup>>;

namespace detail {

inline constexpr double kLoadMassTolerance = 1e-9;

inline double read_weight(const nlohmann::json& atom) {
  if (!atom.contains("w") || !atom["w"].is_number())
    throw MeasureFormatError("measure file: each atom needs a numeric \"w\"");
  const double w = atom["w"].get<double>();
  if (!std::isfinite(w) || w < 0.0)
    throw MeasureFormatError("measure file: weights must be finite and >= 0");
  return w;
}

template <typename G, typename ParseElement>
FiniteSupportMeasure<G> parse_atoms(G group, const nlohmann::json& doc,
                                    ParseElement&& parse_element) {
  if (!doc.contains("atoms") || !doc["atoms"].is_array() || doc["atoms"].empty())
    throw MeasureFormatError("measure file: \"atoms\" must be a nonempty array");
  std::vector<std::pair<typename G::Element, double>> atoms;
  double mass = 0.0;
  for (const auto& atom : doc["atoms"]) {
    if (!atom.is_object() || !atom.contains("g"))
      throw MeasureFormatError("measure file: each atom needs \"g\" and \"w\"");
    const double w = read_weight(atom);
    atoms.emplace_back(parse_element(atom["g"]), w);
    mass += w;
  }
  if (std::abs(mass - 1.0) > kLoadMassTolerance)
    throw MeasureFormatError("measure file: weights must sum to 1 within 1e-9");
  for (auto& [g, w] : atoms) w /= mass;
  try {
    return FiniteSupportMeasure<G>(std::move(group), std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw MeasureFormatError(std::string("measure file: ") + e.what());
  }
}

inline FinSet parse_finset_element(const nlohmann::json& g) {
  if (!g.is_array())
    throw MeasureFormatError("measure file: finset elements are arrays of naturals");
  std::vector<std::uint32_t> elems;
  long long prev = 0;
  for (const auto& v : g) {
    if (!v.is_number_integer())
      throw MeasureFormatError("measure file: finset entries must be integers");
    const long long e = v.get<long long>();
    if (e < 1)
      throw MeasureFormatError("measure file: finset entries must be >= 1");
    if (e <= prev)
      throw MeasureFormatError("measure file: finset entries must be sorted ascending");
    prev = e;
    elems.push_back(static_cast<std::uint32_t>(e));
  }
  return FinSet(std::move(elems));
}

}  // namespace detail

/// Parses the measure document {"group": ..., "atoms": [{"g":..., "w":...}]}.
/// Weights must total 1 within 1e-9 and are renormalized exactly on load.
inline AnyMeasure parse_measure(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("group") || !doc["group"].is_string())
    throw MeasureFormatError("measure file: top level needs a \"group\" string");
  const std::string kind = doc["group"].get<std::string>();

  if (kind == "finset")
    return detail::parse_atoms(FinSetGroup{}, doc, detail::parse_finset_element);

  if (kind == "integer")
    return detail::parse_atoms(IntegerGroup{}, doc, [](const nlohmann::json& g) {
      if (!g.is_number_integer())
        throw MeasureFormatError("measure file: integer elements must be integers");
      return g.get<std::int64_t>();
    });

  if (kind == "cyclic") {
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
      throw MeasureFormatError("measure file: cyclic group needs a positive \"n\"");
    const auto n = static_cast<std::uint32_t>(doc["n"].get<long long>());
    return detail::parse_atoms(CyclicGroup(n), doc, [n](const nlohmann::json& g) {
      if (!g.is_number_integer())
        throw MeasureFormatError("measure file: cyclic elements must be integers");
      const long long v = g.get<long long>();
      if (v < 0 || v >= static_cast<long long>(n))
        throw MeasureFormatError("measure file: cyclic elements must lie in [0, n)");
      return static_cast<std::uint32_t>(v);
    });
  }

  throw MeasureFormatError("measure file: unknown group \"" + kind + "\"");
}

inline AnyMeasure load_measure(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MeasureFormatError(std::string("measure file: invalid JSON: ") + e.what());
  }
  return parse_measure(doc);
}

inline AnyMeasure load_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeasureIoError("cannot open measure file: " + path);
  return load_measure(in);
}

}  // namespace furst
