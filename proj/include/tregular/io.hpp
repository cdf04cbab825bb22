#pragma once

// Disk format for algebras (JSON structure constants) and deterministic text
// rendering of elements and polynomials for the command line.

#include "tregular/algebra.hpp"
#include "tregular/polymap.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tregular {

/// Index of a basis label, e.g. "e12" in a Clifford algebra.
inline int label_index(const Algebra& a, const std::string& label) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.label(i) == label) return i;
  throw std::invalid_argument("unknown basis label: " + label);
}

inline nlohmann::ordered_json algebra_to_json(const Algebra& a) {
  nlohmann::ordered_json j;
  j["name"] = a.name();
  j["labels"] = a.labels();
  const std::size_t d = static_cast<std::size_t>(a.dim());
  nlohmann::ordered_json products = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < d; ++k) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& t : a.product_terms(static_cast<int>(i), static_cast<int>(k)))
        terms.push_back({to_string(t.coeff), t.index});
      row.push_back(std::move(terms));
    }
    products.push_back(std::move(row));
  }
  j["products"] = std::move(products);
  nlohmann::ordered_json conj = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < d; ++k) row.push_back(to_string(a.conj_matrix()(i, k)));
    conj.push_back(std::move(row));
  }
  j["conj"] = std::move(conj);
  return j;
}

inline Algebra algebra_from_json(const nlohmann::json& j) {
  const std::string name = j.at("name").get<std::string>();
  const std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t d = labels.size();
  if (d == 0) throw std::invalid_argument("algebra file: empty basis");
  const auto& products = j.at("products");
  if (products.size() != d) throw std::invalid_argument("algebra file: product table must have dim rows");
  std::vector<std::vector<MulTerm>> rows;
  rows.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (products[i].size() != d) throw std::invalid_argument("algebra file: product table must be square");
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<MulTerm> terms;
      for (const auto& t : products[i][k]) {
        const int index = t.at(1).get<int>();
        if (index < 0 || index >= static_cast<int>(d)) throw std::invalid_argument("algebra file: term index range");
        terms.push_back(MulTerm{parse_rational(t.at(0).get<std::string>()), index});
      }
      rows.push_back(std::move(terms));
    }
  }
  Matrix<Rational> conj(d, d);
  const auto& cj = j.at("conj");
  if (cj.size() != d) throw std::invalid_argument("algebra file: conj matrix must have dim rows");
  for (std::size_t i = 0; i < d; ++i) {
    if (cj[i].size() != d) throw std::invalid_argument("algebra file: conj matrix must be square");
    for (std::size_t k = 0; k < d; ++k) conj(i, k) = parse_rational(cj[i][k].get<std::string>());
  }
  Algebra a = Algebra::from_structure(name, labels, std::move(rows), std::move(conj));
  validate_star_structure(a);
  return a;
}

/// Builtin name or a path to a JSON structure file.
inline Algebra load_algebra(const std::string& spec) {
  try {
    return builtin_algebra(spec);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("not a builtin algebra and not a readable file: " + spec);
  nlohmann::json j;
  in >> j;
  return algebra_from_json(j);
}

inline std::string format_element(const Element<Rational>& x) {
  const Algebra& a = x.algebra();
  std::string out;
  for (int i = 0; i < a.dim(); ++i) {
    const Rational& c = x[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool is_unit_label = i == 0;
    if (mag != 1 || is_unit_label) {
      out += to_string(mag);
      if (!is_unit_label) out += " ";
    }
    if (!is_unit_label) out += a.label(i);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_monomial(const MultiIndex& k, const std::string& stem = "x") {
  std::string out;
  for (std::size_t s = 0; s < k.size(); ++s) {
    if (k[s] == 0) continue;
    if (!out.empty()) out += " ";
    out += stem + std::to_string(s);
    if (k[s] > 1) out += "^" + std::to_string(k[s]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_poly(const PolyMap<Rational>& p, const std::string& stem = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    if (!out.empty()) out += "  +  ";
    out += format_monomial(k, stem) + " (" + format_element(c) + ")";
  }
  return out;
}

/// Fixed-format float rendering so reports are byte-stable.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace tregular
