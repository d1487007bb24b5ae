#ifndef WITTLANG_IO_HPP
#define WITTLANG_IO_HPP

// JSON and CSV encodings of the library's values and reports.
//
// Matrix entries are written as one integer per field element: the
// coefficient vector (c_0, ..., c_{r-1}) packs to sum c_t p^t, so prime-field
// entries are their own value. Readers also accept the unpacked list form.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittlang/covers.hpp"
#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/group_table.hpp"
#include "wittlang/hopf.hpp"
#include "wittlang/lang.hpp"
#include "wittlang/lgroup.hpp"
#include "wittlang/matrix.hpp"
#include "wittlang/quasip.hpp"
#include "wittlang/subgrp.hpp"

namespace wittlang::io {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Fields

inline json to_json(const gf::FieldSpec& spec) { return {{"p", spec.p}, {"r", spec.r}, {"modulus", spec.modulus}}; }

inline gf::FieldSpec field_spec_from_json(const json& j) {
  try {
    gf::FieldSpec spec{j.at("p").get<int>(), j.at("r").get<int>(), j.at("modulus").get<std::vector<int>>()};
    gf::validate(spec);
    return spec;
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed field spec: ") + e.what());
  }
}

inline json to_json(const gf::FieldElem& a) { return {{"coeffs", a.coeffs()}}; }

inline gf::FieldElem field_elem_from_json(const json& j, const FieldPtr& field) {
  try {
    const auto cs = j.at("coeffs").get<std::vector<int>>();
    if (static_cast<int>(cs.size()) > field->degree()) throw SpecError("too many coefficients for the field");
    return {field, std::span<const int>(cs)};
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed field element: ") + e.what());
  }
}

inline std::int64_t pack(const Field& f, const Coeffs& c) {
  std::int64_t out = 0;
  for (int t = f.degree(); t-- > 0;) out = out * f.p() + c[t];
  return out;
}

inline Coeffs unpack(const Field& f, const json& j) {
  if (j.is_array()) {
    const auto cs = j.get<std::vector<int>>();
    if (static_cast<int>(cs.size()) > f.degree()) throw SpecError("too many coefficients for the field");
    return f.from_vector(cs);
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= f.size()) throw SpecError("packed field entry out of range");
  std::vector<int> cs;
  std::int64_t rest = v;
  for (int t = 0; t < f.degree(); ++t) {
    cs.push_back(static_cast<int>(rest % f.p()));
    rest /= f.p();
  }
  return f.from_vector(cs);
}

// ---------------------------------------------------------------------------
// Matrices and group elements

inline json to_json(const Field& f, const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(pack(f, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat mat_from_json(const Field& f, const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw SpecError("matrix must have " + std::to_string(n) + " rows");
  Mat m = Mat::square(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
      throw SpecError("matrix row must have " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) m.at(i, c) = unpack(f, j[i][c]);
  }
  return m;
}

inline json to_json(const TruncElem& a) {
  json coeffs = json::array();
  for (int k = 1; k <= a.d(); ++k) coeffs.push_back(to_json(*a.field(), a.coeff(k)));
  return {{"n", a.n()}, {"d", a.d()}, {"field", to_json(a.field()->spec())}, {"coeffs", std::move(coeffs)}};
}

inline TruncElem trunc_elem_from_json(const json& j) {
  try {
    const FieldPtr field = gf::make_field(field_spec_from_json(j.at("field")));
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    if (n < 1 || d < 1) throw DomainError("group shape must have n, d >= 1");
    const json& cs = j.at("coeffs");
    if (!cs.is_array() || static_cast<int>(cs.size()) != d) throw SpecError("expected one matrix per level");
    std::vector<Mat> ms;
    for (int k = 0; k < d; ++k) ms.push_back(mat_from_json(*field, cs[k], n));
    return TruncElem(field, n, d, ms);
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed group element: ") + e.what());
  }
}

inline json to_json(const PuncturedElem& a) {
  json out = to_json(a.body);
  out["nu"] = a.nu;
  return out;
}

inline PuncturedElem punctured_elem_from_json(const json& j) {
  try {
    return {j.at("nu").get<std::int64_t>(), trunc_elem_from_json(j)};
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed punctured element: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Hopf tensors

inline json to_json(const HopfMonomial& m) {
  json out = json::array();
  for (const auto& g : m.factors()) out.push_back({g.i, g.j, g.lambda});
  return out;
}

inline HopfMonomial monomial_from_json(const json& j, int n, int d) {
  std::vector<Generator> gens;
  for (const auto& g : j) {
    const auto v = g.get<std::vector<int>>();
    if (v.size() != 3) throw SpecError("generator must be [i, j, lambda]");
    gens.push_back({v[0], v[1], v[2]});
  }
  return HopfMonomial(n, d, std::move(gens));
}

inline json to_json(const TensorPoly& t) {
  json out = json::array();
  for (const auto& [key, c] : t.terms()) {
    out.push_back({{"left", to_json(key[0])}, {"right", to_json(key[1])}, {"coeff", t.field()->to_vector(c)}});
  }
  return out;
}

inline TensorPoly tensor_from_json(const json& j, const FieldPtr& field, int n, int d) {
  try {
    TensorPoly out(field);
    for (const auto& term : j) {
      out.add_term({monomial_from_json(term.at("left"), n, d), monomial_from_json(term.at("right"), n, d)},
                   unpack(*field, term.at("coeff")));
    }
    return out;
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed tensor: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const TransvectionTarget& t) {
  json deltas = json::array();
  for (const auto& m : t.deltas) deltas.push_back(to_json(*t.field, m));
  json basis = json::array();
  for (const auto& m : t.basis) basis.push_back(to_json(*t.field, m));
  return {{"n", t.n}, {"field", to_json(t.field->spec())}, {"deltas", std::move(deltas)}, {"basis", std::move(basis)}};
}

inline json to_json(const TransvectionTarget& t, const ThetaImage& img) {
  // Components are listed by 1-based position; names alongside.
  json order = json::array();
  json names = json::array();
  for (std::size_t i : img.order) {
    order.push_back(i + 1);
    names.push_back(t.names[i]);
  }
  json image = json::array();
  for (const auto& m : img.image) image.push_back(to_json(*t.field, m));
  return {{"order", std::move(order)},
          {"order_names", std::move(names)},
          {"image_size", img.image.size()},
          {"image", std::move(image)}};
}

inline json to_json(const GroupTable& g, const Subgroup& s) {
  return {{"order", s.order()}, {"members", s.members}, {"normal", is_normal(g, s)}};
}

inline json to_json(const Signature& sig) {
  json profile = json::object();
  for (const auto& [ord, count] : sig.profile) profile[std::to_string(ord)] = count;
  return {{"order", sig.order}, {"element_orders", std::move(profile)}};
}

inline json lang_report(const FiberStats& stats, const std::vector<TruncElem>& kernel) {
  json elems = json::array();
  for (const auto& x : kernel) elems.push_back(to_json(x));
  return {{"kernel_size", stats.kernel_size},
          {"fiber_count", stats.fiber_count},
          {"group_size", stats.group_size},
          {"min_fiber", stats.min_fiber},
          {"max_fiber", stats.max_fiber},
          {"elements", std::move(elems)}};
}

inline json to_json(const FiltrationRow& row) {
  return {{"D", row.degree}, {"as_count", row.as_count}, {"witt_count", row.witt_count}, {"equal", row.equal()}};
}

inline json to_json(const std::vector<FiltrationRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

inline std::string to_csv(const std::vector<FiltrationRow>& rows) {
  std::ostringstream out;
  out << "D,as_count,witt_count,equal\n";
  for (const auto& r : rows) {
    out << r.degree << ',' << r.as_count << ',' << r.witt_count << ',' << (r.equal() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace wittlang::io

#endif  // WITTLANG_IO_HPP
