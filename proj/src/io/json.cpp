#include "idalg/io/json.hpp"

#include <algorithm>
#include <string>

#include "idalg/algebra/catalog.hpp"
#include "idalg/error.hpp"

namespace idalg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// "r", "ri", "r+si", "r-si", "i", "-i"
Rational imag_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  return Rational::parse(s);
}

const Json& pair_array(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " expects a two-element array");
  return j;
}

bool is_space_name(const std::string& key) {
  static const std::vector<std::string> long_forms{"gl_n2", "sl_n2", "gl_n2m1", "sl_n2m1", "so_n2", "so_n2m1"};
  for (const auto* names : {&module_names(), &ambient_names(), &long_forms}) {
    if (std::find(names->begin(), names->end(), key) != names->end()) return true;
  }
  return false;
}

std::size_t to_index(const Json& v, std::size_t n) {
  if (!v.is_number_integer()) bad("matrix unit index must be an integer");
  auto k = v.get<std::int64_t>();
  if (k < 1 || static_cast<std::size_t>(k) > n) bad("matrix unit index out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(k - 1);
}

}  // namespace

GaussScalar parse_scalar_text(std::string_view text) {
  text = trim(text);
  if (text.empty()) bad("empty scalar");
  if (text.back() != 'i') return GaussScalar(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not part of a fraction.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return GaussScalar(Rational(0), imag_coefficient(body));
  return GaussScalar(Rational::parse(body.substr(0, split)), imag_coefficient(body.substr(split)));
}

GaussScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar_text(j.get<std::string>());
  if (j.is_number_integer()) return GaussScalar(j.get<std::int64_t>());
  if (j.is_object() && j.contains("re") && j.contains("im") && j.size() == 2) {
    return GaussScalar(scalar_from_json(j.at("re")).re(), scalar_from_json(j.at("im")).re());
  }
  bad("malformed scalar " + j.dump());
}

Json scalar_to_json(const GaussScalar& s) { return s.str(); }

MatN matrix_from_json(const Json& j, std::size_t n) {
  if (j.is_array()) {
    if (j.size() != n) bad("matrix must have " + std::to_string(n) + " rows");
    MatN m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) bad("matrix row " + std::to_string(i + 1) + " has wrong length");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
  }
  if (!j.is_object() || j.size() != 1) bad("malformed matrix " + j.dump());
  const auto& [key, v] = *j.items().begin();
  if (key == "e") {
    pair_array(v, "e");
    return unit(n, to_index(v[0], n), to_index(v[1], n));
  }
  if (key == "id") return identity(n);
  if (key == "sum") {
    if (!v.is_array()) bad("sum expects an array");
    MatN m(n);
    for (const auto& t : v) m += matrix_from_json(t, n);
    return m;
  }
  if (key == "scale") {
    pair_array(v, "scale");
    return scalar_from_json(v[0]) * matrix_from_json(v[1], n);
  }
  bad("unknown matrix term '" + std::string(key) + "'");
}

Json matrix_to_json(const MatN& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.n(); ++k) row.push_back(scalar_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

OperatorN operator_from_json(const Json& j, std::size_t n) {
  const std::size_t side = n * n;
  if (j.is_array()) {
    if (j.size() != side) bad("dense operator must have " + std::to_string(side) + " rows");
    Vector v(side * side);
    for (std::size_t r = 0; r < side; ++r) {
      if (!j[r].is_array() || j[r].size() != side) bad("dense operator row has wrong length");
      for (std::size_t c = 0; c < side; ++c) {
        v.push_back(static_cast<std::uint32_t>(r * side + c), scalar_from_json(j[r][c]));
      }
    }
    return OperatorN(n, std::move(v));
  }
  if (!j.is_object() || j.size() != 1) bad("malformed operator term " + j.dump());
  const auto& [key, v] = *j.items().begin();
  if (key == "tensor") {
    pair_array(v, "tensor");
    return tensor(matrix_from_json(v[0], n), matrix_from_json(v[1], n));
  }
  if (key == "ad") return inner_deriv(matrix_from_json(v, n));
  if (key == "sum") {
    if (!v.is_array()) bad("sum expects an array");
    OperatorN t(n);
    for (const auto& term : v) t = t + operator_from_json(term, n);
    return t;
  }
  if (key == "scale") {
    pair_array(v, "scale");
    return scalar_from_json(v[0]) * operator_from_json(v[1], n);
  }
  if (key == "compose") {
    pair_array(v, "compose");
    return compose(operator_from_json(v[0], n), operator_from_json(v[1], n));
  }
  if (key == "t") {
    pair_array(v, "t");
    return t_matrix(scalar_from_json(v[0]), scalar_from_json(v[1]), n);
  }
  if (key == "identity") return OperatorN::identity(n);
  if (key == "trace_times") return trace_times(matrix_from_json(v, n));
  if (key == "trace_against") return trace_against(matrix_from_json(v, n));
  if (key == "v") return v_map(matrix_from_json(v, n));
  if (key == "w") {
    pair_array(v, "w");
    return w_map(matrix_from_json(v[0], n), scalar_from_json(v[1]));
  }
  if (key == "v8") return v8_map(n);
  if (key == "hwv") {
    if (!v.is_string()) bad("hwv expects a module name");
    return Catalog::get(n).hwv(v.get<std::string>());
  }
  bad("unknown operator term '" + std::string(key) + "'");
}

Json operator_to_json(const OperatorN& t) {
  const std::size_t side = t.side();
  Json out = Json::array();
  std::vector<GaussScalar> dense = t.vec().to_dense();
  for (std::size_t r = 0; r < side; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < side; ++c) row.push_back(scalar_to_json(dense[r * side + c]));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<OperatorN> generators_from_json(const Json& j, std::size_t n) {
  if (j.is_object() && j.contains("gens")) return generators_from_json(j.at("gens"), n);
  std::vector<OperatorN> out;
  auto add_space = [&](const Subspace& s) {
    for (auto& op : as_operators(s, n)) out.push_back(std::move(op));
  };
  auto entry = [&](const Json& e) {
    if (e.is_object() && e.size() == 1) {
      const auto& [key, v] = *e.items().begin();
      if (key == "W") {
        add_space(Catalog::get(n).w_lambda(scalar_from_json(v)));
        return;
      }
      if (is_space_name(key)) {
        if (!v.is_boolean() || !v.get<bool>()) bad("space term must be {\"" + key + "\": true}");
        const auto& mods = module_names();
        if (std::find(mods.begin(), mods.end(), key) != mods.end()) {
          add_space(Catalog::get(n).module(key).space);
        } else {
          add_space(Catalog::get(n).ambient(key));
        }
        return;
      }
    }
    out.push_back(operator_from_json(e, n));
  };
  // A dense operator is itself an array of arrays of scalars; a generator
  // list is an array of terms.
  if (j.is_array() && !(j.size() == n * n && !j.empty() && j[0].is_array())) {
    for (const auto& e : j) entry(e);
  } else {
    entry(j);
  }
  return out;
}

Json label_to_json(const ClassLabel& label) {
  Json out;
  out["kind"] = label.kind();
  if (label.lambda) out["lambda"] = scalar_to_json(*label.lambda);
  if (label.t_ratio) out["t_ratio"] = scalar_to_json(*label.t_ratio);
  if (label.t_ratio_sq) out["t_ratio_sq"] = scalar_to_json(*label.t_ratio_sq);
  if (label.ft) out["ft"] = Json::array({scalar_to_json(label.ft->first), scalar_to_json(label.ft->second)});
  return out;
}

ClassLabel label_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) bad("label needs a \"kind\" string");
  ClassLabel l = label_from_kind(j.at("kind").get<std::string>());
  if (j.contains("lambda")) l.lambda = scalar_from_json(j.at("lambda"));
  if (j.contains("t_ratio")) l.t_ratio = scalar_from_json(j.at("t_ratio"));
  if (j.contains("t_ratio_sq")) l.t_ratio_sq = scalar_from_json(j.at("t_ratio_sq"));
  if (j.contains("ft")) {
    const Json& ft = pair_array(j.at("ft"), "ft");
    l.ft = std::pair{scalar_from_json(ft[0]), scalar_from_json(ft[1])};
  }
  return l;
}

MultilinearPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("l") || !j.contains("terms")) bad("polynomial needs \"l\" and \"terms\"");
  if (!j.at("l").is_number_integer() || j.at("l").get<std::int64_t>() < 0) bad("\"l\" must be a non-negative integer");
  MultilinearPoly f;
  f.l = j.at("l").get<std::size_t>();
  if (!j.at("terms").is_array()) bad("\"terms\" must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("perm") || !t.contains("coeff") || !t.at("perm").is_array()) {
      bad("term needs \"perm\" and \"coeff\"");
    }
    MultilinearPoly::Term term;
    for (const auto& p : t.at("perm")) {
      if (!p.is_number_integer() || p.get<std::int64_t>() < 1) bad("permutation entries are 1-based integers");
      term.perm.push_back(p.get<std::size_t>() - 1);
    }
    term.coeff = scalar_from_json(t.at("coeff"));
    f.terms.push_back(std::move(term));
  }
  f.validate();
  return f;
}

Json poly_to_json(const MultilinearPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json perm = Json::array();
    for (std::size_t p : t.perm) perm.push_back(p + 1);
    terms.push_back(Json{{"perm", perm}, {"coeff", scalar_to_json(t.coeff)}});
  }
  return Json{{"l", f.l}, {"terms", terms}};
}

Json basis_to_json(const Subspace& s, std::size_t n) {
  Json out = Json::array();
  for (const auto& op : as_operators(s, n)) {
    Json entries = Json::array();
    for (const auto& e : op.vec().entries()) {
      const std::size_t side = op.side();
      entries.push_back(Json::array({e.index / side + 1, e.index % side + 1, scalar_to_json(e.value)}));
    }
    out.push_back(std::move(entries));
  }
  return out;
}

}  // namespace idalg::io
