#include "sms3/json_io.hpp"

#include "sms3/error.hpp"

namespace sms3 {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(to_decimal(x));
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_string()) return int_from_decimal(j.get<std::string>());
  raise("UsageError", "expected an integer or decimal string, got " + j.dump());
}

json square_to_json(const SemiMagicSquare& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(int_to_json(m.mat(r, c)));
    rows.push_back(row);
  }
  return json{{"matrix", rows}};
}

SemiMagicSquare square_from_json(const json& j) {
  if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 3)
    raise("UsageError", "square payload needs \"matrix\" with three rows");
  Mat3 e;
  for (int r = 0; r < 3; ++r) {
    const json& row = j["matrix"][r];
    if (!row.is_array() || row.size() != 3)
      raise("UsageError", "matrix rows must have three entries");
    for (int c = 0; c < 3; ++c) e(r, c) = int_from_json(row[c]);
  }
  return validate_square(e);
}

json sextuple_to_json(const Vec6& a) {
  json coeffs = json::array();
  for (int i = 0; i < 6; ++i) coeffs.push_back(int_to_json(a(i)));
  return json{{"a", coeffs}};
}

Vec6 sextuple_from_json(const json& j) {
  if (!j.contains("a") || !j["a"].is_array() || j["a"].size() != 6)
    raise("UsageError", "sextuple payload needs \"a\" with six entries");
  Vec6 a;
  for (int i = 0; i < 6; ++i) a(i) = int_from_json(j["a"][i]);
  return upshift(a);
}

json decomposition_to_json(const ReducedDecomposition& d) {
  return json{{"m0", int_to_json(d.m0)}, {"reduced", sextuple_to_json(d.reduced)}};
}

json element_to_json(const GroupElement& g) {
  json slots = json::array();
  for (int i = 0; i < 6; ++i) slots.push_back(g.slots[i] + 1);
  return json{{"row", one_line(g.row)},
              {"col", one_line(g.col)},
              {"transpose", g.transpose ? 1 : 0},
              {"slots", slots}};
}

GroupElement element_from_json(const json& j) {
  std::string spec = "R=" + j.at("row").get<std::string>() +
                     ",C=" + j.at("col").get<std::string>() +
                     ",T=" + std::to_string(j.at("transpose").get<int>());
  GroupElement g = element_from_spec(spec);
  if (j.contains("slots")) {
    Perm6 slots{};
    for (int i = 0; i < 6; ++i) slots[i] = j["slots"][i].get<int>() - 1;
    if (slots != g.slots)
      raise("UsageError", "slots do not match the (row, col, transpose) action");
  }
  return g;
}

json orbit_to_json(const OrbitReport& r) {
  return json{{"rep", sextuple_to_json(r.representative)},
              {"size", r.size},
              {"stab_order", r.stabilizer_order},
              {"class", orbit_class_name(r.orbit_class)}};
}

json cg_to_json(const CGIndex& idx) {
  json doubled = json::array();
  for (const Int& d : idx.three_j_doubled) doubled.push_back(int_to_json(d));
  return json{{"m", int_to_json(idx.m)},       {"n", int_to_json(idx.n)},
              {"k", int_to_json(idx.k)},       {"i", int_to_json(idx.i)},
              {"j", int_to_json(idx.j)},       {"m_prime", int_to_json(idx.m_prime)},
              {"three_j_doubled", doubled}};
}

CGIndex cg_from_json(const json& j) {
  for (const char* key : {"m", "n", "k", "i", "j"})
    if (!j.contains(key))
      raise("UsageError", std::string("cg payload needs \"") + key + "\"");
  const SemiMagicSquare square =
      square_from_cg(int_from_json(j["m"]), int_from_json(j["n"]), int_from_json(j["k"]),
                     int_from_json(j["i"]), int_from_json(j["j"]));
  return cg_from_square(square);
}

json identity_to_json(const ReggeIdentity& id) {
  return json{{"g", element_to_json(id.g)},
              {"sign", id.sign},
              {"left_multinomial", to_decimal(id.left_multinomial)},
              {"right_multinomial", to_decimal(id.right_multinomial)},
              {"source", sextuple_to_json(id.source)},
              {"target", sextuple_to_json(id.target)}};
}

json convolution_to_json(const ConvolutionReport& r) {
  json terms = json::array();
  for (const ConvolutionTerm& term : r.breakdown)
    terms.push_back(json{{"rep", sextuple_to_json(term.rep)},
                         {"orbit_size", term.orbit_size},
                         {"v", to_decimal(term.v)},
                         {"v_dual", to_decimal(term.v_dual)},
                         {"product", to_decimal(term.product)}});
  return json{{"k", r.k}, {"total", to_decimal(r.total)}, {"terms", terms}};
}

namespace {

std::string sextuple_key(const Vec6& a) {
  std::string key;
  for (int i = 0; i < 6; ++i) {
    if (i) key += ',';
    key += to_decimal(a(i));
  }
  return key;
}

}  // namespace

json poset_to_json(const GradedPoset& p) {
  json levels = json::array();
  for (int k = 0; k < p.rank_count(); ++k) {
    json level = json::array();
    for (int id : p.level(k))
      level.push_back(square_to_json(from_sextuple(p.sextuple(id))));
    levels.push_back(level);
  }
  json v = json::object();
  for (int id = 0; id < p.element_count(); ++id)
    v[sextuple_key(p.sextuple(id))] = to_decimal(p.path_number_of(id));
  return json{{"s", p.s()}, {"levels", levels}, {"v", v}};
}

SemiMagicSquare payload_to_square(const json& j) {
  if (j.contains("matrix")) return square_from_json(j);
  if (j.contains("a")) return from_sextuple(sextuple_from_json(j));
  if (j.contains("m")) return square_from_cg(cg_from_json(j));
  raise("UsageError",
        "payload must contain \"matrix\", \"a\", or cg indices \"m\",\"n\",\"k\",\"i\",\"j\"");
}

}  // namespace sms3
