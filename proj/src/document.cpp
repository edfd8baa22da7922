#include "alexcalc/document.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "alexcalc/errors.hpp"

namespace alexcalc {

namespace {

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::string expect_kind(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  return kind.get<std::string>();
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer integer_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string() && is_decimal(v.get<std::string>())) return Integer(v.get<std::string>());
  throw ParseError(std::string(what) + " must be an integer");
}

int small_int_from_json(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < -(1 << 20) || value > (1 << 20)) throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(value);
}

IntMatrix matrix_from_json(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const json& row : v) {
    if (!row.is_array()) throw ParseError(std::string(what) + " rows must be arrays");
    auto& out = rows.emplace_back();
    for (const json& entry : row) out.push_back(integer_from_json(entry, what));
  }
  return IntMatrix::from_rows(rows);
}

std::vector<Integer> vector_from_json(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Integer> out;
  for (const json& entry : v) out.push_back(integer_from_json(entry, what));
  return out;
}

HalfExp half_exp_from_key(const std::string& key) {
  HalfExp k = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
  if (ec != std::errc() || ptr != key.data() + key.size() || std::to_string(k) != key) {
    throw ParseError("laurent term key '" + key + "' is not a decimal half-exponent");
  }
  return k;
}

SeifertPair pair_from_json(const json& doc) {
  return SeifertPair(matrix_from_json(field(doc, "S"), "S"), matrix_from_json(field(doc, "N"), "N"),
                     small_int_from_json(field(doc, "p"), "p"),
                     small_int_from_json(field(doc, "n"), "n"));
}

Triple triple_from_json(const json& doc) {
  Triple triple{laurent_from_json(field(doc, "plus")), laurent_from_json(field(doc, "minus")),
                laurent_from_json(field(doc, "zero")), MoveKind::Pass};
  const json& move = field(doc, "move");
  if (move == "pass") {
    triple.move = MoveKind::Pass;
  } else if (move == "twist") {
    triple.move = MoveKind::Twist;
  } else {
    throw ParseError("'move' must be \"pass\" or \"twist\"");
  }
  return triple;
}

ArfData arf_from_json(const json& doc) {
  return ArfData{vector_from_json(field(doc, "a"), "a"), vector_from_json(field(doc, "b"), "b")};
}

}  // namespace

LaurentPoly laurent_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("laurent document must be a JSON object");
  if (auto kind = doc.find("kind"); kind != doc.end() && *kind != "laurent") {
    throw ParseError("expected a laurent document");
  }
  const json& terms = field(doc, "terms");
  if (!terms.is_object()) throw ParseError("'terms' must be an object");
  LaurentPoly::TermMap map;
  for (const auto& [key, value] : terms.items()) {
    const HalfExp k = half_exp_from_key(key);
    if (!map.emplace(k, integer_from_json(value, "coefficient")).second) {
      throw ParseError("duplicate half-exponent " + key);
    }
  }
  return LaurentPoly(std::move(map));
}

Document parse_document(const json& doc) {
  const std::string kind = expect_kind(doc);
  if (kind == "seifert_pair") return pair_from_json(doc);
  if (kind == "laurent") return laurent_from_json(doc);
  if (kind == "triple") return triple_from_json(doc);
  if (kind == "arf") return arf_from_json(doc);
  throw ParseError("unknown document kind '" + kind + "'");
}

Document parse_document_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str());
}

json to_json(const Integer& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) return json(value.get_si());
  return json(value.get_str());
}

json to_json(const LaurentPoly& f) {
  json terms = json::object();
  for (const auto& [k, c] : f.terms()) terms[std::to_string(k)] = to_json(c);
  return {{"kind", "laurent"}, {"terms", terms}};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const Integer& entry : m.row(i)) row.push_back(to_json(entry));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SeifertPair& pair) {
  return {{"kind", "seifert_pair"},
          {"p", pair.degree()},
          {"n", pair.dimension()},
          {"S", to_json(pair.positive())},
          {"N", to_json(pair.negative())}};
}

json to_json(const Triple& triple) {
  return {{"kind", "triple"},
          {"plus", to_json(triple.plus)},
          {"minus", to_json(triple.minus)},
          {"zero", to_json(triple.zero)},
          {"move", triple.move == MoveKind::Pass ? "pass" : "twist"}};
}

json to_json(const ArfData& data) {
  json a = json::array();
  json b = json::array();
  for (const Integer& v : data.x_self_linking) a.push_back(to_json(v));
  for (const Integer& v : data.y_self_linking) b.push_back(to_json(v));
  return {{"kind", "arf"}, {"a", a}, {"b", b}};
}

json to_json(const SkeinVerdict& verdict) {
  return {{"holds", verdict.holds},
          {"lhs", to_json(verdict.lhs)},
          {"rhs", to_json(verdict.rhs)},
          {"residual", to_json(verdict.residual)}};
}

json to_json(const RepresentativeWitness& witness) {
  json out{{"found", witness.found}};
  if (!witness.found) return out;
  json shifts = json::array();
  json reps = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    shifts.push_back({{"sign", witness.shifts[i].sign}, {"exponent", witness.shifts[i].exponent}});
    reps.push_back(to_json(witness.representatives[i]));
  }
  out["shifts"] = shifts;
  out["representatives"] = reps;
  return out;
}

json to_json(const InvariantReport& report) {
  json scalars = json::object();
  for (const auto& [name, value] : report.scalars) scalars[name] = to_json(value);
  return {{"polynomial", to_json(report.polynomial)},
          {"class_Z", to_json(report.class_z.representative())},
          {"class_Q", to_json(report.class_q.representative())},
          {"scalars", scalars}};
}

}  // namespace alexcalc
