#pragma once

// JSON input/output documents shared by the command-line tool.
//
//   {"kind":"seifert_pair","p":1,"n":2,"S":[[4]],"N":[[4]]}
//   {"kind":"laurent","terms":{"-1":1,"1":-1}}        key k means t^{k/2}
//   {"kind":"triple","plus":<laurent>,"minus":<laurent>,"zero":<laurent>,"move":"pass"}
//   {"kind":"arf","a":[1,1],"b":[1,0]}

#include <filesystem>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "alexcalc/invariants.hpp"
#include "alexcalc/laurent.hpp"
#include "alexcalc/seifert.hpp"
#include "alexcalc/skein.hpp"

namespace alexcalc {

using json = nlohmann::json;

enum class MoveKind { Pass, Twist };

struct Triple {
  LaurentPoly plus;
  LaurentPoly minus;
  LaurentPoly zero;
  MoveKind move = MoveKind::Pass;
};

using Document = std::variant<SeifertPair, LaurentPoly, Triple, ArfData>;

/// Throws ParseError for malformed documents; matrix shape problems surface
/// as ShapeMismatch.
Document parse_document(const json& doc);
Document parse_document_text(std::string_view text);
Document load_document(const std::filesystem::path& path);

LaurentPoly laurent_from_json(const json& doc);

json to_json(const Integer& value);
json to_json(const LaurentPoly& f);
json to_json(const IntMatrix& m);
json to_json(const SeifertPair& pair);
json to_json(const Triple& triple);
json to_json(const ArfData& data);
json to_json(const SkeinVerdict& verdict);
json to_json(const RepresentativeWitness& witness);
json to_json(const InvariantReport& report);

}  // namespace alexcalc
