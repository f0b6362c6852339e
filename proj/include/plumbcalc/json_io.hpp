#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "plumbcalc/lisca.hpp"
#include "plumbcalc/palf.hpp"
#include "plumbcalc/plumbing.hpp"

namespace plumbcalc {

/// Input violates a documented file schema (CLI exit code 2).
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unbounded exact integers travel as decimal strings; structural counts
/// (ids, hole numbers, generator counts) stay JSON numbers. Parsers accept both.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json cfstring_to_json(const CFString& s);
CFString cfstring_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);

/// {"schema":1,"vertices":[{"id":..,"framing":..}],"edges":[[id,id]]}
nlohmann::json tree_to_json(const PlumbingTree& t);
PlumbingTree tree_from_json(const nlohmann::json& j);

/// {"schema":1,"generators":g,"relators":[[signed ints]]}
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

/// {"schema":1,"holes":h,"twists":[[hole ids]]}
nlohmann::json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

/// {"schema":1,"c_side":{factorization},"b_side":{factorization}}
std::pair<Factorization, Factorization> factorization_pair_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace plumbcalc
