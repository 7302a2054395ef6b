// JSON encodings of numbers, groups, characters, series, Tate elements,
// groupoids, class-function tables and reports. Output is deterministic:
// keys are sorted and numbers are exact strings.
#pragma once

#include "tatek/classfun.hpp"
#include "tatek/exactnum.hpp"
#include "tatek/groupoids.hpp"
#include "tatek/moonshine.hpp"
#include "tatek/qgraded.hpp"
#include "tatek/tate.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace tatek::io {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  /// When positive, cyclotomic values carry an "approx" field with this many
  /// significant digits of their complex value. Display only.
  int approx_digits = 0;
};

json to_json(const Rational& r);
json to_json(const Cyclotomic& c, const Options& opt = {});
json to_json(const Bound& b);
Rational rational_from_json(const json& j);
/// Accepts {"conductor", "coeffs"}, a "p/q" string or an integer.
Cyclotomic cyclotomic_from_json(const json& j);
Bound bound_from_json(const json& j);

json group_to_json(const FinGroup& g);
GroupPtr group_from_json(const json& j);

/// Per-class values; classes named by their representative in `labels`
/// (local element -> element index shown to the user).
json character_to_json(const VirtualCharacter& chi, const std::vector<Elem>& labels, const Options& opt = {});
VirtualCharacter character_from_json(const json& j, const GroupPtr& g, const std::vector<Elem>& labels);

template <class C, class Enc>
json series_to_json(const QSeries<C>& s, Enc encode) {
  json terms = json::array();
  for (const auto& [n, c] : s.terms()) terms.push_back({{"num", n}, {"coeff", encode(c)}});
  return {{"denominator", s.denominator()}, {"terms", terms}, {"known_below", to_json(s.known_below())},
          {"low", to_json(s.low())}};
}

json scalar_series_to_json(const ScalarSeries& s, const Options& opt = {});
ScalarSeries scalar_series_from_json(const json& j);

json tate_to_json(const TateElement& f, const Options& opt = {});
/// Components are keyed by class representative; missing classes are zero.
/// Without "laurent": true negative exponents are rejected.
TateElement tate_from_json(const json& j);
json tseries_to_json(const TateTSeries& s, const Options& opt = {});

json groupoid_to_json(const FinGroupoid& g, std::size_t arrow_limit = 256);
json inertia_table_to_json(const IteratedInertia& l);
json class_function_to_json(const NClassFunction& f, const Options& opt = {});
json certificate_to_json(const EquivalenceCertificate& c);
json faber_to_json(const std::vector<FaberPolynomial>& phis, const Options& opt = {});
json report_to_json(const ReplicabilityReport& r, const Options& opt = {});
json mckay_thompson_to_json(const McKayThompson& f, const Options& opt = {});

}  // namespace tatek::io
