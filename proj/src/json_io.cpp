#include "tatek/json_io.hpp"

#include <map>

namespace tatek::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<long>();
}

json mismatch_json(const Mismatch& m, const Options& opt) {
  return {{"exponent", to_json(m.exponent)}, {"lhs", to_json(m.lhs, opt)}, {"rhs", to_json(m.rhs, opt)}};
}

std::vector<Elem> identity_labels(const FinGroup& g) {
  std::vector<Elem> out(g.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

json tate_components(const TateElement& f, const Options& opt) {
  const auto& ctx = *f.context();
  json comps = json::array();
  for (std::size_t c = 0; c < ctx.class_count(); ++c) {
    const Subgroup& cent = ctx.centralizers[c];
    comps.push_back({{"class_rep", ctx.rep(c)},
                     {"element_order", ctx.rep_order(c)},
                     {"centralizer_order", cent.group->order()},
                     {"series", series_to_json(f.component(c), [&](const VirtualCharacter& chi) {
                        return character_to_json(chi, cent.to_ambient, opt);
                      })}});
  }
  return comps;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Cyclotomic& c, const Options& opt) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
  json out{{"conductor", c.conductor()}, {"coeffs", coeffs}};
  if (opt.approx_digits > 0) {
    const auto [re, im] = complex_approximation(c, opt.approx_digits);
    out["approx"] = {re, im};
  }
  return out;
}

json to_json(const Bound& b) { return b.str(); }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational as a \"p/q\" string or an integer");
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_object()) {
    const long n = integer(field(j, "conductor"), "conductor");
    if (n < 1) throw FormatError("conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(rational_from_json(c));
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
      throw FormatError("cyclotomic of conductor " + std::to_string(n) + " needs " + std::to_string(euler_phi(n)) + " coefficients");
    return Cyclotomic(n, std::move(coeffs));
  }
  return Cyclotomic(rational_from_json(j));
}

Bound bound_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Bound::infinity();
  return Bound(rational_from_json(j));
}

json group_to_json(const FinGroup& g) {
  if (g.degree() == 0 && g.order() > 1) throw FormatError("group has no permutation realization to serialize");
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p);
  json out{{"degree", std::max<std::size_t>(g.degree(), 1)}, {"generators", gens}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

GroupPtr group_from_json(const json& j) {
  const long degree = integer(field(j, "degree"), "degree");
  if (degree < 1) throw FormatError("degree must be positive");
  std::vector<Permutation> gens;
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) {
      Permutation p;
      for (const auto& v : g) {
        const long x = integer(v, "generator entry");
        if (x < 0) throw FormatError("generator entries must be non-negative");
        p.push_back(static_cast<Elem>(x));
      }
      gens.push_back(std::move(p));
    }
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  return group_from_generators(static_cast<std::size_t>(degree), gens, default_element_cap(), name);
}

json character_to_json(const VirtualCharacter& chi, const std::vector<Elem>& labels, const Options& opt) {
  json out = json::array();
  const FinGroup& g = *chi.group;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    out.push_back({{"class_rep", labels.at(g.class_rep(c))}, {"value", to_json(chi.values[c], opt)}});
  return out;
}

VirtualCharacter character_from_json(const json& j, const GroupPtr& g, const std::vector<Elem>& labels) {
  if (!j.is_array()) return VirtualCharacter::constant(g, cyclotomic_from_json(j));
  std::map<Elem, Elem> local;
  for (std::size_t i = 0; i < labels.size(); ++i) local.emplace(labels[i], static_cast<Elem>(i));
  VirtualCharacter out = VirtualCharacter::zero(g);
  std::vector<bool> seen(g->class_count(), false);
  for (const auto& entry : j) {
    const long rep = integer(field(entry, "class_rep"), "class_rep");
    const auto it = local.find(static_cast<Elem>(rep));
    if (rep < 0 || it == local.end()) throw FormatError("class_rep " + std::to_string(rep) + " is not an element of the group");
    const std::size_t c = g->class_of(it->second);
    if (seen[c]) throw FormatError("class of element " + std::to_string(rep) + " is given twice");
    seen[c] = true;
    out.values[c] = cyclotomic_from_json(field(entry, "value"));
  }
  for (std::size_t c = 0; c < seen.size(); ++c)
    if (!seen[c]) throw FormatError("character value missing for the class of element " + std::to_string(labels[g->class_rep(c)]));
  return out;
}

json scalar_series_to_json(const ScalarSeries& s, const Options& opt) {
  return series_to_json(s, [&](const Cyclotomic& c) { return to_json(c, opt); });
}

ScalarSeries scalar_series_from_json(const json& j) {
  const long den = j.contains("denominator") ? integer(j.at("denominator"), "denominator") : 1;
  if (den < 1) throw FormatError("denominator must be positive");
  ScalarSeries s(den, j.contains("known_below") ? bound_from_json(j.at("known_below")) : Bound());
  for (const auto& t : field(j, "terms")) s.add(integer(field(t, "num"), "num"), cyclotomic_from_json(field(t, "coeff")));
  return s;
}

json tate_to_json(const TateElement& f, const Options& opt) {
  return {{"group", group_to_json(*f.context()->group)},
          {"laurent", f.is_laurent()},
          {"known_below", to_json(f.known_below())},
          {"components", tate_components(f, opt)}};
}

TateElement tate_from_json(const json& j) {
  const GroupPtr g = group_from_json(field(j, "group"));
  const auto ctx = make_tate_context(g);
  const Bound top = j.contains("known_below") ? bound_from_json(j.at("known_below")) : Bound();
  const bool laurent = j.contains("laurent") && j.at("laurent").is_boolean() && j.at("laurent").get<bool>();
  std::vector<CharSeries> comps(ctx->class_count(), CharSeries(1, top));
  std::vector<bool> seen(ctx->class_count(), false);
  for (const auto& entry : field(j, "components")) {
    const long rep = integer(field(entry, "class_rep"), "class_rep");
    if (rep < 0 || static_cast<std::size_t>(rep) >= g->order()) throw FormatError("class_rep out of range");
    const std::size_t c = g->class_of(static_cast<Elem>(rep));
    if (ctx->rep(c) != static_cast<Elem>(rep))
      throw FormatError("class_rep " + std::to_string(rep) + " is not the least element of its class (use " +
                        std::to_string(ctx->rep(c)) + ")");
    if (seen[c]) throw FormatError("component for class_rep " + std::to_string(rep) + " is given twice");
    seen[c] = true;
    const json& sj = field(entry, "series");
    const long den = sj.contains("denominator") ? integer(sj.at("denominator"), "denominator") : 1;
    if (den < 1) throw FormatError("denominator must be positive");
    const Bound b = sj.contains("known_below") ? min(top, bound_from_json(sj.at("known_below"))) : top;
    CharSeries s(den, b);
    const Subgroup& cent = ctx->centralizers[c];
    for (const auto& t : field(sj, "terms")) {
      const long n = integer(field(t, "num"), "num");
      if (n < 0 && !laurent) throw FormatError("negative exponent without \"laurent\": true");
      s.add(n, character_from_json(field(t, "coeff"), cent.group, cent.to_ambient));
    }
    comps[c] = s;
  }
  try {
    return TateElement(ctx, std::move(comps));
  } catch (const TateError& e) {
    throw FormatError(e.what());
  }
}

json tseries_to_json(const TateTSeries& s, const Options& opt) {
  json coeffs = json::array();
  for (std::size_t n = 0; n <= s.order(); ++n)
    coeffs.push_back({{"t", n},
                      {"known_below", to_json(s.coeffs[n].known_below())},
                      {"components", tate_components(s.coeffs[n], opt)}});
  return {{"group", group_to_json(*s.zero.context()->group)}, {"t_order", s.order()}, {"coefficients", coeffs}};
}

json groupoid_to_json(const FinGroupoid& g, std::size_t arrow_limit) {
  json comps = json::array();
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    const auto& comp = g.component(c);
    comps.push_back({{"representative", comp.rep}, {"objects", comp.objects}, {"automorphism_order", comp.vertex->order()}});
  }
  json out{{"object_count", g.object_count()},
           {"arrow_count", g.arrow_count()},
           {"cardinality", to_json(g.cardinality())},
           {"iso_classes", comps}};
  if (g.arrow_count() > arrow_limit) {
    out["arrows_omitted"] = true;
    return out;
  }
  std::map<Arrow, std::size_t> id;
  json arrows = json::array();
  for (std::size_t x = 0; x < g.object_count(); ++x)
    for (std::size_t y = 0; y < g.object_count(); ++y)
      for (const Arrow& a : g.hom(x, y)) {
        id.emplace(a, id.size());
        arrows.push_back({{"id", id.at(a)}, {"src", a.src}, {"tgt", a.tgt}});
      }
  json composition = json::array();
  for (const auto& [f, fi] : id)
    for (const auto& [h, hi] : id)
      if (h.src == f.tgt) composition.push_back({hi, fi, id.at(g.compose(h, f))});
  out["arrows"] = arrows;
  out["composition"] = composition;
  return out;
}

json inertia_table_to_json(const IteratedInertia& l) {
  json classes = json::array();
  for (std::size_t c = 0; c < l.class_count(); ++c) {
    const auto [x, loops] = l.tuple(l.top()->component(c).rep);
    json tuple = json::array();
    for (const auto& a : loops) tuple.push_back(a.elem);
    classes.push_back({{"object", x}, {"tuple", tuple}, {"automorphism_order", l.automorphism_order(c)}});
  }
  return {{"n", l.n}, {"class_count", l.class_count()}, {"cardinality", to_json(l.top()->cardinality())}, {"classes", classes}};
}

json class_function_to_json(const NClassFunction& f, const Options& opt) {
  json table = inertia_table_to_json(*f.domain);
  for (std::size_t c = 0; c < f.values.size(); ++c) table["classes"][c]["value"] = to_json(f.values[c], opt);
  return table;
}

json certificate_to_json(const EquivalenceCertificate& c) {
  json out{{"equivalence", c.equivalence},
           {"essentially_surjective", c.essentially_surjective},
           {"fully_faithful", c.fully_faithful},
           {"class_matching", c.class_matching},
           {"hom_pairs_checked", c.hom_pairs_checked},
           {"exhaustive", c.exhaustive},
           {"source_cardinality", to_json(c.source_cardinality)},
           {"target_cardinality", to_json(c.target_cardinality)}};
  if (!c.failure.empty()) out["failure"] = c.failure;
  return out;
}

json faber_to_json(const std::vector<FaberPolynomial>& phis, const Options& opt) {
  json out = json::array();
  for (std::size_t m = 0; m < phis.size(); ++m) {
    json coeffs = json::array();
    for (const auto& c : phis[m].coeffs) coeffs.push_back(to_json(c, opt));
    out.push_back({{"m", m + 1}, {"coeffs", coeffs}});
  }
  return out;
}

json report_to_json(const ReplicabilityReport& r, const Options& opt) {
  json per_m = json::array();
  for (const auto& v : r.faber_vs_hecke) {
    json e{{"class_rep", v.h}, {"m", v.m}, {"faber_vs_hecke", v.pass ? "pass" : "fail"}};
    if (v.first_mismatch) e["first_mismatch"] = mismatch_json(*v.first_mismatch, opt);
    per_m.push_back(e);
  }
  json two = json::array();
  for (const auto& v : r.two_variable) {
    json e{{"class_rep", v.h}, {"verdict", v.pass ? "pass" : "fail"}};
    if (v.t_exponent) e["t_exponent"] = *v.t_exponent;
    if (v.first_mismatch) e["first_mismatch"] = mismatch_json(*v.first_mismatch, opt);
    two.push_back(e);
  }
  return {{"m_max", r.m_max}, {"q_bound", r.q_bound}, {"replicable", r.replicable()}, {"per_m", per_m}, {"two_variable", two}};
}

json mckay_thompson_to_json(const McKayThompson& f, const Options& opt) {
  const auto labels = identity_labels(*f.group);
  return {{"series", series_to_json(f.series, [&](const VirtualCharacter& chi) { return character_to_json(chi, labels, opt); })}};
}

}  // namespace tatek::io
