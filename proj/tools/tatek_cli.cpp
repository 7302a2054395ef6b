// tatek: command-line driver. JSON on stdout; exit 0 ok, 1 a check failed,
// 2 bad input or insufficient precision.

#include "tatek/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace tatek;
using namespace tatek::io;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

/// Input or precondition failure reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

TateElement read_tate(const std::string& path) { return tate_from_json(read_json(path)); }

TateElement read_valid_tate(const std::string& path) {
  TateElement f = read_tate(path);
  if (const auto v = validate_rotation(f))
    throw UsageError("input violates the rotation condition at class " + std::to_string(f.context()->rep(v->cls)) +
                     ", exponent " + v->exponent.str());
  return f;
}

// The known_below bound must cover k * q: operators rescale exponents by 1/k.
void require_precision(const Bound& have, long k, long q, const std::string& what) {
  if (have < Bound(Rational(k * q)))
    throw UsageError(what + " needs known_below >= " + std::to_string(k) + " * " + std::to_string(q) + " = " +
                     std::to_string(k * q) + ", input has " + have.str());
}

void require_positive(long v, const std::string& flag) {
  if (v < 1) throw UsageError(flag + " must be a positive integer");
}

TateTSeries truncate_all(TateTSeries s, long q) {
  for (auto& c : s.coeffs) c = c.truncated(Bound(Rational(q)));
  return s;
}

// A scalar series file, a McKay-Thompson style Tate file, or a Tate file over the trivial group.
McKayThompson read_mckay_thompson(const std::string& path) {
  const json j = read_json(path);
  if (j.contains("components")) return McKayThompson::from_tate(tate_from_json(j));
  if (j.contains("terms")) return McKayThompson::from_scalar(scalar_series_from_json(j));
  throw UsageError(path + ": expected a series (\"terms\") or a Tate element (\"components\")");
}

std::map<Permutation, Elem> permutation_index(const FinGroup& g) {
  std::map<Permutation, Elem> out;
  for (std::size_t e = 0; e < g.order(); ++e) out.emplace(g.permutation(static_cast<Elem>(e)), static_cast<Elem>(e));
  return out;
}

// H embedded in G by matching permutations (H padded with fixed points).
std::vector<Elem> embed(const FinGroup& h, const FinGroup& g) {
  if (h.degree() > g.degree()) throw UsageError("subgroup acts on more points than the ambient group");
  const auto index = permutation_index(g);
  std::vector<Elem> out;
  for (std::size_t e = 0; e < h.order(); ++e) {
    Permutation p = h.permutation(static_cast<Elem>(e));
    for (std::size_t i = p.size(); i < g.degree(); ++i) p.push_back(static_cast<Elem>(i));
    const auto it = index.find(p);
    if (it == index.end()) throw UsageError("subgroup element " + std::to_string(e) + " is not in the ambient group");
    out.push_back(it->second);
  }
  return out;
}

int group_info(const std::string& path) {
  const GroupPtr g = group_from_json(read_json(path));
  json classes = json::array();
  for (std::size_t c = 0; c < g->class_count(); ++c)
    classes.push_back({{"rep", g->class_rep(c)},
                       {"size", g->class_size(c)},
                       {"element_order", g->element_order(g->class_rep(c))},
                       {"centralizer_order", g->centralizer_order(c)},
                       {"permutation", g->permutation(g->class_rep(c))}});
  json elements = json::array();
  for (std::size_t e = 0; e < g->order(); ++e) elements.push_back(g->permutation(static_cast<Elem>(e)));
  emit({{"group", group_to_json(*g)},
        {"order", g->order()},
        {"class_count", g->class_count()},
        {"classes", classes},
        {"elements", elements}});
  return kOk;
}

int inertia_cmd(const std::string& path, long n) {
  if (n < 0) throw UsageError("-n must be non-negative");
  const GroupPtr g = group_from_json(read_json(path));
  const auto l = iterated_inertia(point_quotient(g).gpd, static_cast<std::size_t>(n));
  emit(inertia_table_to_json(*l));
  return kOk;
}

int verify_ek(const std::string& path, long k) {
  require_positive(k, "-k");
  const GroupPtr g = group_from_json(read_json(path));
  const auto eq = equivalence_e_k(point_quotient(g).gpd, static_cast<std::size_t>(k));
  const auto e_cert = equivalence_check(eq.e_k);
  const auto f_cert = equivalence_check(eq.f_k);
  const bool ok = e_cert.equivalence && f_cert.equivalence;
  emit({{"k", k},
        {"phi_classes", eq.phi.phi.gpd->component_count()},
        {"root_classes", eq.root.gpd->component_count()},
        {"e_k", certificate_to_json(e_cert)},
        {"f_k", certificate_to_json(f_cert)},
        {"verified", ok}});
  return ok ? kOk : kCheckFailed;
}

int verify_q(const std::string& path, long nmax) {
  require_positive(nmax, "--nmax");
  const GroupPtr g = group_from_json(read_json(path));
  const auto eq = equivalence_q(point_quotient(g).gpd, static_cast<std::size_t>(nmax));
  const auto cert = equivalence_check(eq.q);
  const bool ok = cert.equivalence && eq.intertwines_center;
  emit({{"n_max", nmax}, {"q", certificate_to_json(cert)}, {"intertwines_center", eq.intertwines_center}, {"verified", ok}});
  return ok ? kOk : kCheckFailed;
}

int tate_validate(const std::string& path) {
  const TateElement f = read_tate(path);
  const auto v = validate_rotation(f);
  json out{{"valid", !v}};
  if (v)
    out["violation"] = {{"class_rep", f.context()->rep(v->cls)},
                        {"g", v->g},
                        {"exponent", to_json(v->exponent)},
                        {"h", v->h}};
  emit(out);
  return v ? kCheckFailed : kOk;
}

int tate_beta(const std::string& path, long k, std::optional<long> order, const Options& opt) {
  require_positive(k, "-k");
  const TateElement f = read_valid_tate(path);
  if (order) require_precision(f.known_below(), k, *order, "beta");
  TateElement r = beta(f, k);
  const bool match = r == beta_by_characters(f, k);
  if (order) r = r.truncated(Bound(Rational(*order)));
  emit({{"k", k}, {"result", tate_to_json(r, opt)}, {"character_form_match", match}});
  return match ? kOk : kCheckFailed;
}

int tate_hecke(const std::string& path, long m, long order, const Options& opt) {
  require_positive(m, "-m");
  const TateElement f = read_valid_tate(path);
  require_precision(f.known_below(), m, order, "hecke");
  const TateElement r = hecke(f, m);
  const bool match = agree_to_common_bound(r, hecke_by_characters(f, m));
  emit({{"m", m}, {"result", tate_to_json(r.truncated(Bound(Rational(order))), opt)}, {"character_form_match", match}});
  return match ? kOk : kCheckFailed;
}

int tate_sympow(const std::string& path, long torder, long qorder, const std::string& via, const Options& opt) {
  require_positive(torder, "--torder");
  const TateElement f = read_valid_tate(path);
  require_precision(f.known_below(), torder, qorder, "sympow");
  const auto t = static_cast<std::size_t>(torder);
  json out{{"via", via}, {"t_order", torder}, {"q_order", qorder}};
  if (via == "product") {
    out["series"] = tseries_to_json(truncate_all(symmetric_tate_product(f, t), qorder), opt);
    emit(out);
    return kOk;
  }
  if (via == "hecke") {
    out["series"] = tseries_to_json(truncate_all(symmetric_tate_hecke(f, t), qorder), opt);
    emit(out);
    return kOk;
  }
  const auto a = truncate_all(symmetric_tate_product(f, t), qorder);
  const auto b = truncate_all(symmetric_tate_hecke(f, t), qorder);
  const bool match = agree_to_common_bound(a, b);
  out["match"] = match;
  out["series"] = tseries_to_json(a, opt);
  emit(out);
  return match ? kOk : kCheckFailed;
}

int tate_induce(const std::string& path, const std::string& sub_path, const std::string& amb_path, const Options& opt) {
  const TateElement f = read_valid_tate(path);
  const GroupPtr h = group_from_json(read_json(sub_path));
  const GroupPtr g = group_from_json(read_json(amb_path));
  const FinGroup& fg = *f.context()->group;
  if (fg.order() != h->order() || embed(fg, *h) != embed(*h, *h))
    throw UsageError("the element's group differs from --sub");
  const std::vector<Elem> image = embed(*h, *g);
  const Subgroup sub = make_subgroup(g, image);
  // local index of sub -> element of H
  std::vector<Elem> to_h(sub.group->order());
  for (std::size_t e = 0; e < image.size(); ++e) to_h[sub.local(image[e])] = static_cast<Elem>(e);
  const auto sub_ctx = make_tate_context(sub.group);
  const TateElement local = from_character_values(sub_ctx, f.known_below(), [&](std::size_t c, Elem x) {
    return character_eval(f, to_h[sub_ctx->rep(c)], to_h[x]);
  });
  const auto g_ctx = make_tate_context(g);
  const TateElement r = induction_tate(local, sub, g_ctx);
  const bool match = r == induction_tate_centralizer(local, sub, g_ctx);
  emit({{"index", g->order() / h->order()}, {"result", tate_to_json(r, opt)}, {"centralizer_form_match", match}});
  return match ? kOk : kCheckFailed;
}

int moonshine_j(long order, const Options& opt) {
  if (order < 0) throw UsageError("--order must be non-negative");
  emit(scalar_series_to_json(j_oracle(order), opt));
  return kOk;
}

int moonshine_faber(const std::string& path, long mmax, const Options& opt) {
  require_positive(mmax, "--mmax");
  const McKayThompson f = read_mckay_thompson(path);
  json classes = json::array();
  for (std::size_t c = 0; c < f.group->class_count(); ++c) {
    const Elem h = f.group->class_rep(c);
    classes.push_back({{"class_rep", h}, {"faber", faber_to_json(faber(f.thompson(h), mmax), opt)}});
  }
  emit({{"m_max", mmax}, {"classes", classes}});
  return kOk;
}

int moonshine_replicable(const std::string& path, long mmax, long qorder, const Options& opt) {
  require_positive(mmax, "--mmax");
  const McKayThompson f = read_mckay_thompson(path);
  const auto report = replicability_check(f, mmax, qorder);
  emit(report_to_json(report, opt));
  return report.replicable() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbifold Tate K-theory of finite groups: exact operators and checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--approx", opt.approx_digits, "Add decimal approximations of cyclotomic values (digits)")
      ->check(CLI::Range(0, 60));

  std::string file, sub_file, amb_file, via = "both";
  long n = 1, k = 1, m = 1, order = 0, torder = 1, qorder = 0, mmax = 1;
  std::optional<long> beta_order;
  std::function<int()> action;

  auto* group = app.add_subcommand("group", "Finite groups")->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Order, classes and centralizers");
  info->add_option("group", file)->required();
  info->callback([&] { action = [&] { return group_info(file); }; });

  auto* in = app.add_subcommand("inertia", "Iterated inertia groupoid of pt//G");
  in->add_option("group", file)->required();
  in->add_option("-n", n, "Number of inertia iterations");
  in->callback([&] { action = [&] { return inertia_cmd(file, n); }; });

  auto* gpd = app.add_subcommand("gpd", "Groupoid equivalences")->require_subcommand(1);
  auto* ek = gpd->add_subcommand("verify-ek", "E_k: constant loops of length k vs the k-th root");
  ek->add_option("group", file)->required();
  ek->add_option("-k", k)->required();
  ek->callback([&] { action = [&] { return verify_ek(file, k); }; });
  auto* vq = gpd->add_subcommand("verify-q", "Q: symmetric powers of constant loops vs inertia of symmetric powers");
  vq->add_option("group", file)->required();
  vq->add_option("--nmax", n)->required();
  vq->callback([&] { action = [&] { return verify_q(file, n); }; });

  auto* tate = app.add_subcommand("tate", "Tate K-theory elements")->require_subcommand(1);
  auto* val = tate->add_subcommand("validate", "Check the rotation condition");
  val->add_option("element", file)->required();
  val->callback([&] { action = [&] { return tate_validate(file); }; });
  auto* be = tate->add_subcommand("beta", "beta_k");
  be->add_option("element", file)->required();
  be->add_option("-k", k)->required();
  be->add_option("--order", beta_order, "Truncate the output below q^order (needs known_below >= k*order)");
  be->callback([&] { action = [&] { return tate_beta(file, k, beta_order, opt); }; });
  auto* he = tate->add_subcommand("hecke", "Hecke operator T_m");
  he->add_option("element", file)->required();
  he->add_option("-m", m)->required();
  he->add_option("--order", order)->required();
  he->callback([&] { action = [&] { return tate_hecke(file, m, order, opt); }; });
  auto* sp = tate->add_subcommand("sympow", "Total symmetric power S_t");
  sp->add_option("element", file)->required();
  sp->add_option("--torder", torder)->required();
  sp->add_option("--qorder", qorder)->required();
  sp->add_option("--via", via)->check(CLI::IsMember({"product", "hecke", "both"}));
  sp->callback([&] { action = [&] { return tate_sympow(file, torder, qorder, via, opt); }; });
  auto* ind = tate->add_subcommand("induce", "Induction from a subgroup");
  ind->add_option("element", file)->required();
  ind->add_option("--sub", sub_file)->required();
  ind->add_option("--amb", amb_file)->required();
  ind->callback([&] { action = [&] { return tate_induce(file, sub_file, amb_file, opt); }; });

  auto* moon = app.add_subcommand("moonshine", "McKay-Thompson series")->require_subcommand(1);
  auto* jj = moon->add_subcommand("j", "j - 744");
  jj->add_option("--order", order)->required();
  jj->callback([&] { action = [&] { return moonshine_j(order, opt); }; });
  auto* fa = moon->add_subcommand("faber", "Faber polynomials");
  fa->add_option("series", file)->required();
  fa->add_option("--mmax", mmax)->required();
  fa->callback([&] { action = [&] { return moonshine_faber(file, mmax, opt); }; });
  auto* rep = moon->add_subcommand("replicable", "Replicability check");
  rep->add_option("series", file)->required();
  rep->add_option("--mmax", mmax)->required();
  rep->add_option("--qorder", qorder)->required();
  rep->callback([&] { action = [&] { return moonshine_replicable(file, mmax, qorder, opt); }; });

  // let global options such as --approx follow the subcommand
  std::function<void(CLI::App*)> fallthrough = [&](CLI::App* a) {
    for (auto* s : a->get_subcommands({})) {
      s->fallthrough();
      fallthrough(s);
    }
  };
  fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action();
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "enumeration cap exceeded (set TATE_ELEMENT_CAP): " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
