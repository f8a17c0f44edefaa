#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poly/acceptance.hpp"
#include "poly/fap.hpp"
#include "poly/fpres.hpp"
#include "poly/geometry.hpp"
#include "poly/mix.hpp"
#include "poly/power.hpp"
#include "poly/semireg.hpp"
#include "poly/toroidal.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

poly::TorusParams parse_params(const std::string& csv) {
  auto v = parse_ints(csv);
  if (v.size() != 2)
    throw poly::precondition_error("expected two comma-separated integers");
  poly::TorusParams tp{v[0], v[1]};
  tp.validate();
  return tp;
}

void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items())
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
}

int cmd_toroidal(int n, const std::string& params, bool as_json) {
  poly::TorusParams tp =
      params.empty() ? poly::params_for_exponent(n) : parse_params(params);
  auto g = poly::build_torus_group(tp);
  json j{{"params", {tp.s, tp.t}},
         {"order", g.order()},
         {"self_dual", poly::polarity_exists(g)},
         {"schlafli", g.schlafli()}};
  emit(j, as_json);
  return 0;
}

int cmd_flat(const std::string& types, bool as_json) {
  auto ns = parse_ints(types);
  auto t = poly::build_flat_tower(ns);
  bool ip = t.group.check_intersection_property();
  bool fap = poly::has_fap_faces(t.group, t.group.rank() - 1);
  json j{{"types", ns},
         {"rank", t.group.rank()},
         {"order", t.group.order()},
         {"intersection_property", ip},
         {"fap", fap},
         {"factors", poly::iterated_factors(t)}};
  emit(j, as_json);
  return ip && fap ? 0 : 1;
}

int cmd_semireg(const std::string& tail, const std::string& last,
                bool as_json) {
  auto lasts = parse_ints(last);
  if (lasts.size() != 2)
    throw poly::precondition_error("--last expects two integers");
  auto ns = tail.empty() ? std::vector<int>{} : parse_ints(tail);
  auto t = poly::build_semiregular(ns, lasts[0], lasts[1]);
  bool doubling = poly::doubling_automorphism_exists(t);
  json j{{"tail", ns},
         {"last", lasts},
         {"rank", t.rank()},
         {"order", t.group.order()},
         {"doubling", doubling},
         {"full_group_order", poly::full_automorphism_group(t).order()}};
  if (t.group.order() <= t.group.limits().max_poset_order) {
    auto poset = poly::build_semireg_poset(t);
    j["f_vector"] = poly::f_vector(poset);
  }
  emit(j, as_json);
  return 0;
}

poly::StringCGroup base_group(const std::string& desc) {
  if (desc == "square") {
    auto g = poly::build_torus_group(poly::TorusParams{2, 0});
    return poly::StringCGroup({g.generators()[0], g.generators()[1]});
  }
  return poly::build_torus_group(parse_params(desc));
}

int cmd_power(const std::string& base, int m, bool as_json) {
  auto k = base_group(base);
  auto p = poly::power_2k(k);
  json j{{"base", base},
         {"vertices", poly::vertex_count(k)},
         {"order", p.order()},
         {"schlafli", p.schlafli()},
         {"central_involutions",
          poly::proper_central_involutions(k).size()}};
  if (m > 0) j["predicted_order_2kg"] = poly::predicted_order_2kg(k, m);
  emit(j, as_json);
  return 0;
}

int cmd_verify(const std::vector<std::string>& toroidal,
               const std::vector<std::string>& flat, bool all, bool fap,
               bool inter, bool orders, bool diamond, bool as_json) {
  if (all || (!fap && !inter && !orders && !diamond))
    fap = inter = orders = diamond = true;
  struct Target {
    std::string name;
    poly::StringCGroup g;
    std::uint64_t expected_order;
  };
  std::vector<Target> targets;
  for (const std::string& s : toroidal) {
    auto tp = parse_params(s);
    targets.push_back(
        {"toroidal(" + s + ")", poly::build_torus_group(tp), tp.group_order()});
  }
  for (const std::string& s : flat) {
    auto ns = parse_ints(s);
    long long e = -3 * (static_cast<long long>(ns.size()) - 1);
    for (int n : ns) e += n;
    targets.push_back({"flat(" + s + ")", poly::build_flat_tower(ns).group,
                       std::uint64_t(1) << e});
  }
  json table = json::array();
  bool ok = true;
  for (const Target& t : targets) {
    json row{{"name", t.name}};
    if (orders) row["order_ok"] = (t.g.order() == t.expected_order);
    if (inter) row["intersection_ok"] = t.g.check_intersection_property();
    if (fap) row["fap_ok"] = poly::has_fap_faces(t.g, t.g.rank() - 1);
    if (diamond) {
      auto poset = poly::build_poset(t.g);
      row["diamond_ok"] =
          poly::check_diamond(poset) && poly::check_flag_connected(poset);
    }
    for (const auto& [k, v] : row.items())
      if (v.is_boolean() && !v.get<bool>()) ok = false;
    table.push_back(std::move(row));
  }
  if (as_json)
    std::cout << table.dump(2) << "\n";
  else
    for (const auto& row : table)
      std::cout << row.dump() << "\n";
  return ok ? 0 : 1;
}

int cmd_lattice(int toroidal_n, const std::string& flat,
                const std::string& format, const std::string& graph,
                const std::string& out_path) {
  poly::FacePoset poset;
  if (!flat.empty())
    poset = poly::build_poset(poly::build_flat_tower(parse_ints(flat)).group);
  else
    poset = poly::build_poset(poly::torus_group_for_exponent(toroidal_n));
  std::string text;
  if (format == "json")
    text = poly::poset_json(poset);
  else if (graph == "flags")
    text = poly::poset_dot_flags(poset);
  else
    text = poly::poset_dot_hasse(poset);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw poly::error("cannot open output file: " + out_path);
    f << text;
  }
  return 0;
}

int cmd_tc(const std::string& preset, const std::string& params,
           const std::string& params2, const std::string& types,
           bool no_commutators, const std::string& strategy,
           std::uint64_t max_cosets, bool as_json) {
  poly::Presentation p;
  if (preset == "torus") {
    p = poly::presentation_44(parse_params(params));
  } else if (preset == "flat") {
    p = poly::flat_presentation(parse_ints(types), !no_commutators);
  } else if (preset == "universal") {
    p = poly::universal_44_presentation(parse_params(params),
                                        parse_params(params2));
  } else {
    throw poly::precondition_error("unknown preset: " + preset);
  }
  auto st = strategy == "felsch" ? poly::TcStrategy::felsch
                                 : poly::TcStrategy::hlt;
  auto r = poly::todd_coxeter(p, {}, max_cosets, st);
  json j{{"preset", preset},
         {"ngens", p.ngens},
         {"relators", p.relators.size()},
         {"complete", r.complete},
         {"cosets_used", r.cosets_used}};
  if (r.complete) j["index"] = r.index;
  emit(j, as_json);
  return r.complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyforge: 2-group polytope constructions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  auto* toroidal = app.add_subcommand("toroidal", "Toroidal map {4,4}_(s,t)");
  int tor_n = 0;
  std::string tor_params;
  toroidal->add_option("--n", tor_n, "group order exponent");
  toroidal->add_option("--params", tor_params, "s,t");
  toroidal->add_flag("--json", as_json);

  auto* flat = app.add_subcommand("flat", "Flat tower {{4,4},...}");
  std::string flat_types;
  flat->add_option("--types", flat_types, "n3,n4,...")->required();
  flat->add_flag("--json", as_json);

  auto* semireg = app.add_subcommand("semireg", "Alternating semiregular");
  std::string sr_tail, sr_last;
  semireg->add_option("--tail", sr_tail, "n3,...,n_{d-2}");
  semireg->add_option("--last", sr_last, "n_{d-1},m_{d-1}")->required();
  semireg->add_flag("--json", as_json);

  auto* power = app.add_subcommand("power", "Power polytope 2^K");
  std::string pw_base = "square";
  int pw_m = 0;
  power->add_option("--base", pw_base, "square | s,t");
  power->add_option("--m", pw_m, "predict |2^{K,G(2^m)}|");
  power->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Check constructions");
  std::vector<std::string> vf_toroidal, vf_flat;
  bool vf_all = false, vf_fap = false, vf_inter = false, vf_orders = false,
       vf_diamond = false;
  verify->add_option("--toroidal", vf_toroidal, "s,t (repeatable)");
  verify->add_option("--flat", vf_flat, "n3,n4,... (repeatable)");
  verify->add_flag("--all", vf_all);
  verify->add_flag("--fap", vf_fap);
  verify->add_flag("--intersection", vf_inter);
  verify->add_flag("--orders", vf_orders);
  verify->add_flag("--diamond", vf_diamond);
  verify->add_flag("--json", as_json);

  auto* lattice = app.add_subcommand("lattice", "Export a face lattice");
  int lat_n = 5;
  std::string lat_flat, lat_format = "json", lat_graph = "hasse", lat_out;
  lattice->add_option("--toroidal", lat_n, "group order exponent");
  lattice->add_option("--flat", lat_flat, "n3,n4,...");
  lattice->add_option("--export", lat_format, "json | dot")->required();
  lattice->add_option("--graph", lat_graph, "hasse | flags (dot only)");
  lattice->add_option("--out", lat_out, "output path (default stdout)");

  auto* tc = app.add_subcommand("tc", "Todd-Coxeter enumeration");
  std::string tc_preset, tc_params = "2,0", tc_params2 = "2,0", tc_types,
              tc_strategy = "hlt";
  bool tc_nocomm = false;
  std::uint64_t tc_max = poly::default_limits().max_cosets;
  tc->add_option("--preset", tc_preset, "torus | flat | universal")->required();
  tc->add_option("--params", tc_params, "s,t (torus/universal)");
  tc->add_option("--params2", tc_params2, "s,t (universal, second window)");
  tc->add_option("--types", tc_types, "n3,n4,... (flat)");
  tc->add_flag("--no-commutators", tc_nocomm);
  tc->add_option("--strategy", tc_strategy, "hlt | felsch");
  tc->add_option("--max-cosets", tc_max);
  tc->add_flag("--json", as_json);

  auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance suite");
  reproduce->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (toroidal->parsed()) {
      if (tor_n == 0 && tor_params.empty())
        throw poly::precondition_error("toroidal: give --n or --params");
      return cmd_toroidal(tor_n, tor_params, as_json);
    }
    if (flat->parsed()) return cmd_flat(flat_types, as_json);
    if (semireg->parsed()) return cmd_semireg(sr_tail, sr_last, as_json);
    if (power->parsed()) return cmd_power(pw_base, pw_m, as_json);
    if (verify->parsed())
      return cmd_verify(vf_toroidal, vf_flat, vf_all, vf_fap, vf_inter,
                        vf_orders, vf_diamond, as_json);
    if (lattice->parsed())
      return cmd_lattice(lat_n, lat_flat, lat_format, lat_graph, lat_out);
    if (tc->parsed())
      return cmd_tc(tc_preset, tc_params, tc_params2, tc_types, tc_nocomm,
                    tc_strategy, tc_max, as_json);
    if (reproduce->parsed())
      return poly::print_acceptance_report(std::cout, as_json);
  } catch (const poly::cap_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
