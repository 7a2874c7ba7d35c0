#include "flagtrans/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagtrans/arith_sieve.hpp"
#include "flagtrans/coset_geometry.hpp"
#include "flagtrans/design_verify.hpp"
#include "flagtrans/diophantine.hpp"
#include "flagtrans/group_atlas.hpp"

namespace flagtrans::cli {

namespace {

using json = nlohmann::ordered_json;
using arith::Verdict;

// Thrown for input the user can fix (bad numbers, unreadable files).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  int code = kOk;
  json report;
  std::string text;  // used instead of the JSON report when non-empty
};

std::string big(const BigInt& n) { return n.str(); }

BigInt parse_big(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  return BigInt(s);
}

unsigned parse_small(const std::string& s, const char* what) {
  BigInt v = parse_big(s, what);
  if (v > 100000) throw UsageError(std::string(what) + " is too large");
  return static_cast<unsigned>(v);
}

std::string verdict_word(bool ok) { return ok ? "pass" : "fail"; }

json factors_json(const std::vector<arith::Factor>& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(json::array({big(f.prime), f.multiplicity}));
  return arr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json tactical_json(const design::TacticalResult& r) {
  if (auto* t = std::get_if<design::TacticalParams>(&r))
    return json{{"v0", t->v0}, {"b0", t->b0}, {"k0", t->k0}, {"r0", t->r0}};
  const auto& d = std::get<design::Diagnostic>(r);
  return json{{"not_tactical", d.violated}, {"witness", d.witness}};
}

json params_json(const design::DesignParams& p) {
  return json{{"v", p.v}, {"b", p.b}, {"k", p.k}, {"r", p.r}, {"lambda", p.lambda}};
}

// ------------------------------------------------------------ build-design

Outcome build_design_cmd(const std::string& variant, const std::string& format, const std::string& out_file,
                         std::ostream& out) {
  const auto& bundle = geometry::standard_bundle();
  const design::IncidenceStructure& d = variant == "lambda6" ? bundle.d_prime : bundle.d;
  const std::string body = format == "text" ? design::to_text(d) : design::to_json(d) + "\n";
  Outcome o;
  if (out_file.empty()) {
    out << body;
    o.text = "\x01";  // already written
    return o;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out_file + "'");
  f << body;
  o.report = json{{"command", "build-design"}, {"variant", variant}, {"format", format}, {"out", out_file},
                  {"v", d.v()},                {"b", d.b()},         {"k", d.b() ? d.block(0).size() : 0}};
  return o;
}

// ----------------------------------------------------------- verify-design

const std::vector<std::string> kKnownChecks{"2design", "flags", "tactical", "pp3", "triple", "uniqueness", "desdes",
                                            "largeness"};

Outcome verify_design_cmd(const std::string& file, const std::string& group_name, const std::string& checks_arg,
                          const std::string& report_fmt) {
  std::vector<std::string> checks;
  {
    std::stringstream ss(checks_arg);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) {
        if (std::find(kKnownChecks.begin(), kKnownChecks.end(), item) == kKnownChecks.end())
          throw UsageError("unknown check '" + item + "'");
        checks.push_back(item);
      }
  }
  if (checks.empty()) throw UsageError("no checks requested");
  design::IncidenceStructure d;
  try {
    d = design::from_json(read_file(file));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto& bundle = geometry::standard_bundle();
  const bool ext = group_name == "psl33-ext";
  const PermGroup& grp = ext ? bundle.a : bundle.g;
  const PermGroup& n_sub = ext ? bundle.nap : bundle.p;
  const Point x = bundle.base;

  json results = json::object();
  bool all_pass = true;
  auto record = [&](const std::string& name, json body, bool pass) {
    json entry{{"verdict", verdict_word(pass)}};
    entry.update(body);
    results[name] = std::move(entry);
    all_pass = all_pass && pass;
  };

  if (d.v() != grp.degree()) {
    for (const auto& c : checks)
      record(c, json{{"error", "design has " + std::to_string(d.v()) + " points, the group acts on " +
                                   std::to_string(grp.degree())}},
             false);
  } else {
    const auto cls = design::classify_design(d);
    const auto* params = std::get_if<design::DesignParams>(&cls);
    std::optional<design::FlagResult> flags;
    auto get_flags = [&]() -> const design::FlagResult& {
      if (!flags) flags = design::flag_transitive(grp, d);
      return *flags;
    };

    for (const auto& c : checks) {
      if (c == "2design") {
        if (params) {
          record(c, json{{"params", params_json(*params)}, {"counting_identities", params->counting_identities()}},
                 params->counting_identities());
        } else {
          const auto& diag = std::get<design::Diagnostic>(cls);
          record(c, json{{"violated", diag.violated}, {"witness", diag.witness}}, false);
        }
      } else if (c == "desdes") {
        if (!params) {
          record(c, json{{"error", "not a 2-design"}}, false);
        } else {
          auto r = design::desdes_identities(*params);
          record(c,
                 json{{"r_eq_lambda_k_plus_1", r.r_identity},
                      {"b_eq_lambda_k_k_plus_1", r.b_identity},
                      {"ratio_squared_gt_k_squared", r.ratio_inequality},
                      {"v_eq_k_squared_lambda_divides_k", r.square_family}},
                 r.all());
        }
      } else if (c == "flags") {
        const auto& f = get_flags();
        record(c,
               json{{"group_order", grp.order()},
                    {"preserves_blocks", f.preserves_blocks},
                    {"flag_count", f.flag_count},
                    {"orbit_sizes", f.orbit_sizes}},
               f.preserves_blocks && f.transitive);
      } else if (c == "tactical") {
        const PermGroup gx = stabilizer(grp, x);
        const auto through = d.block_indices_through(x);
        json rows = json::array();
        bool ok = !through.empty();
        for (const auto& orb : orbits(gx)) {
          if (orb.size() == 1 && orb[0] == x) continue;
          auto t = design::tactical_params(d, orb, through);
          ok = ok && std::holds_alternative<design::TacticalParams>(t);
          rows.push_back(json{{"orbit_size", orb.size()}, {"params", tactical_json(t)}});
        }
        record(c, json{{"base_point", x}, {"orbits", rows}}, ok);
      } else if (c == "pp3") {
        const bool ft = get_flags().transitive;
        bool ok = true;
        std::size_t unmet = 0, failed = 0;
        json base_rows = json::array();
        for (Point y = 0; y < d.v(); ++y) {
          auto r = design::pp3_orbit_check(stabilizer(grp, y), ft, d, y);
          unmet += r.verdict == Verdict::hypothesis_unmet;
          failed += !r.identity_holds;
          ok = ok && r.verdict == Verdict::pass;
          if (y == x) {
            for (const auto& o : r.orbits)
              base_rows.push_back(
                  json{{"orbit_size", o.orbit_size}, {"block_intersections", o.intersections}, {"holds", o.holds}});
          }
        }
        json body{{"points_checked", d.v()},
                  {"identity_failures", failed},
                  {"hypothesis_unmet", unmet},
                  {"base_point", x},
                  {"base_point_orbits", base_rows}};
        if (!ft) body["note"] = "group is not flag-transitive on the design";
        json entry{{"verdict", ok ? "pass" : (ft ? "fail" : "hypothesis-unmet")}};
        entry.update(body);
        results[c] = std::move(entry);
        all_pass = all_pass && ok;
      } else if (c == "largeness") {
        const PermGroup gx = stabilizer(grp, x);
        bool ok = design::largeness_check(grp.order(), gx.order());
        record(c, json{{"group_order", grp.order()}, {"stabilizer_order", gx.order()}}, ok);
      } else if (c == "triple") {
        auto t = design::triple_factorization(grp, n_sub.elements(), bundle.l.elements());
        record(c,
               json{{"covers", t.covers},
                    {"degenerate", t.degenerate},
                    {"NL", t.nl_size},
                    {"NLN", t.nln_size},
                    {"group_order", t.g_order}},
               t.covers && !t.degenerate);
      } else if (c == "uniqueness") {
        auto subs = design::extension_uniqueness_audit(d, bundle.g, bundle.a, x);
        json rows = json::array();
        bool ok = true;
        for (const auto& s : subs) {
          ok = ok && s.pass;
          rows.push_back(json{{"id", s.id},
                              {"check", s.description},
                              {"verdict", verdict_word(s.pass)},
                              {"expected", s.expected},
                              {"observed", s.observed}});
        }
        record(c, json{{"subchecks", rows}}, ok);
      }
    }
  }

  Outcome o;
  o.code = all_pass ? kOk : kCheckFailed;
  o.report = json{{"command", "verify-design"},
                  {"file", file},
                  {"group", group_name},
                  {"design", json{{"v", d.v()}, {"b", d.b()}}},
                  {"checks", results},
                  {"verdict", verdict_word(all_pass)}};
  if (report_fmt == "text") {
    std::ostringstream os;
    os << "verify-design " << file << " (group " << group_name << ")\n";
    for (auto& [name, body] : results.items()) os << "  " << name << ": " << body["verdict"].get<std::string>() << '\n';
    os << "overall: " << verdict_word(all_pass) << '\n';
    o.text = os.str();
  }
  return o;
}

// ------------------------------------------------------------- audit-arith

json primitive_part_json(const BigInt& q, unsigned e) {
  auto r = arith::primitive_part(q, e);
  return json{{"q", big(q)},          {"e", e},
              {"value", big(r.value)}, {"stripped", big(r.stripped)},
              {"witnesses", factors_json(r.witnesses)}};
}

json zsigmondy_json(const BigInt& p, unsigned m, bool& ok) {
  if (!arith::is_prime(p)) throw UsageError("zsigmondy needs a prime p");
  auto primes = arith::primitive_prime_divisors(p, m);
  bool congruent = std::all_of(primes.begin(), primes.end(), [&](const BigInt& u) { return u % m == 1; });
  ok = congruent;
  json arr = json::array();
  for (const auto& u : primes) arr.push_back(big(u));
  return json{{"p", big(p)}, {"m", m}, {"primes", arr}, {"all_congruent_1_mod_m", congruent}};
}

Outcome audit_arith_cmd(const std::string& op, const std::vector<std::string>& operands) {
  Outcome o;
  auto need = [&](std::size_t n) {
    if (operands.size() != n)
      throw UsageError(op + " expects " + std::to_string(n) + " operands, got " + std::to_string(operands.size()));
  };
  if (op == "primitive-part") {
    need(2);
    BigInt q = parse_big(operands[0], "Q");
    if (q < 2) throw UsageError("Q must be at least 2");
    unsigned e = parse_small(operands[1], "E");
    if (e < 1) throw UsageError("E must be at least 1");
    o.report = primitive_part_json(q, e);
  } else if (op == "zsigmondy") {
    need(2);
    BigInt p = parse_big(operands[0], "P");
    unsigned m = parse_small(operands[1], "M");
    if (m < 2) throw UsageError("M must be at least 2");
    bool ok = true;
    o.report = zsigmondy_json(p, m, ok);
    o.code = ok ? kOk : kCheckFailed;
  } else if (op == "w-part") {
    need(2);
    BigInt m = parse_big(operands[0], "M"), w = parse_big(operands[1], "W");
    if (m < 1 || w < 2) throw UsageError("w-part needs M >= 1 and W >= 2");
    auto [mw, rest] = arith::w_part(m, w);
    o.report = json{{"m", big(m)}, {"w", big(w)}, {"m_w", big(mw)}, {"m_w_prime", big(rest)}};
  } else if (op == "kralj") {
    need(3);
    atlas::ClassicalType t{atlas::parse_family(operands[0]), parse_small(operands[1], "N"),
                           static_cast<std::uint64_t>(parse_big(operands[2], "Q"))};
    auto k = arith::kralj_bound(t);
    o.report = json{{"group", atlas::display_name(t)},
                    {"exponent", std::to_string(k.num) + (k.den == 1 ? "" : "/" + std::to_string(k.den))},
                    {"threshold", big(k.threshold)}};
  } else if (op == "batch") {
    need(1);
    json cases;
    try {
      cases = json::parse(read_file(operands[0]));
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("batch file is not valid JSON: ") + e.what());
    }
    if (cases.is_object() && cases.contains("cases")) cases = cases["cases"];
    if (!cases.is_array()) throw UsageError("batch file must be a JSON array of cases");
    json results = json::array();
    bool all_ok = true;
    for (const auto& c : cases) {
      auto num = [&](const char* key) -> BigInt {
        if (!c.contains(key)) throw UsageError(std::string("batch case lacks \"") + key + "\"");
        const auto& v = c[key];
        return v.is_string() ? parse_big(v.get<std::string>(), key) : BigInt(v.get<std::uint64_t>());
      };
      const std::string kind = c.value("op", "");
      json row;
      bool ok = true;
      if (kind == "primitive-part") {
        row = primitive_part_json(num("q"), static_cast<unsigned>(num("e")));
        if (c.contains("expect")) {
          BigInt want = c["expect"].is_string() ? parse_big(c["expect"].get<std::string>(), "expect")
                                                : BigInt(c["expect"].get<std::uint64_t>());
          ok = row["value"].get<std::string>() == big(want);
        }
      } else if (kind == "zsigmondy") {
        row = zsigmondy_json(num("p"), static_cast<unsigned>(num("m")), ok);
        if (c.contains("expect")) {
          json want = json::array();
          for (const auto& u : c["expect"]) want.push_back(u.is_string() ? u.get<std::string>() : std::to_string(u.get<std::uint64_t>()));
          ok = ok && row["primes"] == want;
        }
      } else {
        throw UsageError("unknown batch op '" + kind + "'");
      }
      json entry{{"op", kind}};
      entry.update(row);
      if (c.contains("expect")) entry["verdict"] = verdict_word(ok);
      all_ok = all_ok && ok;
      results.push_back(std::move(entry));
    }
    o.report = json{{"command", "audit-arith batch"}, {"results", results}, {"verdict", verdict_word(all_ok)}};
    o.code = all_ok ? kOk : kCheckFailed;
  } else {
    throw UsageError("unknown audit-arith operation '" + op + "'");
  }
  return o;
}

// ------------------------------------------------------- audit-diophantine

json assignment_json(const dioph::Assignment& a) {
  json j = json::object();
  for (const auto& [name, value] : a) j[name] = big(value);
  return j;
}

Outcome audit_diophantine_cmd(const std::string& family, const dioph::Bounds& bounds, const std::vector<std::string>& bs,
                              bool as_json) {
  std::vector<dioph::FamilyId> ids;
  if (family == "all")
    ids = dioph::all_families();
  else
    try {
      ids.push_back(dioph::parse_family_id(family));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  json scans = json::array();
  std::ostringstream text;
  bool ok = true;
  for (auto id : ids) {
    auto r = dioph::scan(id, bounds);
    json sols = json::array(), exp = json::array();
    for (const auto& s : r.solutions) sols.push_back(assignment_json(s));
    for (const auto& s : r.expected) exp.push_back(assignment_json(s));
    ok = ok && r.matches_expected();
    scans.push_back(json{{"family", dioph::family_token(id)},
                         {"equation", dioph::family_equation(id)},
                         {"solutions", sols},
                         {"expected", exp},
                         {"verdict", verdict_word(r.matches_expected())}});
    text << dioph::family_token(id) << "  " << dioph::family_equation(id) << "  solutions=" << sols.dump()
         << "  " << verdict_word(r.matches_expected()) << '\n';
  }
  json bfac = json::array();
  for (const auto& s : bs) {
    BigInt b = parse_big(s, "--b");
    if (b < 6) throw UsageError("--b values must be at least 6");
    json pairs = json::array();
    for (const auto& [lambda, k] : dioph::b_factorization(b))
      pairs.push_back(json{{"lambda", big(lambda)}, {"k", big(k)}});
    bfac.push_back(json{{"b", big(b)}, {"solutions", pairs}});
    text << "b=" << b << "  (lambda,k)=" << pairs.dump() << '\n';
  }
  Outcome o;
  o.code = ok ? kOk : kCheckFailed;
  o.report = json{{"command", "audit-diophantine"},
                  {"bounds", json{{"q_max", bounds.q_max}, {"n_max", bounds.n_max}, {"f_max", bounds.f_max}}},
                  {"scans", scans}};
  if (!bs.empty()) o.report["b_factorization"] = bfac;
  o.report["verdict"] = verdict_word(ok);
  if (!as_json) {
    text << "bounds: q <= " << bounds.q_max << " (prime powers), n <= " << bounds.n_max << ", f <= " << bounds.f_max
         << '\n'
         << "overall: " << verdict_word(ok) << '\n';
    o.text = text.str();
  }
  return o;
}

// ------------------------------------------------------------- audit-table

Outcome audit_table_cmd(const std::string& report_fmt) {
  json rows = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& r : dioph::signprime_audit()) {
    ok = ok && r.pass;
    json ys = json::array();
    for (std::size_t i = 0; i < r.row.y_names.size(); ++i)
      ys.push_back(json{{"name", r.row.y_names[i]}, {"order", big(r.y_orders[i])}});
    json row{{"row", r.row.index},
             {"X", atlas::display_name(r.row.x)},
             {"n", r.row.x.n},
             {"q", r.row.x.q},
             {"e", r.row.e},
             {"order_X", big(r.order_x)},
             {"out_listed", big(r.row.out_listed)},
             {"out_computed", big(r.out_computed)},
             {"phi_listed", big(r.row.phi_listed)},
             {"phi_computed", big(r.phi_computed)},
             {"e_by_family_rule", r.e_definition},
             {"phi_by_family_rule", big(r.phi_definition)},
             {"Y", ys}};
    if (r.row.s) {
      row["s"] = *r.row.s;
      row["s_divides_X"] = r.s_divides_x;
      row["s_squared_not_dividing_X"] = r.s_squared_not_dividing;
      row["s_not_dividing_Y"] = r.s_not_dividing_y;
      row["s_not_dividing_phi"] = r.s_not_dividing_phi;
    } else {
      row["s"] = nullptr;
      row["phi_matches"] = r.phi_matches;
    }
    row["largest_candidate"] = r.largest_candidate ? json(big(*r.largest_candidate)) : json(nullptr);
    row["verdict"] = verdict_word(r.pass);
    rows.push_back(row);
    text << "row " << r.row.index << "  " << atlas::display_name(r.row.x) << "  phi=" << r.phi_computed
         << " (listed " << r.row.phi_listed << ")  s=" << (r.row.s ? std::to_string(*r.row.s) : "-") << "  "
         << verdict_word(r.pass) << '\n';
  }
  Outcome o;
  o.code = ok ? kOk : kCheckFailed;
  o.report = json{{"command", "audit-table signprime"}, {"rows", rows}, {"verdict", verdict_word(ok)}};
  if (report_fmt == "text") o.text = text.str() + "overall: " + verdict_word(ok) + "\n";
  return o;
}

// ------------------------------------------------------------------- atlas

Outcome atlas_cmd(const std::string& op, const std::vector<std::string>& operands) {
  Outcome o;
  if (op == "named") {
    if (operands.size() != 1) throw UsageError("atlas named expects one group name");
    try {
      o.report = json{{"group", operands[0]}, {"order", big(atlas::named_order(operands[0]))}};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return o;
  }
  if (operands.size() != 3) throw UsageError("atlas " + op + " expects FAMILY N Q");
  atlas::ClassicalType t;
  try {
    t = {atlas::parse_family(operands[0]), parse_small(operands[1], "N"),
         static_cast<std::uint64_t>(parse_big(operands[2], "Q"))};
    atlas::validate(t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j{{"group", atlas::display_name(t)}};
  if (op == "order")
    j["order"] = big(atlas::simple_order(t));
  else if (op == "out")
    j["out"] = big(atlas::out_order(t));
  else
    throw UsageError("unknown atlas operation '" + op + "'");
  j["admissible"] = atlas::admissible(t);
  o.report = j;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag-transitive 2-(144,12,lambda) designs over PSL(3,3) and the arithmetic around them", "flagtrans"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock time to the report");

  std::string variant = "lambda3", format = "json", out_file;
  auto* build = app.add_subcommand("build-design", "Build one of the two designs on 144 points");
  build->add_option("--variant", variant, "lambda3 or lambda6")->check(CLI::IsMember({"lambda3", "lambda6"}));
  build->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  build->add_option("--out", out_file, "Write the design here instead of stdout");

  std::string file, group = "psl33", checks = "2design,flags", report_fmt = "json";
  auto* verify = app.add_subcommand("verify-design", "Verify a design file against a group");
  verify->add_option("file", file, "Design JSON")->required();
  verify->add_option("--group", group, "psl33 or psl33-ext")->check(CLI::IsMember({"psl33", "psl33-ext"}));
  verify->add_option("--checks", checks, "Comma separated: 2design,flags,tactical,pp3,triple,uniqueness,desdes,largeness");
  verify->add_option("--report", report_fmt, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string arith_op;
  std::vector<std::string> arith_operands;
  auto* arith_cmd = app.add_subcommand("audit-arith", "Primitive parts, Zsigmondy primes and related quantities");
  arith_cmd->add_option("operation", arith_op, "primitive-part Q E | zsigmondy P M | w-part M W | kralj FAMILY N Q | batch FILE")
      ->required();
  arith_cmd->add_option("operands", arith_operands);

  std::string family = "all";
  dioph::Bounds bounds;
  std::vector<std::string> bvals;
  bool dioph_json = false;
  auto* dioph_cmd = app.add_subcommand("audit-diophantine", "Bounded scans of the square equations");
  dioph_cmd->add_option("--family", family, "F1..F8 or all");
  dioph_cmd->add_option("--bound-q", bounds.q_max, "Largest prime power q");
  dioph_cmd->add_option("--bound-n", bounds.n_max, "Largest dimension n");
  dioph_cmd->add_option("--bound-f", bounds.f_max, "Largest exponent f");
  dioph_cmd->add_option("--b", bvals, "Block counts b to split as lambda k (k+1)");
  dioph_cmd->add_flag("--json", dioph_json, "JSON report");

  std::string table;
  std::string table_fmt = "json";
  auto* table_cmd = app.add_subcommand("audit-table", "Audit the significant-prime table");
  table_cmd->add_option("table", table, "signprime")->required()->check(CLI::IsMember({"signprime"}));
  table_cmd->add_option("--report", table_fmt, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string atlas_op;
  std::vector<std::string> atlas_operands;
  auto* atlas_cmd_app = app.add_subcommand("atlas", "Orders of classical and named groups");
  atlas_cmd_app->add_option("operation", atlas_op, "order FAMILY N Q | out FAMILY N Q | named NAME")
      ->required()
      ->check(CLI::IsMember({"order", "out", "named"}));
  atlas_cmd_app->add_option("operands", atlas_operands);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*build)
      o = build_design_cmd(variant, format, out_file, out);
    else if (*verify)
      o = verify_design_cmd(file, group, checks, report_fmt);
    else if (*arith_cmd)
      o = audit_arith_cmd(arith_op, arith_operands);
    else if (*dioph_cmd)
      o = audit_diophantine_cmd(family, bounds, bvals, dioph_json);
    else if (*table_cmd)
      o = audit_table_cmd(table_fmt);
    else if (*atlas_cmd_app)
      o = atlas_cmd(atlas_op, atlas_operands);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.text == "\x01") return o.code;
  if (!o.text.empty()) {
    out << o.text;
    if (timing) out << "wall time: " << static_cast<long long>(ms) << " ms\n";
  } else {
    if (timing) o.report["timing"] = json{{"wall_ms", static_cast<long long>(ms)}};
    out << o.report.dump(2) << '\n';
  }
  return o.code;
}

}  // namespace flagtrans::cli
