// Command-line workbench for multi-sender unicast index-coding rate
// regions. Subcommands:
//   mais     acyclic-subset outer bound of an instance
//   inner    composite-coding inner bound (six scheme variants),
//            projected region + certification, or certificate-based
//            verification against a target region
//   compare  exact set relation between two region files
//   point    membership of a rational point in a region file
//   corpus   run the bundled data corpus against its manifest
//
// Exit codes: 0 success, 1 usage/parse error, 2 verdict or expectation
// mismatch, 3 resource cap exceeded (result incomplete).
//
// All outputs are deterministic: identical inputs yield byte-identical
// region and report files. Timing goes to stderr only.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "icrr/analysis.hpp"
#include "icrr/mais.hpp"
#include "icrr/planio.hpp"

using namespace icrr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// Cap override precedence: flag > environment > default.
std::size_t cap_env(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return static_cast<std::size_t>(std::stoull(v));
}

struct CapFlags {
  std::size_t max_choices = cap_env("ICWB_MAX_CHOICES", SchemeOptions{}.max_choices);
  std::size_t max_tuples = cap_env("ICWB_MAX_TUPLES", SchemeOptions{}.max_tuples);
  std::size_t max_plans = cap_env("ICWB_MAX_PLANS", SchemeOptions{}.max_plans);
  std::size_t max_oracle_members =
      cap_env("ICWB_MAX_ORACLE_MEMBERS", SchemeOptions{}.max_oracle_members);
  std::size_t fme_max_rows = cap_env("ICWB_FME_MAX_ROWS", FmeOptions{}.max_rows);

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-choices", max_choices,
                    "Cap on decoding choices per group (env ICWB_MAX_CHOICES)");
    cmd->add_option("--max-tuples", max_tuples,
                    "Cap on combined members per plan (env ICWB_MAX_TUPLES)");
    cmd->add_option("--max-plans", max_plans,
                    "Cap on enumerated plans (env ICWB_MAX_PLANS)");
    cmd->add_option("--max-oracle-members", max_oracle_members,
                    "Cap on lifted tuple systems per symbolic plan "
                    "(env ICWB_MAX_ORACLE_MEMBERS)");
    cmd->add_option("--fme-max-rows", fme_max_rows,
                    "Cap on intermediate elimination rows (env ICWB_FME_MAX_ROWS)");
  }

  SchemeOptions options() const {
    SchemeOptions o;
    o.max_choices = max_choices;
    o.max_tuples = max_tuples;
    o.max_plans = max_plans;
    o.max_oracle_members = max_oracle_members;
    o.fme.max_rows = fme_max_rows;
    return o;
  }
};

std::string relation_name(bool ab, bool ba) {
  if (ab && ba) return "equal";
  if (ab) return "a-proper-subset-of-b";
  if (ba) return "b-proper-subset-of-a";
  return "incomparable";
}

struct InnerSpec {
  Scheme scheme;
  std::vector<GroupingPlan> plans;  // empty => auto
  std::vector<DecodingTuple> decoding;
  std::optional<Polyhedron> outer;  // defaults to the acyclic-subset bound
};

RegionReport run_inner(const Instance& inst, const std::string& instance_id,
                       const InnerSpec& spec, const SchemeOptions& opts) {
  SchemeResult sr =
      spec.plans.empty()
          ? scheme_region_auto(inst, spec.scheme, opts)
          : scheme_region(inst, spec.scheme, spec.plans, spec.decoding, opts);
  std::optional<Polyhedron> outer = spec.outer;
  if (!outer) outer = mais_region(inst);
  return make_report(instance_id, sr, outer);
}

nlohmann::json verify_to_json(const VerifyCertificates& cert) {
  nlohmann::json doc;
  doc["ok"] = cert.ok;
  doc["facets"] = nlohmann::json::array();
  for (const auto& fc : cert.facets)
    doc["facets"].push_back({{"facet", format_inequality(fc.facet)},
                             {"max", rational_to_string(fc.max)},
                             {"ok", fc.ok}});
  doc["vertices"] = nlohmann::json::array();
  for (const auto& vc : cert.vertices) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : vc.vertex) v.push_back(rational_to_string(x));
    doc["vertices"].push_back({{"vertex", v}, {"feasible", vc.feasible}});
  }
  return doc;
}

// ---------------------------------------------------------------------------
// corpus runner

struct CorpusStats {
  int checks = 0;
  int failures = 0;
};

void corpus_line(CorpusStats& st, const std::string& entry, const std::string& what,
                 bool ok, const std::string& detail = "") {
  ++st.checks;
  if (!ok) ++st.failures;
  std::cout << "[" << entry << "] " << what << ": " << (ok ? "pass" : "FAIL");
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
}

std::map<VarId, Rational> point_from_json(const nlohmann::json& obj) {
  std::map<VarId, Rational> p;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    p[parse_var_name(it.key())] = parse_rational(it.value().get<std::string>());
  return p;
}

int run_corpus(const std::string& data_dir, const std::string& only) {
  const std::string manifest_path = data_dir + "/corpus.json";
  nlohmann::json manifest = nlohmann::json::parse(read_file(manifest_path));
  CorpusStats st;
  for (const auto& entry : manifest.at("entries")) {
    const std::string name = entry.at("name").get<std::string>();
    if (!only.empty() && only != name) continue;
    const Instance inst =
        parse_instance(read_file(data_dir + "/" + entry.at("instance").get<std::string>()));
    for (const auto& chk : entry.at("checks")) {
      const std::string type = chk.at("type").get<std::string>();
      auto region_of = [&](const char* key) {
        return load_region(data_dir + "/" + chk.at(key).get<std::string>());
      };
      if (type == "mais") {
        Polyhedron expect = region_of("expect_region");
        Polyhedron got = mais_region(inst);
        corpus_line(st, name, "mais matches " + chk.at("expect_region").get<std::string>(),
                    got == expect);
      } else if (type == "inner") {
        InnerSpec spec;
        spec.scheme = parse_scheme(chk.at("scheme").get<std::string>());
        if (chk.contains("plans"))
          for (const auto& p : chk.at("plans"))
            spec.plans.push_back(plan_from_json(
                read_file(data_dir + "/" + p.get<std::string>()), inst.num_senders()));
        if (chk.contains("decoding"))
          spec.decoding = decoding_from_json(
              read_file(data_dir + "/" + chk.at("decoding").get<std::string>()), inst);
        if (chk.contains("outer")) spec.outer = load_outer_region(
            data_dir + "/" + chk.at("outer").get<std::string>());
        RegionReport rep =
            run_inner(inst, name, spec, SchemeOptions{});
        const std::string what = "inner " + chk.at("scheme").get<std::string>();
        if (chk.contains("expect_region")) {
          Polyhedron expect = region_of("expect_region");
          corpus_line(st, name,
                      what + " region matches " + chk.at("expect_region").get<std::string>(),
                      rep.region == expect);
        }
        if (chk.contains("expect_verdict")) {
          const std::string want = chk.at("expect_verdict").get<std::string>();
          corpus_line(st, name, what + " verdict " + want, verdict_name(rep.verdict) == want,
                      "got " + verdict_name(rep.verdict));
        }
        if (chk.contains("expect_witness")) {
          auto want = point_from_json(chk.at("expect_witness"));
          bool ok = rep.witness.has_value();
          if (ok) {
            for (const auto& v : rep.region.variables()) {
              Rational got = rep.witness->count(v) ? rep.witness->at(v) : Rational(0);
              Rational exp = want.count(v) ? want.at(v) : Rational(0);
              ok = ok && got == exp;
            }
          }
          corpus_line(st, name, what + " witness", ok);
        }
      } else if (type == "verify") {
        GroupingPlan plan = plan_from_json(
            read_file(data_dir + "/" + chk.at("plan").get<std::string>()),
            inst.num_senders());
        auto tuples = decoding_from_json(
            read_file(data_dir + "/" + chk.at("decoding").get<std::string>()), inst);
        Scheme scheme = parse_scheme(chk.at("scheme").get<std::string>());
        std::vector<DecodingChoice> per_group;
        for (std::size_t gi = 1; gi <= plan.groups.size(); ++gi)
          per_group.push_back(tuples.front().at(static_cast<int>(gi)));
        Polyhedron lifted = tuple_system(inst, plan, per_group, scheme_compression(scheme));
        Polyhedron target = region_of("target");
        auto cert = verify_region_equals(lifted, target);
        corpus_line(st, name, "verify projection equals " + chk.at("target").get<std::string>(),
                    cert.ok);
        if (chk.contains("outer") && chk.contains("expect_verdict")) {
          Polyhedron outer = load_outer_region(
              data_dir + "/" + chk.at("outer").get<std::string>());
          auto c = certify(target, outer);
          const std::string want = chk.at("expect_verdict").get<std::string>();
          corpus_line(st, name, "verify verdict " + want, verdict_name(c.verdict) == want,
                      "got " + verdict_name(c.verdict));
        }
      } else if (type == "compare") {
        Polyhedron a = region_of("a"), b = region_of("b");
        bool ab = poly_subset(a, b), ba = poly_subset(b, a);
        const std::string want = chk.at("expect").get<std::string>();
        corpus_line(st, name,
                    "compare " + chk.at("a").get<std::string>() + " vs " +
                        chk.at("b").get<std::string>() + " is " + want,
                    relation_name(ab, ba) == want, "got " + relation_name(ab, ba));
      } else if (type == "point") {
        Polyhedron region = region_of("region");
        auto p = point_from_json(chk.at("point"));
        bool inside = contains_point(region, p);
        const std::string want = chk.at("expect").get<std::string>();
        corpus_line(st, name, "point " + want + " " + chk.at("region").get<std::string>(),
                    (inside ? "inside" : "outside") == want);
      } else {
        throw ParseError("unknown corpus check type: " + type);
      }
    }
  }
  std::cout << st.checks << " checks, " << st.failures << " failures\n";
  return st.failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for multi-sender unicast index-coding "
               "rate regions"};
  app.require_subcommand(1);

  // --- mais ---
  auto* cmd_mais = app.add_subcommand(
      "mais", "Acyclic-subset outer bound of an instance, as a region file");
  std::string mais_instance, mais_out;
  cmd_mais->add_option("instance", mais_instance, "Instance JSON file")->required();
  cmd_mais->add_option("-o,--output", mais_out, "Output region file (default stdout)");

  // --- inner ---
  auto* cmd_inner = app.add_subcommand(
      "inner", "Composite-coding inner bound: region, certification, reports");
  std::string in_instance, in_scheme, in_decoding, in_outer, in_mode = "project",
              in_out, in_format = "json";
  std::vector<std::string> in_plans;
  CapFlags in_caps;
  cmd_inner->add_option("instance", in_instance, "Instance JSON file")->required();
  cmd_inner->add_option("--scheme", in_scheme,
                        "One of dcc-a, dcc, mdcc, ccc-a, ccc-s, ccc-ls")->required();
  cmd_inner->add_option("--plan", in_plans,
                        "Plan JSON file (repeatable; default: scheme's plan library)");
  cmd_inner->add_option("--decoding", in_decoding,
                        "Decoding JSON file (default: exhaustive enumeration)");
  cmd_inner->add_option("--outer", in_outer,
                        "Outer-bound region file (default: acyclic-subset bound)");
  cmd_inner->add_option("--mode", in_mode,
                        "project (compute the region) or verify:TARGET "
                        "(certify the lifted system against a target region file)");
  cmd_inner->add_option("--format", in_format, "json or text");
  cmd_inner->add_option("-o,--output", in_out, "Output file (default stdout)");
  in_caps.add_to(cmd_inner);

  // --- compare ---
  auto* cmd_compare =
      app.add_subcommand("compare", "Exact set relation between two region files");
  std::string cm_a, cm_b;
  cmd_compare->add_option("a", cm_a, "Region file A")->required();
  cmd_compare->add_option("b", cm_b, "Region file B")->required();

  // --- point ---
  auto* cmd_point = app.add_subcommand(
      "point", "Membership of a rational point in a region file");
  std::string pt_region;
  std::vector<std::string> pt_values;
  cmd_point->add_option("region", pt_region, "Region file")->required();
  cmd_point->add_option("values", pt_values,
                        "One rational per region variable, in declared order")
      ->required();

  // --- corpus ---
  auto* cmd_corpus =
      app.add_subcommand("corpus", "Run the bundled data corpus against its manifest");
  std::string co_data = "data", co_only;
  cmd_corpus->add_option("--data", co_data, "Corpus directory (default: ./data)");
  cmd_corpus->add_option("--only", co_only, "Run a single corpus entry by name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_mais) {
      auto inst = parse_instance(read_file(mais_instance));
      emit(region_to_json(mais_region(inst)), mais_out);
      return kExitOk;
    }

    if (*cmd_inner) {
      auto inst = parse_instance(read_file(in_instance));
      const Scheme scheme = parse_scheme(in_scheme);
      std::vector<GroupingPlan> plans;
      for (const auto& p : in_plans)
        plans.push_back(plan_from_json(read_file(p), inst.num_senders()));
      std::vector<DecodingTuple> decoding;
      if (!in_decoding.empty())
        decoding = decoding_from_json(read_file(in_decoding), inst);
      std::optional<Polyhedron> outer;
      if (!in_outer.empty()) outer = load_outer_region(in_outer);

      const double t0 = now_s();
      if (in_mode.rfind("verify:", 0) == 0) {
        const std::string target_path = in_mode.substr(7);
        if (plans.empty()) {
          bool complete = true;
          plans = auto_plans(inst, scheme, in_caps.max_plans, &complete);
        }
        if (plans.size() != 1 || decoding.size() != 1)
          throw ParseError("verify mode needs exactly one plan and one decoding tuple");
        std::vector<DecodingChoice> per_group;
        for (std::size_t gi = 1; gi <= plans[0].groups.size(); ++gi)
          per_group.push_back(decoding.front().at(static_cast<int>(gi)));
        Polyhedron lifted =
            tuple_system(inst, plans[0], per_group, scheme_compression(scheme));
        Polyhedron target = load_region(target_path);
        auto cert = verify_region_equals(lifted, target);
        auto c = certify(target, outer ? *outer : mais_region(inst));
        nlohmann::json doc;
        doc["instance"] = in_instance;
        doc["scheme"] = in_scheme;
        doc["mode"] = "verify";
        doc["certificates"] = verify_to_json(cert);
        doc["verdict"] = verdict_name(c.verdict);
        emit(doc.dump(2) + "\n", in_out);
        std::cerr << "verify took " << now_s() - t0 << "s\n";
        return cert.ok ? kExitOk : kExitMismatch;
      }
      if (in_mode != "project") throw ParseError("unknown --mode: " + in_mode);

      InnerSpec spec{scheme, std::move(plans), std::move(decoding), std::move(outer)};
      RegionReport rep = run_inner(inst, in_instance, spec, in_caps.options());
      emit(in_format == "text" ? render_report_text(rep) : render_report_json(rep), in_out);
      std::cerr << "inner took " << now_s() - t0 << "s\n";
      return (rep.verdict == Verdict::UNKNOWN && !rep.exhaustive) ? kExitResource : kExitOk;
    }

    if (*cmd_compare) {
      Polyhedron a = load_region(cm_a), b = load_region(cm_b);
      if (a.variables() != b.variables())
        throw ParseError("compare: region files declare different variables");
      bool ab = poly_subset(a, b), ba = poly_subset(b, a);
      std::cout << "relation: " << relation_name(ab, ba) << "\n";
      if (!ab) {
        auto w = separating_point(a, b);
        if (w) std::cout << "witness in a, not in b: " << format_point(a.variables(), *w)
                         << "\n";
      }
      if (!ba) {
        auto w = separating_point(b, a);
        if (w) std::cout << "witness in b, not in a: " << format_point(a.variables(), *w)
                         << "\n";
      }
      return kExitOk;
    }

    if (*cmd_point) {
      Polyhedron region = load_region(pt_region);
      if (pt_values.size() != region.variables().size())
        throw ParseError("point: expected " + std::to_string(region.variables().size()) +
                         " values, got " + std::to_string(pt_values.size()));
      std::map<VarId, Rational> p;
      for (std::size_t i = 0; i < pt_values.size(); ++i)
        p[region.variables()[i]] = parse_rational(pt_values[i]);
      std::cout << (contains_point(region, p) ? "inside" : "outside") << "\n";
      return kExitOk;
    }

    if (*cmd_corpus) return run_corpus(co_data, co_only);
  } catch (const LimitError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
