// Unit tests for the rational core, polyhedral engines, instance and
// file formats, composite-coding systems, and the analysis layer.
#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "icrr/analysis.hpp"
#include "icrr/mais.hpp"
#include "icrr/planio.hpp"

using namespace icrr;

namespace {

std::uint32_t m(std::initializer_list<int> xs) {
  std::uint32_t v = 0;
  for (int x : xs) v |= 1u << (x - 1);
  return v;
}

Instance two_sender_square() {  // four messages, two three-message senders
  return parse_instance(R"({
    "num_messages": 4,
    "senders": [
      {"messages": [1, 2, 3], "capacity": "1"},
      {"messages": [2, 3, 4], "capacity": "1"}
    ],
    "side_info": {"1": [4], "2": [1, 3], "3": [1, 2], "4": [2, 3]}
  })");
}

Polyhedron rates_region(int N, const std::vector<std::vector<int>>& rows) {
  std::vector<VarId> vars;
  for (int j = 1; j <= N; ++j) vars.push_back(VarId::message_rate(j));
  Polyhedron p(vars);
  p.add_nonnegativity();
  for (const auto& r : rows) {
    LinearInequality q;
    for (int j = 1; j <= N; ++j)
      if (r[j - 1] != 0) q.coeffs[VarId::message_rate(j)] = r[j - 1];
    q.rhs = r[N];
    p.add(std::move(q));
  }
  return p;
}

}  // namespace

// --- rationals and identifiers ----------------------------------------------

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("0") == 0);
  CHECK(rational_to_string(parse_rational("10/4")) == "5/2");
  CHECK(rational_to_string(Rational(-3)) == "-3");
  CHECK_THROWS_AS(parse_rational(" 7 "), ParseError);  // no padding allowed
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("coprime scaling clears denominators") {
  CHECK(coprime_scale({Rational(1, 2), Rational(2, 3), Rational(-1)}) == 6);
  CHECK(coprime_scale({Rational(4), Rational(-6)}) == Rational(1, 2));
  CHECK(coprime_scale({Rational(0), Rational(0)}) == 1);
  // scaled vector is coprime integers
  std::vector<Rational> v{Rational(3, 4), Rational(-5, 6)};
  auto s = coprime_scale(v);
  CHECK(v[0] * s == 9);
  CHECK(v[1] * s == -10);
}

TEST_CASE("variable names round-trip") {
  for (const auto& s : {"R3", "R12", "R2_g4", "y{1,3}_g2", "y{2,3}_k1_g2", "C1_g2"}) {
    auto v = parse_var_name(s);
    CHECK(var_name(v) == s);
  }
  CHECK(parse_var_name("R3").kind == VarKind::MessageRate);
  CHECK(parse_var_name("R3_g1").kind == VarKind::GroupRate);
  CHECK(parse_var_name("y{1,3}_g2").kind == VarKind::CompositeRate);
  CHECK(parse_var_name("C1_g2").kind == VarKind::LinkSplit);
  CHECK_THROWS_AS(parse_var_name("x3"), ParseError);
  CHECK_THROWS_AS(parse_var_name("R0"), ParseError);
  CHECK_THROWS_AS(parse_var_name("y{}_g1"), ParseError);
}

// --- inequalities and polyhedra ----------------------------------------------

TEST_CASE("inequality canonical form") {
  auto v1 = VarId::message_rate(1), v2 = VarId::message_rate(2);
  LinearInequality q{{{v1, Rational(2, 3)}, {v2, Rational(-4, 3)}}, Rational(2)};
  q.canonicalize();
  CHECK(q.coeffs.at(v1) == 1);
  CHECK(q.coeffs.at(v2) == -2);
  CHECK(q.rhs == 3);
  auto copy = q;
  copy.canonicalize();
  CHECK(copy == q);  // idempotent

  LinearInequality taut{{}, Rational(0)};
  CHECK(taut.trivially_true());
  LinearInequality absurd{{}, Rational(-1)};
  CHECK(absurd.trivially_false());
  LinearInequality zeroed{{{v1, Rational(0)}}, Rational(5)};
  zeroed.canonicalize();
  CHECK(zeroed.trivially_true());
}

TEST_CASE("polyhedron dedup, equalities, membership") {
  auto v1 = VarId::message_rate(1), v2 = VarId::message_rate(2);
  Polyhedron p({v1, v2});
  p.add(make_ineq({{v1, 1}}, 2));
  p.add(make_ineq({{v1, Rational(1, 2)}}, 1));  // same row after canonicalization
  CHECK(p.inequalities().size() == 1);
  p.add_equality({{v1, 1}, {v2, 1}}, 3);  // stored as two opposite rows
  CHECK(p.inequalities().size() == 3);
  CHECK(p.contains({{v1, Rational(2)}, {v2, Rational(1)}}));
  CHECK_FALSE(p.contains({{v1, Rational(1)}, {v2, Rational(1)}}));
  CHECK_FALSE(p.has_false_row());
  p.add(LinearInequality{{}, Rational(-1)});
  CHECK(p.has_false_row());
}

// --- linear programming -------------------------------------------------------

TEST_CASE("simplex on known programs") {
  auto v1 = VarId::message_rate(1), v2 = VarId::message_rate(2);
  Polyhedron p({v1, v2});
  p.add_nonnegativity();
  p.add(make_ineq({{v1, 1}, {v2, 2}}, 4));
  p.add(make_ineq({{v1, 3}, {v2, 1}}, 6));

  auto r = lp_max(p, {{v1, Rational(1)}, {v2, Rational(1)}});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(14, 5));  // vertex (8/5, 6/5)
  CHECK(r.point.at(v1) == Rational(8, 5));
  CHECK(r.point.at(v2) == Rational(6, 5));

  Polyhedron ub({v1, v2});
  ub.add_nonnegativity();
  CHECK(lp_max(ub, {{v1, Rational(1)}}).status == LpStatus::Unbounded);

  Polyhedron inf({v1});
  inf.add(make_ineq({{v1, 1}}, -1));
  inf.add(make_ineq({{v1, -1}}, 0));
  CHECK(lp_max(inf, {{v1, Rational(1)}}).status == LpStatus::Infeasible);
  CHECK_FALSE(lp_feasible(inf));
}

TEST_CASE("simplex optimum matches the best vertex on random boxes") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<VarId> vars;
    for (int j = 1; j <= n; ++j) vars.push_back(VarId::message_rate(j));
    Polyhedron p(vars);
    p.add_nonnegativity();
    for (int j = 0; j < n; ++j)
      p.add(make_ineq({{vars[j], 1}}, Rational(1 + static_cast<int>(rng() % 3))));
    for (int r = 0; r < 3; ++r) {
      LinearInequality q;
      for (int j = 0; j < n; ++j) {
        int c = static_cast<int>(rng() % 5) - 2;
        if (c) q.coeffs[vars[j]] = c;
      }
      q.rhs = static_cast<int>(rng() % 5) + 1;
      p.add(std::move(q));
    }
    std::map<VarId, Rational> obj;
    for (int j = 0; j < n; ++j) obj[vars[j]] = static_cast<int>(rng() % 7) - 3;
    auto lp = lp_max(p, obj);
    REQUIRE(lp.status == LpStatus::Optimal);
    Rational best;
    bool first = true;
    for (const auto& v : vertices(p)) {
      Rational val = 0;
      for (int j = 0; j < n; ++j) val += obj[vars[j]] * v[j];
      if (first || val > best) best = val, first = false;
    }
    REQUIRE_FALSE(first);
    CHECK(lp.value == best);
  }
}

// --- redundancy, elimination, vertex enumeration ------------------------------

TEST_CASE("redundancy removal keeps the set and drops slack rows") {
  auto v1 = VarId::message_rate(1), v2 = VarId::message_rate(2);
  Polyhedron p({v1, v2});
  p.add_nonnegativity();
  p.add(make_ineq({{v1, 1}}, 1));
  p.add(make_ineq({{v2, 1}}, 1));
  p.add(make_ineq({{v1, 1}, {v2, 1}}, 5));  // slack
  CHECK(is_redundant(p, make_ineq({{v1, 1}, {v2, 1}}, 5)));
  auto r = remove_redundant(p);
  CHECK(r.inequalities().size() == 4);
  CHECK(poly_equal(r, p));
  for (const auto& q : r.inequalities()) {
    Polyhedron rest(r.variables());
    for (const auto& o : r.inequalities())
      if (!(o == q)) rest.add(o);
    CHECK_FALSE(is_redundant(rest, q));  // every surviving row is a facet
  }
}

TEST_CASE("elimination matches vertex projection on a pyramid") {
  auto x = VarId::message_rate(1), y = VarId::message_rate(2), z = VarId::message_rate(3);
  Polyhedron p({x, y, z});
  p.add_nonnegativity();
  p.add(make_ineq({{x, 1}, {z, 1}}, 2));
  p.add(make_ineq({{y, 1}, {z, 1}}, 2));
  p.add(make_ineq({{z, 1}}, 1));
  auto a = fme_eliminate(p, {z});
  auto b = project_by_vertices(p, {x, y});
  CHECK(poly_equal(a, b));
  CHECK(contains_point(a, {{x, Rational(2)}, {y, Rational(2)}}));
  CHECK_FALSE(contains_point(a, {{x, Rational(2)}, {y, Rational(5, 2)}}));
}

TEST_CASE("elimination row cap raises a limit error") {
  std::vector<VarId> vars;
  for (int j = 1; j <= 6; ++j) vars.push_back(VarId::message_rate(j));
  Polyhedron p(vars);
  p.add_nonnegativity();
  std::mt19937 rng(7);
  for (int r = 0; r < 20; ++r) {
    LinearInequality q;
    for (const auto& v : vars) q.coeffs[v] = static_cast<int>(rng() % 5) - 2;
    q.rhs = 1 + static_cast<int>(rng() % 4);
    p.add(std::move(q));
  }
  FmeOptions tight;
  tight.max_rows = 8;
  CHECK_THROWS_AS(fme_eliminate(p, {vars[3], vars[4], vars[5]}, tight), LimitError);
}

TEST_CASE("vertex enumeration on cube, simplex, segment") {
  auto x = VarId::message_rate(1), y = VarId::message_rate(2), z = VarId::message_rate(3);
  Polyhedron cube({x, y, z});
  cube.add_nonnegativity();
  for (auto v : {x, y, z}) cube.add(make_ineq({{v, 1}}, 1));
  CHECK(vertices(cube).size() == 8);

  Polyhedron simplex({x, y, z});
  simplex.add_nonnegativity();
  simplex.add(make_ineq({{x, 1}, {y, 1}, {z, 1}}, 1));
  CHECK(vertices(simplex).size() == 4);

  Polyhedron seg({x, y});
  seg.add_nonnegativity();
  seg.add_equality({{x, 1}, {y, 1}}, 1);  // degenerate: a 1-d face of the plane
  auto vs = vertices(seg);
  CHECK(vs.size() == 2);

  Polyhedron ray({x});
  ray.add_nonnegativity();
  CHECK_THROWS_AS(vertices(ray), UnboundedError);

  Polyhedron empty({x});
  empty.add(make_ineq({{x, 1}}, -1));
  empty.add(make_ineq({{x, -1}}, 0));
  CHECK(vertices(empty).empty());
}

TEST_CASE("hulls of point sets and of unions") {
  auto x = VarId::message_rate(1), y = VarId::message_rate(2);
  auto h = hull_from_points({x, y}, {{Rational(0), Rational(0)},
                                     {Rational(2), Rational(0)},
                                     {Rational(0), Rational(2)},
                                     {Rational(1), Rational(1)}});  // interior of the edge
  auto expect = rates_region(2, {{1, 1, 2}});
  CHECK(h == expect);

  Polyhedron a = rates_region(2, {{1, 0, 2}, {0, 1, 1}});
  Polyhedron b = rates_region(2, {{1, 0, 1}, {0, 1, 2}});
  RegionUnion u;
  u.members = {a, b};
  auto hu = hull_of_union(u);
  CHECK(poly_equal(hu, rates_region(2, {{1, 0, 2}, {0, 1, 2}, {1, 1, 3}})));
  CHECK(poly_subset(a, hu));
  CHECK(poly_subset(b, hu));
}

TEST_CASE("lifted-union hull agrees with project-then-hull") {
  std::mt19937 rng(424242);
  auto x = VarId::message_rate(1), y = VarId::message_rate(2);
  auto z = VarId::message_rate(3);
  for (int t = 0; t < 10; ++t) {
    RegionUnion lifted, projected;
    for (int k = 0; k < 3; ++k) {
      Polyhedron p({x, y, z});
      p.add_nonnegativity();
      for (auto v : {x, y, z})
        p.add(make_ineq({{v, 1}}, Rational(1 + static_cast<int>(rng() % 3))));
      LinearInequality q;
      for (auto v : {x, y, z}) {
        int c = static_cast<int>(rng() % 4);
        if (c) q.coeffs[v] = c;
      }
      q.rhs = 1 + static_cast<int>(rng() % 5);
      p.add(std::move(q));
      lifted.members.push_back(p);
      projected.members.push_back(project_by_vertices(p, {x, y}));
    }
    auto a = hull_of_lifted_union({x, y}, lifted.members);
    auto b = hull_of_union(projected);
    CHECK(poly_equal(a.hull, b));
  }
}

// --- region and comparison operations -----------------------------------------

TEST_CASE("subset, equality and separation") {
  auto inner = rates_region(2, {{1, 1, 1}});
  auto outer = rates_region(2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(poly_subset(inner, outer));
  CHECK_FALSE(poly_subset(outer, inner));
  CHECK(poly_equal(outer, remove_redundant(outer)));
  auto w = separating_point(outer, inner);
  REQUIRE(w.has_value());
  CHECK(contains_point(outer, *w));
  CHECK_FALSE(contains_point(inner, *w));
  CHECK_FALSE(separating_point(inner, outer).has_value());
}

TEST_CASE("certification verdicts") {
  auto inner = rates_region(2, {{1, 1, 1}});
  auto outer = rates_region(2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(certify(outer, outer).verdict == Verdict::TIGHT);
  auto c = certify(inner, outer);
  CHECK(c.verdict == Verdict::GAP);
  REQUIRE(c.witness.has_value());
  CHECK_FALSE(contains_point(inner, *c.witness));
  CHECK_THROWS(certify(outer, inner));  // "inner" exceeds the bound
}

TEST_CASE("lifted-system equality certificates") {
  auto x = VarId::message_rate(1), y = VarId::message_rate(2);
  auto aux = VarId::message_rate(3);
  Polyhedron lifted({x, y, aux});
  lifted.add_nonnegativity();
  lifted.add(make_ineq({{x, 1}, {aux, -1}}, 0));
  lifted.add(make_ineq({{y, 1}, {aux, -1}}, 0));
  lifted.add(make_ineq({{aux, 1}}, 1));
  auto target = rates_region(2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(verify_region_equals(lifted, target).ok);
  auto too_big = rates_region(2, {{1, 0, 2}, {0, 1, 1}});
  auto cert = verify_region_equals(lifted, too_big);
  CHECK_FALSE(cert.ok);
  bool some_vertex_unreachable = false;
  for (const auto& vc : cert.vertices) some_vertex_unreachable |= !vc.feasible;
  CHECK(some_vertex_unreachable);
}

// --- serialization -------------------------------------------------------------

TEST_CASE("region serialization is a canonical fixed point") {
  auto p = rates_region(3, {{2, 1, 0, 3}, {0, 1, 1, 2}});
  auto s1 = region_to_json(p);
  auto q = region_from_json(s1);
  CHECK(q == p);
  CHECK(region_to_json(q) == s1);
  CHECK_THROWS_AS(region_from_json("{"), ParseError);
  CHECK_THROWS_AS(region_from_json(R"({"variables":["R1"]})"), ParseError);
}

TEST_CASE("instance parsing, validation and round trip") {
  auto inst = two_sender_square();
  CHECK(inst.num_messages == 4);
  CHECK(inst.senders.size() == 2);
  CHECK(inst.senders[0].messages == m({1, 2, 3}));
  CHECK(inst.side_info[0] == m({4}));
  auto round = parse_instance(serialize_instance(inst));
  CHECK(round.senders[1].messages == inst.senders[1].messages);
  CHECK(round.side_info == inst.side_info);

  CHECK_THROWS_WITH(parse_instance(R"({"num_messages": 0, "senders": [], "side_info": {}})"),
                    Catch::Matchers::ContainsSubstring("num_messages"));
  CHECK_THROWS_WITH(
      parse_instance(
          R"({"num_messages": 2,
              "senders": [{"messages": [1], "capacity": "1"}],
              "side_info": {"1": [], "2": []}})"),
      Catch::Matchers::ContainsSubstring("uncovered"));
  CHECK_THROWS_WITH(
      parse_instance(
          R"({"num_messages": 2,
              "senders": [{"messages": [1, 2], "capacity": "-1"}],
              "side_info": {"1": [], "2": []}})"),
      Catch::Matchers::ContainsSubstring("capacity"));
  CHECK_THROWS_WITH(
      parse_instance(
          R"({"num_messages": 2,
              "senders": [{"messages": [1, 2], "capacity": "1"}],
              "side_info": {"1": [1], "2": []}})"),
      Catch::Matchers::ContainsSubstring("side info"));
}

TEST_CASE("plan and decoding files") {
  auto plan = plan_from_json(R"({"mode": "sender-partition", "groups": [[1], [2]]})", 2);
  CHECK(plan.mode == PlanMode::SenderPartition);
  CHECK(plan.groups.size() == 2);
  CHECK_FALSE(plan.symbolic());
  CHECK_THROWS(plan_from_json(R"({"mode": "sender-partition", "groups": [[1]]})", 2));
  CHECK_THROWS(plan_from_json(R"({"mode": "all-in-one", "groups": [[1]]})", 2));
  CHECK_THROWS(make_plan(PlanMode::LinkSenderPartition, {{1, 2}, {1, 2}}, 2));

  auto inst = two_sender_square();
  auto tuples = decoding_from_json(
      R"([{"1": {"1": [1], "2": [2, 4], "3": [3, 4], "4": [1, 4]}}])", inst);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0].at(1).at(2) == m({2, 4}));
  // message indices outside [1, N] are rejected
  CHECK_THROWS_AS(decoding_from_json(
      R"({"1": {"1": [1, 5], "2": [2, 4], "3": [3, 4], "4": [1, 4]}})", inst),
      ParseError);
  // decoding a message already held as side information is rejected later
  DecodingChoice bad{{1, m({1, 4})}, {2, m({2, 4})}, {3, m({3, 4})}, {4, m({1, 4})}};
  CHECK_THROWS(validate_choice(inst, all_in_one_plan(2).groups[0], bad));
}

// --- instance structure and the outer bound ------------------------------------

TEST_CASE("cycle detection in the side-information digraph") {
  auto inst = two_sender_square();
  auto arcs = derive_digraph(inst);
  CHECK(is_acyclic(arcs, m({1})));
  CHECK_FALSE(is_acyclic(arcs, m({2, 3})));  // 2 and 3 know each other
  CHECK(is_acyclic(arcs, m({1, 2})));
  auto acyc = enumerate_acyclic_sets(arcs);
  for (auto s : acyc) CHECK(is_acyclic(arcs, s));
  CHECK(std::find(acyc.begin(), acyc.end(), m({2, 3})) == acyc.end());
}

TEST_CASE("outer bound on tiny hand-solved instances") {
  // Two messages, mutual side information: each can be sent in one use.
  auto cyc = parse_instance(R"({
    "num_messages": 2,
    "senders": [{"messages": [1, 2], "capacity": "1"}],
    "side_info": {"1": [2], "2": [1]}})");
  CHECK(mais_region(cyc) == rates_region(2, {{1, 0, 1}, {0, 1, 1}}));
  // No side information: the messages share the link.
  auto nosi = parse_instance(R"({
    "num_messages": 2,
    "senders": [{"messages": [1, 2], "capacity": "1"}],
    "side_info": {"1": [], "2": []}})");
  CHECK(mais_region(nosi) == rates_region(2, {{1, 1, 1}}));
}

// --- composite-coding systems ---------------------------------------------------

TEST_CASE("decoding choices and constraint structure") {
  auto inst = two_sender_square();
  auto plan = all_in_one_plan(2);
  const auto& g = plan.groups[0];
  CHECK(group_messages(inst, g) == m({1, 2, 3, 4}));
  auto opts1 = receiver_choices(inst, g, 1);  // free beyond own message: {2,3}
  CHECK(opts1.size() == 4);
  for (auto mask : opts1) CHECK((mask & m({1})) != 0);
  auto en = enumerate_choices(inst, g);
  CHECK(en.complete);
  CHECK(en.choices.size() == 32);
  DecodingChoice bad{{1, m({1, 4})}, {2, m({2, 4})}, {3, m({3, 4})}, {4, m({1, 4})}};
  CHECK_THROWS(validate_choice(inst, g, bad));

  // cooperative composites: subsets available to at least one sender
  // (7 from {1,2,3} and 7 from {2,3,4}, sharing the 3 subsets of {2,3})
  CHECK(composite_vars(inst, g, Compression::Cooperative).size() == 11);
  CHECK(composite_vars(inst, g, Compression::NonCooperative).size() == 7 + 7);
  DecodingChoice c{{1, m({1})}, {2, m({2, 4})}, {3, m({3, 4})}, {4, m({1, 4})}};
  auto sys = group_system(inst, g, c, Compression::Cooperative, false);
  CHECK(lp_feasible(sys));
}

TEST_CASE("plan enumeration counts") {
  bool complete = false;
  CHECK(auto_plans(two_sender_square(), Scheme::DccA, 10000, &complete).size() == 1);
  CHECK(complete);
  CHECK(enumerate_sender_partitions(1).size() == 1);
  CHECK(enumerate_sender_partitions(2).size() == 2);
  CHECK(enumerate_sender_partitions(3).size() == 5);
  CHECK(enumerate_sender_partitions(4).size() == 15);
  auto ls = enumerate_link_sender_plans(2, "exhaustive");
  CHECK(ls.plans.size() == 5);  // covers of {1,2} by distinct nonempty subsets
  CHECK(ls.complete);
  auto def = enumerate_link_sender_plans(3, "default");
  CHECK(def.plans.size() >= enumerate_sender_partitions(3).size());
}

TEST_CASE("time-sharing hull over the two published choices") {
  auto inst = two_sender_square();
  auto plan = all_in_one_plan(2);
  DecodingChoice c1{{1, m({1})}, {2, m({2, 4})}, {3, m({3, 4})}, {4, m({1, 4})}};
  DecodingChoice c2{{1, m({1, 2, 3})}, {2, m({2, 4})}, {3, m({3, 4})}, {4, m({1, 4})}};
  auto two = scheme_region(inst, Scheme::Dcc, {plan},
                           {DecodingTuple{{1, c1}}, DecodingTuple{{1, c2}}});
  // Exhausting all 32 choices adds nothing beyond these two.
  auto all = scheme_region_auto(inst, Scheme::Dcc);
  CHECK(all.exhaustive);
  CHECK(all.hull == two.hull);
  CHECK(parse_scheme("dcc") == Scheme::Dcc);
  CHECK(scheme_name(Scheme::CccLs) == "ccc-ls");
  CHECK(scheme_compression(Scheme::Mdcc) == Compression::NonCooperative);
  CHECK_THROWS(parse_scheme("nope"));
}

TEST_CASE("symbolic capacity splits match fixed splits for a partition") {
  auto inst = two_sender_square();
  auto fixed = scheme_region(inst, Scheme::CccS,
                             {make_plan(PlanMode::SenderPartition, {{1}, {2}}, 2)});
  auto sym = scheme_region(inst, Scheme::CccLs,
                           {make_plan(PlanMode::LinkSenderPartition, {{1}, {2}}, 2)});
  CHECK(sym.exhaustive);
  CHECK(fixed.hull == sym.hull);
}

TEST_CASE("per-choice cooperative region contains the non-cooperative one") {
  auto inst = two_sender_square();
  auto plan = all_in_one_plan(2);
  const auto& g = plan.groups[0];
  DecodingChoice c{{1, m({1})}, {2, m({2, 4})}, {3, m({3, 4})}, {4, m({1, 4})}};
  CHECK(noncoop_within_coop(inst, g, c));
  auto nc = group_region(inst, g, c, Compression::NonCooperative, false);
  auto co = group_region(inst, g, c, Compression::Cooperative, false);
  CHECK(poly_subset(nc, co));
}

TEST_CASE("enumeration caps mark results as non-exhaustive") {
  auto inst = two_sender_square();
  SchemeOptions opts;
  opts.max_choices = 4;  // below the 32 admissible choices
  auto r = scheme_region_auto(inst, Scheme::CccA, opts);
  CHECK_FALSE(r.exhaustive);
  auto rep = make_report("t", r, mais_region(inst));
  CHECK((rep.verdict == Verdict::TIGHT || rep.verdict == Verdict::UNKNOWN));
}
