#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "tropmono/errors.hpp"
#include "tropmono/format.hpp"
#include "tropmono/geometry.hpp"
#include "tropmono/green.hpp"
#include "tropmono/ideals.hpp"
#include "tropmono/sampling.hpp"
#include "tropmono/structure.hpp"
#include "tropmono/verify.hpp"

namespace tropmono::cli {

  namespace {
    using nlohmann::json;

    template <typename T>
    json or_null(std::optional<T> const& x) {
      return x ? json(to_json(*x)) : json(nullptr);
    }

    json form_json(IdempotentForm const& f) {
      return {{"form", to_string(f.kind)},
              {"x", to_string(f.x)},
              {"y", to_string(f.y)}};
    }

    json classify(TropMatrix const& a) {
      auto const pc = proj_column_space(a), pr = proj_row_space(a);
      bool const idem = is_idempotent(a);
      json       j   = {{"matrix", to_json(a)},
                        {"pc", to_string(pc)},
                        {"pr", to_string(pr)},
                        {"rclass", to_string(r_class_of(a).kind())},
                        {"lclass", to_string(l_class_of(a).kind())},
                        {"iso_type", to_string(iso_type(pc))},
                        {"unit", is_monomial(a)},
                        {"idempotent", idem},
                        {"idempotent_form", nullptr},
                        {"regular_witness", to_json(regular_witness(a))},
                        {"principal_ideal", to_string(principal_ideal_of(a))}};
      if (idem) {
        j["idempotent_form"] = form_json(idempotent_form(a));
      }
      bool const group = idempotent_in_H(pc, pr).has_value();
      j["h_class_is_group"] = group;
      j["group_type"] = group ? json(to_string(group_type_of_H(pc, pr)))
                              : json(nullptr);
      return j;
    }

    json relate(GreenRelation rel, TropMatrix const& a, TropMatrix const& b) {
      bool const holds = related(rel, a, b);
      json       j     = {{"relation", to_string(rel)},
                          {"holds", holds},
                          {"witness", nullptr}};
      if (!holds) {
        return j;
      }
      switch (rel) {
        case GreenRelation::R:
        case GreenRelation::leq_R:
          j["witness"] = or_null(solve_right(b, a));
          break;
        case GreenRelation::L:
        case GreenRelation::leq_L:
          j["witness"] = or_null(solve_left(b, a));
          break;
        case GreenRelation::H:
          j["witness"] = {{"right", or_null(solve_right(b, a))},
                          {"left", or_null(solve_left(b, a))}};
          break;
        case GreenRelation::D:
        case GreenRelation::J:
          j["witness"] = to_json(d_class_witness(a, b));
          break;
        case GreenRelation::leq_J: {
          auto xy = j_witness(a, b);
          if (!xy) {
            throw VerificationFailure("relate: no witness for a J-below pair");
          }
          j["witness"] = {{"left", to_json(xy->first)},
                          {"right", to_json(xy->second)}};
          break;
        }
      }
      if (j["witness"].is_null()) {
        throw VerificationFailure("relate: no witness for a related pair");
      }
      return j;
    }

    json subgroup(ClosedConvexSet const&         m,
                  ClosedConvexSet const&         n,
                  std::optional<std::string> const& family,
                  std::optional<std::string> const& a) {
      auto const e = idempotent_in_H(m, n);
      json       j = {{"M", to_string(m)},
                      {"N", to_string(n)},
                      {"group_type", nullptr},
                      {"identity", or_null(e)}};
      if (!e) {
        if (family) {
          throw DomainError("subgroup: H-class contains no idempotent");
        }
        return j;
      }
      j["group_type"] = to_string(group_type_of_H(m, n));
      if (!family) {
        return j;
      }
      SubgroupFamily const f = parse_subgroup_family(*family);
      Rational const       t = a ? parse_rational(*a) : Rational(0);
      SubgroupParams       params;
      if (m.is_interval() && m.lo().is_finite()) {
        params.x = m.lo().value();
      }
      if (m.is_interval() && m.hi().is_finite()) {
        params.y = m.hi().value();
      }
      TropMatrix const g = subgroup_element(f, t, params);
      j["family"]        = to_string(f);
      j["a"]             = to_string(t);
      j["element"]       = to_json(g);
      j["in_h_class"]
          = proj_column_space(g) == m && proj_row_space(g) == n;
      return j;
    }

    char const* order_name(std::strong_ordering c) {
      if (c == std::strong_ordering::less) {
        return "less";
      }
      return c == std::strong_ordering::equal ? "equal" : "greater";
    }

    json ideal(std::string const& action, std::vector<std::string> const& args) {
      auto need = [&](std::size_t n) {
        if (args.size() != n) {
          throw DomainError("ideal " + action + ": expected "
                            + std::to_string(n) + " argument(s), got "
                            + std::to_string(args.size()));
        }
      };
      if (action == "contains") {
        need(2);
        auto const d = parse_descriptor(args[0]);
        auto const a = parse_matrix(args[1]);
        return {{"descriptor", to_string(d)},
                {"matrix", to_json(a)},
                {"contains", ideal_contains(d, a)}};
      } else if (action == "principal") {
        need(1);
        auto const a = parse_matrix(args[0]);
        return {{"matrix", to_json(a)},
                {"descriptor", to_string(principal_ideal_of(a))}};
      } else if (action == "compare") {
        need(2);
        auto const d1 = parse_descriptor(args[0]);
        auto const d2 = parse_descriptor(args[1]);
        return {{"first", to_string(d1)},
                {"second", to_string(d2)},
                {"order", order_name(ideal_compare(d1, d2))}};
      } else if (action == "generate") {
        if (args.empty()) {
          throw DomainError("ideal generate: expected at least one matrix");
        }
        std::vector<TropMatrix> gens;
        for (auto const& s : args) {
          gens.push_back(parse_matrix(s));
        }
        auto const d = ideal_from_generators(gens);
        return {{"descriptor", to_string(d)}, {"principal", is_principal(d)}};
      } else if (action == "decompose") {
        need(1);
        auto const d       = parse_descriptor(args[0]);
        auto const [p, jt] = decompose(d);
        return {{"descriptor", to_string(d)},
                {"principal", to_string(p)},
                {"removed_j_class",
                 jt ? json(to_string(*jt)) : json(nullptr)}};
      }
      throw DomainError("ideal: unknown action '" + action
                        + "', expected contains, principal, compare, "
                          "generate or decompose");
    }

    json error_json(std::string const& message) {
      return {{"error", message}};
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out) {
    CLI::App app{"Structure of the 2 x 2 max-plus matrix monoid", "tropmono"};
    app.require_subcommand(1);

    std::string              a_text, b_text, rel_text, action;
    std::string              m_text, n_text;
    std::optional<std::string> family, param;
    std::size_t              samples = 1000;
    std::uint64_t            seed    = 0;
    std::string              suite;

    auto* classify_cmd = app.add_subcommand("classify", "Describe one matrix");
    classify_cmd->add_option("A", a_text, "matrix")->required();

    auto* relate_cmd = app.add_subcommand("relate", "Decide a Green relation");
    relate_cmd->add_option("REL", rel_text, "R|L|H|D|J|leqR|leqL|leqJ")
        ->required();
    relate_cmd->add_option("A", a_text, "matrix")->required();
    relate_cmd->add_option("B", b_text, "matrix")->required();

    auto* witness_cmd
        = app.add_subcommand("witness", "Matrix with given PC and PR");
    witness_cmd->add_option("--M", m_text, "column space")->required();
    witness_cmd->add_option("--N", n_text, "row space")->required();

    auto* idem_cmd
        = app.add_subcommand("idempotent", "Idempotent of an H-class");
    idem_cmd->add_option("--M", m_text, "column space")->required();
    idem_cmd->add_option("--N", n_text, "row space")->required();

    auto* regular_cmd
        = app.add_subcommand("regular", "Y with A Y A = A");
    regular_cmd->add_option("A", a_text, "matrix")->required();

    auto* subgroup_cmd
        = app.add_subcommand("subgroup", "Maximal subgroup of an H-class");
    subgroup_cmd->add_option("--M", m_text, "column space")->required();
    subgroup_cmd->add_option("--N", n_text, "row space")->required();
    auto* family_opt
        = subgroup_cmd->add_option("--family", family, "W|X|Y|Z");
    subgroup_cmd->add_option("--a", param, "group parameter")
        ->needs(family_opt);

    auto* ideal_cmd = app.add_subcommand("ideal", "Two-sided ideals");
    ideal_cmd
        ->add_option(
            "ACTION", action, "contains|principal|compare|generate|decompose")
        ->required();
    // Descriptors and matrices follow ACTION. They are collected as extras
    // because CLI11 would split a bracketed JSON argument on commas.
    ideal_cmd->allow_extras();

    auto* verify_cmd
        = app.add_subcommand("verify", "Run a seeded property suite");
    verify_cmd->add_option("--samples", samples, "number of cases")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      out << error_json(e.what()).dump() << '\n';
      return 1;
    }

    try {
      json result;
      int  code = 0;
      if (*classify_cmd) {
        result = classify(parse_matrix(a_text));
      } else if (*relate_cmd) {
        result = relate(parse_relation(rel_text),
                        parse_matrix(a_text),
                        parse_matrix(b_text));
      } else if (*witness_cmd) {
        auto const m = parse_set(m_text), n = parse_set(n_text);
        TropMatrix const z = witness_Z(m, n);
        result = {{"M", to_string(m)},
                  {"N", to_string(n)},
                  {"witness", to_json(z)},
                  {"pc", to_string(proj_column_space(z))},
                  {"pr", to_string(proj_row_space(z))}};
      } else if (*idem_cmd) {
        auto const m = parse_set(m_text), n = parse_set(n_text);
        auto const e = idempotent_in_H(m, n);
        result       = {{"M", to_string(m)},
                        {"N", to_string(n)},
                        {"exists", e.has_value()},
                        {"idempotent", or_null(e)},
                        {"form", e ? form_json(idempotent_form(*e)) : json(nullptr)}};
      } else if (*regular_cmd) {
        auto const       a = parse_matrix(a_text);
        TropMatrix const y = regular_witness(a);
        result             = {{"matrix", to_json(a)},
                              {"witness", to_json(y)},
                              {"verified", mat_mul(mat_mul(a, y), a) == a}};
      } else if (*subgroup_cmd) {
        result = subgroup(parse_set(m_text), parse_set(n_text), family, param);
      } else if (*ideal_cmd) {
        std::vector<std::string> rest = ideal_cmd->remaining();
        for (auto const& r : rest) {
          if (r.starts_with("-")) {
            throw DomainError("ideal: unknown option " + r);
          }
        }
        result = ideal(action, rest);
      } else {
        SuiteResult const r = run_suite(suite, samples, seed);
        result              = {{"suite", r.suite},
                               {"samples", samples},
                               {"seed", seed},
                               {"rng", rng_name},
                               {"passed", r.passed},
                               {"failed", r.failed},
                               {"failures", r.failures}};
        code                = r.failed == 0 ? 0 : 2;
      }
      out << result.dump() << '\n';
      return code;
    } catch (VerificationFailure const& e) {
      out << error_json(std::string("self-check failed: ") + e.what()).dump()
          << '\n';
      return 2;
    } catch (std::invalid_argument const& e) {
      out << error_json(e.what()).dump() << '\n';
      return 1;
    }
  }

}  // namespace tropmono::cli
