#include "tropmono/verify.hpp"

#include <array>
#include <functional>
#include <map>

#include "tropmono/errors.hpp"
#include "tropmono/format.hpp"
#include "tropmono/geometry.hpp"
#include "tropmono/green.hpp"
#include "tropmono/ideals.hpp"
#include "tropmono/sampling.hpp"
#include "tropmono/structure.hpp"

namespace tropmono {

  namespace {
    constexpr std::size_t MAX_REPORTED = 5;

    class Tally {
     public:
      explicit Tally(std::string suite) {
        _result.suite = std::move(suite);
      }

      // Runs one case; any exception counts as a failure.
      void check(std::function<bool()> const& property,
                 std::function<std::string()> const& describe) {
        bool ok = false;
        std::string error;
        try {
          ok = property();
        } catch (std::exception const& e) {
          error = std::string(" (") + e.what() + ")";
        }
        if (ok) {
          ++_result.passed;
          return;
        }
        ++_result.failed;
        if (_result.failures.size() < MAX_REPORTED) {
          _result.failures.push_back(describe() + error);
        }
      }

      SuiteResult result() && {
        return std::move(_result);
      }

     private:
      SuiteResult _result;
    };

    std::string pair_text(TropMatrix const& a, TropMatrix const& b) {
      return to_json_string(a) + " " + to_json_string(b);
    }

    SuiteResult duality(std::size_t samples, Rng& rng) {
      Tally tally("duality");
      for (std::size_t s = 0; s < samples; ++s) {
        TropMatrix const a = sample_matrix(rng, Profile::mixed);
        tally.check(
            [&] { return isometric(proj_column_space(a), proj_row_space(a)); },
            [&] { return to_json_string(a); });
      }
      return std::move(tally).result();
    }

    SuiteResult d_equals_j(std::size_t samples, Rng& rng) {
      Tally tally("d-equals-j");
      for (std::size_t s = 0; s < samples; ++s) {
        TropMatrix const a = sample_matrix(rng, Profile::mixed);
        // Half the pairs are forced into one D-class via two-sided units.
        TropMatrix const b
            = s % 2 == 0
                  ? mat_mul(mat_mul(sample_unit(rng), a), sample_unit(rng))
                  : sample_matrix(rng, Profile::mixed);
        tally.check(
            [&] {
              bool const d = related(GreenRelation::D, a, b);
              if (d != related(GreenRelation::J, a, b)) {
                return false;
              }
              if (s % 2 == 0 && !d) {
                return false;
              }
              if (d) {
                TropMatrix const z = d_class_witness(a, b);
                if (proj_column_space(z) != proj_column_space(b)
                    || proj_row_space(z) != proj_row_space(a)) {
                  return false;
                }
              }
              if (leq_J(a, b)) {
                auto xy = j_witness(a, b);
                return xy && mat_mul(mat_mul(xy->first, b), xy->second) == a;
              }
              return true;
            },
            [&] { return pair_text(a, b); });
      }
      return std::move(tally).result();
    }

    SuiteResult regularity(std::size_t samples, Rng& rng) {
      Tally tally("regularity");
      for (std::size_t s = 0; s < samples; ++s) {
        TropMatrix const a = sample_matrix(rng, Profile::mixed);
        tally.check(
            [&] {
              TropMatrix const y = regular_witness(a);
              return mat_mul(mat_mul(a, y), a) == a;
            },
            [&] { return to_json_string(a); });
      }
      return std::move(tally).result();
    }

    SuiteResult idempotent_grid() {
      Tally                           tally("idempotent-grid");
      std::array<TropScalar, 6> const grid
          = {TropScalar::bottom(), -2L, -1L, 0L, 1L, 2L};
      for (auto const& a : grid) {
        for (auto const& b : grid) {
          for (auto const& c : grid) {
            for (auto const& d : grid) {
              TropMatrix const m{{a, b}, {c, d}};
              tally.check(
                  [&] {
                    return is_idempotent(m)
                           == match_idempotent_family(m).has_value();
                  },
                  [&] { return to_json_string(m); });
            }
          }
        }
      }
      return std::move(tally).result();
    }

    SuiteResult group_laws(std::size_t samples, Rng& rng) {
      Tally tally("group-laws");
      for (std::size_t s = 0; s < samples; ++s) {
        Rational const a = sample_rational(rng), b = sample_rational(rng);
        Rational const x = sample_rational(rng);
        Rational const y = x + 1 + abs(sample_rational(rng));
        tally.check(
            [&] {
              using F = SubgroupFamily;
              SubgroupParams const p{x, y};
              auto elt = [&](F f, Rational const& t) {
                return subgroup_element(f, t, p);
              };
              Rational const ab = a + b;
              return mat_mul(elt(F::W, a), elt(F::W, b)) == elt(F::W, ab)
                     && mat_mul(elt(F::X, a), elt(F::X, b)) == elt(F::X, ab)
                     && mat_mul(elt(F::X, a), elt(F::Y, b)) == elt(F::Y, ab)
                     && mat_mul(elt(F::Y, b), elt(F::X, a)) == elt(F::Y, ab)
                     && mat_mul(elt(F::Y, a), elt(F::Y, b))
                            == elt(F::X, Rational(ab + y - x))
                     && mat_mul(elt(F::Z, a), elt(F::Z, b)) == elt(F::Z, ab)
                     && mat_mul(elt(F::Y, Rational((x - y) / 2)),
                                elt(F::Y, Rational((x - y) / 2)))
                            == elt(F::X, Rational(0));
            },
            [&] {
              return "a=" + to_string(a) + " b=" + to_string(b) + " x="
                     + to_string(x) + " y=" + to_string(y);
            });
      }
      return std::move(tally).result();
    }

    SuiteResult oracle_agreement(std::size_t samples, Rng& rng) {
      Tally tally("oracle-agreement");
      for (std::size_t s = 0; s < samples; ++s) {
        TropMatrix const b = sample_matrix(rng, Profile::with_neginf);
        TropMatrix const x = sample_matrix(rng, Profile::with_neginf);
        TropMatrix const a = s % 3 == 0   ? mat_mul(b, x)
                             : s % 3 == 1 ? mat_mul(x, b)
                                          : sample_matrix(rng, Profile::with_neginf);
        tally.check(
            [&] {
              return leq_R(a, b) == solves_right(b, a)
                     && leq_L(a, b) == solves_right(transpose(b), transpose(a));
            },
            [&] { return pair_text(a, b); });
      }
      return std::move(tally).result();
    }

    std::vector<TropMatrix> ideal_probes() {
      std::vector<IsoType> types
          = {IsoType::empty(), IsoType::singleton(), IsoType::half_infinite(),
             IsoType::full_line()};
      for (long k = 1; k <= 16; ++k) {
        types.push_back(IsoType::finite_interval(Rational(k, 4)));
      }
      std::vector<TropMatrix> probes;
      for (auto const& t : types) {
        auto const set = representative(t);
        probes.push_back(witness_Z(set, set));
      }
      return probes;
    }

    SuiteResult ideal_order(std::size_t samples, Rng& rng) {
      Tally      tally("ideal-order");
      auto const probes = ideal_probes();
      for (std::size_t s = 0; s < samples; ++s) {
        IdealDescriptor const d1 = sample_descriptor(rng);
        IdealDescriptor const d2 = sample_descriptor(rng);
        tally.check(
            [&] {
              auto const c = ideal_compare(d1, d2);
              if (ideal_compare(d2, d1) != (0 <=> c)) {
                return false;
              }
              bool strict_witness = false;
              for (auto const& p : probes) {
                bool const in1 = ideal_contains(d1, p), in2 = ideal_contains(d2, p);
                if (c == std::strong_ordering::equal && in1 != in2) {
                  return false;
                }
                if (c == std::strong_ordering::less && in1 && !in2) {
                  return false;
                }
                if (c == std::strong_ordering::greater && in2 && !in1) {
                  return false;
                }
                strict_witness = strict_witness || in1 != in2;
              }
              return c == std::strong_ordering::equal || strict_witness;
            },
            [&] { return to_string(d1) + " " + to_string(d2); });
      }
      return std::move(tally).result();
    }
  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {"duality",
                                                   "d-equals-j",
                                                   "regularity",
                                                   "idempotent-grid",
                                                   "group-laws",
                                                   "oracle-agreement",
                                                   "ideal-order"};
    return names;
  }

  SuiteResult run_suite(std::string_view name,
                        std::size_t      samples,
                        std::uint64_t    seed) {
    Rng rng(seed);
    if (name == "duality") {
      return duality(samples, rng);
    } else if (name == "d-equals-j") {
      return d_equals_j(samples, rng);
    } else if (name == "regularity") {
      return regularity(samples, rng);
    } else if (name == "idempotent-grid") {
      return idempotent_grid();
    } else if (name == "group-laws") {
      return group_laws(samples, rng);
    } else if (name == "oracle-agreement") {
      return oracle_agreement(samples, rng);
    } else if (name == "ideal-order") {
      return ideal_order(samples, rng);
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }

}  // namespace tropmono
