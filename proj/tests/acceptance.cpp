// Acceptance suite: one line per criterion, exact checks throughout.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "unitforge/catalog.hpp"
#include "unitforge/dihedral2p.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/rank.hpp"
#include "unitforge/ring_checks.hpp"
#include "unitforge/snf.hpp"
#include "unitforge/units.hpp"

using namespace unitforge;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, double seconds,
            const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << what << " ("
              << static_cast<long>(seconds * 1000) << " ms)";
    if (!detail.empty()) std::cout << "\n       " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

template <typename F>
void criterion(int index, const std::string& what, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(index, what, ok, secs, detail);
}

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("UNITFORGE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1729;
}

}  // namespace

int main() {
    const std::uint64_t seed = seed_from_env();
    std::vector<std::string> sweep = sweep_group_names(16);

    criterion(1, "bicyclic commutator identity over all pairs in catalog groups of order <= 16",
              [&](std::string& detail) {
                  long checked = 0;
                  for (const std::string& name : sweep) {
                      FiniteGroup g = builtin_group(name);
                      SweepReport rep = sweep_prop31(g);
                      checked += rep.checked;
                      if (!rep.all_ok()) {
                          detail = name + ": " + rep.failures.front().params;
                          return false;
                      }
                  }
                  detail = std::to_string(checked) + " ordered pairs";
                  return true;
              });

    criterion(2, "unit rules (1)-(8) for every admissible parameter tuple",
              [&](std::string& detail) {
                  long checked = 0;
                  for (const std::string& name : sweep) {
                      FiniteGroup g = builtin_group(name);
                      for (int rule = 1; rule <= 8; ++rule) {
                          SweepReport rep = sweep_bass_rule(g, rule);
                          checked += rep.checked;
                          if (!rep.all_ok()) {
                              detail = name + ": " + rep.failures.front().params;
                              return false;
                          }
                      }
                  }
                  detail = std::to_string(checked) + " parameter tuples";
                  return true;
              });

    criterion(3, "Bass commutator and conjugation identities for every (g, h, l) with g^h = g^l",
              [&](std::string& detail) {
                  long checked = 0;
                  for (const std::string& name : sweep) {
                      FiniteGroup g = builtin_group(name);
                      SweepReport a = sweep_lemma33(g);
                      SweepReport b = sweep_lemma34(g);
                      checked += a.checked + b.checked;
                      if (!a.all_ok() || !b.all_ok()) {
                          detail = name;
                          return false;
                      }
                  }
                  detail = std::to_string(checked) + " identities";
                  return true;
              });

    criterion(4, "central rank: cut groups, the dihedral series and C5",
              [&](std::string& detail) {
                  const std::vector<std::pair<std::string, int>> expected = {
                      {"A4", 0},  {"D12", 0}, {"T", 0},   {"D16+", 0}, {"C5", 1},
                      {"D10", 1}, {"D14", 2}, {"D22", 4}, {"D26", 5}};
                  for (const auto& [name, rank] : expected) {
                      RankReport r = rank_center(builtin_group(name));
                      if (r.rank_center != rank || r.is_cut != (rank == 0)) {
                          detail = name + ": rank " + std::to_string(r.rank_center) +
                                   ", expected " + std::to_string(rank);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "catalog abelianizations match the recorded values",
              [&](std::string& detail) {
                  bool ok = true;
                  std::ostringstream os;
                  for (const auto& e : unit_presentation_catalog()) {
                      AbelianGroupType got = abelianization(e.presentation());
                      if (got == e.expected) continue;
                      ok = false;
                      os << e.id << ": computed " << got.to_string() << ", recorded "
                         << e.expected.to_string()
                         << " (the tabulated relator set is provably one independent "
                            "mod-2 relation short of the recorded group; see the "
                            "catalog entry notes)";
                  }
                  detail = os.str();
                  return ok;
              });

    criterion(6, "(E1) torsion exponent of each computed V/V' equals exp(G/G')",
              [&](std::string& detail) {
                  const std::vector<std::pair<std::string, int>> expected_exponent = {
                      {"V(ZS3)", 2}, {"V(ZD8)", 2}, {"V(ZT)", 4}, {"V(ZP)", 4},
                      {"V(ZD16+)", 4}};
                  for (const auto& [id, exp_val] : expected_exponent) {
                      const UnitPresentationEntry& e = unit_presentation(id);
                      AbelianGroupType got = abelianization(e.presentation());
                      FiniteGroup g = builtin_group(e.group_name);
                      ExponentComparison cmp = exponent_compare(g, got);
                      if (!cmp.e1 || got.torsion_exponent() != exp_val) {
                          detail = id;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "ring-level relations for V(ZS3) and V(ZD8); corrected generator of V(ZP)",
              [&](std::string& detail) {
                  SweepReport s3 = verify_ring_presentation(unit_presentation("V(ZS3)"));
                  SweepReport d8 = verify_ring_presentation(unit_presentation("V(ZD8)"));
                  if (!s3.all_ok() || !d8.all_ok() || s3.checked + d8.checked != 12) {
                      detail = "ring relation failure";
                      return false;
                  }
                  FiniteGroup p = builtin_group("P");
                  GroupRingElement v9 = p_ninth_generator(p);
                  if (!is_unit(v9)) {
                      detail = "ninth generator is not a unit";
                      return false;
                  }
                  GroupRingElement inv = inverse(v9);
                  if (!(v9 * inv).is_one() || !(inv * v9).is_one()) {
                      detail = "inverse verification failed";
                      return false;
                  }
                  detail = "12 ring identities; two-sided inverse verified";
                  return true;
              });

    criterion(8, "weight homomorphism onto C-infinity for V(ZD16+): V/V' is infinite",
              [&](std::string& detail) {
                  const UnitPresentationEntry& e = unit_presentation("V(ZD16+)");
                  KappaReport k = kappa_verify(e.presentation(), e.kappa_weights);
                  if (!k.is_homomorphism) {
                      detail = "not a homomorphism";
                      return false;
                  }
                  if (!k.nontrivial_image) {
                      detail = "trivial image";
                      return false;
                  }
                  AbelianGroupType got = abelianization(e.presentation());
                  if (got.free_rank < 1) {
                      detail = "free rank 0";
                      return false;
                  }
                  return true;
              });

    criterion(9, "dihedral matrix model for p in {3, 5, 7}: witnesses, decompositions, residue group",
              [&](std::string& detail) {
                  std::ostringstream os;
                  for (int p : {3, 5, 7}) {
                      auto t0 = std::chrono::steady_clock::now();
                      DihedralTrialReport r = run_dihedral_trials(p, 100, seed);
                      double secs =
                          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count();
                      if (!r.all_ok()) {
                          detail = "p = " + std::to_string(p);
                          return false;
                      }
                      os << "p=" << p << " " << static_cast<long>(secs * 1000) << "ms ";
                  }
                  detail = os.str() + "(100 trials each, seed " + std::to_string(seed) + ")";
                  return true;
              });

    criterion(10, "property suites: ring axioms, SNF certificates, Tietze moves, L-sets, telescoping",
              [&](std::string& detail) {
                  std::mt19937_64 rng(seed);

                  // Ring axioms on random sparse elements.
                  for (const std::string& name : {"S3", "D8", "A4"}) {
                      FiniteGroup g = builtin_group(name);
                      std::uniform_int_distribution<int> idx(0, g.order() - 1);
                      std::uniform_int_distribution<int> coeff(-4, 4);
                      auto rand_elem = [&]() {
                          std::map<int, Int> c;
                          for (int t = 0; t < 5; ++t) c[idx(rng)] = coeff(rng);
                          return GroupRingElement::from_coeffs(g, std::move(c));
                      };
                      for (int trial = 0; trial < 25; ++trial) {
                          GroupRingElement x = rand_elem(), y = rand_elem(), z = rand_elem();
                          if ((x * y) * z != x * (y * z) || x * (y + z) != x * y + x * z) {
                              detail = "ring axioms";
                              return false;
                          }
                          if (augment(x * y) != augment(x) * augment(y)) {
                              detail = "augmentation homomorphism";
                              return false;
                          }
                      }
                  }

                  // SNF with verified certificates on random matrices.
                  std::uniform_int_distribution<int> dim(1, 7), entry(-9, 9);
                  for (int trial = 0; trial < 40; ++trial) {
                      IntMatrix m(dim(rng), dim(rng));
                      for (auto& row : m.a)
                          for (Int& x : row) x = entry(rng);
                      smith_normal_form(m);  // throws if any certificate fails
                  }

                  // Tietze-style moves preserve the abelianization.
                  Presentation p = unit_presentation("V(ZT)").presentation();
                  AbelianGroupType expected = abelianization(p);
                  std::uniform_int_distribution<size_t> pick(0, p.relators.size() - 1);
                  for (int step = 0; step < 30; ++step) {
                      size_t i = pick(rng), j = pick(rng);
                      if (i != j) p.relators[i] = word_concat(p.relators[i], p.relators[j]);
                      std::swap(p.relators[i], p.relators[j]);
                      if (abelianization(p) != expected) {
                          detail = "Tietze move changed the abelianization";
                          return false;
                      }
                  }

                  // L-set subgroup property and the telescoping identity.
                  for (const std::string& name : sweep) {
                      FiniteGroup g = builtin_group(name);
                      long sum = 0;
                      for (const auto& block : g.rational_classes().blocks)
                          sum += real_in_rational_count(g, block.front()) - 1;
                      RankReport r = rank_center(g);
                      if (sum != r.n_real - r.n_rational) {
                          detail = name + ": telescoping identity";
                          return false;
                      }
                      for (int x = 0; x < g.order(); ++x) {
                          l_set(g, x);  // throws if not a subgroup of units mod n
                          if (real_in_rational_count(g, x) !=
                              real_in_rational_count_direct(g, x)) {
                              detail = name + ": real-in-rational count";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
