#include "curvelab/harness/suites.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

#include "curvelab/enumerate.hpp"
#include "curvelab/error.hpp"

namespace curvelab {
namespace {

std::string str(Int v) { return std::to_string(v); }

std::string list(const std::vector<Int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + str(xs[i]);
  return out + "}";
}

bool translates(const RelativeIdeal& a, const RelativeIdeal& b) { return is_translate(a, b).has_value(); }

Finding none(std::string details) { return Finding{{}, std::move(details)}; }

// ---------------------------------------------------------------- semigroups

void semigroup_structure(SemigroupContext& ctx, Checker& ck) {
  const NumericalSemigroup& s = ctx.semigroup();
  const Int f = s.frobenius();
  const Int bound = 2 * f + 2;

  std::vector<Int> members;
  for (Int z = 0; z <= bound; ++z)
    if (s.contains(z)) members.push_back(z);
  std::optional<std::pair<Int, Int>> open;
  for (std::size_t i = 0; i < members.size() && !open; ++i)
    for (std::size_t j = i; j < members.size(); ++j)
      if (!s.contains(members[i] + members[j])) {
        open = std::pair{members[i], members[j]};
        break;
      }
  ck.expect("additiveClosure", !open, [&] {
    return none(str(open->first) + " + " + str(open->second) + " is not a member");
  });

  const auto& gens = s.minimal_generators();
  std::optional<Int> ungenerated;
  for (Int z : members) {
    if (z == 0) continue;
    const bool reached = std::any_of(gens.begin(), gens.end(), [&](Int g) { return z >= g && s.contains(z - g); });
    if (!reached) {
      ungenerated = z;
      break;
    }
  }
  ck.expect("generatedByMinimalGenerators", !ungenerated,
            [&] { return none(str(*ungenerated) + " is not reached from a smaller member"); });

  bool xor_everywhere = true;
  for (Int z = -1; z <= f + 1; ++z) xor_everywhere &= s.contains(z) != s.contains(f - z);
  const InvariantRecord& inv = ctx.invariants();
  ck.expect("symmetryXor", inv.symmetric == xor_everywhere, [&] {
    return none("symmetric flag " + std::string(inv.symmetric ? "true" : "false") + " but xor test gives " +
                (xor_everywhere ? "true" : "false"));
  });

  const Int genus = inv.genus;
  const Int type = static_cast<Int>(inv.pseudo_frobenius.size());
  bool record_ok = inv.cm_type == type && inv.frobenius == f && inv.multiplicity == s.multiplicity() &&
                   inv.embedding_dimension == static_cast<Int>(gens.size()) &&
                   inv.embedding_dimension <= inv.multiplicity;
  record_ok &= inv.symmetric == (2 * genus == f + 1);
  record_ok &= inv.almost_symmetric == (2 * genus == f + type);
  record_ok &= !inv.symmetric || inv.almost_symmetric;
  record_ok &= inv.med == (inv.embedding_dimension == inv.multiplicity);
  if (!s.is_regular()) record_ok &= inv.symmetric == (type == 1);
  ck.expect("invariantRecord", record_ok, [&] {
    return none("genus " + str(genus) + ", frobenius " + str(f) + ", type " + str(type) + ", pf " +
                list(inv.pseudo_frobenius));
  });

  auto& apery = ck.tally("aperyShape");
  for (Int n : gens) {
    const std::vector<Int> ap = apery_set(s, n);
    std::set<Int> residues;
    bool ok = static_cast<Int>(ap.size()) == n && ap.back() == f + n;
    for (Int w : ap) {
      residues.insert(w % n);
      ok &= s.contains(w) && !s.contains(w - n);
    }
    ok &= static_cast<Int>(residues.size()) == n;
    ck.expect(apery, ok, [&] { return none("Ap(S," + str(n) + ") = " + list(ap)); });
  }
}

// Gap sets of every semigroup of genus g, by filtering subsets of {1..2g}.
std::set<std::vector<Int>> brute_force_gap_sets(Int g) {
  std::set<std::vector<Int>> out;
  if (g == 0) {
    out.insert(std::vector<Int>{});
    return out;
  }
  const Int width = 2 * g;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); mask += 2) {
    if (std::popcount(mask) != g) continue;
    auto gap = [&](Int z) { return z >= 1 && z <= width && ((mask >> (z - 1)) & 1u); };
    bool closed = true;
    for (Int a = 1; a <= width && closed; ++a) {
      if (gap(a)) continue;
      for (Int b = a; a + b <= width; ++b)
        if (!gap(b) && gap(a + b)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<Int> gaps;
    for (Int z = 1; z <= width; ++z)
      if (gap(z)) gaps.push_back(z);
    out.insert(gaps);
  }
  return out;
}

void semigroup_structure_genus(Int g, Checker& ck) {
  const auto expected = brute_force_gap_sets(g);
  const auto found = enumerate_by_genus(g);
  std::set<std::vector<Int>> got;
  for (const auto& s : found) got.insert(s.gaps());
  ck.expect("enumerationOracle", got == expected && found.size() == got.size(), [&] {
    return none("genus " + str(g) + ": enumerated " + str(static_cast<Int>(found.size())) +
                ", brute force " + str(static_cast<Int>(expected.size())));
  });
}

// --------------------------------------------------------------- ideal calc

// Above this many classes each slot of the colon adjunction triple is
// sampled by a fixed stride down to at most this many representatives.
constexpr std::size_t kAdjunctionSlot = 256;

void colon_adjunction(SemigroupContext& ctx, Checker& ck) {
  const auto& cl = ctx.classes();
  const std::size_t n = cl.size();
  const std::size_t stride = (n + kAdjunctionSlot - 1) / kAdjunctionSlot;
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < n; i += stride) picks.push_back(i);
  const std::size_t k = picks.size();

  // sums[a * k + b] = G_a + F_b over the sampled classes.
  std::vector<std::optional<RelativeIdeal>> sums(k * k);
  auto gf = [&](std::size_t a, std::size_t b) -> const RelativeIdeal& {
    auto& slot = sums[a * k + b];
    if (!slot) slot = sum(cl[picks[a]].ideal, cl[picks[b]].ideal);
    return *slot;
  };

  auto& t = ck.tally("adjunction");
  for (std::size_t e : picks)
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t f = picks[b];
      const RelativeIdeal d = difference(cl[e].ideal, cl[f].ideal);
      for (Int shift : {d.min() - 1, d.min()}) {
        // G + shift in D  <=>  G in D - shift, and likewise on the right.
        const RelativeIdeal d_back = d.translate(-shift);
        const RelativeIdeal e_back = cl[e].ideal.translate(-shift);
        for (std::size_t a = 0; a < k; ++a) {
          const std::size_t g = picks[a];
          const bool lhs = cl[g].ideal.is_subset_of(d_back);
          const bool rhs = gf(a, b).is_subset_of(e_back);
          ck.expect(t, lhs == rhs, [&] {
            return Finding{{cl[e].ideal, cl[f].ideal, cl[g].ideal.translate(shift)},
                           "G in E-F is " + std::string(lhs ? "true" : "false") + ", G+F in E is " +
                               (rhs ? "true" : "false")};
          });
        }
      }
    }
}

void biduality(SemigroupContext& ctx, Checker& ck) {
  auto& canonical = ck.tally("canonicalBiduality");
  auto& contained = ck.tally("ringBidualContainment");
  auto& equality = ck.tally("ringBidualEqualityIffReflexive");
  for (const auto& c : ctx.classes()) {
    const RelativeIdeal dd = canonical_dual(c.dual);
    ck.expect(canonical, translates(dd, c.ideal), [&] { return Finding{{c.ideal, dd}, "D(D(E)) is not a translate of E"}; });
    const RelativeIdeal bidual = ring_dual(c.ring_dual);
    const bool inside = c.ideal.is_subset_of(bidual);
    ck.expect(contained, inside, [&] { return Finding{{c.ideal, bidual}, "E not inside S-(S-E)"}; });
    ck.expect(equality, (bidual == c.ideal) == c.reflexive, [&] {
      return Finding{{c.ideal, bidual}, std::string("is_reflexive reports ") + (c.reflexive ? "true" : "false")};
    });
  }
}

void syzygy_exactness(SemigroupContext& ctx, Checker& ck) {
  auto& exact = ck.tally("degreewiseExactness");
  auto& reflexive = ck.tally("syzygyReflexive");
  auto& rejects = ck.tally("rejectsOtherGeneratorCounts");
  bool rejection_checked = false;
  for (const auto& c : ctx.classes()) {
    if (c.generators.size() != 2) {
      if (rejection_checked) continue;
      rejection_checked = true;
      bool threw = false;
      try {
        syzygy_two_generated(c.ideal);
      } catch (const Error& err) {
        threw = err.code() == Errc::NotTwoGenerated;
      }
      ck.expect(rejects, threw, [&] { return Finding{{c.ideal}, "no NotTwoGenerated error"}; });
      continue;
    }
    const SyzygyKernel k = syzygy_kernel(c.ideal);
    const auto bad = syzygy_exactness_failure(c.ideal, k);
    ck.expect(exact, !bad, [&] { return Finding{{c.ideal, k.kernel}, "rank count fails in degree " + str(*bad)}; });
    const RelativeIdeal omega = normalize(k.kernel).first;
    ck.expect(reflexive, is_reflexive(omega), [&] { return Finding{{c.ideal, omega}, "syzygy is not reflexive"}; });
  }
}

void trace_facts(SemigroupContext& ctx, Checker& ck) {
  auto& shift = ck.tally("translationInvariance");
  auto& inside = ck.tally("traceInsideRing");
  auto& whole = ck.tally("wholeRingIffPrincipal");
  auto& conductor = ck.tally("conductorInsideTrace");
  auto& generation = ck.tally("sumsetTraceInside");
  auto& b_inside = ck.tally("bInsideTrace");
  auto& b_equal = ck.tally("bEqualsTraceIffDual");
  auto& b_blowup = ck.tally("bIsTraceOfBlowup");
  const auto& cl = ctx.classes();
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const ClassData& c = cl[i];
    for (Int x : {-3, 2, 7}) {
      const RelativeIdeal moved = trace_ideal(c.ideal.translate(x));
      ck.expect(shift, moved == c.trace, [&] { return Finding{{c.ideal, moved}, "shift " + str(x)}; });
    }
    ck.expect(inside, c.trace.is_subset_of(ctx.unit()), [&] { return Finding{{c.ideal, c.trace}, "trace leaves S"}; });
    ck.expect(whole, (c.trace == ctx.unit()) == c.principal, [&] { return Finding{{c.ideal, c.trace}, ""}; });
    ck.expect(conductor, ctx.conductor().is_subset_of(c.trace),
              [&] { return Finding{{c.ideal, c.trace}, "conductor not inside trace"}; });
    const RelativeIdeal twice = sum(c.ideal, c.ideal.translate(5));
    for (const RelativeIdeal& f : {twice, sum(twice, c.ideal)}) {
      const RelativeIdeal tf = trace_ideal(f);
      ck.expect(generation, tf.is_subset_of(c.trace), [&] { return Finding{{c.ideal, f, tf}, "tr(F) not inside tr(E)"}; });
    }
    const RelativeIdeal& b = ctx.b_of(i);
    ck.expect(b_inside, b.is_subset_of(c.trace), [&] { return Finding{{c.ideal, b, c.trace}, "b(E) not inside tr(E)"}; });
    const bool equal = b == c.trace;
    const bool dual = translates(c.trace, c.ring_dual);
    ck.expect(b_equal, equal == dual, [&] {
      return Finding{{c.ideal, b, c.trace}, std::string("b = tr is ") + (equal ? "true" : "false") +
                                                 ", tr ~ S-E is " + (dual ? "true" : "false")};
    });
    const RelativeIdeal tb = trace_ideal(ctx.blowup_of(i));
    ck.expect(b_blowup, tb == b, [&] { return Finding{{c.ideal, b, tb}, "b(E) differs from tr(B(E))"}; });
  }
}

// ------------------------------------------------------------- annihilators

void conductor_stable_ann(SemigroupContext& ctx, Checker& ck) {
  const RelativeIdeal ann_n = stable_annihilator(ctx.normalization());
  ck.expect("normalizationClass", ann_n == ctx.conductor(),
            [&] { return Finding{{ann_n, ctx.conductor()}, "ann(N) differs from the conductor"}; });
  const RelativeIdeal colon = ring_dual(ctx.normalization());
  ck.expect("conductorIsColon", colon == ctx.conductor(), [&] { return Finding{{colon}, "S - N differs"}; });
  auto& overrings = ck.tally("blowupAnnihilatorIsB");
  const auto& cl = ctx.classes();
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const RelativeIdeal ann_b = stable_annihilator(ctx.blowup_of(i));
    ck.expect(overrings, ann_b == ctx.b_of(i),
              [&] { return Finding{{cl[i].ideal, ctx.blowup_of(i), ann_b}, "ann(B(E)) differs from b(E)"}; });
  }
}

void wang_lower_bound(SemigroupContext& ctx, Checker& ck) {
  auto& t = ck.tally("conductorAnnihilates");
  for (const auto& c : ctx.classes())
    ck.expect(t, ctx.conductor().is_subset_of(c.annihilator),
              [&] { return Finding{{c.ideal, c.annihilator}, "conductor not inside ann(E)"}; });
}

struct TwoGenerated {
  const ClassData* c;
  RelativeIdeal omega;
  RelativeIdeal omega_dual;
};

template <class Visit>
void for_each_two_generated(SemigroupContext& ctx, Visit&& visit) {
  for (const auto& c : ctx.classes()) {
    if (c.generators.size() != 2) continue;
    RelativeIdeal omega = syzygy_two_generated(c.ideal);
    RelativeIdeal dual = normalize(canonical_dual(omega)).first;
    visit(TwoGenerated{&c, std::move(omega), std::move(dual)});
  }
}

void lemma_chain(SemigroupContext& ctx, Checker& ck) {
  auto& lower = ck.tally("dualSyzygyInsideE");
  auto& upper = ck.tally("eInsideSyzygy");
  for_each_two_generated(ctx, [&](const TwoGenerated& x) {
    const RelativeIdeal a_dual = stable_annihilator(x.omega_dual);
    const RelativeIdeal a_omega = stable_annihilator(x.omega);
    const RelativeIdeal& a_e = x.c->annihilator;
    ck.expect(lower, a_dual.is_subset_of(a_e),
              [&] { return Finding{{x.c->ideal, x.omega, a_dual, a_e}, "ann(D(Omega)) not inside ann(E)"}; });
    ck.expect(upper, a_e.is_subset_of(a_omega),
              [&] { return Finding{{x.c->ideal, x.omega, a_e, a_omega}, "ann(E) not inside ann(Omega)"}; });
  });
}

void prop_syzygy_stability(SemigroupContext& ctx, Checker& ck) {
  auto& reflexive_dual = ck.tally("reflexiveDualOfSyzygy");
  auto& ulrich = ck.tally("omegaUlrichSyzygy");
  for_each_two_generated(ctx, [&](const TwoGenerated& x) {
    const RelativeIdeal a_omega = stable_annihilator(x.omega);
    const bool same = a_omega == x.c->annihilator;
    if (is_reflexive(x.omega_dual))
      ck.expect(reflexive_dual, same, [&] {
        return Finding{{x.c->ideal, x.omega, x.c->annihilator, a_omega}, "ann(E) differs from ann(Omega)"};
      });
    if (is_ulrich(x.omega, ctx.canonical()))
      ck.expect(ulrich, same, [&] {
        return Finding{{x.c->ideal, x.omega, x.c->annihilator, a_omega}, "ann(E) differs from ann(Omega)"};
      });
  });
}

void cocohom_duality(SemigroupContext& ctx, Checker& ck) {
  auto& t = ck.tally("reflexivePairs");
  for (const auto& c : ctx.classes()) {
    if (!c.reflexive || !c.dual_reflexive) continue;
    const RelativeIdeal a_dual = stable_annihilator(c.dual);
    ck.expect(t, a_dual == c.annihilator,
              [&] { return Finding{{c.ideal, c.dual, c.annihilator, a_dual}, "ann(E) differs from ann(D(E))"}; });
  }
}

void trace_containment(SemigroupContext& ctx, Checker& ck) {
  auto& t = ck.tally("reflexiveDual");
  const RelativeIdeal& tk = ctx.classification().canonical_trace;
  for (const auto& c : ctx.classes()) {
    if (!c.dual_reflexive) continue;
    ck.expect(t, c.trace.is_subset_of(tk), [&] { return Finding{{c.ideal, c.trace, tk}, "tr(E) not inside tr(K)"}; });
  }
}

void trace_criterion(SemigroupContext& ctx, Checker& ck) {
  if (ctx.canred() > 2) return;
  auto& t = ck.tally("biconditional");
  const RelativeIdeal& tk = ctx.classification().canonical_trace;
  for (const auto& c : ctx.classes()) {
    if (!c.reflexive) continue;
    const bool inside = c.trace.is_subset_of(tk);
    ck.expect(t, inside == c.dual_reflexive, [&] {
      return Finding{{c.ideal, c.trace, tk}, std::string("D(E) reflexive is ") + (c.dual_reflexive ? "true" : "false") +
                                                 ", tr(E) in tr(K) is " + (inside ? "true" : "false")};
    });
  }
}

// ----------------------------------------------------------------- ring inv

void ulrich_facts(SemigroupContext& ctx, Checker& ck) {
  auto& blowup_form = ck.tally("blowupModule");
  auto& trace_in_b = ck.tally("ulrichTraceInsideB");
  auto& b_converse = ck.tally("reflexiveTraceInsideBIsUlrich");
  auto& normalization = ck.tally("normalizationUlrich");
  auto& hom = ck.tally("homClosure");
  auto& duals = ck.tally("omegaUlrichIffDualsAgree");
  auto& dual_reflexive = ck.tally("omegaUlrichDualReflexive");
  const auto& cl = ctx.classes();
  const std::size_t n = cl.size();

  std::vector<std::vector<char>> ulrich(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const RelativeIdeal& b_ring = ctx.blowup_of(i);
    const RelativeIdeal& b = ctx.b_of(i);
    const bool nu = is_ulrich(ctx.normalization(), cl[i].ideal);
    ck.expect(normalization, nu, [&] { return Finding{{cl[i].ideal}, "N is not I-Ulrich"}; });
    for (std::size_t e = 0; e < n; ++e) {
      const RelativeIdeal& ei = cl[e].ideal;
      const bool u = is_ulrich(ei, cl[i].ideal);
      ulrich[e][i] = u;
      const bool module = sum(b_ring, ei) == ei;
      ck.expect(blowup_form, u == module, [&] {
        return Finding{{ei, cl[i].ideal, b_ring}, std::string("I-Ulrich is ") + (u ? "true" : "false") +
                                                      ", B(I)+E = E is " + (module ? "true" : "false")};
      });
      const bool inside = cl[e].trace.is_subset_of(b);
      if (u) ck.expect(trace_in_b, inside, [&] { return Finding{{ei, cl[i].ideal, b}, "tr(E) not inside b(I)"}; });
      if (cl[e].reflexive && inside)
        ck.expect(b_converse, u, [&] { return Finding{{ei, cl[i].ideal, b}, "tr(E) in b(I) but E not I-Ulrich"}; });
    }
  }

  for (const RelativeIdeal* i : {&ctx.canonical(), &ctx.maximal()}) {
    for (std::size_t e = 0; e < n; ++e) {
      if (!is_ulrich(cl[e].ideal, *i)) continue;
      for (std::size_t f = 0; f < n; ++f) {
        const RelativeIdeal hom_fe = difference(cl[f].ideal, cl[e].ideal);
        ck.expect(hom, is_ulrich(hom_fe, *i),
                  [&] { return Finding{{cl[e].ideal, cl[f].ideal, *i}, "F - E is not I-Ulrich"}; });
      }
    }
  }

  for (const auto& c : cl) {
    const bool agree = translates(c.ring_dual, canonical_dual(c.ideal));
    ck.expect(duals, c.omega_ulrich == agree, [&] {
      return Finding{{c.ideal, c.ring_dual, c.dual}, std::string("omega-Ulrich is ") + (c.omega_ulrich ? "true" : "false")};
    });
    if (c.omega_ulrich)
      ck.expect(dual_reflexive, c.dual_reflexive, [&] { return Finding{{c.ideal, c.dual}, "D(E) is not reflexive"}; });
  }
}

void canred_facts(SemigroupContext& ctx, Checker& ck) {
  const NumericalSemigroup& s = ctx.semigroup();
  const ClassificationRecord& rec = ctx.classification();
  const InvariantRecord& inv = ctx.invariants();
  const Int r = rec.canonical_reduction_number;
  const RelativeIdeal& k = ctx.canonical();

  ck.expect("gorensteinIffAtMostOne", rec.gorenstein == (r <= 1) && rec.gorenstein == inv.symmetric,
            [&] { return none("canonical reduction number " + str(r)); });
  const bool dual = translates(rec.canonical_trace, ring_dual(k));
  ck.expect("atMostTwoIffTraceIsDual", (r <= 2) == dual, [&] {
    return Finding{{rec.canonical_trace, ring_dual(k)}, "canonical reduction number " + str(r)};
  });

  const Int e = s.multiplicity();
  ck.expect("boundedByMultiplicity", r <= std::max<Int>(e - 1, 0),
            [&] { return none("canonical reduction number " + str(r) + ", multiplicity " + str(e)); });
  auto& powers = ck.tally("canonicalPowersUlrich");
  RelativeIdeal power = ctx.unit();
  for (Int n = 0; n <= e; ++n) {
    const bool u = is_ulrich(power, k);
    ck.expect(powers, u == (n >= r), [&] {
      return Finding{{power}, "n = " + str(n) + " gives omega-Ulrich " + (u ? "true" : "false")};
    });
    power = sum(power, k);
  }

  const bool near = ctx.maximal().is_subset_of(rec.canonical_trace) || s.is_regular();
  bool hierarchy = rec.nearly_gorenstein == near;
  hierarchy &= rec.almost_gorenstein == inv.almost_symmetric && rec.med == inv.med;
  hierarchy &= !rec.gorenstein || rec.almost_gorenstein;
  hierarchy &= !rec.almost_gorenstein || rec.nearly_gorenstein;
  hierarchy &= rec.far_flung_gorenstein == (rec.canonical_trace == rec.conductor);
  hierarchy &= rec.conductor == ctx.conductor();
  ck.expect("classificationHierarchy", hierarchy, [&] { return Finding{{rec.canonical_trace}, "flags inconsistent"}; });
}

void ag_closure(SemigroupContext& ctx, Checker& ck) {
  const bool as = ctx.invariants().almost_symmetric;
  const bool gorenstein = ctx.invariants().symmetric;
  const Int r = ctx.canred();
  const bool m_ulrich = is_ulrich(ctx.maximal(), ctx.canonical());
  ck.expect("almostSymmetricIffMaximalOmegaUlrich", as == m_ulrich,
            [&] { return none(std::string("m omega-Ulrich is ") + (m_ulrich ? "true" : "false")); });
  if (!as) {
    ck.inform("closureWithoutAlmostSymmetry", ctx.duality_closure().closed,
              [&] { return none("duality closure holds, canonical reduction number " + str(r)); });
    return;
  }
  ck.expect("canredAtMostTwo", r <= 2 && (gorenstein || r == 2),
            [&] { return none("canonical reduction number " + str(r)); });
  auto& ulrich = ck.tally("reflexiveClassesOmegaUlrich");
  for (const auto& c : ctx.classes())
    if (c.reflexive && !c.principal)
      ck.expect(ulrich, c.omega_ulrich, [&] { return Finding{{c.ideal}, "not omega-Ulrich"}; });
  const DualityClosure& closure = ctx.duality_closure();
  ck.expect("dualityClosure", closure.closed, [&] {
    return Finding{closure.witness ? std::vector<RelativeIdeal>{*closure.witness} : std::vector<RelativeIdeal>{},
                   "reflexive class with non-reflexive dual"};
  });
  if (!gorenstein) {
    const RelativeIdeal bk = difference(ctx.unit(), blowup(ctx.canonical()));
    const RelativeIdeal& tk = ctx.classification().canonical_trace;
    ck.expect("traceAndBOfCanonicalAreMaximal", bk == ctx.maximal() && tk == ctx.maximal(),
              [&] { return Finding{{bk, tk}, "b(K), tr(K) should both be m"}; });
  }
}

void theorem_b(SemigroupContext& ctx, Checker& ck) {
  const RelativeIdeal& ca = ctx.category_annihilator();
  const RelativeIdeal& co = ctx.conductor();
  if (ctx.invariants().almost_symmetric)
    ck.expect("categoryAnnihilatorIsConductor", ca == co,
              [&] { return Finding{{ca, co}, "category annihilator differs from the conductor"}; });
  ck.inform("shadowDiffersFromConductor", ca != co, [&] { return Finding{{ca, co}, "non-almost-symmetric"}; });

  auto& cert = ck.tally("certificate");
  try {
    const CaCertificate c = certify_cohomology_annihilator(ctx.semigroup());
    bool ok = c.category_annihilator_shadow == ca && c.conductor == co && co.is_subset_of(ca);
    ok &= c.duality_closure.closed == ctx.duality_closure().closed;
    if (c.status == CaStatus::Interval) {
      ok &= !c.value && c.lower && c.upper && *c.lower == co && *c.upper == ctx.maximal();
      ok &= c.lower->is_subset_of(*c.upper) && !ctx.invariants().almost_symmetric;
    } else {
      ok &= c.value && !c.lower && !c.upper && *c.value == co && ctx.invariants().almost_symmetric;
    }
    ck.expect(cert, ok, [&] { return none("certificate status " + std::string(to_string(c.status))); });
  } catch (const Error& err) {
    ck.expect(cert, false, [&] { return none(err.what()); });
  }
}

void med_shadow(SemigroupContext& ctx, Checker& ck) {
  const NumericalSemigroup& s = ctx.semigroup();
  if (s.is_regular()) return;
  const RelativeIdeal& m = ctx.maximal();
  const RelativeIdeal ann_m = stable_annihilator(m);
  ck.expect("maximalIdealAnnihilator", ann_m == m, [&] { return Finding{{ann_m}, "ann(m) differs from m"}; });
  if (!ctx.invariants().med) return;

  const RelativeIdeal dm = normalize(canonical_dual(m)).first;
  const RelativeIdeal ann_dm = stable_annihilator(dm);
  const bool ann_is_m = ann_dm == m;
  const bool closed = ctx.duality_closure().closed;
  if (ctx.invariants().almost_symmetric) {
    ck.expect("annihilatorOfDualMaximal", ann_is_m, [&] { return Finding{{dm, ann_dm}, "ann(D(m)) differs from m"}; });
    ck.expect("dualityClosure", closed, [&] { return none("closure fails for an almost symmetric MED semigroup"); });
  } else {
    ck.inform("converseAnnihilator", ann_is_m, [&] { return Finding{{dm, ann_dm}, "ann(D(m)) = m without almost symmetry"}; });
    ck.inform("converseClosure", closed, [&] { return none("closure holds without almost symmetry"); });
  }
}

void far_flung(SemigroupContext& ctx, Checker& ck) {
  const ClassificationRecord& rec = ctx.classification();
  const RelativeIdeal bk = difference(ctx.unit(), blowup(ctx.canonical()));
  ck.expect("conductorInsideBInsideTrace",
            rec.conductor.is_subset_of(bk) && bk.is_subset_of(rec.canonical_trace),
            [&] { return Finding{{rec.conductor, bk, rec.canonical_trace}, "chain c in b(K) in tr(K) fails"}; });
  if (!rec.far_flung_gorenstein || ctx.semigroup().is_regular()) return;
  auto& t = ck.tally("reflexiveDualsAreNormalization");
  for (const auto& c : ctx.classes()) {
    if (!c.reflexive || c.principal || !c.dual_reflexive) continue;
    ck.expect(t, c.ideal == ctx.normalization(), [&] { return Finding{{c.ideal}, "not a translate of N"}; });
  }
}

void multiplicity3(SemigroupContext& ctx, Checker& ck) {
  if (ctx.semigroup().multiplicity() != 3) return;
  ck.expect("canredAtMostTwo", ctx.canred() <= 2, [&] { return none("canonical reduction number " + str(ctx.canred())); });
}

// -------------------------------------------------------------- registry

constexpr std::array<std::string_view, 32> kCatalog = {
    "ns.additiveClosure",        "ns.enumerationOracle",     "ns.symmetryXor",
    "ns.aperyShape",             "ideal.colonAdjunction",    "ideal.canonicalBiduality",
    "ideal.ringBiduality",       "ideal.syzygyExactness",    "ideal.traceTranslation",
    "ideal.traceGeneration",     "ring.gorensteinCanred",    "ring.canredTwoTrace",
    "ring.bInsideTrace",         "ring.ulrichBlowup",        "ring.ulrichHom",
    "ring.canonicalPowersUlrich", "ring.normalizationUlrich", "ring.omegaUlrichDuals",
    "ring.agCanredTwo",          "ring.farFlungReflexive",   "ring.multiplicityThree",
    "ann.wang",                  "ann.conductorIdentity",    "ann.lemmaChain",
    "ann.propSyzygy",            "ann.cocohom",              "ann.traceContainment",
    "ann.traceCriterion",        "ann.omegaUlrichDual",      "ann.agClosure",
    "ann.theoremB",              "ann.medShadow",
};

std::vector<Suite> make_registry() {
  std::vector<Suite> r;
  r.push_back({"semigroupStructure", "membership, symmetry, Apery sets, enumeration oracle",
               {"ns.additiveClosure", "ns.enumerationOracle", "ns.symmetryXor", "ns.aperyShape"},
               semigroup_structure, semigroup_structure_genus, 10});
  r.push_back({"colonAdjunction", "G in E-F iff G+F in E", {"ideal.colonAdjunction"}, colon_adjunction});
  r.push_back({"biduality", "canonical and ring biduality",
               {"ideal.canonicalBiduality", "ideal.ringBiduality"}, biduality});
  r.push_back({"syzygyExactness", "degreewise exactness of the first syzygy", {"ideal.syzygyExactness"},
               syzygy_exactness});
  r.push_back({"traceFacts", "translation invariance, sumsets, b(E) in tr(E)",
               {"ideal.traceTranslation", "ideal.traceGeneration", "ring.bInsideTrace"}, trace_facts});
  r.push_back({"conductorStableAnn", "ann(N) is the conductor", {"ann.conductorIdentity"}, conductor_stable_ann});
  r.push_back({"wangLowerBound", "conductor annihilates every class", {"ann.wang"}, wang_lower_bound});
  r.push_back({"lemmaChain", "ann(D(Omega)) in ann(E) in ann(Omega)", {"ann.lemmaChain"}, lemma_chain});
  r.push_back({"propSyzygyStability", "ann(E) = ann(Omega) when D(Omega) is reflexive", {"ann.propSyzygy"},
               prop_syzygy_stability});
  r.push_back({"cocohomDuality", "ann(E) = ann(D(E)) for reflexive pairs", {"ann.cocohom"}, cocohom_duality});
  r.push_back({"traceContainment", "tr(E) in tr(K) when D(E) is reflexive", {"ann.traceContainment"},
               trace_containment});
  r.push_back({"traceCriterion", "D(E) reflexive iff tr(E) in tr(K), canonical reduction number at most 2",
               {"ann.traceCriterion"}, trace_criterion});
  r.push_back({"ulrichFacts", "I-Ulrich classes, blowups, Hom closure, duals",
               {"ring.ulrichBlowup", "ring.ulrichHom", "ring.normalizationUlrich", "ring.omegaUlrichDuals",
                "ann.omegaUlrichDual"},
               ulrich_facts});
  r.push_back({"canredFacts", "canonical reduction number and the Gorenstein hierarchy",
               {"ring.gorensteinCanred", "ring.canredTwoTrace", "ring.canonicalPowersUlrich"}, canred_facts});
  r.push_back({"agClosure", "almost symmetric semigroups: Ulrich classes and duality closure",
               {"ring.agCanredTwo", "ann.agClosure"}, ag_closure});
  r.push_back({"theoremB", "category annihilator equals the conductor for almost symmetric S",
               {"ann.theoremB"}, theorem_b});
  r.push_back({"medShadow", "maximal embedding dimension: ann(D(m)) and closure", {"ann.medShadow"}, med_shadow});
  r.push_back({"farFlung", "far-flung Gorenstein semigroups", {"ring.farFlungReflexive"}, far_flung});
  r.push_back({"multiplicity3", "multiplicity three bounds", {"ring.multiplicityThree"}, multiplicity3});
  return r;
}

}  // namespace

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> registry = make_registry();
  return registry;
}

const Suite* find_suite(std::string_view id) {
  for (const auto& s : suite_registry())
    if (s.id == id) return &s;
  return nullptr;
}

std::span<const std::string_view> property_catalog() { return kCatalog; }

}  // namespace curvelab
