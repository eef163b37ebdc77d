// Randomized invariants. Usage: properties [--seed N] [--iterations N]
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "cmspets/cmgeom.hpp"

using namespace cmspets;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "property failed: " << what << "\n";
  }
}

Partition random_partition(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> size(0, max_n);
  int left = size(rng);
  std::vector<int> parts;
  while (left > 0) {
    std::uniform_int_distribution<int> part(1, left);
    parts.push_back(part(rng));
    left -= parts.back();
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return make_rational(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int conductor) {
  std::vector<Rational> c(conductor);
  for (auto& x : c) x = random_rational(rng);
  return Cyclotomic::from_powers(conductor, c);
}

RatPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return RatPoly(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized property checks"};
  std::uint64_t seed = std::random_device{}();
  int iterations = 200;
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--iterations", iterations, "Iterations per property")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  std::cout << "seed " << seed << "\n";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small_d(1, 8);
  const std::vector<int> conductors = {3, 4, 5, 7, 8, 12};

  for (int it = 0; it < iterations; ++it) {
    // Core and quotient.
    const Partition l = random_partition(rng, 40);
    const int d = small_d(rng);
    const CoreQuotient cq = core_quotient(l, d);
    expect(par_d(cq.core, cq.quotient) == l, "par_d(core_quotient) on " + l.str());
    expect(l.size() == cq.core.size() + d * cq.quotient.size(), "size identity on " + l.str());
    expect(is_d_core(cq.core, d), "core is a core for " + l.str());

    // k = l on the core found.
    if (d >= 2) expect(check_k_equals_l(k_l_sequences(cq.core, d)), "k = l for " + cq.core.str());

    // Field axioms.
    const int n = conductors[it % conductors.size()];
    const Cyclotomic a = random_cyclotomic(rng, n);
    const Cyclotomic b = random_cyclotomic(rng, n);
    const Cyclotomic c = random_cyclotomic(rng, conductors[(it + 1) % conductors.size()]);
    expect(a * (b + c) == a * b + a * c, "distributivity");
    expect((a * b).conj() == a.conj() * b.conj(), "conjugation is multiplicative");
    if (!a.is_zero()) expect(a * a.inverse() == Cyclotomic(1), "inverse");
    expect((a * b).galois(n - 1) == a.galois(n - 1) * b.galois(n - 1), "galois");

    // Polynomial division.
    const RatPoly p = random_poly(rng, 6);
    RatPoly q = random_poly(rng, 4);
    if (q.is_zero()) q = RatPoly(1);
    auto [quo, rem] = p.divmod(q);
    expect(quo * q + rem == p, "divmod identity");
    expect(rem.degree() < q.degree() || q.degree() == 0, "remainder degree");
    expect((p * q).divexact(q) == p, "divexact");
    const Rational s = random_rational(rng);
    expect(p.shifted(s).shifted(-s) == p, "shift round trip");

    // Multivariate evaluation.
    const std::vector<std::string> vars = {"x", "y"};
    const MultiPoly mp = MultiPoly::from_uni(vars, "x", p) + MultiPoly::from_uni(vars, "y", q);
    const MultiPoly mq = MultiPoly::from_uni(vars, "y", p);
    const std::map<std::string, Rational> at = {{"x", random_rational(rng)}, {"y", random_rational(rng)}};
    expect((mp * mq).evaluate(at) == mp.evaluate(at) * mq.evaluate(at), "evaluation is multiplicative");

    // Affine isomorphism of root multisets.
    std::uniform_int_distribution<int> m_dist(1, 7);
    const int m = m_dist(rng);
    std::vector<Rational> k(m);
    for (auto& x : k) x = random_rational(rng);
    const CyclicCMSpace space = cyclic_cm(m, k);
    int total = 0;
    for (const auto& [z, mult] : space.roots) total += mult;
    expect(total == m, "multiplicities sum to m");
    Rational alpha = random_rational(rng);
    if (alpha == 0) alpha = 1;
    const Rational beta = random_rational(rng);
    RootMultiset image;
    for (const auto& [z, mult] : space.roots) image[Rational(alpha * z + beta)] += mult;
    const auto iso = iso_up_to_affine(space.roots, image);
    expect(iso.has_value(), "affine image is found");
    expect(iso_up_to_affine(image, space.roots).has_value(), "iso is symmetric");
    expect(iso_up_to_affine(space.roots, space.roots).has_value(), "iso is reflexive");
    if (iso) {
      RootMultiset mapped;
      for (const auto& [z, mult] : space.roots) mapped[Rational(iso->alpha * z + iso->beta)] += mult;
      expect(mapped == image, "iso maps onto the target");
    }

    // Parameter operations.
    Parameter kp;
    kp.values = {k};
    expect(sharp(sharp(kp)) == kp, "sharp is an involution");
    Parameter shifted = kp;
    for (auto& x : shifted.values[0]) x += beta;
    expect(shift_equivalent(kp, shifted, false), "constant shift");
  }
  std::cout << iterations << " iterations, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}
