#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "ultra/error.hpp"
#include "ultra/search.hpp"

using namespace ultra;
namespace fs = std::filesystem;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

struct TempDir {
  fs::path path;
  TempDir() {
    char tmpl[] = "/tmp/ultra-test-XXXXXX";
    path = ::mkdtemp(tmpl);
  }
  ~TempDir() { fs::remove_all(path); }
};

bool same_entries(const TauCatalog& a, const TauCatalog& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [key, packed] : a.packed()) {
    auto it = b.packed().find(key);
    if (it == b.packed().end()) return false;
    if (it->second.tau != packed.tau || it->second.out != packed.out || it->second.ops != packed.ops) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small enumerations") {
  const TauCatalog c0 = enumerate_slps({0, 62});
  CHECK(c0.size() == 2);
  CHECK(c0.find(P("1"))->tau == 0);
  CHECK(c0.find(P("x"))->tau == 0);

  const TauCatalog c1 = enumerate_slps({1, 62});
  for (const char* s : {"x^2", "2", "x+1", "2*x", "0"}) {
    INFO(s);
    REQUIRE(c1.find(P(s)));
    CHECK(c1.find(P(s))->tau == 1);
  }
  CHECK_FALSE(c1.find(P("x^2+x")));

  const TauCatalog c2 = enumerate_slps({2, 62});
  CHECK(c2.find(P("x^2+x"))->tau == 2);
  CHECK(c1.counts_by_length() == std::vector<std::size_t>{2, 7});
}

TEST_CASE("tau_of") {
  CHECK(tau_of(P("x"), 3) == 0u);
  CHECK(tau_of(P("x^2"), 3) == 1u);
  CHECK(tau_of(P("x^2+x"), 3) == 2u);
  CHECK(tau_of(P("x^64"), 3) == std::nullopt);
  CHECK(tau_of(P("1/2*x"), 3) == std::nullopt);
}

TEST_CASE("catalog soundness, degree law and minimality") {
  const TauCatalog cat = enumerate_slps({4, 62});
  const TauCatalog shorter = enumerate_slps({3, 62});
  std::size_t sampled = 0;
  for (const auto* kv : cat.sorted()) {
    const TauEntry e = TauCatalog::unpack(kv->second);
    const SparsePoly f = TauCatalog::poly_of(kv->first);
    CHECK(slp_expand(e.witness) == f);
    CHECK(e.witness.length() == e.tau);
    CHECK(f.degree() <= (std::uint64_t{1} << e.tau));
    CHECK(TauCatalog::key_of(f) == kv->first);
    if (e.tau == 4 && sampled < 100) {
      CHECK_FALSE(shorter.find(f));
      ++sampled;
    }
  }
  CHECK(sampled == 100);
}

TEST_CASE("enumeration is identical for any thread count") {
  const TauCatalog one = enumerate_slps({4, 62}, 1);
  const TauCatalog many = enumerate_slps({4, 62}, 4);
  CHECK(same_entries(one, many));
  CHECK(one.pruned() == many.pruned());
}

TEST_CASE("coefficient cap prunes and records") {
  const TauCatalog capped = enumerate_slps({4, 4}, 1);
  CHECK(capped.pruned() > 0);
  for (const auto& [key, packed] : capped.packed()) {
    const SparsePoly f = TauCatalog::poly_of(key);
    for (const auto& [e, c] : f.terms()) CHECK(abs(c.get_num()) < 16);
  }
}

TEST_CASE("catalog cache: save, resume, idempotence") {
  TempDir dir;
  CacheOutcome first;
  const TauCatalog cold = cached_catalog(dir.path, {3, 62}, &first);
  CHECK_FALSE(first.served_from_cache);
  CHECK(first.lengths_written == std::vector<unsigned>{0, 1, 2, 3});

  CacheOutcome again;
  const TauCatalog warm = cached_catalog(dir.path, {3, 62}, &again);
  CHECK(again.served_from_cache);
  CHECK(same_entries(cold, warm));

  CacheOutcome smaller;
  const TauCatalog two = cached_catalog(dir.path, {2, 62}, &smaller);
  CHECK(smaller.served_from_cache);
  CHECK(same_entries(two, enumerate_slps({2, 62})));

  // Extending rewrites only the new shard.
  CacheOutcome grow;
  const TauCatalog four = cached_catalog(dir.path, {4, 62}, &grow);
  CHECK_FALSE(grow.served_from_cache);
  CHECK(grow.lengths_written == std::vector<unsigned>{4});
  CHECK(same_entries(four, enumerate_slps({4, 62})));
  CHECK(same_entries(load_catalog(dir.path, 4), four));

  CHECK_THROWS_AS(cached_catalog(dir.path, {2, 30}), Error);
  CHECK_THROWS_AS(load_catalog(dir.path, 5), Error);
}

TEST_CASE("catalog cache detects corruption") {
  TempDir dir;
  save_catalog(dir.path, enumerate_slps({2, 62}));
  {
    std::ofstream out(dir.path / "tau_2.jsonl", std::ios::app);
    out << R"({"poly":{"terms":[[9,"1"]]},"tau":2,"witness":{"ops":[]}})" << "\n";
  }
  CHECK_THROWS_AS(load_catalog(dir.path, 2), Error);
}

TEST_CASE("sigma upper search") {
  const auto binomial = sigma_upper_search(P("x^4-3"), {2, 4, 8});
  REQUIRE(binomial);
  CHECK(binomial->s == 1);
  CHECK(circuit_validate(binomial->circuit, P("x^4-3")));

  const auto mono = sigma_upper_search(P("5*x^3"), {0, 3, 5});
  REQUIRE(mono);
  CHECK(mono->s == 0);

  const auto three = sigma_upper_search(P("x^2-6*x+8"), {2, 2, 8});
  REQUIRE(three);
  CHECK(three->s == 2);
  CHECK(circuit_validate(three->circuit, P("x^2-6*x+8")));

  CHECK_FALSE(sigma_upper_search(P("x^3+x^2+x+1"), {1, 3, 3}));
}

TEST_CASE("sigma search never returns an invalid circuit") {
  oracle::Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const SparsePoly f = rng.poly(static_cast<unsigned>(rng.range(0, 3)), 4);
    const auto found = sigma_upper_search(f, {2, 3, 4});
    if (found) CHECK(circuit_validate(found->circuit, f));
  }
}

TEST_CASE("families") {
  CHECK(family({FamilyKind::extremal, 2, 3, 1, 0}).poly == P("x^3-7*x^2+14*x-8"));
  CHECK(family({FamilyKind::cyclotomic_shift, 2, 0, 4, 0}).poly == P("x^4+4*x^3+6*x^2+4*x"));
  const FamilyMember g1 = family({FamilyKind::logistic, 2, 0, 1, 1});
  CHECK(g1.base.value() == P("4*x-4*x^2"));
  CHECK(g1.poly == P("3*x-4*x^2"));
  const FamilyMember ss = family({FamilyKind::shub_smale, 2, 0, 1, 1});
  CHECK(ss.poly == P("x^2-6*x+8"));
  CHECK_THROWS_AS(family({FamilyKind::shub_smale, 2, 0, 1, 20}, 1 << 16), DegreeCapExceeded);
  CHECK(family_kind_from_name("shub-smale") == FamilyKind::shub_smale);
  CHECK_THROWS_AS(family_kind_from_name("nope"), Error);
}

TEST_CASE("family witnesses expand to the family polynomial") {
  for (unsigned j = 1; j <= 4; ++j) {
    const FamilyMember g = family({FamilyKind::logistic, 2, 0, 1, j});
    CHECK(slp_expand(*g.slp) == g.poly);
    CHECK(g.slp->length() == 3 * j + 3);
  }
  for (unsigned j = 0; j <= 3; ++j) {
    const FamilyMember s = family({FamilyKind::shub_smale, 2, 0, 1, j});
    CHECK(slp_expand(*s.slp) == s.poly);
  }
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (unsigned s = 0; s <= 6; ++s) {
      const FamilyMember e = family({FamilyKind::extremal, p, s, 1, 0});
      CHECK(circuit_validate(*e.circuit, e.poly));
      CHECK(distinct_valuation_count(e.poly, Prime(p)) == s);
    }
  }
  for (unsigned d = 1; d <= 10; ++d) {
    const FamilyMember c = family({FamilyKind::cyclotomic_shift, 2, 0, d, 0});
    CHECK(circuit_validate(*c.circuit, c.poly));
  }
}

TEST_CASE("random circuits") {
  const CircuitBounds b{4, 10, 48};
  CHECK(random_circuit(2, 42, b) == random_circuit(2, 42, b));
  CHECK_FALSE(random_circuit(2, 42, b) == random_circuit(2, 43, b));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const AdditiveCircuit c0 = random_circuit(0, seed);
    CHECK(circuit_expand(c0).term_count() == 1);
    const AdditiveCircuit c1 = random_circuit(1, seed);
    CHECK(circuit_expand(c1).term_count() <= 2);
    const AdditiveCircuit c = random_circuit(seed % 5, seed);
    c.check_shape();
    for (const auto& g : c.gates) {
      CHECK(g.c != 0);
      CHECK(g.d != 0);
      CHECK(g.m != g.mp);
      CHECK(abs(g.c) <= 100);
      for (auto e : g.m) CHECK(e <= 6);
    }
    CHECK(circuit_expand(c).degree() <= 48);
  }
}
