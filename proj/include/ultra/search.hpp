#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ultra/circuit.hpp"
#include "ultra/polynomial.hpp"

namespace ultra {

// ---- tau catalog ----------------------------------------------------------

inline constexpr unsigned kSlpHardLimit = 7;

struct EnumerationCaps {
  unsigned max_len = 5;
  // Programs producing a coefficient of this many bits or more are pruned.
  unsigned coefficient_bits = 62;

  friend bool operator==(const EnumerationCaps&, const EnumerationCaps&) = default;
};

struct TauEntry {
  unsigned tau = 0;
  Slp witness;
};

// Minimal program length for every polynomial reachable within the caps.
class TauCatalog {
 public:
  TauCatalog() = default;
  explicit TauCatalog(EnumerationCaps caps) : caps_(caps) {}

  const EnumerationCaps& caps() const { return caps_; }
  std::size_t size() const { return entries_.size(); }
  // Programs abandoned because a coefficient crossed the bit cap.
  std::uint64_t pruned() const { return pruned_; }
  void add_pruned(std::uint64_t n) { pruned_ += n; }

  std::optional<TauEntry> find(const SparsePoly& f) const;
  // Keeps the shorter witness, breaking ties by the smaller instruction sequence.
  void offer(const SparsePoly& f, const TauEntry& entry);
  std::vector<std::size_t> counts_by_length() const;

  // Compact storage for enumeration.
  struct Packed {
    std::uint8_t tau = 0;
    std::uint8_t out = 0;
    std::array<std::uint8_t, 2 * kSlpHardLimit> ops{};
  };
  using Key = std::string;
  static std::optional<Key> key_of(const SparsePoly& f);
  static SparsePoly poly_of(const Key& key);
  static Packed pack(const TauEntry& e);
  static TauEntry unpack(const Packed& p);
  static bool better(const Packed& a, const Packed& b);
  void offer_packed(Key key, const Packed& p);
  const std::unordered_map<Key, Packed>& packed() const { return entries_; }
  // Entries ordered by (tau, key bytes); stable across runs.
  std::vector<const std::pair<const Key, Packed>*> sorted() const;

 private:
  EnumerationCaps caps_;
  std::unordered_map<Key, Packed> entries_;
  std::uint64_t pruned_ = 0;
};

// Exhaustive enumeration of SLPs up to caps.max_len. `threads` = 0 picks the hardware count.
TauCatalog enumerate_slps(const EnumerationCaps& caps, unsigned threads = 0);

// tau(f) if at most the catalog's max length, else nothing.
std::optional<unsigned> tau_of(const TauCatalog& catalog, const SparsePoly& f);
std::optional<unsigned> tau_of(const SparsePoly& f, unsigned max_len);

// ---- catalog persistence --------------------------------------------------

struct CacheOutcome {
  bool served_from_cache = false;
  std::vector<unsigned> lengths_written;
};

// Writes tau_<k>.jsonl shards and index.json atomically.
CacheOutcome save_catalog(const std::filesystem::path& dir, const TauCatalog& catalog);
// Loads shards 0..max_len, verifying checksums. Throws on a missing or corrupt cache.
TauCatalog load_catalog(const std::filesystem::path& dir, unsigned max_len);
// Serves from a compatible cache when it reaches caps.max_len, else enumerates and saves.
TauCatalog cached_catalog(const std::filesystem::path& dir, const EnumerationCaps& caps, CacheOutcome* outcome = nullptr);

// ---- sigma upper bounds -----------------------------------------------------

struct SigmaSearchBounds {
  std::size_t s_max = 2;
  std::uint64_t max_exponent = 4;
  long max_constant = 8;
};

struct SigmaWitness {
  std::size_t s = 0;
  AdditiveCircuit circuit;
};

// Smallest s <= s_max with a presentation inside the bounds. An upper bound on sigma only.
std::optional<SigmaWitness> sigma_upper_search(const SparsePoly& f, const SigmaSearchBounds& bounds);

// ---- families -------------------------------------------------------------

enum class FamilyKind { extremal, cyclotomic_shift, logistic, shub_smale };

struct FamilySpec {
  FamilyKind kind = FamilyKind::extremal;
  unsigned long p = 2;  // extremal
  unsigned s = 0;       // extremal
  unsigned d = 1;       // cyclotomic_shift
  unsigned j = 0;       // logistic, shub_smale
};

struct FamilyMember {
  SparsePoly poly;
  // logistic: g_j itself (poly is g_j - x).
  std::optional<SparsePoly> base;
  std::optional<Slp> slp;
  std::optional<AdditiveCircuit> circuit;
};

FamilyKind family_kind_from_name(const std::string& name);
std::string family_kind_name(FamilyKind kind);
FamilyMember family(const FamilySpec& spec, std::uint64_t degree_cap = kDefaultDegreeCap);

// ---- random circuits --------------------------------------------------------

struct CircuitBounds {
  std::uint64_t max_exponent = 6;
  long max_constant = 100;
  // Gates are resampled until the no-cancellation degree of every X_j stays within this.
  std::uint64_t degree_budget = 48;
};

// Deterministic in (s, seed, bounds). Constants are nonzero, the two exponent
// vectors of a gate differ, and the output uses the last gate exactly once.
AdditiveCircuit random_circuit(std::size_t s, std::uint64_t seed, const CircuitBounds& bounds = {});

}  // namespace ultra
