// Exhaustive straight-line program enumeration.

#include <algorithm>
#include <atomic>
#include <cstring>
#include <memory>
#include <thread>

#include "ultra/error.hpp"
#include "ultra/search.hpp"

namespace ultra {

namespace {

void put_varint(std::string& out, std::int64_t v) {
  std::uint64_t z = (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
  while (z >= 0x80) {
    out.push_back(static_cast<char>((z & 0x7f) | 0x80));
    z >>= 7;
  }
  out.push_back(static_cast<char>(z));
}

}  // namespace

std::optional<TauCatalog::Key> TauCatalog::key_of(const SparsePoly& f) {
  if (!f.is_integral()) return std::nullopt;
  if (f.degree() > (std::uint64_t{1} << kSlpHardLimit)) return std::nullopt;
  Key key;
  if (f.is_zero()) return key;
  for (std::uint64_t e = 0; e <= f.degree(); ++e) {
    const Rational c = f.coefficient(e);
    if (!c.get_num().fits_slong_p()) return std::nullopt;
    put_varint(key, c.get_num().get_si());
  }
  return key;
}

SparsePoly TauCatalog::poly_of(const Key& key) {
  std::vector<Integer> coefficients;
  std::uint64_t z = 0;
  unsigned shift = 0;
  for (char ch : key) {
    const auto byte = static_cast<std::uint8_t>(ch);
    z |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if (byte & 0x80) {
      shift += 7;
      continue;
    }
    const auto v = static_cast<std::int64_t>((z >> 1) ^ (~(z & 1) + 1));
    coefficients.emplace_back(static_cast<long>(v));
    z = 0;
    shift = 0;
  }
  return SparsePoly::from_dense(coefficients);
}

TauCatalog::Packed TauCatalog::pack(const TauEntry& e) {
  if (e.tau > kSlpHardLimit || e.witness.length() != e.tau) throw Error("catalog entry has an inconsistent witness");
  Packed p;
  p.tau = static_cast<std::uint8_t>(e.tau);
  p.out = static_cast<std::uint8_t>(e.witness.output());
  for (std::size_t i = 0; i < e.witness.length(); ++i) {
    const auto& ins = e.witness.ops()[i];
    p.ops[2 * i] = static_cast<std::uint8_t>(ins.op);
    p.ops[2 * i + 1] = static_cast<std::uint8_t>(ins.left << 4 | ins.right);
  }
  return p;
}

TauEntry TauCatalog::unpack(const Packed& p) {
  std::vector<SlpInstruction> ops;
  for (unsigned i = 0; i < p.tau; ++i) {
    ops.push_back({static_cast<ArithOp>(p.ops[2 * i]), static_cast<std::uint32_t>(p.ops[2 * i + 1] >> 4),
                   static_cast<std::uint32_t>(p.ops[2 * i + 1] & 0xf)});
  }
  return {p.tau, Slp(std::move(ops), p.out)};
}

bool TauCatalog::better(const Packed& a, const Packed& b) {
  if (a.tau != b.tau) return a.tau < b.tau;
  const int c = std::memcmp(a.ops.data(), b.ops.data(), 2 * a.tau);
  if (c != 0) return c < 0;
  return a.out < b.out;
}

void TauCatalog::offer_packed(Key key, const Packed& p) {
  auto [it, inserted] = entries_.try_emplace(std::move(key), p);
  if (!inserted && better(p, it->second)) it->second = p;
}

void TauCatalog::offer(const SparsePoly& f, const TauEntry& entry) {
  auto key = key_of(f);
  if (!key) throw Error("polynomial cannot be stored in the catalog: " + to_string(f));
  offer_packed(std::move(*key), pack(entry));
}

std::optional<TauEntry> TauCatalog::find(const SparsePoly& f) const {
  auto key = key_of(f);
  if (!key) return std::nullopt;
  auto it = entries_.find(*key);
  if (it == entries_.end()) return std::nullopt;
  return unpack(it->second);
}

std::vector<std::size_t> TauCatalog::counts_by_length() const {
  std::vector<std::size_t> counts(caps_.max_len + 1, 0);
  for (const auto& [k, p] : entries_) {
    if (p.tau >= counts.size()) counts.resize(p.tau + 1, 0);
    ++counts[p.tau];
  }
  return counts;
}

std::vector<const std::pair<const TauCatalog::Key, TauCatalog::Packed>*> TauCatalog::sorted() const {
  std::vector<const std::pair<const Key, Packed>*> out;
  out.reserve(entries_.size());
  for (const auto& kv : entries_) out.push_back(&kv);
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    if (a->second.tau != b->second.tau) return a->second.tau < b->second.tau;
    return a->first < b->first;
  });
  return out;
}

namespace {

constexpr int kMaxDegree = 1 << kSlpHardLimit;

struct Node {
  int degree = -1;  // -1 for the zero polynomial
  std::int64_t c[kMaxDegree + 1];
};

bool same(const Node& a, const Node& b) {
  return a.degree == b.degree && std::memcmp(a.c, b.c, sizeof(std::int64_t) * (a.degree + 1)) == 0;
}

class Enumerator {
 public:
  explicit Enumerator(const EnumerationCaps& caps)
      : caps_(caps), limit_((std::int64_t{1} << caps.coefficient_bits)) {}

  void record_base() {
    init_base();
    record(0, 0);
    record(1, 0);
  }

  // Every program whose first instruction is `first`.
  void run_shard(const SlpInstruction& first) {
    init_base();
    if (caps_.max_len == 0) return;
    if (!apply(first, 2)) return;
    prog_[0] = first;
    if (duplicate(2)) return;
    record(2, 1);
    dfs(1);
  }

  TauCatalog::Key encode(int index) const {
    TauCatalog::Key key;
    const Node& n = nodes_[index];
    for (int e = 0; e <= n.degree; ++e) put_varint(key, n.c[e]);
    return key;
  }

  std::unordered_map<TauCatalog::Key, TauCatalog::Packed>& map() { return map_; }
  std::uint64_t pruned() const { return pruned_; }

 private:
  void init_base() {
    nodes_[0].degree = 0;
    nodes_[0].c[0] = 1;
    nodes_[1].degree = 1;
    nodes_[1].c[0] = 0;
    nodes_[1].c[1] = 1;
  }

  void record(int index, unsigned len) {
    TauCatalog::Packed p;
    p.tau = static_cast<std::uint8_t>(len);
    p.out = static_cast<std::uint8_t>(index);
    for (unsigned i = 0; i < len; ++i) {
      p.ops[2 * i] = static_cast<std::uint8_t>(prog_[i].op);
      p.ops[2 * i + 1] = static_cast<std::uint8_t>(prog_[i].left << 4 | prog_[i].right);
    }
    auto [it, inserted] = map_.try_emplace(encode(index), p);
    if (!inserted && TauCatalog::better(p, it->second)) it->second = p;
  }

  bool duplicate(int index) const {
    for (int i = 0; i < index; ++i) {
      if (same(nodes_[i], nodes_[index])) return true;
    }
    return false;
  }

  // Computes node `index`; false (and counted) when a coefficient leaves the cap.
  bool apply(const SlpInstruction& ins, int index) {
    const Node& a = nodes_[ins.left];
    const Node& b = nodes_[ins.right];
    Node& r = nodes_[index];
    if (ins.op == ArithOp::mul) {
      if (a.degree < 0 || b.degree < 0) {
        r.degree = -1;
        return true;
      }
      r.degree = a.degree + b.degree;
      for (int k = 0; k <= r.degree; ++k) {
        __int128 acc = 0;
        const int lo = std::max(0, k - b.degree);
        const int hi = std::min(k, a.degree);
        for (int i = lo; i <= hi; ++i) acc += static_cast<__int128>(a.c[i]) * b.c[k - i];
        if (acc >= limit_ || acc <= -limit_) {
          ++pruned_;
          return false;
        }
        r.c[k] = static_cast<std::int64_t>(acc);
      }
      return true;
    }
    const int top = std::max(a.degree, b.degree);
    const bool minus = ins.op == ArithOp::sub;
    for (int k = 0; k <= top; ++k) {
      const std::int64_t x = k <= a.degree ? a.c[k] : 0;
      const std::int64_t y = k <= b.degree ? b.c[k] : 0;
      const std::int64_t v = minus ? x - y : x + y;
      if (v >= limit_ || v <= -limit_) {
        ++pruned_;
        return false;
      }
      r.c[k] = v;
    }
    r.degree = top;
    while (r.degree >= 0 && r.c[r.degree] == 0) --r.degree;
    return true;
  }

  void dfs(unsigned len) {
    if (len >= caps_.max_len || len >= kSlpHardLimit) return;
    const int n = static_cast<int>(len) + 2;
    for (ArithOp op : {ArithOp::add, ArithOp::sub, ArithOp::mul}) {
      for (int l = 0; l < n; ++l) {
        // add and mul commute
        for (int r = op == ArithOp::sub ? 0 : l; r < n; ++r) {
          const SlpInstruction ins{op, static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r)};
          if (!apply(ins, n)) continue;
          // A program computing a value twice is never minimal for anything it feeds.
          if (duplicate(n)) continue;
          prog_[len] = ins;
          record(n, len + 1);
          dfs(len + 1);
        }
      }
    }
  }

  EnumerationCaps caps_;
  std::int64_t limit_;
  Node nodes_[kSlpHardLimit + 2];
  SlpInstruction prog_[kSlpHardLimit];
  std::unordered_map<TauCatalog::Key, TauCatalog::Packed> map_;
  std::uint64_t pruned_ = 0;
};

std::vector<SlpInstruction> first_instructions() {
  std::vector<SlpInstruction> out;
  for (ArithOp op : {ArithOp::add, ArithOp::sub, ArithOp::mul}) {
    for (std::uint32_t l = 0; l < 2; ++l) {
      for (std::uint32_t r = op == ArithOp::sub ? 0 : l; r < 2; ++r) out.push_back({op, l, r});
    }
  }
  return out;
}

}  // namespace

TauCatalog enumerate_slps(const EnumerationCaps& caps, unsigned threads) {
  if (caps.max_len > kSlpHardLimit) {
    throw Error("enumeration length " + std::to_string(caps.max_len) + " exceeds the hard limit " +
                std::to_string(kSlpHardLimit));
  }
  if (caps.coefficient_bits < 2 || caps.coefficient_bits > 62) throw Error("coefficient cap must be 2..62 bits");
  const auto shards = first_instructions();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(shards.size()));

  std::vector<std::unique_ptr<Enumerator>> workers;
  for (unsigned t = 0; t < threads; ++t) workers.push_back(std::make_unique<Enumerator>(caps));
  workers[0]->record_base();
  std::atomic<std::size_t> next{0};
  auto work = [&](Enumerator& e) {
    for (std::size_t i = next++; i < shards.size(); i = next++) e.run_shard(shards[i]);
  };
  if (threads == 1) {
    work(*workers[0]);
  } else {
    std::vector<std::jthread> pool;
    for (auto& w : workers) pool.emplace_back([&work, &w] { work(*w); });
  }

  TauCatalog catalog(caps);
  for (auto& w : workers) {
    catalog.add_pruned(w->pruned());
    auto& m = w->map();
    for (auto it = m.begin(); it != m.end(); it = m.erase(it)) catalog.offer_packed(it->first, it->second);
  }
  return catalog;
}

std::optional<unsigned> tau_of(const TauCatalog& catalog, const SparsePoly& f) {
  auto e = catalog.find(f);
  if (!e) return std::nullopt;
  return e->tau;
}

std::optional<unsigned> tau_of(const SparsePoly& f, unsigned max_len) {
  EnumerationCaps caps;
  caps.max_len = max_len;
  return tau_of(enumerate_slps(caps), f);
}

}  // namespace ultra
