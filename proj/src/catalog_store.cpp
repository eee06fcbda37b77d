// On-disk tau catalog: one JSON-lines shard per program length plus index.json.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ultra/error.hpp"
#include "ultra/search.hpp"

namespace ultra {

namespace fs = std::filesystem;

namespace {

constexpr int kFormat = 1;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string shard_name(unsigned tau) { return "tau_" + std::to_string(tau) + ".jsonl"; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& bytes) {
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Advisory lock on <dir>/.lock held for the lifetime of the object.
class DirLock {
 public:
  DirLock(const fs::path& dir, bool exclusive) {
    fs::create_directories(dir);
    fd_ = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw Error("cannot open lock file in " + dir.string());
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw Error("cannot lock " + dir.string());
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

std::optional<Json> read_index(const fs::path& dir) {
  const fs::path path = dir / "index.json";
  if (!fs::exists(path)) return std::nullopt;
  Json j = parse_json(read_file(path));
  if (!j.is_object() || j.value("format", 0) != kFormat) throw Error("unrecognized catalog index in " + dir.string());
  return j;
}

std::string render_shard(unsigned tau, const std::vector<const std::pair<const TauCatalog::Key, TauCatalog::Packed>*>& sorted) {
  std::string out;
  for (const auto* kv : sorted) {
    if (kv->second.tau != tau) continue;
    Json line;
    line["poly"] = poly_to_json(TauCatalog::poly_of(kv->first));
    line["tau"] = tau;
    line["witness"] = slp_to_json(TauCatalog::unpack(kv->second).witness);
    out += line.dump();
    out += '\n';
  }
  return out;
}

TauCatalog load_unlocked(const fs::path& dir, unsigned max_len) {
  auto index = read_index(dir);
  if (!index) throw Error("no catalog in " + dir.string());
  const unsigned cached = (*index)["max_len"].get<unsigned>();
  if (cached < max_len) {
    throw Error("catalog in " + dir.string() + " reaches length " + std::to_string(cached) + ", not " +
                std::to_string(max_len));
  }
  EnumerationCaps caps;
  caps.max_len = max_len;
  caps.coefficient_bits = (*index)["coefficient_bits"].get<unsigned>();
  TauCatalog catalog(caps);
  catalog.add_pruned((*index)["pruned"].get<std::uint64_t>());
  const Json& shards = (*index)["shards"];
  for (unsigned tau = 0; tau <= max_len; ++tau) {
    const Json& meta = shards.at(tau);
    const std::string bytes = read_file(dir / meta["file"].get<std::string>());
    if (hex(fnv1a(bytes)) != meta["fnv1a"].get<std::string>()) {
      throw Error("checksum mismatch in " + (dir / meta["file"].get<std::string>()).string());
    }
    std::size_t count = 0;
    std::istringstream lines(bytes);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      Json j = parse_json(line);
      if (j["tau"].get<unsigned>() != tau) throw Error("catalog line in the wrong shard");
      TauEntry entry{tau, slp_from_json(j["witness"])};
      catalog.offer(poly_from_json(j["poly"]), entry);
      ++count;
    }
    if (count != meta["count"].get<std::size_t>()) throw Error("entry count mismatch in " + shard_name(tau));
  }
  return catalog;
}

CacheOutcome save_unlocked(const fs::path& dir, const TauCatalog& catalog) {
  CacheOutcome outcome;
  const auto old_index = read_index(dir);
  const auto sorted = catalog.sorted();
  const auto counts = catalog.counts_by_length();
  Json shards = Json::array();
  for (unsigned tau = 0; tau <= catalog.caps().max_len; ++tau) {
    const std::string bytes = render_shard(tau, sorted);
    const std::string sum = hex(fnv1a(bytes));
    const fs::path path = dir / shard_name(tau);
    bool done = false;
    if (old_index && tau < (*old_index)["shards"].size() &&
        (*old_index)["coefficient_bits"].get<unsigned>() == catalog.caps().coefficient_bits &&
        (*old_index)["shards"][tau]["fnv1a"].get<std::string>() == sum && fs::exists(path)) {
      done = hex(fnv1a(read_file(path))) == sum;
    }
    if (!done) {
      write_atomic(path, bytes);
      outcome.lengths_written.push_back(tau);
    }
    Json meta;
    meta["tau"] = tau;
    meta["file"] = shard_name(tau);
    meta["count"] = tau < counts.size() ? counts[tau] : 0;
    meta["fnv1a"] = sum;
    shards.push_back(std::move(meta));
  }
  Json index;
  index["format"] = kFormat;
  index["max_len"] = catalog.caps().max_len;
  index["coefficient_bits"] = catalog.caps().coefficient_bits;
  index["pruned"] = catalog.pruned();
  index["entries"] = catalog.size();
  index["shards"] = std::move(shards);
  write_atomic(dir / "index.json", index.dump(2) + "\n");
  return outcome;
}

}  // namespace

CacheOutcome save_catalog(const fs::path& dir, const TauCatalog& catalog) {
  DirLock lock(dir, true);
  return save_unlocked(dir, catalog);
}

TauCatalog load_catalog(const fs::path& dir, unsigned max_len) {
  DirLock lock(dir, false);
  return load_unlocked(dir, max_len);
}

TauCatalog cached_catalog(const fs::path& dir, const EnumerationCaps& caps, CacheOutcome* outcome) {
  DirLock lock(dir, true);
  if (auto index = read_index(dir)) {
    if ((*index)["coefficient_bits"].get<unsigned>() != caps.coefficient_bits) {
      throw Error("cached catalog in " + dir.string() + " was built with a " +
                  std::to_string((*index)["coefficient_bits"].get<unsigned>()) +
                  "-bit coefficient cap; requested " + std::to_string(caps.coefficient_bits) +
                  ". Use another cache directory or remove it.");
    }
    if ((*index)["max_len"].get<unsigned>() >= caps.max_len) {
      if (outcome) *outcome = CacheOutcome{true, {}};
      return load_unlocked(dir, caps.max_len);
    }
  }
  TauCatalog catalog = enumerate_slps(caps);
  CacheOutcome written = save_unlocked(dir, catalog);
  if (outcome) *outcome = written;
  return catalog;
}

}  // namespace ultra
