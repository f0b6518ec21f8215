#include "tnn/report.hpp"

#include <atomic>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <thread>

using nlohmann::json;

namespace tnn {

namespace {
inline std::uint32_t rotl(std::uint32_t x, int c) { return (x << c) | (x >> (32 - c)); }
}  // namespace

std::string sha1_hex(const std::string& data) {
  std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
  std::string msg = data;
  std::uint64_t bitlen = static_cast<std::uint64_t>(msg.size()) * 8;
  msg.push_back(static_cast<char>(0x80));
  while (msg.size() % 64 != 56) msg.push_back('\0');
  for (int i = 7; i >= 0; --i) msg.push_back(static_cast<char>((bitlen >> (8 * i)) & 0xff));
  for (size_t chunk = 0; chunk < msg.size(); chunk += 64) {
    std::uint32_t w[80];
    for (int t = 0; t < 16; ++t)
      w[t] = (static_cast<std::uint8_t>(msg[chunk + 4 * t]) << 24) |
             (static_cast<std::uint8_t>(msg[chunk + 4 * t + 1]) << 16) |
             (static_cast<std::uint8_t>(msg[chunk + 4 * t + 2]) << 8) |
             static_cast<std::uint8_t>(msg[chunk + 4 * t + 3]);
    for (int t = 16; t < 80; ++t) w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int t = 0; t < 80; ++t) {
      std::uint32_t f, k;
      if (t < 20) { f = (b & c) | ((~b) & d); k = 0x5A827999u; }
      else if (t < 40) { f = b ^ c ^ d; k = 0x6ED9EBA1u; }
      else if (t < 60) { f = (b & c) | (b & d) | (c & d); k = 0x8F1BBCDCu; }
      else { f = b ^ c ^ d; k = 0xCA62C1D6u; }
      std::uint32_t tmp = rotl(a, 5) + f + e + k + w[t];
      e = d; d = c; c = rotl(b, 30); b = a; a = tmp;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e;
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::uint32_t v : h)
    for (int i = 7; i >= 0; --i) out.push_back(hex[(v >> (4 * i)) & 0xf]);
  return out;
}

int thread_budget() {
  if (const char* env = std::getenv("TNNFLAG_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
    return 1;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string report_to_json(const std::vector<SuiteReport>& reports) {
  json j;
  j["schema"] = 1;
  bool all = true;
  json arr = json::array();
  for (const auto& r : reports) {
    json s;
    s["suite"] = r.suite;
    s["seed"] = r.seed;
    s["config_hash"] = r.config_hash;
    s["pass"] = r.all_pass();
    all = all && r.all_pass();
    json checks = json::array();
    for (const auto& c : r.checks) {
      json cj = {{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) cj["witness"] = c.witness;
      checks.push_back(cj);
    }
    s["checks"] = checks;
    arr.push_back(s);
  }
  j["suites"] = arr;
  j["pass"] = all;
  return j.dump(2);
}

}  // namespace tnn
