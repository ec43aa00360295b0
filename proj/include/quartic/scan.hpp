#pragma once

// Batch scan of coefficient boxes: one CSV record per pair.

#include "quartic/error.hpp"
#include "quartic/forms.hpp"
#include "quartic/oracle.hpp"
#include "quartic/random.hpp"
#include "quartic/rings.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace quartic {

enum class SpectrumFlag { Off, NotApplicable, Pass, Fail };

inline const char* to_string(SpectrumFlag f) {
  switch (f) {
    case SpectrumFlag::Off: return "off";
    case SpectrumFlag::NotApplicable: return "na";
    case SpectrumFlag::Pass: return "1";
    case SpectrumFlag::Fail: return "0";
  }
  return "?";
}

struct ScanRecord {
  DoubleTernaryForm<Integer> pair;
  Integer disc;
  BinaryCubicForm<Integer> resolvent;
  bool disc_ok = false;
  bool resolvent_ok = false;
  SpectrumFlag spectrum = SpectrumFlag::Off;

  bool healthy() const {
    return disc_ok && resolvent_ok && spectrum != SpectrumFlag::Fail;
  }
};

inline constexpr const char* kScanHeader =
    "a11,a22,a33,a12,a13,a23,b11,b22,b33,b12,b13,b23,disc,ra,rb,rc,rd,disc_ok,resolvent_ok,spectrum";

inline std::string to_csv(const ScanRecord& r) {
  std::ostringstream os;
  for (const auto& v : r.pair.A.c) os << v.str() << ',';
  for (const auto& v : r.pair.B.c) os << v.str() << ',';
  os << r.disc.str() << ',' << r.resolvent.a.str() << ',' << r.resolvent.b.str() << ',' << r.resolvent.c.str() << ','
     << r.resolvent.d.str() << ',' << (r.disc_ok ? 1 : 0) << ',' << (r.resolvent_ok ? 1 : 0) << ','
     << to_string(r.spectrum);
  return os.str();
}

inline ScanRecord scan_pair(const DoubleTernaryForm<Integer>& p, bool with_spectrum) {
  ScanRecord r;
  r.pair = p;
  auto t = quartic_ring_from_pair(p);
  r.resolvent = resolvent_cubic_form(p);
  r.disc = ring_discriminant(t);
  Integer dc = disc_binary_cubic(r.resolvent);
  Integer dr = ring_discriminant(cubic_ring_from_binary_cubic(r.resolvent));
  r.disc_ok = r.disc == dc && dc == dr;
  r.resolvent_ok = check_associativity(t).empty() && check_resolvent_identity(p, t);
  if (with_spectrum) {
    if (dc.is_zero()) {
      r.spectrum = SpectrumFlag::NotApplicable;
    } else {
      try {
        r.spectrum = verify_spectrum(p) ? SpectrumFlag::Pass : SpectrumFlag::Fail;
      } catch (const Error&) {
        r.spectrum = SpectrumFlag::Fail;
      }
    }
  }
  return r;
}

struct ScanOptions {
  long long bound = 1;
  long long count = 100;  // 0: every pair in the box
  std::uint64_t seed = 0;
  bool with_spectrum = false;
  unsigned jobs = 1;
};

inline constexpr long long kExhaustLimit = 1000000;

/// The pairs a scan visits, in output order.
inline std::vector<DoubleTernaryForm<Integer>> scan_pairs(const ScanOptions& opt) {
  if (opt.bound < 1) throw InvalidInput("bound: must be at least 1");
  if (opt.count < 0) throw InvalidInput("count: must be non-negative");
  std::vector<DoubleTernaryForm<Integer>> pairs;
  if (opt.count > 0) {
    std::mt19937_64 rng(opt.seed);
    pairs.reserve(static_cast<std::size_t>(opt.count));
    for (long long n = 0; n < opt.count; ++n) pairs.push_back(random_pair(rng, opt.bound));
    return pairs;
  }
  const long long width = 2 * opt.bound + 1;
  long long total = 1;
  for (int i = 0; i < 12; ++i) {
    total *= width;
    if (total > kExhaustLimit)
      throw InvalidInput("count: 0 exhausts the box only when it has at most " + std::to_string(kExhaustLimit) +
                         " pairs");
  }
  pairs.reserve(static_cast<std::size_t>(total));
  for (long long code = 0; code < total; ++code) {
    DoubleTernaryForm<Integer> p;
    long long c = code;
    // Slot a11 is the most significant digit.
    for (int s = 11; s >= 0; --s) {
      Integer v = c % width - opt.bound;
      c /= width;
      (s < 6 ? p.A.c[static_cast<std::size_t>(s)] : p.B.c[static_cast<std::size_t>(s - 6)]) = v;
    }
    pairs.push_back(p);
  }
  return pairs;
}

/// Runs the scan on opt.jobs threads; records come back in input order.
inline std::vector<ScanRecord> run_scan(const ScanOptions& opt) {
  auto pairs = scan_pairs(opt);
  std::vector<ScanRecord> out(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) out[i] = scan_pair(pairs[i], opt.with_spectrum);
  };
  unsigned jobs = std::max(1u, opt.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

inline std::string scan_csv(const std::vector<ScanRecord>& records) {
  std::string s = kScanHeader;
  s += '\n';
  for (const auto& r : records) {
    s += to_csv(r);
    s += '\n';
  }
  return s;
}

}  // namespace quartic
