#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "cyclolab/error.hpp"
#include "cyclolab/number_theory.hpp"
#include "cyclolab/splitting_lab.hpp"

namespace cyclolab {

std::vector<mpq_class> ChebotarevTally::frequencies() const {
  std::vector<mpq_class> out;
  out.reserve(counts.size());
  for (std::uint64_t c : counts) {
    mpq_class q = total == 0 ? mpq_class(0)
                             : mpq_class(Integer(static_cast<unsigned long>(c)), Integer(static_cast<unsigned long>(total)));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

namespace detail {

namespace {

// Counts primes in segments [first_segment, last_segment) by residue mod m.
std::vector<std::uint64_t> sieve_segments(std::uint64_t m, std::uint64_t limit, std::uint64_t first_segment,
                                          std::uint64_t last_segment, const std::vector<std::uint64_t>& base) {
  std::vector<std::uint64_t> by_residue(m, 0);
  std::vector<char> composite(kSieveSegment);
  for (std::uint64_t s = first_segment; s < last_segment; ++s) {
    const std::uint64_t lo = s * kSieveSegment;
    const std::uint64_t hi = std::min(lo + kSieveSegment - 1, limit);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t q : base) {
      if (q * q > hi) break;
      std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
      for (std::uint64_t n = start; n <= hi; n += q) composite[n - lo] = 1;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
      if (!composite[n - lo] && m % n != 0) ++by_residue[n % m];
    }
  }
  return by_residue;
}

}  // namespace

ChebotarevTally tally_prime_classes(std::uint64_t m, std::uint64_t limit, unsigned partitions) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (partitions == 0) fail(ErrorKind::InvalidArgument, "at least one partition is required");

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint64_t> base = primes_up_to(root);
  const std::uint64_t segments = limit / kSieveSegment + 1;
  const std::uint64_t parts = std::min<std::uint64_t>(partitions, segments);

  std::vector<std::vector<std::uint64_t>> partial(parts);
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t k = 0; k < parts; ++k) {
      const std::uint64_t first = segments * k / parts;
      const std::uint64_t last = segments * (k + 1) / parts;
      workers.emplace_back([&, k, first, last] { partial[k] = sieve_segments(m, limit, first, last, base); });
    }
  }

  ChebotarevTally t;
  t.m = m;
  t.limit = limit;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (gcd_u64(r, m) != 1) continue;
    std::uint64_t c = 0;
    for (const auto& part : partial) c += part[r];
    t.classes.push_back(r);
    t.counts.push_back(c);
    t.total += c;
  }
  return t;
}

}  // namespace detail

ChebotarevTally chebotarev_sample(std::uint64_t m, std::uint64_t limit, unsigned partitions,
                                  std::uint64_t max_limit) {
  if (m < 3) fail(ErrorKind::InvalidArgument, "conductor must be at least 3");
  if (limit < m) fail(ErrorKind::InvalidArgument, "limit must be at least the conductor");
  if (limit > max_limit) {
    fail(ErrorKind::LimitExceeded,
         "limit " + std::to_string(limit) + " exceeds the sieve bound " + std::to_string(max_limit));
  }
  return detail::tally_prime_classes(m, limit, partitions);
}

}  // namespace cyclolab
