#include "qcommute/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace qcommute {

Partition Partition::from_multiplicities(std::vector<unsigned> multiplicities) {
  while (!multiplicities.empty() && multiplicities.back() == 0) {
    multiplicities.pop_back();
  }
  Partition p;
  p.mult_ = std::move(multiplicities);
  return p;
}

Partition Partition::from_parts(const std::vector<unsigned>& parts) {
  std::vector<unsigned> mult;
  for (unsigned part : parts) {
    if (part == 0) throw std::invalid_argument("partition parts must be positive");
    if (part > mult.size()) mult.resize(part, 0);
    ++mult[part - 1];
  }
  return from_multiplicities(std::move(mult));
}

unsigned Partition::total() const {
  unsigned n = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    n += static_cast<unsigned>(i + 1) * mult_[i];
  }
  return n;
}

unsigned Partition::num_parts() const {
  unsigned c = 0;
  for (unsigned m : mult_) c += m;
  return c;
}

unsigned Partition::max_part() const {
  return static_cast<unsigned>(mult_.size());
}

unsigned Partition::multiplicity(unsigned part_size) const {
  if (part_size == 0 || part_size > mult_.size()) return 0;
  return mult_[part_size - 1];
}

std::vector<unsigned> Partition::parts() const {
  std::vector<unsigned> out;
  for (std::size_t i = mult_.size(); i-- > 0;) {
    for (unsigned c = 0; c < mult_[i]; ++c) out.push_back(static_cast<unsigned>(i + 1));
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  const auto ps = parts();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ",";
    os << ps[i];
  }
  os << ")";
  return os.str();
}

namespace {

void visit_partitions(unsigned part_size, unsigned remaining,
                      std::vector<unsigned>& mult,
                      const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition::from_multiplicities(mult));
    return;
  }
  if (part_size > remaining) return;
  for (unsigned count = 0; count * part_size <= remaining; ++count) {
    mult.push_back(count);
    visit_partitions(part_size + 1, remaining - count * part_size, mult, fn);
    mult.pop_back();
  }
}

}  // namespace

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn) {
  std::vector<unsigned> mult;
  visit_partitions(1, n, mult, fn);
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::uint64_t partition_count(unsigned n) {
  // Euler's pentagonal recurrence.
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    std::uint64_t total = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned g1 = k * (3 * k - 1) / 2;
      const unsigned g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      const bool plus = k % 2 == 1;
      if (plus) total += p[i - g1];
      else total -= p[i - g1];
      if (g2 <= i) {
        if (plus) total += p[i - g2];
        else total -= p[i - g2];
      }
    }
    p[i] = total;
  }
  return p[n];
}

}  // namespace qcommute
