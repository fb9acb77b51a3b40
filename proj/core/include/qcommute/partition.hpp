#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcommute {

// Integer partition stored by part multiplicities: multiplicities()[i] is
// the number of parts of size i+1.  The empty partition (of 0) is valid.
class Partition {
 public:
  Partition() = default;
  static Partition from_multiplicities(std::vector<unsigned> multiplicities);
  static Partition from_parts(const std::vector<unsigned>& parts);

  unsigned total() const;     // the partitioned integer
  unsigned num_parts() const;
  unsigned max_part() const;  // 0 for the empty partition
  unsigned multiplicity(unsigned part_size) const;  // parts of exactly that size
  const std::vector<unsigned>& multiplicities() const { return mult_; }
  std::vector<unsigned> parts() const;  // descending

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.mult_ == b.mult_;
  }

  std::string to_string() const;  // "(3,1,1)"; "()" for empty

 private:
  std::vector<unsigned> mult_;  // no trailing zeros
};

// Visits every partition of n exactly once, in lexicographically ascending
// order of the multiplicity vector (multiplicity of 1-parts varies slowest).
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> partitions_of(unsigned n);

// p(n), the number of partitions.
std::uint64_t partition_count(unsigned n);

}  // namespace qcommute
