#pragma once

#include <cstddef>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace parthooks {

/* A partition of n: weakly decreasing positive parts summing to n.
 * The empty partition is the unique partition of 0.
 */
class partition {
  public:
    partition() = default;
    explicit partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned content() const noexcept { return content_; }
    unsigned part_count() const noexcept { return static_cast<unsigned>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /* k-th part, 1-based; parts beyond the last are 0 */
    unsigned part(unsigned k) const noexcept {
        return (k >= 1 && k <= parts_.size()) ? parts_[k - 1] : 0;
    }

    bool operator==(const partition&) const = default;

  private:
    std::vector<unsigned> parts_;
    unsigned content_ = 0;

    friend class partition_iterator;
};

std::ostream& operator<<(std::ostream& os, const partition& p);

partition conjugate(const partition& p);

/* Walks the partitions of n in reverse lexicographic order on part lists:
 * (n), (n-1,1), ..., (1,...,1). n = 0 yields just the empty partition.
 * Successor: strip trailing 1s, decrement the last remaining part, refill
 * the stripped weight greedily with parts capped at the decremented value.
 */
class partition_iterator {
  public:
    using value_type = partition;
    using difference_type = std::ptrdiff_t;

    partition_iterator() = default; /* past-the-end */
    explicit partition_iterator(unsigned n);

    const partition& operator*() const noexcept { return current_; }
    const partition* operator->() const noexcept { return &current_; }

    partition_iterator& operator++();
    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

  private:
    partition current_;
    bool done_ = true;
};

class partition_range {
  public:
    explicit partition_range(unsigned n) noexcept : n_(n) {}
    partition_iterator begin() const { return partition_iterator(n_); }
    std::default_sentinel_t end() const noexcept { return {}; }

  private:
    unsigned n_;
};

inline partition_range enumerate_partitions(unsigned n) { return partition_range(n); }

/* Multiplicity view of a partition inside the ambient box 1..n: count(i) is
 * the number of parts equal to i. Requires |p| == n.
 */
class multiplicity_vector {
  public:
    multiplicity_vector(const partition& p, unsigned n);
    explicit multiplicity_vector(const partition& p) : multiplicity_vector(p, p.content()) {}

    unsigned ambient() const noexcept { return static_cast<unsigned>(counts_.size()); }
    unsigned count(unsigned i) const noexcept {
        return (i >= 1 && i <= counts_.size()) ? counts_[i - 1] : 0;
    }
    const std::vector<unsigned>& counts() const noexcept { return counts_; }

    partition to_partition() const;

    bool operator==(const multiplicity_vector&) const = default;

  private:
    std::vector<unsigned> counts_;
};

/* count(i) = number of distinct part sizes occurring exactly i times */
class gamma_vector {
  public:
    explicit gamma_vector(const multiplicity_vector& nu);

    unsigned ambient() const noexcept { return static_cast<unsigned>(counts_.size()); }
    unsigned count(unsigned i) const noexcept {
        return (i >= 1 && i <= counts_.size()) ? counts_[i - 1] : 0;
    }
    const std::vector<unsigned>& counts() const noexcept { return counts_; }

    bool operator==(const gamma_vector&) const = default;

  private:
    std::vector<unsigned> counts_;
};

/* Hook of a cell in the Young diagram: arm = cells to the right,
 * leg = cells below; hook length = arm + leg + 1.
 */
struct hook_type {
    unsigned arm = 0;
    unsigned leg = 0;

    unsigned length() const noexcept { return arm + leg + 1; }
    bool operator==(const hook_type&) const = default;
};

unsigned hook_type_count(const partition& p, hook_type t);
unsigned hook_length_count(const partition& p, unsigned k);

/* histogram[k-1][alpha] = number of cells of p with hook length k and arm
 * alpha, for 1 <= k <= k_max, 0 <= alpha <= k-1
 */
std::vector<std::vector<unsigned>> hook_type_histogram(const partition& p, unsigned k_max);

/* number of part sizes i with count(i) >= k */
unsigned count_multiplicity_at_least(const multiplicity_vector& nu, unsigned k);

/* profile[k-1] = count_multiplicity_at_least(nu, k) for k = 1..ambient,
 * computed in one pass
 */
std::vector<unsigned> multiplicity_at_least_profile(const multiplicity_vector& nu);

} // namespace parthooks
