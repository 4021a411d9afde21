#include <parthooks/partition.hpp>

#include <limits>
#include <ostream>
#include <stdexcept>

namespace parthooks {

partition::partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    unsigned long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        sum += parts_[i];
    }
    if (sum > std::numeric_limits<unsigned>::max())
        throw std::overflow_error("partition: content does not fit in unsigned");
    content_ = static_cast<unsigned>(sum);
}

std::ostream& operator<<(std::ostream& os, const partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            os << ',';
        os << p.parts()[i];
    }
    return os << ')';
}

partition conjugate(const partition& p) {
    if (p.empty())
        return partition{};
    std::vector<unsigned> cols(p.parts()[0], 0);
    for (unsigned part : p.parts())
        for (unsigned j = 0; j < part; ++j)
            ++cols[j];
    return partition(std::move(cols));
}

partition_iterator::partition_iterator(unsigned n) : done_(false) {
    if (n > 0)
        current_.parts_.assign(1, n);
    current_.content_ = n;
}

partition_iterator& partition_iterator::operator++() {
    auto& a = current_.parts_;
    unsigned rem = 0;
    while (!a.empty() && a.back() == 1) {
        a.pop_back();
        ++rem;
    }
    if (a.empty()) {
        done_ = true;
        return *this;
    }
    a.back() -= 1;
    rem += 1;
    const unsigned cap = a.back();
    a.insert(a.end(), rem / cap, cap);
    if (rem % cap)
        a.push_back(rem % cap);
    return *this;
}

multiplicity_vector::multiplicity_vector(const partition& p, unsigned n) : counts_(n, 0) {
    if (p.content() != n)
        throw std::invalid_argument("multiplicity_vector: partition content differs from n");
    for (unsigned part : p.parts())
        ++counts_[part - 1]; /* part <= n since the parts sum to n */
}

partition multiplicity_vector::to_partition() const {
    std::vector<unsigned> parts;
    for (unsigned i = ambient(); i >= 1; --i)
        parts.insert(parts.end(), counts_[i - 1], i);
    return partition(std::move(parts));
}

gamma_vector::gamma_vector(const multiplicity_vector& nu) : counts_(nu.ambient(), 0) {
    for (unsigned c : nu.counts())
        if (c >= 1)
            ++counts_[c - 1]; /* c <= n: no size repeats more than n times */
}

unsigned hook_type_count(const partition& p, hook_type t) {
    const auto& rows = p.parts();
    const auto cols = conjugate(p).parts();
    unsigned count = 0;
    /* in row i the arm determines the column: j = lambda_i - arm */
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < t.arm + 1)
            continue;
        const unsigned j = rows[i] - t.arm;
        const unsigned leg = cols[j - 1] - static_cast<unsigned>(i + 1);
        if (leg == t.leg)
            ++count;
    }
    return count;
}

unsigned hook_length_count(const partition& p, unsigned k) {
    const auto& rows = p.parts();
    const auto cols = conjugate(p).parts();
    unsigned count = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (unsigned j = 1; j <= rows[i]; ++j) {
            const unsigned arm = rows[i] - j;
            const unsigned leg = cols[j - 1] - static_cast<unsigned>(i + 1);
            if (arm + leg + 1 == k)
                ++count;
        }
    return count;
}

std::vector<std::vector<unsigned>> hook_type_histogram(const partition& p, unsigned k_max) {
    std::vector<std::vector<unsigned>> hist(k_max);
    for (unsigned k = 1; k <= k_max; ++k)
        hist[k - 1].assign(k, 0);
    const auto& rows = p.parts();
    const auto cols = conjugate(p).parts();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (unsigned j = 1; j <= rows[i]; ++j) {
            const unsigned arm = rows[i] - j;
            const unsigned leg = cols[j - 1] - static_cast<unsigned>(i + 1);
            const unsigned len = arm + leg + 1;
            if (len <= k_max)
                ++hist[len - 1][arm];
        }
    return hist;
}

unsigned count_multiplicity_at_least(const multiplicity_vector& nu, unsigned k) {
    unsigned count = 0;
    for (unsigned c : nu.counts())
        if (c >= k)
            ++count;
    return count;
}

std::vector<unsigned> multiplicity_at_least_profile(const multiplicity_vector& nu) {
    const unsigned n = nu.ambient();
    std::vector<unsigned> profile(n, 0);
    for (unsigned c : nu.counts())
        if (c >= 1)
            ++profile[c - 1]; /* histogram of multiplicities first */
    for (unsigned k = n; k >= 2; --k)
        profile[k - 2] += profile[k - 1]; /* suffix sums: >= k-1 includes >= k */
    return profile;
}

} // namespace parthooks
