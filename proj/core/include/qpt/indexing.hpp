#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qpt {

/* Subsystem dimensions (d_1, ..., d_nss) of a multipartite system.  The
 * flat basis ordering everywhere in this library is the mixed-radix one:
 * the last subsystem varies fastest, so flat = sum_s j_s * prod_{t>s} d_t
 * with all indices zero-based. */
class DimensionSpec {
public:
    explicit DimensionSpec(std::vector<std::size_t> dims);

    std::size_t subsystem_count() const { return dims_.size(); }
    std::size_t total_dim() const { return total_; }
    std::size_t dim(std::size_t s) const { return dims_[s]; }
    std::span<const std::size_t> dims() const { return dims_; }

    /* stride(s) = prod_{t>s} d_t, the weight of subsystem s in the flat
     * index. */
    std::size_t stride(std::size_t s) const { return strides_[s]; }

    friend bool operator==(const DimensionSpec& a, const DimensionSpec& b) {
        return a.dims_ == b.dims_;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_;
};

/* Which subsystems a partial transposition acts on; true = transposed.
 * The command line also accepts the 0/1 "ssys" encoding where 0 marks a
 * transposed subsystem and 1 an untouched one; from_ssys performs that
 * inversion and is the only place it happens. */
class TransposeMask {
public:
    explicit TransposeMask(std::vector<bool> flags);

    static TransposeMask none(std::size_t count);
    static TransposeMask all(std::size_t count);
    static TransposeMask single(std::size_t count, std::size_t s);
    static TransposeMask from_ssys(const std::vector<int>& ssys);

    std::size_t size() const { return flags_.size(); }
    bool transposed(std::size_t s) const { return flags_[s]; }
    std::size_t transposed_count() const;

private:
    std::vector<bool> flags_;
};

std::size_t flat_index(std::span<const std::size_t> multi, const DimensionSpec& spec);
std::vector<std::size_t> multi_index(std::size_t flat, const DimensionSpec& spec);

/* Allocation-free decomposition used by the hot loops; out must hold
 * spec.subsystem_count() slots. */
void multi_index_into(std::size_t flat, const DimensionSpec& spec, std::span<std::size_t> out);

}  // namespace qpt
