#include "qpt/indexing.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"

namespace qpt {

DimensionSpec::DimensionSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw std::invalid_argument("dimension list must not be empty");
    for (std::size_t d : dims_)
        if (d == 0)
            throw std::invalid_argument("subsystem dimensions must be positive");
    strides_.assign(dims_.size(), 1);
    for (std::size_t s = dims_.size(); s-- > 1;) {
        if (strides_[s - 1] > std::numeric_limits<std::size_t>::max() / dims_[s])
            throw std::invalid_argument("total dimension overflows");
        strides_[s - 1] = strides_[s] * dims_[s];
    }
    if (strides_[0] > std::numeric_limits<std::size_t>::max() / dims_[0])
        throw std::invalid_argument("total dimension overflows");
    total_ = strides_[0] * dims_[0];
}

TransposeMask::TransposeMask(std::vector<bool> flags) : flags_(std::move(flags)) {
    if (flags_.empty())
        throw std::invalid_argument("mask must not be empty");
}

TransposeMask TransposeMask::none(std::size_t count) {
    return TransposeMask(std::vector<bool>(count, false));
}

TransposeMask TransposeMask::all(std::size_t count) {
    return TransposeMask(std::vector<bool>(count, true));
}

TransposeMask TransposeMask::single(std::size_t count, std::size_t s) {
    if (s >= count)
        throw std::out_of_range("subsystem index out of range");
    std::vector<bool> flags(count, false);
    flags[s] = true;
    return TransposeMask(std::move(flags));
}

TransposeMask TransposeMask::from_ssys(const std::vector<int>& ssys) {
    std::vector<bool> flags(ssys.size());
    for (std::size_t s = 0; s < ssys.size(); ++s) {
        if (ssys[s] != 0 && ssys[s] != 1)
            throw std::invalid_argument("ssys entries must be 0 or 1");
        flags[s] = (ssys[s] == 0);  // 0 marks a transposed subsystem
    }
    return TransposeMask(std::move(flags));
}

std::size_t TransposeMask::transposed_count() const {
    std::size_t n = 0;
    for (bool f : flags_)
        n += f ? 1 : 0;
    return n;
}

std::size_t flat_index(std::span<const std::size_t> multi, const DimensionSpec& spec) {
    if (multi.size() != spec.subsystem_count())
        throw std::out_of_range("multi-index length does not match the dimension list");
    std::size_t flat = 0;
    for (std::size_t s = 0; s < multi.size(); ++s) {
        if (multi[s] >= spec.dim(s))
            throw std::out_of_range("component " + std::to_string(s) + " out of range");
        flat += multi[s] * spec.stride(s);
    }
    return flat;
}

std::vector<std::size_t> multi_index(std::size_t flat, const DimensionSpec& spec) {
    if (flat >= spec.total_dim())
        throw std::out_of_range("flat index out of range");
    std::vector<std::size_t> out(spec.subsystem_count());
    multi_index_into(flat, spec, out);
    return out;
}

void multi_index_into(std::size_t flat, const DimensionSpec& spec, std::span<std::size_t> out) {
    for (std::size_t s = 0; s < spec.subsystem_count(); ++s) {
        out[s] = flat / spec.stride(s);
        flat -= out[s] * spec.stride(s);
    }
}

}  // namespace qpt
