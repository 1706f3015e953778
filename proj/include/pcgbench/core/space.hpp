#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcgbench/core/rng.hpp"

namespace pcgb {

/// A tree of integers. Leaves hold one integer; inner nodes hold an ordered
/// list of children. Grids nest row-major: a Grid2D value is a list of
/// `height` rows, each a list of `width` cells.
class Value {
public:
    Value() : node_(std::int64_t{0}) {}
    Value(std::int64_t leaf) : node_(leaf) {}  // NOLINT(google-explicit-constructor)
    Value(int leaf) : node_(std::int64_t{leaf}) {}  // NOLINT(google-explicit-constructor)

    static Value list(std::vector<Value> items) {
        Value v;
        v.node_ = std::move(items);
        return v;
    }

    [[nodiscard]] bool is_leaf() const { return std::holds_alternative<std::int64_t>(node_); }
    [[nodiscard]] std::int64_t leaf() const { return std::get<std::int64_t>(node_); }
    void set_leaf(std::int64_t v) { node_ = v; }

    [[nodiscard]] const std::vector<Value>& items() const { return std::get<std::vector<Value>>(node_); }
    [[nodiscard]] std::vector<Value>& items() { return std::get<std::vector<Value>>(node_); }
    [[nodiscard]] std::size_t size() const { return is_leaf() ? 0 : items().size(); }
    const Value& operator[](std::size_t i) const { return items()[i]; }
    Value& operator[](std::size_t i) { return items()[i]; }

    friend bool operator==(const Value& a, const Value& b) { return a.node_ == b.node_; }

private:
    std::variant<std::int64_t, std::vector<Value>> node_;
};

/// Thrown by flatten/unflatten when a vector cannot be mapped onto a space.
class SpaceError : public std::runtime_error {
public:
    SpaceError(const std::string& what, std::size_t leaf_index)
        : std::runtime_error(what), leaf_index_(leaf_index) {}
    [[nodiscard]] std::size_t leaf_index() const { return leaf_index_; }

private:
    std::size_t leaf_index_;
};

/// Inclusive integer bounds of one leaf.
struct LeafBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    [[nodiscard]] std::int64_t cardinality() const { return hi - lo + 1; }
    [[nodiscard]] bool contains(std::int64_t v) const { return v >= lo && v <= hi; }
};

struct SpaceField;

/// Recursive description of a possibility space. Immutable; copies share
/// their children.
class SpaceDescriptor {
public:
    enum class Kind { discrete, range, array, grid2d, grid3d, record };

    using Field = struct SpaceField;

    static SpaceDescriptor discrete(std::int64_t cardinality);
    static SpaceDescriptor range(std::int64_t lo, std::int64_t hi);
    static SpaceDescriptor array(SpaceDescriptor element, std::size_t length);
    static SpaceDescriptor grid2d(SpaceDescriptor element, std::size_t width, std::size_t height);
    static SpaceDescriptor grid3d(SpaceDescriptor element, std::size_t width, std::size_t height,
                                  std::size_t depth);
    static SpaceDescriptor record(std::vector<Field> fields);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_leaf() const { return kind_ == Kind::discrete || kind_ == Kind::range; }
    /// Bounds of a leaf space (Discrete(k) is [0, k-1]).
    [[nodiscard]] LeafBounds bounds() const { return {lo_, hi_}; }
    /// Dimensions in declaration order: {length}, {width, height} or {width, height, depth}.
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    [[nodiscard]] const SpaceDescriptor& element() const { return *element_; }
    [[nodiscard]] const std::vector<Field>& fields() const { return *fields_; }
    /// Index of a record field by name; throws std::out_of_range when absent.
    [[nodiscard]] std::size_t field_index(const std::string& name) const;

    /// Bounds of every leaf in depth-first order.
    [[nodiscard]] const std::vector<LeafBounds>& leaves() const { return *leaves_; }
    [[nodiscard]] std::size_t leaf_count() const { return leaves_->size(); }

    /// Compact human-readable form, e.g. "Grid2D(Discrete(2),14,14)".
    [[nodiscard]] std::string to_string() const;

private:
    SpaceDescriptor() = default;
    void finalize();

    Kind kind_ = Kind::discrete;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
    std::vector<std::size_t> dims_;
    std::shared_ptr<const SpaceDescriptor> element_;
    std::shared_ptr<const std::vector<Field>> fields_;
    std::shared_ptr<const std::vector<LeafBounds>> leaves_;
};

/// One named field of a Record space.
struct SpaceField {
    std::string name;
    SpaceDescriptor space;
};

/// Uniform independent draw of every leaf.
[[nodiscard]] Value space_sample(const SpaceDescriptor& space, Rng& rng);

/// True iff the value has the space's structure and every leaf is in range.
[[nodiscard]] bool space_contains(const SpaceDescriptor& space, const Value& value);

/// Leaves in depth-first order. Throws SpaceError if the value is not contained.
[[nodiscard]] std::vector<std::int64_t> space_flatten(const SpaceDescriptor& space, const Value& value);

/// Inverse of space_flatten. Throws SpaceError naming the offending leaf.
[[nodiscard]] Value space_unflatten(const SpaceDescriptor& space, std::span<const std::int64_t> flat);

/// Each leaf is resampled uniformly from its leaf space with probability `rate`.
[[nodiscard]] Value space_mutate(const SpaceDescriptor& space, const Value& value, double rate, Rng& rng);

/// Uniform crossover: each leaf from `a` or `b` with probability 1/2.
[[nodiscard]] Value space_mix(const SpaceDescriptor& space, const Value& a, const Value& b, Rng& rng);

/// Comma-joined flat form, used for hashing and serialization only.
[[nodiscard]] std::string space_canonical_string(const SpaceDescriptor& space, const Value& value);

}  // namespace pcgb
