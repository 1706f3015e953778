#include "pcgbench/core/space.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace pcgb {

namespace {

// Grids nest as arrays of rows (and layers); this returns the descriptor of
// one child of a composite space together with the child count.
struct Children {
    const SpaceDescriptor* uniform = nullptr;  // null for records
    std::size_t count = 0;
};

void collect_leaves(const SpaceDescriptor& s, std::vector<LeafBounds>& out);

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

void collect_leaves(const SpaceDescriptor& s, std::vector<LeafBounds>& out) {
    if (s.is_leaf()) {
        out.push_back(s.bounds());
        return;
    }
    if (s.kind() == SpaceDescriptor::Kind::record) {
        for (const auto& f : s.fields()) collect_leaves(f.space, out);
        return;
    }
    const auto& inner = s.element().leaves();
    const std::size_t n = product(s.dims());
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), inner.begin(), inner.end());
}

bool contains_rec(const SpaceDescriptor& s, const Value& v);

// Checks a nested list of lists with the given dims (outermost last).
bool contains_nested(const SpaceDescriptor& elem, const std::vector<std::size_t>& dims, std::size_t level,
                     const Value& v) {
    if (v.is_leaf() || v.size() != dims[level]) return false;
    for (const auto& child : v.items()) {
        if (level == 0) {
            if (!contains_rec(elem, child)) return false;
        } else if (!contains_nested(elem, dims, level - 1, child)) {
            return false;
        }
    }
    return true;
}

bool contains_rec(const SpaceDescriptor& s, const Value& v) {
    if (s.is_leaf()) return v.is_leaf() && s.bounds().contains(v.leaf());
    if (s.kind() == SpaceDescriptor::Kind::record) {
        const auto& fields = s.fields();
        if (v.is_leaf() || v.size() != fields.size()) return false;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (!contains_rec(fields[i].space, v[i])) return false;
        }
        return true;
    }
    return contains_nested(s.element(), s.dims(), s.dims().size() - 1, v);
}

void flatten_rec(const SpaceDescriptor& s, const Value& v, std::vector<std::int64_t>& out);

void flatten_nested(const SpaceDescriptor& elem, std::size_t level, const Value& v, std::vector<std::int64_t>& out) {
    for (const auto& child : v.items()) {
        if (level == 0) {
            flatten_rec(elem, child, out);
        } else {
            flatten_nested(elem, level - 1, child, out);
        }
    }
}

void flatten_rec(const SpaceDescriptor& s, const Value& v, std::vector<std::int64_t>& out) {
    if (s.is_leaf()) {
        out.push_back(v.leaf());
        return;
    }
    if (s.kind() == SpaceDescriptor::Kind::record) {
        for (std::size_t i = 0; i < s.fields().size(); ++i) flatten_rec(s.fields()[i].space, v[i], out);
        return;
    }
    flatten_nested(s.element(), s.dims().size() - 1, v, out);
}

Value unflatten_rec(const SpaceDescriptor& s, std::span<const std::int64_t> flat, std::size_t& pos);

Value unflatten_nested(const SpaceDescriptor& elem, const std::vector<std::size_t>& dims, std::size_t level,
                       std::span<const std::int64_t> flat, std::size_t& pos) {
    std::vector<Value> items;
    items.reserve(dims[level]);
    for (std::size_t i = 0; i < dims[level]; ++i) {
        items.push_back(level == 0 ? unflatten_rec(elem, flat, pos)
                                   : unflatten_nested(elem, dims, level - 1, flat, pos));
    }
    return Value::list(std::move(items));
}

Value unflatten_rec(const SpaceDescriptor& s, std::span<const std::int64_t> flat, std::size_t& pos) {
    if (s.is_leaf()) {
        const std::int64_t v = flat[pos];
        if (!s.bounds().contains(v)) {
            throw SpaceError(fmt::format("leaf {} value {} outside [{}, {}]", pos, v, s.bounds().lo, s.bounds().hi),
                             pos);
        }
        ++pos;
        return Value(v);
    }
    if (s.kind() == SpaceDescriptor::Kind::record) {
        std::vector<Value> items;
        items.reserve(s.fields().size());
        for (const auto& f : s.fields()) items.push_back(unflatten_rec(f.space, flat, pos));
        return Value::list(std::move(items));
    }
    return unflatten_nested(s.element(), s.dims(), s.dims().size() - 1, flat, pos);
}

}  // namespace

SpaceDescriptor SpaceDescriptor::discrete(std::int64_t cardinality) {
    if (cardinality < 1) throw std::invalid_argument("Discrete: cardinality must be >= 1");
    SpaceDescriptor s;
    s.kind_ = Kind::discrete;
    s.lo_ = 0;
    s.hi_ = cardinality - 1;
    s.finalize();
    return s;
}

SpaceDescriptor SpaceDescriptor::range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Range: lo must be <= hi");
    SpaceDescriptor s;
    s.kind_ = Kind::range;
    s.lo_ = lo;
    s.hi_ = hi;
    s.finalize();
    return s;
}

SpaceDescriptor SpaceDescriptor::array(SpaceDescriptor element, std::size_t length) {
    if (length < 1) throw std::invalid_argument("Array: length must be >= 1");
    SpaceDescriptor s;
    s.kind_ = Kind::array;
    s.dims_ = {length};
    s.element_ = std::make_shared<const SpaceDescriptor>(std::move(element));
    s.finalize();
    return s;
}

SpaceDescriptor SpaceDescriptor::grid2d(SpaceDescriptor element, std::size_t width, std::size_t height) {
    if (width < 1 || height < 1) throw std::invalid_argument("Grid2D: dimensions must be >= 1");
    SpaceDescriptor s;
    s.kind_ = Kind::grid2d;
    s.dims_ = {width, height};
    s.element_ = std::make_shared<const SpaceDescriptor>(std::move(element));
    s.finalize();
    return s;
}

SpaceDescriptor SpaceDescriptor::grid3d(SpaceDescriptor element, std::size_t width, std::size_t height,
                                        std::size_t depth) {
    if (width < 1 || height < 1 || depth < 1) throw std::invalid_argument("Grid3D: dimensions must be >= 1");
    SpaceDescriptor s;
    s.kind_ = Kind::grid3d;
    s.dims_ = {width, height, depth};
    s.element_ = std::make_shared<const SpaceDescriptor>(std::move(element));
    s.finalize();
    return s;
}

SpaceDescriptor SpaceDescriptor::record(std::vector<Field> fields) {
    if (fields.empty()) throw std::invalid_argument("Record: needs at least one field");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (fields[i].name == fields[j].name) throw std::invalid_argument("Record: duplicate field " + fields[i].name);
        }
    }
    SpaceDescriptor s;
    s.kind_ = Kind::record;
    s.fields_ = std::make_shared<const std::vector<Field>>(std::move(fields));
    s.finalize();
    return s;
}

std::size_t SpaceDescriptor::field_index(const std::string& name) const {
    const auto& fs = fields();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].name == name) return i;
    }
    throw std::out_of_range("no record field named " + name);
}

void SpaceDescriptor::finalize() {
    auto leaves = std::make_shared<std::vector<LeafBounds>>();
    collect_leaves(*this, *leaves);
    leaves_ = std::move(leaves);
}

std::string SpaceDescriptor::to_string() const {
    switch (kind_) {
        case Kind::discrete: return fmt::format("Discrete({})", hi_ + 1);
        case Kind::range: return fmt::format("Range({},{})", lo_, hi_);
        case Kind::array: return fmt::format("Array({},{})", element_->to_string(), dims_[0]);
        case Kind::grid2d: return fmt::format("Grid2D({},{},{})", element_->to_string(), dims_[0], dims_[1]);
        case Kind::grid3d:
            return fmt::format("Grid3D({},{},{},{})", element_->to_string(), dims_[0], dims_[1], dims_[2]);
        case Kind::record: {
            std::string out = "Record{";
            for (std::size_t i = 0; i < fields_->size(); ++i) {
                if (i) out += ", ";
                out += (*fields_)[i].name + ":" + (*fields_)[i].space.to_string();
            }
            return out + "}";
        }
    }
    return {};
}

Value space_sample(const SpaceDescriptor& space, Rng& rng) {
    std::vector<std::int64_t> flat;
    flat.reserve(space.leaf_count());
    for (const auto& b : space.leaves()) flat.push_back(rng.uniform_int(b.lo, b.hi));
    return space_unflatten(space, flat);
}

bool space_contains(const SpaceDescriptor& space, const Value& value) { return contains_rec(space, value); }

std::vector<std::int64_t> space_flatten(const SpaceDescriptor& space, const Value& value) {
    if (!contains_rec(space, value)) {
        // Locate the first offending leaf for the diagnostic when the shape is right.
        std::size_t index = 0;
        try {
            std::vector<std::int64_t> partial;
            partial.reserve(space.leaf_count());
            flatten_rec(space, value, partial);
            for (; index < partial.size(); ++index) {
                if (!space.leaves()[index].contains(partial[index])) break;
            }
        } catch (const std::bad_variant_access&) {
        }
        throw SpaceError(fmt::format("value not contained in {} (leaf {})", space.to_string(), index), index);
    }
    std::vector<std::int64_t> out;
    out.reserve(space.leaf_count());
    flatten_rec(space, value, out);
    return out;
}

Value space_unflatten(const SpaceDescriptor& space, std::span<const std::int64_t> flat) {
    if (flat.size() != space.leaf_count()) {
        const std::size_t at = std::min(flat.size(), space.leaf_count());
        throw SpaceError(fmt::format("flat length {} does not match leaf count {} (leaf {})", flat.size(),
                                     space.leaf_count(), at),
                         at);
    }
    std::size_t pos = 0;
    return unflatten_rec(space, flat, pos);
}

Value space_mutate(const SpaceDescriptor& space, const Value& value, double rate, Rng& rng) {
    auto flat = space_flatten(space, value);
    const auto& leaves = space.leaves();
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (rng.bernoulli(rate)) flat[i] = rng.uniform_int(leaves[i].lo, leaves[i].hi);
    }
    return space_unflatten(space, flat);
}

Value space_mix(const SpaceDescriptor& space, const Value& a, const Value& b, Rng& rng) {
    auto fa = space_flatten(space, a);
    const auto fb = space_flatten(space, b);
    for (std::size_t i = 0; i < fa.size(); ++i) {
        if (rng.bernoulli(0.5)) fa[i] = fb[i];
    }
    return space_unflatten(space, fa);
}

std::string space_canonical_string(const SpaceDescriptor& space, const Value& value) {
    return fmt::format("{}", fmt::join(space_flatten(space, value), ","));
}

}  // namespace pcgb
