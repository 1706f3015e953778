#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcgbench/core/info.hpp"
#include "pcgbench/core/params.hpp"
#include "pcgbench/core/space.hpp"

namespace pcgb {

/// One rendered output file of an artifact.
struct RenderedFile {
    std::string extension;  // "png" or "txt"
    std::string bytes;
    std::string suffix;     // optional qualifier appended to the file stem, e.g. "voxels"
};

/// A generative problem. Evaluators read InfoRecords only; info() is the
/// single place raw content is parsed. Implementations are stateless after
/// construction and safe to share across threads.
class Problem {
public:
    virtual ~Problem() = default;

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const SpaceDescriptor& content_space() const { return content_space_; }
    [[nodiscard]] const SpaceDescriptor& control_space() const { return control_space_; }
    [[nodiscard]] const VariantParams& params() const { return params_; }

    [[nodiscard]] virtual InfoRecord info(const Value& content) const = 0;

    /// Per-constraint scores in [0,1]; the artifact is feasible iff all are 1.
    [[nodiscard]] virtual std::vector<double> quality_subscores(const InfoRecord& info) const = 0;

    /// Mean of the subscores, exactly 1 iff every subscore is 1.
    [[nodiscard]] double quality(const InfoRecord& info) const;

    /// Pairwise dissimilarity in [0,1]: 0 for identical artifacts, symmetric.
    [[nodiscard]] virtual double diversity(const InfoRecord& a, const InfoRecord& b) const = 0;

    /// Closeness in [0,1] of the artifact's statistics to a control value.
    [[nodiscard]] virtual double controllability(const InfoRecord& info, const Value& control) const = 0;

    [[nodiscard]] virtual std::vector<RenderedFile> render(const Value& content) const = 0;

protected:
    Problem(std::string name, VariantParams params, SpaceDescriptor content, SpaceDescriptor control)
        : name_(std::move(name)),
          params_(std::move(params)),
          content_space_(std::move(content)),
          control_space_(std::move(control)) {}

private:
    std::string name_;
    VariantParams params_;
    SpaceDescriptor content_space_;
    SpaceDescriptor control_space_;
};

/// Mean of subscores with the feasibility rule: 1 only when all are 1.
[[nodiscard]] double combine_subscores(std::span<const double> subscores);

/// 1 inside [window_lo, window_hi]; outside, linear decay reaching 0 at
/// lo_bound (below) or hi_bound (above). Always < 1 outside the window.
[[nodiscard]] double window_closeness(double value, double window_lo, double window_hi, double lo_bound,
                                      double hi_bound);

/// Closeness of an object count to exactly `target` (typically 1), decaying
/// to 0 at 0 and at `max_count`.
[[nodiscard]] double count_closeness(std::int64_t count, std::int64_t target_lo, std::int64_t target_hi,
                                     std::int64_t max_count);

}  // namespace pcgb
