#pragma once

#include "credal/lp.hpp"
#include "credal/model.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace credal {

struct Assessment {
    Gamble gamble;
    Scalar lower;
};

/// Finite set of lower expectation assessments over one space. An empty
/// model is the vacuous (completely ignorant) one.
class LowerPrevisionModel {
public:
    explicit LowerPrevisionModel(SpacePtr space, std::vector<Assessment> assessments = {});

    const SpacePtr& space() const noexcept { return space_; }
    const std::vector<Assessment>& assessments() const noexcept { return assessments_; }
    bool empty() const noexcept { return assessments_.empty(); }

    /// Throws ModelError if `gamble` is on another space.
    void add_lower(Gamble gamble, Scalar lower);
    /// Upper expectation `upper` for f, stored as lower -upper for -f.
    void add_upper(const Gamble& gamble, const Scalar& upper);

private:
    SpacePtr space_;
    std::vector<Assessment> assessments_;
};

/// Set of probability mass functions compatible with a model. Variables
/// are the state probabilities in space order; all are non-negative. Row 0
/// is the normalisation row, followed by one `>=` row per assessment in
/// model order.
struct CredalSet {
    SpacePtr space;
    lp::Polytope region;

    bool contains(std::span<const Scalar> mu) const { return region.contains(mu); }
};

CredalSet build_credal_set(const LowerPrevisionModel& model);

/// Multipliers over assessments showing a guaranteed loss: buying every f_i
/// at P(f_i) in proportion `weights` costs `payment` but never returns more
/// than `best_gain < payment`.
struct SureLossCertificate {
    std::vector<Scalar> weights;  ///< non-negative, summing to one
    Scalar payment;               ///< sum_i weights[i] * lower[i]
    Scalar best_gain;             ///< max_x sum_i weights[i] * f_i(x)
    Scalar phase_one_value;       ///< infeasibility of the credal LP
};

class SureLossError : public std::runtime_error {
public:
    explicit SureLossError(SureLossCertificate certificate);
    const SureLossCertificate& certificate() const noexcept { return certificate_; }

private:
    SureLossCertificate certificate_;
};

/// True iff the credal set is non-empty.
bool avoids_sure_loss(const LowerPrevisionModel& model);

/// Certificate when the model incurs a sure loss, nullopt otherwise.
std::optional<SureLossCertificate> sure_loss_certificate(const LowerPrevisionModel& model);

struct ExtensionValue {
    Scalar value;
    std::vector<Scalar> witness;  ///< credal mass function attaining `value`
};

/// Minimum expectation of `g` over the credal set.
/// Throws SureLossError, or ModelError if `g` is on another space.
ExtensionValue natural_extension_lower(const LowerPrevisionModel& model, const Gamble& g);

/// Maximum expectation of `g` over the credal set.
ExtensionValue natural_extension_upper(const LowerPrevisionModel& model, const Gamble& g);

struct CoherenceGap {
    std::size_t index;  ///< position in model.assessments()
    Scalar gap;         ///< natural extension minus assessed value, >= 0
};

/// One entry per assessment, in order. Throws SureLossError.
std::vector<CoherenceGap> coherence_report(const LowerPrevisionModel& model);

bool is_coherent(const std::vector<CoherenceGap>& report);

}  // namespace credal
