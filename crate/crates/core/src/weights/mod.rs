//! Classical and refined weight distributions, locality, and generalized
//! Hamming weights.

mod hierarchy;
mod locality;
mod refined;

pub use hierarchy::{
    generalized_weights, is_optimal_lrc, mu_from_dual, mu_parameters, weight_hierarchy, GeneralizedWeightHierarchy,
    OptimalityVerdict,
};
pub use locality::{
    is_rdelta_lrc, locality_profile, prop41_dual_mass, smallest_r_for_delta, DualMass, LocalityProfile, RDeltaVerdict,
    RepairConvention, SUBSET_SEARCH_CAP,
};
pub use refined::{
    cst_cardinality, lemma33_downlevel, refined_weight_distribution, weight_distribution, RefinedWeightTable,
    SupportHistogram, WeightDistribution,
};
