//! Chern-class calculus on manifold models: bundle operations by the
//! splitting principle, adjunction, and Pontrjagin and Stiefel-Whitney data.

mod bundle;
mod classes;
mod model;
mod ring;

pub use bundle::{
    direct_sum, dual_bundle_class, pontrjagin_of_bundle, tensor_product_class, BundleSpec,
};
pub use classes::{
    chern_numbers, monomial_label, parse_poly, partitions, pontrjagin_classes, pontrjagin_numbers,
    stiefel_whitney_classes, sw_numbers, w2_vanishes, CharNumbers, ChernNumbers,
};
pub use model::{
    complete_intersection, grassmannian_complete_intersection, projective_space, Fujiki,
    ManifoldModel, Tag,
};
pub use ring::{Ring, RingClass};
