//! Exact counts of plane curves, computed two independent ways.
//!
//! The `severi` module evaluates degrees of nodal-curve loci by splitting
//! the plane into a fan and summing over the shapes a curve can cut out on
//! the axis; the `kontsevich` and `quantum` modules count rational curves
//! of degree `d` through `3d - 1` points, once by closed-form split sums
//! and once by reducing four-point invariants through the Künneth
//! decomposition of the diagonal. The two routes agree degree by degree,
//! and both meet the fan method on the rational quartic count 620.
//!
//! All arithmetic is arbitrary-precision and exact; there is no floating
//! point anywhere in this crate.

pub mod arith;
pub mod kontsevich;
pub mod partitions;
pub mod quantum;
pub mod severi;

mod exec;
