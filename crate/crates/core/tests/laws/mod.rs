//! Law suites shared by the per-crate tests and the acceptance target.
//! Each function panics with a description of the first violation.

#![allow(dead_code)]

pub mod fox;
pub mod group_ring;
pub mod intpoly;
pub mod norm;
pub mod poly;
