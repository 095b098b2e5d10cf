//! Finite frames (finite distributive lattices) and their homomorphisms.
//!
//! * [`poset`], [`frame`], [`canon`]: orders, lattice tables, Birkhoff duality
//!   and canonical forms.
//! * [`map`], [`hom`]: frame maps, hom-set enumeration, points, automorphisms,
//!   reconstruction from arrows out of the Sierpinski frame, generator tests.
//! * [`coproduct`]: `A + B` as C-ideals of `A × B`, injections, sums of arrows
//!   and the codiagonal.
//! * [`census`]: every frame up to a size bound with its invariants.

pub mod canon;
pub mod census;
pub mod cli;
pub mod coproduct;
pub mod error;
pub mod format;
pub mod frame;
pub mod hom;
pub mod map;
pub mod poset;

pub use canon::{canonical_form, iso, Certificate};
pub use coproduct::{codiagonal, coproduct, sum_of_maps, CoproductFrame};
pub use error::{Error, Result};
pub use frame::{
    downset_frame, frame_from_covers, join_irreducibles, lattice_tables, standard_frame, Frame, StandardFrame,
};
pub use hom::{arr_s_frame, automorphisms, endomorphisms, enumerate_homs, points, separating_arrow, HomSet};
pub use map::{check_frame_map, FrameMap};
pub use poset::Poset;
