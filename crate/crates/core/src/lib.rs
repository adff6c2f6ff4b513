//! Exact-arithmetic engine for Pascal's hexagrammum mysticum and the
//! Veronese multimysticum.
//!
//! Starting from six rational points on the conic `xz = y^2`, the crate
//! constructs the sixty Pascal lines and the full web of Kirkman, Steiner,
//! Cayley, Plücker and Salmon elements, runs the mutation that stacks new
//! layers of Kirkmans and Pascals on top of the base structure, and certifies
//! by exact rational computation that the 300 projective ranges living in the
//! tower coincide with the interlaced continued-fraction convergents of
//! `1 + 1/sqrt(3)` and `1 - 1/sqrt(3)`.
//!
//! All arithmetic is exact: every predicate in the crate is a crisp equality
//! of arbitrary-precision rationals. There are no tolerances anywhere.

pub mod base;
pub mod error;
pub mod labels;
pub mod mutation;
pub mod projective;
pub mod ranges;
pub mod scalar;
pub mod serial;
pub mod testing;

pub use base::{
    build_base, build_pascal, fixture_sextuple, random_sextuple, validate_general_position,
    BaseMysticum, Sextuple,
};
pub use error::{Error, Result};
pub use labels::{
    enumerate_labels, hexagon_of_pascal_label, pascal_label_of_hexagon, zeta, zeta_inv,
    HexagonWord, KirkmanLabel, LabelFamily, LetterPerm, NumberPerm, OrderedPairPair, Pair,
    PairPair, ParsedLabel, PascalLabel, Perm6, Triple,
};
pub use mutation::{InterElement, InterElements, InterLayer, Layer, Multimysticum};
pub use projective::{
    canonicalize, conic_point, cross_ratio_lines, cross_ratio_points, dependent_lines,
    dependent_points, incident, join, meet, ProjectiveLine, ProjectivePoint,
};
pub use ranges::{
    all_range_specs, extract_range, max_depth, proof_witnesses, range_coordinates, verify_all,
    veronese_sequence, Mismatch, RangeElements, RangeReport, RangeSpec, VerifySummary,
    WitnessOutcome, WitnessReport,
};
pub use scalar::{format_rational, parse_rational, ExactScalar, ExtendedScalar};
