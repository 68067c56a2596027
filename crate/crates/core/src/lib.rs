//! Singular BGG complexes on type-A Grassmannians `G(k, n)`.
//!
//! Starting from an integral weight whose coordinates repeat at most twice,
//! the crate builds the relative Hasse diagram over the correspondence space,
//! labels each vertex with its Bott-Borel-Weil direct-image degree, assembles
//! the singular complex with its jump differentials and operator orders, and
//! cross-checks the result against the regular diagram on the non-repeated
//! values (the reduced-category pattern).

pub mod bbw;
pub mod complex;
pub mod error;
pub mod hasse;
pub mod pipeline;
pub mod render;
pub mod report;
pub mod weights;

pub use bbw::{label_diagram, label_vertex, Label, LabeledDiagram};
pub use complex::{
    assemble, diamond_violations, enright_shelton_image, jump_label_violations,
    length_two_path_counts, oracle_check, shift_check, stein_cover_count, JumpArrow, OracleReport,
    SingularComplex, SingularVertex,
};
pub use error::{Error, Result};
pub use hasse::{
    build_regular_hasse, build_relative_hasse, start_vertex, Arrow, RegularDiagram,
    RelativeDiagram, RelativeVertex, VertexId,
};
pub use pipeline::{Pipeline, VerificationReport};
pub use report::JsonReport;
pub use weights::{
    analyze_singularity, compute_orbit, delete_pairs, grassmannian_length, insert_pairs, rho,
    Coord, OrbitElement, SingularityProfile, Weight,
};
