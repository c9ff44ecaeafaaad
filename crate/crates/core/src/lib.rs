//! Exact computations around Conway–Coxeter frieze patterns: continuants,
//! triangulated polygons, positive and negative continued fractions, the
//! Farey graph and words in `SL(2, Z)`.
//!
//! All arithmetic is on big integers and rationals. Floats only appear when
//! an SVG is drawn.
//!
//! ```
//! use friezes::{expand_negative, expand_positive, ExtRational};
//!
//! let x: ExtRational = "7/5".parse().unwrap();
//! assert_eq!(expand_positive(&x).unwrap().to_string(), "[1,2,1,1]");
//! assert_eq!(expand_negative(&x).unwrap().to_string(), "[[2,2,3]]");
//! ```

pub mod arith;
pub mod cli;
pub mod contfrac;
pub mod continuants;
pub mod error;
pub mod frieze;
pub mod modular;
pub mod render;
pub mod triangulation;

pub use arith::{mediant, ExtRational, Mat2};
pub use contfrac::{
    bamboo_triangulation, convergents_negative, convergents_positive, evaluate_negative, evaluate_positive,
    expand_negative, expand_positive, matrix_negative, matrix_positive, negative_to_positive, positive_to_negative,
    Bamboo, NegativeCF, PositiveCF,
};
pub use continuants::{continuant, continuant_bruteforce, continuant_determinant, positive_continuant, IntMatrix};
pub use error::{Error, Result};
pub use frieze::{build_frieze, frieze_entry, frieze_from_quiddity, Frieze, FriezeBuild, Quiddity};
pub use modular::{
    rl_word_from_fraction, stern_brocot_locate, stern_brocot_sequence, verify_quiddity_identity, Dissection3d,
    GroupWord, Verdict,
};
pub use render::{render_svg, Model, RenderConfig, RenderTarget};
pub use triangulation::{
    catalan_count, dual_tree, enumerate_triangulations, farey_labels, quiddity_of, triangulation_from_quiddity,
    Triangulation,
};
