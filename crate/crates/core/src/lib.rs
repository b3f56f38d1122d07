//! Plane tree calculi for Thompson's group F and arborescent links.
//!
//! The crate is organized as a small compiler pipeline:
//!
//! - [`trees`] — plane binary trees, reduced tree pairs and group
//!   arithmetic for Thompson's group F, tree enumeration.
//! - [`weighted`] — rooted plane trees with integer vertex weights, the
//!   bipartite predicate, and the tree rewriting moves that translate
//!   between Thompson trees and bipartite arborescent descriptions.
//! - [`diagram`] — a crossing-level planar diagram IR, the half-circle
//!   tangle construction for tree pairs, the arborescent tangle compiler,
//!   a Reidemeister I/II simplifier, and text/SVG/JSON exports.
//! - [`invariants`] — exact Kauffman bracket evaluation (brute-force
//!   state sum and a planar contraction sweep), orientation/writhe
//!   handling, and link equivalence verdicts.
//! - [`laurent`] — exact integer Laurent polynomials in one variable.

pub mod diagram;
pub mod invariants;
pub mod laurent;
pub mod trees;
pub mod weighted;

pub use diagram::{LinkDiagram, TangleDiagram};
pub use invariants::{same_link_evidence, InvariantReport, Verdict};
pub use laurent::LaurentPolynomial;
pub use trees::{PlaneBinaryTree, ThompsonElement};
pub use weighted::WeightedPlaneTree;
