//! shiftlab: exterior, symmetric, and combinatorial shifting of finite graphs.
//!
//! A shifted graph is closed under lowering either endpoint of any edge and
//! is encoded by its m-profile. This crate computes the three classical
//! shifting operations of a graph on `[n]`:
//!
//! * the **exterior** and **symmetric** shifts, via exact ranks of matrices
//!   built from a sampled generic matrix ([`algebraic`]) over arbitrary
//!   precision integers ([`linalg`]);
//! * the **combinatorial** shift, by iterated `Shift_ij` compressions,
//!   including exhaustive enumeration of all reachable shifted graphs and a
//!   deterministic algorithm for chordal inputs ([`combinatorial`]);
//!
//! together with closed-form cross-checks for complete bipartite graphs, the
//! binomial form, sandwich bounds, and linear-strand Betti numbers
//! ([`oracles`], [`Graph::betti_hochster`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions of their inputs, so everything here is safe to share across
//! threads.

pub mod algebraic;
pub mod combinatorial;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod oracles;
pub mod profile;

pub use algebraic::{
    exterior_profile, exterior_rank_matrix, exterior_rank_profile, exterior_shift,
    sample_generic_matrix, symmetric_profile, symmetric_profile_pad_checked, symmetric_rank_matrix,
    symmetric_rank_profile, symmetric_shift, GenericConfig, RankKind, RankProfile,
};
pub use combinatorial::{
    apply_shift_sequence, canonical_combinatorial_shift, chordal_shift_algorithm, classify_shift,
    delta_c_is_unique, enumerate_combinatorial_shifted_graphs, shift_ij, shift_ij_closed_form,
    ShiftClass, ShiftStep, ShiftTrace,
};
pub use error::{Result, ShiftError};
pub use graph::Graph;
pub use linalg::{stack_rows, ExactMatrix};
pub use oracles::{
    betti_shifted_formula, binomial_form, bipartite_sandwich_check, coro_predicate,
    kab_exterior_profile, kab_symmetric_profile, BinomialForm,
};
pub use profile::MProfile;
