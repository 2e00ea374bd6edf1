//! Clique counting, containment and copy counting, longest paths,
//! colourings, canonical forms and the independent-deletion family.

mod canon;
mod cliques;
mod coloring;
mod deletion;
pub(crate) mod matcher;
mod paths;

pub use canon::{canonical_form, isomorphic, CanonicalForm, CANONICAL_LIMIT};
pub(crate) use cliques::count_cliques_in_mask;
pub use cliques::{clique_number, clique_vector, count_cliques, CliqueVector};
pub use coloring::{chromatic_number, color_class_split, min_color_class, CHROMATIC_LIMIT};
pub use deletion::{independent_deletion_family, DELETION_LIMIT};
pub use matcher::{automorphism_count, contains, count_copies, count_embeddings};
pub use paths::{longest_path, longest_path_order, LONGEST_PATH_LIMIT};
