//! Element arithmetic in `T'_{p,q}` through canonical forms, and the two
//! counting oracles for its growth series: breadth-first search on the
//! Cayley graph, and enumeration of minimal normal words.

mod bfs;
mod element;
mod grammar;

pub use bfs::{
    quotient_sphere_counts, sphere_counts_bfs, sphere_counts_bfs_group, sphere_counts_bfs_limited,
    SphereCounts, DEFAULT_ELEMENT_LIMIT,
};
pub use element::{CanonicalElement, Syllable, TorusGroup};
pub use grammar::{normal_word_counts, normal_words, sphere_counts_grammar, NormalWord};
