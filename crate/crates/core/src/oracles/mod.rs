//! Exact brute-force oracles for small graphs. Every verdict is exact.

mod factor_search;
mod hamiltonian;
mod independence;
mod recognition;
mod toughness;

pub use factor_search::{
    minimum_component_two_factor, minimum_component_two_factor_with, minimum_cover_within,
};
pub use hamiltonian::{hamiltonian_cycle_bruteforce, hamiltonian_cycle_with};
pub use independence::{independence_number, independence_number_with};
pub use recognition::{
    find_2k2_by_edge_pairs, find_2k2_by_non_neighborhoods, is_2k2_free, Induced2K2,
};
pub use toughness::{
    is_t_tough, is_t_tough_with, toughness, toughness_with, Toughness, ToughnessReport,
};
