//! Rikudo: game model, exact and polynomial solvers, and the three
//! hardness-reduction compilers, each cross-validated against independent
//! brute-force oracles.
//!
//! # Architecture
//!
//! - [`hexgrid`]: axial cells, adjacency, connectivity, holes, exact ℚ[√3]
//!   plane geometry.
//! - [`game`]: the game triple (τ, m, p), solution verification, α-padding.
//! - [`solver`]: exponential backtracking and route-cover solvers, solution
//!   counting, and the polynomial 1-over-2 algorithm via 2-SAT.
//! - [`hch`]: honeycomb (hexagonal grid) graphs, a Hamiltonian-cycle oracle,
//!   and small-instance enumeration.
//! - [`reduce_hch`]: compilers from Hamiltonian-cycle instances to games,
//!   with and without holes, including the hole-path machinery.
//! - [`reduce_sat`]: the planar 1-in-3-SAT → 1-over-3 game compiler built
//!   from macrocell logic tiles.

pub mod game;
pub mod hch;
pub mod hexgrid;
pub mod reduce_hch;
pub mod solver;
