//! Ways of building mobi spaces: transport along a bijection, the pair
//! construction on `X × Y` (general and linear), and the worked catalog of
//! line, pair, physical and control examples.

mod controls;
mod instances;
mod linear;
mod pair;
mod physics;
mod transport;

pub use controls::{LozengeSpace, TrigControl};
pub use instances::{
    alpha_beta_pow, canonical_line, cube_pair, cube_pair_exact, f_pair, general_f_pair,
    geometric_mean, harmonic, identity_transport, inv_pair, sq_pair, sq_pair_exact,
    AlphaBetaPowSpace, LinearPair, NamedFn,
};
pub use linear::{LinearFamily, SINGULAR_DET};
pub use pair::{AlphaBetaPow, PairFamily, PairSpace};
pub use physics::{projectile_linear_pair, underdamped, Damping, DampingSpace, ProjectileSpace};
pub use transport::TransportSpace;
