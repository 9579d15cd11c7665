//! Exact evaluation of the closed counting formulas and certified-interval
//! evaluation of the q-series quantities they converge to.

mod asym;
mod counts;
mod critical;
mod euler;

pub use asym::{delta_asym_q, nu_asym_m, nu_asym_q, qbinom_asym_m};
pub use counts::{ball_size, nu, qbinom, theta};
pub use critical::{char_poly_linear, tau_linear, QPolynomial};
pub use euler::{euler_phi_interval, pi_q_interval};
