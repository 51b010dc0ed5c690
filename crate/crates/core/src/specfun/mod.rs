//! Special functions behind the channel densities and secrecy metrics.

mod gamma;
mod hypergeometric;
mod meijer;

pub use gamma::{ln_factorial, ln_gamma, ln_gamma_complex, ln_gamma_signed, pochhammer, SignedLnGamma};
pub use hypergeometric::{hyp1f1, hyp2f1, ln_hyp1f1};
pub use meijer::{
    meijer_g, meijer_g_contour, meijer_g_residue, meijer_g_traced, MeijerGSpec, Route,
    MAX_CANCELLATION, PERTURBATION,
};
