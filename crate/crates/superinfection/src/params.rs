//! Model rate parameters.

use thiserror::Error;

/// The four transition rates of the coupled process.
///
/// `beta1`/`rho1` are the transmission and recovery rates of the primary
/// infection (per edge / per node), `beta2`/`rho2` those of the secondary.
/// `beta2 = 0` is accepted as a degenerate mode in which the secondary
/// infection never transmits; the other three rates must be positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateParams {
    pub beta1: f64,
    pub rho1: f64,
    pub beta2: f64,
    pub rho2: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("rate {name} must be positive and finite, got {value}")]
    NonPositiveRate { name: &'static str, value: f64 },
    #[error("beta2 must be nonnegative and finite, got {0}")]
    InvalidBeta2(f64),
}

impl RateParams {
    pub fn new(beta1: f64, rho1: f64, beta2: f64, rho2: f64) -> Result<Self, ParamError> {
        for (name, value) in [("beta1", beta1), ("rho1", rho1), ("rho2", rho2)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ParamError::NonPositiveRate { name, value });
            }
        }
        if !(beta2 >= 0.0) || !beta2.is_finite() {
            return Err(ParamError::InvalidBeta2(beta2));
        }
        Ok(Self { beta1, rho1, beta2, rho2 })
    }

    /// Symmetric-virulence parametrization: both infections share the
    /// transmission/recovery ratio `alpha`, and `phi = beta1/beta2` sets
    /// their relative timescale. Time units are fixed by `rho1 = 1`.
    pub fn from_alpha_phi(alpha: f64, phi: f64) -> Result<Self, ParamError> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(ParamError::NonPositiveRate { name: "alpha", value: alpha });
        }
        if !(phi > 0.0) || !phi.is_finite() {
            return Err(ParamError::NonPositiveRate { name: "phi", value: phi });
        }
        Self::new(alpha, 1.0, alpha / phi, 1.0 / phi)
    }

    /// Virulence ratio of the primary infection, `beta1/rho1`.
    pub fn alpha(&self) -> f64 {
        self.beta1 / self.rho1
    }

    /// Timescale ratio `beta1/beta2`; infinite in the degenerate
    /// `beta2 = 0` mode.
    pub fn phi(&self) -> f64 {
        self.beta1 / self.beta2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_alpha_phi_round_trips() {
        let p = RateParams::from_alpha_phi(2.0, 0.5).unwrap();
        assert!((p.alpha() - 2.0).abs() < 1e-15);
        assert!((p.phi() - 0.5).abs() < 1e-15);
        // the secondary shares the virulence ratio
        assert!((p.beta2 / p.rho2 - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_rates() {
        assert!(RateParams::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(RateParams::new(1.0, -1.0, 1.0, 1.0).is_err());
        assert!(RateParams::new(1.0, 1.0, -0.5, 1.0).is_err());
        assert!(RateParams::new(1.0, 1.0, f64::NAN, 1.0).is_err());
        // degenerate test mode is allowed
        assert!(RateParams::new(1.0, 1.0, 0.0, 1.0).is_ok());
    }
}
