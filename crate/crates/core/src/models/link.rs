use crate::error::{Error, Result};

/// Maps a similarity `s` (for distance models `s = -d`) to a tie probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Link {
    /// `p = 1 / (1 + exp(-(alpha + s)))`.
    Logit { alpha: f64 },
    /// `p = 1` when `gamma_cut - d >= 0`, else `0`.
    Heaviside { gamma_cut: f64 },
    /// `p = 1 / (1 + exp((d - radius) / (2 T)))`.
    FermiDirac { temperature: f64, radius: f64 },
}

/// Overflow-free logistic function.
pub fn logistic(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

impl Link {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Link::Logit { alpha } if alpha.is_nan() => Err(Error::input("alpha is NaN")),
            Link::Heaviside { gamma_cut } if !gamma_cut.is_finite() => {
                Err(Error::input("gamma_cut must be finite"))
            }
            Link::FermiDirac {
                temperature,
                radius,
            } => {
                if !(temperature.is_finite() && temperature > 0.0) {
                    Err(Error::input(format!(
                        "temperature must be positive, got {temperature}"
                    )))
                } else if !radius.is_finite() {
                    Err(Error::input("Fermi-Dirac radius must be finite"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn probability(&self, similarity: f64) -> f64 {
        match *self {
            Link::Logit { alpha } => logistic(alpha + similarity),
            Link::Heaviside { gamma_cut } => {
                if gamma_cut + similarity >= 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Link::FermiDirac {
                temperature,
                radius,
            } => logistic((radius + similarity) / (2.0 * temperature)),
        }
    }

    pub fn probability_from_distance(&self, distance: f64) -> f64 {
        self.probability(-distance)
    }
}
