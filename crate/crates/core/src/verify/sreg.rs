//! Sectional regularity estimated from seeded hyperplane sections.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::hyperplane_section;
use crate::error::{Error, Result};
use crate::ideal_ops::random_linear_form;
use crate::invariants::minimal_free_resolution;
use crate::ring::{GradedIdeal, Poly};

const FORM_RETRIES: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SregEstimate {
    /// Minimum over the trials; an upper bound on the sectional regularity.
    pub bound: i64,
    /// Printed linear form and section regularity per trial.
    pub trials: Vec<(String, i64)>,
}

/// Regularity of the scheme cut out by `I + (f)`, for a nonzerodivisor `f`.
pub fn section_regularity(i: &GradedIdeal, f: &Poly) -> Result<i64> {
    let c = hyperplane_section(i, f)?;
    Ok(minimal_free_resolution(&c, None)?.0.scheme_reg())
}

fn trial(i: &GradedIdeal, seed: u64) -> Result<(String, i64)> {
    let ring = i.ring();
    let mut last = None;
    for k in 0..FORM_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(FORM_RETRIES).wrapping_add(k));
        let f = random_linear_form(ring, &mut rng);
        match section_regularity(i, &f) {
            Ok(reg) => return Ok((ring.fmt_poly(&f), reg)),
            Err(Error::Geometry(msg)) => last = Some(msg),
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted {
        attempts: FORM_RETRIES as usize,
        reason: last.unwrap_or_else(|| "no nonzerodivisor found".into()),
    })
}

/// Minimum section regularity over `trials` seeded random linear forms.
pub fn sreg_estimate(i: &GradedIdeal, trials: usize, seed: u64) -> Result<SregEstimate> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is needed".into()));
    }
    let results: Vec<(String, i64)> = (0..trials as u64)
        .into_par_iter()
        .map(|t| trial(i, seed.wrapping_add(t)))
        .collect::<Result<_>>()?;
    let bound = results.iter().map(|r| r.1).min().expect("nonempty");
    Ok(SregEstimate { bound, trials: results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{scroll, ScrollSpec};
    use crate::ring::PrimeField;

    #[test]
    fn scroll_sections_are_rational_normal_curves() {
        let y = scroll(PrimeField::default_field(), ScrollSpec::new(1, 3).unwrap()).unwrap();
        let est = sreg_estimate(&y, 3, 7).unwrap();
        assert_eq!(est.bound, 2);
        assert_eq!(est.trials.len(), 3);
        assert_eq!(est, sreg_estimate(&y, 3, 7).unwrap());
    }
}
