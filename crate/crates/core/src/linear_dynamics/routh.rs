use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    /// Every root strictly in the open left half-plane.
    Stable,
    Unstable,
    /// Roots on (or numerically indistinguishable from) the imaginary axis.
    Marginal,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Marginal => "marginal",
        }
    }
}

/// Relative size of the replacement for a vanishing Routh pivot.
const EPSILON_SCALE: f64 = 1e-30;

struct RouthOutcome {
    sign_changes: usize,
    /// A zero pivot was replaced by ε.
    perturbed: bool,
    /// A row vanished entirely: roots symmetric about the origin.
    symmetric_roots: bool,
}

/// Routh-Hurwitz test on ascending coefficients `[a_0, …, a_n]`.
///
/// Any non-positive coefficient short-circuits to `Unstable`. A zero pivot
/// is replaced by ±ε; if the sign count depends on the sign of ε, or no
/// sign change survives either way, the verdict is `Marginal`.
pub fn is_stable(coeffs: &[f64]) -> Result<Stability> {
    if coeffs.is_empty() {
        return Err(Error::DegeneratePolynomial("no coefficients"));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::DegeneratePolynomial("non-finite coefficient"));
    }
    let lead = *coeffs.last().unwrap();
    if lead == 0.0 {
        return Err(Error::DegeneratePolynomial("leading coefficient is zero"));
    }
    let normalized: Vec<f64> = coeffs.iter().rev().map(|c| c / lead).collect();
    if normalized.len() == 1 {
        return Ok(Stability::Stable);
    }
    if normalized.iter().any(|&c| c <= 0.0) {
        return Ok(Stability::Unstable);
    }

    let plus = routh_array(&normalized, 1.0);
    if !plus.perturbed && !plus.symmetric_roots {
        return Ok(if plus.sign_changes == 0 {
            Stability::Stable
        } else {
            Stability::Unstable
        });
    }
    let minus = routh_array(&normalized, -1.0);
    if plus.sign_changes > 0 && minus.sign_changes > 0 {
        Ok(Stability::Unstable)
    } else {
        Ok(Stability::Marginal)
    }
}

/// Builds the Routh array for descending coefficients and counts sign
/// changes down the first column.
fn routh_array(desc: &[f64], eps_sign: f64) -> RouthOutcome {
    let degree = desc.len() - 1;
    let width = degree / 2 + 1;
    let row_from = |start: usize| -> Vec<f64> {
        (0..width)
            .map(|i| desc.get(start + 2 * i).copied().unwrap_or(0.0))
            .collect()
    };
    let mut upper = row_from(0);
    let mut lower = row_from(1);
    let mut first_column = vec![upper[0]];
    let mut perturbed = false;
    let mut symmetric_roots = false;

    for row in 1..=degree {
        // Power of the polynomial whose coefficients `upper` holds.
        let upper_power = degree + 1 - row;
        if lower.iter().all(|&v| v == 0.0) {
            // Auxiliary polynomial: differentiate the row above.
            symmetric_roots = true;
            for (i, v) in lower.iter_mut().enumerate() {
                let power = upper_power as i64 - 2 * i as i64;
                *v = if power > 0 { upper[i] * power as f64 } else { 0.0 };
            }
        }
        if lower[0] == 0.0 {
            perturbed = true;
            let scale = lower
                .iter()
                .chain(upper.iter())
                .fold(0.0f64, |m, v| m.max(v.abs()));
            lower[0] = eps_sign * EPSILON_SCALE * scale.max(f64::MIN_POSITIVE);
        }
        first_column.push(lower[0]);
        if row == degree {
            break;
        }
        let next: Vec<f64> = (0..width)
            .map(|i| {
                let a = upper.get(i + 1).copied().unwrap_or(0.0);
                let b = lower.get(i + 1).copied().unwrap_or(0.0);
                (lower[0] * a - upper[0] * b) / lower[0]
            })
            .collect();
        upper = std::mem::replace(&mut lower, next);
    }

    let sign_changes = first_column
        .windows(2)
        .filter(|w| (w[0] > 0.0) != (w[1] > 0.0))
        .count();
    RouthOutcome {
        sign_changes,
        perturbed,
        symmetric_roots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ascending coefficients of ∏(λ − r) for real roots `r`.
    fn from_roots(roots: &[f64]) -> Vec<f64> {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, v) in c.iter().enumerate() {
                next[i + 1] += v;
                next[i] -= r * v;
            }
            c = next;
        }
        c
    }

    #[test]
    fn hurwitz_product() {
        let c = [720.0, 1764.0, 1624.0, 735.0, 175.0, 21.0, 1.0];
        assert_eq!(is_stable(&c).unwrap(), Stability::Stable);
    }

    #[test]
    fn negative_coefficient_is_unstable() {
        assert_eq!(is_stable(&[-2.0, 1.0, 1.0]).unwrap(), Stability::Unstable);
    }

    #[test]
    fn positive_coefficients_but_unstable() {
        // (λ + 3)(λ² − λ + 4) = λ³ + 2λ² + λ + 12: all positive, complex pair
        // with positive real part.
        assert_eq!(is_stable(&[12.0, 1.0, 2.0, 1.0]).unwrap(), Stability::Unstable);
    }

    #[test]
    fn complex_stable_pairs() {
        // (λ² + 0.2λ + 4)(λ² + λ + 1)(λ + 2)
        let quad = |a: f64, b: f64| vec![b, a, 1.0];
        let mul = |x: &[f64], y: &[f64]| {
            let mut out = vec![0.0; x.len() + y.len() - 1];
            for (i, a) in x.iter().enumerate() {
                for (j, b) in y.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        };
        let c = mul(&mul(&quad(0.2, 4.0), &quad(1.0, 1.0)), &[2.0, 1.0]);
        assert_eq!(is_stable(&c).unwrap(), Stability::Stable);
    }

    #[test]
    fn imaginary_axis_roots_are_marginal() {
        // (λ² + 1)(λ + 1) = λ³ + λ² + λ + 1: row of zeros in the array.
        assert_eq!(is_stable(&[1.0, 1.0, 1.0, 1.0]).unwrap(), Stability::Marginal);
        // (λ² + 4)(λ² + 2λ + 2)
        let c = [8.0, 8.0, 6.0, 2.0, 1.0];
        assert_eq!(is_stable(&c).unwrap(), Stability::Marginal);
    }

    #[test]
    fn zero_pivot_with_unstable_roots() {
        // λ⁴ + λ³ + 2λ² + 2λ + 3: third row starts with zero, two RHP roots.
        assert_eq!(
            is_stable(&[3.0, 2.0, 2.0, 1.0, 1.0]).unwrap(),
            Stability::Unstable
        );
    }

    #[test]
    fn real_root_products() {
        assert_eq!(
            is_stable(&from_roots(&[-0.5, -1.0, -7.0, -2.0])).unwrap(),
            Stability::Stable
        );
        assert_eq!(
            is_stable(&from_roots(&[-0.5, 1.0, -7.0, -2.0])).unwrap(),
            Stability::Unstable
        );
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(is_stable(&[]).is_err());
        assert!(is_stable(&[1.0, 0.0]).is_err());
        assert!(is_stable(&[1.0, f64::NAN, 1.0]).is_err());
        assert_eq!(is_stable(&[3.0]).unwrap(), Stability::Stable);
    }
}
