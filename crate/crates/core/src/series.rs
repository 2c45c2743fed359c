//! Truncated power series over the exact rationals: multiplication,
//! composition, compositional inverses, and the sign-alternating generating
//! series used to test operads for Koszulness.
//!
//! A necessary condition for Koszulness is that the compositional inverse of
//! the generating series g(t) = sum (-1)^n dim P(n)/n! t^n again has the
//! shape of a generating series: its n-th coefficient times (-1)^n n! must
//! be a nonnegative integer (the dimension the dual operad would need).
//! The first violation is an obstruction and certifies NotKoszul; absence
//! of violations up to the truncation order is only Inconclusive.

use crate::error::CoreError;
use crate::rat::{rint, Rat};
use num::{BigInt, One, Signed, Zero};
use std::fmt;

/// Power series truncated at a fixed order: coefficients of t^0 .. t^order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    pub order: usize,
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            order,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The identity series t.
    pub fn t(order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// Build from (exponent, coefficient) pairs; exponents beyond the order
    /// are discarded.
    pub fn from_terms(order: usize, terms: &[(usize, Rat)]) -> Self {
        let mut s = PowerSeries::zero(order);
        for (e, c) in terms {
            if *e <= order {
                s.coeffs[*e] = c.clone();
            }
        }
        s
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: Rat) {
        assert!(n <= self.order, "exponent beyond truncation order");
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|n| self.coeff(n) + other.coeff(n)).collect();
        PowerSeries { order, coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|n| self.coeff(n) - other.coeff(n)).collect();
        PowerSeries { order, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> PowerSeries {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Rat::zero(); order + 1];
        for i in 0..=order {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let b = other.coeff(j);
                if !b.is_zero() {
                    coeffs[i + j] += self.coeff(i) * b;
                }
            }
        }
        PowerSeries { order, coeffs }
    }

    /// Composition self(other); requires other to have zero constant term.
    pub fn compose(&self, other: &PowerSeries) -> Result<PowerSeries, CoreError> {
        if !other.coeff(0).is_zero() {
            return Err(CoreError::InvalidArgument(
                "composition needs a series with zero constant term".into(),
            ));
        }
        let order = self.order.min(other.order);
        let mut result = PowerSeries::zero(order);
        result.coeffs[0] = self.coeff(0);
        // accumulate other^k for k = 1..=order, starting from other^0 = 1
        let mut power = PowerSeries::zero(order);
        power.coeffs[0] = Rat::one();
        for k in 1..=order {
            power = power.mul(other);
            let ck = self.coeff(k);
            if ck.is_zero() {
                continue;
            }
            for n in 0..=order {
                let p = power.coeff(n);
                if !p.is_zero() {
                    result.coeffs[n] += &ck * p;
                }
            }
        }
        Ok(result)
    }

    /// Compositional inverse: the unique series g with self(g) = t.
    /// Requires zero constant term and invertible linear coefficient.
    pub fn compositional_inverse(&self) -> Result<PowerSeries, CoreError> {
        if !self.coeff(0).is_zero() {
            return Err(CoreError::InvalidArgument(
                "a series with nonzero constant term has no compositional inverse".into(),
            ));
        }
        let f1 = self.coeff(1);
        if f1.is_zero() {
            return Err(CoreError::InvalidArgument(
                "a series with zero linear coefficient has no compositional inverse".into(),
            ));
        }
        let order = self.order;
        let mut g = PowerSeries::zero(order);
        if order >= 1 {
            g.coeffs[1] = Rat::one() / f1.clone();
        }
        // solve f(g) = t coefficient by coefficient: the t^n coefficient of
        // f(g) is f1 * g_n plus terms that only involve g_1 .. g_{n-1}
        for n in 2..=order {
            let value = self.compose(&g)?.coeff(n);
            g.coeffs[n] = -value / f1.clone();
        }
        Ok(g)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = abs.is_one() && n > 0;
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            match n {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Sign-alternating exponential generating series of a dimension sequence:
/// g(t) = sum_{n >= 1} (-1)^n dims[n-1]/n! t^n, truncated at `order`.
pub fn generating_series(dims: &[usize], order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    for (i, &d) in dims.iter().enumerate() {
        let n = i + 1;
        if n > order || d == 0 {
            continue;
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        s.set_coeff(n, rint(sign) * rint(d as i64) / factorial(n));
    }
    s
}

/// Outcome of the generating-series Koszulness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KoszulVerdict {
    /// The inverse series fails to be a generating series at `order`: the
    /// implied dual dimension there is negative or fractional.
    NotKoszul { order: usize, implied_dim: Rat },
    /// No obstruction below the truncation order; says nothing further.
    Inconclusive { checked_order: usize },
}

/// Report of one Koszulness run: the inverse series, the dual dimensions it
/// implies where they are meaningful, and the verdict.
#[derive(Debug, Clone)]
pub struct KoszulReport {
    pub inverse: PowerSeries,
    /// (-1)^n n! times the n-th inverse coefficient for n = 1..=order.
    pub implied_dims: Vec<Rat>,
    pub verdict: KoszulVerdict,
}

/// Invert the generating series and scan for the first coefficient that no
/// dimension sequence can produce.
pub fn koszul_test(series: &PowerSeries) -> Result<KoszulReport, CoreError> {
    let inverse = series.compositional_inverse()?;
    let mut implied_dims = Vec::with_capacity(inverse.order);
    let mut verdict = KoszulVerdict::Inconclusive {
        checked_order: inverse.order,
    };
    for n in 1..=inverse.order {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let implied = inverse.coeff(n) * rint(sign) * factorial(n);
        let bad = implied.is_negative() || !implied.is_integer();
        implied_dims.push(implied.clone());
        if bad && matches!(verdict, KoszulVerdict::Inconclusive { .. }) {
            verdict = KoszulVerdict::NotKoszul {
                order: n,
                implied_dim: implied,
            };
        }
    }
    Ok(KoszulReport {
        inverse,
        implied_dims,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use rand::{Rng, SeedableRng};

    fn from_i64(order: usize, terms: &[(usize, i64)]) -> PowerSeries {
        PowerSeries::from_terms(
            order,
            &terms
                .iter()
                .map(|&(e, c)| (e, rint(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn multiplication_truncates() {
        // (1 + t)^2 = 1 + 2t + t^2
        let f = from_i64(3, &[(0, 1), (1, 1)]);
        let sq = f.mul(&f);
        assert_eq!(sq, from_i64(3, &[(0, 1), (1, 2), (2, 1)]));
        // truncation at order 1 drops the square term
        let g = from_i64(1, &[(0, 1), (1, 1)]);
        assert_eq!(g.mul(&g), from_i64(1, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn geometric_series_composition_is_an_involution() {
        // f = t/(1-t) = t + t^2 + ..., g = t/(1+t) = t - t^2 + ...;
        // f(g) = t exactly
        let order = 9;
        let f = PowerSeries::from_terms(
            order,
            &(1..=order).map(|n| (n, rint(1))).collect::<Vec<_>>(),
        );
        let g = PowerSeries::from_terms(
            order,
            &(1..=order)
                .map(|n| (n, rint(if n % 2 == 1 { 1 } else { -1 })))
                .collect::<Vec<_>>(),
        );
        assert_eq!(f.compose(&g).unwrap(), PowerSeries::t(order));
        assert_eq!(g.compose(&f).unwrap(), PowerSeries::t(order));
        assert_eq!(f.compositional_inverse().unwrap(), g);
    }

    #[test]
    fn compose_rejects_nonzero_constant_terms() {
        let f = from_i64(3, &[(1, 1)]);
        let c = from_i64(3, &[(0, 1), (1, 1)]);
        assert!(f.compose(&c).is_err());
        assert!(c.compositional_inverse().is_err());
        assert!(from_i64(3, &[(2, 1)]).compositional_inverse().is_err());
    }

    #[test]
    fn inverse_round_trips_on_random_series() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let order = 8;
            let mut f = PowerSeries::zero(order);
            f.set_coeff(1, rint(if rng.gen_bool(0.5) { 1 } else { -1 }));
            for n in 2..=order {
                f.set_coeff(n, rint(rng.gen_range(-3..=3)));
            }
            let g = f.compositional_inverse().unwrap();
            assert_eq!(f.compose(&g).unwrap(), PowerSeries::t(order));
            assert_eq!(g.compose(&f).unwrap(), PowerSeries::t(order));
        }
    }

    #[test]
    fn binary_tree_series_inverts_to_catalan_numbers() {
        // dims (1, 2) give -t + t^2; the inverse counts binary trees:
        // coefficient of t^n is (-1)^n Catalan(n-1), i.e. the free operad
        // dimensions Catalan(n-1) n! after removing the sign and 1/n!
        let g = generating_series(&[1, 2], 8);
        assert_eq!(g, from_i64(8, &[(1, -1), (2, 1)]));
        let report = koszul_test(&g).unwrap();
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in (1..=8).zip(&catalan) {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(report.inverse.coeff(n), rint(sign * c));
        }
        assert_eq!(
            report.verdict,
            KoszulVerdict::Inconclusive { checked_order: 8 }
        );
    }

    #[test]
    fn anti_associative_series_inverse_matches_the_announced_tail() {
        // dims (1, 2, 6, 0, 0, ...) give -t + t^2 - t^3; solving
        // f(g) = t degree by degree by hand gives the frozen coefficients
        // below, which reproduce the announced tail
        // 4t^5 - 14t^6 + 30t^7 - 33t^8 - 55t^9.
        let g = generating_series(&[1, 2, 6, 0, 0, 0, 0, 0, 0], 9);
        assert_eq!(g, from_i64(9, &[(1, -1), (2, 1), (3, -1)]));
        let report = koszul_test(&g).unwrap();
        let expected = from_i64(
            9,
            &[
                (1, -1),
                (2, 1),
                (3, -1),
                (5, 4),
                (6, -14),
                (7, 30),
                (8, -33),
                (9, -55),
            ],
        );
        assert_eq!(report.inverse, expected);
        // the defining equation holds exactly to the truncation order
        assert_eq!(
            g.compose(&report.inverse).unwrap(),
            PowerSeries::t(9)
        );
        // first obstruction: t^5 has a positive coefficient at an odd
        // order, implying a dual dimension of -480
        assert_eq!(
            report.verdict,
            KoszulVerdict::NotKoszul {
                order: 5,
                implied_dim: rint(-480)
            }
        );
    }

    #[test]
    fn jacobi_jordan_dual_series_inverse_matches_the_announced_values() {
        // dims (1, 1, 1, 0, ...) give -t + t^2/2 - t^3/6; the hand-solved
        // inverse is -t + t^2/2 - t^3/3 + 5t^4/24 - t^5/12 - 7t^6/144
        // + 13t^7/72, confirming both announced coefficients.
        let g = generating_series(&[1, 1, 1, 0, 0, 0, 0], 7);
        let report = koszul_test(&g).unwrap();
        let expected = PowerSeries::from_terms(
            7,
            &[
                (1, rint(-1)),
                (2, rat(1, 2)),
                (3, rat(-1, 3)),
                (4, rat(5, 24)),
                (5, rat(-1, 12)),
                (6, rat(-7, 144)),
                (7, rat(13, 72)),
            ],
        );
        assert_eq!(report.inverse, expected);
        // the implied dual dimensions are 1, 1, 2, 5, 10 and then -35:
        // the first five are genuine nonnegative integers, the sixth is
        // the obstruction
        assert_eq!(
            report.implied_dims[..5],
            [rint(1), rint(1), rint(2), rint(5), rint(10)]
        );
        assert_eq!(
            report.verdict,
            KoszulVerdict::NotKoszul {
                order: 6,
                implied_dim: rint(-35)
            }
        );
    }

    #[test]
    fn fractional_implied_dimension_is_an_obstruction() {
        // dims (2,) give -2t; inverse -t/2; implied dim at order 1 is 1/2
        let g = generating_series(&[2], 3);
        let report = koszul_test(&g).unwrap();
        assert_eq!(
            report.verdict,
            KoszulVerdict::NotKoszul {
                order: 1,
                implied_dim: rat(1, 2)
            }
        );
    }

    #[test]
    fn display_renders_signed_terms() {
        let s = PowerSeries::from_terms(
            6,
            &[(1, rint(-1)), (2, rat(1, 2)), (5, rint(4))],
        );
        assert_eq!(s.to_string(), "-t + 1/2t^2 + 4t^5");
        assert_eq!(PowerSeries::zero(3).to_string(), "0");
    }
}
