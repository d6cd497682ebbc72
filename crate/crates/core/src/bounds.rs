//! Upper bounds on `Z(m, n)` and the exact piecewise values.
//!
//! All arithmetic is exact: bounds are rationals over `i128`, floors are
//! taken on the rationals themselves.
//!
//! ```
//! use zforge::bounds::{z_value, Regime};
//! let r = z_value(8, 11, false);
//! assert_eq!(r.z, Some(30));
//! assert_eq!(r.regime, Regime::AboveCase1);
//! ```

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::hypercore::SizeProfile;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("n = {n} outside [{lo}, {hi}] for m = {m}")]
    OutOfRange { m: u64, n: u64, lo: u64, hi: u64 },
    #[error("defect size must be nonnegative, got {0}")]
    NegativeDefect(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    AboveCase1,
    AboveCase2,
    AboveCase3,
    BelowCase1,
    BelowCase2,
    BelowCase3,
    Uncovered,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::AboveCase1 => "above-case1",
            Regime::AboveCase2 => "above-case2",
            Regime::AboveCase3 => "above-case3",
            Regime::BelowCase1 => "below-case1",
            Regime::BelowCase2 => "below-case2",
            Regime::BelowCase3 => "below-case3",
            Regime::Uncovered => "uncovered",
        }
    }

    pub fn is_above(self) -> bool {
        matches!(self, Regime::AboveCase1 | Regime::AboveCase2 | Regime::AboveCase3)
    }

    pub fn is_below(self) -> bool {
        matches!(self, Regime::BelowCase1 | Regime::BelowCase2 | Regime::BelowCase3)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub m: u64,
    pub n: u64,
    pub u_plus: Rational,
    pub u_zero: Rational,
    pub u_minus: Rational,
    pub floor_plus: u64,
    pub floor_zero: u64,
    pub floor_minus: u64,
    /// Minimum of the floors that bound `Z`: all three for even `m`, and
    /// `⌊U⁺⌋, ⌊U⁻⌋` for odd `m` (`Z(7,7) = 21 > ⌊U⁰⌋`).
    pub roman_min: u64,
    pub decrement: u8,
    /// `None` when no exact formula covers `(m, n)`.
    pub z: Option<u64>,
    pub regime: Regime,
    /// Set on the below-threshold formula unless the caller asserts `m` is
    /// large enough for it to be proven.
    pub asymptotic: bool,
}

#[inline]
pub fn c2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -(-a).div_euclid(b)
}

/// Floor, clamped at 0 (`U⁰` is negative at `m = 1, n = 0`).
fn floor_q(q: Rational) -> u64 {
    q.floor().to_integer().max(0) as u64
}

/// `⌈C(m,2)/3⌉`, the first `n` of the above-threshold range.
pub fn above_lo(m: u64) -> u64 {
    ceil_div(c2(m) as i128, 3) as u64
}

/// `⌊C(m,2)/3 + m/3⌋`.
pub fn above_u0_hi(m: u64) -> u64 {
    floor_div((c2(m) + m) as i128, 3) as u64
}

/// `⌊C(m,2)/3 − m/4⌋`.
pub fn third_minus_quarter_floor(m: u64) -> i64 {
    floor_div(4 * c2(m) as i128 - 3 * m as i128, 12) as i64
}

/// `⌈C(m,2)/3 − m/4⌉`.
pub fn third_minus_quarter_ceil(m: u64) -> i64 {
    ceil_div(4 * c2(m) as i128 - 3 * m as i128, 12) as i64
}

/// Inclusive `n`-interval of the below-threshold formula:
/// `C/6 + m/3 + 40 ≤ n < C/3`. `None` when empty.
pub fn below_range(m: u64) -> Option<(u64, u64)> {
    let c = c2(m) as i128;
    let lo = ceil_div(c + 2 * m as i128 + 240, 6);
    let hi = ceil_div(c, 3) - 1;
    (lo <= hi && hi >= 1).then_some((lo.max(1) as u64, hi as u64))
}

/// The `S` set of exceptional offsets `r` in `n = ⌊C/3⌋ − r` for odd `m`.
pub fn exceptional_offsets(m: u64) -> &'static [u64] {
    match m % 6 {
        1 | 3 => &[1, 2, 3, 4],
        5 => &[0, 1, 3],
        _ => &[],
    }
}

/// Maximum number of triples in a partial triple system of order `m`.
pub fn max_packing_triples(m: u64) -> u64 {
    let c = c2(m) as i128;
    let v = match m % 6 {
        1 | 3 => floor_div(c, 3),
        5 => floor_div(c, 3) - 1,
        _ => floor_div(2 * c - m as i128, 6),
    };
    v.max(0) as u64
}

/// The three rational upper bounds and their floors. The regime is left as
/// `Uncovered` and `z` unset.
pub fn upper_bounds(m: u64, n: u64) -> BoundReport {
    let (mi, ni) = (m as i128, n as i128);
    let u_plus = Rational::new(mi * (mi - 1), 4) + Rational::new(3 * ni, 2);
    let u_zero = Rational::new(mi * (3 * mi - 4), 14) + Rational::new(12 * ni, 7);
    let u_minus = Rational::new(mi * (mi - 1), 6) + Rational::from_integer(2 * ni);
    let (fp, fz, fm) = (floor_q(u_plus), floor_q(u_zero), floor_q(u_minus));
    BoundReport {
        m,
        n,
        u_plus,
        u_zero,
        u_minus,
        floor_plus: fp,
        floor_zero: fz,
        floor_minus: fm,
        roman_min: if m % 2 == 0 { fp.min(fz).min(fm) } else { fp.min(fm) },
        decrement: 0,
        z: None,
        regime: Regime::Uncovered,
        asymptotic: false,
    }
}

/// Exact value for `⌈C/3⌉ ≤ n ≤ C`.
pub fn z_above(m: u64, n: u64) -> Result<BoundReport, BoundsError> {
    let c = c2(m);
    let lo = above_lo(m).max(1);
    if m == 0 || n < lo || n > c {
        return Err(BoundsError::OutOfRange { m, n, lo, hi: c });
    }
    let mut r = upper_bounds(m, n);
    let (regime, z) = if m % 2 == 0 && n <= above_u0_hi(m) {
        (Regime::AboveCase1, r.floor_zero)
    } else if m % 6 == 5 && n == above_lo(m) {
        (Regime::AboveCase2, r.floor_plus - 1)
    } else {
        (Regime::AboveCase3, r.floor_plus)
    };
    r.regime = regime;
    r.decrement = u8::from(regime == Regime::AboveCase2);
    r.z = Some(z);
    Ok(r)
}

/// Exact value for `C/6 + m/3 + 40 ≤ n < C/3`, proven only for `m`
/// beyond an unspecified threshold; `asymptotic` records that unless
/// `assume_large` is set.
pub fn z_below(m: u64, n: u64, assume_large: bool) -> Result<BoundReport, BoundsError> {
    let Some((lo, hi)) = below_range(m) else {
        return Err(BoundsError::OutOfRange { m, n, lo: 1, hi: 0 });
    };
    if n < lo || n > hi {
        return Err(BoundsError::OutOfRange { m, n, lo, hi });
    }
    let mut r = upper_bounds(m, n);
    let floor_third = c2(m) / 3;
    let (regime, z) = if m % 2 == 0 && (n as i64) > third_minus_quarter_floor(m) {
        (Regime::BelowCase1, r.floor_zero)
    } else if m % 2 == 1
        && n <= floor_third
        && exceptional_offsets(m).contains(&(floor_third - n))
    {
        (Regime::BelowCase2, r.floor_minus - 1)
    } else {
        (Regime::BelowCase3, r.floor_minus)
    };
    r.regime = regime;
    r.decrement = u8::from(regime == Regime::BelowCase2);
    r.z = Some(z);
    r.asymptotic = !assume_large;
    Ok(r)
}

/// Routes to [`z_above`] or [`z_below`]; anything else is `Uncovered` with
/// the bounds still filled in.
pub fn z_value(m: u64, n: u64, assume_large: bool) -> BoundReport {
    if m >= 1 && n >= 1 {
        if let Ok(r) = z_above(m, n) {
            return r;
        }
        if let Ok(r) = z_below(m, n, assume_large) {
            return r;
        }
    }
    upper_bounds(m, n)
}

/// Residuals of the edge-count and pair-count identities for a size
/// profile, and the total degree they imply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileIdentity {
    pub d: i64,
    /// `x` in `n = ⌊C/3⌋ − x` (may be negative).
    pub x: i64,
    /// `C mod 3`, which is 1 exactly when `m ≡ 2 (mod 3)`.
    pub delta: i64,
    pub residual_eq1: i64,
    pub residual_eq2: i64,
    pub residual_eq4: i64,
    /// `U⁻ − d/3 − Σ (2 + C(i,2)/3 − i) n_i`.
    pub z_from_eq3: Rational,
    /// `U⁺ − d/2 − Σ (C(i,2)/2 + 3/2 − i) n_i`.
    pub z_from_plus: Rational,
}

pub fn profile_identities(
    profile: &SizeProfile,
    m: u64,
    n: u64,
    d: i64,
) -> Result<ProfileIdentity, BoundsError> {
    if d < 0 {
        return Err(BoundsError::NegativeDefect(d));
    }
    let c = c2(m) as i64;
    let n = n as i64;
    let pairs_of = |i: usize| (i * i.saturating_sub(1) / 2) as i64;
    let sum_n: i64 = profile.iter().map(|(_, k)| k as i64).sum();
    let sum_pairs: i64 = profile.iter().map(|(i, k)| pairs_of(i) * k as i64).sum();
    let x = c / 3 - n;
    let delta = c - 3 * (c / 3);
    let bounds = upper_bounds(m, n.max(0) as u64);
    let mut z3 = bounds.u_minus - Rational::new(d as i128, 3);
    let mut zp = bounds.u_plus - Rational::new(d as i128, 2);
    for (i, k) in profile.iter() {
        let (ii, kk, p) = (i as i128, k as i128, pairs_of(i) as i128);
        z3 -= (Rational::from_integer(2 - ii) + Rational::new(p, 3)) * kk;
        zp -= (Rational::new(p, 2) + Rational::new(3, 2) - ii) * kk;
    }
    Ok(ProfileIdentity {
        d,
        x,
        delta,
        residual_eq1: sum_n - n,
        residual_eq2: sum_pairs - (c - d),
        residual_eq4: profile.iter().map(|(i, k)| (pairs_of(i) - 3) * k as i64).sum::<i64>()
            - (3 * x + delta - d),
        z_from_eq3: z3,
        z_from_plus: zp,
    })
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn format_rational(q: &Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn upper_bound_examples() {
        let r = upper_bounds(8, 11);
        assert_eq!(r.u_plus, q(61, 2));
        assert_eq!(r.u_zero, q(212, 7));
        assert_eq!(r.u_minus, q(94, 3));
        assert_eq!(r.roman_min, 30);
        let r = upper_bounds(2, 1);
        assert_eq!(r.u_plus, q(2, 1));
        assert_eq!(r.floor_plus, 2);
        assert_eq!(upper_bounds(100, 1626).floor_zero, 4901);
    }

    #[test]
    fn above_examples() {
        let r = z_above(8, 11).unwrap();
        assert_eq!((r.regime, r.z), (Regime::AboveCase1, Some(30)));
        let r = z_above(11, 19).unwrap();
        assert_eq!((r.regime, r.z, r.decrement), (Regime::AboveCase2, Some(55), 1));
        assert_eq!(r.floor_plus, 56);
        let r = z_above(9, 12).unwrap();
        assert_eq!((r.regime, r.z), (Regime::AboveCase3, Some(36)));
        assert_eq!(
            z_above(8, 9),
            Err(BoundsError::OutOfRange { m: 8, n: 9, lo: 10, hi: 28 })
        );
        assert!(z_above(8, 29).is_err());
    }

    #[test]
    fn below_examples() {
        let r = z_below(101, 1683, false).unwrap();
        assert_eq!((r.regime, r.z, r.decrement), (Regime::BelowCase2, Some(5048), 1));
        assert!(r.asymptotic);
        let r = z_below(100, 1626, true).unwrap();
        assert_eq!((r.regime, r.z), (Regime::BelowCase1, Some(4901)));
        assert!(!r.asymptotic);
        // 103 ≡ 1 (mod 6): offsets {1,2,3,4}
        let n = c2(103) / 3 - 2;
        assert_eq!(z_below(103, n, true).unwrap().regime, Regime::BelowCase2);
        // 101 ≡ 5 (mod 6): offsets {0,1,3}
        let n = c2(101) / 3 - 2;
        let r = z_below(101, n, true).unwrap();
        assert_eq!((r.regime, r.z), (Regime::BelowCase3, Some(r.floor_minus)));
        assert!(z_below(10, 12, false).is_err());
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(z_value(8, 11, false).z, Some(30));
        let r = z_value(5, 4, false);
        assert_eq!((r.regime, r.z), (Regime::AboveCase2, Some(10)));
        let r = z_value(8, 3, false);
        assert_eq!((r.regime, r.z), (Regime::Uncovered, None));
        assert_eq!(r.roman_min, upper_bounds(8, 3).roman_min);
    }

    #[test]
    fn boundary_when_third_is_integral_goes_above() {
        // C(9,2) = 36, n = 12 = C/3 exactly
        assert!(z_value(9, 12, true).regime.is_above());
        assert!(z_below(97, (c2(97) / 3) as u64, true).is_err());
    }

    #[test]
    fn profile_identity_examples() {
        let sts = SizeProfile::from_counts([(3, 7)]);
        let p = profile_identities(&sts, 7, 7, 0).unwrap();
        assert_eq!((p.residual_eq1, p.residual_eq2, p.residual_eq4), (0, 0, 0));
        assert_eq!(p.z_from_eq3, q(21, 1));
        let ex = SizeProfile::from_counts([(2, 4), (3, 6), (4, 1)]);
        let p = profile_identities(&ex, 8, 11, 0).unwrap();
        assert_eq!((p.residual_eq1, p.residual_eq2), (0, 0));
        assert_eq!(p.z_from_eq3, q(30, 1));
        let five = SizeProfile::from_counts([(5, 1)]);
        let p = profile_identities(&five, 5, 1, 0).unwrap();
        assert_eq!(p.residual_eq2, 0);
        assert_eq!(p.z_from_eq3, upper_bounds(5, 1).u_minus - q(1, 3));
        assert_eq!(
            profile_identities(&five, 5, 1, -1),
            Err(BoundsError::NegativeDefect(-1))
        );
    }

    #[test]
    fn packing_sizes() {
        let got: Vec<u64> = (4..=10).map(max_packing_triples).collect();
        assert_eq!(got, vec![1, 2, 4, 7, 8, 12, 13]);
    }

    #[test]
    fn rational_format() {
        assert_eq!(format_rational(&q(61, 2)), "61/2");
        assert_eq!(format_rational(&q(4, 2)), "2");
    }
}
