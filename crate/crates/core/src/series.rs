//! Truncated power series in z with an exact rational exponent offset.
//!
//! A series is c_0 z^offset + c_1 z^{offset+1} + ⋯ + c_N z^{offset+N} with
//! integer coefficients; everything below the offset is zero and everything
//! above offset+N is unknown.  Theta functions and eta powers live here
//! (offsets like 1/20 or −1/24), and branching functions are the integral
//! (offset 0) case.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::{rat, Rat};

/// A truncated z-series with a global rational exponent offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSeries {
    offset: Rat,
    coeffs: Vec<i64>,
}

impl ShiftedSeries {
    /// The zero series known to relative order `truncation`.
    pub fn zero(truncation: usize) -> Self {
        ShiftedSeries {
            offset: Rat::zero(),
            coeffs: vec![0; truncation + 1],
        }
    }

    /// The constant series 1 known to relative order `truncation`.
    pub fn one(truncation: usize) -> Self {
        let mut s = ShiftedSeries::zero(truncation);
        s.coeffs[0] = 1;
        s
    }

    pub fn new(offset: Rat, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("series needs a window".into()));
        }
        Ok(ShiftedSeries { offset, coeffs })
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// Relative truncation order: coefficients are known for exponents
    /// offset..=offset+truncation().
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of z^{offset + k}.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Multiply by z^e.
    pub fn shifted(&self, e: &Rat) -> ShiftedSeries {
        ShiftedSeries {
            offset: &self.offset + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scaled(&self, c: i64) -> ShiftedSeries {
        ShiftedSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    /// Sum; offsets must differ by an integer.  The result window is the
    /// intersection of the known windows.
    pub fn try_add(&self, other: &ShiftedSeries) -> Result<ShiftedSeries> {
        let diff = &other.offset - &self.offset;
        if !diff.is_integer() {
            return Err(Error::Precondition(format!(
                "offsets {} and {} differ by a non-integer",
                self.offset, other.offset
            )));
        }
        let shift = diff
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::ResourceLimit("offset shift overflow".into()))?;
        // Align to the smaller offset.
        let (low, high, shift) = if shift >= 0 {
            (self, other, shift as usize)
        } else {
            (other, self, (-shift) as usize)
        };
        // Known window: low up to low.trunc; high contributes from `shift`
        // up to shift + high.trunc.  Below `shift` the high series is zero
        // (nothing below its offset), so the sum is known up to
        // min(low.trunc, shift + high.trunc).
        let last = low.truncation().min(shift + high.truncation());
        let mut coeffs = vec![0i64; last + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = low.coeff(k) + if k >= shift { high.coeff(k - shift) } else { 0 };
        }
        Ok(ShiftedSeries {
            offset: low.offset.clone(),
            coeffs,
        })
    }

    /// Product; the result is known to the smaller relative truncation.
    pub fn mul(&self, other: &ShiftedSeries) -> ShiftedSeries {
        let trunc = self.truncation().min(other.truncation());
        let mut coeffs = vec![0i64; trunc + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 || i > trunc {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j > trunc {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        ShiftedSeries {
            offset: &self.offset + &other.offset,
            coeffs,
        }
    }

    /// Normalize an integral series to offset 0 by absorbing the integer
    /// offset into the coefficient window.  Errors when the offset is not an
    /// integer or when a nonzero coefficient would sit at a negative power.
    pub fn normalized_integral(&self) -> Result<ShiftedSeries> {
        if !self.offset.is_integer() {
            return Err(Error::Inconsistency(format!(
                "series offset {} is not an integer",
                self.offset
            )));
        }
        let s = self
            .offset
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::ResourceLimit("offset overflow".into()))?;
        if s >= 0 {
            let mut coeffs = vec![0i64; s as usize];
            coeffs.extend_from_slice(&self.coeffs);
            Ok(ShiftedSeries {
                offset: Rat::zero(),
                coeffs,
            })
        } else {
            let cut = (-s) as usize;
            if self.coeffs.iter().take(cut).any(|&c| c != 0) {
                return Err(Error::Inconsistency(
                    "nonzero coefficient at a negative power".into(),
                ));
            }
            if cut >= self.coeffs.len() {
                return Err(Error::Inconsistency("window entirely negative".into()));
            }
            Ok(ShiftedSeries {
                offset: Rat::zero(),
                coeffs: self.coeffs[cut..].to_vec(),
            })
        }
    }

    /// Equality of the coefficients of z^0..z^order for offset-0 series.
    pub fn agrees_to_order(&self, other: &ShiftedSeries, order: usize) -> bool {
        if !self.offset.is_zero() || !other.offset.is_zero() {
            return false;
        }
        if self.truncation() < order || other.truncation() < order {
            return false;
        }
        (0..=order).all(|k| self.coeff(k) == other.coeff(k))
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            offset: self.offset.to_string(),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<ShiftedSeries> {
        let offset: Rat = json
            .offset
            .parse()
            .map_err(|e| Error::Parse(format!("bad offset '{}': {e}", json.offset)))?;
        ShiftedSeries::new(offset, json.coeffs.clone())
    }
}

/// JSON form {"offset":"1/120","coeffs":[…]}.
#[derive(Serialize, serde::Deserialize)]
pub struct SeriesJson {
    pub offset: String,
    pub coeffs: Vec<i64>,
}

impl fmt::Display for ShiftedSeries {
    /// `c0 + c1*z + c2*z^2 + ...`, with a leading z^offset factor when the
    /// offset is nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.offset.is_zero() {
            write!(f, "z^({}) * (", self.offset)?;
        }
        let mut wrote = false;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "z")?,
                1 => write!(f, "{mag}*z")?,
                _ if mag == 1 => write!(f, "z^{k}")?,
                _ => write!(f, "{mag}*z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        if !self.offset.is_zero() {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The Euler product ∏_{k≥1} (1 − z^k) truncated at `truncation`.
fn euler_product(truncation: usize) -> ShiftedSeries {
    let mut acc = ShiftedSeries::one(truncation);
    for k in 1..=truncation {
        let mut factor = ShiftedSeries::one(truncation);
        factor.coeffs[k] = -1;
        acc = acc.mul(&factor);
    }
    acc
}

/// Multiplicative inverse of a series with constant term ±1 and offset 0.
fn invert_unit(series: &ShiftedSeries) -> Result<ShiftedSeries> {
    if !series.offset.is_zero() || series.coeffs[0].abs() != 1 {
        return Err(Error::Precondition(
            "inversion needs offset 0 and unit constant term".into(),
        ));
    }
    let trunc = series.truncation();
    let c0 = series.coeffs[0];
    let mut inv = vec![0i64; trunc + 1];
    inv[0] = c0;
    for k in 1..=trunc {
        let mut acc = 0i64;
        for j in 1..=k {
            acc += series.coeffs[j] * inv[k - j];
        }
        inv[k] = -c0 * acc;
    }
    ShiftedSeries::new(Rat::zero(), inv)
}

/// η(z)^e = z^{e/24} ∏ (1 − z^k)^e as a shifted series, exact for any
/// integer e (negative powers via series inversion).
pub fn eta_power(e: i64, truncation: usize) -> Result<ShiftedSeries> {
    let base = euler_product(truncation);
    let mut acc = ShiftedSeries::one(truncation);
    let factor = if e >= 0 { base } else { invert_unit(&base)? };
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul(&factor);
    }
    Ok(acc.shifted(&(rat(e, 24))))
}

/// Lattice points of Q̄ (integer centered vectors summing to zero) with
/// (m/2)|α + μ/m|² ≤ bound, returned with their exact exponents.
///
/// `mu_over_m` is the centered rational vector μ/m.  Coordinate ranges are
/// padded beyond the exact ball and membership is decided by the exact
/// exponent inequality, so no boundary point is missed.
fn lattice_points_in_ball(
    mu_over_m: &[Rat],
    m: i64,
    bound: &Rat,
) -> Vec<(Vec<i64>, Rat)> {
    let n = mu_over_m.len();
    let mut out = Vec::new();
    if bound.is_negative() {
        return out;
    }
    // |α_i + c_i| ≤ sqrt(2 bound / m) for every coordinate.
    let radius_sq = rat(2, m) * bound;
    let radius_bound = isqrt_upper(&radius_sq) + 1;
    let mut coords = vec![0i64; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: usize,
        radius_bound: i64,
        mu_over_m: &[Rat],
        m: i64,
        bound: &Rat,
        coords: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, Rat)>,
    ) {
        if i == n - 1 {
            // Last coordinate forced by the zero-sum constraint.
            let partial: i64 = coords[..n - 1].iter().sum();
            coords[n - 1] = -partial;
            let exponent = exponent_at(coords, mu_over_m, m);
            if &exponent <= bound {
                out.push((coords.clone(), exponent));
            }
            return;
        }
        let center = -&mu_over_m[i];
        let lo = floor_int(&(&center - rat(radius_bound, 1))) ;
        let hi = ceil_int(&(&center + rat(radius_bound, 1)));
        for c in lo..=hi {
            coords[i] = c;
            rec(i + 1, n, radius_bound, mu_over_m, m, bound, coords, out);
        }
    }
    rec(
        0,
        n,
        radius_bound,
        mu_over_m,
        m,
        bound,
        &mut coords,
        &mut out,
    );
    out
}

/// (m/2) Σ (α_i + μ_i/m)².
fn exponent_at(coords: &[i64], mu_over_m: &[Rat], m: i64) -> Rat {
    let mut acc = Rat::zero();
    for (c, mu) in coords.iter().zip(mu_over_m) {
        let v = rat(*c, 1) + mu;
        acc += &v * &v;
    }
    acc * rat(m, 2)
}

/// An integer u with u ≥ sqrt(x) for nonnegative rational x.
fn isqrt_upper(x: &Rat) -> i64 {
    if x.is_negative() {
        return 0;
    }
    let ceil = x.ceil().to_integer();
    let mut u = BigInt::from(0);
    while &u * &u < ceil {
        u += 1;
    }
    u.to_i64().unwrap_or(i64::MAX)
}

fn floor_int(x: &Rat) -> i64 {
    x.floor().to_integer().to_i64().expect("small bound")
}

fn ceil_int(x: &Rat) -> i64 {
    x.ceil().to_integer().to_i64().expect("small bound")
}

/// The theta function Θ_{μ,m}(z) = Σ_{α ∈ Q̄} z^{(m/2)|α + μ/m|²}, truncated
/// to its lowest `truncation + 1` exponent classes.
///
/// All exponents of one theta differ by integers; that is asserted and a
/// violation reported as an inconsistency (it signals a bad μ or m).
pub fn theta_series(
    mu: &crate::weights::ClassicalWeight,
    m: i64,
    truncation: usize,
) -> Result<ShiftedSeries> {
    if m < 1 {
        return Err(Error::Precondition(format!("theta index m={m} must be positive")));
    }
    let n = mu.modulus() as usize;
    let mu_over_m: Vec<Rat> = mu.coords().iter().map(|c| c / rat(m, 1)).collect();
    // Exponent at α = 0 bounds the minimum from above.
    let e0 = exponent_at(&vec![0; n], &mu_over_m, m);
    let bound = &e0 + rat(truncation as i64, 1);
    let points = lattice_points_in_ball(&mu_over_m, m, &bound);
    let min_exp = points
        .iter()
        .map(|(_, e)| e.clone())
        .min()
        .unwrap_or_else(|| e0.clone());
    let mut coeffs = vec![0i64; truncation + 1];
    for (_, e) in &points {
        let rel = e - &min_exp;
        if !rel.is_integer() {
            return Err(Error::Inconsistency(format!(
                "theta exponents not congruent mod 1: {e} vs {min_exp}"
            )));
        }
        let k = rel.to_integer().to_i64().expect("small");
        if k >= 0 && (k as usize) <= truncation {
            coeffs[k as usize] += 1;
        }
    }
    ShiftedSeries::new(min_exp, coeffs)
}
