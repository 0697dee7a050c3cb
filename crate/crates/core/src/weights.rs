//! The affine weight lattice of type A_{n-1}^(1) and its classical projection.
//!
//! An affine weight is an integer combination of the fundamental weights
//! Λ_0, …, Λ_{n-1} and the null root δ; indices are always read modulo n,
//! so Λ_i makes sense for any integer i.  The basic symbols are
//!
//! - simple roots      α_i = 2Λ_i − Λ_{i−1} − Λ_{i+1} + δ_{i0} δ,
//! - classical roots   α'_i = −Λ_{i−1} + 2Λ_i − Λ_{i+1}   (no δ term),
//! - weights of C^n    ε_i = Λ_{i+1} − Λ_i,
//!
//! together with the rotation σ(Λ_i) = Λ_{i−1} and the diagram involution
//! ♯Λ_i = Λ_{−i}.
//!
//! Classical (sl_n) weights are stored as centered rational n-vectors, so the
//! Weyl group S_n acts by permuting coordinates and the form (·,·) is the dot
//! product.  The construction is checked against the closed formula
//! (Λ_i, Λ_j) = min(i,j) − ij/n in the tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used everywhere in place of floating point.
pub type Rat = BigRational;

/// Build a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Default bound on n for operations that iterate over all of S_n.
pub const PERMUTATION_BOUND: usize = 8;

/// An integral weight of A_{n-1}^(1): integer coefficients on Λ_0..Λ_{n-1}
/// plus an integer multiple of δ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeight {
    n: u32,
    lambda: Vec<i64>,
    delta: i64,
}

impl AffineWeight {
    /// The zero weight for modulus n.
    pub fn zero(n: u32) -> Result<Self> {
        check_modulus(n)?;
        Ok(AffineWeight {
            n,
            lambda: vec![0; n as usize],
            delta: 0,
        })
    }

    /// Construct from explicit coefficients (length must equal n).
    pub fn new(n: u32, lambda: Vec<i64>, delta: i64) -> Result<Self> {
        check_modulus(n)?;
        if lambda.len() != n as usize {
            return Err(Error::Precondition(format!(
                "coefficient vector has length {}, expected {}",
                lambda.len(),
                n
            )));
        }
        Ok(AffineWeight { n, lambda, delta })
    }

    /// The fundamental weight Λ_{i mod n}.
    pub fn fundamental(n: u32, i: i64) -> Result<Self> {
        let mut w = AffineWeight::zero(n)?;
        w.lambda[reduce(i, n)] = 1;
        Ok(w)
    }

    /// The null root δ.
    pub fn delta(n: u32) -> Result<Self> {
        let mut w = AffineWeight::zero(n)?;
        w.delta = 1;
        Ok(w)
    }

    /// The simple root α_i = 2Λ_i − Λ_{i−1} − Λ_{i+1} + δ iff i ≡ 0 (mod n).
    pub fn simple_root(n: u32, i: i64) -> Result<Self> {
        let mut w = AffineWeight::alpha_prime(n, i)?;
        if reduce(i, n) == 0 {
            w.delta = 1;
        }
        Ok(w)
    }

    /// The classical root α'_i = −Λ_{i−1} + 2Λ_i − Λ_{i+1} (δ-free).
    pub fn alpha_prime(n: u32, i: i64) -> Result<Self> {
        let mut w = AffineWeight::zero(n)?;
        w.lambda[reduce(i, n)] += 2;
        w.lambda[reduce(i - 1, n)] -= 1;
        w.lambda[reduce(i + 1, n)] -= 1;
        Ok(w)
    }

    /// ε_i = Λ_{i+1} − Λ_i.
    pub fn epsilon(n: u32, i: i64) -> Result<Self> {
        let mut w = AffineWeight::zero(n)?;
        w.lambda[reduce(i + 1, n)] += 1;
        w.lambda[reduce(i, n)] -= 1;
        Ok(w)
    }

    /// ρ = Λ_0 + ⋯ + Λ_{n−1}.
    pub fn rho(n: u32) -> Result<Self> {
        check_modulus(n)?;
        Ok(AffineWeight {
            n,
            lambda: vec![1; n as usize],
            delta: 0,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// Coefficient of Λ_{i mod n}.
    pub fn coeff(&self, i: i64) -> i64 {
        self.lambda[reduce(i, self.n)]
    }

    /// The coefficient vector on Λ_0..Λ_{n−1}.
    pub fn lambda_coeffs(&self) -> &[i64] {
        &self.lambda
    }

    pub fn delta_coeff(&self) -> i64 {
        self.delta
    }

    /// The level: the sum of the Λ-coefficients.
    pub fn level(&self) -> i64 {
        self.lambda.iter().sum()
    }

    /// True when every Λ-coefficient is nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&a| a >= 0)
    }

    /// True when the weight is a fundamental weight Λ_u (level 1, dominant,
    /// no δ part).
    pub fn is_fundamental(&self) -> bool {
        self.delta == 0 && self.is_dominant() && self.level() == 1
    }

    /// σ: Λ_i ↦ Λ_{i−1}, δ fixed.
    pub fn sigma(&self) -> Self {
        let n = self.n;
        let mut lambda = vec![0; n as usize];
        for i in 0..n as usize {
            lambda[reduce(i as i64 - 1, n)] += self.lambda[i];
        }
        AffineWeight {
            n,
            lambda,
            delta: self.delta,
        }
    }

    /// ♯: Λ_i ↦ Λ_{−i}, δ fixed.  An involution.
    pub fn sharp(&self) -> Self {
        let n = self.n;
        let mut lambda = vec![0; n as usize];
        for i in 0..n as usize {
            lambda[reduce(-(i as i64), n)] += self.lambda[i];
        }
        AffineWeight {
            n,
            lambda,
            delta: self.delta,
        }
    }

    /// Λ_i ↦ Λ_{i+s}, δ fixed (σ is shift_indices(-1)).
    pub fn shift_indices(&self, s: i64) -> Self {
        let n = self.n;
        let mut lambda = vec![0; n as usize];
        for i in 0..n as usize {
            lambda[reduce(i as i64 + s, n)] += self.lambda[i];
        }
        AffineWeight {
            n,
            lambda,
            delta: self.delta,
        }
    }

    /// The natural projection onto the classical weight space:
    /// Λ̄_i = Λ_i − Λ_0 and δ̄ = 0.
    pub fn classical_projection(&self) -> ClassicalWeight {
        let n = self.n as usize;
        let mut coords = vec![Rat::zero(); n];
        for (i, &a) in self.lambda.iter().enumerate().skip(1) {
            if a != 0 {
                let a = Rat::from(BigInt::from(a));
                // ω_i centered: 1 − i/n on the first i coordinates, −i/n after.
                let shift = rat(i as i64, n as i64);
                for (k, c) in coords.iter_mut().enumerate() {
                    if k < i {
                        *c += &a * (Rat::one() - &shift);
                    } else {
                        *c += &a * (-&shift);
                    }
                }
            }
        }
        ClassicalWeight { n: self.n, coords }
    }

    /// The invariant bilinear form:
    /// (Λ_i, Λ_j) = min(i,j) − ij/n, (δ, Λ_i) = 1, (δ, δ) = 0.
    pub fn bilinear(&self, other: &AffineWeight) -> Result<Rat> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(format!(
                "modulus {} vs {}",
                self.n, other.n
            )));
        }
        let n = self.n as i64;
        let mut acc = Rat::zero();
        for (i, &a) in self.lambda.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.lambda.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let (i, j) = (i as i64, j as i64);
                let form = rat(i.min(j), 1) - rat(i * j, n);
                acc += rat(a * b, 1) * form;
            }
        }
        // (δ, Λ_j) = 1 and (Λ_i, δ) = 1.
        acc += rat(self.delta * other.level() + other.delta * self.level(), 1);
        Ok(acc)
    }

    /// |w|² = (w, w).
    pub fn norm_sq(&self) -> Rat {
        self.bilinear(self).expect("same modulus")
    }

    pub fn is_zero(&self) -> bool {
        self.delta == 0 && self.lambda.iter().all(|&a| a == 0)
    }

    /// Scale by an integer.
    pub fn scaled(&self, c: i64) -> Self {
        AffineWeight {
            n: self.n,
            lambda: self.lambda.iter().map(|a| a * c).collect(),
            delta: self.delta * c,
        }
    }

    /// Add a multiple of δ.
    pub fn plus_delta(&self, c: i64) -> Self {
        let mut w = self.clone();
        w.delta += c;
        w
    }

    /// The sorted charge vector (v_0 ≤ … ≤ v_{l−1}) of a dominant δ-free
    /// weight of positive level: Λ = Λ_{v_0} + ⋯ + Λ_{v_{l−1}}.
    pub fn charges(&self) -> Result<Vec<u32>> {
        if !self.is_dominant() || self.delta != 0 {
            return Err(Error::Precondition(format!(
                "expected a dominant delta-free weight, got {self}"
            )));
        }
        let mut charges = Vec::new();
        for (i, &a) in self.lambda.iter().enumerate() {
            for _ in 0..a {
                charges.push(i as u32);
            }
        }
        if charges.is_empty() {
            return Err(Error::Precondition("weight has level 0".into()));
        }
        Ok(charges)
    }

    /// Parse the text syntax used by the CLI and JSON files, e.g.
    /// `"2*L0+L1-3*d"`.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        check_modulus(n)?;
        let mut w = AffineWeight::zero(n)?;
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty weight string".into()));
        }
        if s == "0" {
            return Ok(w);
        }
        // Split into signed terms.
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        for (pos, c) in s.chars().enumerate() {
            match c {
                '+' | '-' => {
                    if pos == 0 {
                        sign = if c == '-' { -1 } else { 1 };
                    } else {
                        if cur.is_empty() {
                            return Err(Error::Parse(format!("empty term in '{text}'")));
                        }
                        terms.push((sign, std::mem::take(&mut cur)));
                        sign = if c == '-' { -1 } else { 1 };
                    }
                }
                _ => cur.push(c),
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing sign in '{text}'")));
        }
        terms.push((sign, cur));
        for (sign, term) in terms {
            let (coeff, symbol) = match term.split_once('*') {
                Some((c, sym)) => {
                    let c: i64 = c
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{c}' in '{text}'")))?;
                    (c, sym)
                }
                None => (1, term.as_str()),
            };
            if symbol == "d" {
                w.delta += sign * coeff;
            } else if let Some(idx) = symbol.strip_prefix('L') {
                let idx: i64 = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index '{symbol}' in '{text}'")))?;
                w.lambda[reduce(idx, n)] += sign * coeff;
            } else {
                return Err(Error::Parse(format!("unknown symbol '{symbol}' in '{text}'")));
            }
        }
        Ok(w)
    }
}

impl fmt::Display for AffineWeight {
    /// Canonical form, e.g. `2*L0+1*L1-3*d`; round-trips through [`AffineWeight::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &a) in self.lambda.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if wrote && a > 0 {
                write!(f, "+")?;
            }
            write!(f, "{a}*L{i}")?;
            wrote = true;
        }
        if self.delta != 0 {
            if wrote && self.delta > 0 {
                write!(f, "+")?;
            }
            write!(f, "{}*d", self.delta)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: &AffineWeight) -> AffineWeight {
        assert_eq!(self.n, rhs.n, "modulus mismatch in weight addition");
        AffineWeight {
            n: self.n,
            lambda: self
                .lambda
                .iter()
                .zip(&rhs.lambda)
                .map(|(a, b)| a + b)
                .collect(),
            delta: self.delta + rhs.delta,
        }
    }
}

impl std::ops::Sub for &AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: &AffineWeight) -> AffineWeight {
        assert_eq!(self.n, rhs.n, "modulus mismatch in weight subtraction");
        AffineWeight {
            n: self.n,
            lambda: self
                .lambda
                .iter()
                .zip(&rhs.lambda)
                .map(|(a, b)| a - b)
                .collect(),
            delta: self.delta - rhs.delta,
        }
    }
}

impl std::ops::Neg for &AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        self.scaled(-1)
    }
}

/// A classical (sl_n) weight stored as a centered rational n-vector:
/// coordinates sum to zero and S_n acts by permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassicalWeight {
    n: u32,
    coords: Vec<Rat>,
}

impl ClassicalWeight {
    pub fn zero(n: u32) -> Result<Self> {
        check_modulus(n)?;
        Ok(ClassicalWeight {
            n,
            coords: vec![Rat::zero(); n as usize],
        })
    }

    /// Build from coordinates, centering them (subtracting the mean).
    pub fn from_coords(n: u32, coords: Vec<Rat>) -> Result<Self> {
        check_modulus(n)?;
        if coords.len() != n as usize {
            return Err(Error::Precondition(format!(
                "coordinate vector has length {}, expected {}",
                coords.len(),
                n
            )));
        }
        let mean = coords.iter().sum::<Rat>() / rat(n as i64, 1);
        let coords = coords.into_iter().map(|c| c - &mean).collect();
        Ok(ClassicalWeight { n, coords })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The centered dot product, which realizes the form (·,·) on h̄*.
    pub fn bilinear(&self, other: &ClassicalWeight) -> Result<Rat> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(format!(
                "modulus {} vs {}",
                self.n, other.n
            )));
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm_sq(&self) -> Rat {
        self.bilinear(self).expect("same modulus")
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        ClassicalWeight {
            n: self.n,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Apply the permutation π (as a coordinate relabelling: new(i) = old(π(i))).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ClassicalWeight {
            n: self.n,
            coords: perm.iter().map(|&i| self.coords[i].clone()).collect(),
        }
    }

    /// True when the weight lies in the root lattice Q̄ (integer centered
    /// coordinates).
    pub fn in_root_lattice(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// All n! terms (sgn(π), π·w) of the Weyl orbit sum.
    pub fn weyl_orbit_terms(&self) -> Result<Vec<(i64, ClassicalWeight)>> {
        self.weyl_orbit_terms_with_bound(PERMUTATION_BOUND)
    }

    /// As [`Self::weyl_orbit_terms`] with an explicit bound on n.
    pub fn weyl_orbit_terms_with_bound(&self, bound: usize) -> Result<Vec<(i64, ClassicalWeight)>> {
        let n = self.n as usize;
        if n > bound {
            return Err(Error::ResourceLimit(format!(
                "Weyl orbit of S_{n} exceeds the permutation bound {bound}"
            )));
        }
        let mut out = Vec::new();
        for perm in permutations(n) {
            out.push((permutation_sign(&perm), self.permuted(&perm)));
        }
        Ok(out)
    }
}

impl std::ops::Add for &ClassicalWeight {
    type Output = ClassicalWeight;
    fn add(self, rhs: &ClassicalWeight) -> ClassicalWeight {
        assert_eq!(self.n, rhs.n, "modulus mismatch in classical addition");
        ClassicalWeight {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &ClassicalWeight {
    type Output = ClassicalWeight;
    fn sub(self, rhs: &ClassicalWeight) -> ClassicalWeight {
        assert_eq!(self.n, rhs.n, "modulus mismatch in classical subtraction");
        ClassicalWeight {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &ClassicalWeight {
    type Output = ClassicalWeight;
    fn neg(self) -> ClassicalWeight {
        ClassicalWeight {
            n: self.n,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// Reduce an integer index to [0, n).
pub fn reduce(i: i64, n: u32) -> usize {
    i.rem_euclid(n as i64) as usize
}

fn check_modulus(n: u32) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidModulus(n))
    } else {
        Ok(())
    }
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// The sign of a permutation, by inversion count.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A formal character: multiplicities indexed by affine weight.
pub type WeightMultiplicities = BTreeMap<AffineWeight, u64>;
