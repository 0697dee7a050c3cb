//! Sparse integer Laurent polynomials in q.
//!
//! The q-Fock action only ever produces monomials q^N, so sums of its matrix
//! entries stay in Z[q, q^{-1}]; division is never needed.

use std::collections::BTreeMap;
use std::fmt;

/// An element of Z[q, q^{-1}], stored sparsely with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// c·q^e.
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// q^e.
    pub fn q_power(e: i64) -> Self {
        LaurentPoly::monomial(1, e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (&e, &c) in &other.coeffs {
            self.add_term(c, e);
        }
    }

    pub fn add_term(&mut self, c: i64, e: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// Multiply by q^e.
    pub fn shifted(&self, e: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k + e, c)).collect(),
        }
    }

    /// The bar involution q ↦ q^{-1}.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Evaluate at q = 1.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Text form like `q^-3 + 2*q`, terms by ascending exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, &c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let power = match e {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{e}"),
            };
            if power.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let p = &LaurentPoly::q_power(2) + &LaurentPoly::monomial(3, -1);
        let q = LaurentPoly::monomial(-3, -1);
        let sum = &p + &q;
        assert_eq!(sum, LaurentPoly::q_power(2));
        assert!( (&p + &p.neg()).is_zero());
        let prod = p.mul(&LaurentPoly::q_power(1));
        assert_eq!(prod.coefficient(3), 1);
        assert_eq!(prod.coefficient(0), 3);
    }

    #[test]
    fn bar_and_eval() {
        let p = &LaurentPoly::q_power(3) + &LaurentPoly::monomial(2, -1);
        assert_eq!(p.bar(), &LaurentPoly::q_power(-3) + &LaurentPoly::monomial(2, 1));
        assert_eq!(p.bar().bar(), p);
        assert_eq!(p.eval_one(), 3);
    }

    #[test]
    fn display_form() {
        let p = &LaurentPoly::q_power(-3) + &LaurentPoly::monomial(2, 1);
        assert_eq!(p.to_string(), "q^-3 + 2*q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        let m = &LaurentPoly::monomial(-1, 0) + &LaurentPoly::q_power(2);
        assert_eq!(m.to_string(), "-1 + q^2");
    }
}
