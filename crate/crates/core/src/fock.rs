//! The q-deformed level-l Fock space and its tensor squares.
//!
//! Vectors are finite Z[q,q^{-1}]-combinations of multipartition basis
//! vectors v_λ.  The Chevalley action is
//!
//! - f_r v_λ = Σ_μ q^{N_r^>(λ,μ)} v_μ   (μ = λ plus an addable r-node),
//! - e_r v_μ = Σ_λ q^{−N_r^<(λ,μ)} v_λ  (λ = μ minus a removable r-node),
//! - q^{h_r} v_λ = q^{N_r(λ)} v_λ,  q^d v_λ = q^{−N^0(λ)} v_λ,
//!
//! where N_r^>/< count addable-minus-removable r-nodes above/below the moved
//! node in the (d, j) order and N_r is the global count.  Tensor products
//! carry the coproduct Δ(e_i) = e_i⊗q^{−h_i} + 1⊗e_i,
//! Δ(f_i) = f_i⊗1 + q^{h_i}⊗f_i, and the semi-linear map
//! (Σ φ_λ(q) v_λ)' = Σ φ_λ(q^{−1}) v_{λ'} intertwines the action with its
//! ♯-twist (e_i ↦ e_{−i}).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multipartition::{ColoredMultipartition, FockAmbient, NodeKind, Partition};
use crate::weights::reduce;

type Key = Vec<Partition>;

/// A finite linear combination of multipartition basis vectors with Laurent
/// polynomial coefficients, all in one Fock ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    ambient: FockAmbient,
    terms: BTreeMap<Key, LaurentPoly>,
}

/// For each addable r-node: the enlarged part list and the exponent
/// N_r^>(λ,μ).
fn f_moves(mp: &ColoredMultipartition, r: u32) -> Result<Vec<(Key, i64)>> {
    let sig = mp.r_signature(r)?;
    // suffix[i] = (addables minus removables) strictly after position i.
    let mut suffix = vec![0i64; sig.len() + 1];
    for i in (0..sig.len()).rev() {
        let w = match sig[i].kind {
            NodeKind::Addable => 1,
            NodeKind::Removable => -1,
        };
        suffix[i] = suffix[i + 1] + w;
    }
    let mut out = Vec::new();
    for (i, node) in sig.iter().enumerate() {
        if node.kind == NodeKind::Addable {
            let mut parts = mp.components().to_vec();
            parts[node.component] = add_cell(&parts[node.component], node.row as usize);
            out.push((parts, suffix[i + 1]));
        }
    }
    Ok(out)
}

/// For each removable r-node: the shrunken part list and the exponent
/// −N_r^<(λ,μ), where the counts are taken in the smaller multipartition λ.
fn e_moves(mp: &ColoredMultipartition, r: u32) -> Result<Vec<(Key, i64)>> {
    let sig = mp.r_signature(r)?;
    let mut out = Vec::new();
    for node in &sig {
        if node.kind == NodeKind::Removable {
            let mut parts = mp.components().to_vec();
            parts[node.component] = remove_cell(&parts[node.component], node.row as usize);
            let smaller =
                ColoredMultipartition::new(mp.ambient().clone(), parts.clone()).expect("valid");
            let mut below = 0i64;
            for other in smaller.r_signature(r)? {
                if (other.diagonal, other.component) == (node.diagonal, node.component) {
                    continue;
                }
                let less = other.diagonal < node.diagonal
                    || (other.diagonal == node.diagonal && other.component > node.component);
                if less {
                    below += match other.kind {
                        NodeKind::Addable => 1,
                        NodeKind::Removable => -1,
                    };
                }
            }
            out.push((parts, -below));
        }
    }
    Ok(out)
}

fn add_cell(p: &Partition, row: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    if row == parts.len() + 1 {
        parts.push(1);
    } else {
        parts[row - 1] += 1;
    }
    Partition::new(parts).expect("adding an addable node keeps a partition")
}

fn remove_cell(p: &Partition, row: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    parts[row - 1] -= 1;
    if parts[row - 1] == 0 {
        parts.remove(row - 1);
    }
    Partition::new(parts).expect("removing a removable node keeps a partition")
}

impl FockVector {
    pub fn zero(ambient: FockAmbient) -> Self {
        FockVector {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector v_λ.
    pub fn basis(mp: &ColoredMultipartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mp.components().to_vec(), LaurentPoly::one());
        FockVector {
            ambient: mp.ambient().clone(),
            terms,
        }
    }

    /// The vacuum vector v_∅ of F(Λ).
    pub fn vacuum(ambient: FockAmbient) -> Self {
        FockVector::basis(&ColoredMultipartition::empty(ambient))
    }

    pub fn ambient(&self) -> &FockAmbient {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of v_λ.
    pub fn coefficient(&self, mp: &ColoredMultipartition) -> LaurentPoly {
        self.terms
            .get(mp.components())
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in canonical (lexicographic key) order.
    pub fn iter(&self) -> impl Iterator<Item = (ColoredMultipartition, &LaurentPoly)> + '_ {
        self.terms.iter().map(move |(k, c)| {
            (
                ColoredMultipartition::new(self.ambient.clone(), k.clone()).expect("valid key"),
                c,
            )
        })
    }

    fn add_term(&mut self, key: Key, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_default();
        entry.add_assign(&coeff);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn try_add(&self, other: &FockVector) -> Result<FockVector> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                "cannot add Fock vectors from different ambients".into(),
            ));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero(self.ambient.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    fn map_basis<F>(&self, mut f: F) -> Result<FockVector>
    where
        F: FnMut(&ColoredMultipartition) -> Result<Vec<(Key, LaurentPoly)>>,
    {
        let mut out = FockVector::zero(self.ambient.clone());
        for (k, c) in &self.terms {
            let mp = ColoredMultipartition::new(self.ambient.clone(), k.clone())?;
            for (key, poly) in f(&mp)? {
                out.add_term(key, poly.mul(c));
            }
        }
        Ok(out)
    }

    /// f_r, by the q-power rule.
    pub fn f(&self, r: u32) -> Result<FockVector> {
        self.map_basis(|mp| {
            Ok(f_moves(mp, r)?
                .into_iter()
                .map(|(key, e)| (key, LaurentPoly::q_power(e)))
                .collect())
        })
    }

    /// e_r, by the q-power rule.
    pub fn e(&self, r: u32) -> Result<FockVector> {
        self.map_basis(|mp| {
            Ok(e_moves(mp, r)?
                .into_iter()
                .map(|(key, e)| (key, LaurentPoly::q_power(e)))
                .collect())
        })
    }

    /// q^{power·h_r}: multiplies the coefficient of v_λ by q^{power·N_r(λ)}.
    pub fn apply_qh(&self, r: u32, power: i64) -> Result<FockVector> {
        if r >= self.ambient.n() {
            return Err(Error::Precondition(format!("colour {r} out of range")));
        }
        self.map_basis(|mp| {
            Ok(vec![(
                mp.components().to_vec(),
                LaurentPoly::q_power(power * mp.n_r(r)),
            )])
        })
    }

    /// q^{power·d}: multiplies the coefficient of v_λ by q^{−power·N^0(λ)}.
    pub fn apply_qd(&self, power: i64) -> Result<FockVector> {
        self.map_basis(|mp| {
            Ok(vec![(
                mp.components().to_vec(),
                LaurentPoly::q_power(-power * mp.degree() as i64),
            )])
        })
    }

    /// The classical (q = 1) lowering operator: adds every addable r-node
    /// with coefficient 1.
    pub fn classical_f(&self, r: u32) -> Result<FockVector> {
        self.map_basis(|mp| {
            Ok(f_moves(mp, r)?
                .into_iter()
                .map(|(key, _)| (key, LaurentPoly::one()))
                .collect())
        })
    }

    /// The classical (q = 1) raising operator.
    pub fn classical_e(&self, r: u32) -> Result<FockVector> {
        self.map_basis(|mp| {
            Ok(e_moves(mp, r)?
                .into_iter()
                .map(|(key, _)| (key, LaurentPoly::one()))
                .collect())
        })
    }

    /// Specialize every coefficient at q = 1.
    pub fn at_q_one(&self) -> FockVector {
        let mut out = FockVector::zero(self.ambient.clone());
        for (k, c) in &self.terms {
            out.add_term(k.clone(), LaurentPoly::monomial(c.eval_one(), 0));
        }
        out
    }

    /// The bilinear scalar product for which {v_λ} is orthonormal.
    pub fn scalar(&self, other: &FockVector) -> Result<LaurentPoly> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                "scalar product needs a common ambient".into(),
            ));
        }
        let mut acc = LaurentPoly::zero();
        for (k, c) in &self.terms {
            if let Some(d) = other.terms.get(k) {
                acc.add_assign(&c.mul(d));
            }
        }
        Ok(acc)
    }

    /// The semi-linear map v_λ ↦ v_{λ'} , φ(q) ↦ φ(q^{−1}), landing in the
    /// standard (sorted-charge) Fock space of ♯Λ.
    ///
    /// The conjugate-reversed tuple carries charges (−v_{l−1−j}) mod n in
    /// component order; identifying it with a basis label of F(♯Λ) requires
    /// the stable reorder into sorted charges, because the node order uses
    /// actual diagonals k − i + v_j with charge representatives in [0, n).
    pub fn prime(&self) -> FockVector {
        let sorted_ambient = ColoredMultipartition::empty(self.ambient.sharp())
            .sorted_by_charge()
            .ambient()
            .clone();
        let mut out = FockVector::zero(sorted_ambient);
        for (k, c) in &self.terms {
            let mp = ColoredMultipartition::new(self.ambient.clone(), k.clone()).expect("valid");
            let image = mp.conjugate_reverse().sorted_by_charge();
            out.add_term(image.components().to_vec(), c.bar());
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mp = ColoredMultipartition::new(self.ambient.clone(), k.clone()).expect("valid");
            write!(f, "({c})*v{mp}")?;
        }
        Ok(())
    }
}

/// A vector of F(Λ') ⊗ F(Λ'').
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorFockVector {
    left: FockAmbient,
    right: FockAmbient,
    terms: BTreeMap<(Key, Key), LaurentPoly>,
}

impl TensorFockVector {
    pub fn zero(left: FockAmbient, right: FockAmbient) -> Result<Self> {
        if left.n() != right.n() {
            return Err(Error::AmbientMismatch(
                "tensor factors must share the modulus".into(),
            ));
        }
        Ok(TensorFockVector {
            left,
            right,
            terms: BTreeMap::new(),
        })
    }

    pub fn basis(left: &ColoredMultipartition, right: &ColoredMultipartition) -> Result<Self> {
        let mut w = TensorFockVector::zero(left.ambient().clone(), right.ambient().clone())?;
        w.add_term(
            (left.components().to_vec(), right.components().to_vec()),
            LaurentPoly::one(),
        );
        Ok(w)
    }

    pub fn ambients(&self) -> (&FockAmbient, &FockAmbient) {
        (&self.left, &self.right)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (Key, Key), coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_default();
        entry.add_assign(&coeff);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn try_add(&self, other: &TensorFockVector) -> Result<TensorFockVector> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::AmbientMismatch(
                "cannot add tensors from different ambients".into(),
            ));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &LaurentPoly) -> TensorFockVector {
        let mut out = self.clone();
        out.terms = BTreeMap::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    pub fn coefficient(&self, left: &ColoredMultipartition, right: &ColoredMultipartition) -> LaurentPoly {
        self.terms
            .get(&(left.components().to_vec(), right.components().to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    fn mp(&self, side: bool, key: &Key) -> ColoredMultipartition {
        let ambient = if side { &self.left } else { &self.right };
        ColoredMultipartition::new(ambient.clone(), key.clone()).expect("valid key")
    }

    /// Δ(f_r) = f_r ⊗ 1 + q^{h_r} ⊗ f_r.
    pub fn f(&self, r: u32) -> Result<TensorFockVector> {
        let mut out = TensorFockVector::zero(self.left.clone(), self.right.clone())?;
        for ((lk, rk), c) in &self.terms {
            let lmp = self.mp(true, lk);
            let rmp = self.mp(false, rk);
            for (key, e) in f_moves(&lmp, r)? {
                out.add_term((key, rk.clone()), c.mul(&LaurentPoly::q_power(e)));
            }
            let twist = lmp.n_r(r);
            for (key, e) in f_moves(&rmp, r)? {
                out.add_term((lk.clone(), key), c.mul(&LaurentPoly::q_power(e + twist)));
            }
        }
        Ok(out)
    }

    /// Δ(e_r) = e_r ⊗ q^{−h_r} + 1 ⊗ e_r.
    pub fn e(&self, r: u32) -> Result<TensorFockVector> {
        let mut out = TensorFockVector::zero(self.left.clone(), self.right.clone())?;
        for ((lk, rk), c) in &self.terms {
            let lmp = self.mp(true, lk);
            let rmp = self.mp(false, rk);
            let twist = -rmp.n_r(r);
            for (key, e) in e_moves(&lmp, r)? {
                out.add_term((key, rk.clone()), c.mul(&LaurentPoly::q_power(e + twist)));
            }
            for (key, e) in e_moves(&rmp, r)? {
                out.add_term((lk.clone(), key), c.mul(&LaurentPoly::q_power(e)));
            }
        }
        Ok(out)
    }

    /// Δ(q^{power·h_r}) = q^{power·h_r} ⊗ q^{power·h_r}.
    pub fn apply_qh(&self, r: u32, power: i64) -> Result<TensorFockVector> {
        if r >= self.left.n() {
            return Err(Error::Precondition(format!("colour {r} out of range")));
        }
        let mut out = TensorFockVector::zero(self.left.clone(), self.right.clone())?;
        for ((lk, rk), c) in &self.terms {
            let total = self.mp(true, lk).n_r(r) + self.mp(false, rk).n_r(r);
            out.add_term(
                (lk.clone(), rk.clone()),
                c.mul(&LaurentPoly::q_power(power * total)),
            );
        }
        Ok(out)
    }

    /// (u ⊗ v)' = v' ⊗ u', extended semi-linearly; each factor lands in its
    /// standard sorted-charge Fock space.
    pub fn prime(&self) -> TensorFockVector {
        let sorted = |a: &FockAmbient| {
            ColoredMultipartition::empty(a.sharp())
                .sorted_by_charge()
                .ambient()
                .clone()
        };
        let mut out = TensorFockVector {
            left: sorted(&self.right),
            right: sorted(&self.left),
            terms: BTreeMap::new(),
        };
        for ((lk, rk), c) in &self.terms {
            let lmp = self.mp(true, lk).conjugate_reverse().sorted_by_charge();
            let rmp = self.mp(false, rk).conjugate_reverse().sorted_by_charge();
            out.add_term(
                (rmp.components().to_vec(), lmp.components().to_vec()),
                c.bar(),
            );
        }
        out
    }

    /// Bilinear scalar product with orthonormal monomial tensors.
    pub fn scalar(&self, other: &TensorFockVector) -> Result<LaurentPoly> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::AmbientMismatch(
                "scalar product needs common ambients".into(),
            ));
        }
        let mut acc = LaurentPoly::zero();
        for (k, c) in &self.terms {
            if let Some(d) = other.terms.get(k) {
                acc.add_assign(&c.mul(d));
            }
        }
        Ok(acc)
    }

    /// True when every e_r kills the vector.
    pub fn is_highest_weight(&self) -> Result<bool> {
        for r in 0..self.left.n() {
            if !self.e(r)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The colour −r mod n, the ♯-twist of a colour.
pub fn sharp_colour(n: u32, r: u32) -> u32 {
    reduce(-(r as i64), n) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ambient(n: u32, charges: &[u32]) -> FockAmbient {
        FockAmbient::new(n, charges.to_vec()).unwrap()
    }

    fn mp(n: u32, charges: &[u32], parts: &[&[u32]]) -> ColoredMultipartition {
        ColoredMultipartition::from_parts(
            ambient(n, charges),
            parts.iter().map(|p| p.to_vec()).collect(),
        )
        .unwrap()
    }

    /// The triple of the worked q-action example: n=3, Λ = 2Λ_1 + Λ_2.
    fn base() -> ColoredMultipartition {
        mp(3, &[1, 1, 2], &[&[3, 2], &[1, 1, 1], &[5, 4, 1]])
    }

    fn qp(e: i64) -> LaurentPoly {
        LaurentPoly::q_power(e)
    }

    #[test]
    fn f_action_matches_worked_example() {
        let v = FockVector::basis(&base());
        // f_0 kills the vector.
        assert!(v.f(0).unwrap().is_zero());
        // f_1: coefficients q, q, 1, 1 on the four targets.
        let f1 = v.f(1).unwrap();
        assert_eq!(f1.len(), 4);
        assert_eq!(f1.coefficient(&mp(3, &[1, 1, 2], &[&[4, 2], &[1, 1, 1], &[5, 4, 1]])), qp(1));
        assert_eq!(f1.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2], &[1, 1, 1, 1], &[5, 4, 1]])), qp(1));
        assert_eq!(f1.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2], &[1, 1, 1], &[6, 4, 1]])), qp(0));
        assert_eq!(f1.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2], &[1, 1, 1], &[5, 4, 2]])), qp(0));
        // f_2: coefficients q, q^3, q^2, 1, q^3 on the five targets.
        let f2 = v.f(2).unwrap();
        assert_eq!(f2.len(), 5);
        assert_eq!(f2.coefficient(&mp(3, &[1, 1, 2], &[&[3, 3], &[1, 1, 1], &[5, 4, 1]])), qp(1));
        assert_eq!(f2.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2, 1], &[1, 1, 1], &[5, 4, 1]])), qp(3));
        assert_eq!(f2.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2], &[2, 1, 1], &[5, 4, 1]])), qp(2));
        assert_eq!(f2.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2], &[1, 1, 1], &[5, 5, 1]])), qp(0));
        assert_eq!(f2.coefficient(&mp(3, &[1, 1, 2], &[&[3, 2], &[1, 1, 1], &[5, 4, 1, 1]])), qp(3));
    }

    #[test]
    fn q_one_specialization_matches_classical_action() {
        let v = FockVector::basis(&base());
        for r in 0..3 {
            assert_eq!(v.f(r).unwrap().at_q_one(), v.classical_f(r).unwrap());
            assert_eq!(v.e(r).unwrap().at_q_one(), v.classical_e(r).unwrap());
        }
        // The classical f_1 has the three-plus-one targets with coefficient 1.
        let c = v.classical_f(1).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|(_, coeff)| *coeff == LaurentPoly::one()));
        // f on the empty partition with the wrong colour vanishes.
        let vac = FockVector::vacuum(ambient(3, &[0]));
        assert!(vac.classical_f(1).unwrap().is_zero());
        assert!(!vac.classical_f(0).unwrap().is_zero());
    }

    #[test]
    fn e_f_single_node_round_trip() {
        let vac = FockVector::vacuum(ambient(3, &[2]));
        let one = vac.f(2).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.e(2).unwrap(), vac);
    }

    #[test]
    fn qh_and_qd_eigenvalues() {
        // q^{h_0} on the vacuum of 2Λ_0 multiplies by q^2.
        let vac = FockVector::vacuum(ambient(2, &[0, 0]));
        assert_eq!(
            vac.apply_qh(0, 1).unwrap(),
            vac.scaled(&qp(2))
        );
        // q^d on the worked example multiplies by q^{-7}.
        let v = FockVector::basis(&base());
        assert_eq!(v.apply_qd(1).unwrap(), v.scaled(&qp(-7)));
    }

    #[test]
    fn scalar_product() {
        let v = FockVector::basis(&base());
        assert_eq!(v.scalar(&v).unwrap(), LaurentPoly::one());
        let other = FockVector::vacuum(ambient(3, &[1, 1, 2]));
        assert_eq!(v.scalar(&other).unwrap(), LaurentPoly::zero());
        // ⟨f_1 v, f_1 v⟩ = 2q² + 2.
        let f1 = v.f(1).unwrap();
        let norm = f1.scalar(&f1).unwrap();
        let expect = &LaurentPoly::monomial(2, 2) + &LaurentPoly::monomial(2, 0);
        assert_eq!(norm, expect);
        assert!(v.scalar(&FockVector::vacuum(ambient(3, &[0]))).is_err());
    }

    #[test]
    fn prime_map_basics() {
        // prime of the vacuum is the vacuum of the sharp-weight ambient.
        let vac = FockVector::vacuum(ambient(3, &[0, 1]));
        let p = vac.prime();
        assert_eq!(p.ambient(), &ambient(3, &[0, 2]));
        assert_eq!(p.len(), 1);
        // Semi-linearity: q^3 v ↦ q^{-3} v'.
        let v = FockVector::basis(&base()).scaled(&qp(3));
        let pv = v.prime();
        let image = base().conjugate_reverse().sorted_by_charge();
        assert_eq!(pv.coefficient(&image), qp(-3));
    }

    fn random_vector(amb: &FockAmbient, seed: &mut u64, size: u32) -> FockVector {
        let mut next = move || {
            *seed ^= *seed << 13;
            *seed ^= *seed >> 7;
            *seed ^= *seed << 17;
            *seed
        };
        let all = crate::multipartition::multipartitions_up_to(amb, size);
        let mut v = FockVector::zero(amb.clone());
        for _ in 0..3 {
            let m = &all[(next() % all.len() as u64) as usize];
            let c = LaurentPoly::monomial((next() % 5) as i64 - 2, (next() % 5) as i64 - 2);
            v = v.try_add(&FockVector::basis(m).scaled(&c)).unwrap();
        }
        v
    }

    #[test]
    fn adjointness_identities() {
        // ⟨f_i u, v⟩ = ⟨u, q^{h_i−1} e_i v⟩ and ⟨e_i u, v⟩ = ⟨u, q^{−1−h_i} f_i v⟩.
        let mut seed = 0x1234_5678_9abc_def0u64;
        for n in [2u32, 3] {
            for charges in [vec![0], vec![0, 1 % n]] {
                let amb = ambient(n, &charges);
                for _ in 0..8 {
                    let u = random_vector(&amb, &mut seed, 5);
                    let v = random_vector(&amb, &mut seed, 5);
                    for i in 0..n {
                        let lhs = u.f(i).unwrap().scalar(&v).unwrap();
                        let rhs = u
                            .scalar(&v.e(i).unwrap().apply_qh(i, 1).unwrap().scaled(&qp(-1)))
                            .unwrap();
                        assert_eq!(lhs, rhs, "f-adjoint n={n} i={i}");
                        let lhs = u.e(i).unwrap().scalar(&v).unwrap();
                        let rhs = u
                            .scalar(&v.f(i).unwrap().apply_qh(i, -1).unwrap().scaled(&qp(-1)))
                            .unwrap();
                        assert_eq!(lhs, rhs, "e-adjoint n={n} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn n_r_balance_matches_qh() {
        // N_r(λ) is the addable-minus-removable balance; q^{h_r} uses it.
        for m in crate::multipartition::multipartitions_up_to(&ambient(3, &[0, 2]), 4) {
            for r in 0..3 {
                let v = FockVector::basis(&m);
                let scaled = v.apply_qh(r, 1).unwrap();
                assert_eq!(scaled.coefficient(&m), qp(m.n_r(r)));
            }
        }
    }

    #[test]
    fn prime_intertwines_the_sharp_action() {
        // f_{−i}(u') = (q^{−1−h_i} f_i u)' on random vectors.
        let mut seed = 0xfeed_face_0123_4567u64;
        for n in [2u32, 3] {
            for charges in [
                vec![0],
                vec![0, 0],
                vec![0, 1 % n],
                vec![1 % n, 1 % n],
                vec![1 % n, n - 1],
                vec![0, 0, n - 1],
                vec![0, n - 1, n - 1],
            ] {
                let amb = ambient(n, &charges);
                for _ in 0..8 {
                    let u = random_vector(&amb, &mut seed, 4);
                    for i in 0..n {
                        let lhs = u.prime().f(sharp_colour(n, i)).unwrap();
                        let rhs = u
                            .f(i)
                            .unwrap()
                            .apply_qh(i, -1)
                            .unwrap()
                            .scaled(&qp(-1))
                            .prime();
                        assert_eq!(lhs, rhs, "n={n} i={i} charges={charges:?}");
                        let lhs_e = u.prime().e(sharp_colour(n, i)).unwrap();
                        let rhs_e = u
                            .e(i)
                            .unwrap()
                            .apply_qh(i, 1)
                            .unwrap()
                            .scaled(&qp(-1))
                            .prime();
                        assert_eq!(lhs_e, rhs_e, "e: n={n} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_f_structure_on_vacua() {
        // Δ(f_r)(v_∅ ⊗ v_∅) adds one r-node on either side, with the
        // q^{N_r} twist on the right-hand terms.
        let l = ambient(2, &[0]);
        let r = ambient(2, &[0]);
        let w = TensorFockVector::basis(
            &ColoredMultipartition::empty(l.clone()),
            &ColoredMultipartition::empty(r.clone()),
        )
        .unwrap();
        let fw = w.f(0).unwrap();
        let one = mp(2, &[0], &[&[1]]);
        let e = ColoredMultipartition::empty(l);
        assert_eq!(fw.coefficient(&one, &e), qp(0));
        assert_eq!(fw.coefficient(&e, &one), qp(1));
        assert!(w.f(1).unwrap().is_zero());
    }

    #[test]
    fn tensor_prime_intertwines_sharp_action() {
        let mut seed = 0x0bad_cafe_dead_beefu64;
        for n in [2u32, 3] {
            let la = ambient(n, &[0]);
            let ra = ambient(n, &[1 % n, 1 % n]);
            for _ in 0..10 {
                let u = random_vector(&la, &mut seed, 3);
                let v = random_vector(&ra, &mut seed, 3);
                let mut w = TensorFockVector::zero(la.clone(), ra.clone()).unwrap();
                for (lm, lc) in u.iter() {
                    for (rm, rc) in v.iter() {
                        w = w
                            .try_add(&TensorFockVector::basis(&lm, &rm).unwrap().scaled(&lc.mul(rc)))
                            .unwrap();
                    }
                }
                for i in 0..n {
                    let lhs = w.prime().f(sharp_colour(n, i)).unwrap();
                    let rhs = w
                        .f(i)
                        .unwrap()
                        .apply_qh(i, -1)
                        .unwrap()
                        .scaled(&qp(-1))
                        .prime();
                    assert_eq!(lhs, rhs, "tensor f: n={n} i={i}");
                    let lhs_e = w.prime().e(sharp_colour(n, i)).unwrap();
                    let rhs_e = w
                        .e(i)
                        .unwrap()
                        .apply_qh(i, 1)
                        .unwrap()
                        .scaled(&qp(-1))
                        .prime();
                    assert_eq!(lhs_e, rhs_e, "tensor e: n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn tensor_highest_weight_is_preserved_by_prime() {
        // w = v_{(1)} ⊗ v_∅ − q^{−1} v_∅ ⊗ v_{(1)} is killed by every e_i;
        // its prime must be killed by every e_{−i} too.
        let amb = ambient(2, &[0]);
        let one = mp(2, &[0], &[&[1]]);
        let empty = ColoredMultipartition::empty(amb.clone());
        let w = TensorFockVector::basis(&one, &empty)
            .unwrap()
            .try_add(
                &TensorFockVector::basis(&empty, &one)
                    .unwrap()
                    .scaled(&LaurentPoly::monomial(-1, -1)),
            )
            .unwrap();
        assert!(w.is_highest_weight().unwrap());
        assert!(w.prime().is_highest_weight().unwrap());
    }

    #[test]
    fn level_l_q_one_action_equals_iterated_level_one_coproduct() {
        // At q = 1 the level-2 Fock action is the unquantized coproduct of
        // two level-1 actions: compare against the tensor action evaluated
        // at q = 1, on all multipartitions of size ≤ 4.
        let amb = ambient(3, &[0, 2]);
        let la = ambient(3, &[0]);
        let ra = ambient(3, &[2]);
        for m in crate::multipartition::multipartitions_up_to(&amb, 4) {
            let left = ColoredMultipartition::new(la.clone(), vec![m.components()[0].clone()]).unwrap();
            let right = ColoredMultipartition::new(ra.clone(), vec![m.components()[1].clone()]).unwrap();
            let v = FockVector::basis(&m);
            let w = TensorFockVector::basis(&left, &right).unwrap();
            for r in 0..3 {
                let direct = v.f(r).unwrap().at_q_one();
                let tensored = w.f(r).unwrap();
                // Collapse the tensor back into the level-2 ambient at q=1.
                let mut collapsed = FockVector::zero(amb.clone());
                for ((lk, rk), c) in &tensored.terms {
                    let parts = vec![lk[0].clone(), rk[0].clone()];
                    let key_mp = ColoredMultipartition::new(amb.clone(), parts).unwrap();
                    collapsed = collapsed
                        .try_add(&FockVector::basis(&key_mp).scaled(&LaurentPoly::monomial(c.eval_one(), 0)))
                        .unwrap();
                }
                assert_eq!(direct, collapsed, "{m} r={r}");
            }
        }
    }
}
