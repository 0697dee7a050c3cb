//! The ♯ involution on restricted paths and multipartitions.
//!
//! For a (Λ', Λ'')-restricted path p with p_k = Σ_i a_i(k) Λ_i, the image is
//! (♯p)_k = Σ_i a_i(k) Λ_{k−i}, a length-preserving bijection onto the
//! (♯Λ'', ♯Λ')-restricted paths.  Passing through highest lifts gives the
//! bijection λ ↦ ♯λ between Y(Λ', Λ'') and Y(♯Λ'', ♯Λ'), characterised by
//! colour complementation: the length-k rows of ♯λ end in colour r exactly
//! as often as those of λ begin in colour −r.
//!
//! Specialising Λ' to a fundamental weight Λ_u yields a direct membership
//! test for Y(Λ_u, Λ): collect all rows of λ into a single partition
//! coloured with charge −u and compare end colours, no crystal or
//! ε-computation required.

use crate::error::{Error, Result};
use crate::multipartition::{ColoredMultipartition, FockAmbient, Partition};
use crate::path::{ground_point, pi, EtaStep, Path};
use crate::weights::{reduce, AffineWeight};

/// The image of a restricted path under ♯.
///
/// Takes the Λ''-path q together with the shift weight Λ' (so p = q + Λ' is
/// the restricted path) and returns the ♯Λ'-path r = ♯p − ♯Λ'' together with
/// its own shift weight ♯Λ''.
pub fn sharp_path(q: &Path, lambda_prime: &AffineWeight) -> Result<(Path, AffineWeight)> {
    if !q.is_restricted(lambda_prime)? {
        return Err(Error::Precondition(format!(
            "path is not ({lambda_prime}, {})-restricted",
            q.highest_weight()
        )));
    }
    let n = q.ambient().n();
    let lambda_second = q.highest_weight();
    let sharp_second = lambda_second.sharp();
    let sharp_prime = lambda_prime.sharp();
    let image_ambient = FockAmbient::from_weight(&sharp_prime)?;
    let k_star = q.len() as i64;
    // Image points r_k = ♯p_k − ♯Λ'' for 0 ≤ k ≤ k*.
    let image_point = |k: i64| -> AffineWeight {
        let p_k = &q.point(k) + lambda_prime;
        let mut out = AffineWeight::zero(n).expect("n >= 2");
        for (i, &a) in p_k.lambda_coeffs().iter().enumerate() {
            if a != 0 {
                out = &out
                    + &AffineWeight::fundamental(n, k - i as i64)
                        .expect("n >= 2")
                        .scaled(a);
            }
        }
        &out - &sharp_second
    };
    let mut steps = Vec::new();
    for k in 0..k_star {
        let diff = &image_point(k + 1) - &image_point(k);
        steps.push(eta_from_difference(n, &diff, image_ambient.components())?);
    }
    // Beyond k* the image must already follow its own ground steps.
    let tail = &image_point(k_star) - &ground_point(&image_ambient, k_star);
    if !tail.is_zero() {
        return Err(Error::Inconsistency(
            "sharp image does not reach its ground state".into(),
        ));
    }
    let image = Path::from_steps(image_ambient, steps)?;
    if image.len() != q.len() {
        return Err(Error::Inconsistency(
            "sharp image changed the path length".into(),
        ));
    }
    Ok((image, sharp_second))
}

/// Solve d = Σ_j ε_{γ_j} for a sorted residue multiset of size l; errors when
/// no nonnegative integer solution exists.
fn eta_from_difference(n: u32, diff: &AffineWeight, l: usize) -> Result<EtaStep> {
    if diff.delta_coeff() != 0 {
        return Err(Error::Inconsistency("step with a delta part".into()));
    }
    // With ν_i the multiplicity of ε_i: coeff_i(d) = ν_{i−1} − ν_i.
    // Set ν_i = x − (c_1 + ⋯ + c_i); Σν = l pins x.
    let c = diff.lambda_coeffs();
    let mut partial = vec![0i64; n as usize]; // partial[i] = c_1 + … + c_i
    for i in 1..n as usize {
        partial[i] = partial[i - 1] + c[i];
    }
    let sum_partial: i64 = partial.iter().sum();
    let numer = l as i64 + sum_partial;
    if numer % n as i64 != 0 {
        return Err(Error::Inconsistency(format!(
            "difference {diff} is not a sum of {l} epsilons"
        )));
    }
    let x = numer / n as i64;
    let mut residues = Vec::with_capacity(l);
    #[allow(clippy::needless_range_loop)]
    for i in 0..n as usize {
        let nu = x - partial[i];
        if nu < 0 {
            return Err(Error::Inconsistency(format!(
                "difference {diff} needs a negative multiplicity"
            )));
        }
        for _ in 0..nu {
            residues.push(i as u32);
        }
    }
    if residues.len() != l {
        return Err(Error::Inconsistency(format!(
            "difference {diff} has total multiplicity {} != {l}",
            residues.len()
        )));
    }
    EtaStep::new(n, residues)
}

/// ♯λ for λ ∈ Y(Λ', Λ''): the unique element of Y(♯Λ'', ♯Λ') whose length-k
/// rows end in colour r as often as those of λ begin in colour −r.
///
/// Computed through paths: ♯λ = highest_lift(♯(π(λ) + Λ') − ♯Λ'').
pub fn sharp_multipartition(
    mp: &ColoredMultipartition,
    lambda_prime: &AffineWeight,
) -> Result<ColoredMultipartition> {
    if !mp.is_highest_lift()? {
        return Err(Error::Precondition(
            "sharp is defined on highest-lift multipartitions only".into(),
        ));
    }
    let q = pi(mp)?;
    let (image, _) = sharp_path(&q, lambda_prime)?;
    image.highest_lift()
}

/// The one-line algorithm for level-one Λ': collect all rows of λ into a
/// single partition, coloured with charge −u where Λ' = Λ_u.  Used as an
/// independent cross-check of [`sharp_multipartition`].
pub fn sharp_multipartition_level1(
    mp: &ColoredMultipartition,
    lambda_prime: &AffineWeight,
) -> Result<ColoredMultipartition> {
    if !lambda_prime.is_fundamental() {
        return Err(Error::Unsupported(
            "the row-collection algorithm needs a fundamental weight".into(),
        ));
    }
    let n = mp.n();
    let u = lambda_prime
        .lambda_coeffs()
        .iter()
        .position(|&a| a == 1)
        .expect("fundamental weight") as i64;
    let mut rows: Vec<u32> = mp
        .components()
        .iter()
        .flat_map(|p| p.parts().iter().copied())
        .collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    let charge = reduce(-u, n) as u32;
    ColoredMultipartition::new(
        FockAmbient::new(n, vec![charge])?,
        vec![Partition::new(rows)?],
    )
}

/// Membership test for Y(Λ_u, Λ) by row collection (no ε computation):
/// the single partition with λ's row lengths, coloured with charge −u, must
/// be a highest lift for Λ_{−u}, and for every k > 0 its length-k left-end
/// colours must be the complements −r of λ's length-k right-end colours.
pub fn js_membership_fundamental(mp: &ColoredMultipartition, u: u32) -> Result<bool> {
    if !mp.is_highest_lift()? {
        return Err(Error::Precondition(
            "membership test is defined on highest-lift multipartitions".into(),
        ));
    }
    let n = mp.n();
    if u >= n {
        return Err(Error::Precondition(format!("colour {u} out of range")));
    }
    let mut rows: Vec<u32> = mp
        .components()
        .iter()
        .flat_map(|p| p.parts().iter().copied())
        .collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    let charge = reduce(-(u as i64), n) as u32;
    let underline = ColoredMultipartition::new(
        FockAmbient::new(n, vec![charge])?,
        vec![Partition::new(rows)?],
    )?;
    if !underline.is_highest_lift()? {
        return Ok(false);
    }
    let mut lengths: Vec<u32> = underline.components()[0].parts().to_vec();
    lengths.dedup();
    for k in lengths {
        let left: Vec<u32> = underline.left_end_colours(k);
        let mut right_complement: Vec<u32> = mp
            .right_end_colours(k)
            .into_iter()
            .map(|r| reduce(-(r as i64), n) as u32)
            .collect();
        right_complement.sort_unstable();
        if left != right_complement {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::multipartitions_up_to;

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

    fn w(n: u32, s: &str) -> AffineWeight {
        AffineWeight::parse(n, s).unwrap()
    }

    #[test]
    fn sharp_of_ground_state() {
        // Ground of (Λ', Λ'') maps to ground of (♯Λ'', ♯Λ').
        let q = Path::ground_state(&w(3, "1*L0+1*L1")).unwrap();
        let lp = w(3, "1*L1+2*L2");
        let (image, new_prime) = sharp_path(&q, &lp).unwrap();
        assert_eq!(image.len(), 0);
        assert_eq!(image.highest_weight(), lp.sharp());
        assert_eq!(new_prime, w(3, "1*L0+1*L1").sharp());
    }

    #[test]
    fn sharp_rejects_unrestricted_input() {
        let m = mp(3, &[1, 1, 2], &[&[4, 2], &[3, 1], &[5]]);
        let q = pi(&m).unwrap();
        assert!(sharp_path(&q, &w(3, "2*L0")).is_err());
        assert!(sharp_path(&q, &w(3, "3*L0")).is_ok());
    }

    #[test]
    fn three_component_worked_example() {
        // λ ∈ Y(Λ_1+2Λ_2, Λ_0+Λ_1) maps to the triple with charges (1,1,2).
        let lam = mp(3, &[0, 1], &[&[9, 8, 7, 5, 4, 4, 1, 1], &[9, 9, 7, 6, 5, 3, 3]]);
        let lp = w(3, "1*L1+2*L2");
        let image = sharp_multipartition(&lam, &lp).unwrap();
        assert_eq!(
            image.to_compact(),
            "[[9,9,5,4,3,3],[9,8,5,1,1],[7,7,6,4]]@1,1,2"
        );
        // Colour complementation at every row length, and row multisets agree.
        let n = 3;
        for k in 1..=lam.max_part().max(image.max_part()) {
            let mut expect: Vec<u32> = lam
                .left_end_colours(k)
                .into_iter()
                .map(|r| reduce(-(r as i64), n) as u32)
                .collect();
            expect.sort_unstable();
            assert_eq!(image.right_end_colours(k), expect, "k={k}");
            assert_eq!(
                image.right_end_colours(k).len(),
                lam.right_end_colours(k).len()
            );
        }
    }

    #[test]
    fn single_partition_worked_example() {
        // The n=4 highest-lift triple collapses to one partition under ♯.
        let lam = mp(
            4,
            &[0, 0, 1],
            &[&[10, 10, 8, 4, 4], &[9, 9, 1, 1], &[10, 7, 1]],
        );
        let lp = w(4, "1*L0");
        let image = sharp_multipartition(&lam, &lp).unwrap();
        assert_eq!(
            image.to_compact(),
            "[[10,10,10,9,9,8,7,4,4,1,1,1]]@0"
        );
        // The level-one greedy algorithm agrees.
        let greedy = sharp_multipartition_level1(&lam, &lp).unwrap();
        assert_eq!(image, greedy);
    }

    #[test]
    fn empty_maps_to_empty() {
        let e = ColoredMultipartition::empty(ambient(3, &[0, 1]));
        let lp = w(3, "1*L2");
        let image = sharp_multipartition(&e, &lp).unwrap();
        assert_eq!(image.size(), 0);
    }

    #[test]
    fn involution_and_length_preservation_exhaustive() {
        // Over all restricted paths of length ≤ 5 for small weight pairs.
        for n in [2u32, 3] {
            let mut weights: Vec<AffineWeight> = Vec::new();
            for i in 0..n {
                weights.push(AffineWeight::fundamental(n, i as i64).unwrap());
                for j in i..n {
                    weights.push(
                        &AffineWeight::fundamental(n, i as i64).unwrap()
                            + &AffineWeight::fundamental(n, j as i64).unwrap(),
                    );
                }
            }
            for lp in &weights {
                for ls in &weights {
                    let paths =
                        crate::path::enumerate_restricted_paths(lp, ls, 5).unwrap();
                    for q in paths {
                        let (image, new_prime) = sharp_path(&q, lp).unwrap();
                        assert_eq!(image.len(), q.len(), "length preserved");
                        assert_eq!(new_prime, ls.sharp());
                        assert!(image.is_restricted(&new_prime).unwrap());
                        // Involution.
                        let (back, back_prime) = sharp_path(&image, &new_prime).unwrap();
                        assert_eq!(back, q, "sharp is an involution");
                        assert_eq!(back_prime, lp.sharp().sharp());
                    }
                }
            }
        }
    }

    #[test]
    fn membership_fundamental_worked_example() {
        // n=4, Λ=Λ_1+2Λ_3: membership holds exactly for u=3.
        let lam = mp(
            4,
            &[1, 3, 3],
            &[&[9, 8, 6, 3, 3], &[10, 10, 6, 6, 5, 1, 1], &[8, 4, 4, 3]],
        );
        assert!(lam.is_highest_lift().unwrap());
        for u in 0..4 {
            assert_eq!(
                js_membership_fundamental(&lam, u).unwrap(),
                u == 3,
                "u={u}"
            );
        }
        // Empty multipartition passes for every u.
        let e = ColoredMultipartition::empty(ambient(4, &[1, 3, 3]));
        for u in 0..4 {
            assert!(js_membership_fundamental(&e, u).unwrap());
        }
        // Non-highest-lift input is a precondition error.
        let bad = mp(4, &[1, 3, 3], &[&[], &[], &[1]]);
        assert!(js_membership_fundamental(&bad, 0).is_err());
    }

    #[test]
    fn membership_agrees_with_eps_filter() {
        // js_membership_fundamental(λ, u) ⟺ ε_u ≤ 1 and ε_i = 0 for i ≠ u.
        for n in [2u32, 3] {
            for charges in [vec![0], vec![0, 1 % n], vec![0, 0]] {
                let amb = ambient(n, &charges);
                for m in multipartitions_up_to(&amb, 7) {
                    if !m.is_highest_lift().unwrap() {
                        continue;
                    }
                    for u in 0..n {
                        let by_rows = js_membership_fundamental(&m, u).unwrap();
                        let by_eps = (0..n).all(|i| {
                            let e = m.eps(i).unwrap();
                            if i == u {
                                e <= 1
                            } else {
                                e == 0
                            }
                        });
                        assert_eq!(by_rows, by_eps, "{m} u={u} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn sharp_multipartition_respects_eps_filter_image() {
        // The image of Y(Λ',Λ'') lands in Y(♯Λ'',♯Λ') and the map is
        // injective on the size-bounded set.
        let n = 2;
        let lp = w(n, "1*L0");
        let ls = w(n, "1*L0+1*L1");
        let amb = FockAmbient::from_weight(&ls).unwrap();
        let mut images = Vec::new();
        for m in multipartitions_up_to(&amb, 6) {
            if !m.is_highest_lift().unwrap() {
                continue;
            }
            let ok = (0..n).all(|i| m.eps(i).unwrap() as i64 <= lp.coeff(i as i64));
            if !ok {
                continue;
            }
            let image = sharp_multipartition(&m, &lp).unwrap();
            assert!(image.is_highest_lift().unwrap());
            // Image restricted by ♯Λ''.
            let sp = ls.sharp();
            for i in 0..n {
                assert!(image.eps(i).unwrap() as i64 <= sp.coeff(i as i64));
            }
            // Colour complementation at every row length of the pair.
            for k in 1..=m.max_part().max(image.max_part()) {
                let mut expect: Vec<u32> = m
                    .left_end_colours(k)
                    .into_iter()
                    .map(|r| reduce(-(r as i64), n) as u32)
                    .collect();
                expect.sort_unstable();
                assert_eq!(image.right_end_colours(k), expect, "{m} k={k}");
            }
            // Same row-length multiset.
            let mut a: Vec<u32> = m
                .components()
                .iter()
                .flat_map(|p| p.parts().iter().copied())
                .collect();
            let mut b: Vec<u32> = image
                .components()
                .iter()
                .flat_map(|p| p.parts().iter().copied())
                .collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
            images.push(image);
        }
        let count = images.len();
        assert!(count >= 10, "sample unexpectedly small: {count}");
        images.sort();
        images.dedup();
        assert_eq!(images.len(), count, "sharp is injective on the sample");
    }
}
