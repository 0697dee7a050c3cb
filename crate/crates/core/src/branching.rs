//! Branching functions b^Λ_{Λ'Λ''}(z) and the generalised Jantzen-Seitz
//! generating functions.
//!
//! Three independent computations are provided and cross-checked:
//!
//! 1. restricted multipartitions: coefficient of z^k counts the λ ∈ Y(Λ'')
//!    with ε_i(λ) ≤ ⟨Λ', h_i⟩, wt(λ) ≡ Λ − Λ' (mod δ) and N^0(λ) = k;
//! 2. restricted paths: the same count as Σ z^{E(p)} over p ∈ P(Λ', Λ'')
//!    with p_0 = Λ;
//! 3. for fundamental Λ'', the theta-function closed formula
//!    𝒃 = η^{−(n−1)} Σ_w sgn(w) Θ_{−L(Λ̄'+ρ̄)+(L−1)w(Λ̄+ρ̄), L(L−1)}
//!    with L = n + level(Λ), divided by z^γ where
//!    γ = |Λ'+ρ|²/(2(l'+n)) + |Λ''+ρ|²/(2(l''+n)) − |Λ+ρ|²/(2(l+n)) − |ρ|²/(2n).
//!
//! Summing branching functions over the dominant weight classes congruent to
//! Λ_i + Λ_j modulo the α'-span gives the generating function of the simple
//! Ariki-Koike modules satisfying the condition JS(j): ε_k(b) ≤ j_k for all k.

use num_traits::{ToPrimitive, Zero};

use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};
use crate::multipartition::ColoredMultipartition;
use crate::path::enumerate_restricted_paths;
use crate::series::{eta_power, theta_series, ShiftedSeries};
use crate::weights::{rat, AffineWeight, Rat};

/// Which computation route to use for a branching series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchingMethod {
    Multipartitions,
    Paths,
    Theta,
    /// Run every applicable route and insist they agree.
    All,
}

fn check_branching_inputs(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
) -> Result<()> {
    let n = lambda.modulus();
    if lambda_prime.modulus() != n || lambda_second.modulus() != n {
        return Err(Error::AmbientMismatch("branching weights need one modulus".into()));
    }
    for (name, w) in [
        ("Λ'", lambda_prime),
        ("Λ''", lambda_second),
        ("Λ", lambda),
    ] {
        if !w.is_dominant() || w.delta_coeff() != 0 {
            return Err(Error::Precondition(format!(
                "{name} = {w} must be dominant and delta-free"
            )));
        }
    }
    if lambda.level() != lambda_prime.level() + lambda_second.level() {
        return Err(Error::Precondition(format!(
            "levels are incompatible: {} + {} != {}",
            lambda_prime.level(),
            lambda_second.level(),
            lambda.level()
        )));
    }
    Ok(())
}

/// N^i(λ) − N^0(λ) for every λ ∈ Y(Λ'') with wt(λ) ≡ Λ − Λ' (mod δ);
/// None when the congruence fails (the branching function is then zero).
fn class_offsets(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
) -> Option<Vec<i64>> {
    let n = lambda.modulus() as usize;
    let diff = &(&lambda_second.clone() + lambda_prime) - lambda;
    let coords = diff.classical_projection();
    let mut offsets = vec![0i64; n];
    let mut partial = Rat::zero();
    #[allow(clippy::needless_range_loop)]
    for i in 1..n {
        partial += &coords.coords()[i - 1];
        if !partial.is_integer() {
            return None;
        }
        offsets[i] = partial.to_integer().to_i64().expect("small offset");
    }
    Some(offsets)
}

/// Largest |λ| compatible with N^0 ≤ truncation in the given weight class.
fn size_bound(offsets: &[i64], truncation: usize) -> u32 {
    let n = offsets.len() as i64;
    let total: i64 = offsets.iter().sum();
    (n * truncation as i64 + total).max(0) as u32
}

/// The restricted set Y(Λ', Λ'') up to total size max_degree, by the
/// ε-filter over the crystal of Λ''.
pub fn restricted_y(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    max_degree: u32,
) -> Result<Vec<ColoredMultipartition>> {
    if !lambda_prime.is_dominant() || !lambda_second.is_dominant() {
        return Err(Error::Precondition("restricted set needs dominant weights".into()));
    }
    let n = lambda_second.modulus();
    let graph = CrystalGraph::build_y(lambda_second, max_degree)?;
    let mut out = Vec::new();
    for label in graph.vertices() {
        let mut ok = true;
        for r in 0..n {
            if label.eps(r)? as i64 > lambda_prime.coeff(r as i64) {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(label.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// The same set computed from the path side: highest lifts of the
/// (Λ', Λ'')-restricted paths of length ≤ max_degree, filtered by size.
pub fn restricted_y_via_paths(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    max_degree: u32,
) -> Result<Vec<ColoredMultipartition>> {
    let mut out = Vec::new();
    for p in enumerate_restricted_paths(lambda_prime, lambda_second, max_degree as usize)? {
        let lift = p.highest_lift()?;
        if lift.size() <= max_degree as u64 {
            out.push(lift);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn branching_by_multipartitions(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
    truncation: usize,
) -> Result<ShiftedSeries> {
    let Some(offsets) = class_offsets(lambda_prime, lambda_second, lambda) else {
        return Ok(ShiftedSeries::zero(truncation));
    };
    let bound = size_bound(&offsets, truncation);
    let mut coeffs = vec![0i64; truncation + 1];
    for label in restricted_y(lambda_prime, lambda_second, bound)? {
        let wt = &label.weight() + lambda_prime;
        if wt.lambda_coeffs() == lambda.lambda_coeffs() {
            let k = label.degree() as usize;
            if k <= truncation {
                coeffs[k] += 1;
            }
        }
    }
    ShiftedSeries::new(Rat::zero(), coeffs)
}

fn branching_by_paths(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
    truncation: usize,
) -> Result<ShiftedSeries> {
    let Some(offsets) = class_offsets(lambda_prime, lambda_second, lambda) else {
        return Ok(ShiftedSeries::zero(truncation));
    };
    let bound = size_bound(&offsets, truncation) as usize;
    let target = lambda - lambda_prime;
    let mut coeffs = vec![0i64; truncation + 1];
    for p in enumerate_restricted_paths(lambda_prime, lambda_second, bound)? {
        if p.point(0).lambda_coeffs() != target.lambda_coeffs() {
            continue;
        }
        let energy = p.energy()?;
        if energy < 0 {
            return Err(Error::Inconsistency(format!(
                "negative path energy {energy}"
            )));
        }
        if (energy as usize) <= truncation {
            coeffs[energy as usize] += 1;
        }
    }
    ShiftedSeries::new(Rat::zero(), coeffs)
}

/// γ(Λ', Λ''; Λ): the z-exponent separating the theta-function form from the
/// power-series branching function.
pub fn gamma_exponent(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
) -> Result<Rat> {
    check_branching_inputs(lambda_prime, lambda_second, lambda)?;
    let n = lambda.modulus() as i64;
    let rho = AffineWeight::rho(lambda.modulus())?;
    let term = |w: &AffineWeight, level_shift: i64| -> Result<Rat> {
        let shifted = w + &rho;
        Ok(shifted.norm_sq() / rat(2 * (w.level() + level_shift), 1).clone())
    };
    let mut gamma = term(lambda_prime, n)?;
    gamma += term(lambda_second, n)?;
    gamma -= term(lambda, n)?;
    gamma -= rho.norm_sq() / rat(2 * n, 1);
    Ok(gamma)
}

/// The theta-function route, valid for fundamental Λ''.
pub fn theta_branching(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
    truncation: usize,
) -> Result<ShiftedSeries> {
    check_branching_inputs(lambda_prime, lambda_second, lambda)?;
    if !lambda_second.is_fundamental() {
        return Err(Error::Unsupported(format!(
            "the theta formula needs a fundamental Λ'', got {lambda_second}"
        )));
    }
    // Outside the congruence class the branching function vanishes.
    let congruent = (&(lambda - lambda_prime) - lambda_second)
        .classical_projection()
        .in_root_lattice();
    if !congruent {
        return Ok(ShiftedSeries::zero(truncation));
    }
    let n = lambda.modulus();
    let level = lambda.level();
    let big_l = n as i64 + level;
    let m = big_l * (big_l - 1);
    let rho_bar = AffineWeight::rho(n)?.classical_projection();
    let prime_shift = &lambda_prime.classical_projection() + &rho_bar;
    let lam_shift = &lambda.classical_projection() + &rho_bar;
    let mut sum: Option<ShiftedSeries> = None;
    for (sign, image) in lam_shift.weyl_orbit_terms()? {
        let mu = &prime_shift.scaled(&rat(-big_l, 1)) + &image.scaled(&rat(big_l - 1, 1));
        let theta = theta_series(&mu, m, truncation)?.scaled(sign);
        sum = Some(match sum {
            None => theta,
            Some(acc) => acc.try_add(&theta)?,
        });
    }
    let sum = sum.expect("nonempty Weyl group");
    let eta = eta_power(-(n as i64 - 1), truncation)?;
    let bold = eta.mul(&sum);
    let gamma = gamma_exponent(lambda_prime, lambda_second, lambda)?;
    let series = bold.shifted(&(-gamma));
    let normalized = series.normalized_integral().map_err(|e| {
        Error::Inconsistency(format!("theta formula gave a non-integral series: {e}"))
    })?;
    // Trim the window back to the requested truncation.
    let coeffs: Vec<i64> = (0..=truncation).map(|k| normalized.coeff(k)).collect();
    if normalized.truncation() < truncation {
        return Err(Error::Inconsistency(
            "theta computation lost truncation order".into(),
        ));
    }
    ShiftedSeries::new(Rat::zero(), coeffs)
}

/// The branching function b^Λ_{Λ'Λ''}(z) to the requested order.
pub fn branching_series(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    lambda: &AffineWeight,
    truncation: usize,
    method: BranchingMethod,
) -> Result<ShiftedSeries> {
    check_branching_inputs(lambda_prime, lambda_second, lambda)?;
    match method {
        BranchingMethod::Multipartitions => {
            branching_by_multipartitions(lambda_prime, lambda_second, lambda, truncation)
        }
        BranchingMethod::Paths => {
            branching_by_paths(lambda_prime, lambda_second, lambda, truncation)
        }
        BranchingMethod::Theta => theta_branching(lambda_prime, lambda_second, lambda, truncation),
        BranchingMethod::All => {
            let by_mp =
                branching_by_multipartitions(lambda_prime, lambda_second, lambda, truncation)?;
            let by_paths = branching_by_paths(lambda_prime, lambda_second, lambda, truncation)?;
            if !by_mp.agrees_to_order(&by_paths, truncation) {
                return Err(Error::CrossCheck(format!(
                    "branching mismatch: multipartitions {by_mp} vs paths {by_paths}"
                )));
            }
            if lambda_second.is_fundamental() {
                let by_theta = theta_branching(lambda_prime, lambda_second, lambda, truncation)?;
                if !by_mp.agrees_to_order(&by_theta, truncation) {
                    return Err(Error::CrossCheck(format!(
                        "branching mismatch: enumeration {by_mp} vs theta {by_theta}"
                    )));
                }
            }
            Ok(by_mp)
        }
    }
}

/// All dominant δ-free weights of the given level congruent to `base`
/// modulo the span of the classical roots α'_i.
pub fn dominant_weight_classes(base: &AffineWeight) -> Result<Vec<AffineWeight>> {
    let n = base.modulus();
    let level = base.level();
    if level < 0 {
        return Err(Error::Precondition("negative level".into()));
    }
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; n as usize];
    fn rec(
        n: u32,
        base: &AffineWeight,
        remaining: i64,
        i: usize,
        coeffs: &mut Vec<i64>,
        out: &mut Vec<AffineWeight>,
    ) -> Result<()> {
        if i == n as usize - 1 {
            coeffs[i] = remaining;
            let w = AffineWeight::new(n, coeffs.clone(), 0)?;
            if (&w - base).classical_projection().in_root_lattice() {
                out.push(w);
            }
            return Ok(());
        }
        for c in 0..=remaining {
            coeffs[i] = c;
            rec(n, base, remaining - c, i + 1, coeffs, out)?;
        }
        Ok(())
    }
    rec(n, base, level, 0, &mut coeffs, &mut out)?;
    Ok(out)
}

/// The generating function Σ z^{deg b} over the vertices of B(Λ_i)
/// satisfying JS(j), computed by the crystal filter AND by the sum of
/// branching functions over weight classes; the two must agree.
pub fn js_generating_function(
    n: u32,
    i_profile: &[i64],
    j_profile: &[i64],
    truncation: usize,
) -> Result<ShiftedSeries> {
    let lambda_i = profile_weight(n, i_profile)?;
    let lambda_j = profile_weight(n, j_profile)?;
    if lambda_i.level() < 1 {
        return Err(Error::Precondition("i-profile must have positive level".into()));
    }
    let classes = dominant_weight_classes(&(&lambda_i + &lambda_j))?;
    // Direct side: ε-filter over the crystal.
    let mut bound = 0u32;
    for class in &classes {
        if let Some(offsets) = class_offsets(&lambda_j, &lambda_i, class) {
            bound = bound.max(size_bound(&offsets, truncation));
        }
    }
    let mut coeffs = vec![0i64; truncation + 1];
    let graph = CrystalGraph::build_y(&lambda_i, bound)?;
    for label in graph.vertices() {
        let mut ok = true;
        for r in 0..n {
            if label.eps(r)? as i64 > j_profile[r as usize] {
                ok = false;
                break;
            }
        }
        if ok {
            let k = label.degree() as usize;
            if k <= truncation {
                coeffs[k] += 1;
            }
        }
    }
    let direct = ShiftedSeries::new(Rat::zero(), coeffs)?;
    // Branching side: sum over the dominant congruent classes.
    let mut total = ShiftedSeries::zero(truncation);
    for class in &classes {
        let series = branching_series(
            &lambda_j,
            &lambda_i,
            class,
            truncation,
            BranchingMethod::Multipartitions,
        )?;
        total = total.try_add(&series)?;
    }
    if !direct.agrees_to_order(&total, truncation) {
        return Err(Error::CrossCheck(format!(
            "JS generating function mismatch: crystal {direct} vs branching sum {total}"
        )));
    }
    Ok(direct)
}

/// Σ_k profile(k) Λ_k as a weight.
pub fn profile_weight(n: u32, profile: &[i64]) -> Result<AffineWeight> {
    if profile.len() != n as usize {
        return Err(Error::Precondition(format!(
            "profile length {} != n = {n}",
            profile.len()
        )));
    }
    if profile.iter().any(|&x| x < 0) {
        return Err(Error::Precondition("profile entries must be nonnegative".into()));
    }
    AffineWeight::new(n, profile.to_vec(), 0)
}

/// The labels of the simple modules of H_m(i) satisfying JS(j): all
/// λ ∈ Y(Λ_i) with |λ| = m and ε_k(λ) ≤ j_k.
pub fn js_modules(
    n: u32,
    i_profile: &[i64],
    j_profile: &[i64],
    m: u32,
) -> Result<Vec<ColoredMultipartition>> {
    let lambda_i = profile_weight(n, i_profile)?;
    if j_profile.len() != n as usize {
        return Err(Error::Precondition("condition length must be n".into()));
    }
    let graph = CrystalGraph::build_y(&lambda_i, m)?;
    let mut out = Vec::new();
    for label in graph.vertices() {
        if label.size() != m as u64 {
            continue;
        }
        let mut ok = true;
        for r in 0..n {
            if label.eps(r)? as i64 > j_profile[r as usize] {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(label.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// The simple H_m(i)-modules whose restriction stays simple: the union of
/// the JS conditions with a single 1.
pub fn irreducible_restriction(
    n: u32,
    i_profile: &[i64],
    m: u32,
) -> Result<Vec<ColoredMultipartition>> {
    let mut out = Vec::new();
    for u in 0..n as usize {
        let mut j = vec![0i64; n as usize];
        j[u] = 1;
        out.extend(js_modules(n, i_profile, &j, m)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: u32, s: &str) -> AffineWeight {
        AffineWeight::parse(n, s).unwrap()
    }

    fn series(coeffs: &[i64]) -> ShiftedSeries {
        ShiftedSeries::new(Rat::zero(), coeffs.to_vec()).unwrap()
    }

    #[test]
    fn restricted_set_of_level_two_vacuum() {
        // Y(Λ_0, 2Λ_0) at n=2 contains the listed small elements.
        let set = restricted_y(&w(2, "1*L0"), &w(2, "2*L0"), 5).unwrap();
        let texts: Vec<String> = set.iter().map(|m| m.to_compact()).collect();
        for expect in [
            "[[],[]]@0,0",
            "[[3,1],[]]@0,0",
            "[[1],[]]@0,0",
            "[[3],[]]@0,0",
            "[[3],[2]]@0,0",
            "[[5],[]]@0,0",
        ] {
            assert!(texts.contains(&expect.to_string()), "{expect}");
        }
        // ((2),(1)) has ε_1 = 1 and is filtered out.
        assert!(!texts.contains(&"[[2],[1]]@0,0".to_string()));
        // A huge Λ' makes the filter vacuous.
        let all = restricted_y(&w(2, "9*L0+9*L1"), &w(2, "2*L0"), 5).unwrap();
        let graph = CrystalGraph::build_y(&w(2, "2*L0"), 5).unwrap();
        assert_eq!(all.len(), graph.vertex_count());
    }

    #[test]
    fn restricted_set_agrees_with_path_side() {
        for (lp, ls) in [
            ("1*L0", "2*L0"),
            ("1*L1", "2*L0"),
            ("1*L0+1*L1", "1*L0"),
            ("2*L0", "1*L0+1*L1"),
        ] {
            let lp = w(2, lp);
            let ls = w(2, ls);
            let by_eps = restricted_y(&lp, &ls, 6).unwrap();
            let by_paths = restricted_y_via_paths(&lp, &ls, 6).unwrap();
            assert_eq!(by_eps, by_paths, "{lp} {ls}");
        }
    }

    #[test]
    fn branching_series_of_section_two_examples() {
        // b^{3Λ_0}_{Λ_0, 2Λ_0} = 1 + z² + …
        let b = branching_series(
            &w(2, "1*L0"),
            &w(2, "2*L0"),
            &w(2, "3*L0"),
            3,
            BranchingMethod::All,
        )
        .unwrap();
        assert_eq!(&b.coeffs()[..3], &[1, 0, 1]);
        // b^{Λ_0+2Λ_1}_{Λ_0, 2Λ_0} = z + z² + 2z³ + …
        let b = branching_series(
            &w(2, "1*L0"),
            &w(2, "2*L0"),
            &w(2, "1*L0+2*L1"),
            3,
            BranchingMethod::All,
        )
        .unwrap();
        assert_eq!(b.coeffs(), &[0, 1, 1, 2]);
    }

    #[test]
    fn gamma_values_of_worked_examples() {
        let lp = w(2, "1*L0+1*L1");
        let ls = w(2, "1*L0");
        assert_eq!(
            gamma_exponent(&lp, &ls, &w(2, "2*L0+1*L1")).unwrap(),
            rat(1, 120)
        );
        assert_eq!(
            gamma_exponent(&lp, &ls, &w(2, "3*L1")).unwrap(),
            rat(-71, 120)
        );
    }

    #[test]
    fn theta_route_matches_worked_series() {
        let lp = w(2, "1*L0+1*L1");
        let ls = w(2, "1*L0");
        let b1 = theta_branching(&lp, &ls, &w(2, "2*L0+1*L1"), 7).unwrap();
        assert_eq!(b1.coeffs(), &[1, 1, 2, 3, 4, 6, 8, 11]);
        let b2 = theta_branching(&lp, &ls, &w(2, "3*L1"), 7).unwrap();
        assert_eq!(b2.coeffs(), &[0, 1, 1, 1, 2, 3, 4, 6]);
        // Non-fundamental Λ'' is unsupported.
        assert!(matches!(
            theta_branching(&w(2, "1*L0"), &w(2, "2*L0"), &w(2, "3*L0"), 3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn three_way_agreement_on_worked_examples() {
        let lp = w(2, "1*L0+1*L1");
        let ls = w(2, "1*L0");
        let b = branching_series(&lp, &ls, &w(2, "2*L0+1*L1"), 7, BranchingMethod::All).unwrap();
        assert_eq!(b, series(&[1, 1, 2, 3, 4, 6, 8, 11]));
        let b = branching_series(&lp, &ls, &w(2, "3*L1"), 7, BranchingMethod::All).unwrap();
        assert_eq!(b, series(&[0, 1, 1, 1, 2, 3, 4, 6]));
    }

    #[test]
    fn theta_route_agrees_with_enumeration_on_more_cases() {
        // Fundamental Λ'' cases across n = 2, 3, Λ' of level ≤ 2.
        for (n, lp, ls, order) in [
            (2u32, "1*L0", "1*L0", 7),
            (2, "1*L1", "1*L0", 7),
            (2, "2*L0", "1*L1", 7),
            (2, "1*L0+1*L1", "1*L1", 7),
            (3, "1*L0", "1*L1", 6),
            (3, "1*L2", "1*L2", 6),
            (3, "1*L0+1*L2", "1*L0", 5),
            (3, "2*L1", "1*L0", 5),
        ] {
            let lp = w(n, lp);
            let ls = w(n, ls);
            for class in dominant_weight_classes(&(&lp + &ls)).unwrap() {
                let by_enum = branching_series(
                    &lp,
                    &ls,
                    &class,
                    order,
                    BranchingMethod::Multipartitions,
                )
                .unwrap();
                let by_theta = theta_branching(&lp, &ls, &class, order).unwrap();
                assert!(
                    by_enum.agrees_to_order(&by_theta, order),
                    "n={n} {lp} {ls} {class}: {by_enum} vs {by_theta}"
                );
            }
        }
    }

    #[test]
    fn dominant_class_enumeration() {
        // Level 3 classes congruent to 2Λ_0+Λ_1 at n=2: itself and 3Λ_1.
        let classes = dominant_weight_classes(&w(2, "2*L0+1*L1")).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.contains(&w(2, "2*L0+1*L1")));
        assert!(classes.contains(&w(2, "3*L1")));
    }

    #[test]
    fn js_generating_function_of_worked_example() {
        // n=2, i=(1,1), j=(1,0): 1+2z+3z²+4z³+6z⁴+9z⁵+12z⁶+17z⁷.
        let g = js_generating_function(2, &[1, 1], &[1, 0], 7).unwrap();
        assert_eq!(g, series(&[1, 2, 3, 4, 6, 9, 12, 17]));
        // The all-zero condition keeps only the vacuum.
        let g = js_generating_function(2, &[1, 1], &[0, 0], 4).unwrap();
        assert_eq!(g, series(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn js_symmetry_between_profiles() {
        // #JS(j) modules of H_m(i) = #JS(i) modules of H_m(j) per degree.
        let a = js_generating_function(2, &[1, 1], &[2, 0], 5).unwrap();
        let b = js_generating_function(2, &[2, 0], &[1, 1], 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn js_modules_of_worked_example() {
        // The six simple H_5(2,0)-modules.
        let all = js_modules(2, &[2, 0], &[9, 9], 5).unwrap();
        let texts: Vec<String> = all.iter().map(|m| m.to_compact()).collect();
        assert_eq!(
            texts,
            vec![
                "[[2,1],[2]]@0,0",
                "[[3],[2]]@0,0",
                "[[3,2],[]]@0,0",
                "[[4],[1]]@0,0",
                "[[4,1],[]]@0,0",
                "[[5],[]]@0,0",
            ]
        );
        // JS(1,0) keeps ((3),(2)) and ((5),∅).
        let js10 = js_modules(2, &[2, 0], &[1, 0], 5).unwrap();
        let texts: Vec<String> = js10.iter().map(|m| m.to_compact()).collect();
        assert_eq!(texts, vec!["[[3],[2]]@0,0", "[[5],[]]@0,0"]);
        // JS(0,1) keeps ((4),(1)).
        let js01 = js_modules(2, &[2, 0], &[0, 1], 5).unwrap();
        let texts: Vec<String> = js01.iter().map(|m| m.to_compact()).collect();
        assert_eq!(texts, vec!["[[4],[1]]@0,0"]);
        // The union is the irreducible-restriction list.
        let union = irreducible_restriction(2, &[2, 0], 5).unwrap();
        assert_eq!(union.len(), 3);
    }

    #[test]
    fn paths_and_multipartitions_agree_broadly() {
        // Both enumeration routes on every class of several weight pairs
        // with levels up to 3.
        for (n, lp, ls, order) in [
            (2u32, "1*L0", "1*L0", 6),
            (2, "1*L0", "2*L0", 5),
            (2, "1*L1", "1*L0+1*L1", 5),
            (2, "2*L0", "1*L1", 6),
            (2, "1*L0+1*L1", "1*L0", 6),
            (3, "1*L0", "1*L1+1*L2", 3),
            (3, "1*L2", "2*L0", 3),
            (3, "1*L0+1*L1", "1*L2", 5),
        ] {
            let lp = w(n, lp);
            let ls = w(n, ls);
            for class in dominant_weight_classes(&(&lp + &ls)).unwrap() {
                let a = branching_series(&lp, &ls, &class, order, BranchingMethod::Multipartitions)
                    .unwrap();
                let b =
                    branching_series(&lp, &ls, &class, order, BranchingMethod::Paths).unwrap();
                assert!(a.agrees_to_order(&b, order), "{lp} {ls} {class}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn sharp_symmetry_of_js_counts() {
        // The ♯ bijection sends the JS(j) modules of H_m(i) to the JS(♯i)
        // modules of H_m(♯j), degree slice by degree slice.
        let sharp_profile = |p: &[i64]| -> Vec<i64> {
            let n = p.len();
            (0..n).map(|k| p[(n - k) % n]).collect()
        };
        for (n, i, j) in [
            (2u32, vec![1i64, 1], vec![1i64, 0]),
            (2, vec![2, 0], vec![1, 0]),
            (3, vec![1, 1, 0], vec![0, 1, 0]),
        ] {
            let lambda_j = profile_weight(n, &j).unwrap();
            for m in 0..=6u32 {
                let fwd = js_modules(n, &i, &j, m).unwrap();
                let bwd = js_modules(n, &sharp_profile(&j), &sharp_profile(&i), m).unwrap();
                assert_eq!(fwd.len(), bwd.len(), "n={n} m={m} i={i:?} j={j:?}");
                // The explicit bijection is λ ↦ ♯λ.
                for lam in &fwd {
                    let image = crate::sharp::sharp_multipartition(lam, &lambda_j).unwrap();
                    assert!(bwd.contains(&image), "n={n} m={m}: image {image} missing");
                }
            }
        }
    }

    #[test]
    fn tensor_commutativity_of_multiplicities() {
        // c^{Λ−kδ}_{Λ'Λ''} = c^{Λ−kδ}_{Λ''Λ'} for every class and k ≤ 5.
        for (n, a, b) in [(2u32, "1*L0", "1*L0+1*L1"), (3, "1*L1", "1*L0+1*L2")] {
            let a = w(n, a);
            let b = w(n, b);
            for class in dominant_weight_classes(&(&a + &b)).unwrap() {
                let ab = branching_series(&a, &b, &class, 5, BranchingMethod::Multipartitions)
                    .unwrap();
                let ba = branching_series(&b, &a, &class, 5, BranchingMethod::Multipartitions)
                    .unwrap();
                assert!(ab.agrees_to_order(&ba, 5), "{a} {b} {class}");
            }
        }
    }

    #[test]
    fn branching_coefficients_are_nonnegative_with_zero_offset() {
        let lp = w(2, "1*L0+1*L1");
        let ls = w(2, "1*L0");
        for class in dominant_weight_classes(&(&lp + &ls)).unwrap() {
            let b = branching_series(&lp, &ls, &class, 6, BranchingMethod::All).unwrap();
            assert!(b.offset().is_zero());
            assert!(b.coeffs().iter().all(|&c| c >= 0));
        }
    }

    #[test]
    fn incompatible_levels_are_rejected() {
        assert!(branching_series(
            &w(2, "1*L0"),
            &w(2, "1*L0"),
            &w(2, "3*L0"),
            3,
            BranchingMethod::Multipartitions
        )
        .is_err());
    }
}
