//! Level-l paths, their energy, and the correspondence with highest-lift
//! multipartitions.
//!
//! A Λ-path is a sequence p = (p_0, p_1, …) of level-l weights with steps
//! p_{k+1} − p_k = η_k ∈ A_l^+ (sums of l weights ε_i) that eventually agrees
//! with the ground state p̄_k = Λ_{v_0+k} + ⋯ + Λ_{v_{l−1}+k}.  Paths are
//! stored by their deviation (η_0, …, η_{k*−1}) from the ground steps, with
//! the minimality invariant η_{k*−1} ≠ η̄_{k*−1}.
//!
//! The energy comes from the RSOS H-function
//! H(α, β) = min_σ Σ θ(μ_i − ν_{σ(i)}) via
//! E(p) = Σ_k k (H(η_{k−1},η_k) − H(η̄_{k−1},η̄_k)), and wt(p) = p_0 − E(p)δ.
//!
//! π maps a multipartition to the path η_k = Σ_j ε_{v_j + k − λ^{(j)'}_{k+1}}
//! (colours of the cells just under each column bottom); every path has a
//! unique cylindrical preimage higher than all others, reconstructed here by
//! distributing rows longest-first from the end-colour profiles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartition::{ColoredMultipartition, FockAmbient};
use crate::weights::{permutations, reduce, AffineWeight};

/// Default bound on the number of tensor factors l in the H-function
/// minimisation (brute force over S_l).
pub const H_PERMUTATION_BOUND: usize = 8;

/// An element of A_l^+: a multiset of l residues in [0, n), sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EtaStep(Vec<u32>);

impl EtaStep {
    pub fn new(n: u32, mut residues: Vec<u32>) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::Precondition("empty step".into()));
        }
        if residues.iter().any(|&r| r >= n) {
            return Err(Error::Precondition(format!(
                "step residues {residues:?} out of range [0,{n})"
            )));
        }
        residues.sort_unstable();
        Ok(EtaStep(residues))
    }

    pub fn residues(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity vector: count of each residue 0..n.
    pub fn counts(&self, n: u32) -> Vec<u32> {
        let mut counts = vec![0u32; n as usize];
        for &r in &self.0 {
            counts[r as usize] += 1;
        }
        counts
    }

    /// η̂: the dominant weight Σ_j Λ_{γ_j} obtained by capitalising every ε.
    pub fn hat(&self, n: u32) -> AffineWeight {
        let mut w = AffineWeight::zero(n).expect("n >= 2");
        for &r in &self.0 {
            w = &w + &AffineWeight::fundamental(n, r as i64).expect("n >= 2");
        }
        w
    }
}

impl fmt::Display for EtaStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.0 {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// The RSOS local energy H(α, β) = min over σ ∈ S_l of Σ_i θ(μ_i − ν_{σ(i)}),
/// where θ(a) = 1 for a ≥ 0 and 0 otherwise, on residue representatives in
/// [0, n).
///
/// The minimisation is an assignment problem; the S_l brute force is fine for
/// the supported l ≤ 8.
// TODO: switch to a Hungarian-algorithm assignment solve if l beyond 8 is
// ever needed.
pub fn h_value(a: &EtaStep, b: &EtaStep) -> Result<i64> {
    h_value_with_bound(a, b, H_PERMUTATION_BOUND)
}

/// As [`h_value`] with an explicit bound on l.
pub fn h_value_with_bound(a: &EtaStep, b: &EtaStep, bound: usize) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::AmbientMismatch(format!(
            "steps of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let l = a.len();
    if l > bound {
        return Err(Error::ResourceLimit(format!(
            "H minimisation over S_{l} exceeds the bound {bound}"
        )));
    }
    let theta = |x: i64| -> i64 {
        if x >= 0 {
            1
        } else {
            0
        }
    };
    let mut best = i64::MAX;
    for perm in permutations(l) {
        let total: i64 = (0..l)
            .map(|i| theta(a.0[i] as i64 - b.0[perm[i]] as i64))
            .sum();
        best = best.min(total);
    }
    Ok(best)
}

/// A Λ-path, stored as its finite deviation from the ground state.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    ambient: FockAmbient,
    steps: Vec<EtaStep>,
    /// p_0, …, p_{k*} (all further points are ground points).
    points: Vec<AffineWeight>,
}

/// The ground step η̄_k = Σ_j ε_{v_j + k} of a sorted ambient, as residues.
pub fn ground_step(ambient: &FockAmbient, k: i64) -> EtaStep {
    let n = ambient.n();
    let residues = ambient
        .charges()
        .iter()
        .map(|&v| reduce(v as i64 + k, n) as u32)
        .collect();
    EtaStep::new(n, residues).expect("ground step is valid")
}

/// The ground point p̄_k = Σ_j Λ_{v_j + k}.
pub fn ground_point(ambient: &FockAmbient, k: i64) -> AffineWeight {
    let n = ambient.n();
    let mut w = AffineWeight::zero(n).expect("n >= 2");
    for &v in ambient.charges() {
        w = &w + &AffineWeight::fundamental(n, v as i64 + k).expect("n >= 2");
    }
    w
}

impl Path {
    /// The ground state path of a dominant weight.
    pub fn ground_state(weight: &AffineWeight) -> Result<Path> {
        if !weight.is_dominant() {
            return Err(Error::Precondition(format!(
                "ground state requires a dominant weight, got {weight}"
            )));
        }
        let ambient = FockAmbient::from_weight(weight)?;
        Path::from_steps(ambient, Vec::new())
    }

    /// Build a path from deviation steps η_0, …, η_{m−1}; trailing ground
    /// steps are stripped so equality is structural.
    pub fn from_steps(ambient: FockAmbient, mut steps: Vec<EtaStep>) -> Result<Path> {
        ambient
            .is_sorted()
            .then_some(())
            .ok_or_else(|| Error::Precondition("path ambient requires sorted charges".into()))?;
        let l = ambient.components();
        for (k, s) in steps.iter().enumerate() {
            if s.len() != l {
                return Err(Error::Precondition(format!(
                    "step {k} has {} residues, expected {l}",
                    s.len()
                )));
            }
            if s.residues().iter().any(|&r| r >= ambient.n()) {
                return Err(Error::Precondition(format!("step {k} out of range")));
            }
        }
        while let Some(last) = steps.last() {
            if *last == ground_step(&ambient, steps.len() as i64 - 1) {
                steps.pop();
            } else {
                break;
            }
        }
        // Points, computed downward from the first ground point.
        let k_star = steps.len();
        let n = ambient.n();
        let mut points = vec![AffineWeight::zero(n)?; k_star + 1];
        points[k_star] = ground_point(&ambient, k_star as i64);
        for k in (0..k_star).rev() {
            let mut w = points[k + 1].clone();
            for &r in steps[k].residues() {
                w = &w - &AffineWeight::epsilon(n, r as i64)?;
            }
            points[k] = w;
        }
        Ok(Path {
            ambient,
            steps,
            points,
        })
    }

    pub fn ambient(&self) -> &FockAmbient {
        &self.ambient
    }

    /// The highest weight Λ the path is attached to.
    pub fn highest_weight(&self) -> AffineWeight {
        self.ambient.highest_weight()
    }

    /// The length ℓ(p): the smallest k* with p_k = p̄_k for k ≥ k*.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn deviation(&self) -> &[EtaStep] {
        &self.steps
    }

    /// The step η_k (ground beyond the deviation).
    pub fn step(&self, k: i64) -> EtaStep {
        if k >= 0 && (k as usize) < self.steps.len() {
            self.steps[k as usize].clone()
        } else {
            ground_step(&self.ambient, k)
        }
    }

    /// The point p_k (level-l weight, no δ bookkeeping).
    pub fn point(&self, k: i64) -> AffineWeight {
        if k >= 0 && (k as usize) < self.points.len() {
            self.points[k as usize].clone()
        } else {
            ground_point(&self.ambient, k)
        }
    }

    /// E(p) = Σ_{k≥1} k (H(η_{k−1}, η_k) − H(η̄_{k−1}, η̄_k)).
    pub fn energy(&self) -> Result<i64> {
        let mut acc = 0i64;
        for k in 1..=self.steps.len() as i64 {
            let actual = h_value(&self.step(k - 1), &self.step(k))?;
            let ground = h_value(
                &ground_step(&self.ambient, k - 1),
                &ground_step(&self.ambient, k),
            )?;
            acc += k * (actual - ground);
        }
        Ok(acc)
    }

    /// wt(p) = p_0 − E(p) δ.
    pub fn weight(&self) -> Result<AffineWeight> {
        Ok(self.point(0).plus_delta(-self.energy()?))
    }

    /// The per-position values |p_k − η̂_k|_r^− for k = 0..=k*; ε_r(p) is
    /// their maximum (all later values vanish).
    pub fn eps_profile(&self, r: u32) -> Result<Vec<i64>> {
        if r >= self.ambient.n() {
            return Err(Error::Precondition(format!("colour {r} out of range")));
        }
        let mut out = Vec::new();
        for k in 0..=self.steps.len() as i64 {
            let w = &self.point(k) - &self.step(k).hat(self.ambient.n());
            let a = w.coeff(r as i64);
            out.push(if a <= 0 { -a } else { 0 });
        }
        Ok(out)
    }

    /// ε_r(p) = max_k |p_k − η̂_k|_r^−.
    pub fn eps(&self, r: u32) -> Result<i64> {
        Ok(self.eps_profile(r)?.into_iter().max().unwrap_or(0))
    }

    /// The restriction test: with p = (this path) + Λ', is p a
    /// (Λ', Λ'')-restricted path, i.e. is p_k − η̂_k dominant for all k?
    pub fn is_restricted(&self, lambda_prime: &AffineWeight) -> Result<bool> {
        if lambda_prime.modulus() != self.ambient.n() {
            return Err(Error::AmbientMismatch(format!(
                "modulus {} vs {}",
                lambda_prime.modulus(),
                self.ambient.n()
            )));
        }
        if lambda_prime.delta_coeff() != 0 {
            return Err(Error::Precondition(
                "restriction weight must be delta-free".into(),
            ));
        }
        for k in 0..=self.steps.len() as i64 {
            let w = &(&self.point(k) + lambda_prime) - &self.step(k).hat(self.ambient.n());
            if !w.is_dominant() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The end-colour profile ψ_·(k): the unique nonnegative solution of
    /// η_{k−1} − σ(η_k) = Σ_r ψ_r(k) α'_r with min_r ψ_r(k) = 0.  Entry r is
    /// the number of rows of length k in the highest lift whose right end has
    /// colour r.
    pub fn end_colour_profile(&self, k: u32) -> Result<Vec<u32>> {
        if k == 0 {
            return Err(Error::Precondition("row length k must be positive".into()));
        }
        let n = self.ambient.n();
        let u = self.step(k as i64 - 1).counts(n);
        // σ(η_k) has residues shifted down by one.
        let mut w = vec![0u32; n as usize];
        for &r in self.step(k as i64).residues() {
            w[reduce(r as i64 - 1, n)] += 1;
        }
        // ψ_{r+1} − ψ_r = u_r − w_r, normalized to min 0.
        let mut psi = vec![0i64; n as usize];
        for r in 0..n as usize - 1 {
            psi[r + 1] = psi[r] + u[r] as i64 - w[r] as i64;
        }
        // Cyclic consistency is automatic: Σ(u − w) = 0.
        let min = *psi.iter().min().expect("nonempty");
        let psi: Vec<u32> = psi.iter().map(|&x| (x - min) as u32).collect();
        Ok(psi)
    }

    /// The highest-lift multipartition λ(p): the unique cylindrical preimage
    /// of p under π that is higher than all others.
    ///
    /// Rows are distributed per length, longest first, over the components by
    /// backtracking; a candidate is accepted only if π(candidate) = p and the
    /// highest-lift predicate holds, which pins the unique answer.
    pub fn highest_lift(&self) -> Result<ColoredMultipartition> {
        
        let l = self.ambient.components();
        let k_star = self.steps.len() as u32;
        let mut profiles: Vec<Vec<u32>> = Vec::new(); // index k-1 -> psi
        for k in 1..=k_star {
            profiles.push(self.end_colour_profile(k)?);
        }
        // rows[j] collects the row lengths of component j, longest first.
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); l];
        if let Some(mp) = self.place_rows(&profiles, k_star, &mut rows)? {
            return Ok(mp);
        }
        Err(Error::Inconsistency(format!(
            "no highest lift exists: not a valid path for {}",
            self.highest_weight()
        )))
    }

    fn place_rows(
        &self,
        profiles: &[Vec<u32>],
        k: u32,
        rows: &mut Vec<Vec<u32>>,
    ) -> Result<Option<ColoredMultipartition>> {
        let l = self.ambient.components();
        if k == 0 {
            // All rows placed: validate the candidate.
            let mp =
                ColoredMultipartition::from_parts(self.ambient.clone(), rows.to_vec())?;
            if pi(&mp)? == *self && mp.is_highest_lift()? {
                return Ok(Some(mp));
            }
            return Ok(None);
        }
        let psi = &profiles[k as usize - 1];
        let total: u32 = psi.iter().sum();
        // Choose how many rows of length k each component takes; the colours
        // of those rows are then forced by the row indices.
        let mut counts = vec![0u32; l];
        self.assign_counts(profiles, k, total, 0, &mut counts, rows)
    }

    fn assign_counts(
        &self,
        profiles: &[Vec<u32>],
        k: u32,
        remaining: u32,
        j: usize,
        counts: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
    ) -> Result<Option<ColoredMultipartition>> {
        let n = self.ambient.n();
        let l = self.ambient.components();
        if j == l {
            if remaining != 0 {
                return Ok(None);
            }
            // Check the induced colour multiset against psi.
            let psi = &profiles[k as usize - 1];
            let mut got = vec![0u32; n as usize];
            for (jj, &c) in counts.iter().enumerate() {
                let base = rows[jj].len() as u32;
                for t in 0..c {
                    let row_index = base + t + 1;
                    let colour = reduce(
                        k as i64 - row_index as i64 + self.ambient.charges()[jj] as i64,
                        n,
                    );
                    got[colour] += 1;
                }
            }
            if got != *psi {
                return Ok(None);
            }
            // Commit the rows, check partial cylindricity, recurse.
            for (jj, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    rows[jj].push(k);
                }
            }
            let found = if self.partial_cylindrical(rows, k) {
                self.place_rows(profiles, k - 1, rows)?
            } else {
                None
            };
            for (jj, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    rows[jj].pop();
                }
            }
            return Ok(found);
        }
        // Rows of equal length within one component sit on consecutive
        // diagonals, so more than n−1 of them would repeat a colour the
        // profile cannot contain n times; cap the count accordingly.
        let cap = remaining.min(self.ambient.n() - 1);
        for c in 0..=cap {
            counts[j] = c;
            if let Some(found) = self.assign_counts(profiles, k, remaining - c, j + 1, counts, rows)? {
                counts[j] = 0;
                return Ok(Some(found));
            }
        }
        counts[j] = 0;
        Ok(None)
    }

    /// Cylindricity restricted to the rows placed so far (all of length ≥ k).
    /// A row required to dominate an already-placed row but not yet placed
    /// itself would end up shorter than k, so that is a violation too.
    fn partial_cylindrical(&self, rows: &[Vec<u32>], k: u32) -> bool {
        let _ = k;
        let l = rows.len();
        let v = self.ambient.charges();
        let n = self.ambient.n();
        for j in 0..l {
            let (upper, lower, shift) = if j + 1 < l {
                (j, j + 1, (v[j + 1] - v[j]) as usize)
            } else {
                (l - 1, 0, (n + v[0] - v[l - 1]) as usize)
            };
            for i in 1..=rows[lower].len() {
                if i < shift + 1 {
                    continue;
                }
                let need = rows[lower][i - 1];
                let upper_row = i - shift;
                match rows[upper].get(upper_row - 1) {
                    Some(&have) if have >= need => {}
                    Some(_) => return false,
                    None => return false,
                }
            }
        }
        true
    }

    /// Text form `122,012,022|2*L1+1*L2` (steps as residue digit strings,
    /// then the highest weight; the ground tail is implied).
    pub fn to_text(&self) -> String {
        let steps: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        format!("{}|{}", steps.join(","), self.highest_weight())
    }

    /// Parse the text form; digit steps restrict this syntax to n ≤ 10.
    pub fn parse(n: u32, text: &str) -> Result<Path> {
        if n > 10 {
            return Err(Error::Unsupported(
                "digit path syntax needs n ≤ 10; use JSON".into(),
            ));
        }
        let (steps_str, weight_str) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in path '{text}'")))?;
        let weight = AffineWeight::parse(n, weight_str)?;
        let ambient = FockAmbient::from_weight(&weight)?;
        let mut steps = Vec::new();
        let trimmed = steps_str.trim();
        if !trimmed.is_empty() {
            for chunk in trimmed.split(',') {
                let residues: Vec<u32> = chunk
                    .trim()
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .ok_or_else(|| Error::Parse(format!("bad step digit '{c}'")))
                    })
                    .collect::<Result<_>>()?;
                steps.push(EtaStep::new(n, residues)?);
            }
        }
        Path::from_steps(ambient, steps)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// JSON form of a path: steps as residue arrays plus the weight string.
#[derive(Serialize, Deserialize)]
pub struct PathJson {
    pub n: u32,
    pub steps: Vec<Vec<u32>>,
    pub weight: String,
}

impl Path {
    pub fn to_json(&self) -> PathJson {
        PathJson {
            n: self.ambient.n(),
            steps: self.steps.iter().map(|s| s.residues().to_vec()).collect(),
            weight: self.highest_weight().to_string(),
        }
    }

    pub fn from_json(json: &PathJson) -> Result<Path> {
        let weight = AffineWeight::parse(json.n, &json.weight)?;
        let ambient = FockAmbient::from_weight(&weight)?;
        let steps = json
            .steps
            .iter()
            .map(|s| EtaStep::new(json.n, s.clone()))
            .collect::<Result<Vec<_>>>()?;
        Path::from_steps(ambient, steps)
    }
}

/// π: the path read off the coloured diagram, step k collecting the colours
/// v_j + k − λ^{(j)'}_{k+1} just under the column bottoms.
pub fn pi(mp: &ColoredMultipartition) -> Result<Path> {
    let ambient = mp.ambient().clone();
    if !ambient.is_sorted() {
        return Err(Error::Precondition(
            "pi requires a sorted-charge ambient".into(),
        ));
    }
    let n = ambient.n();
    let k_star = mp.max_part() as i64;
    let mut steps = Vec::new();
    for k in 0..k_star {
        let residues = mp
            .components()
            .iter()
            .zip(ambient.charges())
            .map(|(p, &v)| {
                let height = p.column_height(k as usize + 1) as i64;
                reduce(v as i64 + k - height, n) as u32
            })
            .collect();
        steps.push(EtaStep::new(n, residues)?);
    }
    Path::from_steps(ambient, steps)
}

/// All elements of A_l^+ for the given modulus: sorted residue multisets of
/// size l.
pub fn all_steps(n: u32, l: usize) -> Vec<EtaStep> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    fn rec(n: u32, l: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<EtaStep>) {
        if cur.len() == l {
            out.push(EtaStep(cur.clone()));
            return;
        }
        for r in min..n {
            cur.push(r);
            rec(n, l, r, cur, out);
            cur.pop();
        }
    }
    rec(n, l, 0, &mut cur, &mut out);
    out
}

/// All Λ-paths of length ≤ max_len (brute enumeration of deviations).
pub fn enumerate_paths(weight: &AffineWeight, max_len: usize) -> Result<Vec<Path>> {
    enumerate_paths_sharded(weight, max_len, None)
}

/// Sharded variant: shard (index, count) processes the slice of first-step
/// choices with position ≡ index (mod count); the union over all shards is
/// the full enumeration.  The ground state path belongs to shard 0.
pub fn enumerate_paths_sharded(
    weight: &AffineWeight,
    max_len: usize,
    shard: Option<(usize, usize)>,
) -> Result<Vec<Path>> {
    let ambient = FockAmbient::from_weight(weight)?;
    let steps = all_steps(ambient.n(), ambient.components());
    let mut out = Vec::new();
    let mut cur: Vec<EtaStep> = Vec::new();
    fn rec(
        ambient: &FockAmbient,
        steps: &[EtaStep],
        max_len: usize,
        cur: &mut Vec<EtaStep>,
        out: &mut Vec<Path>,
    ) -> Result<()> {
        if cur.is_empty()
            || *cur.last().unwrap() != ground_step(ambient, cur.len() as i64 - 1)
        {
            out.push(Path::from_steps(ambient.clone(), cur.clone())?);
        }
        if cur.len() == max_len {
            return Ok(());
        }
        for s in steps {
            cur.push(s.clone());
            rec(ambient, steps, max_len, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    match shard {
        None => rec(&ambient, &steps, max_len, &mut cur, &mut out)?,
        Some((index, count)) => {
            if count == 0 || index >= count {
                return Err(Error::Precondition(format!("bad shard {index}/{count}")));
            }
            if index == 0 {
                out.push(Path::from_steps(ambient.clone(), Vec::new())?);
            }
            // Every nonempty minimal deviation is owned by exactly one shard,
            // the one holding its first step, so the shards are disjoint.
            if max_len > 0 {
                for (pos, s) in steps.iter().enumerate() {
                    if pos % count != index {
                        continue;
                    }
                    cur.push(s.clone());
                    rec(&ambient, &steps, max_len, &mut cur, &mut out)?;
                    cur.pop();
                }
            }
        }
    }
    Ok(out)
}

/// All (Λ', Λ'')-restricted paths of length ≤ max_len, as Λ''-paths (the Λ'
/// shift left implicit).  Depth-first from the tail with the dominance
/// condition checked at every position.
pub fn enumerate_restricted_paths(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    max_len: usize,
) -> Result<Vec<Path>> {
    enumerate_restricted_paths_sharded(lambda_prime, lambda_second, max_len, None)
}

/// Sharded variant: work is split over the choice of the last deviation step
/// η_{m−1}; the union over all shards is the full enumeration, the ground
/// state path belonging to shard 0.
pub fn enumerate_restricted_paths_sharded(
    lambda_prime: &AffineWeight,
    lambda_second: &AffineWeight,
    max_len: usize,
    shard: Option<(usize, usize)>,
) -> Result<Vec<Path>> {
    if !lambda_prime.is_dominant() || !lambda_second.is_dominant() {
        return Err(Error::Precondition(
            "restricted enumeration needs dominant weights".into(),
        ));
    }
    if let Some((index, count)) = shard {
        if count == 0 || index >= count {
            return Err(Error::Precondition(format!("bad shard {index}/{count}")));
        }
    }
    let ambient = FockAmbient::from_weight(lambda_second)?;
    let n = ambient.n();
    let step_choices = all_steps(n, ambient.components());
    let mut out = Vec::new();
    // Suffix DFS: fix the length m, then choose η_{m−1}, …, η_0 downward,
    // maintaining the point and pruning on the dominance test.
    for m in 0..=max_len {
        let mut chosen: Vec<EtaStep> = vec![EtaStep(Vec::new()); m];
        if m == 0 {
            if shard.is_none_or(|(index, _)| index == 0) {
                dfs_restricted(
                    &ambient,
                    lambda_prime,
                    &step_choices,
                    m,
                    0,
                    ground_point(&ambient, 0),
                    &mut chosen,
                    &mut out,
                )?;
            }
            continue;
        }
        // The top-level choice is η_{m−1}; restrict it to this shard's slice.
        for (pos, s) in step_choices.iter().enumerate() {
            if let Some((index, count)) = shard {
                if pos % count != index {
                    continue;
                }
            }
            let point_m = ground_point(&ambient, m as i64);
            let mut prev = point_m.clone();
            for &r in s.residues() {
                prev = &prev - &AffineWeight::epsilon(n, r as i64)?;
            }
            let test = &(&prev + lambda_prime) - &s.hat(n);
            if !test.is_dominant() {
                continue;
            }
            chosen[m - 1] = s.clone();
            dfs_restricted(
                &ambient,
                lambda_prime,
                &step_choices,
                m,
                m as i64 - 1,
                prev,
                &mut chosen,
                &mut out,
            )?;
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_restricted(
    ambient: &FockAmbient,
    lambda_prime: &AffineWeight,
    step_choices: &[EtaStep],
    m: usize,
    k: i64,
    point_k: AffineWeight,
    chosen: &mut Vec<EtaStep>,
    out: &mut Vec<Path>,
) -> Result<()> {
    let n = ambient.n();
    if k == 0 {
        // The dominance at k = 0 uses η_0 = chosen[0] which is already
        // checked during descent; lengths below m were enumerated separately,
        // so require minimality.
        if m == 0 || chosen[m - 1] != ground_step(ambient, m as i64 - 1) {
            out.push(Path::from_steps(ambient.clone(), chosen.clone())?);
        }
        return Ok(());
    }
    for s in step_choices {
        // p_{k-1} = p_k − η_{k−1}.
        let mut prev = point_k.clone();
        for &r in s.residues() {
            prev = &prev - &AffineWeight::epsilon(n, r as i64)?;
        }
        // Restriction at position k−1: p_{k−1} + Λ' − η̂_{k−1} dominant.
        let test = &(&prev + lambda_prime) - &s.hat(n);
        if !test.is_dominant() {
            continue;
        }
        chosen[k as usize - 1] = s.clone();
        dfs_restricted(
            ambient,
            lambda_prime,
            step_choices,
            m,
            k - 1,
            prev,
            chosen,
            out,
        )?;
    }
    Ok(())
}
