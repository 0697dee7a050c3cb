//! Crystal graphs of the irreducible modules V(Λ), under two labellings.
//!
//! The Y-labelling grows the graph from the empty multipartition by the good
//! f̃_r arrows; its vertex set is exactly the highest-lift multipartitions.
//! The M-labelling realizes the same abstract crystal inside the tensor
//! product of level-1 crystals B(Λ_{v_0}) ⊗ ⋯ ⊗ B(Λ_{v_{l−1}}) with the
//! Kashiwara rule applied left-associatively:
//!
//! f̃(u ⊗ v) = f̃u ⊗ v if φ(u) > ε(v), else u ⊗ f̃v,
//! ẽ(u ⊗ v) = ẽu ⊗ v if φ(u) ≥ ε(v), else u ⊗ ẽv,
//!
//! with ε(u⊗v) = max(ε(u), ε(v) − wt_r(u)) and φ(u⊗v) = max(φ(v), φ(u) + wt_r(v)).
//!
//! Relabelling between the two follows a vertex's arrow word back to the
//! root and replays it from the other root.  Graphs are built degree by
//! degree with vertices ordered canonically (degree, then serialized form),
//! so DOT and JSON dumps are byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{ColoredMultipartition, FockAmbient, Partition};
use crate::path::enumerate_paths;
use crate::weights::{AffineWeight, WeightMultiplicities};

/// Which combinatorial labels decorate the vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labeling {
    /// Highest-lift multipartitions (the Fock-space crystal restricted to
    /// the connected component of the vacuum).
    HighestLift,
    /// Tuples of partitions, one per tensor factor of level-1 crystals.
    TensorFactors,
}

/// A finite piece of a crystal graph, cut off at a principal degree.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    ambient: FockAmbient,
    labeling: Labeling,
    max_degree: u32,
    labels: Vec<ColoredMultipartition>,
    index: BTreeMap<Vec<Partition>, usize>,
    /// Edges (source, colour, target), sorted by (source, colour).
    edges: Vec<(usize, u32, usize)>,
    /// BFS tree: the (parent, colour) arrow that discovered each vertex.
    parent: Vec<Option<(usize, u32)>>,
}

/// The crystal operators for a labelling.
fn apply_f(labeling: Labeling, mp: &ColoredMultipartition, r: u32) -> Result<Option<ColoredMultipartition>> {
    match labeling {
        Labeling::HighestLift => mp.f_tilde(r),
        Labeling::TensorFactors => tensor_f(mp, r),
    }
}

fn apply_e(labeling: Labeling, mp: &ColoredMultipartition, r: u32) -> Result<Option<ColoredMultipartition>> {
    match labeling {
        Labeling::HighestLift => mp.e_tilde(r),
        Labeling::TensorFactors => tensor_e(mp, r),
    }
}

/// ε and φ of one level-1 factor (a single partition with its charge).
fn factor_stats(n: u32, charge: u32, p: &Partition, r: u32) -> Result<(i64, i64)> {
    let single = ColoredMultipartition::new(
        FockAmbient::new(n, vec![charge])?,
        vec![p.clone()],
    )?;
    Ok((single.eps(r)? as i64, single.phi(r)? as i64))
}

/// (ε, φ) of the prefix u_0 ⊗ ⋯ ⊗ u_{m−1} for every m, by the tensor rule
/// recursion.
fn prefix_stats(mp: &ColoredMultipartition, r: u32) -> Result<Vec<(i64, i64)>> {
    let n = mp.n();
    let charges = mp.ambient().charges();
    let mut out = Vec::with_capacity(mp.components().len() + 1);
    // Empty prefix: ε = φ = 0 (and weight 0).
    let mut eps = 0i64;
    let mut phi = 0i64;
    out.push((eps, phi));
    for (j, p) in mp.components().iter().enumerate() {
        let (e_v, f_v) = factor_stats(n, charges[j], p, r)?;
        let wt_u = phi - eps;
        let wt_v = f_v - e_v;
        let new_eps = eps.max(e_v - wt_u);
        let new_phi = f_v.max(phi + wt_v);
        eps = new_eps;
        phi = new_phi;
        out.push((eps, phi));
    }
    Ok(out)
}

/// f̃_r on a tensor label, left-associative Kashiwara rule.
pub fn tensor_f(mp: &ColoredMultipartition, r: u32) -> Result<Option<ColoredMultipartition>> {
    let stats = prefix_stats(mp, r)?;
    let l = mp.components().len();
    if stats[l].1 == 0 {
        return Ok(None);
    }
    // Descend: act on the prefix when φ(prefix) > ε(last factor).
    let n = mp.n();
    let charges = mp.ambient().charges();
    let mut m = l;
    loop {
        if m == 1 {
            break;
        }
        let (e_last, _) = factor_stats(n, charges[m - 1], &mp.components()[m - 1], r)?;
        if stats[m - 1].1 > e_last {
            m -= 1;
        } else {
            break;
        }
    }
    // Act on factor m−1.
    let single = ColoredMultipartition::new(
        FockAmbient::new(n, vec![charges[m - 1]])?,
        vec![mp.components()[m - 1].clone()],
    )?;
    let Some(image) = single.f_tilde(r)? else {
        return Err(Error::Inconsistency(
            "tensor rule pointed at a factor with no good addable node".into(),
        ));
    };
    let mut parts = mp.components().to_vec();
    parts[m - 1] = image.components()[0].clone();
    Ok(Some(ColoredMultipartition::new(mp.ambient().clone(), parts)?))
}

/// ẽ_r on a tensor label, left-associative Kashiwara rule.
pub fn tensor_e(mp: &ColoredMultipartition, r: u32) -> Result<Option<ColoredMultipartition>> {
    let stats = prefix_stats(mp, r)?;
    let l = mp.components().len();
    if stats[l].0 == 0 {
        return Ok(None);
    }
    let n = mp.n();
    let charges = mp.ambient().charges();
    let mut m = l;
    loop {
        if m == 1 {
            break;
        }
        let (e_last, _) = factor_stats(n, charges[m - 1], &mp.components()[m - 1], r)?;
        if stats[m - 1].1 >= e_last {
            m -= 1;
        } else {
            break;
        }
    }
    let single = ColoredMultipartition::new(
        FockAmbient::new(n, vec![charges[m - 1]])?,
        vec![mp.components()[m - 1].clone()],
    )?;
    let Some(image) = single.e_tilde(r)? else {
        return Err(Error::Inconsistency(
            "tensor rule pointed at a factor with no good removable node".into(),
        ));
    };
    let mut parts = mp.components().to_vec();
    parts[m - 1] = image.components()[0].clone();
    Ok(Some(ColoredMultipartition::new(mp.ambient().clone(), parts)?))
}

/// ε_r of a label measured by counting successful ẽ_r applications.
pub fn eps_by_applications(
    labeling: Labeling,
    mp: &ColoredMultipartition,
    r: u32,
) -> Result<usize> {
    let mut count = 0;
    let mut cur = mp.clone();
    while let Some(prev) = apply_e(labeling, &cur, r)? {
        cur = prev;
        count += 1;
    }
    Ok(count)
}

impl CrystalGraph {
    /// BFS from the root label with the labelling's f̃, keeping |λ| ≤
    /// max_degree.  Vertices are numbered by (degree, serialized form).
    fn build(ambient: FockAmbient, labeling: Labeling, max_degree: u32) -> Result<CrystalGraph> {
        let root = ColoredMultipartition::empty(ambient.clone());
        let n = ambient.n();
        let mut labels = vec![root];
        let mut index: BTreeMap<Vec<Partition>, usize> = BTreeMap::new();
        index.insert(labels[0].components().to_vec(), 0);
        let mut parent: Vec<Option<(usize, u32)>> = vec![None];
        let mut edges = Vec::new();
        let mut frontier: Vec<usize> = vec![0];
        for _deg in 0..max_degree {
            // Collect the next degree slice in canonical order.
            let mut next: BTreeMap<Vec<Partition>, (usize, u32)> = BTreeMap::new();
            let mut slice_edges = Vec::new();
            for &src in &frontier {
                for r in 0..n {
                    if let Some(image) = apply_f(labeling, &labels[src], r)? {
                        let key = image.components().to_vec();
                        next.entry(key.clone()).or_insert((src, r));
                        slice_edges.push((src, r, key));
                    }
                }
            }
            let mut new_frontier = Vec::new();
            for (key, (src, r)) in next {
                let id = labels.len();
                labels.push(ColoredMultipartition::new(ambient.clone(), key.clone())?);
                index.insert(key, id);
                parent.push(Some((src, r)));
                new_frontier.push(id);
            }
            for (src, r, key) in slice_edges {
                let dst = index[&key];
                edges.push((src, r, dst));
            }
            frontier = new_frontier;
            if frontier.is_empty() {
                break;
            }
        }
        edges.sort_unstable();
        Ok(CrystalGraph {
            ambient,
            labeling,
            max_degree,
            labels,
            index,
            edges,
            parent,
        })
    }

    /// The crystal of V(Λ) labelled by highest-lift multipartitions.
    pub fn build_y(weight: &AffineWeight, max_degree: u32) -> Result<CrystalGraph> {
        if !weight.is_dominant() || weight.delta_coeff() != 0 {
            return Err(Error::Precondition(format!(
                "crystal needs a dominant delta-free weight, got {weight}"
            )));
        }
        CrystalGraph::build(FockAmbient::from_weight(weight)?, Labeling::HighestLift, max_degree)
    }

    /// The crystal of V(Λ) labelled inside the tensor of level-1 crystals.
    pub fn build_m(weight: &AffineWeight, max_degree: u32) -> Result<CrystalGraph> {
        if !weight.is_dominant() || weight.delta_coeff() != 0 {
            return Err(Error::Precondition(format!(
                "crystal needs a dominant delta-free weight, got {weight}"
            )));
        }
        CrystalGraph::build(
            FockAmbient::from_weight(weight)?,
            Labeling::TensorFactors,
            max_degree,
        )
    }

    pub fn ambient(&self) -> &FockAmbient {
        &self.ambient
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> &[ColoredMultipartition] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, u32, usize)] {
        &self.edges
    }

    pub fn contains(&self, mp: &ColoredMultipartition) -> bool {
        self.index.contains_key(mp.components())
    }

    /// Vertex counts per principal degree 0..=max_degree.
    pub fn counts_by_degree(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.max_degree as usize + 1];
        for label in &self.labels {
            counts[label.size() as usize] += 1;
        }
        counts
    }

    /// The arrow word from the root to the given vertex (colours, in
    /// application order).
    pub fn arrow_word(&self, mp: &ColoredMultipartition) -> Result<Vec<u32>> {
        let Some(&id) = self.index.get(mp.components()) else {
            return Err(Error::Precondition(format!(
                "label {mp} is not a vertex of the built crystal"
            )));
        };
        let mut word = Vec::new();
        let mut cur = id;
        while let Some((p, r)) = self.parent[cur] {
            word.push(r);
            cur = p;
        }
        word.reverse();
        Ok(word)
    }

    /// Replay an arrow word from this graph's root.
    pub fn replay(&self, word: &[u32]) -> Result<ColoredMultipartition> {
        let mut cur = self.labels[0].clone();
        for &r in word {
            cur = apply_f(self.labeling, &cur, r)?.ok_or_else(|| {
                Error::Inconsistency(format!(
                    "arrow word not replayable: f_{r} vanished at {cur}"
                ))
            })?;
        }
        Ok(cur)
    }

    /// Deterministic DOT text: vertices in id order, edges labelled by
    /// colour.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph crystal {\n");
        let _ = writeln!(out, "  // highest weight {}", self.ambient.highest_weight());
        for (id, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  v{id} [label=\"{}\"];", label.to_compact());
        }
        for (src, r, dst) in &self.edges {
            let _ = writeln!(out, "  v{src} -> v{dst} [label=\"{r}\"];");
        }
        out.push_str("}\n");
        out
    }

    /// JSON dump {vertices: […], edges: [[src, r, dst], …]}.
    pub fn to_json(&self) -> CrystalJson {
        CrystalJson {
            n: self.ambient.n(),
            weight: self.ambient.highest_weight().to_string(),
            labels: match self.labeling {
                Labeling::HighestLift => "Y",
                Labeling::TensorFactors => "M",
            }
            .to_string(),
            max_degree: self.max_degree,
            vertices: self.labels.iter().map(|l| l.to_compact()).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(s, r, d)| (s as u64, r, d as u64))
                .collect(),
        }
    }
}

/// Serializable graph dump.
#[derive(Serialize, serde::Deserialize)]
pub struct CrystalJson {
    pub n: u32,
    pub weight: String,
    pub labels: String,
    pub max_degree: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(u64, u32, u64)>,
}

/// Conjugate every component and reverse the component order, keeping the
/// charges of the reversed positions.  This is the relabelling transform
/// that other label conventions for the same crystal apply on top of the
/// tensor-factor labels; no equivalence with any external convention is
/// asserted here.
pub fn conjugate_switch(mp: &ColoredMultipartition) -> Result<ColoredMultipartition> {
    let parts: Vec<Partition> = mp.components().iter().rev().map(|p| p.conjugate()).collect();
    let charges: Vec<u32> = mp.ambient().charges().iter().rev().copied().collect();
    ColoredMultipartition::new(FockAmbient::new(mp.n(), charges)?, parts)
}

/// Map a Y-label to its M-label by replaying its arrow word in the
/// tensor-factor crystal.
pub fn relabel(
    y_graph: &CrystalGraph,
    m_graph: &CrystalGraph,
    label: &ColoredMultipartition,
) -> Result<ColoredMultipartition> {
    if y_graph.labeling != Labeling::HighestLift || m_graph.labeling != Labeling::TensorFactors {
        return Err(Error::Precondition(
            "relabel needs a Y-graph and an M-graph".into(),
        ));
    }
    let word = y_graph.arrow_word(label)?;
    m_graph.replay(&word)
}

/// The character by crystal enumeration: multiplicities of wt(λ) over the
/// Y-vertices up to the degree cutoff.
pub fn character_by_crystal(weight: &AffineWeight, max_degree: u32) -> Result<WeightMultiplicities> {
    let graph = CrystalGraph::build_y(weight, max_degree)?;
    let mut out = WeightMultiplicities::new();
    for label in graph.vertices() {
        *out.entry(label.weight()).or_insert(0) += 1;
    }
    Ok(out)
}

/// The character by path enumeration: multiplicities of wt(p) over the
/// Λ-paths of principal degree ≤ max_degree.
pub fn character_by_paths(weight: &AffineWeight, max_degree: u32) -> Result<WeightMultiplicities> {
    let mut out = WeightMultiplicities::new();
    for p in enumerate_paths(weight, max_degree as usize)? {
        let wt = p.weight()?;
        // Principal degree: solve wt = Λ − Σ N^i α_i; the δ part gives N^0
        // and the classical part the differences N^i − N^0.
        let diff = weight - &wt;
        let n0 = diff.delta_coeff();
        let mut total = 0i64;
        let mut offsets = vec![0i64; weight.modulus() as usize];
        // classical(diff) = Σ_{i≥1} (N^i − N^0) ᾱ_i: partial sums of the
        // centered coordinates recover the offsets.
        let coords = diff.classical_projection();
        let mut partial = crate::weights::Rat::from(num_bigint::BigInt::from(0));
        #[allow(clippy::needless_range_loop)]
        for i in 1..weight.modulus() as usize {
            partial += &coords.coords()[i - 1];
            // offsets[i] = c_1 + … + c_i must be integral here.
            if !partial.is_integer() {
                return Err(Error::Inconsistency(format!(
                    "non-integral weight decomposition for {wt}"
                )));
            }
            offsets[i] = int_value(&partial);
        }
        for &off in &offsets {
            let ni = n0 + off;
            if ni < 0 {
                return Err(Error::Inconsistency(format!(
                    "negative node count for {wt}"
                )));
            }
            total += ni;
        }
        if total <= max_degree as i64 {
            *out.entry(wt).or_insert(0) += 1;
        }
    }
    Ok(out)
}

fn int_value(r: &crate::weights::Rat) -> i64 {
    use num_traits::ToPrimitive;
    r.to_integer().to_i64().expect("small integer")
}

/// Character with the path-side cross check: the two computations must agree
/// on every weight of principal degree ≤ max_degree.
pub fn character(weight: &AffineWeight, max_degree: u32) -> Result<WeightMultiplicities> {
    let by_crystal = character_by_crystal(weight, max_degree)?;
    let by_paths = character_by_paths(weight, max_degree)?;
    if by_crystal != by_paths {
        return Err(Error::CrossCheck(format!(
            "character mismatch: {} weights by crystal, {} by paths",
            by_crystal.len(),
            by_paths.len()
        )));
    }
    Ok(by_crystal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::multipartitions_up_to;

    fn w(n: u32, s: &str) -> AffineWeight {
        AffineWeight::parse(n, s).unwrap()
    }

    fn cm(n: u32, text: &str) -> ColoredMultipartition {
        ColoredMultipartition::parse_compact(n, text).unwrap()
    }

    #[test]
    fn y_crystal_of_level_two_vacuum() {
        let g = CrystalGraph::build_y(&w(2, "2*L0"), 5).unwrap();
        assert_eq!(g.counts_by_degree(), vec![1, 1, 2, 3, 4, 6]);
        for text in [
            "[[3,1],[]]@0,0",
            "[[2],[2]]@0,0",
            "[[5],[]]@0,0",
            "[[3],[2]]@0,0",
            "[[2,1],[2]]@0,0",
            "[[3,2],[]]@0,0",
            "[[4],[1]]@0,0",
            "[[4,1],[]]@0,0",
        ] {
            assert!(g.contains(&cm(2, text)), "{text}");
        }
        // Degree 0 graph is a single vertex.
        let g0 = CrystalGraph::build_y(&w(2, "2*L0"), 0).unwrap();
        assert_eq!(g0.vertex_count(), 1);
    }

    #[test]
    fn y_crystal_vertices_are_exactly_highest_lifts() {
        for (n, weight) in [(2u32, "2*L0"), (2, "1*L0+1*L1"), (3, "1*L0"), (3, "1*L1+1*L2")] {
            let lam = w(n, weight);
            let g = CrystalGraph::build_y(&lam, 6).unwrap();
            let amb = FockAmbient::from_weight(&lam).unwrap();
            let mut expected: Vec<ColoredMultipartition> = multipartitions_up_to(&amb, 6)
                .into_iter()
                .filter(|m| m.is_highest_lift().unwrap())
                .collect();
            expected.sort();
            let mut got = g.vertices().to_vec();
            got.sort();
            assert_eq!(got, expected, "{weight} n={n}");
        }
    }

    #[test]
    fn m_crystal_of_level_two_vacuum() {
        let g = CrystalGraph::build_m(&w(2, "2*L0"), 5).unwrap();
        // Same degree counts as the Y-crystal (isomorphic crystals).
        assert_eq!(g.counts_by_degree(), vec![1, 1, 2, 3, 4, 6]);
        assert!(g.contains(&cm(2, "[[2,1],[1]]@0,0")));
        assert!(g.contains(&cm(2, "[[3,1],[1]]@0,0")));
        // Vertices absent from the M-labels despite being Y-labels.
        assert!(!g.contains(&cm(2, "[[2],[2]]@0,0")));
        assert!(!g.contains(&cm(2, "[[3],[2]]@0,0")));
    }

    #[test]
    fn per_degree_counts_agree_between_labellings() {
        for (n, weight) in [
            (2u32, "2*L0"),
            (2, "1*L0+1*L1"),
            (2, "2*L0+1*L1"),
            (3, "1*L0+1*L2"),
            (3, "2*L1"),
            (4, "1*L0+1*L1+1*L3"),
        ] {
            let lam = w(n, weight);
            let y = CrystalGraph::build_y(&lam, 6).unwrap();
            let m = CrystalGraph::build_m(&lam, 6).unwrap();
            assert_eq!(y.counts_by_degree(), m.counts_by_degree(), "{weight}");
        }
    }

    #[test]
    fn relabel_worked_examples() {
        let lam = w(2, "2*L0");
        let y = CrystalGraph::build_y(&lam, 5).unwrap();
        let m = CrystalGraph::build_m(&lam, 5).unwrap();
        assert_eq!(
            relabel(&y, &m, &cm(2, "[[2],[2]]@0,0")).unwrap(),
            cm(2, "[[2,1],[1]]@0,0")
        );
        assert_eq!(
            relabel(&y, &m, &cm(2, "[[3],[2]]@0,0")).unwrap(),
            cm(2, "[[3,1],[1]]@0,0")
        );
        // All other vertices of degree ≤ 5 keep their labels.
        for v in y.vertices() {
            let image = relabel(&y, &m, v).unwrap();
            let fixed = v.to_compact() != "[[2],[2]]@0,0" && v.to_compact() != "[[3],[2]]@0,0";
            assert_eq!(image == *v, fixed, "{}", v.to_compact());
        }
        // Outside the built range: error.
        assert!(relabel(&y, &m, &cm(2, "[[6],[]]@0,0")).is_err());
    }

    #[test]
    fn relabel_is_bijective_per_degree() {
        for (n, weight) in [(2u32, "2*L0"), (3, "1*L0+1*L1")] {
            let lam = w(n, weight);
            let y = CrystalGraph::build_y(&lam, 6).unwrap();
            let m = CrystalGraph::build_m(&lam, 6).unwrap();
            let mut images: Vec<ColoredMultipartition> = y
                .vertices()
                .iter()
                .map(|v| relabel(&y, &m, v).unwrap())
                .collect();
            for (v, img) in y.vertices().iter().zip(&images) {
                assert_eq!(v.size(), img.size());
                assert!(m.contains(img));
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), y.vertex_count(), "{weight}");
        }
    }

    #[test]
    fn eps_counts_agree_between_labellings() {
        let lam = w(2, "2*L0");
        let y = CrystalGraph::build_y(&lam, 5).unwrap();
        let m = CrystalGraph::build_m(&lam, 5).unwrap();
        for v in y.vertices() {
            let image = relabel(&y, &m, v).unwrap();
            for r in 0..2 {
                assert_eq!(
                    eps_by_applications(Labeling::HighestLift, v, r).unwrap(),
                    eps_by_applications(Labeling::TensorFactors, &image, r).unwrap(),
                    "{} r={r}",
                    v.to_compact()
                );
            }
        }
    }

    #[test]
    fn character_of_level_two_vacuum() {
        let ch = character(&w(2, "2*L0"), 8).unwrap();
        let expect = [
            ("2*L0", 1),
            ("2*L1-1*d", 1),
            ("2*L0-1*d", 1),
            ("-2*L0+4*L1-2*d", 1),
            ("2*L1-2*d", 2),
        ];
        for (text, mult) in expect {
            assert_eq!(ch.get(&w(2, text)).copied(), Some(mult), "{text}");
        }
        // Degree 0: only Λ itself.
        let ch0 = character(&w(2, "2*L0"), 0).unwrap();
        assert_eq!(ch0.len(), 1);
        assert_eq!(ch0.get(&w(2, "2*L0")).copied(), Some(1));
    }

    #[test]
    fn character_of_basic_level_one_counts_regular_partitions() {
        // Multiplicity of each weight equals the number of 3-regular
        // partitions with the matching node counts, degrees ≤ 4.
        let ch = character(&w(3, "1*L0"), 4).unwrap();
        let amb = FockAmbient::from_weight(&w(3, "1*L0")).unwrap();
        let mut expect = WeightMultiplicities::new();
        for m in multipartitions_up_to(&amb, 4) {
            if m.components()[0].is_n_regular(3) {
                *expect.entry(m.weight()).or_insert(0) += 1;
            }
        }
        assert_eq!(ch, expect);
    }

    #[test]
    fn dot_export_is_deterministic() {
        let g = CrystalGraph::build_y(&w(2, "2*L0"), 2).unwrap();
        let dot = g.to_dot();
        assert_eq!(dot, g.to_dot());
        // 4 vertices, 3 edges at cutoff 2.
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().len(), 3);
        assert!(dot.contains("v0 [label=\"[[],[]]@0,0\"]"));
        let g0 = CrystalGraph::build_y(&w(2, "2*L0"), 0).unwrap();
        assert_eq!(g0.vertex_count(), 1);
        assert!(g0.edges().is_empty());
    }
}
