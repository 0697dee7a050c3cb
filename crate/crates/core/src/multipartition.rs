//! Coloured multipartitions and their node combinatorics.
//!
//! A multipartition is an l-tuple of partitions whose component j carries a
//! charge v_j; the cell in row i, column k of component j has colour
//! (k − i + v_j) mod n, and sits on the diagonal d = k − i + v_j.  Addable and
//! removable cells of a fixed colour are ordered by
//!
//! (d, j) < (d', j')  ⟺  d < d', or d = d' and j > j',
//!
//! and the resulting word of A's and R's (the r-signature) drives everything:
//! cancelling adjacent RA pairs leaves the normal nodes, whose extremes are
//! the good nodes defining the crystal operators ẽ_r and f̃_r at q = 0.
//!
//! The module also provides weights, the cylindrical and highest-lift
//! predicates (both the end-colour characterisation and the t_{jk}
//! inequalities), and the conjugate-reverse map used by the ♯ symmetry.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{reduce, AffineWeight};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition("zero part in partition".into()));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The i-th part (1-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Height of column k (1-based): the conjugate partition's k-th part.
    pub fn column_height(&self, k: usize) -> u32 {
        self.0.iter().take_while(|&&p| p as usize >= k).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.part(1) as usize;
        let parts = (1..=max).map(|k| self.column_height(k)).collect();
        Partition(parts)
    }

    /// True when no part repeats n times or more.
    pub fn is_n_regular(&self, n: u32) -> bool {
        self.0
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < n as usize)
    }

    /// Add a cell at the end of row i (1-based, possibly a new row).
    fn with_cell_added(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Partition(parts)
    }

    /// Remove the last cell of row i (1-based).
    fn with_cell_removed(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.remove(i - 1);
        }
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The ambient data of a Fock space: the modulus n and the charge of each
/// component, in component order.
///
/// Charges are usually sorted (that is the convention tying the multiset of
/// charges to a dominant weight), but the conjugate-reverse map produces
/// order-significant, possibly unsorted charge vectors, so sortedness is not
/// an invariant of this type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockAmbient {
    n: u32,
    charges: Vec<u32>,
}

impl FockAmbient {
    pub fn new(n: u32, charges: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        if charges.is_empty() {
            return Err(Error::Precondition("at least one component required".into()));
        }
        if let Some(&c) = charges.iter().find(|&&c| c >= n) {
            return Err(Error::Precondition(format!("charge {c} out of range [0,{n})")));
        }
        Ok(FockAmbient { n, charges })
    }

    /// Ambient of the Fock space F(Λ) for a dominant δ-free weight Λ of
    /// positive level (charges sorted).
    pub fn from_weight(weight: &AffineWeight) -> Result<Self> {
        FockAmbient::new(weight.modulus(), weight.charges()?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn charges(&self) -> &[u32] {
        &self.charges
    }

    pub fn components(&self) -> usize {
        self.charges.len()
    }

    pub fn is_sorted(&self) -> bool {
        self.charges.windows(2).all(|w| w[0] <= w[1])
    }

    /// The highest weight Λ = Σ_j Λ_{v_j}.
    pub fn highest_weight(&self) -> AffineWeight {
        let mut w = AffineWeight::zero(self.n).expect("n >= 2");
        for &v in &self.charges {
            w = &w + &AffineWeight::fundamental(self.n, v as i64).expect("n >= 2");
        }
        w
    }

    /// The ambient of F(♯Λ): components reversed, charges negated mod n.
    pub fn sharp(&self) -> FockAmbient {
        let n = self.n;
        let charges = self
            .charges
            .iter()
            .rev()
            .map(|&v| reduce(-(v as i64), n) as u32)
            .collect();
        FockAmbient { n, charges }
    }

    fn require_sorted(&self) -> Result<()> {
        if self.is_sorted() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "operation requires sorted charges, got {:?}",
                self.charges
            )))
        }
    }
}

/// Whether a node can be added to or removed from the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// An addable or removable cell of a coloured multipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub component: usize,
    /// 1-based row index.
    pub row: u32,
    /// 1-based column index.
    pub col: u32,
    /// The diagonal d = col − row + v_j (not reduced mod n).
    pub diagonal: i64,
    /// d mod n, nonnegative representative.
    pub colour: u32,
    pub kind: NodeKind,
}

impl Node {
    /// The total order on nodes: by diagonal, then by component descending.
    fn key(&self) -> (i64, std::cmp::Reverse<usize>) {
        (self.diagonal, std::cmp::Reverse(self.component))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            NodeKind::Addable => 'A',
            NodeKind::Removable => 'R',
        };
        write!(f, "{k}({},{})", self.diagonal, self.component)
    }
}

/// An l-tuple of partitions in a fixed Fock ambient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredMultipartition {
    ambient: FockAmbient,
    parts: Vec<Partition>,
}

impl ColoredMultipartition {
    pub fn new(ambient: FockAmbient, parts: Vec<Partition>) -> Result<Self> {
        if parts.len() != ambient.components() {
            return Err(Error::Precondition(format!(
                "{} components given, ambient has {}",
                parts.len(),
                ambient.components()
            )));
        }
        Ok(ColoredMultipartition { ambient, parts })
    }

    pub fn empty(ambient: FockAmbient) -> Self {
        let parts = vec![Partition::empty(); ambient.components()];
        ColoredMultipartition { ambient, parts }
    }

    /// Build from raw part lists; validates each component.
    pub fn from_parts(ambient: FockAmbient, parts: Vec<Vec<u32>>) -> Result<Self> {
        let parts = parts
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        ColoredMultipartition::new(ambient, parts)
    }

    pub fn ambient(&self) -> &FockAmbient {
        &self.ambient
    }

    pub fn n(&self) -> u32 {
        self.ambient.n
    }

    pub fn components(&self) -> &[Partition] {
        &self.parts
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.parts[j]
    }

    /// Raw part lists, for serialization and map keys.
    pub fn raw_parts(&self) -> Vec<Vec<u32>> {
        self.parts.iter().map(|p| p.0.clone()).collect()
    }

    /// Total number of cells |λ|.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|p| p.size()).sum()
    }

    /// Largest part over all components.
    pub fn max_part(&self) -> u32 {
        self.parts.iter().map(|p| p.part(1)).max().unwrap_or(0)
    }

    /// Colour of the cell (or addable position) in row i, column k of
    /// component j: (k − i + v_j) mod n.
    pub fn node_colour(&self, component: usize, row: u32, col: u32) -> Result<u32> {
        if component >= self.parts.len() {
            return Err(Error::Precondition(format!(
                "component {component} out of range"
            )));
        }
        if row == 0 || col == 0 {
            return Err(Error::Precondition("rows and columns are 1-based".into()));
        }
        Ok(self.colour_at(component, row, col))
    }

    fn colour_at(&self, component: usize, row: u32, col: u32) -> u32 {
        let d = self.diagonal_at(component, row, col);
        reduce(d, self.ambient.n) as u32
    }

    fn diagonal_at(&self, component: usize, row: u32, col: u32) -> i64 {
        col as i64 - row as i64 + self.ambient.charges[component] as i64
    }

    fn node(&self, component: usize, row: u32, col: u32, kind: NodeKind) -> Node {
        let diagonal = self.diagonal_at(component, row, col);
        Node {
            component,
            row,
            col,
            diagonal,
            colour: reduce(diagonal, self.ambient.n) as u32,
            kind,
        }
    }

    /// All addable and removable nodes, unsorted.
    fn all_boundary_nodes(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for (j, p) in self.parts.iter().enumerate() {
            let rows = p.rows();
            for i in 1..=rows + 1 {
                let len = p.part(i);
                // Addable at (i, len+1) when the row above is strictly longer
                // (or this is the first row).
                if i == 1 || p.part(i - 1) > len {
                    nodes.push(self.node(j, i as u32, len + 1, NodeKind::Addable));
                }
                // Removable at (i, len) when the row below is strictly shorter.
                if len > 0 && p.part(i + 1) < len {
                    nodes.push(self.node(j, i as u32, len, NodeKind::Removable));
                }
            }
        }
        nodes
    }

    /// The r-signature: all addable and removable r-nodes in node order.
    pub fn r_signature(&self, r: u32) -> Result<Vec<Node>> {
        if r >= self.ambient.n {
            return Err(Error::Precondition(format!(
                "colour {r} out of range [0,{})",
                self.ambient.n
            )));
        }
        let mut nodes: Vec<Node> = self
            .all_boundary_nodes()
            .into_iter()
            .filter(|node| node.colour == r)
            .collect();
        nodes.sort();
        Ok(nodes)
    }

    /// Number of addable minus number of removable r-nodes: N_r(λ).
    pub fn n_r(&self, r: u32) -> i64 {
        let mut acc = 0i64;
        for node in self.all_boundary_nodes() {
            if node.colour == r {
                match node.kind {
                    NodeKind::Addable => acc += 1,
                    NodeKind::Removable => acc -= 1,
                }
            }
        }
        acc
    }

    /// Node counts per colour: N^r(λ) = number of r-cells.
    pub fn colour_counts(&self) -> Vec<u64> {
        let n = self.ambient.n as usize;
        let mut counts = vec![0u64; n];
        for (j, p) in self.parts.iter().enumerate() {
            for (i0, &len) in p.parts().iter().enumerate() {
                let row = i0 as u32 + 1;
                for col in 1..=len {
                    counts[self.colour_at(j, row, col) as usize] += 1;
                }
            }
        }
        counts
    }

    /// N^0(λ), the homogeneous (z-) degree.
    pub fn degree(&self) -> u64 {
        self.colour_counts()[0]
    }

    /// wt(λ) = Λ − Σ_i N^i(λ) α_i.
    pub fn weight(&self) -> AffineWeight {
        let n = self.ambient.n;
        let mut w = self.ambient.highest_weight();
        for (i, &count) in self.colour_counts().iter().enumerate() {
            if count > 0 {
                let alpha = AffineWeight::simple_root(n, i as i64).expect("n >= 2");
                w = &w - &alpha.scaled(count as i64);
            }
        }
        w
    }

    /// ε_r(λ): number of normal removable r-nodes.
    pub fn eps(&self, r: u32) -> Result<usize> {
        let reduced = normal_reduce(&self.r_signature(r)?)?;
        Ok(reduced
            .iter()
            .filter(|node| node.kind == NodeKind::Removable)
            .count())
    }

    /// φ_r(λ): number of normal addable r-nodes.
    pub fn phi(&self, r: u32) -> Result<usize> {
        let reduced = normal_reduce(&self.r_signature(r)?)?;
        Ok(reduced
            .iter()
            .filter(|node| node.kind == NodeKind::Addable)
            .count())
    }

    /// The good addable r-node (rightmost surviving A), if any.
    pub fn good_addable(&self, r: u32) -> Result<Option<Node>> {
        let reduced = normal_reduce(&self.r_signature(r)?)?;
        Ok(reduced
            .into_iter()
            .rfind(|node| node.kind == NodeKind::Addable))
    }

    /// The good removable r-node (leftmost surviving R), if any.
    pub fn good_removable(&self, r: u32) -> Result<Option<Node>> {
        let reduced = normal_reduce(&self.r_signature(r)?)?;
        Ok(reduced
            .into_iter()
            .find(|node| node.kind == NodeKind::Removable))
    }

    /// f̃_r: add the good addable r-node; None when there is none.
    pub fn f_tilde(&self, r: u32) -> Result<Option<ColoredMultipartition>> {
        Ok(self.good_addable(r)?.map(|node| {
            let mut parts = self.parts.clone();
            parts[node.component] = parts[node.component].with_cell_added(node.row as usize);
            ColoredMultipartition {
                ambient: self.ambient.clone(),
                parts,
            }
        }))
    }

    /// ẽ_r: remove the good removable r-node; None when there is none.
    pub fn e_tilde(&self, r: u32) -> Result<Option<ColoredMultipartition>> {
        Ok(self.good_removable(r)?.map(|node| {
            let mut parts = self.parts.clone();
            parts[node.component] = parts[node.component].with_cell_removed(node.row as usize);
            ColoredMultipartition {
                ambient: self.ambient.clone(),
                parts,
            }
        }))
    }

    /// The cylindricity inequalities tying consecutive components together
    /// (with a wrap of the first component shifted by n rows).
    ///
    /// Requires sorted charges.
    pub fn is_cylindrical(&self) -> Result<bool> {
        self.ambient.require_sorted()?;
        let l = self.parts.len();
        let v = &self.ambient.charges;
        let n = self.ambient.n;
        for j in 0..l {
            let (upper, lower, shift) = if j + 1 < l {
                (j, j + 1, (v[j + 1] - v[j]) as usize)
            } else {
                (l - 1, 0, (n + v[0] - v[l - 1]) as usize)
            };
            for i in 1..=self.parts[lower].rows() {
                if i < shift + 1 {
                    continue;
                }
                let upper_row = i - shift;
                if self.parts[upper].part(upper_row) < self.parts[lower].part(i) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Right-end colours of the rows of length k, over all components.
    pub fn right_end_colours(&self, k: u32) -> Vec<u32> {
        let mut colours = Vec::new();
        for (j, p) in self.parts.iter().enumerate() {
            for (i0, &len) in p.parts().iter().enumerate() {
                if len == k {
                    colours.push(self.colour_at(j, i0 as u32 + 1, k));
                }
            }
        }
        colours.sort_unstable();
        colours
    }

    /// Left-end colours of the rows of length k, over all components.
    pub fn left_end_colours(&self, k: u32) -> Vec<u32> {
        let mut colours = Vec::new();
        for (j, p) in self.parts.iter().enumerate() {
            for (i0, &len) in p.parts().iter().enumerate() {
                if len == k {
                    colours.push(self.colour_at(j, i0 as u32 + 1, 1));
                }
            }
        }
        colours.sort_unstable();
        colours
    }

    /// The highest-lift predicate: cylindrical, and for every occurring row
    /// length at least one colour is missing from the right ends of the rows
    /// of that length.
    pub fn is_highest_lift(&self) -> Result<bool> {
        if !self.is_cylindrical()? {
            return Ok(false);
        }
        let n = self.ambient.n;
        let mut lengths: Vec<u32> = self
            .parts
            .iter()
            .flat_map(|p| p.parts().iter().copied())
            .collect();
        lengths.sort_unstable();
        lengths.dedup();
        for k in lengths {
            let colours = self.right_end_colours(k);
            let mut seen = vec![false; n as usize];
            for c in colours {
                seen[c as usize] = true;
            }
            if seen.iter().all(|&s| s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The t_{jk} form of the highest-lift criterion:
    /// t_{jk} = v_j − λ^{(j)'}_{k+1}, extended by t_{j+l,k} = t_{j,k} + n;
    /// cylindricity is t_{j,k} ≤ t_{j+1,k} and membership requires, for each
    /// k ≥ 0, some j with t_{j+1,k} > t_{j,k+1}.
    pub fn is_highest_lift_tjk(&self) -> Result<bool> {
        self.ambient.require_sorted()?;
        let l = self.parts.len();
        let n = self.ambient.n as i64;
        let kmax = self.max_part() as usize + 1;
        let t = |j: usize, k: usize| -> i64 {
            // j in 0..=l via periodicity.
            let (jj, off) = if j < l { (j, 0) } else { (j - l, n) };
            self.ambient.charges[jj] as i64 - self.parts[jj].column_height(k + 1) as i64 + off
        };
        // Cylindricity.
        for k in 0..=kmax {
            for j in 0..l {
                if t(j, k) > t(j + 1, k) {
                    return Ok(false);
                }
            }
        }
        // For each k, some j_* with t_{j_*+1,k} > t_{j_*,k+1}.
        for k in 0..=kmax {
            let found = (0..l).any(|j| t(j + 1, k) > t(j, k + 1));
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Conjugate every component, reverse the component order, and recolour
    /// the new component j with charge (−v_{l−1−j}) mod n.  The output charge
    /// order is semantic and deliberately not re-sorted.
    pub fn conjugate_reverse(&self) -> ColoredMultipartition {
        let parts = self
            .parts
            .iter()
            .rev()
            .map(|p| p.conjugate())
            .collect::<Vec<_>>();
        ColoredMultipartition {
            ambient: self.ambient.sharp(),
            parts,
        }
    }

    /// Stable reorder of the components into non-decreasing charge order,
    /// identifying an order-significant tuple with a basis label of the
    /// standard (sorted-charge) Fock space.
    pub fn sorted_by_charge(&self) -> ColoredMultipartition {
        let mut order: Vec<usize> = (0..self.parts.len()).collect();
        order.sort_by_key(|&j| (self.ambient.charges[j], j));
        let charges = order.iter().map(|&j| self.ambient.charges[j]).collect();
        let parts = order.iter().map(|&j| self.parts[j].clone()).collect();
        ColoredMultipartition {
            ambient: FockAmbient {
                n: self.ambient.n,
                charges,
            },
            parts,
        }
    }

    /// Compact text form `[[3,2],[1,1,1],[5,4,1]]@1,1,2`.
    pub fn to_compact(&self) -> String {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let inner: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                format!("[{}]", inner.join(","))
            })
            .collect();
        let charges: Vec<String> = self
            .ambient
            .charges
            .iter()
            .map(|c| c.to_string())
            .collect();
        format!("[{}]@{}", parts.join(","), charges.join(","))
    }

    /// Parse the compact text form (requires the modulus).
    pub fn parse_compact(n: u32, text: &str) -> Result<Self> {
        let (parts_str, charges_str) = text
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("missing '@' in '{text}'")))?;
        let charges: Vec<u32> = charges_str
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad charge '{c}'")))
            })
            .collect::<Result<_>>()?;
        let json: serde_json::Value = serde_json::from_str(parts_str)
            .map_err(|e| Error::Parse(format!("bad part list '{parts_str}': {e}")))?;
        let arr = json
            .as_array()
            .ok_or_else(|| Error::Parse("part list must be an array".into()))?;
        let mut parts = Vec::new();
        for comp in arr {
            let comp = comp
                .as_array()
                .ok_or_else(|| Error::Parse("component must be an array".into()))?;
            let mut rows = Vec::new();
            for x in comp {
                let x = x
                    .as_u64()
                    .ok_or_else(|| Error::Parse("parts must be positive integers".into()))?;
                rows.push(x as u32);
            }
            parts.push(rows);
        }
        ColoredMultipartition::from_parts(FockAmbient::new(n, charges)?, parts)
    }

    /// Plain-text coloured diagram, one block per component.
    pub fn diagram(&self) -> String {
        let mut out = String::new();
        for (j, p) in self.parts.iter().enumerate() {
            if j > 0 {
                out.push('\n');
            }
            out.push_str(&format!(
                "component {} (charge {}):\n",
                j, self.ambient.charges[j]
            ));
            if p.rows() == 0 {
                out.push_str("  (empty)\n");
                continue;
            }
            for (i0, &len) in p.parts().iter().enumerate() {
                out.push_str("  ");
                for col in 1..=len {
                    let c = self.colour_at(j, i0 as u32 + 1, col);
                    out.push_str(&c.to_string());
                    out.push(' ');
                }
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for ColoredMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, p) in self.parts.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Serialized JSON form: `{"n":3,"charges":[1,1,2],"parts":[[3,2],[1,1,1],[5,4,1]]}`.
#[derive(Serialize, Deserialize)]
struct MultipartitionJson {
    n: u32,
    charges: Vec<u32>,
    parts: Vec<Vec<u32>>,
}

impl Serialize for ColoredMultipartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultipartitionJson {
            n: self.ambient.n,
            charges: self.ambient.charges.clone(),
            parts: self.raw_parts(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColoredMultipartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MultipartitionJson::deserialize(d)?;
        let ambient = FockAmbient::new(raw.n, raw.charges).map_err(serde::de::Error::custom)?;
        ColoredMultipartition::from_parts(ambient, raw.parts).map_err(serde::de::Error::custom)
    }
}

/// Cancel adjacent RA pairs until the word has shape A…AR…R; returns the
/// surviving (normal) nodes.  The input must already be in node order.
pub fn normal_reduce(signature: &[Node]) -> Result<Vec<Node>> {
    if signature.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("signature is not sorted".into()));
    }
    let mut stack: Vec<Node> = Vec::new();
    for node in signature {
        if node.kind == NodeKind::Addable
            && stack.last().map(|top| top.kind) == Some(NodeKind::Removable)
        {
            stack.pop();
        } else {
            stack.push(node.clone());
        }
    }
    Ok(stack)
}

/// Iterator over all partitions of every m ≤ max_size.
pub fn partitions_up_to(max_size: u32) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    for m in 1..=max_size {
        collect_partitions(m, m, &mut Vec::new(), &mut out);
    }
    out
}

fn collect_partitions(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        prefix.push(p);
        collect_partitions(remaining - p, p, prefix, out);
        prefix.pop();
    }
}

/// All multipartitions of total size ≤ max_size in the given ambient.
pub fn multipartitions_up_to(ambient: &FockAmbient, max_size: u32) -> Vec<ColoredMultipartition> {
    let singles = partitions_up_to(max_size);
    let l = ambient.components();
    let mut out = Vec::new();
    let mut chosen: Vec<Partition> = Vec::with_capacity(l);
    fn rec(
        ambient: &FockAmbient,
        singles: &[Partition],
        budget: u64,
        j: usize,
        l: usize,
        chosen: &mut Vec<Partition>,
        out: &mut Vec<ColoredMultipartition>,
    ) {
        if j == l {
            out.push(ColoredMultipartition {
                ambient: ambient.clone(),
                parts: chosen.clone(),
            });
            return;
        }
        for p in singles {
            let s = p.size();
            if s > budget {
                continue;
            }
            chosen.push(p.clone());
            rec(ambient, singles, budget - s, j + 1, l, chosen, out);
            chosen.pop();
        }
    }
    rec(
        ambient,
        &singles,
        max_size as u64,
        0,
        l,
        &mut chosen,
        &mut out,
    );
    out
}
