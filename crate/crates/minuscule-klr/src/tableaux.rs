//! Strict partitions, shifted Young diagrams, standard tableaux, residues.
//!
//! Boxes are addressed `(row, column)`, 1-based, English convention, with the
//! shifted constraint `row <= column`: row `i` occupies columns
//! `i ..= i + part_i - 1`.

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, TypeLabel, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.last() == Some(&0) {
            return Err(Error::NotStrict);
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.parts.len() && j >= i && j <= self.parts[i - 1] + i - 1
    }

    /// Boxes in row-major reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            let i = r + 1;
            for j in i..i + p {
                out.push((i, j));
            }
        }
        out
    }

    /// Rows whose last box can be removed leaving a valid shifted diagram,
    /// with the box coordinates.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let l = self.parts.len();
        for r in 1..=l {
            let p = self.parts[r - 1];
            let ok = if r == l {
                true
            } else {
                p >= self.parts[r] + 2
            };
            if ok {
                out.push((r, r + p - 1));
            }
        }
        out
    }

    /// Boxes that can be added leaving a valid shifted diagram.
    pub fn addable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let l = self.parts.len();
        if l == 0 {
            out.push((1, 1));
            return out;
        }
        out.push((1, self.parts[0] + 1));
        for r in 2..=l {
            if self.parts[r - 2] >= self.parts[r - 1] + 2 {
                out.push((r, r + self.parts[r - 1]));
            }
        }
        if self.parts[l - 1] >= 2 {
            out.push((l + 1, l + 1));
        }
        out
    }

    pub fn with_box_added(&self, row: usize) -> Result<Self> {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        StrictPartition::new(parts)
    }

    pub fn with_box_removed(&self, row: usize) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.remove(row - 1);
        }
        StrictPartition::new(parts)
    }

    /// Text-art rendering of the shifted diagram.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (r, &p) in self.parts.iter().enumerate() {
            out.push_str(&"  ".repeat(r));
            out.push_str(&"[]".repeat(p));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All strict partitions with first part at most `n` and size `m`, in
/// lexicographic order on the part vectors.
pub fn enumerate_strict_partitions(n: usize, m: usize) -> Vec<StrictPartition> {
    fn go(max_part: usize, remaining: usize, prefix: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            acc.push(prefix.clone());
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(p.saturating_sub(1), remaining - p, prefix, acc);
            prefix.pop();
        }
    }
    let mut acc = Vec::new();
    go(n, m, &mut Vec::new(), &mut acc);
    acc.sort();
    acc.into_iter()
        .map(|parts| StrictPartition { parts })
        .collect()
}

/// All of `Par_n`, grouped by size, sizes ascending.
pub fn all_strict_partitions(n: usize) -> Vec<StrictPartition> {
    let max = n * (n + 1) / 2;
    (0..=max)
        .flat_map(|m| enumerate_strict_partitions(n, m))
        .collect()
}

/// `res(i, j) = j - i + 1`.
pub fn residue(i: usize, j: usize) -> Result<usize> {
    if i > j || i == 0 {
        return Err(Error::InvalidBox(i, j));
    }
    Ok(j - i + 1)
}

/// Type-D residue: 1 on odd diagonal boxes, 2 on even ones, `j - i + 2` off it.
pub fn residue_d(i: usize, j: usize) -> Result<usize> {
    if i > j || i == 0 {
        return Err(Error::InvalidBox(i, j));
    }
    Ok(if i == j {
        if i % 2 == 1 {
            1
        } else {
            2
        }
    } else {
        j - i + 2
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    shape: StrictPartition,
    /// `boxes[k]` is the box filled with entry `k + 1`.
    boxes: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    /// Box of the 1-based entry `k`.
    pub fn box_of(&self, k: usize) -> (usize, usize) {
        self.boxes[k - 1]
    }

    pub fn entry_at(&self, i: usize, j: usize) -> Option<usize> {
        self.boxes.iter().position(|&b| b == (i, j)).map(|p| p + 1)
    }

    /// Exchanges entries `k` and `k + 1`, if the result is standard.
    pub fn swap_entries(&self, k: usize) -> Option<StandardTableau> {
        let (r1, c1) = self.boxes[k - 1];
        let (r2, c2) = self.boxes[k];
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut boxes = self.boxes.clone();
        boxes.swap(k - 1, k);
        Some(StandardTableau {
            shape: self.shape.clone(),
            boxes,
        })
    }

    /// Residue sequence, box of the largest entry first.
    pub fn residue_sequence(&self, res: impl Fn(usize, usize) -> Result<usize>) -> Vec<usize> {
        self.boxes
            .iter()
            .rev()
            .map(|&(i, j)| res(i, j).expect("valid shifted box"))
            .collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.parts(),
            "entries": self.boxes.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (r, &p) in self.shape.parts().iter().enumerate() {
            let i = r + 1;
            out.push_str(&"    ".repeat(r));
            for j in i..i + p {
                let e = self.entry_at(i, j).expect("filled box");
                out.push_str(&format!("{e:>3} "));
            }
            out.push('\n');
        }
        out
    }
}

/// Complete enumeration of `ST(shape)` by backtracking over addable corners,
/// lexicographic in the sequence of box additions.
pub fn standard_tableaux(shape: &StrictPartition) -> Vec<StandardTableau> {
    fn go(
        target: &StrictPartition,
        cur: &StrictPartition,
        boxes: &mut Vec<(usize, usize)>,
        acc: &mut Vec<StandardTableau>,
    ) {
        if cur.size() == target.size() {
            acc.push(StandardTableau {
                shape: target.clone(),
                boxes: boxes.clone(),
            });
            return;
        }
        for (row, col) in cur.addable_boxes() {
            if target.contains(row, col) {
                let next = cur.with_box_added(row).expect("addable box");
                boxes.push((row, col));
                go(target, &next, boxes, acc);
                boxes.pop();
            }
        }
    }
    let mut acc = Vec::new();
    go(
        shape,
        &StrictPartition::empty(),
        &mut Vec::new(),
        &mut acc,
    );
    acc
}

/// The row filling: entries `1..=N` left to right, top to bottom.
pub fn initial_tableau(shape: &StrictPartition) -> StandardTableau {
    StandardTableau {
        shape: shape.clone(),
        boxes: shape.boxes(),
    }
}

/// `wt(lambda) = Lambda_1 - sum alpha_{res(b)}` in type `B_n`.
pub fn wt_b(datum: &CartanDatum, shape: &StrictPartition) -> Result<Weight> {
    assert_eq!(datum.type_label(), TypeLabel::B);
    if shape.first_part() > datum.rank() {
        return Err(Error::PartTooLarge(shape.first_part(), datum.rank()));
    }
    let mut w = datum.fundamental_weight(1)?;
    for (i, j) in shape.boxes() {
        w = &w - &datum.simple_root(residue(i, j)?)?;
    }
    Ok(w)
}

/// `wt_D(lambda) = Lambda_1 - sum alpha_{res_D(b)}` in type `D_{n+1}`.
pub fn wt_d(datum: &CartanDatum, shape: &StrictPartition) -> Result<Weight> {
    assert_eq!(datum.type_label(), TypeLabel::D);
    if shape.first_part() + 1 > datum.rank() {
        return Err(Error::PartTooLarge(shape.first_part(), datum.rank() - 1));
    }
    let mut w = datum.fundamental_weight(1)?;
    for (i, j) in shape.boxes() {
        w = &w - &datum.simple_root(residue_d(i, j)?)?;
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrystalDirection {
    /// `f_i`: add a box.
    Lower,
    /// `e_i`: remove a box.
    Raise,
}

/// Crystal operator on `Par_n` by adding/removing the unique box of residue `i`.
pub fn partition_crystal_step(
    n: usize,
    shape: &StrictPartition,
    i: usize,
    direction: CrystalDirection,
) -> Option<StrictPartition> {
    match direction {
        CrystalDirection::Lower => shape
            .addable_boxes()
            .into_iter()
            .find(|&(r, c)| residue(r, c).ok() == Some(i) && c <= n + r - 1)
            .map(|(r, _)| shape.with_box_added(r).expect("addable box")),
        CrystalDirection::Raise => shape
            .removable_boxes()
            .into_iter()
            .find(|&(r, c)| residue(r, c).ok() == Some(i))
            .map(|(r, _)| shape.with_box_removed(r).expect("removable box")),
    }
}

/// True iff `wt` is injective on `Par_n` with image the full `B_n` orbit of
/// `Lambda_1`.
pub fn check_partition_bijection(n: usize) -> bool {
    let datum = match CartanDatum::new(TypeLabel::B, n.max(2)) {
        Ok(d) => d,
        Err(_) => return false,
    };
    if n < 2 {
        // B_1 is outside the datum family; n = 1 reduces to the rank-2 weight
        // count restricted to partitions with first part 1.
        let weights: std::collections::BTreeSet<_> = [
            StrictPartition::empty(),
            StrictPartition::new(vec![1]).unwrap(),
        ]
        .iter()
        .map(|p| wt_b(&datum, p).unwrap())
        .collect();
        return weights.len() == 2;
    }
    let shapes = all_strict_partitions(n);
    let weights: std::collections::BTreeSet<_> = shapes
        .iter()
        .map(|p| wt_b(&datum, p).unwrap())
        .collect();
    if weights.len() != shapes.len() {
        return false;
    }
    let orbit: std::collections::BTreeSet<_> = crate::weyl::orbit(
        &datum,
        &datum.fundamental_weight(1).expect("node 1"),
    )
    .into_iter()
    .collect();
    weights == orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn strictness_enforced() {
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        assert!(StrictPartition::new(vec![2, 3]).is_err());
        assert!(StrictPartition::new(vec![2, 0]).is_err());
        assert!(StrictPartition::new(vec![3, 1]).is_ok());
    }

    #[test]
    fn membership() {
        let l = sp(&[3, 1]);
        assert!(l.contains(1, 3));
        assert!(l.contains(2, 2));
        assert!(!l.contains(2, 3));
        assert!(!l.contains(2, 1));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_strict_partitions(5, 0), vec![StrictPartition::empty()]);
        assert_eq!(enumerate_strict_partitions(2, 3), vec![sp(&[2, 1])]);
        let total: usize = (0..=6).map(|m| enumerate_strict_partitions(3, m).len()).sum();
        assert_eq!(total, 8);
        for n in 1..=12usize {
            let total: usize = (0..=n * (n + 1) / 2)
                .map(|m| enumerate_strict_partitions(n, m).len())
                .sum();
            assert_eq!(total, 1 << n, "size of Par_{n}");
        }
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(2, 6).unwrap(), 5);
        assert_eq!(residue(4, 4).unwrap(), 1);
        assert_eq!(residue(1, 9).unwrap(), 9);
        assert!(residue(3, 2).is_err());
    }

    #[test]
    fn residue_d_examples() {
        assert_eq!(residue_d(1, 1).unwrap(), 1);
        assert_eq!(residue_d(2, 2).unwrap(), 2);
        assert_eq!(residue_d(2, 4).unwrap(), 4);
        assert_eq!(residue_d(1, 2).unwrap(), 3);
        assert!(residue_d(2, 1).is_err());
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(standard_tableaux(&sp(&[4])).len(), 1);
        assert_eq!(standard_tableaux(&sp(&[2, 1])).len(), 1);
        assert_eq!(standard_tableaux(&sp(&[3, 1])).len(), 2);
        assert_eq!(standard_tableaux(&sp(&[3, 2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&StrictPartition::empty()).len(), 1);
    }

    #[test]
    fn residue_sequences() {
        let t = initial_tableau(&sp(&[2]));
        assert_eq!(t.residue_sequence(residue), vec![2, 1]);

        // the (7, 4) worked example
        let l = sp(&[7, 4]);
        let target: Vec<(usize, usize)> = vec![
            (1, 1),
            (1, 2),
            (2, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (1, 7),
        ];
        let t = standard_tableaux(&l)
            .into_iter()
            .find(|t| (1..=11).map(|k| t.box_of(k)).collect::<Vec<_>>() == target)
            .expect("the figure tableau is standard");
        assert_eq!(
            t.residue_sequence(residue),
            vec![7, 4, 3, 6, 5, 2, 4, 3, 1, 2, 1]
        );

        let t0 = initial_tableau(&sp(&[2, 1]));
        assert_eq!(t0.residue_sequence(residue), vec![1, 2, 1]);
        assert_eq!(t0.residue_sequence(residue_d), vec![2, 3, 1]);
    }

    #[test]
    fn residue_sequence_ends_with_one() {
        for shape in all_strict_partitions(4) {
            for t in standard_tableaux(&shape) {
                if t.size() > 0 {
                    assert_eq!(*t.residue_sequence(residue).last().unwrap(), 1);
                }
            }
        }
    }

    #[test]
    fn wt_examples() {
        let b2 = CartanDatum::new(TypeLabel::B, 2).unwrap();
        let l1 = b2.fundamental_weight(1).unwrap();
        assert_eq!(wt_b(&b2, &StrictPartition::empty()).unwrap(), l1);
        let mut expected = l1.clone();
        expected = &expected - &b2.simple_root(1).unwrap();
        assert_eq!(wt_b(&b2, &sp(&[1])).unwrap(), expected);
        let mut expected = l1;
        for i in [1, 2, 1] {
            expected = &expected - &b2.simple_root(i).unwrap();
        }
        assert_eq!(wt_b(&b2, &sp(&[2, 1])).unwrap(), expected);
        assert!(wt_b(&b2, &sp(&[3])).is_err());
    }

    #[test]
    fn crystal_steps() {
        use CrystalDirection::*;
        assert_eq!(
            partition_crystal_step(3, &StrictPartition::empty(), 1, Lower),
            Some(sp(&[1]))
        );
        assert_eq!(partition_crystal_step(3, &sp(&[2]), 1, Lower), Some(sp(&[2, 1])));
        assert_eq!(partition_crystal_step(3, &sp(&[2]), 3, Lower), Some(sp(&[3])));
        assert_eq!(partition_crystal_step(3, &sp(&[2, 1]), 2, Raise), None);
        assert_eq!(partition_crystal_step(3, &sp(&[2, 1]), 1, Raise), Some(sp(&[2])));
        // bound lambda_1 <= n
        assert_eq!(partition_crystal_step(2, &sp(&[2]), 3, Lower), None);
    }

    #[test]
    fn bijection_small_ranks() {
        for n in [1, 2, 3, 8] {
            assert!(check_partition_bijection(n), "Par_{n}");
        }
    }

    #[test]
    fn partition_crystal_isomorphic_to_orbit_crystal() {
        // edge-labeled graph isomorphism via the weight map, B_4
        let n = 4;
        let datum = CartanDatum::new(TypeLabel::B, n).unwrap();
        let crystal = crate::crystal::build_crystal(&datum, 1).unwrap();
        for shape in all_strict_partitions(n) {
            let w = wt_b(&datum, &shape).unwrap();
            crystal.vertex_index(&w).expect("wt lands in the orbit");
            for i in 1..=n {
                let f_here = partition_crystal_step(n, &shape, i, CrystalDirection::Lower)
                    .map(|l| wt_b(&datum, &l).unwrap());
                assert_eq!(crystal.lower(&w, i).unwrap(), f_here, "f_{i} at {shape:?}");
                let e_here = partition_crystal_step(n, &shape, i, CrystalDirection::Raise)
                    .map(|l| wt_b(&datum, &l).unwrap());
                assert_eq!(crystal.raise(&w, i).unwrap(), e_here, "e_{i} at {shape:?}");
            }
        }
    }

    #[test]
    fn branching_count_identity() {
        for shape in all_strict_partitions(5) {
            if shape.size() == 0 {
                continue;
            }
            let lhs = standard_tableaux(&shape).len();
            let rhs: usize = shape
                .removable_boxes()
                .iter()
                .map(|&(r, _)| standard_tableaux(&shape.with_box_removed(r).unwrap()).len())
                .sum();
            assert_eq!(lhs, rhs, "{shape:?}");
        }
    }

    proptest! {
        #[test]
        fn swap_standard_iff_orthogonal_residues(idx in 0usize..32, seed in 0usize..64) {
            let shapes = all_strict_partitions(5);
            let shape = &shapes[idx % shapes.len()];
            let n = shape.size();
            prop_assume!(n >= 2);
            let tabs = standard_tableaux(shape);
            let t = &tabs[seed % tabs.len()];
            let datum = CartanDatum::new(TypeLabel::B, 5).unwrap();
            for k in 1..n {
                let (r1, c1) = t.box_of(k);
                let (r2, c2) = t.box_of(k + 1);
                let distinct = r1 != r2 && c1 != c2;
                let swapped = t.swap_entries(k);
                prop_assert_eq!(distinct, swapped.is_some());
                let a = datum.a(residue(r1, c1).unwrap(), residue(r2, c2).unwrap());
                prop_assert_eq!(swapped.is_some(), a == 0);
            }
        }

        #[test]
        fn add_remove_roundtrip(idx in 0usize..64) {
            let shapes = all_strict_partitions(6);
            let shape = &shapes[idx % shapes.len()];
            for (r, _) in shape.addable_boxes() {
                let bigger = shape.with_box_added(r).unwrap();
                prop_assert_eq!(&bigger.with_box_removed(r).unwrap(), shape);
            }
        }
    }
}
