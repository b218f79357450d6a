//! Homogeneous simple modules as exact integer matrices.
//!
//! The basis is a path set `Pa(b)` or a tableau set `ST(lambda)`; every basis
//! label carries an index sequence, `e(nu)` acts as a 0/1 diagonal matrix,
//! every dot matrix is zero, and each crossing matrix is a partial permutation
//! swapping adjacent sequence positions.
//!
//! Sequence positions are numbered as in the defining relations: `tau_m` acts
//! on positions `m, m + 1` and the cyclotomic condition constrains the last
//! position. For a tableau of size `N`, position `r` holds the residue of the
//! box containing entry `N + 1 - r`, so `tau_m` exchanges entries `N - m` and
//! `N + 1 - m`.

use std::collections::BTreeMap;

use crate::cartan::{CartanDatum, TypeLabel, Weight};
use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};
use crate::matrix::SparseMat;
use crate::tableaux::{
    residue, residue_d, standard_tableaux, wt_b, wt_d, StandardTableau, StrictPartition,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisLabel {
    Path(crate::crystal::Path),
    Tableau(StandardTableau),
}

impl BasisLabel {
    pub fn describe(&self) -> String {
        match self {
            BasisLabel::Path(p) => format!("path{:?}", p.letters),
            BasisLabel::Tableau(t) => format!(
                "tableau{:?}",
                (1..=t.size()).map(|k| t.box_of(k)).collect::<Vec<_>>()
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HomogeneousModule {
    datum: CartanDatum,
    cyclotomic_node: usize,
    target_weight: Weight,
    labels: Vec<BasisLabel>,
    seqs: Vec<Vec<usize>>,
    x_mats: Vec<SparseMat<i64>>,
    tau_mats: Vec<SparseMat<i64>>,
}

impl HomogeneousModule {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn cyclotomic_node(&self) -> usize {
        self.cyclotomic_node
    }

    pub fn target_weight(&self) -> &Weight {
        &self.target_weight
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn seqs(&self) -> &[Vec<usize>] {
        &self.seqs
    }

    pub fn dim(&self) -> usize {
        self.seqs.len()
    }

    /// Length of the index sequences (`Ht` of the weight defect).
    pub fn len(&self) -> usize {
        self.seqs.first().map(|s| s.len()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.seqs.is_empty()
    }

    pub fn x_matrix(&self, k: usize) -> &SparseMat<i64> {
        &self.x_mats[k]
    }

    pub fn tau_matrix(&self, k: usize) -> &SparseMat<i64> {
        &self.tau_mats[k]
    }

    /// Occurring index sequences, each with the basis indices carrying it.
    pub fn sequence_support(&self) -> BTreeMap<&[usize], Vec<usize>> {
        let mut map: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
        for (p, s) in self.seqs.iter().enumerate() {
            map.entry(s.as_slice()).or_default().push(p);
        }
        map
    }

    /// `e(nu)` as a diagonal 0/1 matrix.
    pub fn e_matrix(&self, nu: &[usize]) -> SparseMat<i64> {
        let mut m = SparseMat::zero(self.dim(), self.dim());
        for (p, s) in self.seqs.iter().enumerate() {
            if s.as_slice() == nu {
                m.set(p, p, 1);
            }
        }
        m
    }

    fn from_seqs(
        datum: CartanDatum,
        cyclotomic_node: usize,
        target_weight: Weight,
        labels: Vec<BasisLabel>,
        seqs: Vec<Vec<usize>>,
        tau_mats: Vec<SparseMat<i64>>,
    ) -> Self {
        let len = seqs.first().map(|s| s.len()).unwrap_or(0);
        let dim = seqs.len();
        HomogeneousModule {
            datum,
            cyclotomic_node,
            target_weight,
            labels,
            seqs,
            x_mats: vec![SparseMat::zero(dim, dim); len],
            tau_mats,
        }
    }

    /// Exports `e(nu)`, dot, and crossing matrices as sparse triplet text.
    pub fn export_matrices(&self) -> String {
        let mut out = String::new();
        for (nu, _) in self.sequence_support() {
            out.push_str(&format!("e {nu:?}\n"));
            out.push_str(&self.e_matrix(nu).to_triplet_text());
        }
        for (k, x) in self.x_mats.iter().enumerate() {
            out.push_str(&format!("x {}\n", k + 1));
            out.push_str(&x.to_triplet_text());
        }
        for (k, t) in self.tau_mats.iter().enumerate() {
            out.push_str(&format!("tau {}\n", k + 1));
            out.push_str(&t.to_triplet_text());
        }
        out
    }

    // ---- negative-control mutations -------------------------------------

    /// Flips the sign of the first nonzero entry of `tau_k` (0-based `k`).
    pub fn with_flipped_tau_sign(&self, k: usize) -> Option<Self> {
        let mut out = self.clone();
        let (r, c, _) = out.tau_mats[k].iter().next().map(|(r, c, v)| (r, c, *v))?;
        out.tau_mats[k].set(r, c, -1);
        Some(out)
    }

    /// Replaces `x_k` by the identity matrix (0-based `k`).
    pub fn with_x_identity(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.x_mats[k] = SparseMat::identity(self.dim());
        out
    }

    /// Rewrites the last letter of one basis label's index sequence.
    pub fn with_relabeled_last_letter(&self, basis_index: usize) -> Result<Self> {
        if basis_index >= self.dim() || self.len() == 0 {
            return Err(Error::LabelOutOfRange(basis_index, self.dim()));
        }
        let mut out = self.clone();
        let last = out.seqs[basis_index].last_mut().expect("nonempty sequence");
        *last = if *last == 1 { 2 } else { 1 };
        Ok(out)
    }

    /// Applies a Dynkin-diagram automorphism (a permutation of node indices)
    /// to every index sequence and to the cyclotomic node.
    pub fn relabeled(&self, letter_map: &dyn Fn(usize) -> usize) -> Self {
        let seqs: Vec<Vec<usize>> = self
            .seqs
            .iter()
            .map(|s| s.iter().map(|&l| letter_map(l)).collect())
            .collect();
        let node = letter_map(self.cyclotomic_node);
        let mut target = self.datum.fundamental_weight(node).expect("valid node");
        if let Some(s) = seqs.first() {
            for &l in s {
                target = &target - &self.datum.simple_root(l).expect("valid node");
            }
        }
        HomogeneousModule {
            datum: self.datum.clone(),
            cyclotomic_node: node,
            target_weight: target,
            labels: self.labels.clone(),
            seqs,
            x_mats: self.x_mats.clone(),
            tau_mats: self.tau_mats.clone(),
        }
    }
}

/// Builds `Sp(b)` on the path basis `Pa(b)` (types A, C, D, E).
pub fn build_module_paths(
    crystal: &CrystalGraph,
    b: &Weight,
    cap: u64,
) -> Result<HomogeneousModule> {
    let paths = crystal.paths(b, cap)?;
    let seqs: Vec<Vec<usize>> = paths.iter().map(|p| p.letters.clone()).collect();
    let index: BTreeMap<&[usize], usize> = seqs
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_slice(), k))
        .collect();
    let dim = seqs.len();
    let len = seqs.first().map(|s| s.len()).unwrap_or(0);
    let mut tau_mats = vec![SparseMat::zero(dim, dim); len.saturating_sub(1)];
    for (p, s) in seqs.iter().enumerate() {
        for k in 0..len.saturating_sub(1) {
            let mut swapped = s.clone();
            swapped.swap(k, k + 1);
            if let Some(&q) = index.get(swapped.as_slice()) {
                if q != p {
                    tau_mats[k].set(q, p, 1);
                }
            }
        }
    }
    let labels = paths.into_iter().map(BasisLabel::Path).collect();
    Ok(HomogeneousModule::from_seqs(
        crystal.datum().clone(),
        crystal.node(),
        b.clone(),
        labels,
        seqs,
        tau_mats,
    ))
}

fn build_module_from_tableaux(
    datum: CartanDatum,
    target: Weight,
    tabs: Vec<StandardTableau>,
    res: impl Fn(usize, usize) -> Result<usize>,
) -> HomogeneousModule {
    let seqs: Vec<Vec<usize>> = tabs.iter().map(|t| t.residue_sequence(&res)).collect();
    let index: BTreeMap<&StandardTableau, usize> =
        tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let dim = tabs.len();
    let n = tabs.first().map(|t| t.size()).unwrap_or(0);
    let mut tau_mats = vec![SparseMat::zero(dim, dim); n.saturating_sub(1)];
    for (p, t) in tabs.iter().enumerate() {
        for m in 1..n {
            // tau_m exchanges entries N - m and N + 1 - m
            if let Some(swapped) = t.swap_entries(n - m) {
                let q = index[&swapped];
                tau_mats[m - 1].set(q, p, 1);
            }
        }
    }
    let labels = tabs.into_iter().map(BasisLabel::Tableau).collect();
    HomogeneousModule::from_seqs(datum, 1, target, labels, seqs, tau_mats)
}

/// Builds `Sp(b)` on `ST(lambda)` for the cyclotomic node 1 of `B_n`.
pub fn build_module_tableaux(n: usize, shape: &StrictPartition) -> Result<HomogeneousModule> {
    let datum = CartanDatum::new(TypeLabel::B, n)?;
    let target = wt_b(&datum, shape)?;
    let tabs = standard_tableaux(shape);
    Ok(build_module_from_tableaux(datum, target, tabs, residue))
}

/// Same basis `ST(lambda)` with type-D residues, cyclotomic node 1 of `D_{n+1}`.
pub fn build_module_tableaux_d(n: usize, shape: &StrictPartition) -> Result<HomogeneousModule> {
    let datum = CartanDatum::new(TypeLabel::D, n + 1)?;
    let target = wt_d(&datum, shape)?;
    let tabs = standard_tableaux(shape);
    Ok(build_module_from_tableaux(datum, target, tabs, residue_d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::build_crystal;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn highest_weight_module_is_one_dimensional() {
        let d = CartanDatum::new(TypeLabel::D, 4).unwrap();
        let c = build_crystal(&d, 1).unwrap();
        let m = build_module_paths(&c, c.highest(), 10).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.len(), 0);
        assert!(m.tau_mats.is_empty());
    }

    #[test]
    fn c_type_modules_one_dimensional_with_zero_crossings() {
        let d = CartanDatum::new(TypeLabel::C, 4).unwrap();
        let c = build_crystal(&d, 4).unwrap();
        for b in c.vertices() {
            let m = build_module_paths(&c, b, 10).unwrap();
            assert_eq!(m.dim(), 1);
            assert!(m.tau_mats.iter().all(|t| t.is_zero()));
        }
    }

    #[test]
    fn d4_spin_lowest_module() {
        let d = CartanDatum::new(TypeLabel::D, 4).unwrap();
        let c = build_crystal(&d, 1).unwrap();
        let lowest = c
            .vertices()
            .iter()
            .max_by_key(|v| c.level(v).unwrap())
            .unwrap();
        let m = build_module_paths(&c, lowest, 1000).unwrap();
        assert_eq!(m.dim() as u64, c.path_count(lowest).unwrap());
        for t in &m.tau_mats {
            for (_, _, v) in t.iter() {
                assert_eq!(*v, 1);
            }
        }
    }

    #[test]
    fn tableau_module_31() {
        let m = build_module_tableaux(3, &sp(&[3, 1])).unwrap();
        assert_eq!(m.dim(), 2);
        // exactly one crossing is nonzero in each direction
        let nonzero: Vec<usize> = m
            .tau_mats
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_zero())
            .map(|(k, _)| k)
            .collect();
        assert_eq!(nonzero.len(), 1);
        // the two tableaux differ by exchanging entries 3 and 4, i.e. the
        // first two sequence positions
        assert_eq!(nonzero[0], 0);
        assert_eq!(m.tau_mats[0].nnz(), 2);
    }

    #[test]
    fn tableau_module_single_rows_and_empty() {
        for k in 0..4 {
            let shape = if k == 0 { StrictPartition::empty() } else { sp(&[k]) };
            let m = build_module_tableaux(4, &shape).unwrap();
            assert_eq!(m.dim(), 1);
        }
    }

    #[test]
    fn tableau_module_d_21() {
        let m = build_module_tableaux_d(3, &sp(&[2, 1])).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.seqs()[0], vec![2, 3, 1]);
    }

    #[test]
    fn d_and_b_tableau_modules_have_equal_dimensions() {
        for shape in crate::tableaux::all_strict_partitions(3) {
            let b = build_module_tableaux(3, &shape).unwrap();
            let d = build_module_tableaux_d(3, &shape).unwrap();
            assert_eq!(b.dim(), d.dim(), "{shape:?}");
        }
    }

    #[test]
    fn tableau_crossings_follow_sequence_swaps() {
        // the tableau-built crossing matrices agree with the generic
        // place-permutation description on index sequences
        let shape = sp(&[4, 2, 1]);
        let m = build_module_tableaux(4, &shape).unwrap();
        let index: BTreeMap<&[usize], usize> = m
            .seqs()
            .iter()
            .enumerate()
            .map(|(k, s)| (s.as_slice(), k))
            .collect();
        for k in 0..m.len() - 1 {
            for (p, s) in m.seqs().iter().enumerate() {
                let mut swapped = s.clone();
                swapped.swap(k, k + 1);
                let expect = index.get(swapped.as_slice()).copied().filter(|&q| q != p);
                let col: Vec<usize> = m.tau_matrix(k).column(p).map(|(r, _)| r).collect();
                assert_eq!(col, expect.into_iter().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn path_and_tableau_sequences_coincide_in_type_b() {
        let n = 4;
        let datum = CartanDatum::new(TypeLabel::B, n).unwrap();
        let crystal = build_crystal(&datum, 1).unwrap();
        for shape in crate::tableaux::all_strict_partitions(n) {
            let w = wt_b(&datum, &shape).unwrap();
            let paths: std::collections::BTreeSet<Vec<usize>> = crystal
                .paths(&w, 1_000_000)
                .unwrap()
                .into_iter()
                .map(|p| p.letters)
                .collect();
            let tabs: std::collections::BTreeSet<Vec<usize>> = build_module_tableaux(n, &shape)
                .unwrap()
                .seqs()
                .iter()
                .cloned()
                .collect();
            assert_eq!(paths, tabs, "{shape:?}");
        }
    }
}
