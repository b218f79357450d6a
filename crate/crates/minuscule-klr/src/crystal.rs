//! Orbit realization of the minuscule crystal, path enumeration, and the
//! minuscule Weyl element attached to each vertex.
//!
//! Path letters are stored in display order: for a path `(i_1, ..., i_l)` the
//! letter `i_l` is applied to the highest weight first and `i_1` last. All
//! consumers (index sequences, module actions) follow this convention.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, Weight};
use crate::error::{Error, Result};
use crate::weyl::{self, WeylElement};

pub const CRYSTAL_SCHEMA_VERSION: u32 = 1;

/// Default cap on materialized path sets.
pub const DEFAULT_PATH_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    pub letters: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BijectionStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CrystalGraph {
    datum: CartanDatum,
    node: usize,
    vertices: Vec<Weight>,
    index: HashMap<Weight, usize>,
    /// `f_edges[v][i-1]` is the target of the `f_i`-arrow out of `v`, if any.
    f_edges: Vec<Vec<Option<usize>>>,
    e_edges: Vec<Vec<Option<usize>>>,
    levels: Vec<usize>,
    path_counts: Vec<u64>,
    highest: usize,
}

/// Builds the crystal on the Weyl orbit of `Lambda_i`.
pub fn build_crystal(datum: &CartanDatum, i: usize) -> Result<CrystalGraph> {
    weyl::check_node(datum, i)?;
    if !datum.is_minuscule_node(i) {
        return Err(Error::NotMinuscule(i));
    }
    let lam = datum.fundamental_weight(i)?;
    let vertices = weyl::orbit(datum, &lam);
    let index: HashMap<Weight, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();
    let n = datum.rank();
    let mut f_edges = vec![vec![None; n]; vertices.len()];
    let mut e_edges = vec![vec![None; n]; vertices.len()];
    for (v, w) in vertices.iter().enumerate() {
        for j in 1..=n {
            if w.pairing(j) == 1 {
                let target = &w.clone() - &datum.simple_root(j)?;
                let t = index[&target];
                f_edges[v][j - 1] = Some(t);
                e_edges[t][j - 1] = Some(v);
            }
        }
    }
    let highest = index[&lam];
    // levels by BFS down the f-arrows
    let mut levels = vec![usize::MAX; vertices.len()];
    levels[highest] = 0;
    let mut frontier = vec![highest];
    while let Some(v) = frontier.pop() {
        for j in 0..n {
            if let Some(t) = f_edges[v][j] {
                if levels[t] == usize::MAX {
                    levels[t] = levels[v] + 1;
                    frontier.push(t);
                }
            }
        }
    }
    // path counts in topological (level) order
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by_key(|&v| levels[v]);
    let mut path_counts = vec![0u64; vertices.len()];
    path_counts[highest] = 1;
    for &v in &order {
        if v == highest {
            continue;
        }
        let mut c: u64 = 0;
        for j in 0..n {
            if let Some(p) = e_edges[v][j] {
                c = c.saturating_add(path_counts[p]);
            }
        }
        path_counts[v] = c;
    }
    Ok(CrystalGraph {
        datum: datum.clone(),
        node: i,
        vertices,
        index,
        f_edges,
        e_edges,
        levels,
        path_counts,
        highest,
    })
}

impl CrystalGraph {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn highest(&self) -> &Weight {
        &self.vertices[self.highest]
    }

    pub fn vertex_index(&self, b: &Weight) -> Result<usize> {
        self.index.get(b).copied().ok_or(Error::NotAVertex)
    }

    /// `Ht(Lambda_i - wt(b))`.
    pub fn level(&self, b: &Weight) -> Result<usize> {
        Ok(self.levels[self.vertex_index(b)?])
    }

    pub fn epsilon(&self, b: &Weight, i: usize) -> Result<i64> {
        self.vertex_index(b)?;
        weyl::check_node(&self.datum, i)?;
        Ok(0.max(-b.pairing(i)))
    }

    pub fn phi(&self, b: &Weight, i: usize) -> Result<i64> {
        self.vertex_index(b)?;
        weyl::check_node(&self.datum, i)?;
        Ok(0.max(b.pairing(i)))
    }

    pub fn lower(&self, b: &Weight, i: usize) -> Result<Option<Weight>> {
        let v = self.vertex_index(b)?;
        weyl::check_node(&self.datum, i)?;
        Ok(self.f_edges[v][i - 1].map(|t| self.vertices[t].clone()))
    }

    pub fn raise(&self, b: &Weight, i: usize) -> Result<Option<Weight>> {
        let v = self.vertex_index(b)?;
        weyl::check_node(&self.datum, i)?;
        Ok(self.e_edges[v][i - 1].map(|t| self.vertices[t].clone()))
    }

    /// `|Pa(b)|` without materializing the set.
    pub fn path_count(&self, b: &Weight) -> Result<u64> {
        Ok(self.path_counts[self.vertex_index(b)?])
    }

    /// The complete path set `Pa(b)`, lexicographically ordered.
    pub fn paths(&self, b: &Weight, cap: u64) -> Result<Vec<Path>> {
        let v = self.vertex_index(b)?;
        let count = self.path_counts[v];
        if count > cap {
            return Err(Error::PathCapExceeded { cap, count });
        }
        let mut acc = Vec::with_capacity(count as usize);
        let mut prefix = Vec::new();
        self.collect_paths(v, &mut prefix, &mut acc);
        acc.sort();
        Ok(acc)
    }

    fn collect_paths(&self, v: usize, prefix: &mut Vec<usize>, acc: &mut Vec<Path>) {
        if v == self.highest {
            acc.push(Path {
                letters: prefix.clone(),
            });
            return;
        }
        for j in 0..self.datum.rank() {
            if let Some(p) = self.e_edges[v][j] {
                prefix.push(j + 1);
                self.collect_paths(p, prefix, acc);
                prefix.pop();
            }
        }
    }

    /// The `k` lexicographically-least elements of `Pa(b)`, without
    /// materializing the full set.
    pub fn first_paths(&self, b: &Weight, k: usize) -> Result<Vec<Path>> {
        fn go(
            c: &CrystalGraph,
            v: usize,
            prefix: &mut Vec<usize>,
            acc: &mut Vec<Path>,
            k: usize,
        ) {
            if acc.len() >= k {
                return;
            }
            if v == c.highest {
                acc.push(Path {
                    letters: prefix.clone(),
                });
                return;
            }
            for j in 0..c.datum.rank() {
                if let Some(p) = c.e_edges[v][j] {
                    prefix.push(j + 1);
                    go(c, p, prefix, acc, k);
                    prefix.pop();
                }
            }
        }
        let v = self.vertex_index(b)?;
        let mut acc = Vec::new();
        go(self, v, &mut Vec::new(), &mut acc, k);
        Ok(acc)
    }

    /// The lexicographically-least element of `Pa(b)`.
    pub fn first_path(&self, b: &Weight) -> Result<Path> {
        let mut v = self.vertex_index(b)?;
        let mut letters = Vec::new();
        while v != self.highest {
            let j = (0..self.datum.rank())
                .find(|&j| self.e_edges[v][j].is_some())
                .expect("non-highest vertex has a raising arrow");
            letters.push(j + 1);
            v = self.e_edges[v][j].unwrap();
        }
        Ok(Path { letters })
    }

    /// `w(b) = s_{i_1} ... s_{i_l}` for any path; independent of the choice.
    pub fn minuscule_element(&self, b: &Weight) -> Result<WeylElement> {
        let path = self.first_path(b)?;
        let w = WeylElement::from_word(&self.datum, &path.letters)?;
        // postconditions from the path/word correspondence
        debug_assert_eq!(weyl::length(&self.datum, &w), path.letters.len());
        debug_assert_eq!(
            weyl::apply_word(
                &self.datum,
                &path.letters,
                &self.datum.fundamental_weight(self.node)?
            )?,
            *b
        );
        Ok(w)
    }

    /// Set equality of `Pa(b)` with the reduced words of `w(b)`.
    pub fn check_path_word_bijection(
        &self,
        b: &Weight,
        word_cap: usize,
        path_cap: u64,
    ) -> Result<BijectionStatus> {
        let level = self.level(b)?;
        if level > word_cap {
            return Ok(BijectionStatus::Skipped);
        }
        if self.path_count(b)? > path_cap {
            return Ok(BijectionStatus::Skipped);
        }
        let paths: Vec<Vec<usize>> = self
            .paths(b, path_cap)?
            .into_iter()
            .map(|p| p.letters)
            .collect();
        let w = self.minuscule_element(b)?;
        let words = weyl::reduced_words(&self.datum, &w);
        Ok(if paths == words {
            BijectionStatus::Pass
        } else {
            BijectionStatus::Fail
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (k, w) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{w}\"];");
        }
        for (v, edges) in self.f_edges.iter().enumerate() {
            for (j, t) in edges.iter().enumerate() {
                if let Some(t) = t {
                    let _ = writeln!(out, "  v{v} -> v{t} [label=\"{}\"];", j + 1);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .f_edges
            .iter()
            .enumerate()
            .flat_map(|(v, row)| {
                row.iter().enumerate().filter_map(move |(j, t)| {
                    t.map(|t| {
                        serde_json::json!({"from": v, "to": t, "letter": j + 1})
                    })
                })
            })
            .collect();
        serde_json::json!({
            "schema_version": CRYSTAL_SCHEMA_VERSION,
            "type": self.datum.type_label().to_string(),
            "rank": self.datum.rank(),
            "node": self.node,
            "vertices": self.vertices.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(),
            "highest": self.highest,
            "edges": edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::TypeLabel;

    fn crystal(t: TypeLabel, r: usize, node: usize) -> CrystalGraph {
        let d = CartanDatum::new(t, r).unwrap();
        build_crystal(&d, node).unwrap()
    }

    #[test]
    fn rejects_non_minuscule_node() {
        let d = CartanDatum::new(TypeLabel::B, 3).unwrap();
        assert!(matches!(build_crystal(&d, 2), Err(Error::NotMinuscule(2))));
    }

    #[test]
    fn c3_chain_edge_labels() {
        let c = crystal(TypeLabel::C, 3, 3);
        assert_eq!(c.len(), 6);
        let mut v = c.highest().clone();
        let mut labels = Vec::new();
        loop {
            let mut next = None;
            for i in 1..=3 {
                if let Some(t) = c.lower(&v, i).unwrap() {
                    labels.push(i);
                    next = Some(t);
                    break;
                }
            }
            match next {
                Some(t) => v = t,
                None => break,
            }
        }
        assert_eq!(labels, vec![3, 2, 1, 2, 3]);
    }

    #[test]
    fn a2_vector_chain() {
        let c = crystal(TypeLabel::A, 2, 1);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn e6_orbit_multiplicity_free() {
        let c = crystal(TypeLabel::E6, 6, 1);
        assert_eq!(c.len(), 27);
        let set: std::collections::BTreeSet<_> = c.vertices().iter().collect();
        assert_eq!(set.len(), 27);
    }

    #[test]
    fn paths_examples() {
        let c = crystal(TypeLabel::B, 3, 1);
        assert_eq!(
            c.paths(c.highest(), DEFAULT_PATH_CAP).unwrap(),
            vec![Path { letters: vec![] }]
        );
        // wt((3,1)) = Lambda_1 - 2a_1 - a_2 - a_3 has exactly two paths
        let d = c.datum().clone();
        let mut w = d.fundamental_weight(1).unwrap();
        for (i, m) in [(1usize, 2i64), (2, 1), (3, 1)] {
            let alpha = d.simple_root(i).unwrap();
            let scaled = Weight::new(alpha.coords().iter().map(|&x| m * x).collect());
            w = &w - &scaled;
        }
        assert_eq!(c.path_count(&w).unwrap(), 2);
        assert_eq!(c.paths(&w, DEFAULT_PATH_CAP).unwrap().len(), 2);
    }

    #[test]
    fn c_chain_paths_unique() {
        for n in 2..=5 {
            let c = crystal(TypeLabel::C, n, n);
            for v in c.vertices() {
                assert_eq!(c.path_count(v).unwrap(), 1);
            }
        }
    }

    #[test]
    fn path_cap_enforced() {
        let c = crystal(TypeLabel::E6, 6, 1);
        let deepest = c
            .vertices()
            .iter()
            .max_by_key(|v| c.level(v).unwrap())
            .unwrap();
        assert!(matches!(
            c.paths(deepest, 3),
            Err(Error::PathCapExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn minuscule_element_properties() {
        let c = crystal(TypeLabel::D, 4, 1);
        let d = c.datum().clone();
        for b in c.vertices() {
            let w = c.minuscule_element(b).unwrap();
            assert_eq!(weyl::length(&d, &w), c.level(b).unwrap());
            // w(b) applied to Lambda_i recovers wt(b), for every path
            for p in c.paths(b, DEFAULT_PATH_CAP).unwrap() {
                let img = weyl::apply_word(&d, &p.letters, &d.fundamental_weight(1).unwrap())
                    .unwrap();
                assert_eq!(&img, b);
                assert_eq!(
                    WeylElement::from_word(&d, &p.letters).unwrap(),
                    w,
                    "w(b) must not depend on the path"
                );
            }
            assert!(weyl::is_fully_commutative(&d, &w));
        }
    }

    #[test]
    fn bijection_b4_exhaustive() {
        let c = crystal(TypeLabel::B, 4, 1);
        for b in c.vertices() {
            assert_eq!(
                c.check_path_word_bijection(b, 16, DEFAULT_PATH_CAP).unwrap(),
                BijectionStatus::Pass
            );
        }
    }

    #[test]
    fn bijection_skip_status() {
        let c = crystal(TypeLabel::B, 4, 1);
        let deepest = c
            .vertices()
            .iter()
            .max_by_key(|v| c.level(v).unwrap())
            .unwrap();
        assert_eq!(
            c.check_path_word_bijection(deepest, 2, DEFAULT_PATH_CAP)
                .unwrap(),
            BijectionStatus::Skipped
        );
    }

    #[test]
    fn weight_decomposition_along_paths() {
        let c = crystal(TypeLabel::E6, 6, 6);
        let d = c.datum().clone();
        let lam = d.fundamental_weight(6).unwrap();
        for b in c.vertices() {
            if c.level(b).unwrap() > 8 {
                continue;
            }
            for p in c.paths(b, DEFAULT_PATH_CAP).unwrap() {
                let mut w = lam.clone();
                for &i in &p.letters {
                    w = &w - &d.simple_root(i).unwrap();
                }
                assert_eq!(&w, b);
            }
        }
    }

    #[test]
    fn graph_has_unique_source_and_sink() {
        for (t, r, node) in [
            (TypeLabel::B, 3, 1),
            (TypeLabel::C, 4, 4),
            (TypeLabel::D, 5, 2),
            (TypeLabel::E6, 6, 1),
        ] {
            let c = crystal(t, r, node);
            let sources = c
                .vertices()
                .iter()
                .filter(|v| (1..=r).all(|i| c.raise(v, i).unwrap().is_none()))
                .count();
            let sinks = c
                .vertices()
                .iter()
                .filter(|v| (1..=r).all(|i| c.lower(v, i).unwrap().is_none()))
                .count();
            assert_eq!((sources, sinks), (1, 1), "{t}_{r} node {node}");
        }
    }

    #[test]
    fn raise_lower_inverse() {
        let c = crystal(TypeLabel::D, 4, 4);
        for v in c.vertices() {
            for i in 1..=4 {
                if let Some(t) = c.lower(v, i).unwrap() {
                    assert_eq!(c.raise(&t, i).unwrap().as_ref(), Some(v));
                }
            }
        }
    }

    #[test]
    fn dot_export_contains_edges() {
        let c = crystal(TypeLabel::A, 2, 1);
        let dot = c.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("label=\"1\""));
    }
}
