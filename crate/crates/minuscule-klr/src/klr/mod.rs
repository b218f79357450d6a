//! Cyclotomic quiver Hecke modules: construction, relation checking, bases,
//! and the dimension/branching reports built on top of them.

pub mod basis;
pub mod module;
pub mod qspec;
pub mod relations;

pub use basis::{check_matrix_unit_products, connecting_word, cyclotomic_basis, BasisElement, BasisReport};
pub use module::{
    build_module_paths, build_module_tableaux, build_module_tableaux_d, BasisLabel,
    HomogeneousModule,
};
pub use qspec::QSpec;
pub use relations::{
    check_cyclotomic, check_klr_relations, RelationFailure, RelationFamily, RelationReport,
};

use std::collections::BTreeSet;

use serde_json::json;

use crate::cartan::{CartanDatum, TypeLabel, Weight};
use crate::crystal::build_crystal;
use crate::error::{Error, Result};
use crate::tableaux::{
    enumerate_strict_partitions, residue, standard_tableaux, wt_d, StrictPartition,
};

/// One weight's worth of dimension data: the square of the path count.
#[derive(Debug, Clone)]
pub struct DimensionRow {
    pub level: usize,
    pub weight: Weight,
    pub paths: u64,
    pub dimension: u128,
}

#[derive(Debug, Clone)]
pub struct DimensionTable {
    pub rows: Vec<DimensionRow>,
}

impl DimensionTable {
    pub fn level_total(&self, m: usize) -> u128 {
        self.rows
            .iter()
            .filter(|r| r.level == m)
            .map(|r| r.dimension)
            .sum()
    }

    pub fn max_level(&self) -> usize {
        self.rows.iter().map(|r| r.level).max().unwrap_or(0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "rows": self.rows.iter().map(|r| json!({
                "level": r.level,
                "weight": r.weight.to_string(),
                "paths": r.paths,
                "dimension": r.dimension.to_string(),
            })).collect::<Vec<_>>(),
            "level_totals": (0..=self.max_level())
                .map(|m| self.level_total(m).to_string())
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("level  weight  paths  dimension\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:>5}  {}  {}  {}\n",
                r.level, r.weight, r.paths, r.dimension
            ));
        }
        for m in 0..=self.max_level() {
            out.push_str(&format!("total level {m}: {}\n", self.level_total(m)));
        }
        out
    }
}

/// Tabulates `|Pa(b)|^2` for every crystal vertex of level at most `max_m`.
pub fn dimension_table(
    datum: &CartanDatum,
    node: usize,
    max_m: usize,
    path_cap: u64,
) -> Result<DimensionTable> {
    let crystal = build_crystal(datum, node)?;
    let mut rows = Vec::new();
    for b in crystal.vertices() {
        let level = crystal.level(b).expect("vertex has a level");
        if level > max_m {
            continue;
        }
        let paths = crystal.path_count(b)?;
        if paths > path_cap {
            return Err(Error::PathCapExceeded {
                cap: path_cap,
                count: paths,
            });
        }
        rows.push(DimensionRow {
            level,
            weight: b.clone(),
            paths,
            dimension: (paths as u128) * (paths as u128),
        });
    }
    rows.sort_by_key(|r| r.level);
    Ok(DimensionTable { rows })
}

#[derive(Debug, Clone)]
pub struct IsomorphismEntry {
    pub shape: StrictPartition,
    pub dim_b: usize,
    pub dim_d: usize,
}

#[derive(Debug, Clone, Default)]
pub struct IsomorphismReport {
    pub entries: Vec<IsomorphismEntry>,
    /// `(level, total over B_n modules, total over D_{n+1} modules)`.
    pub level_totals: Vec<(usize, u128, u128)>,
    pub failures: Vec<String>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "entries": self.entries.iter().map(|e| json!({
                "shape": e.shape.parts(),
                "dim_b": e.dim_b,
                "dim_d": e.dim_d,
            })).collect::<Vec<_>>(),
            "level_totals": self.level_totals.iter().map(|&(m, b, d)| json!({
                "level": m, "b": b.to_string(), "d": d.to_string(),
            })).collect::<Vec<_>>(),
            "failures": self.failures,
        })
    }
}

/// Compares the `B_n` and `D_{n+1}` module families over all strict
/// partitions of size at most `max_m` with parts at most `n`: relation suites
/// on both sides, weight membership in the two spin orbits, per-shape and
/// per-level dimension agreement, and invariance under the fork-swapping
/// diagram automorphism of `D_{n+1}`.
pub fn isomorphism_check_b_d(n: usize, max_m: usize) -> Result<IsomorphismReport> {
    let datum_b = CartanDatum::new(TypeLabel::B, n)?;
    let datum_d = CartanDatum::new(TypeLabel::D, n + 1)?;
    let qspec_b = QSpec::standard(&datum_b);
    let qspec_d = QSpec::standard(&datum_d);
    let crystal_d1 = build_crystal(&datum_d, 1)?;
    let crystal_d2 = build_crystal(&datum_d, 2)?;
    let fork_swap = |l: usize| match l {
        1 => 2,
        2 => 1,
        other => other,
    };

    let mut report = IsomorphismReport::default();
    for m in 0..=max_m {
        let mut total_b: u128 = 0;
        let mut total_d: u128 = 0;
        for shape in enumerate_strict_partitions(n, m) {
            let mod_b = build_module_tableaux(n, &shape)?;
            let mod_d = build_module_tableaux_d(n, &shape)?;
            for (side, module, qspec) in
                [("B", &mod_b, &qspec_b), ("D", &mod_d, &qspec_d)]
            {
                let r = check_klr_relations(module, qspec);
                if !r.passed() {
                    report
                        .failures
                        .push(format!("{side} relations fail for {shape}: {}", r.summary()));
                }
            }
            if crystal_d1.vertex_index(mod_d.target_weight()).is_err() {
                report.failures.push(format!(
                    "wt_D({shape}) = {} is not in the node-1 orbit of D{}",
                    mod_d.target_weight(),
                    n + 1
                ));
            }
            let swapped = mod_d.relabeled(&fork_swap);
            let r = check_klr_relations(&swapped, &qspec_d);
            if !r.passed() {
                report.failures.push(format!(
                    "D relations fail for {shape} after the fork automorphism: {}",
                    r.summary()
                ));
            }
            if crystal_d2.vertex_index(swapped.target_weight()).is_err() {
                report.failures.push(format!(
                    "automorphism image of wt_D({shape}) is not in the node-2 orbit"
                ));
            }
            if mod_b.dim() != mod_d.dim() {
                report.failures.push(format!(
                    "dimension mismatch for {shape}: {} vs {}",
                    mod_b.dim(),
                    mod_d.dim()
                ));
            }
            total_b += (mod_b.dim() as u128) * (mod_b.dim() as u128);
            total_d += (mod_d.dim() as u128) * (mod_d.dim() as u128);
            report.entries.push(IsomorphismEntry {
                shape,
                dim_b: mod_b.dim(),
                dim_d: mod_d.dim(),
            });
        }
        if total_b != total_d {
            report
                .failures
                .push(format!("level {m} totals differ: {total_b} vs {total_d}"));
        }
        report.level_totals.push((m, total_b, total_d));
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct BranchingReport {
    pub shape: StrictPartition,
    pub total: usize,
    /// `(residue of the removed box, child shape, child tableau count)`.
    pub summands: Vec<(usize, StrictPartition, usize)>,
    pub failures: Vec<String>,
}

impl BranchingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the one-box restriction of the tableau basis: tableau counts add up
/// over removable boxes, and grouping tableaux by the residue of the last
/// entry reproduces the child sequence sets exactly.
pub fn branching_check(n: usize, shape: &StrictPartition) -> Result<BranchingReport> {
    let size = shape.size();
    if size == 0 {
        return Err(Error::InvalidBox(0, 0));
    }
    if shape.first_part() > n {
        return Err(Error::PartTooLarge(shape.first_part(), n));
    }
    let tabs = standard_tableaux(shape);
    let mut failures = Vec::new();
    let mut summands = Vec::new();
    let mut predicted_total = 0usize;

    // group parent tableaux by the residue of the box holding the top entry,
    // recording the truncated residue sequences
    let mut groups: std::collections::BTreeMap<usize, BTreeSet<Vec<usize>>> = Default::default();
    for t in &tabs {
        let (r, c) = t.box_of(size);
        let i = residue(r, c)?;
        let mut seq = t.residue_sequence(&residue);
        seq.remove(0);
        groups.entry(i).or_default().insert(seq);
    }

    for (r, c) in shape.removable_boxes() {
        let i = residue(r, c)?;
        let child = shape.with_box_removed(r)?;
        let child_tabs = standard_tableaux(&child);
        let child_seqs: BTreeSet<Vec<usize>> = child_tabs
            .iter()
            .map(|t| t.residue_sequence(&residue))
            .collect();
        predicted_total += child_tabs.len();
        match groups.remove(&i) {
            Some(group) if group == child_seqs => {}
            Some(group) => failures.push(format!(
                "residue {i} group has {} sequences, child {child} predicts {}",
                group.len(),
                child_seqs.len()
            )),
            None => failures.push(format!("no parent tableau ends in residue {i}")),
        }
        summands.push((i, child, child_tabs.len()));
    }
    for (i, group) in groups {
        failures.push(format!(
            "{} tableaux end in residue {i} with no matching removable box",
            group.len()
        ));
    }
    if predicted_total != tabs.len() {
        failures.push(format!(
            "tableau counts disagree: {} vs predicted {predicted_total}",
            tabs.len()
        ));
    }
    Ok(BranchingReport {
        shape: shape.clone(),
        total: tabs.len(),
        summands,
        failures,
    })
}

/// Checks that exactly one tableau of the shape carries the concatenated
/// staircase residue sequence, and that it is the row filling.
pub fn head_witness_check(n: usize, shape: &StrictPartition) -> Result<bool> {
    if shape.first_part() > n {
        return Err(Error::PartTooLarge(shape.first_part(), n));
    }
    let mut target: Vec<usize> = Vec::with_capacity(shape.size());
    for &part in shape.parts().iter().rev() {
        target.extend((1..=part).rev());
    }
    let initial = crate::tableaux::initial_tableau(shape);
    let matches: Vec<_> = standard_tableaux(shape)
        .into_iter()
        .filter(|t| t.residue_sequence(&residue) == target)
        .collect();
    Ok(matches.len() == 1 && matches[0] == initial)
}

/// The `D_{n+1}` target weight of a strict partition, re-exported for report
/// code that has no tableau module at hand.
pub fn wt_d_of(n: usize, shape: &StrictPartition) -> Result<Weight> {
    let datum = CartanDatum::new(TypeLabel::D, n + 1)?;
    wt_d(&datum, shape)
}
