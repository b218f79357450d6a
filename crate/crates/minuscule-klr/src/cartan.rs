//! Cartan data for the finite types carrying minuscule weights.
//!
//! Node labelings are fixed as follows and validated by orbit-size checks:
//! * `A_n`: the path `1 - 2 - ... - n`, every node minuscule.
//! * `B_n`: the path with the short simple root at node 1 (`a_{12} = -2`),
//!   minuscule node 1 (spin weight).
//! * `C_n`: the path with the long simple root at node 1 (`a_{21} = -2`),
//!   minuscule node n (vector weight).
//! * `D_n`: fork nodes 1, 2 attached to node 3, then the chain `3 - ... - n`;
//!   minuscule nodes 1, 2 (spin) and n (vector).
//! * `E6`: chain `1 - 3 - 4 - 5 - 6` with 2 attached to 4; minuscule nodes 1, 6.
//! * `E7`: chain `1 - 3 - 4 - 5 - 6 - 7` with 2 attached to 4; minuscule node 7.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Schema version for the serialized datum document.
pub const DATUM_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::E6 => "E6",
            TypeLabel::E7 => "E7",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for TypeLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E6" => Ok(TypeLabel::E6),
            "E7" => Ok(TypeLabel::E7),
            other => Err(format!("unknown type label `{other}`")),
        }
    }
}

/// Integral weight in fundamental-weight coordinates: `coords[i-1] = <h_i, w>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `<h_i, w>` for the 1-based node index `i`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    type_label: TypeLabel,
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    minuscule_nodes: BTreeSet<usize>,
}

/// Versioned JSON document wrapping a datum, used for caching and `--dump-datum`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumDocument {
    pub schema_version: u32,
    pub datum: CartanDatum,
}

impl CartanDatum {
    /// Builds the datum for `type_label` with the fixed node labeling.
    pub fn new(type_label: TypeLabel, rank: usize) -> Result<Self> {
        let valid = match type_label {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 3,
            TypeLabel::E6 => rank == 6,
            TypeLabel::E7 => rank == 7,
        };
        if !valid {
            return Err(Error::InvalidRank {
                label: type_label,
                rank,
            });
        }
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            m[i - 1][j - 1] = -1;
            m[j - 1][i - 1] = -1;
        };
        let minuscule_nodes: BTreeSet<usize> = match type_label {
            TypeLabel::A => {
                for i in 1..n {
                    edge(&mut a, i, i + 1);
                }
                (1..=n).collect()
            }
            TypeLabel::B => {
                for i in 1..n {
                    edge(&mut a, i, i + 1);
                }
                a[0][1] = -2;
                [1].into_iter().collect()
            }
            TypeLabel::C => {
                for i in 1..n {
                    edge(&mut a, i, i + 1);
                }
                a[1][0] = -2;
                [n].into_iter().collect()
            }
            TypeLabel::D => {
                edge(&mut a, 1, 3);
                edge(&mut a, 2, 3);
                for i in 3..n {
                    edge(&mut a, i, i + 1);
                }
                [1, 2, n].into_iter().collect()
            }
            TypeLabel::E6 => {
                for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
                    edge(&mut a, i, j);
                }
                [1, 6].into_iter().collect()
            }
            TypeLabel::E7 => {
                for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)] {
                    edge(&mut a, i, j);
                }
                [7].into_iter().collect()
            }
        };
        let symmetrizers = match type_label {
            TypeLabel::B => {
                let mut d = vec![2i64; n];
                d[0] = 1;
                d
            }
            TypeLabel::C => {
                let mut d = vec![1i64; n];
                d[0] = 2;
                d
            }
            _ => vec![1i64; n],
        };
        Ok(CartanDatum {
            type_label,
            rank,
            cartan_matrix: a,
            symmetrizers,
            minuscule_nodes,
        })
    }

    pub fn type_label(&self) -> TypeLabel {
        self.type_label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn minuscule_nodes(&self) -> &BTreeSet<usize> {
        &self.minuscule_nodes
    }

    pub fn is_minuscule_node(&self, i: usize) -> bool {
        self.minuscule_nodes.contains(&i)
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange(i, self.rank))
        }
    }

    /// Cartan matrix entry `a_{ij}`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan_matrix[i - 1][j - 1]
    }

    /// `(alpha_i, alpha_j) = d_i a_{ij}`, 1-based.
    pub fn root_form(&self, i: usize, j: usize) -> i64 {
        self.symmetrizers[i - 1] * self.a(i, j)
    }

    /// Symmetric bilinear form on root-lattice coordinates.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 1..=self.rank {
            for j in 1..=self.rank {
                acc += x[i - 1] * y[j - 1] * self.root_form(i, j);
            }
        }
        acc
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_node(i)?;
        let mut coords = vec![0i64; self.rank];
        coords[i - 1] = 1;
        Ok(Weight(coords))
    }

    /// `alpha_j` in fundamental coordinates: the j-th column of the Cartan matrix.
    pub fn simple_root(&self, j: usize) -> Result<Weight> {
        self.check_node(j)?;
        Ok(Weight(
            (0..self.rank).map(|i| self.cartan_matrix[i][j - 1]).collect(),
        ))
    }

    /// Sum of all fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Expresses a weight as an integer combination of simple roots, if possible.
    pub fn root_coords(&self, w: &Weight) -> Result<Vec<i64>> {
        let n = self.rank;
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational64::from_integer(self.cartan_matrix[i][j]))
                    .chain(std::iter::once(Rational64::from_integer(w.0[i])))
                    .collect()
            })
            .collect();
        for c in 0..n {
            let pivot = (c..n)
                .find(|&r| !m[r][c].is_zero())
                .ok_or(Error::NotInRootLattice)?;
            m.swap(c, pivot);
            let pv = m[c][c];
            for x in m[c].iter_mut() {
                *x /= pv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c];
                    for k in 0..=n {
                        let sub = f * m[c][k];
                        m[r][k] -= sub;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for row in m.iter().take(n) {
            let v = row[n];
            if !v.is_integer() {
                return Err(Error::NotInRootLattice);
            }
            out.push(v.to_integer());
        }
        Ok(out)
    }

    /// All positive roots in root-lattice coordinates, sorted.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for j in 0..n {
            let mut c = vec![0i64; n];
            c[j] = 1;
            seen.insert(c.clone());
            frontier.push(c);
        }
        while let Some(c) = frontier.pop() {
            for i in 1..=n {
                let pair: i64 = (1..=n).map(|j| self.a(i, j) * c[j - 1]).sum();
                let mut nc = c.clone();
                nc[i - 1] -= pair;
                if nc.iter().all(|&x| x >= 0) && seen.insert(nc.clone()) {
                    frontier.push(nc);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `<alpha^vee, w>` for a positive root given in root coordinates.
    pub fn coroot_pairing(&self, root: &[i64], w: &Weight) -> Rational64 {
        let norm: i64 = self.bilinear(root, root);
        let mut num = 0i64;
        for i in 1..=self.rank {
            // (alpha_i, w) = d_i * <h_i, w>
            num += root[i - 1] * self.symmetrizers[i - 1] * w.pairing(i);
        }
        Rational64::new(2 * num, norm)
    }

    pub fn to_document(&self) -> DatumDocument {
        DatumDocument {
            schema_version: DATUM_SCHEMA_VERSION,
            datum: self.clone(),
        }
    }
}
