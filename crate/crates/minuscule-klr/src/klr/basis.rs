//! Matrix-unit bases of the cyclotomic algebra image.
//!
//! On a homogeneous module with pairwise distinct index sequences, every
//! `e(nu)` is a rank-one projection, so the image of the algebra in
//! endomorphisms is the full matrix algebra. A spanning family of `dim^2`
//! elements is written down explicitly: `psi_{p,q} = tau_w e(nu_q)` where `w`
//! is a word of adjacent transpositions carrying the sequence of basis vector
//! `q` to the sequence of basis vector `p`.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::module::HomogeneousModule;

#[derive(Debug, Clone)]
pub struct BasisElement {
    /// Basis index the element maps onto.
    pub row: usize,
    /// Basis index of the source idempotent `e(nu_q)`.
    pub col: usize,
    /// Crossing positions in application order (first entry acts first).
    pub word: Vec<usize>,
    /// Index sequence of the source idempotent.
    pub source: Vec<usize>,
    /// Degree of the element in the algebra grading.
    pub degree: i64,
}

#[derive(Debug, Clone)]
pub struct BasisReport {
    pub dim: usize,
    pub elements: Vec<BasisElement>,
    pub failures: Vec<String>,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A word of adjacent transpositions (1-based positions, application order)
/// carrying `from` to `to`. Fails unless `to` is a rearrangement of `from`.
pub fn connecting_word(from: &[usize], to: &[usize]) -> Result<Vec<usize>> {
    let n = from.len();
    if to.len() != n {
        return Err(Error::NotRearrangement);
    }
    // match occurrences in order: the k-th copy of a letter in `from` is sent
    // to the k-th copy of that letter in `to`
    let mut targets: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for (i, &l) in from.iter().enumerate() {
        let t = to
            .iter()
            .enumerate()
            .find(|&(j, &m)| m == l && !used[j])
            .map(|(j, _)| j)
            .ok_or(Error::NotRearrangement)?;
        used[t] = true;
        targets[i] = Some(t);
    }
    let mut perm: Vec<usize> = targets.into_iter().map(|t| t.expect("matched")).collect();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..n.saturating_sub(1)).find(|&i| perm[i] > perm[i + 1]) else {
            break;
        };
        perm.swap(i, i + 1);
        word.push(i + 1);
    }
    Ok(word)
}

/// Applies `tau` crossings along `word` (application order) to a sparse vector.
pub fn apply_word(
    module: &HomogeneousModule,
    word: &[usize],
    mut vec: Vec<(usize, i64)>,
) -> Vec<(usize, i64)> {
    for &m in word {
        vec = module.tau_matrix(m - 1).apply(&vec);
    }
    vec
}

/// Builds the `dim^2` matrix units and verifies each acts correctly with
/// degree zero.
pub fn cyclotomic_basis(module: &HomogeneousModule) -> Result<BasisReport> {
    let dim = module.dim();
    let datum = module.datum();
    let mut elements = Vec::with_capacity(dim * dim);
    let mut failures = Vec::new();
    for q in 0..dim {
        for p in 0..dim {
            let from = &module.seqs()[q];
            let to = &module.seqs()[p];
            let word = connecting_word(from, to)?;
            // degree of tau_w e(nu_q): sum of crossing degrees along the word
            let mut degree = 0i64;
            let mut s = from.clone();
            for &m in &word {
                degree -= datum.root_form(s[m - 1], s[m]);
                s.swap(m - 1, m);
            }
            let image = apply_word(module, &word, vec![(q, 1)]);
            if image != vec![(p, 1)] {
                failures.push(format!(
                    "element ({p},{q}) acts as {image:?}, expected unit vector {p}"
                ));
            }
            if degree != 0 {
                failures.push(format!("element ({p},{q}) has degree {degree}"));
            }
            elements.push(BasisElement {
                row: p,
                col: q,
                word,
                source: from.clone(),
                degree,
            });
        }
    }
    Ok(BasisReport {
        dim,
        elements,
        failures,
    })
}

fn eval_product(
    module: &HomogeneousModule,
    left: &BasisElement,
    right: &BasisElement,
) -> Vec<(usize, Rational64)> {
    // (tau_{w_left} e(nu_left)) (tau_{w_right} e(nu_right)) evaluated on the
    // module; sequences are pairwise distinct, so e(nu_right) projects onto
    // the single basis vector right.col
    let s = right.col;
    let mid = apply_word(module, &right.word, vec![(s, 1)]);
    let mid: Vec<(usize, i64)> = mid
        .into_iter()
        .filter(|&(r, _)| module.seqs()[r] == left.source)
        .collect();
    apply_word(module, &left.word, mid)
        .into_iter()
        .map(|(r, v)| (r * module.dim() + s, Rational64::from_integer(v)))
        .collect()
}

/// Checks `psi_{p,q} psi_{q,r} = psi_{p,r}` on index triples and
/// `psi_{p,q} psi_{r,s} = 0` for `q != r` on quadruples, by evaluating the
/// concatenated crossing words on the module. Triples run over all indices up
/// to dimension `triple_cap` and over an evenly spaced subset beyond it;
/// quadruples likewise with `quad_cap`.
pub fn check_matrix_unit_products(
    module: &HomogeneousModule,
    report: &BasisReport,
    triple_cap: usize,
    quad_cap: usize,
) -> Vec<String> {
    let dim = report.dim;
    let at = |p: usize, q: usize| &report.elements[q * dim + p];
    let subset = |cap: usize| -> Vec<usize> {
        if dim <= cap {
            (0..dim).collect()
        } else {
            let stride = dim.div_ceil(cap);
            (0..dim).step_by(stride).chain([dim - 1]).collect()
        }
    };
    let mut failures = Vec::new();
    let tri = subset(triple_cap);
    for &p in &tri {
        for &q in &tri {
            for &r in &tri {
                let prod = eval_product(module, at(p, q), at(q, r));
                let expect = vec![(p * dim + r, Rational64::one())];
                if prod != expect {
                    failures.push(format!("composition fails on ({p},{q})*({q},{r})"));
                }
            }
        }
    }
    let quad = subset(quad_cap);
    for &p in &quad {
        for &q in &quad {
            for &r in &quad {
                if r == q {
                    continue;
                }
                for &s in &quad {
                    let prod = eval_product(module, at(p, q), at(r, s));
                    if !prod.iter().all(|(_, v)| v.is_zero()) {
                        failures.push(format!("orthogonality fails on ({p},{q})*({r},{s})"));
                    }
                }
            }
        }
    }
    failures
}

/// All minimal words of adjacent transpositions carrying `from` to `to`, up
/// to `cap` words; the boolean is true when the enumeration was truncated.
pub fn connecting_words_all(from: &[usize], to: &[usize], cap: usize) -> Result<(Vec<Vec<usize>>, bool)> {
    // reuse the occurrence matching of connecting_word to get the permutation
    let n = from.len();
    if to.len() != n {
        return Err(Error::NotRearrangement);
    }
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for &l in from {
        let t = to
            .iter()
            .enumerate()
            .find(|&(j, &m)| m == l && !used[j])
            .map(|(j, _)| j)
            .ok_or(Error::NotRearrangement)?;
        used[t] = true;
        perm.push(t);
    }
    fn go(
        perm: &mut Vec<usize>,
        prefix: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if acc.len() >= cap {
            return true;
        }
        let descents: Vec<usize> = (0..perm.len().saturating_sub(1))
            .filter(|&i| perm[i] > perm[i + 1])
            .collect();
        if descents.is_empty() {
            acc.push(prefix.clone());
            return false;
        }
        for i in descents {
            perm.swap(i, i + 1);
            prefix.push(i + 1);
            let truncated = go(perm, prefix, acc, cap);
            prefix.pop();
            perm.swap(i, i + 1);
            if truncated {
                return true;
            }
        }
        false
    }
    let mut acc = Vec::new();
    let truncated = go(&mut perm, &mut Vec::new(), &mut acc, cap);
    Ok((acc, truncated))
}

/// Verifies that for every pair of basis vectors whose connecting permutation
/// has at most `word_cap` minimal words, every such word produces the same
/// matrix unit. Pairs over the cap are skipped.
pub fn check_word_independence(module: &HomogeneousModule, word_cap: usize) -> Vec<String> {
    let mut failures = Vec::new();
    for q in 0..module.dim() {
        for p in 0..module.dim() {
            let from = &module.seqs()[q];
            let to = &module.seqs()[p];
            let (words, truncated) =
                connecting_words_all(from, to, word_cap).expect("basis sequences rearrange");
            if truncated {
                continue;
            }
            for w in words {
                if apply_word(module, &w, vec![(q, 1)]) != vec![(p, 1)] {
                    failures.push(format!(
                        "word {w:?} from vector {q} does not produce vector {p}"
                    ));
                }
            }
        }
    }
    failures
}
