//! Weyl group action on weights: orbits, lengths, reduced words.
//!
//! Group elements are represented by their action on `rho`, which is faithful
//! for the finite types handled here. Equality and hashing are on that image.

use std::collections::{BTreeSet, HashMap};

use crate::cartan::{CartanDatum, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rho_image: Weight,
}

impl WeylElement {
    pub fn identity(datum: &CartanDatum) -> Self {
        WeylElement {
            rho_image: datum.rho(),
        }
    }

    /// `s_{i_1} ... s_{i_l}` for a 1-based word.
    pub fn from_word(datum: &CartanDatum, word: &[usize]) -> Result<Self> {
        Ok(WeylElement {
            rho_image: apply_word(datum, word, &datum.rho())?,
        })
    }

    pub fn rho_image(&self) -> &Weight {
        &self.rho_image
    }

    pub fn is_identity(&self, datum: &CartanDatum) -> bool {
        self.rho_image == datum.rho()
    }
}

/// `s_i(w) = w - <h_i, w> alpha_i`.
pub fn reflect(datum: &CartanDatum, w: &Weight, i: usize) -> Result<Weight> {
    let alpha = datum.simple_root(i)?;
    let c = w.pairing(i);
    let scaled = Weight::new(alpha.coords().iter().map(|&x| c * x).collect());
    Ok(&w.clone() - &scaled)
}

/// Applies `s_{i_1} ... s_{i_l}` to `w` (rightmost letter acts first).
pub fn apply_word(datum: &CartanDatum, word: &[usize], w: &Weight) -> Result<Weight> {
    let mut cur = w.clone();
    for &i in word.iter().rev() {
        cur = reflect(datum, &cur, i)?;
    }
    Ok(cur)
}

/// Full Weyl orbit of a weight, in lexicographic order.
pub fn orbit(datum: &CartanDatum, lam: &Weight) -> Vec<Weight> {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(lam.clone());
    let mut frontier = vec![lam.clone()];
    while let Some(w) = frontier.pop() {
        for i in 1..=datum.rank() {
            if w.pairing(i) != 0 {
                let nw = reflect(datum, &w, i).expect("valid node");
                if seen.insert(nw.clone()) {
                    frontier.push(nw);
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn left_descents(datum: &CartanDatum, rho_image: &Weight) -> Vec<usize> {
    (1..=datum.rank())
        .filter(|&i| rho_image.pairing(i) < 0)
        .collect()
}

/// Coxeter length, via repeated left-descent stripping on the rho image.
pub fn length(datum: &CartanDatum, w: &WeylElement) -> usize {
    canonical_word(datum, w).len()
}

/// The lexicographically-least reduced word of `w`.
pub fn canonical_word(datum: &CartanDatum, w: &WeylElement) -> Vec<usize> {
    let mut cur = w.rho_image().clone();
    let mut word = Vec::new();
    loop {
        match left_descents(datum, &cur).first() {
            Some(&i) => {
                word.push(i);
                cur = reflect(datum, &cur, i).expect("valid node");
            }
            None => break,
        }
    }
    word
}

/// The complete set of reduced words of `w`, sorted lexicographically.
pub fn reduced_words(datum: &CartanDatum, w: &WeylElement) -> Vec<Vec<usize>> {
    let mut memo: HashMap<Weight, Vec<Vec<usize>>> = HashMap::new();
    fn go(
        datum: &CartanDatum,
        rho_image: &Weight,
        memo: &mut HashMap<Weight, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(v) = memo.get(rho_image) {
            return v.clone();
        }
        let descents = left_descents(datum, rho_image);
        let words = if descents.is_empty() {
            vec![Vec::new()]
        } else {
            let mut acc = Vec::new();
            for i in descents {
                let next = reflect(datum, rho_image, i).expect("valid node");
                for rest in go(datum, &next, memo) {
                    let mut word = Vec::with_capacity(rest.len() + 1);
                    word.push(i);
                    word.extend(rest);
                    acc.push(word);
                }
            }
            acc
        };
        memo.insert(rho_image.clone(), words.clone());
        words
    }
    let mut words = go(datum, w.rho_image(), &mut memo);
    words.sort();
    words
}

/// True iff no reduced word contains a contiguous braid factor
/// `s_i s_j s_i ...` of the full braid length for a noncommuting pair.
pub fn is_fully_commutative(datum: &CartanDatum, w: &WeylElement) -> bool {
    let braid_len = |i: usize, j: usize| -> Option<usize> {
        match datum.a(i, j) * datum.a(j, i) {
            0 => None,
            1 => Some(3),
            2 => Some(4),
            _ => Some(6),
        }
    };
    for word in reduced_words(datum, w) {
        for start in 0..word.len() {
            let (i, j) = match word[start..] {
                [i, j, ..] if i != j => (i, j),
                _ => continue,
            };
            if let Some(m) = braid_len(i, j) {
                if start + m <= word.len()
                    && (0..m).all(|k| word[start + k] == if k % 2 == 0 { i } else { j })
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that `i` is a valid node for this datum, for callers building words.
pub fn check_node(datum: &CartanDatum, i: usize) -> Result<()> {
    if i >= 1 && i <= datum.rank() {
        Ok(())
    } else {
        Err(Error::NodeOutOfRange(i, datum.rank()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::TypeLabel;
    use proptest::prelude::*;

    fn datum(t: TypeLabel, r: usize) -> CartanDatum {
        CartanDatum::new(t, r).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let a2 = datum(TypeLabel::A, 2);
        let l1 = a2.fundamental_weight(1).unwrap();
        assert_eq!(reflect(&a2, &l1, 1).unwrap().coords(), &[-1, 1]);
        assert_eq!(reflect(&a2, &l1, 2).unwrap(), l1);
        let b2 = datum(TypeLabel::B, 2);
        let l1 = b2.fundamental_weight(1).unwrap();
        assert_eq!(reflect(&b2, &l1, 1).unwrap().coords(), &[-1, 1]);
    }

    #[test]
    fn orbit_sizes() {
        let cases: Vec<(TypeLabel, usize, usize, usize)> = vec![
            (TypeLabel::B, 3, 1, 8),
            (TypeLabel::C, 3, 3, 6),
            (TypeLabel::E7, 7, 7, 56),
            (TypeLabel::E6, 6, 1, 27),
            (TypeLabel::E6, 6, 6, 27),
            (TypeLabel::D, 4, 1, 8),
            (TypeLabel::D, 4, 4, 8),
            (TypeLabel::D, 5, 5, 10),
            (TypeLabel::D, 5, 1, 16),
        ];
        for (t, r, node, size) in cases {
            let d = datum(t, r);
            let lam = d.fundamental_weight(node).unwrap();
            assert_eq!(orbit(&d, &lam).len(), size, "{t}_{r} node {node}");
        }
        // A_n node i: binomial(n+1, i)
        for n in 1..=5usize {
            let d = datum(TypeLabel::A, n);
            for i in 1..=n {
                let expected = {
                    let mut b = 1usize;
                    for k in 0..i {
                        b = b * (n + 1 - k) / (k + 1);
                    }
                    b
                };
                let lam = d.fundamental_weight(i).unwrap();
                assert_eq!(orbit(&d, &lam).len(), expected);
            }
        }
        // B_n spin orbits are 2^n
        for n in 2..=8usize {
            let d = datum(TypeLabel::B, n);
            let lam = d.fundamental_weight(1).unwrap();
            assert_eq!(orbit(&d, &lam).len(), 1 << n);
        }
    }

    #[test]
    fn orbit_minuscule_coordinate_bounds() {
        for (t, r) in [
            (TypeLabel::A, 4),
            (TypeLabel::B, 4),
            (TypeLabel::C, 4),
            (TypeLabel::D, 5),
            (TypeLabel::E6, 6),
            (TypeLabel::E7, 7),
        ] {
            let d = datum(t, r);
            for &i in d.minuscule_nodes() {
                let lam = d.fundamental_weight(i).unwrap();
                for w in orbit(&d, &lam) {
                    assert!(w.coords().iter().all(|&c| (-2..=2).contains(&c)));
                }
            }
        }
    }

    #[test]
    fn length_examples() {
        let a2 = datum(TypeLabel::A, 2);
        assert_eq!(length(&a2, &WeylElement::identity(&a2)), 0);
        let w0 = WeylElement::from_word(&a2, &[1, 2, 1]).unwrap();
        assert_eq!(length(&a2, &w0), 3);
        let b2 = datum(TypeLabel::B, 2);
        let w0 = WeylElement::from_word(&b2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(length(&b2, &w0), 4);
    }

    #[test]
    fn reduced_word_examples() {
        let a2 = datum(TypeLabel::A, 2);
        assert_eq!(
            reduced_words(&a2, &WeylElement::identity(&a2)),
            vec![Vec::<usize>::new()]
        );
        let w0 = WeylElement::from_word(&a2, &[1, 2, 1]).unwrap();
        assert_eq!(
            reduced_words(&a2, &w0),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
        let a3 = datum(TypeLabel::A, 3);
        let w = WeylElement::from_word(&a3, &[2, 1, 3, 2]).unwrap();
        assert_eq!(reduced_words(&a3, &w).len(), 2);
    }

    #[test]
    fn fully_commutative_examples() {
        let a2 = datum(TypeLabel::A, 2);
        assert!(is_fully_commutative(&a2, &WeylElement::identity(&a2)));
        let braid = WeylElement::from_word(&a2, &[1, 2, 1]).unwrap();
        assert!(!is_fully_commutative(&a2, &braid));
        let a3 = datum(TypeLabel::A, 3);
        let fc = WeylElement::from_word(&a3, &[2, 1, 3, 2]).unwrap();
        assert!(is_fully_commutative(&a3, &fc));
        let b2 = datum(TypeLabel::B, 2);
        let braid4 = WeylElement::from_word(&b2, &[1, 2, 1, 2]).unwrap();
        assert!(!is_fully_commutative(&b2, &braid4));
    }

    #[test]
    fn orbit_contains_one_dominant_weight() {
        for (t, r, node) in [
            (TypeLabel::B, 4, 1),
            (TypeLabel::C, 3, 3),
            (TypeLabel::D, 4, 2),
            (TypeLabel::E6, 6, 1),
        ] {
            let d = datum(t, r);
            let lam = d.fundamental_weight(node).unwrap();
            let dominant: Vec<_> = orbit(&d, &lam)
                .into_iter()
                .filter(|w| w.is_dominant())
                .collect();
            assert_eq!(dominant, vec![lam]);
        }
    }

    proptest! {
        #[test]
        fn length_changes_by_one(word in proptest::collection::vec(1usize..=4, 0..10), i in 1usize..=4) {
            let d = datum(TypeLabel::B, 4);
            let w = WeylElement::from_word(&d, &word).unwrap();
            let mut extended = word.clone();
            extended.push(i);
            let ws = WeylElement::from_word(&d, &extended).unwrap();
            let l = length(&d, &w) as i64;
            let ls = length(&d, &ws) as i64;
            prop_assert_eq!((l - ls).abs(), 1);
        }

        #[test]
        fn reduced_words_reproduce_rho_image(word in proptest::collection::vec(1usize..=4, 0..8)) {
            let d = datum(TypeLabel::A, 4);
            let w = WeylElement::from_word(&d, &word).unwrap();
            let words = reduced_words(&d, &w);
            prop_assert!(!words.is_empty());
            for rw in words {
                prop_assert_eq!(apply_word(&d, &rw, &d.rho()).unwrap(), w.rho_image().clone());
                prop_assert_eq!(rw.len(), length(&d, &w));
            }
        }

        #[test]
        fn orbit_closed_under_reflections(node in 1usize..=4) {
            let d = datum(TypeLabel::D, 4);
            let lam = d.fundamental_weight(node).unwrap();
            let orb = orbit(&d, &lam);
            let set: std::collections::BTreeSet<_> = orb.iter().cloned().collect();
            for w in &orb {
                for i in 1..=4 {
                    prop_assert!(set.contains(&reflect(&d, w, i).unwrap()));
                }
            }
        }
    }
}
