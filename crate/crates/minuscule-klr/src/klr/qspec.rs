//! Coefficient data for the polynomials `Q_{i,j}` governing the quiver Hecke
//! relations.
//!
//! Admissible monomials `u^p v^q` satisfy
//! `(alpha_i, alpha_i) p + (alpha_j, alpha_j) q = -2 (alpha_i, alpha_j)`.
//! Orthogonal pairs are pinned to `Q_{i,j} = 1`; for adjacent pairs the two
//! extreme monomials `u^{-a_ij}` and `v^{-a_ji}` carry caller-chosen nonzero
//! coefficients.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;

use crate::cartan::CartanDatum;

#[derive(Debug, Clone)]
pub struct QSpec {
    rank: usize,
    /// `(i, j, p, q) -> t_{i,j;p,q}`, 1-based node indices.
    table: BTreeMap<(usize, usize, usize, usize), Rational64>,
}

impl QSpec {
    /// Leading coefficient 1, trailing coefficient -1 on every adjacent pair.
    pub fn standard(datum: &CartanDatum) -> Self {
        Self::with_pair_coefficients(datum, |_, _| {
            (Rational64::from_integer(1), Rational64::from_integer(-1))
        })
    }

    /// Builds a spec with `(leading, trailing)` coefficients per adjacent pair
    /// `i < j`. Both must be nonzero.
    pub fn with_pair_coefficients(
        datum: &CartanDatum,
        coeffs: impl Fn(usize, usize) -> (Rational64, Rational64),
    ) -> Self {
        let n = datum.rank();
        let mut table = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                if datum.a(i, j) == 0 {
                    table.insert((i, j, 0, 0), Rational64::from_integer(1));
                    continue;
                }
                if i < j {
                    let (lead, trail) = coeffs(i, j);
                    assert!(!lead.is_zero() && !trail.is_zero(), "coefficients must be units");
                    let p_lead = (-datum.a(i, j)) as usize;
                    let q_trail = (-datum.a(j, i)) as usize;
                    table.insert((i, j, p_lead, 0), lead);
                    table.insert((i, j, 0, q_trail), trail);
                    // symmetry t_{j,i;q,p} = t_{i,j;p,q}
                    table.insert((j, i, 0, p_lead), lead);
                    table.insert((j, i, q_trail, 0), trail);
                }
            }
        }
        QSpec { rank: n, table }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Monomials of `Q_{i,j}` as `(p, q, coefficient)`. Empty when `i == j`.
    pub fn monomials(&self, i: usize, j: usize) -> Vec<(usize, usize, Rational64)> {
        self.table
            .range((i, j, 0, 0)..(i, j, usize::MAX, usize::MAX))
            .map(|(&(_, _, p, q), &t)| (p, q, t))
            .collect()
    }

    /// Constant term `Q_{i,j}(0, 0)`: 1 for orthogonal pairs, 0 otherwise.
    pub fn constant_term(&self, i: usize, j: usize) -> Rational64 {
        self.table
            .get(&(i, j, 0, 0))
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    /// Monomials of `(Q_{i,j}(u, v) - Q_{i,j}(w, v)) / (u - w)` as
    /// `(a, q, b, coefficient)` for `u^a v^q w^b`.
    pub fn braid_quotient_monomials(
        &self,
        i: usize,
        j: usize,
    ) -> Vec<(usize, usize, usize, Rational64)> {
        let mut out = Vec::new();
        for (p, q, t) in self.monomials(i, j) {
            for a in 0..p {
                out.push((a, q, p - 1 - a, t));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::TypeLabel;

    #[test]
    fn b3_monomials() {
        let d = CartanDatum::new(TypeLabel::B, 3).unwrap();
        let q = QSpec::standard(&d);
        // Q_{1,2} = u^2 - v
        assert_eq!(
            q.monomials(1, 2),
            vec![
                (0, 1, Rational64::from_integer(-1)),
                (2, 0, Rational64::from_integer(1)),
            ]
        );
        // symmetry: Q_{2,1} = -u + v^2
        assert_eq!(
            q.monomials(2, 1),
            vec![
                (0, 2, Rational64::from_integer(1)),
                (1, 0, Rational64::from_integer(-1)),
            ]
        );
        // orthogonal pair
        assert_eq!(
            q.monomials(1, 3),
            vec![(0, 0, Rational64::from_integer(1))]
        );
        assert_eq!(q.constant_term(1, 3), Rational64::from_integer(1));
        assert_eq!(q.constant_term(1, 2), Rational64::zero());
        assert_eq!(q.constant_term(1, 1), Rational64::zero());
    }

    #[test]
    fn braid_quotient_for_b_pair_has_no_constant() {
        let d = CartanDatum::new(TypeLabel::B, 3).unwrap();
        let q = QSpec::standard(&d);
        // (u^2 - w^2)/(u - w) = u + w
        let quot = q.braid_quotient_monomials(1, 2);
        assert_eq!(
            quot,
            vec![
                (0, 0, 1, Rational64::from_integer(1)),
                (1, 0, 0, Rational64::from_integer(1)),
            ]
        );
        assert!(quot.iter().all(|&(a, qq, b, _)| a + qq + b > 0));
    }

    #[test]
    fn ade_braid_quotient_is_leading_constant() {
        let d = CartanDatum::new(TypeLabel::A, 3).unwrap();
        let q = QSpec::standard(&d);
        // (u - w)/(u - w) = 1 from the leading term of Q = u - v
        assert_eq!(
            q.braid_quotient_monomials(1, 2),
            vec![(0, 0, 0, Rational64::from_integer(1))]
        );
    }
}
