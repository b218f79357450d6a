//! Exact verification of the quiver Hecke defining relations on a module.
//!
//! Every relation is checked as a matrix identity over the rationals, column
//! by column: multiplying on the right by `e(nu)` selects the columns of the
//! basis vectors carrying the sequence `nu`, so each family reduces to a
//! comparison of full products restricted to columns.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::matrix::SparseMat;

use super::module::HomogeneousModule;
use super::qspec::QSpec;

type QMat = SparseMat<Rational64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    Idempotents,
    DotCommutation,
    TauEIntertwine,
    FarCommutation,
    Quadratic,
    DotTau,
    Braid,
    Grading,
    Cyclotomic,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationFamily::Idempotents => "idempotents",
            RelationFamily::DotCommutation => "dot commutation",
            RelationFamily::TauEIntertwine => "crossing/idempotent intertwining",
            RelationFamily::FarCommutation => "far commutation",
            RelationFamily::Quadratic => "quadratic",
            RelationFamily::DotTau => "dot-crossing",
            RelationFamily::Braid => "braid",
            RelationFamily::Grading => "grading",
            RelationFamily::Cyclotomic => "cyclotomic",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct RelationFailure {
    pub family: RelationFamily,
    /// 1-based generator position, 0 for positionless checks.
    pub position: usize,
    /// Index sequence of the witnessing basis vector, if applicable.
    pub nu: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} relation failed at position {} on nu={:?}: {}",
            self.family, self.position, self.nu, self.detail
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub checks: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("ok: {} relation checks", self.checks)
        } else {
            format!(
                "fail: {} of {} relation checks; first witness: {}",
                self.failures.len(),
                self.checks,
                self.failures[0]
            )
        }
    }

    fn record(&mut self, ok: bool, fail: impl FnOnce() -> RelationFailure) {
        self.checks += 1;
        if !ok {
            self.failures.push(fail());
        }
    }
}

struct Checker<'a> {
    module: &'a HomogeneousModule,
    qspec: &'a QSpec,
    x: Vec<QMat>,
    tau: Vec<QMat>,
    report: RelationReport,
}

impl<'a> Checker<'a> {
    fn new(module: &'a HomogeneousModule, qspec: &'a QSpec) -> Self {
        let lift = |m: &SparseMat<i64>| m.map(|&v| Rational64::from_integer(v));
        Checker {
            module,
            qspec,
            x: (0..module.len()).map(|k| lift(module.x_matrix(k))).collect(),
            tau: (0..module.len().saturating_sub(1))
                .map(|k| lift(module.tau_matrix(k)))
                .collect(),
            report: RelationReport::default(),
        }
    }

    fn dim(&self) -> usize {
        self.module.dim()
    }

    fn seq(&self, p: usize) -> &[usize] {
        &self.module.seqs()[p]
    }

    /// Column `p` of `x_m^{a_0} x_{m+1}^{a_1} ...` with 1-based `m`; the
    /// rightmost factor is applied first.
    fn x_monomial_column(&self, m: usize, powers: &[usize], p: usize) -> Vec<(usize, Rational64)> {
        let mut col = vec![(p, Rational64::one())];
        for (off, &pw) in powers.iter().enumerate().rev() {
            for _ in 0..pw {
                col = self.x[m - 1 + off].apply(&col);
            }
        }
        col
    }

    fn check_columns(
        &mut self,
        family: RelationFamily,
        position: usize,
        lhs: &QMat,
        rhs: &QMat,
        what: &str,
    ) {
        for p in 0..self.dim() {
            let ok = lhs.columns_equal(rhs, p);
            let nu = self.seq(p).to_vec();
            self.report.record(ok, || RelationFailure {
                family,
                position,
                nu,
                detail: format!("{what} differs on basis vector {p}"),
            });
        }
    }

    fn idempotents(&mut self) {
        // the diagonal projections e(nu) are orthogonal and sum to 1
        let mut sum: QMat = QMat::zero(self.dim(), self.dim());
        let support = self.module.sequence_support();
        let mats: Vec<(Vec<usize>, QMat)> = support
            .keys()
            .map(|nu| {
                (
                    nu.to_vec(),
                    self.module
                        .e_matrix(nu)
                        .map(|&v| Rational64::from_integer(v)),
                )
            })
            .collect();
        for (_, e) in &mats {
            sum = sum.add_mat(e);
        }
        let id = QMat::identity(self.dim());
        self.report.record(sum == id, || RelationFailure {
            family: RelationFamily::Idempotents,
            position: 0,
            nu: vec![],
            detail: "sum of idempotents is not the identity".into(),
        });
        for (a, (nu_a, ea)) in mats.iter().enumerate() {
            for (nu_b, eb) in mats.iter().skip(a + 1) {
                let prod = ea.mul_mat(eb);
                self.report.record(prod.is_zero(), || RelationFailure {
                    family: RelationFamily::Idempotents,
                    position: 0,
                    nu: nu_a.clone(),
                    detail: format!("e({nu_a:?}) e({nu_b:?}) != 0"),
                });
            }
        }
    }

    fn dot_commutation(&mut self) {
        for k in 0..self.module.len() {
            for l in k + 1..self.module.len() {
                let lhs = self.x[k].mul_mat(&self.x[l]);
                let rhs = self.x[l].mul_mat(&self.x[k]);
                self.check_columns(
                    RelationFamily::DotCommutation,
                    k + 1,
                    &lhs,
                    &rhs,
                    &format!("x_{} x_{}", k + 1, l + 1),
                );
            }
        }
    }

    fn tau_e_intertwine(&mut self) {
        // tau_m e(nu) = e(s_m nu) tau_m
        for m in 1..self.module.len() {
            let t = self.tau[m - 1].clone();
            for p in 0..self.dim() {
                let nu = self.seq(p).to_vec();
                let mut swapped = nu.clone();
                swapped.swap(m - 1, m);
                let ok = t
                    .column(p)
                    .all(|(r, _)| self.seq(r) == swapped.as_slice());
                self.report.record(ok, || RelationFailure {
                    family: RelationFamily::TauEIntertwine,
                    position: m,
                    nu,
                    detail: format!("image of basis vector {p} lies outside e({swapped:?})"),
                });
            }
        }
    }

    fn far_commutation(&mut self) {
        let len = self.module.len();
        for m in 1..len {
            for l in 1..=len {
                if l == m || l == m + 1 {
                    continue;
                }
                let lhs = self.tau[m - 1].mul_mat(&self.x[l - 1]);
                let rhs = self.x[l - 1].mul_mat(&self.tau[m - 1]);
                self.check_columns(
                    RelationFamily::FarCommutation,
                    m,
                    &lhs,
                    &rhs,
                    &format!("tau_{m} x_{l}"),
                );
            }
            for l in m + 2..len {
                let lhs = self.tau[m - 1].mul_mat(&self.tau[l - 1]);
                let rhs = self.tau[l - 1].mul_mat(&self.tau[m - 1]);
                self.check_columns(
                    RelationFamily::FarCommutation,
                    m,
                    &lhs,
                    &rhs,
                    &format!("tau_{m} tau_{l}"),
                );
            }
        }
    }

    fn quadratic(&mut self) {
        // tau_m^2 e(nu) = Q_{nu_m, nu_{m+1}}(x_m, x_{m+1}) e(nu)
        for m in 1..self.module.len() {
            let lhs = self.tau[m - 1].mul_mat(&self.tau[m - 1]);
            for p in 0..self.dim() {
                let nu = self.seq(p).to_vec();
                let (i, j) = (nu[m - 1], nu[m]);
                let mut rhs_col: Vec<(usize, Rational64)> = Vec::new();
                for (pw, qw, t) in self.qspec.monomials(i, j) {
                    for (r, v) in self.x_monomial_column(m, &[pw, qw], p) {
                        rhs_col.push((r, t * v));
                    }
                }
                let rhs_col = normalize(rhs_col);
                let lhs_col: Vec<(usize, Rational64)> =
                    lhs.column(p).map(|(r, v)| (r, *v)).collect();
                self.report.record(lhs_col == rhs_col, || RelationFailure {
                    family: RelationFamily::Quadratic,
                    position: m,
                    nu,
                    detail: format!("tau_{m}^2 differs from Q_{{{i},{j}}} on basis vector {p}"),
                });
            }
        }
    }

    fn dot_tau(&mut self) {
        // (tau_m x_{m+1} - x_m tau_m) e(nu) = delta_{nu_m, nu_{m+1}} e(nu)
        // (x_{m+1} tau_m - tau_m x_m) e(nu) = delta_{nu_m, nu_{m+1}} e(nu)
        for m in 1..self.module.len() {
            let t = &self.tau[m - 1];
            let sides = [
                ("tau_m x_{m+1} - x_m tau_m", t.mul_mat(&self.x[m]).sub_mat(&self.x[m - 1].mul_mat(t))),
                ("x_{m+1} tau_m - tau_m x_m", self.x[m].mul_mat(t).sub_mat(&t.mul_mat(&self.x[m - 1]))),
            ];
            for (what, lhs) in sides {
                for p in 0..self.dim() {
                    let nu = self.seq(p).to_vec();
                    let delta = nu[m - 1] == nu[m];
                    let lhs_col: Vec<(usize, Rational64)> =
                        lhs.column(p).map(|(r, v)| (r, *v)).collect();
                    let rhs_col: Vec<(usize, Rational64)> = if delta {
                        vec![(p, Rational64::one())]
                    } else {
                        vec![]
                    };
                    self.report.record(lhs_col == rhs_col, || RelationFailure {
                        family: RelationFamily::DotTau,
                        position: m,
                        nu,
                        detail: format!("{what} differs on basis vector {p}"),
                    });
                }
            }
        }
    }

    fn braid(&mut self) {
        // (tau_{m+1} tau_m tau_{m+1} - tau_m tau_{m+1} tau_m) e(nu) equals the
        // divided-difference correction of Q_{nu_m, nu_{m+1}} when
        // nu_m = nu_{m+2}, and zero otherwise
        let len = self.module.len();
        for m in 1..len.saturating_sub(1) {
            let a = &self.tau[m - 1];
            let b = &self.tau[m];
            let lhs = b.mul_mat(&a.mul_mat(b)).sub_mat(&a.mul_mat(&b.mul_mat(a)));
            for p in 0..self.dim() {
                let nu = self.seq(p).to_vec();
                let mut rhs_col: Vec<(usize, Rational64)> = Vec::new();
                if nu[m - 1] == nu[m + 1] {
                    let (i, j) = (nu[m - 1], nu[m]);
                    for (pa, qw, pb, t) in self.qspec.braid_quotient_monomials(i, j) {
                        for (r, v) in self.x_monomial_column(m, &[pa, qw, pb], p) {
                            rhs_col.push((r, t * v));
                        }
                    }
                }
                let rhs_col = normalize(rhs_col);
                let lhs_col: Vec<(usize, Rational64)> =
                    lhs.column(p).map(|(r, v)| (r, *v)).collect();
                self.report.record(lhs_col == rhs_col, || RelationFailure {
                    family: RelationFamily::Braid,
                    position: m,
                    nu,
                    detail: format!("braid commutator differs on basis vector {p}"),
                });
            }
        }
    }

    fn grading(&mut self) {
        // in a homogeneous module every generator acts in degree zero, so a
        // crossing can move a basis vector only across an orthogonal pair
        let datum = self.module.datum();
        for m in 1..self.module.len() {
            for p in 0..self.dim() {
                let nu = self.seq(p).to_vec();
                let deg = -datum.root_form(nu[m - 1], nu[m]);
                let ok = deg == 0 || self.tau[m - 1].column_is_zero(p);
                self.report.record(ok, || RelationFailure {
                    family: RelationFamily::Grading,
                    position: m,
                    nu,
                    detail: format!("crossing of degree {deg} acts nontrivially on basis vector {p}"),
                });
            }
        }
    }

    fn cyclotomic(&mut self) {
        let len = self.module.len();
        if len == 0 {
            return;
        }
        let node = self.module.cyclotomic_node();
        for p in 0..self.dim() {
            let nu = self.seq(p).to_vec();
            let last = *nu.last().expect("nonempty sequence");
            // exponent <h_{nu_N}, Lambda_node> = delta_{nu_N, node}
            let power = if last == node { &[1usize][..] } else { &[] };
            let ok = self.x_monomial_column(len, power, p).is_empty();
            self.report.record(ok, || RelationFailure {
                family: RelationFamily::Cyclotomic,
                position: len,
                nu,
                detail: format!("cyclotomic condition fails on basis vector {p}"),
            });
        }
    }
}

fn normalize(mut col: Vec<(usize, Rational64)>) -> Vec<(usize, Rational64)> {
    col.sort_by_key(|&(r, _)| r);
    let mut out: Vec<(usize, Rational64)> = Vec::new();
    for (r, v) in col {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Verifies only the cyclotomic condition.
pub fn check_cyclotomic(module: &HomogeneousModule, qspec: &QSpec) -> RelationReport {
    let mut c = Checker::new(module, qspec);
    c.cyclotomic();
    c.report
}

/// Verifies every defining relation of the cyclotomic quiver Hecke algebra on
/// the module, plus the degree-zero homogeneity constraint.
pub fn check_klr_relations(module: &HomogeneousModule, qspec: &QSpec) -> RelationReport {
    let mut c = Checker::new(module, qspec);
    c.idempotents();
    c.dot_commutation();
    c.tau_e_intertwine();
    c.far_commutation();
    c.quadratic();
    c.dot_tau();
    c.braid();
    c.grading();
    c.cyclotomic();
    c.report
}
