//! Projective representations as dense complex matrices.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycle::{CocycleError, Multiplier, RegularClassData};
use crate::group::FiniteGroup;

pub type CMatrix = DMatrix<Complex64>;

/// Default absolute tolerance on matrix entries.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepError {
    #[error("expected one matrix per group element ({expected}), got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("matrix for element {element} is not {degree}x{degree}")]
    ShapeMismatch { element: usize, degree: usize },
    #[error("pi(identity) differs from the identity matrix by {residual:e}")]
    NotIdentityAtOne { residual: f64 },
    #[error("pi({x}) pi({y}) != alpha({x},{y}) pi({x}*{y}); worst residual {residual:e}")]
    MultiplierMismatch { x: usize, y: usize, residual: f64 },
    #[error("pi({element}) is not unitary; residual {residual:e}")]
    NotUnitary { element: usize, residual: f64 },
    #[error("representations do not share a group and multiplier")]
    IncompatibleMultipliers,
    #[error("empty list of representations")]
    Empty,
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// Which translation the regular representation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A projective representation `π` with `π(x)π(y) = α(x,y)π(xy)`.
#[derive(Clone, Debug)]
pub struct ProjectiveRep {
    mult: Arc<Multiplier>,
    degree: usize,
    matrices: Vec<CMatrix>,
    tol: f64,
}

impl ProjectiveRep {
    /// Validated representation with the default tolerance.
    pub fn new(mult: Arc<Multiplier>, matrices: Vec<CMatrix>) -> Result<Self, RepError> {
        Self::with_tol(mult, matrices, DEFAULT_TOL)
    }

    pub fn with_tol(
        mult: Arc<Multiplier>,
        matrices: Vec<CMatrix>,
        tol: f64,
    ) -> Result<Self, RepError> {
        let rep = Self::new_unchecked(mult, matrices, tol)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Checks shapes only.
    pub fn new_unchecked(
        mult: Arc<Multiplier>,
        matrices: Vec<CMatrix>,
        tol: f64,
    ) -> Result<Self, RepError> {
        let n = mult.group().order();
        if matrices.len() != n {
            return Err(RepError::WrongCount {
                expected: n,
                got: matrices.len(),
            });
        }
        let degree = matrices[0].nrows();
        if degree == 0 {
            return Err(RepError::ZeroDegree);
        }
        if let Some(element) = matrices
            .iter()
            .position(|m| m.nrows() != degree || m.ncols() != degree)
        {
            return Err(RepError::ShapeMismatch { element, degree });
        }
        Ok(Self {
            mult,
            degree,
            matrices,
            tol,
        })
    }

    /// The 1-dimensional trivial representation of a trivial multiplier.
    pub fn trivial(mult: Arc<Multiplier>) -> Result<Self, RepError> {
        let n = mult.group().order();
        Self::new(mult, vec![CMatrix::identity(1, 1); n])
    }

    /// Checks `π(1) = 1`, the multiplier relation on every pair and
    /// unitarity, reporting the worst offender of each kind.
    pub fn validate(&self) -> Result<(), RepError> {
        let grp = self.group();
        let n = grp.order();
        let tol = self.tol;
        let id = CMatrix::identity(self.degree, self.degree);

        let residual = max_abs_diff(&self.matrices[0], &id);
        if residual > tol {
            return Err(RepError::NotIdentityAtOne { residual });
        }

        let mut worst_unitary = (0usize, 0.0f64);
        for (g, m) in self.matrices.iter().enumerate() {
            let r = max_abs_diff(&(m.adjoint() * m), &id);
            if r > worst_unitary.1 {
                worst_unitary = (g, r);
            }
        }
        if worst_unitary.1 > tol {
            return Err(RepError::NotUnitary {
                element: worst_unitary.0,
                residual: worst_unitary.1,
            });
        }

        let mut worst = (0usize, 0usize, 0.0f64);
        for x in 0..n {
            for y in 0..n {
                let lhs = &self.matrices[x] * &self.matrices[y];
                let rhs = &self.matrices[grp.mul(x, y)] * self.mult.value(x, y);
                let r = max_abs_diff(&lhs, &rhs);
                if r > worst.2 {
                    worst = (x, y, r);
                }
            }
        }
        if worst.2 > tol {
            return Err(RepError::MultiplierMismatch {
                x: worst.0,
                y: worst.1,
                residual: worst.2,
            });
        }
        Ok(())
    }

    /// Left or right α-regular representation of degree |G|.
    ///
    /// Left: `L(h) e_g = α(h, g) e_{hg}`. Right: `R(h) e_g = α(h, g⁻¹) e_{gh⁻¹}`.
    pub fn regular(mult: Arc<Multiplier>, side: Side) -> Self {
        let grp = mult.group().clone();
        let n = grp.order();
        let matrices = (0..n)
            .map(|h| {
                let mut m = CMatrix::zeros(n, n);
                for g in 0..n {
                    let (row, val) = match side {
                        Side::Left => (grp.mul(h, g), mult.value(h, g)),
                        Side::Right => (grp.mul(g, grp.inv(h)), mult.value(h, grp.inv(g))),
                    };
                    m[(row, g)] = val;
                }
                m
            })
            .collect();
        Self {
            mult,
            degree: n,
            matrices,
            tol: DEFAULT_TOL,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn multiplier(&self) -> &Arc<Multiplier> {
        &self.mult
    }

    pub fn group(&self) -> &FiniteGroup {
        self.mult.group()
    }

    pub fn matrix(&self, g: usize) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn set_tol(&mut self, tol: f64) {
        self.tol = tol;
    }

    /// Dual representation `π*(g) = ᵗπ(g⁻¹) / α(g, g⁻¹)` with multiplier α⁻¹.
    pub fn dual(&self) -> ProjectiveRep {
        let grp = self.group();
        let matrices = (0..grp.order())
            .map(|g| {
                let gi = grp.inv(g);
                self.matrices[gi].transpose() / self.mult.value(g, gi)
            })
            .collect();
        Self {
            mult: Arc::new(self.mult.inverse()),
            degree: self.degree,
            matrices,
            tol: self.tol,
        }
    }

    /// Kronecker product, with multiplier `α₁α₂`.
    pub fn tensor(&self, other: &ProjectiveRep) -> Result<ProjectiveRep, RepError> {
        let mult = self.mult.product(&other.mult)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.kronecker(b))
            .collect();
        Ok(Self {
            mult: Arc::new(mult),
            degree: self.degree * other.degree,
            matrices,
            tol: self.tol.max(other.tol),
        })
    }

    /// Block-diagonal direct sum; all summands must share the multiplier.
    pub fn direct_sum(reps: &[&ProjectiveRep]) -> Result<ProjectiveRep, RepError> {
        let first = reps.first().ok_or(RepError::Empty)?;
        if reps.iter().any(|r| *r.mult != *first.mult) {
            return Err(RepError::IncompatibleMultipliers);
        }
        let degree: usize = reps.iter().map(|r| r.degree).sum();
        let n = first.group().order();
        let matrices = (0..n)
            .map(|g| {
                let mut m = CMatrix::zeros(degree, degree);
                let mut off = 0;
                for r in reps {
                    m.view_mut((off, off), (r.degree, r.degree))
                        .copy_from(&r.matrices[g]);
                    off += r.degree;
                }
                m
            })
            .collect();
        Ok(Self {
            mult: first.mult.clone(),
            degree,
            matrices,
            tol: reps.iter().map(|r| r.tol).fold(0.0, f64::max),
        })
    }

    /// `χ(g) = tr π(g)` for every element.
    pub fn character(&self) -> Vec<Complex64> {
        self.matrices.iter().map(CMatrix::trace).collect()
    }

    /// Largest violation of the α-class-function identities by this
    /// representation's character: `χ(hgh⁻¹) = β_h(g) χ(g)`, vanishing off
    /// α-regular elements, and `χ(g⁻¹) = α(g, g⁻¹) conj(χ(g))`.
    pub fn class_function_residual(&self) -> f64 {
        character_class_function_residual(&self.mult, &self.character())
    }

    /// `U π(g) U*` for a unitary `U`.
    pub fn conjugated(&self, u: &CMatrix) -> ProjectiveRep {
        let ua = u.adjoint();
        Self {
            mult: self.mult.clone(),
            degree: self.degree,
            matrices: self.matrices.iter().map(|m| u * m * &ua).collect(),
            tol: self.tol,
        }
    }

    /// Restriction to the invariant subspace spanned by the orthonormal
    /// columns of `basis`: `B* π(g) B`. Not validated.
    pub fn restrict(&self, basis: &CMatrix) -> ProjectiveRep {
        let ba = basis.adjoint();
        Self {
            mult: self.mult.clone(),
            degree: basis.ncols(),
            matrices: self.matrices.iter().map(|m| &ba * m * basis).collect(),
            tol: self.tol,
        }
    }

    /// No non-identity element acts as a scalar (so `π ⊗ π*` is a faithful
    /// linear representation).
    pub fn is_faithful(&self) -> bool {
        (1..self.matrices.len()).all(|g| !is_scalar(&self.matrices[g], self.tol.max(1e-7)))
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            degree: self.degree,
            root_order: self.mult.root_order(),
            matrices: self
                .matrices
                .iter()
                .map(|m| {
                    (0..self.degree)
                        .map(|i| {
                            (0..self.degree)
                                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Serialized representation: per element a `d×d` array of `[re, im]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RepJson {
    pub degree: usize,
    pub root_order: u64,
    pub matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

impl RepJson {
    pub fn to_matrices(&self) -> Vec<CMatrix> {
        self.matrices
            .iter()
            .map(|rows| {
                CMatrix::from_fn(self.degree, self.degree, |i, j| {
                    Complex64::new(rows[i][j][0], rows[i][j][1])
                })
            })
            .collect()
    }
}

/// See [`ProjectiveRep::class_function_residual`]; works for any function
/// given on all group elements.
pub fn character_class_function_residual(mult: &Multiplier, chi: &[Complex64]) -> f64 {
    let grp = mult.group();
    let n = grp.order();
    let mut worst = 0.0f64;
    for g in 0..n {
        let gi = grp.inv(g);
        let inv_rel = chi[gi] - mult.value(g, gi) * chi[g].conj();
        worst = worst.max(inv_rel.norm());
        if !mult.is_regular(g) {
            worst = worst.max(chi[g].norm());
        }
        for h in 0..n {
            let lhs = chi[grp.conjugate(h, g)];
            let rhs = mult.root(mult.class_factor(h, g) as i64) * chi[g];
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// Extends values given on regular class representatives to all of G using
/// `χ(g) = β(c₀, g) χ(c₀)`, zero off the α-regular classes.
pub fn extend_class_function(
    mult: &Multiplier,
    rcd: &RegularClassData,
    on_reps: &[Complex64],
) -> Vec<Complex64> {
    (0..mult.group().order())
        .map(|g| match rcd.class_index(g) {
            Some(c) => mult.root(rcd.beta_to(g) as i64) * on_reps[c],
            None => Complex64::new(0.0, 0.0),
        })
        .collect()
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// `a ≈ λ·1` within `tol` (absolute, scaled by `max(1, |a|)`).
pub fn is_scalar(a: &CMatrix, tol: f64) -> bool {
    scalar_deviation(a) <= tol * max_abs(a).max(1.0)
}

/// `max |a - (tr a / d)·1|`.
pub fn scalar_deviation(a: &CMatrix) -> f64 {
    let d = a.nrows();
    if d == 0 {
        return 0.0;
    }
    let lambda = a.trace() / d as f64;
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j {
                lambda
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((a[(i, j)] - target).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trivial_rep_validates() {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::klein_four())));
        let r = ProjectiveRep::trivial(m).unwrap();
        assert_eq!(r.character(), vec![c(1.0, 0.0); 4]);
    }

    #[test]
    fn pauli_rep_validates_and_has_expected_character() {
        let r = catalog::pauli_rep();
        assert!(r.validate().is_ok());
        let chi = r.character();
        assert!((chi[0] - c(2.0, 0.0)).norm() < 1e-12);
        assert!(chi[1..].iter().all(|x| x.norm() < 1e-12));
        assert!(r.class_function_residual() < 1e-12);
    }

    #[test]
    fn pauli_matrices_with_trivial_multiplier_fail() {
        let r = catalog::pauli_rep();
        let triv = Arc::new(Multiplier::trivial(r.multiplier().group().clone()));
        let err = ProjectiveRep::new(triv, r.matrices().to_vec()).unwrap_err();
        assert!(matches!(err, RepError::MultiplierMismatch { .. }));
    }

    #[test]
    fn non_unitary_is_rejected() {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(2))));
        let mats = vec![
            CMatrix::identity(1, 1),
            CMatrix::from_element(1, 1, c(2.0, 0.0)),
        ];
        assert!(matches!(
            ProjectiveRep::new(m, mats).unwrap_err(),
            RepError::NotUnitary { element: 1, .. }
        ));
    }

    #[test]
    fn regular_reps() {
        let triv = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(2))));
        let l = ProjectiveRep::regular(triv, Side::Left);
        assert!(l.validate().is_ok());
        assert_eq!(l.matrix(1)[(1, 0)], c(1.0, 0.0));
        assert_eq!(l.matrix(1)[(0, 1)], c(1.0, 0.0));

        let pauli = Arc::new(catalog::pauli_multiplier());
        for side in [Side::Left, Side::Right] {
            let r = ProjectiveRep::regular(pauli.clone(), side);
            assert!(r.validate().is_ok(), "{side:?}");
            let chi = r.character();
            assert!((chi[0] - c(4.0, 0.0)).norm() < 1e-12);
            assert!(chi[1..].iter().all(|x| x.norm() < 1e-12));
        }
    }

    #[test]
    fn dual_and_tensor_bookkeeping() {
        let p = catalog::pauli_rep();
        let d = p.dual();
        assert!(d.validate().is_ok());
        assert_eq!(**d.multiplier(), p.multiplier().inverse());
        let dd = d.dual();
        let (c1, c2) = (p.character(), dd.character());
        assert!(c1.iter().zip(&c2).all(|(a, b)| (a - b).norm() < 1e-12));

        let pp = p.tensor(&p).unwrap();
        assert!(pp.validate().is_ok());
        assert!(pp.multiplier().is_trivial());
        assert_eq!(pp.degree(), 4);

        let lin = p.tensor(&d).unwrap();
        assert!(lin.multiplier().is_trivial());
        assert!(lin.validate().is_ok());
        assert!(p.is_faithful());
        // π ⊗ π* is faithful as a linear representation
        let id = CMatrix::identity(4, 4);
        assert!((1..4).all(|g| max_abs_diff(lin.matrix(g), &id) > 1e-6));

        let triv = ProjectiveRep::trivial(Arc::new(Multiplier::trivial(
            p.multiplier().group().clone(),
        )))
        .unwrap();
        let same = p.tensor(&triv).unwrap();
        assert!(same
            .matrices()
            .iter()
            .zip(p.matrices())
            .all(|(a, b)| max_abs_diff(a, b) < 1e-15));
    }

    #[test]
    fn direct_sums() {
        let p = catalog::pauli_rep();
        let s = ProjectiveRep::direct_sum(&[&p, &p]).unwrap();
        assert_eq!(s.degree(), 4);
        assert!((s.character()[0] - c(4.0, 0.0)).norm() < 1e-12);
        assert!(s.validate().is_ok());
        assert_eq!(ProjectiveRep::direct_sum(&[]).unwrap_err(), RepError::Empty);

        let m = Arc::new(Multiplier::trivial(p.multiplier().group().clone()));
        let t = ProjectiveRep::trivial(m).unwrap();
        assert_eq!(
            ProjectiveRep::direct_sum(&[&p, &t]).unwrap_err(),
            RepError::IncompatibleMultipliers
        );
        let tt = ProjectiveRep::direct_sum(&[&t, &t]).unwrap();
        assert!(tt
            .character()
            .iter()
            .all(|x| (x - c(2.0, 0.0)).norm() < 1e-15));
    }

    #[test]
    fn json_roundtrip() {
        let p = catalog::pauli_rep();
        let j = p.to_json();
        let back = ProjectiveRep::new(p.multiplier().clone(), j.to_matrices()).unwrap();
        assert_eq!(back.to_json(), j);
    }
}
