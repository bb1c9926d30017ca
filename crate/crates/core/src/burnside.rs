//! Floating-point character tables from the class matrices `M_A`.
//!
//! For every α-regular class `A` the `m×m` matrix
//! `(M_A)_{BC} = (|B||C|)^{-1/2} Σ_{a∈A, b∈B, ab∈C} β(c₀,ab) α(a,b) / (β(a₀,a) β(b₀,b))`
//! is built; the family is normal and commuting, and its joint
//! eigenvectors are the irreducible characters scaled by `√(|C|/|G|)`.

use nalgebra::{DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycle::{CocycleError, Multiplier, RegularClassData};
use crate::rep::{max_abs, CMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BurnsideError {
    #[error("class matrices are not a commuting normal family (residual {residual:e})")]
    NotSimultaneouslyDiagonalizable { residual: f64 },
    #[error("a joint eigenspace of dimension {dim} could not be split after {attempts} attempts")]
    DegenerateSplit { dim: usize, attempts: usize },
    #[error("degree estimate {value} is not an integer")]
    DegreeNotIntegral { value: f64 },
    #[error("degree {degree} does not divide the group order {order}")]
    DegreeDoesNotDivideOrder { degree: usize, order: usize },
    #[error("sum of squared degrees is {sum}, expected {order}")]
    DegreeSumMismatch { sum: usize, order: usize },
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// Tunables for the floating-point pipeline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatOptions {
    /// Relative gap below which eigenvalues are treated as one cluster.
    pub cluster_tol: f64,
    /// Residual allowed for commutation, normality and eigenvector checks.
    pub residual_tol: f64,
    pub seed: u64,
    pub max_retries: usize,
}

impl Default for FloatOptions {
    fn default() -> Self {
        Self {
            cluster_tol: 1e-8,
            residual_tol: 1e-8,
            seed: 0,
            max_retries: 8,
        }
    }
}

/// One row of a [`FloatCharacterTable`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FloatIrrep {
    pub degree: usize,
    /// `χ(c₀)` for each α-regular class representative.
    pub chars: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FloatCharacterTable {
    pub order: usize,
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub irreps: Vec<FloatIrrep>,
    /// Largest `‖M_A v − λ v‖` over all recovered eigenvectors.
    pub max_residual: f64,
}

impl FloatCharacterTable {
    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    /// `max |(χ_i, χ_j) − δ_ij|` using `(φ,ψ) = |G|⁻¹ Σ_C |C| φ(c₀) conj(ψ(c₀))`.
    pub fn row_orthonormality_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.irreps.iter().enumerate() {
            for (j, b) in self.irreps.iter().enumerate() {
                let ip: Complex64 = a
                    .chars
                    .iter()
                    .zip(&b.chars)
                    .zip(&self.class_sizes)
                    .map(|((x, y), &s)| x * y.conj() * s as f64)
                    .sum::<Complex64>()
                    / self.order as f64;
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - target).norm());
            }
        }
        worst
    }

    /// `max |Σ_i χ_i(c) conj(χ_i(c')) − δ_{cc'} |G|/|C||`.
    pub fn column_orthogonality_error(&self) -> f64 {
        let m = self.class_reps.len();
        let mut worst = 0.0f64;
        for c in 0..m {
            for c2 in 0..m {
                let s: Complex64 = self
                    .irreps
                    .iter()
                    .map(|r| r.chars[c] * r.chars[c2].conj())
                    .sum();
                let target = if c == c2 {
                    self.order as f64 / self.class_sizes[c] as f64
                } else {
                    0.0
                };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }
}

/// Builds `M_A` for every α-regular class `A`, in class order.
pub fn build_class_matrices(mult: &Multiplier, rcd: &RegularClassData) -> Vec<CMatrix> {
    let grp = mult.group();
    let m = rcd.len();
    let modn = mult.root_order();
    let sizes = rcd.sizes();
    rcd.classes()
        .iter()
        .map(|class_a| {
            let mut out = CMatrix::zeros(m, m);
            for &a in &class_a.elements {
                let beta_a = rcd.beta_to(a);
                for (bi, class_b) in rcd.classes().iter().enumerate() {
                    for &b in &class_b.elements {
                        let ab = grp.mul(a, b);
                        let Some(ci) = rcd.class_index(ab) else {
                            continue;
                        };
                        let k =
                            (mult.exp(a, b) + rcd.beta_to(ab) + 2 * modn - beta_a - rcd.beta_to(b))
                                % modn;
                        out[(bi, ci)] += mult.root(k as i64);
                    }
                }
            }
            for bi in 0..m {
                for ci in 0..m {
                    out[(bi, ci)] /= ((sizes[bi] * sizes[ci]) as f64).sqrt();
                }
            }
            out
        })
        .collect()
}

/// Orthonormal joint eigenvectors of a commuting family of normal matrices.
///
/// Works on the Hermitian generators `M + M*` and `i(M* − M)`: a seeded
/// random real combination is diagonalized, and eigenvalue clusters are
/// refined against the individual generators until every joint eigenspace
/// is one-dimensional.
pub fn joint_eigenvectors(
    mats: &[CMatrix],
    opts: &FloatOptions,
) -> Result<Vec<DVector<Complex64>>, BurnsideError> {
    let Some(first) = mats.first() else {
        return Ok(Vec::new());
    };
    let m = first.nrows();
    let scale = mats.iter().map(max_abs).fold(1.0, f64::max);

    let mut residual = 0.0f64;
    for a in mats {
        let aa = a.adjoint();
        residual = residual.max(max_abs(&(a * &aa - &aa * a)));
        for b in mats {
            residual = residual.max(max_abs(&(a * b - b * a)));
        }
    }
    if residual > opts.residual_tol * scale * scale {
        return Err(BurnsideError::NotSimultaneouslyDiagonalizable { residual });
    }

    let i = Complex64::new(0.0, 1.0);
    let hermitian: Vec<CMatrix> = mats
        .iter()
        .flat_map(|a| {
            let aa = a.adjoint();
            [a + &aa, (&aa - a) * i]
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut last_dim = m;
    for _ in 0..opts.max_retries.max(1) {
        let coeffs: Vec<f64> = hermitian
            .iter()
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        let combo = hermitian
            .iter()
            .zip(&coeffs)
            .fold(CMatrix::zeros(m, m), |acc, (h, &c)| {
                acc + h * Complex64::new(c, 0.0)
            });
        let mut pending =
            split_hermitian(&CMatrix::identity(m, m), &combo, opts.cluster_tol * scale);
        let mut done: Vec<CMatrix> = Vec::new();
        while let Some(space) = pending.pop() {
            if space.ncols() == 1 {
                done.push(space);
                continue;
            }
            let parts = hermitian.iter().find_map(|h| {
                let parts = split_hermitian(&space, h, opts.cluster_tol * scale);
                (parts.len() > 1).then_some(parts)
            });
            match parts {
                Some(parts) => pending.extend(parts),
                None => {
                    last_dim = space.ncols();
                    done.clear();
                    break;
                }
            }
        }
        if done.len() == m {
            let vecs: Vec<DVector<Complex64>> =
                done.into_iter().map(|b| b.column(0).into_owned()).collect();
            let worst = eigen_residual(mats, &vecs);
            if worst > opts.residual_tol * scale {
                return Err(BurnsideError::NotSimultaneouslyDiagonalizable { residual: worst });
            }
            return Ok(vecs);
        }
    }
    Err(BurnsideError::DegenerateSplit {
        dim: last_dim,
        attempts: opts.max_retries.max(1),
    })
}

/// Splits the subspace spanned by the orthonormal columns of `basis` into
/// eigenspaces of the Hermitian `h` restricted to it.
fn split_hermitian(basis: &CMatrix, h: &CMatrix, gap: f64) -> Vec<CMatrix> {
    let restricted = basis.adjoint() * h * basis;
    // Symmetrize against round-off before the Hermitian solver sees it.
    let restricted = (&restricted + restricted.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(restricted);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match clusters.last_mut() {
            Some(c) if eig.eigenvalues[k] - eig.eigenvalues[*c.last().unwrap()] <= gap => c.push(k),
            _ => clusters.push(vec![k]),
        }
    }
    clusters
        .into_iter()
        .map(|c| {
            let local = CMatrix::from_fn(eig.eigenvectors.nrows(), c.len(), |r, j| {
                eig.eigenvectors[(r, c[j])]
            });
            basis * local
        })
        .collect()
}

fn eigen_residual(mats: &[CMatrix], vecs: &[DVector<Complex64>]) -> f64 {
    let mut worst = 0.0f64;
    for v in vecs {
        for a in mats {
            let av = a * v;
            let lambda = v.dotc(&av);
            worst = worst.max((av - v * lambda).camax());
        }
    }
    worst
}

/// Converts unit joint eigenvectors into character values.
///
/// The phase is fixed so the identity-class component is real positive;
/// then `d = v⁽¹⁾√|G|` and `χ(c₀) = v⁽ⁱ⁾√(|G|/|C⁽ⁱ⁾|)`.
pub fn characters_from_eigenvectors(
    vecs: &[DVector<Complex64>],
    order: usize,
    rcd: &RegularClassData,
    tol: f64,
) -> Result<Vec<FloatIrrep>, BurnsideError> {
    let sizes = rcd.sizes();
    let g = order as f64;
    vecs.iter()
        .map(|v| {
            let v = v.normalize();
            let lead = v[0];
            if lead.norm() < 1e-12 {
                return Err(BurnsideError::DegreeNotIntegral { value: 0.0 });
            }
            let phase = lead.conj() / lead.norm();
            let v = v * phase;
            let value = v[0].re * g.sqrt();
            let degree = value.round();
            if (value - degree).abs() > tol.max(1e-6) || degree < 1.0 {
                return Err(BurnsideError::DegreeNotIntegral { value });
            }
            let degree = degree as usize;
            if !order.is_multiple_of(degree) {
                return Err(BurnsideError::DegreeDoesNotDivideOrder { degree, order });
            }
            let mut chars: Vec<Complex64> = v
                .iter()
                .zip(&sizes)
                .map(|(x, &s)| x * (g / s as f64).sqrt())
                .collect();
            chars[0] = Complex64::new(degree as f64, 0.0);
            Ok(FloatIrrep { degree, chars })
        })
        .collect()
}

/// Full pipeline: regular classes, class matrices, joint eigenvectors and
/// characters, sorted by degree and then by character values.
pub fn character_table_float(
    mult: &Multiplier,
    opts: &FloatOptions,
) -> Result<FloatCharacterTable, BurnsideError> {
    let rcd = mult.regular_class_data()?;
    let order = mult.group().order();
    let mats = build_class_matrices(mult, &rcd);
    let vecs = joint_eigenvectors(&mats, opts)?;
    let max_residual = eigen_residual(&mats, &vecs);
    let mut irreps = characters_from_eigenvectors(&vecs, order, &rcd, 1e-6)?;
    let sum: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
    if sum != order {
        return Err(BurnsideError::DegreeSumMismatch { sum, order });
    }
    irreps.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            let key = |r: &FloatIrrep| -> Vec<(i64, i64)> {
                r.chars
                    .iter()
                    .map(|c| ((-c.re * 1e6).round() as i64, (-c.im * 1e6).round() as i64))
                    .collect()
            };
            key(a).cmp(&key(b))
        })
    });
    Ok(FloatCharacterTable {
        order,
        class_reps: rcd.representatives(),
        class_sizes: rcd.sizes(),
        irreps,
        max_residual,
    })
}
