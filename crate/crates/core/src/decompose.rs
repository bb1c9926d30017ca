//! Decomposition of projective representations with the averaging operator
//! `⟨f⟩ = |G|⁻¹ Σ_g π(g)⁻¹ f π(g)`, and generation of complete irrep sets.

use std::sync::Arc;

use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burnside::FloatCharacterTable;
use crate::cocycle::{CocycleError, Multiplier};
use crate::dixon::{character_table_exact, DixonError, ExactCharacterTable};
use crate::rep::{is_scalar, max_abs, scalar_deviation, CMatrix, ProjectiveRep, RepError, Side};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecomposeError {
    #[error("averaged map is not scalar but its spectrum did not split (residual {residual:e})")]
    SplitFailed { residual: f64 },
    #[error("character row {row}: degree {expected} but multiplicity {found} in the regular representation")]
    MultiplicityMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("a degree-{degree} component matches no character row")]
    UnmatchedCharacter { degree: usize },
    #[error("representation is not faithful")]
    NotFaithful,
    #[error("found {found} irreducible representations, expected {expected}")]
    IncompleteSweep { found: usize, expected: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Dixon(#[from] DixonError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecomposeOptions {
    pub seed: u64,
    /// Tolerance for "is a multiple of the identity".
    pub scalar_tol: f64,
    /// Relative gap separating eigenvalue clusters of `⟨f⟩`.
    pub cluster_gap: f64,
    /// Random attempts before falling back to the basis sweep.
    pub max_retries: usize,
    /// Tolerance for character matching.
    pub match_tol: f64,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            scalar_tol: 1e-8,
            cluster_gap: 1e-6,
            max_retries: 4,
            match_tol: 1e-6,
        }
    }
}

impl DecomposeOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// `|G|⁻¹ Σ_g π(g)* f π(g)`.
pub fn average(rep: &ProjectiveRep, f: &CMatrix) -> CMatrix {
    let n = rep.matrices().len() as f64;
    let mut acc = CMatrix::zeros(rep.degree(), rep.degree());
    for m in rep.matrices() {
        acc += m.adjoint() * f * m;
    }
    acc / Complex64::new(n, 0.0)
}

/// `max_g ‖π(g) X − X π(g)‖` (entrywise max).
pub fn commutator_residual(rep: &ProjectiveRep, x: &CMatrix) -> f64 {
    rep.matrices()
        .iter()
        .map(|m| max_abs(&(m * x - x * m)))
        .fold(0.0, f64::max)
}

/// Random complex matrix with entries uniform in the unit square.
pub fn random_matrix(d: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn random_hermitian(d: usize, rng: &mut impl Rng) -> CMatrix {
    let f = random_matrix(d, rng);
    (&f + f.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Random unitary from the QR factorization of a random complex matrix.
pub fn random_unitary(d: usize, rng: &mut impl Rng) -> CMatrix {
    random_matrix(d, rng).qr().q()
}

/// The Hermitian basis `E_ii`, `E_ij + E_ji`, `i(E_ij − E_ji)` of `d×d` matrices.
pub fn hermitian_basis(d: usize) -> Vec<CMatrix> {
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mut out = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in a..d {
            let mut m = CMatrix::zeros(d, d);
            m[(a, b)] = one;
            m[(b, a)] = one;
            out.push(m);
            if a != b {
                let mut m = CMatrix::zeros(d, d);
                m[(a, b)] = i;
                m[(b, a)] = -i;
                out.push(m);
            }
        }
    }
    out
}

fn averaged_is_scalar(avg: &CMatrix, f: &CMatrix, tol: f64) -> bool {
    scalar_deviation(avg) <= tol * max_abs(f).max(1.0)
}

/// Irreducibility test: one seeded random map first, then the full
/// Hermitian basis sweep when that average came out scalar.
pub fn is_irreducible(rep: &ProjectiveRep, opts: &DecomposeOptions) -> bool {
    let d = rep.degree();
    if d == 1 {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let f = random_hermitian(d, &mut rng);
    if !averaged_is_scalar(&average(rep, &f), &f, opts.scalar_tol) {
        return false;
    }
    hermitian_basis(d)
        .iter()
        .all(|f| averaged_is_scalar(&average(rep, f), f, opts.scalar_tol))
}

/// An invariant subspace (orthonormal columns) and the restricted rep.
#[derive(Clone, Debug)]
pub struct Piece {
    pub basis: CMatrix,
    pub rep: ProjectiveRep,
}

/// Eigenspaces of a Hermitian matrix, clustered by relative gap.
pub fn hermitian_eigenspaces(h: &CMatrix, gap: f64) -> Vec<CMatrix> {
    let sym = (h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);
    let vals = &eig.eigenvalues;
    let scale = vals.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match clusters.last_mut() {
            Some(c) if vals[k] - vals[*c.last().unwrap()] <= gap * scale => c.push(k),
            _ => clusters.push(vec![k]),
        }
    }
    clusters
        .into_iter()
        .map(|c| CMatrix::from_fn(h.nrows(), c.len(), |r, j| eig.eigenvectors[(r, c[j])]))
        .collect()
}

fn pieces_from(
    rep: &ProjectiveRep,
    avg: &CMatrix,
    opts: &DecomposeOptions,
) -> Result<Option<Vec<Piece>>, DecomposeError> {
    let spaces = hermitian_eigenspaces(avg, opts.cluster_gap);
    if spaces.len() < 2 {
        return Ok(None);
    }
    spaces
        .into_iter()
        .map(|basis| {
            let sub = rep.restrict(&basis);
            sub.validate()?;
            Ok(Piece { basis, rep: sub })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// Splits `rep` once along the eigenspaces of an averaged Hermitian map.
/// Returns the input unchanged (with identity basis) when irreducible.
pub fn split_once(
    rep: &ProjectiveRep,
    opts: &DecomposeOptions,
) -> Result<Vec<Piece>, DecomposeError> {
    let d = rep.degree();
    let whole = || {
        vec![Piece {
            basis: CMatrix::identity(d, d),
            rep: rep.clone(),
        }]
    };
    if d == 1 {
        return Ok(whole());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.max_retries.max(1) {
        let f = random_hermitian(d, &mut rng);
        let avg = average(rep, &f);
        if averaged_is_scalar(&avg, &f, opts.scalar_tol) {
            continue;
        }
        if let Some(pieces) = pieces_from(rep, &avg, opts)? {
            return Ok(pieces);
        }
    }
    let mut worst = 0.0f64;
    for f in hermitian_basis(d) {
        let avg = average(rep, &f);
        if averaged_is_scalar(&avg, &f, opts.scalar_tol) {
            continue;
        }
        if let Some(pieces) = pieces_from(rep, &avg, opts)? {
            return Ok(pieces);
        }
        worst = worst.max(scalar_deviation(&avg));
    }
    if worst > 0.0 {
        return Err(DecomposeError::SplitFailed { residual: worst });
    }
    Ok(whole())
}

/// Recursively splits until every part is irreducible. Child nodes get
/// seeds drawn from their parent's generator, so results depend only on
/// the root seed.
pub fn decompose(
    rep: &ProjectiveRep,
    opts: &DecomposeOptions,
) -> Result<Vec<ProjectiveRep>, DecomposeError> {
    let mut out = Vec::new();
    decompose_into(rep, opts, &mut out)?;
    Ok(out)
}

fn decompose_into(
    rep: &ProjectiveRep,
    opts: &DecomposeOptions,
    out: &mut Vec<ProjectiveRep>,
) -> Result<(), DecomposeError> {
    let pieces = split_once(rep, opts)?;
    if pieces.len() == 1 {
        out.push(pieces.into_iter().next().expect("one piece").rep);
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37_79b9_7f4a_7c15);
    for piece in pieces {
        let child = DecomposeOptions {
            seed: rng.random(),
            ..*opts
        };
        decompose_into(&piece.rep, &child, out)?;
    }
    Ok(())
}

/// The `|G|` maps spanning the commutant of the left (right) regular rep.
///
/// Left: `L̃_h e_g = α(g,h⁻¹) e_{gh⁻¹}`. Right: `R̃_h e_g = α(g⁻¹,h⁻¹) e_{hg}`.
pub fn commutant_basis_regular(mult: &Multiplier, side: Side) -> Vec<CMatrix> {
    let grp = mult.group();
    let n = grp.order();
    (0..n)
        .map(|h| {
            let hi = grp.inv(h);
            let mut m = CMatrix::zeros(n, n);
            for g in 0..n {
                let (target, k) = match side {
                    Side::Left => (grp.mul(g, hi), mult.exp(g, hi)),
                    Side::Right => (grp.mul(h, g), mult.exp(grp.inv(g), hi)),
                };
                m[(target, g)] = mult.root(k as i64);
            }
            m
        })
        .collect()
}

/// Character rows to match decomposed pieces against, indexed by class.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterRows {
    pub class_reps: Vec<usize>,
    pub rows: Vec<Vec<Complex64>>,
    pub degrees: Vec<usize>,
}

impl From<&ExactCharacterTable> for CharacterRows {
    fn from(t: &ExactCharacterTable) -> Self {
        Self {
            class_reps: t.regular_class_reps.clone(),
            rows: t.complex_values(),
            degrees: t.irreps.iter().map(|r| r.degree as usize).collect(),
        }
    }
}

impl From<&FloatCharacterTable> for CharacterRows {
    fn from(t: &FloatCharacterTable) -> Self {
        Self {
            class_reps: t.class_reps.clone(),
            rows: t.irreps.iter().map(|r| r.chars.clone()).collect(),
            degrees: t.degrees(),
        }
    }
}

impl CharacterRows {
    /// Index of the row matching `rep`'s character on the class representatives.
    pub fn match_rep(&self, rep: &ProjectiveRep, tol: f64) -> Option<usize> {
        let vals: Vec<Complex64> = self
            .class_reps
            .iter()
            .map(|&c| rep.matrix(c).trace())
            .collect();
        self.rows
            .iter()
            .position(|row| row.iter().zip(&vals).all(|(a, b)| (a - b).norm() <= tol))
    }
}

/// One irreducible representation in an [`IrrepSet`].
#[derive(Clone, Debug)]
pub struct IrrepEntry {
    pub rep: ProjectiveRep,
    /// Multiplicity in the decomposed regular representation, if known.
    pub multiplicity: Option<usize>,
    /// Matched character-table row, if matched.
    pub row: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct IrrepSet {
    pub irreps: Vec<IrrepEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub index: usize,
    pub degree: usize,
    pub multiplicity: Option<usize>,
    pub character_row: Option<usize>,
}

impl IrrepSet {
    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(|e| e.rep.degree()).collect()
    }

    pub fn manifest(&self) -> Vec<ManifestEntry> {
        self.irreps
            .iter()
            .enumerate()
            .map(|(index, e)| ManifestEntry {
                index,
                degree: e.rep.degree(),
                multiplicity: e.multiplicity,
                character_row: e.row,
            })
            .collect()
    }

    /// Assigns character rows and orders the set by row.
    pub fn match_rows(&mut self, rows: &CharacterRows, tol: f64) -> Result<(), DecomposeError> {
        for e in &mut self.irreps {
            let row = rows
                .match_rep(&e.rep, tol)
                .ok_or(DecomposeError::UnmatchedCharacter {
                    degree: e.rep.degree(),
                })?;
            e.row = Some(row);
        }
        self.irreps.sort_by_key(|e| e.row);
        Ok(())
    }
}

/// All irreps from the left regular representation, split with a random
/// Hermitian element of its commutant and matched against the exact table.
pub fn all_irreps_regular(
    mult: Arc<Multiplier>,
    opts: &DecomposeOptions,
) -> Result<IrrepSet, DecomposeError> {
    let table = character_table_exact(&mult)?;
    all_irreps_regular_with(mult, &CharacterRows::from(&table), opts)
}

pub fn all_irreps_regular_with(
    mult: Arc<Multiplier>,
    rows: &CharacterRows,
    opts: &DecomposeOptions,
) -> Result<IrrepSet, DecomposeError> {
    let reg = ProjectiveRep::regular(mult.clone(), Side::Left);
    let basis = commutant_basis_regular(&mult, Side::Left);
    let n = reg.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let x = basis.iter().fold(CMatrix::zeros(n, n), |acc, b| {
        acc + b * Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    let h = &x + x.adjoint();

    let mut parts = Vec::new();
    for space in hermitian_eigenspaces(&h, opts.cluster_gap) {
        let sub = reg.restrict(&space);
        sub.validate()?;
        let child = DecomposeOptions {
            seed: rng.random(),
            ..*opts
        };
        if is_irreducible(&sub, &child) {
            parts.push(sub);
        } else {
            parts.extend(decompose(&sub, &child)?);
        }
    }

    let mut found: Vec<Option<(ProjectiveRep, usize)>> = vec![None; rows.rows.len()];
    for part in parts {
        let degree = part.degree();
        let row = rows
            .match_rep(&part, opts.match_tol)
            .ok_or(DecomposeError::UnmatchedCharacter { degree })?;
        match &mut found[row] {
            Some((_, count)) => *count += 1,
            slot @ None => *slot = Some((part, 1)),
        }
    }
    let mut irreps = Vec::with_capacity(found.len());
    for (row, slot) in found.into_iter().enumerate() {
        let expected = rows.degrees[row];
        let Some((rep, count)) = slot else {
            return Err(DecomposeError::MultiplicityMismatch {
                row,
                expected,
                found: 0,
            });
        };
        if count != expected || rep.degree() != expected {
            return Err(DecomposeError::MultiplicityMismatch {
                row,
                expected,
                found: count,
            });
        }
        irreps.push(IrrepEntry {
            rep,
            multiplicity: Some(count),
            row: Some(row),
        });
    }
    Ok(IrrepSet { irreps })
}

/// Full character of a representation, used as an equivalence key.
fn same_character(a: &ProjectiveRep, b: &ProjectiveRep, tol: f64) -> bool {
    a.degree() == b.degree()
        && a.matrices()
            .iter()
            .zip(b.matrices())
            .all(|(x, y)| (x.trace() - y.trace()).norm() <= tol)
}

fn push_new(set: &mut Vec<ProjectiveRep>, rep: ProjectiveRep, tol: f64) -> bool {
    if set.iter().any(|r| same_character(r, &rep, tol)) {
        false
    } else {
        set.push(rep);
        true
    }
}

/// Linear irreps of the group, generated from the faithful linear
/// representation `π ⊗ π*` by closing under tensoring with it.
pub fn linear_irreps_from(
    pi: &ProjectiveRep,
    opts: &DecomposeOptions,
) -> Result<Vec<ProjectiveRep>, DecomposeError> {
    let lin = pi.tensor(&pi.dual())?;
    let order = pi.group().order();
    let trivial = ProjectiveRep::new(
        lin.multiplier().clone(),
        vec![CMatrix::identity(1, 1); order],
    )?;
    let mut irreps = vec![trivial];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut next = 0;
    while next < irreps.len() && irreps.iter().map(|r| r.degree().pow(2)).sum::<usize>() < order {
        let prod = irreps[next].tensor(&lin)?;
        next += 1;
        let child = DecomposeOptions {
            seed: rng.random(),
            ..*opts
        };
        for part in decompose(&prod, &child)? {
            push_new(&mut irreps, part, opts.match_tol);
        }
    }
    Ok(irreps)
}

/// All projective irreps sharing `π`'s multiplier, from the components of
/// `π ⊗ ρ` over the linear irreps `ρ`.
pub fn all_irreps_iterative(
    pi: &ProjectiveRep,
    linear_irreps: &[ProjectiveRep],
    opts: &DecomposeOptions,
) -> Result<IrrepSet, DecomposeError> {
    if !pi.is_faithful() {
        return Err(DecomposeError::NotFaithful);
    }
    let mult = pi.multiplier().clone();
    let order = pi.group().order();
    let expected = mult.regular_class_data()?.len();
    let generated;
    let linear = if linear_irreps.is_empty() {
        generated = linear_irreps_from(pi, opts)?;
        &generated[..]
    } else {
        linear_irreps
    };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut found: Vec<ProjectiveRep> = Vec::new();
    for rho in linear {
        let prod = pi.tensor(rho)?;
        let child = DecomposeOptions {
            seed: rng.random(),
            ..*opts
        };
        for part in decompose(&prod, &child)? {
            let part = ProjectiveRep::with_tol(mult.clone(), part.matrices().to_vec(), part.tol())?;
            push_new(&mut found, part, opts.match_tol);
        }
        let sum: usize = found.iter().map(|r| r.degree().pow(2)).sum();
        if found.len() == expected && sum == order {
            break;
        }
    }
    let sum: usize = found.iter().map(|r| r.degree().pow(2)).sum();
    if found.len() != expected || sum != order {
        return Err(DecomposeError::IncompleteSweep {
            found: found.len(),
            expected,
        });
    }
    found.sort_by_key(|r| r.degree());
    Ok(IrrepSet {
        irreps: found
            .into_iter()
            .map(|rep| IrrepEntry {
                rep,
                multiplicity: None,
                row: None,
            })
            .collect(),
    })
}

/// `true` when no two representations share a character.
pub fn pairwise_inequivalent(reps: &[ProjectiveRep], tol: f64) -> bool {
    reps.iter()
        .enumerate()
        .all(|(i, a)| reps[..i].iter().all(|b| !same_character(a, b, tol)))
}

/// Worst scalar deviation of `⟨f⟩` over the Hermitian basis; zero for
/// irreducible representations.
pub fn max_basis_deviation(rep: &ProjectiveRep) -> f64 {
    hermitian_basis(rep.degree())
        .iter()
        .map(|f| scalar_deviation(&average(rep, f)))
        .fold(0.0, f64::max)
}

/// Is `x` a multiple of the identity within `tol`?
pub fn is_multiple_of_identity(x: &CMatrix, tol: f64) -> bool {
    is_scalar(x, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::max_abs_diff;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn pauli_pair() -> ProjectiveRep {
        let p = catalog::pauli_rep();
        ProjectiveRep::direct_sum(&[&p, &p]).unwrap()
    }

    fn z2_trivial_plus_sign() -> ProjectiveRep {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(2))));
        let triv = catalog::one_dim_rep(m.clone(), &[0, 0], 2);
        let sign = catalog::one_dim_rep(m, &[0, 1], 2);
        ProjectiveRep::direct_sum(&[&triv, &sign]).unwrap()
    }

    #[test]
    fn average_of_identity() {
        let r = pauli_pair();
        let id = CMatrix::identity(4, 4);
        assert!(max_abs_diff(&average(&r, &id), &id) < 1e-14);
    }

    #[test]
    fn average_on_irreducible_is_trace_over_degree() {
        let r = catalog::pauli_rep();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random_matrix(2, &mut rng);
        let expected = CMatrix::identity(2, 2) * (f.trace() / c(2.0));
        assert!(max_abs_diff(&average(&r, &f), &expected) < 1e-14);
    }

    #[test]
    fn block_projector_is_fixed() {
        let r = pauli_pair();
        let mut f = CMatrix::zeros(4, 4);
        f[(0, 0)] = c(1.0);
        f[(1, 1)] = c(1.0);
        let avg = average(&r, &f);
        assert!(max_abs_diff(&avg, &f) < 1e-14);
        assert!(commutator_residual(&r, &avg) < 1e-14);
    }

    #[test]
    fn irreducibility() {
        let opts = DecomposeOptions::default();
        assert!(is_irreducible(&catalog::pauli_rep(), &opts));
        assert!(!is_irreducible(&pauli_pair(), &opts));
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(3))));
        assert!(is_irreducible(
            &catalog::one_dim_rep(m, &[0, 1, 2], 3),
            &opts
        ));
    }

    #[test]
    fn split_pauli_pair() {
        let pieces = split_once(&pauli_pair(), &DecomposeOptions::default()).unwrap();
        assert_eq!(
            pieces.iter().map(|p| p.rep.degree()).collect::<Vec<_>>(),
            vec![2, 2]
        );
        let irr = split_once(&catalog::pauli_rep(), &DecomposeOptions::default()).unwrap();
        assert_eq!(irr.len(), 1);
    }

    #[test]
    fn split_trivial_plus_sign() {
        let pieces = split_once(&z2_trivial_plus_sign(), &DecomposeOptions::default()).unwrap();
        let mut chars: Vec<Vec<i64>> = pieces
            .iter()
            .map(|p| {
                p.rep
                    .character()
                    .iter()
                    .map(|x| x.re.round() as i64)
                    .collect()
            })
            .collect();
        chars.sort();
        assert_eq!(chars, vec![vec![1, -1], vec![1, 1]]);
    }

    #[test]
    fn pauli_regular_decomposes_into_two_copies() {
        let m = Arc::new(catalog::pauli_multiplier());
        let reg = ProjectiveRep::regular(m, Side::Left);
        let parts = decompose(&reg, &DecomposeOptions::default()).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(p.degree(), 2);
            assert!(same_character(p, &catalog::pauli_rep(), 1e-9));
        }
    }

    #[test]
    fn trivial_group_regular() {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(1))));
        let parts = decompose(
            &ProjectiveRep::regular(m.clone(), Side::Left),
            &DecomposeOptions::default(),
        )
        .unwrap();
        assert_eq!(parts.len(), 1);
        let set = all_irreps_regular(m.clone(), &DecomposeOptions::default()).unwrap();
        assert_eq!(set.degrees(), vec![1]);
        let triv = ProjectiveRep::trivial(m).unwrap();
        let it = all_irreps_iterative(&triv, &[], &DecomposeOptions::default()).unwrap();
        assert_eq!(it.degrees(), vec![1]);
    }

    #[test]
    fn commutant_commutes() {
        for mult in [
            catalog::pauli_multiplier(),
            catalog::heisenberg_multiplier(3),
            Multiplier::trivial(Arc::new(catalog::symmetric(3))),
        ] {
            let mult = Arc::new(mult);
            for side in [Side::Left, Side::Right] {
                let reg = ProjectiveRep::regular(mult.clone(), side);
                let basis = commutant_basis_regular(&mult, side);
                assert_eq!(
                    max_abs_diff(
                        &basis[0],
                        &CMatrix::identity(basis[0].nrows(), basis[0].nrows())
                    ),
                    0.0
                );
                for b in &basis {
                    assert!(commutator_residual(&reg, b) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn regular_strategy() {
        let opts = DecomposeOptions::default();
        let set = all_irreps_regular(Arc::new(catalog::pauli_multiplier()), &opts).unwrap();
        assert_eq!(set.degrees(), vec![2]);
        assert_eq!(set.irreps[0].multiplicity, Some(2));

        let s3 = Arc::new(Multiplier::trivial(Arc::new(catalog::symmetric(3))));
        let set = all_irreps_regular(s3, &opts).unwrap();
        assert_eq!(set.degrees(), vec![1, 1, 2]);
        let mults: Vec<_> = set.irreps.iter().map(|e| e.multiplicity.unwrap()).collect();
        assert_eq!(mults, vec![1, 1, 2]);

        let z2 = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(2))));
        let set = all_irreps_regular(z2, &opts).unwrap();
        assert_eq!(set.degrees(), vec![1, 1]);
    }

    #[test]
    fn iterative_pauli_with_klein_linear_irreps() {
        let pi = catalog::pauli_rep();
        let lin_mult = Arc::new(Multiplier::trivial(pi.multiplier().group().clone()));
        let linear: Vec<ProjectiveRep> = catalog::homomorphisms_to_cyclic(pi.group(), 2)
            .iter()
            .map(|f| catalog::one_dim_rep(lin_mult.clone(), f, 2))
            .collect();
        assert_eq!(linear.len(), 4);
        let set = all_irreps_iterative(&pi, &linear, &DecomposeOptions::default()).unwrap();
        assert_eq!(set.degrees(), vec![2]);
    }

    #[test]
    fn iterative_matches_regular_for_heisenberg() {
        let pi = catalog::heisenberg_rep(3);
        let opts = DecomposeOptions::default();
        let it = all_irreps_iterative(&pi, &[], &opts).unwrap();
        let reg = all_irreps_regular(pi.multiplier().clone(), &opts).unwrap();
        assert_eq!(it.degrees(), reg.degrees());
    }

    #[test]
    fn iterative_from_regular_rep() {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::symmetric(3))));
        let reg = ProjectiveRep::regular(m.clone(), Side::Left);
        let opts = DecomposeOptions::default();
        let mut it = all_irreps_iterative(&reg, &[], &opts).unwrap();
        let table = character_table_exact(&m).unwrap();
        it.match_rows(&CharacterRows::from(&table), 1e-6).unwrap();
        assert_eq!(it.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn non_faithful_rejected() {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::cyclic(2))));
        let triv = ProjectiveRep::trivial(m).unwrap();
        assert!(matches!(
            all_irreps_iterative(&triv, &[], &DecomposeOptions::default()),
            Err(DecomposeError::NotFaithful)
        ));
    }

    #[test]
    fn deterministic_given_seed() {
        let m = Arc::new(Multiplier::trivial(Arc::new(catalog::symmetric(3))));
        let reg = ProjectiveRep::regular(m, Side::Left);
        let a = decompose(&reg, &DecomposeOptions::with_seed(7)).unwrap();
        let b = decompose(&reg, &DecomposeOptions::with_seed(7)).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.matrices(), y.matrices());
        }
    }
}
