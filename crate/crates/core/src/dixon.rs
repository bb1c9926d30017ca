//! Exact character tables over `Z_p`.
//!
//! A primitive `e`-th root of unity `z ∈ Z_p` stands in for `ζ = exp(2πi/e)`.
//! The class matrices are built with integer arithmetic, diagonalized by
//! splitting eigenspaces, normalized with the orthogonality relation and
//! finally turned back into eigenvalue multiplicities with a small
//! discrete Fourier transform.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycle::{root_of_unity, CocycleError, Multiplier, RegularClassData};
use crate::modp::{is_prime, mod_inv, mod_pow, multiplicative_order, primitive_root, ZpMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DixonError {
    #[error("root order {root_order} does not divide the exponent {e}")]
    RootOrderMismatch { root_order: u64, e: u64 },
    #[error("joint eigenspace of dimension {dim} remains after all class matrices")]
    IncompleteSplit { dim: usize },
    #[error("joint eigenvector has zero identity component")]
    ZeroIdentityComponent,
    #[error("no degree d solves N d^2 = |G| mod p (N = {norm})")]
    NoDegreeSolution { norm: u64 },
    #[error("inverse of regular element {element} is not regular")]
    InverseClassNotRegular { element: usize },
    #[error("multiplicities for element {element} sum to {sum}, expected degree {degree}")]
    MultiplicityOverflow {
        element: usize,
        sum: u64,
        degree: u64,
    },
    #[error("no h solves n h = A mod e for element {element}")]
    NoValidH { element: usize },
    #[error("sum of squared degrees is {sum}, expected {order}")]
    DegreeSumMismatch { sum: u64, order: u64 },
    #[error("{0} is not an admissible prime for this group and exponent")]
    InadmissiblePrime(u64),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// The prime `p`, the exponent `e` and a primitive `e`-th root `z` mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeContext {
    pub e: u64,
    pub p: u64,
    pub z: u64,
    /// `z^k mod p` for `0 ≤ k < e`.
    pub root_pow: Vec<u64>,
}

impl PrimeContext {
    /// Context for a given prime; `None` unless `e | p-1` and `p² > 4|G|`.
    pub fn for_prime(group_order: usize, e: u64, p: u64) -> Option<Self> {
        if e == 0
            || !is_prime(p)
            || !(p - 1).is_multiple_of(e)
            || (p as u128).pow(2) <= 4 * group_order as u128
        {
            return None;
        }
        let w = primitive_root(p);
        let z = mod_pow(w, (p - 1) / e, p);
        debug_assert_eq!(multiplicative_order(z, p), Some(e));
        let root_pow = (0..e).scan(1u64, |acc, _| {
            let cur = *acc;
            *acc = *acc * z % p;
            Some(cur)
        });
        Some(Self {
            e,
            p,
            z,
            root_pow: root_pow.collect(),
        })
    }

    /// `z^k` for any integer `k`.
    pub fn zpow(&self, k: i64) -> u64 {
        self.root_pow[k.rem_euclid(self.e as i64) as usize]
    }

    pub fn inv(&self, x: u64) -> u64 {
        mod_inv(x, self.p).expect("nonzero residue")
    }

    /// `θ(ζ_N^k) = z^(k e / N)`.
    pub fn theta_root(&self, k: u64, root_order: u64) -> Result<u64, DixonError> {
        let ke = k as u128 * self.e as u128;
        if !ke.is_multiple_of(root_order as u128) {
            return Err(DixonError::RootOrderMismatch {
                root_order,
                e: self.e,
            });
        }
        Ok(self.zpow(((ke / root_order as u128) % self.e as u128) as i64))
    }

    /// `θ(Σ_k m_k ζ^k)` for a multiplicity vector over `ζ = ζ_e`.
    pub fn theta_multiplicities(&self, mults: &[u64]) -> u64 {
        mults.iter().enumerate().fold(0, |acc, (k, &m)| {
            (acc + m % self.p * self.zpow(k as i64)) % self.p
        })
    }

    /// `θ` of the complex conjugate of `Σ_k m_k ζ^k`.
    pub fn theta_conj_multiplicities(&self, mults: &[u64]) -> u64 {
        mults.iter().enumerate().fold(0, |acc, (k, &m)| {
            (acc + m % self.p * self.zpow(-(k as i64))) % self.p
        })
    }
}

/// Smallest admissible prime: `p > 2√|G|` and `e | p-1`.
pub fn choose_prime(group_order: usize, e: u64) -> PrimeContext {
    choose_prime_after(group_order, e, 1)
}

/// Smallest admissible prime strictly greater than `after`.
pub fn choose_prime_after(group_order: usize, e: u64, after: u64) -> PrimeContext {
    assert!(e >= 1, "exponent must be positive");
    // Candidates are 1 + k e; start at the first one above `after`.
    let mut k = after / e + 1;
    loop {
        if let Some(ctx) = PrimeContext::for_prime(group_order, e, 1 + k * e) {
            return ctx;
        }
        k += 1;
    }
}

/// `θ(ζ_N^k)`; free-function form of [`PrimeContext::theta_root`].
pub fn theta_root(ctx: &PrimeContext, k: u64, root_order: u64) -> Result<u64, DixonError> {
    ctx.theta_root(k, root_order)
}

/// `(M̃_A)_{BC} = Σ_{a∈A, ab₀∈C} θ(β(c₀,ab₀)) θ(β(a₀,a))⁻¹ θ(α(a,b₀))`.
pub fn build_class_matrices_modp(
    mult: &Multiplier,
    rcd: &RegularClassData,
    ctx: &PrimeContext,
) -> Result<Vec<ZpMatrix>, DixonError> {
    let grp = mult.group();
    let m = rcd.len();
    let n = mult.root_order();
    let reps = rcd.representatives();
    let mut out = Vec::with_capacity(m);
    for class_a in rcd.classes() {
        let mut mat = ZpMatrix::zeros(m, m, ctx.p);
        for &a in &class_a.elements {
            for (bi, &b0) in reps.iter().enumerate() {
                let ab = grp.mul(a, b0);
                let Some(ci) = rcd.class_index(ab) else {
                    continue;
                };
                let k = (rcd.beta_to(ab) + mult.exp(a, b0) + n - rcd.beta_to(a)) % n;
                mat.add_assign_at(bi, ci, ctx.theta_root(k, n)?);
            }
        }
        out.push(mat);
    }
    Ok(out)
}

/// Joint eigenvectors of commuting, jointly diagonalizable matrices over
/// `Z_p`, each scaled so its first component is 1.
pub fn joint_eigenspaces_modp(mats: &[ZpMatrix], p: u64) -> Result<Vec<Vec<u64>>, DixonError> {
    let Some(first) = mats.first() else {
        return Ok(Vec::new());
    };
    let m = first.nrows();
    // Subspaces are stored as lists of basis vectors.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..m)
        .map(|i| (0..m).map(|j| u64::from(i == j)).collect())
        .collect()];
    for mat in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let roots = crate::modp::poly_roots(&mat.charpoly(), p);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let k = space.len();
            let mut pieces = Vec::new();
            for &lambda in &roots {
                // Coordinates x with (M - λ) B x = 0.
                let mut shifted = ZpMatrix::zeros(m, k, p);
                for (c, v) in space.iter().enumerate() {
                    let mv = mat.mul_vec(v);
                    for r in 0..m {
                        shifted.set(r, c, (mv[r] + p - lambda * v[r] % p) % p);
                    }
                }
                let coords = shifted.nullspace();
                if coords.is_empty() {
                    continue;
                }
                let basis: Vec<Vec<u64>> = coords
                    .iter()
                    .map(|x| {
                        (0..m)
                            .map(|r| {
                                x.iter()
                                    .zip(&space)
                                    .fold(0, |acc, (&xc, v)| (acc + xc * v[r]) % p)
                            })
                            .collect()
                    })
                    .collect();
                pieces.push(basis);
            }
            if pieces.iter().map(Vec::len).sum::<usize>() != k {
                return Err(DixonError::IncompleteSplit { dim: k });
            }
            next.extend(pieces);
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(DixonError::IncompleteSplit { dim: s.len() });
    }
    spaces
        .into_iter()
        .map(|mut s| {
            let v = s.pop().expect("one vector");
            let inv = mod_inv(v[0], p).ok_or(DixonError::ZeroIdentityComponent)?;
            Ok(v.iter().map(|&x| x * inv % p).collect())
        })
        .collect()
}

/// Degree `d` and `θ(χ(c₀⁽ⁱ⁾)) = d ṽ⁽ⁱ⁾` from an eigenvector with `ṽ⁽¹⁾ = 1`.
pub fn normalize_eigenvector(
    v: &[u64],
    mult: &Multiplier,
    rcd: &RegularClassData,
    ctx: &PrimeContext,
) -> Result<(u64, Vec<u64>), DixonError> {
    let grp = mult.group();
    let p = ctx.p;
    let n = mult.root_order();
    let sizes = rcd.sizes();
    let mut norm = 0u64;
    for (i, &c0) in rcd.representatives().iter().enumerate() {
        let ci = grp.inv(c0);
        let j = rcd
            .class_index(ci)
            .ok_or(DixonError::InverseClassNotRegular { element: c0 })?;
        let k = (rcd.beta_to(ci) + n - mult.exp(c0, ci)) % n;
        let vbar = v[j] * ctx.theta_root(k, n)? % p;
        norm = (norm + sizes[i] as u64 % p * v[i] % p * vbar) % p;
    }
    let order = grp.order() as u64;
    let bound = (order as f64).sqrt().floor() as u64;
    let bound = (bound.saturating_sub(1)..=bound + 1)
        .filter(|d| d * d <= order)
        .max()
        .unwrap_or(0);
    let d = (1..=bound)
        .find(|&d| norm * (d * d % p) % p == order % p)
        .ok_or(DixonError::NoDegreeSolution { norm })?;
    Ok((d, v.iter().map(|&x| x * d % p).collect()))
}

/// `θ(χ(x))` for any element, by transport from the class representative.
pub fn theta_char_at(
    x: usize,
    theta_chars: &[u64],
    mult: &Multiplier,
    rcd: &RegularClassData,
    ctx: &PrimeContext,
) -> Result<u64, DixonError> {
    match rcd.class_index(x) {
        Some(c) => Ok(ctx.theta_root(rcd.beta_to(x), mult.root_order())? * theta_chars[c] % ctx.p),
        None => Ok(0),
    }
}

/// Eigenvalue multiplicities of `π(g)` over `ζ^k`, `0 ≤ k < e`.
///
/// `theta_powers[j] = θ(χ(gʲ))` for `0 ≤ j < n`. With
/// `A = ∏_{i<n} α(gⁱ,g) = ζ^{nh}` the eigenvalues are `ζ^{h+ke/n}`, and
/// since `tr π(g)ʲ = ∏_{i<j} α(gⁱ,g) χ(gʲ)` a size-`n` transform suffices.
pub fn eigenvalue_multiplicities(
    theta_powers: &[u64],
    g: usize,
    degree: u64,
    mult: &Multiplier,
    ctx: &PrimeContext,
) -> Result<Vec<u64>, DixonError> {
    let grp = mult.group();
    let p = ctx.p;
    let e = ctx.e;
    let nn = mult.root_order();
    let n = grp.element_order(g) as u64;
    assert_eq!(theta_powers.len() as u64, n, "one value per power of g");
    if !e.is_multiple_of(n) {
        return Err(DixonError::NoValidH { element: g });
    }
    let a_exp = mult.power_product_exp(g) as u128 * e as u128;
    if !a_exp.is_multiple_of(nn as u128) {
        return Err(DixonError::NoValidH { element: g });
    }
    let target = ((a_exp / nn as u128) % e as u128) as u64;
    let h = (0..e)
        .find(|&h| n * h % e == target)
        .ok_or(DixonError::NoValidH { element: g })?;

    // traces[j] = θ(tr π(g)ʲ)
    let mut traces = Vec::with_capacity(n as usize);
    let mut prod = 1u64;
    let mut gj = grp.identity();
    for &tc in theta_powers {
        traces.push(prod * tc % p);
        // advance: prod *= θα(gʲ, g) for the next power (skipping j = 0)
        if gj != grp.identity() {
            prod = prod * ctx.theta_root(mult.exp(gj, g), nn)? % p;
        }
        gj = grp.mul(gj, g);
    }

    let step = (e / n) as i64;
    let n_inv = ctx.inv(n % p);
    let mut out = vec![0u64; e as usize];
    let mut sum = 0u64;
    for k in 0..n as i64 {
        let mut acc = 0u64;
        for (j, &t) in traces.iter().enumerate() {
            let j = j as i64;
            acc = (acc + ctx.zpow(-j * k * step - j * h as i64) * t) % p;
        }
        let mk = acc * n_inv % p;
        if mk > degree {
            return Err(DixonError::MultiplicityOverflow {
                element: g,
                sum: mk,
                degree,
            });
        }
        sum += mk;
        out[((h as i64 + k * step) % e as i64) as usize] = mk;
    }
    if sum != degree {
        return Err(DixonError::MultiplicityOverflow {
            element: g,
            sum,
            degree,
        });
    }
    Ok(out)
}

/// Character value at one regular class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassChar {
    pub class: usize,
    pub multiplicities: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactIrrep {
    pub degree: u64,
    pub chars: Vec<ClassChar>,
    /// `θ(χ(c₀))` per class.
    #[serde(skip)]
    pub theta: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactCharacterTable {
    pub e: u64,
    pub p: u64,
    pub z: u64,
    pub regular_class_reps: Vec<usize>,
    pub irreps: Vec<ExactIrrep>,
    #[serde(skip)]
    pub class_sizes: Vec<usize>,
    #[serde(skip)]
    pub order: usize,
}

impl ExactCharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    pub fn context(&self) -> PrimeContext {
        PrimeContext::for_prime(self.order, self.e, self.p).expect("table prime is admissible")
    }

    /// Multiplicity vectors only, for comparing tables across primes.
    pub fn multiplicity_rows(&self) -> Vec<(u64, Vec<Vec<u64>>)> {
        self.irreps
            .iter()
            .map(|r| {
                (
                    r.degree,
                    r.chars.iter().map(|c| c.multiplicities.clone()).collect(),
                )
            })
            .collect()
    }

    /// `χ(c₀) = Σ_k m_k exp(2πik/e)` for each irrep and class.
    pub fn complex_values(&self) -> Vec<Vec<Complex64>> {
        self.irreps
            .iter()
            .map(|r| {
                r.chars
                    .iter()
                    .map(|c| {
                        c.multiplicities
                            .iter()
                            .enumerate()
                            .map(|(k, &m)| root_of_unity(k as i64, self.e) * m as f64)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Characters on every group element, transported from the representatives.
    pub fn values_on_elements(
        &self,
        mult: &Multiplier,
        rcd: &RegularClassData,
    ) -> Vec<Vec<Complex64>> {
        let vals = self.complex_values();
        let n = mult.group().order();
        vals.iter()
            .map(|row| {
                (0..n)
                    .map(|x| match rcd.class_index(x) {
                        Some(c) => mult.root(rcd.beta_to(x) as i64) * row[c],
                        None => Complex64::new(0.0, 0.0),
                    })
                    .collect()
            })
            .collect()
    }

    /// Number of `(j,k)` pairs violating
    /// `Σ_i |C⁽ⁱ⁾| θ(χ_j) θ(χ̄_k) ≡ |G| δ_jk (mod p)`.
    pub fn orthogonality_violations_modp(&self) -> usize {
        let ctx = self.context();
        let p = self.p;
        let mut bad = 0;
        for (j, a) in self.irreps.iter().enumerate() {
            for (k, b) in self.irreps.iter().enumerate() {
                let s = a.chars.iter().zip(&b.chars).zip(&self.class_sizes).fold(
                    0u64,
                    |acc, ((x, y), &size)| {
                        let tx = ctx.theta_multiplicities(&x.multiplicities);
                        let ty = ctx.theta_conj_multiplicities(&y.multiplicities);
                        (acc + size as u64 % p * tx % p * ty) % p
                    },
                );
                let target = if j == k { self.order as u64 % p } else { 0 };
                if s != target {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Number of (irrep, class) pairs where the multiplicities disagree with
    /// the stored `θ(χ)` values.
    pub fn theta_consistency_violations(&self) -> usize {
        let ctx = self.context();
        self.irreps
            .iter()
            .flat_map(|r| r.chars.iter().zip(&r.theta))
            .filter(|(c, &t)| ctx.theta_multiplicities(&c.multiplicities) != t)
            .count()
    }
}

/// Exact table with the smallest admissible prime.
pub fn character_table_exact(mult: &Multiplier) -> Result<ExactCharacterTable, DixonError> {
    let e = mult.exponent();
    let ctx = choose_prime(mult.group().order(), e);
    character_table_exact_with(mult, &ctx)
}

/// Exact table for a specific prime, which must be admissible.
pub fn character_table_exact_with_prime(
    mult: &Multiplier,
    p: u64,
) -> Result<ExactCharacterTable, DixonError> {
    let e = mult.exponent();
    let ctx = PrimeContext::for_prime(mult.group().order(), e, p)
        .ok_or(DixonError::InadmissiblePrime(p))?;
    character_table_exact_with(mult, &ctx)
}

pub fn character_table_exact_with(
    mult: &Multiplier,
    ctx: &PrimeContext,
) -> Result<ExactCharacterTable, DixonError> {
    let grp = mult.group();
    let order = grp.order();
    let rcd = mult.regular_class_data()?;
    let mats = build_class_matrices_modp(mult, &rcd, ctx)?;
    let vecs = joint_eigenspaces_modp(&mats, ctx.p)?;
    let reps = rcd.representatives();

    let mut irreps = Vec::with_capacity(vecs.len());
    for v in &vecs {
        let (d, theta) = normalize_eigenvector(v, mult, &rcd, ctx)?;
        let mut chars = Vec::with_capacity(reps.len());
        for (ci, &c0) in reps.iter().enumerate() {
            let n = grp.element_order(c0);
            let mut powers = Vec::with_capacity(n);
            let mut x = grp.identity();
            for _ in 0..n {
                powers.push(theta_char_at(x, &theta, mult, &rcd, ctx)?);
                x = grp.mul(x, c0);
            }
            chars.push(ClassChar {
                class: ci,
                multiplicities: eigenvalue_multiplicities(&powers, c0, d, mult, ctx)?,
            });
        }
        irreps.push(ExactIrrep {
            degree: d,
            chars,
            theta,
        });
    }
    let sum: u64 = irreps.iter().map(|r| r.degree * r.degree).sum();
    if sum != order as u64 {
        return Err(DixonError::DegreeSumMismatch {
            sum,
            order: order as u64,
        });
    }
    irreps.sort_by(|a, b| {
        // Larger multiplicity vectors first, so the trivial character leads.
        a.degree.cmp(&b.degree).then_with(|| {
            b.chars
                .iter()
                .map(|c| &c.multiplicities)
                .cmp(a.chars.iter().map(|c| &c.multiplicities))
        })
    });
    Ok(ExactCharacterTable {
        e: ctx.e,
        p: ctx.p,
        z: ctx.z,
        regular_class_reps: reps,
        irreps,
        class_sizes: rcd.sizes(),
        order,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;

    fn trivial(g: crate::group::FiniteGroup) -> Multiplier {
        Multiplier::trivial(Arc::new(g))
    }

    #[test]
    fn prime_choice_examples() {
        for (order, e, p, z) in [(4, 4, 5, 2), (3, 3, 7, 2), (6, 6, 7, 3), (1, 1, 3, 1)] {
            let ctx = choose_prime(order, e);
            assert_eq!((ctx.p, ctx.z), (p, z), "|G|={order}, e={e}");
            assert_eq!(ctx.root_pow.len() as u64, e);
        }
    }

    #[test]
    fn next_primes() {
        let a = choose_prime(4, 4);
        let b = choose_prime_after(4, 4, a.p);
        let c = choose_prime_after(4, 4, b.p);
        assert_eq!((a.p, b.p, c.p), (5, 13, 17));
    }

    #[test]
    fn theta_examples() {
        let ctx = choose_prime(4, 4);
        assert_eq!(ctx.theta_root(0, 2).unwrap(), 1);
        assert_eq!(ctx.theta_root(1, 2).unwrap(), 4);
        let ctx3 = choose_prime(3, 3);
        assert_eq!(ctx3.theta_root(2, 3).unwrap(), 4);
        assert!(matches!(
            ctx3.theta_root(1, 2),
            Err(DixonError::RootOrderMismatch { .. })
        ));
        // A non-reduced root order is fine when the value is an e-th root.
        assert_eq!(ctx.theta_root(2, 8).unwrap(), 2);
    }

    #[test]
    fn z3_class_matrices_and_vectors() {
        let m = trivial(catalog::cyclic(3));
        let rcd = m.regular_class_data().unwrap();
        let ctx = choose_prime(3, m.exponent());
        assert_eq!((ctx.p, ctx.z), (7, 2));
        let mats = build_class_matrices_modp(&m, &rcd, &ctx).unwrap();
        for (a, mat) in mats.iter().enumerate() {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(mat.get(b, c), u64::from((a + b) % 3 == c));
                }
            }
        }
        let mut vecs = joint_eigenspaces_modp(&mats, ctx.p).unwrap();
        vecs.sort();
        assert_eq!(vecs, vec![vec![1, 1, 1], vec![1, 2, 4], vec![1, 4, 2]]);
        let (d, chi) = normalize_eigenvector(&[1, 1, 1], &m, &rcd, &ctx).unwrap();
        assert_eq!((d, chi), (1, vec![1, 1, 1]));
    }

    #[test]
    fn z3_multiplicities() {
        let m = trivial(catalog::cyclic(3));
        let ctx = choose_prime(3, 3);
        assert_eq!(
            eigenvalue_multiplicities(&[1, 1, 1], 1, 1, &m, &ctx).unwrap(),
            vec![1, 0, 0]
        );
        assert_eq!(
            eigenvalue_multiplicities(&[1, 2, 4], 1, 1, &m, &ctx).unwrap(),
            vec![0, 1, 0]
        );
        assert_eq!(
            eigenvalue_multiplicities(&[1], 0, 1, &m, &ctx).unwrap(),
            vec![1, 0, 0]
        );
    }

    #[test]
    fn z2_joint_vectors() {
        let m = trivial(catalog::cyclic(2));
        let rcd = m.regular_class_data().unwrap();
        let ctx = PrimeContext::for_prime(2, 2, 5).unwrap();
        let mats = build_class_matrices_modp(&m, &rcd, &ctx).unwrap();
        let mut vecs = joint_eigenspaces_modp(&mats, 5).unwrap();
        vecs.sort();
        assert_eq!(vecs, vec![vec![1, 1], vec![1, 4]]);
    }

    #[test]
    fn z2_table() {
        let t = character_table_exact(&trivial(catalog::cyclic(2))).unwrap();
        assert_eq!(t.degrees(), vec![1, 1]);
        assert_eq!(t.irreps[0].chars[1].multiplicities, vec![1, 0]);
        assert_eq!(t.irreps[1].chars[1].multiplicities, vec![0, 1]);
    }

    #[test]
    fn pauli_table() {
        let m = catalog::pauli_multiplier();
        let rcd = m.regular_class_data().unwrap();
        let ctx = choose_prime(4, m.exponent());
        assert_eq!((ctx.e, ctx.p, ctx.z), (4, 5, 2));
        let mats = build_class_matrices_modp(&m, &rcd, &ctx).unwrap();
        assert_eq!(mats[0].to_rows(), vec![vec![1]]);
        assert_eq!(
            normalize_eigenvector(&[1], &m, &rcd, &ctx).unwrap(),
            (2, vec![2])
        );
        let t = character_table_exact(&m).unwrap();
        assert_eq!(t.degrees(), vec![2]);
        assert_eq!(t.irreps[0].chars[0].multiplicities, vec![2, 0, 0, 0]);
        assert_eq!(t.orthogonality_violations_modp(), 0);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"e":4,"p":5,"z":2,"regular_class_reps":[0],"irreps":[{"degree":2,"chars":[{"class":0,"multiplicities":[2,0,0,0]}]}]}"#
        );
    }

    #[test]
    fn s3_table() {
        let t = character_table_exact(&trivial(catalog::symmetric(3))).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert_eq!(t.orthogonality_violations_modp(), 0);
        assert_eq!(t.theta_consistency_violations(), 0);
        let vals = t.complex_values();
        let sizes = &t.class_sizes;
        let idx = |s: usize| sizes.iter().position(|&x| x == s).unwrap();
        let expected = [[1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [2.0, -1.0, 0.0]];
        for (row, exp) in vals.iter().zip(expected.iter()) {
            for (s, &v) in [1usize, 2, 3].iter().zip(exp) {
                assert!((row[idx(*s)] - Complex64::new(v, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn heisenberg3_single_irrep() {
        let m = catalog::heisenberg_multiplier(3);
        let t = character_table_exact(&m).unwrap();
        assert_eq!(t.degrees(), vec![3]);
        assert_eq!(t.orthogonality_violations_modp(), 0);
    }
}
