//! Constructors for small groups, multipliers and representations.
//!
//! Covers cyclic, dihedral, dicyclic and assorted semidirect products, enough
//! to enumerate every group of order at most 16 up to isomorphism.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;

use crate::cocycle::Multiplier;
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::rep::{CMatrix, ProjectiveRep};

fn from_table(table: Vec<Vec<usize>>) -> FiniteGroup {
    FiniteGroup::from_cayley_table(&table).expect("catalog construction yields a group")
}

/// Cyclic group `Z_n` with element `k` meaning the k-th power of a generator.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    from_table(
        (0..n)
            .map(|x| (0..n).map(|y| (x + y) % n).collect())
            .collect(),
    )
}

/// `G × H` with `(g, h)` stored at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (a, b) = (g.order(), h.order());
    from_table(
        (0..a * b)
            .map(|x| {
                (0..a * b)
                    .map(|y| g.mul(x / b, y / b) * b + h.mul(x % b, y % b))
                    .collect()
            })
            .collect(),
    )
}

/// `Z_m ⋊ Z_n` where the generator of `Z_n` acts as multiplication by `r`.
/// Element `(a, t)` is stored at `t·m + a`.
pub fn semidirect_cyclic(m: usize, r: usize, n: usize) -> FiniteGroup {
    let pow = |t: usize| (0..t).fold(1usize, |acc, _| acc * r % m);
    assert_eq!(pow(n) % m, 1 % m, "r^n must be 1 mod m");
    from_table(
        (0..m * n)
            .map(|x| {
                let (a1, t1) = (x % m, x / m);
                (0..m * n)
                    .map(|y| {
                        let (a2, t2) = (y % m, y / m);
                        ((t1 + t2) % n) * m + (a1 + pow(t1) * a2) % m
                    })
                    .collect()
            })
            .collect(),
    )
}

/// `(Z_{m1} × Z_{m2}) ⋊ Z_n` with the generator acting by the integer
/// matrix `phi` on column vectors `(x, y)`.
pub fn semidirect_abelian2(m1: usize, m2: usize, phi: [[usize; 2]; 2], n: usize) -> FiniteGroup {
    let k = m1 * m2;
    let act = |v: (usize, usize), t: usize| {
        (0..t).fold(v, |(x, y), _| {
            (
                (phi[0][0] * x + phi[0][1] * y) % m1,
                (phi[1][0] * x + phi[1][1] * y) % m2,
            )
        })
    };
    from_table(
        (0..k * n)
            .map(|a| {
                let (t1, v1) = (a / k, ((a % k) / m2, a % m2));
                (0..k * n)
                    .map(|b| {
                        let (t2, v2) = (b / k, ((b % k) / m2, b % m2));
                        let w = act(v2, t1);
                        let (x, y) = ((v1.0 + w.0) % m1, (v1.1 + w.1) % m2);
                        ((t1 + t2) % n) * k + x * m2 + y
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    semidirect_cyclic(n, n - 1, 2)
}

/// Dicyclic group of order `4k` (`k = 2` gives the quaternion group Q8).
///
/// Elements `a^j y^s` are stored at `s·2k + j`, with `y a y⁻¹ = a⁻¹` and
/// `y² = a^k`.
pub fn dicyclic(k: usize) -> FiniteGroup {
    let m = 2 * k;
    from_table(
        (0..2 * m)
            .map(|x| {
                let (j1, s1) = (x % m, x / m);
                (0..2 * m)
                    .map(|y| {
                        let (j2, s2) = (y % m, y / m);
                        if s1 == 0 {
                            s2 * m + (j1 + j2) % m
                        } else if s2 == 0 {
                            m + (j1 + m - j2) % m
                        } else {
                            (j1 + m - j2 + k) % m
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

fn symmetric_generators(k: usize) -> Vec<Vec<usize>> {
    let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let mut swap: Vec<usize> = (0..k).collect();
    swap.swap(0, 1);
    vec![cycle, swap]
}

/// Symmetric group on `k` points, generated by a k-cycle and a transposition.
pub fn symmetric(k: usize) -> FiniteGroup {
    if k < 2 {
        return cyclic(1);
    }
    FiniteGroup::from_permutation_generators(&symmetric_generators(k))
        .expect("S_k fits the default cap")
}

/// The permutation of each element of [`symmetric`]`(k)`, `k ≥ 2`.
pub fn symmetric_permutations(k: usize) -> Vec<Vec<usize>> {
    crate::group::permutation_elements(&symmetric_generators(k), DEFAULT_MAX_ORDER)
        .expect("S_k fits the default cap")
}

/// Sign of each element of [`symmetric`]`(k)` as a map to `Z_2`.
pub fn symmetric_sign(k: usize) -> Vec<u64> {
    symmetric_permutations(k)
        .iter()
        .map(|p| {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (inversions % 2) as u64
        })
        .collect()
}

/// Alternating group A4.
pub fn alternating4() -> FiniteGroup {
    FiniteGroup::from_permutation_generators(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
        .expect("A4 fits the default cap")
}

pub fn klein_four() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

pub fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

/// All 42 groups of order at most 16, up to isomorphism, with short names.
pub fn groups_up_to_16() -> Vec<(String, FiniteGroup)> {
    let z = cyclic;
    let dp = |a: &FiniteGroup, b: &FiniteGroup| direct_product(a, b);
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16] {
        out.push((format!("Z{n}"), z(n)));
    }
    out.extend([
        ("Z2xZ2".into(), klein_four()),
        ("S3".into(), dihedral(3)),
        ("Z4xZ2".into(), dp(&z(4), &z(2))),
        ("Z2^3".into(), dp(&klein_four(), &z(2))),
        ("D4".into(), dihedral(4)),
        ("Q8".into(), quaternion()),
        ("Z3xZ3".into(), dp(&z(3), &z(3))),
        ("D5".into(), dihedral(5)),
        ("Z6xZ2".into(), dp(&z(6), &z(2))),
        ("D6".into(), dihedral(6)),
        ("A4".into(), alternating4()),
        ("Dic3".into(), dicyclic(3)),
        ("D7".into(), dihedral(7)),
        ("Z4xZ4".into(), dp(&z(4), &z(4))),
        ("Z8xZ2".into(), dp(&z(8), &z(2))),
        ("Z4xZ2^2".into(), dp(&dp(&z(4), &z(2)), &z(2))),
        ("Z2^4".into(), dp(&klein_four(), &klein_four())),
        ("D8".into(), dihedral(8)),
        ("Q16".into(), dicyclic(4)),
        ("SD16".into(), semidirect_cyclic(8, 3, 2)),
        ("M16".into(), semidirect_cyclic(8, 5, 2)),
        ("Z4:Z4".into(), semidirect_cyclic(4, 3, 4)),
        (
            "(Z4xZ2):Z2".into(),
            semidirect_abelian2(4, 2, [[1, 0], [1, 1]], 2),
        ),
        ("D4xZ2".into(), dp(&dihedral(4), &z(2))),
        ("Q8xZ2".into(), dp(&quaternion(), &z(2))),
        (
            "Pauli".into(),
            semidirect_abelian2(4, 2, [[1, 2], [0, 1]], 2),
        ),
    ]);
    out
}

/// All homomorphisms `G → Z_k`, as value tables.
///
/// Enumerates images of a generating set and keeps those that extend to a
/// homomorphism.
pub fn homomorphisms_to_cyclic(g: &FiniteGroup, k: u64) -> Vec<Vec<u64>> {
    let gens = g.generators();
    let n = g.order();
    let total = (k as usize).pow(gens.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let images: Vec<u64> = gens
            .iter()
            .map(|_| {
                let v = (rest % k as usize) as u64;
                rest /= k as usize;
                v
            })
            .collect();
        let mut f = vec![u64::MAX; n];
        f[0] = 0;
        let mut stack = vec![0usize];
        let mut ok = true;
        while let Some(x) = stack.pop() {
            for (gi, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let v = (f[x] + images[gi]) % k;
                if f[y] == u64::MAX {
                    f[y] = v;
                    stack.push(y);
                } else if f[y] != v {
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        if (0..n).all(|x| (0..n).all(|y| f[g.mul(x, y)] == (f[x] + f[y]) % k)) {
            out.push(f);
        }
    }
    out
}

/// Bilinear multiplier `α(x, y) = ζ_k^{f1(x)·f2(y)}` pulled back along two
/// homomorphisms to `Z_k`.
pub fn bilinear_multiplier(g: Arc<FiniteGroup>, f1: &[u64], f2: &[u64], k: u64) -> Multiplier {
    let n = g.order();
    let table: Vec<Vec<i64>> = (0..n)
        .map(|x| (0..n).map(|y| ((f1[x] * f2[y]) % k) as i64).collect())
        .collect();
    Multiplier::new(g, k, &table).expect("bilinear forms of homomorphisms are cocycles")
}

/// Multiplier on `Z_n × Z_n` (element `(x, y)` at `x·n + y`) with
/// `α((x1,y1), (x2,y2)) = ζ_n^{x1·y2}`.
pub fn heisenberg_multiplier(n: usize) -> Multiplier {
    let g = Arc::new(direct_product(&cyclic(n), &cyclic(n)));
    let f1: Vec<u64> = (0..n * n).map(|e| (e / n) as u64).collect();
    let f2: Vec<u64> = (0..n * n).map(|e| (e % n) as u64).collect();
    bilinear_multiplier(g, &f1, &f2, n as u64)
}

/// The sign cocycle of the Pauli matrices on the Klein four-group, with
/// elements `0 = 1, 1 = a, 2 = b, 3 = ab` mapped to `I, X, Z, XZ`.
pub fn pauli_multiplier() -> Multiplier {
    heisenberg_multiplier(2)
}

/// Clock-and-shift representation `π(x, y) = X^y Z^x` of
/// [`heisenberg_multiplier`], irreducible of degree `n`.
pub fn heisenberg_rep(n: usize) -> ProjectiveRep {
    let mult = Arc::new(heisenberg_multiplier(n));
    let shift = CMatrix::from_fn(n, n, |i, j| {
        if i == (j + 1) % n {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let clock = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::from_polar(1.0, TAU * i as f64 / n as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let power = |m: &CMatrix, k: usize| (0..k).fold(CMatrix::identity(n, n), |acc, _| acc * m);
    let matrices = (0..n * n)
        .map(|e| power(&shift, e % n) * power(&clock, e / n))
        .collect();
    ProjectiveRep::new(mult, matrices).expect("clock and shift matrices satisfy the cocycle")
}

/// Pauli representation `I, X, Z, XZ` of [`pauli_multiplier`].
pub fn pauli_rep() -> ProjectiveRep {
    heisenberg_rep(2)
}

/// Linear representation of a permutation group restricted to the
/// orthogonal complement of the all-ones vector. `perms[g]` is the
/// permutation of element `g`, acting by `e_i ↦ e_{perm[i]}`.
pub fn permutation_complement_rep(mult: Arc<Multiplier>, perms: &[Vec<usize>]) -> ProjectiveRep {
    let k = perms[0].len();
    // Orthonormal basis of the sum-zero subspace (Helmert vectors).
    let basis = CMatrix::from_fn(k, k - 1, |i, j| {
        let j1 = j + 1;
        let norm = ((j1 * (j1 + 1)) as f64).sqrt();
        let v = if i < j1 {
            1.0
        } else if i == j1 {
            -(j1 as f64)
        } else {
            0.0
        };
        Complex64::new(v / norm, 0.0)
    });
    let matrices = perms
        .iter()
        .map(|perm| {
            let p = CMatrix::from_fn(k, k, |i, j| {
                if perm[j] == i {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            basis.adjoint() * p * &basis
        })
        .collect();
    ProjectiveRep::new(mult, matrices).expect("permutation action is a representation")
}

/// One-dimensional linear representation from a homomorphism `f: G → Z_k`.
pub fn one_dim_rep(mult: Arc<Multiplier>, f: &[u64], k: u64) -> ProjectiveRep {
    let matrices = f
        .iter()
        .map(|&v| {
            CMatrix::from_element(1, 1, Complex64::from_polar(1.0, TAU * v as f64 / k as f64))
        })
        .collect();
    ProjectiveRep::new(mult, matrices).expect("homomorphisms give linear characters")
}
