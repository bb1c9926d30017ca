//! Unitary Schur multipliers stored as exponents of a root of unity.
//!
//! A multiplier α on a group G is kept as a table `a[x][y]` of residues
//! modulo `N` with `α(x, y) = exp(2πi·a[x][y]/N)`. All cocycle, class factor
//! and regularity computations happen on these exponents, so they are exact.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::modp::{gcd, lcm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("root order must be positive")]
    ZeroRootOrder,
    #[error("exponent table must be {n}x{n}")]
    ShapeMismatch { n: usize },
    #[error("multiplier is not normalized: a[{x}][{y}] != 0")]
    NotNormalized { x: usize, y: usize },
    #[error("cocycle identity fails for (x, y, z) = ({x}, {y}, {z})")]
    CocycleViolation { x: usize, y: usize, z: usize },
    #[error("multipliers live on different groups")]
    GroupMismatch,
    #[error("mu must satisfy mu[identity] = 0 and have length |G|")]
    InvalidMu,
    #[error("class factor for {element} is inconsistent between conjugators {first} and {second}")]
    BetaInconsistent {
        element: usize,
        first: usize,
        second: usize,
    },
}

/// A unitary 2-cocycle `α(x, y) = ζ_N^{a[x][y]}`.
#[derive(Clone, Debug)]
pub struct Multiplier {
    group: Arc<FiniteGroup>,
    root_order: u64,
    exps: Vec<u64>,
}

impl PartialEq for Multiplier {
    /// Equal as functions `G × G → C`, regardless of the root order used.
    fn eq(&self, other: &Self) -> bool {
        if !self.same_group(other) {
            return false;
        }
        let (n1, n2) = (self.root_order as u128, other.root_order as u128);
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| (a as u128 * n2) % (n1 * n2) == (b as u128 * n1) % (n1 * n2))
    }
}

impl Multiplier {
    /// Validated multiplier; exponents are reduced modulo `root_order`.
    pub fn new(
        group: Arc<FiniteGroup>,
        root_order: u64,
        exponents: &[Vec<i64>],
    ) -> Result<Self, CocycleError> {
        let m = Self::new_unchecked(group, root_order, exponents)?;
        m.validate()?;
        Ok(m)
    }

    /// Builds the table without checking the cocycle identities; only the
    /// shape and root order are checked. Use [`Multiplier::validate`] later.
    pub fn new_unchecked(
        group: Arc<FiniteGroup>,
        root_order: u64,
        exponents: &[Vec<i64>],
    ) -> Result<Self, CocycleError> {
        if root_order == 0 {
            return Err(CocycleError::ZeroRootOrder);
        }
        let n = group.order();
        if exponents.len() != n || exponents.iter().any(|r| r.len() != n) {
            return Err(CocycleError::ShapeMismatch { n });
        }
        let exps = exponents
            .iter()
            .flatten()
            .map(|&a| a.rem_euclid(root_order as i64) as u64)
            .collect();
        Ok(Self {
            group,
            root_order,
            exps,
        })
    }

    /// The trivial multiplier `α ≡ 1`.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Self {
            group,
            root_order: 1,
            exps: vec![0; n * n],
        }
    }

    /// Coboundary `α(x, y) = μ(xy) / (μ(x) μ(y))` with `μ(g) = ζ_N^{mu[g]}`.
    pub fn coboundary_from_mu(
        group: Arc<FiniteGroup>,
        root_order: u64,
        mu: &[i64],
    ) -> Result<Self, CocycleError> {
        if root_order == 0 {
            return Err(CocycleError::ZeroRootOrder);
        }
        let n = group.order();
        let modn = root_order as i64;
        if mu.len() != n || mu[0].rem_euclid(modn) != 0 {
            return Err(CocycleError::InvalidMu);
        }
        let mut exps = vec![0u64; n * n];
        for x in 0..n {
            for y in 0..n {
                exps[x * n + y] = (mu[group.mul(x, y)] - mu[x] - mu[y]).rem_euclid(modn) as u64;
            }
        }
        Ok(Self {
            group,
            root_order,
            exps,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    /// Exponent `a[x][y]` modulo [`Multiplier::root_order`].
    #[inline]
    pub fn exp(&self, x: usize, y: usize) -> u64 {
        self.exps[x * self.group.order() + y]
    }

    pub fn exponent_table(&self) -> Vec<Vec<u64>> {
        self.exps
            .chunks(self.group.order())
            .map(<[u64]>::to_vec)
            .collect()
    }

    /// `α(x, y)` as a complex number.
    pub fn value(&self, x: usize, y: usize) -> Complex64 {
        self.root(self.exp(x, y) as i64)
    }

    /// `ζ_N^k` for the root order `N` of this multiplier.
    pub fn root(&self, k: i64) -> Complex64 {
        root_of_unity(k, self.root_order)
    }

    pub fn same_group(&self, other: &Multiplier) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    /// Checks normalization and the cocycle identity
    /// `a[x][y] + a[xy][z] ≡ a[x][yz] + a[y][z]`, reporting the first failure.
    pub fn validate(&self) -> Result<(), CocycleError> {
        let g = &*self.group;
        let n = g.order();
        for x in 0..n {
            if self.exp(x, 0) != 0 {
                return Err(CocycleError::NotNormalized { x, y: 0 });
            }
            if self.exp(0, x) != 0 {
                return Err(CocycleError::NotNormalized { x: 0, y: x });
            }
        }
        let modn = self.root_order;
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                let axy = self.exp(x, y);
                for z in 0..n {
                    let lhs = (axy + self.exp(xy, z)) % modn;
                    let rhs = (self.exp(x, g.mul(y, z)) + self.exp(y, z)) % modn;
                    if lhs != rhs {
                        return Err(CocycleError::CocycleViolation { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Pointwise product; root orders are merged to their lcm.
    pub fn product(&self, other: &Multiplier) -> Result<Multiplier, CocycleError> {
        if !self.same_group(other) {
            return Err(CocycleError::GroupMismatch);
        }
        let root_order = lcm(self.root_order, other.root_order);
        let (s1, s2) = (root_order / self.root_order, root_order / other.root_order);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| (a * s1 + b * s2) % root_order)
            .collect();
        Ok(Multiplier {
            group: self.group.clone(),
            root_order,
            exps,
        })
    }

    /// Pointwise inverse `α⁻¹`.
    pub fn inverse(&self) -> Multiplier {
        let modn = self.root_order;
        Multiplier {
            group: self.group.clone(),
            root_order: modn,
            exps: self.exps.iter().map(|&a| (modn - a) % modn).collect(),
        }
    }

    /// Same values expressed over the root order `new_order` (a multiple of
    /// the current order).
    pub fn with_root_order(&self, new_order: u64) -> Option<Multiplier> {
        if new_order == 0 || !new_order.is_multiple_of(self.root_order) {
            return None;
        }
        let s = new_order / self.root_order;
        Some(Multiplier {
            group: self.group.clone(),
            root_order: new_order,
            exps: self.exps.iter().map(|&a| a * s).collect(),
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    /// Smallest `M ≥ 1` with `α(x, y)^M = 1` everywhere.
    pub fn order(&self) -> u64 {
        let g = self
            .exps
            .iter()
            .fold(self.root_order, |acc, &a| gcd(acc, a));
        self.root_order / g
    }

    /// Exponent `A` (mod N) of `∏_{i=1}^{n-1} α(g^i, g)`, n the order of g.
    pub fn power_product_exp(&self, g: usize) -> u64 {
        let grp = &*self.group;
        let n = grp.element_order(g);
        let mut acc = 0u64;
        let mut gi = g;
        for _ in 1..n {
            acc = (acc + self.exp(gi, g)) % self.root_order;
            gi = grp.mul(gi, g);
        }
        acc
    }

    /// Order of `g` in α: `n·n*` with `n` the element order and `n*` the
    /// order of `∏ α(g^i, g)`.
    pub fn order_in_alpha(&self, g: usize) -> u64 {
        let n = self.group.element_order(g) as u64;
        let a = self.power_product_exp(g);
        let n_star = self.root_order / gcd(self.root_order, a);
        n * n_star
    }

    /// Exponent of α: lcm of [`Multiplier::order`] and all orders in α.
    pub fn exponent(&self) -> u64 {
        (0..self.group.order()).fold(self.order(), |acc, g| lcm(acc, self.order_in_alpha(g)))
    }

    /// Exponent of the class factor
    /// `β_h(g) = α(h, h⁻¹) / (α(h, g h⁻¹) α(g, h⁻¹))`.
    pub fn class_factor(&self, h: usize, g: usize) -> u64 {
        let grp = &*self.group;
        let hi = grp.inv(h);
        let modn = self.root_order;
        (self.exp(h, hi) + 2 * modn - self.exp(h, grp.mul(g, hi)) - self.exp(g, hi)) % modn
    }

    /// The second closed form `α(h, h⁻¹) / (α(h, g) α(hg, h⁻¹))`; equal to
    /// [`Multiplier::class_factor`] for any valid multiplier.
    pub fn class_factor_alt(&self, h: usize, g: usize) -> u64 {
        let grp = &*self.group;
        let hi = grp.inv(h);
        let modn = self.root_order;
        (self.exp(h, hi) + 2 * modn - self.exp(h, g) - self.exp(grp.mul(h, g), hi)) % modn
    }

    /// Number of triples `(h, k, x)` breaking the product rule
    /// `β_h(x) β_k(hxh⁻¹) = β_{kh}(x)`.
    pub fn class_factor_product_violations(&self) -> usize {
        let grp = &*self.group;
        let n = grp.order();
        let modn = self.root_order;
        let mut bad = 0;
        for x in 0..n {
            for h in 0..n {
                let bh = self.class_factor(h, x);
                let hx = grp.conjugate(h, x);
                for k in 0..n {
                    let lhs = (bh + self.class_factor(k, hx)) % modn;
                    if lhs != self.class_factor(grp.mul(k, h), x) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// `g` is α-regular iff every class factor over its centralizer vanishes.
    pub fn is_regular(&self, g: usize) -> bool {
        let grp = &*self.group;
        (0..grp.order())
            .filter(|&h| grp.mul(h, g) == grp.mul(g, h))
            .all(|h| self.class_factor(h, g) == 0)
    }

    /// α-regular classes, representatives and transport factors.
    pub fn regular_class_data(&self) -> Result<RegularClassData, CocycleError> {
        RegularClassData::new(self)
    }
}

/// `exp(2πi k / n)`, reducing `k` first so exact roots like -1 and i stay
/// as accurate as possible.
pub fn root_of_unity(k: i64, n: u64) -> Complex64 {
    let n = n as i64;
    let k = k.rem_euclid(n);
    match (4 * k).checked_rem(n) {
        Some(0) => match 4 * k / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        },
        _ => Complex64::from_polar(1.0, TAU * k as f64 / n as f64),
    }
}

/// One α-regular conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularClass {
    pub representative: usize,
    pub elements: Vec<usize>,
    /// Index into [`FiniteGroup::conjugacy_classes`].
    pub conjugacy_class: usize,
}

impl RegularClass {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// α-regular classes together with the transport exponents `β(c₀, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularClassData {
    classes: Vec<RegularClass>,
    membership: Vec<Option<usize>>,
    beta: Vec<u64>,
    root_order: u64,
}

impl RegularClassData {
    fn new(mult: &Multiplier) -> Result<Self, CocycleError> {
        let grp = &*mult.group;
        let n = grp.order();
        let mut classes = Vec::new();
        let mut membership = vec![None; n];
        let mut beta = vec![0u64; n];
        for (ci, class) in grp.conjugacy_classes().iter().enumerate() {
            let c0 = class.representative;
            if !mult.is_regular(c0) {
                continue;
            }
            let idx = classes.len();
            for &g in &class.elements {
                membership[g] = Some(idx);
                let mut witnesses = (0..n).filter(|&h| grp.conjugate(h, c0) == g);
                let first = witnesses.next().expect("class member has a conjugator");
                let b = mult.class_factor(first, c0);
                if let Some(second) = witnesses.next() {
                    if mult.class_factor(second, c0) != b {
                        return Err(CocycleError::BetaInconsistent {
                            element: g,
                            first,
                            second,
                        });
                    }
                }
                beta[g] = b;
            }
            classes.push(RegularClass {
                representative: c0,
                elements: class.elements.clone(),
                conjugacy_class: ci,
            });
        }
        Ok(Self {
            classes,
            membership,
            beta,
            root_order: mult.root_order,
        })
    }

    /// Number `m` of α-regular classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[RegularClass] {
        &self.classes
    }

    /// Index of the α-regular class containing `g`, if `g` is α-regular.
    pub fn class_index(&self, g: usize) -> Option<usize> {
        self.membership[g]
    }

    /// Exponent (mod N) of `β(c₀, g)` where `c₀` is the representative of
    /// the class of `g`. Zero for elements that are not α-regular.
    pub fn beta_to(&self, g: usize) -> u64 {
        self.beta[g]
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.representative).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(RegularClass::len).collect()
    }

    /// `β(g, g')` for conjugate α-regular `g, g'`, via the representative.
    pub fn beta_between(&self, g: usize, g2: usize) -> Option<u64> {
        let (c1, c2) = (self.membership[g]?, self.membership[g2]?);
        if c1 != c2 {
            return None;
        }
        Some((self.beta[g2] + self.root_order - self.beta[g]) % self.root_order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn klein() -> Arc<FiniteGroup> {
        Arc::new(catalog::klein_four())
    }

    #[test]
    fn trivial_is_valid() {
        let g = klein();
        let m = Multiplier::trivial(g.clone());
        assert!(m.validate().is_ok());
        assert_eq!(m.order(), 1);
        let rcd = m.regular_class_data().unwrap();
        assert_eq!(rcd.len(), 4);
        assert!((0..4).all(|x| rcd.beta_to(x) == 0));
    }

    #[test]
    fn pauli_cocycle() {
        let m = catalog::pauli_multiplier();
        assert!(m.validate().is_ok());
        assert_eq!(m.order(), 2);
        // elements: 0 = 1, 1 = a (X), 2 = b (Z), 3 = ab
        assert_eq!(m.order_in_alpha(0), 1);
        assert_eq!(m.order_in_alpha(1), 2);
        assert_eq!(m.order_in_alpha(2), 2);
        assert_eq!(m.order_in_alpha(3), 4);
        assert_eq!(m.exponent(), 4);
        assert_eq!(m.class_factor(2, 1), 1);
        let rcd = m.regular_class_data().unwrap();
        assert_eq!(rcd.len(), 1);
        assert_eq!(rcd.representatives(), vec![0]);
        assert!(!m.is_regular(1) && !m.is_regular(2) && !m.is_regular(3));
    }

    #[test]
    fn not_normalized() {
        let g = klein();
        let mut t = vec![vec![0i64; 4]; 4];
        t[0][1] = 1;
        assert_eq!(
            Multiplier::new(g, 2, &t).unwrap_err(),
            CocycleError::NotNormalized { x: 0, y: 1 }
        );
    }

    #[test]
    fn corrupted_entry_is_a_violation() {
        let m = catalog::pauli_multiplier();
        let mut t: Vec<Vec<i64>> = m
            .exponent_table()
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        t[1][2] += 1;
        assert!(matches!(
            Multiplier::new(m.group().clone(), 2, &t).unwrap_err(),
            CocycleError::CocycleViolation { .. }
        ));
    }

    #[test]
    fn coboundary_z2() {
        let g = Arc::new(catalog::cyclic(2));
        let m = Multiplier::coboundary_from_mu(g, 4, &[0, 1]).unwrap();
        assert_eq!(m.exp(1, 1), 2);
        assert!(m.validate().is_ok());
        assert_eq!(m.order(), 2);
        let zero = Multiplier::coboundary_from_mu(m.group().clone(), 4, &[0, 0]).unwrap();
        assert!(zero.is_trivial());
        assert!(Multiplier::coboundary_from_mu(m.group().clone(), 4, &[1, 0]).is_err());
    }

    #[test]
    fn product_and_inverse() {
        let p = catalog::pauli_multiplier();
        let t = Multiplier::trivial(p.group().clone());
        assert!(p.product(&p.inverse()).unwrap().is_trivial());
        assert_eq!(t.product(&p).unwrap(), p);
        assert!(p.product(&p).unwrap().is_trivial());
        assert_eq!(p.inverse(), p);
        let other = Multiplier::trivial(Arc::new(catalog::cyclic(4)));
        assert_eq!(p.product(&other).unwrap_err(), CocycleError::GroupMismatch);
    }

    #[test]
    fn exponents_of_trivial() {
        let z3 = Multiplier::trivial(Arc::new(catalog::cyclic(3)));
        assert_eq!(z3.exponent(), 3);
        let s3 = Multiplier::trivial(Arc::new(catalog::symmetric(3)));
        assert_eq!(s3.exponent(), 6);
        assert!((0..6).all(|g| s3.order_in_alpha(g) == s3.group().element_order(g) as u64));
    }

    #[test]
    fn beta_identity_is_zero() {
        let p = catalog::pauli_multiplier();
        for h in 0..4 {
            assert_eq!(p.class_factor(h, 0), 0);
        }
    }

    #[test]
    fn roots_are_exact_at_quarters() {
        assert_eq!(root_of_unity(1, 2), Complex64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(-1, 4), Complex64::new(0.0, -1.0));
        assert!((root_of_unity(1, 3) - Complex64::from_polar(1.0, TAU / 3.0)).norm() < 1e-15);
    }
}
