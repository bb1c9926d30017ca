//! Finite groups given by multiplication tables.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::modp::lcm;

/// Default cap on the order of groups enumerated from permutations.
pub const DEFAULT_MAX_ORDER: usize = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty multiplication table")]
    Empty,
    #[error("multiplication table is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("no two-sided identity element in the table")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    InvalidPermutation { index: usize, degree: usize },
    #[error("group closure exceeds the configured cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
}

/// A conjugacy class with its minimal-index representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    /// Members in increasing index order.
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A validated finite group on the elements `0..n` with identity `0`.
///
/// Immutable after construction; conjugacy classes, inverses and element
/// orders are precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    elem_order: Vec<usize>,
    exponent: usize,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table, relabelling so that the identity
    /// becomes element 0 (by swapping it with the old element 0).
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    n,
                });
            }
            if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::EntryOutOfRange { row, col, value, n });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;

        let relabel = |x: usize| -> usize {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut mul = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[relabel(x) * n + relabel(y)] = relabel(table[x][y]);
            }
        }

        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mul[x * n + y] == 0 && mul[y * n + x] == 0)
                .ok_or(GroupError::NoInverse {
                    element: relabel(x),
                })?;
            inv[x] = y;
        }

        check_associative(n, &mul).map_err(|(x, y, z)| GroupError::NotAssociative {
            x: relabel(x),
            y: relabel(y),
            z: relabel(z),
        })?;

        Ok(Self::from_valid_parts(n, mul, inv))
    }

    /// Enumerates the permutation group generated by `gens` (breadth-first,
    /// generators in order) with the default size cap.
    pub fn from_permutation_generators(gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutation_generators_capped(gens, DEFAULT_MAX_ORDER)
    }

    /// Like [`FiniteGroup::from_permutation_generators`] with an explicit cap.
    ///
    /// Permutations act on the left: `(x*y)[i] = x[y[i]]`. Element 0 is the
    /// identity permutation and new elements are numbered in discovery order.
    pub fn from_permutation_generators_capped(
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self, GroupError> {
        let elements = permutation_elements(gens, cap)?;
        let index: HashMap<&[usize], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_slice(), i))
            .collect();
        let n = elements.len();
        let mut mul = vec![0usize; n * n];
        let mut inv = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                let prod = compose(&elements[x], &elements[y]);
                let k = index[prod.as_slice()];
                mul[x * n + y] = k;
                if k == 0 {
                    inv[x] = y;
                }
            }
        }
        Ok(Self::from_valid_parts(n, mul, inv))
    }

    fn from_valid_parts(n: usize, mul: Vec<usize>, inv: Vec<usize>) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> =
                (0..n).map(|h| mul[mul[h * n + x] * n + inv[h]]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(ConjugacyClass {
                representative: x,
                elements: members,
            });
        }

        let elem_order: Vec<usize> = (0..n)
            .map(|x| {
                let mut k = 1;
                let mut acc = x;
                while acc != 0 {
                    acc = mul[acc * n + x];
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = elem_order.iter().fold(1u64, |acc, &o| lcm(acc, o as u64)) as usize;

        Self {
            n,
            mul,
            inv,
            classes,
            class_of,
            elem_order,
            exponent,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// `h x h⁻¹`
    #[inline]
    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(h, x), self.inv(h))
    }

    /// `g^k` for `k ≥ 0`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Conjugacy classes ordered by representative; the identity class is first.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.elem_order[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.elem_order
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&h| self.mul(h, g) == self.mul(g, h))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.n
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// A small generating set, chosen greedily by smallest index outside the
    /// subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[0] = true;
        while let Some(next) = (0..self.n).find(|&x| !span[x]) {
            gens.push(next);
            span = closure(self.n, &self.mul, &gens);
        }
        gens
    }
}

/// Elements reachable from the identity by right-multiplying with `gens`.
fn closure(n: usize, mul: &[usize], gens: &[usize]) -> Vec<bool> {
    let mut span = vec![false; n];
    span[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = mul[x * n + g];
            if !span[y] {
                span[y] = true;
                stack.push(y);
            }
        }
    }
    span
}

/// Light's associativity test: with identity and inverses present it is
/// enough to check `(x*s)*y == x*(s*y)` for `s` in a generating set.
fn check_associative(n: usize, mul: &[usize]) -> Result<(), (usize, usize, usize)> {
    let m = |a: usize, b: usize| mul[a * n + b];
    let mut gens = Vec::new();
    let mut span = vec![false; n];
    span[0] = true;
    while let Some(next) = (0..n).find(|&x| !span[x]) {
        gens.push(next);
        span = magma_closure(n, mul, &gens);
    }
    for &s in &gens {
        for x in 0..n {
            let xs = m(x, s);
            for y in 0..n {
                if m(xs, y) != m(x, m(s, y)) {
                    return Err((x, s, y));
                }
            }
        }
    }
    Ok(())
}

/// Closure of `gens` under the table product (no group axioms assumed).
fn magma_closure(n: usize, mul: &[usize], gens: &[usize]) -> Vec<bool> {
    let mut span = vec![false; n];
    span[0] = true;
    let mut members = vec![0usize];
    for &g in gens {
        if !span[g] {
            span[g] = true;
            members.push(g);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        let snapshot = members.len();
        for j in 0..snapshot {
            let y = members[j];
            for z in [mul[x * n + y], mul[y * n + x]] {
                if !span[z] {
                    span[z] = true;
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    span
}

fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&i| x[i]).collect()
}

/// The elements of the permutation group generated by `gens`, in the
/// numbering used by [`FiniteGroup::from_permutation_generators_capped`].
pub fn permutation_elements(
    gens: &[Vec<usize>],
    cap: usize,
) -> Result<Vec<Vec<usize>>, GroupError> {
    let degree = gens.first().map_or(0, Vec::len);
    for (index, g) in gens.iter().enumerate() {
        let mut seen = vec![false; degree];
        let ok = g.len() == degree
            && g.iter().all(|&i| {
                if i >= degree || seen[i] {
                    false
                } else {
                    seen[i] = true;
                    true
                }
            });
        if !ok {
            return Err(GroupError::InvalidPermutation { index, degree });
        }
    }

    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let next = compose(&elements[i], g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(GroupError::ClosureTooLarge { cap });
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}
