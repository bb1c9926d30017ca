//! Arithmetic and dense linear algebra over the prime field Z_p.
//!
//! Everything here works on `u64` residues in `0..p`. Primes are small
//! (a few thousand at most for desk-scale groups), so products never
//! overflow `u64` and no Montgomery tricks are needed.

/// `base^exp mod modulus` by repeated squaring.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, modulus);
        }
        base = mulmod(base, base, modulus);
        exp >>= 1;
    }
    result
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Modular inverse of `a` modulo the prime `p`, or `None` when `a ≡ 0`.
pub fn mod_inv(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    Some(mod_pow(a, p - 2, p))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n` in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo the prime `p`.
pub fn multiplicative_order(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let mut order = p - 1;
    for q in prime_factors(p - 1) {
        while order.is_multiple_of(q) && mod_pow(a, order / q, p) == 1 {
            order /= q;
        }
    }
    Some(order)
}

/// Smallest primitive root of the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&w| factors.iter().all(|&q| mod_pow(w, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Dense row-major matrix over Z_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl ZpMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        Self {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|x| x % p));
        }
        Self {
            rows: r,
            cols: c,
            p,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    #[inline]
    pub fn add_assign_at(&mut self, r: usize, c: usize, v: u64) {
        let x = &mut self.data[r * self.cols + c];
        *x = (*x + v % self.p) % self.p;
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[u64]>::to_vec)
            .take(self.rows)
            .collect()
    }

    pub fn mul(&self, other: &ZpMatrix) -> ZpMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.p;
        let mut out = ZpMatrix::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0u64, |acc, j| (acc + self.get(i, j) * v[j]) % self.p))
            .collect()
    }

    pub fn transpose(&self) -> ZpMatrix {
        let mut out = ZpMatrix::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(sel) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if sel != row {
                for j in 0..self.cols {
                    self.data.swap(sel * self.cols + j, row * self.cols + j);
                }
            }
            let inv = mod_inv(self.get(row, col), p).expect("nonzero pivot");
            for j in 0..self.cols {
                let idx = row * self.cols + j;
                self.data[idx] = self.data[idx] * inv % p;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let sub = factor * self.get(row, j) % p;
                    let idx = r * self.cols + j;
                    self.data[idx] = (self.data[idx] + p - sub) % p;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1 % p;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - m.get(r, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from the
    /// constant term upwards (monic, length n+1).
    ///
    /// Reduces to upper Hessenberg form by similarity transforms and then
    /// runs the usual recurrence on leading principal minors.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let n = self.rows;
        let p = self.p;
        let mut h = self.clone();
        for col in 0..n.saturating_sub(2) {
            let Some(piv) = (col + 1..n).find(|&r| h.get(r, col) != 0) else {
                continue;
            };
            if piv != col + 1 {
                let t = col + 1;
                for j in 0..n {
                    h.data.swap(piv * n + j, t * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + piv, i * n + t);
                }
            }
            let inv = mod_inv(h.get(col + 1, col), p).expect("nonzero pivot");
            for r in col + 2..n {
                let f = h.get(r, col) * inv % p;
                if f == 0 {
                    continue;
                }
                // row_r -= f * row_{col+1}
                for j in 0..n {
                    let sub = f * h.get(col + 1, j) % p;
                    let idx = r * n + j;
                    h.data[idx] = (h.data[idx] + p - sub) % p;
                }
                // col_{col+1} += f * col_r
                for i in 0..n {
                    let add = f * h.get(i, r) % p;
                    let idx = i * n + col + 1;
                    h.data[idx] = (h.data[idx] + add) % p;
                }
            }
        }

        // polys[k] = charpoly of the leading k×k block.
        let mut polys: Vec<Vec<u64>> = vec![vec![1 % p]];
        for k in 1..=n {
            let m = k - 1;
            // (x - h[m][m]) * polys[m]
            let prev = &polys[m];
            let mut next = vec![0u64; k + 1];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % p;
                next[i] = (next[i] + p - c * h.get(m, m) % p) % p;
            }
            let mut prod = 1u64;
            for i in (0..m).rev() {
                prod = prod * h.get(i + 1, i) % p;
                if prod == 0 {
                    break;
                }
                let coef = prod * h.get(i, m) % p;
                for (j, &c) in polys[i].iter().enumerate() {
                    next[j] = (next[j] + p - coef * c % p) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().expect("nonempty")
    }
}

/// Evaluate a polynomial (constant term first) at `x` modulo `p`.
pub fn poly_eval(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
}

/// All roots of a polynomial in Z_p, by exhaustive scan.
pub fn poly_roots(coeffs: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| poly_eval(coeffs, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_pow() {
        assert_eq!(mod_pow(2, 10, 1000), 24);
        assert_eq!(mod_inv(3, 7), Some(5));
        assert_eq!(mod_inv(0, 7), None);
        assert_eq!(mod_pow(5, 0, 1), 0);
    }

    #[test]
    fn primality_and_roots() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(6, 7), Some(2));
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }

    #[test]
    fn nullspace_of_singular_matrix() {
        let m = ZpMatrix::from_rows(&[vec![1, 2], vec![2, 4]], 7);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(m.mul_vec(&ns[0]), vec![0, 0]);
    }

    /// Brute-force determinant via permutation expansion.
    fn det_brute(rows: &[Vec<u64>], p: u64) -> u64 {
        let n = rows.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0u64;
        fn heap(k: usize, perm: &mut Vec<usize>, rows: &[Vec<u64>], p: u64, total: &mut u64) {
            if k == 1 {
                let n = perm.len();
                let mut inv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let prod = (0..n).fold(1u64, |acc, i| acc * rows[i][perm[i]] % p);
                *total = if inv % 2 == 0 {
                    (*total + prod) % p
                } else {
                    (*total + p - prod) % p
                };
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, rows, p, total);
                if k.is_multiple_of(2) {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        if n == 0 {
            return 1;
        }
        heap(n, &mut perm, rows, p, &mut total);
        total
    }

    #[test]
    fn charpoly_matches_determinant_oracle() {
        let p = 13;
        let a = vec![
            vec![1, 5, 0, 7],
            vec![0, 0, 3, 2],
            vec![4, 0, 0, 9],
            vec![11, 1, 2, 6],
        ];
        let cp = ZpMatrix::from_rows(&a, p).charpoly();
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for x in 0..p {
            let shifted: Vec<Vec<u64>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let diag = if i == j { x } else { 0 };
                            (diag + p - a[i][j]) % p
                        })
                        .collect()
                })
                .collect();
            assert_eq!(poly_eval(&cp, x, p), det_brute(&shifted, p), "x = {x}");
        }
    }

    #[test]
    fn charpoly_of_zero_subdiagonal() {
        let a = ZpMatrix::from_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 3]], 5);
        let roots = poly_roots(&a.charpoly(), 5);
        assert_eq!(roots, vec![2, 3]);
    }
}
