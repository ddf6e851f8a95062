//! Arithmetic and small dense linear algebra over a prime field `F_p`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < 1 << 32);
        Self { p }
    }

    pub fn reduce(self, x: u64) -> u64 {
        x % self.p
    }

    /// Representative in `(−p/2, p/2]`.
    pub fn symmetric(self, x: u64) -> i64 {
        if x > self.p / 2 {
            x as i64 - self.p as i64
        } else {
            x as i64
        }
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// A primitive `n`-th root of unity; `n` must divide `p − 1`.
    pub fn root_of_unity(self, n: u64) -> u64 {
        debug_assert_eq!((self.p - 1) % n, 0);
        let factors = prime_factors(self.p - 1);
        let generator = (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .expect("F_p* is cyclic");
        self.pow(generator, (self.p - 1) / n)
    }

    /// Characteristic polynomial `det(x·I − a)`, coefficients from the
    /// constant term upward (monic, length `n + 1`). Reduces to upper
    /// Hessenberg form first.
    pub fn char_poly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let pivot_inv = self.inv(h[m][m - 1]);
            for j in m + 1..n {
                let u = self.mul(h[j][m - 1], pivot_inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let t = self.mul(u, h[m][c]);
                    h[j][c] = self.sub(h[j][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[j]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // polys[m] = char poly of the leading m×m block.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            let prev = &polys[m];
            let mut next = vec![0u64; m + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[m][m], c));
            }
            let mut t = 1u64;
            for i in 1..=m {
                t = self.mul(t, h[m - i + 1][m - i]);
                let coeff = self.mul(t, h[m - i][m]);
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coeff, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Basis of the null space of `a` (rows × cols), as column vectors.
    pub fn null_space(self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(p, r);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for k in 0..cols {
                        let t = self.mul(f, m[r][k]);
                        m[i][k] = self.sub(m[i][k], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = self.sub(0, m[row][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form of a set of row vectors, returning the
    /// nonzero rows and their pivot columns.
    pub fn echelon(self, rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut m = rows;
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(p, r);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for k in 0..cols {
                        let t = self.mul(f, m[r][k]);
                        m[i][k] = self.sub(m[i][k], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (m, pivots)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2√order`.
pub(crate) fn choose_prime(exponent: u64, order: u64) -> u64 {
    let mut p = exponent + 1;
    while !(is_prime(p) && p * p > 4 * order) {
        p += exponent;
    }
    p
}
