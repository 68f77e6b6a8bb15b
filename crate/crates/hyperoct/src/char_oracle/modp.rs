//! Arithmetic and small linear algebra over a prime field `F_p`, supporting
//! the modular character-table computation. Deterministic throughout: prime
//! search is an ascending scan, root-finding an ascending trial.

use crate::{Error, Result};

pub fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powm(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

/// Deterministic Miller–Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod modulus)` with `p > lower`, scanning
/// ascending. Errors past `search_bound`.
pub fn find_prime(modulus: u64, lower: u64, search_bound: u64) -> Result<u64> {
    let mut k = (lower / modulus).max(1);
    loop {
        let p = modulus * k + 1;
        if p > search_bound {
            return Err(Error::Budget {
                what: format!("prime search (p = 1 mod {modulus}, p > {lower})"),
                bound: search_bound,
            });
        }
        if p > lower && is_prime(p) {
            return Ok(p);
        }
        k += 1;
    }
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2.. {
        for &f in &factors {
            if powm(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!()
}

/// A primitive `m`-th root of unity mod `p`; requires `m | p - 1`.
pub fn root_of_unity(p: u64, m: u64) -> Result<u64> {
    if (p - 1) % m != 0 {
        return Err(Error::Consistency(format!("no {m}-th roots of unity mod {p}")));
    }
    Ok(powm(primitive_root(p), (p - 1) / m, p))
}

/// Dense square matrix over `F_p`, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct MatFp {
    pub dim: usize,
    pub data: Vec<u64>,
    pub p: u64,
}

impl MatFp {
    pub fn zero(dim: usize, p: u64) -> MatFp {
        MatFp { dim, data: vec![0; dim * dim], p }
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn matvec(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        (0..self.dim)
            .map(|i| {
                let mut acc = 0u128;
                for j in 0..self.dim {
                    acc += self.at(i, j) as u128 * v[j] as u128;
                }
                (acc % p as u128) as u64
            })
            .collect()
    }

    pub fn matmul(&self, other: &MatFp) -> MatFp {
        let p = self.p;
        let mut out = MatFp::zero(self.dim, p);
        for i in 0..self.dim {
            for l in 0..self.dim {
                let a = self.at(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..self.dim {
                    let v = addm(out.at(i, j), mulm(a, other.at(l, j), p), p);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> u64 {
        let mut t = 0;
        for i in 0..self.dim {
            t = addm(t, self.at(i, i), self.p);
        }
        t
    }

    /// Characteristic polynomial by the Faddeev–LeVerrier recurrence;
    /// coefficients from constant term up, monic. Needs `p > dim`.
    pub fn char_poly(&self) -> Vec<u64> {
        let k = self.dim;
        let p = self.p;
        let mut coeffs = vec![0u64; k + 1];
        coeffs[k] = 1;
        let mut m = MatFp::zero(k, p);
        for i in 0..k {
            m.set(i, i, 1);
        }
        for step in 1..=k {
            m = self.matmul(&m);
            let c = mulm(m.trace(), invm(step as u64 % p, p), p);
            let c = subm(0, c, p); // c_{k-step} = -tr(A M)/step
            coeffs[k - step] = c;
            for i in 0..k {
                let v = addm(m.at(i, i), c, p);
                m.set(i, i, v);
            }
        }
        coeffs
    }
}

/// All roots in `F_p` of the polynomial (coefficients constant-first), in
/// ascending order, without multiplicity.
pub fn poly_roots(coeffs: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for t in 0..p {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = addm(mulm(acc, t, p), c, p);
        }
        if acc == 0 {
            out.push(t);
        }
    }
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = invm(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mulm(*v, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let sub = mulm(f, rows[r][j], p);
                    rows[i][j] = subm(rows[i][j], sub, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the nullspace of the matrix (given as rows), in RREF, in a
/// deterministic order.
pub fn nullspace(matrix: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<u64>> = matrix.to_vec();
    let pivots = rref(&mut rows, p);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = subm(0, rows[ri][free], p);
        }
        basis.push(v);
    }
    basis
}

/// Expresses `v` in terms of an RREF basis; `None` if `v` is outside the
/// span.
pub fn coords_in_basis(v: &[u64], basis: &[Vec<u64>], pivots: &[usize], p: u64) -> Option<Vec<u64>> {
    let mut rem = v.to_vec();
    let mut coords = vec![0u64; basis.len()];
    for (i, (row, &pc)) in basis.iter().zip(pivots).enumerate() {
        let c = rem[pc];
        if c != 0 {
            coords[i] = c;
            for j in 0..rem.len() {
                rem[j] = subm(rem[j], mulm(c, row[j], p), p);
            }
        }
    }
    if rem.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(769));
        assert!(is_prime(7681));
        assert!(!is_prime(92281));
        assert!(is_prime(92401));
        assert_eq!(find_prime(4, 16, 1 << 30).unwrap(), 17);
        assert_eq!(find_prime(24, 768, 1 << 30).unwrap(), 769);
        let z = root_of_unity(17, 4).unwrap();
        assert_eq!(powm(z, 4, 17), 1);
        assert_ne!(powm(z, 2, 17), 1);
    }

    #[test]
    fn prime_search_bound_is_enforced() {
        assert!(matches!(
            find_prime(1 << 20, 1 << 40, 1 << 30),
            Err(crate::Error::Budget { .. })
        ));
    }

    #[test]
    fn char_poly_small() {
        // [[2,1],[1,2]] over F_17: char poly x^2 - 4x + 3, roots 1 and 3.
        let p = 17;
        let mut m = MatFp::zero(2, p);
        m.set(0, 0, 2);
        m.set(0, 1, 1);
        m.set(1, 0, 1);
        m.set(1, 1, 2);
        let poly = m.char_poly();
        assert_eq!(poly, vec![3, subm(0, 4, p), 1]);
        assert_eq!(poly_roots(&poly, p), vec![1, 3]);
    }

    #[test]
    fn nullspace_dimension() {
        let p = 13;
        // rank-1 matrix: x + 2y + 3z = 0 has a 2-dim nullspace.
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, p);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = (v[0] + 2 * v[1] + 3 * v[2]) % p;
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn basis_coordinates() {
        let p = 13;
        let mut basis = vec![vec![1, 0, 5], vec![0, 1, 7]];
        let pivots = rref(&mut basis, p);
        let v = vec![3, 2, mulm(3, 5, p) + mulm(2, 7, p)];
        let v = vec![v[0], v[1], v[2] % p];
        let coords = coords_in_basis(&v, &basis, &pivots, p).unwrap();
        assert_eq!(coords, vec![3, 2]);
        assert!(coords_in_basis(&[0, 0, 1], &basis, &pivots, p).is_none());
    }
}
