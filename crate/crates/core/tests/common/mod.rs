//! Brute-force oracles shared by the integration tests. None of these call
//! the library routine they are compared against.

#![allow(dead_code)]

use doubled_hecke::scalar::{Fp, PrimeField, DEFAULT_PRIME};
use doubled_hecke::tensor::SparseOperator;

/// Weakly decreasing sequences of positive parts summing to `l`, at most
/// `rows` parts.
pub fn partitions(l: usize, rows: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(l, l, rows, &mut Vec::new(), &mut out);
    out
}

/// Standard tableaux counted by removing the largest entry from a corner.
pub fn syt(shape: &[usize]) -> u128 {
    if shape.iter().all(|&p| p == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let next = shape.get(i + 1).copied().unwrap_or(0);
        if shape[i] > next {
            let mut smaller = shape.to_vec();
            smaller[i] -= 1;
            total += syt(&smaller);
        }
    }
    total
}

/// Semistandard tableaux with entries in `1..=n`, by filling cell by cell.
pub fn ssyt(shape: &[usize], n: usize) -> u128 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u128 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut count = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[i][j] = v;
            count += fill(k + 1, cells, grid, n);
        }
        grid[i][j] = 0;
        count
    }
    fill(0, &cells, &mut grid, n)
}

/// Binomial coefficient from Pascal's triangle.
pub fn choose(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// `Σ_{λ ⊢ r, ≤ n rows} ssyt(λ, n)²`.
pub fn q_schur_dim(n: usize, r: usize) -> u128 {
    partitions(r, n).iter().map(|l| ssyt(l, n).pow(2)).sum()
}

/// `Σ_{λ ⊢ r, ≤ n rows} syt(λ)²`.
pub fn hecke_image_dim(n: usize, r: usize) -> u128 {
    partitions(r, n).iter().map(|l| syt(l).pow(2)).sum()
}

/// `Σ_l Σ_λ ssyt(λ, n)²` over the strata of the enhanced space.
pub fn levi_dim(n: usize, r: usize) -> u128 {
    (0..=r).map(|l| q_schur_dim(n, l)).sum()
}

/// `Σ_l Σ_λ (C(r,l)·syt(λ))²`.
pub fn dha_dim(n: usize, r: usize) -> u128 {
    (0..=r)
        .flat_map(|l| partitions(l, n).into_iter().map(move |lam| (l, lam)))
        .map(|(l, lam)| (choose(r, l) * syt(&lam)).pow(2))
        .sum()
}

pub fn prime_field(q0: u64) -> PrimeField {
    PrimeField::new(DEFAULT_PRIME, q0).expect("valid prime field")
}

pub type Dense = Vec<Vec<u64>>;

pub fn dense(op: &SparseOperator<Fp>) -> Dense {
    let d = op.dim();
    let mut m = vec![vec![0u64; d]; d];
    for (j, col) in op.columns().iter().enumerate() {
        for (i, c) in col.iter() {
            m[i][j] = c.value();
        }
    }
    m
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub fn dense_mul(a: &Dense, b: &Dense, p: u64) -> Dense {
    let d = a.len();
    let mut out = vec![vec![0u64; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..d {
                out[i][j] = (out[i][j] + mulmod(a[i][k], b[k][j], p)) % p;
            }
        }
    }
    out
}

/// Rank of a list of row vectors modulo `p` by dense Gaussian elimination.
pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = powmod(m[r][c], p - 2, p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
        r += 1;
    }
    r
}

fn flatten(m: &Dense) -> Vec<u64> {
    m.iter().flatten().copied().collect()
}

/// Dimension of the unital algebra generated by `gens`: span of all words,
/// grown by length until the dimension stops increasing.
pub fn closure_dim(gens: &[Dense], p: u64) -> usize {
    let d = gens[0].len();
    let id: Dense = (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect();
    let mut words = vec![id];
    let mut layer = words.clone();
    let mut dim = rank(&words.iter().map(flatten).collect::<Vec<_>>(), p);
    loop {
        let next: Vec<Dense> = layer
            .iter()
            .flat_map(|w| gens.iter().map(move |g| dense_mul(w, g, p)))
            .collect();
        let mut all = words.clone();
        all.extend(next.iter().cloned());
        let new_dim = rank(&all.iter().map(flatten).collect::<Vec<_>>(), p);
        if new_dim == dim {
            return dim;
        }
        dim = new_dim;
        words = all;
        layer = next;
    }
}

/// `d² − rank` of the linear conditions `XG = GX`, written out entrywise.
pub fn commutant_dim(gens: &[Dense], p: u64) -> usize {
    let d = gens[0].len();
    let mut rows = Vec::new();
    for g in gens {
        for a in 0..d {
            for c in 0..d {
                // Σ_b X[a][b] G[b][c] − Σ_b G[a][b] X[b][c]
                let mut row = vec![0u64; d * d];
                for b in 0..d {
                    row[a * d + b] = (row[a * d + b] + g[b][c]) % p;
                    row[b * d + c] = (row[b * d + c] + p - g[a][b]) % p;
                }
                rows.push(row);
            }
        }
    }
    d * d - rank(&rows, p)
}
