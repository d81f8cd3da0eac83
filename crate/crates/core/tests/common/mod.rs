//! Independent oracles shared by the property and acceptance suites.

use std::collections::BTreeMap;

use legcob::linalg::{ChainComplex, Z2Matrix};

/// Determinant over GF(2) of the square submatrix on `rows` x `cols`, by
/// expansion along rows with memoization on the set of used columns.
fn minor_det(m: &Z2Matrix, rows: &[usize], cols: &[usize]) -> bool {
    let k = rows.len();
    let mut ways = vec![false; 1 << k];
    ways[0] = true;
    for mask in 0..(1usize << k) {
        if !ways[mask] {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == k {
            continue;
        }
        for (j, &c) in cols.iter().enumerate() {
            if mask & (1 << j) == 0 && m.get(rows[i], c) {
                ways[mask | (1 << j)] ^= true;
            }
        }
    }
    ways[(1 << k) - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..(1usize << n)).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|&i| s & (1 << i) != 0).collect()).collect()
}

/// Largest size of a nonvanishing minor.
pub fn minor_rank(m: &Z2Matrix) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        let cols = subsets(m.cols(), k);
        if subsets(m.rows(), k).iter().any(|r| cols.iter().any(|c| minor_det(m, r, c))) {
            return k;
        }
    }
    0
}

/// Dimension sequences of exact sequences, by trying every rank assignment.
pub fn exhaustive_feasible(v: &[usize]) -> bool {
    fn go(v: &[usize], i: usize, incoming: usize) -> bool {
        if i == v.len() {
            return incoming == 0;
        }
        (0..=v[i]).any(|r| incoming + r == v[i] && go(v, i + 1, r))
    }
    go(v, 0, 0)
}

/// A complex with known homology: a direct sum of one-term pieces `k ↦ 1`
/// and two-term pieces `k → k-1` (isomorphisms), in scrambled bases.
pub fn scrambled_complex(singles: &[(i32, usize)], pairs: &[(i32, usize)], ops: &[(usize, usize, usize)]) -> ChainComplex {
    let mut dims = BTreeMap::<i32, usize>::new();
    for &(k, n) in singles {
        *dims.entry(k).or_default() += n;
    }
    for &(k, n) in pairs {
        *dims.entry(k).or_default() += n;
        *dims.entry(k - 1).or_default() += n;
    }
    // boundary matrices before the change of basis
    let mut used = BTreeMap::<i32, usize>::new();
    let mut bd = BTreeMap::<i32, Z2Matrix>::new();
    for (&k, &d) in &dims {
        bd.insert(k, Z2Matrix::zeros(dims.get(&(k - 1)).copied().unwrap_or(0), d));
    }
    for &(k, n) in pairs {
        for _ in 0..n {
            let col = *used.get(&k).unwrap_or(&0);
            let row = *used.get(&(k - 1)).unwrap_or(&0);
            bd.get_mut(&k).unwrap().set(row, col, true);
            *used.entry(k).or_default() += 1;
            *used.entry(k - 1).or_default() += 1;
        }
    }
    // random invertible P_k with inverse, from elementary row additions
    let mut p = BTreeMap::<i32, (Z2Matrix, Z2Matrix)>::new();
    for (&k, &d) in &dims {
        p.insert(k, (Z2Matrix::identity(d), Z2Matrix::identity(d)));
    }
    for &(deg, a, b) in ops {
        let keys: Vec<i32> = dims.keys().copied().collect();
        if keys.is_empty() {
            break;
        }
        let k = keys[deg % keys.len()];
        let d = dims[&k];
        if d < 2 {
            continue;
        }
        let (i, j) = (a % d, b % d);
        if i == j {
            continue;
        }
        let mut e = Z2Matrix::identity(d);
        e.set(j, i, true);
        let (pk, pinv) = p.get_mut(&k).unwrap();
        *pk = e.mul(pk);
        *pinv = pinv.mul(&e);
    }
    let mut c = ChainComplex::new();
    for (&k, &d) in &dims {
        c.set_dim(k, d);
    }
    for (&k, m) in &bd {
        if dims.contains_key(&(k - 1)) {
            let conj = p[&(k - 1)].0.mul(m).mul(&p[&k].1);
            c.set_boundary(k, conj).unwrap();
        }
    }
    c
}
